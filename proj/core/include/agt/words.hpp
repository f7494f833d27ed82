#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace agt {

// Library-wide error type for malformed input and violated preconditions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GenKind { Twist, Swap, Stable, Abstract };

std::string kind_name(GenKind k);

// A named generator. Surface builders use structured names: a series tag
// plus an optional vertex index (which block of a glued presentation the
// generator lives in) and an optional position index within its series.
// Rendered form is "series[.vertex][.position]", e.g. "y.3.5", "b.0.2",
// "x0.1", "z.1". The series fixes how a single trailing number is read:
// x0/x1/z take a vertex, everything else takes a position. Stable letters
// (series "e") are the extra generators introduced for graph-of-groups
// fundamental groups; abstract generators cover everything else.
struct Generator {
  GenKind kind = GenKind::Abstract;
  std::string series;
  std::optional<int> vertex;
  std::optional<int> position;

  static Generator twist(const std::string& series,
                         std::optional<int> vertex = std::nullopt,
                         std::optional<int> position = std::nullopt);
  static Generator swap_gen(std::optional<int> vertex, int position);
  static Generator stable(int index);
  static Generator abstract(const std::string& series,
                            std::optional<int> vertex = std::nullopt,
                            std::optional<int> position = std::nullopt);

  std::string render() const;
  static Generator parse(const std::string& text);

  bool operator==(const Generator&) const = default;
};

// Render-string order with the kind as tie break; used wherever generator
// lists are put into canonical order.
bool render_less(const Generator& a, const Generator& b);

// Cheap strict order for associative containers (field-wise, no string
// building).
struct GenOrder {
  bool operator()(const Generator& a, const Generator& b) const;
};

struct Letter {
  Generator gen;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Words are plain letter sequences, treated as immutable values: every
// operation returns a fresh word. Run-length compression happens only in
// the wire format, never in memory.
using Word = std::vector<Letter>;

using Substitution = std::map<Generator, Word, GenOrder>;

Letter lit(const Generator& g, int sign = 1);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);  // k < 0 gives the inverted power

// Free reduction: cancel adjacent g g^-1 pairs until none remain.
Word reduce(const Word& w);
bool is_reduced(const Word& w);

// Apply a homomorphism given images of generators. Strict: every generator
// occurring in w must have an image, otherwise an Error lists the missing
// symbols. Inverse letters map to the inverted image; the result is freely
// reduced.
Word substitute(const Word& w, const Substitution& images);

// Signed letter counts of w over the given alphabet, in alphabet order.
// Letters outside the alphabet raise an Error naming them.
std::vector<long long> exponent_sums(const Word& w,
                                     const std::vector<Generator>& alphabet);

// Distinct generators of w in order of first occurrence.
std::vector<Generator> word_support(const Word& w);

// Human-readable form with exponent folding, e.g. "x0.1 y.2^2 b.1^-1".
// The empty word renders as "1".
std::string render_word(const Word& w);

}  // namespace agt
