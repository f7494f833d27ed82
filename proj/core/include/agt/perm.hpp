#pragma once

#include <string>
#include <vector>

#include "agt/words.hpp"

namespace agt {

// Permutation of {0, ..., degree-1}; img[i] is the image of point i.
struct Permutation {
  std::vector<int> img;

  static Permutation identity(int degree);
  // Adjacent transposition (j-1, j) in 1-based position terms: swaps points
  // j-1 and j of {0..degree-1}.
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  std::string cycles() const;  // "(0 1)(2 3)" style, "()" for identity

  bool operator==(const Permutation&) const = default;
};

Permutation compose(const Permutation& first, const Permutation& then);
Permutation perm_inverse(const Permutation& p);
Permutation perm_power(const Permutation& p, int k);

// Evaluate a word left to right under an assignment of generators to
// permutations; throws if a letter has no assigned image.
using PermAssignment = std::map<Generator, Permutation, GenOrder>;
Permutation evaluate_word(const Word& w, const PermAssignment& assignment,
                          int degree);

}  // namespace agt
