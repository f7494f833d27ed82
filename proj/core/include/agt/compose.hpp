#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agt/presentation.hpp"

namespace agt {

// ---------------------------------------------------------------------------
// Extension assembly.
//
// Given a presentation of a normal subgroup K and of a quotient H, a lift of
// every H-relator to a word over X_K, and a conjugation table sending each
// pair (H-generator h, K-generator k) to the word h k h^-1 equals in K, build
// the standard presentation of the extension: generators X_K then X_H,
// relations R_K, then one relation per H-relator (its relator word equals the
// lifted word), then one conjugation relation per table entry.
// ---------------------------------------------------------------------------

using LiftTable = std::map<std::string, Word>;

struct GenPairOrder {
  bool operator()(const std::pair<Generator, Generator>& a,
                  const std::pair<Generator, Generator>& b) const {
    GenOrder lt;
    if (lt(a.first, b.first)) return true;
    if (lt(b.first, a.first)) return false;
    return lt(a.second, b.second);
  }
};

using ConjTable =
    std::map<std::pair<Generator, Generator>, Word, GenPairOrder>;

Presentation compose_extension(const Presentation& kernel,
                               const Presentation& quotient,
                               const LiftTable& lift, const ConjTable& conj);

// ---------------------------------------------------------------------------
// Graph of groups.
//
// Vertices carry presentations with pairwise disjoint alphabets; each edge
// carries its own generator set together with two injections given as words
// over the endpoint alphabets. A spanning tree (list of edge indices) selects
// the edges whose stable letters are eliminated.
// ---------------------------------------------------------------------------

struct GGEdge {
  int from = 0;
  int to = 0;
  std::vector<Generator> edge_generators;
  std::map<Generator, Word, GenOrder> image_from;  // into vertices[from]
  std::map<Generator, Word, GenOrder> image_to;    // into vertices[to]
};

struct GraphOfGroups {
  std::vector<Presentation> vertices;
  std::vector<GGEdge> edges;
  std::vector<size_t> spanning_tree;  // indices into edges
};

// Fundamental group presentation: all vertex generators and relations, plus
// per tree edge the identification image_from(x) = image_to(x), and per
// non-tree edge k a stable letter e.k with e.k image_from(x) e.k^-1 =
// image_to(x).
Presentation graph_of_groups_pi1(const GraphOfGroups& g);

// Kills every stable letter: removes them from the generator list and erases
// them from every relation word. No-op on presentations without stable
// letters.
Presentation brown_quotient(const Presentation& p);

// Appends w = 1 as an extra relation tagged "tietze" (suffixed to stay
// unique). The caller asserts that w is a consequence of the existing
// relators; this is bookkeeping, not a proof.
Presentation tietze_add_consequence(
    const Presentation& p, const Word& w,
    const std::optional<std::string>& proof_hint = std::nullopt);

}  // namespace agt
