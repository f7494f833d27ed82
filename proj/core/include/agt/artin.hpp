#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "agt/presentation.hpp"
#include "agt/root_system.hpp"
#include "agt/words.hpp"

namespace agt {

// Labeled simple graph defining a generalized braid group: one generator per
// vertex, an alternating relation of length m per edge, and an implicit
// commutation (m = 2) for every non-adjacent pair. Stored edges carry only
// labels >= 3.
struct ArtinEdge {
  Generator a, b;
  int label = 3;
};

struct ArtinGraph {
  std::vector<Generator> vertices;
  std::vector<ArtinEdge> edges;
};

// Throws on duplicate vertices, loops, unknown endpoints, repeated pairs,
// or labels < 3.
void validate_graph(const ArtinGraph& g);

// Label between two distinct vertices: the stored edge label, or 2 when no
// edge is present. Both vertices must belong to the graph.
int edge_label(const ArtinGraph& g, const Generator& a, const Generator& b);

// The defining presentation: for every unordered vertex pair {a, b} one
// relation "aba... = bab..." (both sides of length m, commutations included
// explicitly), tagged "A(a,b)" with the pair in name order.
Presentation artin_presentation(const ArtinGraph& g);

// Expected label between canonical positions i < j of a family diagram
// (path order; 4-edge at the first pair for B; the two fork prongs first
// for D; branch generator last for E6/E7).
int family_label(Family f, int rank, int i, int j);

// Recognize the induced subgraph on `subset` as one of the spherical chain
// families and return it with the canonical generator order. Throws with a
// descriptive message when the shape is none of them (cycles, high labels,
// double forks, ...). Classification is honest: e.g. a plain 3-path is A_3
// even if a theorem happens to treat it as the fork type of the same size.
ParabolicType classify_chain(const ArtinGraph& g,
                             const std::vector<Generator>& subset);

// Check that `type.gens` induces exactly the family diagram labels in the
// given order; throws otherwise.
void validate_parabolic(const ArtinGraph& g, const ParabolicType& type);

// Fundamental-element expansion mode: reproduce the source table verbatim,
// or force the run exponent k of (x_1...x_l)^k from k*l = m*N+ where N+ is
// the positive-root count. The two differ exactly for E7 (15m vs 9m) and
// for the fourth power in rank-2 A (8 vs 6).
enum class DeltaMode { paper_literal, homogeneity_corrected };

std::string delta_mode_name(DeltaMode mode);

// Run exponent for expressing Delta^m as (x_1...x_l)^k. Throws for
// combinations outside the table: A needs even m (m = 1 exists only as the
// triangular product), odd fork rank and E6 need even m.
int delta_run_exponent(Family f, int rank, int m, DeltaMode mode);

// A positive word for Delta^m of the type, spelled over type.gens in the
// order given. Only family and rank select the formula; callers expanding a
// theorem's printed argument list pass the generators in that printed order
// (Garside tests confirm the resulting words agree with the canonical-order
// expansion). A with m = 1 uses the triangular product
// (x_1...x_l)(x_1...x_{l-1})...(x_1); everything else is a run power.
Word delta_power_word(const ParabolicType& type, int m, DeltaMode mode);

// Family diagrams as graphs/types with generators named x.1 ... x.l.
ArtinGraph family_graph(Family f, int rank);
ParabolicType family_type(Family f, int rank);

// {"vertices": ["x.1", ...], "edges": [["a","b",m], ...]}
nlohmann::json artin_graph_to_json(const ArtinGraph& g);
ArtinGraph artin_graph_from_json(const nlohmann::json& j);

}  // namespace agt
