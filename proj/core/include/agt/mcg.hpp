#pragma once

#include <string>
#include <vector>

#include "agt/artin.hpp"

namespace agt {

// Parameters of the genus-g surface with n boundary components whose
// boundary-permuting mapping class group is being presented.
struct MapoParams {
  int g = 1;  // genus, at least 1
  int n = 2;  // boundary components, at least 2
};

void validate_mapo_params(const MapoParams& p);

// The surface generator alphabet (twists x0, x1, y_k, z, u_j; swaps b_i),
// without a tree-vertex index.
namespace surface {
Generator x0();
Generator x1();
Generator y(int k);
Generator z();
Generator b(int i);
Generator u(int j);
}  // namespace surface

// Defining graph of the boundary-permuting presentation: the twist chain
// x0/x1 - y_1 .. y_{2g-1} with z hanging off y_3 (present only for g >= 2),
// the swap chain b_1 .. b_{n-1} attached to x1 by a 4-edge, and the boundary
// twists u_j attached to b_{j-1}, b_j by 4-edges.
ArtinGraph psi_graph(const MapoParams& p);

// Full presentation: the graph's Artin relations plus the guarded chain
// relations (tags R1..R5c) with every fundamental-element power expanded in
// the requested mode, and the swap/boundary-twist conjugation relations
// (tags Ci, Di). Meta records parameters, guard decisions, and one entry per
// expanded fundamental-element power under "delta_expansions".
Presentation mapo_presentation(const MapoParams& p, DeltaMode mode);

// Labeled generating sets: the full group plus the two boundary-fixing
// variants used to identify edge stabilizers downstream ("full", "edge-a1",
// "edge-a2"; the a2 list replaces x0/x1 by the w-triple).
struct GeneratorCatalog {
  std::string label;
  std::vector<Generator> twists;
  std::vector<Generator> swaps;
};

std::vector<GeneratorCatalog> generator_catalogs(const MapoParams& p);

nlohmann::json catalog_to_json(const GeneratorCatalog& c);

// Reference presentation for the capped surface (boundaries replaced by
// punctures): same chains with half-twist generators h_i in the swap seat,
// no boundary twists u_j, no conjugation relations, and the D6-chain
// relation without its boundary-twist factor. Exists to cross-check the
// guard logic against an independent formulation.
ArtinGraph gamma_graph(const MapoParams& p);
Presentation capped_presentation(const MapoParams& p, DeltaMode mode);

}  // namespace agt
