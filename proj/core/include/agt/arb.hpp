#pragma once

#include <vector>

#include "agt/mcg.hpp"

namespace agt {

// The two tower families assembled from glued surface blocks: the ray tower
// (vertices 0..3, every block with the same boundary count r >= 3, exposed
// on the command line as "b1r") and the doubling tower (vertices 1..6 with
// genus equal to boundary count, exposed as "b21").
enum class Tower { b1r, b21 };

std::string tower_name(Tower f);

// Vertex-indexed surface alphabet: the agt::surface series with a tree
// vertex attached ("x0.2", "y.3.5", "b.1.2", ...).
namespace tower {
Generator x0(int v);
Generator x1(int v);
Generator y(int v, int k);
Generator z(int v);
Generator b(int v, int j);
Generator u(int v, int j);
}  // namespace tower

// Attach a tree-vertex index to a block-local generator or word produced by
// the single-surface builders. Throws if a vertex index is already present.
Generator with_vertex(const Generator& g, int v);
Word with_vertex(const Word& w, int v);

// The fixed vertex schedule of a tower: vertex indices with their surface
// parameters, in gluing order. r is the ray count (ray tower only).
struct TowerVertex {
  int vertex = 0;
  MapoParams params;
};
std::vector<TowerVertex> tower_vertices(Tower f, int r = 0);

// The 16-letter positive multitwist over {y_{v,1..5}, z_v}. Needs the twist
// chain to reach index 5, i.e. v >= 2.
Word humphries_m(int v);

// Spoke conjugator t_v, fully substituted and freely reduced. The doubling
// tower defines the whole ladder t_0..t_6 (t_0 = z_1, t_2 conjugates x0_2 by
// the multitwist, odd v copies v-1, even v >= 4 conjugates t_{v-4} by a
// bridge word containing t_{v-2}); the ray tower defines t_3 only.
Word t_word(Tower f, int v);

// Half-rotation word phi_v: the inverted fundamental element of the twist
// chain through the vertex (with t_v as the final chain entry) times the
// fundamental element of the swap block. r is the ray count (ray tower
// only; the doubling tower ignores it).
Word phi_word(Tower f, int v, int r = 0);

// Glued presentations: one surface block per schedule vertex (alphabets
// vertex-indexed, block tags prefixed with the vertex), the printed
// identification relations S*, and the rotation relations T*. Meta records
// the mode, the vertex schedule, guard decisions, and the merged
// fundamental-element expansion log of the blocks.
Presentation b1r_presentation(int r, DeltaMode mode);
Presentation b21_presentation(DeltaMode mode);

}  // namespace agt
