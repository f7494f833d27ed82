#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agt/words.hpp"

namespace agt {

enum class Family { A, B, D, E6, E7 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Number of positive roots: A l(l+1)/2, B l^2, D l(l-1), E6 36, E7 63.
int positive_root_count(Family f, int rank);

// Supported ranks: A 1..8, B 2..8, D 3..8, E6/E7 fixed.
bool family_rank_supported(Family f, int rank);

// A classified spherical chain: family, rank, and the ordered generator
// tuple it was built from. For Garside computations the k-th generator is
// identified with the k-th simple root, so `gens` must be in diagram order
// (path order; 4-edge first for B; the two fork prongs first for D; branch
// generator last for E6/E7). Builders that expand fundamental elements in a
// printed argument order construct the type directly with that tuple.
struct ParabolicType {
  Family family = Family::A;
  int rank = 0;
  std::vector<Generator> gens;
};

// Crystallographic root system realized by explicit integer vectors
// (A: e_i - e_j in dim l+1; B/D: +-e_i, +-e_i +- e_j in dim l; E6/E7: the
// even-lattice model scaled by 2). Roots are indexed with positives first:
// index i < n_pos is positive (the first `rank` are the simples in diagram
// order) and i + n_pos is its negative.
struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  int n_pos = 0;
  std::vector<std::vector<int>> roots;
  // simple_action[i][r] = index of s_i(root r)
  std::vector<std::vector<int32_t>> simple_action;
  // longest element as a root permutation, and the diagram automorphism
  // tau(i) with w0(alpha_i) = -alpha_tau(i)
  std::vector<int32_t> w0;
  std::vector<int> tau;
  // canonical reduced word of w0 * s_i, used when rewriting inverse letters
  std::vector<std::vector<int>> w0_times_s;
};

// Process-wide cache keyed by (family, rank); concurrent fills are
// idempotent. If AGT_ROOT_CACHE_DIR names a writable directory, built
// systems are persisted there and reloaded on later runs.
const RootSystem& root_system(Family f, int rank);

}  // namespace agt
