#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agt/intmat.hpp"
#include "agt/perm.hpp"
#include "agt/presentation.hpp"
#include "agt/root_system.hpp"

namespace agt {

// Independent verification oracles. Everything here recomputes its answer
// from first principles (exact linear algebra, coset enumeration, explicit
// permutations, root counts) so it can cross-check the presentation
// builders rather than trusting them.

// "Z^r x Z/d1 x Z/d2", "Z/2", or "trivial".
std::string render_abelian(const Abelianization& a);

// --------------------------------------------------------------------------
// Boundary-permutation evaluation.
// --------------------------------------------------------------------------

struct PermViolation {
  std::string tag;
  int vertex = -1;  // -1 in global scope
  std::string lhs_cycles;
  std::string rhs_cycles;
};

struct PermReport {
  std::vector<PermViolation> violations;
  size_t checked = 0;  // relations evaluated
  size_t skipped = 0;  // relations outside scope (per-vertex only)

  bool ok() const { return violations.empty(); }
};

// The standard boundary action: swap generators act as the adjacent
// transposition of their position index, every twist acts trivially.
PermAssignment boundary_assignment(const std::vector<Generator>& gens,
                                   int degree);

// Global scope: every relation is evaluated under the given assignment,
// which must cover every generator that occurs (missing images throw).
PermReport perm_eval(const Presentation& p, const PermAssignment& assignment,
                     int degree);

// Per-vertex scope: for each entry of meta.vertices the relations supported
// entirely at that vertex are evaluated at that vertex's own boundary
// degree. Cross-vertex relations are counted as skipped. Used for the
// doubling tower, whose gluing identifies swaps with shifted positions so
// no single global boundary labeling exists.
PermReport perm_eval_per_vertex(const Presentation& p);

// Chooses the scope from meta.kind: per-vertex for "b21", global at the
// natural boundary degree (n or r) otherwise.
PermReport perm_eval_builtin(const Presentation& p);

// --------------------------------------------------------------------------
// Coset enumeration (Todd-Coxeter, felsch-style deduction strategy).
// --------------------------------------------------------------------------

struct CosetResult {
  std::uint64_t order = 0;        // index of the trivial subgroup
  size_t cosets_allocated = 0;    // table rows used, dead ones included
};

// Enumerates cosets of the trivial subgroup. Deterministic: definitions
// fill the first undefined table entry (row order, then column order), and
// every consequence is processed from a FIFO deduction queue before the
// next definition. Throws Error("...exhausted...") when more than
// max_cosets rows would be needed.
CosetResult todd_coxeter(const Presentation& p, size_t max_cosets);

// The finite Coxeter quotient of a spherical family: its standard
// presentation plus one square relator per generator.
Presentation coxeter_quotient(Family f, int rank);

// Independent order oracle: breadth-first enumeration of the reflection
// group through its action on roots.
std::uint64_t coxeter_order_bfs(Family f, int rank);

// --------------------------------------------------------------------------
// Fundamental-element homogeneity audit.
// --------------------------------------------------------------------------

// One expansion record whose letter count disagrees with m * (number of
// positive roots): the letter count every power Delta^m must have, since
// Delta^m is homogeneous of that degree in the generators.
struct DeltaDiscrepancy {
  std::string tag;
  std::string side;
  Family family = Family::A;
  int rank = 0;
  int m = 0;
  size_t letters = 0;
  size_t expected = 0;
};

// Audits every record in meta.delta_expansions. Throws when the
// presentation carries no such records.
std::vector<DeltaDiscrepancy> delta_homogeneity_audit(const Presentation& p);

// --------------------------------------------------------------------------
// Generator census check.
// --------------------------------------------------------------------------

struct CountReport {
  std::string kind;
  size_t twists = 0;
  size_t swaps = 0;
  size_t expected_twists = 0;
  size_t expected_swaps = 0;
  size_t relations = 0;

  bool ok() const {
    return twists == expected_twists && swaps == expected_swaps;
  }
};

// Compares the declared generator census against the closed-form counts
// for the presentation's meta.kind (mapo, capped, b1r, b21).
CountReport verify_counts(const Presentation& p);

}  // namespace agt
