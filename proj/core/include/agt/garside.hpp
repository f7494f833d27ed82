#pragma once

#include <string>
#include <vector>

#include "agt/root_system.hpp"
#include "agt/words.hpp"

namespace agt {

// Element of the finite reflection group attached to a RootSystem, stored as
// its left action on root indices together with the inverse permutation.
// Composition convention: (a*b) acts by applying b first, then a, so that a
// word read left to right maps to the product of its letters in that order.
struct CoxeterElement {
  const RootSystem* rs = nullptr;
  std::vector<int32_t> act;
  std::vector<int32_t> inv;

  bool operator==(const CoxeterElement& o) const { return act == o.act; }
};

CoxeterElement coxeter_identity(const RootSystem& rs);
CoxeterElement coxeter_simple(const RootSystem& rs, int i);
CoxeterElement coxeter_mult(const CoxeterElement& a, const CoxeterElement& b);
CoxeterElement coxeter_inverse(const CoxeterElement& a);

// Number of positive roots sent negative; 0 exactly for the identity and
// n_pos exactly for the longest element.
int coxeter_length(const CoxeterElement& a);
bool coxeter_is_identity(const CoxeterElement& a);
bool coxeter_is_longest(const CoxeterElement& a);

// length(a * s_i) < length(a), resp. length(s_i * a) < length(a).
bool right_descent(const CoxeterElement& a, int i);
bool left_descent(const CoxeterElement& a, int i);

// Canonical reduced word: repeatedly strip the smallest-index left descent.
std::vector<int> reduced_word_of(const CoxeterElement& a);
CoxeterElement element_of_simple_word(const RootSystem& rs,
                                      const std::vector<int>& word);

// Canonical reduced word of the longest element.
std::vector<int> longest_word(const RootSystem& rs);

// Order of s_i * s_j (the edge label of the diagram; 2 when disconnected).
int coxeter_m(const RootSystem& rs, int i, int j);

// Image of a word in the reflection group, mapping the k-th generator of the
// type to the k-th simple reflection (inverse letters map to the same
// involution). Foreign letters are an error.
CoxeterElement word_to_element(const ParabolicType& type, const Word& w);

// Left-greedy canonical form delta^p * f_1 * ... * f_k for a word in the
// Artin group of the type: p maximal, each factor a nontrivial proper simple
// element stored as its canonical reduced word, consecutive factors
// left-weighted. Two words represent the same group element iff their forms
// coincide.
struct GarsideForm {
  Family family = Family::A;
  int rank = 0;
  int delta_power = 0;
  std::vector<std::vector<int>> factors;

  bool operator==(const GarsideForm& o) const {
    return family == o.family && rank == o.rank &&
           delta_power == o.delta_power && factors == o.factors;
  }
};

GarsideForm normal_form(const ParabolicType& type, const Word& w);
bool garside_equal(const ParabolicType& type, const Word& a, const Word& b);

// Total letter count of the form: |delta_power| * n_pos + sum of factor
// lengths (a convenient size measure for reporting).
int garside_letter_size(const GarsideForm& f);

// Render as e.g. "D^2 . (x1 x2) . (x1)" using the type's generator names
// when given, else simple indices ("s1 s2"). "1" for the trivial form.
std::string render_garside(const GarsideForm& f,
                           const std::vector<Generator>* names = nullptr);

}  // namespace agt
