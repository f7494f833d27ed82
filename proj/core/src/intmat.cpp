#include "agt/intmat.hpp"

#include <algorithm>

namespace agt {

namespace {

BigInt abs_val(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Locate the entry of smallest nonzero magnitude in the trailing submatrix.
bool find_pivot(const IntMatrix& m, size_t t, size_t& pi, size_t& pj) {
  bool found = false;
  BigInt best = 0;
  for (size_t i = t; i < m.rows; ++i) {
    for (size_t j = t; j < m.cols; ++j) {
      const BigInt& v = m.at(i, j);
      if (v == 0) continue;
      BigInt a = abs_val(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  size_t k = std::min(m.rows, m.cols);
  std::vector<BigInt> diag(k, 0);

  for (size_t t = 0; t < k; ++t) {
    size_t pi = t, pj = t;
    if (!find_pivot(m, t, pi, pj)) break;  // trailing submatrix is zero
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);

    for (;;) {
      // Euclidean sweep: truncated-quotient eliminations shrink any
      // nonzero off-pivot entry in row/column t below the pivot magnitude,
      // so re-picking the smallest entry terminates.
      bool clean = true;
      for (size_t i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        BigInt q = m.at(i, t) / m.at(t, t);
        for (size_t j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        BigInt q = m.at(t, j) / m.at(t, t);
        for (size_t i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        size_t ni, nj;
        find_pivot(m, t, ni, nj);
        swap_rows(m, t, ni);
        swap_cols(m, t, nj);
        continue;
      }
      // Divisibility fix-up: fold a non-multiple interior entry into the
      // pivot row and keep reducing.
      bool divides_all = true;
      for (size_t i = t + 1; i < m.rows && divides_all; ++i)
        for (size_t j = t + 1; j < m.cols && divides_all; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (size_t jj = t; jj < m.cols; ++jj) m.at(t, jj) += m.at(i, jj);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (m.at(t, t) < 0)
      for (size_t j = t; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
    diag[t] = m.at(t, t);
  }

  return diag;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relations.size(), p.generators.size());
  for (size_t r = 0; r < p.relations.size(); ++r) {
    auto lhs = exponent_sums(p.relations[r].lhs, p.generators);
    auto rhs = exponent_sums(p.relations[r].rhs, p.generators);
    for (size_t c = 0; c < p.generators.size(); ++c)
      m.at(r, c) = BigInt(lhs[c]) - BigInt(rhs[c]);
  }
  return m;
}

Abelianization abelianization(const Presentation& p) {
  auto diag = smith_normal_form(exponent_matrix(p));
  Abelianization ab;
  size_t nonzero = 0;
  for (const BigInt& d : diag) {
    if (d != 0) ++nonzero;
    if (d > 1) ab.torsion.push_back(d);
  }
  ab.free_rank = p.generators.size() - nonzero;
  return ab;
}

}  // namespace agt
