#include <doctest.h>

#include <functional>
#include <numeric>

#include "agt/intmat.hpp"
#include "helpers.hpp"

using namespace agt;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

std::vector<BigInt> diag(std::initializer_list<int> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

// gcd of all k-by-k minors, the classical determinantal-divisor oracle:
// d_1 * ... * d_k equals this gcd (0 when every minor vanishes).
BigInt minor_gcd(const IntMatrix& m, size_t k) {
  std::vector<size_t> rsel(k), csel(k);
  BigInt g = 0;
  std::function<void(size_t, size_t)> rows = [&](size_t start, size_t depth) {
    if (depth == k) {
      std::function<void(size_t, size_t)> cols = [&](size_t cs, size_t cd) {
        if (cd == k) {
          // Laplace expansion on the selected submatrix
          std::vector<BigInt> sub(k * k);
          for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
              sub[i * k + j] = m.at(rsel[i], csel[j]);
          std::function<BigInt(std::vector<BigInt>, size_t)> det =
              [&](std::vector<BigInt> a, size_t n) -> BigInt {
            if (n == 1) return a[0];
            BigInt s = 0;
            int sign = 1;
            for (size_t p = 0; p < n; ++p) {
              std::vector<BigInt> b((n - 1) * (n - 1));
              for (size_t i = 1; i < n; ++i) {
                size_t jj = 0;
                for (size_t j = 0; j < n; ++j) {
                  if (j == p) continue;
                  b[(i - 1) * (n - 1) + jj++] = a[i * n + j];
                }
              }
              s += sign * a[p] * det(b, n - 1);
              sign = -sign;
            }
            return s;
          };
          g = boost::multiprecision::gcd(g, det(sub, k));
          return;
        }
        for (size_t c = cs; c + (k - cd) <= m.cols; ++c) {
          csel[cd] = c;
          cols(c + 1, cd + 1);
        }
      };
      cols(0, 0);
      return;
    }
    for (size_t r = start; r + (k - depth) <= m.rows; ++r) {
      rsel[depth] = r;
      rows(r + 1, depth + 1);
    }
  };
  rows(0, 0);
  return g < 0 ? BigInt(-g) : g;
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  CHECK(smith_normal_form(from_rows({{2, 0}, {0, 3}})) == diag({1, 6}));
  CHECK(smith_normal_form(from_rows({{4, 0}, {0, 6}})) == diag({2, 12}));
  CHECK(smith_normal_form(from_rows({{2, 4}, {6, 8}})) == diag({2, 4}));
  CHECK(smith_normal_form(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
        diag({1, 1, 1}));
  CHECK(smith_normal_form(from_rows({{0, 0, 0}, {0, 0, 0}})) == diag({0, 0}));
  CHECK(smith_normal_form(from_rows({{2, 4, 4}})) == diag({2}));
  CHECK(smith_normal_form(from_rows({{2}, {3}})) == diag({1}));
  CHECK(smith_normal_form(from_rows({{-6}})) == diag({6}));
  CHECK(smith_normal_form(IntMatrix()).empty());
  // rank-1 outer product: all 2x2 minors vanish
  CHECK(smith_normal_form(from_rows({{2, 4}, {3, 6}})) == diag({1, 0}));
}

TEST_CASE("smith normal form matches the determinantal-divisor oracle") {
  auto rng = agt_test::test_rng(97);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 80; ++trial) {
    size_t r = static_cast<size_t>(dim(rng)), c = static_cast<size_t>(dim(rng));
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);

    std::vector<BigInt> d = smith_normal_form(m);
    REQUIRE(d.size() == std::min(r, c));
    BigInt prod = 1;
    bool zero_seen = false;
    for (size_t k = 0; k < d.size(); ++k) {
      CHECK(d[k] >= 0);
      if (zero_seen) CHECK(d[k] == 0);
      if (d[k] == 0) zero_seen = true;
      if (k + 1 < d.size() && d[k] != 0 && d[k + 1] != 0)
        CHECK(d[k + 1] % d[k] == 0);
      prod *= d[k];
      CHECK(prod == minor_gcd(m, k + 1));
    }
  }
}

TEST_CASE("exponent matrix rows follow relation order") {
  Generator a = Generator::abstract("g", std::nullopt, 1);
  Generator b = Generator::abstract("g", std::nullopt, 2);
  Presentation p;
  p.generators = {a, b};
  p.relations.push_back({"r1", {lit(a), lit(b), lit(a)}, {lit(b), lit(a), lit(b)}});
  p.relations.push_back({"r2", power({lit(a)}, 2), {}});
  IntMatrix m = exponent_matrix(p);
  REQUIRE(m.rows == 2);
  REQUIRE(m.cols == 2);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == -1);
  CHECK(m.at(1, 0) == 2);
  CHECK(m.at(1, 1) == 0);
}

TEST_CASE("abelianization of pinned presentations") {
  Generator a = Generator::abstract("g", std::nullopt, 1);
  Generator b = Generator::abstract("g", std::nullopt, 2);

  SUBCASE("braid relation abelianizes to one free generator") {
    Presentation p;
    p.generators = {a, b};
    p.relations.push_back(
        {"braid", {lit(a), lit(b), lit(a)}, {lit(b), lit(a), lit(b)}});
    Abelianization ab = abelianization(p);
    CHECK(ab.free_rank == 1);
    CHECK(ab.torsion.empty());
  }

  SUBCASE("torus-knot style relation a^2 = b^3") {
    Presentation p;
    p.generators = {a, b};
    p.relations.push_back({"r", power({lit(a)}, 2), power({lit(b)}, 3)});
    Abelianization ab = abelianization(p);
    CHECK(ab.free_rank == 1);
    CHECK(ab.torsion.empty());
  }

  SUBCASE("finite cyclic factor") {
    Presentation p;
    p.generators = {a};
    p.relations.push_back({"r", power({lit(a)}, 2), {}});
    Abelianization ab = abelianization(p);
    CHECK(ab.free_rank == 0);
    CHECK(ab.torsion == std::vector<BigInt>{2});
  }

  SUBCASE("commutator relation keeps both generators free") {
    Presentation p;
    p.generators = {a, b};
    p.relations.push_back(
        {"c", concat({lit(a), lit(b)}, {lit(a, -1), lit(b, -1)}), {}});
    Abelianization ab = abelianization(p);
    CHECK(ab.free_rank == 2);
    CHECK(ab.torsion.empty());
  }

  SUBCASE("mixed torsion with divisor chain") {
    Presentation p;
    p.generators = {a, b};
    p.relations.push_back({"r1", power({lit(a)}, 2), {}});
    p.relations.push_back({"r2", power({lit(b)}, 6), {}});
    Abelianization ab = abelianization(p);
    CHECK(ab.free_rank == 0);
    CHECK(ab.torsion == std::vector<BigInt>({2, 6}));
  }

  SUBCASE("no relations means free abelian") {
    Presentation p;
    p.generators = {a, b};
    Abelianization ab = abelianization(p);
    CHECK(ab.free_rank == 2);
    CHECK(ab.torsion.empty());
  }
}
