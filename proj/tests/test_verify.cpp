#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "agt/arb.hpp"
#include "agt/artin.hpp"
#include "agt/compose.hpp"
#include "agt/intmat.hpp"
#include "agt/mcg.hpp"
#include "agt/verify.hpp"
#include "helpers.hpp"

using namespace agt;

namespace {

Generator A(const std::string& s) { return Generator::abstract(s); }

Presentation free_group(const std::vector<std::string>& names) {
  Presentation p;
  for (const auto& s : names) p.generators.push_back(A(s));
  return p;
}

Word w(std::initializer_list<std::pair<std::string, int>> letters) {
  Word out;
  for (const auto& [name, sign] : letters) out.push_back(lit(A(name), sign));
  return out;
}

// "tag/side" keys of an audit result, for order-insensitive comparison.
std::set<std::string> audit_keys(const std::vector<DeltaDiscrepancy>& ds) {
  std::set<std::string> out;
  for (const auto& d : ds) out.insert(d.tag + "/" + d.side);
  return out;
}

}  // namespace

TEST_CASE("abelian invariant rendering") {
  CHECK(render_abelian(Abelianization{0, {}}) == "trivial");
  CHECK(render_abelian(Abelianization{1, {}}) == "Z");
  CHECK(render_abelian(Abelianization{2, {}}) == "Z^2");
  CHECK(render_abelian(Abelianization{0, {2}}) == "Z/2");
  CHECK(render_abelian(Abelianization{1, {2, 12}}) == "Z x Z/2 x Z/12");
  CHECK(render_abelian(Abelianization{3, {2, 6}}) == "Z^3 x Z/2 x Z/6");
}

TEST_CASE("boundary assignment sends swaps to adjacent transpositions") {
  Presentation p = b1r_presentation(3, DeltaMode::homogeneity_corrected);
  PermAssignment asg = boundary_assignment(p.generators, 3);
  REQUIRE(asg.size() == p.generators.size());

  CHECK(asg.at(tower::x0(0)).is_identity());
  CHECK(asg.at(tower::z(1)).is_identity());
  CHECK(asg.at(tower::u(2, 3)).is_identity());

  CHECK(asg.at(tower::b(0, 1)).img == std::vector<int>{1, 0, 2});
  CHECK(asg.at(tower::b(0, 2)).img == std::vector<int>{0, 2, 1});
  // Same position at another vertex gives the same transposition.
  CHECK(asg.at(tower::b(3, 1)).img == asg.at(tower::b(0, 1)).img);
}

TEST_CASE("global boundary evaluation accepts the surface presentations") {
  auto expect_clean = [](const Presentation& p) {
    PermReport rep = perm_eval_builtin(p);
    CHECK(rep.ok());
    CHECK(rep.violations.empty());
    CHECK(rep.checked == p.relations.size());
    CHECK(rep.skipped == 0);
  };

  expect_clean(mapo_presentation({2, 3}, DeltaMode::homogeneity_corrected));
  expect_clean(mapo_presentation({1, 2}, DeltaMode::paper_literal));
  expect_clean(mapo_presentation({3, 5}, DeltaMode::homogeneity_corrected));
  expect_clean(capped_presentation({2, 4}, DeltaMode::homogeneity_corrected));
  expect_clean(b1r_presentation(3, DeltaMode::paper_literal));
  expect_clean(b1r_presentation(4, DeltaMode::homogeneity_corrected));
}

TEST_CASE("global boundary evaluation reports violations with cycle forms") {
  Presentation p = mapo_presentation({2, 3}, DeltaMode::homogeneity_corrected);
  PermAssignment asg = boundary_assignment(p.generators, 3);
  // Corrupt one image: a twist that acts as a transposition breaks the
  // relations that mention it asymmetrically.
  asg[surface::u(1)] = Permutation::transposition(3, 1, 2);

  PermReport rep = perm_eval(p, asg, 3);
  CHECK(!rep.ok());
  CHECK(!rep.violations.empty());
  CHECK(rep.checked == p.relations.size());
  for (const PermViolation& v : rep.violations) {
    CHECK(v.vertex == -1);
    CHECK(!v.tag.empty());
    CHECK(v.lhs_cycles != v.rhs_cycles);
  }

  SUBCASE("missing images throw") {
    CHECK_THROWS_AS(perm_eval(p, PermAssignment{}, 3), Error);
  }
}

TEST_CASE("per-vertex boundary evaluation") {
  SUBCASE("doubling tower splits cleanly by vertex") {
    for (DeltaMode mode :
         {DeltaMode::paper_literal, DeltaMode::homogeneity_corrected}) {
      Presentation p = b21_presentation(mode);
      PermReport rep = perm_eval_per_vertex(p);
      CHECK(rep.ok());
      CHECK(rep.checked == 1237);
      CHECK(rep.skipped == 78);
      CHECK(rep.checked + rep.skipped == p.relations.size());
    }
  }

  SUBCASE("ray tower also passes vertex by vertex") {
    Presentation p = b1r_presentation(3, DeltaMode::homogeneity_corrected);
    PermReport rep = perm_eval_per_vertex(p);
    CHECK(rep.ok());
    CHECK(rep.checked == 299);
    CHECK(rep.skipped == 28);
    CHECK(rep.checked + rep.skipped == p.relations.size());
  }

  SUBCASE("requires a vertex table") {
    Presentation p = artin_presentation(family_graph(Family::A, 2));
    CHECK_THROWS_WITH_AS(perm_eval_per_vertex(p),
                         "per-vertex evaluation needs a vertex table in meta",
                         Error);
  }
}

TEST_CASE("builtin boundary scope dispatch") {
  Presentation b21 = b21_presentation(DeltaMode::homogeneity_corrected);
  PermReport via_builtin = perm_eval_builtin(b21);
  PermReport direct = perm_eval_per_vertex(b21);
  CHECK(via_builtin.checked == direct.checked);
  CHECK(via_builtin.skipped == direct.skipped);
  CHECK(via_builtin.ok());

  CHECK_THROWS_WITH_AS(
      perm_eval_builtin(coxeter_quotient(Family::A, 2)),
      "no builtin boundary action for presentation kind 'coxeter_quotient'",
      Error);
  CHECK_THROWS_WITH_AS(
      perm_eval_builtin(Presentation{}),
      "no builtin boundary action for presentation kind ''", Error);
}

TEST_CASE("boundary evaluation is a word-level invariant") {
  Presentation p = b1r_presentation(3, DeltaMode::homogeneity_corrected);
  PermAssignment asg = boundary_assignment(p.generators, 3);
  auto rng = agt_test::test_rng(71);
  std::uniform_int_distribution<size_t> len(0, 20);
  std::uniform_int_distribution<size_t> pick_rel(0, p.relations.size() - 1);

  SUBCASE("free reduction does not change the image") {
    for (int i = 0; i < 30; ++i) {
      Word word = agt_test::random_word(rng, p.generators, len(rng));
      CHECK(evaluate_word(word, asg, 3) == evaluate_word(reduce(word), asg, 3));
    }
  }

  SUBCASE("relators and their conjugates act trivially") {
    for (int i = 0; i < 15; ++i) {
      Word r = relator_of(p.relations[pick_rel(rng)]);
      CHECK(evaluate_word(r, asg, 3).is_identity());
      Word c = agt_test::random_word(rng, p.generators, 1 + len(rng) / 4);
      Word conj = concat(concat(c, r), inverse(c));
      CHECK(evaluate_word(conj, asg, 3).is_identity());
    }
  }

  SUBCASE("products of relators act trivially") {
    for (int i = 0; i < 10; ++i) {
      Word a = relator_of(p.relations[pick_rel(rng)]);
      Word b = relator_of(p.relations[pick_rel(rng)]);
      CHECK(evaluate_word(concat(a, b), asg, 3).is_identity());
    }
  }
}

TEST_CASE("coset enumeration matches the reflection-group oracle") {
  struct Row {
    Family f;
    int rank;
    std::uint64_t order;
  };
  const std::vector<Row> rows = {
      {Family::A, 1, 2},  {Family::A, 2, 6},  {Family::A, 3, 24},
      {Family::A, 4, 120}, {Family::B, 2, 8},  {Family::B, 3, 48},
      {Family::D, 4, 192},
  };
  for (const Row& row : rows) {
    CAPTURE(family_name(row.f));
    CAPTURE(row.rank);
    Presentation q = coxeter_quotient(row.f, row.rank);
    CosetResult tc = todd_coxeter(q, 10000);
    CHECK(tc.order == row.order);
    CHECK(coxeter_order_bfs(row.f, row.rank) == row.order);
    // These enumerations close without dead cosets, and the strategy is
    // deterministic: a rerun reproduces the table exactly.
    CHECK(tc.cosets_allocated == tc.order);
    CosetResult again = todd_coxeter(q, 10000);
    CHECK(again.order == tc.order);
    CHECK(again.cosets_allocated == tc.cosets_allocated);
  }
}

TEST_CASE("coset enumeration handles collapses and degenerate inputs") {
  SUBCASE("trivial quotients") {
    Presentation killed = free_group({"a"});
    killed.relations.push_back(Relation{"kill", w({{"a", 1}}), {}});
    CHECK(todd_coxeter(killed, 10).order == 1);
    CHECK(todd_coxeter(Presentation{}, 10).order == 1);
  }

  SUBCASE("cyclic group") {
    Presentation c5 = free_group({"a"});
    c5.relations.push_back(
        Relation{"ord", power(w({{"a", 1}}), 5), Word{}});
    CHECK(todd_coxeter(c5, 100).order == 5);
  }

  SUBCASE("quaternion group of order eight") {
    Presentation q8 = free_group({"a", "c"});
    q8.relations.push_back(Relation{"ord", power(w({{"a", 1}}), 4), Word{}});
    q8.relations.push_back(
        Relation{"eq", power(w({{"a", 1}}), 2), power(w({{"c", 1}}), 2)});
    q8.relations.push_back(Relation{"conj",
                                    w({{"c", 1}, {"a", 1}, {"c", -1}}),
                                    w({{"a", -1}})});
    CHECK(todd_coxeter(q8, 200).order == 8);
  }

  SUBCASE("braid relation with an involution collapses to order six") {
    Presentation p = free_group({"a", "c"});
    p.relations.push_back(Relation{"braid",
                                   w({{"a", 1}, {"c", 1}, {"a", 1}}),
                                   w({{"c", 1}, {"a", 1}, {"c", 1}})});
    p.relations.push_back(Relation{"inv", power(w({{"a", 1}}), 2), Word{}});
    CHECK(todd_coxeter(p, 200).order == 6);
  }

  SUBCASE("infinite groups exhaust the table") {
    Presentation z = free_group({"a"});
    CHECK_THROWS_WITH_AS(todd_coxeter(z, 50),
                         "coset enumeration exhausted after 50 cosets", Error);

    Presentation z2 = free_group({"a", "c"});
    z2.relations.push_back(Relation{"comm",
                                    w({{"a", 1}, {"c", 1}}),
                                    w({{"c", 1}, {"a", 1}})});
    CHECK_THROWS_WITH_AS(todd_coxeter(z2, 200),
                         "coset enumeration exhausted after 200 cosets",
                         Error);
  }

  SUBCASE("input validation") {
    CHECK_THROWS_WITH_AS(todd_coxeter(Presentation{}, 0),
                         "max_cosets must be at least 1", Error);
    Presentation bad = free_group({"a"});
    bad.relations.push_back(Relation{"r1", w({{"d", 1}}), {}});
    CHECK_THROWS_WITH_AS(todd_coxeter(bad, 10),
                         "relation r1 uses undeclared letter d", Error);
  }
}

TEST_CASE("coset enumeration of assembled extensions") {
  SUBCASE("cyclic of order six") {
    Presentation K = free_group({"a"});
    K.relations.push_back(Relation{"sq", power(w({{"a", 1}}), 2), {}});
    Presentation H = free_group({"h"});
    H.relations.push_back(Relation{"cube", power(w({{"h", 1}}), 3), {}});
    Presentation ext =
        compose_extension(K, H, LiftTable{{"cube", Word{}}},
                          ConjTable{{{A("h"), A("a")}, w({{"a", 1}})}});
    CHECK(todd_coxeter(ext, 100).order == 6);
  }

  SUBCASE("symmetric group of degree three as a split extension") {
    Presentation K = free_group({"a"});
    K.relations.push_back(Relation{"cube", power(w({{"a", 1}}), 3), {}});
    Presentation H = free_group({"t"});
    H.relations.push_back(Relation{"sq", power(w({{"t", 1}}), 2), {}});
    Presentation ext =
        compose_extension(K, H, LiftTable{{"sq", Word{}}},
                          ConjTable{{{A("t"), A("a")}, w({{"a", -1}})}});
    CHECK(todd_coxeter(ext, 100).order == 6);
    Abelianization ab = abelianization(ext);
    CHECK(render_abelian(ab) == "Z/2");
  }
}

TEST_CASE("finite quotient presentations carry square relators") {
  Presentation q = coxeter_quotient(Family::A, 3);
  REQUIRE(q.generators.size() == 3);
  // Artin relations for the chain plus one square per generator.
  CHECK(q.relations.size() == 3 + 3);
  size_t squares = 0;
  for (const Relation& r : q.relations) {
    if (r.tag.rfind("sq.", 0) == 0) {
      ++squares;
      REQUIRE(r.lhs.size() == 2);
      CHECK(r.lhs[0] == r.lhs[1]);
      CHECK(r.rhs.empty());
    }
  }
  CHECK(squares == q.generators.size());
  CHECK(q.meta.at("kind") == "coxeter_quotient");
  CHECK(q.meta.at("family") == "A");
  CHECK(q.meta.at("rank") == 3);
}

TEST_CASE("fundamental-element homogeneity audit") {
  SUBCASE("ray tower, literal expansion exponents") {
    Presentation p = b1r_presentation(3, DeltaMode::paper_literal);
    std::vector<DeltaDiscrepancy> ds = delta_homogeneity_audit(p);
    CHECK(audit_keys(ds) ==
          std::set<std::string>{"R05c/lhs", "R22/rhs", "R32/rhs"});
    for (const auto& d : ds) {
      if (d.tag == "R05c") {
        CHECK(d.family == Family::A);
        CHECK(d.rank == 2);
        CHECK(d.m == 4);
        CHECK(d.letters == 16);
        CHECK(d.expected == 12);
      } else {
        CHECK(d.family == Family::E7);
        CHECK(d.rank == 7);
        CHECK(d.m == 1);
        CHECK(d.letters == 105);
        CHECK(d.expected == 63);
      }
    }
  }

  SUBCASE("doubling tower, literal expansion exponents") {
    Presentation p = b21_presentation(DeltaMode::paper_literal);
    std::vector<DeltaDiscrepancy> ds = delta_homogeneity_audit(p);
    CHECK(audit_keys(ds) ==
          std::set<std::string>{"R22/rhs", "R32/rhs", "R42/rhs", "R52/rhs",
                                "R62/rhs"});
    for (const auto& d : ds) {
      CHECK(d.family == Family::E7);
      CHECK(d.letters == 105);
      CHECK(d.expected == 63);
    }
  }

  SUBCASE("corrected exponents leave nothing to flag") {
    CHECK(delta_homogeneity_audit(
              b1r_presentation(3, DeltaMode::homogeneity_corrected))
              .empty());
    CHECK(delta_homogeneity_audit(
              b21_presentation(DeltaMode::homogeneity_corrected))
              .empty());
    for (int g = 1; g <= 3; ++g)
      CHECK(delta_homogeneity_audit(mapo_presentation(
                                        {g, 3}, DeltaMode::homogeneity_corrected))
                .empty());
  }

  SUBCASE("single surfaces flag only what they contain") {
    std::vector<DeltaDiscrepancy> g1 =
        delta_homogeneity_audit(mapo_presentation({1, 2}, DeltaMode::paper_literal));
    CHECK(audit_keys(g1) == std::set<std::string>{"R5c/lhs"});

    CHECK(delta_homogeneity_audit(
              mapo_presentation({2, 4}, DeltaMode::paper_literal))
              .empty());

    std::vector<DeltaDiscrepancy> g3 =
        delta_homogeneity_audit(mapo_presentation({3, 2}, DeltaMode::paper_literal));
    CHECK(audit_keys(g3) == std::set<std::string>{"R2/rhs"});
  }

  SUBCASE("requires expansion records") {
    CHECK_THROWS_WITH_AS(
        delta_homogeneity_audit(artin_presentation(family_graph(Family::A, 2))),
        "presentation carries no fundamental-element expansion records",
        Error);
  }
}

TEST_CASE("generator census check") {
  auto expect = [](const Presentation& p, size_t twists, size_t swaps,
                   size_t relations) {
    CountReport rep = verify_counts(p);
    CHECK(rep.ok());
    CHECK(rep.twists == twists);
    CHECK(rep.expected_twists == twists);
    CHECK(rep.swaps == swaps);
    CHECK(rep.expected_swaps == swaps);
    CHECK(rep.relations == relations);
  };

  const DeltaMode m = DeltaMode::homogeneity_corrected;
  expect(mapo_presentation({1, 4}, m), 7, 3,
         mapo_presentation({1, 4}, m).relations.size());
  expect(mapo_presentation({3, 2}, m), 10, 1,
         mapo_presentation({3, 2}, m).relations.size());
  expect(capped_presentation({1, 3}, m), 3, 0,
         capped_presentation({1, 3}, m).relations.size());
  expect(capped_presentation({2, 2}, m), 6, 0,
         capped_presentation({2, 2}, m).relations.size());
  expect(b1r_presentation(3, m), 39, 8, 327);
  expect(b1r_presentation(10, m), 67, 36,
         b1r_presentation(10, m).relations.size());
  expect(b21_presentation(m), 93, 21, 1315);

  SUBCASE("census mismatches are detected") {
    Presentation p = b1r_presentation(3, m);
    auto is_swap = [](const Generator& g) { return g.kind == GenKind::Swap; };
    auto it = std::find_if(p.generators.begin(), p.generators.end(), is_swap);
    REQUIRE(it != p.generators.end());
    p.generators.erase(it);
    CountReport rep = verify_counts(p);
    CHECK(!rep.ok());
    CHECK(rep.swaps == 7);
    CHECK(rep.expected_swaps == 8);
  }

  SUBCASE("unknown kinds throw") {
    CHECK_THROWS_WITH_AS(
        verify_counts(coxeter_quotient(Family::A, 2)),
        "no generator census for presentation kind 'coxeter_quotient'", Error);
  }
}

TEST_CASE("frozen abelianizations of the surface and tower groups") {
  const DeltaMode lit = DeltaMode::paper_literal;
  const DeltaMode cor = DeltaMode::homogeneity_corrected;
  auto ab = [](const Presentation& p) {
    return render_abelian(abelianization(p));
  };

  SUBCASE("genus one is sensitive to the expansion exponent") {
    CHECK(ab(mapo_presentation({1, 2}, cor)) == "Z x Z/2 x Z/12");
    CHECK(ab(mapo_presentation({1, 4}, cor)) == "Z x Z/2 x Z/12");
    CHECK(ab(mapo_presentation({1, 2}, lit)) == "Z x Z/2 x Z/16");
    CHECK(ab(capped_presentation({1, 2}, cor)) == "Z/2 x Z/12");
    CHECK(ab(capped_presentation({1, 2}, lit)) == "Z/2 x Z/16");
  }

  SUBCASE("higher genus is mode-independent") {
    for (DeltaMode m : {lit, cor}) {
      CHECK(ab(mapo_presentation({2, 2}, m)) == "Z/2 x Z/10");
      CHECK(ab(mapo_presentation({2, 4}, m)) == "Z/2 x Z/10");
      CHECK(ab(mapo_presentation({3, 2}, m)) == "Z/2");
      CHECK(ab(mapo_presentation({3, 4}, m)) == "Z/2");
      CHECK(ab(capped_presentation({2, 2}, m)) == "Z/2 x Z/10");
      CHECK(ab(capped_presentation({3, 2}, m)) == "Z/2");
    }
  }

  SUBCASE("tower groups") {
    for (DeltaMode m : {lit, cor}) {
      CHECK(ab(b1r_presentation(3, m)) == "Z/2");
      CHECK(ab(b1r_presentation(4, m)) == "Z/2");
      CHECK(ab(b1r_presentation(5, m)) == "Z/2");
      CHECK(ab(b21_presentation(m)) == "trivial");
    }
  }
}

TEST_CASE("abelianization is stable under adding consequences") {
  Presentation p = b1r_presentation(3, DeltaMode::homogeneity_corrected);
  const Abelianization before = abelianization(p);
  auto rng = agt_test::test_rng(72);
  std::uniform_int_distribution<size_t> pick_rel(0, p.relations.size() - 1);
  std::uniform_int_distribution<size_t> len(1, 6);

  for (int round = 0; round < 3; ++round) {
    Word r = relator_of(p.relations[pick_rel(rng)]);
    Word c = agt_test::random_word(rng, p.generators, len(rng));
    p = tietze_add_consequence(p, concat(concat(c, r), inverse(c)));
    CHECK(abelianization(p) == before);
  }
  for (int round = 0; round < 2; ++round) {
    Word a = relator_of(p.relations[pick_rel(rng)]);
    Word b = relator_of(p.relations[pick_rel(rng)]);
    Word c = agt_test::random_word(rng, p.generators, len(rng));
    p = tietze_add_consequence(p, concat(concat(concat(c, a), inverse(c)), b));
    CHECK(abelianization(p) == before);
  }
  CHECK(render_abelian(before) == "Z/2");
}
