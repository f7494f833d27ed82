#include <doctest.h>

#include <set>

#include "agt/words.hpp"
#include "helpers.hpp"

using namespace agt;

namespace {

Generator Y(int vertex, int pos) { return Generator::twist("y", vertex, pos); }
Generator B(int vertex, int pos) { return Generator::swap_gen(vertex, pos); }

}  // namespace

TEST_CASE("generator rendering matches the pinned forms") {
  CHECK(Y(3, 5).render() == "y.3.5");
  CHECK(B(0, 2).render() == "b.0.2");
  CHECK(Generator::twist("x0", 1).render() == "x0.1");
  CHECK(Generator::twist("z", 1).render() == "z.1");
  CHECK(Generator::twist("y", std::nullopt, 4).render() == "y.4");
  CHECK(Generator::swap_gen(std::nullopt, 2).render() == "b.2");
  CHECK(Generator::stable(4).render() == "e.4");
  CHECK(Generator::abstract("t", std::nullopt, 2).render() == "t.2");
  CHECK(Generator::abstract("a").render() == "a");
}

TEST_CASE("generator parsing inverts rendering") {
  std::vector<Generator> sample = {
      Y(3, 5),
      Y(0, 1),
      Generator::twist("y", std::nullopt, 4),
      B(0, 2),
      B(5, 1),
      Generator::swap_gen(std::nullopt, 3),
      Generator::twist("x0", 1),
      Generator::twist("x0"),
      Generator::twist("x1", 6),
      Generator::twist("z", 1),
      Generator::twist("z"),
      Generator::twist("u", 2, 7),
      Generator::twist("u", std::nullopt, 1),
      Generator::stable(0),
      Generator::stable(12),
      Generator::abstract("t", std::nullopt, 4),
      Generator::abstract("h", std::nullopt, 1),
      Generator::abstract("a"),
      Generator::abstract("w0", 1, 2),
  };
  std::set<std::string> renders;
  for (const Generator& g : sample) {
    std::string r = g.render();
    CHECK(renders.insert(r).second);  // injective on the sample
    Generator back = Generator::parse(r);
    CHECK(back == g);
  }
}

TEST_CASE("generator parse and construction reject malformed input") {
  CHECK_THROWS_AS(Generator::parse("y.3.5.2"), Error);
  CHECK_THROWS_AS(Generator::parse("y.x"), Error);
  CHECK_THROWS_AS(Generator::parse(""), Error);
  CHECK_THROWS_AS(Generator::parse("3.1"), Error);
  CHECK_THROWS_AS(Generator::parse("y"), Error);  // twist y needs a position
  CHECK_THROWS_AS(Generator::twist("q", 1), Error);
  CHECK_THROWS_AS(Generator::twist("x0", 1, 2), Error);
  CHECK_THROWS_AS(Generator::abstract("b"), Error);   // reserved
  CHECK_THROWS_AS(Generator::abstract("t", 3), Error);  // vertex needs position
}

TEST_CASE("render_less sorts by rendered name") {
  std::vector<Generator> gens = {Generator::twist("z", 1), B(0, 2), Y(3, 5),
                                 Generator::twist("x0", 1)};
  std::sort(gens.begin(), gens.end(), render_less);
  CHECK(gens[0].render() == "b.0.2");
  CHECK(gens[1].render() == "x0.1");
  CHECK(gens[2].render() == "y.3.5");
  CHECK(gens[3].render() == "z.1");
}

TEST_CASE("reduce handles the forced cancellation cases") {
  Generator a = Generator::abstract("a"), b = Generator::abstract("bb");
  CHECK(reduce({}).empty());
  Word w = {lit(a, 1), lit(a, -1), lit(b, 1)};
  Word r = reduce(w);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == lit(b, 1));
  // cascading cancellation
  Word v = {lit(a, 1), lit(b, 1), lit(b, -1), lit(a, -1)};
  CHECK(reduce(v).empty());
}

TEST_CASE("reduce cancels the printed glue-relation pair") {
  Generator x31 = Generator::twist("x1", 3), x30 = Generator::twist("x0", 3);
  Generator b31 = B(3, 1), y31 = Y(3, 1), y32 = Y(3, 2);
  Word period = {lit(x31), lit(b31), lit(x31), lit(b31),
                 lit(x30, -1), lit(x30), lit(y31), lit(y32)};
  Word printed = power(period, 3);
  CHECK(printed.size() == 24);
  Word expect_period = {lit(x31), lit(b31), lit(x31),
                        lit(b31), lit(y31), lit(y32)};
  Word expected = power(expect_period, 3);
  Word r = reduce(printed);
  CHECK(r == expected);
  CHECK(r.size() == 18);
  CHECK(is_reduced(r));
}

TEST_CASE("reduce properties on random words") {
  auto rng = agt_test::test_rng(1);
  auto alphabet = agt_test::abstract_alphabet(4);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = agt_test::random_word(rng, alphabet, 30);
    Word r = reduce(w);
    CHECK(is_reduced(r));
    CHECK(reduce(r) == r);
    CHECK(reduce(concat(w, inverse(w))).empty());
  }
}

TEST_CASE("substitute maps letters homomorphically") {
  Generator a = Generator::abstract("a"), b = Generator::abstract("bb"),
            c = Generator::abstract("c");
  Substitution images;
  images[a] = {lit(b), lit(c)};

  Word img = substitute({lit(a)}, images);
  CHECK(img == Word{lit(b), lit(c)});

  Word inv = substitute({lit(a, -1)}, images);
  CHECK(inv == Word{lit(c, -1), lit(b, -1)});
}

TEST_CASE("substitute reports missing images") {
  Generator a = Generator::abstract("a"), t = Generator::abstract("t", std::nullopt, 2);
  Substitution images;
  images[a] = {lit(a)};
  try {
    substitute({lit(a), lit(t)}, images);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("t.2") != std::string::npos);
  }
}

TEST_CASE("substitute expands a conjugating multitwist to 33 letters") {
  // Shape of the vertex-2 multitwist conjugation: a 16-letter twist word m,
  // the twist it conjugates, and m inverted.
  auto y = [](int j) { return Y(2, j); };
  Generator z2 = Generator::twist("z", 2);
  Generator x20 = Generator::twist("x0", 2);
  Word m = {lit(y(5)), lit(y(4)), lit(y(3)), lit(z2), lit(y(2)), lit(y(1)),
            lit(y(3)), lit(y(2)), lit(y(4)), lit(y(3)), lit(y(5)), lit(y(4)),
            lit(z2),   lit(y(3)), lit(y(2)), lit(y(1))};
  REQUIRE(m.size() == 16);
  Generator t2 = Generator::abstract("t", std::nullopt, 2);
  Substitution images;
  images[t2] = concat(m, concat({lit(x20)}, inverse(m)));
  Word out = substitute({lit(t2)}, images);
  CHECK(out.size() == 33);
  CHECK(is_reduced(out));
}

TEST_CASE("substitute respects concatenation up to reduction") {
  auto rng = agt_test::test_rng(2);
  auto alphabet = agt_test::abstract_alphabet(3);
  std::vector<Generator> targets = agt_test::abstract_alphabet(2);
  // build a fixed homomorphism alphabet -> words over targets
  Substitution images;
  {
    auto r2 = agt_test::test_rng(3);
    for (const Generator& g : alphabet)
      images[g] = agt_test::random_word(r2, targets, 4);
  }
  for (int trial = 0; trial < 100; ++trial) {
    Word u = agt_test::random_word(rng, alphabet, 10);
    Word v = agt_test::random_word(rng, alphabet, 10);
    Word lhs = substitute(concat(u, v), images);
    Word rhs = reduce(concat(substitute(u, images), substitute(v, images)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exponent_sums matches the pinned examples") {
  Generator a = Generator::abstract("a"), b = Generator::abstract("bb");
  std::vector<Generator> ab = {a, b};
  CHECK(exponent_sums({}, ab) == std::vector<long long>{0, 0});

  // braid relator aba(bab)^-1 identifies the two generators in homology
  Word braid = {lit(a), lit(b), lit(a), lit(b, -1), lit(a, -1), lit(b, -1)};
  CHECK(exponent_sums(braid, ab) == std::vector<long long>{1, -1});

  // swap-conjugation relator b u (u' b)^-1
  Generator bi = Generator::swap_gen(std::nullopt, 1);
  Generator ui = Generator::twist("u", std::nullopt, 1);
  Generator ui1 = Generator::twist("u", std::nullopt, 2);
  Word ci = {lit(bi), lit(ui), lit(bi, -1), lit(ui1, -1)};
  auto sums = exponent_sums(ci, {ui, ui1, bi});
  CHECK(sums == std::vector<long long>{1, -1, 0});
}

TEST_CASE("exponent_sums rejects foreign letters") {
  Generator a = Generator::abstract("a"), b = Generator::abstract("bb");
  try {
    exponent_sums({lit(a), lit(b)}, {a});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("bb") != std::string::npos);
  }
}

TEST_CASE("exponent_sums is additive") {
  auto rng = agt_test::test_rng(4);
  auto alphabet = agt_test::abstract_alphabet(4);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = agt_test::random_word(rng, alphabet, 12);
    Word v = agt_test::random_word(rng, alphabet, 12);
    auto su = exponent_sums(u, alphabet);
    auto sv = exponent_sums(v, alphabet);
    auto suv = exponent_sums(concat(u, v), alphabet);
    for (size_t i = 0; i < alphabet.size(); ++i) CHECK(suv[i] == su[i] + sv[i]);
  }
}

TEST_CASE("render_word folds runs") {
  Generator a = Generator::abstract("a"), b = Generator::abstract("bb");
  CHECK(render_word({}) == "1");
  Word w = {lit(a), lit(a), lit(b, -1), lit(a)};
  CHECK(render_word(w) == "a^2 bb^-1 a");
}
