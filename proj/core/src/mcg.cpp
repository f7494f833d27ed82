#include "agt/mcg.hpp"

#include <utility>

namespace agt {

namespace surface {
Generator x0() { return Generator::twist("x0", std::nullopt, std::nullopt); }
Generator x1() { return Generator::twist("x1", std::nullopt, std::nullopt); }
Generator y(int k) { return Generator::twist("y", std::nullopt, k); }
Generator z() { return Generator::twist("z", std::nullopt, std::nullopt); }
Generator b(int i) { return Generator::swap_gen(std::nullopt, i); }
Generator u(int j) { return Generator::twist("u", std::nullopt, j); }
}  // namespace surface

void validate_mapo_params(const MapoParams& p) {
  if (p.g < 1)
    throw Error("genus must be at least 1, got " + std::to_string(p.g));
  if (p.n < 2)
    throw Error("need at least 2 boundary components, got " +
                std::to_string(p.n));
}

namespace {

using namespace surface;

// Shared frame for the boundary-permuting graph and its capped-surface
// reference: `swap_seat(i)` supplies the generator occupying the swap chain
// (true swaps b_i, or the half-twist stand-ins h_i), `with_u` controls the
// boundary-twist block.
template <typename SwapSeat>
ArtinGraph chain_graph(const MapoParams& p, SwapSeat swap_seat, bool with_u) {
  ArtinGraph g;
  g.vertices.push_back(x0());
  g.vertices.push_back(x1());
  for (int k = 1; k <= 2 * p.g - 1; ++k) g.vertices.push_back(y(k));
  if (p.g >= 2) g.vertices.push_back(z());
  for (int i = 1; i <= p.n - 1; ++i) g.vertices.push_back(swap_seat(i));
  if (with_u)
    for (int j = 1; j <= p.n; ++j) g.vertices.push_back(u(j));

  g.edges.push_back({x0(), y(1), 3});
  g.edges.push_back({x1(), y(1), 3});
  for (int k = 1; k <= 2 * p.g - 2; ++k) g.edges.push_back({y(k), y(k + 1), 3});
  if (p.g >= 2) g.edges.push_back({z(), y(3), 3});
  g.edges.push_back({x1(), swap_seat(1), 4});
  for (int i = 1; i <= p.n - 2; ++i)
    g.edges.push_back({swap_seat(i), swap_seat(i + 1), 3});
  if (with_u)
    for (int j = 1; j <= p.n - 1; ++j) {
      g.edges.push_back({u(j), swap_seat(j), 4});
      g.edges.push_back({u(j + 1), swap_seat(j), 4});
    }
  return g;
}

struct ChainRelationBuilder {
  const MapoParams& p;
  DeltaMode mode;
  Presentation& pres;
  nlohmann::json expansions = nlohmann::json::array();
  nlohmann::json emitted = nlohmann::json::object();

  Word delta(const std::string& tag, const char* side, Family f,
             std::vector<Generator> gens, int m) {
    ParabolicType t{f, static_cast<int>(gens.size()), std::move(gens)};
    Word w = delta_power_word(t, m, mode);
    expansions.push_back({{"tag", tag},
                          {"side", side},
                          {"family", family_name(f)},
                          {"rank", t.rank},
                          {"m", m},
                          {"letters", w.size()}});
    return w;
  }

  void relation(const std::string& tag, Word lhs, Word rhs) {
    pres.relations.push_back(Relation{tag, std::move(lhs), std::move(rhs)});
    emitted[tag] = true;
  }

  // The guarded chain relations shared by the boundary-permuting and capped
  // builders; `seat(i)` fills the swap chain, `d6_prefix` carries the
  // boundary-twist factor of the D6 relation (empty for the capped surface).
  template <typename SwapSeat>
  void chain_relations(SwapSeat seat, const Word& d6_prefix) {
    const int g = p.g, n = p.n;
    std::vector<Generator> bs;
    for (int i = 1; i <= n - 1; ++i) bs.push_back(seat(i));

    if (g >= 2)
      relation("R1", delta("R1", "lhs", Family::A, {y(1), y(2), y(3), z()}, 4),
               delta("R1", "rhs", Family::A, {x0(), y(1), y(2), y(3), z()}, 2));

    if (g >= 3)
      relation(
          "R2",
          delta("R2", "lhs", Family::E6, {y(1), y(2), y(3), y(4), y(5), z()}, 2),
          delta("R2", "rhs", Family::E7,
                {x0(), y(1), y(2), y(3), y(4), y(5), z()}, 1));

    if (n >= 2)
      relation("R3",
               delta("R3", "lhs", Family::B, {x0(), x1(), y(1), seat(1)}, 1),
               delta("R3", "rhs", Family::B, {x1(), y(1), seat(1)}, 2));

    if (n >= 1 && g >= 2) {
      Word lhs = d6_prefix;
      Word body =
          delta("R4", "lhs", Family::D, {x0(), x1(), y(1), y(2), y(3), z()}, 1);
      lhs.insert(lhs.end(), body.begin(), body.end());
      relation("R4", std::move(lhs),
               delta("R4", "rhs", Family::D, {x1(), y(1), y(2), y(3), z()}, 2));
    }

    if (g >= 2) {
      std::vector<Generator> bchain{x1()};
      bchain.insert(bchain.end(), bs.begin(), bs.end());
      Word lhs = power(Word{lit(x0())}, 2 * g - n - 2);
      Word body = delta("R5a", "lhs", Family::B, std::move(bchain), 1);
      lhs.insert(lhs.end(), body.begin(), body.end());
      std::vector<Generator> dchain{z()};
      for (int k = 2; k <= 2 * g - 1; ++k) dchain.push_back(y(k));
      relation("R5a", std::move(lhs),
               delta("R5a", "rhs", Family::D, std::move(dchain), 2));
    }

    if (g == 1) {
      std::vector<Generator> bchain{x1()};
      bchain.insert(bchain.end(), bs.begin(), bs.end());
      relation("R5b", power(Word{lit(x0())}, n),
               delta("R5b", "rhs", Family::B, std::move(bchain), 1));
      relation("R5c", delta("R5c", "lhs", Family::A, {x0(), y(1)}, 4),
               delta("R5c", "rhs", Family::A, bs, 2));
    }
  }
};

}  // namespace

ArtinGraph psi_graph(const MapoParams& p) {
  validate_mapo_params(p);
  return chain_graph(p, [](int i) { return b(i); }, true);
}

ArtinGraph gamma_graph(const MapoParams& p) {
  validate_mapo_params(p);
  return chain_graph(
      p, [](int i) { return Generator::abstract("h", std::nullopt, i); },
      false);
}

Presentation mapo_presentation(const MapoParams& p, DeltaMode mode) {
  validate_mapo_params(p);
  Presentation pres = artin_presentation(psi_graph(p));

  ChainRelationBuilder builder{p, mode, pres};
  builder.chain_relations([](int i) { return b(i); }, Word{lit(u(1))});

  for (int i = 1; i <= p.n - 1; ++i)
    builder.relation("C" + std::to_string(i), Word{lit(b(i)), lit(u(i))},
                     Word{lit(u(i + 1)), lit(b(i))});
  for (int i = 1; i <= p.n - 1; ++i)
    builder.relation("D" + std::to_string(i), Word{lit(u(i)), lit(b(i))},
                     Word{lit(b(i)), lit(u(i + 1))});

  pres.meta = {{"kind", "mapo"},
               {"g", p.g},
               {"n", p.n},
               {"mode", delta_mode_name(mode)},
               {"emitted", builder.emitted},
               {"delta_expansions", builder.expansions}};
  return pres;
}

Presentation capped_presentation(const MapoParams& p, DeltaMode mode) {
  validate_mapo_params(p);
  Presentation pres = artin_presentation(gamma_graph(p));

  auto h = [](int i) { return Generator::abstract("h", std::nullopt, i); };
  ChainRelationBuilder builder{p, mode, pres};
  builder.chain_relations(h, Word{});

  pres.meta = {{"kind", "capped"},
               {"g", p.g},
               {"n", p.n},
               {"mode", delta_mode_name(mode)},
               {"emitted", builder.emitted},
               {"delta_expansions", builder.expansions}};
  return pres;
}

std::vector<GeneratorCatalog> generator_catalogs(const MapoParams& p) {
  validate_mapo_params(p);
  std::vector<Generator> ys, us, bs;
  for (int k = 1; k <= 2 * p.g - 1; ++k) ys.push_back(y(k));
  for (int j = 1; j <= p.n; ++j) us.push_back(u(j));
  for (int i = 1; i <= p.n - 1; ++i) bs.push_back(b(i));

  auto assemble = [&](std::vector<Generator> head) {
    if (p.g >= 2) head.push_back(z());
    head.insert(head.end(), ys.begin(), ys.end());
    head.insert(head.end(), us.begin(), us.end());
    return head;
  };

  GeneratorCatalog full{"full", assemble({x0(), x1()}), bs};
  GeneratorCatalog a1{"edge-a1", assemble({x0(), x1()}), bs};
  GeneratorCatalog a2{"edge-a2",
                      assemble({Generator::abstract("w", std::nullopt, 0),
                                Generator::abstract("w", std::nullopt, 1),
                                Generator::abstract("w", std::nullopt, 2)}),
                      bs};
  return {full, a1, a2};
}

nlohmann::json catalog_to_json(const GeneratorCatalog& c) {
  nlohmann::json twists = nlohmann::json::array();
  for (const Generator& g : c.twists) twists.push_back(g.render());
  nlohmann::json swaps = nlohmann::json::array();
  for (const Generator& g : c.swaps) swaps.push_back(g.render());
  return {{"label", c.label}, {"twists", twists}, {"swaps", swaps}};
}

}  // namespace agt
