#include "agt/arb.hpp"

#include <utility>

namespace agt {

std::string tower_name(Tower f) { return f == Tower::b1r ? "b1r" : "b21"; }

namespace tower {
Generator x0(int v) { return Generator::twist("x0", v, std::nullopt); }
Generator x1(int v) { return Generator::twist("x1", v, std::nullopt); }
Generator y(int v, int k) { return Generator::twist("y", v, k); }
Generator z(int v) { return Generator::twist("z", v, std::nullopt); }
Generator b(int v, int j) { return Generator::swap_gen(v, j); }
Generator u(int v, int j) { return Generator::twist("u", v, j); }
}  // namespace tower

Generator with_vertex(const Generator& g, int v) {
  if (g.vertex)
    throw Error("generator '" + g.render() +
                "' already carries a vertex index");
  switch (g.kind) {
    case GenKind::Twist:
      return Generator::twist(g.series, v, g.position);
    case GenKind::Swap:
      return Generator::swap_gen(v, *g.position);
    case GenKind::Abstract:
      return Generator::abstract(g.series, v, g.position);
    default:
      throw Error("cannot vertex-index a stable letter");
  }
}

Word with_vertex(const Word& w, int v) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back(Letter{with_vertex(l.gen, v), l.sign});
  return out;
}

std::vector<TowerVertex> tower_vertices(Tower f, int r) {
  std::vector<TowerVertex> out;
  if (f == Tower::b1r) {
    if (r < 3)
      throw Error("ray count must be at least 3, got " + std::to_string(r));
    for (int v = 0; v <= 3; ++v) out.push_back({v, MapoParams{v + 1, r}});
  } else {
    for (int v = 1; v <= 6; ++v)
      out.push_back({v, MapoParams{v + 1, v + 1}});
  }
  return out;
}

Word humphries_m(int v) {
  if (v < 2)
    throw Error("multitwist needs twist chain indices up to 5: vertex " +
                std::to_string(v) + " only reaches y index " +
                std::to_string(2 * v + 1));
  auto Y = [&](int k) { return lit(tower::y(v, k)); };
  const Letter Z = lit(tower::z(v));
  return Word{Y(5), Y(4), Y(3), Z,    Y(2), Y(1), Y(3), Y(2),
              Y(4), Y(3), Y(5), Y(4), Z,    Y(3), Y(2), Y(1)};
}

namespace {

using tower::b;
using tower::u;
using tower::x0;
using tower::x1;
using tower::y;
using tower::z;

Word one(const Generator& g) { return Word{lit(g)}; }

Word conjugate(const Word& outer, const Word& mid) {
  return reduce(concat(concat(outer, mid), inverse(outer)));
}

// The 16-slot connector word at vertex v, with `tm` filling both conjugator
// slots: descending runs through the top four chain twists of the vertex.
Word bridge(int v, const Word& tm) {
  auto Y = [&](int k) { return one(y(v, k)); };
  const int t = 2 * v + 1;
  const std::vector<Word> parts = {
      Y(t),     Y(t - 1), Y(t - 2), tm,       Y(t - 3), Y(t - 4), Y(t - 2),
      Y(t - 3), Y(t - 1), Y(t - 2), Y(t),     Y(t - 1), tm,       Y(t - 2),
      Y(t - 3), Y(t - 4)};
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Fundamental element of a chain whose entries may themselves be words:
// the product of descending-length prefixes (c_1..c_l)(c_1..c_{l-1})..(c_1).
Word delta_chain(const std::vector<Word>& entries) {
  Word out;
  for (size_t k = entries.size(); k >= 1; --k)
    for (size_t j = 0; j < k; ++j)
      out.insert(out.end(), entries[j].begin(), entries[j].end());
  return out;
}

Word swap_block_delta(int v, int count) {
  std::vector<Generator> bs;
  for (int j = 1; j <= count; ++j) bs.push_back(b(v, j));
  ParabolicType type{Family::A, count, bs};
  return delta_power_word(type, 1, DeltaMode::paper_literal);
}

// Compound gluing relation at vertex w: the fork-type fundamental element
// over (delta(x1,b1) x0^{-1}, x0, y1, y2) expanded as the printed run cube,
// keeping the adjacent x0^{-1} x0 pair.
Word glue_delta_lhs(int w) {
  ParabolicType b2{Family::B, 2, {x1(w), b(w, 1)}};
  Word run = delta_power_word(b2, 1, DeltaMode::paper_literal);
  run.push_back(lit(x0(w), -1));
  run.push_back(lit(x0(w)));
  run.push_back(lit(y(w, 1)));
  run.push_back(lit(y(w, 2)));
  return power(run, 3);
}

Word glue_delta_rhs(int w) {
  return Word{lit(b(w, 1)), lit(b(w, 1)),     lit(u(w, 1)),
              lit(u(w, 2)), lit(x1(w - 1)),   lit(z(w))};
}

// Vertex-prefixed tag for a block relation: pair tags are rebuilt from the
// renamed generators, chain tags R* gain the vertex digit, and the two
// conjugation series C*/D* become C<v>1.<j> / C<v>2.<j>.
std::string retag(const std::string& tag, int v) {
  if (tag.rfind("A(", 0) == 0) {
    const std::string inner = tag.substr(2, tag.size() - 3);
    const size_t comma = inner.find(',');
    Generator a = Generator::parse(inner.substr(0, comma));
    Generator c = Generator::parse(inner.substr(comma + 1));
    return "A(" + with_vertex(a, v).render() + "," +
           with_vertex(c, v).render() + ")";
  }
  if (tag[0] == 'R') return "R" + std::to_string(v) + tag.substr(1);
  if (tag[0] == 'C') return "C" + std::to_string(v) + "1." + tag.substr(1);
  if (tag[0] == 'D') return "C" + std::to_string(v) + "2." + tag.substr(1);
  throw Error("unexpected block relation tag: " + tag);
}

void append_vertex_block(Presentation& out, int v, const MapoParams& mp,
                         DeltaMode mode, nlohmann::json& expansions) {
  Presentation block = mapo_presentation(mp, mode);
  for (const Generator& g : block.generators)
    out.generators.push_back(with_vertex(g, v));
  for (const Relation& rel : block.relations)
    out.relations.push_back(Relation{retag(rel.tag, v),
                                     with_vertex(rel.lhs, v),
                                     with_vertex(rel.rhs, v)});
  for (auto rec : block.meta.at("delta_expansions")) {
    rec["tag"] = retag(rec.at("tag").get<std::string>(), v);
    expansions.push_back(std::move(rec));
  }
}

nlohmann::json vertices_meta(const std::vector<TowerVertex>& schedule) {
  nlohmann::json out = nlohmann::json::array();
  for (const TowerVertex& tv : schedule)
    out.push_back({{"vertex", tv.vertex},
                   {"genus", tv.params.g},
                   {"boundary", tv.params.n}});
  return out;
}

}  // namespace

Word t_word(Tower f, int v) {
  if (f == Tower::b1r) {
    if (v != 3)
      throw Error("the ray tower defines a spoke conjugator only at vertex "
                  "3, got " +
                  std::to_string(v));
    return conjugate(bridge(3, one(z(1))), one(z(3)));
  }
  switch (v) {
    case 0:
    case 1:
      return one(z(1));
    case 2:
      return conjugate(humphries_m(2), one(x0(2)));
    case 3:
    case 5:
      return t_word(f, v - 1);
    case 4:
    case 6:
      return conjugate(bridge(v, t_word(f, v - 2)), t_word(f, v - 4));
    default:
      throw Error("spoke conjugator out of range: vertex " +
                  std::to_string(v) + " (the doubling tower defines t_0..t_6)");
  }
}

Word phi_word(Tower f, int v, int r) {
  if (f == Tower::b1r) {
    if (r < 3)
      throw Error("ray count must be at least 3, got " + std::to_string(r));
    if (v < 0 || v > 3)
      throw Error("rotation word out of range: vertex " + std::to_string(v) +
                  " (the ray tower has vertices 0..3)");
    const Word swaps = swap_block_delta(v, r - 1);
    if (v == 0) {
      ParabolicType a2{Family::A, 2, {x0(0), y(0, 1)}};
      Word twist = delta_power_word(a2, 2, DeltaMode::paper_literal);
      return reduce(concat(inverse(twist), swaps));
    }
    std::vector<Word> chain{one(x0(v))};
    for (int k = 1; k <= 2 * v + 1; ++k) chain.push_back(one(y(v, k)));
    chain.push_back(v == 3 ? t_word(Tower::b1r, 3) : one(z(1)));
    return reduce(concat(inverse(delta_chain(chain)), swaps));
  }
  if (v < 1 || v > 6)
    throw Error("rotation word out of range: vertex " + std::to_string(v) +
                " (the doubling tower has vertices 1..6)");
  const Word swaps = swap_block_delta(v, v);
  std::vector<Word> chain{one(x0(v))};
  for (int k = 1; k <= 2 * v + 1; ++k) chain.push_back(one(y(v, k)));
  chain.push_back(t_word(Tower::b21, v));
  return reduce(concat(inverse(delta_chain(chain)), swaps));
}

Presentation b1r_presentation(int r, DeltaMode mode) {
  const std::vector<TowerVertex> schedule = tower_vertices(Tower::b1r, r);
  Presentation out;
  nlohmann::json expansions = nlohmann::json::array();
  for (const TowerVertex& tv : schedule)
    append_vertex_block(out, tv.vertex, tv.params, mode, expansions);

  auto add = [&](const std::string& tag, Word lhs, Word rhs) {
    out.relations.push_back(Relation{tag, std::move(lhs), std::move(rhs)});
  };
  auto sj = [](const char* stem, int j) {
    return std::string(stem) + "." + std::to_string(j);
  };

  add("S1", one(x0(0)), one(x0(1)));
  add("S2", one(x1(0)), one(x1(1)));
  add("S3", one(y(0, 1)), one(y(1, 1)));
  for (int j = 1; j <= r - 1; ++j) add(sj("S4", j), one(u(0, j)), one(u(1, j)));
  for (int j = 1; j <= r - 2; ++j) add(sj("S5", j), one(b(0, j)), one(b(1, j)));

  add("S6", one(x0(2)), one(z(3)));
  add("S7", one(y(2, 1)), one(y(3, 3)));
  add("S8", one(y(2, 2)), one(y(3, 4)));
  add("S9", one(y(2, 3)), one(y(3, 5)));
  for (int j = 2; j <= r; ++j) add(sj("S10", j), one(u(1, j)), one(u(2, j)));
  for (int j = 2; j <= r - 1; ++j)
    add(sj("S11", j), one(b(1, j)), one(b(2, j)));
  add("S12",
      power(Word{lit(x1(2)), lit(x0(2)), lit(y(2, 1)), lit(y(2, 2))}, 3),
      Word{lit(u(2, 1)), lit(x1(1)), lit(z(2))});
  add("S13", one(z(1)), conjugate(humphries_m(2), one(x0(2))));

  add("S14", one(x0(2)), one(x0(3)));
  add("S15", one(x1(2)), one(x1(3)));
  for (int k = 1; k <= 5; ++k)
    add("S" + std::to_string(15 + k), one(y(2, k)), one(y(3, k)));
  add("S21", one(z(2)), one(z(3)));
  for (int j = 1; j <= r - 1; ++j)
    add(sj("S22", j), one(u(2, j)), one(u(3, j)));
  for (int j = 1; j <= r - 2; ++j)
    add(sj("S23", j), one(b(2, j)), one(b(3, j)));

  add("T1", concat(phi_word(Tower::b1r, 0, r), one(u(0, 1))),
      concat(phi_word(Tower::b1r, 2, r), one(u(2, 1))));
  add("T2", concat(phi_word(Tower::b1r, 1, r), one(u(1, 1))),
      concat(phi_word(Tower::b1r, 3, r), one(u(3, 1))));

  out.meta = {
      {"kind", "b1r"},
      {"r", r},
      {"mode", delta_mode_name(mode)},
      {"vertices", vertices_meta(schedule)},
      {"guards",
       {"six-chain relation R*2 emitted only at vertices 2 and 3: its "
        "letters y4, y5 need genus at least 3",
        "rotation swap blocks span the declared swaps b.<v>.1 .. b.<v>." +
            std::to_string(r - 1)}},
      {"delta_expansions", expansions}};
  return out;
}

Presentation b21_presentation(DeltaMode mode) {
  const std::vector<TowerVertex> schedule = tower_vertices(Tower::b21);
  Presentation out;
  nlohmann::json expansions = nlohmann::json::array();
  for (const TowerVertex& tv : schedule)
    append_vertex_block(out, tv.vertex, tv.params, mode, expansions);

  auto add = [&](const std::string& tag, Word lhs, Word rhs) {
    out.relations.push_back(Relation{tag, std::move(lhs), std::move(rhs)});
  };

  add("S1", one(x0(1)), one(x0(2)));
  add("S2", one(x1(1)), one(x1(2)));
  add("S3", one(y(1, 1)), one(y(2, 1)));
  add("S4", one(y(1, 2)), one(y(2, 2)));
  add("S5", one(y(1, 3)), one(y(2, 3)));
  add("S6", one(z(1)), one(z(2)));

  add("S7", one(x0(2)), one(z(3)));
  for (int k = 1; k <= 5; ++k)
    add("S" + std::to_string(7 + k), one(y(2, k)), one(y(3, k + 2)));
  add("S13", one(b(2, 2)), one(b(3, 3)));
  add("S14", one(u(2, 2)), one(u(3, 3)));
  add("S15", one(u(2, 3)), one(u(3, 4)));
  add("S16", glue_delta_lhs(3), glue_delta_rhs(3));
  add("S17", one(z(2)), conjugate(humphries_m(3), one(x0(3))));

  add("S18", one(x0(3)), one(x0(4)));
  add("S19", one(x1(3)), one(x1(4)));
  for (int k = 1; k <= 7; ++k)
    add("S" + std::to_string(19 + k), one(y(3, k)), one(y(4, k)));
  add("S27", one(z(3)), one(z(4)));
  add("S28", one(b(3, 1)), one(b(4, 1)));
  add("S29", one(b(3, 2)), one(b(4, 2)));
  for (int j = 1; j <= 3; ++j)
    add("S" + std::to_string(29 + j), one(u(3, j)), one(u(4, j)));

  add("S33", one(x0(4)), one(z(5)));
  for (int k = 1; k <= 9; ++k)
    add("S" + std::to_string(33 + k), one(y(4, k)), one(y(5, k + 2)));
  for (int j = 2; j <= 4; ++j)
    add("S" + std::to_string(41 + j), one(b(4, j)), one(b(5, j + 1)));
  for (int j = 2; j <= 5; ++j)
    add("S" + std::to_string(44 + j), one(u(4, j)), one(u(5, j + 1)));
  add("S50", glue_delta_lhs(5), glue_delta_rhs(5));
  add("S51", one(z(4)), conjugate(humphries_m(5), one(x0(5))));

  add("S52", one(x0(5)), one(x0(6)));
  add("S53", one(x1(5)), one(x1(6)));
  for (int k = 1; k <= 11; ++k)
    add("S" + std::to_string(53 + k), one(y(5, k)), one(y(6, k)));
  add("S65", one(z(5)), one(z(6)));
  for (int j = 1; j <= 4; ++j)
    add("S" + std::to_string(65 + j), one(b(5, j)), one(b(6, j)));
  for (int j = 1; j <= 5; ++j)
    add("S" + std::to_string(69 + j), one(u(5, j)), one(u(6, j)));

  for (int i = 1; i <= 4; ++i) {
    Word lhs = phi_word(Tower::b21, i + 2);
    lhs.push_back(lit(u(i + 2, 1)));
    lhs.push_back(lit(u(i + 2, 2)));
    Word rhs = phi_word(Tower::b21, i);
    rhs.push_back(lit(u(i, 1)));
    add("T" + std::to_string(i), std::move(lhs), std::move(rhs));
  }

  out.meta = {
      {"kind", "b21"},
      {"mode", delta_mode_name(mode)},
      {"vertices", vertices_meta(schedule)},
      {"guards",
       {"six-chain relation R*2 emitted only at vertices 2 through 6: its "
        "letters y4, y5 need genus at least 3"}},
      {"delta_expansions", expansions}};
  return out;
}

}  // namespace agt
