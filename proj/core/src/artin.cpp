#include "agt/artin.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace agt {

namespace {

using PairKey = std::pair<Generator, Generator>;

PairKey pair_key(const Generator& a, const Generator& b) {
  return render_less(a, b) ? PairKey{a, b} : PairKey{b, a};
}

struct PairOrder {
  bool operator()(const PairKey& x, const PairKey& y) const {
    GenOrder lt;
    if (lt(x.first, y.first)) return true;
    if (lt(y.first, x.first)) return false;
    return lt(x.second, y.second);
  }
};

Word alternating(const Generator& a, const Generator& b, int m) {
  Word w;
  for (int k = 0; k < m; ++k) w.push_back(lit(k % 2 == 0 ? a : b));
  return w;
}

}  // namespace

void validate_graph(const ArtinGraph& g) {
  std::set<Generator, GenOrder> verts;
  for (const Generator& v : g.vertices)
    if (!verts.insert(v).second)
      throw Error("graph repeats vertex '" + v.render() + "'");
  std::set<PairKey, PairOrder> pairs;
  for (const ArtinEdge& e : g.edges) {
    if (!verts.count(e.a) || !verts.count(e.b))
      throw Error("edge endpoint missing from vertex set: " + e.a.render() +
                  "-" + e.b.render());
    GenOrder lt;
    if (!lt(e.a, e.b) && !lt(e.b, e.a))
      throw Error("loop edge at '" + e.a.render() + "'");
    if (e.label < 3)
      throw Error("edge label " + std::to_string(e.label) +
                  " below 3; omit the edge to encode commutation");
    if (!pairs.insert(pair_key(e.a, e.b)).second)
      throw Error("duplicate edge " + e.a.render() + "-" + e.b.render());
  }
}

int edge_label(const ArtinGraph& g, const Generator& a, const Generator& b) {
  GenOrder lt;
  if (!lt(a, b) && !lt(b, a)) throw Error("label of a vertex with itself");
  auto has = [&](const Generator& v) {
    return std::any_of(g.vertices.begin(), g.vertices.end(),
                       [&](const Generator& u) { return !lt(u, v) && !lt(v, u); });
  };
  if (!has(a) || !has(b))
    throw Error("vertex not in graph");
  for (const ArtinEdge& e : g.edges) {
    PairKey k = pair_key(e.a, e.b), q = pair_key(a, b);
    PairOrder po;
    if (!po(k, q) && !po(q, k)) return e.label;
  }
  return 2;
}

Presentation artin_presentation(const ArtinGraph& g) {
  validate_graph(g);
  Presentation p;
  p.generators = g.vertices;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      auto [a, b] = pair_key(g.vertices[i], g.vertices[j]);
      int m = edge_label(g, a, b);
      Relation r;
      r.tag = "A(" + a.render() + "," + b.render() + ")";
      r.lhs = alternating(a, b, m);
      r.rhs = alternating(b, a, m);
      p.relations.push_back(std::move(r));
    }
  p.meta["kind"] = "artin";
  p.meta["graph"] = artin_graph_to_json(g);
  return p;
}

int family_label(Family f, int rank, int i, int j) {
  if (i == j) throw Error("label of a position with itself");
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= rank) throw Error("diagram position out of range");
  switch (f) {
    case Family::A:
      return j == i + 1 ? 3 : 2;
    case Family::B:
      if (i == 0 && j == 1) return 4;
      return (i >= 1 && j == i + 1) ? 3 : 2;
    case Family::D:
      if (i <= 1) return j == 2 ? 3 : 2;
      return j == i + 1 ? 3 : 2;
    case Family::E6:
      if (j == 5) return i == 2 ? 3 : 2;
      return j == i + 1 ? 3 : 2;
    case Family::E7:
      if (j == 6) return i == 3 ? 3 : 2;
      return j == i + 1 ? 3 : 2;
  }
  return 2;
}

namespace {

// Adjacency restricted to a subset, with generous error reporting.
struct InducedGraph {
  std::vector<Generator> verts;
  std::map<Generator, std::vector<std::pair<Generator, int>>, GenOrder> adj;

  int degree(const Generator& v) const { return static_cast<int>(adj.at(v).size()); }
};

InducedGraph induce(const ArtinGraph& g, const std::vector<Generator>& subset) {
  validate_graph(g);
  std::set<Generator, GenOrder> verts(g.vertices.begin(), g.vertices.end());
  std::set<Generator, GenOrder> chosen;
  InducedGraph out;
  for (const Generator& v : subset) {
    if (!verts.count(v))
      throw Error("chain member '" + v.render() + "' is not a vertex");
    if (!chosen.insert(v).second)
      throw Error("chain repeats '" + v.render() + "'");
    out.verts.push_back(v);
    out.adj[v];
  }
  for (const ArtinEdge& e : g.edges) {
    if (!chosen.count(e.a) || !chosen.count(e.b)) continue;
    out.adj[e.a].emplace_back(e.b, e.label);
    out.adj[e.b].emplace_back(e.a, e.label);
  }
  for (auto& [v, nbrs] : out.adj)
    std::sort(nbrs.begin(), nbrs.end(),
              [](const auto& x, const auto& y) { return render_less(x.first, y.first); });
  return out;
}

// Walk a path away from `from` starting at `at`; the walked vertices
// (including `at`) are appended. Returns false on unexpected branching.
bool walk_arm(const InducedGraph& ig, Generator from, Generator at,
              std::vector<Generator>& out) {
  GenOrder lt;
  for (;;) {
    out.push_back(at);
    const auto& nbrs = ig.adj.at(at);
    if (nbrs.size() > 2) return false;
    Generator next = at;
    bool found = false;
    for (const auto& [n, lab] : nbrs) {
      if (!lt(n, from) && !lt(from, n)) continue;
      if (found) return false;
      next = n;
      found = true;
    }
    if (!found) return true;
    from = at;
    at = next;
  }
}

[[noreturn]] void unrecognized(const std::string& why) {
  throw Error("not a recognized spherical chain: " + why);
}

}  // namespace

ParabolicType classify_chain(const ArtinGraph& g,
                             const std::vector<Generator>& subset) {
  InducedGraph ig = induce(g, subset);
  int n = static_cast<int>(ig.verts.size());
  if (n == 0) unrecognized("empty generator set");

  ParabolicType type;
  type.rank = n;

  if (n == 1) {
    type.family = Family::A;
    type.gens = ig.verts;
    return type;
  }

  int edge_count = 0;
  std::vector<std::pair<Generator, Generator>> fours;
  for (const Generator& v : ig.verts)
    for (const auto& [u, lab] : ig.adj.at(v)) {
      if (!render_less(v, u)) continue;  // count each edge once
      ++edge_count;
      if (lab >= 5)
        unrecognized("label " + std::to_string(lab) + " on " + v.render() +
                     "-" + u.render());
      if (lab == 4) fours.emplace_back(v, u);
    }

  if (edge_count != n - 1)
    unrecognized(edge_count > n - 1 ? "the induced graph has a cycle"
                                    : "the induced graph is disconnected");
  // connected tree check: reachable count from first vertex
  {
    std::set<Generator, GenOrder> seen{ig.verts[0]};
    std::vector<Generator> queue{ig.verts[0]};
    while (!queue.empty()) {
      Generator v = queue.back();
      queue.pop_back();
      for (const auto& [u, lab] : ig.adj.at(v))
        if (seen.insert(u).second) queue.push_back(u);
    }
    if (static_cast<int>(seen.size()) != n)
      unrecognized("the induced graph is disconnected");
  }

  std::vector<Generator> branch, leaves;
  for (const Generator& v : ig.verts) {
    int d = ig.degree(v);
    if (d >= 4) unrecognized("vertex " + v.render() + " has degree " + std::to_string(d));
    if (d == 3) branch.push_back(v);
    if (d <= 1) leaves.push_back(v);
  }
  if (branch.size() >= 2) unrecognized("two branching vertices");
  if (fours.size() >= 2) unrecognized("two edges labeled 4");

  if (!fours.empty()) {
    if (!branch.empty()) unrecognized("a label-4 edge together with a fork");
    auto [p, q] = fours.front();
    // the 4-edge must sit at an end of the path
    Generator tip, next;
    if (ig.degree(p) == 1) {
      tip = p;
      next = q;
    } else if (ig.degree(q) == 1) {
      tip = q;
      next = p;
    } else {
      unrecognized("the label-4 edge is interior to the path");
    }
    if (n == 2 && render_less(q, p)) {
      tip = q;  // rank 2 is symmetric; order by name
      next = p;
    }
    std::vector<Generator> order{tip};
    if (!walk_arm(ig, tip, next, order)) unrecognized("branching path");
    if (static_cast<int>(order.size()) != n) unrecognized("disconnected pieces");
    for (size_t k = 2; k < order.size(); ++k) {
      // remaining labels must be 3
      for (const auto& [u, lab] : ig.adj.at(order[k]))
        if (lab != 3) unrecognized("second high label on the path");
    }
    type.family = Family::B;
    type.gens = order;
    return type;
  }

  if (!branch.empty()) {
    Generator v = branch.front();
    std::vector<std::vector<Generator>> arms;
    for (const auto& [u, lab] : ig.adj.at(v)) {
      std::vector<Generator> arm;
      if (!walk_arm(ig, v, u, arm)) unrecognized("two branching vertices");
      arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return render_less(x[0], y[0]);
    });
    std::vector<size_t> shape;
    for (const auto& a : arms) shape.push_back(a.size());

    if (shape[0] == 1 && shape[1] == 1) {
      // fork family: two single-vertex prongs, one tail of any length
      type.family = Family::D;
      type.gens = {arms[0][0], arms[1][0]};
      if (!render_less(type.gens[0], type.gens[1]))
        std::swap(type.gens[0], type.gens[1]);
      type.gens.push_back(v);
      type.gens.insert(type.gens.end(), arms[2].begin(), arms[2].end());
      return type;
    }
    if (shape == std::vector<size_t>{1, 2, 2}) {
      const auto& armA =
          render_less(arms[1].back(), arms[2].back()) ? arms[1] : arms[2];
      const auto& armB =
          render_less(arms[1].back(), arms[2].back()) ? arms[2] : arms[1];
      type.family = Family::E6;
      type.gens = {armA[1], armA[0], v, armB[0], armB[1], arms[0][0]};
      return type;
    }
    if (shape == std::vector<size_t>{1, 2, 3}) {
      type.family = Family::E7;
      type.gens = {arms[2][2], arms[2][1], arms[2][0], v,
                   arms[1][0], arms[1][1], arms[0][0]};
      return type;
    }
    unrecognized("fork arms of sizes " + std::to_string(shape[0]) + "," +
                 std::to_string(shape[1]) + "," + std::to_string(shape[2]));
  }

  // plain path
  if (leaves.size() != 2) unrecognized("not a path");
  Generator start = render_less(leaves[0], leaves[1]) ? leaves[0] : leaves[1];
  std::vector<Generator> order;
  if (!walk_arm(ig, start, start, order)) unrecognized("branching path");
  if (static_cast<int>(order.size()) != n) unrecognized("disconnected pieces");
  type.family = Family::A;
  type.gens = order;
  return type;
}

void validate_parabolic(const ArtinGraph& g, const ParabolicType& type) {
  if (static_cast<int>(type.gens.size()) != type.rank)
    throw Error("type lists " + std::to_string(type.gens.size()) +
                " generators for rank " + std::to_string(type.rank));
  for (int i = 0; i < type.rank; ++i)
    for (int j = i + 1; j < type.rank; ++j) {
      int want = family_label(type.family, type.rank, i, j);
      int have = edge_label(g, type.gens[static_cast<size_t>(i)],
                            type.gens[static_cast<size_t>(j)]);
      if (want != have)
        throw Error("label mismatch at (" +
                    type.gens[static_cast<size_t>(i)].render() + "," +
                    type.gens[static_cast<size_t>(j)].render() + "): diagram needs " +
                    std::to_string(want) + ", graph has " + std::to_string(have));
    }
}

std::string delta_mode_name(DeltaMode mode) {
  return mode == DeltaMode::paper_literal ? "paper_literal"
                                          : "homogeneity_corrected";
}

int delta_run_exponent(Family f, int rank, int m, DeltaMode mode) {
  if (m <= 0) throw Error("fundamental-element power must be positive");
  if (rank < 1) throw Error("rank must be positive");
  switch (f) {
    case Family::A:
      if (m % 2 != 0)
        throw Error("odd powers in family A have no run expansion");
      if (mode == DeltaMode::paper_literal && rank == 2 && m == 4) return 8;
      return (m / 2) * (rank + 1);
    case Family::B:
      if (rank < 2) throw Error("family B needs rank >= 2");
      return m * rank;
    case Family::D:
      if (rank < 3) throw Error("family D needs rank >= 3");
      if (rank % 2 == 1 && m % 2 != 0)
        throw Error("odd powers at odd fork rank have no run expansion");
      return m * (rank - 1);
    case Family::E6:
      if (rank != 6) throw Error("E6 has rank 6");
      if (m % 2 != 0) throw Error("odd powers in E6 have no run expansion");
      return 6 * m;
    case Family::E7:
      if (rank != 7) throw Error("E7 has rank 7");
      return (mode == DeltaMode::paper_literal ? 15 : 9) * m;
  }
  throw Error("unknown family");
}

Word delta_power_word(const ParabolicType& type, int m, DeltaMode mode) {
  int l = type.rank;
  if (static_cast<int>(type.gens.size()) != l)
    throw Error("type lists " + std::to_string(type.gens.size()) +
                " generators for rank " + std::to_string(l));
  {
    std::set<Generator, GenOrder> dedup(type.gens.begin(), type.gens.end());
    if (static_cast<int>(dedup.size()) != l)
      throw Error("type repeats a generator");
  }
  if (type.family == Family::A && m == 1) {
    // triangular product (x_1...x_l)(x_1...x_{l-1})...(x_1)
    Word w;
    for (int block = l; block >= 1; --block)
      for (int i = 0; i < block; ++i)
        w.push_back(lit(type.gens[static_cast<size_t>(i)]));
    return w;
  }
  int k = delta_run_exponent(type.family, l, m, mode);
  Word run;
  for (const Generator& x : type.gens) run.push_back(lit(x));
  return power(run, k);
}

ArtinGraph family_graph(Family f, int rank) {
  if (rank < 1 || (f == Family::B && rank < 2) || (f == Family::D && rank < 3) ||
      (f == Family::E6 && rank != 6) || (f == Family::E7 && rank != 7))
    throw Error("unsupported family/rank for a diagram graph");
  ArtinGraph g;
  for (int i = 1; i <= rank; ++i)
    g.vertices.push_back(Generator::abstract("x", std::nullopt, i));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      int m = family_label(f, rank, i, j);
      if (m >= 3)
        g.edges.push_back({g.vertices[static_cast<size_t>(i)],
                           g.vertices[static_cast<size_t>(j)], m});
    }
  return g;
}

ParabolicType family_type(Family f, int rank) {
  ParabolicType t;
  t.family = f;
  t.rank = rank;
  t.gens = family_graph(f, rank).vertices;
  return t;
}

nlohmann::json artin_graph_to_json(const ArtinGraph& g) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Generator& v : g.vertices) verts.push_back(v.render());
  nlohmann::json edges = nlohmann::json::array();
  for (const ArtinEdge& e : g.edges)
    edges.push_back({e.a.render(), e.b.render(), e.label});
  return {{"vertices", verts}, {"edges", edges}};
}

ArtinGraph artin_graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error("graph JSON needs 'vertices' and 'edges'");
  ArtinGraph g;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw Error("graph vertex must be a string");
    g.vertices.push_back(Generator::parse(v.get<std::string>()));
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() ||
        !e[1].is_string() || !e[2].is_number_integer())
      throw Error("graph edge must be [name, name, label]");
    g.edges.push_back({Generator::parse(e[0].get<std::string>()),
                       Generator::parse(e[1].get<std::string>()),
                       e[2].get<int>()});
  }
  validate_graph(g);
  return g;
}

}  // namespace agt
