#include "agt/compose.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace agt {

namespace {

std::set<Generator, GenOrder> gen_set(const std::vector<Generator>& gens) {
  return {gens.begin(), gens.end()};
}

void check_letters(const Word& w, const std::set<Generator, GenOrder>& allowed,
                   const std::string& what) {
  for (const Letter& l : w)
    if (allowed.count(l.gen) == 0)
      throw Error(what + " uses letter '" + l.gen.render() +
                  "' outside the target alphabet");
}

std::string unique_tag(std::string base, std::set<std::string>& used) {
  std::string tag = base;
  int k = 2;
  while (!used.insert(tag).second) tag = base + "." + std::to_string(k++);
  return tag;
}

}  // namespace

Presentation compose_extension(const Presentation& kernel,
                               const Presentation& quotient,
                               const LiftTable& lift, const ConjTable& conj) {
  auto kgens = gen_set(kernel.generators);
  for (const Generator& h : quotient.generators)
    if (kgens.count(h) > 0)
      throw Error("alphabet clash: generator '" + h.render() +
                  "' appears in both factors");

  for (const Relation& r : quotient.relations)
    if (lift.find(r.tag) == lift.end())
      throw Error("missing lift for relation '" + r.tag + "'");
  for (const Generator& h : quotient.generators)
    for (const Generator& k : kernel.generators)
      if (conj.find({h, k}) == conj.end())
        throw Error("missing conjugation entry for (" + h.render() + "," +
                    k.render() + ")");

  Presentation out;
  out.generators = kernel.generators;
  out.generators.insert(out.generators.end(), quotient.generators.begin(),
                        quotient.generators.end());

  std::set<std::string> used;
  for (const Relation& r : kernel.relations)
    out.relations.push_back(
        Relation{unique_tag(r.tag, used), r.lhs, r.rhs});

  for (const Relation& r : quotient.relations) {
    const Word& w = lift.at(r.tag);
    check_letters(w, kgens, "lift word for '" + r.tag + "'");
    out.relations.push_back(Relation{unique_tag(r.tag, used), relator_of(r), w});
  }

  for (const Generator& h : quotient.generators)
    for (const Generator& k : kernel.generators) {
      const Word& v = conj.at({h, k});
      check_letters(v, kgens,
                    "conjugation word for (" + h.render() + "," + k.render() + ")");
      Word lhs{lit(h), lit(k), lit(h, -1)};
      out.relations.push_back(Relation{
          unique_tag("conj(" + h.render() + "," + k.render() + ")", used),
          lhs, v});
    }

  out.meta = {{"kind", "extension"},
              {"kernel_meta", kernel.meta},
              {"quotient_meta", quotient.meta}};
  return out;
}

Presentation graph_of_groups_pi1(const GraphOfGroups& g) {
  const int nv = static_cast<int>(g.vertices.size());
  if (nv == 0) throw Error("graph of groups needs at least one vertex");

  std::set<Generator, GenOrder> all_gens;
  std::vector<std::set<Generator, GenOrder>> vgens;
  for (const Presentation& v : g.vertices) {
    vgens.push_back(gen_set(v.generators));
    for (const Generator& x : v.generators) {
      if (x.kind == GenKind::Stable)
        throw Error("vertex groups may not use stable letters ('" +
                    x.render() + "')");
      if (!all_gens.insert(x).second)
        throw Error("vertex alphabets overlap at '" + x.render() + "'");
    }
  }

  for (size_t k = 0; k < g.edges.size(); ++k) {
    const GGEdge& e = g.edges[k];
    if (e.from < 0 || e.from >= nv || e.to < 0 || e.to >= nv)
      throw Error("edge " + std::to_string(k) + " has a dangling endpoint");
    for (const Generator& x : e.edge_generators) {
      auto it0 = e.image_from.find(x);
      auto it1 = e.image_to.find(x);
      if (it0 == e.image_from.end() || it1 == e.image_to.end())
        throw Error("edge " + std::to_string(k) + " lacks images for '" +
                    x.render() + "'");
      check_letters(it0->second, vgens[static_cast<size_t>(e.from)],
                    "edge " + std::to_string(k) + " start image of '" +
                        x.render() + "'");
      check_letters(it1->second, vgens[static_cast<size_t>(e.to)],
                    "edge " + std::to_string(k) + " end image of '" +
                        x.render() + "'");
    }
  }

  // spanning tree: right size, valid indices, no repeats, acyclic + connected
  std::set<size_t> tree(g.spanning_tree.begin(), g.spanning_tree.end());
  if (tree.size() != g.spanning_tree.size())
    throw Error("spanning tree lists an edge twice");
  if (static_cast<int>(tree.size()) != nv - 1)
    throw Error("spanning tree has " + std::to_string(tree.size()) +
                " edges for " + std::to_string(nv) + " vertices");
  std::vector<int> parent(static_cast<size_t>(nv));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  for (size_t k : tree) {
    if (k >= g.edges.size())
      throw Error("spanning tree refers to missing edge " + std::to_string(k));
    int a = find(g.edges[k].from), b = find(g.edges[k].to);
    if (a == b) throw Error("spanning tree contains a cycle");
    parent[static_cast<size_t>(a)] = b;
  }

  Presentation out;
  std::set<std::string> used;
  for (int i = 0; i < nv; ++i) {
    const Presentation& v = g.vertices[static_cast<size_t>(i)];
    out.generators.insert(out.generators.end(), v.generators.begin(),
                          v.generators.end());
    for (const Relation& r : v.relations)
      out.relations.push_back(Relation{
          unique_tag("v" + std::to_string(i) + ":" + r.tag, used), r.lhs,
          r.rhs});
  }

  std::vector<size_t> stable_edges;
  for (size_t k = 0; k < g.edges.size(); ++k)
    if (tree.count(k) == 0) {
      stable_edges.push_back(k);
      out.generators.push_back(Generator::stable(static_cast<int>(k)));
    }

  for (size_t k = 0; k < g.edges.size(); ++k) {
    const GGEdge& e = g.edges[k];
    bool in_tree = tree.count(k) > 0;
    for (const Generator& x : e.edge_generators) {
      Word lhs = e.image_from.at(x);
      if (!in_tree) {
        Generator y = Generator::stable(static_cast<int>(k));
        Word conj{lit(y)};
        conj.insert(conj.end(), lhs.begin(), lhs.end());
        conj.push_back(lit(y, -1));
        lhs = conj;
      }
      out.relations.push_back(Relation{
          unique_tag("e" + std::to_string(k) + ":" + x.render(), used), lhs,
          e.image_to.at(x)});
    }
  }

  out.meta = {{"kind", "graph_of_groups_pi1"},
              {"stable_edges", stable_edges}};
  return out;
}

Presentation brown_quotient(const Presentation& p) {
  Presentation out;
  for (const Generator& x : p.generators)
    if (x.kind != GenKind::Stable) out.generators.push_back(x);

  auto strip = [](const Word& w) {
    Word r;
    for (const Letter& l : w)
      if (l.gen.kind != GenKind::Stable) r.push_back(l);
    return r;
  };
  for (const Relation& r : p.relations)
    out.relations.push_back(Relation{r.tag, strip(r.lhs), strip(r.rhs)});

  out.meta = p.meta;
  out.meta["brown_quotient"] = true;
  return out;
}

Presentation tietze_add_consequence(
    const Presentation& p, const Word& w,
    const std::optional<std::string>& proof_hint) {
  check_letters(w, gen_set(p.generators), "tietze consequence");
  std::set<std::string> used;
  for (const Relation& r : p.relations) used.insert(r.tag);
  Presentation out = p;
  std::string tag = unique_tag("tietze", used);
  out.relations.push_back(Relation{tag, w, Word{}});
  if (proof_hint) out.meta["tietze_hints"][tag] = *proof_hint;
  return out;
}

}  // namespace agt
