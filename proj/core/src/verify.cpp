#include "agt/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "agt/artin.hpp"
#include "agt/garside.hpp"

namespace agt {

std::string render_abelian(const Abelianization& a) {
  std::vector<std::string> parts;
  if (a.free_rank == 1) parts.push_back("Z");
  else if (a.free_rank > 1)
    parts.push_back("Z^" + std::to_string(a.free_rank));
  for (const BigInt& t : a.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "trivial";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

// --------------------------------------------------------------------------
// Boundary-permutation evaluation.
// --------------------------------------------------------------------------

PermAssignment boundary_assignment(const std::vector<Generator>& gens,
                                   int degree) {
  PermAssignment asg;
  for (const Generator& g : gens) {
    if (g.kind == GenKind::Swap)
      asg[g] = Permutation::transposition(degree, *g.position - 1, *g.position);
    else
      asg[g] = Permutation::identity(degree);
  }
  return asg;
}

PermReport perm_eval(const Presentation& p, const PermAssignment& assignment,
                     int degree) {
  PermReport out;
  for (const Relation& rel : p.relations) {
    Permutation lhs = evaluate_word(rel.lhs, assignment, degree);
    Permutation rhs = evaluate_word(rel.rhs, assignment, degree);
    ++out.checked;
    if (!(lhs == rhs))
      out.violations.push_back({rel.tag, -1, lhs.cycles(), rhs.cycles()});
  }
  return out;
}

PermReport perm_eval_per_vertex(const Presentation& p) {
  if (!p.meta.contains("vertices"))
    throw Error("per-vertex evaluation needs a vertex table in meta");
  std::map<int, int> degree_of;
  for (const auto& entry : p.meta.at("vertices"))
    degree_of[entry.at("vertex").get<int>()] =
        entry.at("boundary").get<int>();

  std::map<int, PermAssignment> assignments;
  for (const Generator& g : p.generators) {
    if (!g.vertex) continue;
    auto it = degree_of.find(*g.vertex);
    if (it == degree_of.end()) continue;
    const int d = it->second;
    assignments[*g.vertex][g] =
        g.kind == GenKind::Swap
            ? Permutation::transposition(d, *g.position - 1, *g.position)
            : Permutation::identity(d);
  }

  PermReport out;
  for (const Relation& rel : p.relations) {
    std::vector<Generator> sup = word_support(concat(rel.lhs, rel.rhs));
    std::optional<int> vertex;
    bool local = !sup.empty();
    for (const Generator& g : sup) {
      if (!g.vertex) {
        local = false;
        break;
      }
      if (!vertex)
        vertex = *g.vertex;
      else if (*vertex != *g.vertex) {
        local = false;
        break;
      }
    }
    if (!local || degree_of.find(*vertex) == degree_of.end()) {
      ++out.skipped;
      continue;
    }
    const int d = degree_of[*vertex];
    const PermAssignment& asg = assignments[*vertex];
    Permutation lhs = evaluate_word(rel.lhs, asg, d);
    Permutation rhs = evaluate_word(rel.rhs, asg, d);
    ++out.checked;
    if (!(lhs == rhs))
      out.violations.push_back({rel.tag, *vertex, lhs.cycles(), rhs.cycles()});
  }
  return out;
}

PermReport perm_eval_builtin(const Presentation& p) {
  const std::string kind = p.meta.value("kind", "");
  if (kind == "b21") return perm_eval_per_vertex(p);
  int degree = 0;
  if (kind == "mapo" || kind == "capped")
    degree = p.meta.at("n").get<int>();
  else if (kind == "b1r")
    degree = p.meta.at("r").get<int>();
  else
    throw Error("no builtin boundary action for presentation kind '" + kind +
                "'");
  return perm_eval(p, boundary_assignment(p.generators, degree), degree);
}

// --------------------------------------------------------------------------
// Todd-Coxeter coset enumeration.
// --------------------------------------------------------------------------

namespace {

struct CosetTable {
  int ncols = 0;
  size_t max_cosets = 0;
  std::vector<std::vector<int32_t>> rows;
  std::vector<int32_t> rep;
  size_t live = 0;
  std::deque<std::pair<int32_t, int>> deductions;
  // rotations of every relator, indexed by their leading column
  std::vector<std::vector<std::vector<int>>> rot_by_col;

  static int inv_col(int c) { return c ^ 1; }

  int32_t find(int32_t a) {
    while (rep[a] != a) {
      rep[a] = rep[rep[a]];
      a = rep[a];
    }
    return a;
  }

  int32_t alloc() {
    if (rows.size() >= max_cosets)
      throw Error("coset enumeration exhausted after " +
                  std::to_string(max_cosets) + " cosets");
    rows.emplace_back(ncols, -1);
    rep.push_back(static_cast<int32_t>(rows.size() - 1));
    ++live;
    return static_cast<int32_t>(rows.size() - 1);
  }

  void coincidence(int32_t a, int32_t b) {
    std::deque<int32_t> dead;
    auto merge = [&](int32_t x, int32_t y) {
      x = find(x);
      y = find(y);
      if (x == y) return;
      if (y < x) std::swap(x, y);
      rep[y] = x;
      --live;
      dead.push_back(y);
    };
    merge(a, b);
    while (!dead.empty()) {
      int32_t e = dead.front();
      dead.pop_front();
      for (int c = 0; c < ncols; ++c) {
        int32_t f = rows[e][c];
        if (f < 0) continue;
        rows[e][c] = -1;
        if (rows[f][inv_col(c)] == e) rows[f][inv_col(c)] = -1;
        int32_t mu = find(e);
        int32_t nu = find(f);
        if (rows[mu][c] >= 0) {
          merge(nu, rows[mu][c]);
        } else if (rows[nu][inv_col(c)] >= 0) {
          merge(mu, rows[nu][inv_col(c)]);
        } else {
          rows[mu][c] = nu;
          rows[nu][inv_col(c)] = mu;
          deductions.emplace_back(mu, c);
        }
      }
    }
  }

  // closes the cyclic relator instance start --w--> start as far as the
  // table allows; a single gap becomes a deduction, a closed mismatch a
  // coincidence
  void scan(int32_t start, const std::vector<int>& w) {
    int32_t f = find(start);
    int32_t b = f;
    size_t i = 0;
    size_t j = w.size();
    while (i < j && rows[f][w[i]] >= 0) f = find(rows[f][w[i]]), ++i;
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i && rows[b][inv_col(w[j - 1])] >= 0)
      b = find(rows[b][inv_col(w[j - 1])]), --j;
    if (j == i) {
      if (f != b) coincidence(f, b);
    } else if (j == i + 1) {
      rows[f][w[i]] = b;
      rows[b][inv_col(w[i])] = f;
      deductions.emplace_back(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions.empty()) {
      auto [a, c] = deductions.front();
      deductions.pop_front();
      a = find(a);
      int32_t b = rows[a][c];
      if (b < 0) continue;  // edge superseded by a coincidence
      b = find(b);
      for (const auto& w : rot_by_col[static_cast<size_t>(c)]) scan(a, w);
      for (const auto& w : rot_by_col[static_cast<size_t>(inv_col(c))])
        scan(b, w);
    }
  }
};

}  // namespace

CosetResult todd_coxeter(const Presentation& p, size_t max_cosets) {
  if (max_cosets < 1) throw Error("max_cosets must be at least 1");
  std::map<Generator, int, GenOrder> index;
  for (const Generator& g : p.generators)
    index.emplace(g, static_cast<int>(index.size()));

  CosetTable t;
  t.ncols = static_cast<int>(2 * p.generators.size());
  t.max_cosets = max_cosets;
  t.rot_by_col.resize(static_cast<size_t>(t.ncols));

  for (const Relation& rel : p.relations) {
    Word w = reduce(relator_of(rel));
    while (w.size() >= 2 && w.front().gen == w.back().gen &&
           w.front().sign == -w.back().sign) {
      w.erase(w.begin());
      w.pop_back();
    }
    if (w.empty()) continue;
    std::vector<int> cols;
    cols.reserve(w.size());
    for (const Letter& l : w) {
      auto it = index.find(l.gen);
      if (it == index.end())
        throw Error("relation " + rel.tag + " uses undeclared letter " +
                    l.gen.render());
      cols.push_back(2 * it->second + (l.sign < 0 ? 1 : 0));
    }
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rot(cols.begin() + static_cast<long>(k), cols.end());
      rot.insert(rot.end(), cols.begin(), cols.begin() + static_cast<long>(k));
      t.rot_by_col[static_cast<size_t>(rot[0])].push_back(std::move(rot));
    }
  }

  t.alloc();  // coset of the trivial subgroup
  for (size_t a = 0; a < t.rows.size(); ++a) {
    if (t.find(static_cast<int32_t>(a)) != static_cast<int32_t>(a)) continue;
    for (int c = 0; c < t.ncols; ++c) {
      if (t.find(static_cast<int32_t>(a)) != static_cast<int32_t>(a)) break;
      if (t.rows[a][c] >= 0) continue;
      int32_t fresh = t.alloc();
      t.rows[a][c] = fresh;
      t.rows[fresh][CosetTable::inv_col(c)] = static_cast<int32_t>(a);
      t.deductions.emplace_back(static_cast<int32_t>(a), c);
      t.process_deductions();
    }
  }

  return CosetResult{t.live, t.rows.size()};
}

Presentation coxeter_quotient(Family f, int rank) {
  Presentation p = artin_presentation(family_graph(f, rank));
  for (const Generator& x : p.generators)
    p.relations.push_back(
        Relation{"sq." + x.render(), Word{lit(x), lit(x)}, Word{}});
  p.meta["kind"] = "coxeter_quotient";
  p.meta["family"] = family_name(f);
  p.meta["rank"] = rank;
  return p;
}

std::uint64_t coxeter_order_bfs(Family f, int rank) {
  const RootSystem& rs = root_system(f, rank);
  std::vector<CoxeterElement> gens;
  gens.reserve(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) gens.push_back(coxeter_simple(rs, i));

  std::set<std::vector<int32_t>> seen;
  std::deque<CoxeterElement> queue;
  CoxeterElement e = coxeter_identity(rs);
  seen.insert(e.act);
  queue.push_back(std::move(e));
  while (!queue.empty()) {
    CoxeterElement cur = std::move(queue.front());
    queue.pop_front();
    for (const CoxeterElement& s : gens) {
      CoxeterElement next = coxeter_mult(cur, s);
      if (seen.insert(next.act).second) queue.push_back(std::move(next));
    }
  }
  return seen.size();
}

// --------------------------------------------------------------------------
// Fundamental-element homogeneity audit.
// --------------------------------------------------------------------------

std::vector<DeltaDiscrepancy> delta_homogeneity_audit(const Presentation& p) {
  if (!p.meta.contains("delta_expansions"))
    throw Error(
        "presentation carries no fundamental-element expansion records");
  std::vector<DeltaDiscrepancy> out;
  for (const auto& rec : p.meta.at("delta_expansions")) {
    DeltaDiscrepancy d;
    d.tag = rec.at("tag").get<std::string>();
    d.side = rec.at("side").get<std::string>();
    d.family = family_from_name(rec.at("family").get<std::string>());
    d.rank = rec.at("rank").get<int>();
    d.m = rec.at("m").get<int>();
    d.letters = rec.at("letters").get<size_t>();
    d.expected = static_cast<size_t>(d.m) *
                 static_cast<size_t>(positive_root_count(d.family, d.rank));
    if (d.letters != d.expected) out.push_back(std::move(d));
  }
  return out;
}

// --------------------------------------------------------------------------
// Generator census check.
// --------------------------------------------------------------------------

CountReport verify_counts(const Presentation& p) {
  CountReport out;
  out.kind = p.meta.value("kind", "");
  out.twists = count_kind(p, GenKind::Twist);
  out.swaps = count_kind(p, GenKind::Swap);
  out.relations = p.relations.size();
  if (out.kind == "mapo" || out.kind == "capped") {
    const int g = p.meta.at("g").get<int>();
    const int n = p.meta.at("n").get<int>();
    if (out.kind == "mapo") {
      out.expected_twists = static_cast<size_t>(g == 1 ? n + 3 : 2 * g + 2 + n);
      out.expected_swaps = static_cast<size_t>(n - 1);
    } else {
      out.expected_twists = static_cast<size_t>(g == 1 ? 3 : 2 * g + 2);
      out.expected_swaps = 0;
    }
  } else if (out.kind == "b1r") {
    const int r = p.meta.at("r").get<int>();
    out.expected_twists = static_cast<size_t>(27 + 4 * r);
    out.expected_swaps = static_cast<size_t>(4 * r - 4);
  } else if (out.kind == "b21") {
    out.expected_twists = 93;
    out.expected_swaps = 21;
  } else {
    throw Error("no generator census for presentation kind '" + out.kind +
                "'");
  }
  return out;
}

}  // namespace agt
