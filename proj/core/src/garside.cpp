#include "agt/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace agt {

namespace {

std::vector<int32_t> invert_perm(const std::vector<int32_t>& p) {
  std::vector<int32_t> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[static_cast<size_t>(p[i])] = static_cast<int32_t>(i);
  return q;
}

// Map each generator of the type to its simple index; strict on arity.
std::map<Generator, int, GenOrder> simple_index_map(const ParabolicType& type) {
  if (static_cast<int>(type.gens.size()) != type.rank)
    throw Error("type has " + std::to_string(type.gens.size()) +
                " generators but rank " + std::to_string(type.rank));
  std::map<Generator, int, GenOrder> m;
  for (int k = 0; k < type.rank; ++k) {
    auto [it, inserted] = m.emplace(type.gens[static_cast<size_t>(k)], k);
    if (!inserted)
      throw Error("type repeats generator '" +
                  type.gens[static_cast<size_t>(k)].render() + "'");
  }
  return m;
}

int simple_of_letter(const std::map<Generator, int, GenOrder>& m,
                     const Letter& l) {
  auto it = m.find(l.gen);
  if (it == m.end())
    throw Error("letter '" + l.gen.render() + "' is not a generator of the type");
  return it->second;
}

}  // namespace

CoxeterElement coxeter_identity(const RootSystem& rs) {
  CoxeterElement e;
  e.rs = &rs;
  e.act.resize(rs.roots.size());
  std::iota(e.act.begin(), e.act.end(), 0);
  e.inv = e.act;
  return e;
}

CoxeterElement coxeter_simple(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank) throw Error("simple index out of range");
  CoxeterElement e;
  e.rs = &rs;
  e.act = rs.simple_action[static_cast<size_t>(i)];
  e.inv = e.act;  // reflections are involutions
  return e;
}

CoxeterElement coxeter_mult(const CoxeterElement& a, const CoxeterElement& b) {
  if (a.rs != b.rs) throw Error("elements of different root systems");
  CoxeterElement c;
  c.rs = a.rs;
  c.act.resize(a.act.size());
  for (size_t r = 0; r < a.act.size(); ++r)
    c.act[r] = a.act[static_cast<size_t>(b.act[r])];
  c.inv.resize(a.inv.size());
  for (size_t r = 0; r < a.inv.size(); ++r)
    c.inv[r] = b.inv[static_cast<size_t>(a.inv[r])];
  return c;
}

CoxeterElement coxeter_inverse(const CoxeterElement& a) {
  CoxeterElement c;
  c.rs = a.rs;
  c.act = a.inv;
  c.inv = a.act;
  return c;
}

int coxeter_length(const CoxeterElement& a) {
  int n_pos = a.rs->n_pos;
  int len = 0;
  for (int r = 0; r < n_pos; ++r)
    if (a.act[static_cast<size_t>(r)] >= n_pos) ++len;
  return len;
}

bool coxeter_is_identity(const CoxeterElement& a) {
  for (size_t r = 0; r < a.act.size(); ++r)
    if (a.act[r] != static_cast<int32_t>(r)) return false;
  return true;
}

bool coxeter_is_longest(const CoxeterElement& a) { return a.act == a.rs->w0; }

bool right_descent(const CoxeterElement& a, int i) {
  // a * s_i shorter  <=>  a(alpha_i) < 0
  return a.act[static_cast<size_t>(i)] >= a.rs->n_pos;
}

bool left_descent(const CoxeterElement& a, int i) {
  // s_i * a shorter  <=>  a^{-1}(alpha_i) < 0
  return a.inv[static_cast<size_t>(i)] >= a.rs->n_pos;
}

std::vector<int> reduced_word_of(const CoxeterElement& a) {
  std::vector<int> word;
  CoxeterElement v = a;
  for (;;) {
    int j = -1;
    for (int i = 0; i < v.rs->rank; ++i)
      if (left_descent(v, i)) {
        j = i;
        break;
      }
    if (j < 0) break;
    word.push_back(j);
    v = coxeter_mult(coxeter_simple(*v.rs, j), v);
  }
  if (!coxeter_is_identity(v)) throw Error("descent stripping did not terminate at 1");
  return word;
}

CoxeterElement element_of_simple_word(const RootSystem& rs,
                                      const std::vector<int>& word) {
  CoxeterElement e = coxeter_identity(rs);
  for (int i : word) e = coxeter_mult(e, coxeter_simple(rs, i));
  return e;
}

std::vector<int> longest_word(const RootSystem& rs) {
  CoxeterElement w;
  w.rs = &rs;
  w.act = rs.w0;
  w.inv = invert_perm(rs.w0);
  return reduced_word_of(w);
}

int coxeter_m(const RootSystem& rs, int i, int j) {
  if (i == j) return 1;
  CoxeterElement p =
      coxeter_mult(coxeter_simple(rs, i), coxeter_simple(rs, j));
  CoxeterElement acc = p;
  int order = 1;
  while (!coxeter_is_identity(acc)) {
    acc = coxeter_mult(acc, p);
    ++order;
    if (order > 64) throw Error("runaway order computation");
  }
  return order;
}

CoxeterElement word_to_element(const ParabolicType& type, const Word& w) {
  const RootSystem& rs = root_system(type.family, type.rank);
  auto m = simple_index_map(type);
  CoxeterElement e = coxeter_identity(rs);
  for (const Letter& l : w)
    e = coxeter_mult(e, coxeter_simple(rs, simple_of_letter(m, l)));
  return e;
}

GarsideForm normal_form(const ParabolicType& type, const Word& w) {
  const RootSystem& rs = root_system(type.family, type.rank);
  auto m = simple_index_map(type);

  // Phase 1: eliminate inverse letters. Each x_i^{-1} becomes
  // delta^{-1} * (delta * x_i^{-1}), where delta * x_i^{-1} is the positive
  // lift of w0*s_i; the extracted delta^{-1} commutes leftward past the
  // letters already emitted by twisting them with the diagram automorphism
  // tau. Instead of rewriting in place, each emitted letter carries the
  // number of extractions seen so far; tau is an involution, so the final
  // letter is the stored one twisted (total - stored) mod 2 times.
  int delta_power = 0;
  int extractions = 0;
  std::vector<std::pair<int, int>> marked;  // (simple index, extraction count)
  for (const Letter& l : w) {
    int i = simple_of_letter(m, l);
    if (l.sign > 0) {
      marked.emplace_back(i, extractions);
    } else {
      delta_power -= 1;
      extractions += 1;
      for (int j : rs.w0_times_s[static_cast<size_t>(i)])
        marked.emplace_back(j, extractions);
    }
  }
  std::vector<int> positive;
  positive.reserve(marked.size());
  for (auto [i, t] : marked) {
    int flips = (extractions - t) % 2;
    positive.push_back(flips ? rs.tau[static_cast<size_t>(i)] : i);
  }

  // Phase 2: left-weight the positive word. Start with one singleton factor
  // per letter and, until stable, push every transferable simple reflection
  // from each factor into its left neighbor.
  std::vector<CoxeterElement> factors;
  factors.reserve(positive.size());
  for (int i : positive) factors.push_back(coxeter_simple(rs, i));

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < factors.size(); ++k) {
      CoxeterElement& s = factors[k];
      CoxeterElement& t = factors[k + 1];
      for (;;) {
        int r = -1;
        for (int i = 0; i < rs.rank; ++i)
          if (!right_descent(s, i) && left_descent(t, i)) {
            r = i;
            break;
          }
        if (r < 0) break;
        CoxeterElement sr = coxeter_simple(rs, r);
        s = coxeter_mult(s, sr);
        t = coxeter_mult(sr, t);
        changed = true;
      }
    }
    std::erase_if(factors, [](const CoxeterElement& f) {
      return coxeter_is_identity(f);
    });
  }

  // Collect leading longest-element factors into the delta power. After
  // left-weighting these form a prefix: a longest factor can only follow
  // another longest factor.
  size_t lead = 0;
  while (lead < factors.size() && coxeter_is_longest(factors[lead])) ++lead;
  delta_power += static_cast<int>(lead);

  GarsideForm form;
  form.family = type.family;
  form.rank = type.rank;
  form.delta_power = delta_power;
  for (size_t k = lead; k < factors.size(); ++k) {
    if (coxeter_is_longest(factors[k]))
      throw Error("longest factor after a proper one; form not left-weighted");
    form.factors.push_back(reduced_word_of(factors[k]));
  }
  return form;
}

bool garside_equal(const ParabolicType& type, const Word& a, const Word& b) {
  return normal_form(type, a) == normal_form(type, b);
}

int garside_letter_size(const GarsideForm& f) {
  int total = std::abs(f.delta_power) * positive_root_count(f.family, f.rank);
  for (const auto& w : f.factors) total += static_cast<int>(w.size());
  return total;
}

std::string render_garside(const GarsideForm& f,
                           const std::vector<Generator>* names) {
  auto name = [&](int i) {
    if (names && i >= 0 && i < static_cast<int>(names->size()))
      return (*names)[static_cast<size_t>(i)].render();
    return "s" + std::to_string(i + 1);
  };
  std::ostringstream out;
  bool first = true;
  if (f.delta_power != 0) {
    out << "D";
    if (f.delta_power != 1) out << "^" << f.delta_power;
    first = false;
  }
  for (const auto& w : f.factors) {
    if (!first) out << " . ";
    first = false;
    out << "(";
    for (size_t k = 0; k < w.size(); ++k) {
      if (k) out << " ";
      out << name(w[k]);
    }
    out << ")";
  }
  if (first) out << "1";
  return out.str();
}

}  // namespace agt
