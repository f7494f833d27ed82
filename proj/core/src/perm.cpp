#include "agt/perm.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace agt {

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.img.resize(degree);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 0 || b < 0 || a >= degree || b >= degree)
    throw Error("transposition points out of range");
  Permutation p = identity(degree);
  std::swap(p.img[a], p.img[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(img.size(), false);
  bool any = false;
  for (size_t start = 0; start < img.size(); ++start) {
    if (seen[start] || img[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) os << ' ';
      os << p;
      first = false;
      p = static_cast<size_t>(img[p]);
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation compose(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree())
    throw Error("permutation degree mismatch");
  Permutation out;
  out.img.resize(first.img.size());
  for (size_t i = 0; i < first.img.size(); ++i)
    out.img[i] = then.img[static_cast<size_t>(first.img[i])];
  return out;
}

Permutation perm_inverse(const Permutation& p) {
  Permutation out;
  out.img.resize(p.img.size());
  for (size_t i = 0; i < p.img.size(); ++i)
    out.img[static_cast<size_t>(p.img[i])] = static_cast<int>(i);
  return out;
}

Permutation perm_power(const Permutation& p, int k) {
  Permutation base = k < 0 ? perm_inverse(p) : p;
  int reps = k < 0 ? -k : k;
  Permutation acc = Permutation::identity(p.degree());
  for (int i = 0; i < reps; ++i) acc = compose(acc, base);
  return acc;
}

Permutation evaluate_word(const Word& w, const PermAssignment& assignment,
                          int degree) {
  Permutation acc = Permutation::identity(degree);
  std::set<std::string> missing;
  for (const Letter& l : w)
    if (assignment.find(l.gen) == assignment.end())
      missing.insert(l.gen.render());
  if (!missing.empty()) {
    std::string msg = "evaluate_word: unassigned generators:";
    for (const auto& m : missing) msg += " " + m;
    throw Error(msg);
  }
  for (const Letter& l : w) {
    const Permutation& p = assignment.at(l.gen);
    if (p.degree() != degree) throw Error("evaluate_word: degree mismatch");
    acc = compose(acc, l.sign > 0 ? p : perm_inverse(p));
  }
  return acc;
}

}  // namespace agt
