#include "agt/presentation.hpp"

#include <set>

namespace agt {

StructuralReport structural_check(const Presentation& p) {
  StructuralReport rep;
  std::set<std::string> declared;
  for (const Generator& g : p.generators) {
    if (!declared.insert(g.render()).second)
      rep.issues.push_back({"duplicate_generator", g.render(), true});
  }

  std::set<std::string> tags;
  std::set<std::string> used;
  for (const Relation& r : p.relations) {
    if (!tags.insert(r.tag).second)
      rep.issues.push_back({"duplicate_tag", r.tag, true});
    for (const Word* side : {&r.lhs, &r.rhs}) {
      for (const Letter& l : *side) {
        std::string name = l.gen.render();
        used.insert(name);
        if (declared.count(name) == 0)
          rep.issues.push_back(
              {"unknown_letter", name + " in relation " + r.tag, true});
      }
    }
  }

  for (const Generator& g : p.generators)
    if (used.count(g.render()) == 0)
      rep.issues.push_back({"unused_generator", g.render(), false});

  for (const auto& issue : rep.issues)
    if (issue.fatal) rep.ok = false;
  return rep;
}

nlohmann::json structural_report_json(const StructuralReport& r) {
  nlohmann::json issues = nlohmann::json::array();
  for (const auto& i : r.issues)
    issues.push_back({{"kind", i.kind}, {"detail", i.detail}, {"fatal", i.fatal}});
  return {{"ok", r.ok}, {"issues", issues}};
}

bool has_generator(const Presentation& p, const Generator& g) {
  for (const Generator& h : p.generators)
    if (h == g) return true;
  return false;
}

Word relator_of(const Relation& r) { return concat(r.lhs, inverse(r.rhs)); }

size_t count_kind(const Presentation& p, GenKind k) {
  size_t n = 0;
  for (const Generator& g : p.generators)
    if (g.kind == k) ++n;
  return n;
}

}  // namespace agt
