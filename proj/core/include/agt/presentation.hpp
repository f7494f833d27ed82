#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "agt/words.hpp"

namespace agt {

struct Relation {
  std::string tag;
  Word lhs;
  Word rhs;
  bool operator==(const Relation&) const = default;
};

// A finite presentation: ordered generators, tagged relations, and a meta
// object carrying builder provenance (parameters, guard decisions, recorded
// fundamental-element expansions). Relations keep whatever word shape the
// builder emitted, cancellations included; reduced views are computed on
// demand.
struct Presentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  nlohmann::json meta = nlohmann::json::object();
};

struct StructuralIssue {
  std::string kind;    // "unknown_letter", "duplicate_tag", "unused_generator",
                       // "duplicate_generator"
  std::string detail;
  bool fatal = true;
};

struct StructuralReport {
  bool ok = true;  // no fatal issues
  std::vector<StructuralIssue> issues;
};

// Checks alphabet closure (every letter of every relation is a declared
// generator), tag uniqueness, generator-list duplicates, and flags unused
// generators (non-fatal, since free factors are legitimate).
StructuralReport structural_check(const Presentation& p);

nlohmann::json structural_report_json(const StructuralReport& r);

bool has_generator(const Presentation& p, const Generator& g);

// Relation word as a single relator lhs * rhs^-1 (unreduced).
Word relator_of(const Relation& r);

// Counts by generator kind, e.g. for twist/swap census checks.
size_t count_kind(const Presentation& p, GenKind k);

}  // namespace agt
