#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "agt/presentation.hpp"

namespace agt {

// Wire format for words: array of [generator string, nonzero exponent]
// pairs. Runs of one generator fold into a single pair; adjacent pairs may
// repeat a generator when the unreduced word alternates signs.
nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

// Presentation wire format:
//   {"generators": [...], "meta": {...}, "relations": [{"lhs","rhs","tag"}]}
// Generators are emitted sorted by their rendered name; relations keep
// builder order. Serialization is deterministic and round trips byte for
// byte.
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

std::string presentation_to_string(const Presentation& p);
Presentation presentation_from_string(const std::string& text);

Presentation load_presentation_file(const std::string& path);
void save_presentation_file(const Presentation& p, const std::string& path);

}  // namespace agt
