#pragma once

#include <string>

#include "agt/presentation.hpp"

namespace agt {

// Plain-text listing: comment header, the generator alphabet, and one
// relation per line in equality form ("tag: lhs = rhs", "1" for an empty
// side). Deterministic byte for byte.
std::string render_presentation_text(const Presentation& p);

// Free-group-quotient declaration in a GAP-flavored syntax:
//   F := FreeGroup( "a", ... ); AssignGeneratorVariables( F );
//   rels := [ relator, ... ];   G := F / rels;
std::string render_presentation_gap(const Presentation& p);

// Free-group-quotient declaration in a Magma-flavored syntax:
//   G< a, ... > := Group< a, ... | relator, ... >;
std::string render_presentation_magma(const Presentation& p);

// Identifier a generator gets in the CAS dialects: the rendered name with
// dots replaced by underscores ("b.3.1" -> "b_3_1").
std::string cas_identifier(const Generator& g);

struct CasReport {
  bool ok = true;
  std::string message;  // first failure, empty when ok
};

// Static grammar check of an exported declaration, dialect "gap" or
// "magma": declaration shape, balanced punctuation, identifier hygiene,
// every relator letter drawn from the declared alphabet, and no zero
// exponents. Parses the text; never invokes an external system.
CasReport check_cas_export(const std::string& dialect,
                           const std::string& text);

}  // namespace agt
