#include "agt/formats.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "agt/words.hpp"

namespace agt {

namespace {

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// Relator as a CAS product: runs of one signed letter fold into name^k.
std::string render_product(const Word& w,
                           const std::map<Generator, std::string, GenOrder>&
                               names) {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j].gen == w[i].gen && w[j].sign == w[i].sign)
      ++j;
    const int exp = w[i].sign * static_cast<int>(j - i);
    if (!first) os << "*";
    os << names.at(w[i].gen);
    if (exp != 1) os << "^" << exp;
    first = false;
    i = j;
  }
  return os.str();
}

std::map<Generator, std::string, GenOrder> cas_names(const Presentation& p) {
  std::map<Generator, std::string, GenOrder> names;
  for (const Generator& g : p.generators) names.emplace(g, cas_identifier(g));
  return names;
}

// Meta scalars (strings, numbers, booleans) as "key=value" pairs in key
// order; containers are omitted from one-line headers.
std::string meta_scalars(const Presentation& p) {
  std::ostringstream os;
  for (const auto& [key, value] : p.meta.items()) {
    if (value.is_object() || value.is_array()) continue;
    os << " " << key << "=";
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
  }
  return os.str();
}

std::vector<Word> nonempty_relators(const Presentation& p) {
  std::vector<Word> out;
  for (const Relation& rel : p.relations) {
    Word r = relator_of(rel);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::string cas_identifier(const Generator& g) {
  std::string s = g.render();
  for (char& c : s)
    if (c == '.') c = '_';
  return s;
}

std::string render_presentation_text(const Presentation& p) {
  std::ostringstream os;
  os << "# presentation" << meta_scalars(p) << "\n";
  os << "# generators (" << p.generators.size() << ")\n";
  bool first = true;
  for (const Generator& g : p.generators) {
    if (!first) os << " ";
    os << g.render();
    first = false;
  }
  os << "\n";
  os << "# relations (" << p.relations.size() << ")\n";
  for (const Relation& r : p.relations)
    os << r.tag << ": " << render_word(r.lhs) << " = " << render_word(r.rhs)
       << "\n";
  return os.str();
}

std::string render_presentation_gap(const Presentation& p) {
  const auto names = cas_names(p);
  std::ostringstream os;
  os << "# free-group quotient" << meta_scalars(p) << "\n";
  os << "F := FreeGroup( ";
  bool first = true;
  for (const Generator& g : p.generators) {
    if (!first) os << ", ";
    os << "\"" << names.at(g) << "\"";
    first = false;
  }
  os << " );\n";
  os << "AssignGeneratorVariables( F );\n";
  os << "rels := [";
  const std::vector<Word> relators = nonempty_relators(p);
  for (size_t i = 0; i < relators.size(); ++i)
    os << (i == 0 ? "\n  " : ",\n  ") << render_product(relators[i], names);
  os << (relators.empty() ? "];\n" : "\n];\n");
  os << "G := F / rels;\n";
  return os.str();
}

std::string render_presentation_magma(const Presentation& p) {
  const auto names = cas_names(p);
  std::ostringstream os;
  os << "// free-group quotient" << meta_scalars(p) << "\n";
  std::ostringstream gens;
  bool first = true;
  for (const Generator& g : p.generators) {
    if (!first) gens << ", ";
    gens << names.at(g);
    first = false;
  }
  os << "G< " << gens.str() << " > := Group<\n";
  os << "  " << gens.str() << " |";
  const std::vector<Word> relators = nonempty_relators(p);
  for (size_t i = 0; i < relators.size(); ++i)
    os << (i == 0 ? "\n  " : ",\n  ") << render_product(relators[i], names);
  os << "\n>;\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Grammar checker for the CAS dialects.
// ---------------------------------------------------------------------------

namespace {

struct Tok {
  enum Kind { Ident, Number, Str, Punct, End } kind = End;
  std::string text;
  size_t pos = 0;
};

struct Lexer {
  const std::string& src;
  const std::string line_comment;  // "#" or "//"
  size_t i = 0;
  std::string error;

  Tok next() {
    while (i < src.size()) {
      if (std::isspace(static_cast<unsigned char>(src[i]))) {
        ++i;
        continue;
      }
      if (!line_comment.empty() &&
          src.compare(i, line_comment.size(), line_comment) == 0) {
        while (i < src.size() && src[i] != '\n') ++i;
        continue;
      }
      break;
    }
    if (i >= src.size()) return Tok{Tok::End, "", i};
    const size_t start = i;
    const char c = src[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) ||
              src[i] == '_'))
        ++i;
      return Tok{Tok::Ident, src.substr(start, i - start), start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[i])))
        ++i;
      return Tok{Tok::Number, src.substr(start, i - start), start};
    }
    if (c == '"') {
      ++i;
      while (i < src.size() && src[i] != '"') ++i;
      if (i >= src.size()) {
        error = "unterminated string literal";
        return Tok{Tok::End, "", start};
      }
      ++i;
      return Tok{Tok::Str, src.substr(start + 1, i - start - 2), start};
    }
    if (src.compare(i, 2, ":=") == 0) {
      i += 2;
      return Tok{Tok::Punct, ":=", start};
    }
    static const std::string singles = "()[]<>,|/*^;-";
    if (singles.find(c) != std::string::npos) {
      ++i;
      return Tok{Tok::Punct, std::string(1, c), start};
    }
    error = std::string("unexpected character '") + c + "'";
    return Tok{Tok::End, "", start};
  }
};

struct Parser {
  Lexer lex;
  Tok tok;
  CasReport report;

  explicit Parser(const std::string& src, const std::string& comment)
      : lex{src, comment} {
    tok = lex.next();
  }

  bool fail(const std::string& what) {
    if (report.ok) {
      report.ok = false;
      std::ostringstream os;
      os << what << " at offset " << tok.pos;
      if (!tok.text.empty()) os << " near '" << tok.text << "'";
      if (!lex.error.empty()) os << " (" << lex.error << ")";
      report.message = os.str();
    }
    return false;
  }

  void advance() { tok = lex.next(); }

  bool expect_punct(const std::string& s) {
    if (tok.kind != Tok::Punct || tok.text != s)
      return fail("expected '" + s + "'");
    advance();
    return true;
  }

  bool expect_ident(std::string* out = nullptr) {
    if (tok.kind != Tok::Ident) return fail("expected identifier");
    if (out) *out = tok.text;
    advance();
    return true;
  }

  bool expect_keyword(const std::string& kw) {
    if (tok.kind != Tok::Ident || tok.text != kw)
      return fail("expected '" + kw + "'");
    advance();
    return true;
  }

  bool at_punct(const std::string& s) const {
    return tok.kind == Tok::Punct && tok.text == s;
  }

  // factor := IDENT ["^" ["-"] NUMBER]; the identifier must be declared and
  // the exponent nonzero.
  bool parse_factor(const std::set<std::string>& declared) {
    std::string name;
    if (!expect_ident(&name)) return false;
    if (!declared.count(name))
      return fail("relator uses undeclared generator '" + name + "'");
    if (at_punct("^")) {
      advance();
      bool neg = false;
      if (at_punct("-")) {
        neg = true;
        advance();
      }
      if (tok.kind != Tok::Number) return fail("expected exponent");
      if (tok.text.find_first_not_of('0') == std::string::npos)
        return fail("zero exponent");
      (void)neg;
      advance();
    }
    return true;
  }

  bool parse_relator(const std::set<std::string>& declared) {
    if (!parse_factor(declared)) return false;
    while (at_punct("*")) {
      advance();
      if (!parse_factor(declared)) return false;
    }
    return true;
  }
};

CasReport check_gap(const std::string& text) {
  Parser p(text, "#");
  std::set<std::string> declared;
  std::string free_name, rels_name, name;

  // F := FreeGroup( "a", ... );
  if (!p.expect_ident(&free_name)) return p.report;
  if (!p.expect_punct(":=")) return p.report;
  if (!p.expect_keyword("FreeGroup")) return p.report;
  if (!p.expect_punct("(")) return p.report;
  while (true) {
    if (p.tok.kind != Tok::Str) {
      p.fail("expected quoted generator name");
      return p.report;
    }
    if (!is_ident(p.tok.text)) {
      p.fail("generator name '" + p.tok.text + "' is not an identifier");
      return p.report;
    }
    if (!declared.insert(p.tok.text).second) {
      p.fail("duplicate generator name '" + p.tok.text + "'");
      return p.report;
    }
    p.advance();
    if (p.at_punct(",")) {
      p.advance();
      continue;
    }
    break;
  }
  if (!p.expect_punct(")")) return p.report;
  if (!p.expect_punct(";")) return p.report;

  // AssignGeneratorVariables( F );
  if (!p.expect_keyword("AssignGeneratorVariables")) return p.report;
  if (!p.expect_punct("(")) return p.report;
  if (!p.expect_ident(&name)) return p.report;
  if (name != free_name) {
    p.fail("AssignGeneratorVariables must name the free group");
    return p.report;
  }
  if (!p.expect_punct(")")) return p.report;
  if (!p.expect_punct(";")) return p.report;

  // rels := [ relator, ... ];
  if (!p.expect_ident(&rels_name)) return p.report;
  if (!p.expect_punct(":=")) return p.report;
  if (!p.expect_punct("[")) return p.report;
  if (!p.at_punct("]")) {
    while (true) {
      if (!p.parse_relator(declared)) return p.report;
      if (p.at_punct(",")) {
        p.advance();
        continue;
      }
      break;
    }
  }
  if (!p.expect_punct("]")) return p.report;
  if (!p.expect_punct(";")) return p.report;

  // G := F / rels;
  if (!p.expect_ident(&name)) return p.report;
  if (!p.expect_punct(":=")) return p.report;
  if (!p.expect_ident(&name)) return p.report;
  if (name != free_name) {
    p.fail("quotient must divide the free group");
    return p.report;
  }
  if (!p.expect_punct("/")) return p.report;
  if (!p.expect_ident(&name)) return p.report;
  if (name != rels_name) {
    p.fail("quotient must divide by the relator list");
    return p.report;
  }
  if (!p.expect_punct(";")) return p.report;
  if (p.tok.kind != Tok::End) p.fail("trailing content");
  if (!p.lex.error.empty() && p.report.ok) p.fail("lexical error");
  return p.report;
}

CasReport check_magma(const std::string& text) {
  Parser p(text, "//");
  std::vector<std::string> outer, inner;
  std::string name;

  // G< a, ... > := Group< a, ... | relator, ... >;
  if (!p.expect_ident(&name)) return p.report;
  if (!p.expect_punct("<")) return p.report;
  while (true) {
    if (!p.expect_ident(&name)) return p.report;
    outer.push_back(name);
    if (p.at_punct(",")) {
      p.advance();
      continue;
    }
    break;
  }
  if (!p.expect_punct(">")) return p.report;
  if (!p.expect_punct(":=")) return p.report;
  if (!p.expect_keyword("Group")) return p.report;
  if (!p.expect_punct("<")) return p.report;
  while (true) {
    if (!p.expect_ident(&name)) return p.report;
    inner.push_back(name);
    if (p.at_punct(",")) {
      p.advance();
      continue;
    }
    break;
  }
  if (outer != inner) {
    p.fail("generator lists disagree");
    return p.report;
  }
  std::set<std::string> declared(outer.begin(), outer.end());
  if (declared.size() != outer.size()) {
    p.fail("duplicate generator name");
    return p.report;
  }
  if (!p.expect_punct("|")) return p.report;
  if (!p.at_punct(">")) {
    while (true) {
      if (!p.parse_relator(declared)) return p.report;
      if (p.at_punct(",")) {
        p.advance();
        continue;
      }
      break;
    }
  }
  if (!p.expect_punct(">")) return p.report;
  if (!p.expect_punct(";")) return p.report;
  if (p.tok.kind != Tok::End) p.fail("trailing content");
  if (!p.lex.error.empty() && p.report.ok) p.fail("lexical error");
  return p.report;
}

}  // namespace

CasReport check_cas_export(const std::string& dialect,
                           const std::string& text) {
  if (dialect == "gap") return check_gap(text);
  if (dialect == "magma") return check_magma(text);
  throw Error("unknown CAS dialect '" + dialect + "'");
}

}  // namespace agt
