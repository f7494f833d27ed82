#include "agt/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "agt/arb.hpp"
#include "agt/artin.hpp"
#include "agt/formats.hpp"
#include "agt/garside.hpp"
#include "agt/json_io.hpp"
#include "agt/mcg.hpp"
#include "agt/verify.hpp"

namespace agt {

namespace {

// ---------------------------------------------------------------------------
// Small shared helpers.
// ---------------------------------------------------------------------------

DeltaMode mode_of(const std::string& name) {
  if (name == "paper" || name == "paper_literal")
    return DeltaMode::paper_literal;
  if (name == "corrected" || name == "homogeneity_corrected")
    return DeltaMode::homogeneity_corrected;
  throw Error("unknown mode '" + name + "'");
}

struct TypeSpec {
  Family family = Family::A;
  int rank = 0;
};

TypeSpec parse_type(const std::string& s) {
  const std::string usage =
      " (expected A<l>, B<l>, D<l>, E6, or E7)";
  if (s == "E6") return {Family::E6, 6};
  if (s == "E7") return {Family::E7, 7};
  if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'B' || s[0] == 'D')) {
    for (size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error("unrecognized type '" + s + "'" + usage);
    const Family f = s[0] == 'A' ? Family::A
                     : s[0] == 'B' ? Family::B
                                   : Family::D;
    return {f, std::stoi(s.substr(1))};
  }
  throw Error("unrecognized type '" + s + "'" + usage);
}

// "A3", "B2", "E7" — the family letter with the rank, except for the
// exceptional types whose name already carries it.
std::string type_label(Family f, int rank) {
  const std::string name = family_name(f);
  if (f == Family::E6 || f == Family::E7) return name;
  return name + std::to_string(rank);
}

// Display label of a type generator: the rendered name with dots dropped,
// matching the token syntax the --word flag accepts ("x.1" -> "x1").
std::string short_label(const Generator& g) {
  std::string s = g.render();
  std::string out;
  for (char c : s)
    if (c != '.') out.push_back(c);
  return out;
}

int parse_exponent(const std::string& text, const std::string& token) {
  if (text.empty()) throw Error("missing exponent in token '" + token + "'");
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw Error("malformed exponent in token '" + token + "'");
  }
  if (used != text.size())
    throw Error("malformed exponent in token '" + token + "'");
  if (value == 0) throw Error("zero exponent in token '" + token + "'");
  return value;
}

// Whitespace-separated tokens NAME or NAME^EXP; names may be written with
// or without dots ("x1" and "x.1" both name the first chain generator).
Word parse_word_tokens(const std::string& text,
                       const std::vector<Generator>& gens) {
  std::map<std::string, Generator> by_name;
  for (const Generator& g : gens) {
    by_name.emplace(g.render(), g);
    by_name.emplace(short_label(g), g);
  }
  Word out;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    std::string name = token;
    int exp = 1;
    if (const size_t caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      exp = parse_exponent(token.substr(caret + 1), token);
    }
    const auto it = by_name.find(name);
    if (it == by_name.end())
      throw Error("unknown generator '" + name + "' in --word");
    for (int k = 0; k < std::abs(exp); ++k)
      out.push_back(lit(it->second, exp > 0 ? 1 : -1));
  }
  return out;
}

// Torsion coefficients can in principle outgrow int64; emit a string then.
nlohmann::json torsion_json(const Abelianization& ab) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BigInt& t : ab.torsion) {
    if (t <= BigInt(std::numeric_limits<std::int64_t>::max()))
      arr.push_back(static_cast<std::int64_t>(t));
    else
      arr.push_back(t.str());
  }
  return arr;
}

int emit(const std::string& payload, const std::string& out_path,
         std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  file << payload;
  file.flush();
  if (!file.good()) {
    err << "error: failed while writing '" << out_path << "'\n";
    return 2;
  }
  return 0;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

bool is_exhaustion(const Error& e) {
  return std::string(e.what()).rfind("coset enumeration exhausted", 0) == 0;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

int do_generate(const Presentation& p, const std::string& format,
                const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  std::string payload;
  if (format == "json") {
    payload = presentation_to_string(p);
  } else if (format == "text") {
    payload = render_presentation_text(p);
  } else {
    payload = format == "gap" ? render_presentation_gap(p)
                              : render_presentation_magma(p);
    const CasReport check = check_cas_export(format, payload);
    if (!check.ok)
      throw Error("internal: " + format + " export failed its grammar check: " +
                  check.message);
  }
  return emit(payload, out_path, out, err);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int do_verify_counts(const Presentation& p, const std::string& format,
                     const std::string& out_path, std::ostream& out,
                     std::ostream& err) {
  const CountReport rep = verify_counts(p);
  std::string payload;
  if (format == "json") {
    nlohmann::json j{{"check", "counts"},
                     {"kind", rep.kind},
                     {"twists", rep.twists},
                     {"expected_twists", rep.expected_twists},
                     {"swaps", rep.swaps},
                     {"expected_swaps", rep.expected_swaps},
                     {"relations", rep.relations},
                     {"ok", rep.ok()}};
    payload = dump_json(j);
  } else {
    std::ostringstream os;
    if (rep.ok()) {
      os << "counts: pass (" << rep.twists << "/" << rep.swaps << ")\n";
    } else {
      os << "counts: fail (twists " << rep.twists << ", expected "
         << rep.expected_twists << "; swaps " << rep.swaps << ", expected "
         << rep.expected_swaps << ")\n";
    }
    payload = os.str();
  }
  const int code = emit(payload, out_path, out, err);
  return code != 0 ? code : (rep.ok() ? 0 : 1);
}

int do_verify_perm(const Presentation& p, const std::string& format,
                   const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
  const PermReport rep = perm_eval_builtin(p);
  const std::string kind = p.meta.value("kind", "");
  const std::string scope = kind == "b21" ? "per_vertex" : "global";
  std::string payload;
  if (format == "json") {
    nlohmann::json viols = nlohmann::json::array();
    for (const PermViolation& v : rep.violations)
      viols.push_back({{"tag", v.tag},
                       {"vertex", v.vertex},
                       {"lhs", v.lhs_cycles},
                       {"rhs", v.rhs_cycles}});
    nlohmann::json j{{"check", "perm"},     {"kind", kind},
                     {"scope", scope},      {"checked", rep.checked},
                     {"skipped", rep.skipped}, {"violations", viols},
                     {"ok", rep.ok()}};
    payload = dump_json(j);
  } else {
    std::ostringstream os;
    if (rep.ok()) {
      os << "perm: pass (checked " << rep.checked << ", skipped "
         << rep.skipped << ")\n";
    } else {
      os << "perm: fail (" << rep.violations.size() << " violations)\n";
      for (const PermViolation& v : rep.violations) {
        os << "  " << v.tag;
        if (v.vertex >= 0) os << " [vertex " << v.vertex << "]";
        os << ": " << v.lhs_cycles << " != " << v.rhs_cycles << "\n";
      }
    }
    payload = os.str();
  }
  const int code = emit(payload, out_path, out, err);
  return code != 0 ? code : (rep.ok() ? 0 : 1);
}

int do_verify_abelian(const Presentation& p, const std::string& expect,
                      const std::string& format, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
  const Abelianization ab = abelianization(p);
  const std::string rendered = render_abelian(ab);
  const bool ok = expect.empty() || rendered == expect;
  std::string payload;
  if (format == "json") {
    nlohmann::json j{{"check", "abelian"},
                     {"free_rank", ab.free_rank},
                     {"torsion", torsion_json(ab)},
                     {"rendered", rendered},
                     {"ok", ok}};
    if (!expect.empty()) j["expected"] = expect;
    payload = dump_json(j);
  } else {
    std::ostringstream os;
    if (expect.empty())
      os << "abelian: " << rendered << "\n";
    else if (ok)
      os << "abelian: pass (" << rendered << ")\n";
    else
      os << "abelian: fail (" << rendered << ", expected " << expect << ")\n";
    payload = os.str();
  }
  const int code = emit(payload, out_path, out, err);
  return code != 0 ? code : (ok ? 0 : 1);
}

int do_verify_homogeneity(const Presentation& p, const std::string& format,
                          const std::string& out_path, std::ostream& out,
                          std::ostream& err) {
  const std::vector<DeltaDiscrepancy> flagged = delta_homogeneity_audit(p);
  const size_t records = p.meta.at("delta_expansions").size();
  std::string payload;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const DeltaDiscrepancy& d : flagged)
      arr.push_back({{"tag", d.tag},
                     {"side", d.side},
                     {"type", type_label(d.family, d.rank)},
                     {"m", d.m},
                     {"letters", d.letters},
                     {"expected", d.expected}});
    nlohmann::json j{{"check", "homogeneity"},
                     {"mode", p.meta.value("mode", "")},
                     {"records", records},
                     {"flagged", flagged.size()},
                     {"discrepancies", arr},
                     {"ok", flagged.empty()}};
    payload = dump_json(j);
  } else {
    std::ostringstream os;
    if (flagged.empty()) {
      os << "homogeneity: pass (" << records << " records)\n";
    } else {
      os << "homogeneity: fail (" << flagged.size() << " of " << records
         << " records flagged)\n";
      for (const DeltaDiscrepancy& d : flagged)
        os << "  " << d.tag << "/" << d.side << " "
           << type_label(d.family, d.rank) << " m=" << d.m << ": "
           << d.letters << " letters, expected " << d.expected << "\n";
    }
    payload = os.str();
  }
  const int code = emit(payload, out_path, out, err);
  return code != 0 ? code : (flagged.empty() ? 0 : 1);
}

int do_verify_structure(const Presentation& p, const std::string& format,
                        const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
  const StructuralReport rep = structural_check(p);
  std::string payload;
  if (format == "json") {
    nlohmann::json issues = nlohmann::json::array();
    for (const StructuralIssue& s : rep.issues)
      issues.push_back(
          {{"kind", s.kind}, {"detail", s.detail}, {"fatal", s.fatal}});
    nlohmann::json j{
        {"check", "structure"}, {"issues", issues}, {"ok", rep.ok}};
    payload = dump_json(j);
  } else {
    std::ostringstream os;
    if (rep.ok && rep.issues.empty()) {
      os << "structure: pass\n";
    } else {
      os << "structure: " << (rep.ok ? "pass with notes" : "fail") << " ("
         << rep.issues.size() << " issues)\n";
      for (const StructuralIssue& s : rep.issues)
        os << "  [" << s.kind << (s.fatal ? "" : ", non-fatal") << "] "
           << s.detail << "\n";
    }
    payload = os.str();
  }
  const int code = emit(payload, out_path, out, err);
  return code != 0 ? code : (rep.ok ? 0 : 1);
}

int do_verify_enumerate(const Presentation& p, std::uint64_t max_cosets,
                        const std::string& format, const std::string& out_path,
                        std::ostream& out, std::ostream& err) {
  std::string payload;
  bool ok = true;
  try {
    const CosetResult res = todd_coxeter(p, max_cosets);
    if (format == "json") {
      nlohmann::json j{{"check", "enumerate"},
                       {"max_cosets", max_cosets},
                       {"order", res.order},
                       {"cosets_allocated", res.cosets_allocated},
                       {"ok", true}};
      payload = dump_json(j);
    } else {
      std::ostringstream os;
      os << "enumerate: order " << res.order << " (allocated "
         << res.cosets_allocated << ")\n";
      payload = os.str();
    }
  } catch (const Error& e) {
    if (!is_exhaustion(e)) throw;
    ok = false;
    if (format == "json") {
      nlohmann::json j{{"check", "enumerate"},
                       {"max_cosets", max_cosets},
                       {"exhausted", true},
                       {"ok", false}};
      payload = dump_json(j);
    } else {
      std::ostringstream os;
      os << "enumerate: exhausted (max_cosets " << max_cosets << ")\n";
      payload = os.str();
    }
  }
  const int code = emit(payload, out_path, out, err);
  return code != 0 ? code : (ok ? 0 : 1);
}

// ---------------------------------------------------------------------------
// nf
// ---------------------------------------------------------------------------

std::string render_nf(const GarsideForm& f,
                      const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  if (f.delta_power != 0) {
    os << "D";
    if (f.delta_power != 1) os << "^" << f.delta_power;
    first = false;
  }
  for (const auto& factor : f.factors) {
    if (!first) os << " . ";
    first = false;
    os << "(";
    for (size_t k = 0; k < factor.size(); ++k)
      os << (k ? " " : "") << labels[static_cast<size_t>(factor[k])];
    os << ")";
  }
  if (first) os << "1";
  return os.str();
}

int do_nf(const std::string& type_str, const std::string& word_str,
          const std::string& format, const std::string& out_path,
          std::ostream& out, std::ostream& err) {
  const TypeSpec ts = parse_type(type_str);
  const ParabolicType type = family_type(ts.family, ts.rank);
  const Word word = parse_word_tokens(word_str, type.gens);
  const GarsideForm form = normal_form(type, word);

  std::vector<std::string> labels;
  for (const Generator& g : type.gens) labels.push_back(short_label(g));

  std::string payload;
  if (format == "json") {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& factor : form.factors) {
      nlohmann::json one = nlohmann::json::array();
      for (int i : factor) one.push_back(labels[static_cast<size_t>(i)]);
      factors.push_back(one);
    }
    nlohmann::json j{{"type", type_label(ts.family, ts.rank)},
                     {"word", word_str},
                     {"delta_power", form.delta_power},
                     {"factors", factors},
                     {"letters", garside_letter_size(form)},
                     {"rendered", render_nf(form, labels)}};
    payload = dump_json(j);
  } else {
    std::ostringstream os;
    os << "type: " << type_label(ts.family, ts.rank) << "\n";
    os << "word: " << word_str << "\n";
    os << "delta_power: " << form.delta_power << "\n";
    os << "factors: ";
    if (form.factors.empty()) {
      os << "[]";
    } else {
      os << "[";
      for (size_t i = 0; i < form.factors.size(); ++i) {
        os << (i ? ", (" : "(");
        for (size_t k = 0; k < form.factors[i].size(); ++k)
          os << (k ? " " : "")
             << labels[static_cast<size_t>(form.factors[i][k])];
        os << ")";
      }
      os << "]";
    }
    os << "\n";
    os << "rendered: " << render_nf(form, labels) << "\n";
    payload = os.str();
  }
  return emit(payload, out_path, out, err);
}

// ---------------------------------------------------------------------------
// enumerate (top level)
// ---------------------------------------------------------------------------

int do_enumerate_type(const std::string& type_str, std::uint64_t max_cosets,
                      const std::string& format, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
  const TypeSpec ts = parse_type(type_str);
  const Presentation q = coxeter_quotient(ts.family, ts.rank);
  const std::uint64_t bfs = coxeter_order_bfs(ts.family, ts.rank);
  std::string payload;
  bool ok = true;
  try {
    const CosetResult res = todd_coxeter(q, max_cosets);
    ok = res.order == bfs;
    if (format == "json") {
      nlohmann::json j{{"type", type_label(ts.family, ts.rank)},
                       {"max_cosets", max_cosets},
                       {"order", res.order},
                       {"cosets_allocated", res.cosets_allocated},
                       {"bfs_order", bfs},
                       {"match", ok}};
      payload = dump_json(j);
    } else {
      std::ostringstream os;
      os << "type: " << type_label(ts.family, ts.rank) << "\n"
         << "order: " << res.order << "\n"
         << "cosets_allocated: " << res.cosets_allocated << "\n"
         << "bfs_order: " << bfs << "\n"
         << "match: " << (ok ? "true" : "false") << "\n";
      payload = os.str();
    }
  } catch (const Error& e) {
    if (!is_exhaustion(e)) throw;
    ok = false;
    if (format == "json") {
      nlohmann::json j{{"type", type_label(ts.family, ts.rank)},
                       {"max_cosets", max_cosets},
                       {"exhausted", true},
                       {"bfs_order", bfs},
                       {"match", false}};
      payload = dump_json(j);
    } else {
      std::ostringstream os;
      os << "type: " << type_label(ts.family, ts.rank) << "\n"
         << "exhausted: true (max_cosets " << max_cosets << ")\n"
         << "bfs_order: " << bfs << "\n";
      payload = os.str();
    }
  }
  const int code = emit(payload, out_path, out, err);
  return code != 0 ? code : (ok ? 0 : 1);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Presentation generator and verification toolkit for "
      "boundary-permuting surface groups, glued tower groups, and "
      "spherical Artin groups."};
  app.name("agt");
  app.require_subcommand(1);
  app.footer(
      "Environment:\n"
      "  AGT_ROOT_CACHE_DIR  cache directory for root-system data used by\n"
      "                      the normal-form and enumeration oracles\n"
      "  AGT_SEED            seed consumed by the randomized property tests");

  int g = 1, n = 2, r = 3;
  std::string mode_name = "corrected";
  std::string gen_format = "json", verify_format = "json";
  std::string nf_format = "text", enum_format = "json";
  std::string out_path, input, expect, type_str, word_str;
  std::uint64_t max_cosets = 100000;

  // generate ---------------------------------------------------------------
  auto* gen = app.add_subcommand(
      "generate", "Build a presentation and write it to stdout or --out");
  gen->require_subcommand(1);
  auto add_generate_common = [&](CLI::App* s) {
    s->add_option("--mode", mode_name,
                  "Fundamental-element expansion mode: paper|corrected")
        ->check(CLI::IsMember({"paper", "paper_literal", "corrected",
                               "homogeneity_corrected"}))
        ->capture_default_str();
    s->add_option("--format", gen_format, "json|text|gap|magma")
        ->check(CLI::IsMember({"json", "text", "gap", "magma"}))
        ->capture_default_str();
    s->add_option("--out", out_path, "Write to FILE instead of stdout");
  };
  auto* gen_mapo = gen->add_subcommand(
      "mapo", "Boundary-permuting mapping class group of a surface");
  gen_mapo->add_option("--g", g, "Genus (>= 1)")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  gen_mapo->add_option("--n", n, "Boundary components (>= 2)")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  add_generate_common(gen_mapo);
  auto* gen_capped = gen->add_subcommand(
      "capped", "Quotient with the boundaries capped by punctured discs");
  gen_capped->add_option("--g", g, "Genus (>= 1)")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  gen_capped->add_option("--n", n, "Boundary components (>= 2)")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  add_generate_common(gen_capped);
  auto* gen_b1r =
      gen->add_subcommand("b1r", "Glued ray tower group with r rays");
  gen_b1r->add_option("--r", r, "Ray count (>= 3)")
      ->check(CLI::Range(3, 1000))
      ->capture_default_str();
  add_generate_common(gen_b1r);
  auto* gen_b21 = gen->add_subcommand("b21", "Glued doubling tower group");
  add_generate_common(gen_b21);

  // verify -----------------------------------------------------------------
  auto* ver = app.add_subcommand(
      "verify", "Run a verification oracle on a presentation file");
  ver->require_subcommand(1);
  std::vector<std::pair<std::string, std::string>> checks = {
      {"counts", "Generator census against the closed-form counts"},
      {"perm", "Boundary permutation consistency of every relation"},
      {"abelian", "Abelian invariants via Smith normal form"},
      {"homogeneity", "Fundamental-element letter counts vs positive roots"},
      {"structure", "Alphabet closure, tag uniqueness, unused generators"},
      {"enumerate", "Todd-Coxeter coset enumeration of the presentation"},
  };
  std::map<std::string, CLI::App*> verify_subs;
  for (const auto& [name, desc] : checks) {
    CLI::App* s = ver->add_subcommand(name, desc);
    s->add_option("--input", input, "Presentation JSON file")->required();
    s->add_option("--format", verify_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    s->add_option("--out", out_path, "Write to FILE instead of stdout");
    verify_subs[name] = s;
  }
  verify_subs["abelian"]->add_option(
      "--expect", expect, "Fail unless the invariants render to this string");
  verify_subs["enumerate"]
      ->add_option("--max-cosets", max_cosets, "Table size bound (>= 1)")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}))
      ->capture_default_str();

  // nf ---------------------------------------------------------------------
  auto* nf = app.add_subcommand(
      "nf", "Garside normal form of a word in a spherical Artin group");
  nf->add_option("--type", type_str, "Diagram type: A<l>, B<l>, D<l>, E6, E7")
      ->required();
  nf->add_option("--word", word_str,
                 "Whitespace-separated letters, e.g. \"x1 x2 x1^-1\"")
      ->required();
  nf->add_option("--format", nf_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  nf->add_option("--out", out_path, "Write to FILE instead of stdout");

  // enumerate ---------------------------------------------------------------
  auto* en = app.add_subcommand(
      "enumerate",
      "Todd-Coxeter enumeration of a Coxeter quotient (--type, cross-checked "
      "against the reflection oracle) or of a presentation file (--input)");
  en->add_option("--type", type_str,
                 "Diagram type: A<l>, B<l>, D<l>, E6, E7");
  en->add_option("--input", input, "Presentation JSON file");
  en->add_option("--max-cosets", max_cosets, "Table size bound (>= 1)")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}))
      ->capture_default_str();
  en->add_option("--format", enum_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  en->add_option("--out", out_path, "Write to FILE instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const DeltaMode mode = mode_of(mode_name);
      Presentation p;
      if (gen_mapo->parsed())
        p = mapo_presentation({g, n}, mode);
      else if (gen_capped->parsed())
        p = capped_presentation({g, n}, mode);
      else if (gen_b1r->parsed())
        p = b1r_presentation(r, mode);
      else
        p = b21_presentation(mode);
      return do_generate(p, gen_format, out_path, out, err);
    }
    if (ver->parsed()) {
      const Presentation p = load_presentation_file(input);
      if (verify_subs["counts"]->parsed())
        return do_verify_counts(p, verify_format, out_path, out, err);
      if (verify_subs["perm"]->parsed())
        return do_verify_perm(p, verify_format, out_path, out, err);
      if (verify_subs["abelian"]->parsed())
        return do_verify_abelian(p, expect, verify_format, out_path, out, err);
      if (verify_subs["homogeneity"]->parsed())
        return do_verify_homogeneity(p, verify_format, out_path, out, err);
      if (verify_subs["structure"]->parsed())
        return do_verify_structure(p, verify_format, out_path, out, err);
      return do_verify_enumerate(p, max_cosets, verify_format, out_path, out,
                                 err);
    }
    if (nf->parsed())
      return do_nf(type_str, word_str, nf_format, out_path, out, err);
    if (en->parsed()) {
      const bool has_type = !type_str.empty();
      const bool has_input = !input.empty();
      if (has_type == has_input) {
        err << "error: enumerate needs exactly one of --type or --input\n";
        return 2;
      }
      if (has_type)
        return do_enumerate_type(type_str, max_cosets, enum_format, out_path,
                                 out, err);
      const Presentation p = load_presentation_file(input);
      return do_verify_enumerate(p, max_cosets, enum_format, out_path, out,
                                 err);
    }
    err << "error: no subcommand given\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace agt
