#include "agt/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace agt {

nlohmann::json word_to_json(const Word& w) {
  nlohmann::json out = nlohmann::json::array();
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j].gen == w[i].gen && w[j].sign == w[i].sign) ++j;
    long long e = static_cast<long long>(j - i) * w[i].sign;
    out.push_back({w[i].gen.render(), e});
    i = j;
  }
  return out;
}

Word word_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error("word: expected an array of [name, exp] pairs");
  Word w;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_number_integer())
      throw Error("word: malformed entry " + entry.dump());
    Generator g = Generator::parse(entry[0].get<std::string>());
    long long e = entry[1].get<long long>();
    if (e == 0) throw Error("word: zero exponent for " + entry[0].get<std::string>());
    int sign = e > 0 ? 1 : -1;
    for (long long k = 0; k < std::abs(e); ++k) w.push_back(Letter{g, sign});
  }
  return w;
}

nlohmann::json presentation_to_json(const Presentation& p) {
  std::vector<Generator> gens = p.generators;
  std::sort(gens.begin(), gens.end(), render_less);

  nlohmann::json jgens = nlohmann::json::array();
  for (const Generator& g : gens) jgens.push_back(g.render());

  nlohmann::json jrels = nlohmann::json::array();
  for (const Relation& r : p.relations)
    jrels.push_back({{"tag", r.tag},
                     {"lhs", word_to_json(r.lhs)},
                     {"rhs", word_to_json(r.rhs)}});

  return {{"generators", jgens}, {"meta", p.meta}, {"relations", jrels}};
}

Presentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("presentation: expected a JSON object");
  for (const char* key : {"generators", "relations"})
    if (!j.contains(key) || !j[key].is_array())
      throw Error(std::string("presentation: missing array field '") + key + "'");

  Presentation p;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw Error("presentation: generator entries must be strings");
    p.generators.push_back(Generator::parse(g.get<std::string>()));
  }
  for (const auto& r : j["relations"]) {
    if (!r.is_object() || !r.contains("tag") || !r.contains("lhs") ||
        !r.contains("rhs"))
      throw Error("presentation: malformed relation " + r.dump());
    p.relations.push_back(Relation{r["tag"].get<std::string>(),
                                   word_from_json(r["lhs"]),
                                   word_from_json(r["rhs"])});
  }
  p.meta = j.contains("meta") ? j["meta"] : nlohmann::json::object();
  return p;
}

std::string presentation_to_string(const Presentation& p) {
  return presentation_to_json(p).dump(2) + "\n";
}

Presentation presentation_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("presentation: invalid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return presentation_from_string(buf.str());
}

void save_presentation_file(const Presentation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << presentation_to_string(p);
}

}  // namespace agt
