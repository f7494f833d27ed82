#include "agt/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <tuple>

namespace agt {

namespace {

const std::set<std::string>& twist_series() {
  static const std::set<std::string> s = {"x0", "x1", "y", "z", "u"};
  return s;
}

bool is_reserved_series(const std::string& s) {
  return s == "b" || s == "e" || twist_series().count(s) > 0;
}

bool valid_series_token(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

[[noreturn]] void bad_generator(const std::string& what) {
  throw Error("generator: " + what);
}

}  // namespace

std::string kind_name(GenKind k) {
  switch (k) {
    case GenKind::Twist: return "twist";
    case GenKind::Swap: return "swap";
    case GenKind::Stable: return "stable";
    case GenKind::Abstract: return "abstract";
  }
  return "?";
}

Generator Generator::twist(const std::string& series, std::optional<int> vertex,
                           std::optional<int> position) {
  if (twist_series().count(series) == 0)
    bad_generator("unknown twist series '" + series + "'");
  // Positional arity is what keeps rendering injective: x0/x1/z never carry
  // a position, y/u always do.
  if (series == "y" || series == "u") {
    if (!position) bad_generator("series '" + series + "' needs a position");
  } else {
    if (position) bad_generator("series '" + series + "' takes no position");
  }
  return Generator{GenKind::Twist, series, vertex, position};
}

Generator Generator::swap_gen(std::optional<int> vertex, int position) {
  return Generator{GenKind::Swap, "b", vertex, position};
}

Generator Generator::stable(int index) {
  return Generator{GenKind::Stable, "e", std::nullopt, index};
}

Generator Generator::abstract(const std::string& series,
                              std::optional<int> vertex,
                              std::optional<int> position) {
  if (!valid_series_token(series))
    bad_generator("invalid series token '" + series + "'");
  if (is_reserved_series(series))
    bad_generator("series '" + series + "' is reserved for structured kinds");
  if (vertex && !position)
    bad_generator("abstract generator with a vertex needs a position");
  return Generator{GenKind::Abstract, series, vertex, position};
}

std::string Generator::render() const {
  std::string out = series;
  if (vertex) out += "." + std::to_string(*vertex);
  if (position) out += "." + std::to_string(*position);
  return out;
}

Generator Generator::parse(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == '.') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  tokens.push_back(cur);

  const std::string& series = tokens.front();
  if (!valid_series_token(series))
    bad_generator("cannot parse '" + text + "': bad series token");

  std::vector<int> nums;
  for (size_t i = 1; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      bad_generator("cannot parse '" + text + "': bad index '" + t + "'");
    nums.push_back(std::atoi(t.c_str()));
  }
  if (nums.size() > 2)
    bad_generator("cannot parse '" + text + "': too many indices");

  std::optional<int> vertex, position;
  if (nums.size() == 2) {
    vertex = nums[0];
    position = nums[1];
  } else if (nums.size() == 1) {
    if (series == "x0" || series == "x1" || series == "z")
      vertex = nums[0];
    else
      position = nums[0];
  }

  if (series == "b") {
    if (!position) bad_generator("cannot parse '" + text + "': swap needs a position");
    return swap_gen(vertex, *position);
  }
  if (series == "e") {
    if (!position || vertex)
      bad_generator("cannot parse '" + text + "': stable letters are 'e.<index>'");
    return stable(*position);
  }
  if (twist_series().count(series) > 0) return twist(series, vertex, position);
  return abstract(series, vertex, position);
}

bool render_less(const Generator& a, const Generator& b) {
  std::string ra = a.render(), rb = b.render();
  if (ra != rb) return ra < rb;
  return a.kind < b.kind;
}

bool GenOrder::operator()(const Generator& a, const Generator& b) const {
  return std::tie(a.series, a.vertex, a.position, a.kind) <
         std::tie(b.series, b.vertex, b.position, b.kind);
}

Letter lit(const Generator& g, int sign) {
  if (sign != 1 && sign != -1) throw Error("letter sign must be +1 or -1");
  return Letter{g, sign};
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->gen, -it->sign});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverse(w) : w;
  int reps = k < 0 ? -k : k;
  Word out;
  out.reserve(base.size() * static_cast<size_t>(reps));
  for (int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) return false;
  return true;
}

Word substitute(const Word& w, const Substitution& images) {
  std::set<std::string> missing;
  for (const Letter& l : w)
    if (images.find(l.gen) == images.end()) missing.insert(l.gen.render());
  if (!missing.empty()) {
    std::string msg = "substitute: no image for generators:";
    for (const auto& m : missing) msg += " " + m;
    throw Error(msg);
  }
  Word out;
  for (const Letter& l : w) {
    const Word& img = images.at(l.gen);
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(out);
}

std::vector<long long> exponent_sums(const Word& w,
                                     const std::vector<Generator>& alphabet) {
  std::map<Generator, size_t, GenOrder> index;
  for (size_t i = 0; i < alphabet.size(); ++i) index[alphabet[i]] = i;
  std::vector<long long> sums(alphabet.size(), 0);
  std::set<std::string> foreign;
  for (const Letter& l : w) {
    auto it = index.find(l.gen);
    if (it == index.end())
      foreign.insert(l.gen.render());
    else
      sums[it->second] += l.sign;
  }
  if (!foreign.empty()) {
    std::string msg = "exponent_sums: letters outside alphabet:";
    for (const auto& f : foreign) msg += " " + f;
    throw Error(msg);
  }
  return sums;
}

std::vector<Generator> word_support(const Word& w) {
  std::vector<Generator> out;
  std::set<std::string> seen;
  for (const Letter& l : w)
    if (seen.insert(l.gen.render()).second) out.push_back(l.gen);
  return out;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j].gen == w[i].gen && w[j].sign == w[i].sign) ++j;
    long long e = static_cast<long long>(j - i) * w[i].sign;
    if (!first) os << ' ';
    os << w[i].gen.render();
    if (e != 1) os << '^' << e;
    first = false;
    i = j;
  }
  return os.str();
}

}  // namespace agt
