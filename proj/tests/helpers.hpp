#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "agt/words.hpp"

namespace agt_test {

// Property tests draw from a fixed seed so failures reproduce; override via
// the AGT_SEED environment variable.
inline std::uint32_t test_seed() {
  if (const char* s = std::getenv("AGT_SEED")) {
    return static_cast<std::uint32_t>(std::strtoul(s, nullptr, 10));
  }
  return 20260819u;
}

inline std::mt19937 test_rng(std::uint32_t salt = 0) {
  return std::mt19937(test_seed() + salt);
}

inline agt::Word random_word(std::mt19937& rng,
                             const std::vector<agt::Generator>& alphabet,
                             size_t len) {
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  agt::Word w;
  for (size_t i = 0; i < len; ++i)
    w.push_back(agt::lit(alphabet[pick(rng)], coin(rng) ? 1 : -1));
  return w;
}

inline std::vector<agt::Generator> abstract_alphabet(int n) {
  std::vector<agt::Generator> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(agt::Generator::abstract("g", std::nullopt, i + 1));
  return gens;
}

}  // namespace agt_test
