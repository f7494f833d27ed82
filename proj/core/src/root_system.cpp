#include "agt/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

namespace agt {

namespace {

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

std::vector<int> unit(size_t dim, size_t i) {
  std::vector<int> v(dim, 0);
  v[i] = 1;
  return v;
}

// Simple roots in the diagram order used throughout: a path for A; the
// 4-edge at the first pair for B (alpha_1 short); the two fork prongs first
// for D; for E6/E7 a path with the branch generator last.
std::vector<std::vector<int>> simple_vectors(Family f, int rank) {
  std::vector<std::vector<int>> s;
  switch (f) {
    case Family::A: {
      size_t dim = static_cast<size_t>(rank) + 1;
      for (int i = 0; i < rank; ++i) {
        std::vector<int> v(dim, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::B: {
      size_t dim = static_cast<size_t>(rank);
      s.push_back(unit(dim, 0));  // short root
      for (int i = 1; i < rank; ++i) {
        std::vector<int> v(dim, 0);
        v[i] = 1;
        v[i - 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::D: {
      size_t dim = static_cast<size_t>(rank);
      std::vector<int> p1(dim, 0), p2(dim, 0);
      p1[0] = 1;
      p1[1] = 1;
      p2[0] = -1;
      p2[1] = 1;
      s.push_back(p1);
      s.push_back(p2);
      for (int i = 2; i < rank; ++i) {
        std::vector<int> v(dim, 0);
        v[i] = 1;
        v[i - 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::E6:
    case Family::E7: {
      // Even-lattice simple roots scaled by 2 to keep all coordinates
      // integral.
      auto e = [](int i, int j, int si, int sj) {
        std::vector<int> v(8, 0);
        v[i] = 2 * si;
        v[j] = 2 * sj;
        return v;
      };
      std::vector<int> a1 = {1, -1, -1, -1, -1, -1, -1, 1};
      std::vector<int> a2 = e(0, 1, 1, 1);    // e1+e2
      std::vector<int> a3 = e(0, 1, -1, 1);   // e2-e1
      std::vector<int> a4 = e(1, 2, -1, 1);   // e3-e2
      std::vector<int> a5 = e(2, 3, -1, 1);   // e4-e3
      std::vector<int> a6 = e(3, 4, -1, 1);   // e5-e4
      std::vector<int> a7 = e(4, 5, -1, 1);   // e6-e5
      if (f == Family::E6)
        s = {a1, a3, a4, a5, a6, a2};  // branch at the third path node
      else
        s = {a7, a6, a5, a4, a3, a1, a2};  // branch at the fourth path node
      break;
    }
  }
  return s;
}

struct PendingRoot {
  std::vector<int> vec;
  std::vector<int> coeff;  // expansion in the simple basis
};

std::vector<int> reflect(const std::vector<int>& beta,
                         const std::vector<int>& alpha) {
  long long num = 2 * dot(beta, alpha);
  long long den = dot(alpha, alpha);
  if (num % den != 0) throw Error("root reflection left the lattice");
  long long c = num / den;
  std::vector<int> out = beta;
  for (size_t k = 0; k < out.size(); ++k)
    out[k] -= static_cast<int>(c * alpha[k]);
  return out;
}

std::unique_ptr<RootSystem> build(Family f, int rank) {
  if (!family_rank_supported(f, rank))
    throw Error("unsupported root system " + family_name(f) + std::to_string(rank));

  auto rs = std::make_unique<RootSystem>();
  rs->family = f;
  rs->rank = rank;

  std::vector<std::vector<int>> simples = simple_vectors(f, rank);

  // Reflection closure starting from the simples, tracking simple-basis
  // coefficients so positivity is a sign check.
  std::map<std::vector<int>, std::vector<int>> seen;  // vec -> coeff
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    seen[simples[i]] = unit(static_cast<size_t>(rank), static_cast<size_t>(i));
    queue.push_back(simples[i]);
  }
  while (!queue.empty()) {
    std::vector<int> beta = queue.back();
    queue.pop_back();
    std::vector<int> coeff = seen.at(beta);
    for (int i = 0; i < rank; ++i) {
      long long num = 2 * dot(beta, simples[i]);
      long long den = dot(simples[i], simples[i]);
      long long c = num / den;
      std::vector<int> img = reflect(beta, simples[i]);
      if (seen.count(img)) continue;
      std::vector<int> icoeff = coeff;
      icoeff[static_cast<size_t>(i)] -= static_cast<int>(c);
      seen[img] = icoeff;
      queue.push_back(img);
    }
  }

  // Split by coefficient sign and order positives deterministically:
  // simples first, then by height, then lexicographically.
  std::vector<PendingRoot> positives;
  for (const auto& [vec, coeff] : seen) {
    bool nonneg = std::all_of(coeff.begin(), coeff.end(), [](int c) { return c >= 0; });
    bool nonpos = std::all_of(coeff.begin(), coeff.end(), [](int c) { return c <= 0; });
    if (!nonneg && !nonpos) throw Error("mixed-sign root coefficients");
    if (nonneg) positives.push_back({vec, coeff});
  }
  int n_pos = positive_root_count(f, rank);
  if (static_cast<int>(positives.size()) != n_pos ||
      seen.size() != 2 * static_cast<size_t>(n_pos))
    throw Error("root count mismatch for " + family_name(f) + std::to_string(rank));

  auto height = [](const std::vector<int>& c) {
    return std::accumulate(c.begin(), c.end(), 0);
  };
  std::sort(positives.begin(), positives.end(),
            [&](const PendingRoot& a, const PendingRoot& b) {
              int ha = height(a.coeff), hb = height(b.coeff);
              if (ha != hb) return ha < hb;
              return a.coeff < b.coeff;
            });
  // Height-1 roots are exactly the simples; force diagram order among them.
  std::vector<PendingRoot> ordered;
  for (int i = 0; i < rank; ++i) {
    auto it = std::find_if(positives.begin(), positives.end(),
                           [&](const PendingRoot& r) { return r.vec == simples[i]; });
    ordered.push_back(*it);
    positives.erase(it);
  }
  ordered.insert(ordered.end(), positives.begin(), positives.end());

  rs->n_pos = n_pos;
  rs->roots.resize(2 * static_cast<size_t>(n_pos));
  std::map<std::vector<int>, int32_t> index;
  for (int i = 0; i < n_pos; ++i) {
    rs->roots[static_cast<size_t>(i)] = ordered[static_cast<size_t>(i)].vec;
    std::vector<int> neg = ordered[static_cast<size_t>(i)].vec;
    for (int& x : neg) x = -x;
    rs->roots[static_cast<size_t>(i + n_pos)] = neg;
  }
  for (size_t i = 0; i < rs->roots.size(); ++i)
    index[rs->roots[i]] = static_cast<int32_t>(i);

  rs->simple_action.assign(static_cast<size_t>(rank), {});
  for (int i = 0; i < rank; ++i) {
    auto& row = rs->simple_action[static_cast<size_t>(i)];
    row.resize(rs->roots.size());
    for (size_t r = 0; r < rs->roots.size(); ++r)
      row[r] = index.at(reflect(rs->roots[r], simples[static_cast<size_t>(i)]));
  }

  // Longest element by greedy ascent: extend while some simple is not a
  // descent.
  std::vector<int32_t> w(rs->roots.size());
  std::iota(w.begin(), w.end(), 0);
  for (;;) {
    int asc = -1;
    for (int i = 0; i < rank; ++i)
      if (w[static_cast<size_t>(i)] < n_pos) {
        asc = i;
        break;
      }
    if (asc < 0) break;
    // w <- w * s_asc (apply the new reflection first)
    const auto& s = rs->simple_action[static_cast<size_t>(asc)];
    std::vector<int32_t> next(w.size());
    for (size_t r = 0; r < w.size(); ++r) next[r] = w[static_cast<size_t>(s[r])];
    w = next;
  }
  rs->w0 = w;

  rs->tau.resize(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    int32_t img = rs->w0[static_cast<size_t>(i)];
    if (img < n_pos || img - n_pos >= rank)
      throw Error("longest element does not permute the simples");
    rs->tau[static_cast<size_t>(i)] = img - n_pos;
  }

  // Reduced word of w0 * s_i via repeated minimal left descent.
  rs->w0_times_s.assign(static_cast<size_t>(rank), {});
  for (int i = 0; i < rank; ++i) {
    std::vector<int32_t> v(rs->roots.size());
    const auto& s = rs->simple_action[static_cast<size_t>(i)];
    for (size_t r = 0; r < v.size(); ++r) v[r] = rs->w0[static_cast<size_t>(s[r])];
    // left descent j of v  <=>  v^{-1}(alpha_j) < 0; build the word from the
    // left, stripping one reflection at a time.
    std::vector<int32_t> inv(v.size());
    for (size_t r = 0; r < v.size(); ++r) inv[static_cast<size_t>(v[r])] = static_cast<int32_t>(r);
    auto& word = rs->w0_times_s[static_cast<size_t>(i)];
    for (;;) {
      int j = -1;
      for (int t = 0; t < rank; ++t)
        if (inv[static_cast<size_t>(t)] >= n_pos) {
          j = t;
          break;
        }
      if (j < 0) break;
      word.push_back(j);
      const auto& sj = rs->simple_action[static_cast<size_t>(j)];
      std::vector<int32_t> nv(v.size()), ninv(v.size());
      for (size_t r = 0; r < v.size(); ++r) nv[r] = static_cast<int32_t>(sj[static_cast<size_t>(v[r])]);
      for (size_t r = 0; r < nv.size(); ++r) ninv[static_cast<size_t>(nv[r])] = static_cast<int32_t>(r);
      v = nv;
      inv = ninv;
    }
    if (static_cast<int>(word.size()) != n_pos - 1)
      throw Error("unexpected length for w0*s");
  }

  return rs;
}

std::filesystem::path cache_file(Family f, int rank) {
  const char* dir = std::getenv("AGT_ROOT_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) /
         ("roots-" + family_name(f) + std::to_string(rank) + ".json");
}

std::unique_ptr<RootSystem> try_load(Family f, int rank) {
  std::filesystem::path path = cache_file(f, rank);
  if (path.empty()) return nullptr;
  std::ifstream in(path);
  if (!in) return nullptr;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    auto rs = std::make_unique<RootSystem>();
    rs->family = f;
    rs->rank = rank;
    rs->n_pos = j.at("n_pos").get<int>();
    rs->roots = j.at("roots").get<std::vector<std::vector<int>>>();
    rs->simple_action = j.at("simple_action").get<std::vector<std::vector<int32_t>>>();
    rs->w0 = j.at("w0").get<std::vector<int32_t>>();
    rs->tau = j.at("tau").get<std::vector<int>>();
    rs->w0_times_s = j.at("w0_times_s").get<std::vector<std::vector<int>>>();
    if (rs->n_pos != positive_root_count(f, rank) ||
        rs->roots.size() != 2 * static_cast<size_t>(rs->n_pos) ||
        rs->simple_action.size() != static_cast<size_t>(rank))
      return nullptr;
    return rs;
  } catch (...) {
    return nullptr;
  }
}

void try_save(const RootSystem& rs) {
  std::filesystem::path path = cache_file(rs.family, rs.rank);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) return;
  nlohmann::json j = {{"n_pos", rs.n_pos},
                      {"roots", rs.roots},
                      {"simple_action", rs.simple_action},
                      {"w0", rs.w0},
                      {"tau", rs.tau},
                      {"w0_times_s", rs.w0_times_s}};
  out << j.dump();
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "D") return Family::D;
  if (name == "E6") return Family::E6;
  if (name == "E7") return Family::E7;
  throw Error("unknown family '" + name + "'");
}

int positive_root_count(Family f, int rank) {
  switch (f) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
  }
  return 0;
}

bool family_rank_supported(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1 && rank <= 8;
    case Family::B: return rank >= 2 && rank <= 8;
    case Family::D: return rank >= 3 && rank <= 8;
    case Family::E6: return rank == 6;
    case Family::E7: return rank == 7;
  }
  return false;
}

const RootSystem& root_system(Family f, int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(f), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  std::unique_ptr<RootSystem> rs = try_load(f, rank);
  if (!rs) {
    rs = build(f, rank);
    try_save(*rs);
  }
  auto [pos, inserted] = cache.emplace(key, std::move(rs));
  (void)inserted;
  return *pos->second;
}

}  // namespace agt
