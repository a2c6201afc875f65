#pragma once

// Brute-force reference computations used only by the tests.

#include <set>
#include <vector>

#include "rankinv/rankinv.hpp"

namespace oracle {

using namespace rankinv;

inline FieldPtr gf(const char* key) { return FieldCatalog::builtin().find(key)->build(); }

/// All F_q-combinations of the generators, zero included.
inline std::vector<Vec> span_fq(const Field& F, const std::vector<Vec>& gens) {
  std::vector<Vec> out{Vec(gens.empty() ? 0 : gens[0].size(), F.zero())};
  for (const auto& g : gens) {
    std::vector<Vec> next;
    for (const auto& u : out)
      for (std::uint32_t c = 0; c < F.q(); ++c) {
        Vec w = u;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.add(w[j], F.mul({c}, g[j]));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

/// u and v span the same F_{q^m}-line (both nonzero).
inline bool proportional(const Field& F, const Vec& u, const Vec& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (F.mul(u[i], v[j]) != F.mul(u[j], v[i])) return false;
  return true;
}

/// Weight of the point spanned by p: log_q |{u in U : u in <p>}|.
inline std::size_t point_weight(const Field& F, const std::vector<Vec>& U, const Vec& p) {
  std::size_t count = 1;  // zero vector
  for (const auto& u : U)
    if (!is_zero_vector(u) && proportional(F, u, p)) ++count;
  std::size_t w = 0;
  while (count > 1) {
    count /= F.q();
    ++w;
  }
  return w;
}

/// Minimum rank weight by listing every codeword as a sum over message symbols.
inline std::size_t min_distance(const RankMetricCode& C) {
  const Field& F = C.F();
  std::vector<Vec> words{Vec(C.n(), F.zero())};
  for (std::size_t r = 0; r < C.k(); ++r) {
    std::vector<Vec> next;
    for (const auto& w : words)
      for (std::uint32_t c = 0; c < F.order(); ++c) {
        Vec x = w;
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = F.add(x[j], F.mul({c}, C.generator()(r, j)));
        next.push_back(std::move(x));
      }
    words = std::move(next);
  }
  std::size_t best = C.n();
  for (const auto& w : words)
    if (!is_zero_vector(w)) best = std::min(best, rank_weight(C.field(), w));
  return best;
}

/// Random [n,k] code with nondegenerate columns.
inline RankMetricCode random_nondegenerate(const FieldPtr& F, std::size_t n, std::size_t k, std::uint64_t seed) {
  for (std::uint64_t t = 0;; ++t) {
    auto C = random_systematic(F, n, k, seed * 1000003 + t);
    if (C.is_nondegenerate()) return C;
  }
}

}  // namespace oracle
