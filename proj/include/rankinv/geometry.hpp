#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "rankinv/code.hpp"
#include "rankinv/combinatorics.hpp"
#include "rankinv/error.hpp"
#include "rankinv/field.hpp"
#include "rankinv/matrix.hpp"

namespace rankinv {

inline constexpr std::uint64_t kDefaultMaxEnum = std::uint64_t{1} << 20;

/// The F_q-span U of the columns of a generator matrix, as its n generators.
struct QSystem {
  FieldPtr field;
  std::size_t k = 0;
  std::vector<Vec> generators;

  std::size_t dim_fq() const { return generators.size(); }
};

/// One representative per F_q^*-class of U \ {0}, sorted.
struct ExtendedMatrix {
  FieldPtr field;
  std::size_t k = 0;
  std::vector<Vec> columns;

  Matrix as_matrix() const { return Matrix::from_columns(field, k, columns); }
};

/// Projective points <u> of PG(k-1, q^m), u in U \ {0}, with weights
/// w(P) = dim_{F_q}(U cap P). Points are normalized (first nonzero entry 1)
/// and sorted.
struct LinearSet {
  FieldPtr field;
  std::size_t k = 0;
  std::size_t rank_n = 0;
  std::vector<Vec> points;
  std::vector<std::size_t> weights;

  std::size_t size() const { return points.size(); }
  std::size_t weight_of(const Vec& point) const {
    auto it = std::lower_bound(points.begin(), points.end(), point, less());
    if (it == points.end() || *it != point) return 0;
    return weights[static_cast<std::size_t>(it - points.begin())];
  }

  struct Less {
    const Field* F;
    bool operator()(const Vec& a, const Vec& b) const {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return F->coeff_lex_less(a[i], b[i]);
      }
      return false;
    }
  };
  Less less() const { return Less{field.get()}; }
};

/// Entrywise lexicographic order on vectors, entries by coefficient vectors.
inline bool vec_lex_less(const Field& F, const Vec& a, const Vec& b) { return LinearSet::Less{&F}(a, b); }

/// Scale so that the first nonzero entry is 1.
inline Vec normalize_projective(const Field& F, const Vec& v) {
  for (auto x : v)
    if (x.value != 0) return scaled(F, v, F.inv(x));
  return v;
}

/// The lexicographically least of the q - 1 scalings of v by F_q^*.
inline Vec canonical_fq_representative(const Field& F, const Vec& v) {
  Vec best = v;
  for (std::uint32_t c = 2; c < F.q(); ++c) {
    Vec w = scaled(F, v, Element{c});
    if (vec_lex_less(F, w, best)) best = std::move(w);
  }
  return best;
}

inline QSystem system_of(const RankMetricCode& code) {
  QSystem sys{code.field(), code.k(), code.generator().columns()};
  const std::size_t r = fq_rank(code.field(), sys.generators);
  if (r != code.n())
    throw MathError("degenerate code: columns have F_q-rank " + std::to_string(r) + " < n = " + std::to_string(code.n()));
  return sys;
}

/// Enumerates F_q-combinations of the generators with first nonzero
/// coefficient 1 (one per F_q^*-class), canonicalizes and sorts them.
inline ExtendedMatrix extended_matrix(const QSystem& sys, std::uint64_t max_enum = kDefaultMaxEnum) {
  const Field& F = *sys.field;
  const std::size_t n = sys.dim_fq();
  const auto total = ipow_checked(F.q(), n);
  if (!total || *total > max_enum) throw BudgetError("system enumeration q^n exceeds budget");
  ExtendedMatrix out{sys.field, sys.k, {}};
  out.columns.reserve((*total - 1) / (F.q() - 1));
  std::vector<std::uint32_t> coef(n, 0);
  for (std::uint64_t idx = 1; idx < *total; ++idx) {
    for (std::size_t i = 0; i < n; ++i) {
      if (++coef[i] < F.q()) break;
      coef[i] = 0;
    }
    // lowest-index nonzero coefficient must be 1
    std::size_t lead = 0;
    while (coef[lead] == 0) ++lead;
    if (coef[lead] != 1) continue;
    Vec u(sys.k, F.zero());
    for (std::size_t i = lead; i < n; ++i)
      if (coef[i] != 0) F.sub_scaled(u, sys.generators[i], F.neg(Element{coef[i]}));
    out.columns.push_back(canonical_fq_representative(F, u));
  }
  std::sort(out.columns.begin(), out.columns.end(), LinearSet::Less{&F});
  return out;
}

inline LinearSet linear_set(const ExtendedMatrix& ext, std::size_t rank_n) {
  const Field& F = *ext.field;
  std::vector<Vec> normalized;
  normalized.reserve(ext.columns.size());
  for (const auto& c : ext.columns) normalized.push_back(normalize_projective(F, c));
  std::sort(normalized.begin(), normalized.end(), LinearSet::Less{&F});
  LinearSet ls{ext.field, ext.k, rank_n, {}, {}};
  for (std::size_t i = 0; i < normalized.size();) {
    std::size_t j = i;
    while (j < normalized.size() && normalized[j] == normalized[i]) ++j;
    // (q^w - 1)/(q - 1) columns lie under a point of weight w
    const std::uint64_t count = j - i;
    std::uint64_t size = count * (F.q() - 1) + 1, w = 0;
    while (size > 1) {
      if (size % F.q() != 0) throw std::logic_error("column count under a point is not (q^w-1)/(q-1)");
      size /= F.q();
      ++w;
    }
    ls.points.push_back(normalized[i]);
    ls.weights.push_back(w);
    i = j;
  }
  return ls;
}

inline LinearSet linear_set(const QSystem& sys, std::uint64_t max_enum = kDefaultMaxEnum) {
  return linear_set(extended_matrix(sys, max_enum), sys.dim_fq());
}

inline LinearSet linear_set(const RankMetricCode& code, std::uint64_t max_enum = kDefaultMaxEnum) {
  return linear_set(system_of(code), max_enum);
}

inline bool is_scattered(const LinearSet& ls) {
  return std::all_of(ls.weights.begin(), ls.weights.end(), [](std::size_t w) { return w == 1; });
}

/// Every hyperplane h.x = 0 (h normalized) meets U in F_q-dimension <= k-1.
/// dim(U cap H) = n - rk(h.g_1, ..., h.g_n).
inline bool is_scattered_wrt_hyperplanes(const QSystem& sys, std::uint64_t max_enum = kDefaultMaxEnum) {
  const Field& F = *sys.field;
  const std::size_t k = sys.k, n = sys.dim_fq();
  const auto all = ipow_checked(F.order(), k);
  if (!all || (*all - 1) / (F.order() - 1) > max_enum) throw BudgetError("hyperplane enumeration exceeds budget");
  std::vector<std::uint32_t> h(k, 0);
  Vec image(n);
  for (std::uint64_t idx = 1; idx < *all; ++idx) {
    for (std::size_t i = 0; i < k; ++i) {
      if (++h[i] < F.order()) break;
      h[i] = 0;
    }
    std::size_t lead = 0;
    while (h[lead] == 0) ++lead;
    if (h[lead] != 1) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = F.zero();
      for (std::size_t i = lead; i < k; ++i) acc = F.add(acc, F.mul({h[i]}, sys.generators[j][i]));
      image[j] = acc;
    }
    if (n - fq_rank_of_entries(sys.field, image) > k - 1) return false;
  }
  return true;
}

/// Least n with q^n >= (q-1) h + 1.
inline std::size_t length_lower_bound(std::uint64_t h, std::uint64_t q) {
  if (h < 1) throw MathError("length bound needs h >= 1");
  if (q < 2) throw MathError("q must be at least 2");
  const unsigned __int128 target = static_cast<unsigned __int128>(q - 1) * h + 1;
  unsigned __int128 acc = 1;
  std::size_t n = 0;
  while (acc < target) {
    acc *= q;
    ++n;
  }
  return n;
}

}  // namespace rankinv
