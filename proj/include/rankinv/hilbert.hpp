#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankinv/code.hpp"
#include "rankinv/combinatorics.hpp"
#include "rankinv/error.hpp"
#include "rankinv/geometry.hpp"
#include "rankinv/matrix.hpp"

namespace rankinv {

inline constexpr std::uint64_t kDefaultMaxProducts = std::uint64_t{1} << 26;

struct HilbertReport {
  std::vector<std::uint64_t> values;      // h_0, ..., h_r
  std::size_t regularity = 0;
  std::size_t point_count = 0;
  std::vector<std::uint64_t> ideal_dims;  // C(k+i-1, i) - h_i
};

namespace detail {

/// powers[j][e] = P_j^e for e <= degree.
inline std::vector<Vec> coordinate_powers(const Field& F, const Vec& P, unsigned degree) {
  std::vector<Vec> out(P.size(), Vec(degree + 1));
  for (std::size_t j = 0; j < P.size(); ++j) {
    out[j][0] = F.one();
    for (unsigned e = 1; e <= degree; ++e) out[j][e] = F.mul(out[j][e - 1], P[j]);
  }
  return out;
}

}  // namespace detail

/// Evaluation matrix of all degree-i monomials (graded lex) at the points.
inline Matrix monomial_evaluation_matrix(const LinearSet& ls, unsigned degree) {
  const Field& F = *ls.field;
  const auto monos = monomial_exponents(static_cast<unsigned>(ls.k), degree);
  Matrix M(ls.field, monos.size(), ls.points.size());
  for (std::size_t c = 0; c < ls.points.size(); ++c) {
    const auto pw = detail::coordinate_powers(F, ls.points[c], degree);
    for (std::size_t r = 0; r < monos.size(); ++r) {
      Element v = F.one();
      for (std::size_t j = 0; j < ls.k; ++j) v = F.mul(v, pw[j][monos[r][j]]);
      M(r, c) = v;
    }
  }
  return M;
}

/// h_i as the Hilbert function of the point set.
inline std::size_t schur_product_dim(const LinearSet& ls, unsigned degree) {
  if (ls.points.empty()) return 0;
  return rank(monomial_evaluation_matrix(ls, degree));
}

/// dim of the i-th Schur power of the code generated by G^H, built as
/// C^{(i)} = C * C^{(i-1)} from row products.
inline std::size_t schur_power_dim_oracle(const ExtendedMatrix& gh, unsigned degree,
                                          std::uint64_t max_products = kDefaultMaxProducts) {
  const Field& F = *gh.field;
  const std::size_t N = gh.columns.size();
  if (N == 0) return 0;
  std::vector<Vec> rows(gh.k, Vec(N));
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t j = 0; j < gh.k; ++j) rows[j][c] = gh.columns[c][j];
  EchelonBasis cur(gh.field, N);
  cur.insert(Vec(N, F.one()));
  std::uint64_t work = 0;
  for (unsigned d = 1; d <= degree; ++d) {
    EchelonBasis next(gh.field, N);
    for (const auto& b : cur.rows())
      for (const auto& g : rows) {
        work += N;
        if (work > max_products) throw BudgetError("Schur power construction exceeds budget");
        Vec prod(N);
        for (std::size_t c = 0; c < N; ++c) prod[c] = F.mul(b[c], g[c]);
        next.insert(std::move(prod));
        if (next.rank() == N) break;
      }
    cur = std::move(next);
  }
  return cur.rank();
}

/// h_i for i = 0, 1, ... until h_i = |L_U|, and further through `through_degree`.
/// The sequence increases strictly until it stabilizes, so the regularity is
/// below |L_U|; the total size of the evaluation matrices is budgeted.
inline HilbertReport hilbert_sequence(const LinearSet& ls, std::size_t through_degree = 0,
                                      std::uint64_t max_products = kDefaultMaxProducts) {
  HilbertReport rep;
  rep.point_count = ls.points.size();
  bool stable = false;
  std::uint64_t work = 0;
  for (std::size_t i = 0; !stable || i <= through_degree; ++i) {
    if (!stable && i >= std::max<std::size_t>(rep.point_count, 1))
      throw std::logic_error("Hilbert sequence failed to stabilize below |L_U|");
    const auto monos = binomial_checked(ls.k + i - 1, i);
    if (!monos || *monos > max_products / std::max<std::size_t>(rep.point_count, 1) ||
        (work += *monos * rep.point_count) > max_products)
      throw BudgetError("Hilbert sequence evaluation exceeds budget at degree " + std::to_string(i));
    const std::uint64_t h = schur_product_dim(ls, static_cast<unsigned>(i));
    rep.values.push_back(h);
    rep.ideal_dims.push_back(*monos - h);
    if (!stable && h == rep.point_count) {
      stable = true;
      rep.regularity = i;
    }
  }
  return rep;
}

inline HilbertReport hilbert_sequence(const RankMetricCode& code, std::size_t through_degree = 0,
                                      std::uint64_t max_enum = kDefaultMaxEnum) {
  return hilbert_sequence(linear_set(code, max_enum), through_degree);
}

/// C(k+q, q+1) - C(k-r, 2).
inline std::uint64_t h_qplus1_closed_form(std::size_t k, std::uint64_t q, std::size_t r) {
  if (r > k) throw MathError("delta rank cannot exceed k");
  return binomial(k + q, q + 1) - binom2(static_cast<std::int64_t>(k) - static_cast<std::int64_t>(r));
}

/// p(x) = sum_{i<j} A_{i,j} (x_i^{[s]} x_j - x_i x_j^{[s]}); coefficients in
/// pair order (0,1), (0,2), ..., (0,k-1), (1,2), ...
struct FsForm {
  std::size_t k = 0;
  std::uint64_t s = 1;
  Vec coeffs;

  static std::size_t pair_count(std::size_t k) { return static_cast<std::size_t>(binom2(static_cast<std::int64_t>(k))); }
  static std::size_t pair_index(std::size_t k, std::size_t i, std::size_t j) {
    return i * k - i * (i + 1) / 2 + (j - i - 1);
  }

  static FsForm zero(const Field& F, std::size_t k, std::uint64_t s) { return {k, s, Vec(pair_count(k), F.zero())}; }

  Element a(std::size_t i, std::size_t j) const { return coeffs[pair_index(k, i, j)]; }
  Element& a(std::size_t i, std::size_t j) { return coeffs[pair_index(k, i, j)]; }
  bool is_zero() const { return is_zero_vector(coeffs); }
};

/// Value of the basis form x_i^{[s]} x_j - x_i x_j^{[s]} at P.
inline Element fs_basis_value(const Field& F, const Vec& P, std::size_t i, std::size_t j, std::uint64_t s) {
  return F.sub(F.mul(F.frobenius(P[i], s), P[j]), F.mul(P[i], F.frobenius(P[j], s)));
}

/// For each vector abar, the k linear conditions on the A_{i,j}:
///   sum_{i<t} A_{i,t} abar_i - sum_{j>t} A_{t,j} abar_j = 0.
inline Matrix coset_condition_matrix(const FieldPtr& field, std::size_t k, const std::vector<Vec>& abars) {
  const Field& F = *field;
  Matrix M(field, k * abars.size(), FsForm::pair_count(k));
  for (std::size_t l = 0; l < abars.size(); ++l)
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t row = l * k + t;
      for (std::size_t i = 0; i < t; ++i) M(row, FsForm::pair_index(k, i, t)) = abars[l][i];
      for (std::size_t j = t + 1; j < k; ++j) M(row, FsForm::pair_index(k, t, j)) = F.neg(abars[l][j]);
    }
  return M;
}

/// dim(F_s cap I(L_U)) from the linear system on the columns of X.
inline std::size_t fs_intersection_dim_system(const RankMetricCode& code, std::uint64_t s) {
  const std::size_t k = code.k();
  if (s == 0 || s >= code.F().m()) throw MathError("s must lie in 1..m-1");
  const Matrix X = systematic_form(code).X;
  std::vector<Vec> abars;
  for (std::size_t c = 0; c < X.cols(); ++c) abars.push_back(frobenius_difference(code.F(), X.column(c), s));
  const std::size_t unknowns = FsForm::pair_count(k);
  if (unknowns == 0) return 0;
  if (abars.empty()) return unknowns;
  return unknowns - rank(coset_condition_matrix(code.field(), k, abars));
}

/// dim(F_s cap I(L_U)) as the left kernel of the (basis form) x (point) evaluation matrix.
inline std::size_t fs_intersection_dim_eval(const LinearSet& ls, std::uint64_t s) {
  const Field& F = *ls.field;
  const std::size_t k = ls.k, unknowns = FsForm::pair_count(k);
  if (unknowns == 0) return 0;
  Matrix M(ls.field, unknowns, ls.points.size());
  for (std::size_t c = 0; c < ls.points.size(); ++c)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) M(FsForm::pair_index(k, i, j), c) = fs_basis_value(F, ls.points[c], i, j, s);
  return unknowns - rank(std::move(M));
}

/// Evaluation method on the linear set of [I_k | X], which contains PG(k-1, q).
inline std::size_t fs_intersection_dim_eval(const RankMetricCode& code, std::uint64_t s,
                                            std::uint64_t max_enum = kDefaultMaxEnum) {
  const RrefResult r = rref(code.generator());
  Matrix G(code.field(), code.k(), code.n());
  for (std::size_t i = 0; i < code.k(); ++i)
    for (std::size_t c = 0; c < code.n(); ++c) G(i, c) = r.rref(i, c);
  return fs_intersection_dim_eval(linear_set(RankMetricCode(std::move(G)), max_enum), s);
}

/// C(k+q^s, q^s+1) - C(k - rk(X^{[s]} - X), 2).
inline std::uint64_t h_qsplus1_upper_bound(const RankMetricCode& code, std::uint64_t s) {
  const std::uint64_t qs = ipow(code.F().q(), s);
  const std::size_t r = delta_rank(code, s);
  return binomial(code.k() + qs, qs + 1) - binom2(static_cast<std::int64_t>(code.k()) - static_cast<std::int64_t>(r));
}

struct RegularityBound {
  std::uint64_t s = 0;      // 0 when no s applies
  std::uint64_t degree = 0; // q^s + 1, a strict lower bound on the regularity
};

/// Largest s in 1..m-1 whose degree-(q^s+1) bound falls short of |L_U|.
inline RegularityBound regularity_lower_bound(const RankMetricCode& code, std::size_t point_count) {
  RegularityBound out;
  const std::uint64_t q = code.F().q();
  for (std::uint64_t s = 1; s < code.F().m(); ++s) {
    const auto qs = ipow_checked(q, s);
    if (!qs) break;
    // an overflowing binomial exceeds every point count
    const auto top = binomial_checked(code.k() + *qs, *qs + 1);
    if (!top) continue;
    const std::uint64_t bound =
        *top - binom2(static_cast<std::int64_t>(code.k()) - static_cast<std::int64_t>(delta_rank(code, s)));
    if (bound < point_count) out = {s, *qs + 1};
  }
  return out;
}

enum class Verdict { gabidulin_like, random_like, other };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::gabidulin_like: return "gabidulin_like";
    case Verdict::random_like: return "random_like";
    default: return "other";
  }
}

struct Classification {
  Verdict verdict = Verdict::other;
  std::size_t r = 0;
  std::uint64_t predicted_h = 0;
  std::optional<std::uint64_t> measured_h;
  std::size_t qsum1 = 0;
  std::string note;
};

inline Classification classify(const RankMetricCode& code, bool measure_h = false,
                               std::uint64_t max_enum = kDefaultMaxEnum) {
  if (code.k() >= code.n()) throw MathError("classification needs k < n");
  Classification out;
  out.r = delta_rank(code, 1);
  out.predicted_h = h_qplus1_closed_form(code.k(), code.F().q(), out.r);
  out.qsum1 = qsum_dim(code, 1);
  if (measure_h)
    out.measured_h = schur_product_dim(linear_set(code, max_enum), static_cast<unsigned>(code.F().q() + 1));
  const std::size_t top = std::min(code.k(), code.n() - code.k());
  if (top == 1) {
    out.verdict = Verdict::other;
    out.note = "min(k, n-k) = 1: the delta rank is at most 1 for every code, so it cannot separate families";
  } else if (out.r == 1) {
    out.verdict = Verdict::gabidulin_like;
  } else if (out.r == top) {
    out.verdict = Verdict::random_like;
  } else {
    out.verdict = Verdict::other;
    out.note = "delta rank strictly between 1 and min(k, n-k)";
  }
  return out;
}

}  // namespace rankinv
