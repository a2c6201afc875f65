#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "rankinv/error.hpp"
#include "rankinv/field.hpp"
#include "rankinv/matrix.hpp"
#include "rankinv/rng.hpp"

namespace rankinv {

inline constexpr std::uint64_t kDefaultMaxCodewords = std::uint64_t{1} << 22;

/// An F_{q^m}-linear [n, k] code given by a full-rank k x n generator matrix.
class RankMetricCode {
 public:
  explicit RankMetricCode(Matrix generator) : G_(std::move(generator)) {
    if (G_.rows() == 0 || G_.rows() > G_.cols()) throw MathError("code needs 0 < k <= n");
    if (rank(G_) != G_.rows()) throw MathError("generator matrix is not of full rank");
  }

  const Matrix& generator() const { return G_; }
  const Field& F() const { return G_.F(); }
  const FieldPtr& field() const { return G_.field(); }
  std::size_t n() const { return G_.cols(); }
  std::size_t k() const { return G_.rows(); }

  /// The columns of G span an n-dimensional F_q-space.
  bool is_nondegenerate() const { return fq_rank(field(), G_.columns()) == n(); }

 private:
  Matrix G_;
};

/// Generalized Gabidulin code: row j is (a_1^{[s j]}, ..., a_n^{[s j]}), j = 0..k-1.
inline RankMetricCode gabidulin(const FieldPtr& field, const Vec& evals, std::size_t k, std::uint64_t s = 1) {
  const std::size_t n = evals.size();
  if (n > field->m()) throw MathError("Gabidulin code needs n <= m");
  if (k == 0 || k > n) throw MathError("Gabidulin code needs 0 < k <= n");
  if (std::gcd<std::uint64_t, std::uint64_t>(s, field->m()) != 1) throw MathError("Gabidulin parameter s needs gcd(s, m) = 1");
  if (fq_rank_of_entries(field, evals) != n) throw MathError("evaluation points are F_q-linearly dependent");
  Matrix G(field, k, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) G(j, i) = field->frobenius(evals[i], s * j);
  return RankMetricCode(std::move(G));
}

/// The polynomial basis 1, x, ..., x^{n-1} as evaluation points.
inline Vec polynomial_basis_points(const Field& F, std::size_t n) {
  Vec out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(F.pow(F.generator(), i));
  return out;
}

/// G = [I_k | X] with X drawn entrywise from CounterRng(seed).
inline RankMetricCode random_systematic(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k >= n) throw MathError("random systematic code needs 0 < k < n");
  CounterRng rng(seed);
  Matrix G(field, k, n);
  for (std::size_t i = 0; i < k; ++i) G(i, i) = field->one();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = k; j < n; ++j) G(i, j) = field->from_index(rng.uniform(field->order()));
  return RankMetricCode(std::move(G));
}

inline std::size_t rank_weight(const FieldPtr& field, std::span<const Element> v) {
  return fq_rank_of_entries(field, v);
}

/// Minimum rank distance over all q^{mk} - 1 nonzero codewords.
inline std::size_t min_rank_distance(const RankMetricCode& code, std::uint64_t max_codewords = kDefaultMaxCodewords) {
  const Field& F = code.F();
  const std::size_t k = code.k(), n = code.n();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= F.order();
    if (total > max_codewords) throw BudgetError("codeword enumeration exceeds budget");
  }
  const Matrix& G = code.generator();
  std::size_t best = n;
  std::vector<std::uint32_t> msg(k, 0);
  Vec word(n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    // odometer over message coefficients
    for (std::size_t i = 0; i < k; ++i) {
      if (++msg[i] < F.order()) break;
      msg[i] = 0;
    }
    std::fill(word.begin(), word.end(), F.zero());
    for (std::size_t i = 0; i < k; ++i)
      if (msg[i] != 0) F.sub_scaled(word, G.row(i), F.neg(Element{msg[i]}));
    best = std::min(best, rank_weight(code.field(), word));
    if (best == 1) break;
  }
  return best;
}

inline bool is_mrd(const RankMetricCode& code, std::uint64_t max_codewords = kDefaultMaxCodewords) {
  if (code.n() > code.F().m()) throw MathError("MRD test is only defined for n <= m");
  return min_rank_distance(code, max_codewords) == code.n() - code.k() + 1;
}

inline RankMetricCode code_qpower(const RankMetricCode& code, std::uint64_t s) {
  return RankMetricCode(code.generator().frobenius(s));
}

/// dim(C + C^{[1]} + ... + C^{[i]}).
inline std::size_t qsum_dim(const RankMetricCode& code, std::size_t i) {
  Matrix stack = code.generator();
  for (std::size_t t = 1; t <= i; ++t) stack = stack.stacked(code.generator().frobenius(t));
  return rank(std::move(stack));
}

struct SystematicForm {
  Matrix X;                               // k x (n-k) non-pivot block
  std::vector<std::size_t> column_order;  // pivot columns first, then the rest
  bool identity_permutation = true;
};

inline SystematicForm systematic_form(const RankMetricCode& code) {
  const RrefResult r = rref(code.generator());
  SystematicForm out;
  std::vector<bool> is_pivot(code.n(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  out.column_order = r.pivot_cols;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < code.n(); ++c)
    if (!is_pivot[c]) rest.push_back(c);
  out.column_order.insert(out.column_order.end(), rest.begin(), rest.end());
  for (std::size_t c = 0; c < code.n(); ++c)
    if (out.column_order[c] != c) out.identity_permutation = false;
  out.X = r.rref.select_columns(rest);
  return out;
}

/// rk(X^{[s]} - X) for the systematic form [I_k | X].
inline std::size_t delta_rank(const RankMetricCode& code, std::uint64_t s) {
  const Matrix X = systematic_form(code).X;
  if (X.cols() == 0) return 0;
  return rank(X.frobenius(s) - X);
}

/// dim(C^{[s1]} cap C^{[s2]}), as the left-kernel dimension of the stacked generators.
inline std::size_t galois_intersection_dim(const RankMetricCode& code, std::uint64_t s1, std::uint64_t s2) {
  const Matrix stack = code.generator().frobenius(s1).stacked(code.generator().frobenius(s2));
  return solve_right_kernel(stack.transposed()).size();
}

/// Image of the code under v -> alpha v A with A in GL_n(F_q).
inline RankMetricCode isometric_image(const RankMetricCode& code, Element alpha, const Matrix& A) {
  if (alpha.value == 0) throw MathError("isometry scalar must be nonzero");
  if (A.rows() != code.n() || A.cols() != code.n() || rank(A) != code.n()) throw MathError("isometry matrix must be invertible");
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c)
      if (A(r, c).value >= code.F().q()) throw MathError("isometry matrix must have entries in F_q");
  Matrix G = code.generator() * A;
  for (std::size_t r = 0; r < G.rows(); ++r)
    for (auto& x : G.row(r)) x = code.F().mul(alpha, x);
  return RankMetricCode(std::move(G));
}

/// Uniformly drawn invertible matrix over F_q (embedded), by rejection.
inline Matrix random_gl_fq(const FieldPtr& field, std::size_t n, CounterRng& rng) {
  for (;;) {
    Matrix A(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) A(r, c) = {static_cast<std::uint32_t>(rng.uniform(field->q()))};
    if (rank(A) == n) return A;
  }
}

}  // namespace rankinv
