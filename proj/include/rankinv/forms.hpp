#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "rankinv/combinatorics.hpp"
#include "rankinv/error.hpp"
#include "rankinv/field.hpp"
#include "rankinv/hilbert.hpp"
#include "rankinv/matrix.hpp"
#include "rankinv/rng.hpp"

namespace rankinv {

/// p(x) for x in F_{q^m}^k.
inline Element evaluate(const Field& F, const FsForm& p, const Vec& x) {
  Element acc = F.zero();
  for (std::size_t i = 0; i < p.k; ++i)
    for (std::size_t j = i + 1; j < p.k; ++j) {
      const Element a = p.a(i, j);
      if (a.value != 0) acc = F.add(acc, F.mul(a, fs_basis_value(F, x, i, j, p.s)));
    }
  return acc;
}

/// The k left-hand sides sum_{i<t} A_{i,t} abar_i - sum_{j>t} A_{t,j} abar_j.
inline Vec coset_conditions(const Field& F, const FsForm& p, const Vec& abar) {
  Vec out(p.k, F.zero());
  for (std::size_t t = 0; t < p.k; ++t) {
    Element acc = F.zero();
    for (std::size_t i = 0; i < t; ++i) acc = F.add(acc, F.mul(p.a(i, t), abar[i]));
    for (std::size_t j = t + 1; j < p.k; ++j) acc = F.sub(acc, F.mul(p.a(t, j), abar[j]));
    out[t] = acc;
  }
  return out;
}

inline bool vanishes_on_coset(const Field& F, const FsForm& p, const Vec& alpha) {
  return is_zero_vector(coset_conditions(F, p, frobenius_difference(F, alpha, p.s)));
}

/// Evaluates p at every point of alpha + F_{q^delta}^k.
inline bool vanishes_on_coset_brute(const Field& F, const FsForm& p, const Vec& alpha, std::uint32_t delta = 1) {
  const Vec sub = F.subfield_elements(delta);
  const std::size_t k = p.k;
  std::vector<std::size_t> idx(k, 0);
  Vec x(k);
  for (;;) {
    for (std::size_t j = 0; j < k; ++j) x[j] = F.add(alpha[j], sub[idx[j]]);
    if (evaluate(F, p, x).value != 0) return false;
    std::size_t j = 0;
    while (j < k && ++idx[j] == sub.size()) idx[j++] = 0;
    if (j == k) return true;
  }
}

inline std::uint32_t gcd_sm(const Field& F, std::uint64_t s) {
  return static_cast<std::uint32_t>(std::gcd<std::uint64_t, std::uint64_t>(s, F.m()));
}

/// V_alpha = V_beta, decided by comparing alpha^{[s]} - alpha and beta^{[s]} - beta.
inline bool coset_equal(const Field& F, const Vec& alpha, const Vec& beta, std::uint64_t s) {
  if (gcd_sm(F, s) != 1) throw MathError("coset_equal needs gcd(s, m) = 1");
  return frobenius_difference(F, alpha, s) == frobenius_difference(F, beta, s);
}

/// Representative of alpha + F_q^k: every entry with its constant coefficient zeroed.
inline Vec fq_coset_representative(const Field& F, const Vec& alpha) {
  Vec out(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) out[j] = {alpha[j].value - alpha[j].value % F.q()};
  return out;
}

/// Number of distinct cosets of F_q^k met by F_{q^delta}^k, by enumeration.
inline std::uint64_t subfield_coset_partition_count(const Field& F, std::size_t k, std::uint32_t delta,
                                                    std::uint64_t max_enum = kDefaultMaxEnum) {
  const Vec sub = F.subfield_elements(delta);
  const auto total = ipow_checked(sub.size(), k);
  if (!total || *total > max_enum) throw BudgetError("subfield enumeration exceeds budget");
  std::set<Vec> reps;
  std::vector<std::size_t> idx(k, 0);
  Vec x(k);
  for (std::uint64_t n = 0; n < *total; ++n) {
    for (std::size_t j = 0; j < k; ++j) x[j] = sub[idx[j]];
    reps.insert(fq_coset_representative(F, x));
    for (std::size_t j = 0; j < k && ++idx[j] == sub.size(); ++j) idx[j] = 0;
  }
  return reps.size();
}

/// dim over F_{q^delta} of {v : Tr_{q^m/q^delta}(abar_j v) = 0 for all j}.
/// Rows are the functionals on the F_{q^delta}-basis 1, x, ..., x^{m/delta - 1}.
inline std::size_t trace_kernel_dim(const FieldPtr& field, const Vec& abar, std::uint32_t delta) {
  const Field& F = *field;
  const std::size_t width = F.m() / delta;
  Matrix T(field, abar.size(), width);
  for (std::size_t j = 0; j < abar.size(); ++j) {
    Element b = F.one();
    for (std::size_t l = 0; l < width; ++l) {
      T(j, l) = F.trace(F.mul(abar[j], b), delta);
      b = F.mul(b, F.generator());
    }
  }
  return width - rank(std::move(T));
}

struct CosetZeroReport {
  std::uint64_t s = 1;
  std::uint32_t delta = 1;
  std::size_t r = 0;
  std::uint64_t zero_count = 0;
  std::uint64_t lower_bound = 0;
  std::uint64_t upper_bound = 0;
  std::vector<std::size_t> subspace_dims;
  std::vector<Vec> alpha_bars;  // spanning members of the zero set, first found
  std::vector<Vec> alphas;      // one preimage per alpha_bar
  std::uint64_t coset_multiplier = 1;       // F_q^k-cosets per alpha + F_{q^delta}^k
  std::uint64_t vanishing_coset_count = 0;  // zero_count * coset_multiplier
  std::uint64_t max_zero_count = 0;         // q^{(k-2)(m-delta)}
  bool tight = false;
};

/// Zero set {abar : p vanishes on alpha + F_{q^delta}^k}, enumerated over the
/// image of y -> y^{[s]} - y entrywise.
inline CosetZeroReport zero_coset_report(const FieldPtr& field, const FsForm& p, std::uint64_t max_enum = kDefaultMaxEnum) {
  const Field& F = *field;
  if (p.k < 2) throw MathError("forms in F_s need k >= 2");
  if (p.s == 0 || p.s >= F.m()) throw MathError("s must lie in 1..m-1");
  if (p.coeffs.size() != FsForm::pair_count(p.k)) throw MathError("form has the wrong number of coefficients");
  if (p.is_zero()) throw MathError("zero-coset bounds need a nonzero form");
  const std::uint32_t delta = gcd_sm(F, p.s);
  const std::size_t k = p.k;

  // one preimage per image value of y -> y^{[s]} - y
  std::vector<std::int64_t> pre(F.order(), -1);
  Vec image;
  for (std::uint32_t y = 0; y < F.order(); ++y) {
    const Element d = F.sub(F.frobenius({y}, p.s), {y});
    if (pre[d.value] < 0) {
      pre[d.value] = y;
      image.push_back(d);
    }
  }
  const auto total = ipow_checked(image.size(), k);
  if (!total || *total > max_enum) throw BudgetError("zero-coset enumeration exceeds budget");

  CosetZeroReport rep;
  rep.s = p.s;
  rep.delta = delta;
  EchelonBasis span(field, k);
  std::vector<std::size_t> idx(k, 0);
  Vec abar(k);
  for (std::uint64_t n = 0; n < *total; ++n) {
    for (std::size_t j = 0; j < k; ++j) abar[j] = image[idx[j]];
    if (is_zero_vector(coset_conditions(F, p, abar))) {
      ++rep.zero_count;
      if (span.insert(abar)) {
        rep.alpha_bars.push_back(abar);
        Vec a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = {static_cast<std::uint32_t>(pre[abar[j].value])};
        rep.alphas.push_back(std::move(a));
      }
    }
    for (std::size_t j = 0; j < k && ++idx[j] == image.size(); ++j) idx[j] = 0;
  }
  rep.r = span.rank();
  std::size_t dim_sum = 0;
  for (const auto& ab : rep.alpha_bars) {
    rep.subspace_dims.push_back(trace_kernel_dim(field, ab, delta));
    dim_sum += rep.subspace_dims.back();
  }
  rep.lower_bound = ipow(ipow(F.q(), delta), dim_sum);
  rep.upper_bound = ipow(F.q(), rep.r * (F.m() - delta));
  rep.coset_multiplier = delta == 1 ? 1 : subfield_coset_partition_count(F, k, delta, max_enum);
  rep.vanishing_coset_count = rep.zero_count * rep.coset_multiplier;
  rep.max_zero_count = ipow(F.q(), (k - 2) * (F.m() - delta));
  rep.tight = rep.zero_count == rep.max_zero_count;
  return rep;
}

inline CosetZeroReport zero_cosets(const FieldPtr& field, const FsForm& p, std::uint64_t max_enum = kDefaultMaxEnum) {
  if (gcd_sm(*field, p.s) != 1) throw MathError("gcd(s, m) > 1: use zero_cosets_delta");
  return zero_coset_report(field, p, max_enum);
}

inline CosetZeroReport zero_cosets_delta(const FieldPtr& field, const FsForm& p, std::uint64_t max_enum = kDefaultMaxEnum) {
  if (gcd_sm(*field, p.s) == 1) throw MathError("gcd(s, m) = 1: use zero_cosets");
  return zero_coset_report(field, p, max_enum);
}

/// Counts F_q^k-cosets alpha + F_q^k on which p vanishes by evaluating p at
/// every point of every coset.
inline std::uint64_t count_vanishing_cosets_brute(const Field& F, const FsForm& p, std::uint64_t max_enum = kDefaultMaxEnum) {
  const std::size_t k = p.k;
  // coset representatives: entries with zero constant coefficient
  const std::uint32_t reps_per_entry = F.order() / F.q();
  const auto total = ipow_checked(reps_per_entry, k);
  if (!total || *total * ipow(F.q(), k) > max_enum) throw BudgetError("coset enumeration exceeds budget");
  std::uint64_t count = 0;
  std::vector<std::uint32_t> idx(k, 0);
  Vec alpha(k);
  for (std::uint64_t n = 0; n < *total; ++n) {
    for (std::size_t j = 0; j < k; ++j) alpha[j] = {idx[j] * F.q()};
    if (vanishes_on_coset_brute(F, p, alpha)) ++count;
    for (std::size_t j = 0; j < k && ++idx[j] == reps_per_entry; ++j) idx[j] = 0;
  }
  return count;
}

/// Checks vanishing on V_{l1 a1 + l2 a2} for every (l1, l2) in F_q^2.
inline bool linearity_check(const Field& F, const FsForm& p, const Vec& a1, const Vec& a2) {
  if (!vanishes_on_coset_brute(F, p, a1) || !vanishes_on_coset_brute(F, p, a2))
    throw MathError("linearity check needs p to vanish on both cosets");
  for (std::uint32_t l1 = 0; l1 < F.q(); ++l1)
    for (std::uint32_t l2 = 0; l2 < F.q(); ++l2) {
      Vec a(a1.size());
      for (std::size_t j = 0; j < a.size(); ++j) a[j] = F.add(F.mul({l1}, a1[j]), F.mul({l2}, a2[j]));
      if (!vanishes_on_coset_brute(F, p, a)) return false;
    }
  return true;
}

/// Basis of the forms in F_s vanishing on every V_alpha with the given alpha-bars.
inline std::vector<FsForm> forms_vanishing_on(const FieldPtr& field, std::size_t k, std::uint64_t s,
                                              const std::vector<Vec>& abars) {
  std::vector<FsForm> out;
  const std::size_t unknowns = FsForm::pair_count(k);
  if (abars.empty()) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      FsForm f = FsForm::zero(*field, k, s);
      f.coeffs[u] = field->one();
      out.push_back(std::move(f));
    }
    return out;
  }
  for (auto& v : solve_right_kernel(coset_condition_matrix(field, k, abars))) out.push_back({k, s, std::move(v)});
  return out;
}

/// Draws k-1 vectors alpha_i with independent alpha-bars and reports whether
/// the only form vanishing on all V_{alpha_i} is zero.
inline bool max_zero_form_check(const FieldPtr& field, std::size_t k, std::uint64_t s, std::uint64_t seed = 1) {
  const Field& F = *field;
  if (k < 2) throw MathError("max_zero_form_check needs k >= 2");
  if (gcd_sm(F, s) != 1) throw MathError("max_zero_form_check needs gcd(s, m) = 1");
  if (F.m() < 2) throw MathError("no alpha with nonzero alpha-bar exists when m = 1");
  CounterRng rng(seed);
  EchelonBasis span(field, k);
  std::vector<Vec> abars;
  for (std::size_t tries = 0; abars.size() < k - 1; ++tries) {
    if (tries > 10000) throw MathError("could not find independent alpha-bars");
    Vec a(k);
    for (auto& x : a) x = F.from_index(rng.uniform(F.order()));
    Vec ab = frobenius_difference(F, a, s);
    if (span.insert(ab)) abars.push_back(std::move(ab));
  }
  return forms_vanishing_on(field, k, s, abars).empty();
}

/// The form vanishing on V_{gamma e_1}, ..., V_{gamma e_{k-2}} with gamma the
/// generator of F_{q^m} (outside every proper subfield).
inline FsForm tightness_form(const FieldPtr& field, std::size_t k, std::uint64_t s) {
  const Field& F = *field;
  if (k < 2) throw MathError("tightness form needs k >= 2");
  if (s == 0 || s >= F.m()) throw MathError("s must lie in 1..m-1");
  const Element gamma = F.generator();
  const Element gbar = F.sub(F.frobenius(gamma, s), gamma);
  std::vector<Vec> abars;
  for (std::size_t i = 0; i + 2 < k; ++i) {
    Vec v(k, F.zero());
    v[i] = gbar;
    abars.push_back(std::move(v));
  }
  auto sols = forms_vanishing_on(field, k, s, abars);
  if (sols.empty()) throw std::logic_error("tightness system has no nonzero solution");
  return sols.back();
}

/// Alpha-bars on which every form of the family vanishes (intersection of the
/// per-form zero sets). No bounds are claimed for families.
inline std::uint64_t common_zero_count(const FieldPtr& field, const std::vector<FsForm>& forms,
                                       std::uint64_t max_enum = kDefaultMaxEnum) {
  if (forms.empty()) throw MathError("empty family of forms");
  const Field& F = *field;
  const FsForm& p0 = forms.front();
  Vec image;
  std::vector<bool> seen(F.order(), false);
  for (std::uint32_t y = 0; y < F.order(); ++y) {
    const Element d = F.sub(F.frobenius({y}, p0.s), {y});
    if (!seen[d.value]) {
      seen[d.value] = true;
      image.push_back(d);
    }
  }
  const auto total = ipow_checked(image.size(), p0.k);
  if (!total || *total > max_enum) throw BudgetError("zero-coset enumeration exceeds budget");
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(p0.k, 0);
  Vec abar(p0.k);
  for (std::uint64_t n = 0; n < *total; ++n) {
    for (std::size_t j = 0; j < p0.k; ++j) abar[j] = image[idx[j]];
    bool all = true;
    for (const auto& f : forms) {
      if (f.k != p0.k || f.s != p0.s) throw MathError("forms in a family must share k and s");
      if (!is_zero_vector(coset_conditions(F, f, abar))) {
        all = false;
        break;
      }
    }
    if (all) ++count;
    for (std::size_t j = 0; j < p0.k && ++idx[j] == image.size(); ++j) idx[j] = 0;
  }
  return count;
}

}  // namespace rankinv
