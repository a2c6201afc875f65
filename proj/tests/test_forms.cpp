#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace rankinv;
using oracle::gf;

namespace {

Vec random_vec(const Field& F, std::size_t k, CounterRng& rng) {
  Vec v(k);
  for (auto& x : v) x = F.from_index(rng.uniform(F.order()));
  return v;
}

FsForm random_form(const Field& F, std::size_t k, std::uint64_t s, CounterRng& rng, bool sparse) {
  FsForm p = FsForm::zero(F, k, s);
  for (auto& c : p.coeffs)
    if (!sparse || rng.uniform(2)) c = F.from_index(rng.uniform(F.order()));
  if (p.is_zero()) p.coeffs[0] = F.one();
  return p;
}

// The set of abar = alpha^{[s]} - alpha over all alpha whose coset p vanishes on, by evaluation.
std::set<Vec> zero_set_brute(const Field& F, const FsForm& p, std::uint32_t delta) {
  std::set<Vec> out;
  const std::size_t k = p.k;
  std::vector<std::uint32_t> idx(k, 0);
  Vec a(k);
  for (;;) {
    for (std::size_t j = 0; j < k; ++j) a[j] = {idx[j]};
    const Vec ab = frobenius_difference(F, a, p.s);
    if (!out.count(ab) && vanishes_on_coset_brute(F, p, a, delta)) out.insert(ab);
    std::size_t j = 0;
    while (j < k && ++idx[j] == F.order()) idx[j++] = 0;
    if (j == k) break;
  }
  return out;
}

}  // namespace

TEST(CosetConditions, AgreeWithEvaluation) {
  struct Case {
    const char* key;
    std::size_t k;
    std::uint64_t s;
  };
  int pairs = 0;
  for (auto c : {Case{"gf8", 2, 1}, Case{"gf8", 3, 2}, Case{"gf16", 2, 1}, Case{"gf16", 3, 3}, Case{"gf9", 2, 1},
                 Case{"gf27", 2, 2}, Case{"gf16", 2, 2}, Case{"gf16/4", 2, 1}}) {
    auto F = gf(c.key);
    CounterRng rng(c.k * 31 + c.s);
    for (int t = 0; t < 150; ++t, ++pairs) {
      auto p = random_form(*F, c.k, c.s, rng, t % 2);
      Vec a = random_vec(*F, c.k, rng);
      // bias towards zero alpha-bars so both outcomes occur
      if (t % 3 == 0) a = fq_coset_representative(*F, a), a[0] = F->zero();
      const std::uint32_t delta = gcd_sm(*F, c.s);
      ASSERT_EQ(vanishes_on_coset(*F, p, a), vanishes_on_coset_brute(*F, p, a, delta)) << c.key << " t=" << t;
    }
  }
  EXPECT_GE(pairs, 1000);
}

TEST(CosetConditions, SimpleCases) {
  auto F = gf("gf8");
  CounterRng rng(1);
  auto p = random_form(*F, 3, 1, rng, false);
  EXPECT_TRUE(vanishes_on_coset(*F, p, {F->one(), F->zero(), F->one()}));
  EXPECT_TRUE(vanishes_on_coset(*F, FsForm::zero(*F, 3, 1), random_vec(*F, 3, rng)));

  FsForm q2 = FsForm::zero(*F, 2, 1);
  q2.a(0, 1) = F->one();
  const Vec a{F->generator(), F->zero()};
  EXPECT_FALSE(vanishes_on_coset(*F, q2, a));
  EXPECT_FALSE(vanishes_on_coset_brute(*F, q2, a));
}

TEST(CosetConditions, Homogeneity) {
  auto F = gf("gf27");
  CounterRng rng(4);
  for (int t = 0; t < 200; ++t) {
    auto p = random_form(*F, 3, 1, rng, false);
    const Vec al = random_vec(*F, 3, rng), a = {Element{rng.uniform(3) > 0 ? 1u : 0u}, Element{2}, Element{0}};
    for (std::uint32_t l = 1; l < 3; ++l) {
      const Element lam{l};
      Vec lhs(3), rhs(3);
      for (std::size_t j = 0; j < 3; ++j) {
        lhs[j] = F->add(F->mul(lam, al[j]), a[j]);
        rhs[j] = F->add(al[j], F->div(a[j], lam));
      }
      EXPECT_EQ(evaluate(*F, p, lhs), F->mul(F->mul(lam, lam), evaluate(*F, p, rhs)));
    }
  }
}

TEST(CosetEqual, ExamplesAndOracle) {
  auto F = gf("gf64");
  CounterRng rng(2);
  const Vec a = random_vec(*F, 3, rng);
  Vec b = a;
  b[1] = F->add(b[1], F->one());
  EXPECT_TRUE(coset_equal(*F, a, b, 1));
  EXPECT_FALSE(coset_equal(*F, Vec(3, F->zero()), {F->generator(), F->zero(), F->zero()}, 1));
  for (int t = 0; t < 500; ++t) {
    const Vec x = random_vec(*F, 2, rng);
    Vec y = random_vec(*F, 2, rng);
    if (t % 2) y = {F->add(x[0], Element{static_cast<std::uint32_t>(rng.uniform(2))}), x[1]};
    bool in_fq = true;
    for (std::size_t j = 0; j < 2; ++j) in_fq = in_fq && F->in_subfield(F->sub(x[j], y[j]), 1);
    EXPECT_EQ(coset_equal(*F, x, y, 5), in_fq);
  }
  EXPECT_THROW(coset_equal(*F, a, b, 2), MathError);
}

TEST(ZeroCosets, Preconditions) {
  auto F = gf("gf8");
  EXPECT_THROW(zero_cosets(F, FsForm::zero(*F, 3, 1)), MathError);
  FsForm one = FsForm::zero(*F, 1, 1);
  EXPECT_THROW(zero_cosets(F, one), MathError);
  FsForm p = FsForm::zero(*F, 2, 3);
  p.coeffs[0] = F->one();
  EXPECT_THROW(zero_cosets(F, p), MathError);
  auto F16 = gf("gf16");
  FsForm d = FsForm::zero(*F16, 2, 2);
  d.coeffs[0] = F16->one();
  EXPECT_THROW(zero_cosets(F16, d), MathError);
  d.s = 1;
  EXPECT_THROW(zero_cosets_delta(F16, d), MathError);
  auto F256 = gf("gf256");
  FsForm big = FsForm::zero(*F256, 4, 1);
  big.coeffs[0] = F256->one();
  EXPECT_THROW(zero_cosets(F256, big), BudgetError);
}

TEST(ZeroCosets, KTwoHasOnlyTheTrivialCoset) {
  for (const char* key : {"gf8", "gf16", "gf9", "gf32"}) {
    auto F = gf(key);
    CounterRng rng(3);
    for (int t = 0; t < 20; ++t) {
      auto rep = zero_cosets(F, random_form(*F, 2, 1, rng, false));
      EXPECT_EQ(rep.zero_count, 1u);
      EXPECT_EQ(rep.max_zero_count, 1u);
    }
  }
}

TEST(ZeroCosets, MatchesBruteForceAndBounds) {
  struct Case {
    const char* key;
    std::size_t k;
    std::uint64_t s;
  };
  for (auto c : {Case{"gf8", 3, 1}, Case{"gf8", 3, 2}, Case{"gf4", 3, 1}, Case{"gf16", 2, 2}, Case{"gf9", 3, 1},
                 Case{"gf4", 4, 1}}) {
    auto F = gf(c.key);
    CounterRng rng(c.k + 10 * c.s);
    const std::uint32_t delta = gcd_sm(*F, c.s);
    for (int t = 0; t < 12; ++t) {
      auto p = random_form(*F, c.k, c.s, rng, true);
      auto rep = zero_coset_report(F, p);
      const auto brute = zero_set_brute(*F, p, delta);
      EXPECT_EQ(rep.zero_count, brute.size()) << c.key;
      EXPECT_LE(rep.lower_bound, rep.zero_count);
      EXPECT_LE(rep.zero_count, rep.upper_bound);
      EXPECT_LE(rep.zero_count, rep.max_zero_count);
      // F_q-closed
      for (const auto& x : brute)
        for (const auto& y : brute)
          for (std::uint32_t l = 0; l < F->q(); ++l) {
            Vec z(c.k);
            for (std::size_t j = 0; j < c.k; ++j) z[j] = F->add(F->mul({l}, x[j]), y[j]);
            ASSERT_TRUE(brute.count(z));
          }
      std::uint64_t pw = 1;
      while (pw < rep.zero_count) pw *= F->q();
      EXPECT_EQ(pw, rep.zero_count);
      EXPECT_EQ(common_zero_count(F, {p}), rep.zero_count);
      EXPECT_EQ(count_vanishing_cosets_brute(*F, p), rep.vanishing_coset_count);
    }
  }
}

TEST(ZeroCosets, Tightness) {
  for (const char* key : {"gf8", "gf16", "gf27"}) {
    auto F = gf(key);
    auto rep = zero_cosets(F, tightness_form(F, 3, 1));
    EXPECT_TRUE(rep.tight) << key;
    EXPECT_EQ(rep.zero_count, ipow(F->q(), F->m() - 1));
    EXPECT_EQ(rep.zero_count, rep.upper_bound);
  }
  auto F4 = gf("gf4");
  auto rep4 = zero_cosets(F4, tightness_form(F4, 4, 1));
  EXPECT_TRUE(rep4.tight);
  EXPECT_EQ(rep4.zero_count, 4u);
}

TEST(ZeroCosetsDelta, SubfieldCosetStructure) {
  auto F = gf("gf16");
  // F_4^2 splits into q^{k(delta-1)} = 4 cosets of F_2^2
  EXPECT_EQ(subfield_coset_partition_count(*F, 2, 2), 4u);
  EXPECT_EQ(subfield_coset_partition_count(*F, 3, 2), 8u);
  EXPECT_EQ(subfield_coset_partition_count(*F, 2, 1), 1u);
  auto F64 = gf("gf64");
  EXPECT_EQ(subfield_coset_partition_count(*F64, 2, 3), 16u);

  CounterRng rng(8);
  FsForm p = random_form(*F, 2, 2, rng, false);
  auto rep = zero_cosets_delta(F, p);
  EXPECT_EQ(rep.delta, 2u);
  EXPECT_EQ(rep.zero_count, 1u);
  EXPECT_EQ(rep.coset_multiplier, 4u);
  EXPECT_EQ(rep.vanishing_coset_count, 4u);
  EXPECT_EQ(count_vanishing_cosets_brute(*F, p), 4u);
}

TEST(ZeroCosetsDelta, SiblingsShareVanishing) {
  auto F = gf("gf16");
  CounterRng rng(12);
  const Vec sub = F->subfield_elements(2);
  for (int t = 0; t < 40; ++t) {
    auto p = random_form(*F, 3, 2, rng, true);
    const Vec a = random_vec(*F, 3, rng);
    const bool v0 = vanishes_on_coset_brute(*F, p, a, 1);
    for (const auto& v : sub) {
      Vec b = a;
      b[t % 3] = F->add(b[t % 3], v);
      EXPECT_EQ(vanishes_on_coset_brute(*F, p, b, 1), v0);
    }
  }
}

TEST(TraceKernel, MatchesRankWeightAtDeltaOne) {
  auto F = gf("gf64");
  CounterRng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Vec ab = random_vec(*F, 1 + t % 3, rng);
    EXPECT_EQ(trace_kernel_dim(F, ab, 1), F->m() - rank_weight(F, ab));
  }
}

TEST(Linearity, ClosedUnderFqCombinations) {
  auto F = gf("gf8");
  CounterRng rng(6);
  for (int t = 0; t < 10; ++t) {
    Vec a1 = random_vec(*F, 4, rng), a2 = random_vec(*F, 4, rng);
    auto forms = forms_vanishing_on(F, 4, 1, {frobenius_difference(*F, a1, 1), frobenius_difference(*F, a2, 1)});
    ASSERT_FALSE(forms.empty());
    FsForm p = forms[0];
    for (std::size_t i = 1; i < forms.size(); ++i)
      for (std::size_t u = 0; u < p.coeffs.size(); ++u) p.coeffs[u] = F->add(p.coeffs[u], forms[i].coeffs[u]);
    EXPECT_TRUE(linearity_check(*F, p, a1, a2));
  }
  FsForm q = FsForm::zero(*F, 2, 1);
  q.a(0, 1) = F->one();
  EXPECT_THROW(linearity_check(*F, q, {F->generator(), F->zero()}, {F->zero(), F->zero()}), MathError);
  EXPECT_TRUE(linearity_check(*F, q, {F->one(), F->zero()}, {F->zero(), F->one()}));
}

TEST(MaxZeroForm, OnlyTheZeroForm) {
  auto F = gf("gf8");
  for (std::uint64_t seed = 1; seed < 6; ++seed) {
    EXPECT_TRUE(max_zero_form_check(F, 2, 1, seed));
    EXPECT_TRUE(max_zero_form_check(F, 3, 1, seed));
    EXPECT_TRUE(max_zero_form_check(F, 4, 2, seed));
  }
  EXPECT_EQ(coset_condition_matrix(F, 3, {Vec(3, F->one()), Vec(3, F->generator())}).rows(), 6u);
  EXPECT_THROW(max_zero_form_check(F, 1, 1), MathError);
  FsForm q = FsForm::zero(*F, 2, 1);
  q.a(0, 1) = F->one();
  EXPECT_TRUE(forms_vanishing_on(F, 2, 1, {{F->generator(), F->zero()}}).empty());
}
