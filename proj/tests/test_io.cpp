#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "worked_examples.hpp"

using namespace rankinv;
using oracle::gf;

TEST(Serialize, ElementNotation) {
  auto F = gf("gf8");
  EXPECT_EQ(format_element(*F, F->generator()), "010");
  EXPECT_EQ(parse_element(*F, "110"), F->add(F->one(), F->generator()));
  EXPECT_THROW(parse_element(*F, "12"), ParseError);
  EXPECT_THROW(parse_element(*F, "120"), ParseError);
  auto F16 = gf("gf256/4");
  const Element x = F16->from_index(77);
  EXPECT_EQ(parse_element(*F16, format_element(*F16, x)), x);
  auto big = Field::create_prime_base(11, 2, {7, 1, 1});  // x^2+x+7
  EXPECT_EQ(format_element(*big, {25}), "3:2");
  for (std::uint32_t v = 0; v < big->order(); ++v)
    EXPECT_EQ(parse_element(*big, format_element(*big, {v})).value, v);
}

TEST(Serialize, CodeRoundTrip) {
  for (const char* key : {"gf8", "gf256", "gf27", "gf64/4"}) {
    auto F = gf(key);
    auto C = random_systematic(F, 5, 2, 3);
    const std::string text = code_to_string(C, key);
    EXPECT_EQ(peek_field_comment(text), std::optional<std::string>(key));
    auto D = code_from_string(text, F);
    EXPECT_EQ(D.generator(), C.generator());
    EXPECT_EQ(hilbert_sequence(D).values, hilbert_sequence(C).values);
    EXPECT_EQ(delta_rank(D, 1), delta_rank(C, 1));
  }
}

TEST(Serialize, CodeParseErrors) {
  auto F = gf("gf8");
  EXPECT_THROW(code_from_string("", F), ParseError);
  EXPECT_THROW(code_from_string("# only a comment\n", F), ParseError);
  EXPECT_THROW(code_from_string("2 3 2\n", F), ParseError);
  EXPECT_THROW(code_from_string("2 4 2 1\n100 010\n", F), ParseError);
  EXPECT_THROW(code_from_string("2 3 2 2\n100 010\n", F), ParseError);
  EXPECT_THROW(code_from_string("2 3 2 1\n100\n", F), ParseError);
  EXPECT_THROW(code_from_string("2 3 x 1\n100\n", F), ParseError);
  EXPECT_THROW(code_from_string("2 3 2 2\n100 010\n100 010\n", F), MathError);
  EXPECT_NO_THROW(code_from_string("\n# c\n2 3 2 1\n  100 010  \n", F));
}

TEST(Serialize, FormRoundTrip) {
  auto F = gf("gf16");
  auto p = tightness_form(F, 4, 1);
  std::stringstream ss;
  write_form(ss, *F, p, "gf16");
  auto back = read_form(ss, *F);
  EXPECT_EQ(back.k, 4u);
  EXPECT_EQ(back.s, 1u);
  EXPECT_EQ(back.coeffs, p.coeffs);
  std::stringstream bad("3 1\n1000 0000\n");
  EXPECT_THROW(read_form(bad, *F), ParseError);
  std::stringstream one("1 1\n\n");
  EXPECT_THROW(read_form(one, *F), ParseError);
}

TEST(Serialize, LinearSetListing) {
  std::stringstream ss;
  write_linear_set(ss, linear_set(examples::basic_example()));
  EXPECT_EQ(ss.str(), "000 100 1\n100 000 2\n100 011 1\n100 100 1\n100 101 1\n");
}

TEST(Catalog, BuiltinEntriesBuild) {
  const auto cat = FieldCatalog::builtin();
  for (const auto& [key, spec] : cat.entries()) {
    FieldPtr F;
    ASSERT_NO_THROW(F = spec.build()) << key;
    EXPECT_EQ(spec.default_key(), key);
    EXPECT_EQ(F->q(), spec.q());
  }
}

TEST(Catalog, ParsingAndOverride) {
  auto cat = FieldCatalog::builtin();
  EXPECT_EQ(cat.resolve("2 1 0 1 3 1 1 0 1").build()->order(), 8u);
  EXPECT_EQ(cat.resolve("2,1,0,1,3,1,1,0,1").m, 3u);
  EXPECT_THROW(cat.resolve("gf7"), ParseError);
  EXPECT_THROW(parse_field_spec("2 1 0 1"), ParseError);
  auto hit = cat.find_by_size(2, 8);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->first, "gf256");
  auto spec = *cat.find("gf16/4");
  EXPECT_EQ(parse_field_spec(spec.to_line()).to_line(), spec.to_line());

  const auto path = std::filesystem::temp_directory_path() / "rankinv_catalog_test.txt";
  {
    std::ofstream out(path);
    out << "# alternative modulus\n"
        << "gf8 2 1 0 1 3 1 0 1 1\n"
        << "myfield 3 1 0 1 2 2 2 1  # x^2+2x+2\n";
  }
  ::setenv("RANKINV_CATALOG", path.c_str(), 1);
  auto over = FieldCatalog::standard();
  ::unsetenv("RANKINV_CATALOG");
  EXPECT_EQ(over.find("gf8")->build()->name(), "GF(8)/GF(2) x^3+x^2+1");
  EXPECT_EQ(over.find("myfield")->build()->order(), 9u);
  EXPECT_EQ(FieldCatalog::standard().find("gf8")->build()->name(), "GF(8)/GF(2) x^3+x+1");
  std::filesystem::remove(path);
  ::setenv("RANKINV_CATALOG", "/nonexistent/catalog", 1);
  EXPECT_THROW(FieldCatalog::standard(), ParseError);
  ::unsetenv("RANKINV_CATALOG");
}

TEST(Experiment, DeterministicAndConsistent) {
  ExperimentConfig cfg;
  cfg.field = gf("gf256");
  cfg.n = 6;
  cfg.k = 3;
  cfg.trials = 40;
  cfg.seed = 11;
  const auto a = summarize(cfg, run_experiment(cfg));
  const auto b = summarize(cfg, run_experiment(cfg));
  EXPECT_EQ(a.modal_sequence, b.modal_sequence);
  EXPECT_EQ(a.h_qplus1_histogram, b.h_qplus1_histogram);
  EXPECT_EQ(a.delta_rank_histogram, b.delta_rank_histogram);

  std::size_t seq_total = 0, h_total = 0, d_total = 0;
  double frac = 0;
  for (const auto& [s, c] : a.sequence_distribution) {
    seq_total += c;
    frac += static_cast<double>(c) / a.trials;
  }
  for (const auto& [h, c] : a.h_qplus1_histogram) h_total += c;
  for (const auto& [d, c] : a.delta_rank_histogram) d_total += c;
  EXPECT_EQ(seq_total, 40u);
  EXPECT_EQ(h_total, 40u);
  EXPECT_EQ(d_total, 40u);
  EXPECT_NEAR(frac, 1.0, 1e-12);
  EXPECT_EQ(a.predicted_h_qplus1, 10u);
  EXPECT_NEAR(a.bound, 1.0 - 3.0 / 128.0, 1e-12);
  ASSERT_GE(a.modal_sequence.size(), 4u);
  EXPECT_EQ(a.modal_sequence[3], 10u);

  const auto rec = run_trial(cfg, 5);
  EXPECT_EQ(rec.seed, 11u ^ 5u);
  EXPECT_EQ(random_systematic(cfg.field, 6, 3, rec.seed).generator(),
            random_systematic(cfg.field, 6, 3, 11 ^ 5).generator());
  // every trial's h_{q+1} obeys the closed form at its own delta rank
  for (const auto& r : run_experiment(cfg)) EXPECT_EQ(*r.h_qplus1, h_qplus1_closed_form(3, 2, *r.delta_rank));
}

TEST(Experiment, SingleTrialAndErrors) {
  ExperimentConfig cfg;
  cfg.field = gf("gf27");
  cfg.n = 4;
  cfg.k = 2;
  cfg.trials = 1;
  const auto s = summarize(cfg, run_experiment(cfg));
  EXPECT_DOUBLE_EQ(s.modal_fraction, 1.0);
  cfg.trials = 0;
  EXPECT_THROW(run_experiment(cfg), MathError);
  cfg.trials = 1;
  cfg.k = 4;
  EXPECT_THROW(run_experiment(cfg), MathError);
}

TEST(WorkedExamples, StoredExpectationsHold) {
  for (const auto& c : examples::checks()) EXPECT_EQ(c.actual(), c.expected) << c.name;
}
