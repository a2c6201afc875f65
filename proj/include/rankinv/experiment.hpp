#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rankinv/code.hpp"
#include "rankinv/combinatorics.hpp"
#include "rankinv/error.hpp"
#include "rankinv/hilbert.hpp"

namespace rankinv {

struct ExperimentConfig {
  FieldPtr field;
  std::size_t n = 0, k = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool record_sequence = true;
  bool record_qsum = true;
  bool record_delta = true;
  std::uint64_t max_enum = kDefaultMaxEnum;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> delta_rank;
  std::optional<std::size_t> qsum1;
  std::vector<std::uint64_t> sequence;  // empty when not recorded
  std::optional<std::uint64_t> h_qplus1;
};

struct ExperimentSummary {
  std::size_t trials = 0;
  std::vector<std::uint64_t> modal_sequence;
  std::size_t modal_count = 0;
  double modal_fraction = 0;
  std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> sequence_distribution;  // most frequent first
  std::map<std::uint64_t, std::size_t> h_qplus1_histogram;
  std::map<std::size_t, std::size_t> delta_rank_histogram;
  std::size_t full_rank_target = 0;  // min(k, n-k)
  double full_rank_fraction = 0;
  std::uint64_t predicted_h_qplus1 = 0;  // closed form at full delta rank
  double bound = 0;                      // 1 - r / q^{m-1}
  double bound_sigma = 0;                // binomial standard deviation at the bound
};

/// Trial i draws its code from seed ^ i.
inline TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = cfg.seed ^ static_cast<std::uint64_t>(index);
  const RankMetricCode code = random_systematic(cfg.field, cfg.n, cfg.k, rec.seed);
  if (cfg.record_delta) rec.delta_rank = delta_rank(code, 1);
  if (cfg.record_qsum) rec.qsum1 = qsum_dim(code, 1);
  if (cfg.record_sequence) {
    const auto rep = hilbert_sequence(linear_set(code, cfg.max_enum), cfg.field->q() + 1);
    rec.sequence = rep.values;
    rec.h_qplus1 = rep.values[cfg.field->q() + 1];
  }
  return rec;
}

inline ExperimentSummary summarize(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  ExperimentSummary sum;
  sum.trials = records.size();
  std::map<std::vector<std::uint64_t>, std::size_t> seqs;
  std::size_t full = 0;
  sum.full_rank_target = std::min(cfg.k, cfg.n - cfg.k);
  for (const auto& r : records) {
    if (!r.sequence.empty()) ++seqs[r.sequence];
    if (r.h_qplus1) ++sum.h_qplus1_histogram[*r.h_qplus1];
    if (r.delta_rank) {
      ++sum.delta_rank_histogram[*r.delta_rank];
      if (*r.delta_rank == sum.full_rank_target) ++full;
    }
  }
  sum.sequence_distribution.assign(seqs.begin(), seqs.end());
  std::stable_sort(sum.sequence_distribution.begin(), sum.sequence_distribution.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (!sum.sequence_distribution.empty()) {
    sum.modal_sequence = sum.sequence_distribution.front().first;
    sum.modal_count = sum.sequence_distribution.front().second;
    sum.modal_fraction = static_cast<double>(sum.modal_count) / static_cast<double>(sum.trials);
  }
  if (sum.trials) sum.full_rank_fraction = static_cast<double>(full) / static_cast<double>(sum.trials);
  sum.predicted_h_qplus1 = h_qplus1_closed_form(cfg.k, cfg.field->q(), sum.full_rank_target);
  const double denom = std::pow(static_cast<double>(cfg.field->q()), static_cast<double>(cfg.field->m() - 1));
  sum.bound = 1.0 - static_cast<double>(sum.full_rank_target) / denom;
  const double p = std::clamp(sum.bound, 0.0, 1.0);
  sum.bound_sigma = sum.trials ? std::sqrt(p * (1 - p) / static_cast<double>(sum.trials)) : 0;
  return sum;
}

inline std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
  if (!cfg.field) throw MathError("experiment needs a field");
  if (cfg.trials < 1) throw MathError("experiment needs at least one trial");
  if (cfg.k == 0 || cfg.k >= cfg.n) throw MathError("experiment needs 0 < k < n");
  std::vector<TrialRecord> out;
  out.reserve(cfg.trials);
  for (std::size_t i = 0; i < cfg.trials; ++i) out.push_back(run_trial(cfg, i));
  return out;
}

}  // namespace rankinv
