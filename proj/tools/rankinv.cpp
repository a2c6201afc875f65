// rankinv: command-line front end for the rank-metric invariants library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankinv/rankinv.hpp"
#include "worked_examples.hpp"

using json = nlohmann::json;
using namespace rankinv;

namespace {

struct Budgets {
  std::uint64_t max_codewords = kDefaultMaxCodewords;
  std::uint64_t max_enum = kDefaultMaxEnum;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FieldPtr field_from_key(const std::string& key) { return FieldCatalog::standard().resolve(key).build(); }

/// --field wins, then a `# field` comment, then the catalog entry matching q and m.
FieldPtr field_for_file(const std::string& text, const std::string& field_opt) {
  if (!field_opt.empty()) return field_from_key(field_opt);
  if (auto f = peek_field_comment(text)) return field_from_key(*f);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    std::istringstream hs(line);
    std::uint64_t q = 0, m = 0;
    if (!(hs >> q >> m)) throw ParseError("code header must be 'q m n k'");
    auto hit = FieldCatalog::standard().find_by_size(q, static_cast<std::uint32_t>(m));
    if (!hit) throw ParseError("no catalog field with q=" + std::to_string(q) + " m=" + std::to_string(m) + "; pass --field");
    return hit->second.build();
  }
  throw ParseError("empty code file");
}

RankMetricCode load_code(const std::string& path, const std::string& field_opt) {
  const std::string text = slurp(path);
  return code_from_string(text, field_for_file(text, field_opt));
}

json vec_json(const Field& F, const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(format_vector(F, v));
  return out;
}

json zero_report_json(const Field& F, const CosetZeroReport& r) {
  return json{{"s", r.s},
              {"delta", r.delta},
              {"r", r.r},
              {"zero_count", r.zero_count},
              {"lower_bound", r.lower_bound},
              {"upper_bound", r.upper_bound},
              {"tight", r.tight},
              {"max_zero_count", r.max_zero_count},
              {"coset_multiplier", r.coset_multiplier},
              {"vanishing_coset_count", r.vanishing_coset_count},
              {"subspace_dims", r.subspace_dims},
              {"alpha_bars", vec_json(F, r.alpha_bars)},
              {"alphas", vec_json(F, r.alphas)}};
}

json summary_json(const ExperimentConfig& cfg, const ExperimentSummary& s) {
  json dist = json::array();
  for (const auto& [seq, count] : s.sequence_distribution) dist.push_back({{"sequence", seq}, {"count", count}});
  json hq = json::object(), dr = json::object();
  for (const auto& [h, c] : s.h_qplus1_histogram) hq[std::to_string(h)] = c;
  for (const auto& [r, c] : s.delta_rank_histogram) dr[std::to_string(r)] = c;
  return json{{"field", cfg.field->name()},
              {"n", cfg.n},
              {"k", cfg.k},
              {"seed", cfg.seed},
              {"trials", s.trials},
              {"modal_sequence", s.modal_sequence},
              {"modal_count", s.modal_count},
              {"modal_fraction", s.modal_fraction},
              {"sequence_distribution", dist},
              {"h_qplus1_histogram", hq},
              {"delta_rank_histogram", dr},
              {"full_rank_target", s.full_rank_target},
              {"full_rank_fraction", s.full_rank_fraction},
              {"predicted_h_qplus1", s.predicted_h_qplus1},
              {"bound", s.bound},
              {"bound_sigma", s.bound_sigma}};
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& recs) {
  out << "trial,seed,delta_rank,qsum1,h_qplus1,sequence\n";
  auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
  for (const auto& r : recs) {
    out << r.index << ',' << r.seed << ',' << opt(r.delta_rank) << ',' << opt(r.qsum1) << ',' << opt(r.h_qplus1) << ',';
    for (std::size_t i = 0; i < r.sequence.size(); ++i) out << (i ? ";" : "") << r.sequence[i];
    out << '\n';
  }
}

FsForm random_nonzero_form(const Field& F, std::size_t k, std::uint64_t s, std::uint64_t seed) {
  CounterRng rng(seed);
  FsForm p = FsForm::zero(F, k, s);
  while (p.is_zero())
    for (auto& c : p.coeffs) c = F.from_index(rng.uniform(F.order()));
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of linear rank-metric codes: linear sets, Hilbert sequences, q-sums, zero cosets"};
  app.require_subcommand(1);
  Budgets budget;
  app.add_option("--max-codewords", budget.max_codewords, "Codeword enumeration budget")->capture_default_str();
  app.add_option("--max-enum", budget.max_enum, "Enumeration budget for systems, hyperplanes and cosets")->capture_default_str();

  // gen
  std::string gen_field = "gf8", gen_family = "gabidulin", gen_out;
  std::size_t gen_n = 0, gen_k = 0;
  std::uint64_t gen_seed = 0, gen_s = 1;
  auto* gen = app.add_subcommand("gen", "Generate a Gabidulin or random systematic code");
  gen->add_option("--field", gen_field, "Catalog key or inline field spec")->capture_default_str();
  gen->add_option("--family", gen_family, "gabidulin | random")->check(CLI::IsMember({"gabidulin", "random"}))->capture_default_str();
  gen->add_option("--n", gen_n, "Length")->required();
  gen->add_option("--k", gen_k, "Dimension")->required();
  gen->add_option("--seed", gen_seed, "Seed for random codes")->capture_default_str();
  gen->add_option("--s", gen_s, "Gabidulin parameter s")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  // shared file-input options
  std::string in_path, in_field;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("code", in_path, "Code file")->required();
    sub->add_option("--field", in_field, "Field override (catalog key or inline spec)");
  };

  std::size_t hseq_max_degree = 0;
  bool hseq_emit_ls = false;
  auto* hseq = app.add_subcommand("hseq", "F_q-dimension sequence as CSV");
  add_input(hseq);
  hseq->add_option("--max-degree", hseq_max_degree, "Emit rows through at least this degree");
  hseq->add_flag("--emit-linear-set", hseq_emit_ls, "Print the linear set (points and weights) instead");

  bool classify_measure = false;
  auto* cls = app.add_subcommand("classify", "Gabidulin-vs-random verdict as JSON");
  add_input(cls);
  cls->add_flag("--measure", classify_measure, "Also measure h_{q+1} from the linear set");

  std::size_t qsum_max = 0;
  auto* qsum = app.add_subcommand("qsum", "Dimensions of the q-sums as CSV");
  add_input(qsum);
  qsum->add_option("--max-i", qsum_max, "Largest i (default n)");

  std::uint64_t fs_s = 1;
  bool fs_no_eval = false;
  auto* fsdim = app.add_subcommand("fsdim", "dim of F_s intersected with the vanishing ideal, two ways, as JSON");
  add_input(fsdim);
  fsdim->add_option("--s", fs_s, "Frobenius exponent s")->capture_default_str();
  fsdim->add_flag("--no-eval", fs_no_eval, "Skip the evaluation method (needs the linear set)");

  std::string z_field = "gf8", z_form;
  std::size_t z_k = 3;
  std::uint64_t z_s = 1, z_seed = 1;
  bool z_tight = false;
  auto* zeros = app.add_subcommand("zeros", "Zero cosets of a form in F_s as JSON");
  zeros->add_option("--field", z_field, "Catalog key or inline field spec")->capture_default_str();
  zeros->add_option("--k", z_k, "Number of variables")->capture_default_str();
  zeros->add_option("--s", z_s, "Frobenius exponent s")->capture_default_str();
  zeros->add_option("--form", z_form, "Form file (header 'k s', then C(k,2) coefficients)");
  zeros->add_option("--seed", z_seed, "Seed for a random nonzero form")->capture_default_str();
  zeros->add_flag("--tightness", z_tight, "Use the extremal form and require the bound to be met");

  ExperimentConfig ex;
  std::string ex_field = "gf256", ex_csv;
  bool ex_no_seq = false;
  auto* exp = app.add_subcommand("experiment", "Batch of random codes; summary JSON, optional per-trial CSV");
  exp->add_option("--field", ex_field, "Catalog key or inline field spec")->capture_default_str();
  exp->add_option("--n", ex.n, "Length")->required();
  exp->add_option("--k", ex.k, "Dimension")->required();
  exp->add_option("--trials", ex.trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
  exp->add_option("--seed", ex.seed, "Base seed; trial i uses seed XOR i")->capture_default_str();
  exp->add_option("--csv", ex_csv, "Write per-trial rows to this file");
  exp->add_flag("--no-sequence", ex_no_seq, "Skip the h-sequence (delta rank and q-sum only)");

  auto* pex = app.add_subcommand("paper-examples", "Run the fixed worked examples against stored expected values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      auto F = field_from_key(gen_field);
      std::optional<RankMetricCode> code;
      if (gen_family == "gabidulin") {
        if (gen_n > F->m()) throw MathError("Gabidulin code needs n <= m");
        code = gabidulin(F, polynomial_basis_points(*F, gen_n), gen_k, gen_s);
      } else {
        code = random_systematic(F, gen_n, gen_k, gen_seed);
      }
      const std::string text = code_to_string(*code, gen_field);
      std::ostringstream params;
      params << gen_family << " [" << gen_n << "," << gen_k << "] over " << F->name();
      if (gen_family == "gabidulin") params << " s=" << gen_s;
      else params << " seed=" << gen_seed;
      if (gen_out.empty()) {
        std::cout << text;
        std::cerr << params.str() << '\n';
      } else {
        std::ofstream out(gen_out);
        if (!out) throw ParseError("cannot write '" + gen_out + "'");
        out << text;
        std::cout << params.str() << '\n';
      }
    } else if (*hseq) {
      const auto code = load_code(in_path, in_field);
      const auto ls = linear_set(code, budget.max_enum);
      if (hseq_emit_ls) {
        write_linear_set(std::cout, ls);
      } else {
        const auto rep = hilbert_sequence(ls, hseq_max_degree);
        std::cout << "i,h_i,ideal_dim_i\n";
        for (std::size_t i = 0; i < rep.values.size(); ++i)
          std::cout << i << ',' << rep.values[i] << ',' << rep.ideal_dims[i] << '\n';
        std::cout << "# regularity,point_count\n" << rep.regularity << ',' << rep.point_count << '\n';
      }
    } else if (*cls) {
      const auto code = load_code(in_path, in_field);
      const auto c = classify(code, classify_measure, budget.max_enum);
      json out{{"verdict", to_string(c.verdict)}, {"r", c.r}, {"predicted_h", c.predicted_h}, {"qsum1", c.qsum1}};
      if (c.measured_h) out["measured_h"] = *c.measured_h;
      if (!c.note.empty()) out["note"] = c.note;
      std::cout << out.dump() << '\n';
    } else if (*qsum) {
      const auto code = load_code(in_path, in_field);
      const std::size_t top = qsum_max ? qsum_max : code.n();
      std::cout << "i,qsum_dim\n";
      for (std::size_t i = 0; i <= top; ++i) std::cout << i << ',' << qsum_dim(code, i) << '\n';
    } else if (*fsdim) {
      const auto code = load_code(in_path, in_field);
      const std::size_t r = delta_rank(code, fs_s);
      json out{{"s", fs_s},
               {"delta_rank", r},
               {"system", fs_intersection_dim_system(code, fs_s)},
               {"predicted", binom2(static_cast<std::int64_t>(code.k()) - static_cast<std::int64_t>(r))},
               {"h_upper_bound", h_qsplus1_upper_bound(code, fs_s)}};
      if (!fs_no_eval) out["eval"] = fs_intersection_dim_eval(code, fs_s, budget.max_enum);
      std::cout << out.dump() << '\n';
    } else if (*zeros) {
      auto F = field_from_key(z_field);
      FsForm p;
      if (z_tight) {
        p = tightness_form(F, z_k, z_s);
      } else if (!z_form.empty()) {
        std::istringstream in(slurp(z_form));
        p = read_form(in, *F);
      } else {
        p = random_nonzero_form(*F, z_k, z_s, z_seed);
      }
      const auto rep = zero_coset_report(F, p, budget.max_enum);
      json out = zero_report_json(*F, rep);
      out["form"] = format_vector(*F, p.coeffs);
      out["k"] = p.k;
      std::cout << out.dump() << '\n';
      if (z_tight && !rep.tight) {
        std::cerr << "tightness construction did not meet q^{(k-2)(m-delta)}\n";
        return 4;
      }
    } else if (*exp) {
      ex.field = field_from_key(ex_field);
      ex.max_enum = budget.max_enum;
      ex.record_sequence = !ex_no_seq;
      const auto recs = run_experiment(ex);
      const auto sum = summarize(ex, recs);
      if (!ex_csv.empty()) {
        std::ofstream out(ex_csv);
        if (!out) throw ParseError("cannot write '" + ex_csv + "'");
        write_trials_csv(out, recs);
      }
      std::cout << summary_json(ex, sum).dump() << '\n';
    } else if (*pex) {
      std::size_t bad = 0;
      for (const auto& c : examples::checks()) {
        const std::string got = c.actual();
        const bool ok = got == c.expected;
        bad += !ok;
        std::cout << (ok ? "ok       " : "MISMATCH ") << c.name;
        if (!ok) std::cout << "\n  expected: " << c.expected << "\n  actual:   " << got;
        std::cout << '\n';
      }
      return bad ? 1 : 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const MathError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
