// cossum: recover sparse cosine sums from samples.
//
//   cossum generate    --params p.json --N 100 --K 20 [--noise 10 --seed 1] [--out s.csv]
//   cossum recover     s.csv --K 20 --method espira1 [--truth p.json] [--out r.json]
//   cossum noise-bench --params p.json --N 2000 --K 50 --amplitude 10 --trials 10
//   cossum bessel      --n 3 --B 126 --M 25 --N 400 --K 10 --method espira1
//   cossum dct         s.csv
//
// Every subcommand accepts --config FILE with flat `key = value` lines naming
// its long options; explicit flags win over the file.

#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cli_commands.hpp"

namespace {

using namespace cossum::cli;

void add_solver_flags(CLI::App* sub, SolverOptions& s, std::string& method, bool with_fixed_m,
                      bool& half, bool& full) {
  sub->add_option("--method", method, "esprit | espira1 | espira2 | prony")->capture_default_str();
  sub->add_option("--tol", s.tol, "ESPIRA tolerance (relative)")->capture_default_str();
  sub->add_option("--eps", s.eps, "ESPRIT rank threshold")->capture_default_str();
  sub->add_option("--upper-l", s.upper_l, "ESPRIT window L (0: N/2)")->capture_default_str();
  if (with_fixed_m) sub->add_option("--fixed-m", s.fixed_m, "known number of terms (noisy mode)");
  sub->add_flag("--half-spectrum", half, "ESPIRA: use only g_k, k < N/2");
  sub->add_flag("--full-spectrum", full, "ESPIRA: use all g_k");
}

// Flat `key = value` lines belong to the subcommand being run; sectioned
// keys ([recover] or recover.K) keep their explicit parent.
class SubcommandConfig : public CLI::ConfigTOML {
 public:
  explicit SubcommandConfig(std::string sub) : sub_(std::move(sub)) {}
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigTOML::from_config(input);
    if (sub_.empty()) return items;
    for (auto& item : items)
      if (item.parents.empty() && item.name != "++" && item.name != "--") item.parents = {sub_};
    return items;
  }

 private:
  std::string sub_;
};

void apply_spectrum(SolverOptions& s, bool half, bool full) {
  if (half && full) throw UsageError("--half-spectrum and --full-spectrum exclude each other");
  if (half) s.half_spectrum = true;
  if (full) s.half_spectrum = false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse cosine sum recovery (ESPRIT, ESPIRA-I, ESPIRA-II)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key = value file naming long options; explicit flags win");
  {
    std::string active;
    for (int i = 1; i < argc && active.empty(); ++i)
      for (const char* name : {"generate", "recover", "noise-bench", "bessel", "dct"})
        if (std::string(argv[i]) == name) active = name;
    app.config_formatter(std::make_shared<SubcommandConfig>(active));
  }

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "sample a cosine sum into CSV");
  generate->add_option("--params", gen.params, "JSON with gamma and phi")->required();
  generate->add_option("-N,--N", gen.n, "number of samples")->required();
  generate->add_option("-K,--K", gen.k, "frequency bound, h = pi/K")->required();
  generate->add_option("--noise", gen.noise, "uniform noise amplitude");
  generate->add_option("--seed", gen.seed, "noise seed")->capture_default_str();
  generate->add_option("--out", gen.out, "output CSV (default stdout)");

  RecoverOptions rec;
  std::string rec_method = "espira1";
  bool rec_half = false, rec_full = false;
  auto* recover = app.add_subcommand("recover", "recover parameters from a sample CSV");
  recover->add_option("input", rec.input, "sample CSV")->required();
  recover->add_option("-K,--K", rec.k, "frequency bound used when sampling")->required();
  add_solver_flags(recover, rec.solver, rec_method, true, rec_half, rec_full);
  recover->add_option("--truth", rec.truth, "JSON with the true parameters");
  recover->add_option("--error-interval", rec.error_interval, "e(f) on [0, T] (default pi N / K)");
  recover->add_option("--out", rec.out, "output JSON (default stdout)");

  NoiseBenchOptions bench;
  bool bench_half = false, bench_full = false;
  auto* noise = app.add_subcommand("noise-bench", "repeated recovery from noisy samples");
  noise->add_option("--params", bench.params, "JSON with gamma and phi")->required();
  noise->add_option("-N,--N", bench.n, "number of samples")->required();
  noise->add_option("-K,--K", bench.k, "frequency bound")->required();
  noise->add_option("--amplitude", bench.amplitude, "uniform noise amplitude")->capture_default_str();
  noise->add_option("--trials", bench.trials, "number of seeds")->capture_default_str();
  noise->add_option("--methods", bench.methods, "methods to compare")->delimiter(',')->capture_default_str();
  noise->add_option("--fixed-m", bench.fixed_m, "model order (default: number of true terms)");
  noise->add_option("--seed", bench.seed, "base seed; trial i uses seed + i")->capture_default_str();
  noise->add_option("--error-interval", bench.error_interval, "e(f) on [0, T] (default pi N / K)");
  noise->add_option("--threads", bench.threads, "worker threads (0: all cores)");
  noise->add_option("--tol", bench.solver.tol, "ESPIRA tolerance")->capture_default_str();
  noise->add_option("--upper-l", bench.solver.upper_l, "ESPRIT window L (0: N/2)");
  noise->add_flag("--half-spectrum", bench_half, "ESPIRA: use only g_k, k < N/2 (default in this mode)");
  noise->add_flag("--full-spectrum", bench_full, "ESPIRA: use all g_k");
  noise->add_option("--out", bench.out, "per-trial CSV (default stdout)");
  noise->add_option("--summary", bench.summary, "JSON summary file");

  BesselOptions bes;
  std::string bes_method = "espira1";
  bool bes_half = false, bes_full = false;
  auto* bessel = app.add_subcommand("bessel", "approximate (B/t) J_n(t) by a cosine sum");
  bessel->add_option("-n,--n", bes.n, "Bessel order (odd)")->capture_default_str();
  bessel->add_option("-B,--B", bes.b, "interval end")->capture_default_str();
  bessel->add_option("-M,--M", bes.m, "number of terms")->capture_default_str();
  bessel->add_option("-N,--N", bes.samples, "number of samples")->capture_default_str();
  bessel->add_option("-K,--K", bes.k, "h = pi/K")->capture_default_str();
  add_solver_flags(bessel, bes.solver, bes_method, false, bes_half, bes_full);
  bessel->add_option("--step", bes.step, "error scan step")->capture_default_str();
  bessel->add_option("--out", bes.out, "output JSON (default stdout)");
  bessel->add_option("--curve", bes.curve, "error curve CSV");

  DctOptions dct;
  auto* dct_cmd = app.add_subcommand("dct", "dump DCT-II coefficients and interpolation data");
  dct_cmd->add_option("input", dct.input, "sample CSV")->required();
  dct_cmd->add_option("--out", dct.out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, std::cout, std::cerr);
    if (*recover) {
      rec.solver.method = parse_method(rec_method);
      apply_spectrum(rec.solver, rec_half, rec_full);
      return cmd_recover(rec, std::cout, std::cerr);
    }
    if (*noise) {
      apply_spectrum(bench.solver, bench_half, bench_full);
      return cmd_noise_bench(bench, std::cout, std::cerr);
    }
    if (*bessel) {
      bes.solver.method = parse_method(bes_method);
      apply_spectrum(bes.solver, bes_half, bes_full);
      return cmd_bessel(bes, std::cout, std::cerr);
    }
    if (*dct_cmd) return cmd_dct(dct, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const cossum::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kSolver;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kSolver;
  }
  return kUsage;
}
