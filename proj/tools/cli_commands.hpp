#pragma once

// Command implementations behind the `cossum` executable. They take parsed
// option structs and streams so that tests can drive them without a process.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cossum/cossum.hpp"

namespace cossum::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kUsage = 2, kParse = 3, kSolver = 4, kNotConverged = 5 };

/// Input that could not be read or parsed (exit code 3).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent or missing options (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { esprit, espira1, espira2, prony };

inline Method parse_method(const std::string& name) {
  if (name == "esprit") return Method::esprit;
  if (name == "espira1") return Method::espira1;
  if (name == "espira2") return Method::espira2;
  if (name == "prony") return Method::prony;
  throw UsageError("unknown method '" + name + "' (esprit, espira1, espira2, prony)");
}

inline std::string method_name(Method m) {
  switch (m) {
    case Method::esprit: return "esprit";
    case Method::espira1: return "espira1";
    case Method::espira2: return "espira2";
    case Method::prony: return "prony";
  }
  return "?";
}

// ---------------------------------------------------------------- CSV / JSON io

inline std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

inline double parse_number(const std::string& text, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < text.size() && (text[used] == ' ' || text[used] == '\r')) ++used;
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw ParseError("line " + std::to_string(line_no) + ": '" + text + "' is not a finite number");
  return v;
}

struct SampleTable {
  std::vector<double> t;
  std::vector<double> value;
};

/// Reads a `k,t,value[,clean]` table. Rows must be complete, numeric and
/// indexed 0, 1, 2, ... in order.
inline SampleTable read_samples_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty sample file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "k" || header[1] != "t" || header[2] != "value")
    throw ParseError("sample file header must start with k,t,value");
  SampleTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      // Blank lines are tolerated only at the end of the file.
      std::string rest;
      while (std::getline(in, rest))
        if (!rest.empty() && rest != "\r") throw ParseError("line " + std::to_string(line_no) + ": blank row");
      break;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                       " fields, found " + std::to_string(fields.size()));
    const double k = parse_number(fields[0], line_no);
    if (k != static_cast<double>(table.value.size()))
      throw ParseError("line " + std::to_string(line_no) + ": index out of sequence");
    table.t.push_back(parse_number(fields[1], line_no));
    table.value.push_back(parse_number(fields[2], line_no));
  }
  if (table.value.empty()) throw ParseError("sample file has no rows");
  return table;
}

inline SampleTable read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_samples_csv(in);
}

inline void write_samples_csv(std::ostream& out, const SampleVector& samples, const SampleVector* clean) {
  out << "k,t,value" << (clean ? ",clean" : "") << '\n';
  for (std::size_t k = 0; k < samples.size(); ++k) {
    out << k << ',' << format_double(samples.grid().node(static_cast<std::ptrdiff_t>(k))) << ','
        << format_double(samples[k]);
    if (clean) out << ',' << format_double((*clean)[k]);
    out << '\n';
  }
}

/// Parameters file: {"gamma": [...], "phi": [...]}.
inline CosineSum read_params(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("parameters: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("gamma") || !doc.contains("phi"))
    throw ParseError("parameters must be an object with 'gamma' and 'phi' arrays");
  CosineSum sum;
  try {
    sum.gamma = doc.at("gamma").get<std::vector<double>>();
    sum.phi = doc.at("phi").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("parameters: ") + e.what());
  }
  return sum;
}

inline CosineSum read_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_params(in);
}

inline json to_json(const CosineSum& sum) { return {{"gamma", sum.gamma}, {"phi", sum.phi}}; }

inline json to_json(const ErrorReport& e) {
  json j{{"e_f", e.e_f}};
  j["e_phi"] = e.e_phi ? json(*e.e_phi) : json(nullptr);
  j["e_gamma"] = e.e_gamma ? json(*e.e_gamma) : json(nullptr);
  return j;
}

/// Opens `path` for writing, or returns `fallback` when the path is empty or "-".
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_) throw UsageError("cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

// ---------------------------------------------------------------- solvers

struct SolverOptions {
  Method method = Method::espira1;
  double tol = 1e-13;
  double eps = 1e-10;
  std::optional<std::size_t> fixed_m;
  std::size_t upper_l = 0;
  std::optional<bool> half_spectrum;
};

struct SolverRun {
  Recovery recovery;
  std::optional<GridFrequencyReport> grid;
  double milliseconds = 0.0;
};

inline SolverRun run_solver(const SampleVector& samples, const SolverOptions& opt) {
  SolverRun run;
  const auto start = std::chrono::steady_clock::now();
  switch (opt.method) {
    case Method::esprit:
      run.recovery = esprit_recover(samples, {.upper_bound = opt.upper_l, .eps = opt.eps, .fixed_m = opt.fixed_m});
      break;
    case Method::espira1: {
      auto r = espira1_recover(samples, {.tol = opt.tol, .fixed_m = opt.fixed_m, .half_spectrum = opt.half_spectrum});
      run.recovery = std::move(r.recovery);
      if (!opt.fixed_m) run.grid = std::move(r.grid);
      break;
    }
    case Method::espira2:
      run.recovery = espira2_recover(samples, {.tol = opt.tol, .fixed_m = opt.fixed_m, .half_spectrum = opt.half_spectrum});
      break;
    case Method::prony:
      if (!opt.fixed_m) throw UsageError("method prony needs --fixed-m");
      run.recovery.sum = prony_solve(samples, *opt.fixed_m);
      break;
  }
  run.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

inline json report_skeleton(const std::string& command, const SolverOptions& opt) {
  json r;
  r["schema"] = 1;
  r["command"] = command;
  r["method"] = method_name(opt.method);
  r["options"] = {{"tol", opt.tol}, {"eps", opt.eps}, {"upper_l", opt.upper_l}};
  r["options"]["fixed_m"] = opt.fixed_m ? json(*opt.fixed_m) : json(nullptr);
  r["options"]["half_spectrum"] = opt.half_spectrum ? json(*opt.half_spectrum) : json(nullptr);
  r["diagnostics"] = json::array();
  r["timings"] = json::object();
  return r;
}

inline void fill_report(json& r, const SolverRun& run) {
  r["M"] = run.recovery.sum.size();
  r["phi"] = run.recovery.sum.phi;
  r["gamma"] = run.recovery.sum.gamma;
  r["converged"] = run.recovery.converged;
  for (const auto& d : run.recovery.diagnostics) r["diagnostics"].push_back(d);
  if (!run.recovery.converged) r["diagnostics"].push_back("non-convergence");
  r["timings"]["solve_ms"] = run.milliseconds;
  if (run.grid) {
    json entries = json::array();
    for (const auto& e : run.grid->entries) entries.push_back({{"k", e.k}, {"phi", e.phi}, {"gamma", e.gamma}});
    r["grid_frequencies"] = entries;
  }
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string params;
  std::size_t n = 0;
  double k = 0.0;
  double noise = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

inline int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || !(opt.k > 0.0)) throw UsageError("generate needs --N >= 1 and --K > 0");
  const CosineSum sum = read_params(opt.params);
  try {
    validate(sum, opt.k);
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  }
  const SampleVector clean = sample(sum, SamplingGrid(opt.n, opt.k));
  OutputTarget target(opt.out, out);
  if (opt.noise > 0.0) {
    write_samples_csv(target.stream(), add_noise(clean, opt.noise, opt.seed), &clean);
  } else {
    write_samples_csv(target.stream(), clean, nullptr);
  }
  return kOk;
}

// ---------------------------------------------------------------- recover

struct RecoverOptions {
  std::string input;
  double k = 0.0;
  SolverOptions solver;
  std::string truth;
  std::optional<double> error_interval;
  std::string out;
};

inline int cmd_recover(const RecoverOptions& opt, std::ostream& out, std::ostream& err) {
  if (!(opt.k > 0.0)) throw UsageError("recover needs --K > 0");
  const SampleTable table = read_samples_csv(opt.input);
  const SamplingGrid grid(table.value.size(), opt.k);
  json report = report_skeleton("recover", opt.solver);
  report["N"] = grid.size();
  report["K"] = opt.k;
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    if (std::abs(table.t[i] - grid.node(static_cast<std::ptrdiff_t>(i))) > 1e-9 * (1.0 + std::abs(table.t[i]))) {
      report["diagnostics"].push_back("sample times do not match the grid for K=" + format_double(opt.k));
      break;
    }
  }
  const SampleVector samples(table.value, grid);

  int code = kOk;
  try {
    const SolverRun run = run_solver(samples, opt.solver);
    fill_report(report, run);
    if (!run.recovery.converged) code = kNotConverged;
    if (!opt.truth.empty()) {
      const CosineSum truth = read_params(opt.truth);
      const double end = opt.error_interval.value_or(default_error_interval(grid));
      const auto t0 = std::chrono::steady_clock::now();
      report["errors"] = to_json(relative_errors(truth, run.recovery.sum, end));
      report["errors"]["interval"] = end;
      report["timings"]["errors_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  } catch (const SolverError& e) {
    report["status"] = "solver_error";
    report["diagnostics"].push_back(e.what());
    err << "solver failure: " << e.what() << '\n';
    code = kSolver;
  }
  if (code == kOk || code == kNotConverged) report["status"] = code == kOk ? "ok" : "not_converged";
  OutputTarget target(opt.out, out);
  target.stream() << report.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------- noise-bench

struct NoiseBenchOptions {
  std::string params;
  std::size_t n = 0;
  double k = 0.0;
  double amplitude = 10.0;
  std::size_t trials = 10;
  std::vector<std::string> methods{"esprit", "espira2"};
  std::size_t fixed_m = 0;  // 0: number of terms in the parameters file
  std::uint64_t seed = 1;
  std::optional<double> error_interval;
  std::size_t threads = 0;  // 0: hardware concurrency
  SolverOptions solver;     // tol, eps, upper_l, half_spectrum
  std::string out;
  std::string summary;  // optional JSON summary
};

struct TrialRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string method;
  std::size_t m = 0;
  double e_f = std::numeric_limits<double>::quiet_NaN();
  double e_phi = std::numeric_limits<double>::quiet_NaN();
  double e_gamma = std::numeric_limits<double>::quiet_NaN();
  double snr = 0.0;
  double psnr = 0.0;
  std::string status = "ok";
};

struct BenchSummary {
  std::string method;
  double min_e_f = 0, max_e_f = 0, avg_e_f = 0;
  double min_snr = 0, max_snr = 0, avg_snr = 0;
  double min_psnr = 0, max_psnr = 0, avg_psnr = 0;
  std::size_t failures = 0;
};

/// Runs every trial (seed = base + trial) for each method on the same noisy
/// samples. Trials are independent and spread over a small thread pool.
inline std::vector<TrialRow> run_noise_bench(const CosineSum& truth, const NoiseBenchOptions& opt) {
  const SamplingGrid grid(opt.n, opt.k);
  const SampleVector clean = sample(truth, grid);
  const double end = opt.error_interval.value_or(default_error_interval(grid));
  std::vector<Method> methods;
  for (const auto& m : opt.methods) methods.push_back(parse_method(m));
  const std::size_t order = opt.fixed_m ? opt.fixed_m : truth.size();

  std::vector<TrialRow> rows(opt.trials * methods.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t trial; (trial = next.fetch_add(1)) < opt.trials;) {
      const std::uint64_t seed = opt.seed + trial;
      const SampleVector noisy = add_noise(clean, opt.amplitude, seed);
      SignalToNoise q{};
      try {
        q = snr_psnr(clean, noisy);
      } catch (const std::exception&) {
        q = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
      }
      for (std::size_t i = 0; i < methods.size(); ++i) {
        TrialRow& row = rows[trial * methods.size() + i];
        row.trial = trial;
        row.seed = seed;
        row.method = method_name(methods[i]);
        row.snr = q.snr_db;
        row.psnr = q.psnr_db;
        SolverOptions so = opt.solver;
        so.method = methods[i];
        so.fixed_m = order;
        try {
          const SolverRun run = run_solver(noisy, so);
          const ErrorReport e = relative_errors(truth, run.recovery.sum, end);
          row.m = run.recovery.sum.size();
          row.e_f = e.e_f;
          if (e.e_phi) row.e_phi = *e.e_phi;
          if (e.e_gamma) row.e_gamma = *e.e_gamma;
        } catch (const std::exception& ex) {
          row.status = std::string("failed: ") + ex.what();
        }
      }
    }
  };
  std::size_t threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(opt.trials, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::vector<BenchSummary> summarize(const std::vector<TrialRow>& rows, const std::vector<std::string>& methods) {
  std::vector<BenchSummary> out;
  for (const auto& name : methods) {
    BenchSummary s;
    s.method = name;
    std::size_t count = 0;
    s.min_e_f = s.min_snr = s.min_psnr = std::numeric_limits<double>::infinity();
    s.max_e_f = s.max_snr = s.max_psnr = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
      if (r.method != name) continue;
      if (r.status != "ok") {
        ++s.failures;
        continue;
      }
      ++count;
      s.min_e_f = std::min(s.min_e_f, r.e_f);
      s.max_e_f = std::max(s.max_e_f, r.e_f);
      s.avg_e_f += r.e_f;
      s.min_snr = std::min(s.min_snr, r.snr);
      s.max_snr = std::max(s.max_snr, r.snr);
      s.avg_snr += r.snr;
      s.min_psnr = std::min(s.min_psnr, r.psnr);
      s.max_psnr = std::max(s.max_psnr, r.psnr);
      s.avg_psnr += r.psnr;
    }
    if (count) {
      s.avg_e_f /= static_cast<double>(count);
      s.avg_snr /= static_cast<double>(count);
      s.avg_psnr /= static_cast<double>(count);
    } else {
      s.avg_e_f = s.avg_snr = s.avg_psnr = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(s);
  }
  return out;
}

inline int cmd_noise_bench(const NoiseBenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.trials < 1) throw UsageError("noise-bench needs --trials >= 1");
  if (opt.n < 1 || !(opt.k > 0.0)) throw UsageError("noise-bench needs --N >= 1 and --K > 0");
  if (opt.methods.empty()) throw UsageError("noise-bench needs at least one method");
  for (const auto& m : opt.methods) parse_method(m);
  const CosineSum truth = read_params(opt.params);
  try {
    validate(truth, opt.k);
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  }
  const auto rows = run_noise_bench(truth, opt);
  const auto summary = summarize(rows, opt.methods);

  OutputTarget target(opt.out, out);
  auto& os = target.stream();
  os << "trial,seed,method,M,e_f,e_phi,e_gamma,snr,psnr,status\n";
  for (const auto& r : rows)
    os << r.trial << ',' << r.seed << ',' << r.method << ',' << r.m << ',' << format_double(r.e_f) << ','
       << format_double(r.e_phi) << ',' << format_double(r.e_gamma) << ',' << format_double(r.snr) << ','
       << format_double(r.psnr) << ',' << (r.status == "ok" ? "ok" : "failed") << '\n';
  for (const auto& s : summary) {
    os << "min,," << s.method << ",," << format_double(s.min_e_f) << ",,," << format_double(s.min_snr) << ','
       << format_double(s.min_psnr) << ",\n";
    os << "max,," << s.method << ",," << format_double(s.max_e_f) << ",,," << format_double(s.max_snr) << ','
       << format_double(s.max_psnr) << ",\n";
    os << "average,," << s.method << ",," << format_double(s.avg_e_f) << ",,," << format_double(s.avg_snr)
       << ',' << format_double(s.avg_psnr) << ",\n";
  }

  if (!opt.summary.empty()) {
    json j;
    j["schema"] = 1;
    j["command"] = "noise-bench";
    j["N"] = opt.n;
    j["K"] = opt.k;
    j["amplitude"] = opt.amplitude;
    j["trials"] = opt.trials;
    j["methods"] = json::array();
    for (const auto& s : summary)
      j["methods"].push_back({{"method", s.method},
                              {"e_f", {{"min", s.min_e_f}, {"max", s.max_e_f}, {"average", s.avg_e_f}}},
                              {"snr", {{"min", s.min_snr}, {"max", s.max_snr}, {"average", s.avg_snr}}},
                              {"psnr", {{"min", s.min_psnr}, {"max", s.max_psnr}, {"average", s.avg_psnr}}},
                              {"failures", s.failures}});
    OutputTarget summary_target(opt.summary, out);
    summary_target.stream() << j.dump(2) << '\n';
  }
  std::size_t failures = 0;
  for (const auto& s : summary) failures += s.failures;
  if (failures) err << failures << " trial(s) failed\n";
  return kOk;
}

// ---------------------------------------------------------------- bessel

struct BesselOptions {
  int n = 3;
  double b = 126.0;
  std::size_t m = 25;
  std::size_t samples = 400;
  double k = 10.0;
  SolverOptions solver;  // method, upper_l, half_spectrum
  double step = 1e-3;
  std::string out;
  std::string curve;  // optional CSV t,target,approx,error
};

inline int cmd_bessel(const BesselOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || opt.n % 2 == 0) throw UsageError("bessel needs an odd order n >= 1");
  if (!(opt.b > 0.0) || !(opt.k > 0.0)) throw UsageError("bessel needs B > 0 and K > 0");
  if (opt.m < 1 || 2 * opt.m >= opt.samples) throw UsageError("bessel needs 1 <= M < N/2");
  const SamplingGrid grid(opt.samples, opt.k);
  const BesselSpec spec{opt.n, opt.b};
  if (grid.node(static_cast<std::ptrdiff_t>(opt.samples) - 1) > opt.b)
    throw UsageError("sampling grid extends beyond B");
  std::vector<double> values(opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) values[k] = bessel_mod(spec, grid.node(static_cast<std::ptrdiff_t>(k)));
  const SampleVector samples(values, grid);

  SolverOptions so = opt.solver;
  so.fixed_m = opt.m;
  // Exact function values: use the full spectrum unless told otherwise.
  if (!so.half_spectrum) so.half_spectrum = false;
  json report = report_skeleton("bessel", so);
  report["bessel"] = {{"n", opt.n}, {"B", opt.b}, {"N", opt.samples}, {"K", opt.k}};

  int code = kOk;
  try {
    const SolverRun run = run_solver(samples, so);
    fill_report(report, run);
    const auto& sum = run.recovery.sum;
    const auto t0 = std::chrono::steady_clock::now();
    const auto count = static_cast<std::size_t>(std::floor(opt.b / opt.step + 1e-9));
    std::optional<OutputTarget> curve;
    if (!opt.curve.empty()) {
      curve.emplace(opt.curve, out);
      curve->stream() << "t,target,approx,error\n";
    }
    double worst = 0.0;
    for (std::size_t i = 0; i <= count; ++i) {
      const double t = std::min(static_cast<double>(i) * opt.step, opt.b);
      const double target = bessel_mod(spec, t);
      const double approx = evaluate(sum, t);
      worst = std::max(worst, std::abs(target - approx));
      if (curve)
        curve->stream() << format_double(t) << ',' << format_double(target) << ',' << format_double(approx) << ','
                        << format_double(approx - target) << '\n';
    }
    report["max_error"] = worst;
    report["timings"]["scan_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool in_range = true;
    for (double p : sum.phi) in_range = in_range && p >= 0.0 && p <= 1.05;
    report["phi_in_range"] = in_range;
    if (!run.recovery.converged) code = kNotConverged;
  } catch (const SolverError& e) {
    report["status"] = "solver_error";
    report["diagnostics"].push_back(e.what());
    err << "solver failure: " << e.what() << '\n';
    code = kSolver;
  }
  if (code != kSolver) report["status"] = code == kOk ? "ok" : "not_converged";
  OutputTarget target(opt.out, out);
  target.stream() << report.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------- dct

struct DctOptions {
  std::string input;
  std::string out;
};

/// Dumps fhat_k, z_k and g_k for inspection.
inline int cmd_dct(const DctOptions& opt, std::ostream& out, std::ostream&) {
  const SampleTable table = read_samples_csv(opt.input);
  if (table.value.size() < 2) throw UsageError("dct needs at least two samples");
  const DctVector dct{dct2(table.value)};
  const TransformedData data = g_vector(dct);
  OutputTarget target(opt.out, out);
  auto& os = target.stream();
  os << "k,fhat,z,g\n";
  for (std::size_t k = 0; k < dct.size(); ++k)
    os << k << ',' << format_double(dct[k]) << ',' << format_double(data.z[k]) << ',' << format_double(data.g[k])
       << '\n';
  return kOk;
}

}  // namespace cossum::cli
