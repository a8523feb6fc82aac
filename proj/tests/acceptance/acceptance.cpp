// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cossum/cossum.hpp"
#include "support/instances.hpp"

namespace {

using namespace cossum;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << " first failure: " << why << ';';
    pass = false;
  }
};

CosineSum run_method(const std::string& method, const SampleVector& s, std::optional<std::size_t> m = std::nullopt,
                     std::optional<bool> half = std::nullopt) {
  if (method == "esprit") return esprit_recover(s, {.fixed_m = m}).sum;
  if (method == "espira1") return espira1_recover(s, {.fixed_m = m, .half_spectrum = half}).recovery.sum;
  if (method == "espira2") return espira2_recover(s, {.fixed_m = m, .half_spectrum = half}).sum;
  return prony_solve(s, *m);
}

// Instances shared by the rank, termination and spectrum criteria.
std::vector<testing::RandomInstance> random_instances(std::size_t count, std::uint64_t first_seed) {
  std::vector<testing::RandomInstance> out;
  for (std::uint64_t seed = first_seed; out.size() < count; ++seed) out.push_back(testing::random_instance(seed));
  return out;
}

// Adds one grid frequency that keeps the cosine separation of the instance.
testing::RandomInstance with_grid_term(testing::RandomInstance inst, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const std::size_t n = inst.grid.size();
  std::uniform_int_distribution<std::size_t> index(1, n - 1);
  const double h = inst.grid.step();
  for (;;) {
    const double phi = testing::grid_frequency(index(engine), inst.grid);
    const bool close = std::any_of(inst.sum.phi.begin(), inst.sum.phi.end(), [&](double p) {
      return std::abs(std::cos(p * h) - std::cos(phi * h)) < 0.02;
    });
    if (close) continue;
    inst.sum.phi.push_back(phi);
    inst.sum.gamma.push_back(1.5);
    return inst;
  }
}

Outcome ac1_table() {
  Outcome o;
  const auto truth = testing::example_one();
  double worst_f = 0, worst_phi = 0, worst_gamma = 0, slowest = 0;
  for (auto [n, k] : {std::pair{100, 20.0}, {150, 30.0}, {200, 40.0}}) {
    const SamplingGrid grid(static_cast<std::size_t>(n), k);
    const auto s = sample(truth, grid);
    for (const std::string method : {"esprit", "espira1", "espira2"}) {
      const auto t0 = Clock::now();
      CosineSum got;
      try {
        got = run_method(method, s);
      } catch (const std::exception& e) {
        o.fail(method + " threw " + e.what());
        continue;
      }
      const double t = seconds_since(t0);
      slowest = std::max(slowest, t);
      const std::string tag = method + " N=" + std::to_string(n);
      if (got.size() != 7) {
        o.fail(tag + " found M=" + std::to_string(got.size()));
        continue;
      }
      const auto e = relative_errors(truth, got, default_error_interval(grid));
      worst_f = std::max(worst_f, e.e_f);
      worst_phi = std::max(worst_phi, *e.e_phi);
      worst_gamma = std::max(worst_gamma, *e.e_gamma);
      if (e.e_f > 1e-11 || *e.e_phi > 1e-8 || *e.e_gamma > 1e-9) o.fail(tag + " errors");
      if (t >= 2.0) o.fail(tag + " took " + fmt(t) + " s");
    }
  }
  o.detail << " max e_f " << fmt(worst_f) << ", e_phi " << fmt(worst_phi) << ", e_gamma " << fmt(worst_gamma)
           << ", slowest run " << fmt(slowest) << " s";
  return o;
}

Outcome ac2_rank_law() {
  Outcome o;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& inst : random_instances(50, 1000)) {
    const std::size_t m = inst.sum.size();
    const auto d = g_vector(dct2(sample(inst.sum, inst.grid)));
    const auto r = aaa_interpolate(d, 1e-13 * max_abs(d.g), (d.count() - 1) / 2);
    if (r.history.size() < m + 1) {
      o.fail("AAA stopped before |S| = M+1");
      continue;
    }
    // history[j] holds the singular values of the Loewner matrix with |S| = j+1.
    const auto& at_m = r.history[m - 1].singular_values;
    const auto& at_m1 = r.history[m].singular_values;
    const double within = at_m1[m - 1] / at_m1[m];
    const double across = at_m[m - 1] / at_m1[m];
    worst = std::min({worst, within, across});
    if (within < 1e6 || across < 1e6) o.fail("ratio " + fmt(std::min(within, across)) + " at M=" + std::to_string(m));
  }
  o.detail << " 50 instances, smallest sigma_M/sigma_{M+1} " << fmt(worst);
  return o;
}

Outcome ac3_termination() {
  Outcome o;
  double worst = 0.0;
  for (const auto& inst : random_instances(50, 1000)) {
    const std::size_t m = inst.sum.size();
    const auto d = g_vector(dct2(sample(inst.sum, inst.grid)));
    const auto r = aaa_interpolate(d, 1e-13 * max_abs(d.g), (d.count() - 1) / 2);
    if (!r.converged || r.history.size() != m + 1) {
      o.fail("M=" + std::to_string(m) + " took " + std::to_string(r.history.size()) + " iterations");
      continue;
    }
    const auto rat = to_rational(r, d);
    for (std::size_t k = 0; k < d.count(); ++k) worst = std::max(worst, std::abs(barycentric_eval(rat, d.z[k]) - d.g[k]));
  }
  if (worst > 1e-9) o.fail("interpolation error " + fmt(worst));
  o.detail << " 50 instances, max |r(z_k) - g_k| " << fmt(worst);
  return o;
}

Outcome ac4_pencil() {
  Outcome o;
  std::vector<testing::RandomInstance> cases = random_instances(20, 2000);
  for (const auto& inst : random_instances(10, 3000)) {
    cases.push_back(with_grid_term(inst, inst.grid.size() * 7919));
  }
  double worst = 0.0;
  std::size_t grid_cases = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& inst = cases[c];
    if (c >= 20) ++grid_cases;
    const std::size_t m = inst.sum.size();
    const auto d = g_vector(dct2(sample(inst.sum, inst.grid)));
    const auto sel = greedy_support(d, 1e-13, std::nullopt);
    if (sel.order != m) {
      o.fail("order " + std::to_string(sel.order) + " for M=" + std::to_string(m));
      continue;
    }
    const auto eig = loewner_pencil_eigenvalues(build_loewner_pair(d, sel.support, sel.candidates), m);
    std::vector<double> got;
    for (const auto& z : eig) {
      worst = std::max(worst, std::abs(z.imag()));
      got.push_back(z.real());
    }
    std::sort(got.begin(), got.end());
    const auto want = testing::sorted_cosines(inst.sum, inst.grid);
    for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, std::abs(got[j] - want[j]));
  }
  if (worst > 1e-9) o.fail("eigenvalue error " + fmt(worst));
  o.detail << " " << cases.size() << " instances (" << grid_cases << " with a grid frequency), max error "
           << fmt(worst);
  return o;
}

Outcome ac5_grid_terms() {
  Outcome o;
  double worst1 = 0.0, worst2 = 0.0;
  const std::size_t count = 20;
  for (std::uint64_t seed = 0; seed < count; ++seed) {
    auto inst = testing::random_instance(4000 + seed, {.max_terms = 5});
    std::set<std::size_t> grid_index;
    const std::size_t extra = 1 + seed % 2;
    for (std::size_t i = 0; i < extra; ++i) {
      inst = with_grid_term(inst, 5000 + 10 * seed + i);
      grid_index.insert(static_cast<std::size_t>(
          std::lround(inst.sum.phi.back() * inst.grid.step() * static_cast<double>(inst.grid.size()) /
                      std::numbers::pi)));
    }
    const auto s = sample(inst.sum, inst.grid);
    const double end = default_error_interval(inst.grid);
    try {
      const auto r1 = espira1_recover(s);
      std::set<std::size_t> found;
      for (const auto& g : r1.grid.entries) found.insert(g.k);
      if (found != grid_index) o.fail("ESPIRA-I grid indices differ, seed " + std::to_string(seed));
      const auto e1 = relative_errors(inst.sum, r1.recovery.sum, end);
      if (!e1.e_phi) {
        o.fail("ESPIRA-I found " + std::to_string(r1.recovery.sum.size()) + " terms, seed " + std::to_string(seed));
      } else {
        worst1 = std::max(worst1, *e1.e_phi);
      }
    } catch (const std::exception& e) {
      o.fail(std::string("ESPIRA-I threw ") + e.what());
    }
    try {
      const auto r2 = espira2_recover(s);
      const auto e2 = relative_errors(inst.sum, r2.sum, end);
      if (!e2.e_phi) {
        o.fail("ESPIRA-II found " + std::to_string(r2.sum.size()) + " terms, seed " + std::to_string(seed));
      } else {
        worst2 = std::max(worst2, *e2.e_phi);
      }
    } catch (const std::exception& e) {
      o.fail(std::string("ESPIRA-II threw ") + e.what());
    }
  }
  if (worst1 > 1e-8 || worst2 > 1e-8) o.fail("frequency error");
  o.detail << " " << count << " mixed signals, max e_phi ESPIRA-I " << fmt(worst1) << ", ESPIRA-II " << fmt(worst2);
  return o;
}

Outcome ac6_oracle() {
  Outcome o;
  double worst = 0.0;
  const std::vector<std::string> methods{"prony", "esprit", "espira1", "espira2"};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = testing::random_instance(6000 + seed, {.max_terms = 5, .cos_separation = 0.05});
    const auto s = sample(inst.sum, inst.grid);
    std::vector<CosineSum> got;
    try {
      for (const auto& m : methods) got.push_back(run_method(m, s, m == "prony" ? std::optional(inst.sum.size()) : std::nullopt));
    } catch (const std::exception& e) {
      o.fail(std::string("threw ") + e.what());
      continue;
    }
    for (std::size_t a = 0; a < got.size(); ++a)
      for (std::size_t b = a + 1; b < got.size(); ++b) {
        const auto e = relative_errors(got[a], got[b], default_error_interval(inst.grid));
        if (!e.e_phi) {
          o.fail(methods[a] + " vs " + methods[b] + " differ in M");
          continue;
        }
        worst = std::max(worst, *e.e_phi);
      }
  }
  if (worst > 1e-8) o.fail("pairwise e_phi " + fmt(worst));
  o.detail << " 25 instances, max pairwise e_phi " << fmt(worst);
  return o;
}

struct BenchCell {
  double e_f = 0.0;
  double snr = 0.0;
};

BenchCell bench(const std::string& method, std::size_t n) {
  const auto truth = testing::example_one();
  const SamplingGrid grid(n, 50.0);
  const auto clean = sample(truth, grid);
  std::vector<std::future<std::pair<double, double>>> trials;
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    trials.push_back(std::async(std::launch::async, [&, seed] {
      const auto noisy = add_noise(clean, 10.0, seed);
      const auto got = run_method(method, noisy, 7);
      return std::pair{relative_errors(truth, got, default_error_interval(grid)).e_f,
                       snr_psnr(clean, noisy).snr_db};
    }));
  BenchCell cell;
  for (auto& t : trials) {
    const auto [e, snr] = t.get();
    cell.e_f += e / 10.0;
    cell.snr += snr / 10.0;
  }
  return cell;
}

Outcome ac7_noise() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto e2_2000 = bench("espira2", 2000);
  const auto es_2000 = bench("esprit", 2000);
  const auto e2_1600 = bench("espira2", 1600);
  const double t = seconds_since(t0);
  if (e2_2000.e_f < 0.04 || e2_2000.e_f > 0.20) o.fail("ESPIRA-II N=2000");
  if (es_2000.e_f < 0.10 || es_2000.e_f > 0.30) o.fail("ESPRIT N=2000");
  if (e2_1600.e_f < 0.05 || e2_1600.e_f > 0.20) o.fail("ESPIRA-II N=1600");
  for (double snr : {e2_2000.snr, e2_1600.snr})
    if (snr < 3.5 || snr > 4.6) o.fail("SNR " + fmt(snr));
  if (t >= 60.0) o.fail("took " + fmt(t) + " s");
  o.detail << " N=2000 ESPIRA-II " << fmt(e2_2000.e_f) << ", ESPRIT " << fmt(es_2000.e_f) << "; N=1600 ESPIRA-II "
           << fmt(e2_1600.e_f) << "; SNR " << fmt(e2_2000.snr) << " / " << fmt(e2_1600.snr) << " dB; " << fmt(t)
           << " s";
  return o;
}

Outcome ac8_bessel() {
  Outcome o;
  const BesselSpec spec{3, 126.0};
  const SamplingGrid grid(400, 10.0);
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) values[k] = bessel_mod(spec, grid.node(static_cast<std::ptrdiff_t>(k)));
  const SampleVector s(values, grid);
  std::vector<double> target;
  for (std::size_t i = 0; i <= 126000; ++i) target.push_back(bessel_mod(spec, static_cast<double>(i) * 1e-3));
  for (const std::string method : {"esprit", "espira1", "espira2"}) {
    CosineSum got;
    try {
      got = run_method(method, s, 25, false);
    } catch (const std::exception& e) {
      o.fail(method + " threw " + e.what());
      continue;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i)
      worst = std::max(worst, std::abs(target[i] - evaluate(got, static_cast<double>(i) * 1e-3)));
    const bool in_range = got.size() == 25 && std::all_of(got.phi.begin(), got.phi.end(), [](double p) {
                            return std::isfinite(p) && p >= 0.0 && p <= 1.05;
                          });
    if (worst > 1e-5) o.fail(method + " error " + fmt(worst));
    if (!in_range) o.fail(method + " frequencies outside [0, 1.05]");
    o.detail << ' ' << method << ' ' << fmt(worst);
  }
  return o;
}

Outcome ac9_dct() {
  Outcome o;
  std::mt19937_64 engine(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (std::size_t n : {1, 2, 17, 64, 400, 2000}) {
    std::vector<double> x(n);
    for (auto& v : x) v = u(engine);
    const auto fast = dct2(x);
    const auto direct = testing::direct_dct2(x);
    double diff = 0.0;
    for (std::size_t k = 0; k < n; ++k) diff = std::max(diff, std::abs(fast[k] - direct[k]));
    worst = std::max(worst, diff / max_abs(direct));
  }
  if (worst > 1e-12) o.fail("relative error " + fmt(worst));
  o.detail << " max relative error " << fmt(worst);
  return o;
}

Outcome ac10_identities() {
  Outcome o;
  double prony_res = 0.0, companion = 0.0, kernel = 0.0, remark = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = testing::random_instance(7000 + seed, {.max_terms = 6});
    const auto s = sample(inst.sum, inst.grid);
    const std::size_t m = inst.sum.size();
    const double fmax = max_abs(s.values());

    // sum_l p_l (f_{r+l} + f_{r-l}) = 0 for the monic Chebyshev polynomial with roots cos(phi_j h).
    const auto p = chebyshev_from_roots(testing::sorted_cosines(inst.sum, inst.grid));
    for (std::size_t r = 0; r < m; ++r) {
      double acc = 0.0;
      for (std::size_t l = 0; l <= m; ++l)
        acc += p.coeffs[l] * (s.at(static_cast<std::ptrdiff_t>(r + l)) +
                              s.at(static_cast<std::ptrdiff_t>(r) - static_cast<std::ptrdiff_t>(l)));
      prony_res = std::max(prony_res, std::abs(acc) / fmax);
    }

    // M^(0) C = (M^(-1) + M^(1)) / 2
    const Matrix rhs = 0.5 * (prony_matrix(s, m, -1) + prony_matrix(s, m, 1));
    companion = std::max(companion, (prony_matrix(s, m, 0) * chebyshev_companion(p) - rhs).norm() / rhs.norm());

    // L w = 0 on the non-support rows after AAA terminates.
    const auto d = g_vector(dct2(s));
    const auto r = aaa_interpolate(d, 1e-13 * max_abs(d.g), (d.count() - 1) / 2);
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < d.count(); ++k)
      if (std::find(r.support.begin(), r.support.end(), k) == r.support.end()) rest.push_back(k);
    const Vector w = Eigen::Map<const Vector>(r.weights.data(), static_cast<Eigen::Index>(r.weights.size()));
    kernel = std::max(kernel, (loewner_matrix(d, rest, r.support) * w).norm() /
                                  r.history.back().singular_values.front());

    // gamma from residues equals gamma from the Vandermonde system.
    const auto e1 = espira1_recover(s);
    const auto vand = vandermonde_coefficients(e1.recovery.sum.phi, s);
    double diff = 0.0;
    for (std::size_t j = 0; j < vand.size(); ++j) diff = std::max(diff, std::abs(vand[j] - e1.recovery.sum.gamma[j]));
    remark = std::max(remark, diff / max_abs(vand));
  }
  if (prony_res > 1e-10) o.fail("Prony residual " + fmt(prony_res));
  if (companion > 1e-10) o.fail("companion identity " + fmt(companion));
  if (kernel > 1e-10) o.fail("Loewner kernel " + fmt(kernel));
  if (remark > 1e-8) o.fail("coefficient equivalence " + fmt(remark));
  o.detail << " Prony residual " << fmt(prony_res) << ", companion " << fmt(companion) << ", kernel " << fmt(kernel)
           << ", gamma equivalence " << fmt(remark);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 exact recovery of Example 1", ac1_table},
      {"AC2 Loewner rank law", ac2_rank_law},
      {"AC3 AAA terminates after M+1 steps", ac3_termination},
      {"AC4 Loewner pencil spectrum", ac4_pencil},
      {"AC5 grid-frequency signals", ac5_grid_terms},
      {"AC6 oracle equivalence", ac6_oracle},
      {"AC7 noisy benchmark", ac7_noise},
      {"AC8 Bessel approximation", ac8_bessel},
      {"AC9 fast DCT-II", ac9_dct},
      {"AC10 identity suite", ac10_identities},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s %s:%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
