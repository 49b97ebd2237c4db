#include "krc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "krc/charge.hpp"
#include "krc/energy.hpp"
#include "krc/error.hpp"

namespace krc {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

template <typename Fn>
double ns_per_element(const std::vector<TensorElement>& xs, std::vector<int>& out, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < xs.size(); ++t) out[t] = fn(xs[t]);
  const std::chrono::duration<double, std::nano> took = std::chrono::steady_clock::now() - start;
  return took.count() / static_cast<double>(xs.size());
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

std::vector<TensorElement> sample_elements(const CartanType& ct, const std::vector<int>& heights,
                                           std::uint64_t count, std::uint64_t seed) {
  element_count(ct, heights);
  std::mt19937_64 rng(seed);
  std::vector<TensorElement> out;
  out.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::vector<Column> cols;
    cols.reserve(heights.size());
    for (int h : heights) {
      const auto& pool = columns_of_height(ct, h);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      cols.push_back(pool[pick(rng)]);
    }
    out.emplace_back(ct, std::move(cols));
  }
  return out;
}

BenchReport run_bench(const CartanType& ct, const std::vector<int>& heights,
                      const BenchOptions& opts) {
  if (opts.samples == 0 || opts.trials <= 0) {
    throw Error(ErrorCode::InvalidShape, "bench needs at least one sample and one trial");
  }
  if (!std::is_sorted(heights.begin(), heights.end(), std::greater<>())) {
    throw Error(ErrorCode::HeightsNotSorted, "bench needs weakly decreasing column heights");
  }
  const auto xs = sample_elements(ct, heights, opts.samples, opts.seed);
  std::vector<int> charges(xs.size());
  std::vector<int> energies(xs.size());
  std::vector<double> t_charge, t_cold, t_warm;
  BenchReport r{ct, heights, opts.samples, opts.trials, opts.seed};
  for (int trial = 0; trial < opts.trials; ++trial) {
    t_charge.push_back(ns_per_element(xs, charges, [](const TensorElement& b) { return charge(b); }));
    clear_energy_caches();
    t_cold.push_back(ns_per_element(xs, energies, [](const TensorElement& b) { return energy_DL(b); }));
    t_warm.push_back(ns_per_element(xs, energies, [](const TensorElement& b) { return energy_DL(b); }));
    for (std::size_t t = 0; t < xs.size(); ++t) {
      if (energies[t] != -charges[t]) ++r.mismatches;
    }
  }
  r.charge_ns = median(t_charge);
  r.energy_cold_ns = median(t_cold);
  r.energy_warm_ns = median(t_warm);
  return r;
}

std::string bench_report_text(const BenchReport& r) {
  std::ostringstream os;
  os << "type: " << r.cartan.name() << '\n';
  os << "heights:";
  for (std::size_t i = 0; i < r.heights.size(); ++i) os << (i ? "," : " ") << r.heights[i];
  os << '\n';
  os << "samples: " << r.samples << "  trials: " << r.trials << "  seed: " << r.seed << '\n';
  os << "charge ns/element: " << fixed(r.charge_ns, 1) << '\n';
  os << "energy ns/element (cold): " << fixed(r.energy_cold_ns, 1) << '\n';
  os << "energy ns/element (warm): " << fixed(r.energy_warm_ns, 1) << '\n';
  os << "speedup (warm energy / charge): " << fixed(r.speedup_warm(), 2) << '\n';
  os << "speedup (cold energy / charge): " << fixed(r.speedup_cold(), 2) << '\n';
  os << "D = -charge mismatches: " << r.mismatches << '\n';
  return os.str();
}

}  // namespace krc
