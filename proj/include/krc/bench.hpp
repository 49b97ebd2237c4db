#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

struct BenchOptions {
  std::uint64_t samples = 10'000;
  int trials = 5;
  std::uint64_t seed = 1;
};

struct BenchReport {
  CartanType cartan;
  std::vector<int> heights;
  std::uint64_t samples = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  /// Medians over trials of (pass time / samples).
  double charge_ns = 0;
  double energy_cold_ns = 0;  ///< caches cleared before the pass
  double energy_warm_ns = 0;
  std::uint64_t mismatches = 0;  ///< elements with D != -charge

  double speedup_warm() const { return energy_warm_ns / charge_ns; }
  double speedup_cold() const { return energy_cold_ns / charge_ns; }
};

/// Uniform element of the tensor product: one independent column per factor.
std::vector<TensorElement> sample_elements(const CartanType& ct, const std::vector<int>& heights,
                                           std::uint64_t count, std::uint64_t seed);

/// Times charge against D^L on the same sample. Heights must weakly decrease.
BenchReport run_bench(const CartanType& ct, const std::vector<int>& heights,
                      const BenchOptions& opts = {});

std::string bench_report_text(const BenchReport& r);

}  // namespace krc
