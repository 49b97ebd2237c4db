#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

inline constexpr int kVerifySchemaVersion = 1;

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;   ///< instances where the property applied
  std::uint64_t failures = 0;
  std::string first_failure;   ///< serialized element, empty when none
  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  CartanType cartan;
  std::vector<int> mu;       ///< empty when the shape was given by heights
  std::vector<int> heights;  ///< left to right
  std::uint64_t element_count = 0;
  int max_discrepancy = 0;   ///< max |D(b) + charge(b)|
  double elapsed_ms = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

struct VerifyOptions {
  bool properties = true;  ///< run the invariant suites besides D = -charge
  int jobs = 1;
  std::uint64_t budget = kDefaultVertexBudget;
};

/// Exhaustive check of D = -charge on B^{h_1,1} ⊗ ... with weakly decreasing
/// heights, plus the invariant suites. Throws HeightsNotSorted, ShapeTooLarge.
VerifyReport run_verify(const CartanType& ct, const std::vector<int>& heights,
                        const VerifyOptions& opts = {});

/// Names of the suites in report order. The first is always "D=-charge".
const std::vector<std::string>& verify_property_names();

std::string verify_report_json(const VerifyReport& r, int indent = 2);
std::string verify_report_text(const VerifyReport& r);

}  // namespace krc
