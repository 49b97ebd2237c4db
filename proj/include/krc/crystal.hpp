#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "krc/cartan.hpp"
#include "krc/column.hpp"

namespace krc {

/// A vertex of B^{r_N,1} ⊗ ... ⊗ B^{r_1,1}. Factors are stored left to
/// right; the factor numbered 1 in energy formulas is the rightmost one.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(CartanType ct, std::vector<Column> factors)
      : cartan_(ct), factors_(std::move(factors)) {}

  const CartanType& cartan() const { return cartan_; }
  const std::vector<Column>& factors() const { return factors_; }
  std::vector<Column>& factors() { return factors_; }
  std::size_t size() const { return factors_.size(); }

  /// Factor counted from the right, 1-based.
  const Column& factor(std::size_t from_right) const {
    return factors_[factors_.size() - from_right];
  }

  /// Column heights, left to right.
  std::vector<int> heights() const;
  bool has_barred() const;

  bool operator==(const TensorElement&) const = default;
  auto operator<=>(const TensorElement& o) const { return factors_ <=> o.factors_; }

 private:
  CartanType cartan_;
  std::vector<Column> factors_;
};

/// Content vector: entry z is (#z) - (#z̄).
struct ClassicalWeight {
  std::vector<int> content;
  bool operator==(const ClassicalWeight&) const = default;
  auto operator<=>(const ClassicalWeight&) const = default;
};

/// Coefficients over Λ_0, ..., Λ_top.
struct AffineWeight {
  std::vector<int> coeffs;
  bool operator==(const AffineWeight&) const = default;
  static AffineWeight fundamental(const CartanType& ct, int i);
};

std::optional<TensorElement> f(int i, const TensorElement& b);
std::optional<TensorElement> e(int i, const TensorElement& b);
int phi(int i, const TensorElement& b);
int eps(int i, const TensorElement& b);

struct EpsPhi {
  int eps;
  int phi;
};
EpsPhi eps_phi(int i, const TensorElement& b);

/// Factor (0-based from the left) that f_i / e_i acts on, -1 if undefined.
int f_position(int i, const TensorElement& b);
int e_position(int i, const TensorElement& b);

AffineWeight epsilon_weight(const TensorElement& b);
AffineWeight phi_weight(const TensorElement& b);
ClassicalWeight weight(const TensorElement& b);

/// <wt, α_i^∨> for classical i, from the content vector.
int coroot_pairing(const ClassicalWeight& wt, int i, const CartanType& ct);

bool is_classical_highest(const TensorElement& b);

struct RaiseResult {
  TensorElement highest;
  /// Indices of the e_i applied, in order. Applying f along the reversed
  /// path to `highest` recovers the input.
  std::vector<int> path;
};

RaiseResult classical_highest(const TensorElement& b);

/// Apply f_{path[m-1]}, ..., f_{path[0]} in that order (path reversed).
std::optional<TensorElement> lower_along(const TensorElement& highest, const std::vector<int>& path);

/// Greedy descent with classical f_i until none applies.
TensorElement classical_lowest(const TensorElement& b);

/// Lusztig involution on the classical component of `b`.
TensorElement lusztig_involution(const TensorElement& b);

// --- enumeration -------------------------------------------------------------

inline constexpr std::uint64_t kDefaultVertexBudget = 5'000'000;

/// Validates heights for the type and returns the product of column counts.
std::uint64_t element_count(const CartanType& ct, const std::vector<int>& heights);

/// Visit every element of the tensor product in lexicographic order.
/// Throws ShapeTooLarge above `budget`.
void for_each_element(const CartanType& ct, const std::vector<int>& heights,
                      const std::function<void(const TensorElement&)>& visit,
                      std::uint64_t budget = kDefaultVertexBudget);

std::vector<TensorElement> all_elements(const CartanType& ct, const std::vector<int>& heights,
                                        std::uint64_t budget = kDefaultVertexBudget);

struct CrystalEdge {
  std::uint32_t source;
  int index;
  std::uint32_t target;
  bool operator==(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  CartanType cartan;
  std::vector<int> heights;
  bool include_zero = false;
  std::vector<TensorElement> vertices;  ///< sorted
  std::vector<CrystalEdge> edges;       ///< sorted by (source, index)

  std::uint32_t index_of(const TensorElement& b) const;
};

CrystalGraph crystal_graph(const CartanType& ct, const std::vector<int>& heights,
                           bool include_zero, std::uint64_t budget = kDefaultVertexBudget);

}  // namespace krc
