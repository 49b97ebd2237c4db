#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

/// Two columns forming left ⊗ right.
struct ColumnPair {
  Column left;
  Column right;
  bool operator==(const ColumnPair&) const = default;
  auto operator<=>(const ColumnPair&) const = default;
};

/// Combinatorial R-matrix σ: B_2 ⊗ B_1 -> B_1 ⊗ B_2, computed by raising to
/// the classical highest element, matching the unique highest element of the
/// same weight in the swapped product, and lowering along the same path.
ColumnPair combinatorial_r(const Column& left, const Column& right, const CartanType& ct);

/// Henriques–Kamnitzer commutor S(S(right) ⊗ S(left)). Agrees with
/// `combinatorial_r` for single-column KR crystals; kept as a cross-check.
ColumnPair commutor(const Column& left, const Column& right, const CartanType& ct);

/// R-matrix and local energy H on every element of B^{h_left,1} ⊗ B^{h_right,1},
/// indexed through `columns_of_height`. H(v ⊗ v) = 0 at the generators.
class LocalEnergyTable {
 public:
  /// Shared immutable table, built on first use.
  static std::shared_ptr<const LocalEnergyTable> get(const CartanType& ct, int h_left,
                                                     int h_right);

  int h_left() const { return h_left_; }
  int h_right() const { return h_right_; }

  int energy(int left, int right) const { return energy_[slot(left, right)]; }

  /// σ image as (left, right) indices into heights (h_right, h_left).
  std::pair<int, int> sigma(int left, int right) const {
    const auto& s = sigma_[slot(left, right)];
    return {s.first, s.second};
  }

  /// Number of classical components of the product.
  int component_count() const { return component_count_; }

 private:
  LocalEnergyTable(const CartanType& ct, int h_left, int h_right);
  std::size_t slot(int left, int right) const {
    return static_cast<std::size_t>(left) * right_size_ + right;
  }

  CartanType cartan_;
  int h_left_;
  int h_right_;
  std::size_t right_size_;
  int component_count_ = 0;
  std::vector<std::pair<int, int>> sigma_;
  std::vector<int> energy_;
};

/// Local energy H(left ⊗ right).
int local_energy(const Column& left, const Column& right, const CartanType& ct);

/// Drop every memoized R-matrix / energy table (used for cold timings).
void clear_energy_caches();

/// One summand H^L_{j,i} or H^R_{j,i}; factors numbered from the right.
struct EnergyTerm {
  int j;
  int i;
  int value;
  bool operator==(const EnergyTerm&) const = default;
};

struct EnergyReport {
  TensorElement element;
  int d_left = 0;
  int d_right = 0;
  std::vector<EnergyTerm> left_terms;
  std::vector<EnergyTerm> right_terms;
};

int energy_DL(const TensorElement& b);
int energy_DR(const TensorElement& b);
/// The energy D := D^L.
inline int energy(const TensorElement& b) { return energy_DL(b); }
EnergyReport energy_report(const TensorElement& b);

/// b_N ⊗ ... ⊗ b_1 -> S(b_1) ⊗ ... ⊗ S(b_N).
TensorElement tau(const TensorElement& b);

/// f_i is a (level one) Demazure arrow on b.
bool is_demazure_arrow(int i, const TensorElement& b);

struct GradingResult {
  TensorElement target;  ///< u_b: b ⊗ u_{Λ0} is highest in its component
  int min_e0 = 0;
};

/// Shortest path in e_i steps from b ⊗ u_{Λ0} to the highest element of its
/// component, counting e_0 steps. An e_i step acts inside B iff
/// eps_i(b) > phi_i(u_{Λ0}), i.e. eps_0 >= 2 for i = 0.
/// min_e0 = D^R(b) - D^R(u_b).
GradingResult demazure_grading_oracle(const TensorElement& b);

/// Target-set membership used by the oracle: eps_i = 0 (i != 0), eps_0 <= 1.
bool is_grading_target(const TensorElement& b);

}  // namespace krc
