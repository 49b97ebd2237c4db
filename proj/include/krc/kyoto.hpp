#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

/// Highest element u of B ⊗ B(Λ0) (the anchor u_{Λ0} is implicit).
struct GroundState {
  TensorElement element;
  int weight = 0;  ///< h with phi(b_N) = Λ_h
};

/// Every ground state of B^{r_N,1} ⊗ ... ⊗ B^{r_1,1}; `heights` lists r_N, ..., r_1
/// (left to right, as stored). Depth first from b_1, trying columns in
/// increasing order at every level.
std::vector<GroundState> ground_states(const CartanType& ct, const std::vector<int>& heights,
                                       std::uint64_t budget = kDefaultVertexBudget);

/// λ(k, h2, h1): k columns of height n, then columns of heights h2 >= h1
/// with h2 < n. Always kept normalized.
struct ShapeState {
  int k = 0;
  int h2 = 0;
  int h1 = 0;

  /// λ(k, h2, h1) with the identifications λ(k, n, h1) = λ(k+1, h1, 0) and
  /// λ(k, n, n) = λ(k+2, 0, 0).
  static ShapeState make(int k, int h2, int h1, int n);
  /// λ_0: a single column of height h.
  static ShapeState column(int h, int n) { return make(0, h, 0, n); }
  /// Adds one horizontal domino.
  ShapeState next(int n) const { return make(k, h2 + 1, h1 + 1, n); }

  /// Column heights of the partition.
  std::vector<int> columns(int n) const;
  std::string str() const;
  bool operator==(const ShapeState&) const = default;
};

/// (i, exponent) in application order: f_n^k first, f_0^{k+1} last.
using ArrowWord = std::vector<std::pair<int, int>>;

/// F_j for λ_j = shape in type C_n.
ArrowWord demazure_word(const ShapeState& shape, int n);

/// "f_0^2 f_1^3 f_2^2 f_3" style, leftmost operator applied last.
std::string word_str(const ArrowWord& word);

struct WalkStep {
  int j = 0;
  ShapeState shape;  ///< λ_j
  ArrowWord word;    ///< F_j
  TensorElement result;
};

struct WalkResult {
  TensorElement final_element;
  std::vector<WalkStep> steps;
};

/// v_{j+1} = F_j(v_j) until some F_j is undefined. Throws NonDemazureArrow if
/// an applied f_0 has eps_0 = 0, BarredResidue if the end has a barred letter.
/// Type C only.
WalkResult demazure_walk(const GroundState& g);

/// The final element of the walk built directly by cutting the two label
/// columns at heights n, 2n, ... . Type C only.
TensorElement cut_construction(const GroundState& g);

}  // namespace krc
