#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

/// Sparse polynomial in q with integer coefficients; negative exponents allowed.
struct QPolynomial {
  std::map<int, std::int64_t> terms;

  void add(int q, std::int64_t coeff);
  /// q -> q^{-1}
  QPolynomial inverted() const;
  /// "1*q^0 + 2*q^3", ascending exponents; "0" when empty.
  std::string str() const;
  bool operator==(const QPolynomial&) const = default;
};

/// Sparse polynomial in q and x_1, ..., x_n, keyed by (q exponent, content).
struct QXPolynomial {
  std::map<std::pair<int, std::vector<int>>, std::int64_t> terms;

  void add(int q, const std::vector<int>& content, std::int64_t coeff);
  QXPolynomial& operator+=(const QXPolynomial& o);
  /// Coefficients at q = 1, keyed by content.
  std::map<std::vector<int>, std::int64_t> at_q_one() const;
  /// Invariant under every permutation of the content vector.
  bool is_symmetric() const;
  /// "coeff*q^a*x^(c1,...,cn)" joined by " + "; sorted by q, then by the
  /// sorted content (a partition) descending, then by content descending.
  std::string str() const;
  bool operator==(const QXPolynomial&) const = default;
};

QXPolynomial operator*(const QPolynomial& a, const QXPolynomial& b);

using Partition = std::vector<int>;

Partition conjugate(const Partition& p);
/// All partitions of `total` with parts <= `max_part` and at most `max_parts` parts.
std::vector<Partition> partitions(int total, int max_part, int max_parts);
/// Column heights μ' of B_μ; throws InvalidShape for a column taller than the type allows.
std::vector<int> column_heights(const Partition& mu, const CartanType& ct);

/// Moves columns with adjacent R-matrix swaps until heights weakly decrease.
/// D^L is checked to be unchanged.
TensorElement sort_via_rmatrix(const TensorElement& b);

/// Σ q^{charge(b)} x^{wt(b)} over B_μ.
QXPolynomial macdonald_p_q0(const Partition& mu, const CartanType& ct, int jobs = 1,
                            std::uint64_t budget = kDefaultVertexBudget);

/// Σ q^{-D(b)} x^{wt(b)} over B_μ.
QXPolynomial macdonald_p_q0_energy(const Partition& mu, const CartanType& ct, int jobs = 1,
                                   std::uint64_t budget = kDefaultVertexBudget);

/// K_{λ'μ'}(q) = Σ q^{charge(b)} over classical highest b in B_μ of weight λ. Type A.
QPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu, const CartanType& ct,
                           std::uint64_t budget = kDefaultVertexBudget);

/// X = Σ q^{D(b)} over classical highest b of the given weight.
QPolynomial one_dim_sum_X(const ClassicalWeight& lambda, const std::vector<int>& heights,
                          const CartanType& ct, std::uint64_t budget = kDefaultVertexBudget);

/// Schur polynomial s_λ(x_1, ..., x_n) from the classical crystal B(λ) of type A,
/// as q^0 terms.
QXPolynomial schur_polynomial(const Partition& lambda, int n);

}  // namespace krc
