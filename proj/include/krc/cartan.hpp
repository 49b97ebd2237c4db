#pragma once

#include <compare>
#include <cstdlib>
#include <functional>
#include <string>

namespace krc {

enum class Family { A, C };

/// Affine type A_{n-1}^{(1)} (alphabet 1..n) or C_n^{(1)} (alphabet 1..n, n̄..1̄).
/// `n` is always the number of unbarred letters.
struct CartanType {
  Family family = Family::A;
  int n = 2;

  CartanType() = default;
  CartanType(Family f, int rank);

  static CartanType A(int n) { return {Family::A, n}; }
  static CartanType C(int n) { return {Family::C, n}; }

  /// Largest index in I = {0, ..., top_index()}.
  int top_index() const { return family == Family::A ? n - 1 : n; }
  int max_height() const { return family == Family::A ? n - 1 : n; }
  int alphabet_size() const { return family == Family::A ? n : 2 * n; }

  /// i* with alpha_{i*} = -w0(alpha_i).
  int star(int i) const { return family == Family::A ? n - i : i; }

  bool valid_index(int i) const { return i >= 0 && i <= top_index(); }

  /// "A6", "C3", ...
  std::string name() const;

  auto operator<=>(const CartanType&) const = default;
};

/// A letter encoded as a signed integer: +z is z, -z is z̄.
struct Letter {
  int value = 1;

  constexpr Letter() = default;
  constexpr explicit Letter(int v) : value(v) {}

  constexpr bool barred() const { return value < 0; }
  constexpr int index() const { return value < 0 ? -value : value; }
  constexpr Letter bar() const { return Letter{-value}; }

  /// Position in 1 < 2 < ... < n < n̄ < ... < 1̄, counted from 0.
  constexpr int rank(int n) const { return value > 0 ? value - 1 : 2 * n + value; }

  static constexpr Letter from_rank(int r, int n) {
    return r < n ? Letter{r + 1} : Letter{r - 2 * n};
  }

  constexpr bool operator==(const Letter&) const = default;

  // The total order does not depend on n: unbarred before barred, barred
  // letters in decreasing magnitude.
  constexpr std::strong_ordering operator<=>(const Letter& o) const {
    if (barred() != o.barred()) {
      return barred() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (!barred()) return value <=> o.value;
    return o.index() <=> index();
  }

  /// Decimal form; barred letters are negative.
  std::string str() const { return std::to_string(value); }
};

/// Position of `x` in the circular order starting at `start`.
inline int circular_key(Letter x, Letter start, const CartanType& ct) {
  const int m = ct.alphabet_size();
  return (x.rank(ct.n) - start.rank(ct.n) + m) % m;
}

}  // namespace krc

template <>
struct std::hash<krc::Letter> {
  std::size_t operator()(const krc::Letter& l) const noexcept {
    return std::hash<int>{}(l.value);
  }
};
