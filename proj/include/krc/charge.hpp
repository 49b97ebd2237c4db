#pragma once

#include <span>
#include <string>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

/// Column labels are encoded as integers. Type A: label j is j. Type C: the
/// split columns 1, 1', 2, 2', ... are 1, 2, 3, 4, ..., so j is 2j-1 and j' is 2j.
std::string label_str(int label, const CartanType& ct);

struct BiLetter {
  Letter k;
  int j;
  bool operator==(const BiLetter&) const = default;
};

/// Charge word cw(b): biletters sorted by k decreasing, then j decreasing.
struct ChargeWord {
  CartanType cartan;
  std::vector<BiLetter> biletters;

  /// cw_2(b), the lower letters.
  std::vector<int> lower() const;
  /// cw_2(b) as text, e.g. "1132214323" or "1'132'...".
  std::string lower_str() const;
};

/// Heights must weakly decrease from left to right.
ChargeWord charge_word(const TensorElement& b);

struct Cell {
  int column;  ///< 0-based position in the (doubled) column sequence
  int row;     ///< 0-based, top row first
  bool operator==(const Cell&) const = default;
};

/// c = circ-ord(b). In type C the columns are the split halves
/// c_1^L c_1^R c_2^L c_2^R ...
struct CircFilling {
  CartanType cartan;
  std::vector<std::vector<Letter>> columns;
  std::vector<Cell> descents;

  /// Cells to the right of `cell` in its row.
  int arm(const Cell& cell) const;
  int arm_sum() const;
  /// Row i as a sequence of letters, left to right.
  std::vector<Letter> row(int i) const;
  int row_count() const;
};

CircFilling circ_ord(const TensorElement& b);

/// Descent-arm charge: the arm sum in type A, half of it in type C.
int charge(const TensorElement& b);

/// Selection-algorithm charge on cw_2(b).
int charge_by_selection(const TensorElement& b);

/// Lascoux–Schützenberger charge of a word over {1, 2, ...} with partition content.
int ls_charge(std::span<const int> word);

/// Type C charge of a word over 1, 1', 2, 2', ... in the integer encoding above.
int primed_charge(std::span<const int> word);

}  // namespace krc
