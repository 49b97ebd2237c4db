#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "krc/cartan.hpp"

namespace krc {

/// A strictly increasing column of letters, top entry first. Instances built
/// through `validate_column` or `columns_of_height` are admissible for their
/// Cartan type; `Column::unchecked` skips every check.
class Column {
 public:
  Column() = default;

  static Column unchecked(std::vector<Letter> letters) {
    Column c;
    c.letters_ = std::move(letters);
    return c;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  int height() const { return static_cast<int>(letters_.size()); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  bool contains(Letter x) const;
  bool has_barred() const;

  std::string str() const;

  bool operator==(const Column&) const = default;
  auto operator<=>(const Column&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// (1, 2, ..., height): the generator of B^{height,1}.
Column generator_column(int height);

/// Unchecked distance test: no pair (z, z̄) at positions p < q
/// with q - p <= k - z. Type A columns only need range/order checks.
bool satisfies_kn_condition(std::span<const Letter> letters, const CartanType& ct);

/// Splittability test (auxiliary set J exists).
bool is_splittable(std::span<const Letter> letters, const CartanType& ct);

/// Checks order, letter range, height and admissibility. In type C both
/// admissibility tests run and must agree.
Column validate_column(std::span<const Letter> letters, const CartanType& ct);
Column validate_column(std::initializer_list<int> values, const CartanType& ct);

struct SplitColumn {
  Column left;
  Column right;
  bool operator==(const SplitColumn&) const = default;
};

/// Type C split b -> (b^L, b^R). Columns without (z, z̄) pairs split as (b, b).
SplitColumn split_column(const Column& col, const CartanType& ct);

/// `split_column` of an admissible column, precomputed with the column table.
const SplitColumn& cached_split(const CartanType& ct, const Column& col);

/// All admissible columns of one height in increasing lexicographic order.
/// Cached per (type, height); the reference stays valid for the process.
const std::vector<Column>& columns_of_height(const CartanType& ct, int height);

/// Position of `col` in `columns_of_height`. Throws if it is not there.
int column_index(const CartanType& ct, const Column& col);

// --- crystal structure of a single column -----------------------------------

/// Order in which the boxes of a column are tensored for classical operators.
enum class ColumnReading {
  BottomToTop,  ///< b(k) ⊗ ... ⊗ b(1)
  TopToBottom,  ///< b(1) ⊗ ... ⊗ b(k)
};

/// The reading under which the admissible columns of height k are closed
/// under e_i, f_i (i != 0) and form one component. Guarded by a test that
/// also shows the opposite reading fails.
inline constexpr ColumnReading kColumnReading = ColumnReading::BottomToTop;

int column_phi(const Column& col, int i, const CartanType& ct);
int column_eps(const Column& col, int i, const CartanType& ct);
std::optional<Column> column_f(const Column& col, int i, const CartanType& ct);
std::optional<Column> column_e(const Column& col, int i, const CartanType& ct);

/// Classical operator through a given reading, without any admissibility or
/// ordering check on the result. Only used to validate `kColumnReading`.
std::optional<std::vector<Letter>> column_classical_raw(const Column& col, int i, bool raise,
                                                        ColumnReading reading,
                                                        const CartanType& ct);

}  // namespace krc

template <>
struct std::hash<krc::Column> {
  std::size_t operator()(const krc::Column& c) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (krc::Letter l : c.letters()) {
      h ^= static_cast<std::size_t>(l.value + 64) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
