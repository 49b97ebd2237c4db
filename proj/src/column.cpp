#include "krc/column.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "krc/error.hpp"
#include "krc/signature.hpp"

namespace krc {

bool Column::contains(Letter x) const {
  return std::binary_search(letters_.begin(), letters_.end(), x);
}

bool Column::has_barred() const {
  return std::any_of(letters_.begin(), letters_.end(), [](Letter l) { return l.barred(); });
}

std::string Column::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ',';
    os << letters_[i].value;
  }
  return os.str();
}

Column generator_column(int height) {
  std::vector<Letter> v;
  v.reserve(height);
  for (int z = 1; z <= height; ++z) v.emplace_back(z);
  return Column::unchecked(std::move(v));
}

namespace {

int position_of(std::span<const Letter> letters, Letter x) {
  auto it = std::find(letters.begin(), letters.end(), x);
  return it == letters.end() ? -1 : static_cast<int>(it - letters.begin());
}

bool contains(std::span<const Letter> letters, Letter x) { return position_of(letters, x) >= 0; }

// Unbarred z with both z and z̄ present, decreasing.
std::vector<int> paired_letters(std::span<const Letter> letters) {
  std::vector<int> out;
  for (Letter l : letters) {
    if (!l.barred() && contains(letters, l.bar())) out.push_back(l.value);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// The auxiliary set J, or nullopt when it does not exist.
std::optional<std::vector<int>> auxiliary_set(std::span<const Letter> letters,
                                              const std::vector<int>& pairs) {
  std::vector<int> t;
  int bound = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int limit = (i == 0) ? pairs[i] : std::min(bound, pairs[i]);
    int found = 0;
    for (int cand = limit - 1; cand >= 1; --cand) {
      if (!contains(letters, Letter{cand}) && !contains(letters, Letter{-cand})) {
        found = cand;
        break;
      }
    }
    if (found == 0) return std::nullopt;
    t.push_back(found);
    bound = found;
  }
  return t;
}

}  // namespace

bool satisfies_kn_condition(std::span<const Letter> letters, const CartanType& ct) {
  if (ct.family == Family::A) return true;
  const int k = static_cast<int>(letters.size());
  for (int p = 0; p < k; ++p) {
    if (letters[p].barred()) continue;
    const int z = letters[p].value;
    const int q = position_of(letters, letters[p].bar());
    if (q >= 0 && q - p <= k - z) return false;
  }
  return true;
}

bool is_splittable(std::span<const Letter> letters, const CartanType& ct) {
  if (ct.family == Family::A) return true;
  return auxiliary_set(letters, paired_letters(letters)).has_value();
}

Column validate_column(std::span<const Letter> letters, const CartanType& ct) {
  const int k = static_cast<int>(letters.size());
  if (k < 1 || k > ct.max_height()) {
    throw Error(ErrorCode::InvalidShape, "column height " + std::to_string(k) +
                                             " outside 1.." + std::to_string(ct.max_height()) +
                                             " for " + ct.name());
  }
  for (Letter l : letters) {
    if (l.value == 0 || l.index() > ct.n || (ct.family == Family::A && l.barred())) {
      throw Error(ErrorCode::LetterOutOfRange,
                  "letter " + l.str() + " is not in the alphabet of " + ct.name());
    }
  }
  for (int p = 1; p < k; ++p) {
    if (!(letters[p - 1] < letters[p])) {
      throw Error(ErrorCode::NotIncreasing, "column entries must strictly increase");
    }
  }
  if (ct.family == Family::C) {
    const bool kn = satisfies_kn_condition(letters, ct);
    const bool split = is_splittable(letters, ct);
    if (kn != split) {
      throw Error(ErrorCode::SplitImpossible, "admissibility tests disagree on a column");
    }
    if (!kn) {
      for (int p = 0; p < k; ++p) {
        if (letters[p].barred()) continue;
        const int z = letters[p].value;
        const int q = position_of(letters, letters[p].bar());
        if (q >= 0 && q - p <= k - z) {
          throw Error(ErrorCode::AdmissibilityViolation,
                      "pair (" + std::to_string(z) + ", -" + std::to_string(z) +
                          ") has q-p = " + std::to_string(q - p) +
                          " <= k-z = " + std::to_string(k - z));
        }
      }
    }
  }
  return Column::unchecked(std::vector<Letter>(letters.begin(), letters.end()));
}

Column validate_column(std::initializer_list<int> values, const CartanType& ct) {
  std::vector<Letter> v;
  for (int x : values) v.emplace_back(x);
  return validate_column(v, ct);
}

SplitColumn split_column(const Column& col, const CartanType& ct) {
  if (ct.family != Family::C) {
    throw Error(ErrorCode::UnsupportedType, "split_column needs a type C column");
  }
  const auto& letters = col.letters();
  const auto pairs = paired_letters(letters);
  if (pairs.empty()) return {col, col};
  const auto t = auxiliary_set(letters, pairs);
  if (!t) throw Error(ErrorCode::SplitImpossible, "no auxiliary set for column " + col.str());

  std::vector<Letter> left = letters;
  std::vector<Letter> right = letters;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int z = pairs[i];
    const int ti = (*t)[i];
    *std::find(left.begin(), left.end(), Letter{z}) = Letter{ti};
    *std::find(right.begin(), right.end(), Letter{-z}) = Letter{-ti};
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return {Column::unchecked(std::move(left)), Column::unchecked(std::move(right))};
}

namespace {

struct ColumnTable {
  std::vector<Column> columns;
  std::unordered_map<Column, int> index;
  std::vector<SplitColumn> splits;  ///< type C only, parallel to `columns`
};

ColumnTable build_table(const CartanType& ct, int height) {
  ColumnTable table;
  const int m = ct.alphabet_size();
  std::vector<int> pick(height);
  for (int i = 0; i < height; ++i) pick[i] = i;
  while (true) {
    std::vector<Letter> letters;
    letters.reserve(height);
    for (int r : pick) letters.push_back(Letter::from_rank(r, ct.n));
    const bool kn = satisfies_kn_condition(letters, ct);
    if (kn != is_splittable(letters, ct)) {
      throw Error(ErrorCode::SplitImpossible, "admissibility tests disagree during enumeration");
    }
    if (kn) table.columns.push_back(Column::unchecked(std::move(letters)));
    int i = height - 1;
    while (i >= 0 && pick[i] == m - height + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < height; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(table.columns.begin(), table.columns.end());
  for (int i = 0; i < static_cast<int>(table.columns.size()); ++i) {
    table.index.emplace(table.columns[i], i);
  }
  if (ct.family == Family::C) {
    for (const auto& col : table.columns) table.splits.push_back(split_column(col, ct));
  }
  return table;
}

const ColumnTable& column_table(const CartanType& ct, int height) {
  if (height < 1 || height > ct.max_height()) {
    throw Error(ErrorCode::InvalidShape, "column height " + std::to_string(height) +
                                             " outside 1.." + std::to_string(ct.max_height()) +
                                             " for " + ct.name());
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<ColumnTable>> cache;
  const auto key = std::make_tuple(static_cast<int>(ct.family), ct.n, height);
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<ColumnTable>(build_table(ct, height));
  return *slot;
}

// Single-box crystal B(ω_1) for classical i.
int box_phi(Letter x, int i, const CartanType& ct) {
  if (ct.family == Family::C && i == ct.n) return x.value == ct.n ? 1 : 0;
  if (x.value == i) return 1;
  if (ct.family == Family::C && x.value == -(i + 1)) return 1;
  return 0;
}

int box_eps(Letter x, int i, const CartanType& ct) {
  if (ct.family == Family::C && i == ct.n) return x.value == -ct.n ? 1 : 0;
  if (x.value == i + 1) return 1;
  if (ct.family == Family::C && x.value == -i) return 1;
  return 0;
}

Letter box_f(Letter x, int i, const CartanType& ct) {
  if (ct.family == Family::C && i == ct.n) return Letter{-ct.n};
  return x.value == i ? Letter{i + 1} : Letter{-i};
}

Letter box_e(Letter x, int i, const CartanType& ct) {
  if (ct.family == Family::C && i == ct.n) return Letter{ct.n};
  return x.value == i + 1 ? Letter{i} : Letter{-(i + 1)};
}

Signature column_signature(const Column& col, int i, ColumnReading reading,
                           const CartanType& ct) {
  const int k = col.height();
  auto box_at = [&](int t) {
    return reading == ColumnReading::BottomToTop ? col[k - 1 - t] : col[t];
  };
  return signature_rule(k, [&](int t) {
    const Letter x = box_at(t);
    return std::pair{box_phi(x, i, ct), box_eps(x, i, ct)};
  });
}

void check_index(int i, const CartanType& ct) {
  if (!ct.valid_index(i)) {
    throw Error(ErrorCode::InvalidIndex,
                "index " + std::to_string(i) + " is not in I for " + ct.name());
  }
}

}  // namespace

const std::vector<Column>& columns_of_height(const CartanType& ct, int height) {
  return column_table(ct, height).columns;
}

int column_index(const CartanType& ct, const Column& col) {
  const auto& table = column_table(ct, col.height());
  auto it = table.index.find(col);
  if (it == table.index.end()) {
    throw Error(ErrorCode::AdmissibilityViolation,
                "column " + col.str() + " is not admissible for " + ct.name());
  }
  return it->second;
}

const SplitColumn& cached_split(const CartanType& ct, const Column& col) {
  if (ct.family != Family::C) {
    throw Error(ErrorCode::UnsupportedType, "split_column needs a type C column");
  }
  const auto& table = column_table(ct, col.height());
  return table.splits[column_index(ct, col)];
}

std::optional<std::vector<Letter>> column_classical_raw(const Column& col, int i, bool raise,
                                                        ColumnReading reading,
                                                        const CartanType& ct) {
  const Signature s = column_signature(col, i, reading, ct);
  const int pos = raise ? s.e_position : s.f_position;
  if (pos < 0) return std::nullopt;
  const int k = col.height();
  const int box = reading == ColumnReading::BottomToTop ? k - 1 - pos : pos;
  std::vector<Letter> out = col.letters();
  out[box] = raise ? box_e(out[box], i, ct) : box_f(out[box], i, ct);
  return out;
}

int column_phi(const Column& col, int i, const CartanType& ct) {
  check_index(i, ct);
  if (i == 0) {
    if (ct.family == Family::A) {
      return col.contains(Letter{ct.n}) && !col.contains(Letter{1}) ? 1 : 0;
    }
    return col.contains(Letter{-1}) ? 1 : 0;
  }
  return column_signature(col, i, kColumnReading, ct).phi;
}

int column_eps(const Column& col, int i, const CartanType& ct) {
  check_index(i, ct);
  if (i == 0) {
    if (ct.family == Family::A) {
      return col.contains(Letter{1}) && !col.contains(Letter{ct.n}) ? 1 : 0;
    }
    return col.contains(Letter{1}) ? 1 : 0;
  }
  return column_signature(col, i, kColumnReading, ct).eps;
}

namespace {

// Replace `from` by `to` and restore increasing order.
Column swap_letter(const Column& col, Letter from, Letter to) {
  std::vector<Letter> v = col.letters();
  *std::find(v.begin(), v.end(), from) = to;
  std::sort(v.begin(), v.end());
  return Column::unchecked(std::move(v));
}

}  // namespace

std::optional<Column> column_f(const Column& col, int i, const CartanType& ct) {
  check_index(i, ct);
  if (i == 0) {
    if (column_phi(col, 0, ct) == 0) return std::nullopt;
    return ct.family == Family::A ? swap_letter(col, Letter{ct.n}, Letter{1})
                                  : swap_letter(col, Letter{-1}, Letter{1});
  }
  auto raw = column_classical_raw(col, i, false, kColumnReading, ct);
  if (!raw) return std::nullopt;
  return Column::unchecked(std::move(*raw));
}

std::optional<Column> column_e(const Column& col, int i, const CartanType& ct) {
  check_index(i, ct);
  if (i == 0) {
    if (column_eps(col, 0, ct) == 0) return std::nullopt;
    return ct.family == Family::A ? swap_letter(col, Letter{1}, Letter{ct.n})
                                  : swap_letter(col, Letter{1}, Letter{-1});
  }
  auto raw = column_classical_raw(col, i, true, kColumnReading, ct);
  if (!raw) return std::nullopt;
  return Column::unchecked(std::move(*raw));
}

}  // namespace krc
