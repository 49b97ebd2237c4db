#include "krc/charge.hpp"

#include <algorithm>

#include "krc/error.hpp"

namespace krc {

std::string label_str(int label, const CartanType& ct) {
  if (ct.family == Family::A) return std::to_string(label);
  const int j = (label + 1) / 2;
  return label % 2 == 0 ? std::to_string(j) + "'" : std::to_string(j);
}

std::vector<int> ChargeWord::lower() const {
  std::vector<int> out;
  out.reserve(biletters.size());
  for (const auto& b : biletters) out.push_back(b.j);
  return out;
}

std::string ChargeWord::lower_str() const {
  std::string out;
  for (const auto& b : biletters) out += label_str(b.j, cartan);
  return out;
}

namespace {

void require_sorted_heights(const TensorElement& b) {
  const auto& cols = b.factors();
  for (std::size_t t = 1; t < cols.size(); ++t) {
    if (cols[t].height() > cols[t - 1].height()) {
      throw Error(ErrorCode::HeightsNotSorted,
                  "column heights must weakly decrease from left to right");
    }
  }
}

// Type A: the columns themselves. Type C: b_1^L b_1^R b_2^L b_2^R ...
std::vector<Column> labelled_columns(const TensorElement& b) {
  require_sorted_heights(b);
  if (b.cartan().family == Family::A) return b.factors();
  std::vector<Column> out;
  out.reserve(2 * b.size());
  for (const auto& col : b.factors()) {
    const auto& s = cached_split(b.cartan(), col);
    out.push_back(s.left);
    out.push_back(s.right);
  }
  return out;
}

void require_partition_content(std::span<const int> word, bool primed) {
  int top = 0;
  for (int x : word) {
    if (x < 1) throw Error(ErrorCode::NotPartitionContent, "labels start at 1");
    top = std::max(top, x);
  }
  std::vector<int> count(top + 2, 0);
  for (int x : word) ++count[x];
  const int step = primed ? 2 : 1;
  if (primed) {
    for (int x = 1; x <= top; x += 2) {
      if (count[x] != count[x + 1]) {
        throw Error(ErrorCode::NotPartitionContent, "labels j and j' must occur equally often");
      }
    }
  }
  for (int x = 1; x + step <= top; x += step) {
    if (count[x] < count[x + step]) {
      throw Error(ErrorCode::NotPartitionContent, "word does not have partition content");
    }
  }
}

// Repeated right-to-left selection of 1, 2, 3, ... . `score` receives the
// wraps of one iteration (label reached by restarting at the right end) and
// the last label selected in it.
template <typename Score>
int select_and_score(std::span<const int> word, Score score) {
  const int len = static_cast<int>(word.size());
  std::vector<bool> used(len, false);
  int remaining = len;
  int total = 0;
  std::vector<int> wraps;
  while (remaining > 0) {
    wraps.clear();
    int pos = len;
    int label = 1;
    int last = 0;
    while (true) {
      int found = -1;
      for (int p = pos - 1; p >= 0; --p) {
        if (!used[p] && word[p] == label) {
          found = p;
          break;
        }
      }
      if (found < 0 && pos < len) {
        for (int p = len - 1; p > pos; --p) {
          if (!used[p] && word[p] == label) {
            found = p;
            break;
          }
        }
        if (found >= 0) wraps.push_back(label);
      }
      if (found < 0) break;
      used[found] = true;
      --remaining;
      pos = found;
      last = label;
      ++label;
    }
    if (last == 0) throw Error(ErrorCode::NotPartitionContent, "no label 1 left in the word");
    total += score(wraps, last);
  }
  return total;
}

}  // namespace

int ls_charge(std::span<const int> word) {
  require_partition_content(word, false);
  return select_and_score(word, [](const std::vector<int>& wraps, int k) {
    int s = 0;
    for (int reached : wraps) s += k - (reached - 1);
    return s;
  });
}

int primed_charge(std::span<const int> word) {
  require_partition_content(word, true);
  return select_and_score(word, [](const std::vector<int>& wraps, int last) {
    if (last % 2 != 0) {
      throw Error(ErrorCode::ChargeInvariant, "iteration stopped after an unprimed label");
    }
    const int k = last / 2;
    int s = 0;
    for (int reached : wraps) {
      if (reached % 2 == 0) {
        throw Error(ErrorCode::ChargeInvariant, "selected j' to the right of the previous j");
      }
      // reached = j + 1 from j'
      s += k - (reached - 1) / 2;
    }
    return s;
  });
}

ChargeWord charge_word(const TensorElement& b) {
  const auto cols = labelled_columns(b);
  ChargeWord w{b.cartan(), {}};
  for (std::size_t t = 0; t < cols.size(); ++t) {
    for (Letter k : cols[t].letters()) w.biletters.push_back({k, static_cast<int>(t) + 1});
  }
  std::sort(w.biletters.begin(), w.biletters.end(), [](const BiLetter& x, const BiLetter& y) {
    if (x.k != y.k) return x.k > y.k;
    return x.j > y.j;
  });
  return w;
}

int CircFilling::arm(const Cell& cell) const {
  int right = 0;
  for (std::size_t t = cell.column + 1; t < columns.size(); ++t) {
    if (static_cast<int>(columns[t].size()) > cell.row) ++right;
  }
  return right;
}

int CircFilling::arm_sum() const {
  int s = 0;
  for (const auto& d : descents) s += arm(d);
  return s;
}

std::vector<Letter> CircFilling::row(int i) const {
  std::vector<Letter> out;
  for (const auto& col : columns) {
    if (static_cast<int>(col.size()) > i) out.push_back(col[i]);
  }
  return out;
}

int CircFilling::row_count() const {
  return columns.empty() ? 0 : static_cast<int>(columns.front().size());
}

CircFilling circ_ord(const TensorElement& b) {
  const auto& ct = b.cartan();
  const auto cols = labelled_columns(b);
  CircFilling c{ct, {}, {}};
  c.columns.reserve(cols.size());
  c.columns.push_back(cols.front().letters());
  for (std::size_t t = 1; t < cols.size(); ++t) {
    std::vector<Letter> pool = cols[t].letters();
    std::vector<Letter> out;
    out.reserve(pool.size());
    const auto& prev = c.columns.back();
    for (std::size_t i = 0; i < cols[t].letters().size(); ++i) {
      const Letter start = prev[i];
      auto best = std::min_element(pool.begin(), pool.end(), [&](Letter x, Letter y) {
        return circular_key(x, start, ct) < circular_key(y, start, ct);
      });
      out.push_back(*best);
      pool.erase(best);
    }
    c.columns.push_back(std::move(out));
  }
  for (std::size_t t = 0; t + 1 < c.columns.size(); ++t) {
    const auto& next = c.columns[t + 1];
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (c.columns[t][i] <= next[i]) continue;
      if (ct.family == Family::C && t % 2 == 0) {
        throw Error(ErrorCode::ChargeInvariant, "descent inside a split column pair");
      }
      c.descents.push_back({static_cast<int>(t), static_cast<int>(i)});
    }
  }
  return c;
}

// Same walk as circ_ord, without materializing the filling: an arm is the
// number of later columns long enough to reach the row.
int charge(const TensorElement& b) {
  require_sorted_heights(b);
  const auto& ct = b.cartan();
  const bool type_c = ct.family == Family::C;
  thread_local std::vector<const std::vector<Letter>*> cols;
  thread_local std::vector<int> reach;
  thread_local std::vector<Letter> prev, cur, pool;
  cols.clear();
  for (const auto& col : b.factors()) {
    if (type_c) {
      const auto& s = cached_split(ct, col);
      cols.push_back(&s.left.letters());
      cols.push_back(&s.right.letters());
    } else {
      cols.push_back(&col.letters());
    }
  }
  const int m = static_cast<int>(cols.size());
  reach.assign(cols.front()->size(), 0);
  for (const auto* c : cols) {
    for (std::size_t i = 0; i < c->size(); ++i) ++reach[i];
  }
  prev.assign(cols.front()->begin(), cols.front()->end());
  int sum = 0;
  for (int t = 1; t < m; ++t) {
    pool.assign(cols[t]->begin(), cols[t]->end());
    cur.clear();
    for (std::size_t i = 0; i < cols[t]->size(); ++i) {
      const Letter start = prev[i];
      auto best = std::min_element(pool.begin(), pool.end(), [&](Letter x, Letter y) {
        return circular_key(x, start, ct) < circular_key(y, start, ct);
      });
      cur.push_back(*best);
      *best = pool.back();
      pool.pop_back();
      if (prev[i] > cur[i]) {
        if (type_c && (t - 1) % 2 == 0) {
          throw Error(ErrorCode::ChargeInvariant, "descent inside a split column pair");
        }
        sum += reach[i] - t;
      }
    }
    std::swap(prev, cur);
  }
  if (!type_c) return sum;
  if (sum % 2 != 0) throw Error(ErrorCode::OddArmSum, "type C arm sum is odd");
  return sum / 2;
}

int charge_by_selection(const TensorElement& b) {
  const auto word = charge_word(b).lower();
  return b.cartan().family == Family::A ? ls_charge(word) : primed_charge(word);
}

}  // namespace krc
