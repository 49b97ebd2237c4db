#include "krc/kyoto.hpp"

#include <algorithm>

#include "krc/error.hpp"

namespace krc {

namespace {

std::vector<int> column_eps_vector(const Column& col, const CartanType& ct) {
  std::vector<int> v;
  for (int i = 0; i <= ct.top_index(); ++i) v.push_back(column_eps(col, i, ct));
  return v;
}

std::vector<int> column_phi_vector(const Column& col, const CartanType& ct) {
  std::vector<int> v;
  for (int i = 0; i <= ct.top_index(); ++i) v.push_back(column_phi(col, i, ct));
  return v;
}

int fundamental_index(const std::vector<int>& w) {
  int h = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (w[i] != 1 || h >= 0) return -1;
    h = static_cast<int>(i);
  }
  return h;
}

void require_type_c(const CartanType& ct) {
  if (ct.family != Family::C) {
    throw Error(ErrorCode::UnsupportedType, "the Demazure walk is defined for type C only");
  }
}

}  // namespace

std::vector<GroundState> ground_states(const CartanType& ct, const std::vector<int>& heights,
                                       std::uint64_t budget) {
  if (heights.empty()) throw Error(ErrorCode::InvalidShape, "a tensor product needs a factor");
  const int count = static_cast<int>(heights.size());
  // level m (1-based from the right) uses heights[count - m]
  std::vector<std::vector<std::pair<const Column*, std::vector<int>>>> candidates(count);
  std::vector<std::vector<std::vector<int>>> candidate_eps(count);
  for (int m = 0; m < count; ++m) {
    for (const auto& col : columns_of_height(ct, heights[count - 1 - m])) {
      candidates[m].push_back({&col, column_phi_vector(col, ct)});
      candidate_eps[m].push_back(column_eps_vector(col, ct));
    }
  }

  std::vector<GroundState> out;
  std::vector<const Column*> chosen(count, nullptr);
  const std::vector<int> lambda0 = AffineWeight::fundamental(ct, 0).coeffs;
  auto visit = [&](auto&& self, int m, const std::vector<int>& want) -> void {
    for (std::size_t t = 0; t < candidates[m].size(); ++t) {
      if (candidate_eps[m][t] != want) continue;
      chosen[m] = candidates[m][t].first;
      const auto& phi_here = candidates[m][t].second;
      if (m + 1 < count) {
        self(self, m + 1, phi_here);
        continue;
      }
      const int h = fundamental_index(phi_here);
      if (h < 0) throw Error(ErrorCode::ComponentCorrupt, "ground state weight is not fundamental");
      if (out.size() >= budget) {
        throw Error(ErrorCode::ShapeTooLarge, "ground state count exceeds the budget");
      }
      std::vector<Column> cols;
      for (int p = count - 1; p >= 0; --p) cols.push_back(*chosen[p]);
      out.push_back({TensorElement(ct, std::move(cols)), h});
    }
  };
  visit(visit, 0, lambda0);
  return out;
}

ShapeState ShapeState::make(int k, int h2, int h1, int n) {
  if (h1 < 0 || h2 < h1 || h2 > n || k < 0) {
    throw Error(ErrorCode::InvalidShape, "λ(k, h2, h1) needs n >= h2 >= h1 >= 0");
  }
  if (h2 == n && h1 == n) return {k + 2, 0, 0};
  if (h2 == n) return {k + 1, h1, 0};
  return {k, h2, h1};
}

std::vector<int> ShapeState::columns(int n) const {
  std::vector<int> out(k, n);
  if (h2 > 0) out.push_back(h2);
  if (h1 > 0) out.push_back(h1);
  return out;
}

std::string ShapeState::str() const {
  return "λ(" + std::to_string(k) + "," + std::to_string(h2) + "," + std::to_string(h1) + ")";
}

ArrowWord demazure_word(const ShapeState& shape, int n) {
  const int k = shape.k;
  ArrowWord w;
  if (k > 0) w.push_back({n, k});
  for (int i = n - 1; i >= 1; --i) {
    const int e = i <= shape.h1 ? 2 * k + 2 : i <= shape.h2 ? 2 * k + 1 : 2 * k;
    if (e > 0) w.push_back({i, e});
  }
  w.push_back({0, k + 1});
  return w;
}

std::string word_str(const ArrowWord& word) {
  std::string out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += "f_" + std::to_string(it->first);
    if (it->second != 1) out += "^" + std::to_string(it->second);
  }
  return out;
}

WalkResult demazure_walk(const GroundState& g) {
  const auto& ct = g.element.cartan();
  require_type_c(ct);
  const int n = ct.n;
  WalkResult r{g.element, {}};
  ShapeState shape = ShapeState::column(g.weight, n);
  for (int j = 0;; ++j) {
    const ArrowWord word = demazure_word(shape, n);
    TensorElement x = r.final_element;
    bool defined = true;
    bool demazure = true;
    for (const auto& [i, times] : word) {
      for (int t = 0; t < times && defined; ++t) {
        if (i == 0 && eps(0, x) < 1) demazure = false;
        auto y = f(i, x);
        if (!y) {
          defined = false;
        } else {
          x = std::move(*y);
        }
      }
      if (!defined) break;
    }
    if (!defined) break;
    if (!demazure) {
      throw Error(ErrorCode::NonDemazureArrow, "f_0 applied with eps_0 = 0 in " + word_str(word));
    }
    r.steps.push_back({j, shape, word, x});
    r.final_element = std::move(x);
    shape = shape.next(n);
  }
  if (r.final_element.has_barred()) {
    throw Error(ErrorCode::BarredResidue, "walk ended on an element with a barred letter");
  }
  return r;
}

TensorElement cut_construction(const GroundState& g) {
  const auto& ct = g.element.cartan();
  require_type_c(ct);
  const int n = ct.n;
  const auto& factors = g.element.factors();
  const int count = static_cast<int>(factors.size());

  // label columns, bottom entry first
  std::vector<int> unbarred;
  std::vector<int> barred;
  for (int m = 1; m <= count; ++m) {
    for (Letter l : factors[count - m].letters()) (l.barred() ? barred : unbarred).push_back(m);
  }

  // rows[i] = labels at height i + 1 over all pieces
  std::vector<std::vector<int>> rows(n);
  const std::size_t tallest = std::max(unbarred.size(), barred.size());
  for (std::size_t level = 0; level * n < tallest; ++level) {
    for (const auto* col : {&unbarred, &barred}) {
      for (int i = 0; i < n; ++i) {
        const std::size_t at = level * n + i;
        if (at < col->size()) rows[i].push_back((*col)[at]);
      }
    }
  }

  std::vector<std::vector<Letter>> letters(count + 1);
  for (int i = 0; i < n; ++i) {
    for (int m : rows[i]) letters[m].push_back(Letter{i + 1});
  }
  std::vector<Column> cols;
  for (int m = count; m >= 1; --m) cols.push_back(validate_column(letters[m], ct));
  return TensorElement(ct, std::move(cols));
}

}  // namespace krc
