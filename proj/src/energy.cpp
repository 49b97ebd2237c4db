#include "krc/energy.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <queue>
#include <tuple>

#include "krc/error.hpp"

namespace krc {

namespace {

using Key = std::tuple<int, int, int, int>;

Key key_of(const CartanType& ct, int a, int b) {
  return {static_cast<int>(ct.family), ct.n, a, b};
}

/// Classical highest elements of B^{h_left,1} ⊗ B^{h_right,1} keyed by weight.
/// The product is multiplicity free, so each weight occurs at most once.
using HighestMap = std::map<ClassicalWeight, ColumnPair>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<Key, std::shared_ptr<const HighestMap>>& highest_cache() {
  static std::map<Key, std::shared_ptr<const HighestMap>> c;
  return c;
}

std::map<Key, std::shared_ptr<const LocalEnergyTable>>& table_cache() {
  static std::map<Key, std::shared_ptr<const LocalEnergyTable>> c;
  return c;
}

std::shared_ptr<const HighestMap> highest_elements(const CartanType& ct, int h_left, int h_right) {
  const Key key = key_of(ct, h_left, h_right);
  {
    std::lock_guard lock(cache_mutex());
    auto it = highest_cache().find(key);
    if (it != highest_cache().end()) return it->second;
  }
  auto out = std::make_shared<HighestMap>();
  for (const auto& l : columns_of_height(ct, h_left)) {
    for (const auto& r : columns_of_height(ct, h_right)) {
      const TensorElement b(ct, {l, r});
      if (!is_classical_highest(b)) continue;
      if (!out->emplace(weight(b), ColumnPair{l, r}).second) {
        throw Error(ErrorCode::NoMatchingComponent, "tensor product of columns is not multiplicity free");
      }
    }
  }
  std::lock_guard lock(cache_mutex());
  return highest_cache().emplace(key, std::move(out)).first->second;
}

ColumnPair as_pair(const TensorElement& b) { return {b.factors()[0], b.factors()[1]}; }

}  // namespace

ColumnPair combinatorial_r(const Column& left, const Column& right, const CartanType& ct) {
  const TensorElement b(ct, {left, right});
  const RaiseResult raised = classical_highest(b);
  const auto highest = highest_elements(ct, right.height(), left.height());
  auto it = highest->find(weight(raised.highest));
  if (it == highest->end()) {
    throw Error(ErrorCode::NoMatchingComponent, "no component of matching weight in swapped product");
  }
  const TensorElement target(ct, {it->second.left, it->second.right});
  auto lowered = lower_along(target, raised.path);
  if (!lowered) throw Error(ErrorCode::NoMatchingComponent, "lowering path undefined in image");
  return as_pair(*lowered);
}

ColumnPair commutor(const Column& left, const Column& right, const CartanType& ct) {
  const auto s_left = lusztig_involution(TensorElement(ct, {left})).factors()[0];
  const auto s_right = lusztig_involution(TensorElement(ct, {right})).factors()[0];
  return as_pair(lusztig_involution(TensorElement(ct, {s_right, s_left})));
}

LocalEnergyTable::LocalEnergyTable(const CartanType& ct, int h_left, int h_right)
    : cartan_(ct), h_left_(h_left), h_right_(h_right) {
  const auto& lefts = columns_of_height(ct, h_left);
  const auto& rights = columns_of_height(ct, h_right);
  right_size_ = rights.size();
  const std::size_t total = lefts.size() * rights.size();
  sigma_.resize(total);
  energy_.assign(total, 0);

  const auto swapped = highest_elements(ct, h_right, h_left);
  std::vector<int> component(total, -1);
  auto slot_of = [&](const TensorElement& x) {
    return slot(column_index(ct, x.factors()[0]), column_index(ct, x.factors()[1]));
  };

  // One classical component at a time: raise once, then walk down with f_i
  // on the element and its image together, since σ commutes with f_i.
  std::vector<std::pair<TensorElement, TensorElement>> stack;
  for (std::size_t start = 0; start < total; ++start) {
    if (component[start] >= 0) continue;
    const TensorElement b(ct, {lefts[start / right_size_], rights[start % right_size_]});
    const TensorElement top = classical_highest(b).highest;
    auto it = swapped->find(weight(top));
    if (it == swapped->end()) {
      throw Error(ErrorCode::NoMatchingComponent, "no component of matching weight in swapped product");
    }
    const int id = component_count_++;
    stack.push_back({top, TensorElement(ct, {it->second.left, it->second.right})});
    component[slot_of(top)] = id;
    while (!stack.empty()) {
      auto [x, y] = std::move(stack.back());
      stack.pop_back();
      sigma_[slot_of(x)] = {column_index(ct, y.factors()[0]), column_index(ct, y.factors()[1])};
      for (int i = 1; i <= ct.top_index(); ++i) {
        auto fx = f(i, x);
        if (!fx) continue;
        const std::size_t s = slot_of(*fx);
        if (component[s] >= 0) continue;
        auto fy = f(i, y);
        if (!fy) throw Error(ErrorCode::NoMatchingComponent, "lowering path undefined in image");
        component[s] = id;
        stack.push_back({std::move(*fx), std::move(*fy)});
      }
    }
  }

  // e_0 edges between classical components: H(e_0 b) = H(b) - 1 (LL), + 1 (RR).
  struct Edge {
    int from;
    int to;
    int delta;
  };
  std::vector<std::vector<Edge>> adjacent(component_count_);
  for (std::size_t a = 0; a < lefts.size(); ++a) {
    for (std::size_t c = 0; c < rights.size(); ++c) {
      const TensorElement b(ct, {lefts[a], rights[c]});
      const int side = e_position(0, b);
      if (side < 0) continue;
      const std::size_t s = slot(static_cast<int>(a), static_cast<int>(c));
      const auto [sl, sr] = sigma_[s];
      const TensorElement image(ct, {columns_of_height(ct, h_right)[sl], columns_of_height(ct, h_left)[sr]});
      const int image_side = e_position(0, image);
      if (image_side < 0) {
        throw Error(ErrorCode::ComponentCorrupt, "R-matrix does not commute with e_0");
      }
      const int delta = (side == 0 && image_side == 0) ? -1 : (side == 1 && image_side == 1) ? 1 : 0;
      const TensorElement raised = *e(0, b);
      const int target = component[slot(column_index(ct, raised.factors()[0]),
                                        column_index(ct, raised.factors()[1]))];
      adjacent[component[s]].push_back({component[s], target, delta});
      adjacent[target].push_back({target, component[s], -delta});
    }
  }

  std::vector<int> value(component_count_, 0);
  std::vector<bool> seen(component_count_, false);
  const int start = component[slot(column_index(ct, generator_column(h_left)),
                                   column_index(ct, generator_column(h_right)))];
  std::queue<int> todo;
  todo.push(start);
  seen[start] = true;
  while (!todo.empty()) {
    const int u = todo.front();
    todo.pop();
    for (const Edge& edge : adjacent[u]) {
      const int expected = value[u] + edge.delta;
      if (!seen[edge.to]) {
        seen[edge.to] = true;
        value[edge.to] = expected;
        todo.push(edge.to);
      } else if (value[edge.to] != expected) {
        throw Error(ErrorCode::ComponentCorrupt, "local energy recursion is inconsistent");
      }
    }
  }
  for (int cmp = 0; cmp < component_count_; ++cmp) {
    if (!seen[cmp]) throw Error(ErrorCode::ComponentCorrupt, "affine crystal is not connected");
  }
  for (std::size_t s = 0; s < total; ++s) energy_[s] = value[component[s]];
}

std::shared_ptr<const LocalEnergyTable> LocalEnergyTable::get(const CartanType& ct, int h_left,
                                                              int h_right) {
  const Key key = key_of(ct, h_left, h_right);
  {
    std::lock_guard lock(cache_mutex());
    auto it = table_cache().find(key);
    if (it != table_cache().end()) return it->second;
  }
  // Built outside the lock; concurrent builders produce identical tables.
  std::shared_ptr<const LocalEnergyTable> built(new LocalEnergyTable(ct, h_left, h_right));
  std::lock_guard lock(cache_mutex());
  return table_cache().emplace(key, std::move(built)).first->second;
}

int local_energy(const Column& left, const Column& right, const CartanType& ct) {
  const auto table = LocalEnergyTable::get(ct, left.height(), right.height());
  return table->energy(column_index(ct, left), column_index(ct, right));
}

void clear_energy_caches() {
  std::lock_guard lock(cache_mutex());
  table_cache().clear();
  highest_cache().clear();
}

namespace {

struct IndexedFactor {
  int height;
  int index;
};

// Factors numbered from the right: result[p] is factor p + 1.
std::vector<IndexedFactor> index_factors(const TensorElement& b) {
  std::vector<IndexedFactor> out;
  const auto& cols = b.factors();
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    out.push_back({it->height(), column_index(b.cartan(), *it)});
  }
  return out;
}

// Tables are looked up once per height pair for the duration of one call.
class TableLookup {
 public:
  explicit TableLookup(const CartanType& ct) : ct_(ct) {}
  const LocalEnergyTable& operator()(int h_left, int h_right) {
    auto& slot = tables_[{h_left, h_right}];
    if (!slot) slot = LocalEnergyTable::get(ct_, h_left, h_right);
    return *slot;
  }

 private:
  CartanType ct_;
  std::map<std::pair<int, int>, std::shared_ptr<const LocalEnergyTable>> tables_;
};

// H^L_{j,i}: carry factor i leftwards with σ_i, ..., σ_{j-2}, then evaluate
// H on factors j and j-1.
int left_energy(const TensorElement& b, std::vector<EnergyTerm>* terms) {
  const auto fs = index_factors(b);
  const int count = static_cast<int>(fs.size());
  TableLookup tables(b.cartan());
  int total = 0;
  for (int i = 1; i < count; ++i) {
    IndexedFactor moving = fs[i - 1];
    for (int j = i + 1; j <= count; ++j) {
      const IndexedFactor& fixed = fs[j - 1];
      const auto& table = tables(fixed.height, moving.height);
      const int h = table.energy(fixed.index, moving.index);
      total += h;
      if (terms) terms->push_back({j, i, h});
      if (j < count) moving.index = table.sigma(fixed.index, moving.index).first;
    }
  }
  return total;
}

// H^R_{j,i}: carry factor j rightwards with σ_{j-1}, ..., σ_{i+1}, then
// evaluate H on factors i+1 and i.
int right_energy(const TensorElement& b, std::vector<EnergyTerm>* terms) {
  const auto fs = index_factors(b);
  const int count = static_cast<int>(fs.size());
  TableLookup tables(b.cartan());
  int total = 0;
  for (int j = 2; j <= count; ++j) {
    IndexedFactor moving = fs[j - 1];
    for (int i = j - 1; i >= 1; --i) {
      const IndexedFactor& fixed = fs[i - 1];
      const auto& table = tables(moving.height, fixed.height);
      const int h = table.energy(moving.index, fixed.index);
      total += h;
      if (terms) terms->push_back({j, i, h});
      if (i > 1) moving.index = table.sigma(moving.index, fixed.index).second;
    }
  }
  return total;
}

}  // namespace

int energy_DL(const TensorElement& b) { return left_energy(b, nullptr); }
int energy_DR(const TensorElement& b) { return right_energy(b, nullptr); }

EnergyReport energy_report(const TensorElement& b) {
  EnergyReport r{b, 0, 0, {}, {}};
  r.d_left = left_energy(b, &r.left_terms);
  r.d_right = right_energy(b, &r.right_terms);
  return r;
}

TensorElement tau(const TensorElement& b) {
  std::vector<Column> out;
  const auto& cols = b.factors();
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    out.push_back(lusztig_involution(TensorElement(b.cartan(), {*it})).factors()[0]);
  }
  return TensorElement(b.cartan(), std::move(out));
}

bool is_demazure_arrow(int i, const TensorElement& b) {
  const auto ep = eps_phi(i, b);
  if (ep.phi <= 0) return false;
  return i != 0 || ep.eps >= 1;
}

bool is_grading_target(const TensorElement& b) {
  for (int i = 1; i <= b.cartan().top_index(); ++i) {
    if (eps(i, b) > 0) return false;
  }
  return eps(0, b) <= 1;
}

GradingResult demazure_grading_oracle(const TensorElement& b) {
  const int top = b.cartan().top_index();
  std::map<TensorElement, int> dist;
  std::deque<std::pair<TensorElement, int>> frontier;
  dist.emplace(b, 0);
  frontier.emplace_back(b, 0);
  while (!frontier.empty()) {
    auto [x, d] = std::move(frontier.front());
    frontier.pop_front();
    if (dist.at(x) < d) continue;
    if (is_grading_target(x)) return {x, d};
    for (int i = 0; i <= top; ++i) {
      if (i == 0 && eps(0, x) < 2) continue;
      auto y = e(i, x);
      if (!y) continue;
      const int cost = d + (i == 0 ? 1 : 0);
      auto [it, fresh] = dist.emplace(*y, cost);
      if (!fresh && it->second <= cost) continue;
      it->second = cost;
      if (i == 0) {
        frontier.emplace_back(std::move(*y), cost);
      } else {
        frontier.emplace_front(std::move(*y), cost);
      }
    }
  }
  throw Error(ErrorCode::TargetUnreachable, "no highest element reachable in B ⊗ B(Λ0)");
}

}  // namespace krc
