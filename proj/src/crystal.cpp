#include "krc/crystal.hpp"

#include <algorithm>

#include "krc/error.hpp"
#include "krc/signature.hpp"

namespace krc {

std::vector<int> TensorElement::heights() const {
  std::vector<int> h;
  h.reserve(factors_.size());
  for (const auto& c : factors_) h.push_back(c.height());
  return h;
}

bool TensorElement::has_barred() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const Column& c) { return c.has_barred(); });
}

AffineWeight AffineWeight::fundamental(const CartanType& ct, int i) {
  AffineWeight w{std::vector<int>(ct.top_index() + 1, 0)};
  w.coeffs.at(i) = 1;
  return w;
}

namespace {

Signature tensor_signature(int i, const TensorElement& b) {
  const auto& cols = b.factors();
  const auto& ct = b.cartan();
  return signature_rule(static_cast<int>(cols.size()), [&](int t) {
    return std::pair{column_phi(cols[t], i, ct), column_eps(cols[t], i, ct)};
  });
}

}  // namespace

std::optional<TensorElement> f(int i, const TensorElement& b) {
  const int pos = tensor_signature(i, b).f_position;
  if (pos < 0) return std::nullopt;
  TensorElement out = b;
  out.factors()[pos] = *column_f(b.factors()[pos], i, b.cartan());
  return out;
}

std::optional<TensorElement> e(int i, const TensorElement& b) {
  const int pos = tensor_signature(i, b).e_position;
  if (pos < 0) return std::nullopt;
  TensorElement out = b;
  out.factors()[pos] = *column_e(b.factors()[pos], i, b.cartan());
  return out;
}

int phi(int i, const TensorElement& b) { return tensor_signature(i, b).phi; }
int eps(int i, const TensorElement& b) { return tensor_signature(i, b).eps; }

EpsPhi eps_phi(int i, const TensorElement& b) {
  const Signature s = tensor_signature(i, b);
  return {s.eps, s.phi};
}

int f_position(int i, const TensorElement& b) { return tensor_signature(i, b).f_position; }
int e_position(int i, const TensorElement& b) { return tensor_signature(i, b).e_position; }

AffineWeight epsilon_weight(const TensorElement& b) {
  AffineWeight w;
  for (int i = 0; i <= b.cartan().top_index(); ++i) w.coeffs.push_back(eps(i, b));
  return w;
}

AffineWeight phi_weight(const TensorElement& b) {
  AffineWeight w;
  for (int i = 0; i <= b.cartan().top_index(); ++i) w.coeffs.push_back(phi(i, b));
  return w;
}

ClassicalWeight weight(const TensorElement& b) {
  ClassicalWeight w{std::vector<int>(b.cartan().n, 0)};
  for (const auto& col : b.factors()) {
    for (Letter l : col.letters()) w.content[l.index() - 1] += l.barred() ? -1 : 1;
  }
  return w;
}

int coroot_pairing(const ClassicalWeight& wt, int i, const CartanType& ct) {
  if (i < 1 || i > ct.top_index()) {
    throw Error(ErrorCode::InvalidIndex, "coroot pairing needs a classical index");
  }
  if (ct.family == Family::C && i == ct.n) return wt.content[ct.n - 1];
  return wt.content[i - 1] - wt.content[i];
}

bool is_classical_highest(const TensorElement& b) {
  for (int i = 1; i <= b.cartan().top_index(); ++i) {
    if (tensor_signature(i, b).e_position >= 0) return false;
  }
  return true;
}

RaiseResult classical_highest(const TensorElement& b) {
  RaiseResult out{b, {}};
  const int top = b.cartan().top_index();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= top; ++i) {
      if (auto up = e(i, out.highest)) {
        out.highest = std::move(*up);
        out.path.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return out;
}

std::optional<TensorElement> lower_along(const TensorElement& highest,
                                         const std::vector<int>& path) {
  TensorElement x = highest;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto down = f(*it, x);
    if (!down) return std::nullopt;
    x = std::move(*down);
  }
  return x;
}

TensorElement classical_lowest(const TensorElement& b) {
  TensorElement x = b;
  const int top = b.cartan().top_index();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= top; ++i) {
      if (auto down = f(i, x)) {
        x = std::move(*down);
        moved = true;
        break;
      }
    }
  }
  return x;
}

TensorElement lusztig_involution(const TensorElement& b) {
  const auto& ct = b.cartan();
  const RaiseResult raised = classical_highest(b);
  TensorElement x = classical_lowest(raised.highest);
  // b = f_{p0} f_{p1} ... f_{pm-1} (highest)  =>  S(b) = e_{p0*} ... e_{pm-1*} (lowest)
  for (auto it = raised.path.rbegin(); it != raised.path.rend(); ++it) {
    auto up = e(ct.star(*it), x);
    if (!up) {
      throw Error(ErrorCode::ComponentCorrupt, "Lusztig involution left the component");
    }
    x = std::move(*up);
  }
  return x;
}

std::uint64_t element_count(const CartanType& ct, const std::vector<int>& heights) {
  std::uint64_t total = 1;
  for (int h : heights) {
    const auto size = static_cast<std::uint64_t>(columns_of_height(ct, h).size());
    if (total > UINT64_MAX / size) return UINT64_MAX;
    total *= size;
  }
  return total;
}

void for_each_element(const CartanType& ct, const std::vector<int>& heights,
                      const std::function<void(const TensorElement&)>& visit,
                      std::uint64_t budget) {
  if (heights.empty()) {
    throw Error(ErrorCode::InvalidShape, "a tensor product needs at least one factor");
  }
  const std::uint64_t total = element_count(ct, heights);
  if (total > budget) {
    throw Error(ErrorCode::ShapeTooLarge, std::to_string(total) + " elements exceed the budget of " +
                                              std::to_string(budget));
  }
  std::vector<const std::vector<Column>*> sets;
  for (int h : heights) sets.push_back(&columns_of_height(ct, h));
  const std::size_t m = heights.size();
  std::vector<std::size_t> digit(m, 0);
  std::vector<Column> cols(m);
  for (std::size_t t = 0; t < m; ++t) cols[t] = (*sets[t])[0];
  TensorElement b(ct, cols);
  while (true) {
    visit(b);
    std::size_t t = m;
    while (t > 0) {
      --t;
      if (++digit[t] < sets[t]->size()) {
        b.factors()[t] = (*sets[t])[digit[t]];
        break;
      }
      digit[t] = 0;
      b.factors()[t] = (*sets[t])[0];
      if (t == 0) return;
    }
  }
}

std::vector<TensorElement> all_elements(const CartanType& ct, const std::vector<int>& heights,
                                        std::uint64_t budget) {
  std::vector<TensorElement> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(element_count(ct, heights), budget)));
  for_each_element(ct, heights, [&](const TensorElement& b) { out.push_back(b); }, budget);
  return out;
}

std::uint32_t CrystalGraph::index_of(const TensorElement& b) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), b);
  if (it == vertices.end() || !(*it == b)) {
    throw Error(ErrorCode::InvalidShape, "element is not a vertex of this crystal graph");
  }
  return static_cast<std::uint32_t>(it - vertices.begin());
}

CrystalGraph crystal_graph(const CartanType& ct, const std::vector<int>& heights,
                           bool include_zero, std::uint64_t budget) {
  CrystalGraph g{ct, heights, include_zero, all_elements(ct, heights, budget), {}};
  // Enumeration is already lexicographic, which matches operator<.
  const int first = include_zero ? 0 : 1;
  for (std::uint32_t s = 0; s < g.vertices.size(); ++s) {
    for (int i = first; i <= ct.top_index(); ++i) {
      if (auto t = f(i, g.vertices[s])) g.edges.push_back({s, i, g.index_of(*t)});
    }
  }
  return g;
}

}  // namespace krc
