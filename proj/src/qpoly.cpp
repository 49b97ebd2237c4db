#include "krc/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "krc/charge.hpp"
#include "krc/energy.hpp"
#include "krc/error.hpp"
#include "krc/parallel.hpp"

namespace krc {

void QPolynomial::add(int q, std::int64_t coeff) {
  if (coeff == 0) return;
  auto& c = terms[q];
  c += coeff;
  if (c == 0) terms.erase(q);
}

QPolynomial QPolynomial::inverted() const {
  QPolynomial out;
  for (const auto& [q, c] : terms) out.add(-q, c);
  return out;
}

std::string QPolynomial::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [q, c] : terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*q^" + std::to_string(q);
  }
  return out;
}

void QXPolynomial::add(int q, const std::vector<int>& content, std::int64_t coeff) {
  if (coeff == 0) return;
  const auto key = std::make_pair(q, content);
  auto& c = terms[key];
  c += coeff;
  if (c == 0) terms.erase(key);
}

QXPolynomial& QXPolynomial::operator+=(const QXPolynomial& o) {
  for (const auto& [key, c] : o.terms) add(key.first, key.second, c);
  return *this;
}

std::map<std::vector<int>, std::int64_t> QXPolynomial::at_q_one() const {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [key, c] : terms) out[key.second] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool QXPolynomial::is_symmetric() const {
  for (const auto& [key, c] : terms) {
    std::vector<int> perm = key.second;
    std::sort(perm.begin(), perm.end());
    do {
      auto it = terms.find({key.first, perm});
      if (it == terms.end() || it->second != c) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

std::string QXPolynomial::str() const {
  if (terms.empty()) return "0";
  struct Row {
    int q;
    std::vector<int> shape;
    std::vector<int> content;
    std::int64_t coeff;
  };
  std::vector<Row> rows;
  for (const auto& [key, c] : terms) {
    auto shape = key.second;
    std::sort(shape.rbegin(), shape.rend());
    rows.push_back({key.first, shape, key.second, c});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.shape != b.shape) return a.shape > b.shape;
    return a.content > b.content;
  });
  std::string out;
  for (const auto& r : rows) {
    if (!out.empty()) out += " + ";
    out += std::to_string(r.coeff) + "*q^" + std::to_string(r.q) + "*x^(";
    for (std::size_t i = 0; i < r.content.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(r.content[i]);
    }
    out += ')';
  }
  return out;
}

QXPolynomial operator*(const QPolynomial& a, const QXPolynomial& b) {
  QXPolynomial out;
  for (const auto& [qa, ca] : a.terms) {
    for (const auto& [key, cb] : b.terms) out.add(qa + key.first, key.second, ca * cb);
  }
  return out;
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int c = 1; c <= p.front(); ++c) {
    int h = 0;
    for (int part : p) h += part >= c ? 1 : 0;
    out.push_back(h);
  }
  return out;
}

std::vector<Partition> partitions(int total, int max_part, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(total, max_part);
  return out;
}

namespace {

void require_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) {
      throw Error(ErrorCode::InvalidShape, "expected a partition with positive weakly decreasing parts");
    }
  }
}

ClassicalWeight padded(const Partition& lambda, int n) {
  ClassicalWeight w{std::vector<int>(n, 0)};
  for (std::size_t i = 0; i < lambda.size(); ++i) w.content[i] = lambda[i];
  return w;
}

QXPolynomial generating_function(const Partition& mu, const CartanType& ct, int jobs,
                                 std::uint64_t budget, int (*statistic)(const TensorElement&)) {
  const auto elems = all_elements(ct, column_heights(mu, ct), budget);
  return parallel_fold(
      elems, jobs, QXPolynomial{},
      [&](QXPolynomial& acc, const TensorElement& b) { acc.add(statistic(b), weight(b).content, 1); },
      [](QXPolynomial& out, const QXPolynomial& part) { out += part; });
}

int minus_energy(const TensorElement& b) { return -energy(b); }

}  // namespace

std::vector<int> column_heights(const Partition& mu, const CartanType& ct) {
  require_partition(mu);
  if (mu.empty()) throw Error(ErrorCode::InvalidShape, "empty partition");
  auto heights = conjugate(mu);
  if (heights.front() > ct.max_height()) {
    throw Error(ErrorCode::InvalidShape, "column of height " + std::to_string(heights.front()) +
                                             " does not exist in " + ct.name());
  }
  return heights;
}

TensorElement sort_via_rmatrix(const TensorElement& b) {
  const int before = energy(b);
  TensorElement x = b;
  auto& cols = x.factors();
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t t = 0; t + 1 < cols.size(); ++t) {
      if (cols[t].height() >= cols[t + 1].height()) continue;
      auto r = combinatorial_r(cols[t], cols[t + 1], x.cartan());
      cols[t] = std::move(r.left);
      cols[t + 1] = std::move(r.right);
      swapped = true;
    }
  }
  if (energy(x) != before) {
    throw Error(ErrorCode::ComponentCorrupt, "R-matrix changed the energy");
  }
  return x;
}

QXPolynomial macdonald_p_q0(const Partition& mu, const CartanType& ct, int jobs,
                            std::uint64_t budget) {
  return generating_function(mu, ct, jobs, budget, &charge);
}

QXPolynomial macdonald_p_q0_energy(const Partition& mu, const CartanType& ct, int jobs,
                                   std::uint64_t budget) {
  return generating_function(mu, ct, jobs, budget, &minus_energy);
}

QPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu, const CartanType& ct,
                           std::uint64_t budget) {
  if (ct.family != Family::A) {
    throw Error(ErrorCode::UnsupportedType, "Kostka–Foulkes polynomials are computed in type A");
  }
  require_partition(lambda);
  const int size_l = std::accumulate(lambda.begin(), lambda.end(), 0);
  const int size_m = std::accumulate(mu.begin(), mu.end(), 0);
  if (size_l != size_m) {
    throw Error(ErrorCode::WeightMismatch, "|λ| and |μ| differ");
  }
  QPolynomial out;
  if (static_cast<int>(lambda.size()) > ct.n) return out;
  const ClassicalWeight target = padded(lambda, ct.n);
  for_each_element(ct, column_heights(mu, ct), [&](const TensorElement& b) {
    if (is_classical_highest(b) && weight(b) == target) out.add(charge(b), 1);
  }, budget);
  return out;
}

QPolynomial one_dim_sum_X(const ClassicalWeight& lambda, const std::vector<int>& heights,
                          const CartanType& ct, std::uint64_t budget) {
  QPolynomial out;
  for_each_element(ct, heights, [&](const TensorElement& b) {
    if (is_classical_highest(b) && weight(b) == lambda) out.add(energy(b), 1);
  }, budget);
  return out;
}

QXPolynomial schur_polynomial(const Partition& lambda, int n) {
  const CartanType ct = CartanType::A(n);
  QXPolynomial out;
  require_partition(lambda);
  if (lambda.empty()) {
    out.add(0, std::vector<int>(n, 0), 1);
    return out;
  }
  if (static_cast<int>(lambda.size()) > n) return out;
  std::vector<Column> gens;
  for (int h : conjugate(lambda)) gens.push_back(generator_column(h));
  const TensorElement top(ct, std::move(gens));
  std::set<TensorElement> seen{top};
  std::vector<TensorElement> todo{top};
  while (!todo.empty()) {
    TensorElement x = std::move(todo.back());
    todo.pop_back();
    out.add(0, weight(x).content, 1);
    for (int i = 1; i < n; ++i) {
      if (auto y = f(i, x); y && seen.insert(*y).second) todo.push_back(std::move(*y));
    }
  }
  return out;
}

}  // namespace krc
