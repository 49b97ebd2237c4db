// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "krc/bench.hpp"
#include "krc/charge.hpp"
#include "krc/energy.hpp"
#include "krc/error.hpp"
#include "krc/io.hpp"
#include "krc/kyoto.hpp"
#include "krc/qpoly.hpp"
#include "krc/verify.hpp"

using namespace krc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checks {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    out_.ok = false;
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += what;
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += ", ";
    notes_ += s;
  }
  Outcome result() const {
    Outcome o = out_;
    if (o.ok) o.detail = notes_;
    return o;
  }

 private:
  Outcome out_;
  std::string notes_;
};

std::vector<int> values(const std::vector<Letter>& ls) {
  std::vector<int> out;
  for (auto l : ls) out.push_back(l.value);
  return out;
}

Column col(std::initializer_list<int> v, const CartanType& ct) { return validate_column(v, ct); }

TensorElement type_a_example() { return parse_filling("A6; 3,5,6 | 2,3,4 | 1,2,4 | 2"); }
TensorElement type_c_example() { return parse_filling("C5; -5,-3,-2,-1 | 3,-4,-3 | 1,3,-3"); }

Outcome criterion1() {
  Checks c;
  const std::vector<int> word{1, 1, 3, 2, 2, 1, 4, 3, 2, 3};
  c.expect(ls_charge(word) == 6, "charge(1132214323) != 6");
  const auto b = type_a_example();
  c.expect(charge_word(b).lower_str() == "1132214323", "charge word differs");
  const auto f = circ_ord(b);
  c.expect(f.row_count() == 3 && values(f.row(0)) == std::vector<int>{3, 3, 4, 2} &&
               values(f.row(1)) == std::vector<int>{5, 2, 2} &&
               values(f.row(2)) == std::vector<int>{6, 4, 1},
           "circ-ord filling differs");
  c.expect(f.arm_sum() == 6, "arm sum " + std::to_string(f.arm_sum()));
  c.expect(charge(b) == 6, "charge " + std::to_string(charge(b)));
  c.expect(energy_DL(b) == -6, "D^L " + std::to_string(energy_DL(b)));
  c.note("charge 6, D^L -6");
  return c.result();
}

Outcome criterion2() {
  Checks c;
  const auto ct = CartanType::C(5);
  const auto b = type_c_example();
  const std::vector<std::pair<Column, Column>> halves = {
      {col({-5, -3, -2, -1}, ct), col({-5, -3, -2, -1}, ct)},
      {col({2, -4, -3}, ct), col({3, -4, -2}, ct)},
      {col({1, 2, -3}, ct), col({1, 3, -2}, ct)},
  };
  for (std::size_t t = 0; t < halves.size(); ++t) {
    const auto s = split_column(b.factors()[t], ct);
    c.expect(s.left == halves[t].first && s.right == halves[t].second,
             "split of column " + std::to_string(t + 1));
  }
  const auto f = circ_ord(b);
  c.expect(f.row_count() == 4 && values(f.row(0)) == std::vector<int>{-5, -5, -4, -4, -3, -2} &&
               values(f.row(1)) == std::vector<int>{-3, -3, -3, -2, 1, 1} &&
               values(f.row(2)) == std::vector<int>{-2, -2, 2, 3, 2, 3} &&
               values(f.row(3)) == std::vector<int>{-1, -1},
           "circ-ord filling differs");
  c.expect(f.descents == std::vector<Cell>{{1, 2}, {3, 1}, {3, 2}}, "descents differ");
  c.expect(charge_word(b).lower_str() == "1'13'2'1'1321'12'21'13'2'323'3", "charge word differs");
  c.expect(charge(b) == 4, "charge " + std::to_string(charge(b)));
  c.expect(charge_by_selection(b) == 4, "charge algorithm disagrees");
  c.expect(energy_DL(b) == -4, "D^L " + std::to_string(energy_DL(b)));
  c.note("charge 4, D^L -4");
  return c.result();
}

Outcome criterion3() {
  Checks c;
  const auto ct = CartanType::C(5);
  const auto s = split_column(col({4, 5, -5, -4, -3}, ct), ct);
  c.expect(s.left == col({1, 2, -5, -4, -3}, ct), "b^L = " + s.left.str());
  c.expect(s.right == col({4, 5, -3, -2, -1}, ct), "b^R = " + s.right.str());
  c.note("b^L " + s.left.str() + ", b^R " + s.right.str());
  return c.result();
}

Outcome criterion4() {
  Checks c;
  const auto ct = CartanType::C(3);
  const auto gs = ground_states(ct, {1, 2, 2, 3});
  const std::vector<std::string> expected = {
      "C3; -3 | 2,3 | -3,-2 | 1,2,3",
      "C3; 2 | 2,-2 | -3,-2 | 1,2,3",
      "C3; -1 | 2,-2 | -3,-2 | 1,2,3",
  };
  const std::vector<int> weights = {2, 2, 0};
  c.expect(gs.size() == 3, std::to_string(gs.size()) + " ground states");
  for (std::size_t t = 0; t < std::min(gs.size(), expected.size()); ++t) {
    c.expect(serialize_filling(gs[t].element) == expected[t], "state " + std::to_string(t + 1));
    c.expect(gs[t].weight == weights[t], "weight of state " + std::to_string(t + 1));
  }
  c.note("weights L2,L2,L0");
  return c.result();
}

Outcome criterion5() {
  Checks c;
  const auto ct = CartanType::C(3);
  const auto gs = ground_states(ct, {1, 2, 2, 3});
  const GroundState& g = gs.at(1);
  const auto w = demazure_walk(g);
  const std::vector<std::string> words = {"f_0 f_1 f_2", "f_0^2 f_1^3 f_2^2 f_3",
                                          "f_0^2 f_1^4 f_2^3 f_3"};
  c.expect(w.steps.size() == 3, std::to_string(w.steps.size()) + " steps");
  for (std::size_t j = 0; j < std::min(w.steps.size(), words.size()); ++j) {
    c.expect(word_str(w.steps[j].word) == words[j], "F_" + std::to_string(j) + " = " + word_str(w.steps[j].word));
  }
  const auto final_text = serialize_filling(w.final_element);
  c.expect(final_text == "C3; 2 | 1,3 | 1,2 | 1,2,3", "final " + final_text);
  c.expect(cut_construction(g) == w.final_element, "cut construction differs");
  c.note("final " + final_text);
  return c.result();
}

Outcome criterion6() {
  Checks c;
  const auto ct = CartanType::C(3);
  const auto r = combinatorial_r(col({2, 3}, ct), col({1}, ct), ct);
  c.expect(r.left == col({3}, ct) && r.right == col({1, 2}, ct),
           "sigma = " + r.left.str() + " | " + r.right.str());
  const int h = local_energy(col({2, 3}, ct), col({1}, ct), ct);
  c.expect(h == -1, "H = " + std::to_string(h));
  c.note("sigma (3)x(1,2), H -1");
  return c.result();
}

struct Shape {
  CartanType ct;
  Partition mu;
};

std::vector<Shape> exhaustive_shapes() {
  std::vector<Shape> out;
  for (int n = 2; n <= 4; ++n) {
    const auto ct = CartanType::A(n);
    for (int size = 1; size <= 8; ++size) {
      for (const auto& mu : partitions(size, 3, ct.max_height())) out.push_back({ct, mu});
    }
  }
  for (int n = 2; n <= 3; ++n) {
    const auto ct = CartanType::C(n);
    for (int size = 1; size <= 6; ++size) {
      for (const auto& mu : partitions(size, 2, ct.max_height())) out.push_back({ct, mu});
    }
  }
  return out;
}

std::string mu_str(const Partition& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s;
}

Outcome run_shapes(bool properties) {
  Checks c;
  std::uint64_t elements = 0;
  std::size_t shapes = 0;
  VerifyOptions opts;
  opts.properties = properties;
  opts.jobs = 0;
  for (const auto& s : exhaustive_shapes()) {
    const auto r = run_verify(s.ct, column_heights(s.mu, s.ct), opts);
    elements += r.element_count;
    ++shapes;
    if (!properties) {
      c.expect(r.max_discrepancy == 0, s.ct.name() + " mu=" + mu_str(s.mu) + " discrepancy " +
                                           std::to_string(r.max_discrepancy));
    }
    for (const auto& p : r.properties) {
      c.expect(p.passed(), s.ct.name() + " mu=" + mu_str(s.mu) + " " + p.name + " fails at " +
                               p.first_failure);
    }
  }
  c.note(std::to_string(shapes) + " shapes, " + std::to_string(elements) + " elements");
  return c.result();
}

Outcome criterion7() { return run_shapes(false); }
Outcome criterion8() { return run_shapes(true); }

Outcome criterion9() {
  Checks c;
  QPolynomial one, q;
  one.add(0, 1);
  q.add(1, 1);
  auto expected = one * schur_polynomial({2}, 2);
  expected += q * schur_polynomial({1, 1}, 2);
  c.expect(macdonald_p_q0({2}, CartanType::A(2)) == expected, "P_(2) != s_2 + q s_11");

  int reconstructions = 0, sums = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto ct = CartanType::A(n);
    for (int size = 1; size <= 6; ++size) {
      for (const auto& mu : partitions(size, size, ct.max_height())) {
        const auto heights = column_heights(mu, ct);
        QXPolynomial sum;
        for (const auto& lambda : partitions(size, size, n)) {
          const auto k = kostka_foulkes(lambda, mu, ct);
          sum += k * schur_polynomial(lambda, n);
          ClassicalWeight w{std::vector<int>(n, 0)};
          for (std::size_t i = 0; i < lambda.size(); ++i) w.content[i] = lambda[i];
          c.expect(one_dim_sum_X(w, heights, ct) == k.inverted(),
                   "X != K(1/q) for " + ct.name() + " mu=" + mu_str(mu) + " lambda=" + mu_str(lambda));
          ++sums;
        }
        c.expect(sum == macdonald_p_q0(mu, ct),
                 "Schur expansion differs for " + ct.name() + " mu=" + mu_str(mu));
        ++reconstructions;
      }
    }
  }
  c.note(std::to_string(reconstructions) + " expansions, " + std::to_string(sums) + " one-dim sums");
  return c.result();
}

Outcome criterion10() {
  Checks c;
  BenchOptions opts;
  opts.samples = 10'000;
  const auto r = run_bench(CartanType::C(3), {2, 2, 1, 1}, opts);
  c.expect(r.mismatches == 0, std::to_string(r.mismatches) + " elements with D != -charge");
  c.expect(r.charge_ns > 0 && r.energy_warm_ns > 0 && r.energy_cold_ns > 0, "missing timings");
  c.expect(std::isfinite(r.speedup_warm()) && std::isfinite(r.speedup_cold()), "speedup not finite");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "charge %.0f ns, energy cold %.0f ns / warm %.0f ns, speedup cold %.2f / warm %.2f",
                r.charge_ns, r.energy_cold_ns, r.energy_warm_ns, r.speedup_cold(), r.speedup_warm());
  c.note(buf);
  return c.result();
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "type A worked example", 1, criterion1},
      {2, "type C worked example", 1, criterion2},
      {3, "split column example", 1, criterion3},
      {4, "ground states", 1, criterion4},
      {5, "Demazure walk and cut", 1, criterion5},
      {6, "R-matrix and local energy", 1, criterion6},
      {7, "D = -charge exhaustive", 300, criterion7},
      {8, "property suites", 300, criterion8},
      {9, "polynomial identities", 300, criterion9},
      {10, "charge vs energy benchmark", 120, criterion10},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = crit.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (took.count() > crit.limit_s) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "runtime %.2f s over the %.0f s limit", took.count(), crit.limit_s);
      o.detail = o.ok ? buf : o.detail + "; " + buf;
      o.ok = false;
    }
    std::printf("%s %d %s (%.3f s): %s\n", o.ok ? "PASS" : "FAIL", crit.id, crit.title, took.count(),
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
