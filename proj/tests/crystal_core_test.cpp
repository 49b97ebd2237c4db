#include <set>

#include <gtest/gtest.h>

#include "krc/crystal.hpp"
#include "krc/error.hpp"
#include "test_util.hpp"

namespace krc {
namespace {

using testing::make;

Column col(std::initializer_list<int> v, const CartanType& ct) { return validate_column(v, ct); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::ParseError;
}

TEST(ValidateColumn, AcceptsHeightFiveExample) {
  const auto ct = CartanType::C(5);
  EXPECT_EQ(col({4, 5, -5, -4, -3}, ct).height(), 5);
}

TEST(ValidateColumn, RejectsAdjacentPairInC2) {
  const auto ct = CartanType::C(2);
  EXPECT_EQ(code_of([&] { col({1, -1}, ct); }), ErrorCode::AdmissibilityViolation);
}

TEST(ValidateColumn, TypeAIncreasingUnbarred) {
  EXPECT_EQ(col({1, 3, 5}, CartanType::A(6)).height(), 3);
}

TEST(ValidateColumn, ErrorPaths) {
  const auto a = CartanType::A(3);
  EXPECT_EQ(code_of([&] { col({2, 1}, a); }), ErrorCode::NotIncreasing);
  EXPECT_EQ(code_of([&] { col({1, -1}, a); }), ErrorCode::LetterOutOfRange);
  EXPECT_EQ(code_of([&] { col({1, 2, 3}, a); }), ErrorCode::InvalidShape);  // height n in A
  EXPECT_EQ(code_of([&] { col({4}, a); }), ErrorCode::LetterOutOfRange);
}

TEST(ValidateColumn, AdmissibilityTestsAgreeOnEveryCandidate) {
  for (int n = 2; n <= 5; ++n) {
    const auto ct = CartanType::C(n);
    const int m = 2 * n;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<Letter> letters;
      for (int r = 0; r < m; ++r) {
        if (mask & (1u << r)) letters.push_back(Letter::from_rank(r, n));
      }
      EXPECT_EQ(satisfies_kn_condition(letters, ct), is_splittable(letters, ct))
          << Column::unchecked(letters).str() << " in C" << n;
    }
  }
}

TEST(SplitColumn, HeightFiveExample) {
  const auto ct = CartanType::C(5);
  const auto s = split_column(col({4, 5, -5, -4, -3}, ct), ct);
  EXPECT_EQ(s.left, col({1, 2, -5, -4, -3}, ct));
  EXPECT_EQ(s.right, col({4, 5, -3, -2, -1}, ct));
}

TEST(SplitColumn, NoPairsIsIdentity) {
  const auto ct = CartanType::C(3);
  const auto c = col({1, 2, 3}, ct);
  EXPECT_EQ(split_column(c, ct), (SplitColumn{c, c}));
}

TEST(SplitColumn, SinglePairInC3) {
  const auto ct = CartanType::C(3);
  const auto s = split_column(col({2, -2}, ct), ct);
  EXPECT_EQ(s.left, col({1, -2}, ct));
  EXPECT_EQ(s.right, col({2, -1}, ct));
}

TEST(Operators, TypeAZeroArrows) {
  const auto ct = CartanType::A(3);
  EXPECT_EQ(f(0, make(ct, {{3}})), make(ct, {{1}}));
  EXPECT_FALSE(f(0, make(ct, {{1, 3}})).has_value());
  EXPECT_FALSE(f(1, make(ct, {{1, 2}})).has_value());
}

TEST(Operators, TypeCZeroArrows) {
  const auto ct = CartanType::C(3);
  EXPECT_EQ(e(0, make(ct, {{1, 2, 3}})), make(ct, {{2, 3, -1}}));
}

TEST(Operators, DemazureWordOnGroundState) {
  const auto ct = CartanType::C(3);
  auto b = make(ct, {{2}, {2, -2}, {-3, -2}, {1, 2, 3}});
  for (int i : {2, 1, 0}) b = *f(i, b);
  EXPECT_EQ(b, make(ct, {{3}, {1, 2}, {-3, -2}, {1, 2, 3}}));
}

TEST(EpsPhi, GeneratorOfC3) {
  const auto ct = CartanType::C(3);
  const auto b = make(ct, {{1, 2, 3}});
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(eps(i, b), 0);
  EXPECT_EQ(eps(0, b), 1);
  EXPECT_EQ(phi_weight(b), AffineWeight::fundamental(ct, 3));
}

TEST(EpsPhi, TwoUnpairedOnes) { EXPECT_EQ(phi(1, make(CartanType::A(3), {{1}, {1}})), 2); }

TEST(EpsPhi, MatchesIteration) {
  for (const auto& ct : {CartanType::A(4), CartanType::C(3)}) {
    for (const auto& b : all_elements(ct, {2, 1})) {
      for (int i = 0; i <= ct.top_index(); ++i) {
        int down = 0;
        for (auto x = f(i, b); x; x = f(i, *x)) ++down;
        int up = 0;
        for (auto x = e(i, b); x; x = e(i, *x)) ++up;
        EXPECT_EQ(eps_phi(i, b).phi, down);
        EXPECT_EQ(eps_phi(i, b).eps, up);
      }
    }
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(make(CartanType::C(3), {{1, 2, 3}})).content, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(weight(make(CartanType::C(3), {{2, -2}})).content, (std::vector<int>{0, 0, 0}));
}

TEST(Weight, MatchesLetterCount) {
  const auto ct = CartanType::C(5);
  const auto b = make(ct, {{-5, -3, -2, -1}, {3, -4, -3}, {1, 3, -3}});
  std::vector<int> counted(5, 0);
  for (const auto& c : b.factors()) {
    for (Letter l : c.letters()) counted[l.index() - 1] += l.barred() ? -1 : 1;
  }
  EXPECT_EQ(counted, (std::vector<int>{0, -1, -1, -1, -1}));
  EXPECT_EQ(weight(b).content, counted);
}

TEST(ColumnReading, ChosenReadingGivesOneClosedComponent) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& ct : {CartanType::A(n), CartanType::C(n)}) {
      for (int k = 1; k <= ct.max_height(); ++k) {
        const auto& cols = columns_of_height(ct, k);
        const std::set<Column> all(cols.begin(), cols.end());
        for (const auto& c : cols) {
          for (int i = 1; i <= ct.top_index(); ++i) {
            for (bool raise : {false, true}) {
              auto r = column_classical_raw(c, i, raise, kColumnReading, ct);
              if (r) EXPECT_TRUE(all.count(Column::unchecked(*r))) << c.str() << " i=" << i;
            }
          }
          const auto top = classical_highest(TensorElement(ct, {c})).highest;
          EXPECT_EQ(top.factors()[0], generator_column(k));
        }
      }
    }
  }
}

TEST(ColumnReading, OppositeReadingIsNotClosed) {
  const auto ct = CartanType::C(3);
  const auto& cols = columns_of_height(ct, 2);
  const std::set<Column> all(cols.begin(), cols.end());
  bool escaped = false;
  for (const auto& c : cols) {
    for (int i = 1; i <= 3; ++i) {
      auto r = column_classical_raw(c, i, false, ColumnReading::TopToBottom, ct);
      if (!r) continue;
      auto sorted = *r;
      if (!std::is_sorted(sorted.begin(), sorted.end()) || !all.count(Column::unchecked(sorted))) {
        escaped = true;
      }
    }
  }
  EXPECT_TRUE(escaped);
}

TEST(Invariants, EFInverseAndPairing) {
  for (const auto& [ct, heights] :
       std::vector<std::pair<CartanType, std::vector<int>>>{{CartanType::A(4), {3, 2, 1}},
                                                            {CartanType::C(2), {2, 1, 1}},
                                                            {CartanType::C(3), {3, 2}}}) {
    for (const auto& b : all_elements(ct, heights)) {
      const auto wt = weight(b);
      for (int i = 0; i <= ct.top_index(); ++i) {
        if (auto x = f(i, b)) EXPECT_EQ(e(i, *x), b);
        if (auto x = e(i, b)) EXPECT_EQ(f(i, *x), b);
        if (i > 0) {
          const auto ep = eps_phi(i, b);
          EXPECT_EQ(ep.phi - ep.eps, coroot_pairing(wt, i, ct));
        }
      }
    }
  }
}

TEST(Invariants, ZeroArrowRules) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& ct : {CartanType::A(n), CartanType::C(n)}) {
      for (int k = 1; k <= ct.max_height(); ++k) {
        for (const auto& c : columns_of_height(ct, k)) {
          const bool expected = ct.family == Family::A
                                    ? (c.contains(Letter{n}) && !c.contains(Letter{1}))
                                    : c.contains(Letter{-1});
          const auto down = column_f(c, 0, ct);
          EXPECT_EQ(down.has_value(), expected);
          if (down) {
            EXPECT_NO_THROW(column_index(ct, *down));
            EXPECT_EQ(column_e(*down, 0, ct), c);
          }
        }
      }
    }
  }
}

TEST(Lusztig, HighestToLowest) {
  const auto ct = CartanType::C(3);
  const auto high = make(ct, {{1, 2}});
  EXPECT_EQ(lusztig_involution(high), classical_lowest(high));
}

TEST(Lusztig, TypeASingleBoxes) {
  const auto ct = CartanType::A(3);
  EXPECT_EQ(lusztig_involution(make(ct, {{1}})), make(ct, {{3}}));
  EXPECT_EQ(lusztig_involution(make(ct, {{2}})), make(ct, {{2}}));
}

TEST(Lusztig, InvolutionAndEdgeReversal) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& ct : {CartanType::A(n), CartanType::C(n)}) {
      for (int k = 1; k <= ct.max_height(); ++k) {
        for (const auto& c : columns_of_height(ct, k)) {
          const TensorElement b(ct, {c});
          const auto s = lusztig_involution(b);
          EXPECT_EQ(lusztig_involution(s), b);
          for (int i = 1; i <= ct.top_index(); ++i) {
            if (auto x = f(i, b)) EXPECT_EQ(lusztig_involution(*x), e(ct.star(i), s));
          }
        }
      }
    }
  }
}

TEST(Lusztig, InvolutionOnTensorProducts) {
  const auto ct = CartanType::C(2);
  for (const auto& b : all_elements(ct, {2, 1})) {
    EXPECT_EQ(lusztig_involution(lusztig_involution(b)), b);
  }
}

TEST(CrystalGraph, SmallSizes) {
  const auto g = crystal_graph(CartanType::A(3), {1}, true);
  EXPECT_EQ(g.vertices.size(), 3u);
  const auto one = g.index_of(make(CartanType::A(3), {{1}}));
  const auto two = g.index_of(make(CartanType::A(3), {{2}}));
  const auto three = g.index_of(make(CartanType::A(3), {{3}}));
  EXPECT_EQ(g.edges, (std::vector<CrystalEdge>{{one, 1, two}, {two, 2, three}, {three, 0, one}}));
  EXPECT_EQ(crystal_graph(CartanType::C(2), {1}, false).vertices.size(), 4u);
  EXPECT_EQ(crystal_graph(CartanType::C(2), {2}, false).vertices.size(), 5u);
}

TEST(CrystalGraph, BudgetIsEnforced) {
  EXPECT_EQ(code_of([] { crystal_graph(CartanType::C(3), {3, 3, 3}, false, 1000); }),
            ErrorCode::ShapeTooLarge);
}

TEST(CrystalGraph, ClassicalComponentsHaveOneHighestElement) {
  const auto g = crystal_graph(CartanType::C(2), {2, 1}, false);
  std::size_t highest = 0;
  for (const auto& v : g.vertices) highest += is_classical_highest(v) ? 1 : 0;
  // B(ω2) ⊗ B(ω1) = B(ω1+ω2) ⊕ B(ω1) in C2
  EXPECT_EQ(highest, 2u);
  EXPECT_EQ(g.vertices.size(), 20u);
}

}  // namespace
}  // namespace krc
