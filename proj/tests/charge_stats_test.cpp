#include <gtest/gtest.h>

#include "krc/charge.hpp"
#include "krc/energy.hpp"
#include "krc/error.hpp"
#include "test_util.hpp"

using namespace krc;
using krc::testing::make;

namespace {

std::vector<int> digits(const std::string& s) {
  std::vector<int> out;
  for (char ch : s) out.push_back(ch - '0');
  return out;
}

std::vector<int> letters(const std::vector<Letter>& row) {
  std::vector<int> out;
  for (Letter l : row) out.push_back(l.value);
  return out;
}

TensorElement type_a_example() { return make(CartanType::A(6), {{3, 5, 6}, {2, 3, 4}, {1, 2, 4}, {2}}); }

TensorElement type_c_example() {
  return make(CartanType::C(5), {{-5, -3, -2, -1}, {3, -4, -3}, {1, 3, -3}});
}

struct Shape {
  CartanType ct;
  std::vector<int> heights;
};

std::vector<Shape> small_shapes() {
  return {{CartanType::A(3), {2, 1, 1}}, {CartanType::A(3), {2, 2}},
          {CartanType::A(4), {3, 2, 1}}, {CartanType::A(4), {1, 1, 1, 1}},
          {CartanType::C(2), {2, 1, 1}}, {CartanType::C(2), {2, 2}},
          {CartanType::C(2), {1, 1, 1}}, {CartanType::C(3), {2, 1}},
          {CartanType::C(3), {3, 1}},    {CartanType::C(3), {2, 2}},
          {CartanType::C(3), {1, 1, 1}}};
}

}  // namespace

TEST(LsCharge, Examples) {
  EXPECT_EQ(ls_charge(digits("1132214323")), 6);
  EXPECT_EQ(ls_charge(digits("321")), 0);
  EXPECT_EQ(ls_charge(digits("123")), 3);
  EXPECT_EQ(ls_charge(digits("")), 0);
  EXPECT_EQ(ls_charge(digits("2121")), 0);
  EXPECT_EQ(ls_charge(digits("1212")), 1);
}

TEST(LsCharge, RejectsNonPartitionContent) {
  try {
    ls_charge(digits("122"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPartitionContent);
  }
  EXPECT_THROW(ls_charge(digits("2")), Error);
  EXPECT_THROW(primed_charge(std::vector<int>{1, 1, 2}), Error);
}

TEST(ChargeWord, TypeAExample) {
  const auto w = charge_word(type_a_example());
  EXPECT_EQ(w.lower_str(), "1132214323");
  std::vector<int> top;
  for (const auto& b : w.biletters) top.push_back(b.k.value);
  EXPECT_EQ(top, (std::vector<int>{6, 5, 4, 4, 3, 3, 2, 2, 2, 1}));
}

TEST(ChargeWord, SingleColumn) {
  const auto ct = CartanType::A(5);
  EXPECT_EQ(charge_word(TensorElement(ct, {generator_column(4)})).lower_str(), "1111");
}

TEST(ChargeWord, TypeCExample) {
  const auto w = charge_word(type_c_example());
  EXPECT_EQ(w.lower_str(), "1'13'2'1'1321'12'21'13'2'323'3");
  std::vector<int> top;
  for (const auto& b : w.biletters) top.push_back(b.k.value);
  EXPECT_EQ(top, (std::vector<int>{-1, -1, -2, -2, -2, -2, -3, -3, -3, -3, -4, -4, -5, -5, 3, 3,
                                   2, 2, 1, 1}));
}

TEST(ChargeWord, RejectsIncreasingHeights) {
  const auto b = make(CartanType::A(4), {{1}, {1, 2}});
  try {
    charge_word(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HeightsNotSorted);
  }
  EXPECT_THROW(charge(b), Error);
}

TEST(CircOrd, TypeAExample) {
  const auto c = circ_ord(type_a_example());
  ASSERT_EQ(c.row_count(), 3);
  EXPECT_EQ(letters(c.row(0)), (std::vector<int>{3, 3, 4, 2}));
  EXPECT_EQ(letters(c.row(1)), (std::vector<int>{5, 2, 2}));
  EXPECT_EQ(letters(c.row(2)), (std::vector<int>{6, 4, 1}));
  EXPECT_EQ(c.descents, (std::vector<Cell>{{0, 1}, {0, 2}, {1, 2}, {2, 0}}));
  std::vector<int> arms;
  for (const auto& d : c.descents) arms.push_back(c.arm(d));
  EXPECT_EQ(arms, (std::vector<int>{2, 2, 1, 1}));
}

TEST(CircOrd, TypeCExample) {
  const auto c = circ_ord(type_c_example());
  ASSERT_EQ(c.row_count(), 4);
  EXPECT_EQ(letters(c.row(0)), (std::vector<int>{-5, -5, -4, -4, -3, -2}));
  EXPECT_EQ(letters(c.row(1)), (std::vector<int>{-3, -3, -3, -2, 1, 1}));
  EXPECT_EQ(letters(c.row(2)), (std::vector<int>{-2, -2, 2, 3, 2, 3}));
  EXPECT_EQ(letters(c.row(3)), (std::vector<int>{-1, -1}));
  EXPECT_EQ(c.descents, (std::vector<Cell>{{1, 2}, {3, 1}, {3, 2}}));
  EXPECT_EQ(c.arm_sum(), 8);
}

TEST(CircOrd, GeneratorsHaveNoDescents) {
  for (const auto& ct : {CartanType::A(4), CartanType::C(3)}) {
    const TensorElement b(ct, {generator_column(3), generator_column(3), generator_column(1)});
    const auto c = circ_ord(b);
    EXPECT_TRUE(c.descents.empty());
    EXPECT_EQ(charge(b), 0);
    EXPECT_EQ(charge_by_selection(b), 0);
  }
  const auto ct = CartanType::A(4);
  const auto c = circ_ord(TensorElement(ct, {generator_column(2), generator_column(2)}));
  EXPECT_EQ(c.columns[0], c.columns[1]);
}

TEST(Charge, WorkedExamples) {
  EXPECT_EQ(charge(type_a_example()), 6);
  EXPECT_EQ(charge_by_selection(type_a_example()), 6);
  EXPECT_EQ(charge(type_c_example()), 4);
  EXPECT_EQ(charge_by_selection(type_c_example()), 4);
}

TEST(Charge, TypeCTwoBoxes) {
  // Split columns 1̄ 1̄ 1 1: one descent 1̄ > 1 with arm 2. cw_2 = 1'12'2 wraps
  // once from 1' to 2 with k = 2.
  const auto b = make(CartanType::C(2), {{-1}, {1}});
  EXPECT_EQ(charge_word(b).lower_str(), "1'12'2");
  EXPECT_EQ(charge(b), 1);
  EXPECT_EQ(charge_by_selection(b), 1);
}

TEST(ChargeProperties, ImplementationsAgree) {
  for (const auto& s : small_shapes()) {
    for_each_element(s.ct, s.heights, [&](const TensorElement& b) {
      const int c = charge(b);
      EXPECT_EQ(c, charge_by_selection(b)) << s.ct.name();
      const int arms = circ_ord(b).arm_sum();
      EXPECT_EQ(c, s.ct.family == Family::A ? arms : arms / 2) << s.ct.name();
      EXPECT_GE(c, 0);
      EXPECT_EQ(c == 0, circ_ord(b).descents.empty());
    });
  }
}

TEST(ChargeProperties, ClassicalInvariance) {
  for (const auto& s : small_shapes()) {
    for_each_element(s.ct, s.heights, [&](const TensorElement& b) {
      const int c = charge(b);
      for (int i = 1; i <= s.ct.top_index(); ++i) {
        if (auto y = f(i, b)) EXPECT_EQ(charge(*y), c) << s.ct.name() << " f_" << i;
      }
    });
  }
}

TEST(ChargeProperties, ZeroArrowLowersCharge) {
  for (const auto& s : small_shapes()) {
    for_each_element(s.ct, s.heights, [&](const TensorElement& b) {
      const auto ep = eps_phi(0, b);
      if (ep.phi < 1 || ep.eps < 1) return;
      EXPECT_EQ(charge(*e(0, b)), charge(b) - 1) << s.ct.name();
    });
  }
}

TEST(ChargeProperties, EqualsMinusEnergy) {
  for (const auto& s : small_shapes()) {
    for_each_element(s.ct, s.heights, [&](const TensorElement& b) {
      EXPECT_EQ(charge(b), -energy(b)) << s.ct.name();
    });
  }
}
