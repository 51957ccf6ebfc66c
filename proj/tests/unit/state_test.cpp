#include <gtest/gtest.h>

#include "gw/state.hpp"
#include "builders.hpp"

namespace gw {
namespace {

using namespace gw::testing;

TEST(State, ZeroCoefficientsAreDropped) {
  State s = st({md(BETA, -1)}, 2) + st({md(GAMMA, -1)});
  s -= st({md(BETA, -1)}, 2);
  EXPECT_EQ(s, st({md(GAMMA, -1)}));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(s.coefficient(mono({md(BETA, -1)})), 0);
}

TEST(State, ScalingAndNegation) {
  const State s = st({md(B, -1), md(C, -1)}) + st({md(GAMMA, -2)}, Scalar(3, 2));
  EXPECT_EQ(-s + s, State{});
  EXPECT_EQ(Scalar(2) * s, s + s);
  EXPECT_TRUE((Scalar(0) * s).is_zero());
  State t = s;
  t.add_scaled(s, -1);
  EXPECT_TRUE(t.is_zero());
}

TEST(State, Parts) {
  const State odd = st({md(C, -1)});
  const State even = st({md(BETA, -1), md(GAMMA, -2)});
  const State s = odd + even + State::vacuum();
  EXPECT_EQ(s.odd_part(), odd);
  EXPECT_EQ(s.even_part(), even + State::vacuum());
  EXPECT_EQ(s.derivative_free_part(), odd + State::vacuum());
  EXPECT_EQ(s.doubled_level(), 1 + 3);
  EXPECT_EQ(s.annihilator_bound(), 2);
}

TEST(State, ToString) {
  EXPECT_EQ(to_string(State{}), "0");
  EXPECT_EQ(to_string(State::vacuum()), "1");
  EXPECT_EQ(to_string(st({md(C, -1), md(B, -1)})), "-b(-1)*c(-1)");
  EXPECT_EQ(to_string(st({md(GAMMA, -2)}, Scalar(3, 2)) - st({md(B, -1), md(C, -1), md(GAMMA, -1)})),
            "-b(-1)*c(-1)*gamma(-1) + 3/2*gamma(-2)");
  EXPECT_EQ(to_string(State::vacuum() * Scalar(-5, 3)), "-5/3");
}

}  // namespace
}  // namespace gw
