#include <gtest/gtest.h>

#include <stdexcept>

#include "gw/fock.hpp"
#include "gw/ghosts.hpp"
#include "gw/vertex.hpp"
#include "builders.hpp"

namespace gw {
namespace {

using namespace gw::testing;

const Scalar kLambdas[] = {Scalar(-1), Scalar(0), Scalar(1, 2), Scalar(1), Scalar(2), Scalar(3), Scalar(-2, 3)};

TEST(Ghosts, CentralCharges) {
  for (const Scalar& l : kLambdas) {
    const Scalar expected = 12 * l * l - 12 * l + 2;
    const auto s = virasoro_s(l);
    EXPECT_EQ(s.claimed_central_charge, expected);
    const auto check = check_virasoro(s.state);
    EXPECT_TRUE(check.ok) << check.failure;
    EXPECT_EQ(check.central_charge, expected);
    EXPECT_EQ(central_charge(s.state), expected);

    const auto e = virasoro_e(l);
    EXPECT_EQ(e.claimed_central_charge, -expected);
    EXPECT_EQ(central_charge(e.state), -expected);
  }
  EXPECT_EQ(central_charge(virasoro_s(2).state), 26);
  EXPECT_EQ(central_charge(virasoro_e(2).state), -26);
}

TEST(Ghosts, ExplicitForm) {
  // lambda = 1/2: (-1/2) :d(beta) gamma: + (1/2) :beta d(gamma):
  const State expected = st({md(BETA, -2), md(GAMMA, -1)}, Scalar(-1, 2)) + st({md(BETA, -1), md(GAMMA, -2)}, Scalar(1, 2));
  EXPECT_EQ(virasoro_s(Scalar(1, 2)).state, expected);
  EXPECT_EQ(virasoro_e(1).state, -st({md(B, -1), md(C, -2)}));
}

TEST(Ghosts, NonVirasoroRejected) {
  const auto bad = check_virasoro(generator(BETA));
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.failure.empty());
  EXPECT_THROW(central_charge(Scalar(2) * virasoro_s(1).state), std::invalid_argument);
  EXPECT_FALSE(check_virasoro(virasoro_s(2).state + virasoro_s(1).state).ok);
}

TEST(Ghosts, TotalVirasoro) {
  const GradingScheme s{2, 2, 1};
  const State t = total_virasoro(s);
  EXPECT_EQ(t, virasoro_e(2).state + virasoro_s(2).state);
  EXPECT_EQ(central_charge(t), 0);
  EXPECT_THROW(total_virasoro(GradingScheme{2, 2, 2}), std::invalid_argument);
}

// [L_m, L_n] = (m - n) L_{m+n} + k/12 (m^3 - m) delta_{m+n,0}, with L_m = L(m+1).
TEST(Ghosts, VirasoroModeAlgebra) {
  for (const Scalar& lambda : {Scalar(2), Scalar(1, 2), Scalar(-1)}) {
    const State l = virasoro_s(lambda).state;
    const Scalar k = central_charge(l);
    const State s = st({md(BETA, -1), md(GAMMA, -2)}) + st({md(GAMMA, -1), md(GAMMA, -1)}, 3) + State::vacuum();
    for (int m = -2; m <= 2; ++m) {
      for (int n = -2; n <= 2; ++n) {
        const State lhs = field_mode_apply(l, m + 1, field_mode_apply(l, n + 1, s)) -
                          field_mode_apply(l, n + 1, field_mode_apply(l, m + 1, s));
        State rhs = Scalar(m - n) * field_mode_apply(l, m + n + 1, s);
        if (m + n == 0) rhs += (k / 12) * Scalar(m * m * m - m) * s;
        EXPECT_EQ(lhs, rhs) << "lambda " << to_string(lambda) << " m " << m << " n " << n;
      }
    }
  }
}

TEST(Ghosts, GhostCurrents) {
  const State jb = ghost_current_b();
  const State jf = ghost_current_f();
  EXPECT_EQ(jb, st({md(BETA, -1), md(GAMMA, -1)}));
  EXPECT_EQ(jf, -st({md(B, -1), md(C, -1)}));
  const State gamma = generator(GAMMA);
  EXPECT_EQ(field_mode_apply(jb, 0, gamma), gamma);
  EXPECT_EQ(field_mode_apply(jb, 0, generator(BETA)), -generator(BETA));
  EXPECT_EQ(field_mode_apply(jf, 0, generator(C)), generator(C));
  EXPECT_EQ(field_mode_apply(jf, 0, generator(B)), -generator(B));
  EXPECT_EQ(ghost_current_b(2), st({md(BETA, -1, 0), md(GAMMA, -1, 0)}) + st({md(BETA, -1, 1), md(GAMMA, -1, 1)}));
}

}  // namespace
}  // namespace gw
