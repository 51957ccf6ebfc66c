#include <gtest/gtest.h>

#include <stdexcept>

#include "gw/brst.hpp"
#include "gw/fock.hpp"
#include "gw/ghosts.hpp"
#include "gw/vertex.hpp"
#include "builders.hpp"

namespace gw {
namespace {

using namespace gw::testing;

const WeilComplex& complex2() {
  static const WeilComplex w(brst_context(2));
  return w;
}

TEST(Brst, Context) {
  const BrstContext ctx = brst_context(2);
  EXPECT_EQ(ctx.central_charge, 26);
  const State c = generator(C);
  const State expected = wick(virasoro_s(2).state + Scalar(1, 2) * virasoro_e(2).state, c) +
                         Scalar(3, 4) * derive(c, 2);
  EXPECT_EQ(ctx.current, expected);
  EXPECT_EQ(ctx.total_virasoro, total_virasoro(ctx.scheme()));
  EXPECT_EQ(brst_context(Scalar(1, 2)).central_charge, -1);
}

// J o_0 J = J0 o_0 J0 + (3/4) d^2(Q c), J0 = :(LS + LE/2) c:, since d^2 c has no zero mode.
TEST(Brst, AnomalyDecomposition) {
  for (const Scalar& lambda : {Scalar(2), Scalar(-1), Scalar(0), Scalar(1), Scalar(1, 2), Scalar(3)}) {
    const BrstContext ctx = brst_context(lambda);
    const auto d = q_square_obstruction(ctx);
    EXPECT_EQ(d.obstruction, circle(ctx.current, 0, ctx.current));
    const State j0 = wick(virasoro_s(lambda).state + Scalar(1, 2) * virasoro_e(2).state, generator(C));
    EXPECT_EQ(d.obstruction, circle(j0, 0, j0) + Scalar(3, 4) * derive(q_apply(ctx, generator(C)), 2));
    EXPECT_TRUE(d.decomposes);
    EXPECT_EQ(d.residue_coeff, (ctx.central_charge - 26) / 12);
    const State dc = generator(C);
    const State d3c_c = wick(derive(dc, 3), dc);
    EXPECT_EQ(d.obstruction, d.derivative_coeff * derive(wick(derive(dc, 2), dc)) + d.residue_coeff * d3c_c);
  }
}

TEST(Brst, QSquaresToZeroOnlyAtCriticalLambda) {
  for (const Scalar& lambda : {Scalar(2), Scalar(-1)}) {
    const BrstContext ctx = brst_context(lambda);
    for (auto [bc, bg] : {std::pair{-1, 1}, {0, 1}, {0, 2}, {-1, 2}, {1, 1}}) {
      for (const auto& m : enumerate_basis(0, bc, bg, ctx.scheme())) {
        EXPECT_TRUE(q_apply(ctx, q_apply(ctx, State(m))).is_zero()) << to_string(m);
      }
    }
  }
  // Away from it Q^2 = (residue / 2) (:d^3c c:)(0) acts nontrivially.
  const BrstContext ctx = brst_context(0);
  const State s = st({md(B, -1), md(B, -2)});
  EXPECT_FALSE(q_apply(ctx, q_apply(ctx, s)).is_zero());
  const State d3c_c = wick(derive(generator(C), 3), generator(C));
  EXPECT_EQ(q_apply(ctx, q_apply(ctx, s)), (q_square_obstruction(ctx).residue_coeff / 2) * field_mode_apply(d3c_c, 0, s));
}

// A primary field phi of weight h has Q phi = c d(phi) + h d(c) phi.
TEST(Brst, QOnGenerators) {
  for (const Scalar& lambda : {Scalar(2), Scalar(-1), Scalar(1, 2)}) {
    const BrstContext ctx = brst_context(lambda);
    const State c = generator(C);
    const State dc = derive(c);
    EXPECT_EQ(q_apply(ctx, c), wick(c, dc));
    for (GenKind k : {BETA, GAMMA}) {
      const State phi = generator(k);
      const Scalar h = ctx.scheme().generator_weight(k);
      EXPECT_EQ(q_apply(ctx, phi), wick(c, derive(phi)) + h * wick(dc, phi)) << to_string(lambda);
    }
    EXPECT_EQ(q_apply(ctx, generator(B)), ctx.total_virasoro);
    EXPECT_TRUE(q_apply(ctx, State::vacuum()).is_zero());
  }
}

TEST(Brst, ClassesAreCocycles) {
  const BrstContext ctx = brst_context(2);
  EXPECT_EQ(class_x(), st({md(BETA, -1), md(GAMMA, -1), md(GAMMA, -1)}) - st({md(B, -1), md(C, -1), md(GAMMA, -1)}) +
                           st({md(GAMMA, -2)}, Scalar(3, 2)));
  EXPECT_EQ(class_y(), st({md(C, -1), md(BETA, -1), md(GAMMA, -1)}) + st({md(C, -2)}, Scalar(3, 2)));
  for (int k = 0; k <= 3; ++k) {
    EXPECT_TRUE(q_apply(ctx, power_rep(k)).is_zero()) << k;
    EXPECT_TRUE(q_apply(ctx, odd_power_rep(k)).is_zero()) << k;
    EXPECT_FALSE(complex2().is_coboundary(power_rep(k)).is_coboundary);
    EXPECT_FALSE(complex2().is_coboundary(odd_power_rep(k)).is_coboundary);
  }
  EXPECT_EQ(power_rep(0), State::vacuum());
  EXPECT_EQ(power_rep(1), class_x());
  EXPECT_EQ(odd_power_rep(0), class_y());
  EXPECT_EQ(power_rep(2), wick(class_x(), class_x()));
}

TEST(Brst, Bidegrees) {
  const BrstContext ctx = brst_context(2);
  EXPECT_EQ(weight_zero_bidegree(ctx, class_x()), (std::pair{0, 1}));
  EXPECT_EQ(weight_zero_bidegree(ctx, odd_power_rep(2)), (std::pair{1, 2}));
  EXPECT_FALSE(weight_zero_bidegree(ctx, State{}));
  EXPECT_THROW(weight_zero_bidegree(ctx, generator(B)), std::invalid_argument);
  EXPECT_THROW(weight_zero_bidegree(ctx, class_x() + class_y()), std::invalid_argument);
  EXPECT_EQ(bc_degree(class_y()), 1);
  EXPECT_FALSE(bc_degree(State{}));
}

TEST(Brst, CoboundaryWitness) {
  const BrstContext ctx = brst_context(2);
  for (auto [bc, bg] : {std::pair{-1, 1}, {-1, 2}, {0, 2}}) {
    for (const auto& m : enumerate_basis(0, bc, bg, ctx.scheme())) {
      const State image = q_apply(ctx, State(m));
      if (image.is_zero()) continue;
      EXPECT_TRUE(in_derivative_subspace(image));
      const auto r = complex2().is_coboundary(image);
      ASSERT_TRUE(r.is_coboundary);
      ASSERT_TRUE(r.witness);
      EXPECT_EQ(q_apply(ctx, *r.witness), image);
      // Adding an exact term does not change the class.
      const State rep = bc == -1 ? power_rep(bg) : odd_power_rep(bg);
      EXPECT_TRUE(complex2().cohomology_equal(rep + image, rep));
      EXPECT_EQ(complex2().class_ratio(rep + image, rep), Scalar(1));
    }
  }
  EXPECT_THROW(complex2().is_coboundary(generator(B)), std::invalid_argument);
  EXPECT_THROW(complex2().is_coboundary(st({md(C, -1), md(GAMMA, -1)})), std::invalid_argument);
}

TEST(Brst, CohomologyTableSmallWindow) {
  const auto table = complex2().cohomology_table(-2, 3, 3);
  for (int i = -2; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      const auto& e = table.at({i, j});
      EXPECT_EQ(e.dim, i == 0 || i == 1 ? 1 : 0) << i << "," << j;
      EXPECT_EQ(e.representative.has_value(), e.dim == 1);
    }
  }
  // Canonical representatives are cohomologous to the power representatives.
  for (int j = 0; j <= 3; ++j) {
    EXPECT_EQ(complex2().class_ratio(*table.at({0, j}).representative, power_rep(j)), Scalar(1));
    EXPECT_EQ(complex2().class_ratio(*table.at({1, j}).representative, odd_power_rep(j)), Scalar(1));
  }
}

TEST(Brst, RanksAgree) {
  for (auto [bc, bg] : {std::pair{-1, 2}, {0, 3}, {1, 3}, {-1, 4}, {0, 4}}) {
    const auto r = complex2().rank_check(bc, bg);
    EXPECT_EQ(r.echelon, r.bareiss) << bc << "," << bg;
    EXPECT_EQ(r.echelon, r.modular) << bc << "," << bg;
  }
}

TEST(Brst, ClassRatios) {
  const State x = class_x();
  const State y = class_y();
  EXPECT_EQ(complex2().class_ratio(Scalar(3) * x, x), Scalar(3));
  EXPECT_EQ(complex2().class_ratio(lz_bracket(y, x), x), Scalar(-1));
  EXPECT_EQ(complex2().class_ratio(lz_bracket(y, y), y), Scalar(0));
  EXPECT_TRUE(lz_bracket(x, x).is_zero() || complex2().class_ratio(lz_bracket(x, x), power_rep(2)) == Scalar(0));
  EXPECT_THROW(lz_bracket(x + y, x), std::invalid_argument);
}

// The derivative-free shortcut reproduces the exact echelon class ratios.
TEST(Brst, ProjectedRatiosMatchExact) {
  const WeilComplex& w = complex2();
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      const State bracket = lz_bracket(odd_power_rep(n), power_rep(m));
      EXPECT_EQ(lz_bracket_free_part(odd_power_rep(n), power_rep(m)), bracket.derivative_free_part());
      EXPECT_EQ(w.projected_class_ratio(bracket.derivative_free_part(), 0, n + m),
                w.class_ratio(bracket, power_rep(n + m)));

      const State odd = lz_bracket(odd_power_rep(n), odd_power_rep(m));
      EXPECT_EQ(w.projected_class_ratio(odd.derivative_free_part(), 1, n + m),
                w.class_ratio(odd, odd_power_rep(n + m)));

      const State product = wick(odd_power_rep(n), power_rep(m));
      EXPECT_EQ(wick_free_part(odd_power_rep(n), power_rep(m)), product.derivative_free_part());
      EXPECT_EQ(w.projected_class_ratio(product.derivative_free_part(), 1, n + m),
                w.class_ratio(product, odd_power_rep(n + m)));
    }
  }
  EXPECT_EQ(w.projected_class_ratio(State{}, 2, 1), Scalar(0));
  EXPECT_FALSE(w.projected_class_ratio(st({md(B, -1), md(C, -1), md(GAMMA, -1)}), 0, 1));
}

TEST(Brst, ProjectionCertificate) {
  const auto& cert = complex2().projection_certificate(0, 3);
  EXPECT_EQ(cert.dim_bound, 1);
  ASSERT_TRUE(cert.reference);
  EXPECT_EQ(*cert.reference, power_rep(3));
  EXPECT_EQ(cert.reference_free_part, power_rep(3).derivative_free_part());
  EXPECT_EQ(complex2().projection_certificate(2, 2).dim_bound, 0);
  EXPECT_EQ(complex2().projection_certificate(-1, 2).dim_bound, 0);
}

TEST(Brst, Coordinates) {
  const std::vector<Monomial> basis{mono({md(B, -1)}), mono({md(C, -1)})};
  const State s = st({md(C, -1)}, 4) - st({md(B, -1)});
  EXPECT_EQ(coordinates(s, basis), (SparseVector{{0, -1}, {1, 4}}));
  EXPECT_EQ(from_coordinates(coordinates(s, basis), basis), s);
  EXPECT_THROW(coordinates(generator(GAMMA), basis), std::invalid_argument);
}

}  // namespace
}  // namespace gw
