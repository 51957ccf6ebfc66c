#pragma once

#include <string>

#include "gw/grading.hpp"
#include "gw/state.hpp"

namespace gw {

/// kind[flavor](-1)|0>. Throws std::out_of_range unless 0 <= flavor < flavors.
State generator(GenKind kind, int flavor = 0, int flavors = 1);

struct VirasoroElement {
  State state;
  Scalar claimed_central_charge;
};

/// (lambda - 1) :d(beta) gamma: + lambda :beta d(gamma):, central charge
/// 12 lambda^2 - 12 lambda + 2.
VirasoroElement virasoro_s(const Scalar& lambda);

/// (1 - lambda) :d(b) c: - lambda :b d(c):, central charge
/// -12 lambda^2 + 12 lambda - 2.
VirasoroElement virasoro_e(const Scalar& lambda);

/// Outcome of checking the four circle identities of a Virasoro element:
/// L o_3 L = (k/2) 1, L o_2 L = 0, L o_1 L = 2L, L o_0 L = dL, and that no
/// pole beyond the fourth order appears.
struct VirasoroCheck {
  bool ok = false;
  Scalar central_charge;
  std::string failure;
};

VirasoroCheck check_virasoro(const State& l);

/// 2 x (vacuum coefficient of L o_3 L). Throws std::invalid_argument when L
/// fails check_virasoro.
Scalar central_charge(const State& l);

/// sum_i :beta^i gamma^i:, whose zero mode measures beta-gamma ghost number.
State ghost_current_b(int flavors = 1);
/// -sum_i :b^i c^i:, whose zero mode measures bc ghost number.
State ghost_current_f(int flavors = 1);

/// virasoro_e(lambda_e) + virasoro_s(lambda_s); requires flavors == 1.
State total_virasoro(const GradingScheme& scheme);

}  // namespace gw
