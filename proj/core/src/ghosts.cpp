#include "gw/ghosts.hpp"

#include <stdexcept>

#include "gw/vertex.hpp"

namespace gw {

State generator(GenKind kind, int flavor, int flavors) {
  if (flavor < 0 || flavor >= flavors) {
    throw std::out_of_range("flavor " + std::to_string(flavor) + " outside [0, " +
                            std::to_string(flavors) + ")");
  }
  return State(canonicalize({Mode{kind, flavor, -1}})->monomial);
}

VirasoroElement virasoro_s(const Scalar& lambda) {
  const State beta = generator(GenKind::beta);
  const State gamma = generator(GenKind::gamma);
  State l = (lambda - 1) * wick(derive(beta), gamma);
  l += lambda * wick(beta, derive(gamma));
  return {std::move(l), 12 * lambda * lambda - 12 * lambda + 2};
}

VirasoroElement virasoro_e(const Scalar& lambda) {
  const State b = generator(GenKind::b);
  const State c = generator(GenKind::c);
  State l = (1 - lambda) * wick(derive(b), c);
  l -= lambda * wick(b, derive(c));
  return {std::move(l), -12 * lambda * lambda + 12 * lambda - 2};
}

VirasoroCheck check_virasoro(const State& l) {
  VirasoroCheck result;
  const auto poles = ope_singular(l, l);
  auto pole = [&](int n) {
    auto it = poles.find(n);
    return it == poles.end() ? State{} : it->second;
  };
  for (const auto& [n, value] : poles) {
    if (n > 3) {
      result.failure = "unexpected pole of order " + std::to_string(n + 1) + ": " + to_string(value);
      return result;
    }
  }
  const State fourth = pole(3);
  const Scalar half_k = fourth.coefficient(Monomial{});
  if (fourth != half_k * State::vacuum()) {
    result.failure = "L o_3 L is not a multiple of 1: " + to_string(fourth);
    return result;
  }
  if (!pole(2).is_zero()) {
    result.failure = "L o_2 L != 0: " + to_string(pole(2));
    return result;
  }
  if (pole(1) != 2 * l) {
    result.failure = "L o_1 L != 2L: " + to_string(pole(1));
    return result;
  }
  if (pole(0) != derive(l)) {
    result.failure = "L o_0 L != dL: " + to_string(pole(0));
    return result;
  }
  result.ok = true;
  result.central_charge = 2 * half_k;
  return result;
}

Scalar central_charge(const State& l) {
  auto check = check_virasoro(l);
  if (!check.ok) throw std::invalid_argument("not a Virasoro element: " + check.failure);
  return check.central_charge;
}

State ghost_current_b(int flavors) {
  State out;
  for (int f = 0; f < flavors; ++f) {
    out += wick(generator(GenKind::beta, f, flavors), generator(GenKind::gamma, f, flavors));
  }
  return out;
}

State ghost_current_f(int flavors) {
  State out;
  for (int f = 0; f < flavors; ++f) {
    out -= wick(generator(GenKind::b, f, flavors), generator(GenKind::c, f, flavors));
  }
  return out;
}

State total_virasoro(const GradingScheme& scheme) {
  if (scheme.flavors != 1) throw std::invalid_argument("Virasoro elements require one flavor");
  return virasoro_e(scheme.lambda_e).state + virasoro_s(scheme.lambda_s).state;
}

}  // namespace gw
