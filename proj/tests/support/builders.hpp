#pragma once

#include <initializer_list>
#include <stdexcept>

#include "gw/monomial.hpp"
#include "gw/state.hpp"

namespace gw::testing {

/// p/q in canonical form (mpq_class(p, q) leaves it unreduced).
inline Scalar frac(long p, long q) {
  Scalar x(p, q);
  x.canonicalize();
  return x;
}

inline Mode md(GenKind k, int index, int flavor = 0) { return Mode{k, flavor, index}; }

/// Canonical product of the given creation modes, with its sign, as a state.
inline State st(std::initializer_list<Mode> modes, const Scalar& coeff = 1) {
  auto canon = canonicalize(std::vector<Mode>(modes));
  if (!canon) return State{};
  return State(canon->monomial, coeff * canon->sign);
}

inline Monomial mono(std::initializer_list<Mode> modes) {
  auto canon = canonicalize(std::vector<Mode>(modes));
  if (!canon) throw std::invalid_argument("zero monomial");
  return canon->monomial;
}

inline constexpr GenKind B = GenKind::b;
inline constexpr GenKind C = GenKind::c;
inline constexpr GenKind BETA = GenKind::beta;
inline constexpr GenKind GAMMA = GenKind::gamma;

}  // namespace gw::testing
