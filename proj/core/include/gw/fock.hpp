#pragma once

#include <vector>

#include "gw/grading.hpp"
#include "gw/state.hpp"

namespace gw {

/// Applies the generator mode kind[flavor](n) to s. Creation modes (n <= -1)
/// are inserted with their fermionic sign; annihilators use
/// [beta(n), gamma(m)] = {b(n), c(m)} = delta_{n+m+1,0}.
State apply_generator_mode(GenKind kind, int flavor, int n, const State& s);

/// Accumulates coeff * kind[flavor](n) |m> into out.
void apply_generator_mode(GenKind kind, int flavor, int n, const Monomial& m,
                          const Scalar& coeff, State& out);

/// All basis monomials of the given weight and ghost numbers, in Monomial
/// order. Throws std::invalid_argument if no finite mode bound exists for the
/// scheme (flavors < 1 or degenerate pair weights).
std::vector<Monomial> enumerate_basis(const Scalar& weight, int bc, int bg,
                                      const GradingScheme& scheme);

}  // namespace gw
