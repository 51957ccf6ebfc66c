#pragma once

#include <cstdint>
#include <random>

#include "gw/state.hpp"

namespace gw::testing {

using Rng = std::mt19937_64;

struct StateShape {
  int max_modes = 3;   // modes per monomial
  int max_depth = 3;   // mode indices in [-max_depth, -1]
  int max_terms = 2;
  int flavors = 1;
};

Monomial random_monomial(Rng& rng, const StateShape& shape);

/// Sum of random monomials with small nonzero rational coefficients.
State random_state(Rng& rng, const StateShape& shape);

/// Like random_state, but every term has the parity of the first one.
State random_homogeneous_state(Rng& rng, const StateShape& shape);

/// A random state each of whose monomials contains the conjugate of some
/// mode of `other`, so the two usually have a nonzero contraction.
State random_partner_state(Rng& rng, const StateShape& shape, const State& other);

Scalar random_scalar(Rng& rng);

int uniform_int(Rng& rng, int lo, int hi);

}  // namespace gw::testing
