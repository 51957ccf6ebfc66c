#pragma once

#include "gw/monomial.hpp"
#include "gw/scalar.hpp"

namespace gw {

/// Conformal weights of the generators: beta has weight lambda_s and gamma
/// 1 - lambda_s; b has weight lambda_e and c 1 - lambda_e. flavors is dim V.
struct GradingScheme {
  Scalar lambda_s = 2;
  Scalar lambda_e = 2;
  int flavors = 1;

  /// Weight of the index -1 mode of a generator of the given kind.
  Scalar generator_weight(GenKind k) const;
  /// Weight of u(-n): n - 1 + weight(u).
  Scalar mode_weight(const Mode& m) const;
};

struct Grade {
  Scalar weight;
  int bc = 0;
  int bg = 0;

  friend bool operator==(const Grade&, const Grade&) = default;
};

Grade grade(const Monomial& m, const GradingScheme& scheme);

}  // namespace gw
