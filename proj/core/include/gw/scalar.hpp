#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gw {

// Exact rational coefficient. GMP keeps p/q canonical after every arithmetic
// operation; values built from strings must be canonicalized explicitly.
using Scalar = mpq_class;

/// Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" text, or "p" when q == 1.
std::string to_string(const Scalar& value);

Scalar factorial(int n);

/// Generalized binomial coefficient C(top, k) = top (top-1) ... (top-k+1) / k!
/// valid for negative top.
Scalar binomial(long top, int k);

}  // namespace gw
