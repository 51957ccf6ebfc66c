#pragma once

#include <map>
#include <string>

#include "gw/monomial.hpp"
#include "gw/scalar.hpp"

namespace gw {

/// Finitely supported rational combination of monomials. Zero coefficients
/// are never stored, so equality of states is equality of term maps. Every
/// state doubles as a vertex operator through the creation correspondence.
class State {
 public:
  using Terms = std::map<Monomial, Scalar>;

  State() = default;
  explicit State(const Monomial& m, const Scalar& coeff = 1);

  static State vacuum() { return State(Monomial{}); }

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& coeff);
  /// this += factor * other
  void add_scaled(const State& other, const Scalar& factor);

  State& operator+=(const State& other);
  State& operator-=(const State& other);
  State& operator*=(const Scalar& factor);

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator-(State a) { return a *= Scalar(-1); }
  friend State operator*(const Scalar& f, State a) { return a *= f; }
  friend State operator*(State a, const Scalar& f) { return a *= f; }
  friend bool operator==(const State&, const State&) = default;

  /// Max of Monomial::doubled_level over terms (0 for the zero state).
  int doubled_level() const;
  /// Max of Monomial::annihilator_bound over terms.
  int annihilator_bound() const;

  /// Terms with an odd / even number of odd modes.
  State odd_part() const;
  State even_part() const;
  /// Terms without any index <= -2 mode.
  State derivative_free_part() const;

 private:
  Terms terms_;
};

/// "3/2*gamma(-2) - b(-1)*c(-1)*gamma(-1)"; "0" for the zero state.
std::string to_string(const State& s);

}  // namespace gw
