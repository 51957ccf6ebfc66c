#include "gw/state.hpp"

#include <algorithm>

namespace gw {

State::State(const Monomial& m, const Scalar& coeff) { add_term(m, coeff); }

Scalar State::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void State::add_term(const Monomial& m, const Scalar& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void State::add_scaled(const State& other, const Scalar& factor) {
  if (sgn(factor) == 0) return;
  for (const auto& [m, c] : other.terms_) add_term(m, c * factor);
}

State& State::operator+=(const State& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

State& State::operator-=(const State& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

State& State::operator*=(const Scalar& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

int State::doubled_level() const {
  int level = 0;
  for (const auto& [m, c] : terms_) level = std::max(level, m.doubled_level());
  return level;
}

int State::annihilator_bound() const {
  int q = 0;
  for (const auto& [m, c] : terms_) q = std::max(q, m.annihilator_bound());
  return q;
}

State State::odd_part() const {
  State out;
  for (const auto& [m, c] : terms_) {
    if (m.is_odd()) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

State State::even_part() const {
  State out;
  for (const auto& [m, c] : terms_) {
    if (!m.is_odd()) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

State State::derivative_free_part() const {
  State out;
  for (const auto& [m, c] : terms_) {
    if (!m.has_derivative()) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::string to_string(const State& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s) {
    const bool negative = sgn(c) < 0;
    const Scalar mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_vacuum()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace gw
