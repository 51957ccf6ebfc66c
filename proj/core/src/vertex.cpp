#include "gw/vertex.hpp"

#include <algorithm>
#include <stdexcept>

#include "gw/fock.hpp"

namespace gw {

namespace {

// Coefficient of u(m - k + 1) in the m-th mode of d^{k-1}u / (k-1)!.
Scalar derivative_mode_factor(int k, int m) {
  Scalar f = binomial(m, k - 1);
  if ((k - 1) % 2 != 0) f = -f;
  return f;
}

int level_of_suffix(const std::vector<Mode>& modes, std::size_t from) {
  int level = 0;
  for (std::size_t i = from; i < modes.size(); ++i) level += -2 * modes[i].index - 1;
  return level;
}

bool parity_of_suffix(const std::vector<Mode>& modes, std::size_t from) {
  int odd = 0;
  for (std::size_t i = from; i < modes.size(); ++i) odd += is_odd(modes[i].kind) ? 1 : 0;
  return odd % 2 == 1;
}

// Mode n of the field of the suffix monomial modes[from..] applied to s.
State suffix_field_apply(const std::vector<Mode>& modes, std::size_t from, int n, const State& s) {
  if (s.is_zero()) return {};
  if (from == modes.size()) return n == -1 ? s : State{};

  const Mode& u = modes[from];
  const int k = -u.index;
  if (from + 1 == modes.size()) {
    State out = apply_generator_mode(u.kind, u.flavor, n - k + 1, s);
    return out *= derivative_mode_factor(k, n);
  }

  State out;
  // Creation half: A(m) W(n-1-m) s for m <= -1. W(p) s vanishes once
  // 2p + 2 > level(W) + level(s).
  const int rest_level = level_of_suffix(modes, from + 1);
  const int p_max = (rest_level + s.doubled_level() - 2) / 2;
  for (int p = n; p <= p_max; ++p) {
    const int m = n - 1 - p;
    State inner = suffix_field_apply(modes, from + 1, p, s);
    if (inner.is_zero()) continue;
    State term = apply_generator_mode(u.kind, u.flavor, m - k + 1, inner);
    out.add_scaled(term, derivative_mode_factor(k, m));
  }
  // Annihilation half: (-1)^{|A||W|} W(n-1-m) A(m) s for m >= k-1 (A(m) = 0
  // for 0 <= m < k-1). u(q) kills s once q >= annihilator_bound(s).
  const int sign = (is_odd(u.kind) && parity_of_suffix(modes, from + 1)) ? -1 : 1;
  const int q_bound = s.annihilator_bound();
  for (int q = 0; q < q_bound; ++q) {
    const int m = q + k - 1;
    State inner = apply_generator_mode(u.kind, u.flavor, q, s);
    if (inner.is_zero()) continue;
    State term = suffix_field_apply(modes, from + 1, n - 1 - m, inner);
    out.add_scaled(term, sign * derivative_mode_factor(k, m));
  }
  return out;
}

struct ExpansionWalk {
  const std::vector<Mode>& modes;
  bool derivative_free = false;  // keep only output without derivative modes
  std::vector<int> creators;     // factor positions, decreasing
  State out;

  // Distributes `budget` over the deferred creators (each mode index m <= -1),
  // rightmost creator applied first.
  void place_creators(std::size_t slot, int budget, const State& s, const Scalar& factor) {
    if (slot == creators.size()) {
      if (budget == 0) out.add_scaled(s, factor);
      return;
    }
    const std::size_t left = creators.size() - slot - 1;
    const Mode& u = modes[static_cast<std::size_t>(creators[slot])];
    const int k = -u.index;
    if (derivative_free) {
      // Only u(-1) from a plain factor at m = -1 avoids a derivative.
      if (budget != -static_cast<int>(left + 1)) return;
      State next = apply_generator_mode(u.kind, u.flavor, -1, s);
      if (!next.is_zero()) place_creators(slot + 1, budget + 1, next, factor);
      return;
    }
    if (left == 0) {
      if (budget <= -1) {
        State next = apply_generator_mode(u.kind, u.flavor, budget - k + 1, s);
        out.add_scaled(next, factor * derivative_mode_factor(k, budget));
      }
      return;
    }
    // Remaining creators need at least -1 each.
    for (int m = -1; m >= budget + static_cast<int>(left); --m) {
      State next = apply_generator_mode(u.kind, u.flavor, m - k + 1, s);
      if (next.is_zero()) continue;
      place_creators(slot + 1, budget - m, next, factor * derivative_mode_factor(k, m));
    }
  }

  // Walks factors right to left; `budget` is the mode-index sum still owed.
  void walk(int factor, int budget, const State& s, const Scalar& factor_coeff, int odd_creators) {
    if (s.is_zero()) return;
    if (factor < 0) {
      if (derivative_free) {
        place_creators(0, budget, s.derivative_free_part(), factor_coeff);
      } else {
        place_creators(0, budget, s, factor_coeff);
      }
      return;
    }
    const Mode& u = modes[static_cast<std::size_t>(factor)];
    const int k = -u.index;
    const bool odd = is_odd(u.kind);

    if (!derivative_free || k == 1) {
      creators.push_back(factor);
      walk(factor - 1, budget, s, factor_coeff, odd_creators + (odd ? 1 : 0));
      creators.pop_back();
    }

    // As an annihilator u(q), q >= 0, it must hit a partner mode of s.
    const GenKind partner = conjugate(u.kind);
    std::vector<int> qs;
    for (const auto& [m, c] : s) {
      for (const auto& mode : m.modes()) {
        if (mode.kind == partner && mode.flavor == u.flavor) qs.push_back(-mode.index - 1);
      }
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    const Scalar sign = (odd && odd_creators % 2 == 1) ? -1 : 1;
    for (int q : qs) {
      const int m = q + k - 1;
      State next = apply_generator_mode(u.kind, u.flavor, q, s);
      walk(factor - 1, budget - m, next, factor_coeff * sign * derivative_mode_factor(k, m), odd_creators);
    }
  }
};

}  // namespace

namespace {

State expansion_apply(const State& a, int n, const State& s, bool derivative_free) {
  State out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a) {
    const auto& modes = m.modes();
    if (modes.empty()) {
      if (n == -1) out.add_scaled(derivative_free ? s.derivative_free_part() : s, c);
      continue;
    }
    const int r = static_cast<int>(modes.size());
    ExpansionWalk w{modes, derivative_free, {}, {}};
    w.walk(r - 1, n + 1 - r, s, c, 0);
    out += w.out;
  }
  return out;
}

}  // namespace

State normal_ordered_mode_apply(const State& a, int n, const State& s) { return expansion_apply(a, n, s, false); }

State derivative_free_mode_apply(const State& a, int n, const State& s) { return expansion_apply(a, n, s, true); }

int field_expansion_bound(const State& field, const State& target) {
  if (field.is_zero() || target.is_zero()) return 0;
  // B(p) t has doubled level level(B) + level(t) - 2p - 2, which must be >= 0.
  return (field.doubled_level() + target.doubled_level() - 2) / 2 + 1;
}

State field_mode_apply(const State& a, int n, const State& s) {
  State out;
  for (const auto& [m, c] : a) {
    out.add_scaled(suffix_field_apply(m.modes(), 0, n, s), c);
  }
  return out;
}

State circle(const State& a, int n, const State& b) { return normal_ordered_mode_apply(a, n, b); }

State wick(const State& a, const State& b) { return circle(a, -1, b); }

State derive(const State& a) {
  // T u(-k) = u(-k) T + k u(-k-1), T|0> = 0.
  State out;
  for (const auto& [m, c] : a) {
    const auto& modes = m.modes();
    for (std::size_t i = 0; i < modes.size(); ++i) {
      std::vector<Mode> shifted = modes;
      shifted[i].index -= 1;
      auto canon = canonicalize(std::move(shifted));
      if (!canon) continue;
      out.add_term(canon->monomial, c * (-modes[i].index) * canon->sign);
    }
  }
  return out;
}

State derive(const State& a, int times) {
  State out = a;
  for (int i = 0; i < times; ++i) out = derive(out);
  return out;
}

std::map<int, State> ope_singular(const State& a, const State& b) {
  std::map<int, State> poles;
  const int bound = field_expansion_bound(a, b);
  for (int n = 0; n < bound; ++n) {
    State value = circle(a, n, b);
    if (!value.is_zero()) poles.emplace(n, std::move(value));
  }
  return poles;
}

State iterated_wick(const std::vector<State>& factors) {
  if (factors.empty()) throw std::invalid_argument("iterated Wick product of an empty list");
  State acc = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = wick(*it, acc);
  return acc;
}

State nonassoc_defect(const State& a, const State& b, const State& c) {
  State out;
  const int bound = std::max(field_expansion_bound(b, c), field_expansion_bound(a, c));
  for (int n = 0; n < bound; ++n) {
    const Scalar weight = Scalar(1) / factorial(n + 1);
    const State bc = circle(b, n, c);
    if (!bc.is_zero()) out.add_scaled(wick(derive(a, n + 1), bc), weight);
    const State ac = circle(a, n, c);
    if (ac.is_zero()) continue;
    // (-1)^{|a||b|}: only the odd/odd component flips.
    const State db = derive(b, n + 1);
    const State db_odd = db.odd_part();
    State signed_term = wick(db, ac);
    if (!db_odd.is_zero()) {
      const State a_odd_ac = circle(a.odd_part(), n, c);
      signed_term.add_scaled(wick(db_odd, a_odd_ac), -2);
    }
    out.add_scaled(signed_term, weight);
  }
  return out;
}

}  // namespace gw
