#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>

namespace gw {

/// Generators of the combined bc / beta-gamma ghost system.
enum class GenKind : std::uint8_t { b = 0, c = 1, beta = 2, gamma = 3 };

inline constexpr GenKind kAllKinds[] = {GenKind::b, GenKind::c, GenKind::beta, GenKind::gamma};

constexpr bool is_odd(GenKind k) { return k == GenKind::b || k == GenKind::c; }

constexpr int bc_ghost(GenKind k) {
  return k == GenKind::b ? -1 : (k == GenKind::c ? 1 : 0);
}

constexpr int bg_ghost(GenKind k) {
  return k == GenKind::beta ? -1 : (k == GenKind::gamma ? 1 : 0);
}

/// The kind whose modes pair with this one in the (anti)commutator.
constexpr GenKind conjugate(GenKind k) {
  switch (k) {
    case GenKind::b: return GenKind::c;
    case GenKind::c: return GenKind::b;
    case GenKind::beta: return GenKind::gamma;
    case GenKind::gamma: return GenKind::beta;
  }
  return k;
}

/// Value of [u(n), conj(u)(m)} for n + m + 1 == 0 and matching flavors:
/// {b,c} = {c,b} = 1, [beta,gamma] = 1, [gamma,beta] = -1.
constexpr int contraction(GenKind k) { return k == GenKind::gamma ? -1 : 1; }

std::string_view kind_name(GenKind k);
/// Inverse of kind_name; throws std::invalid_argument.
GenKind parse_kind(std::string_view name);

/// A Fourier mode a(n) of a generator, a(z) = sum_n a(n) z^{-n-1}.
struct Mode {
  GenKind kind = GenKind::b;
  int flavor = 0;
  int index = -1;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// Position key of a mode inside a canonical monomial: kind b < c < beta < gamma,
/// then index decreasing (-1 first), then flavor increasing.
constexpr auto canonical_key(const Mode& m) {
  return std::make_tuple(static_cast<int>(m.kind), -m.index, m.flavor);
}

constexpr bool canonical_less(const Mode& a, const Mode& b) {
  return canonical_key(a) < canonical_key(b);
}

std::string to_string(const Mode& m);

}  // namespace gw
