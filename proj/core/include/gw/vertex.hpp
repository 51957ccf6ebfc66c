#pragma once

#include <map>
#include <vector>

#include "gw/state.hpp"

namespace gw {

/// Smallest N such that every mode B(p), p >= N, of the field of `field`
/// annihilates `target`. Uses the grading in which every generator has
/// weight 1/2, so every creation mode has positive weight and B(p) lowers
/// the doubled weight by 2p + 2 - level(B).
int field_expansion_bound(const State& field, const State& target);

/// a(n) s, where a(n) is the n-th Fourier mode of the vertex operator of a.
///
/// A monomial a = u(-k) w is the field (1/(k-1)!) :(d^{k-1} u) w: and its
/// modes follow the normal-ordering split
///   :AB:(n) = sum_{m<=-1} A(m) B(n-1-m) + (-1)^{|A||B|} sum_{m>=0} B(n-1-m) A(m),
/// recursing on w. Both sums are cut by field_expansion_bound.
State field_mode_apply(const State& a, int n, const State& s);

/// Same value as field_mode_apply, computed from the fully normal-ordered
/// mode expansion of a monomial field u1(-k1)...ur(-kr)|0>:
///   sum_{m1+...+mr = n+1-r} eps * prod_i alpha_i(m_i) [creators][annihilators],
/// with annihilator modes enumerated only against partner modes present in s
/// and eps the Koszul sign of moving annihilators right. Much cheaper than
/// the splitting recursion on long fields or long targets.
State normal_ordered_mode_apply(const State& a, int n, const State& s);

/// The derivative-free part of a(n) s, i.e. the terms whose modes all have
/// index -1. Walks that would create a derivative mode are pruned.
State derivative_free_mode_apply(const State& a, int n, const State& s);

/// a o_n b. For n >= 0 the OPE pole coefficients, n = -1 the Wick product.
State circle(const State& a, int n, const State& b);

State wick(const State& a, const State& b);

/// Formal derivative, the translation operator on states.
State derive(const State& a);
State derive(const State& a, int times);

/// Nonzero singular OPE coefficients {n >= 0 -> a o_n b}.
std::map<int, State> ope_singular(const State& a, const State& b);

/// Right-nested Wick product :a1 (:a2 (... ak):):. Throws on an empty list.
State iterated_wick(const std::vector<State>& factors);

/// Right side of the Wick non-associativity formula
///   :(:ab:)c: - :abc: = sum_{n>=0} 1/(n+1)! ( :(d^{n+1} a)(b o_n c): + (-1)^{|a||b|} :(d^{n+1} b)(a o_n c): ).
/// Inhomogeneous parities are split before the sign is applied.
State nonassoc_defect(const State& a, const State& b, const State& c);

}  // namespace gw
