#include "gw/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace gw {

namespace {

int odd_count(const std::vector<Mode>& modes, std::size_t end) {
  return static_cast<int>(std::count_if(modes.begin(), modes.begin() + static_cast<std::ptrdiff_t>(end),
                                        [](const Mode& m) { return is_odd(m.kind); }));
}

// Canonically ordered (|index|, flavor) sequences of one kind with `count`
// entries and excess sum(|index| - 1) == excess.
void kind_sequences(GenKind kind, int count, int excess, int flavors,
                    std::vector<Mode>& prefix, std::vector<std::vector<Mode>>& out) {
  if (count == 0) {
    if (excess == 0) out.push_back(prefix);
    return;
  }
  int min_depth = 1;
  int min_flavor = 0;
  if (!prefix.empty()) {
    min_depth = -prefix.back().index;
    min_flavor = prefix.back().flavor + (is_odd(kind) ? 1 : 0);
  }
  for (int depth = min_depth; depth - 1 <= excess; ++depth) {
    // Remaining entries are at least this deep.
    if ((count - 1) * (depth - 1) > excess - (depth - 1)) break;
    for (int f = depth == min_depth ? min_flavor : 0; f < flavors; ++f) {
      prefix.push_back(Mode{kind, f, -depth});
      kind_sequences(kind, count - 1, excess - (depth - 1), flavors, prefix, out);
      prefix.pop_back();
    }
  }
}

std::vector<std::vector<Mode>> kind_sequences(GenKind kind, int count, int excess, int flavors) {
  std::vector<std::vector<Mode>> out;
  std::vector<Mode> prefix;
  kind_sequences(kind, count, excess, flavors, prefix, out);
  return out;
}

}  // namespace

void apply_generator_mode(GenKind kind, int flavor, int n, const Monomial& m,
                          const Scalar& coeff, State& out) {
  const auto& modes = m.modes();
  if (n <= -1) {
    const Mode u{kind, flavor, n};
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(modes.begin(), modes.end(), u, canonical_less) - modes.begin());
    if (is_odd(kind)) {
      if (pos < modes.size() && modes[pos] == u) return;
      const int sign = odd_count(modes, pos) % 2 == 0 ? 1 : -1;
      out.add_term(insert_mode_at(m, pos, u), sign * coeff);
    } else {
      out.add_term(insert_mode_at(m, pos, u), coeff);
    }
    return;
  }
  const Mode partner{conjugate(kind), flavor, -n - 1};
  const auto range = std::equal_range(modes.begin(), modes.end(), partner, canonical_less);
  if (range.first == range.second) return;
  const auto pos = static_cast<std::size_t>(range.first - modes.begin());
  if (is_odd(kind)) {
    const int sign = odd_count(modes, pos) % 2 == 0 ? 1 : -1;
    out.add_term(remove_mode_at(m, pos), sign * contraction(kind) * coeff);
  } else {
    const auto multiplicity = range.second - range.first;
    out.add_term(remove_mode_at(m, pos), Scalar(contraction(kind) * multiplicity) * coeff);
  }
}

State apply_generator_mode(GenKind kind, int flavor, int n, const State& s) {
  State out;
  for (const auto& [m, c] : s) apply_generator_mode(kind, flavor, n, m, c, out);
  return out;
}

std::vector<Monomial> enumerate_basis(const Scalar& weight, int bc, int bg,
                                      const GradingScheme& scheme) {
  if (scheme.flavors < 1) throw std::invalid_argument("flavor dimension must be positive");
  const int d = scheme.flavors;
  // With #c = #b + bc and #gamma = #beta + bg the minimal weight of a mode
  // content is nb * (w_b + w_c) + nbeta * (w_beta + w_gamma) + offset. Both
  // pair weights must be positive for the mode count to be bounded.
  const Scalar pair_e = scheme.generator_weight(GenKind::b) + scheme.generator_weight(GenKind::c);
  const Scalar pair_s = scheme.generator_weight(GenKind::beta) + scheme.generator_weight(GenKind::gamma);
  if (sgn(pair_e) <= 0 || sgn(pair_s) <= 0) {
    throw std::invalid_argument("grading scheme admits no finite mode bound");
  }
  const Scalar offset = bc * scheme.generator_weight(GenKind::c) + bg * scheme.generator_weight(GenKind::gamma);

  std::vector<Monomial> basis;
  for (int nb = std::max(0, -bc);; ++nb) {
    if (nb * pair_e + std::max(0, -bg) * pair_s + offset > weight) break;
    for (int nbeta = std::max(0, -bg);; ++nbeta) {
      const Scalar min_weight = nb * pair_e + nbeta * pair_s + offset;
      if (min_weight > weight) break;
      const Scalar excess_q = weight - min_weight;
      if (excess_q.get_den() != 1) continue;
      const int excess = static_cast<int>(excess_q.get_num().get_si());
      const int nc = nb + bc;
      const int ngamma = nbeta + bg;
      for (int eb = 0; eb <= excess; ++eb) {
        const auto bs = kind_sequences(GenKind::b, nb, eb, d);
        if (bs.empty()) continue;
        for (int ec = 0; eb + ec <= excess; ++ec) {
          const auto cs = kind_sequences(GenKind::c, nc, ec, d);
          if (cs.empty()) continue;
          for (int ebeta = 0; eb + ec + ebeta <= excess; ++ebeta) {
            const auto betas = kind_sequences(GenKind::beta, nbeta, ebeta, d);
            if (betas.empty()) continue;
            const auto gammas = kind_sequences(GenKind::gamma, ngamma, excess - eb - ec - ebeta, d);
            for (const auto& sb : bs) {
              for (const auto& sc : cs) {
                for (const auto& sbeta : betas) {
                  for (const auto& sgamma : gammas) {
                    std::vector<Mode> modes;
                    modes.reserve(sb.size() + sc.size() + sbeta.size() + sgamma.size());
                    modes.insert(modes.end(), sb.begin(), sb.end());
                    modes.insert(modes.end(), sc.begin(), sc.end());
                    modes.insert(modes.end(), sbeta.begin(), sbeta.end());
                    modes.insert(modes.end(), sgamma.begin(), sgamma.end());
                    basis.push_back(canonicalize(std::move(modes))->monomial);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace gw
