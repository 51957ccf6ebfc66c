#include "gw/grading.hpp"

namespace gw {

Scalar GradingScheme::generator_weight(GenKind k) const {
  switch (k) {
    case GenKind::b: return lambda_e;
    case GenKind::c: return 1 - lambda_e;
    case GenKind::beta: return lambda_s;
    case GenKind::gamma: return 1 - lambda_s;
  }
  return 0;
}

Scalar GradingScheme::mode_weight(const Mode& m) const {
  return generator_weight(m.kind) + (-m.index - 1);
}

Grade grade(const Monomial& m, const GradingScheme& scheme) {
  Grade g{0, 0, 0};
  for (const auto& mode : m.modes()) {
    g.weight += scheme.mode_weight(mode);
    g.bc += bc_ghost(mode.kind);
    g.bg += bg_ghost(mode.kind);
  }
  return g;
}

}  // namespace gw
