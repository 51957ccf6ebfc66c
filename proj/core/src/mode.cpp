#include "gw/mode.hpp"

#include <stdexcept>

namespace gw {

std::string_view kind_name(GenKind k) {
  switch (k) {
    case GenKind::b: return "b";
    case GenKind::c: return "c";
    case GenKind::beta: return "beta";
    case GenKind::gamma: return "gamma";
  }
  return "?";
}

GenKind parse_kind(std::string_view name) {
  for (GenKind k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

std::string to_string(const Mode& m) {
  std::string out(kind_name(m.kind));
  if (m.flavor != 0) out += "[" + std::to_string(m.flavor) + "]";
  out += "(" + std::to_string(m.index) + ")";
  return out;
}

}  // namespace gw
