#include "gw/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gw {

Monomial Monomial::from_canonical(std::vector<Mode> modes) {
  auto canon = canonicalize(modes);
  if (!canon || canon->sign != 1 || canon->monomial.modes_ != modes) {
    throw std::invalid_argument("mode list is not canonical");
  }
  return Monomial(std::move(modes));
}

bool Monomial::is_odd() const {
  return std::count_if(modes_.begin(), modes_.end(),
                       [](const Mode& m) { return gw::is_odd(m.kind); }) % 2 == 1;
}

int Monomial::annihilator_bound() const {
  int q = 0;
  for (const auto& m : modes_) q = std::max(q, -m.index);
  return q;
}

int Monomial::doubled_level() const {
  int level = 0;
  for (const auto& m : modes_) level += -2 * m.index - 1;
  return level;
}

bool Monomial::has_derivative() const {
  return std::any_of(modes_.begin(), modes_.end(), [](const Mode& m) { return m.index <= -2; });
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare_three_way(
      a.modes_.begin(), a.modes_.end(), b.modes_.begin(), b.modes_.end(),
      [](const Mode& x, const Mode& y) { return canonical_key(x) <=> canonical_key(y); });
}

std::optional<SignedMonomial> canonicalize(std::vector<Mode> modes) {
  for (const auto& m : modes) {
    if (m.index >= 0) {
      throw std::invalid_argument("mode " + to_string(m) + " is not a creation mode");
    }
  }
  // Insertion sort; each odd/odd transposition flips the sign.
  int sign = 1;
  for (std::size_t i = 1; i < modes.size(); ++i) {
    for (std::size_t j = i; j > 0 && canonical_less(modes[j], modes[j - 1]); --j) {
      if (is_odd(modes[j].kind) && is_odd(modes[j - 1].kind)) sign = -sign;
      std::swap(modes[j], modes[j - 1]);
    }
  }
  for (std::size_t i = 1; i < modes.size(); ++i) {
    if (is_odd(modes[i].kind) && modes[i] == modes[i - 1]) return std::nullopt;
  }
  return SignedMonomial{sign, Monomial(std::move(modes))};
}

Monomial remove_mode_at(const Monomial& m, std::size_t pos) {
  std::vector<Mode> modes;
  modes.reserve(m.size() - 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i != pos) modes.push_back(m.modes_[i]);
  }
  return Monomial(std::move(modes));
}

Monomial insert_mode_at(const Monomial& m, std::size_t pos, const Mode& mode) {
  std::vector<Mode> modes;
  modes.reserve(m.size() + 1);
  modes.insert(modes.end(), m.modes_.begin(), m.modes_.begin() + static_cast<std::ptrdiff_t>(pos));
  modes.push_back(mode);
  modes.insert(modes.end(), m.modes_.begin() + static_cast<std::ptrdiff_t>(pos), m.modes_.end());
  return Monomial(std::move(modes));
}

Monomial suffix(const Monomial& m, std::size_t from) {
  return Monomial(std::vector<Mode>(m.modes_.begin() + static_cast<std::ptrdiff_t>(from), m.modes_.end()));
}

std::string to_string(const Monomial& m) {
  if (m.is_vacuum()) return "1";
  std::string out;
  for (const auto& mode : m.modes()) {
    if (!out.empty()) out += '*';
    out += to_string(mode);
  }
  return out;
}

}  // namespace gw
