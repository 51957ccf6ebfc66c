#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gw/mode.hpp"

namespace gw {

class Monomial;
struct SignedMonomial;

/// Canonically ordered product of creation modes applied to the vacuum.
///
/// Modes are kept in the order b, c, beta, gamma; inside one kind by
/// decreasing index and then increasing flavor. Odd modes never repeat.
/// The empty monomial is the vacuum |0>, i.e. the identity field.
class Monomial {
 public:
  Monomial() = default;

  /// Wraps an already canonical list. Throws std::invalid_argument otherwise.
  static Monomial from_canonical(std::vector<Mode> modes);

  const std::vector<Mode>& modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }
  bool is_vacuum() const { return modes_.empty(); }

  /// Parity of the number of odd modes.
  bool is_odd() const;
  /// Smallest q such that every generator mode u(p) with p >= q kills this
  /// monomial (contractions pair p with index -p-1).
  int annihilator_bound() const;
  /// Sum over modes of (2|index| - 1): twice the weight when every generator
  /// has weight 1/2. All modes carry positive weight in that grading.
  int doubled_level() const;
  /// True iff some mode has index <= -2 (the monomial carries a derivative).
  bool has_derivative() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  explicit Monomial(std::vector<Mode> modes) : modes_(std::move(modes)) {}

  std::vector<Mode> modes_;

  friend std::optional<SignedMonomial> canonicalize(std::vector<Mode> modes);
  friend Monomial remove_mode_at(const Monomial& m, std::size_t pos);
  friend Monomial insert_mode_at(const Monomial& m, std::size_t pos, const Mode& mode);
  friend Monomial suffix(const Monomial& m, std::size_t from);
};

struct SignedMonomial {
  int sign = 1;
  Monomial monomial;
};

/// Sorts an arbitrary product of creation modes into canonical order. The sign
/// counts transpositions of odd modes; std::nullopt means the product is zero
/// because an odd mode repeats. Throws std::invalid_argument for index >= 0.
std::optional<SignedMonomial> canonicalize(std::vector<Mode> modes);

Monomial remove_mode_at(const Monomial& m, std::size_t pos);
Monomial insert_mode_at(const Monomial& m, std::size_t pos, const Mode& mode);
/// Modes [from, size) as a monomial; a suffix of a canonical list is canonical.
Monomial suffix(const Monomial& m, std::size_t from);

/// "b(-1)*c(-2)*gamma(-1)" or "1" for the vacuum.
std::string to_string(const Monomial& m);

}  // namespace gw
