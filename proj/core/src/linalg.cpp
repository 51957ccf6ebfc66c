#include "gw/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gw {

void axpy(SparseVector& target, const Scalar& factor, const SparseVector& v) {
  if (sgn(factor) == 0 || v.empty()) return;
  SparseVector out;
  out.reserve(target.size() + v.size());
  auto it = target.begin();
  auto jt = v.begin();
  while (it != target.end() || jt != v.end()) {
    if (jt == v.end() || (it != target.end() && it->first < jt->first)) {
      out.push_back(std::move(*it++));
    } else if (it == target.end() || jt->first < it->first) {
      out.emplace_back(jt->first, factor * jt->second);
      ++jt;
    } else {
      Scalar sum = it->second + factor * jt->second;
      if (sgn(sum) != 0) out.emplace_back(it->first, std::move(sum));
      ++it;
      ++jt;
    }
  }
  target = std::move(out);
}

ColumnEchelon::ColumnEchelon(const SparseMatrix& a) : rows_(a.rows) {
  // Pivot rows are chosen to keep fill-in low: sparse columns first, and
  // within a column the entry whose row is hit by the fewest columns.
  std::vector<int> row_count(static_cast<std::size_t>(a.rows), 0);
  for (const auto& column : a.columns) {
    for (const auto& [i, x] : column) ++row_count[static_cast<std::size_t>(i)];
  }
  std::vector<int> order(static_cast<std::size_t>(a.cols()));
  for (int j = 0; j < a.cols(); ++j) order[static_cast<std::size_t>(j)] = j;
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    return a.columns[static_cast<std::size_t>(l)].size() < a.columns[static_cast<std::size_t>(r)].size();
  });
  for (int col : order) {
    SparseVector v = a.columns[static_cast<std::size_t>(col)];
    SparseVector used;
    reduce(v, &used);
    // combination of the current column: e_col - used
    SparseVector combination{{col, Scalar(1)}};
    axpy(combination, -1, used);
    if (v.empty()) {
      kernel_.push_back(std::move(combination));
      continue;
    }
    auto lead = std::min_element(v.begin(), v.end(), [&](const auto& l, const auto& r) {
      return row_count[static_cast<std::size_t>(l.first)] < row_count[static_cast<std::size_t>(r.first)];
    });
    const int key = lead->first;
    const Scalar inv = 1 / lead->second;
    for (auto& [i, x] : v) x *= inv;
    for (auto& [i, x] : combination) x *= inv;
    pivot_index_.emplace(key, static_cast<int>(pivots_.size()));
    pivots_.push_back(Pivot{key, std::move(v), std::move(combination)});
  }
}

void ColumnEchelon::reduce(SparseVector& v, SparseVector* used) const {
  // Pivot t vanishes at the keys of pivots 0..t-1, so clearing keys in
  // creation order never reintroduces an entry that was already cleared.
  std::vector<int> pending;
  for (const auto& [i, x] : v) {
    auto it = pivot_index_.find(i);
    if (it != pivot_index_.end()) pending.push_back(it->second);
  }
  std::sort(pending.begin(), pending.end());
  std::size_t next = 0;
  while (next < pending.size()) {
    const Pivot& p = pivots_[static_cast<std::size_t>(pending[next])];
    auto pos = std::lower_bound(v.begin(), v.end(), p.key, [](const auto& e, int k) { return e.first < k; });
    if (pos != v.end() && pos->first == p.key) {
      const Scalar factor = pos->second;
      if (used) axpy(*used, factor, p.combination);
      axpy(v, -factor, p.vector);
      for (const auto& [i, x] : p.vector) {
        auto it = pivot_index_.find(i);
        if (it != pivot_index_.end() && it->second > pending[next]) {
          auto slot = std::lower_bound(pending.begin() + static_cast<long>(next) + 1, pending.end(), it->second);
          if (slot == pending.end() || *slot != it->second) pending.insert(slot, it->second);
        }
      }
    }
    ++next;
  }
}

std::optional<SparseVector> ColumnEchelon::solve(const SparseVector& v) const {
  SparseVector residual = v;
  SparseVector used;
  reduce(residual, &used);
  if (!residual.empty()) return std::nullopt;
  return used;
}

SparseVector ColumnEchelon::reduce_modulo_image(const SparseVector& v) const {
  // Every nonzero image vector leads at a pivot row, so the element of
  // v + im(A) vanishing on all pivot rows is unique.
  SparseVector out = v;
  reduce(out, nullptr);
  return out;
}

namespace {

mpz_class lcm_of_denominators(const SparseVector& column) {
  mpz_class l = 1;
  for (const auto& [i, x] : column) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

using u128 = unsigned __int128;

std::uint64_t mod_reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

int bareiss_rank(const SparseMatrix& a) {
  const int rows = a.rows;
  const int cols = a.cols();
  // Work on the transpose so rows of `m` are the matrix columns.
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(cols),
                                        std::vector<mpz_class>(static_cast<std::size_t>(rows)));
  for (int j = 0; j < cols; ++j) {
    const auto& column = a.columns[static_cast<std::size_t>(j)];
    const mpz_class scale = lcm_of_denominators(column);
    for (const auto& [i, x] : column) {
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = x.get_num() * (scale / x.get_den());
    }
  }
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < rows && rank < cols; ++c) {
    int pivot = -1;
    for (int r = rank; r < cols; ++r) {
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    const mpz_class& pv = prow[static_cast<std::size_t>(c)];
    for (int r = rank + 1; r < cols; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      const mpz_class f = row[static_cast<std::size_t>(c)];
      for (int k = c; k < rows; ++k) {
        auto& x = row[static_cast<std::size_t>(k)];
        x = (pv * x - f * prow[static_cast<std::size_t>(k)]);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

int modular_rank(const SparseMatrix& a, std::uint64_t prime) {
  const auto rows = static_cast<std::size_t>(a.rows);
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(a.columns.size());
  for (const auto& column : a.columns) {
    std::vector<std::uint64_t> row(rows, 0);
    for (const auto& [i, x] : column) {
      const std::uint64_t den = mod_reduce(x.get_den(), prime);
      if (den == 0) throw std::domain_error("denominator divisible by the modulus");
      row[static_cast<std::size_t>(i)] = mul_mod(mod_reduce(x.get_num(), prime), pow_mod(den, prime - 2, prime), prime);
    }
    m.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t c = 0; c < rows && static_cast<std::size_t>(rank) < m.size(); ++c) {
    std::size_t pivot = m.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < m.size(); ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    const std::uint64_t inv = pow_mod(prow[c], prime - 2, prime);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = mul_mod(m[r][c], inv, prime);
      for (std::size_t k = c; k < rows; ++k) {
        m[r][k] = (m[r][k] + prime - mul_mod(f, prow[k], prime)) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace gw
