#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gw/scalar.hpp"
#include "gw/state.hpp"

namespace gw::cli {

/// One side of a checked identity, as text and as JSON.
struct Side {
  std::string text;
  nlohmann::json json;
};

Side side(const State& s);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<Side> lhs;
  std::optional<Side> rhs;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  const Check* first_failure() const;
};

struct SuiteOptions {
  std::optional<Scalar> lambda;  // virasoro / anomaly: restrict to one value
  std::optional<int> kmax;       // per-suite default when absent
  std::uint64_t seed = 20240611;
  int cases = 200;               // identities: sampled triples
};

/// Bad suite name or option combination.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite in order). Throws UsageError.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options);

SuiteReport virasoro_suite(const SuiteOptions& options);
SuiteReport anomaly_suite(const SuiteOptions& options);
SuiteReport lemma53_suite(const SuiteOptions& options);
SuiteReport thm55_suite(const SuiteOptions& options);
SuiteReport bracket_suite(const SuiteOptions& options);
SuiteReport dot_suite(const SuiteOptions& options);
SuiteReport identities_suite(const SuiteOptions& options);

/// beta^k gamma^2k - k b c beta^{k-1} gamma^{2k-1}, all modes at -1.
State expected_x_free_part(int k);
/// c beta^{k+1} gamma^{2k+1}, all modes at -1.
State expected_y_free_part(int k);

struct BracketConstant {
  std::string family;  // "x^n,x^m", "yx^n,x^m" or "yx^n,yx^m"
  int n = 0;
  int m = 0;
  Scalar computed;  // {u,v} = computed * (x^{n+m} or yx^{n+m}) in cohomology
  Scalar expected;
};

/// Structure constants for 0 <= n, m <= nmax, decided through the
/// derivative-free certificate of the weight-zero complex at lambda = 2.
std::vector<BracketConstant> bracket_table(int nmax);

}  // namespace gw::cli
