#include "gw/cli/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "gw/brst.hpp"
#include "gw/cli/serialize.hpp"
#include "gw/ghosts.hpp"
#include "gw/monomial.hpp"
#include "gw/vertex.hpp"

namespace gw::cli {

namespace {

const std::array<Scalar, 6> kLambdaSet = {Scalar(-1), Scalar(0), Scalar(1, 2), Scalar(1), Scalar(2), Scalar(3)};

int sign_of_power(int e) { return e % 2 == 0 ? 1 : -1; }

Check make_check(std::string name, bool passed, std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.passed = passed;
  c.detail = std::move(detail);
  return c;
}

Check compare_states(std::string name, const State& lhs, const State& rhs) {
  Check c = make_check(std::move(name), lhs == rhs);
  if (!c.passed) {
    c.lhs = side(lhs);
    c.rhs = side(rhs);
  }
  return c;
}

std::vector<Scalar> lambdas_for(const SuiteOptions& options) {
  if (options.lambda) return {*options.lambda};
  return {kLambdaSet.begin(), kLambdaSet.end()};
}

void require_lambda_two(const SuiteOptions& options, std::string_view suite) {
  if (options.lambda && *options.lambda != 2) {
    throw UsageError("suite " + std::string(suite) + " is defined for --lambda 2 only");
  }
}

int kmax_or(const SuiteOptions& options, int fallback) {
  const int k = options.kmax.value_or(fallback);
  if (k < 0) throw UsageError("--kmax must be nonnegative");
  return k;
}

State monomial_state(std::vector<Mode> modes, const Scalar& coeff) {
  auto canon = canonicalize(std::move(modes));
  if (!canon) return {};
  State s;
  s.add_term(canon->monomial, coeff * canon->sign);
  return s;
}

std::vector<Mode> repeated(GenKind kind, int count) {
  return std::vector<Mode>(static_cast<std::size_t>(std::max(count, 0)), Mode{kind, 0, -1});
}

std::vector<Mode> concat(std::initializer_list<std::vector<Mode>> parts) {
  std::vector<Mode> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string power_name(int bc, int bg) {
  if (bc == 0) return "x^" + std::to_string(bg);
  if (bc == 1) return "yx^" + std::to_string(bg);
  return "H^{" + std::to_string(bc) + "," + std::to_string(bg) + "}";
}

// A cohomology class coeff * reference(bc, bg) of the weight-zero complex.
struct ClassValue {
  int bc = 0;
  int bg = 0;
  Scalar coeff;

  bool operator==(const ClassValue& o) const { return bc == o.bc && bg == o.bg && coeff == o.coeff; }
};

ClassValue operator+(ClassValue a, const ClassValue& b) {
  if (a.bc != b.bc || a.bg != b.bg) throw std::logic_error("adding classes of different bidegree");
  a.coeff += b.coeff;
  return a;
}

ClassValue operator*(const Scalar& f, ClassValue a) {
  a.coeff *= f;
  return a;
}

Side class_side(const ClassValue& v) {
  Side s;
  s.text = sgn(v.coeff) == 0 ? "0 (in bidegree " + std::to_string(v.bc) + "," + std::to_string(v.bg) + ")"
                             : to_string(v.coeff) + " * " + power_name(v.bc, v.bg);
  s.json = {{"bidegree", {v.bc, v.bg}}, {"class", power_name(v.bc, v.bg)}, {"coeff", to_string(v.coeff)}};
  return s;
}

class IdentityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Products and brackets of classes, evaluated on the standard representatives
// through their derivative-free parts.
class ClassAlgebra {
 public:
  explicit ClassAlgebra(const WeilComplex& complex) : complex_(complex) {}

  ClassValue product(const ClassValue& u, const ClassValue& v) {
    ClassValue out{u.bc + v.bc, u.bg + v.bg, 0};
    if (sgn(u.coeff) == 0 || sgn(v.coeff) == 0) return out;
    out.coeff = u.coeff * v.coeff * cached(products_, u, v, false);
    return out;
  }

  ClassValue bracket(const ClassValue& u, const ClassValue& v) {
    ClassValue out{u.bc + v.bc - 1, u.bg + v.bg, 0};
    if (sgn(u.coeff) == 0 || sgn(v.coeff) == 0) return out;
    out.coeff = u.coeff * v.coeff * cached(brackets_, u, v, true);
    return out;
  }

  // Bidegree of the derivative-free part of {ref u, ref v}, if nonzero.
  std::optional<std::pair<int, int>> bracket_free_bidegree(const ClassValue& u, const ClassValue& v) {
    const State free = lz_bracket_free_part(reference(u), reference(v));
    return weight_zero_bidegree(complex_.context(), free);
  }

 private:
  using Key = std::tuple<int, int, int, int>;

  const State& reference(const ClassValue& v) const {
    const auto& cert = complex_.projection_certificate(v.bc, v.bg);
    if (!cert.reference) throw IdentityFailure("nonzero class in a vanishing group " + power_name(v.bc, v.bg));
    return *cert.reference;
  }

  Scalar cached(std::map<Key, Scalar>& cache, const ClassValue& u, const ClassValue& v, bool is_bracket) {
    const Key key{u.bc, u.bg, v.bc, v.bg};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const State& a = reference(u);
    const State& b = reference(v);
    const State free = is_bracket ? lz_bracket_free_part(a, b) : wick_free_part(a, b);
    const int bc = u.bc + v.bc - (is_bracket ? 1 : 0);
    const int bg = u.bg + v.bg;
    auto ratio = complex_.projected_class_ratio(free, bc, bg);
    if (!ratio) {
      throw IdentityFailure(std::string(is_bracket ? "bracket" : "product") + " of " + power_name(u.bc, u.bg) + " and " +
                            power_name(v.bc, v.bg) + " is not a multiple of the reference class");
    }
    cache.emplace(key, *ratio);
    return *ratio;
  }

  const WeilComplex& complex_;
  std::map<Key, Scalar> products_;
  std::map<Key, Scalar> brackets_;
};

struct CaseTally {
  explicit CaseTally(std::string n) : name(std::move(n)) {}

  std::string name;
  int passed = 0;
  int total = 0;
  std::optional<Check> failure;

  void record(bool ok, const std::string& what, const ClassValue& lhs, const ClassValue& rhs) {
    ++total;
    if (ok) {
      ++passed;
      return;
    }
    if (!failure) {
      failure = make_check(name, false, what);
      failure->lhs = class_side(lhs);
      failure->rhs = class_side(rhs);
    }
  }

  void record_error(const std::string& what) {
    ++total;
    if (!failure) failure = make_check(name, false, what);
  }

  Check result() const {
    if (failure) {
      Check c = *failure;
      c.detail = std::to_string(passed) + "/" + std::to_string(total) + " cases; first failure: " + c.detail;
      return c;
    }
    return make_check(name, true, std::to_string(passed) + "/" + std::to_string(total) + " cases");
  }
};

}  // namespace

Side side(const State& s) { return Side{to_string(s), state_to_json(s)}; }

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* SuiteReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

State expected_x_free_part(int k) {
  State out = monomial_state(concat({repeated(GenKind::beta, k), repeated(GenKind::gamma, 2 * k)}), 1);
  if (k >= 1) {
    out += monomial_state(concat({repeated(GenKind::b, 1), repeated(GenKind::c, 1), repeated(GenKind::beta, k - 1),
                                  repeated(GenKind::gamma, 2 * k - 1)}),
                          -k);
  }
  return out;
}

State expected_y_free_part(int k) {
  return monomial_state(concat({repeated(GenKind::c, 1), repeated(GenKind::beta, k + 1), repeated(GenKind::gamma, 2 * k + 1)}), 1);
}

SuiteReport virasoro_suite(const SuiteOptions& options) {
  SuiteReport report{"virasoro", {}};
  for (const Scalar& lambda : lambdas_for(options)) {
    for (const auto& [label, element] : {std::pair{"LS", virasoro_s(lambda)}, std::pair{"LE", virasoro_e(lambda)}}) {
      const VirasoroCheck check = check_virasoro(element.state);
      const std::string name = std::string(label) + "(" + to_string(lambda) + ")";
      if (!check.ok) {
        report.checks.push_back(make_check(name, false, check.failure));
        continue;
      }
      const bool ok = check.central_charge == element.claimed_central_charge;
      report.checks.push_back(make_check(name, ok,
                                         "central charge " + to_string(check.central_charge) + ", expected " +
                                             to_string(element.claimed_central_charge)));
    }
  }
  return report;
}

SuiteReport anomaly_suite(const SuiteOptions& options) {
  SuiteReport report{"anomaly", {}};
  for (const Scalar& lambda : lambdas_for(options)) {
    const BrstContext ctx = brst_context(lambda);
    const AnomalyDecomposition d = q_square_obstruction(ctx);
    const std::string at = "(lambda " + to_string(lambda) + ")";
    const Scalar expected_residue = (ctx.central_charge - 26) / 12;
    const State c = generator(GenKind::c);
    State expected = derive(wick(derive(c, 2), c));
    expected *= Scalar(3, 2);
    expected.add_scaled(wick(derive(c, 3), c), expected_residue);

    Check total = compare_states("obstruction = 3/2 d(d^2c c) + (k-26)/12 d^3c c " + at, d.obstruction, expected);
    total.detail = d.decomposes ? "computed total-derivative coefficient " + to_string(d.derivative_coeff) +
                                      ", residue coefficient " + to_string(d.residue_coeff)
                                : "obstruction is not in the span of d(d^2c c) and d^3c c";
    report.checks.push_back(std::move(total));

    report.checks.push_back(make_check("residue coefficient = (k-26)/12 " + at,
                                       d.decomposes && d.residue_coeff == expected_residue,
                                       "computed " + to_string(d.residue_coeff) + ", expected " + to_string(expected_residue) +
                                           (sgn(d.residue_coeff) != 0 ? " (obstruction nonzero)" : " (Q^2 = 0)")));

    const bool critical = lambda == 2 || lambda == -1;
    report.checks.push_back(make_check("residue vanishes iff lambda in {2,-1} " + at,
                                       d.decomposes && (sgn(d.residue_coeff) == 0) == critical,
                                       "central charge " + to_string(ctx.central_charge)));
  }
  return report;
}

SuiteReport lemma53_suite(const SuiteOptions& options) {
  require_lambda_two(options, "lemma53");
  const int jmax = kmax_or(options, 4);
  SuiteReport report{"lemma53", {}};
  const BrstContext ctx = brst_context(2);
  const State b = generator(GenKind::b);
  const State c = generator(GenKind::c);
  const State beta = generator(GenKind::beta);
  const State gamma = generator(GenKind::gamma);

  report.checks.push_back(compare_states("Q b = L^W", q_apply(ctx, b), ctx.total_virasoro));
  report.checks.push_back(compare_states("Q c = c dc", q_apply(ctx, c), wick(c, derive(c))));
  State q_beta = wick(c, derive(beta));
  q_beta.add_scaled(wick(derive(c), beta), 2);
  report.checks.push_back(compare_states("Q beta = c d(beta) + 2 dc beta", q_apply(ctx, beta), q_beta));
  report.checks.push_back(
      compare_states("Q gamma = c d(gamma) - dc gamma", q_apply(ctx, gamma), wick(c, derive(gamma)) - wick(derive(c), gamma)));

  int columns = 0;
  std::optional<Check> bad;
  for (int bg = 0; bg <= jmax && !bad; ++bg) {
    for (int bc = -2; bc <= 4 && !bad; ++bc) {
      const QMatrix q = q_matrix(ctx, bc, bg);
      for (std::size_t k = 0; k < q.source.size(); ++k) {
        ++columns;
        const State image = from_coordinates(q.matrix.columns[k], q.target);
        if (!in_derivative_subspace(image)) {
          bad = make_check("image of Q lies in the derivative subspace", false, "Q(" + to_string(q.source[k]) + ")");
          bad->lhs = side(image);
          break;
        }
      }
    }
  }
  report.checks.push_back(bad ? *bad
                              : make_check("image of Q lies in the derivative subspace", true,
                                           std::to_string(columns) + " basis monomials, i in [-2,4], j <= " +
                                               std::to_string(jmax)));
  return report;
}

SuiteReport thm55_suite(const SuiteOptions& options) {
  require_lambda_two(options, "thm55");
  const int kmax = kmax_or(options, 5);
  SuiteReport report{"thm55", {}};
  WeilComplex complex(brst_context(2));
  const BrstContext& ctx = complex.context();

  auto cocycle_and_nonzero = [&](const std::string& name, const State& s) {
    if (!q_apply(ctx, s).is_zero()) {
      report.checks.push_back(make_check(name + " is a cocycle", false));
      return;
    }
    const bool boundary = complex.is_coboundary(s).is_coboundary;
    report.checks.push_back(make_check(name + " is a cocycle and not a coboundary", !boundary));
  };
  cocycle_and_nonzero("x", class_x());
  cocycle_and_nonzero("y", class_y());
  for (int k = 0; k <= kmax; ++k) {
    const State xk = power_rep(k);
    const State yk = odd_power_rep(k);
    report.checks.push_back(compare_states("free part of x^" + std::to_string(k), xk.derivative_free_part(), expected_x_free_part(k)));
    report.checks.push_back(compare_states("free part of yx^" + std::to_string(k), yk.derivative_free_part(), expected_y_free_part(k)));
    cocycle_and_nonzero("x^" + std::to_string(k), xk);
    cocycle_and_nonzero("yx^" + std::to_string(k), yk);
  }
  return report;
}

SuiteReport bracket_suite(const SuiteOptions& options) {
  require_lambda_two(options, "bracket");
  const int kmax = kmax_or(options, 4);
  SuiteReport report{"bracket", {}};
  WeilComplex complex(brst_context(2));

  auto check_class = [&](const std::string& name, const State& lhs, const State& rhs, std::optional<State> reference) {
    Check c = make_check(name, complex.cohomology_equal(lhs, rhs));
    if (reference) {
      const auto ratio = complex.class_ratio(lhs, *reference);
      c.detail = "computed coefficient " + (ratio ? to_string(*ratio) : std::string("(not a multiple)"));
    }
    if (!c.passed) {
      c.lhs = side(lhs);
      c.rhs = side(rhs);
    }
    report.checks.push_back(std::move(c));
  };

  const State x = class_x();
  check_class("{y,x} = -x", lz_bracket(class_y(), x), Scalar(-1) * x, x);
  for (int total = 0; total <= kmax; ++total) {
    for (int n = 0; n <= total; ++n) {
      const int m = total - n;
      const std::string ns = std::to_string(n);
      const std::string ms = std::to_string(m);
      const std::string nm = to_string(Scalar(n - m));
      const State xn = power_rep(n);
      const State xm = power_rep(m);
      const State yn = odd_power_rep(n);
      const State ym = odd_power_rep(m);
      check_class("{x^" + ns + ",x^" + ms + "} = 0", lz_bracket(xn, xm), State{}, std::nullopt);
      const State x_sum = power_rep(total);
      check_class("{yx^" + ns + ",x^" + ms + "} = " + nm + " x^" + std::to_string(total), lz_bracket(yn, xm),
                  Scalar(n - m) * x_sum, x_sum);
      const State y_sum = odd_power_rep(total);
      check_class("{yx^" + ns + ",yx^" + ms + "} = " + nm + " yx^" + std::to_string(total), lz_bracket(yn, ym),
                  Scalar(n - m) * y_sum, y_sum);
    }
  }
  return report;
}

SuiteReport dot_suite(const SuiteOptions& options) {
  require_lambda_two(options, "dot");
  const int kmax = kmax_or(options, 5);
  SuiteReport report{"dot", {}};
  WeilComplex complex(brst_context(2));

  auto check_class = [&](const std::string& name, const State& lhs, const State& rhs) {
    Check c = make_check(name, complex.cohomology_equal(lhs, rhs));
    if (!c.passed) {
      c.lhs = side(lhs);
      c.rhs = side(rhs);
    }
    report.checks.push_back(std::move(c));
  };

  for (int total = 0; total <= kmax; ++total) {
    const State x_sum = power_rep(total);
    const State y_sum = odd_power_rep(total);
    for (int n = 0; n <= total; ++n) {
      const int m = total - n;
      const std::string ns = std::to_string(n);
      const std::string ms = std::to_string(m);
      const std::string ts = std::to_string(total);
      check_class("x^" + ns + " x^" + ms + " = x^" + ts, wick(power_rep(n), power_rep(m)), x_sum);
      check_class("yx^" + ns + " x^" + ms + " = yx^" + ts, wick(odd_power_rep(n), power_rep(m)), y_sum);
      check_class("yx^" + ns + " yx^" + ms + " = 0", wick(odd_power_rep(n), odd_power_rep(m)), State{});
    }
  }
  return report;
}

SuiteReport identities_suite(const SuiteOptions& options) {
  require_lambda_two(options, "identities");
  const int kmax = kmax_or(options, 3);
  if (options.cases < 1) throw UsageError("case count must be positive");
  SuiteReport report{"identities", {}};
  WeilComplex complex(brst_context(2));
  ClassAlgebra algebra(complex);

  std::vector<ClassValue> pool;
  for (int n = 0; n <= kmax; ++n) {
    pool.push_back({0, n, 1});
    pool.push_back({1, n, 1});
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

  CaseTally commutativity{"graded commutativity uv = (-1)^{|u||v|} vu"};
  CaseTally associativity{"associativity (uv)t = u(vt)"};
  CaseTally antisymmetry{"bracket antisymmetry"};
  CaseTally jacobi{"Jacobi identity"};
  CaseTally leibniz{"Leibniz rule {u,vt} = {u,v}t + sign v{u,t}"};
  CaseTally grading{"bracket bidegree (p+q-1, j+j')"};

  for (int i = 0; i < options.cases; ++i) {
    const ClassValue u = pool[pick(rng)];
    const ClassValue v = pool[pick(rng)];
    const ClassValue t = pool[pick(rng)];
    const int p = u.bc, q = v.bc, r = t.bc;
    const std::string where = "u=" + power_name(u.bc, u.bg) + ", v=" + power_name(v.bc, v.bg) + ", t=" + power_name(t.bc, t.bg);

    auto attempt = [&](CaseTally& tally, const std::function<void()>& body) {
      try {
        body();
      } catch (const IdentityFailure& e) {
        tally.record_error(std::string(e.what()) + " (" + where + ")");
      }
    };

    attempt(commutativity, [&] {
      const ClassValue lhs = algebra.product(u, v);
      const ClassValue rhs = Scalar(sign_of_power(p * q)) * algebra.product(v, u);
      commutativity.record(lhs == rhs, where, lhs, rhs);
    });
    attempt(associativity, [&] {
      const ClassValue lhs = algebra.product(algebra.product(u, v), t);
      const ClassValue rhs = algebra.product(u, algebra.product(v, t));
      associativity.record(lhs == rhs, where, lhs, rhs);
    });
    attempt(antisymmetry, [&] {
      const ClassValue lhs = algebra.bracket(u, v);
      const ClassValue rhs = Scalar(-sign_of_power((p - 1) * (q - 1))) * algebra.bracket(v, u);
      antisymmetry.record(lhs == rhs, where, lhs, rhs);
    });
    attempt(jacobi, [&] {
      const ClassValue lhs = Scalar(sign_of_power((p - 1) * (r - 1))) * algebra.bracket(u, algebra.bracket(v, t)) +
                             Scalar(sign_of_power((r - 1) * (q - 1))) * algebra.bracket(t, algebra.bracket(u, v)) +
                             Scalar(sign_of_power((q - 1) * (p - 1))) * algebra.bracket(v, algebra.bracket(t, u));
      const ClassValue rhs{lhs.bc, lhs.bg, 0};
      jacobi.record(lhs == rhs, where, lhs, rhs);
    });
    attempt(leibniz, [&] {
      const ClassValue lhs = algebra.bracket(u, algebra.product(v, t));
      const ClassValue rhs = algebra.product(algebra.bracket(u, v), t) +
                             Scalar(sign_of_power((p - 1) * q)) * algebra.product(v, algebra.bracket(u, t));
      leibniz.record(lhs == rhs, where, lhs, rhs);
    });
    attempt(grading, [&] {
      const ClassValue expected{p + q - 1, u.bg + v.bg, 0};
      const ClassValue computed = algebra.bracket(u, v);
      const auto free = algebra.bracket_free_bidegree(u, v);
      const bool ok = computed.bc == expected.bc && computed.bg == expected.bg &&
                      (!free || (free->first == expected.bc && free->second == expected.bg));
      grading.record(ok, where, computed, expected);
    });
  }

  for (const CaseTally* tally : {&commutativity, &associativity, &antisymmetry, &jacobi, &leibniz, &grading}) {
    report.checks.push_back(tally->result());
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"virasoro", "anomaly", "lemma53", "thm55", "bracket", "dot", "identities", "all"};
  return names;
}

std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options) {
  using Runner = SuiteReport (*)(const SuiteOptions&);
  static const std::vector<std::pair<std::string_view, Runner>> runners = {
      {"virasoro", virasoro_suite}, {"anomaly", anomaly_suite}, {"lemma53", lemma53_suite}, {"thm55", thm55_suite},
      {"bracket", bracket_suite},   {"dot", dot_suite},         {"identities", identities_suite}};
  std::vector<SuiteReport> out;
  for (const auto& [suite, run] : runners) {
    if (name == "all" || name == suite) out.push_back(run(options));
  }
  if (out.empty()) throw UsageError("unknown suite '" + std::string(name) + "'");
  return out;
}

std::vector<BracketConstant> bracket_table(int nmax) {
  if (nmax < 0) throw UsageError("--nmax must be nonnegative");
  WeilComplex complex(brst_context(2));
  ClassAlgebra algebra(complex);
  std::vector<BracketConstant> out;
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= nmax; ++m) {
      const ClassValue xn{0, n, 1}, xm{0, m, 1}, yn{1, n, 1}, ym{1, m, 1};
      auto coefficient = [&](const ClassValue& value, int bc) {
        const ClassValue b = algebra.bracket(value, bc == 0 ? xm : ym);
        return b.coeff;
      };
      // {x^n, x^m} lands in bc degree -1, where the group vanishes.
      out.push_back({"x^n,x^m", n, m, algebra.bracket(xn, xm).coeff, 0});
      out.push_back({"yx^n,x^m", n, m, coefficient(yn, 0), Scalar(n - m)});
      out.push_back({"yx^n,yx^m", n, m, coefficient(yn, 1), Scalar(n - m)});
    }
  }
  return out;
}

}  // namespace gw::cli
