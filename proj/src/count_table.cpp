#include "trisurf/count_table.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "trisurf/errors.hpp"

namespace trisurf {

namespace {
const mpz_class kZero = 0;
constexpr int kFloatBits = 256;
constexpr int kHCap = 200;
}  // namespace

CountTable::CountTable(int max_n, int max_g, Exec exec) : max_n_(max_n), max_g_(max_g) {
  if (max_n < 0) throw DomainError("CountTable: max_n must be nonnegative");
  if (max_g_ < 0) max_g_ = genus_cap(max_n);
  rows_.resize(max_n + 1);
  weights_.resize(max_n + 1);
  for (int n = 0; n <= max_n; ++n) fill_row(n, exec);
}

const mpz_class& CountTable::tau(int n, int g) const {
  if (n < 0 || g < 0 || g > genus_cap(n)) return kZero;
  if (n > max_n_ || g > max_g_) {
    throw RangeRefusal("tau(" + std::to_string(n) + "," + std::to_string(g) + ") is beyond the filled table");
  }
  return rows_[n][g];
}

mpz_class CountTable::rhs(int n, int g) const {
  auto t = [&](int a, int b) -> const mpz_class& {
    if (a < 0 || b < 0 || b > genus_cap(a)) return kZero;
    return rows_[a][b];
  };
  mpz_class acc = 0;
  if (n >= 2 && g >= 1) acc += mpz_class(4 * n) * ((3 * n - 2) * (3 * n - 4)) * t(n - 2, g - 1);
  acc += mpz_class(4 * (3 * n - 1)) * t(n - 1, g);
  // Convolution over i + j = n - 2, g1 + g2 = g; pairs (i,g1),(j,g2) are
  // summed once and doubled, with the diagonal i = j, g1 = g2 counted once.
  mpz_class conv = 0;
  mpz_class diag = 0;
  const int m = n - 2;
  for (int i = 0; 2 * i <= m; ++i) {
    const int j = m - i;
    const auto& wi = weights_[i];
    const auto& wj = weights_[j];
    const int gi_max = std::min<int>(g, static_cast<int>(wi.size()) - 1);
    for (int g1 = 0; g1 <= gi_max; ++g1) {
      const int g2 = g - g1;
      if (g2 < 0 || g2 >= static_cast<int>(wj.size())) continue;
      if (i == j) {
        if (g1 > g2) continue;
        if (g1 == g2) {
          mpz_addmul(diag.get_mpz_t(), wi[g1].get_mpz_t(), wj[g2].get_mpz_t());
          continue;
        }
      }
      mpz_addmul(conv.get_mpz_t(), wi[g1].get_mpz_t(), wj[g2].get_mpz_t());
    }
  }
  acc += 4 * (2 * conv + diag);
  if (n == 1 && g == 1) acc += 2;
  return acc;
}

void CountTable::fill_row(int n, Exec exec) {
  const int gmax = std::min(max_g_, genus_cap(n));
  rows_[n].assign(gmax + 1, 0);
  if (n == 0) {
    rows_[0][0] = 1;
  } else if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int g = gmax; g >= 0; --g) {
      mpz_class v = rhs(n, g);
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), n + 1);
      rows_[n][g] = std::move(v);
    }
  } else {
    for (int g = 0; g <= gmax; ++g) {
      mpz_class v = rhs(n, g);
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), n + 1);
      rows_[n][g] = std::move(v);
    }
  }
  weights_[n].resize(gmax + 1);
  for (int g = 0; g <= gmax; ++g) weights_[n][g] = rows_[n][g] * (3 * n + 2);
}

mpz_class CountTable::recurrence_rhs(int n, int g) const {
  if (n < 1 || n > max_n_ || g < 0 || g > max_g_) throw RangeRefusal("recurrence_rhs: outside the filled table");
  return rhs(n, g);
}

const CountTable& shared_table(int max_n, int max_g) {
  static std::unique_ptr<CountTable> table;
  const int want_g = max_g < 0 ? genus_cap(max_n) : max_g;
  if (!table || table->max_n() < max_n || table->max_g() < std::min(want_g, genus_cap(table->max_n()))) {
    const int n = table ? std::max(max_n, table->max_n()) : max_n;
    const int g = table ? std::max(want_g, table->max_g()) : want_g;
    table = std::make_unique<CountTable>(n, g);
  }
  return *table;
}

mpz_class tau(int n, int g) {
  if (n < 0 || g < 0 || g > genus_cap(n)) return 0;
  return shared_table(n, g).tau(n, g);
}

double log_mpz(const mpz_class& v) {
  if (sgn(v) <= 0) throw DomainError("log of a nonpositive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

namespace {

mpf_class h_partial(const mpf_class& x, int K, int* used, bool adaptive) {
  const CountTable& t = shared_table(std::max(K, 1), 0);
  mpf_class sum(0, kFloatBits);
  mpf_class power(1, kFloatBits);
  const mpf_class tol("1e-15", kFloatBits);
  int k = 0;
  for (; k <= K; ++k) {
    mpf_class term(t.tau(k, 0), kFloatBits);
    term *= power;
    term *= (3 * k + 2);
    if (adaptive && k > 0 && term < tol * sum) break;
    sum += term;
    power *= x;
  }
  if (used) *used = k;
  return sum;
}

}  // namespace

double h_truncated(double x, int K) {
  if (x < 0) throw DomainError("h_truncated: x must be nonnegative");
  if (K < 0) throw DomainError("h_truncated: K must be nonnegative");
  return h_partial(mpf_class(x, kFloatBits), K, nullptr, false).get_d();
}

double h_default(double x, int* terms_used) {
  if (x < 0) throw DomainError("h_default: x must be nonnegative");
  const CountTable& t = shared_table(kHCap, 0);
  const mpq_class bound(t.tau(kHCap - 1, 0), t.tau(kHCap, 0));
  if (!(mpq_class(x) < bound)) throw DomainError("h_default: x outside the verified convergence range");
  return h_partial(mpf_class(x, kFloatBits), kHCap, terms_used, true).get_d();
}

double lambda_est(const CountTable& t, int n, int g) {
  const mpz_class& den = t.tau(n, g);
  if (sgn(den) == 0) throw DomainError("lambda_est: tau(n,g) = 0");
  mpq_class q(t.tau(n - 1, g), den);
  q.canonicalize();
  return q.get_d();
}

double psi_direct(const CountTable& t, int n, int g) {
  if (g < 1) throw DomainError("psi_direct: g must be at least 1");
  const mpz_class& den = t.tau(n, g);
  if (sgn(den) == 0) throw DomainError("psi_direct: tau(n,g) = 0");
  mpq_class q(mpz_class(n) * n * t.tau(n, g - 1), den);
  q.canonicalize();
  return q.get_d();
}

namespace {

mpf_class psi_numerator(double lambda_hat, int K) {
  if (lambda_hat == 0) throw DomainError("psi_formula: lambda = 0");
  if (lambda_hat < 0) throw DomainError("psi_formula: lambda must be positive");
  const mpf_class l(lambda_hat, kFloatBits);
  const mpf_class h = h_partial(l, K, nullptr, false);
  return mpf_class(1 - 12 * l - 24 * l * l * h, kFloatBits);
}

}  // namespace

double psi_formula(double lambda_hat, int K) {
  const mpf_class num = psi_numerator(lambda_hat, K);
  const mpf_class l(lambda_hat, kFloatBits);
  return mpf_class(num / (36 * l * l)).get_d();
}

double psi_formula_literal(double lambda_hat, int K) {
  const mpf_class num = psi_numerator(lambda_hat, K);
  const mpf_class l(lambda_hat, kFloatBits);
  return mpf_class(num / (36 * l * l * l * l)).get_d();
}

double f_est(const CountTable& t, int n, int g) {
  if (n < 1) throw DomainError("f_est: n must be at least 1");
  const mpz_class& v = t.tau(n, g);
  if (sgn(v) == 0) throw DomainError("f_est: tau(n,g) = 0");
  return (log_mpz(v) - 2.0 * g * std::log(static_cast<double>(n))) / n;
}

int genus_for(double theta, int n) { return static_cast<int>(std::lround(theta * n)); }

ConsistencyReport psi_consistency_report(const CountTable& t, double theta,
                                         const std::vector<int>& n_list, int K) {
  ConsistencyReport rep;
  for (int n : n_list) {
    RatioRow r;
    r.theta = theta;
    r.n = n;
    r.g = genus_for(theta, n);
    if (sgn(t.tau(n, r.g)) == 0) {
      throw DomainError("no triangulations at n=" + std::to_string(n) + ", g=" + std::to_string(r.g));
    }
    r.lambda = lambda_est(t, n, r.g);
    r.psi_direct = psi_direct(t, n, r.g);
    r.psi_formula = psi_formula(r.lambda, K);
    r.f_est = f_est(t, n, r.g);
    r.gap = std::abs(r.psi_direct - r.psi_formula) / r.psi_direct;
    rep.rows.push_back(r);
  }
  if (!n_list.empty()) {
    const int n = *std::max_element(n_list.begin(), n_list.end());
    const int g = genus_for(theta, n);
    if (g >= 1 && g + 1 <= genus_cap(n) && sgn(t.tau(n, g + 1)) != 0) {
      const double slope = (f_est(t, n, g + 1) - f_est(t, n, g - 1)) / (2.0 / n);
      rep.exp_minus_fprime = std::exp(-slope);
    }
  }
  return rep;
}

}  // namespace trisurf
