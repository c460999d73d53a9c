#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "trisurf/errors.hpp"

namespace trisurf {

enum class Exec { Serial, Parallel };

// Exact values tau(n,g) for 0 <= n <= max_n, 0 <= g <= min(max_g, (n+1)/2).
//
// tau(n,g) depends only on entries with smaller n and genus <= g, so capping
// the genus yields exact values for every stored entry.
class CountTable {
 public:
  explicit CountTable(int max_n, int max_g = -1, Exec exec = Exec::Serial);

  int max_n() const { return max_n_; }
  int max_g() const { return max_g_; }

  // Zero outside 0 <= g <= (n+1)/2. Throws RangeRefusal when (n,g) lies in
  // the admissible range but beyond the fill bounds.
  const mpz_class& tau(int n, int g) const;

  // (n+1)tau(n,g) from the right-hand side of the recurrence, computed afresh.
  mpz_class recurrence_rhs(int n, int g) const;

 private:
  void fill_row(int n, Exec exec);
  mpz_class rhs(int n, int g) const;

  int max_n_;
  int max_g_;
  std::vector<std::vector<mpz_class>> rows_;
  // weights_[n][g] = (3n+2) tau(n,g)
  std::vector<std::vector<mpz_class>> weights_;
};

inline int genus_cap(int n) { return n < 0 ? -1 : (n + 1) / 2; }

// Table reused across calls, grown on demand. Not thread-safe while growing.
const CountTable& shared_table(int max_n, int max_g = -1);

// Exact tau via the shared table.
mpz_class tau(int n, int g);

double log_mpz(const mpz_class& v);

// Partial sum of H(x) = sum_k x^k (3k+2) tau(k,0) through k = K.
double h_truncated(double x, int K);
// Stops once the next term is below 1e-15 of the partial sum (at most 200
// terms). Throws DomainError if x is not below lambda_est(200,0).
double h_default(double x, int* terms_used = nullptr);

double lambda_est(const CountTable& t, int n, int g);
double psi_direct(const CountTable& t, int n, int g);
// (1 - 12l - 24l^2 H(l)) / (36 l^2), H truncated at K. Solving the leading
// order balance of the recurrence for n^2 tau(n,g-1)/tau(n,g) gives this
// denominator; psi_formula_literal divides once more by l^2.
double psi_formula(double lambda_hat, int K);
double psi_formula_literal(double lambda_hat, int K);
double f_est(const CountTable& t, int n, int g);

struct RatioRow {
  double theta = 0;
  int n = 0;
  int g = 0;
  double lambda = 0;
  double psi_direct = 0;
  double psi_formula = 0;
  double f_est = 0;
  double gap = 0;
};

struct ConsistencyReport {
  std::vector<RatioRow> rows;
  // exp(-f'(theta)) by a central difference in g at the largest n.
  std::optional<double> exp_minus_fprime;
};

int genus_for(double theta, int n);

ConsistencyReport psi_consistency_report(const CountTable& t, double theta,
                                         const std::vector<int>& n_list, int K);

}  // namespace trisurf
