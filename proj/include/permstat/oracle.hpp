#ifndef PERMSTAT_ORACLE_HPP
#define PERMSTAT_ORACLE_HPP

#include <gmpxx.h>

#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

struct OracleConfig {
  int n_cap = 8;                    // refuse larger n
  static constexpr int kHardCap = 10;
  static constexpr int kMaxPatternLength = 6;
};

// Number of index subsequences of pi whose reduction equals sigma.
// Returns 0 when |sigma| > |pi|. This is the trusted reference everything
// else is checked against, so it stays a naive scan.
mpz_class count_occurrences(const Pattern& sigma, const Permutation& pi);

std::vector<mpz_class> joint_counts(const Permutation& pi, const std::vector<Pattern>& patterns);

// sum over pi in S_n of prod_i t_i^{N_{tau_i}(pi)}; coefficient mass is n!.
JointPolynomial brute_force_distribution(int n, const std::vector<Pattern>& patterns,
                                         const OracleConfig& cfg = {});

}  // namespace permstat

#endif
