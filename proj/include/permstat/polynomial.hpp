#ifndef PERMSTAT_POLYNOMIAL_HPP
#define PERMSTAT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace permstat {

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients; exponents are nonnegative. This is the joint distribution
// carrier: the coefficient of t1^e1...tm^em is the number of permutations
// whose tracked pattern counts are (e1..em).
class JointPolynomial {
public:
  using Monomial = std::vector<std::uint32_t>;
  using TermMap = std::map<Monomial, mpz_class>;

  JointPolynomial() = default;
  explicit JointPolynomial(int var_count) : var_count_(var_count) {}

  static JointPolynomial constant(int var_count, mpz_class value);

  int var_count() const { return var_count_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates; drops the term if the coefficient cancels to zero.
  void add_term(Monomial mono, const mpz_class& coeff);

  mpz_class coefficient(const Monomial& mono) const;

  // Evaluation at all variables = 1.
  mpz_class sum_of_coefficients() const;

  std::uint32_t max_total_degree() const;

  // Coefficient of var^exponent, as a polynomial in the remaining variables.
  JointPolynomial coefficient_slice(int var, std::uint32_t exponent) const;

  // Result's variable j receives this polynomial's variable var_map[j];
  // var_map must be a permutation of 0..var_count-1.
  JointPolynomial relabeled(const std::vector<int>& var_map) const;

  // Substitute t_v = 1 + u_v in every variable and truncate beyond total
  // degree `order` in the u's.
  JointPolynomial shifted_about_one(unsigned order) const;

  // Human-readable form like "5 + t" or "3 + t + s". Default names: t for
  // one variable, s,t for two, t1..tm otherwise.
  std::string str(std::vector<std::string> names = {}) const;

  friend bool operator==(const JointPolynomial&, const JointPolynomial&) = default;

private:
  int var_count_ = 0;
  TermMap terms_;
};

std::vector<std::string> default_var_names(int var_count);

}  // namespace permstat

#endif
