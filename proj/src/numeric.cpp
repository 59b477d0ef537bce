#include "permstat/numeric.hpp"

#include <stdexcept>
#include <vector>

#include "permstat/errors.hpp"

namespace permstat {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class binomial(const mpz_class& n, unsigned k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

mpz_class catalan(unsigned n) {
  return binomial(2 * n, n) / (n + 1);
}

mpz_class stirling2(unsigned r, unsigned j) {
  if (j > r) return 0;
  if (r == 0) return j == 0 ? 1 : 0;
  if (j == 0) return 0;
  // S(r, j) = j*S(r-1, j) + S(r-1, j-1)
  std::vector<mpz_class> row(r + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (unsigned rr = 1; rr <= r; ++rr) {
    for (unsigned jj = rr; jj >= 1; --jj)
      row[jj] = mpz_class(jj) * row[jj] + row[jj - 1];
    row[0] = 0;
  }
  return row[j];
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw InvalidInputError("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q) {
  return q.get_str();
}

namespace {

mpz_class pow10(int digits) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned>(digits));
  return r;
}

std::string format_scaled(const mpz_class& units, int sign, int digits) {
  // units = |value| * 10^digits, already rounded to an integer
  mpz_class scale = pow10(digits);
  mpz_class ip = units / scale;
  mpz_class fp = units % scale;
  std::string out;
  if (sign < 0 && units != 0) out += '-';
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace

std::string render_decimal(const mpq_class& value, int digits) {
  if (digits < 0) throw InvalidInputError("digits must be >= 0");
  mpq_class v = abs(value);
  mpz_class p = v.get_num() * pow10(digits);
  const mpz_class& q = v.get_den();
  // round half away from zero: floor((2p + q) / 2q)
  mpz_class units = (2 * p + q) / (2 * q);
  return format_scaled(units, sgn(value), digits);
}

std::optional<mpq_class> exact_sqrt(const mpq_class& value) {
  if (value < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(sn, sd);
}

std::string render_sqrt_decimal(const mpq_class& value, int sign, int digits) {
  if (value < 0) throw InvalidInputError("sqrt of negative rational");
  if (digits < 0) throw InvalidInputError("digits must be >= 0");
  // Want round(sqrt(p/q) * 10^d). Let A = p*10^(2d); then the target is
  // round(sqrt(A/q)). With t = floor(sqrt(A*q)), sqrt(A/q) = sqrt(A*q)/q lies
  // in [t/q, (t+1)/q); candidate N = floor((t + ... )/...). Resolve the
  // half-boundary exactly: N is the unique integer with
  // (2N-1)^2 * q <= 4A  and  4A < (2N+1)^2 * q   (ties go up = away from 0).
  mpz_class A = value.get_num() * pow10(2 * digits);
  const mpz_class& q = value.get_den();
  mpz_class Aq = A * q;
  mpz_class t;
  mpz_sqrt(t.get_mpz_t(), Aq.get_mpz_t());
  // initial guess from floor: N in { floor((t+q)/(2q)) , that+1 }
  mpz_class N = (t + q) / (2 * q);
  while ((2 * N + 1) * (2 * N + 1) * q <= 4 * A) ++N;
  while (N > 0 && (2 * N - 1) * (2 * N - 1) * q > 4 * A) --N;
  return format_scaled(N, value == 0 ? 0 : sign, digits);
}

}  // namespace permstat
