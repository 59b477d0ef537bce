#include "permstat/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "permstat/errors.hpp"
#include "permstat/numeric.hpp"

namespace permstat {

JointPolynomial JointPolynomial::constant(int var_count, mpz_class value) {
  JointPolynomial p(var_count);
  if (value != 0) p.terms_.emplace(Monomial(static_cast<std::size_t>(var_count), 0), std::move(value));
  return p;
}

void JointPolynomial::add_term(Monomial mono, const mpz_class& coeff) {
  if (static_cast<int>(mono.size()) != var_count_)
    throw InvalidInputError("monomial arity mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class JointPolynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class JointPolynomial::sum_of_coefficients() const {
  mpz_class s = 0;
  for (const auto& [mono, c] : terms_) s += c;
  return s;
}

std::uint32_t JointPolynomial::max_total_degree() const {
  std::uint32_t best = 0;
  for (const auto& [mono, c] : terms_)
    best = std::max(best, std::accumulate(mono.begin(), mono.end(), 0u));
  return best;
}

JointPolynomial JointPolynomial::coefficient_slice(int var, std::uint32_t exponent) const {
  if (var < 0 || var >= var_count_) throw InvalidInputError("variable index out of range");
  JointPolynomial out(var_count_ - 1);
  for (const auto& [mono, c] : terms_) {
    if (mono[static_cast<std::size_t>(var)] != exponent) continue;
    Monomial m;
    m.reserve(mono.size() - 1);
    for (int v = 0; v < var_count_; ++v)
      if (v != var) m.push_back(mono[static_cast<std::size_t>(v)]);
    out.add_term(std::move(m), c);
  }
  return out;
}

JointPolynomial JointPolynomial::relabeled(const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != var_count_)
    throw InvalidInputError("relabel map arity mismatch");
  JointPolynomial out(var_count_);
  for (const auto& [mono, c] : terms_) {
    Monomial m(mono.size());
    for (std::size_t j = 0; j < m.size(); ++j)
      m[j] = mono[static_cast<std::size_t>(var_map[j])];
    out.add_term(std::move(m), c);
  }
  return out;
}

JointPolynomial JointPolynomial::shifted_about_one(unsigned order) const {
  JointPolynomial out(var_count_);
  // t^e = (1+u)^e = sum_j C(e,j) u^j; expand variable by variable.
  for (const auto& [mono, c] : terms_) {
    std::vector<std::pair<Monomial, mpz_class>> partial;
    partial.emplace_back(Monomial(static_cast<std::size_t>(var_count_), 0), c);
    for (int v = 0; v < var_count_; ++v) {
      std::vector<std::pair<Monomial, mpz_class>> next;
      for (const auto& [pm, pc] : partial) {
        unsigned used = std::accumulate(pm.begin(), pm.end(), 0u);
        unsigned cap = std::min<unsigned>(order - used, mono[static_cast<std::size_t>(v)]);
        for (unsigned j = 0; j <= cap; ++j) {
          Monomial m = pm;
          m[static_cast<std::size_t>(v)] = j;
          next.emplace_back(std::move(m), pc * binomial(mono[static_cast<std::size_t>(v)], j));
        }
      }
      partial = std::move(next);
    }
    for (auto& [m, pc] : partial) out.add_term(std::move(m), pc);
  }
  return out;
}

std::vector<std::string> default_var_names(int var_count) {
  if (var_count == 1) return {"t"};
  if (var_count == 2) return {"s", "t"};
  std::vector<std::string> names;
  for (int v = 1; v <= var_count; ++v) names.push_back("t" + std::to_string(v));
  return names;
}

std::string JointPolynomial::str(std::vector<std::string> names) const {
  if (terms_.empty()) return "0";
  if (names.empty()) names = default_var_names(var_count_);
  // ascending total degree, then map (lexicographic) order
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    auto da = std::accumulate(a->first.begin(), a->first.end(), 0u);
    auto db = std::accumulate(b->first.begin(), b->first.end(), 0u);
    if (da != db) return da < db;
    return b->first < a->first;  // earlier variables first within a degree
  });
  std::string out;
  for (const auto* term : order) {
    const auto& [mono, coeff] = *term;
    std::string vars;
    for (int v = 0; v < var_count_; ++v) {
      auto e = mono[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += names[static_cast<std::size_t>(v)];
      if (e > 1) vars += '^' + std::to_string(e);
    }
    std::string piece;
    if (vars.empty())
      piece = coeff.get_str();
    else if (coeff == 1)
      piece = vars;
    else if (coeff == -1)
      piece = "-" + vars;
    else
      piece = coeff.get_str() + "*" + vars;
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace permstat
