#include "permstat/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

// Counts subsequences matching each pattern of length k in one combined scan
// over the C(n,k) index subsets.
void count_for_length(const std::vector<int>& values, int k,
                      const std::vector<std::pair<const Pattern*, std::size_t>>& wanted,
                      std::vector<mpz_class>& out) {
  const int n = static_cast<int>(values.size());
  if (k > n || k == 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> sub(static_cast<std::size_t>(k));
  while (true) {
    for (int j = 0; j < k; ++j)
      sub[static_cast<std::size_t>(j)] = values[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
    Permutation red = reduce(std::span<const int>(sub));
    for (const auto& [pat, slot] : wanted)
      if (*pat == red) out[slot] += 1;
    // next k-combination of {0..n-1}
    int j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int l = j + 1; l < k; ++l)
      idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
  }
}

std::vector<mpz_class> joint_counts_vec(const std::vector<int>& values,
                                        const std::vector<Pattern>& patterns) {
  std::vector<mpz_class> out(patterns.size(), mpz_class(0));
  std::vector<int> lengths;
  for (const auto& p : patterns)
    if (std::find(lengths.begin(), lengths.end(), p.size()) == lengths.end())
      lengths.push_back(p.size());
  for (int k : lengths) {
    std::vector<std::pair<const Pattern*, std::size_t>> wanted;
    for (std::size_t s = 0; s < patterns.size(); ++s)
      if (patterns[s].size() == k) wanted.emplace_back(&patterns[s], s);
    count_for_length(values, k, wanted, out);
  }
  return out;
}

void check_pattern_lengths(const std::vector<Pattern>& patterns) {
  for (const auto& p : patterns)
    if (p.size() < 1 || p.size() > OracleConfig::kMaxPatternLength)
      throw InvalidInputError("oracle patterns must have length 1.." +
                              std::to_string(OracleConfig::kMaxPatternLength));
}

}  // namespace

mpz_class count_occurrences(const Pattern& sigma, const Permutation& pi) {
  if (sigma.size() == 0) throw InvalidInputError("empty pattern");
  if (sigma.size() > pi.size()) return 0;
  std::vector<mpz_class> out(1, mpz_class(0));
  std::vector<std::pair<const Pattern*, std::size_t>> wanted{{&sigma, 0}};
  count_for_length(pi.values(), sigma.size(), wanted, out);
  return out[0];
}

std::vector<mpz_class> joint_counts(const Permutation& pi, const std::vector<Pattern>& patterns) {
  for (const auto& p : patterns)
    if (p.size() == 0) throw InvalidInputError("empty pattern");
  return joint_counts_vec(pi.values(), patterns);
}

JointPolynomial brute_force_distribution(int n, const std::vector<Pattern>& patterns,
                                         const OracleConfig& cfg) {
  if (n < 0) throw InvalidInputError("n must be >= 0");
  const int cap = std::min(cfg.n_cap, OracleConfig::kHardCap);
  if (n > cap)
    throw CapacityError("brute-force oracle capped at n = " + std::to_string(cap) +
                        " (requested " + std::to_string(n) + ")");
  check_pattern_lengths(patterns);

  const int m = static_cast<int>(patterns.size());
  JointPolynomial dist(m);
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  do {
    auto counts = joint_counts_vec(values, patterns);
    JointPolynomial::Monomial mono(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v)
      mono[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(counts[static_cast<std::size_t>(v)].get_ui());
    dist.add_term(std::move(mono), 1);
  } while (std::next_permutation(values.begin(), values.end()));
  return dist;
}

}  // namespace permstat
