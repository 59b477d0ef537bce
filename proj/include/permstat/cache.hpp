#ifndef PERMSTAT_CACHE_HPP
#define PERMSTAT_CACHE_HPP

#include <optional>
#include <string>

#include "permstat/engine.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/scheme.hpp"

namespace permstat {

inline constexpr int kCacheFormatVersion = 1;

// On-disk result cache: one JSON file per (scheme-set id, specialization, n,
// series mode). Coefficients are stored as decimal strings so the round trip
// is exact. A version or key mismatch is reported by load() returning nullopt
// (never a wrong polynomial). The cache is advisory; a cold cache only costs
// time.
class ResultCache {
public:
  explicit ResultCache(std::string directory) : dir_(std::move(directory)) {}

  const std::string& directory() const { return dir_; }

  void store(const std::string& scheme_set, const std::string& spec, int n,
             const std::string& series, const JointPolynomial& poly) const;

  std::optional<JointPolynomial> load(const std::string& scheme_set, const std::string& spec,
                                      int n, const std::string& series) const;

  std::vector<std::string> list_entries() const;
  void clear() const;

  std::string file_path(const std::string& scheme_set, const std::string& spec, int n,
                        const std::string& series) const;

private:
  std::string dir_;
};

// JSON text encode/decode of a polynomial (used by the cache and the CLI).
std::string polynomial_to_json(const JointPolynomial& poly);
JointPolynomial polynomial_from_json(const std::string& text);

// evaluate() with an optional read-through cache.
JointPolynomial evaluate_cached(const ResultCache* cache, const MergedScheme& ms, int n,
                                const SpecializationMap& spec, SeriesCenter series = {},
                                const EvalConfig& cfg = {});

}  // namespace permstat

#endif
