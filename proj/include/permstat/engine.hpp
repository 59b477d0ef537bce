#ifndef PERMSTAT_ENGINE_HPP
#define PERMSTAT_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permstat/oracle.hpp"
#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/scheme.hpp"

namespace permstat {

// What to do with each pattern's tracking variable.
//   Track:   keep the variable in the output polynomial.
//   SetZero: restrict to the t^0 coefficient, i.e. permutations avoiding the
//            pattern; branches that would raise the exponent are pruned.
//   SetOne:  discard the variable (the component drops out of the recursion).
enum class VarAction { Track, SetZero, SetOne };

class SpecializationMap {
public:
  SpecializationMap() = default;

  SpecializationMap& set(const Pattern& p, VarAction a) {
    actions_[p] = a;
    return *this;
  }
  // Patterns not mentioned default to SetOne.
  VarAction action_for(const Pattern& p) const {
    auto it = actions_.find(p);
    return it == actions_.end() ? VarAction::SetOne : it->second;
  }

  static SpecializationMap all_track(const MergedScheme& ms) {
    SpecializationMap sm;
    for (const auto& c : ms.components()) sm.set(c.pattern(), VarAction::Track);
    return sm;
  }

  // Stable textual form, also used in cache keys, e.g. "132=zero,312=track".
  std::string str() const;

private:
  std::map<Pattern, VarAction> actions_;
};

// Evaluation mode for tracked variables: exact polynomial, or a series about
// t = 1 (t = 1+u) truncated beyond total u-degree `order`. The truncated form
// carries the binomial moments sum_pi C(N(pi), j) for j <= order, enough to
// recover all moments up to that order exactly.
struct SeriesCenter {
  bool about_one = false;
  unsigned order = 0;

  static SeriesCenter none() { return {}; }
  static SeriesCenter one(unsigned order) { return {true, order}; }

  std::string str() const { return about_one ? "one" + std::to_string(order) : "exact"; }
};

struct EvalConfig {
  std::size_t max_states = 50'000'000;  // across all retained layers
  static constexpr int kMaxN = 64;
};

struct EvalStats {
  std::size_t total_states = 0;
  std::size_t largest_layer = 0;
};

// Expands the merged functional equation from the all-zeros state at length n
// down to the base case and propagates polynomial values back up. Output
// variables are the Track components in merged-scheme order. Memoization is
// layered: states are deduplicated per length, and value storage is released
// two layers behind the frontier.
JointPolynomial evaluate(const MergedScheme& ms, int n, const SpecializationMap& spec,
                         SeriesCenter series = {}, const EvalConfig& cfg = {},
                         EvalStats* stats = nullptr);

// --- exponent-state encoding -------------------------------------------------

// The memo key of the recursion, exposed for inspection and testing: one or
// two exponent vectors per tracked pattern, all of equal length.
struct ExponentState {
  std::vector<std::vector<std::uint16_t>> vectors;

  friend bool operator==(const ExponentState&, const ExponentState&) = default;
};

// Injective, deterministic byte encoding (and its inverse).
std::string canonical_state_key(const ExponentState& st);
ExponentState decode_state_key(const std::string& key);

// --- oracle cross-check -------------------------------------------------------

// Evaluates the all-track joint distribution for `patterns` at size n and
// compares it with the brute-force scan. On mismatch returns false and fills
// `message` with a short description.
bool engine_matches_oracle(const std::vector<Pattern>& patterns, int n, std::string* message,
                           const OracleConfig& oracle_cfg = {});

}  // namespace permstat

#endif
