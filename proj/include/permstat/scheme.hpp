#ifndef PERMSTAT_SCHEME_HPP
#define PERMSTAT_SCHEME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// The four recursion rules with derived (position-mirrored) variants. Each
// rule rewrites a length-m catalytic exponent state into length m-1 successor
// states, one per insertion choice i, together with the exponent the summand
// contributes to the tracking variable:
//
//   Asc123  (123):  coeff a_i*(m-i);        successor drops a_i, +1 on the tail
//   Asc132  (132):  coeff a_1+...+a_{i-1};  successor as for 123
//   Desc231 (231):  coeff sum (j-1)a_j, j<=i; successor fuses a_i,a_{i+1} into
//                   a_i+a_{i+1}+1 (for i=m it just drops a_m)
//   Asc1234 (1234): two vectors; coeff b_i*(m-i); a as for 123, b drops b_i
//                   and adds a_i to the tail
//
// A mirrored scheme runs the base rule at index m+1-i on reversed vectors and
// reverses the result; it tracks the complemented pattern in lockstep with
// the same insertion index, which is what makes merged schemes line up.
enum class RuleKind { Asc123, Asc132, Desc231, Asc1234 };

class Scheme {
public:
  Scheme(Pattern pattern, RuleKind kind, bool mirrored)
      : pattern_(std::move(pattern)), kind_(kind), mirrored_(mirrored) {}

  const Pattern& pattern() const { return pattern_; }
  RuleKind kind() const { return kind_; }
  bool mirrored() const { return mirrored_; }
  int vector_count() const { return kind_ == RuleKind::Asc1234 ? 2 : 1; }

private:
  Pattern pattern_;
  RuleKind kind_;
  bool mirrored_;
};

// Registered schemes: 123, 132, 231, 1234 directly; 321, 312, 213 by
// mirroring. Throws NotRegisteredError otherwise.
Scheme scheme_for(const Pattern& p);
bool scheme_registered(const Pattern& p);
std::vector<Pattern> registered_patterns();

// One functional equation over the concatenated states of several patterns,
// advancing all components with a shared insertion index.
class MergedScheme {
public:
  static MergedScheme merge(std::vector<Scheme> components);
  static MergedScheme for_patterns(const std::vector<Pattern>& patterns);

  const std::vector<Scheme>& components() const { return components_; }
  int component_index(const Pattern& p) const;  // -1 if absent
  std::string id() const;                       // e.g. "123+132"

private:
  std::vector<Scheme> components_;
};

// Low-level rule application, shared by the evaluator and by tests that walk
// states directly. State vectors are uint16 exponent arrays of length m; the
// successor has length m-1. `b`/`nb` are only used by two-vector rules.
// Returns the coefficient exponent of summand i (1-based).
std::uint32_t rule_coefficient(RuleKind kind, bool mirrored, int i, int m,
                               const std::uint16_t* a, const std::uint16_t* b);
void rule_successor(RuleKind kind, bool mirrored, int i, int m,
                    const std::uint16_t* a, const std::uint16_t* b,
                    std::uint16_t* na, std::uint16_t* nb);

}  // namespace permstat

#endif
