#ifndef PERMSTAT_PERMUTATION_HPP
#define PERMSTAT_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace permstat {

// A permutation of {1..n}, stored one-line. Patterns are just short
// permutations, so one type covers both.
class Permutation {
public:
  Permutation() = default;

  // Validates that values is a bijection of {1..n}.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  // Identity of length n.
  static Permutation identity(int n);

  // Parses a digit string like "132" or "1234". Lengths above 9 are not
  // expressible this way and are rejected.
  static Permutation parse(const std::string& digits);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int pos) const { return values_[static_cast<std::size_t>(pos)]; }  // 0-based
  const std::vector<int>& values() const { return values_; }

  Permutation reversed() const;
  Permutation complemented() const;
  Permutation inverted() const;

  std::string str() const;  // "132"; values > 9 rendered space-separated

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

using Pattern = Permutation;

enum class TransformKind { Reverse, Complement, Inverse };

Permutation transform(const Permutation& p, TransformKind which);

// Order-isomorphic relabeling onto {1..k}. Throws InvalidInputError on
// duplicate entries.
Permutation reduce(std::span<const double> seq);
Permutation reduce(std::span<const int> seq);

// All of S_k in lexicographic order. k <= 8 to keep sizes sane.
std::vector<Permutation> all_patterns(int k);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace permstat

#endif
