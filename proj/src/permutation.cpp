#include "permstat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

void check_is_permutation(const std::vector<int>& v) {
  std::vector<bool> seen(v.size(), false);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x - 1)])
      throw InvalidInputError("not a permutation of 1..n");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

template <typename T>
Permutation reduce_impl(std::span<const T> seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return seq[static_cast<std::size_t>(a)] < seq[static_cast<std::size_t>(b)];
  });
  std::vector<int> out(seq.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && !(seq[static_cast<std::size_t>(order[rank - 1])] <
                      seq[static_cast<std::size_t>(order[rank])]))
      throw InvalidInputError("reduce: entries must be distinct");
    out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_is_permutation(values_);
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& digits) {
  std::vector<int> v;
  v.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9')
      throw InvalidInputError("pattern must be a digit string like '132': '" + digits + "'");
    v.push_back(c - '0');
  }
  if (v.empty()) throw InvalidInputError("empty pattern");
  return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
  std::vector<int> v(values_.rbegin(), values_.rend());
  return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
  std::vector<int> v(values_.size());
  const int n = size();
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = n + 1 - values_[i];
  return Permutation(std::move(v));
}

Permutation Permutation::inverted() const {
  std::vector<int> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    v[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string out;
  const bool wide = size() > 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (wide && i > 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation transform(const Permutation& p, TransformKind which) {
  switch (which) {
    case TransformKind::Reverse: return p.reversed();
    case TransformKind::Complement: return p.complemented();
    case TransformKind::Inverse: return p.inverted();
  }
  throw InvalidInputError("unknown transform");
}

Permutation reduce(std::span<const double> seq) { return reduce_impl(seq); }
Permutation reduce(std::span<const int> seq) { return reduce_impl(seq); }

std::vector<Permutation> all_patterns(int k) {
  if (k < 0 || k > 8) throw InvalidInputError("all_patterns: k out of range");
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.str();
}

}  // namespace permstat
