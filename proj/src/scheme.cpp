#include "permstat/scheme.hpp"

#include <algorithm>
#include <array>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

constexpr int kMaxStateLen = 64;

std::uint32_t base_coefficient(RuleKind kind, int i, int m, const std::uint16_t* a,
                               const std::uint16_t* b) {
  switch (kind) {
    case RuleKind::Asc123:
      return static_cast<std::uint32_t>(a[i - 1]) * static_cast<std::uint32_t>(m - i);
    case RuleKind::Asc132: {
      std::uint32_t s = 0;
      for (int j = 0; j < i - 1; ++j) s += a[j];
      return s;
    }
    case RuleKind::Desc231: {
      std::uint32_t s = 0;
      for (int j = 1; j < i; ++j) s += static_cast<std::uint32_t>(j) * a[j];
      return s;
    }
    case RuleKind::Asc1234:
      return static_cast<std::uint32_t>(b[i - 1]) * static_cast<std::uint32_t>(m - i);
  }
  return 0;
}

void base_successor(RuleKind kind, int i, int m, const std::uint16_t* a, const std::uint16_t* b,
                    std::uint16_t* na, std::uint16_t* nb) {
  switch (kind) {
    case RuleKind::Asc123:
    case RuleKind::Asc132:
      for (int j = 0; j < i - 1; ++j) na[j] = a[j];
      for (int j = i; j < m; ++j) na[j - 1] = static_cast<std::uint16_t>(a[j] + 1);
      return;
    case RuleKind::Desc231:
      if (i == m) {
        for (int j = 0; j < m - 1; ++j) na[j] = a[j];
      } else {
        for (int j = 0; j < i - 1; ++j) na[j] = a[j];
        na[i - 1] = static_cast<std::uint16_t>(a[i - 1] + a[i] + 1);
        for (int j = i + 1; j < m; ++j) na[j - 1] = a[j];
      }
      return;
    case RuleKind::Asc1234:
      for (int j = 0; j < i - 1; ++j) na[j] = a[j];
      for (int j = i; j < m; ++j) na[j - 1] = static_cast<std::uint16_t>(a[j] + 1);
      for (int j = 0; j < i - 1; ++j) nb[j] = b[j];
      for (int j = i; j < m; ++j) nb[j - 1] = static_cast<std::uint16_t>(b[j] + a[i - 1]);
      return;
  }
}

}  // namespace

std::uint32_t rule_coefficient(RuleKind kind, bool mirrored, int i, int m,
                               const std::uint16_t* a, const std::uint16_t* b) {
  if (!mirrored) return base_coefficient(kind, i, m, a, b);
  std::uint16_t ra[kMaxStateLen], rb[kMaxStateLen];
  std::reverse_copy(a, a + m, ra);
  if (b) std::reverse_copy(b, b + m, rb);
  return base_coefficient(kind, m + 1 - i, m, ra, b ? rb : nullptr);
}

void rule_successor(RuleKind kind, bool mirrored, int i, int m, const std::uint16_t* a,
                    const std::uint16_t* b, std::uint16_t* na, std::uint16_t* nb) {
  if (!mirrored) {
    base_successor(kind, i, m, a, b, na, nb);
    return;
  }
  std::uint16_t ra[kMaxStateLen], rb[kMaxStateLen];
  std::reverse_copy(a, a + m, ra);
  if (b) std::reverse_copy(b, b + m, rb);
  base_successor(kind, m + 1 - i, m, ra, b ? rb : nullptr, na, nb);
  std::reverse(na, na + m - 1);
  if (b) std::reverse(nb, nb + m - 1);
}

Scheme scheme_for(const Pattern& p) {
  const std::string s = p.str();
  if (s == "123") return Scheme(p, RuleKind::Asc123, false);
  if (s == "132") return Scheme(p, RuleKind::Asc132, false);
  if (s == "231") return Scheme(p, RuleKind::Desc231, false);
  if (s == "1234") return Scheme(p, RuleKind::Asc1234, false);
  if (s == "321") return Scheme(p, RuleKind::Asc123, true);
  if (s == "312") return Scheme(p, RuleKind::Asc132, true);
  if (s == "213") return Scheme(p, RuleKind::Desc231, true);
  throw NotRegisteredError("no functional-equation scheme registered for pattern " + s);
}

bool scheme_registered(const Pattern& p) {
  static const std::array<const char*, 7> known = {"123", "132", "213", "231",
                                                   "312", "321", "1234"};
  return std::find(known.begin(), known.end(), p.str()) != known.end();
}

std::vector<Pattern> registered_patterns() {
  std::vector<Pattern> out;
  for (const char* s : {"123", "132", "213", "231", "312", "321", "1234"})
    out.push_back(Pattern::parse(s));
  return out;
}

MergedScheme MergedScheme::merge(std::vector<Scheme> components) {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (components[i].pattern() == components[j].pattern())
        throw InvalidMergeError("duplicate pattern in merge: " + components[i].pattern().str());
  MergedScheme ms;
  ms.components_ = std::move(components);
  return ms;
}

MergedScheme MergedScheme::for_patterns(const std::vector<Pattern>& patterns) {
  std::vector<Scheme> comps;
  comps.reserve(patterns.size());
  for (const auto& p : patterns) comps.push_back(scheme_for(p));
  return merge(std::move(comps));
}

int MergedScheme::component_index(const Pattern& p) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].pattern() == p) return static_cast<int>(i);
  return -1;
}

std::string MergedScheme::id() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += '+';
    out += c.pattern().str();
  }
  return out;
}

}  // namespace permstat
