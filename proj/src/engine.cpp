#include "permstat/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <unordered_map>

#include "permstat/compact_int.hpp"
#include "permstat/errors.hpp"
#include "permstat/numeric.hpp"

namespace permstat {

std::string SpecializationMap::str() const {
  std::string out;
  for (const auto& [p, a] : actions_) {
    if (!out.empty()) out += ',';
    out += p.str();
    out += '=';
    out += a == VarAction::Track ? "track" : (a == VarAction::SetZero ? "zero" : "one");
  }
  return out.empty() ? "all-one" : out;
}

namespace {

struct Component {
  RuleKind kind;
  bool mirrored;
  int vec_count;
  bool avoid;      // SetZero: prune summands whose coefficient is positive
  int track_var;   // output variable index, or -1
  int vec_offset;  // index of this component's first vector in the state
};

struct MonoCodec {
  std::vector<int> shifts;            // per tracked variable
  std::vector<std::uint64_t> bounds;  // max exponent per variable
  std::uint64_t max_packed = 0;

  static MonoCodec build(const std::vector<std::uint32_t>& var_bounds) {
    MonoCodec c;
    int total_bits = 0;
    std::vector<int> widths;
    for (auto b : var_bounds) {
      int w = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(b))));
      widths.push_back(w);
      total_bits += w;
    }
    if (total_bits > 64)
      throw CapacityError("tracked monomials do not fit 64-bit packing (" +
                          std::to_string(total_bits) + " bits); reduce tracked patterns or n");
    c.shifts.resize(var_bounds.size());
    int pos = 0;
    for (std::size_t v = var_bounds.size(); v-- > 0;) {
      c.shifts[v] = pos;
      pos += widths[v];
    }
    for (std::size_t v = 0; v < var_bounds.size(); ++v) {
      c.bounds.push_back(var_bounds[v]);
      c.max_packed += static_cast<std::uint64_t>(var_bounds[v]) << c.shifts[v];
    }
    return c;
  }

  std::uint64_t pack1(std::size_t var, std::uint32_t e) const {
    return static_cast<std::uint64_t>(e) << shifts[var];
  }

  JointPolynomial::Monomial unpack(std::uint64_t m) const {
    JointPolynomial::Monomial mono(shifts.size());
    for (std::size_t v = 0; v < shifts.size(); ++v) {
      std::uint64_t width_mask =
          bounds[v] == 0 ? 1 : ((std::uint64_t{1} << std::bit_width(bounds[v])) - 1);
      mono[v] = static_cast<std::uint32_t>((m >> shifts[v]) & width_mask);
    }
    return mono;
  }

  unsigned total_degree(std::uint64_t m) const {
    unsigned d = 0;
    for (std::size_t v = 0; v < shifts.size(); ++v) {
      std::uint64_t width_mask =
          bounds[v] == 0 ? 1 : ((std::uint64_t{1} << std::bit_width(bounds[v])) - 1);
      d += static_cast<unsigned>((m >> shifts[v]) & width_mask);
    }
    return d;
  }
};

using Term = std::pair<std::uint64_t, CompactZ>;
using Poly = std::vector<Term>;  // sorted by packed monomial

struct Layer {
  int len = 0;     // state vector length
  int stride = 0;  // uint16 entries per state
  std::vector<std::uint16_t> flat;

  std::size_t count() const { return stride == 0 ? 1 : flat.size() / static_cast<std::size_t>(stride); }
  const std::uint16_t* state(std::size_t idx) const {
    return flat.data() + idx * static_cast<std::size_t>(stride);
  }
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view sv) const { return std::hash<std::string_view>{}(sv); }
  std::size_t operator()(const std::string& s) const { return std::hash<std::string_view>{}(s); }
};
using IndexMap = std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>>;

std::string_view state_bytes(const std::uint16_t* data, int stride) {
  return {reinterpret_cast<const char*>(data), static_cast<std::size_t>(stride) * 2};
}

IndexMap build_index(const Layer& layer) {
  IndexMap map;
  map.reserve(layer.count());
  for (std::size_t s = 0; s < layer.count(); ++s)
    map.emplace(std::string(state_bytes(layer.state(s), layer.stride)),
                static_cast<std::uint32_t>(s));
  return map;
}

class Evaluator {
public:
  Evaluator(const MergedScheme& ms, int n, const SpecializationMap& spec, SeriesCenter series,
            const EvalConfig& cfg)
      : n_(n), series_(series), cfg_(cfg) {
    if (n < 0) throw InvalidInputError("n must be >= 0");
    if (n > EvalConfig::kMaxN)
      throw InvalidInputError("n exceeds the engine hard cap of " +
                              std::to_string(EvalConfig::kMaxN));
    int vec_offset = 0;
    std::vector<std::uint32_t> var_bounds;
    for (const auto& sc : ms.components()) {
      VarAction action = spec.action_for(sc.pattern());
      if (action == VarAction::SetOne) continue;  // variable discarded, component drops out
      Component c{sc.kind(), sc.mirrored(), sc.vector_count(), action == VarAction::SetZero, -1,
                  vec_offset};
      if (action == VarAction::Track) {
        c.track_var = static_cast<int>(var_bounds.size());
        std::uint32_t bound = series_.about_one
                                  ? series_.order
                                  : static_cast<std::uint32_t>(
                                        binomial(static_cast<unsigned>(n),
                                                 static_cast<unsigned>(sc.pattern().size()))
                                            .get_ui());
        var_bounds.push_back(bound);
      }
      vec_offset += c.vec_count;
      comps_.push_back(c);
    }
    total_vecs_ = vec_offset;
    codec_ = MonoCodec::build(var_bounds);
  }

  int var_count() const { return static_cast<int>(codec_.shifts.size()); }

  JointPolynomial run(EvalStats* stats) {
    if (n_ <= 1) {
      if (stats) *stats = EvalStats{1, 1};
      return JointPolynomial::constant(var_count(), 1);
    }
    expand_layers();
    if (stats) *stats = EvalStats{total_states_, largest_layer_};
    return propagate_values();
  }

private:
  // ---- phase 1: downward reachability --------------------------------------

  void expand_layers() {
    layers_.assign(static_cast<std::size_t>(n_) + 1, Layer{});
    Layer& top = layers_[static_cast<std::size_t>(n_)];
    top.len = n_;
    top.stride = total_vecs_ * n_;
    top.flat.assign(static_cast<std::size_t>(top.stride), 0);
    total_states_ = largest_layer_ = 1;

    std::vector<std::uint16_t> succ(static_cast<std::size_t>(std::max(0, total_vecs_ * (n_ - 1))));
    for (int len = n_; len >= 2; --len) {
      const Layer& cur = layers_[static_cast<std::size_t>(len)];
      Layer& next = layers_[static_cast<std::size_t>(len - 1)];
      next.len = len - 1;
      next.stride = total_vecs_ * (len - 1);
      IndexMap seen;
      for (std::size_t s = 0; s < cur.count(); ++s) {
        const std::uint16_t* st = cur.state(s);
        for (int i = 1; i <= len; ++i) {
          if (!successor(st, len, i, succ.data(), nullptr)) continue;
          auto sv = state_bytes(succ.data(), next.stride);
          if (next.stride == 0) break;  // no components: one (empty) state per layer
          if (seen.find(sv) == seen.end()) {
            seen.emplace(std::string(sv), static_cast<std::uint32_t>(next.count()));
            next.flat.insert(next.flat.end(), succ.begin(),
                             succ.begin() + static_cast<std::ptrdiff_t>(next.stride));
          }
        }
      }
      std::size_t cnt = next.count();
      largest_layer_ = std::max(largest_layer_, cnt);
      total_states_ += cnt;
      if (total_states_ > cfg_.max_states)
        throw CapacityError("state budget of " + std::to_string(cfg_.max_states) +
                                " memo entries exceeded at layer " + std::to_string(len - 1) +
                                " (largest layer so far: " + std::to_string(largest_layer_) +
                                " states)",
                            len - 1, largest_layer_);
    }
  }

  // Applies every component's rule for summand i. Returns false if a SetZero
  // component contributes a positive exponent (pruned branch). When `out` is
  // non-null the successor state is written there; when `coeffs` is non-null
  // the tracked coefficient exponents are written there.
  bool successor(const std::uint16_t* st, int len, int i, std::uint16_t* out,
                 std::uint32_t* coeffs) const {
    for (const auto& c : comps_) {
      const std::uint16_t* a = st + c.vec_offset * len;
      const std::uint16_t* b = c.vec_count == 2 ? a + len : nullptr;
      std::uint32_t ce = rule_coefficient(c.kind, c.mirrored, i, len, a, b);
      if (c.avoid) {
        if (ce > 0) return false;
      } else if (coeffs) {
        coeffs[c.track_var] = ce;
      }
      if (out) {
        std::uint16_t* na = out + c.vec_offset * (len - 1);
        std::uint16_t* nb = c.vec_count == 2 ? na + (len - 1) : nullptr;
        rule_successor(c.kind, c.mirrored, i, len, a, b, na, nb);
        if (c.avoid)  // only positivity matters for pruned components
          for (int j = 0; j < c.vec_count * (len - 1); ++j)
            na[j] = std::min<std::uint16_t>(na[j], 1);
      }
    }
    return true;
  }

  // ---- phase 2: upward value propagation ------------------------------------

  JointPolynomial propagate_values() {
    std::vector<Poly> values(layers_[1].count());
    for (auto& p : values) p.push_back({0, CompactZ(1)});

    const bool dense = codec_.max_packed < (std::uint64_t{1} << 22);
    std::vector<CompactZ> acc;
    std::vector<std::uint64_t> touched;
    if (dense) acc.resize(static_cast<std::size_t>(codec_.max_packed) + 1);

    std::vector<std::uint16_t> succ(static_cast<std::size_t>(total_vecs_) *
                                    static_cast<std::size_t>(n_));
    std::vector<std::uint32_t> coeffs(codec_.shifts.size());

    for (int len = 2; len <= n_; ++len) {
      const Layer& cur = layers_[static_cast<std::size_t>(len)];
      const Layer& child_layer = layers_[static_cast<std::size_t>(len - 1)];
      IndexMap child_index = build_index(child_layer);
      std::vector<Poly> next_values(cur.count());

      for (std::size_t s = 0; s < cur.count(); ++s) {
        const std::uint16_t* st = cur.state(s);
        touched.clear();
        std::vector<std::pair<std::uint64_t, CompactZ>> gather;
        for (int i = 1; i <= len; ++i) {
          if (!successor(st, len, i, succ.data(), coeffs.data())) continue;
          const Poly* child;
          if (child_layer.stride == 0) {
            child = &values[0];
          } else {
            auto it = child_index.find(state_bytes(succ.data(), child_layer.stride));
            if (it == child_index.end())
              throw InternalError("successor state missing from reachability layer");
            child = &values[it->second];
          }
          if (!series_.about_one) {
            std::uint64_t delta = 0;
            for (std::size_t v = 0; v < coeffs.size(); ++v) delta += codec_.pack1(v, coeffs[v]);
            for (const auto& [m, c] : *child) {
              std::uint64_t mono = m + delta;
              if (dense) {
                if (acc[mono].is_zero()) touched.push_back(mono);
                acc[mono].add(c);
              } else {
                gather.emplace_back(mono, c);
              }
            }
          } else {
            expand_series(*child, coeffs, dense, acc, touched, gather);
          }
        }
        next_values[s] = collect(dense, acc, touched, gather);
      }
      values = std::move(next_values);
    }
    // top layer has exactly one state: the all-zeros initial state
    JointPolynomial out(var_count());
    for (const auto& [m, c] : values[0]) out.add_term(codec_.unpack(m), c.to_mpz());
    return out;
  }

  // child * prod_v (1+u_v)^{c_v}, truncated beyond total degree series_.order
  void expand_series(const Poly& child, const std::vector<std::uint32_t>& coeffs, bool dense,
                     std::vector<CompactZ>& acc, std::vector<std::uint64_t>& touched,
                     std::vector<std::pair<std::uint64_t, CompactZ>>& gather) {
    const unsigned R = series_.order;
    for (const auto& [m0, c0] : child) {
      unsigned used = codec_.total_degree(m0);
      // depth-first over variables, tracking the remaining degree budget
      struct Frame {
        std::uint64_t mono;
        mpz_class scale;
        unsigned used;
      };
      std::vector<Frame> stack{{m0, mpz_class(1), used}};
      for (std::size_t v = 0; v < coeffs.size(); ++v) {
        std::vector<Frame> next;
        for (const auto& f : stack) {
          unsigned cap = std::min<unsigned>(R - f.used, coeffs[v]);
          for (unsigned j = 0; j <= cap; ++j)
            next.push_back({f.mono + codec_.pack1(v, j), f.scale * binom_cached(coeffs[v], j),
                            f.used + j});
        }
        stack = std::move(next);
      }
      for (const auto& f : stack) {
        CompactZ val;
        val.add_product(c0, f.scale);
        if (dense) {
          if (acc[f.mono].is_zero()) touched.push_back(f.mono);
          acc[f.mono].add(val);
        } else {
          gather.emplace_back(f.mono, std::move(val));
        }
      }
    }
  }

  const mpz_class& binom_cached(std::uint32_t c, std::uint32_t j) {
    std::uint64_t key = (static_cast<std::uint64_t>(c) << 32) | j;
    auto it = binom_cache_.find(key);
    if (it == binom_cache_.end()) it = binom_cache_.emplace(key, binomial(c, j)).first;
    return it->second;
  }

  static Poly collect(bool dense, std::vector<CompactZ>& acc, std::vector<std::uint64_t>& touched,
                      std::vector<std::pair<std::uint64_t, CompactZ>>& gather) {
    Poly out;
    if (dense) {
      std::sort(touched.begin(), touched.end());
      out.reserve(touched.size());
      for (auto m : touched) {
        out.emplace_back(m, std::move(acc[m]));
        acc[m] = CompactZ();
      }
    } else {
      std::sort(gather.begin(), gather.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (auto& [m, c] : gather) {
        if (!out.empty() && out.back().first == m)
          out.back().second.add(c);
        else
          out.emplace_back(m, std::move(c));
      }
    }
    return out;
  }

  int n_;
  SeriesCenter series_;
  EvalConfig cfg_;
  std::vector<Component> comps_;
  int total_vecs_ = 0;
  MonoCodec codec_;
  std::vector<Layer> layers_;
  std::size_t total_states_ = 0;
  std::size_t largest_layer_ = 0;
  std::unordered_map<std::uint64_t, mpz_class> binom_cache_;
};

}  // namespace

JointPolynomial evaluate(const MergedScheme& ms, int n, const SpecializationMap& spec,
                         SeriesCenter series, const EvalConfig& cfg, EvalStats* stats) {
  Evaluator ev(ms, n, spec, series, cfg);
  return ev.run(stats);
}

std::string canonical_state_key(const ExponentState& st) {
  std::string out;
  std::size_t len = st.vectors.empty() ? 0 : st.vectors[0].size();
  for (const auto& v : st.vectors)
    if (v.size() != len) throw InvalidInputError("state vectors must share one length");
  out.push_back(static_cast<char>(st.vectors.size()));
  out.push_back(static_cast<char>(len & 0xff));
  out.push_back(static_cast<char>(len >> 8));
  for (const auto& v : st.vectors)
    for (std::uint16_t e : v) {
      out.push_back(static_cast<char>(e & 0xff));
      out.push_back(static_cast<char>(e >> 8));
    }
  return out;
}

ExponentState decode_state_key(const std::string& key) {
  if (key.size() < 3) throw InvalidInputError("truncated state key");
  std::size_t vecs = static_cast<unsigned char>(key[0]);
  std::size_t len = static_cast<unsigned char>(key[1]) |
                    (static_cast<std::size_t>(static_cast<unsigned char>(key[2])) << 8);
  if (key.size() != 3 + 2 * vecs * len) throw InvalidInputError("corrupt state key");
  ExponentState st;
  std::size_t pos = 3;
  for (std::size_t v = 0; v < vecs; ++v) {
    std::vector<std::uint16_t> vec(len);
    for (std::size_t j = 0; j < len; ++j) {
      vec[j] = static_cast<std::uint16_t>(
          static_cast<unsigned char>(key[pos]) |
          (static_cast<std::uint16_t>(static_cast<unsigned char>(key[pos + 1])) << 8));
      pos += 2;
    }
    st.vectors.push_back(std::move(vec));
  }
  return st;
}

bool engine_matches_oracle(const std::vector<Pattern>& patterns, int n, std::string* message,
                           const OracleConfig& oracle_cfg) {
  MergedScheme ms = MergedScheme::for_patterns(patterns);
  JointPolynomial engine = evaluate(ms, n, SpecializationMap::all_track(ms));
  JointPolynomial oracle = brute_force_distribution(n, patterns, oracle_cfg);
  if (engine == oracle) return true;
  if (message) {
    *message = "engine/oracle mismatch for {" + ms.id() + "} at n=" + std::to_string(n) +
               ": engine " + std::to_string(engine.term_count()) + " terms vs oracle " +
               std::to_string(oracle.term_count()) + " terms";
  }
  return false;
}

}  // namespace permstat
