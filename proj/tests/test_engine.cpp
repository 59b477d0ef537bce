#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "permstat/cache.hpp"
#include "permstat/engine.hpp"
#include "permstat/errors.hpp"
#include "permstat/numeric.hpp"
#include "permstat/oracle.hpp"

using namespace permstat;

namespace {

Pattern P(const char* s) { return Pattern::parse(s); }

JointPolynomial eval_all_track(const std::vector<Pattern>& pats, int n,
                               SeriesCenter series = {}) {
  MergedScheme ms = MergedScheme::for_patterns(pats);
  return evaluate(ms, n, SpecializationMap::all_track(ms), series);
}

}  // namespace

// The registration gate: every scheme (and the derived, mirrored ones in
// particular) must reproduce the brute-force joint distribution exactly.
// The acceptance suite extends this to n = 8.
TEST_CASE("oracle equivalence for every registered scheme, n <= 6") {
  for (const auto& pat : registered_patterns()) {
    for (int n = 0; n <= 6; ++n) {
      std::string msg;
      REQUIRE_MESSAGE(engine_matches_oracle({pat}, n, &msg), msg);
    }
  }
}

TEST_CASE("oracle equivalence for the named merges, n <= 6") {
  std::vector<std::vector<Pattern>> merges = {
      {P("123"), P("132")},
      all_patterns(3),
  };
  auto with_1234 = all_patterns(3);
  with_1234.insert(with_1234.begin(), P("1234"));
  merges.push_back(with_1234);
  for (const auto& pats : merges) {
    for (int n = 0; n <= 6; ++n) {
      std::string msg;
      REQUIRE_MESSAGE(engine_matches_oracle(pats, n, &msg), msg);
    }
  }
}

TEST_CASE("base cases and single-scheme values") {
  CHECK(eval_all_track({P("132")}, 1) == JointPolynomial::constant(1, 1));
  CHECK(eval_all_track({P("132")}, 0) == JointPolynomial::constant(1, 1));
  CHECK(eval_all_track({P("123")}, 3).str() == "5 + t");
  CHECK(eval_all_track({P("1234")}, 4).str() == "23 + t");
  // avoider count inside a full distribution: [t^0] f_6(123;t) = Catalan(6)
  CHECK(eval_all_track({P("123")}, 6).coefficient({0}) == catalan(6));
}

TEST_CASE("normalization: coefficient mass is n!") {
  for (int n = 0; n <= 9; ++n)
    CHECK(eval_all_track({P("123")}, n).sum_of_coefficients() == factorial(static_cast<unsigned>(n)));
  for (int n = 0; n <= 7; ++n)
    CHECK(eval_all_track(all_patterns(3), n).sum_of_coefficients() ==
          factorial(static_cast<unsigned>(n)));
  // all variables discarded degenerates to n!
  MergedScheme ms = MergedScheme::for_patterns({P("123"), P("132")});
  for (int n = 0; n <= 12; ++n) {
    JointPolynomial f = evaluate(ms, n, SpecializationMap());
    CHECK(f.var_count() == 0);
    CHECK(f.sum_of_coefficients() == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("avoidance specialization") {
  MergedScheme s3 = MergedScheme::for_patterns(all_patterns(3));

  SUBCASE("Catalan counts via SET_ZERO") {
    for (int n = 0; n <= 11; ++n) {
      SpecializationMap spec;
      spec.set(P("132"), VarAction::SetZero);
      JointPolynomial f = evaluate(s3, n, spec);
      CHECK(f == JointPolynomial::constant(0, catalan(static_cast<unsigned>(n))));
    }
    SpecializationMap spec;
    spec.set(P("132"), VarAction::SetZero);
    CHECK(evaluate(s3, 10, spec).sum_of_coefficients() == 16796);
  }

  SUBCASE("avoid + track: f over S_3(132)") {
    SpecializationMap spec;
    spec.set(P("123"), VarAction::Track)
        .set(P("132"), VarAction::SetZero)
        .set(P("321"), VarAction::Track);
    JointPolynomial f = evaluate(s3, 3, spec);
    CHECK(f.str() == "3 + s + t");
    SpecializationMap one_var;
    one_var.set(P("123"), VarAction::Track).set(P("132"), VarAction::SetZero);
    CHECK(evaluate(s3, 3, one_var).str() == "4 + t");
  }

  SUBCASE("SET_ZERO equals slicing the tracked distribution at t^0, n <= 7") {
    for (int n = 0; n <= 7; ++n) {
      SpecializationMap tracked;
      tracked.set(P("132"), VarAction::Track).set(P("321"), VarAction::Track);
      JointPolynomial sliced = evaluate(s3, n, tracked).coefficient_slice(0, 0);
      SpecializationMap zeroed;
      zeroed.set(P("132"), VarAction::SetZero).set(P("321"), VarAction::Track);
      CHECK(sliced == evaluate(s3, n, zeroed));
    }
  }

  SUBCASE("1234 avoidance with a tracked length-3 pattern") {
    MergedScheme ms = MergedScheme::for_patterns({P("1234"), P("123")});
    for (int n = 0; n <= 7; ++n) {
      SpecializationMap spec;
      spec.set(P("1234"), VarAction::SetZero).set(P("123"), VarAction::Track);
      JointPolynomial engine = evaluate(ms, n, spec);
      // oracle restricted to 1234-avoiders
      JointPolynomial expect(1);
      JointPolynomial joint = brute_force_distribution(n, {P("1234"), P("123")});
      for (const auto& [mono, c] : joint.terms())
        if (mono[0] == 0) expect.add_term({mono[1]}, c);
      CHECK(engine == expect);
    }
  }
}

TEST_CASE("joint distribution invariants over S_3") {
  for (int n = 2; n <= 7; ++n) {
    JointPolynomial f = eval_all_track(all_patterns(3), n);
    // every monomial has total degree C(n,3)
    for (const auto& [mono, c] : f.terms()) {
      unsigned total = 0;
      for (auto e : mono) total += e;
      CHECK(total == binomial(static_cast<unsigned>(n), 3));
    }
    // lexicographic S_3 order is 123,132,213,231,312,321:
    // complement swaps (0,5),(1,4),(2,3); reverse swaps (0,5),(1,3),(2,4)
    CHECK(f == f.relabeled({5, 4, 3, 2, 1, 0}));
    CHECK(f == f.relabeled({5, 3, 4, 1, 2, 0}));
  }
}

TEST_CASE("series about 1 equals the shifted exact polynomial, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (unsigned r = 0; r <= 4; ++r) {
      JointPolynomial exact = eval_all_track({P("123")}, n);
      CHECK(eval_all_track({P("123")}, n, SeriesCenter::one(r)) == exact.shifted_about_one(r));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    JointPolynomial exact = eval_all_track({P("123"), P("321")}, n);
    for (unsigned r = 1; r <= 3; ++r)
      CHECK(eval_all_track({P("123"), P("321")}, n, SeriesCenter::one(r)) ==
            exact.shifted_about_one(r));
  }
}

TEST_CASE("merge validation") {
  CHECK_THROWS_AS(MergedScheme::for_patterns({P("123"), P("123")}), InvalidMergeError);
  CHECK_THROWS_AS(scheme_for(P("1324")), NotRegisteredError);
  CHECK_THROWS_AS(scheme_for(P("21")), NotRegisteredError);
  CHECK(scheme_registered(P("213")));
  CHECK(!scheme_registered(P("4321")));
}

TEST_CASE("state budget produces a capacity error with layer info") {
  MergedScheme ms = MergedScheme::for_patterns({P("123"), P("321")});
  EvalConfig tiny;
  tiny.max_states = 10;
  try {
    evaluate(ms, 8, SpecializationMap::all_track(ms), SeriesCenter::none(), tiny);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(e.layer_reached() >= 1);
    CHECK(e.largest_layer_states() > 0);
    CHECK(std::string(e.what()).find("layer") != std::string::npos);
  }
  CHECK_THROWS_AS(evaluate(ms, 65, SpecializationMap::all_track(ms)), InvalidInputError);
}

TEST_CASE("canonical state keys") {
  ExponentState st{{{0, 0, 0}}};
  ExponentState st2{{{0, 0, 0}}};
  CHECK(canonical_state_key(st) == canonical_state_key(st2));
  ExponentState st3{{{0, 1, 0}}};
  CHECK(canonical_state_key(st) != canonical_state_key(st3));
  ExponentState two{{{3, 1}, {0, 7}}};
  CHECK(decode_state_key(canonical_state_key(two)) == two);
  CHECK(decode_state_key(canonical_state_key(st3)) == st3);
  CHECK_THROWS_AS(decode_state_key("x"), InvalidInputError);
  ExponentState ragged{{{1, 2}, {3}}};
  CHECK_THROWS_AS(canonical_state_key(ragged), InvalidInputError);
}

TEST_CASE("result cache round trip and version rejection") {
  std::string dir = (std::filesystem::temp_directory_path() / "permstat_cache_test").string();
  std::filesystem::remove_all(dir);
  ResultCache cache(dir);

  JointPolynomial big(2);
  big.add_term({0, 0}, factorial(25));
  big.add_term({3, 7}, mpz_class("123456789012345678901234567890"));
  big.add_term({1, 1}, 1);

  cache.store("123+321", "132=zero", 9, "exact", big);
  auto loaded = cache.load("123+321", "132=zero", 9, "exact");
  REQUIRE(loaded.has_value());
  CHECK(*loaded == big);

  CHECK(!cache.load("123+321", "132=zero", 8, "exact").has_value());
  CHECK(!cache.load("123+312", "132=zero", 9, "exact").has_value());

  // a version bump must be rejected, not misread
  std::string path = cache.file_path("123+321", "132=zero", 9, "exact");
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  auto pos = text.find("\"format_version\": 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 19, "\"format_version\": 2");
  std::ofstream(path, std::ios::trunc) << text;
  CHECK(!cache.load("123+321", "132=zero", 9, "exact").has_value());

  CHECK(cache.list_entries().size() == 1);
  cache.clear();
  CHECK(cache.list_entries().empty());

  // read-through evaluation: second call served from disk, identical result
  MergedScheme ms = MergedScheme::for_patterns({P("123")});
  JointPolynomial fresh = evaluate_cached(&cache, ms, 6, SpecializationMap::all_track(ms));
  CHECK(cache.list_entries().size() == 1);
  JointPolynomial reread = evaluate_cached(&cache, ms, 6, SpecializationMap::all_track(ms));
  CHECK(fresh == reread);
  CHECK(fresh == eval_all_track({P("123")}, 6));
  std::filesystem::remove_all(dir);
}

TEST_CASE("json polynomial encoding round trip") {
  JointPolynomial p(1);
  p.add_term({0}, 5);
  p.add_term({1}, 1);
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  CHECK_THROWS_AS(polynomial_from_json("{"), InvalidInputError);
}
