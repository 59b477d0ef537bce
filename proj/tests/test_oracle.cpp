#include <doctest.h>

#include <map>

#include "permstat/errors.hpp"
#include "permstat/numeric.hpp"
#include "permstat/oracle.hpp"

using namespace permstat;

TEST_CASE("single pattern counts") {
  CHECK(count_occurrences(Permutation::parse("132"), Permutation::parse("132")) == 1);
  CHECK(count_occurrences(Permutation::parse("21"), Permutation::parse("321")) == 3);
  // every length-3 subsequence of 2413 reduces to one of 231,132,213,312
  CHECK(count_occurrences(Permutation::parse("123"), Permutation::parse("2413")) == 0);
  CHECK(count_occurrences(Permutation::parse("231"), Permutation::parse("2413")) == 1);
  // pattern longer than host is just absent
  CHECK(count_occurrences(Permutation::parse("1234"), Permutation::parse("123")) == 0);
  CHECK(count_occurrences(Permutation::parse("123"), Permutation::parse("123456")) == 20);
}

TEST_CASE("joint counts") {
  auto s3 = all_patterns(3);
  auto c1 = joint_counts(Permutation::parse("123"), s3);
  CHECK(c1 == std::vector<mpz_class>{1, 0, 0, 0, 0, 0});
  auto c2 = joint_counts(Permutation::parse("321"), s3);
  CHECK(c2 == std::vector<mpz_class>{0, 0, 0, 0, 0, 1});
  auto c3 = joint_counts(Permutation::parse("2413"), s3);
  mpz_class sum = 0;
  for (const auto& c : c3) sum += c;
  CHECK(sum == binomial(4, 3));
}

TEST_CASE("pattern counts split C(n,k) across S_k") {
  for (int n = 4; n <= 7; ++n) {
    Permutation pi = n == 4 ? Permutation::parse("3142") : Permutation::identity(n).reversed();
    for (int k = 1; k <= n; ++k) {
      auto counts = joint_counts(pi, all_patterns(k));
      mpz_class sum = 0;
      for (const auto& c : counts) sum += c;
      CHECK(sum == binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    }
  }
}

TEST_CASE("counting commutes with reverse/complement/inverse, exhaustive to n=7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : all_patterns(n)) {
      for (int k = 1; k <= std::min(n, 6); ++k) {
        auto pats = all_patterns(k);
        auto base = joint_counts(pi, pats);
        for (auto which :
             {TransformKind::Reverse, TransformKind::Complement, TransformKind::Inverse}) {
          Permutation tpi = transform(pi, which);
          std::map<Permutation, mpz_class> transformed;
          for (std::size_t s = 0; s < pats.size(); ++s)
            transformed[transform(pats[s], which)] = base[s];
          auto direct = joint_counts(tpi, pats);
          for (std::size_t s = 0; s < pats.size(); ++s) REQUIRE(direct[s] == transformed[pats[s]]);
        }
      }
    }
  }
}

TEST_CASE("brute-force distributions") {
  auto p123 = Permutation::parse("123");
  JointPolynomial d2 = brute_force_distribution(2, {p123});
  CHECK(d2 == JointPolynomial::constant(1, 2));

  JointPolynomial d3 = brute_force_distribution(3, {p123});
  CHECK(d3.coefficient({0}) == 5);
  CHECK(d3.coefficient({1}) == 1);
  CHECK(d3.term_count() == 2);
  CHECK(d3.str() == "5 + t");

  JointPolynomial d4 = brute_force_distribution(4, {Permutation::parse("1234")});
  CHECK(d4.coefficient({0}) == 23);
  CHECK(d4.coefficient({1}) == 1);

  for (int n = 0; n <= 6; ++n) {
    JointPolynomial dn = brute_force_distribution(n, {p123, Permutation::parse("321")});
    CHECK(dn.sum_of_coefficients() == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("oracle capacity cap") {
  CHECK_THROWS_AS(brute_force_distribution(9, {Permutation::parse("123")}), CapacityError);
  OracleConfig wide;
  wide.n_cap = 10;
  CHECK_NOTHROW(brute_force_distribution(5, {Permutation::parse("123")}, wide));
  wide.n_cap = 99;  // hard cap still applies
  CHECK_THROWS_AS(brute_force_distribution(11, {Permutation::parse("123")}, wide), CapacityError);
  CHECK_THROWS_AS(brute_force_distribution(3, {Permutation::identity(7)}, wide),
                  InvalidInputError);
}
