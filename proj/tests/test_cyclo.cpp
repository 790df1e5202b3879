#include "hopfclass/cyclo.hpp"

#include <doctest.h>

#include <random>

using namespace hopfclass;

namespace {

CycloNum random_elt(const CycloField& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < k.degree(); ++i) c.emplace_back(num(rng), den(rng));
  for (auto& r : c) r.canonicalize();
  return CycloNum(k, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials by exact division") {
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("q is a primitive root") {
  for (int n : {3, 4, 5, 6, 8}) {
    const auto& k = CycloField::get(n);
    const CycloNum q = k.q();
    for (int e = 1; e < n; ++e) CHECK_FALSE(q.pow(e).is_one());
    CHECK(q.pow(n).is_one());
  }
  const auto& k3 = CycloField::get(3);
  CHECK((k3.q() * k3.q() + k3.q() + k3.one()).is_zero());
  const auto& k4 = CycloField::get(4);
  CHECK(k4.q().inverse() == k4.q().pow(3));
  CHECK_THROWS_AS(CycloField::get(2), std::invalid_argument);
  CHECK_THROWS_AS((void)k4.zero().inverse(), std::domain_error);
}

TEST_CASE("q-factorials") {
  const auto& k = CycloField::get(3);
  CHECK(q_factorial(0, k).is_one());
  CHECK(q_factorial(2, k) == k.one() + k.q());
  CHECK(q_factorial(3, k).is_zero());
}

TEST_CASE("field axioms on random elements") {
  for (int n : {3, 4, 5}) {
    const auto& k = CycloField::get(n);
    std::mt19937_64 rng(42 + n);
    for (int t = 0; t < 1000; ++t) {
      const CycloNum a = random_elt(k, rng), b = random_elt(k, rng), c = random_elt(k, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("serialization round trip") {
  for (int n : {3, 4, 5}) {
    const auto& k = CycloField::get(n);
    std::mt19937_64 rng(7 * n);
    for (int t = 0; t < 1000; ++t) {
      const CycloNum a = random_elt(k, rng);
      const std::string s = a.to_string();
      REQUIRE(k.parse(s) == a);
      REQUIRE(k.parse(s).to_string() == s);
    }
  }
  const auto& k = CycloField::get(3);
  CHECK(k.parse("q^2 + q + 1").is_zero());
  CHECK(k.parse("-1/2*z").to_string() == "-1/2*z");
  CHECK(k.zero().to_string() == "0");
}
