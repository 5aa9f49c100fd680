#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "localspec/exact_scalar.hpp"
#include "test_support.hpp"

using namespace localspec;
using testsupport::Sampler;

namespace {

ExactScalar random_scalar(Sampler& rng) {
  ExactScalar out;
  const int n = rng.integer(0, 4);
  for (int i = 0; i < n; ++i) {
    GaussianRational c{mpq_class(rng.integer(-9, 9), rng.integer(1, 7)),
                       mpq_class(rng.integer(-9, 9), rng.integer(1, 7))};
    out += ExactScalar(c, rng.integer(0, 3), rng.integer(-4, 4));
  }
  return out;
}

bool is_normal(const ExactScalar& x) {
  const auto& t = x.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].c.is_zero() || t[i].a < 0) return false;
    if (i > 0) {
      const bool ordered = t[i - 1].a < t[i].a || (t[i - 1].a == t[i].a && t[i - 1].b < t[i].b);
      if (!ordered) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("ExactScalar construction and printing", "[exact]") {
  CHECK(ExactScalar().is_zero());
  CHECK(ExactScalar({0, 0}, 3, 2).is_zero());
  CHECK(ExactScalar().to_string() == "0");
  CHECK(ExactScalar({mpq_class(2, 4), -1}, 2, -1).to_string() == "(1/2-1i)*L^2*R^-1");
  CHECK(ExactScalar::integer(3).to_string() == "(3)");
  CHECK_THROWS_AS(ExactScalar({1, 0}, -1, 0), std::invalid_argument);

  const ExactScalar x = ExactScalar::monomial(1, 0) + ExactScalar::monomial(1, 0);
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms()[0].c.re == 2);
  CHECK((x - x).is_zero());
}

TEST_CASE("ExactScalar evaluation", "[exact]") {
  const double q = 3.0;
  CHECK(ExactScalar::monomial(1, 0).evaluate(q) == Complex(std::log(3.0), 0.0));
  CHECK(std::abs(ExactScalar::monomial(0, 2).evaluate(q) - 3.0) < 1e-15);
  CHECK(std::abs(ExactScalar::monomial(0, -1).evaluate(q) - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(ExactScalar::imaginary_unit().evaluate(q) == Complex(0.0, 1.0));
  // -i L^2 R^-1 at q = 2
  const ExactScalar k01 = ExactScalar({0, -1}, 2, -1);
  const double L = std::log(2.0);
  CHECK(std::abs(k01.evaluate(2.0) - Complex(0.0, -L * L / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("ExactScalar ring laws and normal form", "[exact][property]") {
  Sampler rng(41);
  for (int i = 0; i < 300; ++i) {
    const ExactScalar x = random_scalar(rng);
    const ExactScalar y = random_scalar(rng);
    const ExactScalar z = random_scalar(rng);
    CHECK(is_normal(x + y));
    CHECK(is_normal(x * y));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x * ExactScalar::integer(1) == x);
    CHECK((x * ExactScalar()).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism", "[exact][property]") {
  Sampler rng(42);
  for (double q : {2.0, 3.0, 5.0, 7.0, 101.0}) {
    for (int i = 0; i < 100; ++i) {
      const ExactScalar x = random_scalar(rng);
      const ExactScalar y = random_scalar(rng);
      const Complex ex = x.evaluate(q);
      const Complex ey = y.evaluate(q);
      const double scale = std::max({1.0, std::abs(ex) * std::abs(ey), std::abs(ex)});
      CHECK(std::abs((x + y).evaluate(q) - (ex + ey)) < 1e-12 * scale);
      CHECK(std::abs((x * y).evaluate(q) - ex * ey) < 1e-12 * scale);
      CHECK(std::abs(x.conj().evaluate(q) - std::conj(ex)) < 1e-12 * scale);
    }
  }
}

TEST_CASE("ExactScalar JSON round trip", "[exact]") {
  Sampler rng(43);
  for (int i = 0; i < 100; ++i) {
    const ExactScalar x = random_scalar(rng);
    const nlohmann::json j = x.to_json();
    for (const auto& term : j) {
      for (const char* key : {"c_re_num", "c_re_den", "c_im_num", "c_im_den", "a", "b"}) {
        CHECK(term.at(key).is_string());
      }
    }
    CHECK(ExactScalar::from_json(j) == x);
    CHECK(ExactScalar::from_json(nlohmann::json::parse(j.dump())) == x);
  }
  nlohmann::json bad = nlohmann::json::array();
  bad.push_back({{"c_re_num", "1"}, {"c_re_den", "0"}, {"c_im_num", "0"}, {"c_im_den", "1"},
                 {"a", "0"}, {"b", "0"}});
  CHECK_THROWS_AS(ExactScalar::from_json(bad), std::invalid_argument);
}
