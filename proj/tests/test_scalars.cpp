#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "drba/constraint.hpp"
#include "drba/rational.hpp"
#include "drba/scalar_poly.hpp"

using namespace drba;

TEST_CASE("Scalar parses p/q and p in canonical form") {
  CHECK(Scalar::parse("3/6") == Scalar(1, 2));
  CHECK(Scalar::parse("3/6").str() == "1/2");
  CHECK(Scalar::parse("-4/8").str() == "-1/2");
  CHECK(Scalar::parse("  7 ") == Scalar(7));
  CHECK(Scalar::parse("0/5").is_zero());
  CHECK(Scalar::parse("+2/4") == Scalar(1, 2));

  CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(1, 0), std::invalid_argument);
}

TEST_CASE("Scalar arithmetic is exact") {
  CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
  CHECK(Scalar(1, 3) - Scalar(1, 2) == Scalar(-1, 6));
  CHECK(Scalar(2, 3) * Scalar(9, 4) == Scalar(3, 2));
  CHECK(Scalar(1, 2) / Scalar(1, 4) == Scalar(2));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK(-Scalar(1, 2) == Scalar(-1, 2));
  CHECK(Scalar(-1, -2) == Scalar(1, 2));  // canonical sign
}

TEST_CASE("Scalar powers") {
  CHECK(Scalar(2, 3).pow(3) == Scalar(8, 27));
  CHECK(Scalar(2, 3).pow(-2) == Scalar(9, 4));
  CHECK(Scalar(-2).pow(3) == Scalar(-8));
  CHECK(Scalar(5).pow(0) == Scalar(1));
  CHECK(Scalar(0).pow(0) == Scalar(1));
  CHECK(Scalar(0).pow(4).is_zero());
  CHECK_THROWS_AS(Scalar(0).pow(-1), std::domain_error);
}

TEST_CASE("Scalar binomials") {
  CHECK(Scalar::binomial(10, 4) == Scalar(210));
  CHECK(Scalar::binomial(0, 0) == Scalar(1));
  CHECK(Scalar::binomial(5, 5) == Scalar(1));
  CHECK(Scalar::binomial(3, 5).is_zero());
  // Pascal identity on a sample patch
  for (unsigned long n = 1; n <= 12; ++n)
    for (unsigned long k = 1; k <= n; ++k)
      CHECK(Scalar::binomial(n, k) == Scalar::binomial(n - 1, k - 1) + Scalar::binomial(n - 1, k));
}

TEST_CASE("Scalar ordering") {
  CHECK(Scalar(-1, 2) < Scalar(1, 3));
  CHECK(Scalar(1, 3) < Scalar(1, 2));
  CHECK(Scalar(2).sign() == 1);
  CHECK(Scalar(-2).sign() == -1);
  CHECK(Scalar().sign() == 0);
}

TEST_CASE("ScalarPoly normalization and degree") {
  CHECK(ScalarPoly{}.is_zero());
  CHECK(!ScalarPoly{}.degree().has_value());
  CHECK(ScalarPoly::parse("").is_zero());
  CHECK(ScalarPoly::parse("5").degree() == 0);
  CHECK(ScalarPoly::parse("0,1").degree() == 1);
  CHECK(ScalarPoly({Scalar(1), Scalar(0), Scalar(0)}).degree() == 0);  // trailing zeros stripped
  CHECK(ScalarPoly({Scalar(0)}).is_zero());
  CHECK(ScalarPoly::parse("0,1") == ScalarPoly::parse("0,1,0"));
  CHECK(poly_degree(ScalarPoly::parse("1,0,3")) == 2);
}

TEST_CASE("ScalarPoly coefficients, evaluation, text forms") {
  ScalarPoly p = ScalarPoly::parse("1/2,0,-3");
  CHECK(p.coeff(0) == Scalar(1, 2));
  CHECK(p.coeff(1).is_zero());
  CHECK(p.coeff(2) == Scalar(-3));
  CHECK(p.coeff(17).is_zero());
  CHECK(p.eval(Scalar(2)) == Scalar(1, 2) + Scalar(-12));
  CHECK(p.str() == "1/2,0,-3");
  CHECK(ScalarPoly::parse(p.str()) == p);
  CHECK(p.pretty() == "1/2 - 3x^2");
  CHECK(ScalarPoly::parse("0,1").pretty() == "x");
  CHECK(ScalarPoly::parse("-1,1").pretty() == "-1 + x");
  CHECK(ScalarPoly::parse("0,-1").pretty() == "-x");
  CHECK(ScalarPoly{}.pretty() == "0");
  CHECK_THROWS_AS(ScalarPoly::parse(","), std::invalid_argument);
  CHECK_THROWS_AS(ScalarPoly::parse("1,a"), std::invalid_argument);
}

TEST_CASE("classify: distinguished members") {
  auto omega = [](const char* phi, const char* psi) {
    return Constraint{ScalarPoly::parse(phi), ScalarPoly::parse(psi)};
  };

  Verdict v = classify(omega("1", ""));  // xy - 1
  CHECK(v.in_omega0);
  CHECK(v.in_omegak);
  CHECK(v.normal_form == Verdict::Form::XY_MINUS_CONST);
  CHECK(v.parameter == Scalar(1));

  v = classify(omega("", ""));  // xy
  CHECK(v.in_omega0);
  CHECK(v.in_omegak);
  CHECK(v.parameter.is_zero());

  v = classify(omega("", "0,1"));  // xy - yx
  CHECK(v.in_omega0);
  CHECK(v.in_omegak);
  CHECK(v.normal_form == Verdict::Form::XY_MINUS_B0Y_YX);
  CHECK(v.parameter.is_zero());

  v = classify(omega("5", ""));  // xy - 5
  CHECK(v.in_omega0);
  CHECK(!v.in_omegak);

  v = classify(omega("0,0,1", ""));  // xy - x^2
  CHECK(!v.in_omega0);
  CHECK(!v.in_omegak);
  CHECK(v.normal_form == Verdict::Form::OUTSIDE);

  v = classify(omega("", "3,1"));  // xy - (3y + yx)
  CHECK(v.in_omega0);
  CHECK(!v.in_omegak);
  CHECK(v.normal_form == Verdict::Form::XY_MINUS_B0Y_YX);
  CHECK(v.parameter == Scalar(3));

  v = classify(omega("", "3,2"));  // leading psi coefficient != 1
  CHECK(!v.in_omega0);

  v = classify(omega("1", "0,1"));  // phi and psi both nonzero
  CHECK(!v.in_omega0);
}

TEST_CASE("classify is total and matches direct set membership on a grid") {
  // Enumerate every phi, psi with coefficients in {-2..2} and degree <= 3.
  std::vector<ScalarPoly> polys;
  std::vector<std::vector<int>> raw;
  polys.push_back(ScalarPoly{});
  raw.push_back({});
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<int> idx(len, 0);
    while (true) {
      std::vector<Scalar> cs;
      std::vector<int> rawcs;
      for (std::size_t i = 0; i < len; ++i) {
        cs.push_back(Scalar(idx[i] - 2));
        rawcs.push_back(idx[i] - 2);
      }
      if (rawcs.back() != 0) {  // restrict to exact degree len-1 to avoid duplicates
        polys.push_back(ScalarPoly(cs));
        raw.push_back(rawcs);
      }
      std::size_t j = 0;
      while (j < len && ++idx[j] == 5) idx[j++] = 0;
      if (j == len) break;
    }
  }

  // Independent membership predicate written on the raw coefficient vectors.
  auto hand_omega0 = [](const std::vector<int>& phi, const std::vector<int>& psi) {
    bool const_phi = phi.size() <= 1;
    bool family_a = psi.empty() && const_phi;
    bool family_b = phi.empty() && psi.size() == 2 && psi[1] == 1;
    return family_a || family_b;
  };
  auto hand_omegak = [](const std::vector<int>& phi, const std::vector<int>& psi) {
    bool xy = phi.empty() && psi.empty();
    bool xy1 = phi.size() == 1 && phi[0] == 1 && psi.empty();
    bool xyyx = phi.empty() && psi.size() == 2 && psi[0] == 0 && psi[1] == 1;
    return xy || xy1 || xyyx;
  };

  std::size_t checked = 0;
  for (std::size_t a = 0; a < polys.size(); ++a) {
    for (std::size_t b = 0; b < polys.size(); ++b) {
      Verdict v = classify(Constraint{polys[a], polys[b]});
      REQUIRE(v.in_omega0 == hand_omega0(raw[a], raw[b]));
      REQUIRE(v.in_omegak == hand_omegak(raw[a], raw[b]));
      REQUIRE((!v.in_omegak || v.in_omega0));  // Omega_k within Omega_0
      ++checked;
    }
  }
  CHECK(checked == polys.size() * polys.size());
}

TEST_CASE("constraint rendering") {
  CHECK(Constraint{ScalarPoly{}, ScalarPoly{}}.str() == "xy");
  CHECK(Constraint{ScalarPoly::parse("1"), ScalarPoly{}}.str() == "xy - (1)");
  CHECK(Constraint{ScalarPoly::parse("1,0,2"), ScalarPoly::parse("0,1")}.str() ==
        "xy - (1 + 2x^2) - y*(x)");
}
