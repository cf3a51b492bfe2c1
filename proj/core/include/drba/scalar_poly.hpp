#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drba/rational.hpp"

namespace drba {

// Univariate polynomial over Scalar, used for the constraint data φ and ψ.
// Stored dense, low-to-high, with trailing zeros stripped; the zero
// polynomial is the empty coefficient list and has no degree.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<Scalar> coeffs);

  static ScalarPoly constant(const Scalar& c);

  // Text form: comma-separated rational coefficients low-to-high
  // ("0,1" = x, "1" = 1, "" = 0).  Throws std::invalid_argument on bad input.
  static ScalarPoly parse(std::string_view text);

  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  // Index of the leading nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;

  // Coefficient of x^i, zero beyond the stored range.
  const Scalar& coeff(std::size_t i) const;

  Scalar eval(const Scalar& x) const;

  // The comma-separated text form (round-trips through parse).
  std::string str() const;
  // Human form, e.g. "1 + 2x^2"; "0" for the zero polynomial.
  std::string pretty(std::string_view var = "x") const;

  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

 private:
  std::vector<Scalar> c_;
};

// Free-function spelling of ScalarPoly::degree.
std::optional<std::size_t> poly_degree(const ScalarPoly& p);

}  // namespace drba
