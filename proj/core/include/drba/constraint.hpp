#pragma once

#include <string>

#include "drba/rational.hpp"
#include "drba/scalar_poly.hpp"

namespace drba {

// The constraint ω = xy − (φ(x) + y·ψ(x)).  Every pair of polynomials is a
// valid constraint and the representation is unique once φ, ψ are normalized
// (trailing zeros stripped), which ScalarPoly guarantees.
struct Constraint {
  ScalarPoly phi;
  ScalarPoly psi;

  // e.g. "xy - (1 + 2x^2) - y*(x)"; "xy" when φ = ψ = 0.
  std::string str() const;

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.phi == b.phi && a.psi == b.psi;
  }
  friend bool operator!=(const Constraint& a, const Constraint& b) { return !(a == b); }
};

// Classification of ω against the two distinguished families:
//   Ω₀ = {xy − a₀} ∪ {xy − (b₀y + yx)}   (covers of weight-0 operators stay Rota-Baxter)
//   Ω_k = {xy, xy − 1, xy − yx}          (covers stay Rota-Baxter at every weight)
struct Verdict {
  enum class Form { XY_MINUS_CONST, XY_MINUS_B0Y_YX, OUTSIDE };

  bool in_omega0 = false;
  bool in_omegak = false;
  Form normal_form = Form::OUTSIDE;
  // a₀ for XY_MINUS_CONST, b₀ for XY_MINUS_B0Y_YX; zero otherwise.
  Scalar parameter;

  std::string str() const;
};

// Total on all (φ, ψ):
//   in_omega0 ⟺ (ψ = 0 and deg φ ≤ 0) or (φ = 0 and ψ = b₀ + x)
//   in_omegak ⟺ (ψ = 0 and φ ∈ {0, 1}) or (φ = 0 and ψ = x)
// The two families are disjoint (the first has ψ = 0, the second ψ ≠ 0), so
// the normal form is unambiguous.
Verdict classify(const Constraint& omega);

}  // namespace drba
