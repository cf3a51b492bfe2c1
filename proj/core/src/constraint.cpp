#include "drba/constraint.hpp"

namespace drba {

std::string Constraint::str() const {
  std::string out = "xy";
  if (!phi.is_zero()) out += " - (" + phi.pretty() + ")";
  if (!psi.is_zero()) out += " - y*(" + psi.pretty() + ")";
  return out;
}

Verdict classify(const Constraint& omega) {
  Verdict v;
  const auto dphi = omega.phi.degree();
  const auto dpsi = omega.psi.degree();

  if (!dpsi && (!dphi || *dphi == 0)) {
    // ω = xy − a₀
    v.in_omega0 = true;
    v.normal_form = Verdict::Form::XY_MINUS_CONST;
    v.parameter = omega.phi.coeff(0);
    v.in_omegak = v.parameter.is_zero() || v.parameter.is_one();
  } else if (!dphi && dpsi && *dpsi == 1 && omega.psi.coeff(1).is_one()) {
    // ω = xy − (b₀y + yx)
    v.in_omega0 = true;
    v.normal_form = Verdict::Form::XY_MINUS_B0Y_YX;
    v.parameter = omega.psi.coeff(0);
    v.in_omegak = v.parameter.is_zero();
  }
  return v;
}

std::string Verdict::str() const {
  std::string out;
  switch (normal_form) {
    case Form::XY_MINUS_CONST:
      out = "xy - a0 with a0 = " + parameter.str();
      break;
    case Form::XY_MINUS_B0Y_YX:
      out = "xy - (b0*y + yx) with b0 = " + parameter.str();
      break;
    case Form::OUTSIDE:
      out = "outside both classified families";
      break;
  }
  out += in_omega0 ? "; in Omega_0" : "; not in Omega_0";
  out += in_omegak ? "; in Omega_k" : "; not in Omega_k";
  return out;
}

}  // namespace drba
