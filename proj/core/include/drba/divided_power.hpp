#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drba/rational.hpp"

namespace drba {

// Element of the divided-power algebra Z(k) on basis {z_0, z_1, ...} or of a
// quotient Z(k)/I_m, where I_m is spanned by {z_i : i >= m}.  Coefficients
// are stored dense, low index first, trailing zeros stripped; in a quotient
// every index >= m is identically zero by construction.
class DPElement {
 public:
  DPElement() = default;  // zero in the full algebra
  // modulus: nullopt for the full algebra, m >= 1 for Z(k)/I_m.
  DPElement(std::optional<std::size_t> modulus, std::vector<Scalar> coeffs);

  static DPElement basis(std::optional<std::size_t> modulus, std::size_t index);

  std::optional<std::size_t> modulus() const { return modulus_; }
  const Scalar& coeff(std::size_t i) const;
  // One past the largest index with a nonzero coefficient.
  std::size_t support_end() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }

  // "c0*z0 + c1*z1 + ..." with a UTF-8 middle dot between coefficient and
  // basis symbol; "0" when zero.
  std::string str() const;
  // Accepts the rendered form with either "·" or "*" separators.
  static DPElement parse(std::optional<std::size_t> modulus, std::string_view text);

  friend bool operator==(const DPElement& a, const DPElement& b) {
    return a.modulus_ == b.modulus_ && a.c_ == b.c_;
  }
  friend bool operator!=(const DPElement& a, const DPElement& b) { return !(a == b); }
  friend bool operator<(const DPElement& a, const DPElement& b);

 private:
  std::optional<std::size_t> modulus_;
  std::vector<Scalar> c_;
};

// z_a z_b = Σ_{j=0}^{min(a,b)} C(a+b−j, b) C(b, j) λ^j z_{a+b−j}, extended
// bilinearly; computed in the full algebra and projected, which is valid
// because I_m is an ideal.  Throws std::invalid_argument on modulus mismatch.
DPElement dp_mul(const DPElement& u, const DPElement& v, const Scalar& lambda);

// The shift P(z_i) = z_{i+1}; in a quotient the top coefficient is discarded
// (P(z_{m-1}) = 0), making P a Rota-Baxter operator of any weight there.
DPElement dp_P(const DPElement& u);

// The down shift d(z_0) = 0, d(z_i) = z_{i-1}, applied to the stored
// representative.  On the full algebra this is a differential operator of
// weight λ; on a quotient it is merely the induced linear shift on the basis
// (the differential structure does not descend).
DPElement dp_d(const DPElement& u);

// Project an element of the full algebra into Z(k)/I_m (drop indices >= m),
// or between quotients when the target is coarser.
DPElement dp_project(const DPElement& u, std::size_t m);

// Carrier context for Z(k) (modulus = nullopt) or Z(k)/I_m (modulus = m >= 1).
struct DPAlgebra {
  using Elem = DPElement;

  std::optional<std::size_t> modulus;
  Scalar lambda;

  DPAlgebra(std::optional<std::size_t> m, Scalar weight);

  Elem zero() const { return DPElement(modulus, {}); }
  Elem one() const { return DPElement::basis(modulus, 0); }
  Elem basis(std::size_t i) const { return DPElement::basis(modulus, i); }
  Elem add(const Elem& u, const Elem& v) const;
  Elem scale(const Scalar& s, const Elem& u) const;
  Elem mul(const Elem& u, const Elem& v) const { return dp_mul(u, v, lambda); }
  bool equal(const Elem& u, const Elem& v) const { return u == v; }
  bool is_zero(const Elem& u) const { return u.is_zero(); }
  std::string str(const Elem& u) const { return u.str(); }
  Scalar weight() const { return lambda; }
  std::vector<std::pair<Elem, Scalar>> decompose(const Elem& u) const;
};

}  // namespace drba
