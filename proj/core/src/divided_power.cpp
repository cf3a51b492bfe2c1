#include "drba/divided_power.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace drba {

namespace {
const Scalar kZero{};

void trim(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}
}  // namespace

DPElement::DPElement(std::optional<std::size_t> modulus, std::vector<Scalar> coeffs)
    : modulus_(modulus), c_(std::move(coeffs)) {
  if (modulus_ && *modulus_ == 0) throw std::invalid_argument("DPElement: modulus must be >= 1");
  if (modulus_ && c_.size() > *modulus_) c_.resize(*modulus_);
  trim(c_);
}

DPElement DPElement::basis(std::optional<std::size_t> modulus, std::size_t index) {
  std::vector<Scalar> c(index + 1);
  c[index] = Scalar(1);
  return DPElement(modulus, std::move(c));
}

const Scalar& DPElement::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

bool operator<(const DPElement& a, const DPElement& b) {
  if (a.modulus_ != b.modulus_) return a.modulus_ < b.modulus_;
  // Support size first so that basis elements sort by index, then the
  // coefficients themselves; trailing zeros are already stripped, so this
  // is a strict weak ordering compatible with operator==.
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(
      a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string DPElement::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].str() + "·z" + std::to_string(i);
  }
  return out;
}

DPElement DPElement::parse(std::optional<std::size_t> modulus, std::string_view text) {
  auto skip_ws = [&](std::size_t& p) {
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p;
  };
  std::size_t p = 0;
  skip_ws(p);
  if (text.substr(p) == "0") return DPElement(modulus, {});
  std::vector<Scalar> coeffs;
  bool first = true;
  while (p < text.size()) {
    int sign = 1;
    if (!first) {
      if (text[p] == '+') {
        ++p;
      } else if (text[p] == '-') {
        sign = -1;
        ++p;
      } else {
        throw std::invalid_argument("DPElement: expected '+' or '-' between terms");
      }
      skip_ws(p);
    }
    // coefficient up to '·' (UTF-8, 2 bytes) or '*'
    std::size_t sep = text.find("·", p);
    std::size_t sepStar = text.find('*', p);
    std::size_t sepLen = 2;
    if (sepStar != std::string_view::npos && (sep == std::string_view::npos || sepStar < sep)) {
      sep = sepStar;
      sepLen = 1;
    }
    if (sep == std::string_view::npos) throw std::invalid_argument("DPElement: missing coefficient separator");
    Scalar c = Scalar::parse(text.substr(p, sep - p));
    if (sign < 0) c = -c;
    p = sep + sepLen;
    skip_ws(p);
    if (p >= text.size() || text[p] != 'z') throw std::invalid_argument("DPElement: expected basis symbol z<i>");
    ++p;
    std::size_t d0 = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (d0 == p) throw std::invalid_argument("DPElement: missing basis index");
    std::size_t idx = std::stoul(std::string(text.substr(d0, p - d0)));
    if (coeffs.size() <= idx) coeffs.resize(idx + 1);
    coeffs[idx] += c;
    skip_ws(p);
    first = false;
  }
  return DPElement(modulus, std::move(coeffs));
}

DPElement dp_mul(const DPElement& u, const DPElement& v, const Scalar& lambda) {
  if (u.modulus() != v.modulus()) throw std::invalid_argument("dp_mul: modulus mismatch");
  std::vector<Scalar> out;
  const std::size_t ue = u.support_end(), ve = v.support_end();
  if (ue && ve) out.resize(ue + ve - 1);
  for (std::size_t a = 0; a < ue; ++a) {
    if (u.coeff(a).is_zero()) continue;
    for (std::size_t b = 0; b < ve; ++b) {
      if (v.coeff(b).is_zero()) continue;
      const Scalar cab = u.coeff(a) * v.coeff(b);
      // z_a z_b = sum_j C(a+b-j, b) C(b, j) lambda^j z_{a+b-j}
      Scalar lpow(1);
      for (std::size_t j = 0; j <= std::min(a, b); ++j) {
        if (j) lpow *= lambda;
        if (lpow.is_zero()) break;
        out[a + b - j] += cab * Scalar::binomial(a + b - j, b) * Scalar::binomial(b, j) * lpow;
      }
    }
  }
  return DPElement(u.modulus(), std::move(out));
}

DPElement dp_P(const DPElement& u) {
  std::vector<Scalar> out(u.support_end() + 1);
  for (std::size_t i = 0; i < u.support_end(); ++i) out[i + 1] = u.coeff(i);
  return DPElement(u.modulus(), std::move(out));  // constructor truncates at the modulus
}

DPElement dp_d(const DPElement& u) {
  std::vector<Scalar> out;
  if (u.support_end() > 1) out.resize(u.support_end() - 1);
  for (std::size_t i = 1; i < u.support_end(); ++i) out[i - 1] = u.coeff(i);
  return DPElement(u.modulus(), std::move(out));
}

DPElement dp_project(const DPElement& u, std::size_t m) {
  if (u.modulus() && *u.modulus() < m)
    throw std::invalid_argument("dp_project: target modulus coarser than source");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < std::min(m, u.support_end()); ++i) out.push_back(u.coeff(i));
  return DPElement(m, std::move(out));
}

DPAlgebra::DPAlgebra(std::optional<std::size_t> m, Scalar weight)
    : modulus(m), lambda(std::move(weight)) {
  if (modulus && *modulus == 0) throw std::invalid_argument("DPAlgebra: modulus must be >= 1");
}

DPElement DPAlgebra::add(const Elem& u, const Elem& v) const {
  if (u.modulus() != v.modulus()) throw std::invalid_argument("DPAlgebra::add: modulus mismatch");
  std::vector<Scalar> out(std::max(u.support_end(), v.support_end()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.coeff(i) + v.coeff(i);
  return DPElement(u.modulus(), std::move(out));
}

DPElement DPAlgebra::scale(const Scalar& s, const Elem& u) const {
  std::vector<Scalar> out(u.support_end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * u.coeff(i);
  return DPElement(u.modulus(), std::move(out));
}

std::vector<std::pair<DPElement, Scalar>> DPAlgebra::decompose(const Elem& u) const {
  std::vector<std::pair<DPElement, Scalar>> parts;
  for (std::size_t i = 0; i < u.support_end(); ++i)
    if (!u.coeff(i).is_zero()) parts.emplace_back(DPElement::basis(u.modulus(), i), u.coeff(i));
  return parts;
}

}  // namespace drba
