#include "drba/scalar_poly.hpp"

#include <stdexcept>

namespace drba {

namespace {
const Scalar kZero{};
}

ScalarPoly::ScalarPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ScalarPoly ScalarPoly::constant(const Scalar& c) { return ScalarPoly({c}); }

ScalarPoly ScalarPoly::parse(std::string_view text) {
  std::vector<Scalar> coeffs;
  if (text.empty()) return ScalarPoly{};
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    coeffs.push_back(Scalar::parse(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ScalarPoly(std::move(coeffs));
}

std::optional<std::size_t> ScalarPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

const Scalar& ScalarPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

Scalar ScalarPoly::eval(const Scalar& x) const {
  Scalar acc;  // Horner, high to low
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string ScalarPoly::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].str();
  }
  return out;
}

std::string ScalarPoly::pretty(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = c.str();
    } else {
      if (c.is_one())
        term = "";
      else if (c == Scalar(-1))
        term = "-";
      else
        term = c.str();
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) {
      if (!term.empty() && term[0] == '-') {
        out += " - ";
        term.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::optional<std::size_t> poly_degree(const ScalarPoly& p) { return p.degree(); }

}  // namespace drba
