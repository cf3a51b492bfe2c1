#include "drba/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace drba {

Scalar::Scalar(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  v_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view t = text.substr(b, e - b);
  if (t.empty()) throw std::invalid_argument("Scalar: empty string");

  // Validate the shape ourselves: GMP's string constructor is laxer than the
  // documented "p/q" | "p" contract (it allows bases, strays on some inputs).
  auto digits = [](std::string& s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);  // GMP rejects a leading '+'
    std::string_view v = s;
    if (!v.empty() && v[0] == '-') v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num(t), den = "1";
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    num = std::string(t.substr(0, slash));
    den = std::string(t.substr(slash + 1));
  }
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("Scalar: expected \"p/q\" or \"p\", got \"" + std::string(text) + "\"");

  mpq_class v(num + "/" + den);
  if (sgn(v.get_den()) == 0) throw std::invalid_argument("Scalar: zero denominator in \"" + std::string(text) + "\"");
  v.canonicalize();
  return Scalar(std::move(v));
}

Scalar Scalar::binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Scalar(mpq_class(b));
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  if (is_zero() && e < 0) throw std::domain_error("Scalar: 0 to a negative power");
  mpq_class base = e > 0 ? v_ : mpq_class(v_.get_den(), v_.get_num());
  base.canonicalize();
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  r.canonicalize();
  return Scalar(std::move(r));
}

Scalar Scalar::operator-() const {
  mpq_class r(-v_);
  return Scalar(std::move(r));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.v_.get_str(); }

}  // namespace drba
