#include "micz/exact/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace micz::exact {

GaussianRational GaussianRational::reciprocal() const {
  const Rational n = norm2();
  if (n.is_zero()) throw std::domain_error("GaussianRational: reciprocal of zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag = (im_ == Rational(1)) ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "i");
  if (re_.is_zero()) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return re_.str() + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("GaussianRational::parse: empty string");
  if (text.back() != 'i') return {Rational::parse(text)};
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string_view s) {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return Rational::parse(s);
  };
  if (split == std::string_view::npos) return {Rational(0), imag_of(body)};
  return {Rational::parse(body.substr(0, split)), imag_of(body.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace micz::exact
