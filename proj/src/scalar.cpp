#include "cliff/scalar.hpp"

#include <cmath>

namespace cliff {

Scalar::Scalar(Flt f) : v_(f) {
  if (!std::isfinite(f.re) || !std::isfinite(f.im)) {
    throw Error("non-finite float coefficient");
  }
}

namespace {

// mpq_class does not canonicalize on construction; every stored rational is
// reduced with a positive denominator.
mpq_class canonical(mpq_class v) {
  if (v.get_den() == 0) throw DivisionByZero();
  v.canonicalize();
  return v;
}

}  // namespace

Scalar Scalar::rational(mpq_class re) { return Scalar(Exact{canonical(std::move(re)), 0}); }

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
  return Scalar(Exact{canonical(std::move(re)), canonical(std::move(im))});
}

Scalar Scalar::complex_float(double re, double im) { return Scalar(Flt{re, im}); }

Scalar Scalar::zero(const FieldKind& kind) {
  return kind.exact() ? Scalar(Exact{0, 0}) : Scalar(Flt{0.0, 0.0});
}

Scalar Scalar::one(const FieldKind& kind) {
  return kind.exact() ? Scalar(Exact{1, 0}) : Scalar(Flt{1.0, 0.0});
}

Scalar Scalar::imaginary_unit(const FieldKind& kind) {
  switch (kind.tag) {
    case Field::RealExact:
      throw FieldMismatch("imaginary unit requested in a real algebra");
    case Field::ComplexExact:
      return Scalar(Exact{0, 1});
    case Field::ComplexFloat:
      return Scalar(Flt{0.0, 1.0});
  }
  throw Error("unreachable");
}

Scalar Scalar::from_int(long v, const FieldKind& kind) {
  return kind.exact() ? Scalar(Exact{mpq_class(v), 0}) : Scalar(Flt{double(v), 0.0});
}

bool Scalar::structurally_zero() const {
  if (exact()) {
    const auto& e = std::get<Exact>(v_);
    return e.re == 0 && e.im == 0;
  }
  const auto& f = std::get<Flt>(v_);
  return f.re == 0.0 && f.im == 0.0;
}

bool Scalar::has_imaginary_part() const {
  return exact() ? std::get<Exact>(v_).im != 0 : std::get<Flt>(v_).im != 0.0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact() != o.exact()) throw Error("mixed exact/float scalar arithmetic");
  if (exact()) {
    const auto& a = std::get<Exact>(v_);
    const auto& b = std::get<Exact>(o.v_);
    return Scalar(Exact{a.re + b.re, a.im + b.im});
  }
  const auto& a = std::get<Flt>(v_);
  const auto& b = std::get<Flt>(o.v_);
  return Scalar(Flt{a.re + b.re, a.im + b.im});
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact() != o.exact()) throw Error("mixed exact/float scalar arithmetic");
  if (exact()) {
    const auto& a = std::get<Exact>(v_);
    const auto& b = std::get<Exact>(o.v_);
    return Scalar(Exact{a.re - b.re, a.im - b.im});
  }
  const auto& a = std::get<Flt>(v_);
  const auto& b = std::get<Flt>(o.v_);
  return Scalar(Flt{a.re - b.re, a.im - b.im});
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact() != o.exact()) throw Error("mixed exact/float scalar arithmetic");
  if (exact()) {
    const auto& a = std::get<Exact>(v_);
    const auto& b = std::get<Exact>(o.v_);
    return Scalar(Exact{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re});
  }
  const auto& a = std::get<Flt>(v_);
  const auto& b = std::get<Flt>(o.v_);
  return Scalar(Flt{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re});
}

Scalar Scalar::operator-() const {
  if (exact()) {
    const auto& a = std::get<Exact>(v_);
    return Scalar(Exact{-a.re, -a.im});
  }
  const auto& a = std::get<Flt>(v_);
  return Scalar(Flt{-a.re, -a.im});
}

Scalar div(const Scalar& a, const Scalar& b, const FieldKind& kind) {
  if (kind.exact()) {
    if (b.structurally_zero()) throw DivisionByZero();
    const mpq_class norm = b.exact_re() * b.exact_re() + b.exact_im() * b.exact_im();
    // a / b = a * conj(b) / |b|^2
    mpq_class re = (a.exact_re() * b.exact_re() + a.exact_im() * b.exact_im()) / norm;
    mpq_class im = (a.exact_im() * b.exact_re() - a.exact_re() * b.exact_im()) / norm;
    return Scalar::gaussian(std::move(re), std::move(im));
  }
  if (std::hypot(b.float_re(), b.float_im()) <= kind.tolerance) throw DivisionByZero();
  const double norm = b.float_re() * b.float_re() + b.float_im() * b.float_im();
  return Scalar::complex_float(
      (a.float_re() * b.float_re() + a.float_im() * b.float_im()) / norm,
      (a.float_im() * b.float_re() - a.float_re() * b.float_im()) / norm);
}

bool is_zero(const Scalar& a, const FieldKind& kind) {
  if (kind.exact()) return a.structurally_zero();
  return std::hypot(a.float_re(), a.float_im()) <= kind.tolerance;
}

double abs_approx(const Scalar& a) {
  if (a.exact()) return std::hypot(a.exact_re().get_d(), a.exact_im().get_d());
  return std::hypot(a.float_re(), a.float_im());
}

}  // namespace cliff
