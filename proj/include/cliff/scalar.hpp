#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "cliff/errors.hpp"

namespace cliff {

enum class Field { RealExact, ComplexExact, ComplexFloat };

// Which coefficient field an algebra lives over. The tolerance applies only
// to ComplexFloat; exact fields compare structurally.
struct FieldKind {
  Field tag = Field::RealExact;
  double tolerance = 1e-9;

  bool exact() const { return tag != Field::ComplexFloat; }
  bool allows_imaginary() const { return tag != Field::RealExact; }
};

inline bool compatible(const FieldKind& a, const FieldKind& b) { return a.tag == b.tag; }

// One coefficient: a Gaussian rational (with im = 0 throughout a RealExact
// algebra) or a complex double. Exact values are canonical by construction:
// mpq_class keeps lowest terms with positive denominator.
class Scalar {
 public:
  struct Exact {
    mpq_class re;
    mpq_class im;
    bool operator==(const Exact& o) const { return re == o.re && im == o.im; }
  };
  struct Flt {
    double re;
    double im;
    bool operator==(const Flt& o) const = default;
  };

  Scalar() : v_(Exact{0, 0}) {}

  static Scalar rational(mpq_class re);
  static Scalar gaussian(mpq_class re, mpq_class im);
  static Scalar complex_float(double re, double im);  // rejects NaN/Inf
  static Scalar zero(const FieldKind& kind);
  static Scalar one(const FieldKind& kind);
  static Scalar imaginary_unit(const FieldKind& kind);  // FieldMismatch on RealExact
  static Scalar from_int(long v, const FieldKind& kind);

  bool exact() const { return std::holds_alternative<Exact>(v_); }
  const mpq_class& exact_re() const { return std::get<Exact>(v_).re; }
  const mpq_class& exact_im() const { return std::get<Exact>(v_).im; }
  double float_re() const { return std::get<Flt>(v_).re; }
  double float_im() const { return std::get<Flt>(v_).im; }

  bool structurally_zero() const;
  bool has_imaginary_part() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const { return v_ == o.v_; }

 private:
  explicit Scalar(Exact e) : v_(std::move(e)) {}
  explicit Scalar(Flt f);

  std::variant<Exact, Flt> v_;
};

// Division checks the divisor: zero (exact) or modulus <= tolerance (float)
// raises DivisionByZero instead of producing Inf.
Scalar div(const Scalar& a, const Scalar& b, const FieldKind& kind);

// Exact fields: structural zero. Float: modulus <= tolerance.
bool is_zero(const Scalar& a, const FieldKind& kind);

// Modulus as a double, for residual reporting only.
double abs_approx(const Scalar& a);

}  // namespace cliff
