#pragma once

#include <map>
#include <utility>

#include "cliff/blade.hpp"
#include "cliff/scalar.hpp"

namespace cliff {

// A Clifford algebra element as a sparse coefficient map over blade masks.
// Immutable in practice: operations return fresh values. Exact fields never
// store a structural zero.
class Multivector {
 public:
  Multivector(Signature sig, FieldKind kind) : sig_(sig), kind_(kind) {}

  static Multivector unit(Signature sig, FieldKind kind);  // the identity e
  static Multivector blade(Signature sig, FieldKind kind, BladeMask mask, Scalar coeff);
  static Multivector scalar_multiple(Signature sig, FieldKind kind, Scalar coeff);

  const Signature& sig() const { return sig_; }
  const FieldKind& kind() const { return kind_; }
  const std::map<BladeMask, Scalar>& coeffs() const { return coeffs_; }

  Scalar coeff(BladeMask mask) const;
  void set_coeff(BladeMask mask, Scalar value);
  void add_to_coeff(BladeMask mask, const Scalar& value);

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);

  bool is_zero() const;              // kind-aware: tolerance for floats
  bool structurally_empty() const { return coeffs_.empty(); }

 private:
  Signature sig_;
  FieldKind kind_;
  std::map<BladeMask, Scalar> coeffs_;
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
Multivector operator*(const Multivector& a, const Multivector& b);  // Clifford product
Multivector scale(const Multivector& a, const Scalar& s);

Multivector grade_project(const Multivector& u, int k);
Scalar trace(const Multivector& u);       // coefficient of e
Scalar pi_project(const Multivector& u);  // coefficient of the volume blade
std::pair<Multivector, Multivector> parity_split(const Multivector& u);

// X with UX = XU = e, via the left-regular representation: solve the
// 2^n x 2^n system whose column A' holds the coefficients of U e^{A'}.
// Exact fields pivot on the first nonzero entry, floats on the largest
// modulus; a deficient pivot raises NotInvertible.
Multivector mv_inverse(const Multivector& u);

// True iff u commutes with every generator blade e^a.
bool is_central(const Multivector& u);

// Kind-aware equality: structural for exact fields, max-norm distance within
// tolerance for floats.
bool mv_equal(const Multivector& a, const Multivector& b);

double max_norm(const Multivector& u);                        // max coefficient modulus
double distance(const Multivector& a, const Multivector& b);  // max_norm(a - b)

}  // namespace cliff
