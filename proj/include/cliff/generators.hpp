#pragma once

#include <map>
#include <vector>

#include "cliff/multivector.hpp"

namespace cliff {

// n elements gamma^1..gamma^n satisfying gamma^a gamma^b + gamma^b gamma^a
// = 2 eta^{ab} e, together with the derived blades gamma^A (ascending-order
// products, precomputed at validation time).
class GeneratorSet {
 public:
  // Checks all n(n+1)/2 relations; throws RelationViolation on the first
  // failing pair (exact equality, or residual <= tolerance for floats).
  static GeneratorSet validate(Signature sig, FieldKind kind, std::vector<Multivector> gens);

  // gamma^a = e^a.
  static GeneratorSet canonical(Signature sig, FieldKind kind);

  const Signature& sig() const { return sig_; }
  const FieldKind& kind() const { return kind_; }
  const std::vector<Multivector>& generators() const { return gens_; }

  const Multivector& gen(int a) const { return gens_.at(static_cast<std::size_t>(a) - 1); }
  const Multivector& blade(BladeMask mask) const { return blades_[mask]; }  // gamma^A
  const Multivector& volume() const { return blades_[sig_.full_mask()]; }

  // (gamma^A)^{-1} = sign * gamma^A with the blade-square sign; blades are
  // always invertible so the general solver is never needed here.
  int reciprocal_sign(BladeMask mask) const { return blade_square_sign(mask, sig_); }
  Multivector reciprocal(BladeMask mask) const;

  // Skips the relation checks and the generic blade-table build. Only for
  // callers whose construction makes validity an algebraic identity (sigma
  // transforms, conjugation-built instances); tests re-validate those paths.
  static GeneratorSet from_verified_parts(Signature sig, FieldKind kind,
                                          std::vector<Multivector> gens,
                                          std::vector<Multivector> blades);

 private:
  GeneratorSet(Signature sig, FieldKind kind, std::vector<Multivector> gens);
  GeneratorSet(Signature sig, FieldKind kind, std::vector<Multivector> gens,
               std::vector<Multivector> blades)
      : sig_(sig), kind_(kind), gens_(std::move(gens)), blades_(std::move(blades)) {}

  Signature sig_;
  FieldKind kind_;
  std::vector<Multivector> gens_;
  std::vector<Multivector> blades_;  // indexed by mask
};

enum class BasisKind {
  VolumeBasis,      // gamma^{1..n} = +-e^{1..n}; {gamma^A} is a basis
  ScalarCentral,    // gamma^{1..n} = +-e; only odd n with p-q = 1 mod 4
  ImaginaryCentral  // gamma^{1..n} = +-i e; only complex, odd n, p-q = 3 mod 4
};

struct BasisClassification {
  BasisKind kind;
  int sign;  // +1 or -1 (for ImaginaryCentral: the sign of i)

  bool is_basis() const { return kind == BasisKind::VolumeBasis; }
  bool operator==(const BasisClassification&) const = default;
};

// Matches the set's volume element against the admissible values. For odd n
// the volume is central, so it always equals one of +-e^{1..n}, +-e, +-ie
// and the sign is exact; anything else throws UnclassifiableVolume (float
// tolerance failure or invalid input). For even n the set is always a basis
// but its volume is merely conjugate to +-e^{1..n}; the reported sign is the
// literal match when there is one and +1 otherwise.
BasisClassification classify_basis(const GeneratorSet& s);

// Tr(gamma^A) for every A != empty.
std::map<BladeMask, Scalar> trace_profile(const GeneratorSet& s);

// pi(gamma^A) for every A != empty; odd n only.
std::map<BladeMask, Scalar> pi_profile(const GeneratorSet& s);

struct CommutationProfile {
  int even_commute = 0;
  int odd_commute = 0;
  int even_anti = 0;
  int odd_anti = 0;

  bool operator==(const CommutationProfile&) const = default;
};

// How gamma^A sits against the whole set {gamma^B}: counts B by grade parity
// and commute/anticommute. Determined structurally from the sign rule
// gamma^A gamma^B = (-1)^{|A||B| - |A n B|} gamma^B gamma^A.
// Rejects A in {empty, full}.
CommutationProfile commutation_profile(const GeneratorSet& s, BladeMask a);

enum class SigmaFactor { Neg, VolPlus, VolMinus, IVolPlus, IVolMinus };

// sigma^a = f * gamma^a with f in {-e, +-e^{1..n}, +-i e^{1..n}}. The vol
// factors require odd n with p-q = 1 mod 4, the ivol factors additionally a
// complex field with p-q = 3 mod 4. Vol/ivol transforms flip the basis /
// non-basis classification.
GeneratorSet sigma_transform(const GeneratorSet& s, SigmaFactor factor);

}  // namespace cliff
