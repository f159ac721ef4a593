#include "cliff/generators.hpp"

#include <bit>
#include <stdexcept>

#include "cliff/errors.hpp"

namespace cliff {

GeneratorSet::GeneratorSet(Signature sig, FieldKind kind, std::vector<Multivector> gens)
    : sig_(sig), kind_(kind), gens_(std::move(gens)) {
  blades_.reserve(sig_.dim());
  blades_.push_back(Multivector::unit(sig_, kind_));
  for (BladeMask m = 1; m < sig_.dim(); ++m) {
    const int lowest = std::countr_zero(m);
    // gamma^{a_1...a_k} = gamma^{a_1} * gamma^{a_2...a_k}
    blades_.push_back(gens_[lowest] * blades_[m & (m - 1)]);
  }
}

GeneratorSet GeneratorSet::validate(Signature sig, FieldKind kind,
                                    std::vector<Multivector> gens) {
  if (gens.size() != static_cast<std::size_t>(sig.n())) {
    throw std::invalid_argument("expected exactly n generators");
  }
  for (const auto& g : gens) {
    if (!(g.sig() == sig) || !compatible(g.kind(), kind)) {
      throw std::invalid_argument("generator signature or field mismatch");
    }
  }
  for (int a = 1; a <= sig.n(); ++a) {
    for (int b = a; b <= sig.n(); ++b) {
      Multivector lhs = gens[a - 1] * gens[b - 1] + gens[b - 1] * gens[a - 1];
      Multivector rhs(sig, kind);
      if (a == b) {
        rhs.set_coeff(0, Scalar::from_int(2 * sig.eta(a), kind));
      }
      if (!mv_equal(lhs, rhs)) {
        throw RelationViolation(a, b, distance(lhs, rhs));
      }
    }
  }
  return GeneratorSet(sig, kind, std::move(gens));
}

GeneratorSet GeneratorSet::canonical(Signature sig, FieldKind kind) {
  std::vector<Multivector> gens;
  gens.reserve(sig.n());
  for (int a = 1; a <= sig.n(); ++a) {
    gens.push_back(
        Multivector::blade(sig, kind, BladeMask{1} << (a - 1), Scalar::one(kind)));
  }
  return GeneratorSet(sig, kind, std::move(gens));
}

Multivector GeneratorSet::reciprocal(BladeMask mask) const {
  const Multivector& b = blades_[mask];
  return reciprocal_sign(mask) > 0 ? b : -b;
}

GeneratorSet GeneratorSet::from_verified_parts(Signature sig, FieldKind kind,
                                               std::vector<Multivector> gens,
                                               std::vector<Multivector> blades) {
  if (gens.size() != static_cast<std::size_t>(sig.n()) || blades.size() != sig.dim()) {
    throw std::invalid_argument("verified parts have the wrong shape");
  }
  return GeneratorSet(sig, kind, std::move(gens), std::move(blades));
}

namespace {

bool matches(const Multivector& omega, const Multivector& candidate) {
  return mv_equal(omega, candidate);
}

}  // namespace

BasisClassification classify_basis(const GeneratorSet& s) {
  const Signature& sig = s.sig();
  const FieldKind& kind = s.kind();
  const Multivector& omega = s.volume();
  const Scalar one = Scalar::one(kind);

  const Multivector vol = Multivector::blade(sig, kind, sig.full_mask(), one);
  if (matches(omega, vol)) return {BasisKind::VolumeBasis, +1};
  if (matches(omega, -vol)) return {BasisKind::VolumeBasis, -1};

  const bool odd = (sig.n() & 1) != 0;
  if (odd && sig.signature_mod4() == 1) {
    const Multivector e = Multivector::unit(sig, kind);
    if (matches(omega, e)) return {BasisKind::ScalarCentral, +1};
    if (matches(omega, -e)) return {BasisKind::ScalarCentral, -1};
  }
  if (odd && kind.allows_imaginary() && sig.signature_mod4() == 3) {
    const Multivector ie =
        Multivector::scalar_multiple(sig, kind, Scalar::imaginary_unit(kind));
    if (matches(omega, ie)) return {BasisKind::ImaginaryCentral, +1};
    if (matches(omega, -ie)) return {BasisKind::ImaginaryCentral, -1};
  }
  // Even n always yields a basis, but the volume element need not equal
  // +-e^{1..n} (it is only a conjugate of it): the sign is meaningful only
  // when the literal match above succeeded.
  if (!odd) return {BasisKind::VolumeBasis, +1};
  throw UnclassifiableVolume();
}

std::map<BladeMask, Scalar> trace_profile(const GeneratorSet& s) {
  std::map<BladeMask, Scalar> out;
  for (BladeMask m = 1; m < s.sig().dim(); ++m) out.emplace(m, trace(s.blade(m)));
  return out;
}

std::map<BladeMask, Scalar> pi_profile(const GeneratorSet& s) {
  if ((s.sig().n() & 1) == 0) throw OddDimensionRequired();
  std::map<BladeMask, Scalar> out;
  for (BladeMask m = 1; m < s.sig().dim(); ++m) out.emplace(m, pi_project(s.blade(m)));
  return out;
}

CommutationProfile commutation_profile(const GeneratorSet& s, BladeMask a) {
  if (a == 0 || a == s.sig().full_mask()) {
    throw std::invalid_argument("commutation profile excludes e and the volume element");
  }
  const int ka = grade(a);
  CommutationProfile profile;
  for (BladeMask b = 0; b < s.sig().dim(); ++b) {
    const int kb = grade(b);
    const int shared = grade(a & b);
    const bool commute = (((ka * kb - shared) & 1) == 0);
    const bool even = (kb & 1) == 0;
    if (commute) {
      (even ? profile.even_commute : profile.odd_commute)++;
    } else {
      (even ? profile.even_anti : profile.odd_anti)++;
    }
  }
  return profile;
}

GeneratorSet sigma_transform(const GeneratorSet& s, SigmaFactor factor) {
  const Signature& sig = s.sig();
  const FieldKind& kind = s.kind();
  const bool odd = (sig.n() & 1) != 0;

  Multivector f(sig, kind);
  switch (factor) {
    case SigmaFactor::Neg:
      f = -Multivector::unit(sig, kind);
      break;
    case SigmaFactor::VolPlus:
    case SigmaFactor::VolMinus: {
      if (!odd || sig.signature_mod4() != 1) {
        throw SignatureMismatch("volume factor requires odd n with p-q = 1 mod 4");
      }
      f = Multivector::blade(sig, kind, sig.full_mask(), Scalar::one(kind));
      if (factor == SigmaFactor::VolMinus) f = -f;
      break;
    }
    case SigmaFactor::IVolPlus:
    case SigmaFactor::IVolMinus: {
      if (!kind.allows_imaginary()) {
        throw FieldMismatch("imaginary volume factor requires a complex field");
      }
      if (!odd || sig.signature_mod4() != 3) {
        throw SignatureMismatch("imaginary volume factor requires odd n with p-q = 3 mod 4");
      }
      f = Multivector::blade(sig, kind, sig.full_mask(), Scalar::imaginary_unit(kind));
      if (factor == SigmaFactor::IVolMinus) f = -f;
      break;
    }
  }

  // Every admissible factor is central with f^2 = e, so sigma^A = gamma^A
  // for even |A| and f gamma^A for odd |A|. The relations carry over from
  // the source set; tests re-validate transformed sets.
  std::vector<Multivector> transformed;
  transformed.reserve(s.generators().size());
  for (const auto& g : s.generators()) transformed.push_back(f * g);
  std::vector<Multivector> blades;
  blades.reserve(sig.dim());
  for (BladeMask m = 0; m < sig.dim(); ++m) {
    blades.push_back(even_grade(m) ? s.blade(m) : f * s.blade(m));
  }
  return GeneratorSet::from_verified_parts(sig, kind, std::move(transformed),
                                           std::move(blades));
}

}  // namespace cliff
