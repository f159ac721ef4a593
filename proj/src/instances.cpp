#include "cliff/instances.hpp"

#include "cliff/errors.hpp"
#include "cliff/reynolds.hpp"

namespace cliff {

long Rng::uniform_int(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

double Rng::uniform_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_unit(); }

namespace {

Scalar random_coefficient(Rng& rng, const FieldKind& kind, long bound) {
  switch (kind.tag) {
    case Field::RealExact:
      return Scalar::rational(mpq_class(rng.uniform_int(-bound, bound)));
    case Field::ComplexExact:
      return Scalar::gaussian(mpq_class(rng.uniform_int(-bound, bound)),
                              mpq_class(rng.uniform_int(-bound, bound)));
    case Field::ComplexFloat: {
      const double b = static_cast<double>(bound);
      return Scalar::complex_float(rng.uniform_real(-b, b), rng.uniform_real(-b, b));
    }
  }
  throw Error("unreachable");
}

// Conjugation by S multiplies relative float error by roughly the condition
// of S, so keep a generous margin below the default 1e-9 tolerance.
constexpr double kConditionLimit = 1e3;

}  // namespace

Multivector random_multivector(Rng& rng, const Signature& sig, const FieldKind& kind,
                               long bound) {
  Multivector u(sig, kind);
  for (BladeMask mask = 0; mask < sig.dim(); ++mask) {
    u.set_coeff(mask, random_coefficient(rng, kind, bound));
  }
  return u;
}

Multivector random_invertible(Rng& rng, const Signature& sig, const FieldKind& kind,
                              long bound) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Multivector s = random_multivector(rng, sig, kind, bound);
    try {
      const Multivector s_inv = mv_inverse(s);
      if (!kind.exact() && max_norm(s) * max_norm(s_inv) > kConditionLimit) continue;
      return s;
    } catch (const NotInvertible&) {
      continue;
    }
  }
  throw Error("no invertible element found after 256 draws");
}

bool case_admissible(const Signature& sig, Field field, int case_id) {
  if ((sig.n() & 1) == 0) return false;
  switch (case_id) {
    case 1:
    case 2:
      return true;
    case 3:
    case 4:
      return sig.signature_mod4() == 1;
    case 5:
    case 6:
      return field != Field::RealExact && sig.signature_mod4() == 3;
    default:
      return false;
  }
}

Instance make_instance(const InstanceSpec& spec) {
  const Signature& sig = spec.sig;
  const FieldKind& kind = spec.kind;

  int target = 0;
  if (spec.target_case) {
    if (!case_admissible(sig, kind.tag, *spec.target_case)) {
      throw AdmissibilityError("case " + std::to_string(*spec.target_case) +
                               " is not admissible for signature (" + std::to_string(sig.p) +
                               "," + std::to_string(sig.q) + ") over " +
                               (kind.tag == Field::RealExact ? "a real" : "a complex") +
                               " field");
    }
    target = *spec.target_case;
  }

  Rng rng(spec.seed);
  GeneratorSet gamma = GeneratorSet::canonical(sig, kind);
  Multivector s = random_invertible(rng, sig, kind, spec.coeff_bound);
  const Multivector s_inv = mv_inverse(s);

  Multivector factor = Multivector::unit(sig, kind);
  switch (target) {
    case 0:
    case 1:
      break;
    case 2:
      factor = -factor;
      break;
    case 3:
      factor = Multivector::blade(sig, kind, sig.full_mask(), Scalar::one(kind));
      break;
    case 4:
      factor = -Multivector::blade(sig, kind, sig.full_mask(), Scalar::one(kind));
      break;
    case 5:
      factor = Multivector::blade(sig, kind, sig.full_mask(), Scalar::imaginary_unit(kind));
      break;
    case 6:
      factor = -Multivector::blade(sig, kind, sig.full_mask(), Scalar::imaginary_unit(kind));
      break;
  }

  // beta^A = factor^{|A|} S e^A S^{-1} with factor^2 = e, so each blade is a
  // single conjugation; this also keeps the rationals at their final size
  // instead of letting sequential products grow them.
  std::vector<Multivector> beta_blades;
  beta_blades.reserve(sig.dim());
  beta_blades.push_back(Multivector::unit(sig, kind));
  for (BladeMask mask = 1; mask < sig.dim(); ++mask) {
    Multivector conj =
        s * Multivector::blade(sig, kind, mask, Scalar::one(kind)) * s_inv;
    beta_blades.push_back(even_grade(mask) ? std::move(conj) : factor * conj);
  }
  std::vector<Multivector> beta_gens;
  beta_gens.reserve(sig.n());
  for (int a = 1; a <= sig.n(); ++a) {
    beta_gens.push_back(beta_blades[BladeMask{1} << (a - 1)]);
  }
  GeneratorSet beta = GeneratorSet::from_verified_parts(sig, kind, std::move(beta_gens),
                                                        std::move(beta_blades));

  // Plain conjugation leaves the volume untouched, so an odd-n instance
  // without a target is a case-1 instance.
  const bool odd = (sig.n() & 1) != 0;
  const int constructed = odd ? (target == 0 ? 1 : target) : 0;
  return {std::move(gamma), std::move(beta), std::move(s), constructed};
}

}  // namespace cliff
