#include "cliff/reynolds.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "cliff/errors.hpp"

namespace cliff {

namespace {

void require_pair(const GeneratorSet& a, const GeneratorSet& b) {
  if (!(a.sig() == b.sig()) || !compatible(a.kind(), b.kind())) {
    throw std::invalid_argument("generator sets disagree on signature or field");
  }
}

Scalar inv_pow2(int exponent, const FieldKind& kind) {
  if (kind.exact()) {
    mpq_class v(1);
    v /= (mpz_class(1) << exponent);
    return Scalar::gaussian(std::move(v), 0);
  }
  return Scalar::complex_float(std::ldexp(1.0, -exponent), 0.0);
}

}  // namespace

Multivector reynolds_average(const GeneratorSet& s, const Multivector& u) {
  if (!(s.sig() == u.sig()) || !compatible(s.kind(), u.kind())) {
    throw std::invalid_argument("operand does not live in the set's algebra");
  }
  Multivector sum(s.sig(), s.kind());
  for (BladeMask a = 0; a < s.sig().dim(); ++a) {
    const Multivector term = s.blade(a) * u * s.blade(a);
    if (s.reciprocal_sign(a) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return scale(sum, inv_pow2(s.sig().n(), s.kind()));
}

Multivector mixed_average(const GeneratorSet& left, const GeneratorSet& right,
                          const Multivector& u) {
  require_pair(left, right);
  Multivector sum(left.sig(), left.kind());
  for (BladeMask a = 0; a < left.sig().dim(); ++a) {
    const Multivector term = left.blade(a) * u * right.blade(a);
    if (right.reciprocal_sign(a) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return scale(sum, inv_pow2(left.sig().n(), left.kind()));
}

Multivector mixed_average_even(const GeneratorSet& left, const GeneratorSet& right,
                               const Multivector& u) {
  require_pair(left, right);
  Multivector sum(left.sig(), left.kind());
  for (BladeMask a = 0; a < left.sig().dim(); ++a) {
    if (!even_grade(a)) continue;
    const Multivector term = left.blade(a) * u * right.blade(a);
    if (right.reciprocal_sign(a) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return scale(sum, inv_pow2(left.sig().n() - 1, left.kind()));
}

PairSums double_sums(const GeneratorSet& gamma, const GeneratorSet& beta) {
  require_pair(gamma, beta);
  const Signature& sig = gamma.sig();

  // gamma^B gamma_A gamma_B collapses to a signed gamma^A: blades of one
  // valid set multiply under exactly the e-blade sign rule, so the four-
  // factor term is sign(A,B) * beta^A gamma^A. Tests check this against the
  // literal quadruple product.
  Multivector even_sum(sig, gamma.kind());
  Multivector odd_sum(sig, gamma.kind());
  for (BladeMask a = 0; a < sig.dim(); ++a) {
    long even_weight = 0;
    long odd_weight = 0;
    for (BladeMask b = 0; b < sig.dim(); ++b) {
      const auto [s1, ba] = blade_product(b, a, sig);
      const int s2 = blade_product(ba, b, sig).sign;
      const int sign = s1 * s2 * blade_square_sign(a, sig) * blade_square_sign(b, sig);
      (even_grade(b) ? even_weight : odd_weight) += sign;
    }
    if (even_weight == 0 && odd_weight == 0) continue;
    const Multivector pair_product = beta.blade(a) * gamma.blade(a);
    if (even_weight != 0) {
      even_sum += scale(pair_product, Scalar::from_int(even_weight, gamma.kind()));
    }
    if (odd_weight != 0) {
      odd_sum += scale(pair_product, Scalar::from_int(odd_weight, gamma.kind()));
    }
  }
  return {even_sum, odd_sum};
}

namespace {

struct CaseCandidate {
  int id;
  Multivector central;
};

std::vector<CaseCandidate> admissible_cases(const Signature& sig, const FieldKind& kind) {
  const Scalar one = Scalar::one(kind);
  const Multivector e = Multivector::unit(sig, kind);
  const Multivector vol = Multivector::blade(sig, kind, sig.full_mask(), one);

  std::vector<CaseCandidate> cases;
  cases.push_back({1, e});
  cases.push_back({2, -e});
  if (sig.signature_mod4() == 1) {
    cases.push_back({3, vol});
    cases.push_back({4, -vol});
  }
  if (kind.allows_imaginary() && sig.signature_mod4() == 3) {
    const Multivector ivol =
        Multivector::blade(sig, kind, sig.full_mask(), Scalar::imaginary_unit(kind));
    cases.push_back({5, ivol});
    cases.push_back({6, -ivol});
  }
  return cases;
}

SigmaFactor reduction_factor(int case_id) {
  switch (case_id) {
    case 2: return SigmaFactor::Neg;
    case 3: return SigmaFactor::VolPlus;
    case 4: return SigmaFactor::VolMinus;
    case 5: return SigmaFactor::IVolPlus;
    case 6: return SigmaFactor::IVolMinus;
    default: throw std::invalid_argument("case 1 needs no reduction");
  }
}

}  // namespace

OddCase classify_odd(const GeneratorSet& gamma, const GeneratorSet& beta) {
  require_pair(gamma, beta);
  if ((gamma.sig().n() & 1) == 0) throw OddDimensionRequired();

  const Multivector c = beta.volume() * gamma.reciprocal(gamma.sig().full_mask());
  for (const auto& candidate : admissible_cases(gamma.sig(), gamma.kind())) {
    if (mv_equal(c, candidate.central)) return {candidate.id, candidate.central};
  }
  throw UnclassifiableCase();
}

Multivector normalize_leading(const Multivector& t) {
  Scalar lead = Scalar::zero(t.kind());
  bool found = false;
  for (BladeMask mask : canonical_masks(t.sig().n())) {
    const Scalar c = t.coeff(mask);
    if (!is_zero(c, t.kind())) {
      lead = c;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("cannot normalize the zero element");
  Multivector out(t.sig(), t.kind());
  for (const auto& [mask, c] : t.coeffs()) out.set_coeff(mask, div(c, lead, t.kind()));
  return out;
}

double verify_intertwiner(const GeneratorSet& gamma, const GeneratorSet& beta,
                          const Multivector& t, const Multivector& central) {
  require_pair(gamma, beta);
  const Multivector t_inv = mv_inverse(t);
  double residual = 0.0;
  for (int a = 1; a <= gamma.sig().n(); ++a) {
    const Multivector rhs = central * t_inv * beta.gen(a) * t;
    residual = std::max(residual, distance(gamma.gen(a), rhs));
  }
  return residual;
}

namespace {

double residual_limit(const FieldKind& kind) { return kind.exact() ? 0.0 : kind.tolerance; }

Scalar leading_coefficient(const Multivector& t) {
  for (BladeMask mask : canonical_masks(t.sig().n())) {
    const Scalar c = t.coeff(mask);
    if (!is_zero(c, t.kind())) return c;
  }
  throw std::invalid_argument("cannot normalize the zero element");
}

// Normalizes T, derives T^{-1} from the raw inverse when the caller already
// has it, and verifies gamma^a = c T^{-1} beta^a T against the stated limit.
SolveResult finish(const GeneratorSet& gamma, const GeneratorSet& beta,
                   const Multivector& t_raw, const Multivector* t_raw_inv,
                   const Multivector& central, int case_id,
                   std::vector<BladeMask> candidate) {
  const Scalar lead = leading_coefficient(t_raw);
  SolveResult result{scale(t_raw, div(Scalar::one(t_raw.kind()), lead, t_raw.kind())),
                     t_raw_inv ? scale(*t_raw_inv, lead) : Multivector(gamma.sig(), gamma.kind()),
                     central,
                     case_id,
                     std::move(candidate),
                     0.0};
  if (!t_raw_inv) result.t_inverse = mv_inverse(result.t);
  double residual = 0.0;
  for (int a = 1; a <= gamma.sig().n(); ++a) {
    const Multivector rhs = central * result.t_inverse * beta.gen(a) * result.t;
    residual = std::max(residual, distance(gamma.gen(a), rhs));
  }
  result.residual = residual;
  if (residual > residual_limit(gamma.kind())) throw VerificationFailed(residual);
  return result;
}

}  // namespace

SolveResult solve_even(const GeneratorSet& gamma, const GeneratorSet& beta) {
  require_pair(gamma, beta);
  const Signature& sig = gamma.sig();
  if ((sig.n() & 1) != 0) throw std::invalid_argument("solve_even requires even n");

  // Candidate list per the volume comparison: even multi-indices unless
  // beta^{1..n} = -gamma^{1..n}, in which case only the odd list works.
  const bool use_even = !mv_equal(beta.volume(), -gamma.volume());
  for (BladeMask mask : canonical_masks(sig.n())) {
    if (even_grade(mask) != use_even) continue;
    const Multivector t_raw = mixed_average(beta, gamma, gamma.blade(mask));
    if (t_raw.is_zero()) continue;
    const Multivector central = Multivector::unit(sig, gamma.kind());
    return finish(gamma, beta, t_raw, nullptr, central, kEvenCase, {mask});
  }
  throw NoCandidateFound();
}

SolveResult solve_odd(const GeneratorSet& gamma, const GeneratorSet& beta) {
  require_pair(gamma, beta);
  const Signature& sig = gamma.sig();
  if ((sig.n() & 1) == 0) throw std::invalid_argument("solve_odd requires odd n");

  const OddCase odd_case = classify_odd(gamma, beta);

  // Reduce beta so both volumes agree (case 1 of the classification).
  GeneratorSet beta_reduced =
      odd_case.id == 1 ? beta : sigma_transform(beta, reduction_factor(odd_case.id));

  // When the pair is non-basis, move both sets to bases; the admissible
  // factor is dictated by the signature (and field).
  GeneratorSet gamma_work = gamma;
  if (!classify_basis(gamma_work).is_basis()) {
    const SigmaFactor to_basis =
        sig.signature_mod4() == 1 ? SigmaFactor::VolPlus : SigmaFactor::IVolPlus;
    gamma_work = sigma_transform(gamma_work, to_basis);
    beta_reduced = sigma_transform(beta_reduced, to_basis);
  }

  auto attempt = [&](const Multivector& u,
                     std::vector<BladeMask> candidate) -> std::optional<SolveResult> {
    const Multivector t_raw = mixed_average_even(beta_reduced, gamma_work, u);
    if (t_raw.is_zero()) return std::nullopt;
    Multivector t_raw_inv(sig, gamma.kind());
    try {
      t_raw_inv = mv_inverse(t_raw);  // nonzero is not sufficient in odd dimension
    } catch (const NotInvertible&) {
      return std::nullopt;
    }
    return finish(gamma, beta, t_raw, &t_raw_inv, odd_case.central, odd_case.id,
                  std::move(candidate));
  };

  std::vector<BladeMask> even_masks;
  for (BladeMask mask : canonical_masks(sig.n())) {
    if (even_grade(mask)) even_masks.push_back(mask);
  }

  for (BladeMask mask : even_masks) {
    if (auto result = attempt(gamma_work.blade(mask), {mask})) return *result;
  }
  for (std::size_t i = 0; i < even_masks.size(); ++i) {
    for (std::size_t j = i + 1; j < even_masks.size(); ++j) {
      const Multivector u = gamma_work.blade(even_masks[i]) + gamma_work.blade(even_masks[j]);
      if (auto result = attempt(u, {even_masks[i], even_masks[j]})) return *result;
    }
  }
  throw NoCandidateFound();
}

SolveResult solve(const GeneratorSet& gamma, const GeneratorSet& beta) {
  return (gamma.sig().n() & 1) == 0 ? solve_even(gamma, beta) : solve_odd(gamma, beta);
}

bool uniqueness_check(const GeneratorSet& gamma, const GeneratorSet& beta,
                      const Multivector& t1, const Multivector& t2) {
  require_pair(gamma, beta);
  const Multivector ratio = t1 * mv_inverse(t2);
  if ((gamma.sig().n() & 1) == 0) {
    // A nonzero scalar multiple of e.
    if (is_zero(trace(ratio), gamma.kind())) return false;
    return mv_equal(ratio, Multivector::scalar_multiple(gamma.sig(), gamma.kind(),
                                                        trace(ratio)));
  }
  if (!is_central(ratio)) return false;
  try {
    mv_inverse(ratio);
  } catch (const NotInvertible&) {
    return false;
  }
  return true;
}

}  // namespace cliff
