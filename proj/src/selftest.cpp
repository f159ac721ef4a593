#include "cliff/selftest.hpp"

#include <functional>

#include "cliff/errors.hpp"
#include "cliff/reynolds.hpp"

namespace cliff {

bool SelftestReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

const SelftestEntry* SelftestReport::first_failure() const {
  for (const auto& e : entries) {
    if (!e.pass) return &e;
  }
  return nullptr;
}

namespace {

struct TrialContext {
  std::uint64_t seed;
  GeneratorSet gamma;
  GeneratorSet beta;
  Multivector u;
  Multivector v;
  Multivector w;
  int constructed_case;  // 0 for even n
};

// Exact fields compare structurally. Float identities are checked against a
// tolerance scaled by the magnitude of the operands, since the raw identity
// terms can be large while the tolerance is absolute.
bool close(const Multivector& a, const Multivector& b) {
  if (a.kind().exact()) return mv_equal(a, b);
  const double scale = std::max({1.0, max_norm(a), max_norm(b)});
  return distance(a, b) <= a.kind().tolerance * scale;
}

Multivector central_of(const Multivector& model, const Scalar& tr, const Scalar& pi) {
  Multivector out(model.sig(), model.kind());
  out.set_coeff(0, tr);
  if ((model.sig().n() & 1) != 0) out.set_coeff(model.sig().full_mask(), pi);
  return out;
}

using Check = std::function<std::string(const TrialContext&)>;

std::string ok() { return {}; }

std::string check_associativity(const TrialContext& t) {
  if (!close((t.u * t.v) * t.w, t.u * (t.v * t.w))) return "associativity failed";
  return ok();
}

std::string check_anticommutation(const TrialContext& t) {
  try {
    GeneratorSet::validate(t.gamma.sig(), t.gamma.kind(), t.gamma.generators());
    GeneratorSet::validate(t.beta.sig(), t.beta.kind(), t.beta.generators());
  } catch (const RelationViolation& e) {
    return e.what();
  }
  return ok();
}

std::string check_trace_cyclic(const TrialContext& t) {
  if (!(trace(t.u * t.v) == trace(t.v * t.u))) {
    if (t.u.kind().exact()) return "Tr(UV) != Tr(VU)";
    if (abs_approx(trace(t.u * t.v) - trace(t.v * t.u)) >
        t.u.kind().tolerance * std::max({1.0, max_norm(t.u), max_norm(t.v)})) {
      return "Tr(UV) != Tr(VU)";
    }
  }
  return ok();
}

std::string check_pi_cyclic(const TrialContext& t) {
  const Multivector lhs = grade_project(t.u * t.v, t.u.sig().n());
  const Multivector rhs = grade_project(t.v * t.u, t.u.sig().n());
  if (!close(lhs, rhs)) return "pi(UV) != pi(VU)";
  return ok();
}

std::string check_grade_decomposition(const TrialContext& t) {
  Multivector sum(t.u.sig(), t.u.kind());
  for (int k = 0; k <= t.u.sig().n(); ++k) sum = sum + grade_project(t.u, k);
  if (!mv_equal(sum, t.u)) return "grade parts do not sum to U";
  return ok();
}

std::string check_parity_closure(const TrialContext& t) {
  const auto [ue, uo] = parity_split(t.u);
  const auto [ve, vo] = parity_split(t.v);
  if (!mv_equal(ue + uo, t.u)) return "parity parts do not sum to U";
  const auto [pe, po] = parity_split(ue * ve);
  if (!po.is_zero()) return "product of even parts has an odd component";
  return ok();
}

std::string check_reynolds_projector(const TrialContext& t) {
  const Multivector f = reynolds_average(t.gamma, t.u);
  if (!close(reynolds_average(t.gamma, f), f)) return "F^2 != F";
  if (t.u.kind().exact() && !is_central(f)) return "F(U) is not central";
  return ok();
}

std::string check_reynolds_center_formula(const TrialContext& t) {
  if (!classify_basis(t.gamma).is_basis()) return ok();  // formula assumes a basis
  const Multivector f = reynolds_average(t.gamma, t.u);
  const Multivector expect = central_of(t.u, trace(t.u), pi_project(t.u));
  if (!close(f, expect)) return "F(U) != Tr(U)e (+ pi(U) e^{1..n})";
  return ok();
}

std::string check_h_intertwining(const TrialContext& t) {
  const Multivector h = mixed_average(t.beta, t.gamma, t.u);
  for (BladeMask b = 0; b < t.u.sig().dim(); ++b) {
    if (!close(t.beta.blade(b) * h, h * t.gamma.blade(b))) {
      return "beta^B H(U) != H(U) gamma^B at B=" + blade_key(b);
    }
  }
  return ok();
}

std::string check_p_intertwining(const TrialContext& t) {
  const Multivector p = mixed_average(t.gamma, t.beta, t.v);
  for (BladeMask b = 0; b < t.u.sig().dim(); ++b) {
    if (!close(t.gamma.blade(b) * p, p * t.beta.blade(b))) {
      return "gamma^B P(V) != P(V) beta^B at B=" + blade_key(b);
    }
  }
  return ok();
}

std::string check_hp_product(const TrialContext& t) {
  const Multivector h = mixed_average(t.beta, t.gamma, t.u);
  const Multivector p = mixed_average(t.gamma, t.beta, t.v);
  if (!close(p * h, h * p)) return "P(V)H(U) != H(U)P(V)";
  const Multivector vh = t.v * h;
  const Multivector expect = central_of(t.u, trace(vh), pi_project(vh));
  if (!close(p * h, expect)) return "P(V)H(U) != Tr(VH)e (+ pi(VH) e^{1..n})";
  return ok();
}

std::string check_sum_identities(const TrialContext& t) {
  const auto sums = double_sums(t.gamma, t.beta);
  const Multivector prod = t.beta.volume() * t.gamma.reciprocal(t.gamma.sig().full_mask());
  const Multivector e = Multivector::unit(t.u.sig(), t.u.kind());
  const Scalar half_count = Scalar::from_int(1L << (t.u.sig().n() - 1), t.u.kind());
  const bool odd = (t.u.sig().n() & 1) != 0;
  const Multivector expect_even = scale(e + prod, half_count);
  const Multivector expect_odd = scale(odd ? e + prod : e - prod, half_count);
  if (!close(sums.even_sum, expect_even)) return "even double sum mismatch";
  if (!close(sums.odd_sum, expect_odd)) return "odd double sum mismatch";
  return ok();
}

std::string check_commutation_profile(const TrialContext& t) {
  const int quarter = 1 << (t.u.sig().n() - 2);
  const CommutationProfile expect{quarter, quarter, quarter, quarter};
  for (BladeMask a = 1; a < t.u.sig().full_mask(); ++a) {
    if (!(commutation_profile(t.gamma, a) == expect)) {
      return "commutation profile off at A=" + blade_key(a);
    }
  }
  return ok();
}

std::string check_profile_dichotomy(const TrialContext& t) {
  const auto classification = classify_basis(t.beta);
  const auto traces = trace_profile(t.beta);
  const FieldKind& kind = t.u.kind();
  const BladeMask full = t.u.sig().full_mask();
  const bool odd = (t.u.sig().n() & 1) != 0;
  for (const auto& [mask, value] : traces) {
    if (mask == full && odd) continue;
    if (!is_zero(value, kind)) return "nonzero trace at A=" + blade_key(mask);
  }
  if (odd) {
    const bool volume_trace_zero = is_zero(traces.at(full), kind);
    if (volume_trace_zero != classification.is_basis()) {
      return "volume trace disagrees with the basis dichotomy";
    }
    const auto pis = pi_profile(t.beta);
    for (const auto& [mask, value] : pis) {
      if (mask == full) continue;
      if (!is_zero(value, kind)) return "nonzero pi at A=" + blade_key(mask);
    }
    const bool volume_pi_zero = is_zero(pis.at(full), kind);
    if (volume_pi_zero == classification.is_basis()) {
      return "volume pi disagrees with the basis dichotomy";
    }
  }
  return ok();
}

std::string check_sigma_dichotomy(const TrialContext& t) {
  const Signature& sig = t.u.sig();
  if ((sig.n() & 1) == 0) return ok();
  SigmaFactor factor;
  if (sig.signature_mod4() == 1) {
    factor = SigmaFactor::VolPlus;
  } else if (t.u.kind().allows_imaginary()) {
    factor = SigmaFactor::IVolPlus;
  } else {
    return ok();  // real, p-q = 3 mod 4: no flipping transform exists
  }
  try {
    const GeneratorSet transformed = sigma_transform(t.beta, factor);
    if (classify_basis(transformed).is_basis() == classify_basis(t.beta).is_basis()) {
      return "sigma transform did not flip the basis classification";
    }
  } catch (const Error& e) {
    return std::string("sigma transform failed: ") + e.what();
  }
  return ok();
}

std::string check_solve_roundtrip(const TrialContext& t) {
  try {
    const SolveResult result = solve(t.gamma, t.beta);
    const double limit = t.u.kind().exact() ? 0.0 : t.u.kind().tolerance;
    if (result.residual > limit) {
      return "solve residual " + std::to_string(result.residual);
    }
    if (t.constructed_case != 0 && result.case_id != t.constructed_case) {
      return "expected case " + std::to_string(t.constructed_case) + ", solver found " +
             std::to_string(result.case_id);
    }
  } catch (const Error& e) {
    return std::string("solve failed: ") + e.what();
  }
  return ok();
}

}  // namespace

SelftestReport run_selftest(const Signature& sig, const FieldKind& kind, std::uint64_t seed,
                            int trials) {
  const bool odd = (sig.n() & 1) != 0;

  std::vector<std::pair<std::string, Check>> checks = {
      {"clifford-associativity", check_associativity},
      {"anticommutation-relations", check_anticommutation},
      {"trace-cyclic", check_trace_cyclic},
      {"grade-decomposition", check_grade_decomposition},
      {"parity-even-closure", check_parity_closure},
      {"reynolds-projector", check_reynolds_projector},
      {"reynolds-center-formula", check_reynolds_center_formula},
      {"h-intertwining", check_h_intertwining},
      {"p-intertwining", check_p_intertwining},
      {"hp-product-formula", check_hp_product},
      {"sum-identities", check_sum_identities},
      {"trace-pi-profile-dichotomy", check_profile_dichotomy},
      {"solve-roundtrip", check_solve_roundtrip},
  };
  if (odd) {
    checks.insert(checks.begin() + 3, {"pi-cyclic", check_pi_cyclic});
    checks.push_back({"sigma-dichotomy", check_sigma_dichotomy});
  }
  if (sig.n() >= 2) {
    checks.push_back({"commutation-profile", check_commutation_profile});
  }

  SelftestReport report;
  for (const auto& [name, fn] : checks) report.entries.push_back({name, true, ""});

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);

    // Odd n cycles through the admissible case factors; the constructed
    // case is what solve must rediscover.
    std::optional<int> target;
    if (odd) {
      std::vector<int> admissible = {1, 2};
      if (sig.signature_mod4() == 1) {
        admissible.push_back(3);
        admissible.push_back(4);
      } else if (kind.allows_imaginary()) {
        admissible.push_back(5);
        admissible.push_back(6);
      }
      target = admissible[static_cast<std::size_t>(trial) % admissible.size()];
    }

    Instance inst = make_instance({sig, kind, trial_seed, target, 2});
    Rng rng(trial_seed ^ 0x9e3779b97f4a7c15ULL);

    // Conjugate gamma by an independent element so neither side of the pair
    // is canonical. For odd n the volume is central, so the constructed
    // case is untouched.
    const Multivector s2 = random_invertible(rng, sig, kind, 2);
    const Multivector s2_inv = mv_inverse(s2);
    std::vector<Multivector> conjugated;
    conjugated.reserve(sig.n());
    for (int a = 1; a <= sig.n(); ++a) {
      conjugated.push_back(s2 * inst.gamma.gen(a) * s2_inv);
    }
    GeneratorSet gamma = GeneratorSet::validate(sig, kind, std::move(conjugated));

    TrialContext ctx{trial_seed,
                     std::move(gamma),
                     std::move(inst.beta),
                     random_multivector(rng, sig, kind, 3),
                     random_multivector(rng, sig, kind, 3),
                     random_multivector(rng, sig, kind, 3),
                     inst.constructed_case};

    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (!report.entries[i].pass) continue;
      std::string failure;
      try {
        failure = checks[i].second(ctx);
      } catch (const std::exception& e) {
        failure = e.what();
      }
      if (!failure.empty()) {
        report.entries[i].pass = false;
        report.entries[i].detail = failure + " (seed " + std::to_string(trial_seed) + ")";
      }
    }
  }
  return report;
}

}  // namespace cliff
