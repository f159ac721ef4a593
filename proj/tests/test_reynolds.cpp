#include <doctest.h>

#include <thread>

#include "cliff/instances.hpp"
#include "cliff/io.hpp"
#include "cliff/reynolds.hpp"
#include "oracles.hpp"

using namespace cliff;

namespace {

const FieldKind kReal{Field::RealExact, 0.0};
const FieldKind kComplex{Field::ComplexExact, 0.0};

Scalar q(long num, long den = 1) { return Scalar::rational(mpq_class(num, den)); }

Multivector basis_blade(const Signature& sig, const FieldKind& kind, BladeMask mask) {
  return Multivector::blade(sig, kind, mask, Scalar::one(kind));
}

GeneratorSet conjugate_set(const GeneratorSet& s, const Multivector& by) {
  const Multivector by_inv = mv_inverse(by);
  std::vector<Multivector> gens;
  for (int a = 1; a <= s.sig().n(); ++a) gens.push_back(by * s.gen(a) * by_inv);
  return GeneratorSet::validate(s.sig(), s.kind(), std::move(gens));
}

Multivector central_formula(const Multivector& u) {
  Multivector out(u.sig(), u.kind());
  out.set_coeff(0, trace(u));
  if (u.sig().n() % 2 == 1) out.set_coeff(u.sig().full_mask(), pi_project(u));
  return out;
}

}  // namespace

TEST_CASE("reynolds average annihilates middle ranks and fixes the center") {
  const GeneratorSet even_set = GeneratorSet::canonical(Signature(2, 0), kReal);
  CHECK(reynolds_average(even_set, basis_blade(Signature(2, 0), kReal, 0b01))
            .structurally_empty());

  const Signature sig(3, 0);
  const GeneratorSet odd_set = GeneratorSet::canonical(sig, kReal);
  CHECK(reynolds_average(odd_set, basis_blade(sig, kReal, 0b001)).structurally_empty());

  Multivector center(sig, kReal);
  center.set_coeff(0, q(2));
  center.set_coeff(0b111, q(5));
  CHECK(mv_equal(reynolds_average(odd_set, center), center));
}

TEST_CASE("reynolds average is an idempotent projection onto the center") {
  Rng rng(31);
  for (const Signature sig : {Signature(2, 0), Signature(2, 1), Signature(1, 3)}) {
    const GeneratorSet s =
        conjugate_set(GeneratorSet::canonical(sig, kReal),
                      random_invertible(rng, sig, kReal, 3));
    for (int trial = 0; trial < 5; ++trial) {
      const Multivector u = random_multivector(rng, sig, kReal, 4);
      const Multivector f = reynolds_average(s, u);
      CHECK(mv_equal(reynolds_average(s, f), f));
      CHECK(is_central(f));
      CHECK(mv_equal(f, central_formula(u)));  // conjugated sets stay bases
    }
  }
}

TEST_CASE("mixed average with identical sets fixes the identity") {
  const GeneratorSet s = GeneratorSet::canonical(Signature(2, 1), kReal);
  const Multivector e = Multivector::unit(Signature(2, 1), kReal);
  CHECK(mv_equal(mixed_average(s, s, e), e));
  CHECK(mv_equal(mixed_average_even(s, s, e), e));
}

TEST_CASE("intertwining identities for H and P") {
  Rng rng(37);
  for (const Signature sig : {Signature(2, 0), Signature(3, 0), Signature(1, 2)}) {
    const GeneratorSet gamma = GeneratorSet::canonical(sig, kReal);
    const GeneratorSet beta =
        conjugate_set(gamma, random_invertible(rng, sig, kReal, 3));
    const Multivector u = random_multivector(rng, sig, kReal, 4);
    const Multivector v = random_multivector(rng, sig, kReal, 4);
    const Multivector h = mixed_average(beta, gamma, u);
    const Multivector p = mixed_average(gamma, beta, v);
    for (BladeMask b = 0; b < sig.dim(); ++b) {
      CHECK(mv_equal(beta.blade(b) * h, h * gamma.blade(b)));
      CHECK(mv_equal(gamma.blade(b) * p, p * beta.blade(b)));
    }
  }
}

TEST_CASE("product formula: P(V)H(U) is the central part of VH(U)") {
  Rng rng(41);
  for (const Signature sig : {Signature(2, 0), Signature(2, 1)}) {
    const GeneratorSet gamma = GeneratorSet::canonical(sig, kReal);
    const GeneratorSet beta =
        conjugate_set(gamma, random_invertible(rng, sig, kReal, 3));
    for (int trial = 0; trial < 5; ++trial) {
      const Multivector u = random_multivector(rng, sig, kReal, 4);
      const Multivector v = random_multivector(rng, sig, kReal, 4);
      const Multivector h = mixed_average(beta, gamma, u);
      const Multivector p = mixed_average(gamma, beta, v);
      CHECK(mv_equal(p * h, h * p));
      CHECK(mv_equal(p * h, central_formula(v * h)));
      CHECK(trace(v * h) == trace(h * v));
    }
  }
}

TEST_CASE("even average equals the full average when the volumes agree") {
  Rng rng(43);
  const Signature sig(3, 0);
  const GeneratorSet gamma = GeneratorSet::canonical(sig, kReal);
  const GeneratorSet beta = conjugate_set(gamma, random_invertible(rng, sig, kReal, 3));
  REQUIRE(mv_equal(beta.volume(), gamma.volume()));  // volume is central for odd n
  for (int trial = 0; trial < 5; ++trial) {
    const Multivector u = random_multivector(rng, sig, kReal, 4);
    CHECK(mv_equal(mixed_average(beta, gamma, u), mixed_average_even(beta, gamma, u)));
  }
  // intertwining with even blades only
  const Multivector u = random_multivector(rng, sig, kReal, 4);
  const Multivector t = mixed_average_even(beta, gamma, u);
  for (BladeMask b = 0; b < sig.dim(); ++b) {
    if (!even_grade(b)) continue;
    CHECK(mv_equal(beta.blade(b) * t, t * gamma.blade(b)));
  }
}

TEST_CASE("double sums: canonical closed forms") {
  const GeneratorSet c20 = GeneratorSet::canonical(Signature(2, 0), kReal);
  const auto sums2 = double_sums(c20, c20);
  Multivector four_e(Signature(2, 0), kReal);
  four_e.set_coeff(0, q(4));
  CHECK(mv_equal(sums2.even_sum, four_e));
  CHECK(sums2.odd_sum.structurally_empty());

  const GeneratorSet c30 = GeneratorSet::canonical(Signature(3, 0), kReal);
  const auto sums3 = double_sums(c30, c30);
  Multivector eight_e(Signature(3, 0), kReal);
  eight_e.set_coeff(0, q(8));
  CHECK(mv_equal(sums3.even_sum, eight_e));
  CHECK(mv_equal(sums3.odd_sum, eight_e));
}

TEST_CASE("double sums agree with the literal four-factor evaluation") {
  Rng rng(47);
  for (const Signature sig : {Signature(2, 0), Signature(1, 2), Signature(3, 0)}) {
    const GeneratorSet gamma =
        conjugate_set(GeneratorSet::canonical(sig, kReal),
                      random_invertible(rng, sig, kReal, 2));
    const GeneratorSet beta =
        conjugate_set(GeneratorSet::canonical(sig, kReal),
                      random_invertible(rng, sig, kReal, 2));
    const auto fast = double_sums(gamma, beta);
    const auto slow = oracles::double_sums(gamma, beta);
    CHECK(mv_equal(fast.even_sum, slow.even_sum));
    CHECK(mv_equal(fast.odd_sum, slow.odd_sum));
  }
}

TEST_CASE("double sums: closed form with the parity-dependent signs") {
  Rng rng(53);
  for (const Signature sig : {Signature(2, 0), Signature(2, 2), Signature(3, 0),
                              Signature(2, 1)}) {
    const GeneratorSet gamma =
        conjugate_set(GeneratorSet::canonical(sig, kReal),
                      random_invertible(rng, sig, kReal, 2));
    const GeneratorSet beta =
        conjugate_set(GeneratorSet::canonical(sig, kReal),
                      random_invertible(rng, sig, kReal, 2));
    const auto sums = double_sums(gamma, beta);
    const Multivector prod = beta.volume() * gamma.reciprocal(sig.full_mask());
    const Multivector e = Multivector::unit(sig, kReal);
    const Scalar half = q(1L << (sig.n() - 1));
    CHECK(mv_equal(sums.even_sum, scale(e + prod, half)));
    const bool odd = sig.n() % 2 == 1;
    CHECK(mv_equal(sums.odd_sum, scale(odd ? e + prod : e - prod, half)));
  }
}

TEST_CASE("even solve: identical sets give T = e") {
  const GeneratorSet g = GeneratorSet::canonical(Signature(1, 1), kReal);
  const SolveResult r = solve_even(g, g);
  CHECK(r.case_id == kEvenCase);
  CHECK(mv_equal(r.t, Multivector::unit(Signature(1, 1), kReal)));
  CHECK(r.residual == 0.0);
  CHECK(r.candidate == std::vector<BladeMask>{0});
}

TEST_CASE("even solve recovers a conjugation up to scalar") {
  const Signature sig(1, 1);
  Multivector s = Multivector::unit(sig, kReal);
  s.set_coeff(0b01, q(2));  // e + 2 e^1, invertible: (e + 2e^1)(e - 2e^1) = -3e
  const GeneratorSet gamma = GeneratorSet::canonical(sig, kReal);
  const GeneratorSet beta = conjugate_set(gamma, s);
  const SolveResult r = solve_even(gamma, beta);
  CHECK(r.residual == 0.0);
  CHECK(uniqueness_check(gamma, beta, r.t, s));
  // T_inverse is the two-sided inverse
  CHECK(mv_equal(r.t * r.t_inverse, Multivector::unit(sig, kReal)));
}

TEST_CASE("even solve with beta = -gamma uses the odd candidate list") {
  const Signature sig(2, 0);
  const GeneratorSet gamma = GeneratorSet::canonical(sig, kReal);
  std::vector<Multivector> neg{-gamma.gen(1), -gamma.gen(2)};
  const GeneratorSet beta = GeneratorSet::validate(sig, kReal, std::move(neg));
  // beta volume equals gamma volume here, so even candidates apply; the
  // working T is proportional to e^{12}
  const SolveResult r = solve_even(gamma, beta);
  CHECK(r.residual == 0.0);
  CHECK(mv_equal(r.t, basis_blade(sig, kReal, 0b11)));
}

TEST_CASE("odd classification across the six cases") {
  const Signature sig(3, 0);
  const GeneratorSet g = GeneratorSet::canonical(sig, kComplex);
  CHECK(classify_odd(g, g).id == 1);
  CHECK(classify_odd(g, sigma_transform(g, SigmaFactor::Neg)).id == 2);
  const OddCase c5 = classify_odd(g, sigma_transform(g, SigmaFactor::IVolPlus));
  CHECK(c5.id == 5);
  CHECK(mv_equal(c5.central,
                 Multivector::blade(sig, kComplex, 0b111,
                                    Scalar::imaginary_unit(kComplex))));
  CHECK(classify_odd(g, sigma_transform(g, SigmaFactor::IVolMinus)).id == 6);

  const Signature r21(2, 1);
  const GeneratorSet h = GeneratorSet::canonical(r21, kReal);
  CHECK(classify_odd(h, sigma_transform(h, SigmaFactor::VolPlus)).id == 3);
  CHECK(classify_odd(h, sigma_transform(h, SigmaFactor::VolMinus)).id == 4);
}

TEST_CASE("odd classification requires odd dimension") {
  const GeneratorSet g = GeneratorSet::canonical(Signature(2, 0), kReal);
  CHECK_THROWS_AS(classify_odd(g, g), OddDimensionRequired);
}

TEST_CASE("solver entry points check the parity of n") {
  const GeneratorSet even_set = GeneratorSet::canonical(Signature(2, 0), kReal);
  const GeneratorSet odd_set = GeneratorSet::canonical(Signature(3, 0), kReal);
  CHECK_THROWS_AS(solve_odd(even_set, even_set), std::invalid_argument);
  CHECK_THROWS_AS(solve_even(odd_set, odd_set), std::invalid_argument);
  CHECK(solve(even_set, even_set).case_id == kEvenCase);
  CHECK(solve(odd_set, odd_set).case_id == 1);
}

TEST_CASE("odd solve: identical sets give T = e") {
  const GeneratorSet g = GeneratorSet::canonical(Signature(3, 0), kReal);
  const SolveResult r = solve_odd(g, g);
  CHECK(r.case_id == 1);
  CHECK(mv_equal(r.t, Multivector::unit(Signature(3, 0), kReal)));
  CHECK(r.residual == 0.0);
}

TEST_CASE("odd solve recovers conjugations up to central factors") {
  Rng rng(59);
  const Signature sig(3, 0);
  const GeneratorSet gamma = GeneratorSet::canonical(sig, kReal);
  const Multivector s = random_invertible(rng, sig, kReal, 3);
  const GeneratorSet beta = conjugate_set(gamma, s);
  const SolveResult r = solve_odd(gamma, beta);
  CHECK(r.case_id == 1);
  CHECK(r.residual == 0.0);
  CHECK(uniqueness_check(gamma, beta, r.t, s));
}

TEST_CASE("odd solve handles every constructed case with residual zero") {
  for (const auto& [sig, kind, cases] :
       std::vector<std::tuple<Signature, FieldKind, std::vector<int>>>{
           {Signature(3, 0), kComplex, {1, 2, 5, 6}},
           {Signature(2, 1), kReal, {1, 2, 3, 4}},
           {Signature(0, 3), kReal, {1, 2, 3, 4}},
           {Signature(1, 2), kReal, {1, 2}},
       }) {
    for (int target : cases) {
      const Instance inst = make_instance({sig, kind, 100u + (unsigned)target, target, 3});
      const SolveResult r = solve_odd(inst.gamma, inst.beta);
      CHECK(r.case_id == target);
      CHECK(r.residual == 0.0);
      CHECK(uniqueness_check(inst.gamma, inst.beta, r.t, inst.ground_truth));
    }
  }
}

TEST_CASE("odd solve when both sets are non-bases") {
  const Signature sig(2, 1);
  Rng rng(61);
  const GeneratorSet gamma =
      sigma_transform(GeneratorSet::canonical(sig, kReal), SigmaFactor::VolPlus);
  REQUIRE_FALSE(classify_basis(gamma).is_basis());
  const Multivector s = random_invertible(rng, sig, kReal, 3);
  const GeneratorSet beta = conjugate_set(gamma, s);
  REQUIRE_FALSE(classify_basis(beta).is_basis());
  const SolveResult r = solve_odd(gamma, beta);
  CHECK(r.case_id == 1);
  CHECK(r.residual == 0.0);
  CHECK(uniqueness_check(gamma, beta, r.t, s));
}

TEST_CASE("verify_intertwiner measures deviations") {
  const Signature sig(3, 0);
  const GeneratorSet g = GeneratorSet::canonical(sig, kReal);
  const Multivector e = Multivector::unit(sig, kReal);
  CHECK(verify_intertwiner(g, g, e, e) == 0.0);

  const Instance inst = make_instance({sig, FieldKind{Field::RealExact, 0.0}, 71, 2, 3});
  const SolveResult r = solve_odd(inst.gamma, inst.beta);
  CHECK(verify_intertwiner(inst.gamma, inst.beta, r.t, r.central) == 0.0);

  Multivector tampered = r.t;
  tampered.set_coeff(0b001, tampered.coeff(0b001) + q(1));
  CHECK(verify_intertwiner(inst.gamma, inst.beta, tampered, r.central) > 0.0);

  // wrong case factor: swap case 2 for case 1
  CHECK(verify_intertwiner(inst.gamma, inst.beta, r.t, e) > 0.0);
}

TEST_CASE("uniqueness_check") {
  const Signature even_sig(2, 0);
  const GeneratorSet ge = GeneratorSet::canonical(even_sig, kReal);
  const Multivector te = Multivector::unit(even_sig, kReal);
  CHECK(uniqueness_check(ge, ge, scale(te, q(3)), te));
  CHECK_FALSE(uniqueness_check(ge, ge, basis_blade(even_sig, kReal, 0b01) * te, te));

  const Signature odd_sig(3, 0);
  const GeneratorSet go = GeneratorSet::canonical(odd_sig, kReal);
  const Multivector to = Multivector::unit(odd_sig, kReal);
  // 2e + e^{123} is central and invertible: (2e + w)(2e - w) = 4e - w^2 = 5e
  Multivector central_unit(odd_sig, kReal);
  central_unit.set_coeff(0, q(2));
  central_unit.set_coeff(0b111, q(1));
  CHECK(uniqueness_check(go, go, central_unit * to, to));
  CHECK_FALSE(uniqueness_check(go, go, basis_blade(odd_sig, kReal, 0b001) * to, to));

  // central but NOT invertible: e + e^{123} in Cl(2,1), where the volume
  // squares to +e
  const Signature cl21(2, 1);
  const GeneratorSet g21 = GeneratorSet::canonical(cl21, kReal);
  const Multivector t21 = Multivector::unit(cl21, kReal);
  Multivector central_singular(cl21, kReal);
  central_singular.set_coeff(0, q(1));
  central_singular.set_coeff(0b111, q(1));
  CHECK_FALSE(uniqueness_check(g21, g21, central_singular * t21, t21));
}

TEST_CASE("two successful candidates give equivalent T") {
  Rng rng(67);
  const Signature sig(2, 0);
  const GeneratorSet gamma = GeneratorSet::canonical(sig, kReal);
  const GeneratorSet beta = conjugate_set(gamma, random_invertible(rng, sig, kReal, 3));
  std::vector<Multivector> ts;
  for (BladeMask mask : canonical_masks(sig.n())) {
    if (!even_grade(mask)) continue;
    const Multivector t = mixed_average(beta, gamma, gamma.blade(mask));
    if (t.is_zero()) continue;
    ts.push_back(t);
    if (ts.size() == 2) break;
  }
  REQUIRE(ts.size() == 2);
  CHECK(uniqueness_check(gamma, beta, ts[0], ts[1]));
}

TEST_CASE("n = 1: the commutative edge of the solver") {
  // Cl(1,0) is commutative, so conjugation fixes the generator and only the
  // central factor distinguishes the cases.
  const Instance inst = make_instance({Signature(1, 0), kReal, 3, 2, 3});
  const SolveResult r = solve(inst.gamma, inst.beta);
  CHECK(r.case_id == 2);
  CHECK(r.residual == 0.0);
  CHECK(mv_equal(r.t, Multivector::unit(Signature(1, 0), kReal)));
}

TEST_CASE("n = 7 smoke on sparse sets") {
  // Canonical-blade sets keep every product sparse, so the full odd-case
  // pipeline stays cheap even at dim 128.
  const Signature sig(4, 3);  // p - q = 1 mod 4
  const GeneratorSet gamma = GeneratorSet::canonical(sig, kReal);
  const GeneratorSet beta = sigma_transform(gamma, SigmaFactor::VolMinus);
  const SolveResult r = solve_odd(gamma, beta);
  CHECK(r.case_id == 4);
  CHECK(r.residual == 0.0);

  const auto sums = double_sums(gamma, beta);
  const Multivector prod = beta.volume() * gamma.reciprocal(sig.full_mask());
  const Multivector e = Multivector::unit(sig, kReal);
  const Scalar half = q(1L << (sig.n() - 1));
  CHECK(mv_equal(sums.even_sum, scale(e + prod, half)));
  CHECK(mv_equal(sums.odd_sum, scale(e + prod, half)));
}

TEST_CASE("exact solve sweep over every signature at n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = n; p >= 0; --p) {
      const Signature sig(p, n - p);
      for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        const FieldKind& kind = (seed % 2 == 0) ? kComplex : kReal;
        const Instance inst = make_instance({sig, kind, seed, std::nullopt, 2});
        const SolveResult r = solve(inst.gamma, inst.beta);
        CHECK(r.residual == 0.0);
        CHECK(uniqueness_check(inst.gamma, inst.beta, r.t, inst.ground_truth));
      }
    }
  }
}

TEST_CASE("solver works over the complex-float field") {
  const Signature sig(2, 1);
  const FieldKind kind{Field::ComplexFloat, 1e-9};
  const Instance inst = make_instance({sig, kind, 5, 2, 1});
  const SolveResult r = solve(inst.gamma, inst.beta);
  CHECK(r.case_id == 2);
  CHECK(r.residual <= 1e-9);
}

TEST_CASE("concurrent solves on shared immutable inputs agree") {
  const Instance inst = make_instance({Signature(2, 1), kReal, 9, 3, 2});
  std::vector<std::string> outputs(4);
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      workers.emplace_back([&, i] {
        const SolveResult r = solve(inst.gamma, inst.beta);
        outputs[i] = io::solve_result_to_json(r).dump();
      });
    }
  }
  for (const std::string& out : outputs) CHECK(out == outputs[0]);
  CHECK_FALSE(outputs[0].empty());
}
