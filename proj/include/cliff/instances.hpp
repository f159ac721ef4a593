#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "cliff/generators.hpp"

namespace cliff {

// Deterministic draws on top of the (standard-specified) mt19937_64 stream.
// The mappings below avoid std::uniform_*_distribution, whose outputs vary
// across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  long uniform_int(long lo, long hi);       // inclusive bounds
  double uniform_unit();                    // [0, 1)
  double uniform_real(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

// Every coefficient drawn independently: integers in [-bound, bound] for
// exact fields, uniform reals in [-bound, bound] for floats (imaginary parts
// included for complex fields).
Multivector random_multivector(Rng& rng, const Signature& sig, const FieldKind& kind,
                               long bound);

// Retries random_multivector until mv_inverse succeeds; float draws are also
// condition-filtered so conjugation stays well within tolerance.
Multivector random_invertible(Rng& rng, const Signature& sig, const FieldKind& kind,
                              long bound);

struct InstanceSpec {
  Signature sig;
  FieldKind kind;
  std::uint64_t seed = 0;
  std::optional<int> target_case;  // odd n only, 1..6
  long coeff_bound = 3;
};

struct Instance {
  GeneratorSet gamma;
  GeneratorSet beta;
  Multivector ground_truth;  // the conjugating element S
  int constructed_case;      // 0 for even n, 1..6 for odd n
};

bool case_admissible(const Signature& sig, Field field, int case_id);

// gamma = canonical, beta^a = S gamma^a S^{-1}, then the target case's
// central factor is applied to every beta^a. Deterministic in the seed.
Instance make_instance(const InstanceSpec& spec);  // throws AdmissibilityError

}  // namespace cliff
