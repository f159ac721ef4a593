#pragma once

#include <vector>

#include "cliff/generators.hpp"

namespace cliff {

// Reynolds average of the set's own blades:
//   F(U) = (1/2^n) sum_A gamma_A U gamma^A.
// When {gamma^A} is a basis this projects onto the center: Tr(U) e for even
// n, Tr(U) e + pi(U) e^{1..n} for odd n.
Multivector reynolds_average(const GeneratorSet& s, const Multivector& u);

// Mixed average over two sets:
//   (1/2^n) sum_A left^A U right_A.
// The two intertwining operators arise by choosing sides: H(U) uses
// (left, right) = (beta, gamma) and satisfies beta^B H(U) = H(U) gamma^B;
// P(V) uses (gamma, beta) and satisfies gamma^B P(V) = P(V) beta^B.
Multivector mixed_average(const GeneratorSet& left, const GeneratorSet& right,
                          const Multivector& u);

// Same average restricted to even multi-indices, weight 1/2^{n-1}.
Multivector mixed_average_even(const GeneratorSet& left, const GeneratorSet& right,
                               const Multivector& u);

struct PairSums {
  Multivector even_sum;  // sum_{A in I} sum_{B in I_Even} beta^A gamma^B gamma_A gamma_B
  Multivector odd_sum;   // same with B in I_Odd
};

// Both closed forms are 2^{n-1}(e +- beta^{1..n} gamma_{1..n}): plus for the
// even sum at every n and for the odd sum at odd n, minus for the odd sum at
// even n.
PairSums double_sums(const GeneratorSet& gamma, const GeneratorSet& beta);

// Odd-dimension case of the connecting-element theorems. The central factor
// c = beta^{1..n} gamma_{1..n} determines the case:
//   1: e    2: -e    3: e^{1..n}    4: -e^{1..n}    5: i e^{1..n}    6: -i e^{1..n}
// Cases 3-4 require p-q = 1 mod 4; cases 5-6 a complex field with
// p-q = 3 mod 4.
struct OddCase {
  int id;              // 1..6
  Multivector central; // c, in canonical form
};

OddCase classify_odd(const GeneratorSet& gamma, const GeneratorSet& beta);

constexpr int kEvenCase = 0;

struct SolveResult {
  Multivector t;
  Multivector t_inverse;
  Multivector central;                // c with gamma^a = c T^{-1} beta^a T
  int case_id = kEvenCase;            // 0 for even n, 1..6 for odd n
  std::vector<BladeMask> candidate;   // the one or two blades whose sum was U
  double residual = 0.0;              // exactly 0 on exact fields
};

// Even n: T = H(U) for the first candidate U = gamma^A (A even, ascending
// canonical order; odd multi-indices when beta^{1..n} = -gamma^{1..n}) with
// H(U) != 0. T is normalized so its first nonzero coefficient in canonical
// blade order equals 1, and gamma^a = T^{-1} beta^a T is verified for all a.
SolveResult solve_even(const GeneratorSet& gamma, const GeneratorSet& beta);

// Odd n: classifies the case, reduces beta by the matching sigma factor so
// the volumes agree, transforms both sets to bases when they are not, then
// searches U over single even blades and then pairs until H_even(U) is
// invertible. Verifies gamma^a = c T^{-1} beta^a T against the original sets.
SolveResult solve_odd(const GeneratorSet& gamma, const GeneratorSet& beta);

// Dispatch on the parity of n.
SolveResult solve(const GeneratorSet& gamma, const GeneratorSet& beta);

// max over a of the max-norm of gamma^a - c T^{-1} beta^a T.
double verify_intertwiner(const GeneratorSet& gamma, const GeneratorSet& beta,
                          const Multivector& t, const Multivector& central);

// Even n: T1 T2^{-1} is a nonzero scalar multiple of e. Odd n: T1 T2^{-1} is
// central and invertible.
bool uniqueness_check(const GeneratorSet& gamma, const GeneratorSet& beta,
                      const Multivector& t1, const Multivector& t2);

// Scale so the first nonzero coefficient in canonical blade order is 1.
Multivector normalize_leading(const Multivector& t);

}  // namespace cliff
