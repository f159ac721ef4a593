#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cliff {

// Bit a-1 set iff generator index a belongs to the multi-index. The empty
// mask is the identity blade e; the full mask is the volume blade.
using BladeMask = std::uint32_t;

constexpr int kMaxDimension = 12;  // 2^12 blades; general inversion is the limiting cost

struct Signature {
  int p = 0;
  int q = 0;

  Signature(int p_, int q_);

  int n() const { return p + q; }
  std::uint32_t dim() const { return std::uint32_t{1} << n(); }
  BladeMask full_mask() const { return dim() - 1; }
  // Metric of generator a (1-based): +1 for a <= p, -1 otherwise.
  int eta(int a) const { return a <= p ? +1 : -1; }
  // p - q reduced to {0,1,2,3}.
  int signature_mod4() const { return (((p - q) % 4) + 4) % 4; }

  bool operator==(const Signature&) const = default;
};

inline int grade(BladeMask a) { return std::popcount(a); }
inline bool even_grade(BladeMask a) { return (grade(a) & 1) == 0; }

struct BladeProduct {
  int sign;  // +1 or -1
  BladeMask mask;
};

// e^A e^B = sign * e^{A xor B}. The sign combines the transpositions needed
// to interleave B past A with the metric of the repeated indices.
BladeProduct blade_product(BladeMask a, BladeMask b, const Signature& sig);

// (e^A)^2 = sign * e, i.e. (-1)^{k(k-1)/2} * prod_{a in A} eta(a).
int blade_square_sign(BladeMask a, const Signature& sig);

// Canonical order: by grade, then lexicographically on the ascending index
// tuple. This is the serialization order and the candidate-search order.
bool canonical_less(BladeMask a, BladeMask b);

// All masks for n, sorted canonically. Cached per dimension.
const std::vector<BladeMask>& canonical_masks(int n);

std::vector<int> indices(BladeMask a);  // ascending, 1-based

std::string blade_key(BladeMask a);  // "" for e, "1,3,4" for e^{134}

}  // namespace cliff
