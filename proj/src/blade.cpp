#include "cliff/blade.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cliff {

Signature::Signature(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxDimension) {
    throw std::invalid_argument("signature requires 1 <= p+q <= " +
                                std::to_string(kMaxDimension));
  }
}

BladeProduct blade_product(BladeMask a, BladeMask b, const Signature& sig) {
  // Count the pairs (i in A, j in B) with i > j: each one is a transposition
  // when B's generators are moved into ascending position past A's.
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int sign = (swaps & 1) ? -1 : +1;

  // Repeated generators contract against the metric.
  for (BladeMask rep = a & b; rep != 0; rep &= rep - 1) {
    sign *= sig.eta(std::countr_zero(rep) + 1);
  }
  return {sign, a ^ b};
}

int blade_square_sign(BladeMask a, const Signature& sig) {
  const int k = grade(a);
  int sign = ((k * (k - 1) / 2) & 1) ? -1 : +1;
  for (BladeMask t = a; t != 0; t &= t - 1) sign *= sig.eta(std::countr_zero(t) + 1);
  return sign;
}

bool canonical_less(BladeMask a, BladeMask b) {
  const int ga = grade(a);
  const int gb = grade(b);
  if (ga != gb) return ga < gb;
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

const std::vector<BladeMask>& canonical_masks(int n) {
  // Filled once for every dimension; magic-static init keeps this safe for
  // concurrent first use.
  static const auto cache = [] {
    std::array<std::vector<BladeMask>, kMaxDimension + 1> out;
    for (int dim = 1; dim <= kMaxDimension; ++dim) {
      auto& masks = out[dim];
      masks.resize(std::size_t{1} << dim);
      for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
      std::sort(masks.begin(), masks.end(), canonical_less);
    }
    return out;
  }();
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
  return cache[n];
}

std::vector<int> indices(BladeMask a) {
  std::vector<int> out;
  for (BladeMask t = a; t != 0; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
  return out;
}

std::string blade_key(BladeMask a) {
  std::string key;
  for (int idx : indices(a)) {
    if (!key.empty()) key += ',';
    key += std::to_string(idx);
  }
  return key;
}

}  // namespace cliff
