#include <doctest.h>

#include "cliff/blade.hpp"
#include "oracles.hpp"

using namespace cliff;

TEST_CASE("blade product on generators") {
  const Signature cl20(2, 0);
  const Signature cl11(1, 1);

  auto [s1, m1] = blade_product(0b01, 0b10, cl20);  // e^1 e^2
  CHECK(s1 == 1);
  CHECK(m1 == 0b11);

  auto [s2, m2] = blade_product(0b10, 0b01, cl20);  // e^2 e^1
  CHECK(s2 == -1);
  CHECK(m2 == 0b11);

  auto [s3, m3] = blade_product(0b01, 0b01, cl11);  // (e^1)^2 = +e
  CHECK(s3 == 1);
  CHECK(m3 == 0);

  auto [s4, m4] = blade_product(0b10, 0b10, cl11);  // (e^2)^2 = -e
  CHECK(s4 == -1);
  CHECK(m4 == 0);
}

TEST_CASE("e^{12} e^2 = e^1 in Cl(3,0)") {
  auto [sign, mask] = blade_product(0b011, 0b010, Signature(3, 0));
  CHECK(sign == 1);
  CHECK(mask == 0b001);
}

TEST_CASE("blade product agrees with transposition rewriting for all pairs, n <= 4") {
  for (const Signature sig : {Signature(4, 0), Signature(2, 2), Signature(0, 4),
                              Signature(1, 3), Signature(3, 0), Signature(1, 2)}) {
    for (BladeMask a = 0; a < sig.dim(); ++a) {
      for (BladeMask b = 0; b < sig.dim(); ++b) {
        const auto got = blade_product(a, b, sig);
        const auto want = oracles::blade_product(a, b, sig);
        CHECK(got.sign == want.first);
        CHECK(got.mask == want.second);
      }
    }
  }
}

TEST_CASE("blade square sign matches the closed form") {
  for (const Signature sig : {Signature(2, 2), Signature(0, 3)}) {
    for (BladeMask a = 0; a < sig.dim(); ++a) {
      const auto [sign, mask] = blade_product(a, a, sig);
      CHECK(mask == 0);
      CHECK(sign == blade_square_sign(a, sig));
    }
  }
}

TEST_CASE("canonical order sorts by grade then index tuple") {
  // {1,4} precedes {2,3} even though its mask is numerically larger
  const BladeMask m14 = 0b1001;
  const BladeMask m23 = 0b0110;
  CHECK(canonical_less(m14, m23));
  CHECK_FALSE(canonical_less(m23, m14));
  CHECK(canonical_less(0, m14));          // e before everything
  CHECK(canonical_less(0b0001, 0b1000));  // {1} before {4}
  CHECK_FALSE(canonical_less(m14, m14));

  const auto& masks = canonical_masks(4);
  CHECK(masks.size() == 16);
  CHECK(masks.front() == 0);
  CHECK(masks.back() == 0b1111);
  for (std::size_t i = 0; i + 1 < masks.size(); ++i) {
    CHECK(canonical_less(masks[i], masks[i + 1]));
  }
}

TEST_CASE("blade keys") {
  CHECK(blade_key(0) == "");
  CHECK(blade_key(0b1101) == "1,3,4");
  CHECK(indices(0b101) == std::vector<int>{1, 3});
}

TEST_CASE("signature validation and metric") {
  CHECK_THROWS_AS(Signature(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Signature(7, 6), std::invalid_argument);
  const Signature sig(2, 1);
  CHECK(sig.eta(1) == 1);
  CHECK(sig.eta(2) == 1);
  CHECK(sig.eta(3) == -1);
  CHECK(sig.signature_mod4() == 1);
  CHECK(Signature(0, 3).signature_mod4() == 1);
  CHECK(Signature(1, 2).signature_mod4() == 3);
}
