#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpip/precision.hpp"

using namespace mpip;

TEST_CASE("unit roundoffs") {
  CHECK(unit_roundoff(Precision::binary64) == 0x1p-53);
  CHECK(unit_roundoff(Precision::binary32) == 0x1p-24);
  CHECK(unit_roundoff(Precision::emulated_binary16) == 0x1p-11);
}

TEST_CASE("binary16 round trip of representable values") {
  for (float v : {0.0f, 1.0f, -1.0f, 0.5f, 65504.0f, -65504.0f, 0x1p-14f,
                  0x1p-24f, 2048.0f, 1.0009765625f /* 1 + 2^-10 */}) {
    CHECK(round_to_half(v) == v);
  }
}

TEST_CASE("binary16 rounds to nearest even") {
  // Half integers above 2048 step by 2; ties go to the even neighbor.
  CHECK(round_to_half(2049.0f) == 2048.0f);
  CHECK(round_to_half(2051.0f) == 2052.0f);
  CHECK(round_to_half(2050.0f) == 2050.0f);
  // Just above the midpoint rounds up.
  CHECK(round_to_half(2049.001f) == 2050.0f);
  // 1 + 2^-11 is exactly halfway between 1 and 1 + 2^-10.
  CHECK(round_to_half(1.0f + 0x1p-11f) == 1.0f);
}

TEST_CASE("binary16 overflow and underflow behavior") {
  CHECK(std::isinf(round_to_half(65520.0f)));
  CHECK(std::isinf(round_to_half(1e6f)));
  CHECK(round_to_half(65519.0f) == 65504.0f);
  CHECK(round_to_half(0x1p-25f) == 0.0f);      // below half the min subnormal
  CHECK(round_to_half(0x1.8p-24f) == 0x1p-23f);  // rounds up to 2 ulps
  CHECK(std::isnan(round_to_half(std::nanf(""))));
  CHECK(round_to_half(-0x1p-26f) == 0.0f);
}

TEST_CASE("binary16 subnormals are exact") {
  for (int k = 1; k <= 1023; k += 51) {
    const float v = std::ldexp(static_cast<float>(k), -24);
    CHECK(round_to_half(v) == v);
  }
}
