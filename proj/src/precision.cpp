#include "mpip/precision.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mpip {

double unit_roundoff(Precision p) {
  switch (p) {
    case Precision::binary64:
      return kUnitRoundoffDouble;
    case Precision::binary32:
      return kUnitRoundoffSingle;
    case Precision::emulated_binary16:
      return kUnitRoundoffHalf;
  }
  throw std::logic_error("unknown precision tag");
}

const char* precision_name(Precision p) {
  switch (p) {
    case Precision::binary64:
      return "binary64";
    case Precision::binary32:
      return "binary32";
    case Precision::emulated_binary16:
      return "emulated-binary16";
  }
  return "?";
}

std::uint16_t f32_to_f16_bits(float x) {
  const std::uint32_t bits = std::bit_cast<std::uint32_t>(x);
  const std::uint16_t sign = static_cast<std::uint16_t>((bits >> 16) & 0x8000u);
  const std::uint32_t exp32 = (bits >> 23) & 0xffu;
  std::uint32_t mant = bits & 0x007fffffu;

  if (exp32 == 0xffu) {  // inf or nan
    return static_cast<std::uint16_t>(sign | 0x7c00u | (mant ? 0x0200u : 0u));
  }

  const int exp = static_cast<int>(exp32) - 127 + 15;
  if (exp >= 0x1f) {  // overflow to inf
    return static_cast<std::uint16_t>(sign | 0x7c00u);
  }
  if (exp <= 0) {  // subnormal or zero
    if (exp < -10) return sign;
    mant |= 0x00800000u;  // make the leading 1 explicit
    const int shift = 14 - exp;  // 14..24
    const std::uint32_t halfway = 1u << (shift - 1);
    std::uint32_t result = mant >> shift;
    const std::uint32_t rem = mant & ((1u << shift) - 1u);
    if (rem > halfway || (rem == halfway && (result & 1u))) ++result;
    return static_cast<std::uint16_t>(sign | result);
  }

  // Normal range: keep 10 mantissa bits, round the 13 dropped ones.
  // A mantissa carry propagates into the exponent and, at the top of the
  // range, correctly turns 0x7bff into 0x7c00 (inf).
  std::uint32_t result =
      (static_cast<std::uint32_t>(exp) << 10) | (mant >> 13);
  const std::uint32_t rem = mant & 0x1fffu;
  if (rem > 0x1000u || (rem == 0x1000u && (result & 1u))) ++result;
  return static_cast<std::uint16_t>(sign | result);
}

float f16_bits_to_f32(std::uint16_t bits) {
  const std::uint32_t exp = (bits >> 10) & 0x1fu;
  const std::uint32_t mant = bits & 0x3ffu;
  float mag;
  if (exp == 0) {
    mag = std::ldexp(static_cast<float>(mant), -24);
  } else if (exp == 0x1f) {
    mag = mant ? std::numeric_limits<float>::quiet_NaN()
               : std::numeric_limits<float>::infinity();
  } else {
    mag = std::ldexp(static_cast<float>(1024u + mant), static_cast<int>(exp) - 25);
  }
  return (bits & 0x8000u) ? -mag : mag;
}

float round_to_half(float x) { return f16_bits_to_f32(f32_to_f16_bits(x)); }

}  // namespace mpip
