#pragma once

#include <cstdint>

namespace mpip {

enum class Precision { binary64, binary32, emulated_binary16 };

inline constexpr double kUnitRoundoffDouble = 0x1p-53;
inline constexpr double kUnitRoundoffSingle = 0x1p-24;
inline constexpr double kUnitRoundoffHalf = 0x1p-11;

// Largest finite binary16 value.
inline constexpr double kHalfMax = 65504.0;

double unit_roundoff(Precision p);
const char* precision_name(Precision p);

// binary16 <-> binary32 conversions, round to nearest even. These are the
// basis of the software-emulated half precision arithmetic: each scalar
// operation is computed in float and its result rounded to the nearest
// binary16 value, so `round_to_half` may return +-inf for |x| > 65504.
std::uint16_t f32_to_f16_bits(float x);
float f16_bits_to_f32(std::uint16_t bits);
float round_to_half(float x);

}  // namespace mpip
