#pragma once

#include <array>
#include <numbers>

namespace eulersums {

inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kHalfLn2Pi = 0.91893853320467274178032973640561764;

inline constexpr double kZeta2 = 1.6449340668482264364724151666460252;
inline constexpr double kZeta3 = 1.2020569031595942853997381615114500;
inline constexpr double kZeta4 = 1.0823232337111381915160036965411679;

// B_{2k} for k = 1..17.
inline constexpr std::array<double, 17> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
};

}  // namespace eulersums
