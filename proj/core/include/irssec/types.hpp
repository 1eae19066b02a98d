// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

namespace irssec {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

// Wraps an angle into [0, 2pi).
inline double wrap_phase(double theta)
{
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    // fmod of values just below a multiple of 2pi can round up to 2pi
    return r >= kTwoPi ? 0.0 : r;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// dBm -> watts
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

} // namespace irssec
