/*
   Copyright 2026 The hopfkernel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

namespace hopfkernel {

using Complex = std::complex<double>;

/// Numerical policy shared by every computation.
///
/// Values produced by the bundled instances are sums of at most |G| roots of
/// unity, so absolute tolerances scaled by max(1, magnitude) are sufficient.
struct Tolerance {
    double eps = 1e-8;       ///< equality of complex values
    double int_tol = 1e-6;   ///< distance to the nearest integer where integrality is required
    double null_rel = 1e-6;  ///< null-space cutoff, relative to the largest eigenvalue magnitude

    double scaled(double magnitude) const { return eps * std::max(1.0, magnitude); }

    bool near(Complex a, Complex b) const {
        return std::abs(a - b) <= scaled(std::max(std::abs(a), std::abs(b)));
    }

    bool near(double a, double b) const {
        return std::abs(a - b) <= scaled(std::max(std::abs(a), std::abs(b)));
    }

    /// Nearest integer to a (complex) value, or nullopt when it is farther than int_tol.
    std::optional<long long> snap(Complex v) const {
        const double r = std::round(v.real());
        if (std::abs(v - Complex(r, 0.0)) > int_tol) return std::nullopt;
        return static_cast<long long>(r);
    }

    std::optional<long long> snap(double v) const { return snap(Complex(v, 0.0)); }
};

}  // namespace hopfkernel
