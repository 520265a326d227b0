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

#include <cstddef>
#include <span>
#include <vector>

#include "hopfkernel/hopf_pair.hpp"
#include "hopfkernel/tolerance.hpp"

namespace hopfkernel {

/// A coefficient vector over Irr(H) or Irr(H*): virtual characters, integrals,
/// class sums.
class CharVector {
public:
    CharVector(Side side, std::size_t n) : side_(side), coeffs_(n, Complex(0.0, 0.0)) {}
    CharVector(Side side, std::vector<Complex> coeffs) : side_(side), coeffs_(std::move(coeffs)) {}

    static CharVector zero(const HopfPair& p, Side s) { return CharVector(s, p.size(s)); }
    static CharVector unit(const HopfPair& p, Side s) { return basis(p, s, 0); }
    static CharVector basis(const HopfPair& p, Side s, std::size_t i);

    /// Sum with the given integer multiplicity on each listed index.
    static CharVector from_multiplicities(const HopfPair& p, Side s,
                                          std::span<const long long> mult);

    Side side() const noexcept { return side_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    Complex& operator[](std::size_t i) { return coeffs_[i]; }
    const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

    CharVector& operator+=(const CharVector& o);
    CharVector& operator-=(const CharVector& o);
    CharVector& operator*=(Complex s);

    friend CharVector operator+(CharVector a, const CharVector& b) { return a += b; }
    friend CharVector operator-(CharVector a, const CharVector& b) { return a -= b; }
    friend CharVector operator*(Complex s, CharVector a) { return a *= s; }

    /// Indices with a coefficient of magnitude above tol.eps.
    std::vector<std::size_t> support(const Tolerance& tol) const;

    /// Largest coefficient magnitude.
    double max_abs() const;

private:
    Side side_;
    std::vector<Complex> coeffs_;
};

/// Maximum coefficientwise distance between two vectors on the same side.
double max_residual(const CharVector& a, const CharVector& b);

/// z_k = sum_{ij} x_i y_j N_{ij}^k in the ring of the shared side.
CharVector fuse(const HopfPair& p, const CharVector& x, const CharVector& y);

/// m(x, y) = sum_a x_a conj(y_a); the Hom-dimension form on genuine characters.
Complex mult_form(const CharVector& x, const CharVector& y);

/// x* : coefficient of dual(a) is x_a.
CharVector dual_of(const HopfPair& p, const CharVector& x);

/// sum_{chi,d} x_chi y_d chi(d).
Complex evaluate(const HopfPair& p, const CharVector& x_h, const CharVector& y_hstar);

/// x(1) for an H-side vector, epsilon(x) for an H*-side vector: sum_a x_a degree(a).
Complex degree_of(const HopfPair& p, const CharVector& x);

/// Regular character sum_chi chi(1) chi (H side) or sum_d eps(d) d (H* side).
CharVector regular_character(const HopfPair& p, Side s);

/// True when every coefficient is within INT_TOL of a nonnegative integer and
/// at least one is positive.
bool is_genuine(const CharVector& x, const Tolerance& tol);

/// Snapped multiplicities of a genuine character; throws InvalidArgument otherwise.
std::vector<long long> multiplicities(const CharVector& x, const Tolerance& tol);

}  // namespace hopfkernel
