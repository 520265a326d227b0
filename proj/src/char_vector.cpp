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

#include "hopfkernel/char_vector.hpp"

#include <algorithm>
#include <cmath>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

namespace {

void require_same_side(const CharVector& a, const CharVector& b, const char* op) {
    if (a.side() != b.side() || a.size() != b.size())
        throw InvalidArgument(std::string(op) + ": operands live on different sides (" +
                              side_name(a.side()) + " vs " + side_name(b.side()) + ")");
}

void require_fits(const HopfPair& p, const CharVector& x, const char* op) {
    if (x.size() != p.size(x.side()))
        throw InvalidArgument(std::string(op) + ": vector length " + std::to_string(x.size()) +
                              " does not match the " + side_name(x.side()) + " ring");
}

}  // namespace

CharVector CharVector::basis(const HopfPair& p, Side s, std::size_t i) {
    CharVector v(s, p.size(s));
    if (i >= v.size()) throw InvalidArgument("basis index " + std::to_string(i) + " out of range");
    v[i] = 1.0;
    return v;
}

CharVector CharVector::from_multiplicities(const HopfPair& p, Side s,
                                           std::span<const long long> mult) {
    if (mult.size() != p.size(s))
        throw InvalidArgument("multiplicity vector has the wrong length");
    CharVector v(s, p.size(s));
    for (std::size_t i = 0; i < mult.size(); ++i) v[i] = double(mult[i]);
    return v;
}

CharVector& CharVector::operator+=(const CharVector& o) {
    require_same_side(*this, o, "add");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CharVector& CharVector::operator-=(const CharVector& o) {
    require_same_side(*this, o, "subtract");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CharVector& CharVector::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

std::vector<std::size_t> CharVector::support(const Tolerance& tol) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (std::abs(coeffs_[i]) > tol.eps) out.push_back(i);
    return out;
}

double CharVector::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double max_residual(const CharVector& a, const CharVector& b) {
    require_same_side(a, b, "residual");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

CharVector fuse(const HopfPair& p, const CharVector& x, const CharVector& y) {
    require_same_side(x, y, "fuse");
    require_fits(p, x, "fuse");
    const auto& ring = p.ring(x.side());
    CharVector z(x.side(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == Complex(0.0, 0.0)) continue;
            const Complex xy = x[i] * y[j];
            for (const auto& t : ring.product(i, j)) z[t.index] += xy * double(t.mult);
        }
    }
    return z;
}

Complex mult_form(const CharVector& x, const CharVector& y) {
    require_same_side(x, y, "mult_form");
    Complex s = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) s += x[a] * std::conj(y[a]);
    return s;
}

CharVector dual_of(const HopfPair& p, const CharVector& x) {
    require_fits(p, x, "dual");
    const auto& ring = p.ring(x.side());
    CharVector out(x.side(), x.size());
    for (std::size_t a = 0; a < x.size(); ++a) out[ring.dual(a)] = x[a];
    return out;
}

Complex evaluate(const HopfPair& p, const CharVector& x, const CharVector& y) {
    if (x.side() != Side::H || y.side() != Side::HStar)
        throw InvalidArgument("evaluate: expects an H-side vector and an H*-side vector");
    require_fits(p, x, "evaluate");
    require_fits(p, y, "evaluate");
    Complex s = 0.0;
    for (std::size_t chi = 0; chi < x.size(); ++chi) {
        if (x[chi] == Complex(0.0, 0.0)) continue;
        Complex row = 0.0;
        for (std::size_t d = 0; d < y.size(); ++d)
            if (y[d] != Complex(0.0, 0.0)) row += y[d] * p.eval(chi, d);
        s += x[chi] * row;
    }
    return s;
}

Complex degree_of(const HopfPair& p, const CharVector& x) {
    require_fits(p, x, "degree");
    const auto& ring = p.ring(x.side());
    Complex s = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) s += x[a] * double(ring.degree(a));
    return s;
}

CharVector regular_character(const HopfPair& p, Side s) {
    CharVector v(s, p.size(s));
    for (std::size_t a = 0; a < v.size(); ++a) v[a] = double(p.ring(s).degree(a));
    return v;
}

bool is_genuine(const CharVector& x, const Tolerance& tol) {
    bool positive = false;
    for (const auto& c : x.coeffs()) {
        auto n = tol.snap(c);
        if (!n || *n < 0) return false;
        if (*n > 0) positive = true;
    }
    return positive;
}

std::vector<long long> multiplicities(const CharVector& x, const Tolerance& tol) {
    if (!is_genuine(x, tol))
        throw InvalidArgument("expected a genuine character (nonnegative integer coefficients, "
                              "not all zero)");
    std::vector<long long> m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) m[i] = *tol.snap(x[i]);
    return m;
}

}  // namespace hopfkernel
