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

#include "hopfkernel/character_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

namespace {

constexpr std::size_t kMaxOrder = 200;
constexpr int kMaxAttempts = 21;  // first try plus 20 retries

/// a[j][i][k]: coefficient of the class sum K_k in K_j K_i.
std::vector<Eigen::MatrixXd> class_matrices(const GroupTable& g,
                                            const std::vector<std::vector<std::size_t>>& classes,
                                            const std::vector<std::size_t>& class_of) {
    const auto r = static_cast<Eigen::Index>(classes.size());
    std::vector<Eigen::MatrixXd> m(classes.size(), Eigen::MatrixXd::Zero(r, r));
    for (Eigen::Index k = 0; k < r; ++k) {
        const std::size_t z = classes[std::size_t(k)].front();
        for (std::size_t x = 0; x < g.order(); ++x) {
            const std::size_t y = g.mul(g.inverse(x), z);
            m[class_of[x]](Eigen::Index(class_of[y]), k) += 1.0;
        }
    }
    return m;
}

bool value_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    constexpr double t = 1e-6;
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (std::abs(a[c].real() - b[c].real()) > t) return a[c].real() > b[c].real();
        if (std::abs(a[c].imag() - b[c].imag()) > t) return a[c].imag() > b[c].imag();
    }
    return false;
}

}  // namespace

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t h = 0; h < n; ++h) {
            const auto y = g.conjugate(x, h);
            if (!seen[y]) {
                seen[y] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

double CharacterTable::orthogonality_residual() const {
    double order = 0.0;
    for (const auto& c : classes) order += double(c.size());
    const std::size_t r = classes.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Complex s = 0.0;
            for (std::size_t c = 0; c < r; ++c)
                s += double(classes[c].size()) * values[i][c] * std::conj(values[j][c]);
            worst = std::max(worst, std::abs(s / order - (i == j ? 1.0 : 0.0)));
        }
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < r; ++d) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < r; ++i) s += values[i][c] * std::conj(values[i][d]);
            const double expect = c == d ? order / double(classes[c].size()) : 0.0;
            worst = std::max(worst, std::abs(s - expect) * double(classes[c].size()) / order);
        }
    return worst;
}

CharacterTable character_table(const GroupTable& g, std::uint64_t seed, const Tolerance& tol) {
    if (g.order() > kMaxOrder)
        throw InvalidArgument("character_table: group order " + std::to_string(g.order()) +
                              " exceeds " + std::to_string(kMaxOrder));
    CharacterTable t;
    t.classes = conjugacy_classes(g);
    t.class_of.assign(g.order(), 0);
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        t.representatives.push_back(t.classes[c].front());
        for (auto x : t.classes[c]) t.class_of[x] = c;
    }
    const auto r = static_cast<Eigen::Index>(t.classes.size());
    const auto mats = class_matrices(g, t.classes, t.class_of);
    const double order = double(g.order());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<Eigen::VectorXcd> omegas;
    for (int attempt = 1; attempt <= kMaxAttempts && omegas.empty(); ++attempt) {
        t.attempts = std::size_t(attempt);
        Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(r, r);
        for (const auto& m : mats) comb += coef(rng) * m;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(comb);
        if (solver.info() != Eigen::Success) continue;
        const Eigen::VectorXcd ev = solver.eigenvalues();
        const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
        bool separated = true;
        for (Eigen::Index a = 0; a < r && separated; ++a)
            for (Eigen::Index b = a + 1; b < r && separated; ++b)
                if (std::abs(ev(a) - ev(b)) < 1e-6 * scale) separated = false;
        if (!separated) continue;

        std::vector<Eigen::VectorXcd> found;
        bool common = true;
        for (Eigen::Index a = 0; a < r && common; ++a) {
            Eigen::VectorXcd w = solver.eigenvectors().col(a);
            if (std::abs(w(0)) < 1e-10) {
                common = false;
                break;
            }
            w /= w(0);
            // Each M_j must act on w by the scalar w_j.
            for (Eigen::Index j = 0; j < r && common; ++j) {
                const Eigen::VectorXcd lhs = mats[std::size_t(j)].cast<Complex>() * w;
                if ((lhs - w(j) * w).cwiseAbs().maxCoeff() > 1e-8 * std::max(1.0, w.cwiseAbs().maxCoeff() * order))
                    common = false;
            }
            found.push_back(w);
        }
        if (common) omegas = std::move(found);
    }
    if (omegas.empty())
        throw AssertionFailure("character_table", "no separating combination after 20 retries");

    struct Row {
        long long degree;
        std::vector<Complex> values;
    };
    std::vector<Row> rows;
    for (const auto& w : omegas) {
        double s = 0.0;
        for (Eigen::Index c = 0; c < r; ++c)
            s += std::norm(w(c)) / double(t.classes[std::size_t(c)].size());
        const double deg = std::sqrt(order / s);
        const auto snapped = tol.snap(deg);
        if (!snapped || *snapped <= 0) {
            std::ostringstream os;
            os << "degree " << deg << " is not a positive integer";
            throw AssertionFailure("character_table", os.str());
        }
        Row row{*snapped, {}};
        for (Eigen::Index c = 0; c < r; ++c)
            row.values.push_back(w(c) * double(*snapped) / double(t.classes[std::size_t(c)].size()));
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return value_less(a.values, b.values);
    });
    for (auto& row : rows) {
        t.degrees.push_back(row.degree);
        t.values.push_back(std::move(row.values));
    }

    long long sum_sq = 0;
    for (auto d : t.degrees) sum_sq += d * d;
    if (sum_sq != static_cast<long long>(g.order()))
        throw AssertionFailure("character_table", "squared degrees do not add up to |G|");
    for (const auto& v : t.values[0])
        if (std::abs(v - Complex(1.0, 0.0)) > tol.eps)
            throw AssertionFailure("character_table", "first row is not the trivial character");
    const double res = t.orthogonality_residual();
    if (res > tol.eps) {
        std::ostringstream os;
        os << "orthogonality residual " << res;
        throw AssertionFailure("character_table", os.str());
    }
    return t;
}

}  // namespace hopfkernel
