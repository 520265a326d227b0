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

#include "hopfkernel/group_algebra.hpp"

#include <sstream>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

HopfPair build_group_algebra(const GroupTable& g, const CharacterTable& table, const Tolerance& tol) {
    const std::size_t r = table.size();
    const double order = double(g.order());

    std::vector<std::string> chi_labels;
    for (std::size_t i = 0; i < r; ++i) chi_labels.push_back("chi" + std::to_string(i));

    // Dual character: the row equal to the complex conjugate.
    std::vector<std::size_t> chi_dual(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r && chi_dual[i] == r; ++j) {
            bool match = true;
            for (std::size_t c = 0; c < r && match; ++c)
                match = tol.near(std::conj(table.values[i][c]), table.values[j][c]);
            if (match) chi_dual[i] = j;
        }
    for (std::size_t i = 0; i < r; ++i)
        if (chi_dual[i] == r)
            throw AssertionFailure("build_group_algebra",
                                   "conjugate of " + chi_labels[i] + " is not in the table");

    std::vector<FusionEntry> fusion_h;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                Complex s = 0.0;
                for (std::size_t c = 0; c < r; ++c)
                    s += double(table.classes[c].size()) * table.values[i][c] * table.values[j][c] *
                         std::conj(table.values[k][c]);
                s /= order;
                const auto n = tol.snap(s);
                if (!n || *n < 0) {
                    std::ostringstream os;
                    os << "multiplicity of " << chi_labels[k] << " in " << chi_labels[i] << "*"
                       << chi_labels[j] << " is " << s;
                    throw AssertionFailure("build_group_algebra", os.str());
                }
                if (*n > 0) fusion_h.push_back({i, j, k, *n});
            }

    const std::size_t n = g.order();
    std::vector<std::size_t> inv(n);
    std::vector<FusionEntry> fusion_g;
    for (std::size_t a = 0; a < n; ++a) {
        inv[a] = g.inverse(a);
        for (std::size_t b = 0; b < n; ++b) fusion_g.push_back({a, b, g.mul(a, b), 1});
    }

    RawInstance raw{
        "k" + g.name(),
        static_cast<long long>(n),
        FusionRing(chi_labels, table.degrees, chi_dual, std::move(fusion_h)),
        FusionRing(g.labels(), std::vector<long long>(n, 1), inv, std::move(fusion_g)),
        {},
        std::nullopt,
    };
    raw.eval.assign(r, std::vector<Complex>(n));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t x = 0; x < n; ++x) raw.eval[i][x] = table.value(i, x);
    return validate_pair(std::move(raw), tol);
}

GroupAlgebra make_group_algebra(const GroupTable& g, std::uint64_t seed, const Tolerance& tol) {
    auto table = character_table(g, seed, tol);
    auto pair = build_group_algebra(g, table, tol);
    return GroupAlgebra{g, std::move(table), std::move(pair)};
}

}  // namespace hopfkernel
