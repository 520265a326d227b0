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

#include "doctest.h"
#include "hopfkernel/errors.hpp"
#include "hopfkernel/group_algebra.hpp"
#include "hopfkernel/subalgebras.hpp"
#include "support.hpp"

using namespace hopfkernel;
using support::hi;
using support::hs;

namespace {

CharVector chi(const HopfPair& p, const char* label) {
    return CharVector::basis(p, Side::H, support::idx(p.ring_h(), label));
}

/// Classical kernel and center set of an S3 character, straight from permutations.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> s3_ker_z(int which) {
    const auto els = support::s3_elements();
    const double deg = support::s3_characters(els[0])[which];
    std::vector<std::size_t> ker, z;
    for (std::size_t g = 0; g < els.size(); ++g) {
        const double v = support::s3_characters(els[g])[which];
        if (v == deg) ker.push_back(g);
        if (std::abs(v) == deg) z.push_back(g);
    }
    return {ker, z};
}

}  // namespace

TEST_CASE("kernels and centers of the S3 characters match the classical sets") {
    const auto& p = support::kS3();
    const char* names[] = {"eps", "sgn", "rho"};
    for (int i = 0; i < 3; ++i) {
        CAPTURE(names[i]);
        const auto [ker, z] = s3_ker_z(i);
        CHECK(kernel_of(p, chi(p, names[i])).members() == ker);
        CHECK(z_of(p, chi(p, names[i])).members() == z);
    }
    CHECK(kernel_of(p, chi(p, "sgn")).members() == hs(p, {"e", "r", "r2"}));
    CHECK(kernel_of(p, chi(p, "sgn")).subdim() == 3);
    CHECK(kernel_of(p, chi(p, "eps")).size() == 6);
    CHECK(kernel_of(p, chi(p, "rho")).subdim() == 1);
    CHECK(z_of(p, chi(p, "rho")).members() == hs(p, {"e"}));
    CHECK(z_of(p, chi(p, "sgn")).size() == 6);
}

TEST_CASE("the kernel of a sum is the intersection of the constituent kernels") {
    const auto& p = support::kS3();
    const auto sum = chi(p, "sgn") + chi(p, "rho");
    CHECK(kernel_of(p, sum) == intersect(p, kernel_of(p, chi(p, "sgn")), kernel_of(p, chi(p, "rho"))));
}

TEST_CASE("kernel_of rejects non-genuine input") {
    const auto& p = support::kS3();
    CHECK_THROWS_AS(kernel_of(p, chi(p, "sgn") - chi(p, "rho")), InvalidArgument);
    CHECK_THROWS_AS(kernel_of(p, CharVector::zero(p, Side::H)), InvalidArgument);
    CHECK_THROWS_AS(kernel_of(p, Complex(0.5, 0.0) * chi(p, "rho")), InvalidArgument);
    CHECK_THROWS_AS(kernel_of(p, CharVector::unit(p, Side::HStar)), InvalidArgument);
}

TEST_CASE("values near the center boundary raise a marginal classification") {
    // k^Q8: the grouplike -1 acts on the 2-dim character psi by -2. Moving that
    // value by 3e-8 keeps every validation residual inside tolerance (psi is
    // not grouplike) but lands between EPS and 10 EPS of |psi(-1)| = 2.
    const auto g = support::group("Q8");
    std::size_t minus_one = 0;
    for (std::size_t x = 1; x < g.order(); ++x)
        if (g.element_order(x) == 2) minus_one = x;
    REQUIRE(minus_one != 0);
    const auto ga = make_group_algebra(g);
    auto raw = dualize(ga.pair).to_raw();
    const std::size_t psi = raw.ring_hstar.size() - 1;
    REQUIRE(raw.ring_hstar.degree(psi) == 2);
    REQUIRE(std::abs(raw.eval[minus_one][psi] - Complex(-2.0, 0.0)) < 1e-12);

    const auto x = [&](const HopfPair& p) { return CharVector::basis(p, Side::H, minus_one); };
    const auto clean = validate_pair(raw);
    CHECK(z_of(clean, x(clean)).contains(psi));
    CHECK_FALSE(kernel_of(clean, x(clean)).contains(psi));

    raw.eval[minus_one][psi] = Complex(-2.0 + 3e-8, 0.0);
    const auto p = validate_pair(raw);
    CHECK_THROWS_AS(z_of(p, x(p)), MarginalClassification);
    CHECK_NOTHROW(kernel_of(p, x(p)));
}

TEST_CASE("closure_generate") {
    const auto& p = support::kS3();
    CHECK(closure_generate(p, hs(p, {"r"})).members() == hs(p, {"e", "r", "r2"}));
    CHECK(closure_generate(p, hs(p, {"t"})).members() == hs(p, {"e", "t"}));
    const auto unit = closure_generate(p, std::vector<std::size_t>{});
    CHECK(unit.members() == std::vector<std::size_t>{0});
    CHECK(unit.subdim() == 1);
    CHECK(closure_generate(p, hs(p, {"t", "r"})).size() == 6);
}

TEST_CASE("intersect and join") {
    const auto& p = support::kS3();
    const auto a3 = closure_generate(p, hs(p, {"r"}));
    const auto t = closure_generate(p, hs(p, {"t"}));
    CHECK(intersect(p, a3, t).members() == hs(p, {"e"}));
    CHECK(join(p, t, a3).size() == 6);
    CHECK(intersect(p, a3, a3) == a3);
    CHECK(join(p, a3, a3) == a3);
}

TEST_CASE("verified rejects sets that are not closed") {
    const auto& p = support::kS3();
    CHECK_THROWS_AS(ClosedSubset::verified(p, hs(p, {"e", "r"})), AssertionFailure);
    CHECK_THROWS_AS(ClosedSubset::verified(p, hs(p, {"r", "r2"})), AssertionFailure);
    CHECK(ClosedSubset::verified(p, hs(p, {"e", "tr"})).subdim() == 2);
    CHECK_FALSE(is_closed(p, hs(p, {"e", "t", "r"})));
}

TEST_CASE("power_constituents") {
    const auto& p = support::kS3();
    CHECK(power_constituents(p, chi(p, "rho")) == hi(p, {"eps", "sgn", "rho"}));
    CHECK(power_constituents(p, chi(p, "sgn")) == hi(p, {"eps", "sgn"}));
    CHECK(power_constituents(p, chi(p, "eps")) == hi(p, {"eps"}));
}

TEST_CASE("integrals in both normalizations") {
    const auto& p = support::kS3();
    const auto a3 = closure_generate(p, hs(p, {"r"}));
    const auto big = integral_counit_normalized(p, a3);
    const auto idem = integral_idempotent(p, a3);
    CHECK(degree_of(p, big) == Complex(3.0, 0.0));
    CHECK(std::abs(degree_of(p, idem) - 1.0) < 1e-12);
    // The idempotent integral squares to itself.
    CHECK(max_residual(fuse(p, idem, idem), idem) < 1e-12);
}
