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

#include <cmath>

#include "doctest.h"
#include "hopfkernel/char_vector.hpp"
#include "hopfkernel/errors.hpp"
#include "hopfkernel/instance_io.hpp"
#include "support.hpp"

using namespace hopfkernel;
using support::idx;

namespace {

RawInstance s3_raw() { return read_instance_file(support::data("instances/kS3.json")); }

RawInstance with_fusion_h(const RawInstance& raw, std::vector<FusionEntry> entries) {
    RawInstance out = raw;
    const auto& r = raw.ring_h;
    out.ring_h = FusionRing(r.labels(), r.degrees(), r.duals(), std::move(entries));
    return out;
}

/// Character values of the classical S3 characters over the elements of kS3.json.
std::vector<std::vector<double>> s3_rows() {
    std::vector<std::vector<double>> rows(3);
    for (const auto& g : support::s3_elements()) {
        const auto v = support::s3_characters(g);
        for (int i = 0; i < 3; ++i) rows[i].push_back(v[i]);
    }
    return rows;
}

}  // namespace

TEST_CASE("kS3 instance validates with the expected shape") {
    const auto& p = support::kS3();
    CHECK(p.dim() == 6);
    CHECK(p.size(Side::H) == 3);
    CHECK(p.size(Side::HStar) == 6);
    // The eval matrix is the classical table on the listed permutations.
    const auto rows = s3_rows();
    for (std::size_t chi = 0; chi < 3; ++chi)
        for (std::size_t d = 0; d < 6; ++d) CHECK(std::abs(p.eval(chi, d) - rows[chi][d]) < 1e-12);
}

TEST_CASE("kC2 instance validates") {
    const auto& p = support::kC2();
    CHECK(p.dim() == 2);
    CHECK(p.eval(1, 1) == Complex(-1.0, 0.0));
    CHECK(p.eval(1, 0) == Complex(1.0, 0.0));
}

TEST_CASE("changing N_{rho rho}^rho to 2 violates the degree homomorphism at (rho, rho)") {
    auto raw = s3_raw();
    std::vector<FusionEntry> entries = raw.ring_h.entries();
    const auto rho = idx(raw.ring_h, "rho");
    for (auto& e : entries)
        if (e.i == rho && e.j == rho && e.k == rho) e.n = 2;
    const auto bad = with_fusion_h(raw, entries);
    const auto rep = check_pair(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.mentions("degree homomorphism", "H(rho,rho)"));
    CHECK_THROWS_AS(validate_pair(bad), InvalidInstance);
}

TEST_CASE("validation reports eval-level violations with their invariant names") {
    SUBCASE("unit column") {
        auto raw = s3_raw();
        raw.eval[2][0] = 3.0;
        CHECK(check_pair(raw).mentions("unit column"));
    }
    SUBCASE("bound and conjugation") {
        auto raw = s3_raw();
        raw.eval[1][3] = Complex(0.0, 2.0);
        const auto rep = check_pair(raw);
        CHECK(rep.mentions("bound"));
        CHECK(rep.mentions("conjugation"));
    }
    SUBCASE("grouplike multiplicativity") {
        auto raw = s3_raw();
        // Swap the sign character's values on r and t: still bounded, breaks sgn(r t) = sgn(r) sgn(t).
        std::swap(raw.eval[1][1], raw.eval[1][3]);
        CHECK(check_pair(raw).mentions("grouplike multiplicativity"));
    }
    SUBCASE("dimension") {
        auto raw = s3_raw();
        raw.dim = 7;
        CHECK(check_pair(raw).mentions("dimension"));
    }
}

TEST_CASE("structural errors") {
    const auto raw = s3_raw();
    const auto& r = raw.ring_h;
    CHECK_THROWS_AS(FusionRing(r.labels(), r.degrees(), {0, 2, 2}, r.entries()), StructuralError);
    CHECK_THROWS_AS(FusionRing(r.labels(), r.degrees(), {0, 1, 2}, {{0, 0, 7, 1}}), StructuralError);
    CHECK_THROWS_AS(FusionRing(r.labels(), {1, 1, 0}, r.duals(), r.entries()), StructuralError);
    auto short_eval = raw;
    short_eval.eval.pop_back();
    CHECK_THROWS_AS(check_pair(short_eval), StructuralError);
    CHECK_THROWS_AS(raw_instance_from_json(nlohmann::json::parse(R"({"name":"x"})")), StructuralError);
    CHECK_THROWS_AS(read_json_file(support::data("instances/missing.json")), StructuralError);
}

TEST_CASE("the unit and duality axioms are checked on both rings") {
    auto raw = s3_raw();
    auto entries = raw.ring_h.entries();
    entries.push_back({idx(raw.ring_h, "sgn"), idx(raw.ring_h, "rho"), 0, 1});
    const auto rep = check_pair(with_fusion_h(raw, entries));
    CHECK(rep.mentions("duality/Frobenius"));
    CHECK(rep.mentions("degree homomorphism"));
}

TEST_CASE("instance documents round-trip") {
    const auto& p = support::kS3();
    const auto doc = instance_to_json(p.to_raw());
    const auto back = validate_pair(raw_instance_from_json(nlohmann::json::parse(doc.dump())));
    CHECK(back.ring_h() == p.ring_h());
    CHECK(back.ring_hstar() == p.ring_hstar());
    CHECK(back.partition_hint() == p.partition_hint());
    for (std::size_t chi = 0; chi < 3; ++chi)
        for (std::size_t d = 0; d < 6; ++d) CHECK(back.eval(chi, d) == p.eval(chi, d));
}

TEST_CASE("fuse on the H side of kS3 agrees with classical decompositions") {
    const auto& p = support::kS3();
    const auto rows = s3_rows();
    auto decompose = [&](const std::vector<double>& f) {
        std::vector<double> m;
        for (const auto& row : rows) m.push_back(support::s3_inner(f, row));
        return m;
    };
    auto product = [&](std::size_t a, std::size_t b) {
        std::vector<double> f;
        for (std::size_t x = 0; x < 6; ++x) f.push_back(rows[a][x] * rows[b][x]);
        return f;
    };
    const auto& rh = p.ring_h();
    const auto rho = idx(rh, "rho"), sgn = idx(rh, "sgn");

    for (auto [a, b] : {std::pair{rho, rho}, std::pair{sgn, rho}}) {
        const auto z = fuse(p, CharVector::basis(p, Side::H, a), CharVector::basis(p, Side::H, b));
        const auto want = decompose(product(a, b));
        for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(z[k] - want[k]) < 1e-12);
    }
    // rho * rho = eps + sgn + rho
    const auto rr = fuse(p, CharVector::basis(p, Side::H, rho), CharVector::basis(p, Side::H, rho));
    CHECK(multiplicities(rr, p.tolerance()) == std::vector<long long>{1, 1, 1});
}

TEST_CASE("the unit is neutral for fuse on both sides") {
    const auto& p = support::kS3();
    for (Side s : {Side::H, Side::HStar}) {
        CharVector x(s, p.size(s));
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = Complex(double(i) + 0.5, -double(i));
        CHECK(max_residual(fuse(p, CharVector::unit(p, s), x), x) < 1e-12);
        CHECK(max_residual(fuse(p, x, CharVector::unit(p, s)), x) < 1e-12);
    }
}

TEST_CASE("mult_form") {
    const auto& p = support::kS3();
    const auto& rh = p.ring_h();
    const auto rho = CharVector::basis(p, Side::H, idx(rh, "rho"));
    const auto sgn = CharVector::basis(p, Side::H, idx(rh, "sgn"));
    CHECK(mult_form(rho, fuse(p, rho, rho)) == Complex(1.0, 0.0));
    CHECK(mult_form(CharVector::unit(p, Side::H), fuse(p, rho, sgn)) == Complex(0.0, 0.0));
    for (Side s : {Side::H, Side::HStar})
        for (std::size_t d = 0; d < p.size(s); ++d) {
            const auto x = CharVector::basis(p, s, d);
            CHECK(mult_form(CharVector::unit(p, s), fuse(p, x, dual_of(p, x))) == Complex(1.0, 0.0));
        }
}

TEST_CASE("evaluate") {
    const auto& p = support::kS3();
    const auto rho = CharVector::basis(p, Side::H, idx(p.ring_h(), "rho"));
    CHECK(evaluate(p, rho, CharVector::basis(p, Side::HStar, 0)) == Complex(2.0, 0.0));
    CharVector lam(Side::HStar, 6);
    for (auto d : support::hs(p, {"e", "r", "r2"})) lam[d] = 1.0 / 3.0;
    CHECK(std::abs(evaluate(p, rho, lam)) < 1e-12);
    for (std::size_t d = 0; d < 6; ++d)
        CHECK(evaluate(p, CharVector::unit(p, Side::H), CharVector::basis(p, Side::HStar, d)) ==
              Complex(double(p.ring_hstar().degree(d)), 0.0));
}

TEST_CASE("side mismatches are rejected") {
    const auto& p = support::kS3();
    const auto a = CharVector::unit(p, Side::H);
    const auto b = CharVector::unit(p, Side::HStar);
    CHECK_THROWS_AS(fuse(p, a, b), InvalidArgument);
    CHECK_THROWS_AS(mult_form(a, b), InvalidArgument);
    CHECK_THROWS_AS(evaluate(p, b, a), InvalidArgument);
}

TEST_CASE("dualize is an involution and swaps the rings") {
    const auto& p = support::kS3();
    const auto d = dualize(p);
    CHECK(d.ring_h() == p.ring_hstar());
    CHECK(d.ring_hstar() == p.ring_h());
    CHECK(d.eval(4, 2) == p.eval(2, 4));
    const auto dd = dualize(d);
    CHECK(dd.name() == p.name());
    CHECK(dd.ring_h() == p.ring_h());
    CHECK(dd.ring_hstar() == p.ring_hstar());
}
