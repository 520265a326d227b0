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

#include "hopfkernel/commands.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "hopfkernel/central_partition.hpp"
#include "hopfkernel/char_vector.hpp"
#include "hopfkernel/double_cosets.hpp"
#include "hopfkernel/errors.hpp"
#include "hopfkernel/normality.hpp"

namespace hopfkernel {

using ojson = nlohmann::ordered_json;

namespace {

ojson labels_of(const FusionRing& ring, std::span<const std::size_t> idx) {
    ojson out = ojson::array();
    for (auto i : idx) out.push_back(ring.label(i));
    return out;
}

ojson subset_json(const HopfPair& p, const ClosedSubset& k) {
    ojson out;
    out["members"] = labels_of(p.ring_hstar(), k.members());
    out["subdim"] = k.subdim();
    return out;
}

ojson vector_json(const HopfPair& p, const CharVector& x) {
    ojson out = ojson::object();
    const auto& ring = p.ring(x.side());
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (std::abs(x[a]) <= p.tolerance().eps) continue;
        const auto n = p.tolerance().snap(x[a]);
        if (n)
            out[ring.label(a)] = *n;
        else
            out[ring.label(a)] = {x[a].real(), x[a].imag()};
    }
    return out;
}

/// Runs `body`; an Error thrown inside becomes a failed check named `name`.
bool guarded(Report& rep, const std::string& section, const std::string& name,
             const std::function<void()>& body) {
    try {
        body();
        return true;
    } catch (const Error& e) {
        rep.check(section, name, false, e.what());
        return false;
    }
}

CharVector seed_vector(const HopfPair& p, std::size_t chi) {
    return CharVector::basis(p, Side::H, chi);
}

}  // namespace

std::vector<std::size_t> parse_subset(const FusionRing& ring, std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty()) {
            if (auto found = ring.find_label(tok)) {
                out.push_back(*found);
            } else {
                std::size_t v = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (ec != std::errc() || ptr != tok.data() + tok.size() || v >= ring.size())
                    throw InvalidArgument("unknown element '" + std::string(tok) + "'");
                out.push_back(v);
            }
        }
        pos = end + 1;
    }
    return out;
}

Report validate_report(const RawInstance& raw, const Tolerance& tol) {
    Report rep(raw.name, "validate");
    const auto result = check_pair(raw, tol);
    auto& s = rep.section("instance");
    s["dim"] = raw.dim;
    s["irr_h"] = raw.ring_h.size();
    s["irr_hstar"] = raw.ring_hstar.size();
    auto& v = rep.section("violations");
    v = ojson::array();
    for (const auto& x : result.violations) {
        ojson j;
        j["invariant"] = x.invariant;
        j["location"] = x.location;
        j["residual"] = x.residual;
        v.push_back(std::move(j));
        rep.check("validate", x.invariant, false, x.location);
    }
    if (result.ok()) rep.check("validate", "all invariants satisfied", true);
    return rep;
}

Report kernels_report(const HopfPair& p) {
    Report rep(p.name(), "kernels");
    const auto& rh = p.ring_h();
    for (std::size_t chi = 0; chi < rh.size(); ++chi) {
        const std::string& name = rh.label(chi);
        guarded(rep, "kernels", name, [&] {
            const auto x = seed_vector(p, chi);
            const auto k = kernel_of(p, x);
            const auto z = z_of(p, x);
            const auto zc = closure_generate(p, z.members());
            auto& s = rep.section(name);
            s["degree"] = rh.degree(chi);
            s["ker"] = labels_of(p.ring_hstar(), k.members());
            s["ker_subdim"] = k.subdim();
            s["z"] = labels_of(p.ring_hstar(), z.members());
            s["Z_subdim"] = zc.subdim();
            s["z_closure_grew"] = zc.size() > z.size();
            rep.check("kernels", "ker(" + name + ") in z(" + name + ")", k.is_subset_of(z));
            const auto k2 = kernel_of(p, fuse(p, x, x));
            rep.check("kernels", "ker(" + name + ") in ker(" + name + "^2)", k.is_subset_of(k2));
        });
    }
    return rep;
}

Report normal_report(const HopfPair& p, std::span<const std::size_t> seed) {
    Report rep(p.name(), "normal");
    guarded(rep, "normal", "is_normal", [&] {
        const auto k = closure_generate(p, seed);
        auto& s = rep.section("subset");
        s["seed"] = labels_of(p.ring_hstar(), seed);
        s["generated"] = subset_json(p, k);
        const auto ind = induced_trivial_character(p, k);
        rep.section("induced_trivial")["multiplicities"] = vector_json(p, ind);
        const bool normal = is_normal(p, k);
        rep.section("result")["normal"] = normal;
        if (normal) rep.section("result")["quotient_irr"] = labels_of(p.ring_h(), quotient_irr(p, k, true));
        rep.check("normal", "criteria A and B agree", true);
    });
    return rep;
}

Report core_report(const HopfPair& p, std::span<const std::size_t> seed) {
    Report rep(p.name(), "core");
    guarded(rep, "core", "iteration", [&] {
        const auto k = closure_generate(p, seed);
        rep.section("subset")["generated"] = subset_json(p, k);
        const auto trace = core_trace(p, k);
        auto& s = rep.section("core");
        s["chain"] = ojson::array();
        for (const auto& c : trace.chain) s["chain"].push_back(subset_json(p, c));
        s["iterations"] = trace.iterations;
        s["result"] = subset_json(p, trace.result());
        rep.check("core", "contained in K", trace.result().is_subset_of(k));
        rep.check("core", "normal", is_normal(p, trace.result()));
        rep.check("core", "idempotent", core(p, trace.result()) == trace.result());
    });
    return rep;
}

Report lattice_report(const HopfPair& p, unsigned threads) {
    Report rep(p.name(), "lattice");
    std::vector<ClosedSubset> from_core;
    guarded(rep, "lattice", "normal lattice", [&] {
        const auto lat = normal_lattice(p, threads);
        auto& s = rep.section("lattice");
        s["count"] = lat.members.size();
        s["members"] = ojson::array();
        for (const auto& m : lat.members) s["members"].push_back(subset_json(p, m));
        auto& g = rep.section("maximal_normals_core_route");
        g = ojson::array();
        for (const auto& m : lat.maximal_generators) g.push_back(subset_json(p, m));
        from_core = lat.maximal_generators;
        rep.check("lattice", "every member normal", true);
    });
    guarded(rep, "lattice", "block-sum route", [&] {
        const auto part = class_partition(p, Side::H);
        const auto mf = maximal_normals_from_f(p, part);
        auto& g = rep.section("maximal_normals_f_route");
        g = ojson::array();
        for (const auto& m : mf) g.push_back(subset_json(p, m));
        rep.check("lattice", "routes agree", mf == from_core);
    });
    return rep;
}

Report partition_report(const HopfPair& p) {
    Report rep(p.name(), "partition");
    std::size_t n_h = 0, n_s = 0;
    for (Side side : {Side::HStar, Side::H}) {
        const std::string name = side == Side::H ? "X (Irr(H))" : "Y (Irr(H*))";
        guarded(rep, "partition", name, [&] {
            const auto sub = central_subspace(p, side);
            const auto part = class_partition(p, side);
            auto& s = rep.section(name);
            s["q_norm"] = sub.q_norm;
            s["q_min_eigenvalue"] = sub.min_eigenvalue;
            s["blocks"] = ojson::array();
            for (const auto& b : part.blocks) s["blocks"].push_back(labels_of(p.ring(side), b));
            s["basis"] = ojson::array();
            for (const auto& v : part.basis) s["basis"].push_back(vector_json(p, v));
            (side == Side::H ? n_h : n_s) = part.blocks.size();
            rep.check("partition", std::string("Q positive semidefinite on ") + side_name(side),
                      sub.min_eigenvalue > -1e-8 * std::max(1.0, sub.q_norm));
            if (side == Side::HStar && p.partition_hint())
                rep.check("partition", "partition_hint matches", partition_hint_matches(p, part));
        });
    }
    rep.check("partition", "|I| = |J|", n_h == n_s && n_h > 0,
              std::to_string(n_h) + " vs " + std::to_string(n_s));

    guarded(rep, "center_theorem", "blocks", [&] {
        const auto part = class_partition(p, Side::H);
        auto& s = rep.section("center_theorem");
        s = ojson::array();
        for (std::size_t b = 0; b < part.blocks.size(); ++b) {
            const auto r = center_theorem_report(p, part, b);
            ojson j;
            j["block"] = labels_of(p.ring_h(), part.blocks[b]);
            j["kernel"] = subset_json(p, r.kernel);
            j["Z"] = subset_json(p, r.z_closure);
            j["z_closure_grew"] = r.closure_grew;
            j["quotient_irr"] = labels_of(p.ring_h(), r.quotient);
            j["power_constituents"] = labels_of(p.ring_h(), r.powers);
            s.push_back(std::move(j));
            for (const auto& c : r.checks)
                rep.check("center_theorem", "(" + c.letter + ") block " + std::to_string(b), c.passed,
                          c.detail);
        }
    });
    return rep;
}

Report cosets_report(const HopfPair& p, std::span<const std::size_t> k_seed,
                     std::span<const std::size_t> l_seed) {
    Report rep(p.name(), "cosets");
    guarded(rep, "cosets", "decomposition", [&] {
        const auto k = closure_generate(p, k_seed);
        const auto l = closure_generate(p, l_seed);
        auto& in = rep.section("subalgebras");
        in["K"] = subset_json(p, k);
        in["L"] = subset_json(p, l);
        const auto dec = coset_classes(p, k, l);
        auto& s = rep.section("classes");
        s["count"] = dec.classes.size();
        s["classes"] = ojson::array();
        for (std::size_t i = 0; i < dec.classes.size(); ++i) {
            ojson j;
            j["members"] = labels_of(p.ring_hstar(), dec.classes[i]);
            j["dim"] = dec.class_dims[i];
            j["a"] = vector_json(p, dec.class_sums[i]);
            s["classes"].push_back(std::move(j));
        }
        rep.check("cosets", "class dims divisible by |K| and |L|", true);

        const auto eig = verify_eigen(p, dec);
        auto& e = rep.section("eigen");
        e["eigenvalue"] = eig.eigenvalue;
        e["max_residual"] = eig.max_residual;
        e["asymmetry"] = eig.asymmetry;
        e["principal"] = eig.principal;
        e["principal_multiplicity"] = eig.principal_multiplicity;
        rep.check("cosets", "T(a_i) = |K||L| a_i", true);

        double worst = 0.0, worst_one = 0.0;
        for (std::size_t d = 0; d < p.size(Side::HStar); ++d) {
            const auto f = verify_formula(p, dec, d);
            worst = std::max(worst, f.residual);
            if (f.one_sided_residual) worst_one = std::max(worst_one, *f.one_sided_residual);
        }
        auto& f = rep.section("formula");
        f["max_residual"] = worst;
        if (k.size() == 1) f["max_one_sided_residual"] = worst_one;
        rep.check("cosets", "formula for every d", true);

        const auto dims = dims_identity(p, k, l);
        auto& dj = rep.section("dims");
        dj["L"] = dims.l_dim;
        dj["L_cap_K"] = dims.intersection_dim;
        dj["LK"] = dims.product_dim;
        dj["K"] = dims.k_dim;
        dj["ratio"] = dims.ratio;
        rep.check("cosets", "|L|/|L cap K| = |LK|/|K|", true);
    });
    return rep;
}

}  // namespace hopfkernel
