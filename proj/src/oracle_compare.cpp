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

#include <algorithm>
#include <functional>
#include <memory>
#include <random>

#include "hopfkernel/central_partition.hpp"
#include "hopfkernel/commands.hpp"
#include "hopfkernel/double_cosets.hpp"
#include "hopfkernel/errors.hpp"
#include "hopfkernel/group_algebra.hpp"
#include "hopfkernel/group_oracle.hpp"
#include "hopfkernel/normality.hpp"

namespace hopfkernel {

using ojson = nlohmann::ordered_json;

namespace {

constexpr std::size_t kAllPairsLimit = 12;  // subgroups; beyond this, sample pairs
constexpr std::size_t kSampledPairs = 20;
constexpr std::size_t kSubgroupOrderLimit = 60;

/// Collects per-item outcomes into one aggregated check, reserved up front so
/// checks keep their declaration order.
class Tally {
public:
    Tally(Report& rep, const std::string& section, const std::string& name)
        : rep_(rep), slot_(rep.check(section, name, false)) {}
    void add(bool ok, const std::string& what) {
        ++total_;
        if (ok)
            ++good_;
        else if (first_bad_.empty())
            first_bad_ = what;
    }
    void fail(const std::string& what) { add(false, what); }
    ~Tally() {
        std::string detail = std::to_string(good_) + "/" + std::to_string(total_);
        if (!first_bad_.empty()) detail += "; first failure: " + first_bad_;
        auto& c = rep_.check_at(slot_);
        c.passed = good_ == total_ && total_ > 0;
        c.detail = std::move(detail);
    }

private:
    Report& rep_;
    std::size_t slot_;
    std::size_t good_ = 0, total_ = 0;
    std::string first_bad_;
};

std::string set_string(const GroupTable& g, const ElementSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.label(s[i]);
    return out + "}";
}

ElementSet group_center(const GroupTable& g) {
    ElementSet out;
    for (std::size_t z = 0; z < g.order(); ++z) {
        bool central = true;
        for (std::size_t x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
        if (central) out.push_back(z);
    }
    return out;
}

std::vector<std::vector<std::size_t>> canonical(std::vector<std::vector<std::size_t>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<std::vector<std::size_t>> singletons(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back({i});
    return out;
}

void run_section(Report& rep, const std::string& section, const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        rep.check(section, "completed", false, e.what());
    }
}

}  // namespace

Report oracle_compare(const GroupTable& g, const AnalysisOptions& opts) {
    Report rep(g.name(), "oracle-compare");
    const auto& tol = opts.tol;
    const auto ga = make_group_algebra(g, opts.seed, tol);
    const auto& p = ga.pair;
    const auto& table = ga.table;
    const auto d = dualize(p);
    const GroupOracle oracle(g);
    const std::size_t n = g.order();
    const std::size_t r = table.size();

    {
        auto& s = rep.section("group");
        s["order"] = n;
        s["classes"] = r;
        s["degrees"] = table.degrees;
        s["burnside_attempts"] = table.attempts;
        const double res = table.orthogonality_residual();
        s["orthogonality_residual"] = res;
        rep.check("character_table", "orthogonality", res <= 1e-8);
    }

    run_section(rep, "validate", [&] {
        const auto vh = check_pair(p.to_raw(), tol);
        const auto vd = check_pair(d.to_raw(), tol);
        rep.check("validate", "kG", vh.ok(), std::to_string(vh.violations.size()) + " violations");
        rep.check("validate", "k^G", vd.ok(), std::to_string(vd.violations.size()) + " violations");
        const auto dd = dualize(d);
        bool same = dd.ring_h() == p.ring_h() && dd.ring_hstar() == p.ring_hstar();
        for (std::size_t i = 0; i < r && same; ++i)
            for (std::size_t x = 0; x < n && same; ++x) same = dd.eval(i, x) == p.eval(i, x);
        rep.check("validate", "dualize(dualize(P)) = P", same);
    });

    run_section(rep, "kernels", [&] {
        Tally ker(rep, "kernels", "ker(chi) = classical kernel");
        Tally cen(rep, "kernels", "z(chi) = classical center set");
        auto& s = rep.section("kernels");
        for (std::size_t chi = 0; chi < r; ++chi) {
            std::vector<long long> e(r, 0);
            e[chi] = 1;
            const auto f = class_function(table, e);
            const auto x = CharVector::basis(p, Side::H, chi);
            const auto k = kernel_of(p, x).members();
            const auto z = z_of(p, x).members();
            const auto ko = oracle.kernel(f, tol);
            const auto zo = oracle.center_set(f, tol);
            ker.add(k == ko, p.ring_h().label(chi));
            cen.add(z == zo, p.ring_h().label(chi));
            ojson j;
            j["ker"] = set_string(g, k);
            j["z"] = set_string(g, z);
            s[p.ring_h().label(chi)] = std::move(j);
        }
        // On k^G, the kernel of the grouplike g is the set of characters whose kernel holds g.
        Tally dk(rep, "kernels", "k^G: ker(g) = {chi : g in ker chi}");
        for (std::size_t x = 0; x < n; ++x) {
            ElementSet expect;
            for (std::size_t chi = 0; chi < r; ++chi)
                if (tol.near(p.eval(chi, x), Complex(double(table.degrees[chi]), 0.0)))
                    expect.push_back(chi);
            dk.add(kernel_of(d, CharVector::basis(d, Side::H, x)).members() == expect, g.label(x));
        }
    });

    run_section(rep, "closure", [&] {
        Tally t(rep, "closure", "closure_generate(S) = <S>");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                const std::size_t seed[] = {a, b};
                t.add(closure_generate(p, seed).members() == oracle.generated(seed),
                      g.label(a) + "," + g.label(b));
            }
    });

    std::vector<ElementSet> subgroups;
    if (n <= kSubgroupOrderLimit) subgroups = oracle.subgroups(kSubgroupOrderLimit);
    const auto normals = n <= kSubgroupOrderLimit ? oracle.normal_subgroups(kSubgroupOrderLimit)
                                                  : std::vector<ElementSet>{};

    if (!subgroups.empty()) {
        run_section(rep, "normality", [&] {
            Tally same(rep, "normality", "closure of a subgroup is the subgroup");
            Tally nor(rep, "normality", "is_normal <=> normal subgroup");
            Tally cor(rep, "core", "core = classical core");
            Tally len(rep, "core", "iteration length <= 3");
            std::size_t max_iter = 0;
            for (const auto& h : subgroups) {
                const auto k = closure_generate(p, h);
                const auto name = set_string(g, h);
                same.add(k.members() == h, name);
                nor.add(is_normal(p, k) == oracle.is_normal(h), name);
                const auto trace = core_trace(p, k);
                cor.add(trace.result().members() == oracle.group_core(h), name);
                len.add(trace.iterations <= 3, name);
                max_iter = std::max(max_iter, trace.iterations);
            }
            auto& s = rep.section("normality");
            s["subgroups"] = subgroups.size();
            s["normal_subgroups"] = normals.size();
            s["max_core_iterations"] = max_iter;
        });

        run_section(rep, "lattice", [&] {
            const auto lat = normal_lattice(p, opts.threads);
            std::vector<ElementSet> got;
            for (const auto& m : lat.members) got.push_back(m.members());
            std::sort(got.begin(), got.end());
            auto want = normals;
            std::sort(want.begin(), want.end());
            rep.check("lattice", "kG lattice = normal subgroups", got == want,
                      std::to_string(got.size()) + " vs " + std::to_string(want.size()));
            const auto dlat = normal_lattice(d, opts.threads);
            rep.check("lattice", "k^G lattice size = number of normal subgroups",
                      dlat.members.size() == normals.size(),
                      std::to_string(dlat.members.size()) + " vs " + std::to_string(normals.size()));
            auto& s = rep.section("lattice");
            s["kG_subdims"] = ojson::array();
            for (const auto& m : lat.members) s["kG_subdims"].push_back(m.subdim());
            s["kdual_subdims"] = ojson::array();
            for (const auto& m : dlat.members) s["kdual_subdims"].push_back(m.subdim());
        });
    }

    run_section(rep, "lattice", [&] {
        const auto mf = maximal_normals_from_f(p, class_partition(p, Side::H));
        rep.check("lattice", "kG maximal normals: core route = f route", true,
                  std::to_string(mf.size()) + " generators");
        const auto mfd = maximal_normals_from_f(d, class_partition(d, Side::H));
        rep.check("lattice", "k^G maximal normals: core route = f route", true,
                  std::to_string(mfd.size()) + " generators");
    });

    run_section(rep, "partition", [&] {
        const auto classes = canonical(conjugacy_classes(g));
        const auto ys = class_partition(p, Side::HStar);
        const auto xs = class_partition(p, Side::H);
        rep.check("partition", "kG: Y blocks = conjugacy classes", canonical(ys.blocks) == classes);
        rep.check("partition", "kG: X blocks = singletons", canonical(xs.blocks) == singletons(r));
        const auto dys = class_partition(d, Side::HStar);
        const auto dxs = class_partition(d, Side::H);
        rep.check("partition", "k^G: Y blocks = singletons", canonical(dys.blocks) == singletons(r));
        rep.check("partition", "k^G: X blocks = conjugacy classes", canonical(dxs.blocks) == classes);
        rep.check("partition", "|I| = |J|",
                  xs.blocks.size() == ys.blocks.size() && dxs.blocks.size() == dys.blocks.size());
        auto& s = rep.section("partition");
        double worst = 0.0;
        for (const auto* q : {&p, &d})
            for (Side side : {Side::H, Side::HStar}) {
                const auto sub = central_subspace(*q, side);
                worst = std::min(worst, sub.min_eigenvalue / std::max(1.0, sub.q_norm));
            }
        s["blocks"] = ys.blocks.size();
        s["min_relative_q_eigenvalue"] = worst;
        rep.check("partition", "Q positive semidefinite", worst > -1e-8);
    });

    run_section(rep, "grouplikes", [&] {
        const auto cg = central_grouplikes(p);
        const auto zg = group_center(g);
        rep.check("grouplikes", "kG: central grouplikes = Z(G)", cg == zg, set_string(g, cg));
        const auto dg = central_grouplikes(d);
        const auto comm = oracle.commutator_subgroup();
        rep.check("grouplikes", "k^G: central grouplikes = |G/[G,G]|", dg.size() * comm.size() == n,
                  std::to_string(dg.size()));
        auto& s = rep.section("grouplikes");
        s["kG"] = cg.size();
        s["kdual"] = dg.size();
    });

    run_section(rep, "center_theorem", [&] {
        const auto part = class_partition(p, Side::H);
        std::vector<std::unique_ptr<Tally>> letters;
        for (const char* l : {"a", "b", "c", "d", "e"})
            letters.push_back(std::make_unique<Tally>(rep, "center_theorem",
                                                      std::string("(") + l + ") every block"));
        std::size_t grew = 0;
        for (std::size_t b = 0; b < part.blocks.size(); ++b) {
            const auto tr = center_theorem_report(p, part, b);
            for (std::size_t i = 0; i < tr.checks.size() && i < 4; ++i)
                letters[i]->add(tr.checks[i].passed, "block " + std::to_string(b));
            std::vector<long long> coeffs(r, 0);
            for (auto chi : part.blocks[b]) coeffs[chi] = table.degrees[chi];
            const auto f = class_function(table, coeffs);
            const auto zo = oracle.center_set(f, tol);
            const auto ko = oracle.kernel(f, tol);
            letters[4]->add(tr.z_closure.members() == zo && tr.kernel.members() == ko &&
                                oracle.quotient_is_cyclic(zo, ko),
                            "block " + std::to_string(b));
            grew += tr.closure_grew ? 1 : 0;
        }
        rep.section("center_theorem")["z_closure_grew"] = grew;
    });

    if (!subgroups.empty()) {
        run_section(rep, "cosets", [&] {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            const std::size_t m = subgroups.size();
            if (m <= kAllPairsLimit) {
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b) pairs.emplace_back(a, b);
            } else {
                std::mt19937_64 rng(opts.seed);
                std::uniform_int_distribution<std::size_t> pick(0, m - 1);
                for (std::size_t i = 0; i < kSampledPairs; ++i) pairs.emplace_back(pick(rng), pick(rng));
            }
            Tally cls(rep, "cosets", "classes = double cosets");
            Tally eig(rep, "cosets", "eigen residual < 1e-8");
            Tally frm(rep, "cosets", "formula residual < 1e-8");
            Tally dim(rep, "cosets", "dims identity");
            Tally mac(rep, "mackey", "character identity");
            Tally mdim(rep, "mackey", "|L|/|L cap K| = |LK|/|K|");
            double worst_eig = 0.0, worst_formula = 0.0, worst_mackey = 0.0;
            for (auto [a, b] : pairs) {
                const auto& k0 = subgroups[a];
                const auto& l0 = subgroups[b];
                const auto name = set_string(g, k0) + " x " + set_string(g, l0);
                try {
                    const auto k = closure_generate(p, k0);
                    const auto l = closure_generate(p, l0);
                    const auto dec = coset_classes(p, k, l);
                    cls.add(dec.classes == oracle.double_cosets(k0, l0), name);
                    const auto er = verify_eigen(p, dec);
                    worst_eig = std::max(worst_eig, er.max_residual);
                    eig.add(er.max_residual < 1e-8, name);
                    double fr = 0.0;
                    for (std::size_t x = 0; x < n; ++x) {
                        const auto f = verify_formula(p, dec, x);
                        fr = std::max(fr, f.residual);
                        if (f.one_sided_residual) fr = std::max(fr, *f.one_sided_residual);
                    }
                    worst_formula = std::max(worst_formula, fr);
                    frm.add(fr < 1e-8, name);
                    const auto di = dims_identity(p, k, l);
                    dim.add(di.ratio > 0, name);
                } catch (const Error& e) {
                    cls.fail(name + ": " + e.what());
                }
                const auto mk = oracle.mackey_check(k0, l0, opts.seed, tol);
                worst_mackey = std::max(worst_mackey, mk.max_residual);
                mac.add(mk.max_residual < 1e-8, name);
                mdim.add(mk.dims_equal(), name);
            }
            auto& s = rep.section("cosets");
            s["pairs"] = pairs.size();
            s["max_eigen_residual"] = worst_eig;
            s["max_formula_residual"] = worst_formula;
            s["max_mackey_residual"] = worst_mackey;
        });
    }
    return rep;
}

}  // namespace hopfkernel
