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

#include "hopfkernel/normality.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

CharVector induced_trivial_character(const HopfPair& p, const ClosedSubset& k) {
    const auto& tol = p.tolerance();
    const auto& rh = p.ring_h();
    const auto& rs = p.ring_hstar();
    CharVector out(Side::H, rh.size());
    long long total = 0;
    for (std::size_t chi = 0; chi < rh.size(); ++chi) {
        Complex raw = 0.0;
        for (auto d : k.members()) raw += double(rs.degree(d)) * p.eval(chi, d);
        raw /= double(k.subdim());
        const auto m = tol.snap(raw);
        if (!m) {
            std::ostringstream os;
            os << "multiplicity of " << rh.label(chi) << " is " << raw << ", not an integer";
            throw AssertionFailure("induced_trivial_character", os.str());
        }
        if (*m < 0)
            throw AssertionFailure("induced_trivial_character",
                                   "negative multiplicity for " + rh.label(chi));
        out[chi] = double(*m);
        total += *m * rh.degree(chi);
    }
    if (total * k.subdim() != p.dim())
        throw AssertionFailure("induced_trivial_character",
                               "total degree " + std::to_string(total) + " differs from dim/subdim = " +
                                   std::to_string(p.dim() / k.subdim()));
    return out;
}

bool is_normal(const HopfPair& p, const ClosedSubset& k) {
    const auto induced = induced_trivial_character(p, k);
    const bool by_kernel = kernel_of(p, induced) == k;
    bool by_central_idempotent = true;
    const auto& rh = p.ring_h();
    for (std::size_t chi = 0; chi < rh.size(); ++chi) {
        const long long m = std::llround(induced[chi].real());
        if (m != 0 && m != rh.degree(chi)) {
            by_central_idempotent = false;
            break;
        }
    }
    if (by_kernel != by_central_idempotent)
        throw AssertionFailure("is_normal", "kernel criterion and central-idempotent criterion "
                                            "disagree");
    return by_kernel;
}

std::vector<std::size_t> quotient_irr(const HopfPair& p, const ClosedSubset& k,
                                      bool require_normal) {
    if (require_normal && !is_normal(p, k))
        throw InvalidArgument("quotient_irr: subset is not normal");
    const auto& rh = p.ring_h();
    std::vector<std::size_t> out;
    long long sq = 0;
    for (std::size_t chi = 0; chi < rh.size(); ++chi) {
        if (k.is_subset_of(kernel_of(p, CharVector::basis(p, Side::H, chi)))) {
            out.push_back(chi);
            sq += rh.degree(chi) * rh.degree(chi);
        }
    }
    if (require_normal && sq * k.subdim() != p.dim())
        throw AssertionFailure("quotient_irr", "sum of squared degrees " + std::to_string(sq) +
                                                   " differs from dim/subdim = " +
                                                   std::to_string(p.dim() / k.subdim()));
    return out;
}

CoreTrace core_trace(const HopfPair& p, const ClosedSubset& k) {
    CoreTrace trace;
    trace.chain.push_back(k);
    const std::size_t limit = p.size(Side::HStar);
    for (;;) {
        if (trace.iterations >= limit)
            throw AssertionFailure("core", "iteration exceeded |Irr(H*)| steps");
        auto next = kernel_of(p, induced_trivial_character(p, trace.chain.back()));
        ++trace.iterations;
        if (!next.is_subset_of(trace.chain.back()))
            throw AssertionFailure("core", "iteration left the previous subalgebra");
        if (next == trace.chain.back()) break;
        trace.chain.push_back(std::move(next));
    }
    if (!is_normal(p, trace.result()))
        throw AssertionFailure("core", "fixed point is not normal");
    return trace;
}

ClosedSubset core(const HopfPair& p, const ClosedSubset& k) { return core_trace(p, k).result(); }

std::vector<std::size_t> central_grouplikes(const HopfPair& p) {
    const auto& tol = p.tolerance();
    const auto& rh = p.ring_h();
    const auto& rs = p.ring_hstar();

    std::vector<std::size_t> direct;
    for (std::size_t d = 0; d < rs.size(); ++d) {
        if (rs.degree(d) != 1) continue;
        bool scalar_everywhere = true;
        for (std::size_t chi = 0; chi < rh.size() && scalar_everywhere; ++chi)
            scalar_everywhere = tol.near(std::abs(p.eval(chi, d)), double(rh.degree(chi)));
        if (scalar_everywhere) direct.push_back(d);
    }

    std::vector<std::size_t> via_z = ClosedSubset::full(p).members();
    for (std::size_t chi = 0; chi < rh.size(); ++chi) {
        const auto z = z_of(p, CharVector::basis(p, Side::H, chi));
        std::vector<std::size_t> next;
        std::set_intersection(via_z.begin(), via_z.end(), z.members().begin(), z.members().end(),
                              std::back_inserter(next));
        via_z = std::move(next);
    }
    if (direct != via_z)
        throw AssertionFailure("central_grouplikes",
                               "grouplike scan and intersection of z-sets disagree");
    return direct;
}

namespace {

std::vector<ClosedSubset> sorted_unique(std::vector<ClosedSubset> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<ClosedSubset> maximal_normal_generators(const HopfPair& p, unsigned threads) {
    const std::size_t n = p.size(Side::H);
    std::vector<std::optional<ClosedSubset>> cores(n);
    std::vector<std::exception_ptr> errors(n);
    auto work = [&](std::size_t chi) {
        try {
            cores[chi] = core(p, kernel_of(p, CharVector::basis(p, Side::H, chi)));
        } catch (...) {
            errors[chi] = std::current_exception();
        }
    };
    if (threads <= 1) {
        for (std::size_t chi = 0; chi < n; ++chi) work(chi);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t chi = t; chi < n; chi += threads) work(chi);
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<ClosedSubset> out;
    for (auto& c : cores) out.push_back(std::move(*c));
    return sorted_unique(std::move(out));
}

NormalLattice normal_lattice(const HopfPair& p, unsigned threads) {
    NormalLattice lat;
    lat.maximal_generators = maximal_normal_generators(p, threads);

    std::vector<ClosedSubset> members = lat.maximal_generators;
    members.push_back(ClosedSubset::full(p));
    members = sorted_unique(std::move(members));
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t m = members.size();
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                auto c = intersect(p, members[a], members[b]);
                if (std::find(members.begin(), members.end(), c) == members.end()) {
                    members.push_back(std::move(c));
                    grew = true;
                }
            }
        }
    }
    lat.members = sorted_unique(std::move(members));
    for (const auto& k : lat.members)
        if (!is_normal(p, k))
            throw AssertionFailure("normal_lattice", "lattice member fails is_normal");
    return lat;
}

}  // namespace hopfkernel
