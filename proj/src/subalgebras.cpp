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

#include "hopfkernel/subalgebras.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

namespace {

std::vector<char> indicator(std::size_t n, std::span<const std::size_t> members) {
    std::vector<char> in(n, 0);
    for (auto d : members) in[d] = 1;
    return in;
}

long long subdim_of(const HopfPair& p, std::span<const std::size_t> members) {
    long long s = 0;
    for (auto d : members) {
        const auto e = p.ring_hstar().degree(d);
        s += e * e;
    }
    return s;
}

enum class ScalarTest { Kernel, Center };

ClosedSubset scalar_action_set(const HopfPair& p, const CharVector& x, ScalarTest mode) {
    const char* op = mode == ScalarTest::Kernel ? "kernel_of" : "z_of";
    if (x.side() != Side::H)
        throw InvalidArgument(std::string(op) + ": expects an H-side character");
    if (x.size() != p.size(Side::H))
        throw InvalidArgument(std::string(op) + ": vector length does not match Irr(H)");
    const auto& tol = p.tolerance();
    const auto mult = multiplicities(x, tol);
    const auto& rh = p.ring_h();
    const auto& rs = p.ring_hstar();

    long long x1 = 0;
    for (std::size_t chi = 0; chi < mult.size(); ++chi) x1 += mult[chi] * rh.degree(chi);

    std::vector<std::size_t> members;
    for (std::size_t d = 0; d < rs.size(); ++d) {
        Complex v = 0.0;
        for (std::size_t chi = 0; chi < mult.size(); ++chi)
            if (mult[chi] != 0) v += double(mult[chi]) * p.eval(chi, d);
        const double target = double(x1 * rs.degree(d));
        const double dist = mode == ScalarTest::Kernel ? std::abs(v - Complex(target, 0.0))
                                                       : std::abs(std::abs(v) - target);
        const double thr = tol.scaled(target);
        if (dist <= thr) {
            members.push_back(d);
        } else if (dist <= 10.0 * thr) {
            std::ostringstream os;
            os << op << ": marginal classification at " << rs.label(d) << " (distance " << dist
               << ", threshold " << thr << ")";
            throw MarginalClassification(os.str());
        }
    }
    if (!is_closed(p, members))
        throw AssertionFailure(op, "selected set is not closed under fusion and duality; the "
                                   "instance data is inconsistent");
    return ClosedSubset::verified(p, std::move(members));
}

}  // namespace

ClosedSubset ClosedSubset::verified(const HopfPair& p, std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto d : members)
        if (d >= p.size(Side::HStar))
            throw InvalidArgument("subset index " + std::to_string(d) + " out of range");
    if (!is_closed(p, members))
        throw AssertionFailure("closed subset", "subset is not closed under fusion and duality");
    const long long sd = subdim_of(p, members);
    if (p.dim() % sd != 0)
        throw AssertionFailure("closed subset", "subdim " + std::to_string(sd) +
                                                    " does not divide dim " +
                                                    std::to_string(p.dim()));
    return ClosedSubset(std::move(members), sd);
}

ClosedSubset ClosedSubset::unit(const HopfPair& p) { return verified(p, {0}); }

ClosedSubset ClosedSubset::full(const HopfPair& p) {
    std::vector<std::size_t> all(p.size(Side::HStar));
    for (std::size_t d = 0; d < all.size(); ++d) all[d] = d;
    return verified(p, std::move(all));
}

bool ClosedSubset::contains(std::size_t d) const {
    return std::binary_search(members_.begin(), members_.end(), d);
}

bool ClosedSubset::is_subset_of(const ClosedSubset& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

std::vector<std::string> member_labels(const HopfPair& p, const ClosedSubset& k) {
    std::vector<std::string> out;
    for (auto d : k.members()) out.push_back(p.ring_hstar().label(d));
    return out;
}

bool is_closed(const HopfPair& p, std::span<const std::size_t> members) {
    const auto& rs = p.ring_hstar();
    for (auto d : members)
        if (d >= rs.size()) return false;
    const auto in = indicator(rs.size(), members);
    if (!in[0]) return false;
    for (auto a : members) {
        if (!in[rs.dual(a)]) return false;
        for (auto b : members)
            for (const auto& t : rs.product(a, b))
                if (!in[t.index]) return false;
    }
    return true;
}

ClosedSubset kernel_of(const HopfPair& p, const CharVector& x) {
    return scalar_action_set(p, x, ScalarTest::Kernel);
}

ClosedSubset z_of(const HopfPair& p, const CharVector& x) {
    return scalar_action_set(p, x, ScalarTest::Center);
}

ClosedSubset closure_generate(const HopfPair& p, std::span<const std::size_t> seed) {
    const auto& rs = p.ring_hstar();
    std::vector<char> in(rs.size(), 0);
    std::vector<std::size_t> list;
    auto add = [&](std::size_t d) {
        if (d >= rs.size())
            throw InvalidArgument("closure_generate: index " + std::to_string(d) +
                                  " out of range");
        if (!in[d]) {
            in[d] = 1;
            list.push_back(d);
        }
    };
    add(0);
    for (auto s : seed) {
        add(s);
        add(rs.dual(s));
    }
    // Each member is multiplied against every member processed before it.
    for (std::size_t done = 0; done < list.size(); ++done) {
        const std::size_t a = list[done];
        for (std::size_t t = 0; t <= done; ++t) {
            const std::size_t b = list[t];
            for (const auto& term : rs.product(a, b)) {
                add(term.index);
                add(rs.dual(term.index));
            }
            for (const auto& term : rs.product(b, a)) {
                add(term.index);
                add(rs.dual(term.index));
            }
        }
    }
    return ClosedSubset::verified(p, std::move(list));
}

ClosedSubset intersect(const HopfPair& p, const ClosedSubset& a, const ClosedSubset& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(out));
    return ClosedSubset::verified(p, std::move(out));
}

ClosedSubset join(const HopfPair& p, const ClosedSubset& a, const ClosedSubset& b) {
    std::vector<std::size_t> seed(a.members());
    seed.insert(seed.end(), b.members().begin(), b.members().end());
    return closure_generate(p, seed);
}

std::vector<std::size_t> power_constituents(const HopfPair& p, const CharVector& x) {
    if (x.side() != Side::H) throw InvalidArgument("power_constituents: expects an H-side character");
    const auto mult = multiplicities(x, p.tolerance());
    const auto& rh = p.ring_h();
    const std::size_t n = rh.size();

    std::vector<std::size_t> factor;
    for (std::size_t i = 0; i < n; ++i)
        if (mult[i] > 0) factor.push_back(i);

    // Coefficients are nonnegative, so supp(x^{n+1}) depends only on supp(x^n).
    std::vector<char> seen(n, 0), current(n, 0);
    seen[0] = current[0] = 1;
    for (;;) {
        std::vector<char> next(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            if (!current[a]) continue;
            for (auto b : factor)
                for (const auto& t : rh.product(a, b)) next[t.index] = 1;
        }
        bool grew = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (next[i] && !seen[i]) {
                seen[i] = 1;
                grew = true;
            }
        }
        if (!grew) break;
        current = std::move(next);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

CharVector integral_counit_normalized(const HopfPair& p, const ClosedSubset& k) {
    CharVector v(Side::HStar, p.size(Side::HStar));
    for (auto d : k.members()) v[d] = double(p.ring_hstar().degree(d));
    return v;
}

CharVector integral_idempotent(const HopfPair& p, const ClosedSubset& k) {
    return Complex(1.0 / double(k.subdim()), 0.0) * integral_counit_normalized(p, k);
}

}  // namespace hopfkernel
