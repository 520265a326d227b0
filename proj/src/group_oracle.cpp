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

#include "hopfkernel/group_oracle.hpp"

#include <algorithm>
#include <set>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

ElementSet GroupOracle::generated(std::span<const std::size_t> seed) const {
    std::vector<char> in(g_.order(), 0);
    ElementSet out{0};
    in[0] = 1;
    for (auto s : seed) {
        if (s >= g_.order()) throw InvalidArgument("generated: element out of range");
        if (!in[s]) {
            in[s] = 1;
            out.push_back(s);
        }
    }
    // A finite subset closed under products is a subgroup.
    for (std::size_t q = 0; q < out.size(); ++q)
        for (std::size_t r = 0; r <= q; ++r)
            for (auto xy : {g_.mul(out[q], out[r]), g_.mul(out[r], out[q])})
                if (!in[xy]) {
                    in[xy] = 1;
                    out.push_back(xy);
                }
    std::sort(out.begin(), out.end());
    return out;
}

bool GroupOracle::is_subgroup(const ElementSet& h) const {
    if (h.empty() || h.front() != 0) return false;
    for (auto a : h)
        for (auto b : h)
            if (!std::binary_search(h.begin(), h.end(), g_.mul(a, b))) return false;
    return true;
}

std::vector<ElementSet> GroupOracle::subgroups(std::size_t max_order) const {
    if (g_.order() > max_order)
        throw InvalidArgument("subgroup enumeration is limited to order " + std::to_string(max_order));
    std::set<ElementSet> found;
    for (std::size_t x = 0; x < g_.order(); ++x) {
        const std::size_t seed[] = {x};
        found.insert(generated(seed));
    }
    std::vector<ElementSet> work(found.begin(), found.end());
    for (std::size_t q = 0; q < work.size(); ++q) {
        for (std::size_t r = 0; r < q; ++r) {
            ElementSet both = work[q];
            both.insert(both.end(), work[r].begin(), work[r].end());
            auto j = generated(both);
            if (found.insert(j).second) work.push_back(std::move(j));
        }
    }
    std::sort(work.begin(), work.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return work;
}

bool GroupOracle::is_normal(const ElementSet& h) const {
    for (auto x : h)
        for (std::size_t y = 0; y < g_.order(); ++y)
            if (!std::binary_search(h.begin(), h.end(), g_.conjugate(x, y))) return false;
    return true;
}

std::vector<ElementSet> GroupOracle::normal_subgroups(std::size_t max_order) const {
    std::vector<ElementSet> out;
    for (auto& h : subgroups(max_order))
        if (is_normal(h)) out.push_back(std::move(h));
    return out;
}

ElementSet GroupOracle::group_core(const ElementSet& h) const {
    ElementSet out;
    for (auto x : h) {
        bool all = true;
        // x is in every conjugate y H y^-1 iff y^-1 x y is in H for every y.
        for (std::size_t y = 0; y < g_.order() && all; ++y)
            all = std::binary_search(h.begin(), h.end(), g_.conjugate(x, g_.inverse(y)));
        if (all) out.push_back(x);
    }
    return out;
}

ElementSet GroupOracle::commutator_subgroup() const {
    ElementSet comms;
    for (std::size_t a = 0; a < g_.order(); ++a)
        for (std::size_t b = 0; b < g_.order(); ++b)
            comms.push_back(g_.mul(g_.mul(a, b), g_.mul(g_.inverse(a), g_.inverse(b))));
    return generated(comms);
}

ElementSet GroupOracle::intersection(const ElementSet& a, const ElementSet& b) const {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ElementSet GroupOracle::product_set(const ElementSet& a, const ElementSet& b) const {
    std::set<std::size_t> s;
    for (auto x : a)
        for (auto y : b) s.insert(g_.mul(x, y));
    return {s.begin(), s.end()};
}

ElementSet GroupOracle::kernel(std::span<const Complex> f, const Tolerance& tol) const {
    ElementSet out;
    for (std::size_t x = 0; x < g_.order(); ++x)
        if (tol.near(f[x], f[0])) out.push_back(x);
    return out;
}

ElementSet GroupOracle::center_set(std::span<const Complex> f, const Tolerance& tol) const {
    ElementSet out;
    for (std::size_t x = 0; x < g_.order(); ++x)
        if (tol.near(std::abs(f[x]), std::abs(f[0]))) out.push_back(x);
    return out;
}

std::vector<ElementSet> GroupOracle::double_cosets(const ElementSet& k, const ElementSet& l) const {
    std::vector<char> seen(g_.order(), 0);
    std::vector<ElementSet> out;
    for (std::size_t x = 0; x < g_.order(); ++x) {
        if (seen[x]) continue;
        std::set<std::size_t> cls;
        for (auto a : k)
            for (auto b : l) cls.insert(g_.mul(g_.mul(a, x), b));
        for (auto y : cls) seen[y] = 1;
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

bool GroupOracle::quotient_is_cyclic(const ElementSet& z, const ElementSet& n) const {
    if (!is_subgroup(z) || !is_subgroup(n)) return false;
    for (auto x : n)
        if (!std::binary_search(z.begin(), z.end(), x)) return false;
    for (auto x : n)
        for (auto y : z)
            if (!std::binary_search(n.begin(), n.end(), g_.conjugate(x, y))) return false;
    const std::size_t index = z.size() / n.size();
    for (auto x : z) {
        std::size_t k = 1;
        for (std::size_t p = x; !std::binary_search(n.begin(), n.end(), p); p = g_.mul(p, x)) ++k;
        if (k == index) return true;
    }
    return false;
}

MackeyReport GroupOracle::mackey_check(const ElementSet& k, const ElementSet& l, std::uint64_t seed,
                                       const Tolerance& tol) const {
    if (!is_subgroup(k) || !is_subgroup(l)) throw InvalidArgument("mackey_check: not a subgroup");
    const auto sub = g_.subgroup(k);
    std::vector<std::size_t> local(g_.order(), g_.order());
    for (std::size_t i = 0; i < sub.order(); ++i) local[sub.embedding()[i]] = i;
    const auto table = character_table(sub, seed, tol);
    auto in_k = [&](std::size_t x) { return local[x] != g_.order(); };

    // Left cosets xK inside LK, one representative x in L each.
    std::vector<std::size_t> reps;
    std::set<std::size_t> coset_keys;
    for (auto x : l) {
        std::size_t key = g_.order();
        for (auto a : k) key = std::min(key, g_.mul(x, a));
        if (coset_keys.insert(key).second) reps.push_back(x);
    }
    const auto lk = product_set(l, k);
    const auto cap = intersection(l, k);

    MackeyReport rep;
    rep.irreducibles = table.size();
    rep.l_over_intersection = static_cast<long long>(l.size() / cap.size());
    rep.lk_over_k = static_cast<long long>(lk.size() / k.size());
    if (l.size() % cap.size() != 0 || lk.size() % k.size() != 0 || reps.size() * k.size() != lk.size())
        throw AssertionFailure("mackey_check", "coset counts are inconsistent");

    for (std::size_t m = 0; m < table.size(); ++m) {
        auto psi = [&](std::size_t x) { return table.value(m, local[x]); };
        for (auto y : l) {
            Complex left = 0.0;
            for (auto x : reps) {
                const auto c = g_.conjugate(y, g_.inverse(x));  // x^-1 y x
                if (in_k(c)) left += psi(c);
            }
            Complex right = 0.0;
            for (auto x : l) {
                const auto c = g_.conjugate(y, g_.inverse(x));
                if (in_k(c)) right += psi(c);  // c is in L automatically
            }
            right /= double(cap.size());
            rep.max_residual = std::max(rep.max_residual, std::abs(left - right));
        }
    }
    return rep;
}

std::vector<Complex> class_function(const CharacterTable& t, std::span<const long long> coeffs) {
    std::vector<Complex> out(t.class_of.size(), Complex(0.0, 0.0));
    for (std::size_t x = 0; x < out.size(); ++x)
        for (std::size_t i = 0; i < coeffs.size() && i < t.size(); ++i)
            out[x] += double(coeffs[i]) * t.value(i, x);
    return out;
}

}  // namespace hopfkernel
