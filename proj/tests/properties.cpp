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

#include "properties.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "hopfkernel/errors.hpp"
#include "support.hpp"

using namespace hopfkernel;

namespace properties {

namespace {

using Rng = std::mt19937_64;

struct Pool {
    std::vector<HopfPair> pairs;

    Pool() {
        pairs.push_back(support::kS3());
        pairs.push_back(support::kC2());
        for (const char* name : {"C2", "C4", "C2xC2", "S3", "D4", "Q8", "A4", "D5", "S4"}) {
            pairs.push_back(support::algebra(name).pair);
            pairs.push_back(dualize(support::algebra(name).pair));
        }
    }

    const HopfPair& pick(Rng& rng) const {
        return pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    }
};

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Side any_side(Rng& rng) { return below(rng, 2) ? Side::H : Side::HStar; }

CharVector random_complex(const HopfPair& p, Side s, Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CharVector x(s, p.size(s));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = Complex(u(rng), u(rng));
    return x;
}

CharVector random_integer(const HopfPair& p, Side s, Rng& rng) {
    std::uniform_int_distribution<int> u(-3, 3);
    CharVector x(s, p.size(s));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = double(u(rng));
    return x;
}

/// Nonzero character with small nonnegative multiplicities, mostly sparse.
CharVector random_genuine(const HopfPair& p, Rng& rng) {
    CharVector x(Side::H, p.size(Side::H));
    std::bernoulli_distribution on(0.3);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (on(rng)) x[i] = double(1 + below(rng, 2));
    if (x.max_abs() == 0.0) x[below(rng, x.size())] = 1.0;
    return x;
}

double rel(double residual, double scale) { return residual / std::max(1.0, scale); }

/// Returns an empty string on success, otherwise a description of the failure.
using Property = std::function<std::string(const Pool&, Rng&)>;

std::string perturbation_rejected(const Pool& pool, Rng& rng) {
    const auto& p = pool.pick(rng);
    auto raw = p.to_raw();
    std::ostringstream what;
    what << p.name() << ": ";
    switch (below(rng, 3)) {
        case 0:
        case 1: {
            const bool h = below(rng, 2) == 0;
            auto& ring = h ? raw.ring_h : raw.ring_hstar;
            auto entries = ring.entries();
            const std::size_t n = ring.size();
            const std::size_t i = below(rng, n), j = below(rng, n), k = below(rng, n);
            auto it = std::find_if(entries.begin(), entries.end(),
                                   [&](const FusionEntry& e) { return e.i == i && e.j == j && e.k == k; });
            if (it == entries.end()) {
                entries.push_back({i, j, k, 1});
            } else if (it->n > 0 && below(rng, 2)) {
                --it->n;
            } else {
                ++it->n;
            }
            what << (h ? "H" : "H*") << " fusion at (" << i << "," << j << "," << k << ")";
            try {
                ring = FusionRing(ring.labels(), ring.degrees(), ring.duals(), std::move(entries));
            } catch (const StructuralError&) {
                return {};
            }
            break;
        }
        default: {
            const std::size_t chi = below(rng, raw.eval.size());
            const std::size_t d = below(rng, raw.eval[chi].size());
            const double mag = std::uniform_real_distribution<double>(1e-3, 1.0)(rng) * (below(rng, 2) ? 1 : -1);
            raw.eval[chi][d] += below(rng, 2) ? Complex(mag, 0.0) : Complex(0.0, mag);
            what << "eval at (" << chi << "," << d << ") by " << mag;
            break;
        }
    }
    try {
        if (check_pair(raw).ok()) return what.str() + " accepted";
    } catch (const StructuralError&) {
    }
    return {};
}

std::string fuse_associative_unital(const Pool& pool, Rng& rng) {
    const auto& p = pool.pick(rng);
    const Side s = any_side(rng);
    const auto x = random_complex(p, s, rng), y = random_complex(p, s, rng), z = random_complex(p, s, rng);
    const auto left = fuse(p, fuse(p, x, y), z);
    const auto right = fuse(p, x, fuse(p, y, z));
    if (rel(max_residual(left, right), left.max_abs()) > 1e-8) return p.name() + ": fuse not associative";
    const auto u = CharVector::unit(p, s);
    if (max_residual(fuse(p, u, x), x) > 1e-12 || max_residual(fuse(p, x, u), x) > 1e-12)
        return p.name() + ": unit not neutral";
    return {};
}

std::string frobenius_identities(const Pool& pool, Rng& rng) {
    const auto& p = pool.pick(rng);
    const Side s = any_side(rng);
    const auto x = random_integer(p, s, rng), y = random_integer(p, s, rng), z = random_integer(p, s, rng);
    const auto xs = dual_of(p, x), ys = dual_of(p, y), zs = dual_of(p, z);
    const auto a = mult_form(x, fuse(p, y, z));
    const auto b = mult_form(ys, fuse(p, z, xs));
    const auto c = mult_form(zs, fuse(p, xs, y));
    if (a != b || b != c) return p.name() + ": m(x,yz), m(y*,zx*), m(z*,x*y) differ";
    if (mult_form(x, y) != mult_form(ys, xs)) return p.name() + ": m(x,y) != m(y*,x*)";
    return {};
}

std::string grouplike_multiplicative(const Pool& pool, Rng& rng) {
    const auto& p = pool.pick(rng);
    std::vector<std::size_t> grouplikes;
    for (std::size_t d = 0; d < p.size(Side::HStar); ++d)
        if (p.ring_hstar().degree(d) == 1) grouplikes.push_back(d);
    const auto d = CharVector::basis(p, Side::HStar, grouplikes[below(rng, grouplikes.size())]);
    const auto a = random_complex(p, Side::H, rng), b = random_complex(p, Side::H, rng);
    const auto lhs = evaluate(p, fuse(p, a, b), d);
    const auto rhs = evaluate(p, a, d) * evaluate(p, b, d);
    if (rel(std::abs(lhs - rhs), std::abs(rhs)) > 1e-8) return p.name() + ": grouplike not multiplicative";
    return {};
}

std::string kernel_inclusions(const Pool& pool, Rng& rng) {
    const auto& p = pool.pick(rng);
    const auto x = random_genuine(p, rng);
    const auto ker = kernel_of(p, x);
    const auto z = z_of(p, x);
    if (!ker.is_subset_of(z)) return p.name() + ": ker not in z";
    auto power = x;
    for (int n = 2; n <= 3; ++n) {
        power = fuse(p, power, x);
        if (!ker.is_subset_of(kernel_of(p, power))) return p.name() + ": ker x not in ker x^" + std::to_string(n);
        if (!z.is_subset_of(z_of(p, power))) return p.name() + ": z x not in z x^" + std::to_string(n);
    }
    // Kernel members evaluate to the degree exactly as selected.
    const auto deg = degree_of(p, x);
    for (auto d : ker.members()) {
        const auto v = evaluate(p, x, CharVector::basis(p, Side::HStar, d));
        if (!p.tolerance().near(v, deg * double(p.ring_hstar().degree(d))))
            return p.name() + ": kernel member off the degree";
    }
    return {};
}

std::string larger_character_smaller_kernel(const Pool& pool, Rng& rng) {
    const auto& p = pool.pick(rng);
    const auto x = random_genuine(p, rng);
    const auto y = x + random_genuine(p, rng);
    if (!kernel_of(p, y).is_subset_of(kernel_of(p, x))) return p.name() + ": ker y not in ker x";
    return {};
}

std::string subdim_divides(const Pool& pool, Rng& rng) {
    const auto& p = pool.pick(rng);
    const std::size_t n = p.size(Side::HStar);
    std::vector<std::size_t> seed;
    const std::size_t count = 1 + below(rng, 2);
    for (std::size_t i = 0; i < count; ++i) seed.push_back(below(rng, n));
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    const auto k = closure_generate(p, seed);
    if (p.dim() % k.subdim() != 0) return p.name() + ": subdim does not divide dim";
    const auto ker = kernel_of(p, random_genuine(p, rng));
    if (p.dim() % ker.subdim() != 0) return p.name() + ": kernel subdim does not divide dim";
    for (auto s : seed)
        if (!k.contains(s)) return p.name() + ": closure misses a seed";
    return {};
}

}  // namespace

std::vector<Outcome> run_all(std::uint64_t seed, std::size_t per_property) {
    static const Pool pool;
    const std::vector<std::pair<std::string, Property>> props = {
        {"perturbed fusion data rejected", perturbation_rejected},
        {"fuse associative and unital", fuse_associative_unital},
        {"mult_form Frobenius identities", frobenius_identities},
        {"grouplike multiplicativity", grouplike_multiplicative},
        {"ker in z, ker x in ker x^n", kernel_inclusions},
        {"larger character, smaller kernel", larger_character_smaller_kernel},
        {"subdim divides dim", subdim_divides},
    };
    std::vector<Outcome> out;
    Rng rng(seed);
    for (const auto& [name, prop] : props) {
        Outcome o{name, 0, 0, {}};
        for (std::size_t i = 0; i < per_property; ++i) {
            ++o.cases;
            std::string failure;
            try {
                failure = prop(pool, rng);
            } catch (const std::exception& e) {
                failure = std::string("threw: ") + e.what();
            }
            if (!failure.empty() && o.failures++ == 0) o.first_failure = failure;
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace properties
