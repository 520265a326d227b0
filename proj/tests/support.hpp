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

#pragma once

// Shared fixtures and independent oracles. Nothing in here calls the fusion
// machinery: expected values are rebuilt from permutations and classical
// formulas so the library is checked against something it did not produce.

#include <algorithm>
#include <complex>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hopfkernel/group_algebra.hpp"
#include "hopfkernel/group_table.hpp"
#include "hopfkernel/hopf_pair.hpp"
#include "hopfkernel/instance_io.hpp"
#include "hopfkernel/subalgebras.hpp"

namespace support {

using hopfkernel::Complex;
using Perm = std::vector<std::size_t>;

inline std::filesystem::path data(const std::string& rel) {
    return std::filesystem::path(HOPFKERNEL_DATA_DIR) / rel;
}

inline const hopfkernel::HopfPair& kS3() {
    static const auto p = hopfkernel::load_instance(data("instances/kS3.json"));
    return p;
}

inline const hopfkernel::HopfPair& kC2() {
    static const auto p = hopfkernel::load_instance(data("instances/kC2.json"));
    return p;
}

inline hopfkernel::GroupTable group(const std::string& name) {
    return hopfkernel::read_group_file(data("groups/" + name + ".group.json"));
}

/// kG for a bundled group, built once per test binary.
inline const hopfkernel::GroupAlgebra& algebra(const std::string& name) {
    static std::map<std::string, hopfkernel::GroupAlgebra> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, hopfkernel::make_group_algebra(group(name))).first;
    return it->second;
}

inline std::size_t idx(const hopfkernel::FusionRing& r, const std::string& label) {
    return *r.find_label(label);
}

/// Indices of the given labels in Irr(H*), sorted.
inline std::vector<std::size_t> hs(const hopfkernel::HopfPair& p, std::initializer_list<const char*> labels) {
    std::vector<std::size_t> out;
    for (auto l : labels) out.push_back(idx(p.ring_hstar(), l));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::size_t> hi(const hopfkernel::HopfPair& p, std::initializer_list<const char*> labels) {
    std::vector<std::size_t> out;
    for (auto l : labels) out.push_back(idx(p.ring_h(), l));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- S3 by hand -----------------------------------------------------------

inline Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

/// The elements of kS3.json, in file order: e, r, r2, t, tr, tr2.
inline std::vector<Perm> s3_elements() {
    const Perm e{0, 1, 2}, r{1, 2, 0}, t{1, 0, 2};
    const Perm r2 = compose(r, r);
    return {e, r, r2, t, compose(t, r), compose(t, r2)};
}

inline int sign(const Perm& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

inline int fixed_points(const Perm& p) {
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i) n += p[i] == i;
    return n;
}

/// Classical S3 characters eps, sgn, rho = (fixed points - 1) on a permutation.
inline std::vector<double> s3_characters(const Perm& p) {
    return {1.0, double(sign(p)), double(fixed_points(p) - 1)};
}

/// <f, g> = (1/|G|) sum f conj(g), over the listed elements.
inline double s3_inner(const std::vector<double>& f, const std::vector<double>& g) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
    return s / double(f.size());
}

// ---- group ring -----------------------------------------------------------

/// Element of C[G] as coefficients over the group's element indices.
using GroupRingElt = std::vector<Complex>;

inline GroupRingElt group_ring_mul(const hopfkernel::GroupTable& g, const GroupRingElt& a,
                                   const GroupRingElt& b) {
    GroupRingElt c(g.order(), Complex(0.0, 0.0));
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y) c[g.mul(x, y)] += a[x] * b[y];
    return c;
}

inline GroupRingElt indicator(std::size_t n, const std::vector<std::size_t>& s, double w = 1.0) {
    GroupRingElt v(n, Complex(0.0, 0.0));
    for (auto x : s) v[x] = w;
    return v;
}

inline double max_diff(const GroupRingElt& a, const GroupRingElt& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace support
