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

#include "hopfkernel/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <tuple>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<long long> degrees,
                       std::vector<std::size_t> dual, std::vector<FusionEntry> entries)
    : labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      dual_(std::move(dual)),
      entries_(std::move(entries)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw StructuralError("fusion ring has no simple objects");
    if (degrees_.size() != n)
        throw StructuralError("degree list has " + std::to_string(degrees_.size()) +
                              " entries, expected " + std::to_string(n));
    if (dual_.size() != n)
        throw StructuralError("dual list has " + std::to_string(dual_.size()) +
                              " entries, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (degrees_[i] <= 0)
            throw StructuralError("degree of index " + std::to_string(i) + " is not positive");
        if (dual_[i] >= n)
            throw StructuralError("dual of index " + std::to_string(i) + " is out of range");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dual_[dual_[i]] != i)
            throw StructuralError("dual is not an involution at index " + std::to_string(i));
    }

    std::erase_if(entries_, [](const FusionEntry& e) { return e.n == 0; });
    for (const auto& e : entries_) {
        if (e.i >= n || e.j >= n || e.k >= n) {
            std::ostringstream os;
            os << "fusion entry [" << e.i << "," << e.j << "," << e.k << "," << e.n
               << "] has an index out of range";
            throw StructuralError(os.str());
        }
        if (e.n < 0) {
            std::ostringstream os;
            os << "fusion entry [" << e.i << "," << e.j << "," << e.k << "] is negative";
            throw StructuralError(os.str());
        }
    }
    std::sort(entries_.begin(), entries_.end(), [](const FusionEntry& a, const FusionEntry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (std::size_t t = 1; t < entries_.size(); ++t) {
        const auto& a = entries_[t - 1];
        const auto& b = entries_[t];
        if (a.i == b.i && a.j == b.j && a.k == b.k) {
            std::ostringstream os;
            os << "duplicate fusion entry for (" << a.i << "," << a.j << "," << a.k << ")";
            throw StructuralError(os.str());
        }
    }

    products_.assign(n * n, {});
    for (const auto& e : entries_) products_[e.i * n + e.j].push_back({e.k, e.n});
}

long long FusionRing::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : product(i, j))
        if (t.index == k) return t.mult;
    return 0;
}

long long FusionRing::global_dimension() const {
    long long s = 0;
    for (auto d : degrees_) s += d * d;
    return s;
}

std::optional<std::size_t> FusionRing::find_label(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return i;
    return std::nullopt;
}

namespace {

std::string loc(std::string_view ring, std::initializer_list<std::size_t> idx,
                const FusionRing& r) {
    std::ostringstream os;
    os << ring << "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) os << ",";
        first = false;
        os << r.label(i);
    }
    os << ")";
    return os.str();
}

}  // namespace

std::vector<Violation> check_fusion_axioms(const FusionRing& r, std::string_view name) {
    std::vector<Violation> out;
    const std::size_t n = r.size();

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const long long want = (j == k) ? 1 : 0;
            if (auto got = r.coefficient(0, j, k); got != want)
                out.push_back({"unit law", loc(name, {0, j, k}, r), double(std::llabs(got - want))});
            if (auto got = r.coefficient(j, 0, k); got != want)
                out.push_back({"unit law", loc(name, {j, 0, k}, r), double(std::llabs(got - want))});
        }
    }

    if (r.dual(0) != 0) out.push_back({"duality/Frobenius", loc(name, {0}, r), 1.0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long long want = (j == r.dual(i)) ? 1 : 0;
            if (auto got = r.coefficient(i, j, 0); got != want)
                out.push_back(
                    {"duality/Frobenius", loc(name, {i, j}, r), double(std::llabs(got - want))});
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long long s = 0;
            for (const auto& t : r.product(i, j)) s += t.mult * r.degree(t.index);
            const long long want = r.degree(i) * r.degree(j);
            if (s != want)
                out.push_back(
                    {"degree homomorphism", loc(name, {i, j}, r), double(std::llabs(s - want))});
        }
    }

    for (const auto& e : r.entries()) {
        const long long mirrored = r.coefficient(r.dual(e.j), r.dual(e.i), r.dual(e.k));
        if (mirrored != e.n)
            out.push_back({"dual compatibility", loc(name, {e.i, e.j, e.k}, r),
                           double(std::llabs(mirrored - e.n))});
    }
    // Entries absent on one side but present on the mirrored side are caught
    // when the loop visits the mirrored entry.

    // (i j) k versus i (j k), compared as coefficient vectors over l.
    std::vector<long long> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (const auto& m : r.product(i, j))
                    for (const auto& l : r.product(m.index, k)) lhs[l.index] += m.mult * l.mult;
                for (const auto& m : r.product(j, k))
                    for (const auto& l : r.product(i, m.index)) rhs[l.index] += m.mult * l.mult;
                for (std::size_t l = 0; l < n; ++l) {
                    if (lhs[l] != rhs[l])
                        out.push_back({"associativity", loc(name, {i, j, k, l}, r),
                                       double(std::llabs(lhs[l] - rhs[l]))});
                }
            }
        }
    }
    return out;
}

}  // namespace hopfkernel
