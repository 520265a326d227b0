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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hopfkernel {

/// One nonzero structure constant N_{ij}^k = n.
struct FusionEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    long long n = 0;

    friend bool operator==(const FusionEntry&, const FusionEntry&) = default;
};

/// One violated axiom: which invariant, where, and by how much.
struct Violation {
    std::string invariant;
    std::string location;
    double residual = 0.0;
};

/// Based ring with nonnegative integer structure constants: the Grothendieck
/// ring of either H or H*. Index 0 is the unit. Structure constants are stored
/// sparsely; products are looked up per (i, j) pair.
class FusionRing {
public:
    struct Term {
        std::size_t index;
        long long mult;
    };

    FusionRing() = default;

    /// Structural checks only (lengths, index ranges, involutive dual, positive
    /// degrees, no duplicate entries). Axioms are checked by check_fusion_axioms.
    /// Throws StructuralError.
    FusionRing(std::vector<std::string> labels, std::vector<long long> degrees,
               std::vector<std::size_t> dual, std::vector<FusionEntry> entries);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    long long degree(std::size_t i) const { return degrees_.at(i); }
    std::size_t dual(std::size_t i) const { return dual_.at(i); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<long long>& degrees() const noexcept { return degrees_; }
    const std::vector<std::size_t>& duals() const noexcept { return dual_; }

    /// Entries sorted by (i, j, k).
    const std::vector<FusionEntry>& entries() const noexcept { return entries_; }

    /// Nonzero terms of the product i * j, sorted by index.
    std::span<const Term> product(std::size_t i, std::size_t j) const {
        return products_[i * size() + j];
    }

    long long coefficient(std::size_t i, std::size_t j, std::size_t k) const;

    /// Sum of squared degrees.
    long long global_dimension() const;

    std::optional<std::size_t> find_label(std::string_view name) const;

    friend bool operator==(const FusionRing& a, const FusionRing& b) {
        return a.labels_ == b.labels_ && a.degrees_ == b.degrees_ && a.dual_ == b.dual_ &&
               a.entries_ == b.entries_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<long long> degrees_;
    std::vector<std::size_t> dual_;
    std::vector<FusionEntry> entries_;
    std::vector<std::vector<Term>> products_;
};

/// Every violated ring axiom: unit law, associativity, duality/Frobenius,
/// degree homomorphism, dual compatibility. `ring_name` prefixes locations.
std::vector<Violation> check_fusion_axioms(const FusionRing& ring, std::string_view ring_name);

}  // namespace hopfkernel
