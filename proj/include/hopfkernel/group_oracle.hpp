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
#include <cstdint>
#include <span>
#include <vector>

#include "hopfkernel/character_table.hpp"
#include "hopfkernel/group_table.hpp"
#include "hopfkernel/tolerance.hpp"

namespace hopfkernel {

/// Sorted element indices.
using ElementSet = std::vector<std::size_t>;

struct MackeyReport {
    std::size_t irreducibles = 0;  ///< irreducible modules of K checked
    double max_residual = 0.0;     ///< max over M and l of |left(l) - right(l)|
    long long l_over_intersection = 0;
    long long lk_over_k = 0;
    bool dims_equal() const { return l_over_intersection == lk_over_k; }
};

/// Classical answers by exhaustive computation in a finite group. Nothing here
/// touches fusion data; it is ground truth for the group-backed instances.
class GroupOracle {
public:
    explicit GroupOracle(GroupTable g) : g_(std::move(g)) {}

    const GroupTable& group() const noexcept { return g_; }

    ElementSet generated(std::span<const std::size_t> seed) const;
    bool is_subgroup(const ElementSet& h) const;
    /// Every subgroup, as the closure of all joins of cyclic subgroups (complete
    /// for any group). Sorted by order, then members. Throws InvalidArgument when
    /// |G| exceeds `max_order`.
    std::vector<ElementSet> subgroups(std::size_t max_order = 60) const;
    bool is_normal(const ElementSet& h) const;
    std::vector<ElementSet> normal_subgroups(std::size_t max_order = 60) const;
    /// Intersection of all conjugates of h.
    ElementSet group_core(const ElementSet& h) const;
    ElementSet commutator_subgroup() const;
    ElementSet intersection(const ElementSet& a, const ElementSet& b) const;
    ElementSet product_set(const ElementSet& a, const ElementSet& b) const;

    /// {g : f(g) = f(1)} and {g : |f(g)| = f(1)} for a class function given by
    /// its value on every element.
    ElementSet kernel(std::span<const Complex> f, const Tolerance& tol = {}) const;
    ElementSet center_set(std::span<const Complex> f, const Tolerance& tol = {}) const;

    /// K g L classes, each sorted, ordered by smallest member.
    std::vector<ElementSet> double_cosets(const ElementSet& k, const ElementSet& l) const;
    /// True when n is a normal subgroup of z with z/n cyclic.
    bool quotient_is_cyclic(const ElementSet& z, const ElementSet& n) const;

    /// For every irreducible M of K, compares the character of (LK (x)_K M)
    /// restricted to L with that of M restricted to L cap K and induced to L,
    /// and checks |L|/|L cap K| = |LK|/|K|.
    MackeyReport mackey_check(const ElementSet& k, const ElementSet& l,
                              std::uint64_t seed = kDefaultSeed, const Tolerance& tol = {}) const;

private:
    GroupTable g_;
};

/// Values on every element of sum_i coeffs[i] chi_i.
std::vector<Complex> class_function(const CharacterTable& t, std::span<const long long> coeffs);

}  // namespace hopfkernel
