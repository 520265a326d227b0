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
#include <vector>

#include "hopfkernel/group_table.hpp"
#include "hopfkernel/tolerance.hpp"

namespace hopfkernel {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Conjugacy classes, each sorted; ordered by smallest member, so class 0 is {e}.
std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g);

struct CharacterTable {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> representatives;
    std::vector<std::size_t> class_of;  ///< element -> class index
    std::vector<long long> degrees;
    /// values[i][c] = chi_i(g) for g in classes[c]. Row 0 is the trivial character.
    std::vector<std::vector<Complex>> values;
    std::size_t attempts = 0;  ///< random combinations tried before the spectrum separated

    std::size_t size() const noexcept { return degrees.size(); }
    Complex value(std::size_t chi, std::size_t element) const {
        return values[chi][class_of[element]];
    }
    /// Largest deviation from row and column orthogonality.
    double orthogonality_residual() const;
};

/// Burnside's method: common eigenvectors of the class-multiplication matrices,
/// found from one seeded random real combination (retried on eigenvalue
/// collisions, at most 20 times). Throws AssertionFailure on retry exhaustion,
/// non-integral degrees or orthogonality failure; InvalidArgument when |G| > 200.
CharacterTable character_table(const GroupTable& g, std::uint64_t seed = kDefaultSeed,
                               const Tolerance& tol = {});

}  // namespace hopfkernel
