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

#include <cstdint>

#include "hopfkernel/character_table.hpp"
#include "hopfkernel/group_table.hpp"
#include "hopfkernel/hopf_pair.hpp"

namespace hopfkernel {

/// The pair for kG: Irr(H) are the irreducible characters (labels chi0, chi1, ...
/// in table order), Irr(H*) are the group elements with the same indices as in
/// the group table, and eval[chi][g] = chi(g).
HopfPair build_group_algebra(const GroupTable& g, const CharacterTable& table,
                             const Tolerance& tol = {});

/// Group, its character table and the validated kG pair, built together.
struct GroupAlgebra {
    GroupTable group;
    CharacterTable table;
    HopfPair pair;
};

GroupAlgebra make_group_algebra(const GroupTable& g, std::uint64_t seed = kDefaultSeed,
                                const Tolerance& tol = {});

}  // namespace hopfkernel
