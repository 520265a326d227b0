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
#include <string>
#include <string_view>
#include <vector>

#include "hopfkernel/character_table.hpp"
#include "hopfkernel/group_table.hpp"
#include "hopfkernel/hopf_pair.hpp"
#include "hopfkernel/report.hpp"
#include "hopfkernel/subalgebras.hpp"

namespace hopfkernel {

struct AnalysisOptions {
    std::uint64_t seed = kDefaultSeed;
    Tolerance tol;
    unsigned threads = 1;
};

/// Comma-separated labels or 0-based indices of `ring`. Throws InvalidArgument.
std::vector<std::size_t> parse_subset(const FusionRing& ring, std::string_view text);

/// Report builders behind the CLI subcommands. Assertion failures inside a
/// section become failed checks; the remaining sections still run.
Report validate_report(const RawInstance& raw, const Tolerance& tol);
Report kernels_report(const HopfPair& p);
Report normal_report(const HopfPair& p, std::span<const std::size_t> seed);
Report core_report(const HopfPair& p, std::span<const std::size_t> seed);
Report lattice_report(const HopfPair& p, unsigned threads = 1);
Report partition_report(const HopfPair& p);
Report cosets_report(const HopfPair& p, std::span<const std::size_t> k_seed,
                     std::span<const std::size_t> l_seed);

/// Full cross-check of kG and k^G against the group oracle: validation,
/// kernels and centers, closures, normality and cores over all subgroups,
/// lattices, partitions, central grouplikes, the center theorem including the
/// cyclic-quotient item, and double cosets with the Mackey identity.
Report oracle_compare(const GroupTable& g, const AnalysisOptions& opts = {});

}  // namespace hopfkernel
