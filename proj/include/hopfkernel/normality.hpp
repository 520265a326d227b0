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
#include <vector>

#include "hopfkernel/char_vector.hpp"
#include "hopfkernel/subalgebras.hpp"

namespace hopfkernel {

/// Character of H (x)_K k, the module induced from the trivial K-module:
/// coefficient of chi is chi(Lambda_K) with the idempotent integral.
/// Throws AssertionFailure on non-integral or negative multiplicities, or when
/// the total degree differs from dim/subdim(K).
CharVector induced_trivial_character(const HopfPair& p, const ClosedSubset& k);

/// Normality via ker(eps induced from K) = K, cross-checked against the
/// central-idempotent criterion (every multiplicity is 0 or chi(1)).
/// Throws AssertionFailure if the two criteria disagree.
bool is_normal(const HopfPair& p, const ClosedSubset& k);

/// Irreducibles of H on which K acts trivially: {chi : K subset of ker chi}.
/// With require_normal, K must be normal and sum chi(1)^2 = dim/subdim(K) is asserted.
std::vector<std::size_t> quotient_irr(const HopfPair& p, const ClosedSubset& k,
                                      bool require_normal);

/// The chain K = K_1 contains K_2 ... produced by K_{s+1} = ker(eps induced from K_s),
/// ending at the first repeat.
struct CoreTrace {
    std::vector<ClosedSubset> chain;  ///< K_1, ..., K_l with K_l the fixed point
    std::size_t iterations = 0;       ///< kernel-of-induced evaluations performed

    const ClosedSubset& result() const { return chain.back(); }
};

CoreTrace core_trace(const HopfPair& p, const ClosedSubset& k);

/// Largest Hopf subalgebra of K that is normal in H.
ClosedSubset core(const HopfPair& p, const ClosedSubset& k);

/// Central grouplikes of H, as H*-side indices. Computed both as the
/// degree-one d with |chi(d)| = chi(1) for all chi and as the intersection of all
/// z_chi; the two are asserted equal.
std::vector<std::size_t> central_grouplikes(const HopfPair& p);

/// core(ker chi) for every chi in Irr(H), deduplicated and sorted. These are
/// the maximal normal Hopf subalgebras from which every normal one arises by
/// intersection.
std::vector<ClosedSubset> maximal_normal_generators(const HopfPair& p, unsigned threads = 1);

struct NormalLattice {
    /// core(ker chi) for every chi in Irr(H), deduplicated and sorted.
    std::vector<ClosedSubset> maximal_generators;
    /// Closure of the generators under intersection, plus the full set.
    std::vector<ClosedSubset> members;
};

/// Normal Hopf subalgebras of H. `threads` > 1 spreads the per-chi core
/// computations over worker threads; the result does not depend on it.
NormalLattice normal_lattice(const HopfPair& p, unsigned threads = 1);

}  // namespace hopfkernel
