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
#include <span>
#include <string>
#include <vector>

#include "hopfkernel/char_vector.hpp"
#include "hopfkernel/hopf_pair.hpp"

namespace hopfkernel {

/// A subset of Irr(H*) containing the unit and closed under fusion and duality:
/// the character-level handle of the Hopf subalgebra it spans. Members are kept
/// sorted, so equality is syntactic.
class ClosedSubset {
public:
    /// Checks closure and that subdim divides dim; throws AssertionFailure otherwise.
    static ClosedSubset verified(const HopfPair& p, std::vector<std::size_t> members);

    static ClosedSubset unit(const HopfPair& p);
    static ClosedSubset full(const HopfPair& p);

    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    long long subdim() const noexcept { return subdim_; }
    bool contains(std::size_t d) const;
    bool is_subset_of(const ClosedSubset& other) const;

    friend bool operator==(const ClosedSubset& a, const ClosedSubset& b) {
        return a.members_ == b.members_;
    }
    friend bool operator<(const ClosedSubset& a, const ClosedSubset& b) {
        if (a.subdim_ != b.subdim_) return a.subdim_ < b.subdim_;
        return a.members_ < b.members_;
    }

private:
    ClosedSubset(std::vector<std::size_t> members, long long subdim)
        : members_(std::move(members)), subdim_(subdim) {}

    std::vector<std::size_t> members_;
    long long subdim_ = 1;
};

/// Labels of the members, in index order.
std::vector<std::string> member_labels(const HopfPair& p, const ClosedSubset& k);

/// True when `members` contains 0 and is closed under fusion and duality.
bool is_closed(const HopfPair& p, std::span<const std::size_t> members);

/// ker x = {d : x(d) = x(1) eps(d)} for a genuine H-side character x.
/// Throws InvalidArgument for non-genuine input, MarginalClassification on
/// near-ties, AssertionFailure if the result is not closed.
ClosedSubset kernel_of(const HopfPair& p, const CharVector& x);

/// z_x = {d : |x(d)| = x(1) eps(d)}; always contains ker x.
ClosedSubset z_of(const HopfPair& p, const CharVector& x);

/// Smallest closed subset containing the seed.
ClosedSubset closure_generate(const HopfPair& p, std::span<const std::size_t> seed);

ClosedSubset intersect(const HopfPair& p, const ClosedSubset& a, const ClosedSubset& b);
ClosedSubset join(const HopfPair& p, const ClosedSubset& a, const ClosedSubset& b);

/// Union over n >= 0 of the supports of x^n (x^0 = unit), as H-side indices.
std::vector<std::size_t> power_constituents(const HopfPair& p, const CharVector& x);

/// Integral of K normalized so eps(Lambda_K) = |K|: sum_{d in K} eps(d) d.
CharVector integral_counit_normalized(const HopfPair& p, const ClosedSubset& k);

/// Idempotent integral of K, eps(Lambda_K) = 1: (1/|K|) sum_{d in K} eps(d) d.
CharVector integral_idempotent(const HopfPair& p, const ClosedSubset& k);

}  // namespace hopfkernel
