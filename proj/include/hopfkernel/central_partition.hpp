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
#include <string>
#include <vector>

#include "hopfkernel/char_vector.hpp"
#include "hopfkernel/subalgebras.hpp"

namespace hopfkernel {

/// Basis of the characters that are central in the opposite algebra.
///
/// side == HStar: vectors over Irr(H*) spanning Z(H) intersected with C(H*).
/// side == H:     vectors over Irr(H) spanning Z(H*) intersected with C(H).
///
/// Computed as the null space of the Hermitian form
///   Q(d, d') = sum_chi [ chi(1) chi(d dual(d')) - chi(d) conj(chi(d')) ],
/// which is positive semidefinite when the action of dual(d) is the adjoint of
/// the action of d; Q(c, c) = 0 exactly when c acts as a scalar on every simple
/// module.
struct CentralSubspace {
    Side side = Side::HStar;
    std::vector<CharVector> basis;
    double q_norm = 0.0;          ///< largest eigenvalue magnitude of Q
    double min_eigenvalue = 0.0;  ///< smallest eigenvalue of Q
};

/// Throws AssertionFailure("positivity assumption violated") when Q has an
/// eigenvalue below -eps * max(1, |Q|).
CentralSubspace central_subspace(const HopfPair& p, Side side);

/// The partition {Y_j} (side HStar) or {X_i} (side H) together with the block
/// sums e^_j = sum_{d in Y_j} eps(d) d, f_i = sum_{chi in X_i} chi(1) chi.
/// Block 0 contains the unit; blocks are ordered by their smallest index.
struct CentralPartition {
    Side side = Side::HStar;
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<CharVector> basis;

    /// Index of the block containing `a`.
    std::size_t block_of(std::size_t a) const;
};

/// Throws AssertionFailure("span mismatch") when the block sums do not
/// reproduce the null space of Q.
CentralPartition class_partition(const HopfPair& p, Side side);

/// Compares the instance's partition_hint (if any) against the computed
/// H*-side partition. Returns true when there is no hint.
bool partition_hint_matches(const HopfPair& p, const CentralPartition& hstar_partition);

/// ker f_i for every H-side block, each asserted normal and the whole set
/// asserted equal to maximal_normal_generators(p). Sorted and deduplicated.
std::vector<ClosedSubset> maximal_normals_from_f(const HopfPair& p,
                                                 const CentralPartition& h_partition);

/// One lettered check of center_theorem_report.
struct TheoremCheck {
    std::string letter;
    bool passed = false;
    std::string detail;
};

/// Data and outcomes for the block X_i:
///  (a) Z = closure of z(f_i) is normal
///  (b) K = ker f_i is contained in Z
///  (c) subdim(Z)/subdim(K) is a positive integer
///  (d) quotient_irr(K) equals the constituents of the powers of f_i
/// Item (e) needs a group oracle and is appended by the group layer.
struct CenterTheoremReport {
    std::size_t block = 0;
    CharVector f{Side::H, 0};
    std::vector<std::size_t> z_set;  ///< z(f_i) before closure
    ClosedSubset kernel;
    ClosedSubset z_closure;
    bool closure_grew = false;  ///< closure of z(f_i) strictly larger than z(f_i)
    std::vector<std::size_t> quotient;
    std::vector<std::size_t> powers;
    std::vector<TheoremCheck> checks;

    bool ok() const;
};

CenterTheoremReport center_theorem_report(const HopfPair& p, const CentralPartition& h_partition,
                                          std::size_t block);

/// As center_theorem_report, but throws AssertionFailure labelled with the
/// first failing letter.
CenterTheoremReport center_theorem_checks(const HopfPair& p, const CentralPartition& h_partition,
                                          std::size_t block);

}  // namespace hopfkernel
