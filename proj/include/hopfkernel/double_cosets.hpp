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
#include <vector>

#include "hopfkernel/char_vector.hpp"
#include "hopfkernel/subalgebras.hpp"

namespace hopfkernel {

/// Classes of the relation c ~ d  <=>  c occurs in K d L on Irr(H*).
struct CosetDecomposition {
    ClosedSubset k;
    ClosedSubset l;
    /// Sorted index sets; classes[0] contains the unit, the rest ordered by smallest member.
    std::vector<std::vector<std::size_t>> classes;
    /// a_i = sum_{d in C_i} eps(d) d
    std::vector<CharVector> class_sums;
    /// eps(a_i) = sum_{d in C_i} eps(d)^2
    std::vector<long long> class_dims;

    std::size_t class_of(std::size_t d) const;
};

/// Breadth-first closure of d -> supp(a d b), a in K, b in L. Asserts that
/// every member reaches exactly its own class, that the unit class is supp(K L),
/// that class dimensions add to dim and are divisible by subdim(K) and subdim(L).
CosetDecomposition coset_classes(const HopfPair& p, const ClosedSubset& k, const ClosedSubset& l);

struct EigenReport {
    double eigenvalue = 0.0;     ///< |K||L|
    double max_residual = 0.0;   ///< max_i |T(a_i) - |K||L| a_i|
    double asymmetry = 0.0;      ///< max |t_ij - t_ji| of the matrix of T
    double principal = 0.0;      ///< largest eigenvalue of the matrix of T
    std::size_t principal_multiplicity = 0;
};

/// T(x) = Lambda_K x Lambda_L with eps(Lambda_K) = |K|. Checks T(a_i) = |K||L| a_i,
/// that the matrix of T is symmetric, and that its principal eigenvalue is |K||L|
/// with multiplicity equal to the number of classes. Throws AssertionFailure.
EigenReport verify_eigen(const HopfPair& p, const CosetDecomposition& dec);

struct FormulaReport {
    std::size_t d = 0;
    std::size_t class_index = 0;
    double residual = 0.0;
    /// Present when K is the unit subset: residual of (d/eps(d)) (a_1/eps(a_1)) = a_i/eps(a_i).
    std::optional<double> one_sided_residual;
};

/// (Lambda_K/|K|) d (Lambda_L/|L|) = eps(d) a_i / eps(a_i) for d in C_i. Throws AssertionFailure.
FormulaReport verify_formula(const HopfPair& p, const CosetDecomposition& dec, std::size_t d);

struct DimsReport {
    long long l_dim = 0;
    long long intersection_dim = 0;
    long long product_dim = 0;  ///< eps(a_1) for the unit class of (K, L)
    long long k_dim = 0;
    long long ratio = 0;        ///< the common value of both quotients
};

/// |L|/|L cap K| = |LK|/|K| as exact integers. Throws AssertionFailure.
DimsReport dims_identity(const HopfPair& p, const ClosedSubset& k, const ClosedSubset& l);

}  // namespace hopfkernel
