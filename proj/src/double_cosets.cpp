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

#include "hopfkernel/double_cosets.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "hopfkernel/errors.hpp"

namespace hopfkernel {

namespace {

/// supp(K d L) as an indicator over Irr(H*).
std::vector<char> reach(const HopfPair& p, const ClosedSubset& k, const ClosedSubset& l,
                        std::size_t d) {
    const auto& rs = p.ring_hstar();
    const std::size_t n = rs.size();
    std::vector<char> right(n, 0);
    for (auto b : l.members())
        for (const auto& t : rs.product(d, b)) right[t.index] = 1;
    std::vector<char> out(n, 0);
    for (auto a : k.members())
        for (std::size_t e = 0; e < n; ++e)
            if (right[e])
                for (const auto& t : rs.product(a, e)) out[t.index] = 1;
    return out;
}

CharVector sandwich(const HopfPair& p, const CharVector& left, const CharVector& x,
                    const CharVector& right) {
    return fuse(p, fuse(p, left, x), right);
}

}  // namespace

std::size_t CosetDecomposition::class_of(std::size_t d) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].begin(), classes[i].end(), d)) return i;
    throw InvalidArgument("index " + std::to_string(d) + " is in no class");
}

CosetDecomposition coset_classes(const HopfPair& p, const ClosedSubset& k, const ClosedSubset& l) {
    const auto& rs = p.ring_hstar();
    const std::size_t n = rs.size();
    std::vector<std::vector<char>> reached(n);
    for (std::size_t d = 0; d < n; ++d) reached[d] = reach(p, k, l, d);

    std::vector<std::size_t> owner(n, n);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t start = 0; start < n; ++start) {
        if (owner[start] != n) continue;
        const std::size_t id = classes.size();
        std::vector<std::size_t> members{start};
        owner[start] = id;
        for (std::size_t q = 0; q < members.size(); ++q) {
            const auto& r = reached[members[q]];
            for (std::size_t e = 0; e < n; ++e) {
                if (r[e] && owner[e] == n) {
                    owner[e] = id;
                    members.push_back(e);
                } else if (r[e] && owner[e] != id) {
                    throw AssertionFailure("coset_classes", "partition inconsistency: relation "
                                                            "links two classes");
                }
            }
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }

    // The relation must already be an equivalence: every member reaches exactly its class.
    for (const auto& cls : classes) {
        for (auto d : cls) {
            std::vector<std::size_t> got;
            for (std::size_t e = 0; e < n; ++e)
                if (reached[d][e]) got.push_back(e);
            if (got != cls)
                throw AssertionFailure("coset_classes",
                                       "partition inconsistency at " + rs.label(d) +
                                           ": its reach differs from its class");
        }
    }

    CosetDecomposition dec{k, l, std::move(classes), {}, {}};
    long long total = 0;
    for (const auto& cls : dec.classes) {
        CharVector a(Side::HStar, n);
        long long dim = 0;
        for (auto d : cls) {
            a[d] = double(rs.degree(d));
            dim += rs.degree(d) * rs.degree(d);
        }
        if (dim % k.subdim() != 0 || dim % l.subdim() != 0)
            throw AssertionFailure("coset_classes",
                                   "class dimension " + std::to_string(dim) +
                                       " is not divisible by both subalgebra dimensions");
        total += dim;
        dec.class_sums.push_back(std::move(a));
        dec.class_dims.push_back(dim);
    }
    if (total != p.dim())
        throw AssertionFailure("coset_classes", "class dimensions do not add up to dim");
    return dec;
}

EigenReport verify_eigen(const HopfPair& p, const CosetDecomposition& dec) {
    const auto& tol = p.tolerance();
    const std::size_t n = p.size(Side::HStar);
    const auto lam_k = integral_counit_normalized(p, dec.k);
    const auto lam_l = integral_counit_normalized(p, dec.l);
    const double value = double(dec.k.subdim() * dec.l.subdim());

    EigenReport rep;
    rep.eigenvalue = value;
    for (const auto& a : dec.class_sums) {
        const auto t = sandwich(p, lam_k, a, lam_l);
        const double r = max_residual(t, Complex(value, 0.0) * a);
        rep.max_residual = std::max(rep.max_residual, r);
        if (r > tol.scaled(value * a.max_abs())) {
            std::ostringstream os;
            os << "T(a_i) differs from |K||L| a_i by " << r;
            throw AssertionFailure("verify_eigen", os.str());
        }
    }

    // Matrix of T in the basis Irr(H*): column j holds T(x_j).
    const auto dim_n = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd m(dim_n, dim_n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto t = sandwich(p, lam_k, CharVector::basis(p, Side::HStar, j), lam_l);
        for (std::size_t i = 0; i < n; ++i) m(Eigen::Index(i), Eigen::Index(j)) = t[i].real();
    }
    rep.asymmetry = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (rep.asymmetry > tol.scaled(value))
        throw AssertionFailure("verify_eigen", "matrix of T is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    const auto& ev = solver.eigenvalues();
    rep.principal = ev.maxCoeff();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i) - value) <= tol.scaled(value)) ++rep.principal_multiplicity;
    if (std::abs(rep.principal - value) > tol.scaled(value)) {
        std::ostringstream os;
        os << "principal eigenvalue " << rep.principal << " differs from |K||L| = " << value;
        throw AssertionFailure("verify_eigen", os.str());
    }
    if (rep.principal_multiplicity != dec.classes.size())
        throw AssertionFailure("verify_eigen", "principal eigenspace dimension " +
                                                   std::to_string(rep.principal_multiplicity) +
                                                   " differs from the number of classes " +
                                                   std::to_string(dec.classes.size()));
    return rep;
}

FormulaReport verify_formula(const HopfPair& p, const CosetDecomposition& dec, std::size_t d) {
    const auto& tol = p.tolerance();
    const auto& rs = p.ring_hstar();
    if (d >= rs.size()) throw InvalidArgument("verify_formula: index out of range");
    FormulaReport rep;
    rep.d = d;
    rep.class_index = dec.class_of(d);

    const auto lam_k = Complex(1.0 / double(dec.k.subdim()), 0.0) * integral_counit_normalized(p, dec.k);
    const auto lam_l = Complex(1.0 / double(dec.l.subdim()), 0.0) * integral_counit_normalized(p, dec.l);
    const auto x = CharVector::basis(p, Side::HStar, d);
    const auto lhs = sandwich(p, lam_k, x, lam_l);
    const double eps_d = double(rs.degree(d));
    const auto& a = dec.class_sums[rep.class_index];
    const double eps_a = double(dec.class_dims[rep.class_index]);
    const auto rhs = Complex(eps_d / eps_a, 0.0) * a;
    rep.residual = max_residual(lhs, rhs);
    if (rep.residual > tol.scaled(rhs.max_abs())) {
        std::ostringstream os;
        os << "formula residual " << rep.residual << " at " << rs.label(d);
        throw AssertionFailure("verify_formula", os.str());
    }

    if (dec.k.size() == 1) {
        const auto& a1 = dec.class_sums[0];
        const auto left = fuse(p, Complex(1.0 / eps_d, 0.0) * x,
                               Complex(1.0 / double(dec.class_dims[0]), 0.0) * a1);
        const auto right = Complex(1.0 / eps_a, 0.0) * a;
        const double r = max_residual(left, right);
        rep.one_sided_residual = r;
        if (r > tol.scaled(right.max_abs())) {
            std::ostringstream os;
            os << "one-sided formula residual " << r << " at " << rs.label(d);
            throw AssertionFailure("verify_formula", os.str());
        }
    }
    return rep;
}

DimsReport dims_identity(const HopfPair& p, const ClosedSubset& k, const ClosedSubset& l) {
    const auto dec = coset_classes(p, k, l);
    DimsReport rep;
    rep.l_dim = l.subdim();
    rep.intersection_dim = intersect(p, l, k).subdim();
    rep.product_dim = dec.class_dims[0];
    rep.k_dim = k.subdim();
    if (rep.l_dim % rep.intersection_dim != 0 || rep.product_dim % rep.k_dim != 0)
        throw AssertionFailure("dims_identity", "a dimension ratio is not an integer");
    const long long left = rep.l_dim / rep.intersection_dim;
    const long long right = rep.product_dim / rep.k_dim;
    if (left != right)
        throw AssertionFailure("dims_identity", std::to_string(left) + " != " + std::to_string(right));
    rep.ratio = left;
    return rep;
}

}  // namespace hopfkernel
