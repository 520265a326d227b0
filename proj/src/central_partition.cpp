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

#include "hopfkernel/central_partition.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "hopfkernel/errors.hpp"
#include "hopfkernel/normality.hpp"

namespace hopfkernel {

namespace {

/// Q over Irr(H*) of the given pair.
Eigen::MatrixXcd hermitian_form(const HopfPair& p) {
    const auto& rh = p.ring_h();
    const auto& rs = p.ring_hstar();
    const auto n = static_cast<Eigen::Index>(rs.size());
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t chi = 0; chi < rh.size(); ++chi) {
        const double deg = double(rh.degree(chi));
        for (Eigen::Index d = 0; d < n; ++d) {
            for (Eigen::Index e = 0; e < n; ++e) {
                Complex g = 0.0;
                for (const auto& t : rs.product(std::size_t(d), rs.dual(std::size_t(e))))
                    g += double(t.mult) * p.eval(chi, t.index);
                q(d, e) += deg * g - p.eval(chi, std::size_t(d)) * std::conj(p.eval(chi, std::size_t(e)));
            }
        }
    }
    return q;
}

struct NullSpace {
    Eigen::MatrixXcd q;
    Eigen::MatrixXcd basis;  // columns
    double norm = 0.0;
    double min_eigenvalue = 0.0;
};

NullSpace null_space(const HopfPair& p) {
    const auto& tol = p.tolerance();
    NullSpace ns;
    ns.q = hermitian_form(p);
    // Symmetrize away rounding before the Hermitian solver reads one triangle.
    const Eigen::MatrixXcd herm = 0.5 * (ns.q + ns.q.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    if (solver.info() != Eigen::Success)
        throw AssertionFailure("central_subspace", "eigendecomposition of Q failed");
    const auto& ev = solver.eigenvalues();
    ns.norm = ev.cwiseAbs().maxCoeff();
    ns.min_eigenvalue = ev.minCoeff();
    if (ns.min_eigenvalue < -tol.eps * std::max(1.0, ns.norm)) {
        std::ostringstream os;
        os << "positivity assumption violated: Q has eigenvalue " << ns.min_eigenvalue
           << " (|Q| = " << ns.norm << ")";
        throw AssertionFailure("central_subspace", os.str());
    }
    const double cutoff = tol.null_rel * std::max(1.0, ns.norm);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i)) <= cutoff) keep.push_back(i);
    ns.basis.resize(ev.size(), static_cast<Eigen::Index>(keep.size()));
    // Q(c, c) = u^H Q u with u = conj(c), so the central vectors are conjugated eigenvectors.
    for (std::size_t k = 0; k < keep.size(); ++k)
        ns.basis.col(Eigen::Index(k)) = solver.eigenvectors().col(keep[k]).conjugate();
    return ns;
}

/// Partition of Irr(H*) read off a null-space basis: a ~ b when rows a and b,
/// divided by eps(a) and eps(b), coincide.
CentralPartition partition_from(const HopfPair& p, const NullSpace& ns) {
    const auto& tol = p.tolerance();
    const auto& rs = p.ring_hstar();
    const auto n = static_cast<Eigen::Index>(rs.size());

    CentralPartition part;
    part.side = Side::HStar;
    std::vector<Eigen::VectorXcd> reps;
    for (Eigen::Index a = 0; a < n; ++a) {
        const Eigen::VectorXcd row = ns.basis.row(a).transpose() / double(rs.degree(std::size_t(a)));
        bool placed = false;
        for (std::size_t b = 0; b < reps.size() && !placed; ++b) {
            if ((row - reps[b]).cwiseAbs().maxCoeff() <= tol.eps) {
                part.blocks[b].push_back(std::size_t(a));
                placed = true;
            }
        }
        if (!placed) {
            reps.push_back(row);
            part.blocks.push_back({std::size_t(a)});
        }
    }

    for (const auto& block : part.blocks) {
        CharVector v(Side::HStar, rs.size());
        for (auto a : block) v[a] = double(rs.degree(a));
        part.basis.push_back(std::move(v));
    }

    if (part.blocks.size() != static_cast<std::size_t>(ns.basis.cols())) {
        std::ostringstream os;
        os << "span mismatch: " << part.blocks.size() << " blocks but null space of dimension "
           << ns.basis.cols();
        throw AssertionFailure("class_partition", os.str());
    }
    const double cutoff = tol.null_rel * std::max(1.0, ns.norm);
    for (std::size_t j = 0; j < part.basis.size(); ++j) {
        Eigen::VectorXcd v(n);
        for (Eigen::Index a = 0; a < n; ++a) v(a) = part.basis[j][std::size_t(a)];
        const double r = (ns.q * v).norm() / v.norm();
        if (r > cutoff) {
            std::ostringstream os;
            os << "span mismatch: block sum " << j << " leaves the null space (residual " << r << ")";
            throw AssertionFailure("class_partition", os.str());
        }
    }
    return part;
}

CentralPartition relabel_side(CentralPartition part, Side side) {
    part.side = side;
    for (auto& v : part.basis) v = CharVector(side, v.coeffs());
    return part;
}

}  // namespace

std::size_t CentralPartition::block_of(std::size_t a) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (std::find(blocks[b].begin(), blocks[b].end(), a) != blocks[b].end()) return b;
    throw InvalidArgument("index " + std::to_string(a) + " is in no block");
}

CentralSubspace central_subspace(const HopfPair& p, Side side) {
    const auto ns = side == Side::HStar ? null_space(p) : null_space(dualize(p));
    CentralSubspace out;
    out.side = side;
    out.q_norm = ns.norm;
    out.min_eigenvalue = ns.min_eigenvalue;
    for (Eigen::Index k = 0; k < ns.basis.cols(); ++k) {
        std::vector<Complex> c(static_cast<std::size_t>(ns.basis.rows()));
        for (Eigen::Index a = 0; a < ns.basis.rows(); ++a) c[std::size_t(a)] = ns.basis(a, k);
        out.basis.emplace_back(side, std::move(c));
    }
    return out;
}

CentralPartition class_partition(const HopfPair& p, Side side) {
    if (side == Side::HStar) return partition_from(p, null_space(p));
    const auto dual = dualize(p);
    return relabel_side(partition_from(dual, null_space(dual)), Side::H);
}

bool partition_hint_matches(const HopfPair& p, const CentralPartition& part) {
    if (!p.partition_hint()) return true;
    auto canon = [](std::vector<std::vector<std::size_t>> blocks) {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };
    return canon(*p.partition_hint()) == canon(part.blocks);
}

std::vector<ClosedSubset> maximal_normals_from_f(const HopfPair& p, const CentralPartition& part) {
    if (part.side != Side::H)
        throw InvalidArgument("maximal_normals_from_f: expects the H-side partition");
    std::vector<ClosedSubset> out;
    for (const auto& f : part.basis) {
        auto k = kernel_of(p, f);
        if (!is_normal(p, k))
            throw AssertionFailure("maximal_normals_from_f", "kernel of a block sum is not normal");
        out.push_back(std::move(k));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out != maximal_normal_generators(p))
        throw AssertionFailure("maximal_normals_from_f",
                               "block-sum kernels differ from the cores of character kernels");
    return out;
}

bool CenterTheoremReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

CenterTheoremReport center_theorem_report(const HopfPair& p, const CentralPartition& part,
                                          std::size_t block) {
    if (part.side != Side::H)
        throw InvalidArgument("center_theorem_checks: expects the H-side partition");
    if (block >= part.blocks.size())
        throw InvalidArgument("center_theorem_checks: block index out of range");
    const auto& f = part.basis[block];
    const auto z_raw = z_of(p, f);
    auto kernel = kernel_of(p, f);
    auto z_closure = closure_generate(p, z_raw.members());
    auto quotient = quotient_irr(p, kernel, false);
    auto powers = power_constituents(p, f);

    CenterTheoremReport rep{block,         f,     z_raw.members(), kernel, z_closure,
                            z_closure.size() > z_raw.size(), quotient, powers, {}};

    bool normal = false;
    std::string normal_detail;
    try {
        normal = is_normal(p, z_closure);
    } catch (const Error& e) {
        normal_detail = e.what();
    }
    rep.checks.push_back({"a", normal, normal ? "Z is normal" : "Z is not normal " + normal_detail});

    const bool contained = kernel.is_subset_of(z_closure);
    rep.checks.push_back({"b", contained, contained ? "ker f contained in Z" : "ker f not contained in Z"});

    const bool divides = z_closure.subdim() % kernel.subdim() == 0;
    rep.checks.push_back({"c", divides,
                          std::to_string(z_closure.subdim()) + "/" + std::to_string(kernel.subdim()) +
                              (divides ? " is an integer" : " is not an integer")});

    const bool same = quotient == powers;
    rep.checks.push_back({"d", same, same ? "quotient irreducibles equal power constituents"
                                          : "quotient irreducibles differ from power constituents"});
    return rep;
}

CenterTheoremReport center_theorem_checks(const HopfPair& p, const CentralPartition& part,
                                          std::size_t block) {
    auto rep = center_theorem_report(p, part, block);
    for (const auto& c : rep.checks)
        if (!c.passed) throw AssertionFailure("center_theorem (" + c.letter + ")", c.detail);
    return rep;
}

}  // namespace hopfkernel
