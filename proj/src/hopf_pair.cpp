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

#include "hopfkernel/hopf_pair.hpp"

#include <sstream>

namespace hopfkernel {

bool ValidationReport::mentions(std::string_view invariant) const {
    for (const auto& v : violations)
        if (v.invariant == invariant) return true;
    return false;
}

bool ValidationReport::mentions(std::string_view invariant, std::string_view location) const {
    for (const auto& v : violations)
        if (v.invariant == invariant && v.location == location) return true;
    return false;
}

namespace {

std::string summarize(const ValidationReport& r) {
    std::ostringstream os;
    os << r.violations.size() << " invariant violation(s)";
    if (!r.violations.empty()) {
        const auto& v = r.violations.front();
        os << "; first: " << v.invariant << " at " << v.location << " (residual " << v.residual
           << ")";
    }
    return os.str();
}

std::string cell(const RawInstance& raw, std::size_t chi, std::size_t d) {
    return "eval(" + raw.ring_h.label(chi) + "," + raw.ring_hstar.label(d) + ")";
}

void check_shape(const RawInstance& raw) {
    const std::size_t rows = raw.ring_h.size();
    const std::size_t cols = raw.ring_hstar.size();
    if (raw.eval.size() != rows)
        throw StructuralError("eval has " + std::to_string(raw.eval.size()) + " rows, expected " +
                              std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r)
        if (raw.eval[r].size() != cols)
            throw StructuralError("eval row " + std::to_string(r) + " has " +
                                  std::to_string(raw.eval[r].size()) + " entries, expected " +
                                  std::to_string(cols));
    if (raw.partition_hint) {
        for (const auto& block : *raw.partition_hint)
            for (auto d : block)
                if (d >= cols)
                    throw StructuralError("partition_hint index " + std::to_string(d) +
                                          " is out of range");
    }
}

}  // namespace

InvalidInstance::InvalidInstance(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

ValidationReport check_pair(const RawInstance& raw, const Tolerance& tol) {
    check_shape(raw);
    ValidationReport rep;
    for (auto& v : check_fusion_axioms(raw.ring_h, "H")) rep.violations.push_back(std::move(v));
    for (auto& v : check_fusion_axioms(raw.ring_hstar, "H*"))
        rep.violations.push_back(std::move(v));

    const auto& rh = raw.ring_h;
    const auto& rs = raw.ring_hstar;
    const std::size_t nh = rh.size();
    const std::size_t ns = rs.size();
    const auto& E = raw.eval;
    const double dim = static_cast<double>(raw.dim);

    if (raw.dim <= 0) rep.violations.push_back({"dimension", "dim", dim});
    if (rh.global_dimension() != raw.dim)
        rep.violations.push_back(
            {"dimension", "sum of squared H degrees", double(std::llabs(rh.global_dimension() - raw.dim))});
    if (rs.global_dimension() != raw.dim)
        rep.violations.push_back({"dimension", "sum of squared H* degrees",
                                  double(std::llabs(rs.global_dimension() - raw.dim))});

    for (std::size_t chi = 0; chi < nh; ++chi) {
        const Complex want(double(rh.degree(chi)), 0.0);
        if (!tol.near(E[chi][0], want))
            rep.violations.push_back({"unit column", cell(raw, chi, 0), std::abs(E[chi][0] - want)});
    }
    for (std::size_t d = 0; d < ns; ++d) {
        const Complex want(double(rs.degree(d)), 0.0);
        if (!tol.near(E[0][d], want))
            rep.violations.push_back({"unit row", cell(raw, 0, d), std::abs(E[0][d] - want)});
    }

    for (std::size_t chi = 0; chi < nh; ++chi) {
        for (std::size_t d = 0; d < ns; ++d) {
            const double bound = double(rh.degree(chi) * rs.degree(d));
            const double excess = std::abs(E[chi][d]) - bound;
            if (excess > tol.scaled(bound))
                rep.violations.push_back({"bound", cell(raw, chi, d), excess});
        }
    }

    for (std::size_t d = 0; d < ns; ++d) {
        Complex s = 0.0;
        for (std::size_t chi = 0; chi < nh; ++chi) s += double(rh.degree(chi)) * E[chi][d];
        const Complex want(d == 0 ? dim : 0.0, 0.0);
        if (std::abs(s - want) > tol.scaled(dim))
            rep.violations.push_back({"row orthogonality to unit", "H*(" + rs.label(d) + ")",
                                      std::abs(s - want)});
    }
    for (std::size_t chi = 0; chi < nh; ++chi) {
        Complex s = 0.0;
        for (std::size_t d = 0; d < ns; ++d) s += double(rs.degree(d)) * E[chi][d];
        const Complex want(chi == 0 ? dim : 0.0, 0.0);
        if (std::abs(s - want) > tol.scaled(dim))
            rep.violations.push_back({"column orthogonality to unit", "H(" + rh.label(chi) + ")",
                                      std::abs(s - want)});
    }

    for (std::size_t chi = 0; chi < nh; ++chi) {
        for (std::size_t d = 0; d < ns; ++d) {
            const Complex a = E[chi][rs.dual(d)];
            const Complex b = std::conj(E[chi][d]);
            if (!tol.near(a, b))
                rep.violations.push_back({"conjugation", cell(raw, chi, d), std::abs(a - b)});
        }
    }

    for (std::size_t d = 0; d < ns; ++d) {
        if (rs.degree(d) != 1) continue;
        for (std::size_t i = 0; i < nh; ++i) {
            for (std::size_t j = 0; j < nh; ++j) {
                Complex s = 0.0;
                for (const auto& t : rh.product(i, j)) s += double(t.mult) * E[t.index][d];
                const Complex want = E[i][d] * E[j][d];
                if (!tol.near(s, want))
                    rep.violations.push_back({"grouplike multiplicativity",
                                              "H(" + rh.label(i) + "," + rh.label(j) + ") at H*(" +
                                                  rs.label(d) + ")",
                                              std::abs(s - want)});
            }
        }
    }
    return rep;
}

HopfPair validate_pair(RawInstance raw, const Tolerance& tol) {
    auto rep = check_pair(raw, tol);
    if (!rep.ok()) throw InvalidInstance(std::move(rep));

    HopfPair p;
    p.name_ = std::move(raw.name);
    p.dim_ = raw.dim;
    p.tol_ = tol;
    p.cols_ = raw.ring_hstar.size();
    p.eval_.reserve(raw.ring_h.size() * p.cols_);
    for (const auto& row : raw.eval) p.eval_.insert(p.eval_.end(), row.begin(), row.end());
    p.ring_h_ = std::move(raw.ring_h);
    p.ring_hstar_ = std::move(raw.ring_hstar);
    p.partition_hint_ = std::move(raw.partition_hint);
    return p;
}

RawInstance HopfPair::to_raw() const {
    RawInstance raw;
    raw.name = name_;
    raw.dim = dim_;
    raw.ring_h = ring_h_;
    raw.ring_hstar = ring_hstar_;
    raw.eval.assign(ring_h_.size(), std::vector<Complex>(cols_));
    for (std::size_t r = 0; r < ring_h_.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) raw.eval[r][c] = eval(r, c);
    raw.partition_hint = partition_hint_;
    return raw;
}

HopfPair dualize(const HopfPair& pair) {
    RawInstance raw;
    const auto& n = pair.name();
    raw.name = (n.size() > 5 && n.starts_with("dual(") && n.ends_with(")")) ? n.substr(5, n.size() - 6)
                                                                            : "dual(" + n + ")";
    raw.dim = pair.dim();
    raw.ring_h = pair.ring_hstar();
    raw.ring_hstar = pair.ring_h();
    const std::size_t rows = pair.size(Side::HStar);
    const std::size_t cols = pair.size(Side::H);
    raw.eval.assign(rows, std::vector<Complex>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) raw.eval[r][c] = pair.eval(c, r);
    return validate_pair(std::move(raw), pair.tolerance());
}

}  // namespace hopfkernel
