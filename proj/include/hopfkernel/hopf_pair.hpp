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
#include <string>
#include <vector>

#include "hopfkernel/errors.hpp"
#include "hopfkernel/fusion_ring.hpp"
#include "hopfkernel/tolerance.hpp"

namespace hopfkernel {

/// Which character ring a vector or subset lives in: Irr(H) or Irr(H*).
enum class Side { H, HStar };

inline Side opposite(Side s) { return s == Side::H ? Side::HStar : Side::H; }
inline const char* side_name(Side s) { return s == Side::H ? "H" : "H*"; }

/// Unvalidated instance data as read from a file or produced by a builder.
struct RawInstance {
    std::string name;
    long long dim = 0;
    FusionRing ring_h;
    FusionRing ring_hstar;
    /// Rows indexed by Irr(H), columns by Irr(H*): eval[chi][d] = chi(d).
    std::vector<std::vector<Complex>> eval;
    /// Optional explicit blocks of the Irr(H*) partition; checked, never trusted.
    std::optional<std::vector<std::vector<std::size_t>>> partition_hint;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool mentions(std::string_view invariant) const;
    bool mentions(std::string_view invariant, std::string_view location) const;
};

/// Raised by validate_pair; carries every violated invariant.
class InvalidInstance : public Error {
public:
    explicit InvalidInstance(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// A validated, immutable semisimple Hopf algebra instance at character level:
/// the two fusion rings Irr(H), Irr(H*) and the evaluation pairing chi(d).
class HopfPair {
public:
    const std::string& name() const noexcept { return name_; }
    long long dim() const noexcept { return dim_; }
    const Tolerance& tolerance() const noexcept { return tol_; }

    const FusionRing& ring(Side s) const noexcept { return s == Side::H ? ring_h_ : ring_hstar_; }
    const FusionRing& ring_h() const noexcept { return ring_h_; }
    const FusionRing& ring_hstar() const noexcept { return ring_hstar_; }
    std::size_t size(Side s) const noexcept { return ring(s).size(); }

    /// chi(d) for chi in Irr(H), d in Irr(H*).
    Complex eval(std::size_t chi, std::size_t d) const { return eval_[chi * cols_ + d]; }

    const std::optional<std::vector<std::vector<std::size_t>>>& partition_hint() const noexcept {
        return partition_hint_;
    }

    RawInstance to_raw() const;

private:
    friend HopfPair validate_pair(RawInstance raw, const Tolerance& tol);

    HopfPair() = default;

    std::string name_;
    long long dim_ = 0;
    Tolerance tol_;
    FusionRing ring_h_;
    FusionRing ring_hstar_;
    std::size_t cols_ = 0;
    std::vector<Complex> eval_;
    std::optional<std::vector<std::vector<std::size_t>>> partition_hint_;
};

/// Every violated invariant of the instance (ring axioms on both sides and the
/// pairing identities). Structural problems in `eval` throw StructuralError.
ValidationReport check_pair(const RawInstance& raw, const Tolerance& tol = {});

/// Strict validation: throws InvalidInstance unless check_pair reports nothing.
HopfPair validate_pair(RawInstance raw, const Tolerance& tol = {});

/// The pair for H*: rings swapped, evaluation transposed.
HopfPair dualize(const HopfPair& pair);

}  // namespace hopfkernel
