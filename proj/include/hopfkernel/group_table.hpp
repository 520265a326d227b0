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
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace hopfkernel {

using Permutation = std::vector<std::size_t>;

/// A finite group as a multiplication table; index 0 is the identity.
class GroupTable {
public:
    /// Validates identity law, Latin-square rows and columns, and associativity;
    /// throws StructuralError naming the first offending element or triple.
    GroupTable(std::string name, std::vector<std::string> labels,
               std::vector<std::vector<std::size_t>> mul);

    /// Closure of the generated permutation group. Element labels are shortest
    /// words in `generator_names` ("e" for the identity). Throws StructuralError
    /// when the closure exceeds `max_order`.
    static GroupTable from_generators(std::string name, const std::vector<Permutation>& gens,
                                      std::vector<std::string> generator_names = {},
                                      std::size_t max_order = 10000);

    /// Subgroup spanned by `elements` (which must contain the identity and be
    /// closed), re-indexed with the identity first and elements in the given order
    /// otherwise. `embedding()` maps new indices to old ones.
    GroupTable subgroup(const std::vector<std::size_t>& elements) const;

    const std::string& name() const noexcept { return name_; }
    std::size_t order() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t g) const { return labels_.at(g); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inv_[a]; }
    std::size_t conjugate(std::size_t x, std::size_t g) const {  // g x g^-1
        return mul_[mul_[g][x]][inv_[g]];
    }
    std::size_t element_order(std::size_t a) const;
    const std::vector<std::size_t>& embedding() const noexcept { return embedding_; }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> mul_;
    std::vector<std::size_t> inv_;
    std::vector<std::size_t> embedding_;
};

/// Group document: {name, generators: [[images...], ...], generator_names?}
/// or {name, cayley: [[...], ...], labels?}. Throws StructuralError.
GroupTable parse_group(const nlohmann::json& doc, std::size_t max_order = 10000);
GroupTable read_group_file(const std::filesystem::path& path, std::size_t max_order = 10000);

}  // namespace hopfkernel
