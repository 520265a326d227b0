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

#include <filesystem>
#include <string>

#include "json.hpp"

#include "hopfkernel/hopf_pair.hpp"

namespace hopfkernel {

/// Instance document <-> RawInstance. Parse failures throw StructuralError.
RawInstance raw_instance_from_json(const nlohmann::json& doc);
nlohmann::ordered_json instance_to_json(const RawInstance& raw);

RawInstance read_instance_file(const std::filesystem::path& path);
HopfPair load_instance(const std::filesystem::path& path, const Tolerance& tol = {});
void write_instance_file(const std::filesystem::path& path, const HopfPair& pair);

/// Reads and parses a JSON document; throws StructuralError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace hopfkernel
