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

#include <string>
#include <vector>

#include "json.hpp"

namespace hopfkernel {

struct ReportCheck {
    std::string section;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Structured result of one command: findings grouped in named sections plus
/// a list of pass/fail assertions. Key order is insertion order, so output is
/// deterministic.
class Report {
public:
    Report(std::string instance, std::string command)
        : instance_(std::move(instance)), command_(std::move(command)) {}

    const std::string& instance() const noexcept { return instance_; }
    const std::string& command() const noexcept { return command_; }

    /// Findings object for `name`, created on first use.
    nlohmann::ordered_json& section(const std::string& name);
    const nlohmann::ordered_json& findings() const noexcept { return findings_; }

    /// Appends a check and returns its position.
    std::size_t check(const std::string& section, const std::string& name, bool passed,
                      std::string detail = {});
    ReportCheck& check_at(std::size_t i) { return checks_.at(i); }
    const std::vector<ReportCheck>& checks() const noexcept { return checks_; }
    bool ok() const;
    std::size_t failures() const;

    /// {instance, command, status, findings, checks}
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;

private:
    std::string instance_;
    std::string command_;
    nlohmann::ordered_json findings_ = nlohmann::ordered_json::object();
    std::vector<ReportCheck> checks_;
};

}  // namespace hopfkernel
