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

#include "hopfkernel/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfkernel {

nlohmann::ordered_json& Report::section(const std::string& name) {
    if (!findings_.contains(name)) findings_[name] = nlohmann::ordered_json::object();
    return findings_[name];
}

std::size_t Report::check(const std::string& section, const std::string& name, bool passed,
                          std::string detail) {
    checks_.push_back({section, name, passed, std::move(detail)});
    return checks_.size() - 1;
}

bool Report::ok() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const auto& c) { return c.passed; });
}

std::size_t Report::failures() const {
    return std::size_t(std::count_if(checks_.begin(), checks_.end(),
                                     [](const auto& c) { return !c.passed; }));
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json out;
    out["instance"] = instance_;
    out["command"] = command_;
    out["status"] = ok() ? "pass" : "fail";
    out["findings"] = findings_;
    auto& checks = out["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json j;
        j["section"] = c.section;
        j["name"] = c.name;
        j["status"] = c.passed ? "pass" : "fail";
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    return out;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "instance: " << instance_ << "\ncommand:  " << command_ << "\n";
    for (const auto& [name, body] : findings_.items()) {
        os << "\n[" << name << "]\n";
        if (!body.is_object()) {
            os << "  " << body.dump() << "\n";
            continue;
        }
        for (const auto& [key, value] : body.items())
            os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
               << "\n";
    }
    if (!checks_.empty()) {
        os << "\n[checks]\n";
        for (const auto& c : checks_) {
            os << "  " << (c.passed ? "PASS " : "FAIL ") << c.section << "/" << c.name;
            if (!c.detail.empty()) os << "  (" << c.detail << ")";
            os << "\n";
        }
    }
    os << "\nstatus: " << (ok() ? "pass" : "fail");
    if (!ok()) os << " (" << failures() << " failing)";
    os << "\n";
    return os.str();
}

}  // namespace hopfkernel
