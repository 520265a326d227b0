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

#include <stdexcept>
#include <string>

namespace hopfkernel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: index out of range, wrong array lengths, non-involutive dual,
/// unparseable document.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Precondition violated by the caller (side mismatch, non-genuine character, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A theorem-level identity that must hold for valid data failed to hold.
/// `label` names the failing check so reports can point at it.
class AssertionFailure : public Error {
public:
    AssertionFailure(std::string label, const std::string& what)
        : Error(label + ": " + what), label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

/// A membership test landed between EPS and 10*EPS of its boundary.
class MarginalClassification : public Error {
public:
    using Error::Error;
};

}  // namespace hopfkernel
