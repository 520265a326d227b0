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

#include <iosfwd>

namespace hopfkernel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the hopfkernel tool. Reports go to `out`, diagnostics to `err`.
/// Returns 0 when every check passes, 1 on a failed check or assertion, 2 on
/// usage, file or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopfkernel
