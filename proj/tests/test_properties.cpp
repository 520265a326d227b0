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

#include "doctest.h"
#include "properties.hpp"

TEST_CASE("randomized invariants") {
    std::size_t total = 0;
    for (const auto& o : properties::run_all(20240611, 200)) {
        CAPTURE(o.name);
        CAPTURE(o.first_failure);
        CHECK(o.failures == 0);
        total += o.cases;
    }
    CHECK(total >= 1000);
}

TEST_CASE("randomized invariants under a second seed") {
    for (const auto& o : properties::run_all(7, 50)) {
        CAPTURE(o.name);
        CAPTURE(o.first_failure);
        CHECK(o.failures == 0);
    }
}
