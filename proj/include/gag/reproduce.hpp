// Copyright 2026 The gagcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAG_REPRODUCE_HPP
#define GAG_REPRODUCE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gag/config.hpp"

namespace gag {

/// The built-in job table: the two curves, the A/R divisors of each example
/// and the extra blocks, s-ranges and expected [n, k, d] of every item.
const nlohmann::json& builtin_examples();

/// Job config of a built-in curve: "gf49", "gf64" or "toy_gf4".
JobConfig builtin_curve(const std::string& name);

struct ExampleRow {
    int example = 0;
    int item = 0;
    std::int64_t s = 0;
    ParamCertificate cert;
    std::int64_t expected_n = 0;
    std::int64_t expected_k = 0;
    std::int64_t expected_d = 0;

    bool matches() const {
        return cert.n == expected_n && cert.k == expected_k && cert.d_lower == expected_d;
    }
};

/// One row per (item, s). With endpoints_only, s runs over the two ends of
/// each range only.
std::vector<ExampleRow> reproduce_examples(bool endpoints_only = false);

/// Rows for one item at the given s values.
std::vector<ExampleRow> reproduce_item(int example, int item, const std::vector<std::int64_t>& s_values);

}  // namespace gag

#endif  // GAG_REPRODUCE_HPP
