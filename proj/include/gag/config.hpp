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

#ifndef GAG_CONFIG_HPP
#define GAG_CONFIG_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gag/codes.hpp"

namespace gag {

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Extra non-identity block: one place of `degree` carrying `inner`.
struct BlockRule {
    unsigned degree = 1;
    InnerCode::Kind inner = InnerCode::Kind::Identity;
    /// Length, used by rs only.
    std::size_t n = 0;
};

struct CodeConfig {
    /// Degree-1 places with [1,1,1], taken in canonical order.
    std::int64_t s = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> s_range;
    std::vector<BlockRule> blocks;
};

/**
 * Job description. Keys:
 *   curve:    {q, n, L: [elem...], f: [{poly: [elem...], mult}], g: [...]}
 *   genus:    optional override of genus_infer
 *   divisors: {name: {a: [..], b_inf}}  (G, A, R, B, C, Z are recognised)
 *   code:     {s, s_range: [lo, hi], blocks: [{degree, inner, n}]}
 *   max_degree: place degree cap for the places command (1..3)
 * An elem is a list of prime-field coordinates, constant term first.
 */
struct JobConfig {
    std::shared_ptr<const LinearizedCurve> curve;
    std::optional<std::int64_t> genus;
    std::map<std::string, Divisor> divisors;
    std::optional<CodeConfig> code;
    unsigned max_degree = 1;

    const Divisor& divisor(const std::string& name) const;
    bool has(const std::string& name) const { return divisors.count(name) != 0; }
};

JobConfig parse_config(const nlohmann::json& doc);
JobConfig load_config(const std::string& path);

/// GF(q^n) for a prime power q.
const GaloisField& constant_field_for(std::uint64_t q, unsigned n);

InnerCode make_inner(const GaloisField& K, const BlockRule& rule);
/// s identity blocks on the first s rational places followed by the rule
/// blocks, each on the next unused place of its degree.
GagCodeSpec build_spec(const JobConfig& job, const Divisor& G, std::int64_t s, std::int64_t genus);

nlohmann::json to_json(const Element& e);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const Divisor& D);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const EvaluationPlace& P);
nlohmann::json to_json(const ParamCertificate& c);
nlohmann::json to_json(const Matrix& M);

}  // namespace gag

#endif  // GAG_CONFIG_HPP
