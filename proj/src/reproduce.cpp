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

#include "gag/reproduce.hpp"

#include <iterator>

namespace gag {

using nlohmann::json;

namespace {

// n = s + n_offset, k = s + k_offset
constexpr const char* kTable = R"json({
  "curves": {
    "gf49": {
      "curve": {"q": 7, "n": 2, "L": [[1], [1]],
                "f": [{"poly": [[1], [0], [1]], "mult": 2}],
                "g": [{"poly": [[0], [1]], "mult": 2}]}
    },
    "gf64": {
      "curve": {"q": 2, "n": 6, "L": [[1], [1], [1]],
                "f": [{"poly": [[0], [1]], "mult": 9}],
                "g": []}
    },
    "toy_gf4": {
      "curve": {"q": 2, "n": 2, "L": [[1], [1]],
                "f": [{"poly": [[0], [1]], "mult": 3}],
                "g": []}
    }
  },
  "examples": [
    {"example": 1, "curve": "gf49", "A": {"a": [18], "b_inf": 5}, "R": {"a": [18], "b_inf": 5}, "l_G": 34,
     "items": [
       {"item": 1, "s": [109, 168], "blocks": [], "n_offset": 0, "k_offset": -34, "d": 24},
       {"item": 2, "s": [116, 168], "blocks": [{"degree": 2, "inner": "identity"}], "n_offset": 2, "k_offset": -32, "d": 23},
       {"item": 3, "s": [139, 168], "blocks": [{"degree": 2, "inner": "identity"}, {"degree": 2, "inner": "identity"}], "n_offset": 4, "k_offset": -30, "d": 22},
       {"item": 4, "s": [112, 168], "blocks": [{"degree": 2, "inner": "rs", "n": 3}], "n_offset": 3, "k_offset": -32, "d": 24},
       {"item": 5, "s": [123, 168], "blocks": [{"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}], "n_offset": 6, "k_offset": -30, "d": 24},
       {"item": 7, "s": [163, 168], "blocks": [{"degree": 4, "inner": "parity"}], "n_offset": 5, "k_offset": -30, "d": 22}
     ]},
    {"example": 2, "curve": "gf49", "A": {"a": [4], "b_inf": 19}, "R": {"a": [3], "b_inf": 19}, "l_G": 33,
     "items": [
       {"item": 1, "s": [107, 168], "blocks": [], "n_offset": 0, "k_offset": -33, "d": 23},
       {"item": 2, "s": [127, 168], "blocks": [{"degree": 2, "inner": "identity"}], "n_offset": 2, "k_offset": -31, "d": 22},
       {"item": 3, "s": [150, 168], "blocks": [{"degree": 2, "inner": "identity"}, {"degree": 2, "inner": "identity"}], "n_offset": 4, "k_offset": -29, "d": 21},
       {"item": 4, "s": [127, 168], "blocks": [{"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}], "n_offset": 6, "k_offset": -29, "d": 23}
     ]},
    {"example": 3, "curve": "gf49", "A": {"a": [0], "b_inf": 19}, "R": {"a": [4], "b_inf": 19}, "l_G": 30,
     "items": [
       {"item": 1, "s": [129, 168], "blocks": [], "n_offset": 0, "k_offset": -30, "d": 20},
       {"item": 2, "s": [152, 168], "blocks": [{"degree": 2, "inner": "identity"}], "n_offset": 2, "k_offset": -28, "d": 19},
       {"item": 3, "s": [148, 168], "blocks": [{"degree": 2, "inner": "rs", "n": 3}], "n_offset": 3, "k_offset": -28, "d": 20},
       {"item": 4, "s": [164, 168], "blocks": [{"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}], "n_offset": 6, "k_offset": -26, "d": 20},
       {"item": 5, "s": [166, 168], "blocks": [{"degree": 2, "inner": "rs", "n": 4}], "n_offset": 4, "k_offset": -28, "d": 20}
     ]},
    {"example": 4, "curve": "gf64", "A": {"b_inf": 23}, "R": {"b_inf": 23}, "l_G": 34,
     "items": [
       {"item": 1, "s": [228, 256], "blocks": [], "n_offset": 0, "k_offset": -34, "d": 24},
       {"item": 2, "s": [255, 256], "blocks": [{"degree": 2, "inner": "rs", "n": 3}], "n_offset": 3, "k_offset": -32, "d": 24},
       {"item": 3, "s": [254, 256], "blocks": [{"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}], "n_offset": 6, "k_offset": -30, "d": 24},
       {"item": 4, "s": [253, 256], "blocks": [{"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}], "n_offset": 9, "k_offset": -28, "d": 24},
       {"item": 5, "s": [252, 256], "blocks": [{"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}, {"degree": 2, "inner": "rs", "n": 3}], "n_offset": 12, "k_offset": -26, "d": 24}
     ]}
  ]
})json";

const json& find_example(int example) {
    for (const auto& e : builtin_examples()["examples"])
        if (e["example"].get<int>() == example) return e;
    throw std::out_of_range("no built-in example " + std::to_string(example));
}

const json& find_item(const json& ex, int item) {
    for (const auto& it : ex["items"])
        if (it["item"].get<int>() == item) return it;
    throw std::out_of_range("no item " + std::to_string(item));
}

}  // namespace

const json& builtin_examples() {
    static const json table = json::parse(kTable);
    return table;
}

JobConfig builtin_curve(const std::string& name) {
    const json& curves = builtin_examples()["curves"];
    if (!curves.contains(name)) throw ConfigError("unknown built-in curve '" + name + "'");
    return parse_config(curves[name]);
}

std::vector<ExampleRow> reproduce_item(int example, int item, const std::vector<std::int64_t>& s_values) {
    const json& ex = find_example(example);
    const json& it = find_item(ex, item);
    json doc = builtin_examples()["curves"][ex["curve"].get<std::string>()];
    doc["divisors"] = {{"A", ex["A"]}, {"R", ex["R"]}};
    doc["code"] = {{"blocks", it["blocks"]}};
    JobConfig job = parse_config(doc);
    const LinearizedCurve& curve = *job.curve;
    const AbzRecipe recipe = abz_recipe(curve, job.divisor("A"), job.divisor("R"));
    const std::int64_t genus = genus_infer(curve);

    std::vector<ExampleRow> rows;
    for (std::int64_t s : s_values) {
        const GagCodeSpec spec = build_spec(job, recipe.G, s, genus);
        ExampleRow row;
        row.example = example;
        row.item = item;
        row.s = s;
        row.cert = improved_bound(job.divisor("A"), recipe.B, recipe.B, recipe.Z, spec);
        row.expected_n = s + it["n_offset"].get<std::int64_t>();
        row.expected_k = s + it["k_offset"].get<std::int64_t>();
        row.expected_d = it["d"].get<std::int64_t>();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ExampleRow> reproduce_examples(bool endpoints_only) {
    std::vector<ExampleRow> rows;
    for (const auto& ex : builtin_examples()["examples"]) {
        for (const auto& it : ex["items"]) {
            const auto lo = it["s"][0].get<std::int64_t>(), hi = it["s"][1].get<std::int64_t>();
            std::vector<std::int64_t> s_values;
            if (endpoints_only) {
                s_values = {lo, hi};
            } else {
                for (std::int64_t s = lo; s <= hi; ++s) s_values.push_back(s);
            }
            auto part = reproduce_item(ex["example"].get<int>(), it["item"].get<int>(), s_values);
            std::move(part.begin(), part.end(), std::back_inserter(rows));
        }
    }
    return rows;
}

}  // namespace gag
