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

#include <doctest.h>

#include "gag/reproduce.hpp"
#include "support.hpp"

using namespace gag;
using nlohmann::json;

namespace {

const std::string kConfigs = std::string(GAG_SOURCE_DIR) + "/configs/";

json base_doc() {
    return json::parse(R"({
      "curve": {"q": 7, "n": 2, "L": [[1], [1]],
                "f": [{"poly": [[1], [0], [1]], "mult": 2}],
                "g": [{"poly": [[0], [1]], "mult": 2}]},
      "divisors": {"G": {"a": [36], "b_inf": 9}}
    })");
}

std::string error_of(const json& doc) {
    try {
        parse_config(doc);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("config") {
    TEST_CASE("shipped configs load") {
        const JobConfig j49 = load_config(kConfigs + "gf49.json");
        CHECK(j49.curve->qr() == 7);
        CHECK(j49.divisor("G") == testing::div49(9, 36));
        REQUIRE(j49.code);
        CHECK(j49.code->s == 112);
        CHECK(j49.code->s_range == std::optional<std::pair<std::int64_t, std::int64_t>>{{112, 168}});
        CHECK(j49.max_degree == 2);
        CHECK(validate(*j49.curve).ok);
        const JobConfig j64 = load_config(kConfigs + "gf64.json");
        CHECK(j64.curve->d() == 9);
        CHECK(rr_dim(*j64.curve, j64.divisor("G")) == 34);
        const JobConfig toy = load_config(kConfigs + "toy_gf4.json");
        CHECK(genus_infer(*toy.curve) == 1);
    }

    TEST_CASE("schema errors name the key") {
        CHECK(error_of(json::array()) == "<root>: expected an object");
        CHECK(error_of(json::object()) == "curve: missing");
        json d = base_doc();
        d["curve"]["q"] = 6;
        CHECK(error_of(d).find("curve.q") == 0);
        d = base_doc();
        d["curve"]["L"][0] = json::array({9});
        CHECK(error_of(d).find("curve.L[0][0]") == 0);
        d = base_doc();
        d["curve"]["L"][0] = json::array({1, 0, 0});
        CHECK(error_of(d).find("curve.L[0]") == 0);
        d = base_doc();
        d["curve"].erase("f");
        CHECK(error_of(d) == "curve.f: missing");
        d = base_doc();
        d["divisors"]["G"]["a"] = json::array({1, 2});
        CHECK(error_of(d).find("divisors.G.a") == 0);
        d = base_doc();
        d["divisors"]["G"].erase("b_inf");
        CHECK(error_of(d) == "divisors.G.b_inf: missing");
        d = base_doc();
        d["code"] = json::parse(R"({"blocks": [{"degree": 2, "inner": "golay"}]})");
        CHECK(error_of(d).find("code.blocks[0].inner") == 0);
        d = base_doc();
        d["code"] = json::parse(R"({"blocks": [{"degree": 2, "inner": "rs"}]})");
        CHECK(error_of(d) == "code.blocks[0].n: missing");
        d = base_doc();
        d["code"] = json::parse(R"({"s_range": [10, 5]})");
        CHECK(error_of(d).find("code.s_range") == 0);
        d = base_doc();
        d["max_degree"] = 4;
        CHECK(error_of(d).find("max_degree") == 0);
        d = base_doc();
        d["genus"] = -1;
        CHECK(error_of(d).find("genus") == 0);
        CHECK_THROWS_AS(load_config(kConfigs + "missing.json"), ConfigError);
        CHECK_THROWS_AS(JobConfig{}.divisor("A"), ConfigError);
    }

    TEST_CASE("constant field from q and n") {
        CHECK(constant_field_for(7, 2).size() == 49);
        CHECK(constant_field_for(4, 3).size() == 64);
        CHECK(constant_field_for(2, 6).size() == 64);
        CHECK_THROWS_AS(constant_field_for(12, 1), ConfigError);
        CHECK_THROWS_AS(constant_field_for(1, 1), ConfigError);
    }

    TEST_CASE("build_spec takes places in canonical order") {
        const JobConfig job = load_config(kConfigs + "gf49.json");
        const GagCodeSpec spec = build_spec(job, job.divisor("G"), 112, 12);
        REQUIRE(spec.blocks.size() == 113);
        CHECK(spec.length() == 115);
        CHECK(spec.deg_D() == 114);
        CHECK(spec.blocks.back().place.degree == 2);
        CHECK(spec.blocks.back().place == first_places(*job.curve, 2, 1)[0]);
        const auto rational = first_places(*job.curve, 1, 112);
        for (std::size_t i = 0; i < 112; ++i) CHECK(spec.blocks[i].place == rational[i]);
        CHECK_THROWS_AS(build_spec(job, job.divisor("G"), 169, 12), ConfigError);
    }

    TEST_CASE("json output") {
        const auto& K = GaloisField::get(7, 2);
        CHECK(to_json(K.element(3 + 7 * 5)) == json::array({3, 5}));
        CHECK(to_json(testing::div49(5, 18)) == json::parse(R"({"a": [18], "b_inf": 5})"));
        CHECK(to_json(Poly(K, {1, 0, 1})) == json::parse("[[1, 0], [0, 0], [1, 0]]"));
        CHECK(to_json(Monomial{2, 3, {-1}}) == json::parse(R"({"k": 2, "e_inf": 3, "e": [-1]})"));
        const json m = to_json(inner_rs(K, 3, 2).generator);
        CHECK(m.size() == 2);
        CHECK(m[1][2] == json::array({2, 0}));
        const ParamCertificate c = comega_params(testing::identity_spec(testing::curve49(), testing::div49(9, 36), 109, 12));
        const json j = to_json(c);
        CHECK(j["k"] == 75);
        CHECK(j["bound"] == "omega_designed");
        CHECK(j["threshold"] == 86);
    }
}

TEST_SUITE("reproduce") {
    TEST_CASE("quoted rows") {
        auto one = [](int ex, int item, std::int64_t s) { return reproduce_item(ex, item, {s}).at(0); };
        const ExampleRow r1 = one(1, 1, 109);
        CHECK(r1.cert.n == 109);
        CHECK(r1.cert.k == 75);
        CHECK(r1.cert.d_lower == 24);
        const ExampleRow r3 = one(3, 5, 166);
        CHECK(r3.cert.n == 170);
        CHECK(r3.cert.k == 138);
        CHECK(r3.cert.d_lower == 20);
        const ExampleRow r4 = one(4, 5, 252);
        CHECK(r4.cert.n == 264);
        CHECK(r4.cert.k == 226);
        CHECK(r4.cert.d_lower == 24);
        const ExampleRow r14 = one(1, 4, 112);
        CHECK(r14.cert.n == 115);
        CHECK(r14.cert.k == 80);
        CHECK(r14.cert.d_lower == 24);
        CHECK(r14.cert.bound == "improved");
        CHECK_THROWS_AS(reproduce_item(1, 6, {120}), std::out_of_range);
        CHECK_THROWS_AS(reproduce_item(5, 1, {120}), std::out_of_range);
    }

    TEST_CASE("every row of every example matches") {
        const auto rows = reproduce_examples();
        std::size_t expected = 0;
        for (const auto& ex : builtin_examples()["examples"])
            for (const auto& it : ex["items"]) expected += it["s"][1].get<std::size_t>() - it["s"][0].get<std::size_t>() + 1;
        CHECK(rows.size() == expected);
        for (const auto& row : rows) {
            CAPTURE(row.example);
            CAPTURE(row.item);
            CAPTURE(row.s);
            CHECK(row.matches());
            CHECK_FALSE(row.cert.vacuous);
        }
        CHECK(reproduce_examples(true).size() == 40);
    }

    TEST_CASE("certificates replay through the bound engine") {
        for (const auto& row : reproduce_examples(true)) {
            const json& ex = [&]() -> const json& {
                for (const auto& e : builtin_examples()["examples"])
                    if (e["example"] == row.example) return e;
                throw std::logic_error("missing example");
            }();
            JobConfig job = builtin_curve(ex["curve"].get<std::string>());
            const auto A = Divisor{ex["A"].value("a", std::vector<std::int64_t>{}), ex["A"]["b_inf"].get<std::int64_t>()};
            const auto R = Divisor{ex["R"].value("a", std::vector<std::int64_t>{}), ex["R"]["b_inf"].get<std::int64_t>()};
            const AbzRecipe recipe = abz_recipe(*job.curve, A, R);
            CHECK(rr_dim(*job.curve, recipe.G) == ex["l_G"].get<std::int64_t>());
            CHECK(row.cert.deg_G == divisor_degree(*job.curve, recipe.G));
            CHECK(row.cert.d_lower == row.cert.sum_d - row.cert.subset_max);
            CHECK(row.cert.threshold ==
                  row.cert.deg_D - row.cert.deg_G - row.cert.deg_Z + 2 * row.cert.genus - 2 - row.cert.i_A + row.cert.i_G_minus_C);
            CHECK(row.cert.k == row.cert.deg_D + row.cert.genus - 1 - row.cert.deg_G);
            CHECK(row.cert.genus == 12);
        }
    }

    TEST_CASE("built-in curves") {
        CHECK(rational_place_count(*builtin_curve("gf49").curve) == 170);
        CHECK(rational_place_count(*builtin_curve("gf64").curve) == 257);
        CHECK_THROWS_AS(builtin_curve("klein"), ConfigError);
    }
}
