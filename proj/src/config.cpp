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

#include "gag/config.hpp"

#include <fstream>
#include <map>

namespace gag {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& key, const std::string& what) { throw ConfigError(key + ": " + what); }

const json& need(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) bad(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) bad(path, "expected an integer");
    return v.get<std::int64_t>();
}

std::int64_t as_positive(const json& v, const std::string& path) {
    const std::int64_t x = as_int(v, path);
    if (x <= 0) bad(path, "expected a positive integer");
    return x;
}

Element parse_element(const GaloisField& K, const json& v, const std::string& path) {
    if (!v.is_array()) bad(path, "expected a coordinate list");
    if (v.size() > K.degree()) bad(path, "more than " + std::to_string(K.degree()) + " coordinates");
    std::vector<std::uint32_t> coords(K.degree(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::int64_t c = as_int(v[i], path + "[" + std::to_string(i) + "]");
        if (c < 0 || c >= static_cast<std::int64_t>(K.characteristic()))
            bad(path + "[" + std::to_string(i) + "]", "coordinate outside 0.." + std::to_string(K.characteristic() - 1));
        coords[i] = static_cast<std::uint32_t>(c);
    }
    return K.from_coords(coords);
}

Poly parse_poly(const GaloisField& K, const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) bad(path, "expected a nonempty coefficient list");
    std::vector<Code> coeffs;
    for (std::size_t i = 0; i < v.size(); ++i)
        coeffs.push_back(parse_element(K, v[i], path + "[" + std::to_string(i) + "]").code());
    Poly p(K, std::move(coeffs));
    if (p.is_zero()) bad(path, "zero polynomial");
    return p;
}

std::vector<FactorInput> parse_factors(const GaloisField& K, const json& v, const std::string& path) {
    if (!v.is_array()) bad(path, "expected a list of {poly, mult}");
    std::vector<FactorInput> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        FactorInput fi{parse_poly(K, need(v[i], "poly", p), p + ".poly"), 1};
        if (v[i].contains("mult")) fi.multiplicity = static_cast<int>(as_positive(v[i]["mult"], p + ".mult"));
        out.push_back(std::move(fi));
    }
    return out;
}

Divisor parse_divisor(const LinearizedCurve& curve, const json& v, const std::string& path) {
    Divisor D = Divisor::zero(curve);
    if (v.contains("a")) {
        const json& a = v["a"];
        if (!a.is_array() || a.size() != curve.s())
            bad(path + ".a", "expected " + std::to_string(curve.s()) + " coefficients");
        for (std::size_t i = 0; i < a.size(); ++i) D.a[i] = as_int(a[i], path + ".a[" + std::to_string(i) + "]");
    } else if (curve.s() != 0) {
        bad(path + ".a", "missing");
    }
    D.b_inf = as_int(need(v, "b_inf", path), path + ".b_inf");
    return D;
}

InnerCode::Kind parse_kind(const json& v, const std::string& path) {
    if (!v.is_string()) bad(path, "expected identity, parity or rs");
    const auto s = v.get<std::string>();
    if (s == "identity") return InnerCode::Kind::Identity;
    if (s == "parity") return InnerCode::Kind::Parity;
    if (s == "rs") return InnerCode::Kind::ReedSolomon;
    bad(path, "unknown inner code '" + s + "'");
}

CodeConfig parse_code(const json& v) {
    CodeConfig c;
    if (v.contains("s")) {
        c.s = as_int(v["s"], "code.s");
        if (c.s < 0) bad("code.s", "must be nonnegative");
    }
    if (v.contains("s_range")) {
        const json& r = v["s_range"];
        if (!r.is_array() || r.size() != 2) bad("code.s_range", "expected [lo, hi]");
        c.s_range = {as_int(r[0], "code.s_range[0]"), as_int(r[1], "code.s_range[1]")};
        if (c.s_range->first < 0 || c.s_range->first > c.s_range->second) bad("code.s_range", "expected 0 <= lo <= hi");
        if (!v.contains("s")) c.s = c.s_range->first;
    }
    if (v.contains("blocks")) {
        const json& b = v["blocks"];
        if (!b.is_array()) bad("code.blocks", "expected a list");
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::string p = "code.blocks[" + std::to_string(i) + "]";
            BlockRule rule;
            rule.degree = static_cast<unsigned>(as_positive(need(b[i], "degree", p), p + ".degree"));
            rule.inner = parse_kind(need(b[i], "inner", p), p + ".inner");
            if (rule.inner == InnerCode::Kind::ReedSolomon)
                rule.n = static_cast<std::size_t>(as_positive(need(b[i], "n", p), p + ".n"));
            c.blocks.push_back(rule);
        }
    }
    return c;
}

}  // namespace

const GaloisField& constant_field_for(std::uint64_t q, unsigned n) {
    if (q < 2) throw ConfigError("curve.q: must be a prime power");
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    unsigned m = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw ConfigError("curve.q: " + std::to_string(q) + " is not a prime power");
    if (n == 0) throw ConfigError("curve.n: must be positive");
    return GaloisField::get(static_cast<std::uint32_t>(p), m * n);
}

const Divisor& JobConfig::divisor(const std::string& name) const {
    auto it = divisors.find(name);
    if (it == divisors.end()) throw ConfigError("divisors." + name + ": missing");
    return it->second;
}

JobConfig parse_config(const json& doc) {
    if (!doc.is_object()) bad("<root>", "expected an object");
    JobConfig job;
    const json& c = need(doc, "curve", "");
    const auto q = static_cast<std::uint64_t>(as_positive(need(c, "q", "curve"), "curve.q"));
    const auto n = static_cast<unsigned>(as_positive(need(c, "n", "curve"), "curve.n"));
    const GaloisField& K = constant_field_for(q, n);
    const json& L = need(c, "L", "curve");
    if (!L.is_array() || L.size() < 2) bad("curve.L", "expected at least two coefficients");
    std::vector<Element> coeffs;
    for (std::size_t i = 0; i < L.size(); ++i) coeffs.push_back(parse_element(K, L[i], "curve.L[" + std::to_string(i) + "]"));
    auto f = parse_factors(K, need(c, "f", "curve"), "curve.f");
    auto g = c.contains("g") ? parse_factors(K, c["g"], "curve.g") : std::vector<FactorInput>{};
    job.curve = std::make_shared<const LinearizedCurve>(q, n, std::move(coeffs), std::move(f), std::move(g));

    if (doc.contains("genus")) {
        job.genus = as_int(doc["genus"], "genus");
        if (*job.genus < 0) bad("genus", "must be nonnegative");
    }
    if (doc.contains("divisors")) {
        const json& ds = doc["divisors"];
        if (!ds.is_object()) bad("divisors", "expected an object");
        for (auto it = ds.begin(); it != ds.end(); ++it)
            job.divisors[it.key()] = parse_divisor(*job.curve, it.value(), "divisors." + it.key());
    }
    if (doc.contains("code")) job.code = parse_code(doc["code"]);
    if (doc.contains("max_degree")) {
        const std::int64_t d = as_int(doc["max_degree"], "max_degree");
        if (d < 1 || d > 3) bad("max_degree", "expected 1, 2 or 3");
        job.max_degree = static_cast<unsigned>(d);
    }
    return job;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return parse_config(doc);
}

InnerCode make_inner(const GaloisField& K, const BlockRule& rule) {
    switch (rule.inner) {
        case InnerCode::Kind::Identity:
            return inner_identity(K, rule.degree);
        case InnerCode::Kind::Parity:
            return inner_parity(K, rule.degree);
        case InnerCode::Kind::ReedSolomon:
            return inner_rs(K, rule.n, rule.degree);
        case InnerCode::Kind::Custom:
            break;
    }
    throw ConfigError("custom inner codes are not configurable");
}

GagCodeSpec build_spec(const JobConfig& job, const Divisor& G, std::int64_t s, std::int64_t genus) {
    const LinearizedCurve& curve = *job.curve;
    const GaloisField& K = curve.constant_field();
    std::map<unsigned, std::size_t> wanted;
    wanted[1] = static_cast<std::size_t>(s);
    if (job.code)
        for (const auto& rule : job.code->blocks) ++wanted[rule.degree];
    std::map<unsigned, std::vector<EvaluationPlace>> pool;
    for (const auto& [deg, count] : wanted) {
        if (count == 0) continue;
        try {
            pool[deg] = first_places(curve, deg, count);
        } catch (const std::runtime_error& e) {
            throw ConfigError(std::string("code: ") + e.what());
        }
    }
    std::vector<std::pair<EvaluationPlace, InnerCode>> blocks;
    for (std::int64_t i = 0; i < s; ++i) blocks.emplace_back(pool[1][static_cast<std::size_t>(i)], inner_identity(K, 1));
    std::map<unsigned, std::size_t> used;
    used[1] = static_cast<std::size_t>(s);
    if (job.code)
        for (const auto& rule : job.code->blocks)
            blocks.emplace_back(pool[rule.degree][used[rule.degree]++], make_inner(K, rule));
    return make_spec(job.curve, G, blocks, genus);
}

json to_json(const Element& e) { return e.coords(); }

json to_json(const Poly& p) {
    json out = json::array();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(p.degree(), 0)) && !p.is_zero(); ++i)
        out.push_back(to_json(p.coeff(i)));
    return out;
}

json to_json(const Divisor& D) { return json{{"a", D.a}, {"b_inf", D.b_inf}}; }

json to_json(const Monomial& m) { return json{{"k", m.k}, {"e_inf", m.e_inf}, {"e", m.e}}; }

json to_json(const EvaluationPlace& P) {
    return json{{"degree", P.degree},
                {"x_degree", P.x_degree},
                {"min_poly", to_json(P.min_poly)},
                {"alpha", to_json(P.alpha)},
                {"beta", to_json(P.beta)}};
}

json to_json(const ParamCertificate& c) {
    return json{{"code", c.code},         {"bound", c.bound},     {"n", c.n},
                {"k", c.k},               {"d_lower", c.d_lower}, {"vacuous", c.vacuous},
                {"degenerate", c.degenerate}, {"genus", c.genus}, {"deg_G", c.deg_G},
                {"deg_D", c.deg_D},       {"deg_Z", c.deg_Z},     {"i_A", c.i_A},
                {"i_G_minus_C", c.i_G_minus_C}, {"threshold", c.threshold}, {"sum_d", c.sum_d},
                {"subset_max", c.subset_max}, {"notes", c.notes}};
}

json to_json(const Matrix& M) {
    json rows = json::array();
    for (std::size_t r = 0; r < M.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < M.cols; ++c) row.push_back(M.field->coords(M.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gag
