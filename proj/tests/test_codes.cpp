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

#include <map>
#include <random>
#include <set>

#include "support.hpp"

using namespace gag;
using namespace gag::testing;

namespace {

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

// s rational places with identities, then extra (degree, code) blocks
GagCodeSpec mixed_spec(std::shared_ptr<const LinearizedCurve> curve, const Divisor& G, std::size_t s,
                       const std::vector<InnerCode>& extra, std::int64_t genus) {
    std::vector<std::pair<EvaluationPlace, InnerCode>> blocks;
    for (const auto& P : first_places(*curve, 1, s)) blocks.emplace_back(P, inner_identity(curve->constant_field(), 1));
    std::map<std::size_t, std::size_t> used;
    for (const auto& code : extra) {
        const auto places = first_places(*curve, static_cast<unsigned>(code.k), ++used[code.k]);
        blocks.emplace_back(places.back(), code);
    }
    return make_spec(std::move(curve), G, blocks, genus);
}

// rows 1, x, y at the toy points, with the hand-written GF(4) table
std::vector<std::vector<int>> toy_rows() {
    std::vector<std::vector<int>> rows(3);
    for (auto [x, y] : toy_points()) {
        rows[0].push_back(1);
        rows[1].push_back(x);
        rows[2].push_back(y);
    }
    return rows;
}

std::vector<std::vector<int>> to_rows(const Matrix& M) {
    std::vector<std::vector<int>> out(M.rows, std::vector<int>(M.cols));
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) out[i][j] = static_cast<int>(M.at(i, j));
    return out;
}

Pairs random_pairs(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::int64_t> k(1, 4), d(1, 5);
    Pairs p(len(rng));
    for (auto& [a, b] : p) {
        a = k(rng);
        b = d(rng);
    }
    return p;
}

}  // namespace

TEST_SUITE("codes") {
    TEST_CASE("inner code parameters") {
        const auto& K49 = GaloisField::get(7, 2);
        const auto& K64 = GaloisField::get(2, 6);
        CHECK(inner_identity(K49, 1).label() == "[1,1,1]");
        CHECK(inner_identity(K49, 2).label() == "[2,2,1]");
        CHECK(inner_rs(K49, 3, 2).label() == "[3,2,2]");
        CHECK(inner_parity(K49, 4).label() == "[5,4,2]");
        CHECK(inner_rs(K64, 4, 2).label() == "[4,2,3]");
        CHECK(std::string(to_string(inner_rs(K64, 4, 2).kind)) == "rs");
        for (const auto& c : {inner_identity(K49, 3), inner_parity(K49, 3), inner_rs(K49, 5, 3), inner_rs(K64, 4, 2)}) {
            CHECK(rank(c.generator) == c.k);
            CHECK(c.generator.rows == c.k);
            CHECK(c.generator.cols == c.n);
            if (c.k <= 3) CHECK(min_distance_bruteforce(c.generator) == c.d);
        }
        CHECK_THROWS_AS(inner_rs(K49, 50, 2), std::invalid_argument);
        CHECK_THROWS_AS(inner_rs(K49, 3, 4), std::invalid_argument);
        CHECK_THROWS_AS(inner_identity(K49, 0), std::invalid_argument);

        Matrix rep(K49, 1, 3);
        rep.data = {1, 1, 1};
        CHECK(inner_custom(3, rep).label() == "[3,1,3]");
        CHECK_THROWS_AS(inner_custom(2, rep), std::invalid_argument);
        Matrix dup(K49, 2, 3);
        dup.data = {1, 2, 3, 1, 2, 3};
        CHECK_THROWS_AS(inner_custom(1, dup), std::invalid_argument);
    }

    TEST_CASE("pi maps are injective and linear onto the inner code") {
        const auto& c = *curve49();
        const GaloisField& K = c.constant_field();
        const auto P1 = first_places(c, 1, 1)[0];
        const PiMap id(K, P1.residue_field(), inner_identity(K, 1));
        const Element v = K.element(17);
        CHECK(id.apply(v) == std::vector<Code>{17});

        const auto P2 = first_places(c, 2, 1)[0];
        const GaloisField& E = P2.residue_field();
        const PiMap pi(K, E, inner_rs(K, 3, 2));
        CHECK(pi.apply(E.zero()) == std::vector<Code>{0, 0, 0});
        CHECK_THROWS_AS(pi.apply(K.one()), std::invalid_argument);
        CHECK_THROWS_AS(PiMap(K, E, inner_rs(K, 3, 1)), std::invalid_argument);

        std::set<std::vector<Code>> images;
        for (Code a = 0; a < E.size(); ++a) images.insert(pi.apply(E.element(a)));
        CHECK(images.size() == E.size());

        std::mt19937_64 rng(61);
        std::uniform_int_distribution<Code> pickE(0, E.size() - 1), pickK(0, K.size() - 1);
        for (int t = 0; t < 200; ++t) {
            const Element u = E.element(pickE(rng)), w = E.element(pickE(rng));
            const Element lam = K.element(pickK(rng));
            const auto su = pi.apply(u), sw = pi.apply(w), sum = pi.apply(u + w), scaled = pi.apply(embed(lam, E) * u);
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(sum[j] == K.add(su[j], sw[j]));
                CHECK(scaled[j] == K.mul(lam.code(), su[j]));
            }
            // image lies in the row space
            Matrix M(K, 3, 3);
            std::copy(pi.code().generator.data.begin(), pi.code().generator.data.end(), M.data.begin());
            std::copy(su.begin(), su.end(), M.data.begin() + 6);
            CHECK(rank(M) == 2);
        }
    }

    TEST_CASE("toy code is [8,3,5]") {
        const auto spec = identity_spec(curve4(), div_inf(3), 8, 1);
        const BuiltCode built = build_CL(spec);
        CHECK(built.generator.rows == 3);
        CHECK(built.generator.cols == 8);
        CHECK(to_rows(built.generator) == toy_rows());
        CHECK(toy_min_distance(toy_rows()) == 5);
        CHECK(min_distance_bruteforce(built.generator) == 5);
        const ParamCertificate& c = built.certificate;
        CHECK(c.n == 8);
        CHECK(c.k == 3);
        CHECK(c.d_lower == 5);
        CHECK(c.bound == "cl_designed");
        CHECK_FALSE(c.vacuous);
        const ParamCertificate p = cl_params(spec);
        CHECK(p.k == 3);
        CHECK(p.d_lower == 5);
    }

    TEST_CASE("spec construction errors") {
        const auto& c = *curve49();
        CHECK_THROWS_AS(make_spec(curve49(), div49(9, 36), {}, 12), std::invalid_argument);
        const auto P2 = first_places(c, 2, 1)[0];
        CHECK_THROWS_AS(make_spec(curve49(), div49(9, 36), {{P2, inner_identity(c.constant_field(), 1)}}, 12),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_spec(curve49(), div_inf(9), {{P2, inner_identity(c.constant_field(), 2)}}, 12),
                        std::invalid_argument);
    }

    TEST_CASE("rank equals the dimension on the first worked example") {
        const auto spec = identity_spec(curve49(), div49(9, 36), 109, 12);
        const BuiltCode built = build_CL(spec);
        CHECK(rank(built.generator) == 34);
        CHECK(built.certificate.k == 34);
        CHECK(evaluation_rank(spec) == 34);
        const ParamCertificate om = comega_params(spec);
        CHECK(om.n == 109);
        CHECK(om.k == 75);
        CHECK(om.threshold == 109 - 45 + 22);
        const ParamCertificate om64 = comega_params(identity_spec(curve64(), div_inf(45), 228, 12));
        CHECK(om64.k == 194);
    }

    TEST_CASE("degenerate and vacuous certificates") {
        // deg G > deg D: the evaluation map is onto
        const auto spec = identity_spec(curve4(), div_inf(10), 8, 1);
        const ParamCertificate om = comega_params(spec);
        CHECK(om.k == 0);
        CHECK(om.degenerate);
        const ParamCertificate cl = cl_params(spec);
        CHECK(cl.k == 8);
        CHECK(cl.vacuous);
        CHECK(cl.d_lower == 1);
        // one place, deg G < k_1
        const auto one = make_spec(curve49(), div49(0, 0), {{first_places(*curve49(), 2, 1)[0], inner_rs(GaloisField::get(7, 2), 3, 2)}}, 12);
        CHECK(cl_params(one).d_lower == 2);
    }

    TEST_CASE("subset_max") {
        CHECK(subset_max(Pairs(109, {1, 1}), 85) == 85);
        CHECK(subset_max({{1, 1}, {2, 2}, {2, 2}}, 3) == 3);
        CHECK(subset_max({{1, 1}, {2, 2}}, -1) == 0);
        CHECK(subset_max({}, 10) == 0);
        CHECK_THROWS_AS(subset_max({{-1, 1}}, 3), std::invalid_argument);
        std::mt19937_64 rng(62);
        std::uniform_int_distribution<std::int64_t> T(-3, 30);
        for (int t = 0; t < 300; ++t) {
            const Pairs p = random_pairs(rng, 14);
            const std::int64_t budget = T(rng);
            CHECK(subset_max(p, budget) == subset_max_exhaustive(p, budget));
        }
    }

    TEST_CASE("Picone bound") {
        const auto& K = GaloisField::get(7, 2);
        const Divisor A = div49(5, 18), B = div49(4, 18), Z = div49(1, 0);
        const auto spec = identity_spec(curve49(), A + B, 109, 12);
        CHECK(picone_bound(A, B, B, Z, spec) == 24);

        // Z = 0, C = B gives deg G - (2g - 2)
        const auto toy = identity_spec(curve4(), div_inf(5), 8, 1);
        CHECK(picone_bound(div_inf(3), div_inf(2), div_inf(2), div_inf(0), toy) == 5);

        const auto with_id2 = mixed_spec(curve49(), A + B, 116, {inner_identity(K, 2)}, 12);
        try {
            picone_bound(A, B, B, Z, with_id2);
            FAIL("accepted a [2,2,1] block");
        } catch (const HypothesisError& e) {
            REQUIRE(e.failed().size() == 1);
            CHECK(e.failed()[0].find("d_i >= k_i") != std::string::npos);
        }
        const ParamCertificate imp = improved_bound(A, B, B, Z, with_id2);
        CHECK(imp.d_lower == 23);
        CHECK(imp.n == 118);
        CHECK(imp.k == 84);
    }

    TEST_CASE("improved bound on the worked examples") {
        const auto& K = GaloisField::get(7, 2);
        const Divisor A = div49(5, 18), B = div49(4, 18), Z = div49(1, 0);
        const ParamCertificate c1 = improved_bound(A, B, B, Z, identity_spec(curve49(), A + B, 109, 12));
        CHECK(c1.threshold == 85);
        CHECK(c1.d_lower == 24);
        CHECK(c1.k == 75);
        CHECK(c1.deg_Z == 1);
        CHECK(c1.i_A == 0);
        CHECK(c1.i_G_minus_C == 0);

        for (std::int64_t s : {112, 140, 168}) {
            const ParamCertificate c4 = improved_bound(A, B, B, Z, mixed_spec(curve49(), A + B, static_cast<std::size_t>(s), {inner_rs(K, 3, 2)}, 12));
            CHECK(c4.n == s + 3);
            CHECK(c4.k == s - 32);
            CHECK(c4.threshold == s - 22);
            CHECK(c4.d_lower == 24);
        }

        const Divisor A2 = div49(19, 4), B2 = div49(18, 3);
        const ParamCertificate c2 = improved_bound(A2, B2, B2, Z, identity_spec(curve49(), A2 + B2, 107, 12));
        CHECK(c2.threshold == 84);
        CHECK(c2.d_lower == 23);
        CHECK(c2.k == 74);
    }

    TEST_CASE("improved bound hypotheses are checked") {
        const Divisor A = div49(5, 18), B = div49(4, 18);
        const auto spec = identity_spec(curve49(), A + B, 109, 12);
        REQUIRE(rr_dim(*curve49(), A) != rr_dim(*curve49(), A - div49(3, 0)));
        CHECK_THROWS_AS(improved_bound(A, B, B, div49(3, 0), spec), HypothesisError);
        // A + B must be G
        CHECK_THROWS_AS(improved_bound(A, A, A, div49(0, 0), spec), HypothesisError);
        // containment reported through gcd when not componentwise
        const ParamCertificate c = improved_bound(A, B, B, div49(1, 0), spec);
        CHECK(c.notes.back().find("gcd") != std::string::npos);
    }

    TEST_CASE("improved bound with Z = 0 and C = B matches the C_Omega bound") {
        std::mt19937_64 rng(63);
        std::uniform_int_distribution<std::int64_t> coef(0, 25), places(20, 60);
        for (int t = 0; t < 40; ++t) {
            const Divisor A = div49(coef(rng), coef(rng)), B = div49(coef(rng), coef(rng));
            const auto spec = identity_spec(curve49(), A + B, static_cast<std::size_t>(places(rng)), 12);
            const ParamCertificate imp = improved_bound(A, B, B, div49(0, 0), spec);
            const ParamCertificate om = comega_params(spec);
            CHECK(imp.threshold == om.threshold);
            CHECK(imp.d_lower == om.d_lower);
            CHECK(imp.k == om.k);
        }
    }

    TEST_CASE("abz recipe") {
        const auto r1 = abz_recipe(*curve49(), div49(5, 18), div49(5, 18));
        CHECK(r1.B == div49(4, 18));
        CHECK(r1.Z == div49(1, 0));
        CHECK(r1.G == div49(9, 36));
        CHECK(r1.report.size() == 2);
        const auto r4 = abz_recipe(*curve64(), div_inf(23), div_inf(23));
        CHECK(r4.B == div_inf(22));
        CHECK(r4.Z == div_inf(1));
        CHECK(r4.G == div_inf(45));
        const auto r0 = abz_recipe(*curve49(), div49(4, 18), div49(4, 18));
        CHECK(r0.Z.is_zero());
        CHECK_THROWS_AS(abz_recipe(*curve49(), div49(5, 18), div49(4, 18)), HypothesisError);
        CHECK_THROWS_AS(abz_recipe(*curve49(), div49(-1, 0), div49(4, 18)), std::invalid_argument);
        const auto r2 = abz_recipe(*curve49(), div49(19, 4), div49(19, 3));
        CHECK(r2.B == div49(18, 3));
        CHECK(r2.G == div49(37, 7));
    }

    TEST_CASE("codewords are blockwise inner codewords") {
        const auto& K = GaloisField::get(7, 2);
        const auto spec = mixed_spec(curve49(), div49(9, 36), 20, {inner_rs(K, 3, 2), inner_identity(K, 2), inner_rs(K, 4, 2)}, 12);
        const Matrix M = generator_matrix(spec);
        CHECK(M == generator_matrix_serial(spec));
        CHECK(M.cols == static_cast<std::size_t>(spec.length()));
        CHECK(M.rows == 34);
        std::size_t col = 0;
        for (const auto& b : spec.blocks) {
            const InnerCode& code = b.pi.code();
            for (std::size_t r = 0; r < M.rows; ++r) {
                Matrix stacked(K, code.k + 1, code.n);
                std::copy(code.generator.data.begin(), code.generator.data.end(), stacked.data.begin());
                for (std::size_t j = 0; j < code.n; ++j) stacked.at(code.k, j) = M.at(r, col + j);
                CHECK(rank(stacked) == code.k);
            }
            col += code.n;
        }
    }

    TEST_CASE("serial and parallel generator matrices agree") {
        CHECK(generator_matrix(identity_spec(curve64(), div_inf(45), 60, 12)) ==
              generator_matrix_serial(identity_spec(curve64(), div_inf(45), 60, 12)));
        const auto toy = mixed_spec(curve4(), div_inf(6), 4, {inner_parity(GaloisField::get(2, 2), 3)}, 1);
        CHECK(generator_matrix(toy) == generator_matrix_serial(toy));
    }

    TEST_CASE("certified distances hold on small toy codes") {
        const auto& K4 = GaloisField::get(2, 2);
        for (std::int64_t m = 1; m <= 9; ++m) {
            for (const auto& extra : std::vector<std::vector<InnerCode>>{{}, {inner_parity(K4, 3)}, {inner_rs(K4, 4, 3)}, {inner_identity(K4, 3)}}) {
                const std::size_t s = extra.empty() ? 8 : 5;
                const auto spec = mixed_spec(curve4(), div_inf(m), s, extra, 1);
                const BuiltCode built = build_CL(spec);
                if (rank(built.generator) == 0) continue;
                CAPTURE(m);
                const auto d = static_cast<std::int64_t>(min_distance_bruteforce(built.generator));
                CHECK(d >= built.certificate.d_lower);
            }
        }
    }

    TEST_CASE("adding a place costs at most its own distance") {
        std::mt19937_64 rng(64);
        for (int t = 0; t < 200; ++t) {
            Pairs p = random_pairs(rng, 12);
            const std::int64_t T = std::uniform_int_distribution<std::int64_t>(0, 20)(rng);
            auto bound = [&](const Pairs& q) {
                std::int64_t sum = 0;
                for (auto [k, d] : q) sum += d;
                return sum - subset_max(q, T);
            };
            const std::int64_t before = bound(p);
            const std::pair<std::int64_t, std::int64_t> added{std::uniform_int_distribution<std::int64_t>(1, 4)(rng),
                                                              std::uniform_int_distribution<std::int64_t>(1, 5)(rng)};
            p.push_back(added);
            CHECK(bound(p) >= before - added.second);
            CHECK(bound(p) >= before);
        }
    }
}
