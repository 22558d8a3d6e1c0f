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
#include <numeric>
#include <random>

#include "support.hpp"

using namespace gag;
using namespace gag::testing;

namespace {

// degree of a over K = GF(Q), by repeated Frobenius
unsigned degree_over(const Element& a, std::uint64_t Q) {
    Element t = a;
    for (unsigned e = 1;; ++e) {
        t = t.pow(static_cast<std::int64_t>(Q));
        if (t == a) return e;
    }
}

Element lift(const Poly& p, const Element& t) {
    Element acc = t.field().zero();
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + embed(p.coeff(static_cast<std::size_t>(i)), t.field());
    return acc;
}

// affine points (alpha, beta) over K_D with g(alpha) != 0 and
// L(beta) g(alpha) = f(alpha), by checking every pair
std::size_t affine_points(const LinearizedCurve& c, unsigned D) {
    const GaloisField& E = residue_field(c, D);
    const Poly f = c.f(), g = c.g();
    std::vector<Element> Lvals(E.size());
    for (Code b = 0; b < E.size(); ++b) {
        Element acc = E.zero(), pw = E.element(b);
        for (const auto& a : c.L().coeffs()) {
            acc += embed(a, E) * pw;
            pw = pw.pow(static_cast<std::int64_t>(c.q()));
        }
        Lvals[b] = acc;
    }
    std::size_t count = 0;
    for (Code a = 0; a < E.size(); ++a) {
        const Element alpha = E.element(a), ga = lift(g, alpha);
        if (ga.is_zero()) continue;
        const Element fa = lift(f, alpha);
        for (Code b = 0; b < E.size(); ++b) count += (Lvals[b] * ga == fa);
    }
    return count;
}

Monomial mono(const LinearizedCurve& c, std::int64_t k, std::int64_t e_inf, std::vector<std::int64_t> e = {}) {
    if (e.empty()) e.assign(c.s(), 0);
    return Monomial{k, e_inf, std::move(e)};
}

}  // namespace

TEST_SUITE("places") {
    TEST_CASE("place counts") {
        CHECK(rational_place_count(*curve49()) == 170);
        CHECK(rational_place_count(*curve64()) == 257);
        CHECK(rational_place_count(*curve4()) == 9);

        const auto inv49 = enumerate_places(*curve49(), 3);
        CHECK(inv49.count(1) == 168);
        CHECK(inv49.count(2) == 784);
        CHECK(inv49.count(3) == 40992);
        const auto inv64 = enumerate_places(*curve64(), 3);
        CHECK(inv64.count(1) == 256);
        CHECK(inv64.count(2) == 1152);
        CHECK(inv64.count(3) == 91392);
        const auto toy = enumerate_places(*curve4(), 3);
        CHECK(toy.count(1) == 8);
        CHECK(toy.count(2) == 0);
        CHECK(toy.count(3) == 24);
        CHECK_THROWS(enumerate_places(*curve4(), 4));
    }

    TEST_CASE("counts agree with brute-force point counting") {
        // #points over K_D = sum over e | D of e N_e
        for (auto cp : {curve49(), curve64(), curve4()}) {
            const auto& c = *cp;
            const unsigned top = c.constant_field().size() <= 4 ? 3 : 2;
            std::vector<std::size_t> N(top + 1);
            for (unsigned D = 1; D <= top; ++D) {
                N[D] = places_of_degree(c, D).size();
                std::size_t total = 0;
                for (unsigned e = 1; e <= D; ++e)
                    if (D % e == 0) total += e * N[e];
                CAPTURE(D);
                CHECK(total == affine_points(c, D));
            }
        }
        CHECK(affine_points(*curve4(), 1) == toy_points().size());
    }

    TEST_CASE("serial and parallel enumeration agree") {
        for (auto cp : {curve49(), curve64(), curve4()})
            for (unsigned D = 1; D <= 3; ++D) CHECK(places_of_degree(*cp, D) == places_of_degree_serial(*cp, D));
    }

    TEST_CASE("each place is a point of the right degree") {
        for (auto cp : {curve49(), curve64(), curve4()}) {
            const auto& c = *cp;
            const std::uint64_t Q = c.constant_field().size();
            for (unsigned D = 1; D <= 2; ++D) {
                const auto places = places_of_degree(c, D);
                std::map<Code, std::size_t> per_alpha;
                for (std::size_t i = 0; i < places.size(); ++i) {
                    const auto& P = places[i];
                    const GaloisField& E = P.residue_field();
                    CHECK(E.size() == residue_field(c, D).size());
                    CHECK(P.degree == D);
                    const unsigned da = degree_over(P.alpha, Q), db = degree_over(P.beta, Q);
                    CHECK(P.x_degree == da);
                    CHECK(std::lcm(da, db) == D);
                    CHECK(P.min_poly.degree() == static_cast<int>(da));
                    CHECK(P.min_poly.is_monic());
                    CHECK(is_irreducible(P.min_poly));
                    CHECK(lift(P.min_poly, P.alpha).is_zero());
                    CHECK(lin_eval(c.L(), P.beta) * lift(c.g(), P.alpha) == lift(c.f(), P.alpha));
                    ++per_alpha[P.alpha.code()];
                    if (i > 0) {
                        const auto& prev = places[i - 1];
                        CHECK((prev.alpha.code() < P.alpha.code() ||
                               (prev.alpha == P.alpha && prev.beta.code() < P.beta.code())));
                    }
                }
                // the places above one x-place of degree delta have total degree delta q^r
                for (auto [a, n] : per_alpha) {
                    const unsigned delta = degree_over(residue_field(c, D).element(a), Q);
                    CHECK(n * D == delta * static_cast<std::size_t>(c.qr()));
                }
            }
        }
    }

    TEST_CASE("evaluation is multiplicative and reads off alpha and beta") {
        std::mt19937_64 rng(41);
        for (auto cp : {curve49(), curve64(), curve4()}) {
            const auto& c = *cp;
            for (unsigned D = 1; D <= 2; ++D) {
                const auto places = places_of_degree(c, D);
                if (places.empty()) continue;
                std::uniform_int_distribution<std::size_t> pick(0, places.size() - 1);
                std::uniform_int_distribution<std::int64_t> k(0, c.qr() - 1), e(-4, 4), einf(0, 6);
                for (int t = 0; t < 100; ++t) {
                    const auto& P = places[pick(rng)];
                    CHECK(evaluate(c, mono(c, 1, 0), P) == P.beta);
                    CHECK(evaluate(c, mono(c, 0, 1), P) == P.alpha);
                    CHECK(evaluate(c, constant_monomial(c), P) == P.residue_field().one());
                    for (std::size_t i = 0; i < c.s(); ++i) {
                        std::vector<std::int64_t> ei(c.s(), 0);
                        ei[i] = 1;
                        CHECK(evaluate(c, mono(c, 0, 0, ei), P) == lift(c.denominator()[i].poly, P.alpha));
                    }
                    Monomial a = mono(c, k(rng), einf(rng)), b = mono(c, k(rng), einf(rng));
                    for (auto& x : a.e) x = e(rng);
                    for (auto& x : b.e) x = e(rng);
                    CHECK(evaluate(c, a * b, P) == evaluate(c, a, P) * evaluate(c, b, P));
                }
            }
        }
    }

    TEST_CASE("first_places is a prefix of the full list") {
        for (auto cp : {curve49(), curve64()}) {
            for (unsigned D = 1; D <= 3; ++D) {
                const auto all = places_of_degree(*cp, D);
                for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5}, std::size_t{40}}) {
                    const auto some = first_places(*cp, D, n);
                    REQUIRE(some.size() == n);
                    CHECK(std::equal(some.begin(), some.end(), all.begin()));
                }
            }
        }
        // degree 4 is only reachable lazily
        const auto four = first_places(*curve49(), 4, 3);
        REQUIRE(four.size() == 3);
        for (const auto& P : four) {
            CHECK(P.degree == 4);
            CHECK(P.residue_field().size() == 49ull * 49 * 49 * 49);
        }
        CHECK_THROWS(first_places(*curve4(), 2, 1));
    }
}
