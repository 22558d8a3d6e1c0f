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

#ifndef GAG_TESTS_SUPPORT_HPP
#define GAG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "gag/codes.hpp"

namespace gag::testing {

// y^7 + y = (x^2 + 1)^2 / x^2 over GF(49)
inline std::shared_ptr<const LinearizedCurve> curve49() {
    static auto c = [] {
        const auto& K = GaloisField::get(7, 2);
        return std::make_shared<const LinearizedCurve>(7, 2, std::vector<Element>{K.one(), K.one()},
                                                       std::vector<FactorInput>{{Poly(K, {1, 0, 1}), 2}},
                                                       std::vector<FactorInput>{{Poly::x(K), 2}});
    }();
    return c;
}

// y^4 + y^2 + y = x^9 over GF(64)
inline std::shared_ptr<const LinearizedCurve> curve64() {
    static auto c = [] {
        const auto& K = GaloisField::get(2, 6);
        return std::make_shared<const LinearizedCurve>(2, 6, std::vector<Element>{K.one(), K.one(), K.one()},
                                                       std::vector<FactorInput>{{Poly::x(K), 9}},
                                                       std::vector<FactorInput>{});
    }();
    return c;
}

// y^2 + y = x^3 over GF(4)
inline std::shared_ptr<const LinearizedCurve> curve4() {
    static auto c = [] {
        const auto& K = GaloisField::get(2, 2);
        return std::make_shared<const LinearizedCurve>(2, 2, std::vector<Element>{K.one(), K.one()},
                                                       std::vector<FactorInput>{{Poly::x(K), 3}},
                                                       std::vector<FactorInput>{});
    }();
    return c;
}

inline Divisor div49(std::int64_t b_inf, std::int64_t a1) { return Divisor{{a1}, b_inf}; }
inline Divisor div_inf(std::int64_t b_inf) { return Divisor{{}, b_inf}; }

inline Divisor random_divisor(const LinearizedCurve& curve, std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    Divisor D = Divisor::zero(curve);
    for (auto& a : D.a) a = dist(rng);
    D.b_inf = dist(rng);
    return D;
}

// GF(4) = {0, 1, w, w^2} as codes {0, 1, 2, 3} with w^2 = w + 1, written out
// by hand so the toy-curve oracles share no arithmetic with the library.
struct Gf4 {
    static constexpr std::array<std::array<int, 4>, 4> mul{{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
    static int add(int a, int b) { return a ^ b; }
    static int times(int a, int b) { return mul[a][b]; }
};

// The eight affine points of y^2 + y = x^3 over GF(4).
inline std::vector<std::pair<int, int>> toy_points() {
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (Gf4::add(Gf4::times(y, y), y) == Gf4::times(x, Gf4::times(x, x))) pts.emplace_back(x, y);
    return pts;
}

// Weight of the lightest nonzero word spanned by rows over GF(4), by listing
// all 4^k messages.
inline int toy_min_distance(const std::vector<std::vector<int>>& rows) {
    const std::size_t k = rows.size(), n = rows.front().size();
    int best = static_cast<int>(n) + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 4;
    for (std::uint64_t m = 1; m < total; ++m) {
        std::vector<int> word(n, 0);
        std::uint64_t t = m;
        for (std::size_t i = 0; i < k; ++i, t /= 4)
            for (std::size_t j = 0; j < n; ++j) word[j] = Gf4::add(word[j], Gf4::times(static_cast<int>(t % 4), rows[i][j]));
        const int w = static_cast<int>(std::count_if(word.begin(), word.end(), [](int v) { return v != 0; }));
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

// max sum d over subsets with sum k <= T, by listing every subset.
inline std::int64_t subset_max_exhaustive(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, std::int64_t T) {
    std::int64_t best = 0;
    const std::size_t n = pairs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::int64_t k = 0, d = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) {
                k += pairs[i].first;
                d += pairs[i].second;
            }
        if (k <= T) best = std::max(best, d);
    }
    return best;
}

// Spec on the first `s` rational places with [1,1,1] codes.
inline GagCodeSpec identity_spec(std::shared_ptr<const LinearizedCurve> curve, const Divisor& G, std::size_t s,
                                 std::int64_t genus) {
    const auto places = first_places(*curve, 1, s);
    std::vector<std::pair<EvaluationPlace, InnerCode>> blocks;
    for (const auto& P : places) blocks.emplace_back(P, inner_identity(curve->constant_field(), 1));
    return make_spec(std::move(curve), G, blocks, genus);
}

}  // namespace gag::testing

#endif  // GAG_TESTS_SUPPORT_HPP
