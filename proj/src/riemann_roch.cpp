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

#include "gag/riemann_roch.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gag {

Divisor Divisor::operator+(const Divisor& rhs) const {
    if (a.size() != rhs.a.size()) throw std::invalid_argument("divisors over different curves");
    Divisor out = *this;
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += rhs.a[i];
    out.b_inf += rhs.b_inf;
    return out;
}

Divisor Divisor::operator-(const Divisor& rhs) const {
    if (a.size() != rhs.a.size()) throw std::invalid_argument("divisors over different curves");
    Divisor out = *this;
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] -= rhs.a[i];
    out.b_inf -= rhs.b_inf;
    return out;
}

bool Divisor::is_zero() const noexcept {
    return b_inf == 0 && std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

bool Divisor::leq(const Divisor& rhs) const {
    if (a.size() != rhs.a.size()) throw std::invalid_argument("divisors over different curves");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > rhs.a[i]) return false;
    return b_inf <= rhs.b_inf;
}

std::string Divisor::str() const {
    std::ostringstream os;
    os << b_inf << "Q_inf";
    for (std::size_t i = 0; i < a.size(); ++i) os << (a[i] < 0 ? "" : "+") << a[i] << "Q_" << (i + 1);
    return os.str();
}

namespace {

void check_shape(const LinearizedCurve& curve, const Divisor& G) {
    if (G.a.size() != curve.s())
        throw std::invalid_argument("divisor has " + std::to_string(G.a.size()) + " finite coefficients, curve has s = " +
                                    std::to_string(curve.s()));
}

// floor((a_i - k n_i) / q^r) for every i
std::vector<std::int64_t> finite_floors(const LinearizedCurve& curve, const Divisor& G, std::int64_t k) {
    std::vector<std::int64_t> out(curve.s());
    for (std::size_t i = 0; i < curve.s(); ++i) out[i] = floor_div(G.a[i] - k * curve.n_i(i), curve.qr());
    return out;
}

struct Window {
    std::int64_t lo;  // -sum floor((a_i - k n_i)/q^r) deg p_i
    std::int64_t hi;  // floor((b_inf - k d)/q^r)
    std::vector<std::int64_t> floors;
};

Window window(const LinearizedCurve& curve, const Divisor& G, std::int64_t k) {
    Window w{0, floor_div(G.b_inf - k * curve.d(), curve.qr()), finite_floors(curve, G, k)};
    for (std::size_t i = 0; i < curve.s(); ++i) w.lo -= w.floors[i] * curve.deg_p(i);
    return w;
}

}  // namespace

std::int64_t divisor_degree(const LinearizedCurve& curve, const Divisor& G) {
    check_shape(curve, G);
    std::int64_t deg = G.b_inf;
    for (std::size_t i = 0; i < curve.s(); ++i) deg += G.a[i] * curve.deg_p(i);
    return deg;
}

Divisor divisor_gcd(const Divisor& D1, const Divisor& D2) {
    if (D1.a.size() != D2.a.size()) throw std::invalid_argument("divisors over different curves");
    Divisor out = D1;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = std::min(D1.a[i], D2.a[i]);
    out.b_inf = std::min(D1.b_inf, D2.b_inf);
    return out;
}

std::int64_t rr_dim(const LinearizedCurve& curve, const Divisor& G) {
    check_shape(curve, G);
    std::int64_t total = 0;
    for (std::int64_t k = 0; k < curve.qr(); ++k) {
        const Window w = window(curve, G, k);
        total += std::max<std::int64_t>(w.hi - w.lo + 1, 0);
    }
    return total;
}

std::vector<Monomial> rr_generators(const LinearizedCurve& curve, const Divisor& G) {
    check_shape(curve, G);
    const std::size_t s = curve.s();
    std::vector<Monomial> out;
    for (std::int64_t k = 0; k < curve.qr(); ++k) {
        const Window w = window(curve, G, k);
        if (w.hi < w.lo) continue;
        // e_i >= -floor_i; the weighted sum of the e_i may exceed its minimum
        // by at most hi - lo, which bounds every e_i from above.
        std::vector<std::int64_t> lower(s);
        for (std::size_t i = 0; i < s; ++i) lower[i] = -w.floors[i];
        const std::int64_t slack = w.hi - w.lo;
        std::vector<std::int64_t> e(lower);
        auto emit = [&](std::int64_t used) {
            // used = sum (e_i - lower_i) deg p_i; e_inf ranges over 0..slack-used
            for (std::int64_t einf = 0; einf <= slack - used; ++einf) out.push_back(Monomial{k, einf, e});
        };
        auto recurse = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
            if (i == s) {
                emit(used);
                return;
            }
            for (std::int64_t extra = 0; used + extra * curve.deg_p(i) <= slack; ++extra) {
                e[i] = lower[i] + extra;
                self(self, i + 1, used + extra * curve.deg_p(i));
            }
            e[i] = lower[i];
        };
        recurse(recurse, 0, 0);
    }
    return out;
}

RRBasis rr_basis(const LinearizedCurve& curve, const Divisor& G) {
    check_shape(curve, G);
    RRBasis basis{G, {}};
    for (std::int64_t k = 0; k < curve.qr(); ++k) {
        const Window w = window(curve, G, k);
        std::vector<std::int64_t> e(curve.s());
        for (std::size_t i = 0; i < curve.s(); ++i) e[i] = -w.floors[i];
        // tightest pole order at each Q_i; the rest of the window value goes on x
        for (std::int64_t c = w.lo; c <= w.hi; ++c) basis.members.push_back(Monomial{k, c - w.lo, e});
    }
    return basis;
}

Divisor rr_floor(const LinearizedCurve& curve, const Divisor& G) {
    check_shape(curve, G);
    const std::int64_t qr = curve.qr();
    constexpr auto kNone = std::numeric_limits<std::int64_t>::min();
    Divisor out{std::vector<std::int64_t>(curve.s(), kNone), kNone};
    bool any = false;
    for (std::int64_t k = 0; k < qr; ++k) {
        const Window w = window(curve, G, k);
        if (w.hi - w.lo < 0) continue;
        any = true;
        for (std::size_t i = 0; i < curve.s(); ++i)
            out.a[i] = std::max(out.a[i], k * curve.n_i(i) + qr * w.floors[i]);
        out.b_inf = std::max(out.b_inf, k * curve.d() + qr * w.hi);
    }
    if (!any) throw std::domain_error("floor undefined: l(G) = 0 for G = " + G.str());
    return out;
}

Divisor floor_oracle(const LinearizedCurve& curve, const Divisor& G) {
    const RRBasis basis = rr_basis(curve, G);
    if (basis.members.empty()) throw std::domain_error("floor undefined: l(G) = 0 for G = " + G.str());
    constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
    Divisor mins{std::vector<std::int64_t>(curve.s(), kInf), kInf};
    for (const auto& mono : basis.members) {
        for (std::size_t i = 0; i < curve.s(); ++i)
            mins.a[i] = std::min(mins.a[i], valuation(curve, mono, CurvePlace::Q(i)));
        mins.b_inf = std::min(mins.b_inf, valuation(curve, mono, CurvePlace::infinity()));
    }
    return Divisor::zero(curve) - mins;
}

std::int64_t index_of_specialty(const LinearizedCurve& curve, const Divisor& G, std::int64_t genus) {
    return rr_dim(curve, G) - divisor_degree(curve, G) + genus - 1;
}

bool same_space(const LinearizedCurve& curve, const Divisor& D1, const Divisor& D2) {
    const std::int64_t l1 = rr_dim(curve, D1);
    return l1 == rr_dim(curve, D2) && rr_dim(curve, divisor_gcd(D1, D2)) == l1;
}

bool space_contained(const LinearizedCurve& curve, const Divisor& D1, const Divisor& D2) {
    return rr_dim(curve, divisor_gcd(D1, D2)) == rr_dim(curve, D1);
}

}  // namespace gag
