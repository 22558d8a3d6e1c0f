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

#ifndef GAG_RIEMANN_ROCH_HPP
#define GAG_RIEMANN_ROCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gag/curve.hpp"

namespace gag {

/// sum a_i Q_i + b_inf Q_inf. Only the totally ramified places are
/// representable, so every divisor handled here lies in that scope.
struct Divisor {
    std::vector<std::int64_t> a;
    std::int64_t b_inf = 0;

    static Divisor zero(const LinearizedCurve& curve) { return {std::vector<std::int64_t>(curve.s(), 0), 0}; }
    static Divisor at_infinity(const LinearizedCurve& curve, std::int64_t b) {
        return {std::vector<std::int64_t>(curve.s(), 0), b};
    }

    Divisor operator+(const Divisor& rhs) const;
    Divisor operator-(const Divisor& rhs) const;
    bool is_zero() const noexcept;
    /// Componentwise <=.
    bool leq(const Divisor& rhs) const;
    std::string str() const;

    friend bool operator==(const Divisor&, const Divisor&) = default;
};

std::int64_t divisor_degree(const LinearizedCurve& curve, const Divisor& G);
Divisor divisor_gcd(const Divisor& D1, const Divisor& D2);

/// l(G), by the closed form summed over k = 0..q^r-1.
std::int64_t rr_dim(const LinearizedCurve& curve, const Divisor& G);

/// The full monomial generator set of L(G): every y^k x^e_inf prod p_i^e_i
/// with e_inf >= 0, q^r e_i - k n_i >= -a_i and
/// k d + q^r (e_inf + sum e_i deg p_i) <= b_inf. The set is finite because
/// each e_i is bounded below and the weighted sum is bounded above.
std::vector<Monomial> rr_generators(const LinearizedCurve& curve, const Divisor& G);

struct RRBasis {
    Divisor divisor;
    /// Ordered by k, then by the window value c = e_inf + sum e_i deg p_i.
    std::vector<Monomial> members;
};

RRBasis rr_basis(const LinearizedCurve& curve, const Divisor& G);

/// Closed-form floor; throws std::domain_error when l(G) = 0.
Divisor rr_floor(const LinearizedCurve& curve, const Divisor& G);
/// Floor as minus the gcd of the basis divisors, restricted to Q_i and Q_inf.
Divisor floor_oracle(const LinearizedCurve& curve, const Divisor& G);

/// i(G) = l(G) - deg G + g - 1
std::int64_t index_of_specialty(const LinearizedCurve& curve, const Divisor& G, std::int64_t genus);

/// L(D1) = L(D2), decided as l(gcd(D1, D2)) = l(D1) = l(D2).
bool same_space(const LinearizedCurve& curve, const Divisor& D1, const Divisor& D2);
/// L(D1) is a subspace of L(D2), decided as l(gcd(D1, D2)) = l(D1).
bool space_contained(const LinearizedCurve& curve, const Divisor& D1, const Divisor& D2);

}  // namespace gag

#endif  // GAG_RIEMANN_ROCH_HPP
