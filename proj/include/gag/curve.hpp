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

#ifndef GAG_CURVE_HPP
#define GAG_CURVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gag/galois.hpp"

namespace gag {

/// Integer division rounding toward negative infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// A factor as supplied by the caller; need not be irreducible or monic.
struct FactorInput {
    Poly poly;
    int multiplicity = 1;
};

/**
 * The function field K(x, y) with L(y) = f(x) / g(x), K = GF(q^n).
 *
 * The constructor re-factors the supplied numerator and denominator into
 * monic irreducibles over K (merging repeated factors), so q_j and p_i are
 * always canonical. It does not check the field hypotheses; validate()
 * does that and reports every failure.
 *
 * Place indices: Q_i is the unique zero of p_i (i < s), Q_inf the unique
 * pole of x, R_j the zero of y above the zero of q_j (j < m).
 */
class LinearizedCurve {
   public:
    LinearizedCurve(std::uint64_t q, unsigned n, std::vector<Element> L_coeffs, std::vector<FactorInput> numerator,
                    std::vector<FactorInput> denominator);

    std::uint64_t q() const noexcept { return L_.q(); }
    unsigned n() const noexcept { return n_; }
    unsigned r() const noexcept { return L_.r(); }
    /// q^r, the degree [F : K(x)].
    std::int64_t qr() const noexcept { return static_cast<std::int64_t>(L_.q_pow_r()); }
    /// deg f - deg g
    std::int64_t d() const noexcept { return f_.degree() - g_.degree(); }
    std::uint32_t characteristic() const noexcept { return K_->characteristic(); }

    const GaloisField& constant_field() const noexcept { return *K_; }
    const LinearizedPoly& L() const noexcept { return L_; }

    /// Zeros q_j of f with multiplicities m_j.
    const std::vector<PolyFactor>& numerator() const noexcept { return numerator_; }
    /// Poles p_i of h with multiplicities n_i.
    const std::vector<PolyFactor>& denominator() const noexcept { return denominator_; }
    std::size_t s() const noexcept { return denominator_.size(); }
    std::size_t m() const noexcept { return numerator_.size(); }
    std::int64_t deg_p(std::size_t i) const { return denominator_.at(i).poly.degree(); }
    std::int64_t n_i(std::size_t i) const { return denominator_.at(i).multiplicity; }
    /// True when p_i = x.
    bool p_is_x(std::size_t i) const;
    bool q_is_x(std::size_t j) const;

    /// f and g expanded, including the constant ratio of the supplied leading coefficients.
    const Poly& f() const noexcept { return f_; }
    const Poly& g() const noexcept { return g_; }

    std::string describe() const;

   private:
    const GaloisField* K_;
    unsigned n_;
    LinearizedPoly L_;
    std::vector<PolyFactor> numerator_;
    std::vector<PolyFactor> denominator_;
    Poly f_;
    Poly g_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    std::size_t kernel_size = 0;
};

ValidationReport validate(const LinearizedCurve& curve);
/// Throws std::invalid_argument listing the failures when the curve is invalid.
void require_valid(const LinearizedCurve& curve);

struct CurvePlace {
    enum class Kind { Q, Infinity, R };
    Kind kind;
    std::size_t index = 0;

    static CurvePlace Q(std::size_t i) { return {Kind::Q, i}; }
    static CurvePlace infinity() { return {Kind::Infinity, 0}; }
    static CurvePlace R(std::size_t j) { return {Kind::R, j}; }
    friend bool operator==(const CurvePlace&, const CurvePlace&) = default;
};

std::int64_t place_degree(const LinearizedCurve& curve, const CurvePlace& place);

/// y^k x^e_inf prod p_i^e_i
struct Monomial {
    std::int64_t k = 0;
    std::int64_t e_inf = 0;
    std::vector<std::int64_t> e;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial constant_monomial(const LinearizedCurve& curve);

/// Exact valuation of the monomial at a distinguished place.
std::int64_t valuation(const LinearizedCurve& curve, const Monomial& mono, const CurvePlace& place);

/// Genus from the stabilised gap count m + 1 - l(m Q_inf).
std::int64_t genus_infer(const LinearizedCurve& curve);

}  // namespace gag

#endif  // GAG_CURVE_HPP
