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

#include "gag/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gag/riemann_roch.hpp"

namespace gag {

namespace {

const GaloisField& field_of(const std::vector<Element>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("L needs at least one coefficient");
    return coeffs.front().field();
}

// Factors every input into monic irreducibles, merges repeats and returns
// the product of the leading coefficients raised to their multiplicities.
std::vector<PolyFactor> normalise(const GaloisField& K, const std::vector<FactorInput>& input, Element& lead) {
    std::vector<PolyFactor> out;
    for (const auto& fi : input) {
        if (&fi.poly.field() != &K) throw std::invalid_argument("factor polynomial is not over the constant field");
        if (fi.multiplicity <= 0) throw std::invalid_argument("factor multiplicity must be positive");
        if (fi.poly.is_zero()) throw std::invalid_argument("zero factor");
        lead = lead * fi.poly.leading().pow(fi.multiplicity);
        if (fi.poly.degree() == 0) continue;
        for (auto& pf : factor(fi.poly)) out.push_back({pf.poly, pf.multiplicity * fi.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.poly < b.poly; });
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().poly == pf.poly)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(std::move(pf));
    }
    return merged;
}

Poly expand(const GaloisField& K, const std::vector<PolyFactor>& factors) {
    Poly out = Poly::constant(K.one());
    for (const auto& pf : factors) out = out * pf.poly.pow(static_cast<std::uint64_t>(pf.multiplicity));
    return out;
}

}  // namespace

LinearizedCurve::LinearizedCurve(std::uint64_t q, unsigned n, std::vector<Element> L_coeffs,
                                 std::vector<FactorInput> numerator, std::vector<FactorInput> denominator)
    : K_(&field_of(L_coeffs)), n_(n), L_(q, std::move(L_coeffs)), f_(*K_), g_(*K_) {
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    if (n == 0 || qn != K_->size())
        throw std::invalid_argument("L coefficients must lie in GF(q^n) = GF(" + std::to_string(q) + "^" +
                                    std::to_string(n) + ")");
    Element num_lead = K_->one(), den_lead = K_->one();
    numerator_ = normalise(*K_, numerator, num_lead);
    denominator_ = normalise(*K_, denominator, den_lead);
    f_ = expand(*K_, numerator_) * (num_lead / den_lead);
    g_ = expand(*K_, denominator_);
}

bool LinearizedCurve::p_is_x(std::size_t i) const { return denominator_.at(i).poly == Poly::x(*K_); }
bool LinearizedCurve::q_is_x(std::size_t j) const { return numerator_.at(j).poly == Poly::x(*K_); }

std::string LinearizedCurve::describe() const {
    std::ostringstream os;
    os << "q=" << q() << " n=" << n() << " r=" << r() << " q^r=" << qr() << " d=" << d() << " s=" << s()
       << " m=" << m();
    return os.str();
}

ValidationReport validate(const LinearizedCurve& curve) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(std::move(msg));
    };
    const auto& L = curve.L();
    const std::uint32_t p = curve.characteristic();
    if (L.r() == 0) fail("r must be at least 1");
    if (L.coeffs().front().is_zero()) fail("a_0 is zero");
    if (L.coeffs().back().is_zero()) fail("a_r is zero");
    if (!rep.failures.empty()) return rep;

    rep.kernel_size = lin_kernel(L, curve.constant_field()).size();
    if (static_cast<std::int64_t>(rep.kernel_size) != curve.qr())
        fail("L has " + std::to_string(rep.kernel_size) + " roots in K, expected q^r = " + std::to_string(curve.qr()));

    for (const auto& nf : curve.numerator())
        for (const auto& df : curve.denominator())
            if (nf.poly == df.poly) fail("f and g share an irreducible factor");

    const std::int64_t d = curve.d();
    if (d <= 0) fail("d = deg f - deg g = " + std::to_string(d) + " must be positive");
    else if (d % p == 0) fail("d = " + std::to_string(d) + " is not coprime to the characteristic " + std::to_string(p));

    for (std::size_t i = 0; i < curve.s(); ++i) {
        const auto& pf = curve.denominator()[i];
        if (pf.multiplicity % static_cast<int>(p) == 0)
            fail("n_" + std::to_string(i + 1) + " = " + std::to_string(pf.multiplicity) +
                 " is not coprime to the characteristic");
        if (!pf.poly.is_monic() || !is_irreducible(pf.poly)) fail("p_" + std::to_string(i + 1) + " is not monic irreducible");
        if (i > 0 && curve.denominator()[i - 1].poly == pf.poly) fail("p_i are not pairwise distinct");
    }
    for (std::size_t j = 0; j < curve.m(); ++j) {
        const auto& qf = curve.numerator()[j];
        if (!qf.poly.is_monic() || !is_irreducible(qf.poly)) fail("q_" + std::to_string(j + 1) + " is not monic irreducible");
        if (j > 0 && curve.numerator()[j - 1].poly == qf.poly) fail("q_j are not pairwise distinct");
    }
    rep.notes.push_back("m_j are not required to be coprime to the characteristic (unchecked assumption)");
    return rep;
}

void require_valid(const LinearizedCurve& curve) {
    auto rep = validate(curve);
    if (rep.ok) return;
    std::string msg = "invalid curve:";
    for (const auto& f : rep.failures) msg += " " + f + ";";
    throw std::invalid_argument(msg);
}

std::int64_t place_degree(const LinearizedCurve& curve, const CurvePlace& place) {
    switch (place.kind) {
        case CurvePlace::Kind::Q:
            return curve.deg_p(place.index);
        case CurvePlace::Kind::Infinity:
            return 1;
        case CurvePlace::Kind::R:
            return curve.numerator().at(place.index).poly.degree();
    }
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("monomials over different curves");
    Monomial out{a.k + b.k, a.e_inf + b.e_inf, a.e};
    for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i];
    return out;
}

Monomial constant_monomial(const LinearizedCurve& curve) { return Monomial{0, 0, std::vector<std::int64_t>(curve.s(), 0)}; }

std::int64_t valuation(const LinearizedCurve& curve, const Monomial& mono, const CurvePlace& place) {
    if (mono.e.size() != curve.s()) throw std::invalid_argument("monomial exponent vector does not match s");
    const std::int64_t qr = curve.qr();
    switch (place.kind) {
        case CurvePlace::Kind::Q: {
            const std::size_t i = place.index;
            if (i >= curve.s()) throw std::out_of_range("Q_i index out of range");
            const std::int64_t vx = curve.p_is_x(i) ? qr : 0;
            return -mono.k * curve.n_i(i) + mono.e_inf * vx + qr * mono.e[i];
        }
        case CurvePlace::Kind::Infinity: {
            std::int64_t v = -mono.k * curve.d() - qr * mono.e_inf;
            for (std::size_t i = 0; i < curve.s(); ++i) v -= qr * curve.deg_p(i) * mono.e[i];
            return v;
        }
        case CurvePlace::Kind::R: {
            const std::size_t j = place.index;
            if (j >= curve.m()) throw std::out_of_range("R_j index out of range");
            const std::int64_t vx = curve.q_is_x(j) ? 1 : 0;
            return mono.k * curve.numerator()[j].multiplicity + mono.e_inf * vx;
        }
    }
    return 0;
}

std::int64_t genus_infer(const LinearizedCurve& curve) {
    require_valid(curve);
    const std::int64_t qr = curve.qr();
    const std::int64_t window = 2 * qr;
    const std::int64_t limit = 64 * qr * std::max<std::int64_t>(curve.f().degree(), qr);
    Divisor G = Divisor::zero(curve);
    std::int64_t best = 0, run = 0, prev_gap = -1, prev_dim = 0;
    for (std::int64_t m = 0; m <= limit; ++m) {
        G.b_inf = m;
        const std::int64_t dim = rr_dim(curve, G);
        const std::int64_t gap = m + 1 - dim;
        best = std::max(best, gap);
        if (m > 0 && gap == prev_gap && dim == prev_dim + 1)
            ++run;
        else
            run = 0;
        if (run >= window) return best;
        prev_gap = gap;
        prev_dim = dim;
    }
    throw std::runtime_error("genus inference did not converge; descriptor is inconsistent");
}

}  // namespace gag
