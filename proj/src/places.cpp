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

#include "gag/places.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>

namespace gag {

namespace {

// Everything needed to examine one alpha of K_D.
class PlaceScanner {
   public:
    PlaceScanner(const LinearizedCurve& curve, unsigned D)
        : K_(curve.constant_field()),
          KD_(residue_field(curve, D)),
          D_(D),
          Q_(K_.size()),
          solver_(curve.L(), KD_),
          f_(curve.f().embed(KD_)),
          g_(curve.g().embed(KD_)),
          emb_(embedding(K_, KD_)) {}

    const GaloisField& field() const noexcept { return KD_; }

    void scan(Code a, std::vector<EvaluationPlace>& out) const {
        const Element alpha(KD_, a);
        // alpha must be the least element of its K-conjugacy class
        std::vector<Element> conj{alpha};
        for (Element c = frob(alpha); c != alpha; c = frob(c)) {
            if (c.code() < a) return;
            conj.push_back(c);
        }
        const unsigned delta = static_cast<unsigned>(conj.size());
        const Element ga = g_.eval(alpha);
        if (ga.is_zero()) return;
        const auto betas = solver_.solve(f_.eval(alpha) / ga);
        if (betas.empty()) return;
        const unsigned beta_deg = orbit_size(betas.front(), 1);
        if (std::lcm(delta, beta_deg) != D_) return;

        Poly mp = Poly::constant(KD_.one());
        for (const auto& c : conj) mp = mp * Poly(KD_, std::vector<Code>{KD_.neg(c.code()), 1});
        std::vector<Code> coeffs;
        for (Code c : mp.codes()) coeffs.push_back(*emb_.preimage(c));
        const Poly min_poly(K_, std::move(coeffs));

        // betas are sorted, so the first unseen member of each orbit is its least
        std::vector<bool> seen(betas.size(), false);
        for (std::size_t i = 0; i < betas.size(); ++i) {
            if (seen[i]) continue;
            Element b = betas[i];
            do {
                auto it = std::lower_bound(betas.begin(), betas.end(), b);
                seen[static_cast<std::size_t>(it - betas.begin())] = true;
                b = frob(b, delta);
            } while (b != betas[i]);
            out.push_back(EvaluationPlace{D_, delta, min_poly, alpha, betas[i]});
        }
    }

   private:
    Element frob(const Element& t, unsigned times = 1) const {
        Code c = t.code();
        for (unsigned i = 0; i < times; ++i) c = KD_.pow(c, Q_);
        return Element(KD_, c);
    }

    unsigned orbit_size(const Element& t, unsigned step) const {
        unsigned n = 1;
        for (Element c = frob(t, step); c != t; c = frob(c, step)) ++n;
        return n;
    }

    const GaloisField& K_;
    const GaloisField& KD_;
    unsigned D_;
    std::uint64_t Q_;
    LinearizedSolver solver_;
    Poly f_;
    Poly g_;
    const Embedding& emb_;
};

}  // namespace

const GaloisField& residue_field(const LinearizedCurve& curve, unsigned D) {
    if (D == 0) throw std::invalid_argument("place degree must be positive");
    const GaloisField& K = curve.constant_field();
    return GaloisField::get(K.characteristic(), K.degree() * D);
}

std::vector<EvaluationPlace> places_of_degree_serial(const LinearizedCurve& curve, unsigned D) {
    const PlaceScanner scanner(curve, D);
    std::vector<EvaluationPlace> out;
    for (Code a = 0; a < scanner.field().size(); ++a) scanner.scan(a, out);
    return out;
}

std::vector<EvaluationPlace> places_of_degree(const LinearizedCurve& curve, unsigned D) {
    const PlaceScanner scanner(curve, D);
    const Code size = scanner.field().size();
    const std::int64_t chunk = 1024;
    const std::int64_t chunks = static_cast<std::int64_t>((size + chunk - 1) / chunk);
    std::vector<std::vector<EvaluationPlace>> parts(static_cast<std::size_t>(chunks));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
        try {
            const Code lo = static_cast<Code>(c * chunk);
            const Code hi = std::min<Code>(size, lo + chunk);
            for (Code a = lo; a < hi; ++a) scanner.scan(a, parts[static_cast<std::size_t>(c)]);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    std::vector<EvaluationPlace> out;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

PlaceInventory enumerate_places(const LinearizedCurve& curve, unsigned max_degree) {
    if (max_degree < 1 || max_degree > 3) throw std::invalid_argument("max_degree must be 1, 2 or 3");
    PlaceInventory inv;
    inv.max_degree = max_degree;
    for (unsigned D = 1; D <= max_degree; ++D) inv.by_degree.push_back(places_of_degree(curve, D));
    return inv;
}

std::vector<EvaluationPlace> first_places(const LinearizedCurve& curve, unsigned D, std::size_t count) {
    const PlaceScanner scanner(curve, D);
    std::vector<EvaluationPlace> out;
    for (Code a = 0; a < scanner.field().size() && out.size() < count; ++a) scanner.scan(a, out);
    if (out.size() < count)
        throw std::runtime_error("only " + std::to_string(out.size()) + " places of degree " + std::to_string(D) +
                                 " exist, " + std::to_string(count) + " requested");
    out.resize(count);
    return out;
}

Element evaluate(const LinearizedCurve& curve, const Monomial& mono, const EvaluationPlace& place) {
    if (mono.e.size() != curve.s()) throw std::invalid_argument("monomial exponent vector does not match s");
    const GaloisField& R = place.residue_field();
    if (&R != &residue_field(curve, place.degree)) throw std::invalid_argument("place is not on this curve");
    Element out = place.beta.pow(mono.k) * place.alpha.pow(mono.e_inf);
    for (std::size_t i = 0; i < curve.s(); ++i) {
        if (mono.e[i] == 0) continue;
        const Element v = curve.denominator()[i].poly.eval(place.alpha);
        if (v.is_zero()) throw std::invalid_argument("evaluation at a ramified place");
        out *= v.pow(mono.e[i]);
    }
    return out;
}

std::size_t rational_place_count(const LinearizedCurve& curve) {
    std::size_t count = places_of_degree(curve, 1).size() + 1;
    for (std::size_t i = 0; i < curve.s(); ++i)
        if (curve.deg_p(i) == 1) ++count;
    return count;
}

}  // namespace gag
