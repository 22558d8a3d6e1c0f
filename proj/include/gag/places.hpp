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

#ifndef GAG_PLACES_HPP
#define GAG_PLACES_HPP

#include <cstddef>
#include <vector>

#include "gag/curve.hpp"

namespace gag {

/// An unramified finite place of F, stored as the least (alpha, beta) pair
/// of its Frobenius orbit. alpha and beta live in the residue field K_degree.
struct EvaluationPlace {
    unsigned degree = 0;
    /// Degree of alpha over K.
    unsigned x_degree = 0;
    /// Minimal polynomial of alpha over K.
    Poly min_poly;
    Element alpha;
    Element beta;

    const GaloisField& residue_field() const { return alpha.field(); }

    friend bool operator==(const EvaluationPlace& a, const EvaluationPlace& b) {
        return a.degree == b.degree && a.alpha == b.alpha && a.beta == b.beta;
    }
};

struct PlaceInventory {
    unsigned max_degree = 0;
    /// by_degree[D - 1] holds the places of degree D, sorted by (alpha, beta).
    std::vector<std::vector<EvaluationPlace>> by_degree;

    const std::vector<EvaluationPlace>& of_degree(unsigned D) const { return by_degree.at(D - 1); }
    std::size_t count(unsigned D) const { return of_degree(D).size(); }
};

/// Residue field K_D = GF(q^{nD}) of a degree-D place.
const GaloisField& residue_field(const LinearizedCurve& curve, unsigned D);

/// All places of degree exactly D, one alpha at a time.
std::vector<EvaluationPlace> places_of_degree_serial(const LinearizedCurve& curve, unsigned D);
/// Same result, alpha range split across OpenMP threads.
std::vector<EvaluationPlace> places_of_degree(const LinearizedCurve& curve, unsigned D);

/// Degrees 1..max_degree, max_degree at most 3.
PlaceInventory enumerate_places(const LinearizedCurve& curve, unsigned max_degree);

/// The first `count` places of degree D in canonical order, scanning alpha
/// lazily. Works for any D whose residue field is representable; throws
/// std::runtime_error when fewer places exist.
std::vector<EvaluationPlace> first_places(const LinearizedCurve& curve, unsigned D, std::size_t count);

/// mono(P) in the residue field; throws on a ramified or non-finite place.
Element evaluate(const LinearizedCurve& curve, const Monomial& mono, const EvaluationPlace& place);

/// Degree-1 places of F, the ramified rational ones included.
std::size_t rational_place_count(const LinearizedCurve& curve);

}  // namespace gag

#endif  // GAG_PLACES_HPP
