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

#ifndef GAG_CODES_HPP
#define GAG_CODES_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gag/oracle.hpp"
#include "gag/places.hpp"
#include "gag/riemann_roch.hpp"

namespace gag {

/// An [n, k, d] linear code over K given by a k x n generator matrix.
struct InnerCode {
    enum class Kind { Identity, Parity, ReedSolomon, Custom };

    Kind kind = Kind::Custom;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    Matrix generator;

    std::string label() const;
};

const char* to_string(InnerCode::Kind kind);

/// [k, k, 1]
InnerCode inner_identity(const GaloisField& K, std::size_t k);
/// [k + 1, k, 2] with generator [I | 1]
InnerCode inner_parity(const GaloisField& K, std::size_t k);
/// [n, k, n - k + 1]: polynomials of degree < k evaluated at the elements
/// with codes 0..n-1.
InnerCode inner_rs(const GaloisField& K, std::size_t n, std::size_t k);
/// Declared parameters are checked: rank must equal k, and d is compared to
/// the brute-force distance whenever |K|^k fits the oracle budget.
InnerCode inner_custom(std::size_t d, Matrix generator);

/// K-linear isomorphism from K_k onto an inner code: power-basis coordinates
/// over {1, w, ..., w^(k-1)}, w the generator of K_k, times the generator matrix.
class PiMap {
   public:
    PiMap(const GaloisField& K, const GaloisField& source, InnerCode code);

    const GaloisField& source() const noexcept { return *source_; }
    const InnerCode& code() const noexcept { return code_; }

    /// Coordinates of v over K in the power basis.
    std::vector<Code> coordinates(const Element& v) const;
    std::vector<Code> apply(const Element& v) const;

   private:
    const GaloisField* K_;
    const GaloisField* source_;
    InnerCode code_;
    std::vector<Code> k_basis_images_;
    std::vector<Code> power_basis_;
    PrimeSolver solver_;
};

struct PlacedBlock {
    EvaluationPlace place;
    PiMap pi;
};

struct GagCodeSpec {
    std::shared_ptr<const LinearizedCurve> curve;
    Divisor G;
    std::vector<PlacedBlock> blocks;
    std::int64_t genus = 0;

    std::int64_t deg_D() const;
    std::int64_t length() const;
    std::int64_t sum_d() const;
    /// (k_i, d_i) per block.
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs() const;
};

/// Pairs each place with an inner code; throws when a code's dimension is
/// not the place degree.
GagCodeSpec make_spec(std::shared_ptr<const LinearizedCurve> curve, Divisor G,
                      const std::vector<std::pair<EvaluationPlace, InnerCode>>& blocks, std::int64_t genus);

class HypothesisError : public std::runtime_error {
   public:
    explicit HypothesisError(std::vector<std::string> failed);
    const std::vector<std::string>& failed() const noexcept { return failed_; }

   private:
    std::vector<std::string> failed_;
};

struct ParamCertificate {
    std::string code;   // "C_L" or "C_Omega"
    std::string bound;  // "cl_designed", "omega_designed", "picone", "improved"
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d_lower = 0;
    bool vacuous = false;
    bool degenerate = false;
    std::int64_t genus = 0;
    std::int64_t deg_G = 0;
    std::int64_t deg_D = 0;
    std::int64_t deg_Z = 0;
    std::int64_t i_A = 0;
    std::int64_t i_G_minus_C = 0;
    std::int64_t threshold = 0;
    std::int64_t sum_d = 0;
    std::int64_t subset_max = 0;
    std::vector<std::string> notes;
};

/// Rows are the rr_basis monomials of G, columns the concatenated pi-images.
Matrix generator_matrix_serial(const GagCodeSpec& spec);
Matrix generator_matrix(const GagCodeSpec& spec);

struct BuiltCode {
    Matrix generator;
    ParamCertificate certificate;
};

BuiltCode build_CL(const GagCodeSpec& spec);

/// max sum d_i over subsets with sum k_i <= T; 0 when T < 0.
std::int64_t subset_max(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, std::int64_t T);

/// rank of the evaluation map l(G) - l(G - D): l(G) when deg G < deg D,
/// otherwise the rank of the generator matrix.
std::int64_t evaluation_rank(const GagCodeSpec& spec);

ParamCertificate cl_params(const GagCodeSpec& spec);
ParamCertificate comega_params(const GagCodeSpec& spec);

/// Throws HypothesisError naming every failed hypothesis.
std::int64_t picone_bound(const Divisor& A, const Divisor& B, const Divisor& C, const Divisor& Z,
                          const GagCodeSpec& spec);
ParamCertificate improved_bound(const Divisor& A, const Divisor& B, const Divisor& C, const Divisor& Z,
                                const GagCodeSpec& spec);

struct AbzRecipe {
    Divisor B;
    Divisor Z;
    Divisor G;
    std::vector<std::string> report;
};

AbzRecipe abz_recipe(const LinearizedCurve& curve, const Divisor& A, const Divisor& R);

}  // namespace gag

#endif  // GAG_CODES_HPP
