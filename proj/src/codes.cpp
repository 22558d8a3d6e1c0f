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

#include "gag/codes.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

namespace gag {

const char* to_string(InnerCode::Kind kind) {
    switch (kind) {
        case InnerCode::Kind::Identity:
            return "identity";
        case InnerCode::Kind::Parity:
            return "parity";
        case InnerCode::Kind::ReedSolomon:
            return "rs";
        case InnerCode::Kind::Custom:
            return "custom";
    }
    return "custom";
}

std::string InnerCode::label() const {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

InnerCode inner_identity(const GaloisField& K, std::size_t k) {
    if (k == 0) throw std::invalid_argument("identity code needs k >= 1");
    Matrix G(K, k, k);
    for (std::size_t i = 0; i < k; ++i) G.at(i, i) = 1;
    return InnerCode{InnerCode::Kind::Identity, k, k, 1, std::move(G)};
}

InnerCode inner_parity(const GaloisField& K, std::size_t k) {
    if (k == 0) throw std::invalid_argument("parity code needs k >= 1");
    Matrix G(K, k, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        G.at(i, i) = 1;
        G.at(i, k) = 1;
    }
    return InnerCode{InnerCode::Kind::Parity, k + 1, k, 2, std::move(G)};
}

InnerCode inner_rs(const GaloisField& K, std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw std::invalid_argument("rs code needs 1 <= k <= n");
    if (n > K.size()) throw std::invalid_argument("rs code length exceeds the field size");
    Matrix G(K, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Code power = 1;
        for (std::size_t i = 0; i < k; ++i) {
            G.at(i, j) = power;
            power = K.mul(power, static_cast<Code>(j));
        }
    }
    return InnerCode{InnerCode::Kind::ReedSolomon, n, k, n - k + 1, std::move(G)};
}

InnerCode inner_custom(std::size_t d, Matrix generator) {
    if (generator.field == nullptr || generator.rows == 0) throw std::invalid_argument("custom code needs a generator");
    if (rank(generator) != generator.rows) throw std::invalid_argument("custom generator does not have full row rank");
    std::uint64_t messages = 1;
    bool small = true;
    for (std::size_t i = 0; i < generator.rows && small; ++i) {
        if (messages > kBruteForceBudget / generator.field->size()) small = false;
        messages *= generator.field->size();
    }
    if (small && min_distance_bruteforce(generator) != d)
        throw std::invalid_argument("custom code: declared d = " + std::to_string(d) + " is not its minimum distance");
    const std::size_t n = generator.cols, k = generator.rows;
    return InnerCode{InnerCode::Kind::Custom, n, k, d, std::move(generator)};
}

namespace {

PrimeSolver power_basis_solver(const GaloisField& K, const GaloisField& source, std::vector<Code>& kimg,
                               std::vector<Code>& power) {
    if (!K.embeds_into(source)) throw std::invalid_argument("residue field does not contain K");
    const unsigned a = K.degree();
    const unsigned m = source.degree();
    const unsigned k = m / a;
    const Embedding& emb = embedding(K, source);
    Code basis = 1;
    for (unsigned t = 0; t < a; ++t, basis *= K.characteristic()) kimg.push_back(emb.map(basis));
    const Code w = source.generator().code();
    Code wp = 1;
    for (unsigned j = 0; j < k; ++j, wp = source.mul(wp, w)) power.push_back(wp);
    std::vector<std::uint32_t> matrix(std::size_t{m} * m);
    for (unsigned j = 0; j < k; ++j)
        for (unsigned t = 0; t < a; ++t) {
            const auto col = source.coords(source.mul(kimg[t], power[j]));
            for (unsigned r = 0; r < m; ++r) matrix[r * m + (j * a + t)] = col[r];
        }
    return PrimeSolver(K.characteristic(), m, m, std::move(matrix));
}

}  // namespace

PiMap::PiMap(const GaloisField& K, const GaloisField& source, InnerCode code)
    : K_(&K), source_(&source), code_(std::move(code)), solver_(power_basis_solver(K, source, k_basis_images_, power_basis_)) {
    if (code_.generator.field != &K) throw std::invalid_argument("inner code is not over K");
    if (power_basis_.size() != code_.k)
        throw std::invalid_argument("inner code dimension " + std::to_string(code_.k) + " differs from the place degree " +
                                    std::to_string(power_basis_.size()));
    if (solver_.rank() != source.degree()) throw std::logic_error("power basis is not a basis");
}

std::vector<Code> PiMap::coordinates(const Element& v) const {
    if (&v.field() != source_) throw std::invalid_argument("field mismatch");
    const auto x = solver_.solve(v.coords());
    const unsigned a = K_->degree();
    std::vector<Code> out(code_.k);
    for (std::size_t j = 0; j < code_.k; ++j)
        out[j] = K_->encode(std::span<const std::uint32_t>(x->data() + j * a, a));
    return out;
}

std::vector<Code> PiMap::apply(const Element& v) const {
    const auto c = coordinates(v);
    std::vector<Code> out(code_.n, 0);
    for (std::size_t j = 0; j < code_.k; ++j) {
        if (c[j] == 0) continue;
        for (std::size_t t = 0; t < code_.n; ++t)
            out[t] = K_->add(out[t], K_->mul(c[j], code_.generator.at(j, t)));
    }
    return out;
}

std::int64_t GagCodeSpec::deg_D() const {
    std::int64_t s = 0;
    for (const auto& b : blocks) s += b.place.degree;
    return s;
}

std::int64_t GagCodeSpec::length() const {
    std::int64_t s = 0;
    for (const auto& b : blocks) s += static_cast<std::int64_t>(b.pi.code().n);
    return s;
}

std::int64_t GagCodeSpec::sum_d() const {
    std::int64_t s = 0;
    for (const auto& b : blocks) s += static_cast<std::int64_t>(b.pi.code().d);
    return s;
}

std::vector<std::pair<std::int64_t, std::int64_t>> GagCodeSpec::pairs() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& b : blocks)
        out.emplace_back(static_cast<std::int64_t>(b.pi.code().k), static_cast<std::int64_t>(b.pi.code().d));
    return out;
}

GagCodeSpec make_spec(std::shared_ptr<const LinearizedCurve> curve, Divisor G,
                      const std::vector<std::pair<EvaluationPlace, InnerCode>>& blocks, std::int64_t genus) {
    if (!curve) throw std::invalid_argument("spec needs a curve");
    if (blocks.empty()) throw std::invalid_argument("spec needs at least one place");
    if (G.a.size() != curve->s()) throw std::invalid_argument("divisor does not match the curve");
    GagCodeSpec spec{curve, std::move(G), {}, genus};
    const GaloisField& K = curve->constant_field();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& [place, code] = blocks[i];
        if (code.k != place.degree)
            throw std::invalid_argument("block " + std::to_string(i) + ": inner code " + code.label() +
                                        " has k != place degree " + std::to_string(place.degree));
        spec.blocks.push_back(PlacedBlock{place, PiMap(K, place.residue_field(), code)});
    }
    return spec;
}

HypothesisError::HypothesisError(std::vector<std::string> failed)
    : std::runtime_error([&] {
          std::string msg = "hypothesis failed:";
          for (const auto& f : failed) msg += " " + f + ";";
          return msg;
      }()),
      failed_(std::move(failed)) {}

namespace {

void fill_row(const GagCodeSpec& spec, const Monomial& mono, Matrix& M, std::size_t row) {
    std::size_t col = 0;
    for (const auto& b : spec.blocks) {
        const auto word = b.pi.apply(evaluate(*spec.curve, mono, b.place));
        for (Code c : word) M.at(row, col++) = c;
    }
}

void check_buildable(const GagCodeSpec& spec) {
    if (!spec.curve) throw std::invalid_argument("spec needs a curve");
    if (spec.blocks.empty()) throw std::invalid_argument("spec needs at least one place");
}

}  // namespace

Matrix generator_matrix_serial(const GagCodeSpec& spec) {
    check_buildable(spec);
    const RRBasis basis = rr_basis(*spec.curve, spec.G);
    Matrix M(spec.curve->constant_field(), basis.members.size(), static_cast<std::size_t>(spec.length()));
    for (std::size_t r = 0; r < basis.members.size(); ++r) fill_row(spec, basis.members[r], M, r);
    return M;
}

Matrix generator_matrix(const GagCodeSpec& spec) {
    check_buildable(spec);
    const RRBasis basis = rr_basis(*spec.curve, spec.G);
    Matrix M(spec.curve->constant_field(), basis.members.size(), static_cast<std::size_t>(spec.length()));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(basis.members.size()); ++r) {
        try {
            fill_row(spec, basis.members[static_cast<std::size_t>(r)], M, static_cast<std::size_t>(r));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return M;
}

std::int64_t subset_max(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, std::int64_t T) {
    if (T < 0) return 0;
    std::int64_t total_k = 0;
    for (const auto& [k, d] : pairs) {
        if (k < 0) throw std::invalid_argument("negative weight in subset_max");
        total_k += k;
    }
    const auto budget = static_cast<std::size_t>(std::min(T, total_k));
    std::vector<std::int64_t> best(budget + 1, 0);
    for (const auto& [k, d] : pairs) {
        const auto w = static_cast<std::size_t>(k);
        if (w > budget) continue;
        for (std::size_t b = budget + 1; b-- > w;) best[b] = std::max(best[b], best[b - w] + d);
    }
    return best[budget];
}

std::int64_t evaluation_rank(const GagCodeSpec& spec) {
    if (divisor_degree(*spec.curve, spec.G) < spec.deg_D()) return rr_dim(*spec.curve, spec.G);
    return static_cast<std::int64_t>(rank(generator_matrix(spec)));
}

namespace {

ParamCertificate base_certificate(const GagCodeSpec& spec, const char* code, const char* bound) {
    ParamCertificate c;
    c.code = code;
    c.bound = bound;
    c.n = spec.length();
    c.genus = spec.genus;
    c.deg_G = divisor_degree(*spec.curve, spec.G);
    c.deg_D = spec.deg_D();
    c.sum_d = spec.sum_d();
    return c;
}

void finish_distance(ParamCertificate& c, const GagCodeSpec& spec, std::int64_t T) {
    c.threshold = T;
    c.subset_max = subset_max(spec.pairs(), T);
    c.d_lower = c.sum_d - c.subset_max;
    if (c.d_lower <= 0) {
        c.vacuous = true;
        c.d_lower = 1;
        c.notes.push_back("bound is vacuous; clamped to 1");
    }
}

ParamCertificate cl_from_rank(const GagCodeSpec& spec, std::int64_t rank_value) {
    ParamCertificate c = base_certificate(spec, "C_L", "cl_designed");
    c.k = rank_value;
    if (c.deg_G < c.deg_D) c.notes.push_back("deg G < deg D, so k = l(G)");
    c.degenerate = c.k == 0;
    finish_distance(c, spec, c.deg_G);
    return c;
}

}  // namespace

BuiltCode build_CL(const GagCodeSpec& spec) {
    BuiltCode out{generator_matrix(spec), {}};
    const auto r = static_cast<std::int64_t>(rank(out.generator));
    const std::int64_t deg_G = divisor_degree(*spec.curve, spec.G);
    if (deg_G < spec.deg_D() && r != rr_dim(*spec.curve, spec.G))
        throw std::logic_error("generator rank " + std::to_string(r) + " differs from l(G) although deg G < deg D");
    out.certificate = cl_from_rank(spec, r);
    return out;
}

ParamCertificate cl_params(const GagCodeSpec& spec) { return cl_from_rank(spec, evaluation_rank(spec)); }

namespace {

ParamCertificate omega_dimension(const GagCodeSpec& spec) {
    ParamCertificate c = base_certificate(spec, "C_Omega", "omega_designed");
    c.k = c.deg_D - evaluation_rank(spec);
    const std::int64_t g = spec.genus;
    if (2 * g - 2 < c.deg_G && c.deg_G < c.deg_D) {
        const std::int64_t exact = c.deg_D + g - 1 - c.deg_G;
        if (c.k != exact)
            throw std::logic_error("C_Omega dimension " + std::to_string(c.k) + " differs from deg D + g - 1 - deg G = " +
                                   std::to_string(exact) + "; the genus is probably wrong");
        c.notes.push_back("2g-2 < deg G < deg D, so k = deg D + g - 1 - deg G");
    }
    if (c.k <= 0) {
        c.degenerate = true;
        c.notes.push_back("code is the zero code");
    }
    return c;
}

}  // namespace

ParamCertificate comega_params(const GagCodeSpec& spec) {
    ParamCertificate c = omega_dimension(spec);
    finish_distance(c, spec, c.deg_D - c.deg_G + 2 * spec.genus - 2);
    return c;
}

namespace {

void require_sum(const GagCodeSpec& spec, const Divisor& A, const Divisor& B, std::vector<std::string>& failed) {
    if (A + B != spec.G) failed.push_back("G = A + B (A + B = " + (A + B).str() + ", G = " + spec.G.str() + ")");
}

}  // namespace

std::int64_t picone_bound(const Divisor& A, const Divisor& B, const Divisor& C, const Divisor& Z,
                          const GagCodeSpec& spec) {
    const LinearizedCurve& curve = *spec.curve;
    std::vector<std::string> failed;
    require_sum(spec, A, B, failed);
    if (!same_space(curve, A, A - Z)) failed.push_back("L(A) = L(A - Z)");
    if (!same_space(curve, B, B + Z)) failed.push_back("L(B) = L(B + Z)");
    if (!same_space(curve, B + Z, C)) failed.push_back("L(B + Z) = L(C)");
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
        const InnerCode& code = spec.blocks[i].pi.code();
        if (code.d < code.k) failed.push_back("d_i >= k_i at block " + std::to_string(i) + " " + code.label());
    }
    if (!failed.empty()) throw HypothesisError(std::move(failed));
    const std::int64_t g = spec.genus;
    const Divisor& G = spec.G;
    return divisor_degree(curve, G) - (2 * g - 2) + divisor_degree(curve, Z) - index_of_specialty(curve, A, g) +
           index_of_specialty(curve, G - C, g);
}

ParamCertificate improved_bound(const Divisor& A, const Divisor& B, const Divisor& C, const Divisor& Z,
                                const GagCodeSpec& spec) {
    const LinearizedCurve& curve = *spec.curve;
    std::vector<std::string> failed;
    require_sum(spec, A, B, failed);
    if (!same_space(curve, A, A - Z)) failed.push_back("L(A) = L(A - Z)");
    if (!same_space(curve, B, B + Z)) failed.push_back("L(B) = L(B + Z)");
    const bool componentwise = (B + Z).leq(C);
    if (!space_contained(curve, B + Z, C)) failed.push_back("L(B + Z) is contained in L(C)");
    if (!failed.empty()) throw HypothesisError(std::move(failed));

    ParamCertificate c = omega_dimension(spec);
    c.bound = "improved";
    const std::int64_t g = spec.genus;
    c.deg_Z = divisor_degree(curve, Z);
    c.i_A = index_of_specialty(curve, A, g);
    c.i_G_minus_C = index_of_specialty(curve, spec.G - C, g);
    c.notes.push_back(componentwise ? "containment: B + Z <= C componentwise"
                                    : "containment: l(gcd(B + Z, C)) = l(B + Z)");
    finish_distance(c, spec, c.deg_D - c.deg_G - c.deg_Z + 2 * g - 2 - c.i_A + c.i_G_minus_C);
    return c;
}

AbzRecipe abz_recipe(const LinearizedCurve& curve, const Divisor& A, const Divisor& R) {
    if (rr_dim(curve, A) <= 0) throw std::invalid_argument("l(A) = 0");
    if (rr_dim(curve, R) <= 0) throw std::invalid_argument("l(R) = 0");
    AbzRecipe out;
    out.Z = A - rr_floor(curve, A);
    const Divisor ZR = R - rr_floor(curve, R);
    if (ZR != out.Z)
        throw HypothesisError({"A - floor(A) = R - floor(R) (" + out.Z.str() + " vs " + ZR.str() + ")"});
    out.B = rr_floor(curve, R);
    out.G = A + out.B;
    const std::int64_t lA = rr_dim(curve, A), lAZ = rr_dim(curve, A - out.Z);
    const std::int64_t lB = rr_dim(curve, out.B), lBZ = rr_dim(curve, out.B + out.Z);
    std::vector<std::string> failed;
    if (lA != lAZ) failed.push_back("l(A - Z) = l(A)");
    if (lB != lBZ) failed.push_back("l(B + Z) = l(B)");
    if (!failed.empty()) throw HypothesisError(std::move(failed));
    out.report.push_back("l(A - Z) = l(A) = " + std::to_string(lA));
    out.report.push_back("l(B + Z) = l(B) = " + std::to_string(lB));
    return out;
}

}  // namespace gag
