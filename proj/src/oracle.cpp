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

#include "gag/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace gag {

std::size_t rank(const Matrix& M) {
    if (M.rows == 0 || M.cols == 0) return 0;
    const GaloisField& K = *M.field;
    Matrix A = M;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
        std::size_t piv = r;
        while (piv < A.rows && A.at(piv, c) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
        const Code inv = K.inv(A.at(r, c));
        for (std::size_t j = c; j < A.cols; ++j) A.at(r, j) = K.mul(A.at(r, j), inv);
        for (std::size_t i = r + 1; i < A.rows; ++i) {
            const Code factor = A.at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < A.cols; ++j) A.at(i, j) = K.sub(A.at(i, j), K.mul(factor, A.at(r, j)));
        }
        ++r;
    }
    return r;
}

namespace {

// scaled[(i * |K| + c) * cols + j] = c * M[i][j]
class MessageWalker {
   public:
    explicit MessageWalker(const Matrix& M) : M_(M), K_(*M.field), q_(K_.size()) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (total > kBruteForceBudget / q_) throw std::length_error("brute-force budget exceeded");
            total *= q_;
        }
        scaled_.resize(M.rows * q_ * M.cols);
        for (std::size_t i = 0; i < M.rows; ++i)
            for (Code c = 0; c < q_; ++c)
                for (std::size_t j = 0; j < M.cols; ++j)
                    scaled_[(i * q_ + c) * M.cols + j] = K_.mul(c, M.at(i, j));
    }

    std::uint64_t q() const noexcept { return q_; }

    // Best weight over all completions of rows [row, rows) on top of `word`;
    // `any` records whether a nonzero message has been fixed so far.
    std::size_t walk(std::size_t row, std::vector<Code>& word, bool any) const {
        if (row == M_.rows) {
            if (!any) return kNone;
            const auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Code x) { return x != 0; }));
            return w == 0 ? kNone : w;
        }
        std::size_t best = kNone;
        std::vector<Code> next(word.size());
        for (Code c = 0; c < q_; ++c) {
            const Code* add = &scaled_[(row * q_ + c) * M_.cols];
            for (std::size_t j = 0; j < word.size(); ++j) next[j] = K_.add(word[j], add[j]);
            best = std::min(best, walk(row + 1, next, any || c != 0));
        }
        return best;
    }

    std::vector<Code> prefix_word(std::uint64_t prefix, std::size_t depth) const {
        std::vector<Code> word(M_.cols, 0);
        for (std::size_t i = depth; i-- > 0;) {
            const Code c = prefix % q_;
            prefix /= q_;
            const Code* add = &scaled_[(i * q_ + c) * M_.cols];
            for (std::size_t j = 0; j < word.size(); ++j) word[j] = K_.add(word[j], add[j]);
        }
        return word;
    }

    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

   private:
    const Matrix& M_;
    const GaloisField& K_;
    std::uint64_t q_;
    std::vector<Code> scaled_;
};

}  // namespace

std::size_t min_distance_bruteforce_serial(const Matrix& M) {
    if (M.rows == 0) return 0;
    const MessageWalker walker(M);
    std::vector<Code> word(M.cols, 0);
    const std::size_t best = walker.walk(0, word, false);
    return best == MessageWalker::kNone ? 0 : best;
}

std::size_t min_distance_bruteforce(const Matrix& M) {
    if (M.rows == 0) return 0;
    const MessageWalker walker(M);
    const std::size_t depth = std::min<std::size_t>(M.rows, 2);
    std::uint64_t prefixes = 1;
    for (std::size_t i = 0; i < depth; ++i) prefixes *= walker.q();
    std::size_t best = MessageWalker::kNone;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(prefixes); ++p) {
        auto word = walker.prefix_word(static_cast<std::uint64_t>(p), depth);
        best = std::min(best, walker.walk(depth, word, p != 0));
    }
    return best == MessageWalker::kNone ? 0 : best;
}

BasisReport verify_basis(const LinearizedCurve& curve, const Divisor& G, const RRBasis& basis) {
    BasisReport rep;
    auto fail = [&](std::string msg, std::optional<std::size_t> idx) {
        rep.ok = false;
        rep.failure = std::move(msg);
        rep.member = idx;
        return rep;
    };
    std::map<std::int64_t, std::size_t> at_infinity;
    for (std::size_t m = 0; m < basis.members.size(); ++m) {
        const Monomial& mono = basis.members[m];
        if (mono.k < 0 || mono.k >= curve.qr()) return fail("y exponent out of range", m);
        for (std::size_t i = 0; i < curve.s(); ++i)
            if (valuation(curve, mono, CurvePlace::Q(i)) < -G.a[i])
                return fail("pole at Q_" + std::to_string(i + 1) + " exceeds G", m);
        const std::int64_t v = valuation(curve, mono, CurvePlace::infinity());
        if (v < -G.b_inf) return fail("pole at Q_inf exceeds G", m);
        auto [it, fresh] = at_infinity.emplace(v, m);
        if (!fresh) return fail("valuation at Q_inf repeats member " + std::to_string(it->second), m);
    }
    const std::int64_t dim = rr_dim(curve, G);
    if (static_cast<std::int64_t>(basis.members.size()) != dim)
        return fail("basis has " + std::to_string(basis.members.size()) + " members, l(G) = " + std::to_string(dim),
                    std::nullopt);
    return rep;
}

}  // namespace gag
