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

#ifndef GAG_ORACLE_HPP
#define GAG_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gag/riemann_roch.hpp"

namespace gag {

/// Dense row-major matrix over one finite field.
struct Matrix {
    const GaloisField* field = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Code> data;

    Matrix() = default;
    Matrix(const GaloisField& K, std::size_t r, std::size_t c) : field(&K), rows(r), cols(c), data(r * c, 0) {}

    Code& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Code at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

std::size_t rank(const Matrix& M);

/// Messages are enumerated when |K|^rows is at most this.
inline constexpr std::uint64_t kBruteForceBudget = std::uint64_t{1} << 22;

/// Least Hamming weight of a nonzero codeword in the row space; 0 for the
/// zero code. Throws std::length_error when the budget is exceeded.
std::size_t min_distance_bruteforce_serial(const Matrix& M);
/// Same result, message prefixes split across OpenMP threads.
std::size_t min_distance_bruteforce(const Matrix& M);

struct BasisReport {
    bool ok = true;
    std::string failure;
    /// Index of the offending member, when there is one.
    std::optional<std::size_t> member;
};

/// Checks membership in L(G) at every Q_i and Q_inf, distinct valuations
/// at Q_inf, and that the count equals l(G).
BasisReport verify_basis(const LinearizedCurve& curve, const Divisor& G, const RRBasis& basis);

}  // namespace gag

#endif  // GAG_ORACLE_HPP
