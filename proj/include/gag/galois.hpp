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

#ifndef GAG_GALOIS_HPP
#define GAG_GALOIS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gag {

/// Integer encoding of a field element: sum of c_i * p^i over the
/// prime-field coordinates c_i in the power basis of the modulus.
/// Numeric order of codes is the canonical element order.
using Code = std::uint64_t;

class GaloisField;

class Element {
   public:
    Element() = default;
    Element(const GaloisField& field, Code code);

    const GaloisField& field() const;
    bool has_field() const noexcept { return field_ != nullptr; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator-() const;
    Element operator*(const Element& rhs) const;
    Element operator/(const Element& rhs) const;
    Element& operator+=(const Element& rhs) { return *this = *this + rhs; }
    Element& operator-=(const Element& rhs) { return *this = *this - rhs; }
    Element& operator*=(const Element& rhs) { return *this = *this * rhs; }

    Element inverse() const;
    Element pow(std::int64_t e) const;

    /// Prime-field coordinates, constant term first.
    std::vector<std::uint32_t> coords() const;

    friend bool operator==(const Element& lhs, const Element& rhs) noexcept {
        return lhs.field_ == rhs.field_ && lhs.code_ == rhs.code_;
    }
    /// Canonical order; only meaningful within one field.
    friend std::strong_ordering operator<=>(const Element& lhs, const Element& rhs) noexcept {
        return lhs.code_ <=> rhs.code_;
    }

   private:
    void same_field(const Element& rhs) const;

    const GaloisField* field_ = nullptr;
    Code code_ = 0;
};

/**
 * GF(p^m) in a polynomial basis over GF(p).
 *
 * Fields are interned: get() returns the same object for the same (p, m),
 * so elements can hold a plain pointer to their field and field identity
 * is pointer identity. The canonical modulus is the least monic irreducible
 * polynomial of degree m in code order. Fields with at most 2^20 elements
 * multiply through log/antilog tables; larger fields use schoolbook
 * multiplication and reduction.
 */
class GaloisField {
   public:
    static constexpr Code kTableLimit = Code{1} << 20;
    static constexpr unsigned kMaxDegree = 62;

    static const GaloisField& get(std::uint32_t p, unsigned degree);
    /// Field with an explicit modulus (monic, constant term first).
    /// Throws std::invalid_argument on non-prime p or reducible modulus.
    static const GaloisField& with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    GaloisField(const GaloisField&) = delete;
    GaloisField& operator=(const GaloisField&) = delete;

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return degree_; }
    Code size() const noexcept { return size_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool is_canonical() const noexcept { return canonical_; }
    bool tabulated() const noexcept { return !log_.empty(); }
    std::string name() const;

    Element zero() const { return Element(*this, 0); }
    Element one() const { return Element(*this, 1); }
    Element element(Code code) const;
    Element from_coords(std::span<const std::uint32_t> coords) const;
    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t value) const;
    /// The class of X in GF(p)[X]/(modulus).
    Element generator() const;
    /// The least primitive element in code order.
    Element primitive() const;

    Code add(Code a, Code b) const noexcept;
    Code sub(Code a, Code b) const noexcept;
    Code neg(Code a) const noexcept;
    Code mul(Code a, Code b) const noexcept;
    Code inv(Code a) const;
    Code pow(Code a, std::uint64_t e) const noexcept;
    Code scale(Code a, std::uint32_t c) const noexcept;

    std::vector<std::uint32_t> coords(Code a) const;
    Code encode(std::span<const std::uint32_t> coords) const;

    /// True when this field is GF(p^k) with k | big.degree().
    bool embeds_into(const GaloisField& big) const noexcept {
        return p_ == big.p_ && big.degree_ % degree_ == 0;
    }

   private:
    GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus, bool canonical);
    Code mul_schoolbook(Code a, Code b) const noexcept;
    void build_tables();

    std::uint32_t p_;
    unsigned degree_;
    Code size_;
    bool canonical_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Code> radix_;  // p^i
    Code primitive_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense univariate polynomial; coefficients stored constant term first
/// with no trailing zeros. The zero polynomial has degree -1.
class Poly {
   public:
    /// Fieldless placeholder; only assignment and destruction are valid.
    Poly() = default;
    explicit Poly(const GaloisField& field) : field_(&field) {}
    Poly(const GaloisField& field, std::vector<Code> coeffs);
    Poly(const GaloisField& field, std::initializer_list<std::int64_t> prime_coeffs);

    static Poly constant(const Element& c);
    static Poly x(const GaloisField& field);
    /// c * X^degree
    static Poly monomial(const Element& c, std::size_t degree);

    const GaloisField& field() const noexcept { return *field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<Code>& codes() const noexcept { return coeffs_; }
    Element coeff(std::size_t i) const;
    Element leading() const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Element& c) const;
    Poly operator%(const Poly& rhs) const;
    Poly operator/(const Poly& rhs) const;
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    /// Evaluates at t; t's field must contain this polynomial's field.
    Element eval(const Element& t) const;
    Poly derivative() const;
    Poly monic() const;
    Poly pow(std::uint64_t e) const;
    /// Coefficients mapped into an extension field.
    Poly embed(const GaloisField& big) const;

    friend bool operator==(const Poly& lhs, const Poly& rhs) noexcept {
        return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
    }
    /// Canonical order: degree first, then coefficient codes from the top.
    friend std::strong_ordering operator<=>(const Poly& lhs, const Poly& rhs) noexcept;

   private:
    void trim();

    const GaloisField* field_ = nullptr;
    std::vector<Code> coeffs_;
};

Poly gcd(Poly a, Poly b);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modulus);
bool is_irreducible(const Poly& f);

struct PolyFactor {
    Poly poly;
    int multiplicity;
};

/// Monic irreducible factors with multiplicities, sorted canonically.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<PolyFactor> factor(const Poly& f);

/// Distinct roots of f lying in `field` (which must contain f's field),
/// sorted by code.
std::vector<Element> roots_in(const Poly& f, const GaloisField& field);

/// Dense linear algebra over GF(p) used for GF(p)-linear maps between fields.
class PrimeSolver {
   public:
    /// matrix is rows x cols, row-major, entries in [0, p).
    PrimeSolver(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> matrix);

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::optional<std::vector<std::uint32_t>> solve(std::span<const std::uint32_t> rhs) const;
    const std::vector<std::vector<std::uint32_t>>& kernel_basis() const noexcept { return kernel_; }

   private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> reduced_;    // RREF, rows x cols
    std::vector<std::uint32_t> transform_;  // rows x rows, transform * A = reduced
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::uint32_t>> kernel_;
};

/// Embedding of GF(p^k) into GF(p^{k*m}) sending the small field's X to
/// the least root of its modulus in the big field.
class Embedding {
   public:
    Embedding(const GaloisField& small, const GaloisField& big);

    const GaloisField& small() const noexcept { return *small_; }
    const GaloisField& big() const noexcept { return *big_; }
    Code map(Code a) const noexcept;
    /// Preimage if a lies in the image.
    std::optional<Code> preimage(Code a) const;

   private:
    const GaloisField* small_;
    const GaloisField* big_;
    std::vector<Code> basis_images_;
    std::optional<PrimeSolver> solver_;
};

/// Cached embedding; small must embed into big.
const Embedding& embedding(const GaloisField& small, const GaloisField& big);
Element embed(const Element& a, const GaloisField& big);
std::optional<Element> restrict_to(const Element& a, const GaloisField& small);

/// L(t) = sum a_i t^{q^i} with coefficients in GF(q^n).
class LinearizedPoly {
   public:
    LinearizedPoly(std::uint64_t q, std::vector<Element> coeffs);

    std::uint64_t q() const noexcept { return q_; }
    unsigned r() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    std::uint64_t q_pow_r() const noexcept;
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
    const GaloisField& field() const { return coeffs_.front().field(); }
    Poly to_poly() const;

    Element operator()(const Element& t) const;

   private:
    std::uint64_t q_;
    std::vector<Element> coeffs_;
};

Element lin_eval(const LinearizedPoly& L, const Element& t);

/// Precomputed GF(p)-linear solver for L(t) = c over one field.
class LinearizedSolver {
   public:
    LinearizedSolver(const LinearizedPoly& L, const GaloisField& field);

    const GaloisField& field() const noexcept { return *field_; }
    /// Kernel sorted by code.
    const std::vector<Element>& kernel() const noexcept { return kernel_; }
    std::optional<Element> particular(const Element& c) const;
    /// Either empty or a full coset of the kernel, sorted by code.
    std::vector<Element> solve(const Element& c) const;

   private:
    const GaloisField* field_;
    PrimeSolver solver_;
    std::vector<Element> kernel_;
};

std::vector<Element> lin_kernel(const LinearizedPoly& L, const GaloisField& field);
std::vector<Element> lin_solve(const LinearizedPoly& L, const Element& c, const GaloisField& field);

}  // namespace gag

#endif  // GAG_GALOIS_HPP
