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

#include "gag/galois.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

namespace gag {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------- Element

Element::Element(const GaloisField& field, Code code) : field_(&field), code_(code) {}

const GaloisField& Element::field() const {
    if (!field_) throw std::logic_error("element has no field");
    return *field_;
}

void Element::same_field(const Element& rhs) const {
    if (field_ != rhs.field_ || !field_) throw std::invalid_argument("field mismatch");
}

Element Element::operator+(const Element& rhs) const {
    same_field(rhs);
    return {*field_, field_->add(code_, rhs.code_)};
}

Element Element::operator-(const Element& rhs) const {
    same_field(rhs);
    return {*field_, field_->sub(code_, rhs.code_)};
}

Element Element::operator-() const { return {field(), field_->neg(code_)}; }

Element Element::operator*(const Element& rhs) const {
    same_field(rhs);
    return {*field_, field_->mul(code_, rhs.code_)};
}

Element Element::operator/(const Element& rhs) const {
    same_field(rhs);
    return {*field_, field_->mul(code_, field_->inv(rhs.code_))};
}

Element Element::inverse() const { return {field(), field_->inv(code_)}; }

Element Element::pow(std::int64_t e) const {
    const GaloisField& f = field();
    if (e < 0) return {f, f.pow(f.inv(code_), static_cast<std::uint64_t>(-e))};
    return {f, f.pow(code_, static_cast<std::uint64_t>(e))};
}

std::vector<std::uint32_t> Element::coords() const { return field().coords(code_); }

// ------------------------------------------------------------ GaloisField

namespace {

std::recursive_mutex& field_mutex() {
    static std::recursive_mutex m;
    return m;
}

std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<GaloisField>>& canonical_registry() {
    static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<GaloisField>> r;
    return r;
}

std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<GaloisField>>& custom_registry() {
    static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<GaloisField>> r;
    return r;
}

void check_characteristic(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 16)) throw std::invalid_argument("characteristic too large");
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus, bool canonical)
    : p_(p), degree_(static_cast<unsigned>(modulus.size() - 1)), size_(1), canonical_(canonical),
      modulus_(std::move(modulus)) {
    radix_.reserve(degree_ + 1);
    for (unsigned i = 0; i <= degree_; ++i) {
        radix_.push_back(size_);
        if (i < degree_) {
            if (size_ > (Code{1} << 62) / p_) throw std::invalid_argument("field too large");
            size_ *= p_;
        }
    }
    if (size_ <= kTableLimit) build_tables();
}

const GaloisField& GaloisField::get(std::uint32_t p, unsigned degree) {
    check_characteristic(p);
    if (degree == 0 || degree > kMaxDegree) throw std::invalid_argument("invalid extension degree");
    std::lock_guard lock(field_mutex());
    auto& reg = canonical_registry();
    auto key = std::make_pair(p, degree);
    if (auto it = reg.find(key); it != reg.end()) return *it->second;

    std::vector<std::uint32_t> modulus;
    if (degree == 1) {
        modulus = {0, 1};
    } else {
        const GaloisField& prime = get(p, 1);
        Code bound = 1;
        for (unsigned i = 0; i < degree; ++i) bound *= p;
        for (Code c = 1; c < bound; ++c) {
            if (c % p == 0) continue;  // divisible by X
            std::vector<Code> coeffs(degree + 1);
            Code rest = c;
            for (unsigned i = 0; i < degree; ++i) {
                coeffs[i] = rest % p;
                rest /= p;
            }
            coeffs[degree] = 1;
            if (is_irreducible(Poly(prime, coeffs))) {
                modulus.assign(coeffs.begin(), coeffs.end());
                break;
            }
        }
    }
    auto field = std::unique_ptr<GaloisField>(new GaloisField(p, std::move(modulus), true));
    auto& ref = *field;
    reg.emplace(key, std::move(field));
    return ref;
}

const GaloisField& GaloisField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    check_characteristic(p);
    if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    const unsigned degree = static_cast<unsigned>(modulus.size() - 1);
    const GaloisField& canonical = get(p, degree);
    if (canonical.modulus() == modulus) return canonical;

    std::lock_guard lock(field_mutex());
    auto& reg = custom_registry();
    auto key = std::make_pair(p, modulus);
    if (auto it = reg.find(key); it != reg.end()) return *it->second;
    std::vector<Code> coeffs(modulus.begin(), modulus.end());
    auto fs = factor(Poly(get(p, 1), coeffs));
    if (fs.size() != 1 || fs.front().multiplicity != 1) throw std::invalid_argument("modulus is reducible");
    auto field = std::unique_ptr<GaloisField>(new GaloisField(p, std::move(modulus), false));
    auto& ref = *field;
    reg.emplace(std::move(key), std::move(field));
    return ref;
}

std::string GaloisField::name() const {
    return "GF(" + std::to_string(p_) + "^" + std::to_string(degree_) + ")";
}

Element GaloisField::element(Code code) const {
    if (code >= size_) throw std::out_of_range("element code out of range for " + name());
    return Element(*this, code);
}

Element GaloisField::from_coords(std::span<const std::uint32_t> coords) const {
    if (coords.size() > degree_) throw std::invalid_argument("too many coordinates for " + name());
    for (auto c : coords)
        if (c >= p_) throw std::invalid_argument("coordinate out of range for " + name());
    return Element(*this, encode(coords));
}

Element GaloisField::from_int(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Element(*this, static_cast<Code>(r));
}

Element GaloisField::generator() const { return Element(*this, degree_ == 1 ? 0 : p_); }

Element GaloisField::primitive() const {
    if (primitive_ != 0) return Element(*this, primitive_);
    const auto factors = prime_factors(size_ - 1);
    for (Code g = 1; g < size_; ++g) {
        bool ok = true;
        for (auto r : factors) {
            if (pow(g, (size_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return Element(*this, g);
    }
    throw std::logic_error("no primitive element found");
}

void GaloisField::build_tables() {
    const auto factors = prime_factors(size_ - 1);
    auto slow_pow = [this](Code a, std::uint64_t e) {
        Code r = 1;
        while (e) {
            if (e & 1) r = mul_schoolbook(r, a);
            a = mul_schoolbook(a, a);
            e >>= 1;
        }
        return r;
    };
    for (Code g = 1; g < size_; ++g) {
        bool ok = true;
        for (auto r : factors) {
            if (slow_pow(g, (size_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive_ = g;
            break;
        }
    }
    const Code order = size_ - 1;
    log_.assign(size_, 0);
    exp_.assign(2 * order + 1, 0);
    Code x = 1;
    for (Code i = 0; i < order; ++i) {
        exp_[i] = static_cast<std::uint32_t>(x);
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_schoolbook(x, primitive_);
    }
    for (Code i = order; i < 2 * order + 1; ++i) exp_[i] = exp_[i - order];
}

Code GaloisField::add(Code a, Code b) const noexcept {
    if (p_ == 2) return a ^ b;
    Code r = 0, place = 1;
    while (a | b) {
        Code s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * place;
        place *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

Code GaloisField::neg(Code a) const noexcept {
    if (p_ == 2) return a;
    Code r = 0, place = 1;
    while (a) {
        Code d = a % p_;
        if (d) r += (p_ - d) * place;
        place *= p_;
        a /= p_;
    }
    return r;
}

Code GaloisField::sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

Code GaloisField::scale(Code a, std::uint32_t c) const noexcept {
    c %= p_;
    if (c == 0) return 0;
    if (c == 1) return a;
    Code r = 0, place = 1;
    while (a) {
        r += (a % p_) * c % p_ * place;
        place *= p_;
        a /= p_;
    }
    return r;
}

Code GaloisField::mul_schoolbook(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    const unsigned m = degree_;
    if (p_ == 2) {
        // carry-less product, then reduce by the modulus bit pattern
        unsigned __int128 prod = 0;
        for (unsigned i = 0; i < m; ++i)
            if ((b >> i) & 1) prod ^= static_cast<unsigned __int128>(a) << i;
        unsigned __int128 modbits = 0;
        for (unsigned i = 0; i <= m; ++i)
            if (modulus_[i]) modbits |= static_cast<unsigned __int128>(1) << i;
        for (int k = 2 * static_cast<int>(m) - 2; k >= static_cast<int>(m); --k)
            if ((prod >> k) & 1) prod ^= modbits << (k - m);
        return static_cast<Code>(prod);
    }
    std::array<std::uint64_t, kMaxDegree> ca{}, cb{};
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < m; ++i) {
        ca[i] = a % p_;
        a /= p_;
        cb[i] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < m; ++i) {
        if (!ca[i]) continue;
        for (unsigned j = 0; j < m; ++j) prod[i + j] += ca[i] * cb[j];
    }
    for (int k = 2 * static_cast<int>(m) - 2; k >= static_cast<int>(m); --k) {
        const std::uint64_t c = prod[k] % p_;
        prod[k] = 0;
        if (!c) continue;
        for (unsigned j = 0; j < m; ++j) {
            const std::uint64_t mj = modulus_[j];
            if (mj) prod[k - m + j] = (prod[k - m + j] + c * (p_ - mj)) % p_;
        }
    }
    Code r = 0;
    for (int i = static_cast<int>(m) - 1; i >= 0; --i) r = r * p_ + prod[i] % p_;
    return r;
}

Code GaloisField::mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_schoolbook(a, b);
}

Code GaloisField::inv(Code a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!log_.empty()) return exp_[(size_ - 1) - log_[a]];
    return pow(a, size_ - 2);
}

Code GaloisField::pow(Code a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!log_.empty()) {
        const Code order = size_ - 1;
        const auto idx = static_cast<unsigned __int128>(log_[a]) * (e % order) % order;
        return exp_[static_cast<std::size_t>(idx)];
    }
    Code r = 1;
    while (e) {
        if (e & 1) r = mul_schoolbook(r, a);
        a = mul_schoolbook(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> GaloisField::coords(Code a) const {
    std::vector<std::uint32_t> out(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        out[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return out;
}

Code GaloisField::encode(std::span<const std::uint32_t> coords) const {
    Code r = 0;
    for (std::size_t i = coords.size(); i-- > 0;) r = r * p_ + coords[i] % p_;
    return r;
}

// ------------------------------------------------------------------- Poly

Poly::Poly(const GaloisField& field, std::vector<Code> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (c >= field.size()) throw std::out_of_range("coefficient code out of range");
    trim();
}

Poly::Poly(const GaloisField& field, std::initializer_list<std::int64_t> prime_coeffs) : field_(&field) {
    for (auto c : prime_coeffs) coeffs_.push_back(field.from_int(c).code());
    trim();
}

Poly Poly::constant(const Element& c) { return Poly(c.field(), std::vector<Code>{c.code()}); }

Poly Poly::x(const GaloisField& field) { return Poly(field, std::vector<Code>{0, 1}); }

Poly Poly::monomial(const Element& c, std::size_t degree) {
    std::vector<Code> coeffs(degree + 1, 0);
    coeffs[degree] = c.code();
    return Poly(c.field(), std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Element Poly::coeff(std::size_t i) const { return Element(*field_, i < coeffs_.size() ? coeffs_[i] : 0); }

Element Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return Element(*field_, coeffs_.back());
}

Poly Poly::operator+(const Poly& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("field mismatch");
    std::vector<Code> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Code a = i < coeffs_.size() ? coeffs_[i] : 0;
        Code b = i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0;
        out[i] = field_->add(a, b);
    }
    return Poly(*field_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("field mismatch");
    std::vector<Code> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Code a = i < coeffs_.size() ? coeffs_[i] : 0;
        Code b = i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0;
        out[i] = field_->sub(a, b);
    }
    return Poly(*field_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("field mismatch");
    if (is_zero() || rhs.is_zero()) return Poly(*field_);
    std::vector<Code> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i]) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
    }
    return Poly(*field_, std::move(out));
}

Poly Poly::operator*(const Element& c) const {
    if (&c.field() != field_) throw std::invalid_argument("field mismatch");
    std::vector<Code> out(coeffs_);
    for (auto& x : out) x = field_->mul(x, c.code());
    return Poly(*field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (field_ != divisor.field_) throw std::invalid_argument("field mismatch");
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {Poly(*field_), *this};
    std::vector<Code> rem(coeffs_);
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<Code> quot(rem.size() - dd, 0);
    const Code lead_inv = field_->inv(divisor.coeffs_.back());
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (!rem[k]) continue;
        const Code c = field_->mul(rem[k], lead_inv);
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] = field_->sub(rem[k - dd + j], field_->mul(c, divisor.coeffs_[j]));
    }
    rem.resize(dd);
    return {Poly(*field_, std::move(quot)), Poly(*field_, std::move(rem))};
}

Poly Poly::operator%(const Poly& rhs) const { return divmod(rhs).second; }
Poly Poly::operator/(const Poly& rhs) const { return divmod(rhs).first; }

Element Poly::eval(const Element& t) const {
    const GaloisField& tf = t.field();
    if (&tf == field_) {
        Code acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, t.code()), coeffs_[i]);
        return Element(tf, acc);
    }
    if (!field_->embeds_into(tf)) throw std::invalid_argument("field mismatch");
    const Embedding& emb = embedding(*field_, tf);
    Code acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = tf.add(tf.mul(acc, t.code()), emb.map(coeffs_[i]));
    return Element(tf, acc);
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(*field_);
    std::vector<Code> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = field_->scale(coeffs_[i], static_cast<std::uint32_t>(i % field_->characteristic()));
    return Poly(*field_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = Poly::constant(field_->one());
    Poly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::embed(const GaloisField& big) const {
    if (&big == field_) return *this;
    if (!field_->embeds_into(big)) throw std::invalid_argument("field mismatch");
    const Embedding& emb = embedding(*field_, big);
    std::vector<Code> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = emb.map(coeffs_[i]);
    return Poly(big, std::move(out));
}

std::strong_ordering operator<=>(const Poly& lhs, const Poly& rhs) noexcept {
    if (auto c = lhs.degree() <=> rhs.degree(); c != 0) return c;
    for (std::size_t i = lhs.coeffs_.size(); i-- > 0;)
        if (auto c = lhs.coeffs_[i] <=> rhs.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    Poly result = Poly::constant(base.field().one()) % modulus;
    Poly b = base % modulus;
    while (e) {
        if (e & 1) result = (result * b) % modulus;
        e >>= 1;
        if (e) b = (b * b) % modulus;
    }
    return result;
}

bool is_irreducible(const Poly& f) {
    const int m = f.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    const Poly mf = f.monic();
    const Code q = f.field().size();
    const Poly x = Poly::x(f.field());
    // frob[j] = x^{q^j} mod f
    std::vector<Poly> frob{x % mf};
    for (int j = 1; j <= m; ++j) frob.push_back(pow_mod(frob.back(), q, mf));
    if (!(frob[m] - x % mf).is_zero()) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(m))) {
        const Poly g = gcd(frob[m / r] - x, mf);
        if (g.degree() != 0) return false;
    }
    return true;
}

namespace {

Poly pth_root(const Poly& f) {
    const GaloisField& F = f.field();
    const std::uint32_t p = F.characteristic();
    const Code exponent = F.size() / p;  // c^{q/p} is the p-th root in GF(q)
    std::vector<Code> out;
    for (std::size_t i = 0; i < f.codes().size(); i += p) out.push_back(F.pow(f.codes()[i], exponent));
    return Poly(F, std::move(out));
}

void square_free(const Poly& f, int mult, std::vector<PolyFactor>& out) {
    if (f.degree() <= 0) return;
    const GaloisField& F = f.field();
    const Poly one = Poly::constant(F.one());
    Poly fd = f.derivative();
    if (fd.is_zero()) {
        square_free(pth_root(f), mult * static_cast<int>(F.characteristic()), out);
        return;
    }
    Poly c = gcd(f, fd);
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = (w / y).monic();
        if (fac.degree() > 0) out.push_back({fac, i * mult});
        w = y;
        c = c / y;
        ++i;
    }
    c = c.monic();
    if (c.degree() > 0) square_free(pth_root(c), mult * static_cast<int>(F.characteristic()), out);
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    const GaloisField& F = f.field();
    const Poly x = Poly::x(F);
    std::vector<std::pair<Poly, int>> out;
    Poly h = x % f;
    int d = 1;
    while (f.degree() >= 2 * d) {
        h = pow_mod(h, F.size(), f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = (f / g).monic();
            h = h % f;
        }
        ++d;
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const GaloisField& F = f.field();
    const Code q = F.size();
    std::uniform_int_distribution<Code> coeff(0, q - 1);
    for (;;) {
        std::vector<Code> rc(static_cast<std::size_t>(f.degree()));
        for (auto& c : rc) c = coeff(rng);
        Poly a(F, rc);
        if (a.degree() <= 0) continue;
        Poly g(F);
        if (F.characteristic() == 2) {
            // trace from GF(q^d) down to GF(2)
            const std::uint64_t steps = static_cast<std::uint64_t>(F.degree()) * static_cast<std::uint64_t>(d);
            Poly t = a % f, acc = a % f;
            for (std::uint64_t k = 1; k < steps; ++k) {
                t = (t * t) % f;
                acc = acc + t;
            }
            g = gcd(acc, f);
        } else {
            Poly t = a % f, acc = a % f;
            for (int j = 1; j < d; ++j) {
                t = pow_mod(t, q, f);
                acc = (acc * t) % f;
            }
            Poly b = pow_mod(acc, (q - 1) / 2, f);
            g = gcd(b - Poly::constant(F.one()), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((f / g).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PolyFactor> factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<PolyFactor> sqf;
    square_free(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<PolyFactor> out;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> pieces;
            equal_degree(block, d, rng, pieces);
            for (auto& pc : pieces) out.push_back({std::move(pc), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.poly != b.poly) return a.poly < b.poly;
        return a.multiplicity < b.multiplicity;
    });
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().poly == pf.poly)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(std::move(pf));
    }
    return merged;
}

std::vector<Element> roots_in(const Poly& f, const GaloisField& field) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has every element as a root");
    const Poly g = f.embed(field).monic();
    std::vector<Element> out;
    if (g.degree() <= 0) return out;
    const Poly x = Poly::x(field);
    const Poly split = gcd(pow_mod(x, field.size(), g) - x, g);
    if (split.degree() <= 0) return out;
    std::mt19937_64 rng(0x0dd5eedULL);
    std::vector<Poly> linear;
    equal_degree(split, 1, rng, linear);
    for (const auto& l : linear) out.push_back(-l.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------ PrimeSolver

PrimeSolver::PrimeSolver(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> matrix)
    : p_(p), rows_(rows), cols_(cols), reduced_(std::move(matrix)), transform_(rows * rows, 0) {
    if (reduced_.size() != rows * cols) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < rows; ++i) transform_[i * rows + i] = 1;
    auto A = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return reduced_[r * cols_ + c]; };
    auto T = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return transform_[r * rows_ + c]; };
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && A(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(A(piv, c), A(row, c));
            for (std::size_t c = 0; c < rows; ++c) std::swap(T(piv, c), T(row, c));
        }
        const std::uint64_t s = inv_mod(A(row, col), p);
        for (std::size_t c = 0; c < cols; ++c) A(row, c) = static_cast<std::uint32_t>(A(row, c) * s % p);
        for (std::size_t c = 0; c < rows; ++c) T(row, c) = static_cast<std::uint32_t>(T(row, c) * s % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || A(r, col) == 0) continue;
            const std::uint64_t f = p - A(r, col);
            for (std::size_t c = 0; c < cols; ++c) A(r, c) = static_cast<std::uint32_t>((A(r, c) + f * A(row, c)) % p);
            for (std::size_t c = 0; c < rows; ++c) T(r, c) = static_cast<std::uint32_t>((T(r, c) + f * T(row, c)) % p);
        }
        pivots_.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots_) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t j = 0; j < pivots_.size(); ++j) v[pivots_[j]] = (p - A(j, free)) % p;
        kernel_.push_back(std::move(v));
    }
}

std::optional<std::vector<std::uint32_t>> PrimeSolver::solve(std::span<const std::uint32_t> rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    std::vector<std::uint64_t> b(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < rows_; ++c) acc += static_cast<std::uint64_t>(transform_[r * rows_ + c]) * rhs[c] % p_;
        b[r] = acc % p_;
    }
    for (std::size_t r = pivots_.size(); r < rows_; ++r)
        if (b[r] != 0) return std::nullopt;
    std::vector<std::uint32_t> x(cols_, 0);
    for (std::size_t j = 0; j < pivots_.size(); ++j) x[pivots_[j]] = static_cast<std::uint32_t>(b[j]);
    return x;
}

// -------------------------------------------------------------- Embedding

Embedding::Embedding(const GaloisField& small, const GaloisField& big) : small_(&small), big_(&big) {
    if (!small.embeds_into(big)) throw std::invalid_argument(small.name() + " does not embed into " + big.name());
    const unsigned k = small.degree();
    if (&small == &big) {
        for (unsigned i = 0; i < k; ++i) basis_images_.push_back(small.pow(small.generator().code(), i));
        if (k == 1) basis_images_ = {1};
    } else if (k == 1) {
        basis_images_ = {1};
    } else {
        const GaloisField& prime = GaloisField::get(small.characteristic(), 1);
        std::vector<Code> mod(small.modulus().begin(), small.modulus().end());
        auto rs = roots_in(Poly(prime, mod), big);
        if (rs.empty()) throw std::logic_error("modulus has no root in extension");
        const Code omega = rs.front().code();
        Code power = 1;
        for (unsigned i = 0; i < k; ++i) {
            basis_images_.push_back(power);
            power = big.mul(power, omega);
        }
    }
    const unsigned m = big.degree();
    std::vector<std::uint32_t> matrix(static_cast<std::size_t>(m) * k);
    for (unsigned c = 0; c < k; ++c) {
        auto col = big.coords(basis_images_[c]);
        for (unsigned r = 0; r < m; ++r) matrix[r * k + c] = col[r];
    }
    solver_.emplace(big.characteristic(), m, k, std::move(matrix));
}

Code Embedding::map(Code a) const noexcept {
    if (small_ == big_) return a;
    Code acc = 0;
    const std::uint32_t p = small_->characteristic();
    for (std::size_t i = 0; a; ++i, a /= p) {
        const auto c = static_cast<std::uint32_t>(a % p);
        if (c) acc = big_->add(acc, big_->scale(basis_images_[i], c));
    }
    return acc;
}

std::optional<Code> Embedding::preimage(Code a) const {
    if (small_ == big_) return a;
    auto sol = solver_->solve(big_->coords(a));
    if (!sol) return std::nullopt;
    return small_->encode(*sol);
}

namespace {
std::recursive_mutex& embedding_mutex() {
    static std::recursive_mutex m;
    return m;
}
}  // namespace

const Embedding& embedding(const GaloisField& small, const GaloisField& big) {
    static std::map<std::pair<const GaloisField*, const GaloisField*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard lock(embedding_mutex());
    auto key = std::make_pair(&small, &big);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
    auto e = std::make_unique<Embedding>(small, big);
    auto& ref = *e;
    cache.emplace(key, std::move(e));
    return ref;
}

Element embed(const Element& a, const GaloisField& big) {
    const GaloisField& small = a.field();
    if (&small == &big) return a;
    return Element(big, embedding(small, big).map(a.code()));
}

std::optional<Element> restrict_to(const Element& a, const GaloisField& small) {
    const GaloisField& big = a.field();
    if (&small == &big) return a;
    auto c = embedding(small, big).preimage(a.code());
    if (!c) return std::nullopt;
    return Element(small, *c);
}

// --------------------------------------------------------- LinearizedPoly

LinearizedPoly::LinearizedPoly(std::uint64_t q, std::vector<Element> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("linearized polynomial needs at least one coefficient");
    const GaloisField& F = coeffs_.front().field();
    for (const auto& c : coeffs_)
        if (&c.field() != &F) throw std::invalid_argument("field mismatch");
    std::uint64_t t = q;
    while (t > 1 && t % F.characteristic() == 0) t /= F.characteristic();
    if (q < 2 || t != 1) throw std::invalid_argument("q must be a power of the characteristic");
}

std::uint64_t LinearizedPoly::q_pow_r() const noexcept {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < r(); ++i) v *= q_;
    return v;
}

Poly LinearizedPoly::to_poly() const {
    const GaloisField& F = field();
    std::vector<Code> out(q_pow_r() + 1, 0);
    std::uint64_t e = 1;
    for (unsigned i = 0; i <= r(); ++i, e *= q_) out[e] = coeffs_[i].code();
    return Poly(F, std::move(out));
}

Element LinearizedPoly::operator()(const Element& t) const {
    const GaloisField& T = t.field();
    const GaloisField& F = field();
    if (!F.embeds_into(T)) throw std::invalid_argument("field mismatch");
    const Embedding* emb = &F == &T ? nullptr : &embedding(F, T);
    Code power = t.code();
    Code acc = 0;
    for (unsigned i = 0; i <= r(); ++i) {
        if (i > 0) power = T.pow(power, q_);
        const Code a = emb ? emb->map(coeffs_[i].code()) : coeffs_[i].code();
        acc = T.add(acc, T.mul(a, power));
    }
    return Element(T, acc);
}

Element lin_eval(const LinearizedPoly& L, const Element& t) { return L(t); }

namespace {
PrimeSolver linear_map_solver(const LinearizedPoly& L, const GaloisField& field) {
    if (!L.field().embeds_into(field)) throw std::invalid_argument("field mismatch");
    const unsigned m = field.degree();
    std::vector<std::uint32_t> matrix(static_cast<std::size_t>(m) * m);
    Code basis = 1;
    for (unsigned c = 0; c < m; ++c, basis *= field.characteristic()) {
        auto col = L(Element(field, basis)).coords();
        for (unsigned r = 0; r < m; ++r) matrix[r * m + c] = col[r];
    }
    return PrimeSolver(field.characteristic(), m, m, std::move(matrix));
}
}  // namespace

LinearizedSolver::LinearizedSolver(const LinearizedPoly& L, const GaloisField& field)
    : field_(&field), solver_(linear_map_solver(L, field)) {
    const auto& basis = solver_.kernel_basis();
    const std::uint32_t p = field.characteristic();
    std::vector<Code> basis_codes;
    for (const auto& v : basis) basis_codes.push_back(field.encode(v));
    // all GF(p)-combinations of the kernel basis
    std::vector<Code> span{0};
    for (auto b : basis_codes) {
        std::vector<Code> next;
        next.reserve(span.size() * p);
        for (auto s : span) {
            Code t = s;
            for (std::uint32_t c = 0; c < p; ++c) {
                next.push_back(t);
                t = field.add(t, b);
            }
        }
        span = std::move(next);
    }
    std::sort(span.begin(), span.end());
    for (auto c : span) kernel_.emplace_back(field, c);
}

std::optional<Element> LinearizedSolver::particular(const Element& c) const {
    if (&c.field() != field_) throw std::invalid_argument("field mismatch");
    auto sol = solver_.solve(c.coords());
    if (!sol) return std::nullopt;
    return Element(*field_, field_->encode(*sol));
}

std::vector<Element> LinearizedSolver::solve(const Element& c) const {
    auto base = particular(c);
    std::vector<Element> out;
    if (!base) return out;
    out.reserve(kernel_.size());
    for (const auto& k : kernel_) out.push_back(*base + k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> lin_kernel(const LinearizedPoly& L, const GaloisField& field) {
    return LinearizedSolver(L, field).kernel();
}

std::vector<Element> lin_solve(const LinearizedPoly& L, const Element& c, const GaloisField& field) {
    return LinearizedSolver(L, field).solve(embed(c, field));
}

}  // namespace gag
