/*
   Copyright 2026 The ccdepth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ccdepth/chain_ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ccdepth {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr u64 kMaxRingSize = u64{1} << 20;
constexpr u32 kMaxCoords = 64;
constexpr u64 kOpTableLimit = 512;  // build dense op tables up to this size

bool is_prime_u32(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; u64{d} * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 checked_pow(u64 base, u32 exp, u64 limit, const char* what) {
    u64 r = 1;
    for (u32 i = 0; i < exp; ++i) {
        if (r > limit / base)
            throw std::invalid_argument(std::string(what) +
                                        ": size exceeds supported bound");
        r *= base;
    }
    return r;
}

u64 powmod_u64(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = (__uint128_t)r * base % mod;
        base = (__uint128_t)base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Inverse of a mod n for gcd(a, n) == 1.
u64 invmod_u64(u64 a, u64 n) {
    i64 t = 0, nt = 1;
    i64 r = (i64)n, nr = (i64)(a % n);
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (r != 1) throw std::invalid_argument("invmod: not coprime");
    return (u64)(t < 0 ? t + (i64)n : t);
}

// ---- dense polynomials over the prime field Z_p, low degree first ----

void pf_normalize(std::vector<u32>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic d (in place on a copy).
std::vector<u32> pf_mod(u32 p, std::vector<u32> a, const std::vector<u32>& d) {
    const std::size_t dd = d.size() - 1;  // deg d
    while (a.size() >= d.size()) {
        u32 c = a.back();
        if (c != 0) {
            std::size_t off = a.size() - d.size();
            for (std::size_t j = 0; j < dd; ++j) {
                u64 t = a[off + j] + u64{c} * (p - d[j] % p);
                a[off + j] = (u32)(t % p);
            }
        }
        a.pop_back();
        pf_normalize(a);
        if (a.size() < d.size()) break;
    }
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field
// ---------------------------------------------------------------------------

Field::Field(u32 p, std::vector<u32> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime_u32(p_))
        throw std::invalid_argument("Field: characteristic must be prime");
    if (modulus_.size() < 2)
        throw std::invalid_argument("Field: modulus must have degree >= 1");
    for (auto& c : modulus_) c %= p_;
    if (modulus_.back() != 1)
        throw std::invalid_argument("Field: modulus must be monic");
    m_ = (u32)modulus_.size() - 1;
    if (m_ > 16) throw std::invalid_argument("Field: extension degree > 16");
    q_ = (u32)checked_pow(p_, m_, kMaxRingSize, "Field");
    if (!is_irreducible_mod_p(p_, modulus_))
        throw std::invalid_argument("Field: modulus is reducible");
}

void Field::decode(FElem a, u32* out) const {
    u32 v = a.v;
    for (u32 i = 0; i < m_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
}

FElem Field::encode(const u32* c) const {
    u32 v = 0;
    for (u32 i = m_; i-- > 0;) v = v * p_ + c[i];
    return FElem{v};
}

FElem Field::from_int(i64 k) const {
    i64 r = k % (i64)p_;
    if (r < 0) r += p_;
    return FElem{(u32)r};
}

std::vector<u32> Field::coords(FElem a) const {
    std::vector<u32> out(m_);
    decode(a, out.data());
    return out;
}

FElem Field::from_coords(std::span<const u32> c) const {
    if (c.size() != m_)
        throw std::invalid_argument("Field: coordinate count mismatch");
    std::array<u32, 16> buf{};
    for (u32 i = 0; i < m_; ++i) buf[i] = c[i] % p_;
    return encode(buf.data());
}

FElem Field::add(FElem a, FElem b) const {
    std::array<u32, 16> x{}, y{};
    decode(a, x.data());
    decode(b, y.data());
    for (u32 i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x.data());
}

FElem Field::sub(FElem a, FElem b) const {
    std::array<u32, 16> x{}, y{};
    decode(a, x.data());
    decode(b, y.data());
    for (u32 i = 0; i < m_; ++i) x[i] = (x[i] + p_ - y[i]) % p_;
    return encode(x.data());
}

FElem Field::neg(FElem a) const { return sub(zero(), a); }

FElem Field::mul(FElem a, FElem b) const {
    std::array<u32, 16> x{}, y{};
    decode(a, x.data());
    decode(b, y.data());
    std::array<u64, 31> acc{};
    for (u32 i = 0; i < m_; ++i) {
        if (x[i] == 0) continue;
        for (u32 j = 0; j < m_; ++j) acc[i + j] += u64{x[i]} * y[j];
    }
    for (u32 i = 2 * m_ - 1; i-- > m_;) {
        u64 c = acc[i] % p_;
        if (c == 0) continue;
        for (u32 j = 0; j < m_; ++j)
            acc[i - m_ + j] += c * (p_ - modulus_[j]);
    }
    std::array<u32, 16> out{};
    for (u32 i = 0; i < m_; ++i) out[i] = (u32)(acc[i] % p_);
    return encode(out.data());
}

FElem Field::pow(FElem a, u64 k) const {
    FElem r = one(), b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

FElem Field::inv(FElem a) const {
    if (a.v == 0) throw std::invalid_argument("Field: inverse of zero");
    return pow(a, (u64)q_ - 2);
}

std::uint64_t Field::mul_order(FElem a) const {
    if (a.v == 0) throw std::invalid_argument("Field: order of zero");
    u64 order = q_ - 1;
    if (order == 0) return 1;
    u64 n = order;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        while (n % d == 0) n /= d;
        while (order % d == 0 && pow(a, order / d) == one()) order /= d;
    }
    if (n > 1)
        while (order % n == 0 && pow(a, order / n) == one()) order /= n;
    return order == 0 ? 1 : order;
}

FElem Field::smallest_primitive() const {
    for (u32 v = 1; v < q_; ++v)
        if (mul_order(FElem{v}) == (u64)q_ - 1) return FElem{v};
    throw std::logic_error("Field: no primitive element found");
}

bool Field::is_irreducible_mod_p(u32 p, std::span<const u32> coeffs) {
    std::vector<u32> f(coeffs.begin(), coeffs.end());
    for (auto& c : f) c %= p;
    pf_normalize(f);
    if (f.size() < 2) return false;           // constants
    if (f.back() != 1) return false;          // not monic
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::vector<u32> cand(d + 1, 0);
        cand[d] = 1;
        for (;;) {
            if (pf_mod(p, f, cand).empty()) return false;
            std::size_t i = 0;
            while (i < d && cand[i] == p - 1) cand[i++] = 0;
            if (i == d) break;
            ++cand[i];
        }
    }
    return true;
}

std::vector<u32> Field::default_modulus(u32 p, u32 m) {
    if (!is_prime_u32(p))
        throw std::invalid_argument("default_modulus: p must be prime");
    if (m == 0 || m > 16)
        throw std::invalid_argument("default_modulus: bad degree");
    std::vector<u32> low(m, 0);
    for (;;) {
        std::vector<u32> cand(low);
        cand.push_back(1);
        if (is_irreducible_mod_p(p, cand)) return cand;
        // advance (c_0, ..., c_{m-1}) in lexicographic order
        u32 i = m;
        while (i-- > 0) {
            if (low[i] + 1 < p) {
                ++low[i];
                std::fill(low.begin() + i + 1, low.end(), 0);
                break;
            }
            if (i == 0)
                throw std::logic_error("default_modulus: search exhausted");
        }
    }
}

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

Ring::Ring(RingFamily family, u32 p, u32 e, u32 m, std::vector<u32> modulus,
           bool default_modulus)
    : family_(family),
      p_(p),
      e_(e),
      m_(m),
      modulus_(std::move(modulus)),
      default_modulus_(default_modulus),
      field_(p,
             [&] {
                 std::vector<u32> fm(modulus_);
                 for (auto& c : fm) c %= p;
                 return fm;
             }()) {
    if (e_ == 0 || e_ > 16) throw std::invalid_argument("Ring: e out of range");
    if (family_ == RingFamily::finite_field && e_ != 1)
        throw std::invalid_argument("Ring: finite field requires e = 1");
    if (family_ != RingFamily::finite_field && e_ < 2)
        throw std::invalid_argument("Ring: chain ring families require e >= 2");
    size_ = checked_pow(p_, m_ * e_, kMaxRingSize, "Ring");
    pe_ = (u32)checked_pow(p_, e_, kMaxRingSize, "Ring");
    if (family_ == RingFamily::galois_ring) {
        coord_mod_ = pe_;
        coord_cnt_ = m_;
        if (modulus_.size() != m_ + 1)
            throw std::invalid_argument("Ring: modulus degree mismatch");
        for (auto& c : modulus_) c %= pe_;
        if (modulus_.back() != 1)
            throw std::invalid_argument("Ring: modulus must be monic");
    } else {
        coord_mod_ = p_;
        coord_cnt_ = (family_ == RingFamily::truncated_field_ring) ? e_ * m_ : m_;
        modulus_ = field_.modulus();
    }
    if (coord_cnt_ > kMaxCoords)
        throw std::invalid_argument("Ring: too many coordinates");

    if (size_ <= kOpTableLimit) {
        const u32 n = (u32)size_;
        add_tab_.resize((std::size_t)n * n);
        sub_tab_.resize((std::size_t)n * n);
        mul_tab_.resize((std::size_t)n * n);
        val_tab_.resize(n);
        for (u32 a = 0; a < n; ++a) {
            val_tab_[a] = (std::uint8_t)raw_valuation(RElem{a});
            for (u32 b = 0; b < n; ++b) {
                add_tab_[(std::size_t)a * n + b] = raw_add(RElem{a}, RElem{b}).v;
                sub_tab_[(std::size_t)a * n + b] = raw_sub(RElem{a}, RElem{b}).v;
                mul_tab_[(std::size_t)a * n + b] = raw_mul(RElem{a}, RElem{b}).v;
            }
        }
        tabs_ = true;
    }

    const u32 q = field_.size();
    zeta_ = teichmuller_lift(field_.smallest_primitive());
    teich_.reserve(q);
    teich_.push_back(zero());
    RElem t = one();
    teich_.push_back(t);
    for (u32 i = 1; i + 1 < q; ++i) {
        t = mul(t, zeta_);
        teich_.push_back(t);
    }
}

std::shared_ptr<const Ring> Ring::make(RingFamily family, u32 p, u32 e, u32 m,
                                       std::optional<std::vector<u32>> modulus) {
    if (!is_prime_u32(p)) throw std::invalid_argument("Ring: p must be prime");
    if (m == 0 || m > 16) throw std::invalid_argument("Ring: m out of range");
    if (e == 0 || e > 16) throw std::invalid_argument("Ring: e out of range");
    if (e == 1) family = RingFamily::finite_field;
    std::vector<u32> def = Field::default_modulus(p, m);
    bool is_default = true;
    std::vector<u32> mod = def;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != (std::size_t)m + 1)
            throw std::invalid_argument("Ring: modulus degree mismatch");
        u32 base = (family == RingFamily::galois_ring)
                       ? (u32)checked_pow(p, e, kMaxRingSize, "Ring")
                       : p;
        for (auto& c : mod) c %= base;
        is_default = (mod == def);
    }
    return std::shared_ptr<const Ring>(
        new Ring(family, p, e, m, std::move(mod), is_default));
}

std::size_t Ring::coord_count() const { return coord_cnt_; }
std::uint32_t Ring::coord_modulus() const { return coord_mod_; }

void Ring::flat_decode(RElem a, u32* out) const {
    u32 v = a.v;
    for (u32 i = 0; i < coord_cnt_; ++i) {
        out[i] = v % coord_mod_;
        v /= coord_mod_;
    }
}

RElem Ring::flat_encode(const u32* c) const {
    u32 v = 0;
    for (u32 i = coord_cnt_; i-- > 0;) v = v * coord_mod_ + c[i];
    return RElem{v};
}

std::vector<u32> Ring::coords(RElem a) const {
    if (a.v >= size_) throw std::invalid_argument("Ring: element out of range");
    std::vector<u32> out(coord_cnt_);
    flat_decode(a, out.data());
    return out;
}

RElem Ring::from_coords(std::span<const u32> c) const {
    if (c.size() != coord_cnt_)
        throw std::invalid_argument("Ring: coordinate count mismatch");
    std::array<u32, kMaxCoords> buf{};
    for (u32 i = 0; i < coord_cnt_; ++i) buf[i] = c[i] % coord_mod_;
    return flat_encode(buf.data());
}

RElem Ring::one() const { return RElem{1}; }

RElem Ring::gamma() const { return gamma_pow(1); }

RElem Ring::gamma_pow(unsigned t) const {
    if (t >= e_) return zero();
    if (t == 0) return one();
    switch (family_) {
        case RingFamily::galois_ring: {
            u32 v = 1;
            for (unsigned i = 0; i < t; ++i) v *= p_;
            return RElem{v};  // coordinate 0 equals p^t
        }
        case RingFamily::truncated_field_ring: {
            u32 v = 1;
            const u32 q = field_.size();
            for (unsigned i = 0; i < t; ++i) v *= q;
            return RElem{v};  // digit t equals 1
        }
        case RingFamily::finite_field:
            return zero();  // unreachable: t >= e was handled
    }
    throw std::logic_error("Ring: bad family");
}

RElem Ring::from_int(i64 k) const {
    i64 r = k % (i64)coord_mod_;
    if (r < 0) r += coord_mod_;
    return RElem{(u32)r};  // coordinate/digit 0 of the flat encoding
}

RElem Ring::raw_add(RElem a, RElem b) const {
    std::array<u32, kMaxCoords> x{}, y{};
    flat_decode(a, x.data());
    flat_decode(b, y.data());
    for (u32 i = 0; i < coord_cnt_; ++i) x[i] = (x[i] + y[i]) % coord_mod_;
    return flat_encode(x.data());
}

RElem Ring::raw_sub(RElem a, RElem b) const {
    std::array<u32, kMaxCoords> x{}, y{};
    flat_decode(a, x.data());
    flat_decode(b, y.data());
    for (u32 i = 0; i < coord_cnt_; ++i)
        x[i] = (x[i] + coord_mod_ - y[i]) % coord_mod_;
    return flat_encode(x.data());
}

RElem Ring::add(RElem a, RElem b) const {
    if (tabs_) return RElem{add_tab_[(std::size_t)a.v * size_ + b.v]};
    return raw_add(a, b);
}

RElem Ring::sub(RElem a, RElem b) const {
    if (tabs_) return RElem{sub_tab_[(std::size_t)a.v * size_ + b.v]};
    return raw_sub(a, b);
}

RElem Ring::neg(RElem a) const { return sub(zero(), a); }

RElem Ring::raw_mul(RElem a, RElem b) const {
    switch (family_) {
        case RingFamily::finite_field:
            return RElem{field_.mul(FElem{a.v}, FElem{b.v}).v};
        case RingFamily::galois_ring: {
            std::array<u32, kMaxCoords> x{}, y{};
            flat_decode(a, x.data());
            flat_decode(b, y.data());
            std::array<u64, 2 * kMaxCoords> acc{};
            for (u32 i = 0; i < m_; ++i) {
                if (x[i] == 0) continue;
                for (u32 j = 0; j < m_; ++j) acc[i + j] += u64{x[i]} * y[j];
            }
            for (u32 i = 2 * m_ - 1; i-- > m_;) {
                u64 c = acc[i] % pe_;
                if (c == 0) continue;
                for (u32 j = 0; j < m_; ++j)
                    acc[i - m_ + j] += c * (pe_ - modulus_[j]);
            }
            std::array<u32, kMaxCoords> out{};
            for (u32 i = 0; i < m_; ++i) out[i] = (u32)(acc[i] % pe_);
            return flat_encode(out.data());
        }
        case RingFamily::truncated_field_ring: {
            const u32 q = field_.size();
            std::array<u32, 16> xd{}, yd{};
            u32 va = a.v, vb = b.v;
            for (u32 i = 0; i < e_; ++i) {
                xd[i] = va % q;
                va /= q;
                yd[i] = vb % q;
                vb /= q;
            }
            std::array<FElem, 16> out{};
            for (u32 i = 0; i < e_; ++i) {
                if (xd[i] == 0) continue;
                for (u32 j = 0; i + j < e_; ++j)
                    out[i + j] = field_.add(
                        out[i + j], field_.mul(FElem{xd[i]}, FElem{yd[j]}));
            }
            u32 v = 0;
            for (u32 i = e_; i-- > 0;) v = v * q + out[i].v;
            return RElem{v};
        }
    }
    throw std::logic_error("Ring: bad family");
}

RElem Ring::mul(RElem a, RElem b) const {
    if (tabs_) return RElem{mul_tab_[(std::size_t)a.v * size_ + b.v]};
    return raw_mul(a, b);
}

RElem Ring::pow(RElem a, u64 k) const {
    RElem r = one(), b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

RElem Ring::inv(RElem a) const {
    if (!is_unit(a)) throw std::invalid_argument("Ring: inverse of a non-unit");
    const u64 group = size_ - size_ / field_.size();  // |R^*| = p^{me} - p^{m(e-1)}
    return pow(a, group - 1);
}

unsigned Ring::raw_valuation(RElem a) const {
    if (a.v == 0) return e_;
    switch (family_) {
        case RingFamily::finite_field:
            return 0;
        case RingFamily::galois_ring: {
            std::array<u32, kMaxCoords> x{};
            flat_decode(a, x.data());
            unsigned best = e_;
            for (u32 i = 0; i < m_; ++i) {
                u32 c = x[i];
                if (c == 0) continue;
                unsigned v = 0;
                while (c % p_ == 0) {
                    c /= p_;
                    ++v;
                }
                best = std::min(best, v);
                if (best == 0) break;
            }
            return best;
        }
        case RingFamily::truncated_field_ring: {
            const u32 q = field_.size();
            u32 v = a.v;
            for (u32 i = 0; i < e_; ++i) {
                if (v % q != 0) return i;
                v /= q;
            }
            return e_;
        }
    }
    throw std::logic_error("Ring: bad family");
}

unsigned Ring::valuation(RElem a) const {
    if (tabs_) return val_tab_[a.v];
    return raw_valuation(a);
}

RElem Ring::divide_gamma_exact(RElem a, unsigned j) const {
    if (j == 0) return a;
    if (valuation(a) < j)
        throw std::invalid_argument("Ring: inexact division by gamma^j");
    if (a.v == 0) return a;
    switch (family_) {
        case RingFamily::finite_field:
            return zero();  // only the zero element has valuation >= 1
        case RingFamily::galois_ring: {
            std::array<u32, kMaxCoords> x{};
            flat_decode(a, x.data());
            u32 pj = 1;
            for (unsigned i = 0; i < j; ++i) pj *= p_;
            for (u32 i = 0; i < m_; ++i) x[i] /= pj;
            return flat_encode(x.data());
        }
        case RingFamily::truncated_field_ring: {
            u32 qj = 1;
            for (unsigned i = 0; i < j; ++i) qj *= field_.size();
            return RElem{a.v / qj};
        }
    }
    throw std::logic_error("Ring: bad family");
}

std::pair<RElem, RElem> Ring::gamma_split(RElem a, unsigned v) const {
    if (v == 0) return {a, zero()};
    if (v >= e_) return {zero(), a};
    switch (family_) {
        case RingFamily::finite_field:
            return {zero(), a};  // unreachable: v >= e was handled
        case RingFamily::galois_ring: {
            std::array<u32, kMaxCoords> x{}, qs{}, rs{};
            flat_decode(a, x.data());
            u32 pv = 1;
            for (unsigned i = 0; i < v; ++i) pv *= p_;
            for (u32 i = 0; i < m_; ++i) {
                qs[i] = x[i] / pv;
                rs[i] = x[i] % pv;
            }
            return {flat_encode(qs.data()), flat_encode(rs.data())};
        }
        case RingFamily::truncated_field_ring: {
            u32 qv = 1;
            for (unsigned i = 0; i < v; ++i) qv *= field_.size();
            return {RElem{a.v / qv}, RElem{a.v % qv}};
        }
    }
    throw std::logic_error("Ring: bad family");
}

FElem Ring::project(RElem a) const {
    switch (family_) {
        case RingFamily::finite_field:
            return FElem{a.v};
        case RingFamily::galois_ring: {
            std::array<u32, kMaxCoords> x{};
            flat_decode(a, x.data());
            u32 v = 0;
            for (u32 i = m_; i-- > 0;) v = v * p_ + x[i] % p_;
            return FElem{v};
        }
        case RingFamily::truncated_field_ring:
            return FElem{a.v % field_.size()};
    }
    throw std::logic_error("Ring: bad family");
}

RElem Ring::lift(FElem a) const {
    if (a.v >= field_.size())
        throw std::invalid_argument("Ring: residue element out of range");
    switch (family_) {
        case RingFamily::finite_field:
        case RingFamily::truncated_field_ring:
            return RElem{a.v};
        case RingFamily::galois_ring: {
            std::array<u32, kMaxCoords> x{};
            u32 v = a.v;
            for (u32 i = 0; i < m_; ++i) {
                x[i] = v % p_;
                v /= p_;
            }
            return flat_encode(x.data());
        }
    }
    throw std::logic_error("Ring: bad family");
}

RElem Ring::teichmuller_lift(FElem a) const {
    RElem z = lift(a);
    const u64 q = field_.size();
    for (u32 i = 0; i <= e_ + 1; ++i) {
        RElem nz = pow(z, q);
        if (nz == z) break;
        z = nz;
    }
    if (pow(z, q) != z || !(project(z) == a))
        throw std::logic_error("Ring: Teichmuller lift failed to stabilize");
    return z;
}

bool Ring::in_teichmuller(RElem a) const {
    return pow(a, field_.size()) == a;
}

std::vector<RElem> Ring::teichmuller_decompose(RElem a) const {
    std::vector<RElem> digits(e_);
    RElem b = a;
    for (u32 i = 0; i < e_; ++i) {
        digits[i] = teichmuller_lift(project(b));
        b = divide_gamma_exact(sub(b, digits[i]), 1);
    }
    if (!(teichmuller_recompose(digits) == a))
        throw std::logic_error("Ring: Teichmuller decomposition mismatch");
    return digits;
}

RElem Ring::teichmuller_recompose(std::span<const RElem> digits) const {
    if (digits.size() != e_)
        throw std::invalid_argument("Ring: digit count mismatch");
    RElem acc = zero();
    for (u32 i = 0; i < e_; ++i) {
        if (!in_teichmuller(digits[i]))
            throw std::invalid_argument("Ring: digit is not Teichmuller");
        acc = add(acc, mul(digits[i], gamma_pow(i)));
    }
    return acc;
}

RElem Ring::teichmuller_root(RElem theta, u64 s) const {
    if (is_zero(theta) || !in_teichmuller(theta))
        throw std::invalid_argument(
            "Ring: argument must be a nonzero Teichmuller element");
    const u64 q1 = (u64)field_.size() - 1;
    if (q1 <= 1) return theta;  // trivial group: theta == 1
    u64 ps = powmod_u64(p_, s, q1);
    u64 t = invmod_u64(ps, q1);
    return pow(theta, t);
}

std::vector<RElem> Ring::gamma_transversal(unsigned t) const {
    if (t > e_) throw std::invalid_argument("Ring: transversal level > e");
    std::array<u32, kMaxCoords> caps{};
    if (family_ == RingFamily::galois_ring) {
        u32 pt = 1;
        for (unsigned i = 0; i < t; ++i) pt *= p_;
        for (u32 i = 0; i < coord_cnt_; ++i) caps[i] = pt;
    } else {
        // truncated ring: first t*m base-p digits free; field: t == 0 or 1
        u32 free_cnt = (family_ == RingFamily::truncated_field_ring)
                           ? t * m_
                           : (t == 0 ? 0 : m_);
        for (u32 i = 0; i < coord_cnt_; ++i)
            caps[i] = i < free_cnt ? coord_mod_ : 1;
    }
    u64 total = 1;
    for (u32 i = 0; i < coord_cnt_; ++i) total *= caps[i];
    std::vector<RElem> out;
    out.reserve(total);
    std::array<u32, kMaxCoords> digits{};
    for (;;) {
        out.push_back(flat_encode(digits.data()));
        u32 i = 0;
        while (i < coord_cnt_ && digits[i] + 1 == caps[i]) digits[i++] = 0;
        if (i == coord_cnt_) break;
        ++digits[i];
    }
    return out;
}

bool Ring::same_ring(const Ring& other) const {
    return family_ == other.family_ && p_ == other.p_ && e_ == other.e_ &&
           m_ == other.m_ && modulus_ == other.modulus_;
}

std::string Ring::spec_string() const {
    std::ostringstream os;
    switch (family_) {
        case RingFamily::galois_ring:
            os << "GR(" << pe_ << "," << m_ << ")";
            break;
        case RingFamily::truncated_field_ring:
            os << "FU(" << field_.size() << "," << e_ << ")";
            break;
        case RingFamily::finite_field:
            os << "F(" << field_.size() << ")";
            break;
    }
    if (!default_modulus_) {
        os << ";mod=[";
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (i) os << ",";
            os << modulus_[i];
        }
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace {

u64 parse_u64_strict(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("ring spec: expected an unsigned integer, got '" +
                                    s + "'");
    return std::stoull(s);
}

std::pair<u32, u32> factor_prime_power(u64 x) {
    if (x < 2) throw std::invalid_argument("ring spec: size must be >= 2");
    u64 p = 2;
    while (p * p <= x && x % p != 0) ++p;
    if (x % p != 0) p = x;  // x itself prime
    u32 k = 0;
    u64 r = x;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1)
        throw std::invalid_argument("ring spec: size is not a prime power");
    if (p > 0xffffffffULL)
        throw std::invalid_argument("ring spec: prime too large");
    return {(u32)p, k};
}

std::vector<u32> parse_mod_list(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("ring spec: mod= expects [c0,c1,...]");
    std::vector<u32> out;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty())
        throw std::invalid_argument("ring spec: empty modulus list");
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty())
            throw std::invalid_argument("ring spec: empty modulus entry");
        bool neg = tok[0] == '-';
        u64 mag = parse_u64_strict(neg ? tok.substr(1) : tok);
        if (mag > 0x7fffffffULL)
            throw std::invalid_argument("ring spec: modulus entry too large");
        // negatives are folded into the coefficient base later; store a
        // sentinel by reducing modulo a wide base here is impossible, so
        // keep magnitude and sign via two's-complement-free encoding:
        out.push_back(neg ? (u32)(0x80000000ULL | mag) : (u32)mag);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

std::shared_ptr<const Ring> Ring::parse(const std::string& spec) {
    std::string s;
    s.reserve(spec.size());
    for (char c : spec)
        if (!std::isspace((unsigned char)c)) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("ring spec: empty");

    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t semi = s.find(';', pos);
        parts.push_back(s.substr(
            pos, semi == std::string::npos ? std::string::npos : semi - pos));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }

    const std::string& head = parts[0];
    std::size_t lp = head.find('(');
    if (lp == std::string::npos || head.back() != ')')
        throw std::invalid_argument("ring spec: expected NAME(args)");
    std::string name = head.substr(0, lp);
    std::string args = head.substr(lp + 1, head.size() - lp - 2);
    std::vector<std::string> argv;
    pos = 0;
    while (pos <= args.size()) {
        std::size_t comma = args.find(',', pos);
        argv.push_back(args.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    RingFamily family;
    u32 p, e, m;
    if (name == "GR") {
        if (argv.size() != 2)
            throw std::invalid_argument("ring spec: GR expects (q,m)");
        auto [pp, ee] = factor_prime_power(parse_u64_strict(argv[0]));
        p = pp;
        e = ee;
        m = (u32)parse_u64_strict(argv[1]);
        family = e == 1 ? RingFamily::finite_field : RingFamily::galois_ring;
    } else if (name == "FU") {
        if (argv.size() != 2)
            throw std::invalid_argument("ring spec: FU expects (q,e)");
        auto [pp, mm] = factor_prime_power(parse_u64_strict(argv[0]));
        p = pp;
        m = mm;
        e = (u32)parse_u64_strict(argv[1]);
        family = e == 1 ? RingFamily::finite_field
                        : RingFamily::truncated_field_ring;
    } else if (name == "F") {
        if (argv.size() != 1)
            throw std::invalid_argument("ring spec: F expects (q)");
        auto [pp, mm] = factor_prime_power(parse_u64_strict(argv[0]));
        p = pp;
        m = mm;
        e = 1;
        family = RingFamily::finite_field;
    } else {
        throw std::invalid_argument("ring spec: unknown family '" + name + "'");
    }

    std::optional<std::vector<u32>> modulus;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].rfind("mod=", 0) != 0)
            throw std::invalid_argument("ring spec: unknown option '" +
                                        parts[i] + "'");
        if (modulus)
            throw std::invalid_argument("ring spec: duplicate mod= option");
        std::vector<u32> raw = parse_mod_list(parts[i].substr(4));
        // fold the sign sentinel into the coefficient base
        u64 base = (family == RingFamily::galois_ring)
                       ? checked_pow(p, e, kMaxRingSize, "Ring")
                       : p;
        std::vector<u32> folded;
        folded.reserve(raw.size());
        for (u32 v : raw) {
            if (v & 0x80000000U) {
                u64 mag = (v & 0x7fffffffU) % base;
                folded.push_back((u32)((base - mag) % base));
            } else {
                folded.push_back((u32)(v % base));
            }
        }
        modulus = std::move(folded);
    }

    return make(family, p, e, m, std::move(modulus));
}

}  // namespace ccdepth
