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

#ifndef CCDEPTH_CHAIN_RING_HPP
#define CCDEPTH_CHAIN_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ccdepth {

/// Element of a residue field F_{p^m}.  The value is a canonical index in
/// [0, p^m): the coordinate vector (a_0, ..., a_{m-1}) over Z_p encoded as
/// sum a_i * p^i.  Elements are plain values; all arithmetic goes through a
/// Field instance, and indices are only meaningful relative to the field
/// that produced them.
struct FElem {
    std::uint32_t v = 0;
    friend auto operator<=>(const FElem&, const FElem&) = default;
};

/// Arithmetic of a finite field F_{p^m} = F_p[x]/(h) with h monic
/// irreducible of degree m.  Construction validates the modulus; after
/// that every method is const and the object may be shared across threads.
class Field {
public:
    using elem_type = FElem;

    /// modulus: coefficients (c_0, ..., c_m) of h, low degree first,
    /// c_m == 1, irreducible over F_p.  Throws std::invalid_argument on a
    /// non-prime p or an invalid modulus.
    Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t size() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FElem zero() const { return FElem{0}; }
    FElem one() const { return FElem{1}; }
    bool is_zero(FElem a) const { return a.v == 0; }

    /// Image of the integer k under Z -> F_{p^m} (k times the identity).
    FElem from_int(std::int64_t k) const;

    /// Coordinates (a_0, ..., a_{m-1}) over Z_p, values already reduced.
    std::vector<std::uint32_t> coords(FElem a) const;
    /// Inverse of coords(); entries are reduced mod p.  Length must be m.
    FElem from_coords(std::span<const std::uint32_t> c) const;

    FElem add(FElem a, FElem b) const;
    FElem sub(FElem a, FElem b) const;
    FElem neg(FElem a) const;
    FElem mul(FElem a, FElem b) const;
    FElem pow(FElem a, std::uint64_t k) const;
    /// Multiplicative inverse; throws std::invalid_argument on zero.
    FElem inv(FElem a) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t mul_order(FElem a) const;
    /// The generator of F_{p^m}^* with the smallest canonical index.
    FElem smallest_primitive() const;

    /// Structural equality: same p and same modulus.
    bool same_field(const Field& other) const {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

    /// True if the monic polynomial with the given coefficients (low degree
    /// first, over Z_p) is irreducible over F_p.  Helper used for modulus
    /// validation and default modulus search; works without a Field.
    static bool is_irreducible_mod_p(std::uint32_t p,
                                     std::span<const std::uint32_t> coeffs);
    /// Lexicographically smallest monic irreducible of degree m over F_p:
    /// candidates ordered by (c_0, c_1, ..., c_{m-1}).
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p,
                                                      std::uint32_t m);

private:
    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;

    void decode(FElem a, std::uint32_t* out) const;
    FElem encode(const std::uint32_t* c) const;
};

/// The three shapes of a finite commutative chain ring supported here.
/// In every case gamma generates the maximal ideal, gamma^e = 0, and the
/// residue field is F_{p^m}.
enum class RingFamily {
    galois_ring,           // GR(p^e, m) = Z_{p^e}[x]/(h), gamma = p
    truncated_field_ring,  // F_{p^m}[u]/(u^e),            gamma = u
    finite_field,          // F_{p^m}, e = 1,               gamma = 0
};

/// Element of a chain ring, a canonical index in [0, |R|).
/// Galois rings / finite fields index the coordinate vector over Z_{p^e}
/// (resp. Z_p) in mixed radix; truncated rings index the digit vector
/// (d_0, ..., d_{e-1}) over F_{p^m} as sum d_i.v * q^i.
struct RElem {
    std::uint32_t v = 0;
    friend auto operator<=>(const RElem&, const RElem&) = default;
};

/// A finite commutative chain ring R with residue field F_q, q = p^m, and
/// nilpotency index e (|R| = p^{me}).  Instances are immutable after
/// construction (the Teichmuller set and related caches are built eagerly),
/// so a shared Ring is safe for concurrent readers.
///
/// Construction is via parse() or make(); both return shared_ptr because
/// dependent objects (codes, bases) keep the ring alive.
class Ring {
public:
    using elem_type = RElem;

    /// Grammar: "GR(q,m)" with q = p^e, "FU(q,e)" with q = p^m, or "F(q)";
    /// an optional ";mod=[c0,c1,...,1]" overrides the default modulus of
    /// the coefficient extension (over Z_{p^e} for GR, over F_p otherwise).
    /// Whitespace is ignored.  Throws std::invalid_argument on malformed
    /// input, non prime-power sizes, or a reducible modulus.
    static std::shared_ptr<const Ring> parse(const std::string& spec);

    static std::shared_ptr<const Ring> make(
        RingFamily family, std::uint32_t p, std::uint32_t e, std::uint32_t m,
        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    RingFamily family() const { return family_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t size() const { return size_; }
    const Field& residue_field() const { return field_; }

    /// Canonical spec string; parse(spec_string()) reconstructs an equal
    /// ring.  The ";mod=" suffix appears only for non-default moduli.
    std::string spec_string() const;
    bool same_ring(const Ring& other) const;

    /// Number of canonical coordinates per element: m for Galois rings and
    /// fields, e*m for truncated rings.
    std::size_t coord_count() const;
    /// The modulus each canonical coordinate is reduced by: p^e for Galois
    /// rings, p otherwise.
    std::uint32_t coord_modulus() const;
    std::vector<std::uint32_t> coords(RElem a) const;
    RElem from_coords(std::span<const std::uint32_t> c) const;

    RElem zero() const { return RElem{0}; }
    RElem one() const;
    RElem gamma() const;
    RElem from_int(std::int64_t k) const;

    RElem add(RElem a, RElem b) const;
    RElem sub(RElem a, RElem b) const;
    RElem neg(RElem a) const;
    RElem mul(RElem a, RElem b) const;
    RElem pow(RElem a, std::uint64_t k) const;
    /// Inverse of a unit; throws std::invalid_argument on a non-unit.
    RElem inv(RElem a) const;

    bool is_zero(RElem a) const { return a.v == 0; }
    bool is_unit(RElem a) const { return valuation(a) == 0; }

    /// The gamma-adic valuation: largest t <= e with a in (gamma^t).
    /// Zero has valuation e.
    unsigned valuation(RElem a) const;
    RElem gamma_pow(unsigned t) const;
    /// a / gamma^j for a with valuation >= j (exact; throws otherwise).
    RElem divide_gamma_exact(RElem a, unsigned j) const;
    /// Splits a = q * gamma^v + r with r the canonical representative of
    /// a mod (gamma^v); returns (q, r).  For valuation(a) >= v, r == 0.
    std::pair<RElem, RElem> gamma_split(RElem a, unsigned v) const;

    /// Reduction mod gamma onto the residue field.
    FElem project(RElem a) const;
    /// Coefficientwise section of project() (not multiplicative).
    RElem lift(FElem a) const;
    /// The Teichmuller (multiplicative) section: the unique preimage fixed
    /// by x -> x^q.
    RElem teichmuller_lift(FElem a) const;
    /// {0, 1, zeta, zeta^2, ..., zeta^{q-2}} in that order.
    const std::vector<RElem>& teichmuller_set() const { return teich_; }
    bool in_teichmuller(RElem a) const;
    /// teichmuller_lift of the smallest primitive residue element; equals
    /// one() when q = 2.
    RElem zeta() const { return zeta_; }

    /// The digits (r_0, ..., r_{e-1}) of the unique expansion
    /// a = sum r_i gamma^i with every r_i Teichmuller.
    std::vector<RElem> teichmuller_decompose(RElem a) const;
    RElem teichmuller_recompose(std::span<const RElem> digits) const;

    /// For theta in the Teichmuller set, the unique Teichmuller theta_0 with
    /// theta_0^{p^s} = theta.  Throws on zero / non-Teichmuller input.
    RElem teichmuller_root(RElem theta, std::uint64_t s) const;

    /// Canonical transversal of R / (gamma^t), ascending by index; size
    /// p^{mt}.  t = 0 yields {0}, t = e yields every element.
    std::vector<RElem> gamma_transversal(unsigned t) const;

private:
    Ring(RingFamily family, std::uint32_t p, std::uint32_t e, std::uint32_t m,
         std::vector<std::uint32_t> modulus, bool default_modulus);

    RingFamily family_;
    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t m_;
    std::uint64_t size_;
    std::uint32_t pe_;                    // p^e
    std::uint32_t coord_mod_;             // p^e for GR, p otherwise
    std::uint32_t coord_cnt_;             // m for GR/FF, e*m for TR
    std::vector<std::uint32_t> modulus_;  // GR: over Z_{p^e}; else over F_p
    bool default_modulus_;
    Field field_;
    std::vector<RElem> teich_;
    RElem zeta_;
    // Dense operation tables, built for small rings so elementwise loops
    // avoid repeated decode/encode round trips.
    std::vector<std::uint32_t> add_tab_, sub_tab_, mul_tab_;
    std::vector<std::uint8_t> val_tab_;
    bool tabs_ = false;

    void flat_decode(RElem a, std::uint32_t* out) const;
    RElem flat_encode(const std::uint32_t* c) const;
    RElem raw_add(RElem a, RElem b) const;
    RElem raw_sub(RElem a, RElem b) const;
    RElem raw_mul(RElem a, RElem b) const;
    unsigned raw_valuation(RElem a) const;
};

/// Vector over a chain ring, the ambient object for codewords.
using RVec = std::vector<RElem>;

}  // namespace ccdepth

#endif  // CCDEPTH_CHAIN_RING_HPP
