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

#ifndef CCDEPTH_POLY_HPP
#define CCDEPTH_POLY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "ccdepth/chain_ring.hpp"

namespace ccdepth {

/// Dense polynomial over an algebra A (Ring or Field): coefficients low
/// degree first with no trailing zeros, so the empty vector is the zero
/// polynomial and degree() is nullopt there.
template <class A>
struct PolyT {
    using elem_type = typename A::elem_type;
    std::vector<elem_type> c;

    bool is_zero() const { return c.empty(); }
    std::optional<int> degree() const {
        if (c.empty()) return std::nullopt;
        return (int)c.size() - 1;
    }
    friend bool operator==(const PolyT&, const PolyT&) = default;
};

using RPoly = PolyT<Ring>;
using FPoly = PolyT<Field>;

template <class A>
void poly_normalize(const A& alg, PolyT<A>& f) {
    while (!f.c.empty() && alg.is_zero(f.c.back())) f.c.pop_back();
}

template <class A>
PolyT<A> poly_from_coeffs(const A& alg,
                          std::vector<typename A::elem_type> coeffs) {
    PolyT<A> f{std::move(coeffs)};
    poly_normalize(alg, f);
    return f;
}

template <class A>
PolyT<A> poly_constant(const A& alg, typename A::elem_type v) {
    PolyT<A> f;
    if (!alg.is_zero(v)) f.c.push_back(v);
    return f;
}

template <class A>
PolyT<A> poly_one(const A& alg) {
    return poly_constant(alg, alg.one());
}

template <class A>
bool is_monic(const A& alg, const PolyT<A>& f) {
    return !f.c.empty() && f.c.back() == alg.one();
}

template <class A>
PolyT<A> poly_add(const A& alg, const PolyT<A>& a, const PolyT<A>& b) {
    PolyT<A> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), alg.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = alg.add(r.c[i], b.c[i]);
    poly_normalize(alg, r);
    return r;
}

template <class A>
PolyT<A> poly_sub(const A& alg, const PolyT<A>& a, const PolyT<A>& b) {
    PolyT<A> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), alg.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = alg.sub(r.c[i], b.c[i]);
    poly_normalize(alg, r);
    return r;
}

template <class A>
PolyT<A> poly_neg(const A& alg, const PolyT<A>& a) {
    PolyT<A> r = a;
    for (auto& x : r.c) x = alg.neg(x);
    return r;
}

template <class A>
PolyT<A> poly_scale(const A& alg, typename A::elem_type s, const PolyT<A>& f) {
    PolyT<A> r = f;
    for (auto& x : r.c) x = alg.mul(s, x);
    poly_normalize(alg, r);
    return r;
}

template <class A>
PolyT<A> poly_mul(const A& alg, const PolyT<A>& a, const PolyT<A>& b) {
    PolyT<A> r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1, alg.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (alg.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = alg.add(r.c[i + j], alg.mul(a.c[i], b.c[j]));
    }
    poly_normalize(alg, r);
    return r;
}

template <class A>
PolyT<A> poly_pow(const A& alg, PolyT<A> base, std::uint64_t k) {
    PolyT<A> r = poly_one(alg);
    while (k) {
        if (k & 1) r = poly_mul(alg, r, base);
        base = poly_mul(alg, base, base);
        k >>= 1;
    }
    return r;
}

/// Division with remainder by a monic divisor; valid over any coefficient
/// ring.  Returns (quotient, remainder) with deg r < deg b.
template <class A>
std::pair<PolyT<A>, PolyT<A>> divmod_monic(const A& alg, const PolyT<A>& a,
                                           const PolyT<A>& b) {
    if (!is_monic(alg, b))
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    PolyT<A> q, r = a;
    if (a.c.size() < b.c.size()) return {q, r};
    q.c.resize(a.c.size() - b.c.size() + 1, alg.zero());
    while (r.c.size() >= b.c.size()) {
        typename A::elem_type lead = r.c.back();
        std::size_t off = r.c.size() - b.c.size();
        if (!alg.is_zero(lead)) {
            q.c[off] = lead;
            for (std::size_t j = 0; j + 1 < b.c.size(); ++j)
                r.c[off + j] = alg.sub(r.c[off + j], alg.mul(lead, b.c[j]));
        }
        r.c.pop_back();
        while (!r.c.empty() && alg.is_zero(r.c.back())) r.c.pop_back();
        if (r.c.size() < b.c.size()) break;
    }
    poly_normalize(alg, q);
    return {q, r};
}

// ---- field-specific operations ----

FPoly fpoly_make_monic(const Field& F, const FPoly& f);
/// General division; divisor must be nonzero.
std::pair<FPoly, FPoly> fpoly_divmod(const Field& F, const FPoly& a,
                                     const FPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FPoly fpoly_gcd(const Field& F, FPoly a, FPoly b);
/// (g, u, v) with g = u*a + v*b monic (or zero when a = b = 0).
std::tuple<FPoly, FPoly, FPoly> fpoly_ext_gcd(const Field& F, const FPoly& a,
                                              const FPoly& b);
/// Largest t with f^t dividing g; requires deg f >= 1 and g != 0.
unsigned fpoly_multiplicity(const Field& F, const FPoly& f, const FPoly& g);
/// Irreducibility over F_q by trial division (desk scale; throws
/// cap_exceeded_error if the candidate scan would be too large).
bool fpoly_is_irreducible(const Field& F, const FPoly& f);

/// x - 1 over the field.
FPoly fpoly_x_minus_one(const Field& F);
/// x^N - eta over the field.
FPoly fpoly_xn_minus(const Field& F, unsigned N, FElem eta);

/// Canonical order of monic residue factors: x - 1 first, then ascending
/// degree, ties broken by comparing coefficients from the highest degree
/// downward by canonical index.
bool canonical_factor_less(const Field& F, const FPoly& a, const FPoly& b);

/// The distinct monic irreducible factors of x^n - abar over the residue
/// field, in canonical order.  Requires abar != 0 and gcd(n, p) = 1 (the
/// polynomial is then squarefree).
std::vector<FPoly> factor_xn_minus_a(const Field& F, unsigned n, FElem abar);

// ---- ring/field bridge and lifting ----

FPoly project_poly(const Ring& R, const RPoly& f);
RPoly lift_poly(const Ring& R, const FPoly& f);
/// x^N - lambda over the ring.
RPoly xn_minus_lambda(const Ring& R, unsigned N, RElem lambda);

/// Product in R[x]/(x^N - lambda), coefficients folded with x^N = lambda.
/// Requires deg a, deg b < N and lambda a unit.
RPoly mul_mod(const Ring& R, const RPoly& a, const RPoly& b, unsigned N,
              RElem lambda);

/// base^k in R[x]/(x^N - lambda); base is reduced first, so any degree is
/// accepted.
RPoly pow_mod(const Ring& R, RPoly base, std::uint64_t k, unsigned N,
              RElem lambda);

/// Lifts the pairwise-coprime monic factorization of x^n - proj(alpha0)
/// over the residue field to the unique monic factorization of x^n - alpha0
/// over the ring (factor i projects onto residue_factors[i]).  alpha0 must
/// be a nonzero Teichmuller element with gcd(n, p) = 1.
std::vector<RPoly> hensel_lift_factors(const Ring& R, unsigned n, RElem alpha0,
                                       const std::vector<FPoly>& residue_factors);

enum class BetaClass { zero, unit, nonzero_nonunit };

/// The data of the decomposition lambda = alpha + gamma * beta with alpha
/// Teichmuller, together with N = n * p^s (p not dividing n) and the
/// Teichmuller root alpha0 with alpha0^{p^s} = alpha.
struct BaseRoot {
    RElem alpha;
    RElem beta;
    BetaClass beta_class;
    RElem alpha0;
    unsigned n = 0;
    unsigned s = 0;
    std::uint64_t ps = 1;  // p^s
};

/// Requires lambda a unit and N >= 1.
BaseRoot teichmuller_base_root(const Ring& R, RElem lambda, unsigned N);

}  // namespace ccdepth

#endif  // CCDEPTH_POLY_HPP
