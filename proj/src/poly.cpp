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

#include "ccdepth/poly.hpp"

#include <algorithm>

#include "ccdepth/errors.hpp"

namespace ccdepth {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Candidate scans (irreducibility, factor search) enumerate q^d monic
// polynomials; beyond this the input is out of the tool's intended scale.
constexpr u64 kFactorScanLimit = u64{1} << 24;

u64 scan_cost(u32 q, unsigned d) {
    u64 r = 1;
    for (unsigned i = 0; i < d; ++i) {
        r *= q;
        if (r > kFactorScanLimit) return r;
    }
    return r;
}

// Applies fn to every monic polynomial of degree d over F, low coefficient
// advancing fastest.  fn returns true to stop early.
template <class Fn>
void for_each_monic(const Field& F, unsigned d, Fn fn) {
    const u32 q = F.size();
    FPoly cand;
    cand.c.assign(d + 1, F.zero());
    cand.c[d] = F.one();
    for (;;) {
        if (fn(cand)) return;
        unsigned i = 0;
        while (i < d && cand.c[i].v + 1 == q) cand.c[i++] = F.zero();
        if (i == d) return;
        ++cand.c[i].v;
    }
}

}  // namespace

FPoly fpoly_make_monic(const Field& F, const FPoly& f) {
    if (f.is_zero()) return f;
    if (f.c.back() == F.one()) return f;
    return poly_scale(F, F.inv(f.c.back()), f);
}

std::pair<FPoly, FPoly> fpoly_divmod(const Field& F, const FPoly& a,
                                     const FPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("fpoly_divmod: divisor is zero");
    FElem lc = b.c.back();
    if (lc == F.one()) return divmod_monic(F, a, b);
    FPoly bm = poly_scale(F, F.inv(lc), b);
    auto [q, r] = divmod_monic(F, a, bm);
    return {poly_scale(F, F.inv(lc), q), r};
}

FPoly fpoly_gcd(const Field& F, FPoly a, FPoly b) {
    while (!b.is_zero()) {
        FPoly r = fpoly_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fpoly_make_monic(F, a);
}

std::tuple<FPoly, FPoly, FPoly> fpoly_ext_gcd(const Field& F, const FPoly& a,
                                              const FPoly& b) {
    FPoly r0 = a, r1 = b;
    FPoly s0 = poly_one(F), s1;
    FPoly t0, t1 = poly_one(F);
    while (!r1.is_zero()) {
        auto [q, r] = fpoly_divmod(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FPoly ns = poly_sub(F, s0, poly_mul(F, q, s1));
        s0 = std::move(s1);
        s1 = std::move(ns);
        FPoly nt = poly_sub(F, t0, poly_mul(F, q, t1));
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    FElem lc = r0.c.back();
    if (lc == F.one()) return {r0, s0, t0};
    FElem ilc = F.inv(lc);
    return {poly_scale(F, ilc, r0), poly_scale(F, ilc, s0),
            poly_scale(F, ilc, t0)};
}

unsigned fpoly_multiplicity(const Field& F, const FPoly& f, const FPoly& g) {
    if (f.is_zero() || f.degree().value_or(0) < 1)
        throw std::invalid_argument("fpoly_multiplicity: factor must have degree >= 1");
    if (g.is_zero())
        throw std::invalid_argument("fpoly_multiplicity: target is zero");
    unsigned t = 0;
    FPoly rem = g;
    for (;;) {
        auto [q, r] = fpoly_divmod(F, rem, f);
        if (!r.is_zero()) return t;
        ++t;
        rem = std::move(q);
        if (rem.degree().value_or(0) < f.degree().value()) {
            // one more exact division is impossible
            return t;
        }
    }
}

bool fpoly_is_irreducible(const Field& F, const FPoly& f) {
    if (f.is_zero() || f.degree().value() < 1) return false;
    const unsigned deg = (unsigned)f.degree().value();
    if (deg == 1) return true;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        if (scan_cost(F.size(), d) > kFactorScanLimit)
            throw cap_exceeded_error(
                "irreducibility scan too large for this field/degree");
        bool divisor_found = false;
        for_each_monic(F, d, [&](const FPoly& cand) {
            if (fpoly_divmod(F, f, cand).second.is_zero()) {
                divisor_found = true;
                return true;
            }
            return false;
        });
        if (divisor_found) return false;
    }
    return true;
}

FPoly fpoly_x_minus_one(const Field& F) {
    FPoly f;
    f.c = {F.neg(F.one()), F.one()};
    return f;
}

FPoly fpoly_xn_minus(const Field& F, unsigned N, FElem eta) {
    if (N == 0) throw std::invalid_argument("fpoly_xn_minus: N must be >= 1");
    FPoly f;
    f.c.assign(N + 1, F.zero());
    f.c[0] = F.neg(eta);
    f.c[N] = F.one();
    return f;
}

namespace {

bool is_x_minus_one(const Field& F, const FPoly& f) {
    return f.c.size() == 2 && f.c[1] == F.one() && f.c[0] == F.neg(F.one());
}

}  // namespace

bool canonical_factor_less(const Field& F, const FPoly& a, const FPoly& b) {
    bool ax = is_x_minus_one(F, a), bx = is_x_minus_one(F, b);
    if (ax != bx) return ax;
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i].v != b.c[i].v) return a.c[i].v < b.c[i].v;
    }
    return false;
}

std::vector<FPoly> factor_xn_minus_a(const Field& F, unsigned n, FElem abar) {
    if (n == 0) throw std::invalid_argument("factor: n must be >= 1");
    if (F.is_zero(abar))
        throw std::invalid_argument("factor: constant term must be nonzero");
    if (n % F.characteristic() == 0)
        throw std::invalid_argument("factor: n must be coprime to p");

    const FPoly target = fpoly_xn_minus(F, n, abar);
    FPoly rem = target;
    std::vector<FPoly> factors;
    for (unsigned d = 1; rem.degree().value() >= 1 && 2 * d <= (unsigned)rem.degree().value();) {
        if (scan_cost(F.size(), d) > kFactorScanLimit)
            throw cap_exceeded_error("factor search too large for this field/degree");
        bool found = false;
        for_each_monic(F, d, [&](const FPoly& cand) {
            auto [q, r] = fpoly_divmod(F, rem, cand);
            if (r.is_zero()) {
                factors.push_back(cand);
                rem = std::move(q);
                found = true;
                return true;  // restart the scan of this degree on the quotient
            }
            return false;
        });
        if (!found) ++d;
    }
    if (rem.degree().value() >= 1) factors.push_back(rem);

    std::sort(factors.begin(), factors.end(),
              [&](const FPoly& a, const FPoly& b) {
                  return canonical_factor_less(F, a, b);
              });

    FPoly prod = poly_one(F);
    for (const auto& f : factors) prod = poly_mul(F, prod, f);
    if (!(prod == target))
        throw std::logic_error("factor: product check failed");
    return factors;
}

// ---------------------------------------------------------------------------
// ring/field bridge
// ---------------------------------------------------------------------------

FPoly project_poly(const Ring& R, const RPoly& f) {
    FPoly out;
    out.c.reserve(f.c.size());
    for (RElem x : f.c) out.c.push_back(R.project(x));
    poly_normalize(R.residue_field(), out);
    return out;
}

RPoly lift_poly(const Ring& R, const FPoly& f) {
    RPoly out;
    out.c.reserve(f.c.size());
    for (FElem x : f.c) out.c.push_back(R.lift(x));
    poly_normalize(R, out);
    return out;
}

RPoly xn_minus_lambda(const Ring& R, unsigned N, RElem lambda) {
    if (N == 0) throw std::invalid_argument("xn_minus_lambda: N must be >= 1");
    RPoly f;
    f.c.assign(N + 1, R.zero());
    f.c[0] = R.neg(lambda);
    f.c[N] = R.one();
    return f;
}

RPoly mul_mod(const Ring& R, const RPoly& a, const RPoly& b, unsigned N,
              RElem lambda) {
    if (N == 0) throw std::invalid_argument("mul_mod: N must be >= 1");
    if (!R.is_unit(lambda))
        throw std::invalid_argument("mul_mod: lambda must be a unit");
    if (a.c.size() > N || b.c.size() > N)
        throw std::invalid_argument("mul_mod: operand degree must be < N");
    RPoly prod = poly_mul(R, a, b);
    for (std::size_t i = prod.c.size(); i-- > N;) {
        if (!R.is_zero(prod.c[i]))
            prod.c[i - N] = R.add(prod.c[i - N], R.mul(lambda, prod.c[i]));
    }
    if (prod.c.size() > N) prod.c.resize(N);
    poly_normalize(R, prod);
    return prod;
}

RPoly pow_mod(const Ring& R, RPoly base, std::uint64_t k, unsigned N,
              RElem lambda) {
    if (N == 0) throw std::invalid_argument("pow_mod: N must be >= 1");
    if (base.c.size() > N)
        base = divmod_monic(R, base, xn_minus_lambda(R, N, lambda)).second;
    RPoly r = poly_one(R);
    while (k) {
        if (k & 1) r = mul_mod(R, r, base, N, lambda);
        base = mul_mod(R, base, base, N, lambda);
        k >>= 1;
    }
    return r;
}

namespace {

// One two-factor lift: given monic f over R and a coprime monic residue
// split proj(f) = gbar * hbar, produces the unique monic (g, h) over R with
// f = g * h, proj(g) = gbar, proj(h) = hbar.
std::pair<RPoly, RPoly> hensel_pair(const Ring& R, const RPoly& f,
                                    const FPoly& gbar, const FPoly& hbar) {
    const Field& F = R.residue_field();
    auto [d, abar, bbar] = fpoly_ext_gcd(F, gbar, hbar);
    if (!(d == poly_one(F)))
        throw std::invalid_argument("hensel: residue factors are not coprime");

    RPoly g = lift_poly(R, gbar);
    RPoly h = lift_poly(R, hbar);
    for (unsigned j = 1; j < R.e(); ++j) {
        RPoly err = poly_sub(R, f, poly_mul(R, g, h));
        if (err.is_zero()) break;
        FPoly ebar;
        ebar.c.reserve(err.c.size());
        for (RElem x : err.c) {
            if (R.valuation(x) < j)
                throw std::logic_error("hensel: error term valuation too small");
            ebar.c.push_back(R.project(R.divide_gamma_exact(x, j)));
        }
        poly_normalize(F, ebar);
        if (ebar.is_zero()) continue;

        auto [q, v] = fpoly_divmod(F, poly_mul(F, ebar, bbar), gbar);
        FPoly u = poly_add(F, poly_mul(F, ebar, abar), poly_mul(F, q, hbar));
        if (u.degree().value_or(-1) >= hbar.degree().value())
            throw std::logic_error("hensel: cofactor degree overflow");
        RElem gj = R.gamma_pow(j);
        g = poly_add(R, g, poly_scale(R, gj, lift_poly(R, v)));
        h = poly_add(R, h, poly_scale(R, gj, lift_poly(R, u)));
    }
    if (!(poly_mul(R, g, h) == f))
        throw std::logic_error("hensel: recomposition failed");
    return {g, h};
}

}  // namespace

std::vector<RPoly> hensel_lift_factors(const Ring& R, unsigned n, RElem alpha0,
                                       const std::vector<FPoly>& residue_factors) {
    const Field& F = R.residue_field();
    if (R.is_zero(alpha0) || !R.in_teichmuller(alpha0))
        throw std::invalid_argument("hensel: alpha0 must be nonzero Teichmuller");
    if (n == 0 || n % R.p() == 0)
        throw std::invalid_argument("hensel: n must be >= 1 and coprime to p");
    if (residue_factors.empty())
        throw std::invalid_argument("hensel: empty factor list");
    FPoly prod = poly_one(F);
    for (const auto& fb : residue_factors) {
        if (!is_monic(F, fb) || fb.degree().value() < 1)
            throw std::invalid_argument("hensel: factors must be monic nonconstant");
        prod = poly_mul(F, prod, fb);
    }
    if (!(prod == fpoly_xn_minus(F, n, R.project(alpha0))))
        throw std::invalid_argument(
            "hensel: factors do not multiply to x^n - proj(alpha0)");
    for (std::size_t i = 0; i < residue_factors.size(); ++i)
        for (std::size_t j = i + 1; j < residue_factors.size(); ++j)
            if (fpoly_gcd(F, residue_factors[i], residue_factors[j]) !=
                poly_one(F))
                throw std::invalid_argument("hensel: factors are not pairwise coprime");

    RPoly target = xn_minus_lambda(R, n, alpha0);
    std::vector<RPoly> out;
    out.reserve(residue_factors.size());
    for (std::size_t i = 0; i + 1 < residue_factors.size(); ++i) {
        FPoly rest = poly_one(F);
        for (std::size_t j = i + 1; j < residue_factors.size(); ++j)
            rest = poly_mul(F, rest, residue_factors[j]);
        auto [g, h] = hensel_pair(R, target, residue_factors[i], rest);
        out.push_back(std::move(g));
        target = std::move(h);
    }
    if (!(project_poly(R, target) == residue_factors.back()))
        throw std::logic_error("hensel: final factor projection mismatch");
    out.push_back(std::move(target));
    return out;
}

BaseRoot teichmuller_base_root(const Ring& R, RElem lambda, unsigned N) {
    if (!R.is_unit(lambda))
        throw std::invalid_argument("base_root: lambda must be a unit");
    if (N == 0) throw std::invalid_argument("base_root: N must be >= 1");
    BaseRoot br;
    unsigned n = N, s = 0;
    std::uint64_t ps = 1;
    while (n % R.p() == 0) {
        n /= R.p();
        ++s;
        ps *= R.p();
    }
    br.n = n;
    br.s = s;
    br.ps = ps;
    br.alpha = R.teichmuller_lift(R.project(lambda));
    RElem diff = R.sub(lambda, br.alpha);
    unsigned v = R.valuation(diff);
    if (v >= R.e()) {
        br.beta = R.zero();
        br.beta_class = BetaClass::zero;
    } else {
        br.beta = R.divide_gamma_exact(diff, 1);
        br.beta_class = v == 1 ? BetaClass::unit : BetaClass::nonzero_nonunit;
    }
    br.alpha0 = R.teichmuller_root(br.alpha, s);
    return br;
}

}  // namespace ccdepth
