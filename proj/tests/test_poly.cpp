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

#include <random>
#include <stdexcept>

#include "doctest.h"

#include "ccdepth/chain_ring.hpp"
#include "ccdepth/poly.hpp"
#include "util.hpp"

using namespace ccdepth;
using namespace ccdepth::testutil;

namespace {

RPoly random_rpoly(const Ring& R, std::mt19937& rng, unsigned maxdeg) {
    std::uniform_int_distribution<unsigned> dd(0, maxdeg);
    std::uniform_int_distribution<std::uint32_t> dc(0, (std::uint32_t)R.size() - 1);
    std::vector<RElem> c(dd(rng) + 1);
    for (auto& x : c) x = RElem{dc(rng)};
    return poly_from_coeffs(R, std::move(c));
}

FPoly random_fpoly(const Field& F, std::mt19937& rng, unsigned maxdeg) {
    std::uniform_int_distribution<unsigned> dd(0, maxdeg);
    std::uniform_int_distribution<std::uint32_t> dc(0, F.size() - 1);
    std::vector<FElem> c(dd(rng) + 1);
    for (auto& x : c) x = FElem{dc(rng)};
    return poly_from_coeffs(F, std::move(c));
}

}  // namespace

TEST_CASE("zero and degree conventions") {
    auto Rp = Ring::parse("GR(4,1)");
    const Ring& R = *Rp;
    RPoly z;
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK(rp(R, {0, 0}).is_zero());
    CHECK(rp(R, {1, 2, 0}).degree() == 1);
    CHECK(poly_constant(R, R.zero()).is_zero());
    CHECK(poly_one(R).degree() == 0);
}

TEST_CASE("ring polynomial algebra properties") {
    auto Rp = Ring::parse("GR(9,1)");
    const Ring& R = *Rp;
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        RPoly a = random_rpoly(R, rng, 6);
        RPoly b = random_rpoly(R, rng, 6);
        RPoly c = random_rpoly(R, rng, 6);
        CHECK(poly_add(R, a, b) == poly_add(R, b, a));
        CHECK(poly_mul(R, a, b) == poly_mul(R, b, a));
        CHECK(poly_mul(R, a, poly_add(R, b, c)) ==
              poly_add(R, poly_mul(R, a, b), poly_mul(R, a, c)));
        CHECK(poly_sub(R, poly_add(R, a, b), b) == a);
    }
}

TEST_CASE("divmod by monic divisor over a chain ring") {
    auto Rp = Ring::parse("GR(4,1)");
    const Ring& R = *Rp;
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        RPoly a = random_rpoly(R, rng, 8);
        RPoly b = random_rpoly(R, rng, 4);
        if (b.is_zero()) continue;
        b.c.back() = R.one();  // force monic
        auto [q, r] = divmod_monic(R, a, b);
        CHECK(poly_add(R, poly_mul(R, q, b), r) == a);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    }
    CHECK_THROWS_AS(divmod_monic(R, rp(R, {1, 1}), rp(R, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("field gcd and extended gcd") {
    Field F(3, {1, 0, 1});  // F9
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        FPoly a = random_fpoly(F, rng, 7);
        FPoly b = random_fpoly(F, rng, 7);
        auto [g, u, v] = fpoly_ext_gcd(F, a, b);
        CHECK(poly_add(F, poly_mul(F, u, a), poly_mul(F, v, b)) == g);
        CHECK(g == fpoly_gcd(F, a, b));
        if (!g.is_zero()) {
            CHECK(is_monic(F, g));
            CHECK(fpoly_divmod(F, a, g).second.is_zero());
            CHECK(fpoly_divmod(F, b, g).second.is_zero());
        }
    }
    CHECK(fpoly_gcd(F, FPoly{}, FPoly{}).is_zero());
}

TEST_CASE("multiplicity and irreducibility") {
    Field F2(2, {1, 1});
    FPoly x1 = fpoly_x_minus_one(F2);
    // (x-1)^3 (x^2+x+1) over F2
    FPoly f = poly_mul(F2, poly_pow(F2, x1, 3), fp(F2, {1, 1, 1}));
    CHECK(fpoly_multiplicity(F2, x1, f) == 3);
    CHECK(fpoly_multiplicity(F2, fp(F2, {1, 1, 1}), f) == 1);
    CHECK(fpoly_multiplicity(F2, fp(F2, {1, 1, 0, 1}), f) == 0);

    CHECK(fpoly_is_irreducible(F2, fp(F2, {1, 1, 0, 1})));   // x^3+x+1
    CHECK(fpoly_is_irreducible(F2, fp(F2, {1, 0, 1, 1})));   // x^3+x^2+1
    CHECK(!fpoly_is_irreducible(F2, fp(F2, {1, 0, 0, 1})));  // x^3+1
    Field F3(3, {1, 1});
    CHECK(fpoly_is_irreducible(F3, fp(F3, {1, 0, 1})));   // x^2+1
    CHECK(!fpoly_is_irreducible(F3, fp(F3, {2, 0, 1})));  // x^2-1
}

TEST_CASE("canonical factor order") {
    Field F2(2, {1, 1});
    FPoly x1 = fpoly_x_minus_one(F2);
    FPoly c1 = fp(F2, {1, 1, 0, 1});  // x^3+x+1
    FPoly c2 = fp(F2, {1, 0, 1, 1});  // x^3+x^2+1
    // x - 1 sorts first regardless of the other side
    CHECK(canonical_factor_less(F2, x1, c1));
    CHECK(!canonical_factor_less(F2, c1, x1));
    // lower degree first
    CHECK(canonical_factor_less(F2, fp(F2, {1, 1, 1}), c1));
    // same degree: compare from the highest coefficient down; x^3+x+1 has
    // x^2 coefficient 0 < 1, so it precedes x^3+x^2+1
    CHECK(canonical_factor_less(F2, c1, c2));
    CHECK(!canonical_factor_less(F2, c2, c1));
    CHECK(!canonical_factor_less(F2, c1, c1));
}

TEST_CASE("residue factorization of x^n - a") {
    Field F2(2, {1, 1});
    auto fs = factor_xn_minus_a(F2, 7, F2.one());
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == fp(F2, {1, 1}));        // x - 1
    CHECK(fs[1] == fp(F2, {1, 1, 0, 1}));  // x^3+x+1
    CHECK(fs[2] == fp(F2, {1, 0, 1, 1}));  // x^3+x^2+1
    FPoly prod = poly_one(F2);
    for (const auto& f : fs) prod = poly_mul(F2, prod, f);
    CHECK(prod == fpoly_xn_minus(F2, 7, F2.one()));

    // general property over several fields, n coprime to p
    for (const char* spec : {"F(2)", "F(3)", "F(4)", "F(9)"}) {
        auto Rp = Ring::parse(spec);
        const Field& F = Rp->residue_field();
        for (unsigned n : {1u, 2u, 3u, 5u, 7u, 8u}) {
            if (n % F.characteristic() == 0) continue;
            for (FElem a : all_felems(F)) {
                if (F.is_zero(a)) continue;
                auto factors = factor_xn_minus_a(F, n, a);
                FPoly p = poly_one(F);
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    CHECK(is_monic(F, factors[i]));
                    CHECK(fpoly_is_irreducible(F, factors[i]));
                    if (i) CHECK(canonical_factor_less(F, factors[i - 1], factors[i]));
                    p = poly_mul(F, p, factors[i]);
                }
                CHECK(p == fpoly_xn_minus(F, n, a));
            }
        }
    }
}

TEST_CASE("modular multiplication against plain reduction") {
    auto Rp = Ring::parse("GR(9,1)");
    const Ring& R = *Rp;
    std::mt19937 rng(17);
    unsigned N = 6;
    RElem lambda = R.from_int(2);
    RPoly mod = xn_minus_lambda(R, N, lambda);
    for (int trial = 0; trial < 200; ++trial) {
        RPoly a = random_rpoly(R, rng, N - 1);
        RPoly b = random_rpoly(R, rng, N - 1);
        RPoly direct = divmod_monic(R, poly_mul(R, a, b), mod).second;
        CHECK(mul_mod(R, a, b, N, lambda) == direct);
    }
    // pow_mod reduces high-degree bases first
    RPoly base = random_rpoly(R, rng, 2 * N);
    RPoly expect = divmod_monic(R, base, mod).second;
    RPoly acc = poly_one(R);
    for (int i = 0; i < 5; ++i) acc = mul_mod(R, acc, expect, N, lambda);
    CHECK(pow_mod(R, base, 5, N, lambda) == acc);
}

TEST_CASE("hensel lift of the residue factorization") {
    for (const char* spec : {"GR(4,1)", "GR(9,1)", "GR(4,2)", "FU(2,2)",
                             "GR(4,4)", "GR(8,1)"}) {
        auto Rp = Ring::parse(spec);
        const Ring& R = *Rp;
        const Field& F = R.residue_field();
        for (unsigned n : {1u, 3u, 7u}) {
            if (n % R.p() == 0) continue;
            RElem alpha0 = R.one();
            auto residue = factor_xn_minus_a(F, n, R.project(alpha0));
            auto lifted = hensel_lift_factors(R, n, alpha0, residue);
            REQUIRE(lifted.size() == residue.size());
            RPoly prod = poly_one(R);
            for (std::size_t i = 0; i < lifted.size(); ++i) {
                CHECK(is_monic(R, lifted[i]));
                CHECK(project_poly(R, lifted[i]) == residue[i]);
                prod = poly_mul(R, prod, lifted[i]);
            }
            CHECK(prod == xn_minus_lambda(R, n, alpha0));
        }
    }
    // the n = 7 lift over GR(4,1) lands on the classical generator triple
    auto Z4 = Ring::parse("GR(4,1)");
    auto fs = hensel_lift_factors(
        *Z4, 7, Z4->one(),
        factor_xn_minus_a(Z4->residue_field(), 7, Z4->residue_field().one()));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == rp(*Z4, {3, 1}));
    CHECK(fs[1] == rp(*Z4, {3, 1, 2, 1}));
    CHECK(fs[2] == rp(*Z4, {3, 2, 3, 1}));
}

TEST_CASE("unit decomposition against gamma and length split") {
    // lambda = alpha + gamma * beta with alpha Teichmuller; N = n * p^s
    auto Z4 = Ring::parse("GR(4,1)");
    BaseRoot b = teichmuller_base_root(*Z4, Z4->from_int(3), 4);
    CHECK(b.alpha == Z4->one());
    CHECK(b.beta_class == BetaClass::unit);
    CHECK(b.n == 1);
    CHECK(b.s == 2);
    CHECK(b.ps == 4);
    CHECK(b.alpha0 == Z4->one());

    auto Z9 = Ring::parse("GR(9,1)");
    BaseRoot b2 = teichmuller_base_root(*Z9, Z9->from_int(2), 18);
    CHECK(b2.alpha == Z9->from_int(8));
    CHECK(b2.beta_class == BetaClass::unit);
    CHECK(b2.n == 2);
    CHECK(b2.s == 2);
    CHECK(b2.ps == 9);
    CHECK(Z9->pow(b2.alpha0, 9) == b2.alpha);
    CHECK(Z9->in_teichmuller(b2.alpha0));

    BaseRoot b3 = teichmuller_base_root(*Z9, Z9->from_int(4), 6);
    CHECK(b3.alpha == Z9->one());
    CHECK(b3.beta_class == BetaClass::unit);  // 4 = 1 + 3 * 1

    auto FU = Ring::parse("FU(2,2)");
    RElem lam = FU->add(FU->one(), FU->gamma());  // 1 + u
    BaseRoot b4 = teichmuller_base_root(*FU, lam, 4);
    CHECK(b4.alpha == FU->one());
    CHECK(b4.beta_class == BetaClass::unit);

    BaseRoot b5 = teichmuller_base_root(*Z9, Z9->one(), 18);
    CHECK(b5.beta_class == BetaClass::zero);

    // the decomposition identity itself, over every unit of a few rings
    for (const char* spec : {"GR(4,1)", "GR(9,1)", "GR(8,1)", "FU(2,2)",
                             "GR(4,2)"}) {
        auto Rp = Ring::parse(spec);
        const Ring& R = *Rp;
        for (RElem u : all_elems(R)) {
            if (!R.is_unit(u)) continue;
            BaseRoot br = teichmuller_base_root(R, u, 12);
            CHECK(R.in_teichmuller(br.alpha));
            CHECK(R.add(br.alpha, R.mul(R.gamma(), br.beta)) == u);
            CHECK(12 == br.n * br.ps);
            CHECK(br.n % R.p() != 0);
            CHECK(R.pow(br.alpha0, br.ps) == br.alpha);
        }
    }
    CHECK_THROWS_AS(teichmuller_base_root(*Z4, Z4->from_int(2), 4),
                    std::invalid_argument);
}
