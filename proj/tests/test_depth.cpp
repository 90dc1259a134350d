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
#include <span>
#include <stdexcept>

#include "doctest.h"

#include "ccdepth/chain_ring.hpp"
#include "ccdepth/depth.hpp"
#include "ccdepth/poly.hpp"
#include "util.hpp"

using namespace ccdepth;
using namespace ccdepth::testutil;

namespace {

/// i-fold derivative by direct iteration (reference path).
RVec iterate_derivative(const Ring& R, RVec v, unsigned i) {
    for (unsigned k = 0; k < i; ++k)
        v = derivative(R, std::span<const RElem>(v));
    return v;
}

bool is_zero_vec(const Ring& R, const RVec& v) {
    for (RElem x : v)
        if (!R.is_zero(x)) return false;
    return true;
}

}  // namespace

TEST_CASE("derivative basics") {
    auto Rp = Ring::parse("GR(4,1)");
    const Ring& R = *Rp;
    RVec a = rv(R, {0, 1, 2, 3});
    RVec d = derivative(R, std::span<const RElem>(a));
    CHECK(d == rv(R, {1, 1, 1}));
    CHECK_THROWS_AS(derivative(R, std::span<const RElem>(rv(R, {1}))),
                    std::invalid_argument);
}

TEST_CASE("depth of reference words") {
    auto Rp = Ring::parse("GR(4,1)");
    const Ring& R = *Rp;

    // x + 2x^2 + 3x^3: D = (1,1,1), D^2 = (0,0)
    DepthResult r1 = depth(R, std::span<const RElem>(rv(R, {0, 1, 2, 3})));
    CHECK(r1.depth == 2);
    REQUIRE(r1.witness.has_value());
    CHECK(*r1.witness == R.one());

    // 3 + x + x^2 + x^3: no iterate vanishes, so depth = N = 4
    DepthResult r2 = depth(R, std::span<const RElem>(rv(R, {3, 1, 1, 1})));
    CHECK(r2.depth == 4);
    REQUIRE(r2.witness.has_value());
    CHECK(*r2.witness == R.from_int(2));

    DepthResult rz = depth(R, std::span<const RElem>(rv(R, {0, 0, 0, 0})));
    CHECK(rz.depth == 0);
    CHECK(!rz.witness.has_value());

    // nonzero constant vectors have depth exactly 1
    DepthResult rc = depth(R, std::span<const RElem>(rv(R, {2, 2, 2, 2, 2})));
    CHECK(rc.depth == 1);
    CHECK(*rc.witness == R.from_int(2));

    CHECK_THROWS_AS(depth(R, std::span<const RElem>(RVec{})),
                    std::invalid_argument);
}

TEST_CASE("depth bounds and witness meaning, exhaustive over Z4 length 4") {
    auto Rp = Ring::parse("GR(4,1)");
    const Ring& R = *Rp;
    unsigned N = 4;
    RVec v(N);
    for (std::uint32_t code = 0; code < 256; ++code) {
        for (unsigned j = 0; j < N; ++j)
            v[j] = RElem{(code >> (2 * j)) & 3u};
        DepthResult r = depth(R, std::span<const RElem>(v));
        CHECK(r.depth <= N);
        if (is_zero_vec(R, v)) {
            CHECK(r.depth == 0);
            continue;
        }
        CHECK(r.depth >= 1);
        // D^{depth}(v) = 0 when depth < N, and D^{depth-1}(v) is the
        // constant vector of the witness
        RVec prev = iterate_derivative(R, v, r.depth - 1);
        for (RElem x : prev) CHECK(x == *r.witness);
        if (r.depth < N) {
            CHECK(is_zero_vec(R, iterate_derivative(R, v, r.depth)));
            CHECK(!is_zero_vec(R, prev));
        }
    }
}

TEST_CASE("depth_in_place matches the copying version") {
    auto Rp = Ring::parse("GR(9,1)");
    const Ring& R = *Rp;
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::uint32_t> dc(0, 8);
    for (int trial = 0; trial < 500; ++trial) {
        unsigned N = 1 + (unsigned)(rng() % 12);
        RVec v(N);
        for (auto& x : v) x = RElem{dc(rng)};
        unsigned d1 = depth(R, std::span<const RElem>(v)).depth;
        RVec buf = v;
        CHECK(depth_in_place(R, buf.data(), buf.size()) == d1);
    }
}

TEST_CASE("shift identity against direct iteration") {
    // the last N-i coefficients of (1-x)^i c equal D^i(c)
    auto Z4 = Ring::parse("GR(4,1)");
    for (RElem lambda : {Z4->one(), Z4->from_int(3)}) {
        for (unsigned N = 1; N <= 5; ++N) {
            std::uint64_t total = 1;
            for (unsigned j = 0; j < N; ++j) total *= 4;
            RVec v(N);
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t t = code;
                for (unsigned j = 0; j < N; ++j) {
                    v[j] = RElem{(std::uint32_t)(t & 3u)};
                    t >>= 2;
                }
                RPoly c = poly_from_coeffs(*Z4, RVec(v));
                for (unsigned i = 0; i < N; ++i)
                    CHECK(depth_via_shift(*Z4, c, N, lambda, i) ==
                          iterate_derivative(*Z4, v, i));
            }
        }
    }
}

TEST_CASE("composition law for prepended shift factors") {
    // if depth((1-x)^l c) = t >= 1 and l + t <= N then depth(c) = l + t
    int checked = 0;
    auto padded_depth = [](const Ring& R, const RPoly& f, unsigned N) {
        RVec w(N, R.zero());
        for (std::size_t j = 0; j < f.c.size(); ++j) w[j] = f.c[j];
        return depth(R, std::span<const RElem>(w)).depth;
    };

    // every length-4 word over GR(4,1), for both units of trivial image
    {
        auto Z4 = Ring::parse("GR(4,1)");
        const Ring& R = *Z4;
        const unsigned N = 4;
        RPoly omx = rp(R, {1, -1});
        for (RElem lambda : {R.one(), R.from_int(3)}) {
            RVec v(N);
            for (unsigned code = 0; code < 256; ++code) {
                for (unsigned j = 0; j < N; ++j)
                    v[j] = RElem{(code >> (2 * j)) & 3u};
                unsigned dv = depth(R, std::span<const RElem>(v)).depth;
                RPoly shifted = poly_from_coeffs(R, RVec(v));
                for (unsigned l = 1; l <= 3; ++l) {
                    shifted = mul_mod(R, omx, shifted, N, lambda);
                    unsigned t = padded_depth(R, shifted, N);
                    if (t == 0 || l + t > N) continue;
                    CHECK(dv == l + t);
                    ++checked;
                }
            }
        }
    }

    // over GR(9,1) with lambda = 2 the word 1 - x is invertible, with
    // inverse (1 - lambda)^{-1} (1 + x + ... + x^{N-1}).  Build w of depth
    // exactly t via the binomial basis (the forward difference of
    // j -> binom(j, d) is j -> binom(j, d - 1)), then pull c back through
    // the inverse so that every trial satisfies the premise of the law.
    {
        auto Rp = Ring::parse("GR(9,1)");
        const Ring& R = *Rp;
        const unsigned N = 9;
        RElem lambda = R.from_int(2);
        RPoly omx = rp(R, {1, -1});
        RVec inv_coeffs(N, R.inv(R.sub(R.one(), lambda)));
        RPoly omx_inv = poly_from_coeffs(R, std::move(inv_coeffs));
        std::vector<std::vector<std::uint64_t>> binom(
            N, std::vector<std::uint64_t>(N, 0));
        binom[0][0] = 1;
        for (unsigned j = 1; j < N; ++j) {
            binom[j][0] = 1;
            for (unsigned d = 1; d <= j; ++d)
                binom[j][d] = binom[j - 1][d - 1] + binom[j - 1][d];
        }
        std::mt19937 rng(29);
        std::uniform_int_distribution<std::uint32_t> digit(0, 8);
        for (unsigned l = 1; l <= 3; ++l) {
            for (unsigned t = 1; t + l <= N; ++t) {
                for (int trial = 0; trial < 30; ++trial) {
                    std::vector<std::uint32_t> u(t, 0);
                    for (unsigned d = 0; d + 1 < t; ++d) u[d] = digit(rng);
                    u[t - 1] = 1 + rng() % 8;
                    RVec w(N);
                    for (unsigned j = 0; j < N; ++j) {
                        std::uint64_t s = 0;
                        for (unsigned d = 0; d < t && d <= j; ++d)
                            s += u[d] * binom[j][d];
                        w[j] = R.from_int((std::int64_t)(s % 9));
                    }
                    REQUIRE(depth(R, std::span<const RElem>(w)).depth == t);
                    RPoly c = poly_from_coeffs(R, RVec(w));
                    for (unsigned j = 0; j < l; ++j)
                        c = mul_mod(R, omx_inv, c, N, lambda);
                    RPoly back = c;
                    for (unsigned j = 0; j < l; ++j)
                        back = mul_mod(R, omx, back, N, lambda);
                    unsigned tp = padded_depth(R, back, N);
                    REQUIRE(tp == t);
                    CHECK(padded_depth(R, c, N) == l + tp);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 600);
}

TEST_CASE("scaling by gamma powers never lowers residue depth") {
    // depth(gamma^l * lift(a)) >= depth(a over the residue field), with
    // equality at l = e - 1
    auto Rp = Ring::parse("GR(4,2)");
    const Ring& R = *Rp;
    const Field& F = R.residue_field();
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::uint32_t> dc(0, F.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned N = 2 + rng() % 8;
        std::vector<FElem> a(N);
        for (auto& x : a) x = FElem{dc(rng)};
        unsigned df = depth(F, std::span<const FElem>(a)).depth;
        for (unsigned l = 0; l < R.e(); ++l) {
            RVec lifted(N);
            for (unsigned j = 0; j < N; ++j)
                lifted[j] = R.mul(R.gamma_pow(l), R.lift(a[j]));
            unsigned dr = depth(R, std::span<const RElem>(lifted)).depth;
            CHECK(dr >= df);
            if (l + 1 == R.e()) CHECK(dr == df);
        }
    }
}
