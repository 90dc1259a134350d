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

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "ccdepth/chain_ring.hpp"
#include "ccdepth/code.hpp"
#include "ccdepth/errors.hpp"
#include "ccdepth/poly.hpp"
#include "util.hpp"

using namespace ccdepth;
using namespace ccdepth::testutil;

namespace {

std::set<std::vector<std::uint32_t>> collect_words(const Ring& R,
                                                   const EchelonBasis& B,
                                                   unsigned jobs) {
    std::set<std::vector<std::uint32_t>> words;
    std::mutex mu;
    enumerate_span(R, B, 1u << 20, jobs,
                   [&](unsigned, std::span<const RElem> w) {
                       std::vector<std::uint32_t> key;
                       for (RElem x : w) key.push_back(x.v);
                       std::lock_guard<std::mutex> lock(mu);
                       words.insert(std::move(key));
                   });
    return words;
}

}  // namespace

TEST_CASE("prime power rendering and exact decimals") {
    CHECK(PrimePower{7, 0}.pow_string() == "1");
    CHECK(PrimePower{2, 1}.pow_string() == "2");
    CHECK(PrimePower{3, 16}.pow_string() == "3^16");
    CHECK(PrimePower{3, 16}.decimal_string() == "43046721");
    CHECK(PrimePower{2, 92}.decimal_string() ==
          "4951760157141521099596496896");
    CHECK(PrimePower{2, 132}.decimal_string() ==
          "5444517870735015415413993718908291383296");
    CHECK(PrimePower{2, 10}.value_if_at_most(1024) == 1024);
    CHECK(!PrimePower{2, 10}.value_if_at_most(1023).has_value());
    CHECK(!PrimePower{2, 200}.value_if_at_most(~0ull).has_value());
}

TEST_CASE("code assembly and validation") {
    auto Z4 = Ring::parse("GR(4,1)");
    Code C = make_code(Z4, Z4->from_int(3), 4, {3});
    CHECK(C.N == 4);
    CHECK(C.r() == 1);
    CHECK(C.max_exponent() == 8);  // e * p^s = 2 * 4
    CHECK(C.degrees[0] == 1);
    CHECK(!C.is_zero_code());
    CHECK(!C.is_full_code());
    CHECK(make_code(Z4, Z4->from_int(3), 4, {8}).is_zero_code());
    CHECK(make_code(Z4, Z4->from_int(3), 4, {0}).is_full_code());

    CHECK_THROWS_AS(make_code(Z4, Z4->from_int(2), 4, {1}),
                    std::invalid_argument);  // lambda not a unit
    CHECK_THROWS_AS(make_code(Z4, Z4->from_int(3), 0, {1}),
                    std::invalid_argument);  // N out of range
    CHECK_THROWS_AS(make_code(Z4, Z4->from_int(3), 4, {1, 1}),
                    std::invalid_argument);  // wrong exponent count
    CHECK_THROWS_AS(make_code(Z4, Z4->from_int(3), 4, {9}),
                    std::invalid_argument);  // exponent above e * p^s

    // generator really is the exponent product in the quotient
    RPoly expect = poly_one(*Z4);
    for (unsigned j = 0; j < 3; ++j)
        expect = mul_mod(*Z4, expect, C.factors[0], 4, C.lambda);
    CHECK(C.generator == expect);
}

TEST_CASE("torsion exponents split the factor budget") {
    auto Z4 = Ring::parse("GR(4,1)");
    Code C = make_code(Z4, Z4->from_int(3), 8, {11});
    // p^s = 8, k = 11: tau(0) = 8, tau(1) = 3
    CHECK(tau(C, 0, 0) == 8);
    CHECK(tau(C, 0, 1) == 3);
    Code C2 = make_code(Z4, Z4->from_int(3), 8, {5});
    CHECK(tau(C2, 0, 0) == 5);
    CHECK(tau(C2, 0, 1) == 0);
    // the tau values always sum to k
    for (unsigned k = 0; k <= 16; ++k) {
        Code Ck = make_code(Z4, Z4->from_int(3), 8, {k});
        unsigned sum = 0;
        for (unsigned i = 0; i < 2; ++i) sum += tau(Ck, 0, i);
        CHECK(sum == k);
    }
}

TEST_CASE("cardinality agrees across formula, echelon, enumeration") {
    struct Cell {
        const char* ring;
        std::int64_t lambda;
        unsigned N;
    };
    for (Cell cell : {Cell{"GR(4,1)", 3, 4}, Cell{"GR(9,1)", 2, 2},
                      Cell{"GR(4,2)", 3, 2}}) {
        auto Rp = Ring::parse(cell.ring);
        Code probe = make_code(Rp, Rp->from_int(cell.lambda), cell.N,
                               std::vector<unsigned>(1, 0));
        (void)probe;
        // single factor in these cells; sweep its exponent
        for (unsigned k = 0;; ++k) {
            Code C = [&]() {
                return make_code(Rp, Rp->from_int(cell.lambda), cell.N, {k});
            }();
            PrimePower formula = cardinality_formula(C);
            EchelonBasis B = echelon_basis(C);
            PrimePower pivots = cardinality_from_echelon(*Rp, B);
            CHECK(formula.base == pivots.base);
            CHECK(formula.exponent == pivots.exponent);
            std::uint64_t n = 0;
            std::uint64_t count = enumerate_span(
                *Rp, B, 1u << 20, 1,
                [&](unsigned, std::span<const RElem>) { ++n; });
            CHECK(count == n);
            CHECK(formula.value_if_at_most(~0ull) == count);
            if (k == C.max_exponent()) break;
        }
    }
}

TEST_CASE("lambda with nilpotent part falls outside the unit-beta classes") {
    // FU(2,2), lambda = 1 + u: beta = 1 is a unit, so the machinery applies
    auto FU = Ring::parse("FU(2,2)");
    RElem lam = FU->add(FU->one(), FU->gamma());
    for (unsigned k = 0; k <= 4; ++k) {
        Code C = make_code(FU, lam, 2, {k});
        PrimePower formula = cardinality_formula(C);
        EchelonBasis B = echelon_basis(C);
        PrimePower pivots = cardinality_from_echelon(*FU, B);
        CHECK(formula.exponent == pivots.exponent);
        std::uint64_t count =
            enumerate_span(*FU, B, 1u << 20, 1,
                           [&](unsigned, std::span<const RElem>) {});
        CHECK(formula.value_if_at_most(~0ull) == count);
    }
}

TEST_CASE("torsion formula against the definitional scan") {
    // The closed form is only promised when the unit has a nonzero
    // second Teichmuller coordinate (or the ring is a field), so every
    // cell here is of that kind.
    struct Cell {
        const char* ring;
        std::int64_t lambda;
        unsigned N;
    };
    for (Cell cell : {Cell{"GR(4,1)", 3, 4}, Cell{"GR(9,1)", 2, 2},
                      Cell{"GR(9,1)", 4, 2}, Cell{"GR(4,2)", 3, 2}}) {
        auto Rp = Ring::parse(cell.ring);
        RElem lambda = Rp->from_int(cell.lambda);
        BaseRoot root = teichmuller_base_root(*Rp, lambda, cell.N);
        unsigned r = (unsigned)factor_xn_minus_a(Rp->residue_field(), root.n,
                                                 Rp->project(root.alpha0))
                         .size();
        std::vector<unsigned> k(r, 0);
        for (;;) {
            Code C = make_code(Rp, lambda, cell.N, k);
            for (unsigned i = 0; i < Rp->e(); ++i) {
                TorsionCode a = torsion_formula(C, i);
                TorsionCode b = torsion_oracle(C, i);
                CHECK(a.generator == b.generator);
            }
            unsigned j = 0;
            while (j < r && k[j] == C.max_exponent()) k[j++] = 0;
            if (j == r) break;
            ++k[j];
        }
    }
}

TEST_CASE("definitional scan at a unit with zero second coordinate") {
    // lambda = 1 over GR(4,1): evaluation at 1 is a ring map that kills
    // < x - 1 >, so the constant 2 is not a codeword and Tor_1 is the
    // ideal of x + 1, not the whole residue quotient.  Only the scan is
    // trusted here; the closed form does not apply.
    auto Z4 = Ring::parse("GR(4,1)");
    Code C = make_code(Z4, Z4->one(), 4, {1});
    const Field& F = Z4->residue_field();
    TorsionCode t0 = torsion_oracle(C, 0);
    TorsionCode t1 = torsion_oracle(C, 1);
    CHECK(t0.generator == fp(F, {1, 1}));
    CHECK(t1.generator == fp(F, {1, 1}));
    CHECK(!echelon_contains(*Z4, echelon_basis(C), rv(*Z4, {2, 0, 0, 0})));
}

TEST_CASE("probe grid may have several factors") {
    auto Z9 = Ring::parse("GR(9,1)");
    Code C = make_code(Z9, Z9->from_int(4), 2, {1, 2});
    CHECK(C.r() == 2);
    CHECK(C.lambda_bar_one);
    CHECK(C.degrees == std::vector<unsigned>{1, 1});
    // x - 1 comes first in the canonical order
    CHECK(C.residue_factors[0] ==
          fp(Z9->residue_field(), {-1, 1}));
}

TEST_CASE("echelon basis is saturated and answers membership") {
    auto Z4 = Ring::parse("GR(4,1)");
    // the span of (2, 1) over Z4 must include (0, 2) = 2 * (2, 1) - (4, 0)
    EchelonBasis B = echelonize(*Z4, {rv(*Z4, {2, 1})}, 2);
    auto words = collect_words(*Z4, B, 1);
    CHECK(words.size() == 4);
    CHECK(words.count({0, 2}) == 1);
    CHECK(echelon_contains(*Z4, B, rv(*Z4, {0, 2})));
    CHECK(echelon_contains(*Z4, B, rv(*Z4, {2, 1})));
    CHECK(echelon_contains(*Z4, B, rv(*Z4, {2, 3})));  // 3 * (2, 1)
    CHECK(!echelon_contains(*Z4, B, rv(*Z4, {1, 0})));
    CHECK(!echelon_contains(*Z4, B, rv(*Z4, {2, 0})));
    RVec residue = echelon_reduce(*Z4, B, rv(*Z4, {2, 0}));
    bool nonzero = false;
    for (RElem x : residue) nonzero = nonzero || !Z4->is_zero(x);
    CHECK(nonzero);

    // pivots strictly increase and carry gamma-power leads
    Code C = make_code(Z4, Z4->from_int(3), 4, {3});
    EchelonBasis CB = echelon_basis(C);
    for (std::size_t i = 0; i + 1 < CB.rows.size(); ++i)
        CHECK(CB.rows[i].pivot < CB.rows[i + 1].pivot);
    for (const auto& row : CB.rows) {
        CHECK(row.vec[row.pivot] == Z4->gamma_pow(row.valuation));
        for (std::size_t j = 0; j < row.pivot; ++j)
            CHECK(Z4->is_zero(row.vec[j]));
    }
}

TEST_CASE("enumeration honours the cap and the thread count") {
    auto Z4 = Ring::parse("GR(4,1)");
    Code C = make_code(Z4, Z4->from_int(3), 4, {2});  // 2^6 = 64 words
    EchelonBasis B = echelon_basis(C);
    CHECK_THROWS_AS(enumerate_span(*Z4, B, 63, 1,
                                   [](unsigned, std::span<const RElem>) {}),
                    cap_exceeded_error);
    auto solo = collect_words(*Z4, B, 1);
    auto multi = collect_words(*Z4, B, 4);
    CHECK(solo.size() == 64);
    CHECK(solo == multi);
    // zero-dimensional span still visits the zero vector once
    Code Z = make_code(Z4, Z4->from_int(3), 4, {8});
    auto zwords = collect_words(*Z4, echelon_basis(Z), 2);
    CHECK(zwords.size() == 1);
    CHECK(zwords.count({0, 0, 0, 0}) == 1);
}

TEST_CASE("every enumerated word is shift-stable and in the basis span") {
    auto Z9 = Ring::parse("GR(9,1)");
    Code C = make_code(Z9, Z9->from_int(2), 2, {1});
    EchelonBasis B = echelon_basis(C);
    std::vector<RVec> words;
    enumerate_codewords(*Z9, B, 1u << 20, [&](std::span<const RElem> w) {
        words.emplace_back(w.begin(), w.end());
    });
    CHECK(words.size() ==
          *cardinality_formula(C).value_if_at_most(~0ull));
    for (const RVec& w : words) {
        // the lambda-twisted rotation stays inside the code
        RVec rot(w.size());
        rot[0] = Z9->mul(C.lambda, w.back());
        for (std::size_t j = 1; j < w.size(); ++j) rot[j] = w[j - 1];
        CHECK(echelon_contains(*Z9, B, rot));
    }
}

TEST_CASE("larger galois ring spot check") {
    auto GR = Ring::parse("GR(4,4)");
    Code C = make_code(GR, GR->neg(GR->one()), 14, {1, 2, 4});
    PrimePower formula = cardinality_formula(C);
    PrimePower pivots = cardinality_from_echelon(*GR, echelon_basis(C));
    CHECK(formula.base == 2);
    CHECK(formula.exponent == 36);
    CHECK(pivots.exponent == 36);
}
