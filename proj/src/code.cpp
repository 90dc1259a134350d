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

#include "ccdepth/code.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "ccdepth/errors.hpp"

namespace ccdepth {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool vec_is_zero(const RVec& v) {
    for (RElem x : v)
        if (x.v != 0) return false;
    return true;
}

// v -= q * w
void vec_sub_scaled(const Ring& R, RVec& v, RElem q, const RVec& w) {
    if (q.v == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = R.sub(v[i], R.mul(q, w[i]));
}

RVec vec_scaled(const Ring& R, RElem s, const RVec& w) {
    RVec out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = R.mul(s, w[i]);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimePower
// ---------------------------------------------------------------------------

std::optional<u64> PrimePower::value_if_at_most(u64 cap) const {
    u64 v = 1;
    for (u64 i = 0; i < exponent; ++i) {
        if (v > cap / base) return std::nullopt;
        v *= base;
    }
    if (v > cap) return std::nullopt;
    return v;
}

std::string PrimePower::pow_string() const {
    if (exponent == 0) return "1";
    if (exponent == 1) return std::to_string(base);
    return std::to_string(base) + "^" + std::to_string(exponent);
}

std::string PrimePower::decimal_string() const {
    std::vector<u64> digits{1};  // little endian, base 10^9
    for (u64 i = 0; i < exponent; ++i) {
        u64 carry = 0;
        for (auto& d : digits) {
            u64 t = d * base + carry;
            d = t % 1000000000;
            carry = t / 1000000000;
        }
        while (carry) {
            digits.push_back(carry % 1000000000);
            carry /= 1000000000;
        }
    }
    std::string out = std::to_string(digits.back());
    for (std::size_t i = digits.size() - 1; i-- > 0;) {
        std::string part = std::to_string(digits[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Code construction
// ---------------------------------------------------------------------------

bool Code::is_zero_code() const {
    for (unsigned k : exponents)
        if (k != max_exponent()) return false;
    return true;
}

bool Code::is_full_code() const {
    for (unsigned k : exponents)
        if (k != 0) return false;
    return true;
}

Code make_code(std::shared_ptr<const Ring> ring, RElem lambda, unsigned N,
               std::vector<unsigned> exponents) {
    if (!ring) throw std::invalid_argument("make_code: null ring");
    if (N == 0 || N > 4096)
        throw std::invalid_argument("make_code: N must be in [1, 4096]");
    if (lambda.v >= ring->size())
        throw std::invalid_argument("make_code: lambda is not a ring element");

    Code C;
    C.ring = ring;
    C.N = N;
    C.lambda = lambda;
    C.root = teichmuller_base_root(*ring, lambda, N);
    const Field& F = ring->residue_field();
    C.residue_factors =
        factor_xn_minus_a(F, C.root.n, ring->project(C.root.alpha0));
    C.factors =
        hensel_lift_factors(*ring, C.root.n, C.root.alpha0, C.residue_factors);
    C.degrees.reserve(C.factors.size());
    for (const auto& f : C.factors)
        C.degrees.push_back((unsigned)f.degree().value());

    if (exponents.size() != C.factors.size())
        throw std::invalid_argument(
            "make_code: expected " + std::to_string(C.factors.size()) +
            " exponents (one per factor), got " +
            std::to_string(exponents.size()));
    const u64 maxk = (u64)ring->e() * C.root.ps;
    for (unsigned k : exponents)
        if (k > maxk)
            throw std::invalid_argument("make_code: exponent " +
                                        std::to_string(k) + " exceeds e*p^s = " +
                                        std::to_string(maxk));
    C.exponents = std::move(exponents);

    RPoly gen = poly_one(*ring);
    for (std::size_t l = 0; l < C.factors.size(); ++l) {
        if (C.exponents[l] == 0) continue;
        gen = mul_mod(*ring, gen,
                      pow_mod(*ring, C.factors[l], C.exponents[l], N, lambda), N,
                      lambda);
    }
    C.generator = std::move(gen);
    C.lambda_bar_one = ring->project(lambda) == F.one();
    return C;
}

unsigned tau(const Code& C, unsigned factor_idx, unsigned i) {
    if (factor_idx >= C.r())
        throw std::invalid_argument("tau: factor index out of range");
    if (i >= C.ring->e())
        throw std::invalid_argument("tau: torsion level out of range");
    const u64 ps = C.root.ps;
    const u64 k = C.exponents[factor_idx];
    return (unsigned)(std::min((u64)(i + 1) * ps, k) - std::min((u64)i * ps, k));
}

// ---------------------------------------------------------------------------
// torsion
// ---------------------------------------------------------------------------

TorsionCode torsion_formula(const Code& C, unsigned i) {
    if (i >= C.ring->e())
        throw std::invalid_argument("torsion: level out of range");
    const Field& F = C.ring->residue_field();
    FPoly gen = poly_one(F);
    for (unsigned l = 0; l < C.r(); ++l)
        gen = poly_mul(F, gen,
                       poly_pow(F, C.residue_factors[l], tau(C, l, i)));
    return {i, std::move(gen)};
}

TorsionCode torsion_oracle(const Code& C, unsigned i, u64 scan_cap) {
    const Ring& R = *C.ring;
    const Field& F = R.residue_field();
    if (i >= R.e()) throw std::invalid_argument("torsion: level out of range");
    const unsigned N = C.N;
    const u32 q = F.size();
    u64 total = 1;
    for (unsigned j = 0; j < N; ++j) {
        if (total > scan_cap / q)
            throw cap_exceeded_error(
                "torsion oracle scan q^N too large (raise the cap to proceed)");
        total *= q;
    }

    EchelonBasis BC = echelon_basis(C);
    std::vector<RVec> gens;
    for (const auto& row : BC.rows) gens.push_back(row.vec);
    if (i + 1 < R.e()) {
        RElem gi1 = R.gamma_pow(i + 1);
        for (unsigned j = 0; j < N; ++j) {
            RVec unit(N, R.zero());
            unit[j] = gi1;
            gens.push_back(std::move(unit));
        }
    }
    EchelonBasis Bi = echelonize(R, std::move(gens), N);

    // gamma^i * (coefficientwise lift of each residue digit)
    std::vector<RElem> lut(q);
    RElem gi = R.gamma_pow(i);
    for (u32 d = 0; d < q; ++d) lut[d] = R.mul(gi, R.lift(FElem{d}));

    FPoly g = fpoly_xn_minus(F, N, R.project(C.lambda));
    u64 members = 0;
    std::vector<u32> digit(N, 0);
    RVec v(N);
    for (u64 idx = 0;; ++idx) {
        for (unsigned j = 0; j < N; ++j) v[j] = lut[digit[j]];
        if (echelon_contains(R, Bi, v)) {
            ++members;
            if (idx != 0) {
                FPoly member;
                member.c.reserve(N);
                for (unsigned j = 0; j < N; ++j) member.c.push_back(FElem{digit[j]});
                poly_normalize(F, member);
                g = fpoly_gcd(F, g, member);
            }
        }
        unsigned j = 0;
        while (j < N && digit[j] + 1 == q) digit[j++] = 0;
        if (j == N) break;
        ++digit[j];
    }

    unsigned degg = (unsigned)g.degree().value();
    u64 expect = 1;
    for (unsigned j = 0; j < N - degg; ++j) expect *= q;
    if (members != expect)
        throw std::logic_error("torsion oracle: member count is not q^(N-deg)");
    return {i, std::move(g)};
}

PrimePower cardinality_formula(const Code& C) {
    const Ring& R = *C.ring;
    u64 exp = 0;
    for (unsigned i = 0; i < R.e(); ++i) {
        TorsionCode t = torsion_formula(C, i);
        exp += (u64)R.m() * (C.N - (unsigned)t.generator.degree().value());
    }
    return {R.p(), exp};
}

// ---------------------------------------------------------------------------
// echelon form
// ---------------------------------------------------------------------------

EchelonBasis echelonize(const Ring& R, std::vector<RVec> gens, unsigned N) {
    const unsigned e = R.e();
    std::vector<RVec> work;
    for (auto& g : gens) {
        if (g.size() != N)
            throw std::invalid_argument("echelonize: generator length mismatch");
        if (!vec_is_zero(g)) work.push_back(std::move(g));
    }

    const unsigned max_rounds = e * N + 2;
    for (unsigned round = 0; round < max_rounds; ++round) {
        EchelonBasis B;
        B.N = N;
        std::vector<RVec> rem = std::move(work);
        work.clear();
        for (unsigned col = 0; col < N; ++col) {
            int best = -1;
            unsigned bestval = e;
            for (std::size_t idx = 0; idx < rem.size(); ++idx) {
                unsigned v = R.valuation(rem[idx][col]);
                if (v < bestval) {
                    bestval = v;
                    best = (int)idx;
                }
            }
            if (best < 0) continue;
            RVec piv = std::move(rem[best]);
            rem.erase(rem.begin() + best);
            RElem w = R.divide_gamma_exact(piv[col], bestval);
            if (!(w == R.one())) {
                RElem wi = R.inv(w);
                for (auto& x : piv) x = R.mul(wi, x);
            }
            for (auto& row : rem) {
                auto [qq, rr] = R.gamma_split(row[col], bestval);
                vec_sub_scaled(R, row, qq, piv);
            }
            for (auto& br : B.rows) {
                auto [qq, rr] = R.gamma_split(br.vec[col], bestval);
                vec_sub_scaled(R, br.vec, qq, piv);
            }
            B.rows.push_back({col, bestval, std::move(piv)});
        }
        for (const auto& row : rem)
            if (!vec_is_zero(row))
                throw std::logic_error("echelonize: nonzero row left unreduced");

        // saturation closure: gamma^{e-v} times each row must reduce to zero
        std::vector<RVec> extras;
        for (const auto& row : B.rows) {
            if (row.valuation == 0) continue;
            RVec ext = vec_scaled(R, R.gamma_pow(e - row.valuation), row.vec);
            RVec red = echelon_reduce(R, B, std::move(ext));
            if (!vec_is_zero(red)) extras.push_back(std::move(red));
        }
        if (extras.empty()) return B;
        work.reserve(B.rows.size() + extras.size());
        for (auto& r : B.rows) work.push_back(std::move(r.vec));
        for (auto& x : extras) work.push_back(std::move(x));
    }
    throw std::logic_error("echelonize: saturation did not converge");
}

EchelonBasis echelon_basis(const Code& C) {
    const Ring& R = *C.ring;
    const unsigned N = C.N;
    std::vector<RVec> gens;
    if (!C.generator.is_zero()) {
        RVec cur(N, R.zero());
        for (std::size_t j = 0; j < C.generator.c.size(); ++j)
            cur[j] = C.generator.c[j];
        gens.reserve(N);
        for (unsigned j = 0; j < N; ++j) {
            gens.push_back(cur);
            // multiply by x: shift up, x^N folds to lambda
            RElem top = cur[N - 1];
            for (unsigned t = N; t-- > 1;) cur[t] = cur[t - 1];
            cur[0] = R.mul(C.lambda, top);
        }
    }
    return echelonize(R, std::move(gens), N);
}

RVec echelon_reduce(const Ring& R, const EchelonBasis& B, RVec v) {
    if (v.size() != B.N)
        throw std::invalid_argument("echelon_reduce: length mismatch");
    for (const auto& row : B.rows) {
        RElem a = v[row.pivot];
        if (a.v == 0) continue;
        auto [qq, rr] = R.gamma_split(a, row.valuation);
        vec_sub_scaled(R, v, qq, row.vec);
    }
    return v;
}

bool echelon_contains(const Ring& R, const EchelonBasis& B, RVec v) {
    return vec_is_zero(echelon_reduce(R, B, std::move(v)));
}

PrimePower cardinality_from_echelon(const Ring& R, const EchelonBasis& B) {
    u64 exp = 0;
    for (const auto& row : B.rows) exp += (u64)R.m() * (R.e() - row.valuation);
    return {R.p(), exp};
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

std::uint64_t enumerate_span(
    const Ring& R, const EchelonBasis& B, u64 cap, unsigned jobs,
    const std::function<void(unsigned, std::span<const RElem>)>& visit) {
    PrimePower card = cardinality_from_echelon(R, B);
    auto val = card.value_if_at_most(cap);
    if (!val)
        throw cap_exceeded_error("enumeration size " + card.pow_string() +
                                 " exceeds the word cap " + std::to_string(cap) +
                                 " (raise --cap to proceed)");
    if (jobs == 0) jobs = 1;
    jobs = std::min(jobs, 64u);

    const std::size_t k = B.rows.size();
    if (k == 0) {
        RVec zero(B.N, R.zero());
        visit(0, zero);
        return 1;
    }

    // scaled copies of each row by its transversal, in transversal order
    std::vector<std::vector<RVec>> scaled(k);
    for (std::size_t j = 0; j < k; ++j) {
        auto tr = R.gamma_transversal(R.e() - B.rows[j].valuation);
        scaled[j].reserve(tr.size());
        for (RElem t : tr) scaled[j].push_back(vec_scaled(R, t, B.rows[j].vec));
    }
    jobs = (unsigned)std::min<u64>(jobs, (u64)scaled[0].size());

    auto worker = [&](unsigned w) -> u64 {
        std::vector<std::size_t> digit(k, 0);
        std::vector<RVec> pref(k + 1, RVec(B.N, R.zero()));
        auto refresh = [&](std::size_t from) {
            for (std::size_t i = from; i < k; ++i) {
                pref[i + 1] = pref[i];
                if (digit[i] != 0) {
                    const RVec& s = scaled[i][digit[i]];
                    for (unsigned t = 0; t < B.N; ++t)
                        pref[i + 1][t] = R.add(pref[i + 1][t], s[t]);
                }
            }
        };
        u64 count = 0;
        for (std::size_t t0 = w; t0 < scaled[0].size(); t0 += jobs) {
            digit[0] = t0;
            std::fill(digit.begin() + 1, digit.end(), 0);
            refresh(0);
            for (;;) {
                visit(w, pref[k]);
                ++count;
                std::size_t j = k - 1;
                bool done = false;
                for (;;) {
                    if (j == 0) {
                        done = true;
                        break;
                    }
                    if (digit[j] + 1 < scaled[j].size()) {
                        ++digit[j];
                        refresh(j);
                        break;
                    }
                    digit[j] = 0;
                    --j;
                }
                if (done) break;
            }
        }
        return count;
    };

    u64 total = 0;
    if (jobs == 1) {
        total = worker(0);
    } else {
        std::vector<std::thread> threads;
        std::vector<u64> counts(jobs, 0);
        std::vector<std::exception_ptr> errs(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            threads.emplace_back([&, w] {
                try {
                    counts[w] = worker(w);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        for (auto& t : threads) t.join();
        for (auto& err : errs)
            if (err) std::rethrow_exception(err);
        for (u64 c : counts) total += c;
    }
    if (total != *val)
        throw std::logic_error("enumerate_span: visit count mismatch");
    return total;
}

std::uint64_t enumerate_codewords(
    const Ring& R, const EchelonBasis& B, u64 cap,
    const std::function<void(std::span<const RElem>)>& visit) {
    return enumerate_span(R, B, cap, 1,
                          [&](unsigned, std::span<const RElem> v) { visit(v); });
}

}  // namespace ccdepth
