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

#include "ccdepth/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccdepth/depth.hpp"
#include "ccdepth/errors.hpp"

namespace ccdepth {

namespace {
using u64 = std::uint64_t;
}

// ---------------------------------------------------------------------------
// DepthSpectrum / DepthDistribution
// ---------------------------------------------------------------------------

bool DepthSpectrum::contains(unsigned d) const {
    return std::binary_search(values.begin(), values.end(), d);
}

std::vector<std::pair<unsigned, unsigned>> DepthSpectrum::merged_ranges()
    const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned v : values) {
        if (!out.empty() && out.back().second + 1 == v)
            out.back().second = v;
        else
            out.push_back({v, v});
    }
    return out;
}

DepthSpectrum DepthSpectrum::range(unsigned lo, unsigned hi) {
    DepthSpectrum s;
    for (unsigned v = lo; v <= hi; ++v) s.values.push_back(v);
    return s;
}

DepthSpectrum DepthSpectrum::range_union(unsigned lo1, unsigned hi1,
                                         unsigned lo2, unsigned hi2) {
    DepthSpectrum s = range(lo1, hi1);
    for (unsigned v = lo2; v <= hi2; ++v)
        if (!s.contains(v)) s.values.push_back(v);
    std::sort(s.values.begin(), s.values.end());
    return s;
}

std::uint64_t DepthDistribution::total() const {
    u64 t = 0;
    for (u64 c : counts) t += c;
    return t;
}

DepthSpectrum DepthDistribution::support() const {
    DepthSpectrum s;
    for (unsigned d = 1; d < counts.size(); ++d)
        if (counts[d] != 0) s.values.push_back(d);
    return s;
}

const char* to_string(SpectrumCase c) {
    switch (c) {
        case SpectrumCase::field_cyclic:
            return "field_cyclic";
        case SpectrumCase::field_consta_nontrivial:
            return "field_consta_nontrivial";
        case SpectrumCase::chain_lambdabar_ne_1:
            return "chain_lambdabar_ne_1";
        case SpectrumCase::chain_lambdabar_eq_1:
            return "chain_lambdabar_eq_1";
        case SpectrumCase::oracle_only:
            return "oracle_only";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// statistics and closed forms
// ---------------------------------------------------------------------------

SStats s_stats(const Code& C) {
    const unsigned top = C.ring->e() - 1;
    SStats s;
    for (unsigned l = 0; l < C.r(); ++l) {
        u64 term = (u64)C.degrees[l] * tau(C, l, top);
        s.s1 += term;
        if (l > 0) s.s2 += term;
    }
    return s;
}

DepthSpectrum spectrum_field_cyclic(const Field& F, const FPoly& gbar,
                                    unsigned N) {
    if (gbar.is_zero())
        throw std::invalid_argument("spectrum: zero generator polynomial");
    FPoly xn1 = fpoly_xn_minus(F, N, F.one());
    auto [q, rem] = fpoly_divmod(F, xn1, gbar);
    if (!rem.is_zero())
        throw std::invalid_argument(
            "spectrum: generator does not divide x^N - 1");
    unsigned t = fpoly_multiplicity(F, fpoly_x_minus_one(F), q);
    unsigned degg = (unsigned)gbar.degree().value();
    return DepthSpectrum::range_union(1, t, degg + t + 1, N);
}

DepthSpectrum spectrum_field_consta(const Field& F, const FPoly& gbar,
                                    unsigned N, FElem eta) {
    if (eta == F.zero() || eta == F.one())
        throw std::invalid_argument("spectrum: eta must differ from 0 and 1");
    if (gbar.is_zero())
        throw std::invalid_argument("spectrum: zero generator polynomial");
    FPoly xne = fpoly_xn_minus(F, N, eta);
    auto [q, rem] = fpoly_divmod(F, xne, gbar);
    if (!rem.is_zero())
        throw std::invalid_argument(
            "spectrum: generator does not divide x^N - eta");
    unsigned degg = (unsigned)gbar.degree().value();
    if (degg == 0 || degg == N)
        throw std::invalid_argument(
            "spectrum: trivial code (use the dispatcher)");
    return DepthSpectrum::range(degg + 1, N);
}

DepthSpectrum spectrum_chain(const Code& C) {
    const Ring& R = *C.ring;
    if (R.e() < 2)
        throw std::invalid_argument("spectrum: chain form needs e >= 2");
    if (C.root.beta_class != BetaClass::unit)
        throw std::invalid_argument(
            "spectrum: no closed form when beta is not a unit");
    if (C.is_zero_code()) return {};

    const unsigned n = C.root.n;
    const u64 ps = C.root.ps;
    const unsigned N = C.N;
    SStats s = s_stats(C);
    if (!C.lambda_bar_one) return DepthSpectrum::range((unsigned)s.s1 + 1, N);

    const unsigned k1 = C.exponents[0];
    const u64 threshold = R.e() > n ? (R.e() - n) * ps : 0;
    if (k1 < threshold) return DepthSpectrum::range(1, N);
    const u64 head_hi = R.e() * ps - k1;
    return DepthSpectrum::range_union(1, (unsigned)head_hi,
                                      (unsigned)(ps + s.s2 + 1), N);
}

SpectrumCase classify(const Code& C) {
    const Ring& R = *C.ring;
    if (R.e() == 1)
        return C.lambda_bar_one ? SpectrumCase::field_cyclic
                                : SpectrumCase::field_consta_nontrivial;
    if (C.root.beta_class == BetaClass::unit)
        return C.lambda_bar_one ? SpectrumCase::chain_lambdabar_eq_1
                                : SpectrumCase::chain_lambdabar_ne_1;
    return SpectrumCase::oracle_only;
}

// ---------------------------------------------------------------------------
// dispatch and oracle
// ---------------------------------------------------------------------------

namespace {

// unreduced residue generator prod fbar_l^{k_l} (degree N exactly for the
// zero code, where the reduced generator collapses to 0)
FPoly residue_generator(const Code& C) {
    const Field& F = C.ring->residue_field();
    FPoly g = poly_one(F);
    for (unsigned l = 0; l < C.r(); ++l)
        g = poly_mul(F, g, poly_pow(F, C.residue_factors[l], C.exponents[l]));
    return g;
}

}  // namespace

SpectrumResult spectrum_dispatch(const Code& C, const SpectrumOptions& opt) {
    SpectrumResult res;
    res.kind = classify(C);
    res.stats = s_stats(C);
    const Ring& R = *C.ring;
    const Field& F = R.residue_field();
    switch (res.kind) {
        case SpectrumCase::field_cyclic: {
            FPoly g = residue_generator(C);
            res.spectrum = spectrum_field_cyclic(F, g, C.N);
            FPoly xn1 = fpoly_xn_minus(F, C.N, F.one());
            res.t = fpoly_multiplicity(F, fpoly_x_minus_one(F),
                                       fpoly_divmod(F, xn1, g).first);
            break;
        }
        case SpectrumCase::field_consta_nontrivial: {
            if (C.is_zero_code()) break;
            if (C.is_full_code()) {
                res.spectrum = DepthSpectrum::range(1, C.N);
                break;
            }
            res.spectrum =
                spectrum_field_consta(F, residue_generator(C), C.N,
                                      R.project(C.lambda));
            break;
        }
        case SpectrumCase::chain_lambdabar_ne_1:
        case SpectrumCase::chain_lambdabar_eq_1: {
            res.spectrum = spectrum_chain(C);
            if (res.kind == SpectrumCase::chain_lambdabar_eq_1) {
                res.k1 = C.exponents[0];
                const u64 threshold =
                    R.e() > C.root.n ? (R.e() - C.root.n) * C.root.ps : 0;
                res.full_range_subcase = res.k1 < threshold;
            }
            break;
        }
        case SpectrumCase::oracle_only: {
            res.spectrum =
                distribution_oracle(C, opt.cap, opt.jobs).support();
            res.from_enumeration = true;
            break;
        }
    }
    return res;
}

DepthDistribution distribution_oracle(const Code& C, std::uint64_t cap,
                                      unsigned jobs) {
    const Ring& R = *C.ring;
    if (jobs == 0) jobs = 1;
    jobs = std::min(jobs, 64u);
    EchelonBasis B = echelon_basis(C);

    std::vector<std::vector<u64>> hist(jobs,
                                       std::vector<u64>(C.N + 1, 0));
    std::vector<std::vector<RElem>> scratch(jobs);
    enumerate_span(R, B, cap, jobs,
                   [&](unsigned w, std::span<const RElem> word) {
                       auto& buf = scratch[w];
                       buf.assign(word.begin(), word.end());
                       ++hist[w][depth_in_place(R, buf.data(), buf.size())];
                   });

    DepthDistribution D;
    D.N = C.N;
    D.counts.assign(C.N + 1, 0);
    for (const auto& h : hist)
        for (unsigned d = 0; d <= C.N; ++d) D.counts[d] += h[d];
    if (D.counts[0] != 1)
        throw std::logic_error("distribution: zero-depth count must be 1");
    return D;
}

}  // namespace ccdepth
