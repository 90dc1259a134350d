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

#ifndef CCDEPTH_SPECTRA_HPP
#define CCDEPTH_SPECTRA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ccdepth/chain_ring.hpp"
#include "ccdepth/code.hpp"
#include "ccdepth/poly.hpp"

namespace ccdepth {

/// The set of depths attained by the nonzero words of a code, sorted
/// ascending. Empty exactly for the zero code.
struct DepthSpectrum {
    std::vector<unsigned> values;

    bool operator==(const DepthSpectrum&) const = default;
    bool empty() const { return values.empty(); }
    bool contains(unsigned d) const;

    /// Maximal runs of consecutive values as inclusive [lo, hi] pairs.
    std::vector<std::pair<unsigned, unsigned>> merged_ranges() const;

    /// {lo, lo+1, ..., hi}; empty when lo > hi.
    static DepthSpectrum range(unsigned lo, unsigned hi);
    /// Union of two inclusive ranges, merged and deduplicated.
    static DepthSpectrum range_union(unsigned lo1, unsigned hi1, unsigned lo2,
                                     unsigned hi2);
};

/// Codeword count per depth 0..N. counts[0] = 1 for every linear code
/// (only the zero word has depth 0).
struct DepthDistribution {
    unsigned N = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    /// Depths >= 1 with a nonzero count.
    DepthSpectrum support() const;
};

enum class SpectrumCase {
    field_cyclic,
    field_consta_nontrivial,
    chain_lambdabar_ne_1,
    chain_lambdabar_eq_1,
    oracle_only,
};

const char* to_string(SpectrumCase c);

/// Degree-weighted exponent budgets at the top torsion level: s1 sums over
/// all factors, s2 skips the leading x - 1 factor.  These equal the degree
/// of the actual top torsion generator exactly when classify(C) is not
/// oracle_only.
struct SStats {
    std::uint64_t s1 = 0;
    std::uint64_t s2 = 0;
};

SStats s_stats(const Code& C);

/// Spectrum of the cyclic code <gbar> of length N over F: with t the exact
/// multiplicity of (x - 1) in (x^N - 1) / gbar, the set is
/// {1..t} U {deg g + t + 1 .. N}. Throws when gbar does not divide x^N - 1.
DepthSpectrum spectrum_field_cyclic(const Field& F, const FPoly& gbar,
                                    unsigned N);

/// Spectrum {deg g + 1 .. N} of a nontrivial eta-constacyclic code over F,
/// eta != 0, 1. Throws on eta in {0, 1}, on gbar not dividing x^N - eta,
/// and on trivial codes (deg g = 0 or N).
DepthSpectrum spectrum_field_consta(const Field& F, const FPoly& gbar,
                                    unsigned N, FElem eta);

/// Closed-form spectrum over a chain ring with e >= 2 and beta a unit.
/// Returns the empty set for the zero code; throws when beta is not a unit
/// or e < 2.
DepthSpectrum spectrum_chain(const Code& C);

SpectrumCase classify(const Code& C);

struct SpectrumOptions {
    std::uint64_t cap = 1000000;
    unsigned jobs = 1;
};

struct SpectrumResult {
    SpectrumCase kind = SpectrumCase::oracle_only;
    DepthSpectrum spectrum;
    SStats stats;
    /// field_cyclic only: multiplicity of (x - 1) in (x^N - 1) / g.
    unsigned t = 0;
    /// chain residue-one case only: the x - 1 exponent k1 and whether it
    /// falls below the (e - n) p^s threshold that forces the full range.
    unsigned k1 = 0;
    bool full_range_subcase = false;
    /// True when the spectrum came from enumeration rather than a formula.
    bool from_enumeration = false;
};

/// Routes the code to the matching closed form; codes outside the formula
/// hypotheses fall back to enumeration (throws cap_exceeded_error when the
/// code is larger than opt.cap).
SpectrumResult spectrum_dispatch(const Code& C, const SpectrumOptions& opt = {});

/// Exact depth counts by enumerating every codeword.
DepthDistribution distribution_oracle(const Code& C,
                                      std::uint64_t cap = 1000000,
                                      unsigned jobs = 1);

}  // namespace ccdepth

#endif  // CCDEPTH_SPECTRA_HPP
