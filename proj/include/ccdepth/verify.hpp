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

#ifndef CCDEPTH_VERIFY_HPP
#define CCDEPTH_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ccdepth/chain_ring.hpp"
#include "ccdepth/code.hpp"
#include "ccdepth/spectra.hpp"

namespace ccdepth {

/// One (ring, lambda, N) triple; a verification sweep covers every exponent
/// vector of the cell.
struct VerifyCell {
    std::string ring_spec;
    std::string lambda_text;
    unsigned N = 0;
};

struct VerifyRecord {
    std::string ring_spec;
    std::string lambda_rendered;
    unsigned N = 0;
    std::vector<unsigned> exponents;
    SpectrumCase kind = SpectrumCase::oracle_only;

    PrimePower card_formula;
    PrimePower card_echelon;
    bool cards_match = false;

    /// Depth checks ran only when the code fits under the enumeration cap.
    bool spectrum_checked = false;
    DepthSpectrum dispatch_spectrum;
    DepthSpectrum oracle_spectrum;
    std::uint64_t enumerated = 0;

    /// Torsion cross-check ran only when the q^N residue scan fits the cap.
    bool torsion_checked = false;
    bool torsion_match = false;

    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyRecord> records;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t oracle_skipped = 0;

    bool pass() const { return failed == 0; }
};

/// Sweeps every exponent vector of every cell, cross-checking the closed
/// forms against enumeration: cardinality three ways (torsion product,
/// echelon pivots, enumeration count), spectrum formula vs oracle support,
/// and torsion generators formula vs definitional scan.
VerifyReport run_verify(const std::vector<VerifyCell>& grid,
                        std::uint64_t cap = 1000000, unsigned jobs = 1);

/// "ring|lambda|N", e.g. "GR(4,1)|-1|4".
VerifyCell parse_verify_cell(const std::string& text);

}  // namespace ccdepth

#endif  // CCDEPTH_VERIFY_HPP
