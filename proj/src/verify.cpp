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

#include "ccdepth/verify.hpp"

#include <stdexcept>

#include "ccdepth/io.hpp"

namespace ccdepth {

namespace {
using u64 = std::uint64_t;

bool scan_fits(u64 q, unsigned N, u64 cap) {
    u64 total = 1;
    for (unsigned i = 0; i < N; ++i) {
        if (total > cap / q) return false;
        total *= q;
    }
    return true;
}

VerifyRecord check_one(const Code& C, u64 cap, unsigned jobs) {
    const Ring& R = *C.ring;
    VerifyRecord rec;
    rec.ring_spec = R.spec_string();
    rec.lambda_rendered = render_relem(R, C.lambda);
    rec.N = C.N;
    rec.exponents = C.exponents;
    rec.kind = classify(C);
    rec.pass = true;

    // The torsion-product formulas presuppose the structural cases the
    // classifier accepts; for oracle-only codes the pivot count is the
    // authoritative cardinality and the formula comparisons are skipped.
    const bool structural = rec.kind != SpectrumCase::oracle_only;

    EchelonBasis B = echelon_basis(C);
    rec.card_echelon = cardinality_from_echelon(R, B);
    rec.card_formula = structural ? cardinality_formula(C) : rec.card_echelon;
    rec.cards_match = rec.card_formula == rec.card_echelon;
    if (!rec.cards_match) {
        rec.pass = false;
        rec.detail = "cardinality: torsion product " +
                     rec.card_formula.pow_string() + " != echelon pivots " +
                     rec.card_echelon.pow_string();
        return rec;
    }
    if (!structural)
        rec.detail = "no closed form for this code; checked enumeration "
                     "against the pivot count only";

    const u64 q = R.residue_field().size();
    if (structural && scan_fits(q, C.N, cap)) {
        rec.torsion_checked = true;
        rec.torsion_match = true;
        for (unsigned i = 0; i < R.e(); ++i) {
            TorsionCode f = torsion_formula(C, i);
            TorsionCode o = torsion_oracle(C, i, cap);
            if (!(f.generator == o.generator)) {
                rec.torsion_match = false;
                rec.pass = false;
                rec.detail = "torsion level " + std::to_string(i) +
                             ": formula generator differs from scan";
                return rec;
            }
        }
    }

    auto card = rec.card_formula.value_if_at_most(cap);
    if (card) {
        rec.spectrum_checked = true;
        DepthDistribution D = distribution_oracle(C, cap, jobs);
        rec.enumerated = D.total();
        rec.oracle_spectrum = D.support();
        rec.dispatch_spectrum = spectrum_dispatch(C, {cap, jobs}).spectrum;
        if (rec.enumerated != *card) {
            rec.pass = false;
            rec.detail = "enumeration count " + std::to_string(rec.enumerated) +
                         " != cardinality " + rec.card_formula.pow_string();
            return rec;
        }
        if (!(rec.oracle_spectrum == rec.dispatch_spectrum)) {
            rec.pass = false;
            rec.detail = "spectrum: dispatch " +
                         render_spectrum(rec.dispatch_spectrum) +
                         " != oracle " + render_spectrum(rec.oracle_spectrum);
            return rec;
        }
    }
    return rec;
}

}  // namespace

VerifyReport run_verify(const std::vector<VerifyCell>& grid, u64 cap,
                        unsigned jobs) {
    VerifyReport report;
    for (const auto& cell : grid) {
        auto R = Ring::parse(cell.ring_spec);
        RElem lambda = parse_lambda(*R, cell.lambda_text);

        // factor count discovery: the exponent list length must match r
        Code base = [&] {
            for (unsigned guess = 1; guess <= cell.N; ++guess) {
                try {
                    return make_code(R, lambda, cell.N,
                                     std::vector<unsigned>(guess, 0));
                } catch (const std::invalid_argument&) {
                }
            }
            throw std::invalid_argument("verify: cell " + cell.ring_spec +
                                        " has no admissible code");
        }();

        const unsigned r = base.r();
        const unsigned maxk = base.max_exponent();
        std::vector<unsigned> k(r, 0);
        for (;;) {
            Code C = make_code(R, lambda, cell.N, k);
            VerifyRecord rec = check_one(C, cap, jobs);
            if (!rec.spectrum_checked) ++report.oracle_skipped;
            if (rec.pass)
                ++report.passed;
            else
                ++report.failed;
            report.records.push_back(std::move(rec));

            unsigned j = 0;
            while (j < r && k[j] == maxk) k[j++] = 0;
            if (j == r) break;
            ++k[j];
        }
    }
    return report;
}

VerifyCell parse_verify_cell(const std::string& text) {
    std::size_t p1 = text.find('|');
    std::size_t p2 = p1 == std::string::npos ? std::string::npos
                                             : text.find('|', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument("verify cell '" + text +
                                    "': expected ring|lambda|N");
    VerifyCell cell;
    cell.ring_spec = text.substr(0, p1);
    cell.lambda_text = text.substr(p1 + 1, p2 - p1 - 1);
    std::string n = text.substr(p2 + 1);
    std::size_t used = 0;
    long long v;
    try {
        v = std::stoll(n, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("verify cell: N is not an integer");
    }
    if (used != n.size() || v < 1)
        throw std::invalid_argument("verify cell: N must be a positive integer");
    cell.N = (unsigned)v;
    return cell;
}

}  // namespace ccdepth
