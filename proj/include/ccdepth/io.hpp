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

#ifndef CCDEPTH_IO_HPP
#define CCDEPTH_IO_HPP

#include <string>

#include "json.hpp"

#include "ccdepth/chain_ring.hpp"
#include "ccdepth/code.hpp"
#include "ccdepth/poly.hpp"
#include "ccdepth/spectra.hpp"

namespace ccdepth {

// ----- text rendering (deterministic ASCII) -----

/// "{}", "{5}", "{17,18}", "{3,...,18}", "{1,2} U {36,...,56}".
std::string render_spectrum(const DepthSpectrum& s);

/// "1", "3^16", "2^92".
std::string render_prime_power(const PrimePower& v);

/// Canonical coordinates: "3" for single-coordinate rings, "[1,0,3,2]" else.
std::string render_relem(const Ring& R, RElem x);
std::string render_felem(const Field& F, FElem x);

/// Ascending terms, e.g. "3 + x + 2*x^2 + x^3"; "0" for the zero polynomial.
std::string render_rpoly(const Ring& R, const RPoly& f);
std::string render_fpoly(const Field& F, const FPoly& f);

// ----- JSON encoding -----
// Polynomials and vectors are arrays of coefficients, ascending; each
// coefficient is a plain integer for single-coordinate rings and an array
// of canonical coordinates otherwise.

nlohmann::json relem_to_json(const Ring& R, RElem x);
RElem relem_from_json(const Ring& R, const nlohmann::json& j);
nlohmann::json rvec_to_json(const Ring& R, const RVec& v);
RVec rvec_from_json(const Ring& R, const nlohmann::json& j);
nlohmann::json rpoly_to_json(const Ring& R, const RPoly& f);
RPoly rpoly_from_json(const Ring& R, const nlohmann::json& j);
nlohmann::json fpoly_to_json(const Field& F, const FPoly& f);

nlohmann::json spectrum_to_json(const DepthSpectrum& s);

/// {ring, lambda, N, exponents}; round-trips through code_from_json.
nlohmann::json code_spec_to_json(const Code& C);
Code code_from_json(const nlohmann::json& j);

// ----- CLI input parsing -----

/// Decimal integer (negatives fold canonically) or a JSON coordinate array.
RElem parse_lambda(const Ring& R, const std::string& text);

/// Comma-separated non-negative integers.
std::vector<unsigned> parse_k_csv(const std::string& text);

/// Vector of exactly N coefficients from polynomial JSON (shorter input is
/// zero-padded; longer input is rejected).
RVec parse_word_json(const Ring& R, unsigned N, const std::string& text);

}  // namespace ccdepth

#endif  // CCDEPTH_IO_HPP
