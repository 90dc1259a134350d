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

#ifndef CCDEPTH_TESTS_UTIL_HPP
#define CCDEPTH_TESTS_UTIL_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ccdepth/chain_ring.hpp"
#include "ccdepth/poly.hpp"

namespace ccdepth::testutil {

inline RPoly rp(const Ring& R, std::initializer_list<std::int64_t> coeffs) {
    std::vector<RElem> c;
    for (auto k : coeffs) c.push_back(R.from_int(k));
    return poly_from_coeffs(R, std::move(c));
}

inline FPoly fp(const Field& F, std::initializer_list<std::int64_t> coeffs) {
    std::vector<FElem> c;
    for (auto k : coeffs) c.push_back(F.from_int(k));
    return poly_from_coeffs(F, std::move(c));
}

inline RVec rv(const Ring& R, std::initializer_list<std::int64_t> coords) {
    RVec v;
    for (auto k : coords) v.push_back(R.from_int(k));
    return v;
}

/// All elements of a small ring, by canonical index.
inline std::vector<RElem> all_elems(const Ring& R) {
    std::vector<RElem> v;
    for (std::uint64_t i = 0; i < R.size(); ++i)
        v.push_back(RElem{(std::uint32_t)i});
    return v;
}

inline std::vector<FElem> all_felems(const Field& F) {
    std::vector<FElem> v;
    for (std::uint32_t i = 0; i < F.size(); ++i) v.push_back(FElem{i});
    return v;
}

}  // namespace ccdepth::testutil

#endif  // CCDEPTH_TESTS_UTIL_HPP
