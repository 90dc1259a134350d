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

#ifndef CCDEPTH_DEPTH_HPP
#define CCDEPTH_DEPTH_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ccdepth/poly.hpp"

namespace ccdepth {

/// D(a_0, ..., a_{N-1}) = (a_1 - a_0, ..., a_{N-1} - a_{N-2}).
/// Requires length >= 2.
template <class A>
std::vector<typename A::elem_type> derivative(
    const A& alg, std::span<const typename A::elem_type> a) {
    if (a.size() < 2)
        throw std::invalid_argument("derivative: vector length must be >= 2");
    std::vector<typename A::elem_type> d(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        d[i] = alg.sub(a[i + 1], a[i]);
    return d;
}

/// Destructive depth computation on buf[0..len): the least i with
/// D^i(a) = 0, or len (= N) when no iterate vanishes.
template <class A>
unsigned depth_in_place(const A& alg, typename A::elem_type* buf,
                        std::size_t len) {
    bool zero = true;
    for (std::size_t j = 0; j < len; ++j)
        if (!alg.is_zero(buf[j])) {
            zero = false;
            break;
        }
    if (zero) return 0;
    unsigned i = 0;
    for (;;) {
        if (len == 1) return i + 1;
        bool next_zero = true;
        for (std::size_t j = 0; j + 1 < len; ++j) {
            buf[j] = alg.sub(buf[j + 1], buf[j]);
            if (!alg.is_zero(buf[j])) next_zero = false;
        }
        --len;
        ++i;
        if (next_zero) return i;
    }
}

template <class A>
struct DepthResultT {
    unsigned depth = 0;
    /// The constant value of D^{depth-1}(a) when depth >= 1 (for a full
    /// depth of N this is the single entry of the last derivative).
    std::optional<typename A::elem_type> witness;
};

/// Depth of a vector of length N >= 1 by iterating the derivative.
template <class A>
DepthResultT<A> depth(const A& alg, std::span<const typename A::elem_type> a) {
    if (a.empty()) throw std::invalid_argument("depth: vector must be nonempty");
    std::vector<typename A::elem_type> buf(a.begin(), a.end());
    std::size_t len = buf.size();
    bool zero = true;
    for (std::size_t j = 0; j < len; ++j)
        if (!alg.is_zero(buf[j])) {
            zero = false;
            break;
        }
    if (zero) return {};
    unsigned i = 0;
    for (;;) {
        if (len == 1) return {i + 1, buf[0]};
        typename A::elem_type head = buf[0];
        bool next_zero = true;
        for (std::size_t j = 0; j + 1 < len; ++j) {
            buf[j] = alg.sub(buf[j + 1], buf[j]);
            if (!alg.is_zero(buf[j])) next_zero = false;
        }
        --len;
        ++i;
        if (next_zero) return {i, head};
    }
}

using DepthResult = DepthResultT<Ring>;

/// D^i of the coefficient vector of c, computed through the shift identity:
/// the last N - i coefficients of (1-x)^i c(x) in R[x]/(x^N - lambda).
/// Requires lambda a unit, deg c < N, and 0 <= i <= N-1.
RVec depth_via_shift(const Ring& R, const RPoly& c, unsigned N, RElem lambda,
                     unsigned i);

}  // namespace ccdepth

#endif  // CCDEPTH_DEPTH_HPP
