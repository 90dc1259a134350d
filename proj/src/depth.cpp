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

#include "ccdepth/depth.hpp"

namespace ccdepth {

RVec depth_via_shift(const Ring& R, const RPoly& c, unsigned N, RElem lambda,
                     unsigned i) {
    if (N == 0) throw std::invalid_argument("depth_via_shift: N must be >= 1");
    if (i >= N) throw std::invalid_argument("depth_via_shift: need 0 <= i <= N-1");
    if (c.c.size() > N)
        throw std::invalid_argument("depth_via_shift: deg c must be < N");
    RPoly one_minus_x;
    one_minus_x.c = {R.one(), R.neg(R.one())};
    RPoly acc = c;
    for (unsigned k = 0; k < i; ++k) acc = mul_mod(R, acc, one_minus_x, N, lambda);
    RVec out(N - i, R.zero());
    for (std::size_t j = i; j < N; ++j)
        if (j < acc.c.size()) out[j - i] = acc.c[j];
    return out;
}

}  // namespace ccdepth
