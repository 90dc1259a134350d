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

#ifndef CCDEPTH_ERRORS_HPP
#define CCDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccdepth {

/// Thrown when an enumeration (or another exhaustive computation) would
/// exceed the configured word cap.  CLI maps this to exit code 3.
class cap_exceeded_error : public std::runtime_error {
public:
    explicit cap_exceeded_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace ccdepth

#endif  // CCDEPTH_ERRORS_HPP
