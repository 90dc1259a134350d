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

#ifndef CCDEPTH_TABLES_HPP
#define CCDEPTH_TABLES_HPP

#include <string>
#include <vector>

#include "ccdepth/code.hpp"
#include "ccdepth/spectra.hpp"

namespace ccdepth {

struct TableRow {
    std::string label;
    std::vector<unsigned> exponents;
    /// False when the row is emitted only to document a rejected input.
    bool computed = false;
    PrimePower cardinality;
    DepthSpectrum spectrum;
    /// Nonempty when the row deviates from its source listing.
    std::string annotation;
};

struct Table {
    std::string name;
    std::string title;
    std::string label_header;
    std::vector<TableRow> rows;
};

/// All 2-constacyclic codes of length 18 over Z9: rows t = 0..18.
Table table_z9();

/// Twelve negacyclic codes of length 56 over GR(4,4), in the source row
/// order; two rows carry known-discrepancy annotations.
Table table_gr44();

Table table_by_name(const std::string& name);

}  // namespace ccdepth

#endif  // CCDEPTH_TABLES_HPP
