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

#include "ccdepth/tables.hpp"

#include <stdexcept>

#include "ccdepth/chain_ring.hpp"

namespace ccdepth {

namespace {

std::string triple_label(const std::vector<unsigned>& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

TableRow computed_row(std::shared_ptr<const Ring> R, RElem lambda, unsigned N,
                      std::vector<unsigned> k, std::string label,
                      std::string annotation = "") {
    Code C = make_code(std::move(R), lambda, N, k);
    TableRow row;
    row.label = std::move(label);
    row.exponents = std::move(k);
    row.computed = true;
    row.cardinality = cardinality_formula(C);
    row.spectrum = spectrum_dispatch(C).spectrum;
    row.annotation = std::move(annotation);
    return row;
}

}  // namespace

Table table_z9() {
    auto R = Ring::parse("GR(9,1)");
    Table t;
    t.name = "z9";
    t.title = "2-constacyclic codes of length 18 over GR(9,1)";
    t.label_header = "t";
    for (unsigned k = 0; k <= 18; ++k)
        t.rows.push_back(
            computed_row(R, RElem{2}, 18, {k}, std::to_string(k)));
    return t;
}

Table table_gr44() {
    auto R = Ring::parse("GR(4,4)");
    RElem lambda = R->neg(R->one());
    Table t;
    t.name = "gr44";
    t.title = "negacyclic codes of length 56 over GR(4,4)";
    t.label_header = "(k1,k2,k3)";

    const std::vector<std::vector<unsigned>> clean = {
        {14, 12, 13}, {14, 14, 11}, {14, 16, 9}, {14, 10, 15},
        {15, 16, 5},  {15, 6, 16},  {7, 6, 5},   {7, 3, 4},
    };
    for (const auto& k : clean)
        t.rows.push_back(computed_row(R, lambda, 56, k, triple_label(k)));

    t.rows.push_back(computed_row(
        R, lambda, 56, {16, 5, 16}, "(16,5,16)",
        "source listing prints {33,37,...,56}; the computed value is kept"));

    {
        TableRow rejected;
        rejected.label = "(10,6,17)";
        rejected.annotation =
            "rejected: k3 = 17 exceeds the exponent bound e*p^s = 16";
        t.rows.push_back(std::move(rejected));
    }

    for (const auto& k : {std::vector<unsigned>{4, 9, 10},
                          std::vector<unsigned>{13, 6, 10}})
        t.rows.push_back(computed_row(R, lambda, 56, k, triple_label(k)));
    return t;
}

Table table_by_name(const std::string& name) {
    if (name == "z9") return table_z9();
    if (name == "gr44") return table_gr44();
    throw std::invalid_argument("unknown table '" + name +
                                "' (expected z9 or gr44)");
}

}  // namespace ccdepth
