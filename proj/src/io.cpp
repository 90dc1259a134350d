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

#include "ccdepth/io.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>

namespace ccdepth {

namespace {
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using nlohmann::json;

std::string render_range(unsigned lo, unsigned hi) {
    if (lo == hi) return "{" + std::to_string(lo) + "}";
    if (hi == lo + 1)
        return "{" + std::to_string(lo) + "," + std::to_string(hi) + "}";
    return "{" + std::to_string(lo) + ",...," + std::to_string(hi) + "}";
}

// shared term renderer over any coefficient printer
template <class PrintCoeff, class IsOne>
std::string render_terms(std::size_t n, PrintCoeff coeff, IsOne is_one,
                         auto is_zero) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(i)) continue;
        if (!out.empty()) out += " + ";
        const bool unit = is_one(i);
        if (i == 0) {
            out += coeff(i);
        } else {
            if (!unit) out += coeff(i) + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

long long to_ll(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer");
    return j.get<long long>();
}

u32 fold_coord(long long v, u64 base) {
    long long m = (long long)base;
    long long r = v % m;
    if (r < 0) r += m;
    return (u32)r;
}

}  // namespace

// ---------------------------------------------------------------------------
// text rendering
// ---------------------------------------------------------------------------

std::string render_spectrum(const DepthSpectrum& s) {
    if (s.values.empty()) return "{}";
    std::string out;
    for (auto [lo, hi] : s.merged_ranges()) {
        if (!out.empty()) out += " U ";
        out += render_range(lo, hi);
    }
    return out;
}

std::string render_prime_power(const PrimePower& v) { return v.pow_string(); }

std::string render_relem(const Ring& R, RElem x) {
    auto c = R.coords(x);
    if (c.size() == 1) return std::to_string(c[0]);
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out + "]";
}

std::string render_felem(const Field& F, FElem x) {
    auto c = F.coords(x);
    if (c.size() == 1) return std::to_string(c[0]);
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out + "]";
}

std::string render_rpoly(const Ring& R, const RPoly& f) {
    return render_terms(
        f.c.size(), [&](std::size_t i) { return render_relem(R, f.c[i]); },
        [&](std::size_t i) { return f.c[i] == R.one(); },
        [&](std::size_t i) { return R.is_zero(f.c[i]); });
}

std::string render_fpoly(const Field& F, const FPoly& f) {
    return render_terms(
        f.c.size(), [&](std::size_t i) { return render_felem(F, f.c[i]); },
        [&](std::size_t i) { return f.c[i] == F.one(); },
        [&](std::size_t i) { return F.is_zero(f.c[i]); });
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

json relem_to_json(const Ring& R, RElem x) {
    auto c = R.coords(x);
    if (c.size() == 1) return json(c[0]);
    json a = json::array();
    for (u32 v : c) a.push_back(v);
    return a;
}

RElem relem_from_json(const Ring& R, const json& j) {
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        RElem x = R.from_int((u64)(v < 0 ? -v : v));
        return v < 0 ? R.neg(x) : x;
    }
    if (!j.is_array())
        throw std::invalid_argument(
            "element: expected an integer or a coordinate array");
    if (j.size() != R.coord_count())
        throw std::invalid_argument("element: expected " +
                                    std::to_string(R.coord_count()) +
                                    " coordinates, got " +
                                    std::to_string(j.size()));
    std::vector<u32> c;
    c.reserve(j.size());
    for (const auto& v : j)
        c.push_back(fold_coord(to_ll(v, "element"), R.coord_modulus()));
    return R.from_coords(c);
}

json rvec_to_json(const Ring& R, const RVec& v) {
    json a = json::array();
    for (RElem x : v) a.push_back(relem_to_json(R, x));
    return a;
}

RVec rvec_from_json(const Ring& R, const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("vector: expected a JSON array");
    RVec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(relem_from_json(R, x));
    return v;
}

json rpoly_to_json(const Ring& R, const RPoly& f) {
    return rvec_to_json(R, f.c);
}

RPoly rpoly_from_json(const Ring& R, const json& j) {
    RPoly f;
    f.c = rvec_from_json(R, j);
    poly_normalize(R, f);
    return f;
}

json fpoly_to_json(const Field& F, const FPoly& f) {
    json a = json::array();
    for (FElem x : f.c) {
        auto c = F.coords(x);
        if (c.size() == 1) {
            a.push_back(c[0]);
        } else {
            json e = json::array();
            for (u32 v : c) e.push_back(v);
            a.push_back(e);
        }
    }
    return a;
}

json spectrum_to_json(const DepthSpectrum& s) {
    json a = json::array();
    for (auto [lo, hi] : s.merged_ranges()) a.push_back(json::array({lo, hi}));
    return a;
}

json code_spec_to_json(const Code& C) {
    json j;
    j["ring"] = C.ring->spec_string();
    j["lambda"] = relem_to_json(*C.ring, C.lambda);
    j["N"] = C.N;
    j["exponents"] = C.exponents;
    return j;
}

Code code_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("code spec: expected a JSON object");
    for (const char* key : {"ring", "lambda", "N", "exponents"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("code spec: missing '") +
                                        key + "'");
    auto R = Ring::parse(j["ring"].get<std::string>());
    RElem lambda = relem_from_json(*R, j["lambda"]);
    long long N = to_ll(j["N"], "code spec N");
    if (N < 1) throw std::invalid_argument("code spec: N must be positive");
    std::vector<unsigned> k;
    if (!j["exponents"].is_array())
        throw std::invalid_argument("code spec: exponents must be an array");
    for (const auto& v : j["exponents"]) {
        long long x = to_ll(v, "code spec exponent");
        if (x < 0)
            throw std::invalid_argument(
                "code spec: exponents must be non-negative");
        k.push_back((unsigned)x);
    }
    return make_code(R, lambda, (unsigned)N, std::move(k));
}

// ---------------------------------------------------------------------------
// CLI input parsing
// ---------------------------------------------------------------------------

RElem parse_lambda(const Ring& R, const std::string& text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace((unsigned char)text[b])) ++b;
    while (e > b && std::isspace((unsigned char)text[e - 1])) --e;
    std::string s = text.substr(b, e - b);
    if (s.empty()) throw std::invalid_argument("lambda: empty value");
    if (s[0] == '[') {
        json j = json::parse(s, nullptr, false);
        if (j.is_discarded())
            throw std::invalid_argument("lambda: invalid JSON array");
        return relem_from_json(R, j);
    }
    std::size_t used = 0;
    long long v;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("lambda: not an integer");
    }
    if (used != s.size())
        throw std::invalid_argument("lambda: trailing characters");
    RElem x = R.from_int((u64)(v < 0 ? -v : v));
    return v < 0 ? R.neg(x) : x;
}

std::vector<unsigned> parse_k_csv(const std::string& text) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t b = 0, e = part.size();
        while (b < e && std::isspace((unsigned char)part[b])) ++b;
        while (e > b && std::isspace((unsigned char)part[e - 1])) --e;
        part = part.substr(b, e - b);
        if (part.empty())
            throw std::invalid_argument("exponents: empty entry in list");
        std::size_t used = 0;
        long long v;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("exponents: '" + part +
                                        "' is not an integer");
        }
        if (used != part.size() || v < 0)
            throw std::invalid_argument("exponents: '" + part +
                                        "' is not a non-negative integer");
        out.push_back((unsigned)v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

RVec parse_word_json(const Ring& R, unsigned N, const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw std::invalid_argument("word: expected a JSON coefficient array");
    RVec v = rvec_from_json(R, j);
    if (v.size() > N)
        throw std::invalid_argument("word: more than N coefficients");
    v.resize(N, R.zero());
    return v;
}

}  // namespace ccdepth
