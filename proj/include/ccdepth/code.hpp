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

#ifndef CCDEPTH_CODE_HPP
#define CCDEPTH_CODE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccdepth/poly.hpp"

namespace ccdepth {

/// Exact cardinality of a module over the chain ring, kept as base^exponent
/// with base the ring prime (these counts are always powers of p).
struct PrimePower {
    std::uint64_t base = 1;
    std::uint64_t exponent = 0;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        if (a.exponent == 0 && b.exponent == 0) return true;
        return a.base == b.base && a.exponent == b.exponent;
    }
    /// The numeric value when it fits under cap, nullopt otherwise.
    std::optional<std::uint64_t> value_if_at_most(std::uint64_t cap) const;
    /// "1" or "p^k".
    std::string pow_string() const;
    /// Exact decimal expansion (arbitrary size).
    std::string decimal_string() const;
};

/// A repeated-root constacyclic code C = <prod f_l^{k_l}> in
/// R[x]/(x^N - lambda), together with everything derived at construction:
/// the base-root decomposition of lambda, the canonical lifted factors of
/// x^n - alpha0, and the reduced generator polynomial.
struct Code {
    std::shared_ptr<const Ring> ring;
    unsigned N = 0;
    RElem lambda;
    BaseRoot root;
    std::vector<FPoly> residue_factors;  // canonical order
    std::vector<RPoly> factors;          // lifted, same order
    std::vector<unsigned> degrees;       // deg f_l
    std::vector<unsigned> exponents;     // k_l in [0, e * p^s]
    RPoly generator;                     // prod f_l^{k_l} mod x^N - lambda
    bool lambda_bar_one = false;

    unsigned r() const { return (unsigned)factors.size(); }
    unsigned max_exponent() const { return (unsigned)(ring->e() * root.ps); }
    bool is_zero_code() const;
    bool is_full_code() const;
};

/// Validates lambda (unit) and the exponent vector (length r, entries in
/// [0, e*p^s]) and assembles the code.  N is limited to 4096.
Code make_code(std::shared_ptr<const Ring> ring, RElem lambda, unsigned N,
               std::vector<unsigned> exponents);

/// tau_l(i) = min((i+1) p^s, k_l) - min(i p^s, k_l): how much of f_l's
/// exponent budget lands in torsion level i.  factor_idx is 0-based;
/// 0 <= i < e.
unsigned tau(const Code& C, unsigned factor_idx, unsigned i);

struct TorsionCode {
    unsigned index = 0;  // torsion level i
    FPoly generator;     // monic generator over the residue field
};

/// Tor_i(C) = <prod fbar_l^{tau_l(i)}> by the structure theory.  The zero
/// torsion code is represented by the generator x^N - lambdabar.
TorsionCode torsion_formula(const Code& C, unsigned i);

/// Tor_i(C) computed from the definition { proj(f) : gamma^i f in C } by
/// scanning all q^N residue vectors and taking the monic gcd of the
/// members with x^N - lambdabar.  Throws cap_exceeded_error when q^N
/// exceeds scan_cap.
TorsionCode torsion_oracle(const Code& C, unsigned i,
                           std::uint64_t scan_cap = std::uint64_t{1} << 20);

/// |C| = prod_i q^{N - deg Tor_i(C)}, assembled from torsion_formula.
PrimePower cardinality_formula(const Code& C);

/// One row of a saturated echelon basis: vec[pivot] = gamma^valuation,
/// entries left of the pivot zero, pivot columns of other rows reduced to
/// canonical residues.
struct EchelonRow {
    std::size_t pivot = 0;
    unsigned valuation = 0;
    RVec vec;
};

/// Saturated echelon form of a module spanned by row vectors: the row span
/// is preserved, pivots sit in strictly increasing columns, and for every
/// row the multiple gamma^{e - valuation} * row reduces to zero against the
/// basis (saturation), which makes greedy reduction a membership test and
/// makes the pivot valuations determine the cardinality.
struct EchelonBasis {
    unsigned N = 0;
    std::vector<EchelonRow> rows;
};

EchelonBasis echelonize(const Ring& R, std::vector<RVec> gens, unsigned N);

/// Basis of the code's underlying module, from the cyclic shifts of the
/// generator polynomial.
EchelonBasis echelon_basis(const Code& C);

/// Greedy reduction against the basis; the result is zero iff v lies in
/// the row span.
RVec echelon_reduce(const Ring& R, const EchelonBasis& B, RVec v);
bool echelon_contains(const Ring& R, const EchelonBasis& B, RVec v);

/// prod_j p^{m (e - v_j)} over the pivot valuations.
PrimePower cardinality_from_echelon(const Ring& R, const EchelonBasis& B);

/// Visits every element of the row span exactly once (the zero vector
/// included) and returns the count.  Throws cap_exceeded_error when the
/// span is larger than cap, before visiting anything.  With jobs > 1 the
/// visitor is invoked concurrently and receives the worker index.
std::uint64_t enumerate_span(
    const Ring& R, const EchelonBasis& B, std::uint64_t cap, unsigned jobs,
    const std::function<void(unsigned worker, std::span<const RElem>)>& visit);

/// Single-threaded convenience wrapper.
std::uint64_t enumerate_codewords(
    const Ring& R, const EchelonBasis& B, std::uint64_t cap,
    const std::function<void(std::span<const RElem>)>& visit);

}  // namespace ccdepth

#endif  // CCDEPTH_CODE_HPP
