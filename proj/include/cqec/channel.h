// Copyright 2026 The coherentqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cqec/decoder.h"
#include "cqec/noise.h"
#include "cqec/parallel.h"
#include "cqec/poly.h"

namespace cqec {

/// Logical channel rho -> sum_ab r(a, b) L_a rho L_b on k logical qubits,
/// with logical Paulis indexed as in NormalForm.
struct LogicalChannel {
    size_t k = 1;
    Eigen::MatrixXcd r;

    static LogicalChannel identity(size_t k);
    size_t dim() const { return size_t(r.rows()); }
    /// r minus the identity channel. The (0, 0) entry is rebuilt from the
    /// trace condition so that small deviations keep full precision.
    Eigen::MatrixXcd deviation() const;
};

/// Per-syndrome logical Kraus operators K_s = sum_l c(s, l) L_l.
struct KrausList {
    size_t k = 1;
    size_t num_syndromes = 0;
    std::vector<cplx> coeffs;

    size_t num_logicals() const { return size_t(1) << (2 * k); }
    cplx &at(uint64_t s, uint32_t l) { return coeffs[s * num_logicals() + l]; }
    const cplx &at(uint64_t s, uint32_t l) const { return coeffs[s * num_logicals() + l]; }
    /// Unnormalized r matrix of rho -> K_s rho K_s^dagger.
    Eigen::MatrixXcd conditional(uint64_t s) const;
    LogicalChannel channel() const;
};

/// Kraus operators of the decoded logical channel for product unitary noise.
/// The serial reference sums over all 4^n Pauli words and needs n <= 12; the
/// parallel path does the same for n <= 12 and switches to
/// effective_unitary_factored above that.
KrausList effective_unitary(const DecoderTable &table, const UnitaryNoise &noise, Exec exec = Exec::parallel);

/// Same Kraus operators as a sum over stabilizer elements, contracted one
/// qubit at a time. Work per syndrome grows as 2^w, w being the largest
/// number of generators whose support spans a qubit.
KrausList effective_unitary_factored(const DecoderTable &table, const UnitaryNoise &noise);

/// Per-syndrome r matrices for product model noise, from pairs of Z words
/// that share a syndrome. Requires n <= 16.
struct SyndromeChannels {
    size_t k = 1;
    std::vector<Eigen::MatrixXcd> r;

    LogicalChannel total() const;
};
SyndromeChannels effective_model_numeric(const DecoderTable &table, const ModelNoise &noise,
                                         Exec exec = Exec::parallel);

/// Real and imaginary parts of one r-matrix entry as exact polynomials.
struct GaussPoly {
    Poly2 re;
    Poly2 im;
};

/// Exact logical map (x, y) -> (x', y') for uniform model noise on a k = 1
/// code.
class PolyMap {
   public:
    PolyMap() = default;
    PolyMap(Poly2 x_poly, Poly2 y_poly);

    const Poly2 &x_poly() const { return x_poly_; }
    const Poly2 &y_poly() const { return y_poly_; }
    ModelChannel apply(ModelChannel in) const { return {fx_(in.x, in.y), fy_(in.x, in.y)}; }

    /// False when the averaged channel leaves the Z model family.
    bool residual_ok = true;
    std::vector<std::string> residual;
    /// All 16 r-matrix entries, row-major.
    std::vector<GaussPoly> slots;

   private:
    Poly2 x_poly_;
    Poly2 y_poly_;
    FastPoly2 fx_;
    FastPoly2 fy_;
};

PolyMap effective_model_symbolic(const DecoderTable &table, Exec exec = Exec::parallel);

/// Unnormalized channel conditioned on one syndrome.
struct ConditionalChannel {
    uint64_t syndrome = 0;
    size_t k = 1;
    Eigen::MatrixXcd r;

    /// Probability of the syndrome for logical input rho (2^k x 2^k).
    double probability(const Eigen::MatrixXcd &rho) const;
    /// Coefficients of I rho I, Z rho Z and the y of the Z rho I term
    /// (r(Z, I) = -i y), for k = 1.
    double xbar() const { return r(0, 0).real(); }
    double x() const { return r(3, 3).real(); }
    double y() const { return -r(3, 0).imag(); }
};

ConditionalChannel conditional(const DecoderTable &table, const NoiseSpec &noise, uint64_t s);

/// Logical Pauli matrix for an index, logical qubit 1 as the leftmost factor.
Eigen::MatrixXcd logical_pauli_matrix(size_t k, uint32_t index);

/// Closed forms for the n-qubit repetition code under model noise with
/// the Z-only minimum-weight decoder.
namespace repetition_oracle {

ModelChannel averaged(size_t n, ModelChannel c);
Poly2 x_poly(size_t n);
Poly2 y_poly(size_t n);

struct Conditional {
    double xbar = 0;
    double x = 0;
    /// Odd n: r(Z, I) = -i y.
    double y = 0;
    /// Even n: r(Z, I) = r(I, Z) = cross, a real number.
    double cross = 0;
};

/// Conditional coefficients when the decoder applies Z on `correction`.
Conditional conditional(std::span<const ModelChannel> qubits, uint32_t correction);

/// Syndrome probability given the logical Z expectation of the input.
double probability(std::span<const ModelChannel> qubits, uint32_t correction, double zbar_expectation);

}  // namespace repetition_oracle

}  // namespace cqec
