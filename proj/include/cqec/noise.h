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
#include <array>
#include <complex>
#include <cstddef>
#include <filesystem>
#include <variant>
#include <vector>

namespace cqec {

using cplx = std::complex<double>;

/// Single-qubit channel rho -> (1-x) rho + x Z rho Z - i y (Z rho - rho Z).
/// Completely positive when y^2 <= x (1 - x).
struct ModelChannel {
    double x = 0;
    double y = 0;
};

/// A Z rotation by theta mixed with probability p of its opposite rotation.
ModelChannel model_from_p_theta(double p, double theta);

struct PTheta {
    double p = 0;
    double theta = 0;
};

/// Inverse of model_from_p_theta with p in [0, 1/2] and theta in
/// (-pi/2, pi/2].
PTheta p_theta_from_model(ModelChannel m);

bool is_completely_positive(ModelChannel m, double tol = 1e-12);
/// Throws std::invalid_argument outside the CP region.
void require_completely_positive(ModelChannel m);

/// Unit rotation axis.
struct Axis {
    double x = 0;
    double y = 0;
    double z = 1;

    /// Normalizes; throws on a zero vector.
    static Axis from_components(double ax, double ay, double az);
    /// Polar angle u from +z, azimuth v from +x.
    static Axis spherical(double u, double v);
};

/// exp(-i theta (a . sigma)) on one qubit.
struct SingleQubitUnitary {
    double theta = 0;
    Axis axis;

    /// Coefficients of I, X, Y, Z.
    std::array<cplx, 4> amplitudes() const;
};

struct UnitaryNoise {
    std::vector<SingleQubitUnitary> qubits;

    static UnitaryNoise uniform(size_t n, double theta, Axis axis = {});
    size_t n() const { return qubits.size(); }
    /// Largest single-qubit diamond distance, max_j |sin theta_j| for
    /// |theta_j| <= pi/2.
    double max_diamond_distance() const;
};

struct ModelNoise {
    std::vector<ModelChannel> qubits;

    static ModelNoise uniform(size_t n, ModelChannel c);
    size_t n() const { return qubits.size(); }
};

using NoiseSpec = std::variant<UnitaryNoise, ModelNoise>;

/// Per-qubit noise file. Each non-comment line is one of
///   unitary <theta> <ax> <ay> <az>
///   model <p> <theta>
///   xy <x> <y>
/// and every line must use the same kind ("model" and "xy" mix freely).
NoiseSpec load_per_qubit(const std::filesystem::path &path);

/// Pauli process matrix: rho -> sum_ab r(a, b) P_a rho P_b, index order I X Y Z.
Eigen::Matrix4cd process_matrix(ModelChannel m);
Eigen::Matrix4cd process_matrix(const SingleQubitUnitary &u);

/// Diagonal of the process matrix (Pauli twirl probabilities).
std::array<double, 4> pauli_twirl(const Eigen::Matrix4cd &r);

}  // namespace cqec
