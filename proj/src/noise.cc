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

#include "cqec/noise.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cqec {

ModelChannel model_from_p_theta(double p, double theta) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    double c = std::cos(theta), s = std::sin(theta);
    return {p * c * c + (1 - p) * s * s, (1 - 2 * p) * c * s};
}

PTheta p_theta_from_model(ModelChannel m) {
    // 1 - 2x = (1 - 2p) cos 2 theta and 2y = (1 - 2p) sin 2 theta.
    double a = 1 - 2 * m.x;
    double b = 2 * m.y;
    double radius = std::hypot(a, b);
    PTheta out;
    // p = (1 - radius) / 2 written without cancellation.
    out.p = std::max(0.0, 2 * (m.x * (1 - m.x) - m.y * m.y) / (1 + radius));
    out.theta = radius == 0 ? 0 : 0.5 * std::atan2(b, a);
    return out;
}

bool is_completely_positive(ModelChannel m, double tol) {
    return std::isfinite(m.x) && std::isfinite(m.y) && m.x >= -tol && m.x <= 1 + tol &&
           m.y * m.y <= m.x * (1 - m.x) + tol;
}

void require_completely_positive(ModelChannel m) {
    if (!is_completely_positive(m)) {
        std::ostringstream msg;
        msg << "model channel (x=" << m.x << ", y=" << m.y << ") is not completely positive; need y^2 <= x(1-x)";
        throw std::invalid_argument(msg.str());
    }
}

Axis Axis::from_components(double ax, double ay, double az) {
    double norm = std::sqrt(ax * ax + ay * ay + az * az);
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw std::invalid_argument("rotation axis must be a nonzero finite vector");
    }
    return {ax / norm, ay / norm, az / norm};
}

Axis Axis::spherical(double u, double v) {
    return {std::sin(u) * std::cos(v), std::sin(u) * std::sin(v), std::cos(u)};
}

std::array<cplx, 4> SingleQubitUnitary::amplitudes() const {
    double c = std::cos(theta), s = std::sin(theta);
    const cplx mi(0, -1);
    return {cplx(c, 0), mi * s * axis.x, mi * s * axis.y, mi * s * axis.z};
}

UnitaryNoise UnitaryNoise::uniform(size_t n, double theta, Axis axis) {
    UnitaryNoise u;
    u.qubits.assign(n, SingleQubitUnitary{theta, axis});
    return u;
}

double UnitaryNoise::max_diamond_distance() const {
    double best = 0;
    for (const auto &q : qubits) {
        // Eigenphases are +-theta; past pi/2 the distance saturates at 1.
        double t = std::abs(std::remainder(q.theta, M_PI));
        best = std::max(best, t >= M_PI / 2 ? 1.0 : std::sin(t));
    }
    return best;
}

ModelNoise ModelNoise::uniform(size_t n, ModelChannel c) {
    require_completely_positive(c);
    ModelNoise m;
    m.qubits.assign(n, c);
    return m;
}

NoiseSpec load_per_qubit(const std::filesystem::path &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open per-qubit noise file " + path.string());
    }
    UnitaryNoise unitary;
    ModelNoise model;
    std::string line;
    size_t line_no = 0;
    while (std::getline(f, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream in(line);
        std::string kind;
        if (!(in >> kind)) {
            continue;
        }
        auto fail = [&](const std::string &what) {
            return std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": " + what);
        };
        if (kind == "unitary") {
            double theta, ax, ay, az;
            if (!(in >> theta >> ax >> ay >> az)) {
                throw fail("expected 'unitary theta ax ay az'");
            }
            unitary.qubits.push_back({theta, Axis::from_components(ax, ay, az)});
        } else if (kind == "model" || kind == "xy") {
            double a, b;
            if (!(in >> a >> b)) {
                throw fail("expected two numbers");
            }
            ModelChannel c = kind == "model" ? model_from_p_theta(a, b) : ModelChannel{a, b};
            require_completely_positive(c);
            model.qubits.push_back(c);
        } else {
            throw fail("unknown noise kind '" + kind + "'");
        }
    }
    if (!unitary.qubits.empty() && !model.qubits.empty()) {
        throw std::invalid_argument(path.string() + ": unitary and model lines cannot be mixed");
    }
    if (unitary.qubits.empty() && model.qubits.empty()) {
        throw std::invalid_argument(path.string() + ": no qubits listed");
    }
    if (!unitary.qubits.empty()) {
        return unitary;
    }
    return model;
}

Eigen::Matrix4cd process_matrix(ModelChannel m) {
    Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
    r(0, 0) = 1 - m.x;
    r(3, 3) = m.x;
    r(3, 0) = cplx(0, -m.y);
    r(0, 3) = cplx(0, m.y);
    return r;
}

Eigen::Matrix4cd process_matrix(const SingleQubitUnitary &u) {
    auto a = u.amplitudes();
    Eigen::Matrix4cd r;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            r(i, j) = a[i] * std::conj(a[j]);
        }
    }
    return r;
}

std::array<double, 4> pauli_twirl(const Eigen::Matrix4cd &r) {
    return {r(0, 0).real(), r(1, 1).real(), r(2, 2).real(), r(3, 3).real()};
}

}  // namespace cqec
