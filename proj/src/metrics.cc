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

#include "cqec/metrics.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_qrng.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace cqec {

namespace {

constexpr int kAngles = 6;

struct Objective {
    // Deviation matrix, scaled to unit max entry.
    Eigen::Matrix4cd dev;
    std::array<Eigen::Matrix4cd, 4> ops;  // L_a tensor identity

    double operator()(const double *a) const {
        // Pure state on system and ancilla: three amplitude angles and three
        // relative phases.
        Eigen::Vector4cd psi;
        double s0 = std::sin(a[0]), s1 = std::sin(a[1]);
        psi(0) = std::cos(a[0]);
        psi(1) = s0 * std::cos(a[1]) * std::polar(1.0, a[3]);
        psi(2) = s0 * s1 * std::cos(a[2]) * std::polar(1.0, a[4]);
        psi(3) = s0 * s1 * std::sin(a[2]) * std::polar(1.0, a[5]);
        std::array<Eigen::Vector4cd, 4> v;
        for (int i = 0; i < 4; i++) {
            v[i] = ops[i] * psi;
        }
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                if (dev(i, j) != cplx(0, 0)) {
                    m += dev(i, j) * v[i] * v[j].adjoint();
                }
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m, Eigen::EigenvaluesOnly);
        return 0.5 * es.eigenvalues().cwiseAbs().sum();
    }
};

double gsl_objective(const gsl_vector *v, void *params) {
    const auto *obj = static_cast<const Objective *>(params);
    double a[kAngles];
    for (int i = 0; i < kAngles; i++) {
        a[i] = gsl_vector_get(v, i);
    }
    return -(*obj)(a);
}

/// One Nelder-Mead run; returns the local maximum and leaves the argmax in x.
double local_search(const Objective &obj, gsl_vector *x, double step, const DiamondOptions &opt) {
    gsl_multimin_function fn{&gsl_objective, kAngles, const_cast<Objective *>(&obj)};
    gsl_vector *steps = gsl_vector_alloc(kAngles);
    gsl_vector_set_all(steps, step);
    gsl_multimin_fminimizer *m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, kAngles);
    gsl_multimin_fminimizer_set(m, &fn, x, steps);
    for (int it = 0; it < opt.max_iterations; it++) {
        if (gsl_multimin_fminimizer_iterate(m) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), opt.tolerance) == GSL_SUCCESS) {
            break;
        }
    }
    gsl_vector_memcpy(x, gsl_multimin_fminimizer_x(m));
    double best = -gsl_multimin_fminimizer_minimum(m);
    gsl_multimin_fminimizer_free(m);
    gsl_vector_free(steps);
    return best;
}

}  // namespace

double diamond_distance(ModelChannel m) {
    return std::hypot(m.x, m.y);
}

double infidelity(ModelChannel m) {
    return 2.0 * m.x / 3.0;
}

double infidelity(const LogicalChannel &channel) {
    const double d = double(size_t(1) << channel.k);
    double loss = 0;
    for (Eigen::Index i = 1; i < channel.r.rows(); i++) {
        loss += channel.r(i, i).real();
    }
    // 1 - F_avg with F_avg = (d F_e + 1) / (d + 1) and 1 - F_e = loss.
    return d * loss / (d + 1);
}

ModelFit fit_model(const LogicalChannel &channel) {
    if (channel.k != 1) {
        throw std::invalid_argument("fit_model needs a single logical qubit");
    }
    const Eigen::MatrixXcd dev = channel.deviation();
    ModelFit fit;
    fit.model.x = dev(3, 3).real();
    fit.model.y = -dev(3, 0).imag();
    double res = 0;
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            bool family = (a == 0 || a == 3) && (b == 0 || b == 3);
            if (!family) {
                res = std::max(res, std::abs(dev(a, b)));
            }
        }
    }
    res = std::max(res, std::abs(dev(0, 0) + fit.model.x));
    res = std::max(res, std::abs(dev(3, 3).imag()));
    res = std::max(res, std::abs(dev(3, 0).real()));
    res = std::max(res, std::abs(dev(0, 3) - std::conj(dev(3, 0))));
    fit.residual = res;
    return fit;
}

DiamondResult diamond_distance(const LogicalChannel &channel, const DiamondOptions &opt) {
    if (channel.k != 1) {
        throw std::invalid_argument("diamond distance is implemented for a single logical qubit");
    }
    DiamondResult out;
    if (!opt.force_optimizer) {
        ModelFit fit = fit_model(channel);
        double scale = std::max(std::abs(fit.model.x), std::abs(fit.model.y));
        if (fit.residual <= 1e-9 * scale + 1e-15) {
            out.value = diamond_distance(fit.model);
            out.closed_form = true;
            return out;
        }
    }
    Objective obj;
    Eigen::MatrixXcd dev = channel.deviation();
    double scale = dev.cwiseAbs().maxCoeff();
    if (scale == 0) {
        return out;
    }
    obj.dev = dev / scale;
    for (uint32_t a = 0; a < 4; a++) {
        Eigen::MatrixXcd p = logical_pauli_matrix(1, a);
        Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                op.block<2, 2>(2 * r, 2 * c) = p(r, c) * Eigen::Matrix2cd::Identity();
            }
        }
        obj.ops[a] = op;
    }

    gsl_set_error_handler_off();
    // Sobol points with a seeded random shift give a reproducible start set.
    gsl_qrng *q = gsl_qrng_alloc(gsl_qrng_sobol, kAngles);
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double shift[kAngles];
    for (double &s : shift) {
        s = unit(rng);
    }
    gsl_vector *x = gsl_vector_alloc(kAngles);
    gsl_vector *best_x = gsl_vector_alloc(kAngles);
    double best = -1, worst = std::numeric_limits<double>::infinity();
    for (int r = 0; r < opt.restarts; r++) {
        double u[kAngles];
        gsl_qrng_get(q, u);
        for (int i = 0; i < kAngles; i++) {
            double t = std::fmod(u[i] + shift[i], 1.0);
            gsl_vector_set(x, i, i < 3 ? t * M_PI / 2 : t * 2 * M_PI);
        }
        double v = local_search(obj, x, 0.4, opt);
        // Polish from the local optimum with a fresh, smaller simplex.
        v = std::max(v, local_search(obj, x, 0.02, opt));
        worst = std::min(worst, v);
        if (v > best) {
            best = v;
            gsl_vector_memcpy(best_x, x);
        }
    }
    gsl_vector_free(x);
    gsl_vector_free(best_x);
    gsl_qrng_free(q);
    out.value = best * scale;
    out.spread = (best - worst) * scale;
    return out;
}

}  // namespace cqec
