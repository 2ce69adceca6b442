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

#include "cqec/channel.h"

#include <gtest/gtest.h>

#include <random>

#include "cqec/metrics.h"
#include "cqec/symmetry.h"
#include "reference_maps.h"

using namespace cqec;

namespace {

DecoderTable table_for(const StabilizerCode &c, DecoderKind kind = DecoderKind::z_only) {
    return DecoderTable::build(c, {kind, TieBreak::lexicographic});
}

Eigen::MatrixXcd kraus_matrix(const KrausList &kl, uint64_t s) {
    const size_t dim = size_t(1) << kl.k;
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(dim, dim);
    for (uint32_t l = 0; l < kl.num_logicals(); l++) {
        k += kl.at(s, l) * logical_pauli_matrix(kl.k, l);
    }
    return k;
}

cplx f(size_t n, size_t w, double theta) {
    return std::pow(std::cos(theta), double(n - w)) * std::pow(cplx(0, -std::sin(theta)), double(w));
}

ModelChannel random_model(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> p(0, 0.5), th(-0.8, 0.8);
    return model_from_p_theta(p(rng), th(rng));
}

}  // namespace

TEST(EffectiveUnitary, ZeroAngleIsIdentity) {
    DecoderTable t = table_for(catalog_code("steane"), DecoderKind::symmetric);
    KrausList kl = effective_unitary(t, UnitaryNoise::uniform(7, 0.0, Axis::from_components(1, 2, 3)));
    EXPECT_NEAR(std::abs(kl.at(0, 0) - cplx(1, 0)), 0, 1e-15);
    double rest = 0;
    for (size_t i = 1; i < kl.coeffs.size(); i++) {
        rest += std::norm(kl.coeffs[i]);
    }
    EXPECT_EQ(rest, 0);
}

TEST(EffectiveUnitary, KrausCompleteness) {
    for (const char *name : {"five_qubit", "steane", "shor", "surface_9_1_3", "bare_7_1_3"}) {
        StabilizerCode c = catalog_code(name);
        DecoderTable t = table_for(c, DecoderKind::symmetric);
        KrausList kl = effective_unitary(t, UnitaryNoise::uniform(c.n(), 0.3, Axis::from_components(0.3, -0.5, 0.8)));
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(2, 2);
        for (uint64_t s = 0; s < kl.num_syndromes; s++) {
            Eigen::MatrixXcd k = kraus_matrix(kl, s);
            sum += k.adjoint() * k;
        }
        EXPECT_LT((sum - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-12) << name;
        LogicalChannel ch = kl.channel();
        EXPECT_NEAR(ch.r.trace().real(), 1.0, 1e-12);
        EXPECT_LT((ch.r - ch.r.adjoint()).norm(), 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(ch.r);
        EXPECT_GT(eig.eigenvalues().minCoeff(), -1e-12);
    }
}

TEST(EffectiveUnitary, SerialAndParallelAgree) {
    for (const char *name : {"steane", "shor"}) {
        StabilizerCode c = catalog_code(name);
        DecoderTable t = table_for(c, DecoderKind::symmetric);
        UnitaryNoise noise = UnitaryNoise::uniform(c.n(), 0.21, Axis::from_components(1, 1, 0.2));
        KrausList a = effective_unitary(t, noise, Exec::serial_reference);
        KrausList b = effective_unitary(t, noise, Exec::parallel);
        for (size_t i = 0; i < a.coeffs.size(); i++) {
            EXPECT_NEAR(std::abs(a.coeffs[i] - b.coeffs[i]), 0, 1e-14) << name << " " << i;
        }
    }
}

TEST(EffectiveUnitary, FactoredMatchesEnumeration) {
    std::vector<StabilizerCode> codes;
    for (const char *name : {"five_qubit", "steane", "shor", "bare_7_1_3", "surface_9_1_3", "repetition4"}) {
        codes.push_back(catalog_code(name));
    }
    // Two logical qubits and signed generators.
    codes.push_back(StabilizerCode::from_text("4 2 2 four\nS -XXXX\nS ZZZZ\nX XXII\nX XIXI\nZ ZIZI\nZ -ZZII\n"));
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    for (const auto &c : codes) {
        for (DecoderKind kind : {DecoderKind::symmetric, DecoderKind::z_only}) {
            DecoderTable t = table_for(c, kind);
            UnitaryNoise noise;
            for (size_t q = 0; q < c.n(); q++) {
                noise.qubits.push_back({0.4 * gauss(rng), Axis::from_components(gauss(rng), gauss(rng), gauss(rng))});
            }
            KrausList a = effective_unitary(t, noise, Exec::serial_reference);
            KrausList b = effective_unitary_factored(t, noise);
            ASSERT_EQ(a.coeffs.size(), b.coeffs.size());
            double worst = 0;
            for (size_t i = 0; i < a.coeffs.size(); i++) {
                worst = std::max(worst, std::abs(a.coeffs[i] - b.coeffs[i]));
            }
            EXPECT_LT(worst, 1e-14) << c.name() << " " << to_string(kind);
        }
    }
}

TEST(EffectiveUnitary, Surface16FactoredMatchesExactMap) {
    StabilizerCode c = catalog_code("surface_16_1_4");
    DecoderTable t = table_for(c);
    PolyMap map = effective_model_symbolic(t);
    for (double theta : {0.05, 0.3}) {
        KrausList kl = effective_unitary(t, UnitaryNoise::uniform(16, theta));
        LogicalChannel ch = kl.channel();
        ModelChannel want = map.apply(model_from_p_theta(0, theta));
        EXPECT_NEAR(ch.r(3, 3).real(), want.x, 1e-12);
        EXPECT_NEAR(-ch.r(3, 0).imag(), want.y, 1e-12);
        EXPECT_NEAR(ch.r.trace().real(), 1.0, 1e-12);
    }
    KrausList kl = effective_unitary(t, UnitaryNoise::uniform(16, 0.2, Axis::from_components(0.3, -0.5, 0.8)));
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(2, 2);
    for (uint64_t s = 0; s < kl.num_syndromes; s++) {
        Eigen::MatrixXcd k = kraus_matrix(kl, s);
        sum += k.adjoint() * k;
    }
    EXPECT_LT((sum - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-12);
    EXPECT_THROW(effective_unitary(t, UnitaryNoise::uniform(16, 0.2), Exec::serial_reference), std::invalid_argument);
}

TEST(EffectiveUnitary, FiveQubitZAxisKrausForms) {
    const double theta = 0.27;
    StabilizerCode c = catalog_code("five_qubit");
    DecoderTable t = table_for(c, DecoderKind::symmetric);
    KrausList kl = effective_unitary(t, UnitaryNoise::uniform(5, theta));
    EXPECT_NEAR(std::abs(kl.at(0, 0) - f(5, 0, theta)), 0, 1e-14);
    EXPECT_NEAR(std::abs(kl.at(0, 3) - f(5, 5, theta)), 0, 1e-14);
    size_t classes[4] = {1, 0, 0, 0};
    for (uint64_t s = 1; s < 16; s++) {
        const PauliWord &e = t.correction(s);
        ASSERT_EQ(e.weight(), 1u);
        if (e.x == 0) {
            classes[1]++;
            EXPECT_NEAR(std::abs(kl.at(s, 0) - f(5, 1, theta)), 0, 1e-14);
            EXPECT_NEAR(std::abs(kl.at(s, 3) - f(5, 4, theta)), 0, 1e-14);
            EXPECT_EQ(std::abs(kl.at(s, 1)) + std::abs(kl.at(s, 2)), 0);
        } else {
            EXPECT_EQ(std::abs(kl.at(s, 0)) + std::abs(kl.at(s, 3)), 0);
            double ax = std::abs(kl.at(s, 1)), ay = std::abs(kl.at(s, 2));
            if (e.z == 0) {
                classes[2]++;
                EXPECT_NEAR(ax, std::abs(f(5, 2, theta)), 1e-14);
                EXPECT_NEAR(ay, std::abs(f(5, 3, theta)), 1e-14);
            } else {
                classes[3]++;
                EXPECT_NEAR(ay, std::abs(f(5, 2, theta)), 1e-14);
                EXPECT_NEAR(ax, std::abs(f(5, 3, theta)), 1e-14);
            }
        }
    }
    EXPECT_EQ(classes[1], 5u);
    EXPECT_EQ(classes[2], 5u);
    EXPECT_EQ(classes[3], 5u);
}

TEST(EffectiveUnitary, FiveQubitDiagonalAxisTrivialSyndrome) {
    const double theta = 0.19;
    DecoderTable t = table_for(catalog_code("five_qubit"), DecoderKind::symmetric);
    KrausList kl = effective_unitary(t, UnitaryNoise::uniform(5, theta, Axis::from_components(1, 1, 1)));
    auto g = [&](size_t w) { return f(5, w, theta) / std::pow(std::sqrt(3.0), double(w)); };
    EXPECT_NEAR(std::abs(kl.at(0, 0) - (g(0) + 15.0 * g(4))), 0, 1e-14);
    for (uint32_t l = 1; l < 4; l++) {
        EXPECT_NEAR(std::abs(kl.at(0, l) + (10.0 * g(3) - 6.0 * g(5))), 0, 1e-14) << l;
    }
}

TEST(EffectiveUnitary, OddRepetitionConditionalsAreUnitary) {
    const double theta = 0.4;
    StabilizerCode c = repetition_code(5);
    DecoderTable t = table_for(c);
    KrausList kl = effective_unitary(t, UnitaryNoise::uniform(5, theta));
    for (uint64_t s = 0; s < kl.num_syndromes; s++) {
        Eigen::MatrixXcd k = kraus_matrix(kl, s);
        Eigen::MatrixXcd kk = k.adjoint() * k;
        size_t w = t.correction(s).weight();
        double expect = std::norm(f(5, w, theta)) + std::norm(f(5, 5 - w, theta));
        EXPECT_LT((kk - expect * Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-14);
    }
}

TEST(EffectiveUnitary, EvenRepetitionAmbiguousSyndromeProjects) {
    StabilizerCode c = repetition_code(4);
    DecoderTable t = table_for(c);
    KrausList kl = effective_unitary(t, UnitaryNoise::uniform(4, 0.3));
    size_t seen = 0;
    for (uint64_t s = 0; s < kl.num_syndromes; s++) {
        Eigen::MatrixXcd k = kraus_matrix(kl, s);
        if (t.correction(s).weight() == 2) {
            seen++;
            EXPECT_NEAR(std::abs(k.determinant()), 0, 1e-15);
            EXPECT_GT(k.norm(), 1e-3);
            // K is proportional to (I +- Zbar) / 2.
            Eigen::MatrixXcd unit = k / k.norm();
            EXPECT_LT((unit * unit.adjoint() * unit - unit).norm(), 1e-12);
        }
        Eigen::MatrixXcd kd = k.adjoint();
        EXPECT_TRUE((kd - k).norm() < 1e-14 || (kd + k).norm() < 1e-14) << s;
    }
    EXPECT_EQ(seen, 3u);
}

TEST(EffectiveUnitary, PermutationCovariance) {
    std::mt19937_64 rng(11);
    StabilizerCode c = catalog_code("five_qubit");
    UnitaryNoise noise;
    std::uniform_real_distribution<double> u(-1, 1);
    for (size_t q = 0; q < 5; q++) {
        noise.qubits.push_back({u(rng), Axis::from_components(u(rng), u(rng), u(rng))});
    }
    Permutation perm = {2, 4, 1, 0, 3};
    auto permute_all = [&](const std::vector<PauliWord> &words) {
        std::vector<PauliWord> out;
        for (const auto &w : words) {
            out.push_back(permute(w, perm));
        }
        return out;
    };
    StabilizerCode pc("five_qubit_permuted", 3, permute_all(c.generators()), permute_all(c.logical_x()),
                      permute_all(c.logical_z()));
    UnitaryNoise pnoise = noise;
    for (size_t q = 0; q < 5; q++) {
        pnoise.qubits[perm[q]] = noise.qubits[q];
    }
    LogicalChannel a = effective_unitary(table_for(c, DecoderKind::symmetric), noise).channel();
    LogicalChannel b = effective_unitary(table_for(pc, DecoderKind::symmetric), pnoise).channel();
    EXPECT_LT((a.r - b.r).norm(), 1e-13);
}

TEST(Symbolic, SteaneMatchesPublishedMap) {
    PolyMap map = effective_model_symbolic(table_for(catalog_code("steane")));
    EXPECT_TRUE(map.residual_ok);
    EXPECT_EQ(map.x_poly(), Poly2::from_terms(kSteaneX));
    EXPECT_EQ(map.y_poly(), Poly2::from_terms(kSteaneY));
}

TEST(Symbolic, Surface16MatchesPublishedMap) {
    PolyMap map = effective_model_symbolic(table_for(catalog_code("surface_16_1_4")));
    EXPECT_TRUE(map.residual_ok);
    EXPECT_EQ(map.x_poly(), Poly2::from_terms(kSurface16X));
    EXPECT_TRUE(map.y_poly().is_zero());
    EXPECT_EQ(map.x_poly().coeff(2, 0), 32);
}

TEST(Symbolic, SerialAndParallelAgree) {
    DecoderTable t = table_for(catalog_code("shor"));
    PolyMap a = effective_model_symbolic(t, Exec::serial_reference);
    PolyMap b = effective_model_symbolic(t, Exec::parallel);
    EXPECT_EQ(a.x_poly(), b.x_poly());
    EXPECT_EQ(a.y_poly(), b.y_poly());
}

TEST(Symbolic, YParity) {
    for (const auto &name : catalog_names()) {
        PolyMap map = effective_model_symbolic(table_for(catalog_code(name)));
        EXPECT_TRUE(map.x_poly().y_parity_is(0)) << name;
        EXPECT_TRUE(map.y_poly().y_parity_is(1)) << name;
    }
}

TEST(Symbolic, RepetitionMatchesClosedFormExactly) {
    for (size_t n = 2; n <= 9; n++) {
        for (TieBreak tie : {TieBreak::lexicographic, TieBreak::support_order}) {
            DecoderTable t = DecoderTable::build(repetition_code(n), {DecoderKind::z_only, tie});
            PolyMap map = effective_model_symbolic(t);
            EXPECT_TRUE(map.residual_ok);
            EXPECT_EQ(map.x_poly(), repetition_oracle::x_poly(n)) << n;
            EXPECT_EQ(map.y_poly(), repetition_oracle::y_poly(n)) << n;
        }
    }
    EXPECT_EQ(repetition_oracle::x_poly(3), Poly2::from_terms({{3, 2, 0}, {-2, 3, 0}}));
    EXPECT_EQ(repetition_oracle::y_poly(3), Poly2::from_terms({{2, 0, 3}}));
    Poly2 x = Poly2::var_x(), omx = Poly2::constant(1) - x;
    EXPECT_EQ(repetition_oracle::x_poly(5), Poly2::constant(10) * x.pow(3) * omx.pow(2) +
                                                 Poly2::constant(5) * x.pow(4) * omx + x.pow(5));
}

TEST(Engines, CrossValidation) {
    std::mt19937_64 rng(3);
    for (const auto &name : catalog_names()) {
        StabilizerCode c = catalog_code(name);
        if (c.n() > 9) {
            continue;
        }
        DecoderTable t = table_for(c);
        PolyMap map = effective_model_symbolic(t);
        for (int trial = 0; trial < 20; trial++) {
            ModelChannel m = random_model(rng);
            ModelChannel expect = map.apply(m);
            LogicalChannel num = effective_model_numeric(t, ModelNoise::uniform(c.n(), m)).total();
            EXPECT_NEAR(num.r(3, 3).real(), expect.x, 1e-12) << name;
            EXPECT_NEAR(-num.r(3, 0).imag(), expect.y, 1e-12) << name;
            EXPECT_NEAR(std::abs(num.r(1, 1)) + std::abs(num.r(2, 2)), 0, 1e-12) << name;
        }
        // At the unitary boundary the full Pauli engine must agree as well.
        for (double theta : {0.05, 0.3, 0.7}) {
            LogicalChannel u = effective_unitary(t, UnitaryNoise::uniform(c.n(), theta)).channel();
            ModelChannel expect = map.apply(model_from_p_theta(0, theta));
            EXPECT_NEAR(u.r(3, 3).real(), expect.x, 1e-12) << name;
            EXPECT_NEAR(-u.r(3, 0).imag(), expect.y, 1e-12) << name;
        }
    }
}

TEST(Engines, NumericSerialAndParallelAgree) {
    StabilizerCode c = catalog_code("surface_9_1_3");
    DecoderTable t = table_for(c);
    std::mt19937_64 rng(5);
    ModelNoise noise;
    for (size_t q = 0; q < c.n(); q++) {
        noise.qubits.push_back(random_model(rng));
    }
    SyndromeChannels a = effective_model_numeric(t, noise, Exec::serial_reference);
    SyndromeChannels b = effective_model_numeric(t, noise, Exec::parallel);
    for (size_t s = 0; s < a.r.size(); s++) {
        EXPECT_LT((a.r[s] - b.r[s]).norm(), 1e-15);
    }
}

TEST(RepetitionOracle, ConditionalsMatchEngine) {
    std::mt19937_64 rng(17);
    for (size_t n = 2; n <= 8; n++) {
        ModelNoise noise;
        for (size_t q = 0; q < n; q++) {
            noise.qubits.push_back(random_model(rng));
        }
        DecoderTable t = table_for(repetition_code(n));
        SyndromeChannels num = effective_model_numeric(t, noise);
        for (uint64_t s = 0; s < t.size(); s++) {
            auto oracle = repetition_oracle::conditional(noise.qubits, t.correction(s).z);
            const Eigen::MatrixXcd &r = num.r[s];
            EXPECT_NEAR(r(0, 0).real(), oracle.xbar, 1e-14) << n << " " << s;
            EXPECT_NEAR(r(3, 3).real(), oracle.x, 1e-14) << n << " " << s;
            EXPECT_NEAR(-r(3, 0).imag(), oracle.y, 1e-14) << n << " " << s;
            // Even codes: the real Ibar-Zbar coherence is the weak Zbar measurement.
            EXPECT_NEAR(r(3, 0).real(), oracle.cross, 1e-14) << n << " " << s;
        }
    }
}

TEST(RepetitionOracle, AveragedMatchesPolynomials) {
    for (size_t n = 2; n <= 9; n++) {
        ModelChannel m = model_from_p_theta(0.1, 0.2);
        ModelChannel a = repetition_oracle::averaged(n, m);
        EXPECT_NEAR(a.x, double(repetition_oracle::x_poly(n).evaluate(m.x, m.y)), 1e-15);
        EXPECT_NEAR(a.y, double(repetition_oracle::y_poly(n).evaluate(m.x, m.y)), 1e-15);
    }
}

namespace {

// Dense density-matrix simulation of a repetition code with per-qubit noise.
struct Dense {
    size_t n;
    size_t dim;

    Eigen::MatrixXcd op(const PauliWord &w) const {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
        for (size_t q = 0; q < n; q++) {
            Eigen::MatrixXcd l = logical_pauli_matrix(1, uint32_t(w.letter(q)));
            Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
            for (Eigen::Index i = 0; i < m.rows(); i++) {
                for (Eigen::Index j = 0; j < m.cols(); j++) {
                    next.block(2 * i, 2 * j, 2, 2) = m(i, j) * l;
                }
            }
            m = next;
        }
        return m;
    }

    Eigen::MatrixXcd single(size_t q, Letter l) const {
        PauliWord w = PauliWord::identity(n);
        w.set_letter(q, l);
        return op(w);
    }
};

}  // namespace

TEST(RepetitionOracle, EvenProbabilitySignAgainstStateVector) {
    std::mt19937_64 rng(23);
    for (size_t n : {2, 4, 6}) {
        StabilizerCode c = repetition_code(n);
        DecoderTable t = table_for(c);
        Dense d{n, size_t(1) << n};
        ModelNoise noise;
        for (size_t q = 0; q < n; q++) {
            noise.qubits.push_back(random_model(rng));
        }
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d.dim, d.dim);
        Eigen::MatrixXcd proj = id;
        for (const auto &g : c.generators()) {
            proj = proj * (id + d.op(g)) / 2.0;
        }
        Eigen::MatrixXcd zbar = d.op(c.logical_z()[0]);
        Eigen::MatrixXcd xbar = d.op(c.logical_x()[0]);
        // Logical |0> from the +1 eigenspace of Zbar inside the code space.
        Eigen::VectorXcd seed = Eigen::VectorXcd::Ones(d.dim);
        Eigen::VectorXcd zero = (id + zbar) / 2.0 * proj * seed;
        zero.normalize();
        Eigen::VectorXcd one = xbar * zero;
        for (double a : {1.0, 0.0, 0.6}) {
            Eigen::VectorXcd psi = a * zero + std::sqrt(1 - a * a) * cplx(0, 1) * one;
            Eigen::MatrixXcd rho = psi * psi.adjoint();
            double zexp = (psi.adjoint() * zbar * psi)(0, 0).real();
            for (size_t q = 0; q < n; q++) {
                Eigen::Matrix4cd r = process_matrix(noise.qubits[q]);
                Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(d.dim, d.dim);
                for (int i = 0; i < 4; i++) {
                    for (int j = 0; j < 4; j++) {
                        if (r(i, j) != cplx(0)) {
                            next += r(i, j) * d.single(q, Letter(i)) * rho * d.single(q, Letter(j));
                        }
                    }
                }
                rho = next;
            }
            Eigen::Matrix2cd logical_rho;
            logical_rho << a * a, cplx(0, -a * std::sqrt(1 - a * a)), cplx(0, a * std::sqrt(1 - a * a)), 1 - a * a;
            for (uint64_t s = 0; s < t.size(); s++) {
                Eigen::MatrixXcd ps = id;
                for (size_t g = 0; g < c.num_generators(); g++) {
                    double sign = ((s >> g) & 1) ? -1.0 : 1.0;
                    ps = ps * (id + sign * d.op(c.generators()[g])) / 2.0;
                }
                double dense = (ps * rho).trace().real();
                double oracle = repetition_oracle::probability(noise.qubits, t.correction(s).z, zexp);
                double engine = conditional(t, noise, s).probability(logical_rho);
                EXPECT_NEAR(dense, oracle, 1e-13) << "n=" << n << " s=" << s;
                EXPECT_NEAR(dense, engine, 1e-13) << "n=" << n << " s=" << s;
            }
        }
    }
}

TEST(Conditional, ProbabilitiesSumToOne) {
    StabilizerCode c = catalog_code("steane");
    DecoderTable t = table_for(c, DecoderKind::symmetric);
    UnitaryNoise noise = UnitaryNoise::uniform(7, 0.2, Axis::from_components(1, 0.5, 0.1));
    Eigen::Matrix2cd rho;
    rho << 0.7, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.3;
    double total = 0;
    for (uint64_t s = 0; s < t.size(); s++) {
        double p = conditional(t, noise, s).probability(rho);
        EXPECT_GE(p, -1e-15);
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    ConditionalChannel zero = conditional(t, UnitaryNoise::uniform(7, 0.0), 0);
    EXPECT_NEAR(zero.probability(rho), 1.0, 1e-15);
    EXPECT_THROW(conditional(t, noise, 64), std::invalid_argument);
}
