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

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cqec {

namespace {

constexpr size_t kMaxUnitaryQubits = 12;
constexpr size_t kMaxPairQubits = 16;

inline cplx times_i_pow(cplx v, int e) {
    switch (e & 3) {
        case 0:
            return v;
        case 1:
            return {-v.imag(), v.real()};
        case 2:
            return -v;
        default:
            return {v.imag(), -v.real()};
    }
}

inline bool parity(uint32_t v) {
    return std::popcount(v) & 1;
}

/// Table-driven version of StabilizerCode::decompose for words with zero
/// phase.
class FastDecomposer {
   public:
    explicit FastDecomposer(const DecoderTable &table) {
        const StabilizerCode &code = table.code();
        n_ = code.n();
        k_ = code.k();
        for (const auto &e : table.corrections()) {
            cx_.push_back(e.x);
            cz_.push_back(e.z);
        }
        for (size_t i = 0; i < k_; i++) {
            lxx_.push_back(code.logical_x()[i].x);
            lxz_.push_back(code.logical_x()[i].z);
            lzx_.push_back(code.logical_z()[i].x);
            lzz_.push_back(code.logical_z()[i].z);
        }
        for (uint32_t l = 0; l < code.num_logicals(); l++) {
            logicals_.push_back(code.logical_operator(l));
        }
        std::vector<uint64_t> rows;
        for (const auto &g : code.generators()) {
            rows.push_back(g.packed());
        }
        space_ = Gf2RowSpace(rows);
        for (uint64_t t = 0; t < code.num_syndromes(); t++) {
            stabilizers_.push_back(code.stabilizer_element(t));
        }
        for (size_t q = 0; q < n_; q++) {
            col_x_.push_back(code.syndrome(PauliWord::from_letters(n_, 1u << q, 0)));
            col_z_.push_back(code.syndrome(PauliWord::from_letters(n_, 0, 1u << q)));
        }
    }

    uint64_t syndrome(uint32_t x, uint32_t z) const {
        uint64_t s = 0;
        for (uint32_t r = x; r; r &= r - 1) {
            s ^= col_x_[std::countr_zero(r)];
        }
        for (uint32_t r = z; r; r &= r - 1) {
            s ^= col_z_[std::countr_zero(r)];
        }
        return s;
    }

    void decompose(uint32_t x, uint32_t z, uint64_t s, uint32_t &logical, int &eta) const {
        const uint32_t ex = cx_[s], ez = cz_[s];
        const uint32_t rx = ex ^ x, rz = ez ^ z;
        uint32_t l = 0;
        for (size_t i = 0; i < k_; i++) {
            bool bx = parity((rx & lzz_[i]) ^ (rz & lzx_[i]));
            bool bz = parity((rx & lxz_[i]) ^ (rz & lxx_[i]));
            l = (l << 2) | (bx ? (bz ? 2u : 1u) : (bz ? 3u : 0u));
        }
        const PauliWord &lw = logicals_[l];
        uint64_t v = uint64_t(rx ^ lw.x) | (uint64_t(rz ^ lw.z) << 32);
        auto t = space_.combination(v);
        if (!t) {
            throw std::logic_error("residual is not a logical times a stabilizer");
        }
        const PauliWord &sw = stabilizers_[*t];
        int ph = product_phase(ex, ez, lw.x, lw.z) + lw.phase + sw.phase +
                 product_phase(ex ^ lw.x, ez ^ lw.z, sw.x, sw.z);
        logical = l;
        eta = (-ph) & 3;
    }

   private:
    size_t n_ = 0, k_ = 0;
    std::vector<uint32_t> cx_, cz_, lxx_, lxz_, lzx_, lzz_;
    std::vector<PauliWord> logicals_, stabilizers_;
    std::vector<uint64_t> col_x_, col_z_;
    Gf2RowSpace space_;
};

/// Syndrome, logical index and phase of every Z word, bucketed by syndrome.
struct ZWordClasses {
    std::vector<uint32_t> logical;
    std::vector<uint8_t> eta;
    std::vector<size_t> offsets;  // bucket s is members[offsets[s] .. offsets[s+1])
    std::vector<uint32_t> members;
};

ZWordClasses classify_z_words(const DecoderTable &table, Exec exec) {
    const StabilizerCode &code = table.code();
    const size_t n = code.n();
    if (n > kMaxPairQubits) {
        throw std::invalid_argument("pair enumeration is limited to " + std::to_string(kMaxPairQubits) + " qubits");
    }
    const size_t count = size_t(1) << n;
    ZWordClasses out;
    out.logical.resize(count);
    out.eta.resize(count);
    std::vector<uint64_t> syn(count);
    if (exec == Exec::serial_reference) {
        for (size_t m = 0; m < count; m++) {
            NormalForm nf = table.decompose(PauliWord::z_word(n, uint32_t(m)));
            syn[m] = nf.syndrome;
            out.logical[m] = nf.logical;
            out.eta[m] = nf.eta;
        }
    } else {
        FastDecomposer fd(table);
        CQEC_OMP_PRAGMA("omp parallel for schedule(static) num_threads(thread_count())")
        for (long long m = 0; m < (long long)count; m++) {
            uint64_t s = fd.syndrome(0, uint32_t(m));
            uint32_t l;
            int eta;
            fd.decompose(0, uint32_t(m), s, l, eta);
            syn[m] = s;
            out.logical[m] = l;
            out.eta[m] = uint8_t(eta);
        }
    }
    const size_t num_s = code.num_syndromes();
    out.offsets.assign(num_s + 1, 0);
    for (size_t m = 0; m < count; m++) {
        out.offsets[syn[m] + 1]++;
    }
    for (size_t s = 0; s < num_s; s++) {
        out.offsets[s + 1] += out.offsets[s];
    }
    out.members.resize(count);
    std::vector<size_t> fill(out.offsets.begin(), out.offsets.end() - 1);
    for (size_t m = 0; m < count; m++) {
        out.members[fill[syn[m]]++] = uint32_t(m);
    }
    return out;
}

}  // namespace

LogicalChannel LogicalChannel::identity(size_t k) {
    LogicalChannel c;
    c.k = k;
    size_t d = size_t(1) << (2 * k);
    c.r = Eigen::MatrixXcd::Zero(d, d);
    c.r(0, 0) = 1;
    return c;
}

Eigen::MatrixXcd LogicalChannel::deviation() const {
    Eigen::MatrixXcd dev = r;
    double rest = 0;
    for (Eigen::Index i = 1; i < r.rows(); i++) {
        rest += r(i, i).real();
    }
    dev(0, 0) = -rest;
    return dev;
}

Eigen::MatrixXcd KrausList::conditional(uint64_t s) const {
    const size_t d = num_logicals();
    Eigen::MatrixXcd r(d, d);
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            r(a, b) = at(s, a) * std::conj(at(s, b));
        }
    }
    return r;
}

LogicalChannel KrausList::channel() const {
    LogicalChannel c;
    c.k = k;
    const size_t d = num_logicals();
    c.r = Eigen::MatrixXcd::Zero(d, d);
    for (size_t s = 0; s < num_syndromes; s++) {
        c.r += conditional(s);
    }
    return c;
}

KrausList effective_unitary(const DecoderTable &table, const UnitaryNoise &noise, Exec exec) {
    const StabilizerCode &code = table.code();
    const size_t n = code.n();
    if (noise.n() != n) {
        throw std::invalid_argument("noise acts on " + std::to_string(noise.n()) + " qubits but the code has " +
                                    std::to_string(n));
    }
    if (n > kMaxUnitaryQubits) {
        if (exec == Exec::parallel) {
            return effective_unitary_factored(table, noise);
        }
        throw std::invalid_argument("unitary enumeration is limited to " + std::to_string(kMaxUnitaryQubits) +
                                    " qubits");
    }
    KrausList out;
    out.k = code.k();
    out.num_syndromes = code.num_syndromes();
    const size_t nl = out.num_logicals();
    out.coeffs.assign(out.num_syndromes * nl, cplx(0, 0));
    std::vector<std::array<cplx, 4>> amps;
    for (const auto &q : noise.qubits) {
        amps.push_back(q.amplitudes());
    }

    auto letters = [](size_t idx, size_t count, uint32_t &x, uint32_t &z) {
        x = z = 0;
        for (size_t q = 0; q < count; q++) {
            uint32_t d = (idx >> (2 * q)) & 3;
            if (d == 1 || d == 2) {
                x |= 1u << q;
            }
            if (d == 2 || d == 3) {
                z |= 1u << q;
            }
        }
    };

    if (exec == Exec::serial_reference) {
        const size_t total = size_t(1) << (2 * n);
        for (size_t idx = 0; idx < total; idx++) {
            cplx amp = 1;
            for (size_t q = 0; q < n; q++) {
                amp *= amps[q][(idx >> (2 * q)) & 3];
            }
            uint32_t x, z;
            letters(idx, n, x, z);
            NormalForm nf = table.decompose(PauliWord::from_letters(n, x, z));
            out.at(nf.syndrome, nf.logical) += times_i_pow(amp, nf.eta);
        }
        return out;
    }

    // Split the register into a low and a high half so amplitudes and
    // syndromes come from two small tables.
    FastDecomposer fd(table);
    const size_t h = n / 2;
    struct Half {
        std::vector<uint32_t> x, z;
        std::vector<uint64_t> syn;
        std::vector<cplx> amp;
    };
    auto make_half = [&](size_t first, size_t count) {
        Half half;
        const size_t size = size_t(1) << (2 * count);
        for (size_t idx = 0; idx < size; idx++) {
            uint32_t x, z;
            letters(idx, count, x, z);
            x <<= first;
            z <<= first;
            cplx amp = 1;
            for (size_t q = 0; q < count; q++) {
                amp *= amps[first + q][(idx >> (2 * q)) & 3];
            }
            half.x.push_back(x);
            half.z.push_back(z);
            half.syn.push_back(fd.syndrome(x, z));
            half.amp.push_back(amp);
        }
        return half;
    };
    const Half lo = make_half(0, h);
    const Half hi = make_half(h, n - h);

    // A fixed block split keeps the summation order, and so the result,
    // independent of the thread count.
    const size_t nhi = hi.amp.size();
    const size_t nblocks = std::min<size_t>(64, nhi);
    std::vector<std::vector<cplx>> partial(nblocks);
    CQEC_OMP_PRAGMA("omp parallel for schedule(dynamic) num_threads(thread_count())")
    for (long long b = 0; b < (long long)nblocks; b++) {
        std::vector<cplx> acc(out.coeffs.size(), cplx(0, 0));
        const size_t begin = size_t(b) * nhi / nblocks;
        const size_t end = size_t(b + 1) * nhi / nblocks;
        for (size_t ih = begin; ih < end; ih++) {
            const cplx ah = hi.amp[ih];
            if (ah == cplx(0, 0)) {
                continue;
            }
            for (size_t il = 0; il < lo.amp.size(); il++) {
                const cplx al = lo.amp[il];
                if (al == cplx(0, 0)) {
                    continue;
                }
                uint32_t x = hi.x[ih] | lo.x[il];
                uint32_t z = hi.z[ih] | lo.z[il];
                uint64_t s = hi.syn[ih] ^ lo.syn[il];
                uint32_t l;
                int eta;
                fd.decompose(x, z, s, l, eta);
                acc[s * nl + l] += times_i_pow(ah * al, eta);
            }
        }
        partial[b] = std::move(acc);
    }
    for (const auto &acc : partial) {
        for (size_t i = 0; i < acc.size(); i++) {
            out.coeffs[i] += acc[i];
        }
    }
    return out;
}

namespace {

/// Letter of a one-qubit word from its x and z bits, and back.
inline uint32_t letter_of(uint32_t x, uint32_t z) {
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
}
inline uint32_t letter_x(uint32_t l) {
    return l == 1 || l == 2;
}
inline uint32_t letter_z(uint32_t l) {
    return l == 2 || l == 3;
}

/// One qubit of the contraction. Table entries are indexed by the bits of
/// the generators currently open, in the order they were opened.
struct ContractionStep {
    size_t in_size = 1;
    size_t size = 1;
    /// factor[c][m]: noise amplitude of the letter produced by base letter c
    /// times the open generators selected by m, with the phase that product
    /// picks up and the signs of generators opened here.
    std::array<std::vector<cplx>, 4> factor;
    /// Index after summing out the generators whose support ends here.
    std::vector<uint32_t> dst;
    size_t out_size = 1;
};

std::vector<ContractionStep> contraction_plan(const StabilizerCode &code, const UnitaryNoise &noise) {
    const size_t n = code.n();
    const auto &gens = code.generators();
    std::vector<size_t> first(gens.size()), last(gens.size());
    for (size_t g = 0; g < gens.size(); g++) {
        uint32_t sup = gens[g].support();
        first[g] = size_t(std::countr_zero(sup));
        last[g] = size_t(31 - std::countl_zero(sup));
    }
    std::vector<ContractionStep> steps(n);
    std::vector<size_t> open;
    for (size_t q = 0; q < n; q++) {
        ContractionStep &st = steps[q];
        st.in_size = size_t(1) << open.size();
        for (size_t g = 0; g < gens.size(); g++) {
            if (first[g] == q) {
                open.push_back(g);
            }
        }
        st.size = size_t(1) << open.size();
        const auto amps = noise.qubits[q].amplitudes();
        for (uint32_t c = 0; c < 4; c++) {
            st.factor[c].resize(st.size);
        }
        for (size_t m = 0; m < st.size; m++) {
            // Multiply the selected generator letters in generator order so
            // that every qubit uses the same ordering.
            std::vector<size_t> chosen;
            int sign = 0;
            for (size_t b = 0; b < open.size(); b++) {
                if ((m >> b) & 1) {
                    chosen.push_back(open[b]);
                    if (first[open[b]] == q) {
                        sign += gens[open[b]].phase;
                    }
                }
            }
            std::sort(chosen.begin(), chosen.end());
            uint32_t gx = 0, gz = 0;
            int phase = 0;
            for (size_t g : chosen) {
                uint32_t bx = (gens[g].x >> q) & 1, bz = (gens[g].z >> q) & 1;
                phase += product_phase(gx, gz, bx, bz);
                gx ^= bx;
                gz ^= bz;
            }
            for (uint32_t c = 0; c < 4; c++) {
                uint32_t cx = letter_x(c), cz = letter_z(c);
                int total = sign + phase + product_phase(cx, cz, gx, gz);
                st.factor[c][m] = times_i_pow(amps[letter_of(cx ^ gx, cz ^ gz)], -total);
            }
        }
        std::vector<size_t> kept;
        std::vector<bool> keep(open.size());
        for (size_t b = 0; b < open.size(); b++) {
            keep[b] = last[open[b]] != q;
            if (keep[b]) {
                kept.push_back(open[b]);
            }
        }
        st.dst.resize(st.size);
        for (size_t m = 0; m < st.size; m++) {
            uint32_t d = 0, pos = 0;
            for (size_t b = 0; b < open.size(); b++) {
                if (keep[b]) {
                    d |= uint32_t((m >> b) & 1) << pos++;
                }
            }
            st.dst[m] = d;
        }
        open = kept;
        st.out_size = size_t(1) << open.size();
    }
    return steps;
}

}  // namespace

KrausList effective_unitary_factored(const DecoderTable &table, const UnitaryNoise &noise) {
    const StabilizerCode &code = table.code();
    const size_t n = code.n();
    if (noise.n() != n) {
        throw std::invalid_argument("noise acts on " + std::to_string(noise.n()) + " qubits but the code has " +
                                    std::to_string(n));
    }
    const std::vector<ContractionStep> steps = contraction_plan(code, noise);
    size_t widest = 1;
    for (const auto &st : steps) {
        widest = std::max(widest, st.size);
    }
    KrausList out;
    out.k = code.k();
    out.num_syndromes = code.num_syndromes();
    const size_t nl = out.num_logicals();
    out.coeffs.assign(out.num_syndromes * nl, cplx(0, 0));
    std::vector<PauliWord> logicals;
    for (uint32_t l = 0; l < nl; l++) {
        logicals.push_back(code.logical_operator(l));
    }

    CQEC_OMP_PRAGMA("omp parallel num_threads(thread_count())")
    {
        std::vector<cplx> cur(widest), next(widest);
        CQEC_OMP_PRAGMA("omp for schedule(dynamic, 64)")
        for (long long s = 0; s < (long long)out.num_syndromes; s++) {
            for (uint32_t l = 0; l < nl; l++) {
                // Words with this syndrome and logical class are C L S_t.
                const PauliWord base = table.correction(uint64_t(s)) * logicals[l];
                cur[0] = 1;
                for (size_t q = 0; q < n; q++) {
                    const ContractionStep &st = steps[q];
                    const auto &f = st.factor[letter_of((base.x >> q) & 1, (base.z >> q) & 1)];
                    std::fill(next.begin(), next.begin() + st.out_size, cplx(0, 0));
                    for (size_t m = 0; m < st.size; m++) {
                        next[st.dst[m]] += cur[m & (st.in_size - 1)] * f[m];
                    }
                    std::swap(cur, next);
                }
                out.at(uint64_t(s), l) = times_i_pow(cur[0], -base.phase);
            }
        }
    }
    return out;
}

LogicalChannel SyndromeChannels::total() const {
    LogicalChannel c = LogicalChannel::identity(k);
    c.r.setZero();
    for (const auto &m : r) {
        c.r += m;
    }
    return c;
}

SyndromeChannels effective_model_numeric(const DecoderTable &table, const ModelNoise &noise, Exec exec) {
    const StabilizerCode &code = table.code();
    const size_t n = code.n();
    if (noise.n() != n) {
        throw std::invalid_argument("noise acts on " + std::to_string(noise.n()) + " qubits but the code has " +
                                    std::to_string(n));
    }
    for (const auto &c : noise.qubits) {
        require_completely_positive(c);
    }
    ZWordClasses classes = classify_z_words(table, exec);
    // factor[q][2 * b + b'] for Z^b on the left and Z^b' on the right.
    std::vector<std::array<cplx, 4>> factor;
    for (const auto &c : noise.qubits) {
        factor.push_back({cplx(1 - c.x, 0), cplx(0, c.y), cplx(0, -c.y), cplx(c.x, 0)});
    }
    SyndromeChannels out;
    out.k = code.k();
    const size_t nl = code.num_logicals();
    const size_t num_s = code.num_syndromes();
    out.r.assign(num_s, Eigen::MatrixXcd::Zero(nl, nl));
    auto one_syndrome = [&](size_t s) {
        Eigen::MatrixXcd &r = out.r[s];
        for (size_t i = classes.offsets[s]; i < classes.offsets[s + 1]; i++) {
            const uint32_t a = classes.members[i];
            for (size_t j = classes.offsets[s]; j < classes.offsets[s + 1]; j++) {
                const uint32_t b = classes.members[j];
                cplx v = 1;
                for (size_t q = 0; q < n; q++) {
                    v *= factor[q][2 * ((a >> q) & 1) + ((b >> q) & 1)];
                }
                r(classes.logical[a], classes.logical[b]) += times_i_pow(v, classes.eta[a] - classes.eta[b]);
            }
        }
    };
    if (exec == Exec::serial_reference) {
        for (size_t s = 0; s < num_s; s++) {
            one_syndrome(s);
        }
    } else {
        CQEC_OMP_PRAGMA("omp parallel for schedule(dynamic) num_threads(thread_count())")
        for (long long s = 0; s < (long long)num_s; s++) {
            one_syndrome(size_t(s));
        }
    }
    return out;
}

PolyMap::PolyMap(Poly2 x_poly, Poly2 y_poly)
    : x_poly_(std::move(x_poly)), y_poly_(std::move(y_poly)), fx_(x_poly_), fy_(y_poly_) {
}

PolyMap effective_model_symbolic(const DecoderTable &table, Exec exec) {
    const StabilizerCode &code = table.code();
    if (code.k() != 1) {
        throw std::invalid_argument("the symbolic map needs a single logical qubit");
    }
    const size_t n = code.n();
    ZWordClasses classes = classify_z_words(table, exec);

    // Histogram over (l, l', phase, c, e1, e2) where c = |b & b'|,
    // e1 = |b & ~b'| and e2 = |~b & b'|.
    const size_t nb = n + 1;
    const size_t hist_size = 4 * 4 * 4 * nb * nb * nb;
    auto bin = [nb](uint32_t l, uint32_t lp, uint32_t ph, uint32_t c, uint32_t e1, uint32_t e2) {
        return ((((size_t(l) * 4 + lp) * 4 + ph) * nb + c) * nb + e1) * nb + e2;
    };
    std::vector<uint64_t> hist(hist_size, 0);
    const size_t num_s = code.num_syndromes();
    auto count_syndrome = [&](size_t s, std::vector<uint64_t> &h) {
        for (size_t i = classes.offsets[s]; i < classes.offsets[s + 1]; i++) {
            const uint32_t a = classes.members[i];
            for (size_t j = classes.offsets[s]; j < classes.offsets[s + 1]; j++) {
                const uint32_t b = classes.members[j];
                uint32_t ph = uint32_t(classes.eta[a] - classes.eta[b]) & 3;
                h[bin(classes.logical[a], classes.logical[b], ph, std::popcount(a & b), std::popcount(a & ~b),
                      std::popcount(~a & b))]++;
            }
        }
    };
    if (exec == Exec::serial_reference) {
        for (size_t s = 0; s < num_s; s++) {
            count_syndrome(s, hist);
        }
    } else {
        // Integer counts merge exactly in any order.
        CQEC_OMP_PRAGMA("omp parallel num_threads(thread_count())") {
            std::vector<uint64_t> local(hist_size, 0);
            CQEC_OMP_PRAGMA("omp for schedule(dynamic)")
            for (long long s = 0; s < (long long)num_s; s++) {
                count_syndrome(size_t(s), local);
            }
            CQEC_OMP_PRAGMA("omp critical")
            for (size_t i = 0; i < hist_size; i++) {
                hist[i] += local[i];
            }
        }
    }

    std::vector<std::vector<BigInt>> binom(nb);
    for (uint32_t a = 0; a < nb; a++) {
        for (uint32_t j = 0; j <= a; j++) {
            binom[a].push_back(binomial(a, j));
        }
    }
    std::vector<GaussPoly> slots(16);
    for (uint32_t l = 0; l < 4; l++) {
        for (uint32_t lp = 0; lp < 4; lp++) {
            GaussPoly &g = slots[l * 4 + lp];
            for (uint32_t ph = 0; ph < 4; ph++) {
                for (uint32_t c = 0; c < nb; c++) {
                    for (uint32_t e1 = 0; c + e1 < nb; e1++) {
                        for (uint32_t e2 = 0; c + e1 + e2 < nb; e2++) {
                            uint64_t count = hist[bin(l, lp, ph, c, e1, e2)];
                            if (count == 0) {
                                continue;
                            }
                            // (-i)^e1 (+i)^e2 from the off-diagonal qubit factors.
                            uint32_t q = (ph + e2 + 3 * e1) & 3;
                            BigInt sign_count = (q >= 2) ? -BigInt(count) : BigInt(count);
                            Poly2 &target = (q & 1) ? g.im : g.re;
                            uint32_t a = uint32_t(n) - c - e1 - e2;
                            for (uint32_t j = 0; j <= a; j++) {
                                BigInt coeff = sign_count * binom[a][j];
                                target.add_term(j & 1 ? BigInt(-coeff) : coeff, c + j, e1 + e2);
                            }
                        }
                    }
                }
            }
        }
    }

    const GaussPoly &zz = slots[3 * 4 + 3];
    const GaussPoly &zi = slots[3 * 4 + 0];
    const GaussPoly &iz = slots[0 * 4 + 3];
    const GaussPoly &ii = slots[0];
    PolyMap map(zz.re, -zi.im);
    map.slots = slots;
    auto flag = [&](bool bad, const std::string &what) {
        if (bad) {
            map.residual_ok = false;
            map.residual.push_back(what);
        }
    };
    static const char *names = "IXYZ";
    for (uint32_t l = 0; l < 4; l++) {
        for (uint32_t lp = 0; lp < 4; lp++) {
            bool in_family = (l == 0 || l == 3) && (lp == 0 || lp == 3);
            const GaussPoly &g = slots[l * 4 + lp];
            if (!in_family && (!g.re.is_zero() || !g.im.is_zero())) {
                flag(true, std::string("r(") + names[l] + "," + names[lp] + ") is nonzero");
            }
        }
    }
    flag(!zz.im.is_zero(), "r(Z,Z) is not real");
    flag(!zi.re.is_zero(), "r(Z,I) has a real part");
    flag(!(iz.re == zi.re) || !(iz.im == -zi.im), "r(I,Z) is not the conjugate of r(Z,I)");
    flag(!ii.im.is_zero() || !(ii.re == Poly2::constant(1) - zz.re), "r(I,I) is not 1 - x'");
    return map;
}

Eigen::MatrixXcd logical_pauli_matrix(size_t k, uint32_t index) {
    static const std::array<Eigen::Matrix2cd, 4> paulis = [] {
        std::array<Eigen::Matrix2cd, 4> p;
        p[0] << 1, 0, 0, 1;
        p[1] << 0, 1, 1, 0;
        p[2] << 0, cplx(0, -1), cplx(0, 1), 0;
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t i = 0; i < k; i++) {
        uint32_t digit = (index >> (2 * (k - 1 - i))) & 3;
        const Eigen::Matrix2cd &p = paulis[digit];
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); r++) {
            for (Eigen::Index c = 0; c < out.cols(); c++) {
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * p;
            }
        }
        out = std::move(next);
    }
    return out;
}

double ConditionalChannel::probability(const Eigen::MatrixXcd &rho) const {
    const size_t d = size_t(r.rows());
    cplx total = 0;
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            if (r(a, b) == cplx(0, 0)) {
                continue;
            }
            Eigen::MatrixXcd prod = logical_pauli_matrix(k, uint32_t(b)) * logical_pauli_matrix(k, uint32_t(a)) * rho;
            total += r(a, b) * prod.trace();
        }
    }
    return total.real();
}

ConditionalChannel conditional(const DecoderTable &table, const NoiseSpec &noise, uint64_t s) {
    if (s >= table.size()) {
        throw std::invalid_argument("syndrome out of range");
    }
    ConditionalChannel out;
    out.syndrome = s;
    out.k = table.code().k();
    if (const auto *u = std::get_if<UnitaryNoise>(&noise)) {
        out.r = effective_unitary(table, *u).conditional(s);
    } else {
        out.r = effective_model_numeric(table, std::get<ModelNoise>(noise)).r[s];
    }
    return out;
}

namespace repetition_oracle {

namespace {
void check_size(size_t n) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("repetition size out of range");
    }
}
}  // namespace

ModelChannel averaged(size_t n, ModelChannel c) {
    check_size(n);
    require_completely_positive(c);
    const size_t t = n / 2;
    double x = 0;
    for (size_t j = t + 1; j <= n; j++) {
        x += binomial(uint32_t(n), uint32_t(j)).convert_to<double>() * std::pow(c.x, double(j)) *
             std::pow(1 - c.x, double(n - j));
    }
    if (n % 2 == 0) {
        // Half of the weight-t patterns are corrected the wrong way.
        x += 0.5 * binomial(uint32_t(n), uint32_t(t)).convert_to<double>() * std::pow(c.x * (1 - c.x), double(t));
        return {x, 0.0};
    }
    return {x, binomial(uint32_t(2 * t), uint32_t(t)).convert_to<double>() * std::pow(c.y, double(n))};
}

Poly2 x_poly(size_t n) {
    check_size(n);
    const size_t t = n / 2;
    const Poly2 x = Poly2::var_x();
    const Poly2 one_minus_x = Poly2::constant(1) - x;
    Poly2 out;
    for (size_t j = t + 1; j <= n; j++) {
        out += Poly2::constant(binomial(uint32_t(n), uint32_t(j))) * x.pow(uint32_t(j)) *
               one_minus_x.pow(uint32_t(n - j));
    }
    if (n % 2 == 0) {
        out += Poly2::constant(binomial(uint32_t(n - 1), uint32_t(t - 1))) * x.pow(uint32_t(t)) *
               one_minus_x.pow(uint32_t(t));
    }
    return out;
}

Poly2 y_poly(size_t n) {
    check_size(n);
    if (n % 2 == 0) {
        return {};
    }
    const uint32_t t = uint32_t(n / 2);
    return Poly2::monomial(binomial(2 * t, t), 0, uint32_t(n));
}

Conditional conditional(std::span<const ModelChannel> qubits, uint32_t correction) {
    const size_t n = qubits.size();
    check_size(n);
    Conditional out;
    out.xbar = 1;
    out.x = 1;
    double prod_y = 1;
    for (size_t q = 0; q < n; q++) {
        bool w = (correction >> q) & 1;
        out.xbar *= w ? qubits[q].x : 1 - qubits[q].x;
        out.x *= w ? 1 - qubits[q].x : qubits[q].x;
        prod_y *= qubits[q].y;
    }
    const int t = int(n / 2);
    const int w = std::popcount(correction);
    const double sign = ((t - w) % 2 == 0) ? 1.0 : -1.0;
    if (n % 2) {
        out.y = sign * prod_y;
    } else {
        out.cross = sign * prod_y;
    }
    return out;
}

double probability(std::span<const ModelChannel> qubits, uint32_t correction, double zbar_expectation) {
    Conditional c = conditional(qubits, correction);
    return c.xbar + c.x + 2 * c.cross * zbar_expectation;
}

}  // namespace repetition_oracle

}  // namespace cqec
