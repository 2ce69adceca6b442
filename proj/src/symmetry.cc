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

#include "cqec/symmetry.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cqec {

namespace {

constexpr size_t kMaxSymmetryQubits = 9;

uint64_t pack(const Permutation &p) {
    uint64_t v = 0;
    for (size_t q = 0; q < p.size(); q++) {
        v |= uint64_t(p[q]) << (4 * q);
    }
    return v;
}

Permutation compose(const Permutation &a, const Permutation &b) {
    // (a . b)(q) = a(b(q))
    Permutation out(a.size());
    for (size_t q = 0; q < a.size(); q++) {
        out[q] = a[b[q]];
    }
    return out;
}

size_t closure_size(const std::vector<Permutation> &gens, size_t n) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    std::unordered_set<uint64_t> seen{pack(id)};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto &p : frontier) {
            for (const auto &g : gens) {
                Permutation c = compose(g, p);
                if (seen.insert(pack(c)).second) {
                    next.push_back(std::move(c));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

struct Search {
    const StabilizerCode &code;
    AutomorphismOptions opt;
    std::vector<PauliWord> logicals;
    size_t n;

    bool accept(const Permutation &perm) const {
        const PauliWord id = PauliWord::identity(n);
        for (const auto &g : code.generators()) {
            PauliWord img = permute(g, perm);
            if (code.syndrome(img) != 0) {
                return false;
            }
            // The image must be a stabilizer element with the same sign.
            NormalForm nf = code.decompose(img, id);
            if (nf.logical != 0 || nf.eta != 0) {
                return false;
            }
        }
        for (const auto &l : logicals) {
            PauliWord img = permute(l, perm);
            if (opt.exact_logicals) {
                if (img != l) {
                    return false;
                }
            } else {
                NormalForm nf = code.decompose(img * l, id);
                if (nf.logical != 0 || nf.eta != 0) {
                    return false;
                }
            }
        }
        return true;
    }

    void extend(Permutation &perm, std::vector<bool> &used, size_t q, std::vector<Permutation> &out) const {
        if (q == n) {
            if (accept(perm)) {
                out.push_back(perm);
            }
            return;
        }
        for (uint8_t img = 0; img < n; img++) {
            if (used[img]) {
                continue;
            }
            if (opt.exact_logicals) {
                bool ok = true;
                for (const auto &l : logicals) {
                    if (l.letter(q) != l.letter(img)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    continue;
                }
            }
            perm[q] = img;
            used[img] = true;
            extend(perm, used, q + 1, out);
            used[img] = false;
        }
    }
};

}  // namespace

PauliWord permute(const PauliWord &word, const Permutation &perm) {
    if (perm.size() != word.n) {
        throw std::invalid_argument("permutation size mismatch");
    }
    PauliWord out = PauliWord::identity(word.n);
    out.phase = word.phase;
    for (size_t q = 0; q < word.n; q++) {
        out.set_letter(perm[q], word.letter(q));
    }
    return out;
}

std::string to_string(const Permutation &perm) {
    std::string out = "[";
    for (size_t q = 0; q < perm.size(); q++) {
        out += (q ? "," : "") + std::to_string(perm[q] + 1);
    }
    return out + "]";
}

PermutationGroup find_automorphisms(const StabilizerCode &code, const AutomorphismOptions &options) {
    const size_t n = code.n();
    if (n > kMaxSymmetryQubits) {
        throw std::invalid_argument("automorphism search is limited to " + std::to_string(kMaxSymmetryQubits) +
                                    " qubits");
    }
    Search search{code, options, {}, n};
    for (size_t i = 0; i < code.k(); i++) {
        search.logicals.push_back(code.logical_x()[i]);
        search.logicals.push_back(code.logical_z()[i]);
    }
    // Branch on the image of qubit 1; each branch fills its own list.
    std::vector<std::vector<Permutation>> found(n);
    CQEC_OMP_PRAGMA("omp parallel for schedule(dynamic) num_threads(thread_count())")
    for (long long first = 0; first < (long long)n; first++) {
        if (options.exact_logicals) {
            bool ok = true;
            for (const auto &l : search.logicals) {
                ok = ok && l.letter(0) == l.letter(size_t(first));
            }
            if (!ok) {
                continue;
            }
        }
        Permutation perm(n);
        std::vector<bool> used(n, false);
        perm[0] = uint8_t(first);
        used[first] = true;
        search.extend(perm, used, 1, found[first]);
    }
    PermutationGroup group;
    group.n = n;
    for (auto &f : found) {
        group.elements.insert(group.elements.end(), f.begin(), f.end());
    }
    std::sort(group.elements.begin(), group.elements.end());
    for (const auto &p : group.elements) {
        bool identity = true;
        for (size_t q = 0; q < n; q++) {
            identity = identity && p[q] == q;
        }
        if (identity) {
            continue;
        }
        std::vector<Permutation> trial = group.generators;
        trial.push_back(p);
        if (closure_size(trial, n) > closure_size(group.generators, n)) {
            group.generators = std::move(trial);
        }
        if (closure_size(group.generators, n) == group.elements.size()) {
            break;
        }
    }
    return group;
}

SyndromeOrbits syndrome_orbits(const DecoderTable &table, const PermutationGroup &group) {
    const StabilizerCode &code = table.code();
    const size_t num_s = table.size();
    std::vector<size_t> parent(num_s);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    SyndromeOrbits out;
    for (const auto &perm : group.elements) {
        for (size_t s = 0; s < num_s; s++) {
            PauliWord img = permute(table.correction(s), perm);
            uint64_t t = code.syndrome(img);
            if (!table.correction(t).same_bits(img)) {
                out.violations.push_back("permutation " + to_string(perm) + " maps correction " +
                                         table.correction(s).letters() + " to " + img.letters() +
                                         " but the table holds " + table.correction(t).letters());
            }
            size_t a = find(s), b = find(t);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::vector<std::vector<uint64_t>> by_root(num_s);
    for (size_t s = 0; s < num_s; s++) {
        by_root[find(s)].push_back(s);
    }
    for (auto &o : by_root) {
        if (!o.empty()) {
            out.orbits.push_back(std::move(o));
        }
    }
    return out;
}

OrbitChannelCheck verify_orbit_channels(const DecoderTable &table, const SyndromeOrbits &orbits,
                                        const UnitaryNoise &noise, double tol) {
    KrausList kraus = effective_unitary(table, noise);
    OrbitChannelCheck out;
    for (const auto &orbit : orbits.orbits) {
        for (uint64_t s : orbit) {
            for (uint32_t l = 0; l < kraus.num_logicals(); l++) {
                out.max_deviation = std::max(out.max_deviation, std::abs(kraus.at(s, l) - kraus.at(orbit[0], l)));
            }
        }
    }
    out.equal = out.max_deviation <= tol;

    // Channels are compared through their unnormalized r matrices, which
    // ignore the global phase of the Kraus operator.
    std::vector<Eigen::MatrixXcd> distinct;
    for (size_t s = 0; s < kraus.num_syndromes; s++) {
        Eigen::MatrixXcd r = kraus.conditional(s);
        bool seen = false;
        for (const auto &d : distinct) {
            if ((d - r).cwiseAbs().maxCoeff() <= tol) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            distinct.push_back(r);
        }
    }
    out.distinct_channels = distinct.size();
    return out;
}

}  // namespace cqec
