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

#include "cqec/decoder.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace cqec {

namespace {

constexpr size_t kMaxDecoderQubits = 16;

using Rank = std::tuple<size_t, int, uint32_t, uint64_t>;

uint32_t reverse_bits(uint32_t v) {
    uint32_t r = 0;
    for (int i = 0; i < 32; i++) {
        r = (r << 1) | ((v >> i) & 1);
    }
    return r;
}

Rank rank_of(const PauliWord &p, const DecoderOptions &opt) {
    size_t w = p.weight();
    int category = 0;
    if (opt.kind == DecoderKind::symmetry_preserving) {
        XyzCounts c = p.counts();
        category = (w == 2 && c.x == 1 && c.z == 1) ? 0 : 1;
    }
    uint32_t support_rank = 0;
    if (opt.tie_break == TieBreak::support_order) {
        // A set whose smallest differing position is lower has the larger
        // reversed mask.
        support_rank = ~reverse_bits(p.support());
    }
    return {w, category, support_rank, p.lex_key()};
}

struct Filler {
    const StabilizerCode &code;
    DecoderOptions opt;
    std::vector<PauliWord> &table;
    std::vector<Rank> ranks;
    std::vector<bool> filled;
    size_t num_filled = 0;
    std::vector<uint64_t> col_x, col_z;

    Filler(const StabilizerCode &c, DecoderOptions o, std::vector<PauliWord> &t)
        : code(c), opt(o), table(t), ranks(t.size()), filled(t.size(), false) {
        for (size_t q = 0; q < c.n(); q++) {
            col_x.push_back(c.syndrome(PauliWord::from_letters(c.n(), 1u << q, 0)));
            col_z.push_back(c.syndrome(PauliWord::from_letters(c.n(), 0, 1u << q)));
        }
    }

    uint64_t fast_syndrome(uint32_t x, uint32_t z) const {
        uint64_t s = 0;
        for (uint32_t r = x; r; r &= r - 1) {
            s ^= col_x[std::countr_zero(r)];
        }
        for (uint32_t r = z; r; r &= r - 1) {
            s ^= col_z[std::countr_zero(r)];
        }
        return s;
    }

    void offer(uint32_t x, uint32_t z) {
        uint64_t s = fast_syndrome(x, z);
        PauliWord p = PauliWord::from_letters(code.n(), x, z);
        Rank r = rank_of(p, opt);
        if (!filled[s]) {
            filled[s] = true;
            num_filled++;
        } else if (!(r < ranks[s])) {
            return;
        }
        ranks[s] = r;
        table[s] = p;
    }

    /// Visits words weight by weight and stops once every syndrome has a
    /// correction and no lighter word can appear.
    void run(bool z_only) {
        for (size_t w = 0; w <= code.n(); w++) {
            for_each_word_of_weight(code.n(), w, z_only, [&](uint32_t x, uint32_t z) { offer(x, z); });
            if (num_filled == table.size()) {
                break;
            }
        }
    }
};

}  // namespace

DecoderKind parse_decoder_kind(std::string_view text) {
    if (text == "symmetric") {
        return DecoderKind::symmetric;
    }
    if (text == "z_only" || text == "z-only") {
        return DecoderKind::z_only;
    }
    if (text == "symmetry_preserving" || text == "symmetry-preserving") {
        return DecoderKind::symmetry_preserving;
    }
    throw std::invalid_argument("unknown decoder '" + std::string(text) + "'");
}

std::string to_string(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::symmetric:
            return "symmetric";
        case DecoderKind::z_only:
            return "z_only";
        case DecoderKind::symmetry_preserving:
            return "symmetry_preserving";
    }
    return "?";
}

TieBreak parse_tie_break(std::string_view text) {
    if (text == "lexicographic" || text == "lex") {
        return TieBreak::lexicographic;
    }
    if (text == "support_order" || text == "support-order") {
        return TieBreak::support_order;
    }
    throw std::invalid_argument("unknown tie-break rule '" + std::string(text) + "'");
}

std::string to_string(TieBreak tie) {
    return tie == TieBreak::lexicographic ? "lexicographic" : "support_order";
}

DecoderTable::DecoderTable(StabilizerCode code, DecoderOptions options, std::vector<PauliWord> corrections)
    : code_(std::move(code)), options_(options), corrections_(std::move(corrections)) {
}

namespace {

/// Minimum-rank word for every syndrome by dynamic programming over qubit
/// suffixes. The rank orders weight first and then compares qubit by qubit
/// from qubit 1, so the best word on qubits q..n-1 extends the best word on
/// qubits q+1..n-1 for each choice of letter on q.
void fill_by_suffix(const StabilizerCode &code, const DecoderOptions &opt, std::vector<PauliWord> &table) {
    const size_t n = code.n();
    const size_t num_s = table.size();
    std::vector<bool> have(num_s, false), next_have(num_s);
    std::vector<PauliWord> next(num_s);
    table.assign(num_s, PauliWord::identity(n));
    have[0] = true;
    for (size_t q = n; q-- > 0;) {
        uint64_t col[4] = {0};
        for (uint32_t l = 1; l < 4; l++) {
            PauliWord p = PauliWord::identity(n);
            p.set_letter(q, Letter(l));
            col[l] = code.syndrome(p);
        }
        std::fill(next_have.begin(), next_have.end(), false);
        for (size_t s = 0; s < num_s; s++) {
            Rank best{};
            for (uint32_t l = 0; l < 4; l++) {
                uint64_t src = s ^ col[l];
                if (!have[src]) {
                    continue;
                }
                PauliWord cand = table[src];
                cand.set_letter(q, Letter(l));
                Rank r = rank_of(cand, opt);
                if (!next_have[s] || r < best) {
                    best = r;
                    next[s] = cand;
                    next_have[s] = true;
                }
            }
        }
        table.swap(next);
        have.swap(next_have);
    }
    for (size_t s = 0; s < num_s; s++) {
        if (!have[s]) {
            throw std::logic_error("some syndromes have no correction");
        }
    }
}

std::vector<PauliWord> build_table(const StabilizerCode &code, DecoderOptions options, bool by_enumeration) {
    if (code.n() > kMaxDecoderQubits) {
        throw std::invalid_argument("decoder tables are limited to " + std::to_string(kMaxDecoderQubits) +
                                    " qubits; code has " + std::to_string(code.n()));
    }
    std::vector<PauliWord> table(code.num_syndromes(), PauliWord::identity(code.n()));
    auto symmetric = [&](DecoderOptions opt, std::vector<PauliWord> &out) {
        // The weight-2 preference of the symmetry-preserving rule does not
        // split over qubits, so that rule always enumerates.
        if (by_enumeration || opt.kind == DecoderKind::symmetry_preserving) {
            Filler f(code, opt, out);
            f.run(false);
            if (f.num_filled < out.size()) {
                throw std::logic_error("some syndromes have no correction");
            }
        } else {
            fill_by_suffix(code, opt, out);
        }
    };
    if (options.kind == DecoderKind::z_only) {
        Filler zf(code, options, table);
        zf.run(true);
        if (zf.num_filled < table.size()) {
            std::vector<PauliWord> fallback(table.size(), PauliWord::identity(code.n()));
            symmetric({DecoderKind::symmetric, options.tie_break}, fallback);
            for (size_t s = 0; s < table.size(); s++) {
                if (!zf.filled[s]) {
                    table[s] = fallback[s];
                }
            }
        }
    } else {
        symmetric(options, table);
    }
    return table;
}

}  // namespace

DecoderTable DecoderTable::build(const StabilizerCode &code, DecoderOptions options) {
    return DecoderTable(code, options, build_table(code, options, false));
}

DecoderTable DecoderTable::build_reference(const StabilizerCode &code, DecoderOptions options) {
    return DecoderTable(code, options, build_table(code, options, true));
}

NormalForm DecoderTable::decompose(const PauliWord &word) const {
    return code_.decompose(word, corrections_[code_.syndrome(word)]);
}

std::string DecoderTable::to_csv() const {
    std::string out = "syndrome,correction,weight\n";
    for (size_t s = 0; s < corrections_.size(); s++) {
        out += syndrome_str(s, code_.num_generators()) + "," + corrections_[s].letters() + "," +
               std::to_string(corrections_[s].weight()) + "\n";
    }
    return out;
}

}  // namespace cqec
