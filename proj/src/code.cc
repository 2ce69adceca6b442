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

#include "cqec/code.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cqec {

std::string_view catalog_text(std::string_view name);  // generated

namespace {

std::invalid_argument code_error(const std::string &name, const std::string &what) {
    return std::invalid_argument("code '" + name + "': " + what);
}

std::vector<uint64_t> packed_rows(const std::vector<PauliWord> &words) {
    std::vector<uint64_t> rows;
    rows.reserve(words.size());
    for (const auto &w : words) {
        rows.push_back(w.packed());
    }
    return rows;
}

}  // namespace

StabilizerCode::StabilizerCode(std::string name, size_t d, std::vector<PauliWord> generators,
                               std::vector<PauliWord> logical_x, std::vector<PauliWord> logical_z)
    : name_(std::move(name)),
      n_(0),
      d_(d),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
    if (logical_x_.empty()) {
        throw code_error(name_, "at least one logical qubit is required");
    }
    n_ = logical_x_[0].n;
    auto rows = packed_rows(generators_);
    if (rows.size() > 31) {
        throw code_error(name_, "too many generators");
    }
    stabilizer_space_ = Gf2RowSpace(rows);
    validate();
}

void StabilizerCode::validate() const {
    const size_t k = logical_x_.size();
    if (logical_z_.size() != k) {
        throw code_error(name_, "X and Z logical counts differ");
    }
    if (generators_.size() + k != n_) {
        throw code_error(name_, "expected n - k = " + std::to_string(n_ - k) + " generators, got " +
                                    std::to_string(generators_.size()));
    }
    auto check_word = [&](const PauliWord &w, const char *what) {
        if (w.n != n_) {
            throw code_error(name_, std::string(what) + " " + w.str() + " has the wrong length");
        }
        if (!w.hermitian()) {
            throw code_error(name_, std::string(what) + " " + w.str() + " is not Hermitian");
        }
    };
    for (const auto &g : generators_) {
        check_word(g, "generator");
    }
    for (size_t i = 0; i < k; i++) {
        check_word(logical_x_[i], "logical X");
        check_word(logical_z_[i], "logical Z");
    }
    for (size_t i = 0; i < generators_.size(); i++) {
        for (size_t j = i + 1; j < generators_.size(); j++) {
            if (!commutes(generators_[i], generators_[j])) {
                throw code_error(name_, "generators " + generators_[i].str() + " and " + generators_[j].str() +
                                            " anticommute");
            }
        }
    }
    // Independent Hermitian generators cannot multiply to -I, so rank is the
    // only group check needed.
    if (stabilizer_space_.rank() != generators_.size()) {
        throw code_error(name_, "generators are not independent");
    }
    std::vector<uint64_t> all = packed_rows(generators_);
    for (size_t i = 0; i < k; i++) {
        for (const PauliWord *w : {&logical_x_[i], &logical_z_[i]}) {
            if (syndrome(*w) != 0) {
                throw code_error(name_, "logical " + w->str() + " does not commute with the stabilizer");
            }
            all.push_back(w->packed());
        }
        for (size_t j = 0; j < k; j++) {
            bool want = i == j;
            if (commutes(logical_x_[i], logical_z_[j]) == want) {
                throw code_error(name_, "logical pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            " has the wrong commutation");
            }
            if (!commutes(logical_x_[i], logical_x_[j]) || !commutes(logical_z_[i], logical_z_[j])) {
                throw code_error(name_, "logical operators of one type must commute");
            }
        }
    }
    if (Gf2RowSpace(all).rank() != n_ + k) {
        throw code_error(name_, "logical operators are not independent of the stabilizer");
    }
    if (d_ == 0) {
        throw code_error(name_, "distance must be positive");
    }
    // Enumeration cost grows like C(n, d) 3^d; skip the check when it is large.
    double cost = 1;
    for (size_t w = 1; w <= d_; w++) {
        cost = cost * double(n_ - w + 1) / double(w) * 3;
    }
    if (cost < 5e6) {
        size_t found = min_logical_weight(d_);
        if (found != d_) {
            throw code_error(name_, "declared distance " + std::to_string(d_) + " but found logical of weight " +
                                        (found == 0 ? std::string("> d") : std::to_string(found)));
        }
    }
}

uint64_t StabilizerCode::syndrome(const PauliWord &word) const {
    return cqec::syndrome(word, generators_);
}

PauliWord StabilizerCode::logical_operator(uint32_t index) const {
    const size_t k = logical_x_.size();
    PauliWord xs = PauliWord::identity(n_);
    PauliWord zs = PauliWord::identity(n_);
    int ys = 0;
    for (size_t i = 0; i < k; i++) {
        uint32_t digit = (index >> (2 * (k - 1 - i))) & 3;
        bool lx = digit == 1 || digit == 2;
        bool lz = digit == 2 || digit == 3;
        if (lx) {
            xs = xs * logical_x_[i];
        }
        if (lz) {
            zs = zs * logical_z_[i];
        }
        ys += lx && lz;
    }
    PauliWord out = xs * zs;
    out.phase = uint8_t((out.phase + ys) & 3);
    return out;
}

uint32_t StabilizerCode::logical_index(const PauliWord &word) const {
    const size_t k = logical_x_.size();
    uint32_t index = 0;
    for (size_t i = 0; i < k; i++) {
        bool lx = !commutes(word, logical_z_[i]);
        bool lz = !commutes(word, logical_x_[i]);
        uint32_t digit = lx ? (lz ? 2 : 1) : (lz ? 3 : 0);
        index = (index << 2) | digit;
    }
    return index;
}

PauliWord StabilizerCode::stabilizer_element(uint64_t t) const {
    PauliWord out = PauliWord::identity(n_);
    for (size_t i = 0; i < generators_.size(); i++) {
        if ((t >> i) & 1) {
            out = out * generators_[i];
        }
    }
    return out;
}

bool StabilizerCode::in_stabilizer_span(const PauliWord &word) const {
    return stabilizer_space_.contains(word.packed());
}

NormalForm StabilizerCode::decompose(const PauliWord &word, const PauliWord &correction) const {
    NormalForm nf;
    nf.syndrome = syndrome(word);
    if (syndrome(correction) != nf.syndrome || correction.phase != 0) {
        throw std::invalid_argument("correction " + correction.str() + " does not match the syndrome of " +
                                    word.str());
    }
    PauliWord residual = correction * word;
    nf.logical = logical_index(residual);
    PauliWord l = logical_operator(nf.logical);
    auto t = stabilizer_space_.combination(residual.packed() ^ l.packed());
    if (!t) {
        throw std::logic_error("residual is not a logical times a stabilizer");
    }
    nf.stabilizer = *t;
    PauliWord rebuilt = correction * l * stabilizer_element(*t);
    nf.eta = uint8_t((word.phase - rebuilt.phase) & 3);
    return nf;
}

size_t StabilizerCode::min_logical_weight(size_t limit) const {
    for (size_t w = 1; w <= limit && w <= n_; w++) {
        bool found = false;
        for_each_word_of_weight(n_, w, false, [&](uint32_t x, uint32_t z) {
            if (found) {
                return;
            }
            PauliWord p = PauliWord::from_letters(n_, x, z);
            if (syndrome(p) == 0 && !in_stabilizer_span(p)) {
                found = true;
            }
        });
        if (found) {
            return w;
        }
    }
    return 0;
}

StabilizerCode StabilizerCode::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    size_t n = 0, k = 0, d = 0;
    std::string name = "unnamed";
    std::vector<PauliWord> gens, xs, zs;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) {
            continue;
        }
        auto fail = [&](const std::string &what) {
            return std::invalid_argument("code text line " + std::to_string(line_no) + ": " + what);
        };
        if (!have_header) {
            try {
                n = std::stoul(first);
            } catch (...) {
                throw fail("expected header 'n k d name'");
            }
            if (!(fields >> k >> d)) {
                throw fail("expected header 'n k d name'");
            }
            fields >> name;
            if (n == 0 || n > kMaxQubits || k == 0 || k >= n) {
                throw fail("unsupported parameters n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
            have_header = true;
            continue;
        }
        std::string body;
        if (!(fields >> body) || first.size() != 1) {
            throw fail("expected '<S|X|Z> <pauli>'");
        }
        PauliWord p;
        try {
            p = PauliWord::from_str(body);
        } catch (const std::invalid_argument &e) {
            throw fail(e.what());
        }
        if (p.n != n) {
            throw fail("word " + body + " does not have " + std::to_string(n) + " qubits");
        }
        switch (first[0]) {
            case 'S':
                gens.push_back(p);
                break;
            case 'X':
                xs.push_back(p);
                break;
            case 'Z':
                zs.push_back(p);
                break;
            default:
                throw fail("unknown record type " + first);
        }
    }
    if (!have_header) {
        throw std::invalid_argument("code text has no header");
    }
    if (xs.size() != k || zs.size() != k) {
        throw code_error(name, "expected " + std::to_string(k) + " X and Z logical lines");
    }
    return StabilizerCode(name, d, std::move(gens), std::move(xs), std::move(zs));
}

StabilizerCode StabilizerCode::from_file(const std::filesystem::path &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open code file " + path.string());
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return from_text(buf.str());
}

std::string StabilizerCode::to_text() const {
    std::string out = std::to_string(n_) + " " + std::to_string(k()) + " " + std::to_string(d_) + " " + name_ + "\n";
    for (const auto &g : generators_) {
        out += "S " + g.str() + "\n";
    }
    for (const auto &x : logical_x_) {
        out += "X " + x.str() + "\n";
    }
    for (const auto &z : logical_z_) {
        out += "Z " + z.str() + "\n";
    }
    return out;
}

StabilizerCode repetition_code(size_t n) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("repetition code size must be in 2.." + std::to_string(kMaxQubits));
    }
    std::vector<PauliWord> gens;
    for (size_t i = 0; i + 1 < n; i++) {
        gens.push_back(PauliWord::from_letters(n, uint32_t(3) << i, 0));
    }
    uint32_t all = n == 32 ? 0xFFFFFFFFu : (uint32_t(1) << n) - 1;
    // Odd sizes use the transversal X; even sizes use X on qubit 1 so that the
    // logical pair still anticommutes.
    PauliWord xbar = PauliWord::from_letters(n, n % 2 ? all : 1u, 0);
    PauliWord zbar = PauliWord::z_word(n, all);
    return StabilizerCode("repetition" + std::to_string(n), 1, std::move(gens), {xbar}, {zbar});
}

std::vector<std::string> catalog_names() {
    return {"five_qubit", "steane", "shor", "bare_7_1_3", "surface_9_1_3", "surface_16_1_4"};
}

StabilizerCode catalog_code(std::string_view name) {
    if (name.starts_with("repetition")) {
        std::string_view rest = name.substr(10);
        if (!rest.empty() && (rest[0] == '_' || rest[0] == '(')) {
            rest.remove_prefix(1);
        }
        if (!rest.empty() && rest.back() == ')') {
            rest.remove_suffix(1);
        }
        size_t n = 0;
        try {
            n = std::stoul(std::string(rest));
        } catch (...) {
            throw std::invalid_argument("bad repetition code name '" + std::string(name) + "'");
        }
        return repetition_code(n);
    }
    std::string_view text = catalog_text(name);
    if (text.empty()) {
        throw std::invalid_argument("unknown catalog code '" + std::string(name) + "'");
    }
    return StabilizerCode::from_text(text);
}

}  // namespace cqec
