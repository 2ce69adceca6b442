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

#include "cqec/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "cqec/channel.h"
#include "cqec/concat.h"
#include "cqec/metrics.h"
#include "cqec/parallel.h"
#include "cqec/symmetry.h"

namespace cqec::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string code = "steane";
    std::string code_file;
    std::string decoder;
    std::string tie_break = "lexicographic";
    std::string model;
    std::optional<double> unitary;
    std::string axis = "0,0,1";
    std::string per_qubit;
    bool symbolic = false;
    std::string conditional;
    bool conditional_all = false;
    bool kraus = false;
    bool force_optimizer = false;
    std::string sweep_grid = "1,1";
    std::string family = "both";
    std::string grid = "201,201";
    size_t levels = 5;
    size_t points = 201;
    std::string out;
    std::string format;
    uint64_t seed = 20260101;
    int threads = 0;
};

std::string fmt_double(double v) {
    if (v == 0) {
        v = 0;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_numbers(const std::string &text, size_t count, const std::string &what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument("");
            }
        } catch (...) {
            throw std::invalid_argument(what + ": '" + item + "' is not a number");
        }
    }
    if (out.size() != count) {
        throw std::invalid_argument(what + " expects " + std::to_string(count) + " comma-separated values");
    }
    return out;
}

std::pair<size_t, size_t> parse_grid(const std::string &text, const std::string &what) {
    auto v = parse_numbers(text, 2, what);
    for (double d : v) {
        if (!(d >= 1) || d != std::floor(d) || d > 1e6) {
            throw std::invalid_argument(what + " needs two positive integers");
        }
    }
    return {size_t(v[0]), size_t(v[1])};
}

/// "p=0.1,theta=0.2" or "x=0.01,y=0.005".
ModelChannel parse_model(const std::string &text) {
    std::map<std::string, double> kv;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--model expects key=value pairs, got '" + item + "'");
        }
        try {
            kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (...) {
            throw std::invalid_argument("--model value in '" + item + "' is not a number");
        }
    }
    ModelChannel m;
    if (kv.size() == 2 && kv.count("p") && kv.count("theta")) {
        m = model_from_p_theta(kv["p"], kv["theta"]);
    } else if (kv.size() == 2 && kv.count("x") && kv.count("y")) {
        m = {kv["x"], kv["y"]};
    } else {
        throw std::invalid_argument("--model expects p=..,theta=.. or x=..,y=..");
    }
    require_completely_positive(m);
    return m;
}

StabilizerCode load_code(const Options &o) {
    if (!o.code_file.empty()) {
        return StabilizerCode::from_file(o.code_file);
    }
    return catalog_code(o.code);
}

DecoderTable load_table(const Options &o, const StabilizerCode &code, const char *default_decoder) {
    DecoderOptions d;
    d.kind = parse_decoder_kind(o.decoder.empty() ? default_decoder : o.decoder);
    d.tie_break = parse_tie_break(o.tie_break);
    return DecoderTable::build(code, d);
}

std::optional<NoiseSpec> load_noise(const Options &o, size_t n) {
    int given = !o.model.empty() + o.unitary.has_value() + !o.per_qubit.empty();
    if (given > 1) {
        throw std::invalid_argument("choose one of --model, --unitary and --per-qubit");
    }
    if (!o.per_qubit.empty()) {
        NoiseSpec spec = load_per_qubit(o.per_qubit);
        size_t m = std::visit([](const auto &s) { return s.n(); }, spec);
        if (m != n) {
            throw std::invalid_argument("per-qubit file lists " + std::to_string(m) + " qubits; the code has " +
                                        std::to_string(n));
        }
        return spec;
    }
    if (o.unitary) {
        auto a = parse_numbers(o.axis, 3, "--axis");
        return UnitaryNoise::uniform(n, *o.unitary, Axis::from_components(a[0], a[1], a[2]));
    }
    if (!o.model.empty()) {
        return ModelNoise::uniform(n, parse_model(o.model));
    }
    return std::nullopt;
}

std::string logical_label(size_t k, uint32_t index) {
    std::string s;
    for (size_t i = 0; i < k; i++) {
        s += "IXYZ"[(index >> (2 * (k - 1 - i))) & 3];
    }
    return s;
}

json complex_json(cplx c) {
    return json::array({c.real(), c.imag()});
}

json matrix_json(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            row.push_back(complex_json(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

json poly_json(const Poly2 &p) {
    json terms = json::array();
    for (const auto &[e, c] : p.terms()) {
        json coeff;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
            coeff = c.convert_to<long long>();
        } else {
            coeff = c.str();
        }
        terms.push_back(json::array({coeff, e.first, e.second}));
    }
    return {{"terms", terms}, {"text", p.str()}};
}

json config_json(const Options &o, const std::string &command, const StabilizerCode &code, const DecoderTable *table) {
    json c;
    c["command"] = command;
    c["code"] = code.name();
    c["n"] = code.n();
    c["k"] = code.k();
    c["d"] = code.d();
    if (!o.code_file.empty()) {
        c["code_file"] = o.code_file;
    }
    if (table) {
        c["decoder"] = to_string(table->options().kind);
        c["tie_break"] = to_string(table->options().tie_break);
    }
    c["seed"] = o.seed;
    c["threads"] = thread_count();
    if (!o.model.empty()) {
        c["model"] = o.model;
    }
    if (o.unitary) {
        c["unitary"] = *o.unitary;
        c["axis"] = o.axis;
    }
    if (!o.per_qubit.empty()) {
        c["per_qubit"] = o.per_qubit;
    }
    return c;
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    // Write next to the target and rename so readers never see a partial file.
    std::filesystem::path target(o.out);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        f << text;
        if (!f) {
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, target);
}

std::string format_of(const Options &o, const char *fallback) {
    std::string f = o.format.empty() ? fallback : o.format;
    if (f != "json" && f != "csv") {
        throw std::invalid_argument("--format must be json or csv");
    }
    return f;
}

DiamondOptions diamond_options(const Options &o) {
    DiamondOptions d;
    d.seed = o.seed;
    d.force_optimizer = o.force_optimizer;
    return d;
}

json metrics_json(const LogicalChannel &ch, const Options &o) {
    json m;
    if (ch.k == 1) {
        DiamondResult dr = diamond_distance(ch, diamond_options(o));
        m["diamond_distance"] = dr.value;
        m["diamond_closed_form"] = dr.closed_form;
        m["diamond_restart_spread"] = dr.spread;
        ModelFit fit = fit_model(ch);
        m["fit"] = {{"x", fit.model.x}, {"y", fit.model.y}, {"residual", fit.residual}};
    }
    m["infidelity"] = infidelity(ch);
    return m;
}

uint64_t parse_syndrome(const std::string &text, size_t num_generators) {
    if (text.size() == num_generators && text.find_first_not_of("01") == std::string::npos) {
        uint64_t s = 0;
        for (size_t i = 0; i < text.size(); i++) {
            if (text[i] == '1') {
                s |= uint64_t(1) << i;
            }
        }
        return s;
    }
    throw std::invalid_argument("--conditional expects a bit string of length " + std::to_string(num_generators) +
                                ", generator 1 first");
}

std::string cmd_channel(const Options &o) {
    StabilizerCode code = load_code(o);
    DecoderTable table = load_table(o, code, "symmetric");
    json doc;
    doc["config"] = config_json(o, "channel", code, &table);
    auto noise = load_noise(o, code.n());
    std::string fmt = format_of(o, "json");

    if (o.symbolic) {
        PolyMap map = effective_model_symbolic(table);
        json r;
        r["x_prime"] = poly_json(map.x_poly());
        r["y_prime"] = poly_json(map.y_poly());
        r["residual_ok"] = map.residual_ok;
        r["residual"] = map.residual;
        if (noise) {
            const auto *m = std::get_if<ModelNoise>(&*noise);
            if (!m) {
                throw std::invalid_argument("--symbolic evaluates at a --model point only");
            }
            ModelChannel in = m->qubits[0];
            ModelChannel outc = map.apply(in);
            r["evaluated"] = {{"x", in.x}, {"y", in.y}, {"x_prime", outc.x}, {"y_prime", outc.y}};
        }
        if (fmt == "csv") {
            std::string csv = "output,coeff,x_power,y_power\n";
            for (auto [name, p] : {std::pair{"x_prime", &map.x_poly()}, std::pair{"y_prime", &map.y_poly()}}) {
                for (const auto &[e, c] : p->terms()) {
                    csv += std::string(name) + "," + c.str() + "," + std::to_string(e.first) + "," +
                           std::to_string(e.second) + "\n";
                }
            }
            return csv;
        }
        doc["result"] = r;
        return doc.dump(2) + "\n";
    }
    if (!noise) {
        throw std::invalid_argument("channel needs --model, --unitary, --per-qubit or --symbolic");
    }

    Eigen::MatrixXcd r;
    json result;
    if (o.conditional_all || !o.conditional.empty()) {
        std::vector<Eigen::MatrixXcd> per_syndrome;
        if (const auto *u = std::get_if<UnitaryNoise>(&*noise)) {
            KrausList kl = effective_unitary(table, *u);
            for (uint64_t s = 0; s < kl.num_syndromes; s++) {
                per_syndrome.push_back(kl.conditional(s));
            }
        } else {
            per_syndrome = effective_model_numeric(table, std::get<ModelNoise>(*noise)).r;
        }
        std::vector<uint64_t> wanted;
        if (o.conditional.empty()) {
            for (uint64_t s = 0; s < per_syndrome.size(); s++) {
                wanted.push_back(s);
            }
        } else {
            wanted.push_back(parse_syndrome(o.conditional, code.num_generators()));
        }
        // Syndromes whose unnormalized conditional channels coincide share a class.
        std::vector<size_t> class_of(per_syndrome.size());
        std::vector<uint64_t> class_rep;
        double scale = 0;
        for (const auto &m : per_syndrome) {
            scale = std::max(scale, m.cwiseAbs().maxCoeff());
        }
        for (uint64_t s = 0; s < per_syndrome.size(); s++) {
            size_t c = 0;
            while (c < class_rep.size() && (per_syndrome[class_rep[c]] - per_syndrome[s]).cwiseAbs().maxCoeff() >
                                               1e-12 * std::max(scale, 1e-300)) {
                c++;
            }
            if (c == class_rep.size()) {
                class_rep.push_back(s);
            }
            class_of[s] = c;
        }
        const size_t dim = size_t(1) << code.k();
        json rows = json::array();
        std::string csv = "syndrome,correction,class,probability,xbar,x,y\n";
        for (uint64_t s : wanted) {
            ConditionalChannel cc{s, code.k(), per_syndrome[s]};
            json row;
            row["syndrome"] = syndrome_str(s, code.num_generators());
            row["correction"] = table.correction(s).letters();
            row["class"] = class_of[s];
            row["r"] = matrix_json(cc.r);
            double prob = cc.probability(Eigen::MatrixXcd::Identity(dim, dim) / double(dim));
            row["probability_maximally_mixed"] = prob;
            csv += std::string(row["syndrome"]) + "," + std::string(row["correction"]) + "," +
                   std::to_string(class_of[s]) + "," + fmt_double(prob);
            if (code.k() == 1) {
                Eigen::MatrixXcd up = Eigen::MatrixXcd::Zero(2, 2), down = Eigen::MatrixXcd::Zero(2, 2);
                up(0, 0) = 1;
                down(1, 1) = 1;
                row["probability_zbar_plus"] = cc.probability(up);
                row["probability_zbar_minus"] = cc.probability(down);
                row["xbar"] = cc.xbar();
                row["x"] = cc.x();
                row["y"] = cc.y();
                csv += "," + fmt_double(cc.xbar()) + "," + fmt_double(cc.x()) + "," + fmt_double(cc.y());
            } else {
                csv += ",,,";
            }
            csv += "\n";
            rows.push_back(row);
        }
        if (fmt == "csv") {
            return csv;
        }
        result["conditional"] = rows;
        result["distinct_conditional_channels"] = class_rep.size();
        doc["result"] = result;
        return doc.dump(2) + "\n";
    } else {
        LogicalChannel ch;
        if (const auto *u = std::get_if<UnitaryNoise>(&*noise)) {
            KrausList kl = effective_unitary(table, *u);
            ch = kl.channel();
            if (o.kraus) {
                json kraus = json::object();
                for (size_t s = 0; s < kl.num_syndromes; s++) {
                    json coeffs = json::object();
                    for (uint32_t l = 0; l < kl.num_logicals(); l++) {
                        coeffs[logical_label(code.k(), l)] = complex_json(kl.at(s, l));
                    }
                    kraus[syndrome_str(s, code.num_generators())] = coeffs;
                }
                result["kraus"] = kraus;
            }
        } else {
            ch = effective_model_numeric(table, std::get<ModelNoise>(*noise)).total();
        }
        r = ch.r;
        result["r"] = matrix_json(ch.r);
        result["metrics"] = metrics_json(ch, o);
    }
    if (fmt == "csv") {
        std::string csv = "a,b,re,im\n";
        for (Eigen::Index a = 0; a < r.rows(); a++) {
            for (Eigen::Index b = 0; b < r.cols(); b++) {
                csv += logical_label(code.k(), uint32_t(a)) + "," + logical_label(code.k(), uint32_t(b)) + "," +
                       fmt_double(r(a, b).real()) + "," + fmt_double(r(a, b).imag()) + "\n";
            }
        }
        return csv;
    }
    doc["result"] = result;
    return doc.dump(2) + "\n";
}

std::string cmd_sweep(const Options &o) {
    StabilizerCode code = load_code(o);
    DecoderTable table = load_table(o, code, "symmetric");
    auto [nu, nv] = parse_grid(o.sweep_grid, "--sweep-grid");
    const double theta = o.unitary.value_or(0.01);
    const double dphys = std::abs(std::sin(theta));
    if (dphys == 0) {
        throw std::invalid_argument("sweep needs a nonzero rotation angle");
    }
    std::string fmt = format_of(o, "csv");
    json rows = json::array();
    std::string csv = "u,v,D_prime,D,ratio\n";
    for (size_t i = 0; i < nu; i++) {
        double u = nu == 1 ? 0 : M_PI * double(i) / double(nu - 1);
        for (size_t j = 0; j < nv; j++) {
            double v = 2 * M_PI * double(j) / double(nv);
            KrausList kl = effective_unitary(table, UnitaryNoise::uniform(code.n(), theta, Axis::spherical(u, v)));
            double dl = diamond_distance(kl.channel(), diamond_options(o)).value;
            double ratio = dl / std::pow(dphys, double(code.d()));
            csv += fmt_double(u) + "," + fmt_double(v) + "," + fmt_double(dl) + "," + fmt_double(dphys) + "," +
                   fmt_double(ratio) + "\n";
            rows.push_back({{"u", u}, {"v", v}, {"D_prime", dl}, {"D", dphys}, {"ratio", ratio}});
        }
    }
    if (fmt == "csv") {
        return csv;
    }
    json doc;
    doc["config"] = config_json(o, "sweep", code, &table);
    doc["config"]["theta"] = theta;
    doc["config"]["sweep_grid"] = o.sweep_grid;
    doc["result"] = rows;
    return doc.dump(2) + "\n";
}

json threshold_json(const ThresholdResult &t) {
    json j;
    j["parameter"] = t.parameter;
    j["diamond_distance"] = t.diamond;
    j["infidelity"] = t.infidelity;
    j["bracketed"] = t.bracketed;
    if (t.has_pseudo) {
        j["pseudo_parameter"] = t.pseudo_parameter;
        j["pseudo_diamond_distance"] = t.pseudo_diamond;
        j["pseudo_infidelity"] = t.pseudo_infidelity;
    } else {
        j["pseudo_parameter"] = nullptr;
    }
    return j;
}

PolyMap checked_map(const DecoderTable &table) {
    PolyMap map = effective_model_symbolic(table);
    if (!map.residual_ok) {
        std::string why;
        for (const auto &r : map.residual) {
            why += (why.empty() ? "" : "; ") + r;
        }
        throw std::runtime_error("the decoded channel leaves the model family: " + why);
    }
    return map;
}

std::vector<Family> families_of(const Options &o) {
    if (o.family == "both") {
        return {Family::coherent, Family::incoherent};
    }
    return {parse_family(o.family)};
}

std::string cmd_threshold(const Options &o) {
    StabilizerCode code = load_code(o);
    DecoderTable table = load_table(o, code, "z-only");
    PolyMap map = checked_map(table);
    std::vector<Family> families = families_of(o);
    json doc;
    doc["config"] = config_json(o, "threshold", code, &table);
    doc["config"]["family"] = o.family;
    std::string csv = "family,parameter,D,r,pseudo_parameter,pseudo_D,pseudo_r\n";
    for (Family f : families) {
        ThresholdResult t = threshold(map, f);
        doc["result"][to_string(f)] = threshold_json(t);
        csv += to_string(f) + "," + fmt_double(t.parameter) + "," + fmt_double(t.diamond) + "," +
               fmt_double(t.infidelity) + "," + (t.has_pseudo ? fmt_double(t.pseudo_parameter) : "") + "," +
               (t.has_pseudo ? fmt_double(t.pseudo_diamond) : "") + "," +
               (t.has_pseudo ? fmt_double(t.pseudo_infidelity) : "") + "\n";
    }
    return format_of(o, "json") == "csv" ? csv : doc.dump(2) + "\n";
}

std::string cmd_concat(const Options &o) {
    StabilizerCode code = load_code(o);
    DecoderTable table = load_table(o, code, "z-only");
    PolyMap map = checked_map(table);
    if (o.points < 2) {
        throw std::invalid_argument("--points must be at least 2");
    }
    json doc;
    doc["config"] = config_json(o, "concat", code, &table);
    doc["config"]["family"] = o.family;
    doc["config"]["levels"] = o.levels;
    doc["config"]["points"] = o.points;
    std::string csv = "family,parameter,D,level,D_level\n";
    for (Family f : families_of(o)) {
        // D runs over [0, 1] for both families.
        const double upper = f == Family::coherent ? M_PI / 2 : 1.0;
        json rows = json::array();
        for (size_t i = 0; i < o.points; i++) {
            const double param = upper * double(i) / double(o.points - 1);
            ModelChannel c = family_point(f, param);
            const double d0 = diamond_distance(c);
            json levels = json::array();
            for (size_t k = 0; k <= o.levels; k++) {
                const double dk = diamond_distance(c);
                levels.push_back(dk);
                csv += to_string(f) + "," + fmt_double(param) + "," + fmt_double(d0) + "," + std::to_string(k) + "," +
                       fmt_double(dk) + "\n";
                c = map.apply(c);
            }
            rows.push_back({{"parameter", param}, {"D", d0}, {"D_levels", levels}});
        }
        doc["result"][to_string(f)] = rows;
    }
    return format_of(o, "csv") == "csv" ? csv : doc.dump(2) + "\n";
}

std::string cmd_basin(const Options &o) {
    StabilizerCode code = load_code(o);
    DecoderTable table = load_table(o, code, "z-only");
    PolyMap map = checked_map(table);
    auto [np, nt] = parse_grid(o.grid, "--grid");
    std::vector<BasinCell> cells = basin(map, np, nt);
    if (format_of(o, "csv") == "csv") {
        std::string csv = "p,theta,x0,y0,verdict,iters\n";
        for (const auto &c : cells) {
            csv += fmt_double(c.p) + "," + fmt_double(c.theta) + "," + fmt_double(c.start.x) + "," +
                   fmt_double(c.start.y) + "," + to_string(c.verdict) + "," + std::to_string(c.iterations) + "\n";
        }
        return csv;
    }
    json doc;
    doc["config"] = config_json(o, "basin", code, &table);
    doc["config"]["grid"] = o.grid;
    json rows = json::array();
    for (const auto &c : cells) {
        rows.push_back({{"p", c.p},
                        {"theta", c.theta},
                        {"x0", c.start.x},
                        {"y0", c.start.y},
                        {"verdict", to_string(c.verdict)},
                        {"iters", c.iterations}});
    }
    doc["result"] = rows;
    return doc.dump(2) + "\n";
}

std::string cmd_orbits(const Options &o) {
    StabilizerCode code = load_code(o);
    DecoderTable table = load_table(o, code, "symmetric");
    PermutationGroup group = find_automorphisms(code);
    SyndromeOrbits orbits = syndrome_orbits(table, group);
    json doc;
    doc["config"] = config_json(o, "orbits", code, &table);
    json r;
    r["group_order"] = group.order();
    json gens = json::array();
    for (const auto &g : group.generators) {
        std::vector<int> images;
        for (auto q : g) {
            images.push_back(q + 1);
        }
        gens.push_back(images);
    }
    r["generators"] = gens;
    json orb = json::array();
    for (const auto &ob : orbits.orbits) {
        json members = json::array();
        for (uint64_t s : ob) {
            members.push_back(syndrome_str(s, code.num_generators()));
        }
        orb.push_back(members);
    }
    r["orbits"] = orb;
    r["num_orbits"] = orbits.orbits.size();
    r["violations"] = orbits.violations.size();
    if (!orbits.violations.empty()) {
        r["first_violation"] = orbits.violations.front();
    }
    auto noise = load_noise(o, code.n());
    if (noise) {
        const auto *u = std::get_if<UnitaryNoise>(&*noise);
        if (!u) {
            throw std::invalid_argument("orbit channel check needs unitary noise");
        }
        OrbitChannelCheck check = verify_orbit_channels(table, orbits, *u);
        r["channel_check"] = {{"max_deviation", check.max_deviation},
                              {"equal", check.equal},
                              {"distinct_channels", check.distinct_channels}};
    }
    doc["result"] = r;
    return doc.dump(2) + "\n";
}

std::string cmd_decoder_dump(const Options &o) {
    StabilizerCode code = load_code(o);
    DecoderTable table = load_table(o, code, "symmetric");
    if (format_of(o, "csv") == "csv") {
        return table.to_csv();
    }
    json doc;
    doc["config"] = config_json(o, "decoder-dump", code, &table);
    json rows = json::array();
    for (size_t s = 0; s < table.size(); s++) {
        rows.push_back({{"syndrome", syndrome_str(s, code.num_generators())},
                        {"correction", table.correction(s).letters()},
                        {"weight", table.correction(s).weight()}});
    }
    doc["result"] = rows;
    return doc.dump(2) + "\n";
}

void add_code_options(CLI::App *sub, Options &o) {
    sub->add_option("--code", o.code, "catalog code name")->capture_default_str();
    sub->add_option("--code-file", o.code_file, "code file (n k d name / S / X / Z lines)");
    sub->add_option("--decoder", o.decoder, "symmetric, z-only or symmetry-preserving");
    sub->add_option("--tie-break", o.tie_break, "lexicographic or support-order")->capture_default_str();
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_option("--format", o.format, "json or csv");
    sub->add_option("--seed", o.seed, "optimizer seed")->capture_default_str();
    sub->add_option("--threads", o.threads, "worker threads (0 = default)")->check(CLI::NonNegativeNumber);
}

void add_noise_options(CLI::App *sub, Options &o) {
    sub->add_option("--model", o.model, "model noise, p=..,theta=.. or x=..,y=..");
    sub->add_option("--unitary", o.unitary, "uniform rotation angle theta");
    sub->add_option("--axis", o.axis, "rotation axis ax,ay,az")->capture_default_str();
    sub->add_option("--per-qubit", o.per_qubit, "per-qubit noise file");
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Effective logical channels of stabilizer codes under coherent noise"};
    app.name("coherentqec");
    app.set_config("--config", "", "TOML config file; command-line flags win");
    app.require_subcommand(1);
    Options o;

    CLI::App *channel = app.add_subcommand("channel", "decoded logical channel");
    add_code_options(channel, o);
    add_noise_options(channel, o);
    channel->add_flag("--symbolic", o.symbolic, "exact polynomial map for model noise");
    CLI::Option *cond = channel->add_option("--conditional", o.conditional,
                                            "per-syndrome channels; optionally one syndrome bit string, generator 1 first");
    cond->expected(0, 1);
    channel->add_flag("--kraus", o.kraus, "include per-syndrome Kraus coefficients");
    channel->add_flag("--force-optimizer", o.force_optimizer, "skip the closed-form diamond distance");

    CLI::App *sweep = app.add_subcommand("sweep", "logical diamond distance over rotation axes");
    add_code_options(sweep, o);
    sweep->add_option("--unitary", o.unitary, "rotation angle (default 0.01)");
    sweep->add_option("--sweep-grid", o.sweep_grid, "NU,NV polar by azimuth grid")->capture_default_str();
    sweep->add_flag("--force-optimizer", o.force_optimizer, "skip the closed-form diamond distance");

    CLI::App *thr = app.add_subcommand("threshold", "concatenation thresholds and pseudothresholds");
    add_code_options(thr, o);
    thr->add_option("--family", o.family, "coherent, incoherent or both")->capture_default_str();

    CLI::App *cat = app.add_subcommand("concat", "diamond distance at each concatenation level");
    add_code_options(cat, o);
    cat->add_option("--family", o.family, "coherent, incoherent or both")->capture_default_str();
    cat->add_option("--levels", o.levels, "concatenation levels after the physical one")->capture_default_str();
    cat->add_option("--points", o.points, "parameter grid size")->capture_default_str();

    CLI::App *bas = app.add_subcommand("basin", "convergence verdicts over (p, theta)");
    add_code_options(bas, o);
    bas->add_option("--grid", o.grid, "NP,NT grid size")->capture_default_str();

    CLI::App *orb = app.add_subcommand("orbits", "qubit automorphisms and syndrome orbits");
    add_code_options(orb, o);
    add_noise_options(orb, o);

    CLI::App *dump = app.add_subcommand("decoder-dump", "decoder lookup table");
    add_code_options(dump, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    o.conditional_all = cond->count() > 0;
    try {
        set_thread_count(o.threads);
        std::string text;
        if (*channel) {
            text = cmd_channel(o);
        } else if (*sweep) {
            text = cmd_sweep(o);
        } else if (*thr) {
            text = cmd_threshold(o);
        } else if (*cat) {
            text = cmd_concat(o);
        } else if (*bas) {
            text = cmd_basin(o);
        } else if (*orb) {
            text = cmd_orbits(o);
        } else {
            text = cmd_decoder_dump(o);
        }
        emit(o, text, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace cqec::cli
