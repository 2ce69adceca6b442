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

#include "cqec/concat.h"

#include <cmath>
#include <stdexcept>

#include "cqec/metrics.h"

namespace cqec {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::converged_to_zero:
            return "converged_to_zero";
        case Verdict::diverged:
            return "diverged";
        case Verdict::max_iter:
            return "max_iter";
    }
    return "?";
}

Family parse_family(const std::string &text) {
    if (text == "coherent") {
        return Family::coherent;
    }
    if (text == "incoherent") {
        return Family::incoherent;
    }
    throw std::invalid_argument("unknown family '" + text + "'");
}

std::string to_string(Family f) {
    return f == Family::coherent ? "coherent" : "incoherent";
}

ModelChannel family_point(Family f, double parameter) {
    return f == Family::coherent ? model_from_p_theta(0, parameter) : model_from_p_theta(parameter, 0);
}

Trajectory iterate(const PolyMap &map, ModelChannel start, const IterateOptions &opt) {
    require_completely_positive(start);
    Trajectory t;
    t.points.push_back(start);
    const double d0 = diamond_distance(start);
    if (d0 < opt.zero_tol) {
        t.verdict = Verdict::converged_to_zero;
        return t;
    }
    const double escape = std::max(d0, 0.999);
    size_t above = 0;
    size_t stalled = 0;
    ModelChannel cur = start;
    for (size_t it = 1; it <= opt.max_iter; it++) {
        const ModelChannel prev = cur;
        cur = map.apply(cur);
        t.points.push_back(cur);
        t.iterations = it;
        double d = diamond_distance(cur);
        if (!std::isfinite(d)) {
            t.verdict = Verdict::diverged;
            return t;
        }
        if (d < opt.zero_tol) {
            t.verdict = Verdict::converged_to_zero;
            return t;
        }
        above = d > escape ? above + 1 : 0;
        // A nonzero fixed point (x = 1/2 for most codes) never reaches zero.
        stalled = std::abs(cur.x - prev.x) + std::abs(cur.y - prev.y) <= opt.stall_tol ? stalled + 1 : 0;
        if (above >= opt.persistence || stalled >= opt.persistence) {
            t.verdict = Verdict::diverged;
            return t;
        }
    }
    t.verdict = Verdict::max_iter;
    return t;
}

ThresholdResult threshold(const PolyMap &map, Family family, const ThresholdOptions &opt) {
    ThresholdResult out;
    out.family = family;
    const double upper = opt.upper > 0 ? opt.upper : (family == Family::coherent ? M_PI / 4 : 0.5);
    auto converges = [&](double param) {
        return iterate(map, family_point(family, param), opt.iterate).verdict == Verdict::converged_to_zero;
    };

    double lo = 0, hi = upper;
    bool seen_fail = false;
    for (size_t i = 1; i <= opt.scan_points; i++) {
        double param = upper * double(i) / double(opt.scan_points);
        bool ok = converges(param);
        if (ok && seen_fail) {
            throw std::runtime_error("converging " + to_string(family) +
                                     " parameters do not form an interval; probe at " + std::to_string(param));
        }
        if (!ok && !seen_fail) {
            seen_fail = true;
            hi = param;
        }
        if (ok) {
            lo = param;
        }
    }
    out.bracketed = seen_fail;
    if (seen_fail) {
        while (hi - lo > opt.bracket) {
            double mid = 0.5 * (lo + hi);
            (converges(mid) ? lo : hi) = mid;
        }
        out.parameter = 0.5 * (lo + hi);
    } else {
        out.parameter = upper;
    }
    ModelChannel at = family_point(family, out.parameter);
    out.diamond = diamond_distance(at);
    out.infidelity = infidelity(at);

    const double pupper = opt.pseudo_upper > 0 ? opt.pseudo_upper : (family == Family::coherent ? M_PI / 2 : 1.0);
    auto gap = [&](double param) {
        ModelChannel c = family_point(family, param);
        return diamond_distance(map.apply(c)) - diamond_distance(c);
    };
    double prev = pupper / double(opt.pseudo_scan_points);
    if (gap(prev) < 0) {
        for (size_t i = 2; i <= opt.pseudo_scan_points; i++) {
            double param = pupper * double(i) / double(opt.pseudo_scan_points);
            if (gap(param) >= 0) {
                double a = prev, b = param;
                for (int it = 0; it < 200 && b - a > 1e-14; it++) {
                    double mid = 0.5 * (a + b);
                    (gap(mid) < 0 ? a : b) = mid;
                }
                out.has_pseudo = true;
                out.pseudo_parameter = 0.5 * (a + b);
                ModelChannel c = family_point(family, out.pseudo_parameter);
                out.pseudo_diamond = diamond_distance(c);
                out.pseudo_infidelity = infidelity(c);
                break;
            }
            prev = param;
        }
    }
    return out;
}

std::vector<BasinCell> basin(const PolyMap &map, size_t np, size_t nt, const IterateOptions &opt) {
    if (np == 0 || nt == 0) {
        throw std::invalid_argument("basin grid must be at least 1 x 1");
    }
    std::vector<BasinCell> cells(np * nt);
    CQEC_OMP_PRAGMA("omp parallel for schedule(dynamic, 16) num_threads(thread_count())")
    for (long long idx = 0; idx < (long long)cells.size(); idx++) {
        size_t i = size_t(idx) / nt, j = size_t(idx) % nt;
        BasinCell &c = cells[idx];
        c.p = np == 1 ? 0 : 0.5 * double(i) / double(np - 1);
        c.theta = nt == 1 ? 0 : (M_PI / 4) * double(j) / double(nt - 1);
        c.start = model_from_p_theta(c.p, c.theta);
        Trajectory t = iterate(map, c.start, opt);
        c.verdict = t.verdict;
        c.iterations = t.iterations;
    }
    return cells;
}

}  // namespace cqec
