#include "dyts/problems.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "dyts/error.hpp"

namespace dyts {

namespace {

constexpr std::array<std::string_view, kProblemCount> kNames{
    "UF1",  "UF2",  "UF3",  "UF4",  "UF5",  "UF6",  "UF7",  "UF8",  "UF9", "UF10",
    "WFG1", "WFG2", "WFG3", "WFG4", "WFG5", "WFG6", "WFG7", "WFG8", "WFG9"};

constexpr std::size_t kUfVariables = 30;
constexpr std::size_t kWfgPosition = 18;
constexpr std::size_t kWfgDistance = 20;

int uf_index(ProblemId id) noexcept { return static_cast<int>(id) - static_cast<int>(ProblemId::UF1) + 1; }
int wfg_index(ProblemId id) noexcept { return static_cast<int>(id) - static_cast<int>(ProblemId::WFG1) + 1; }

} // namespace

std::string_view problem_name(ProblemId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<ProblemId> parse_problem(std::string_view text) {
    std::string key;
    for (char c : text) key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == key) return static_cast<ProblemId>(i);
    }
    return std::nullopt;
}

std::vector<ProblemId> all_problems() {
    std::vector<ProblemId> out;
    for (std::size_t i = 0; i < kProblemCount; ++i) out.push_back(static_cast<ProblemId>(i));
    return out;
}

bool is_wfg(ProblemId id) noexcept { return static_cast<int>(id) >= static_cast<int>(ProblemId::WFG1); }

Bounds problem_bounds(ProblemId id) {
    Bounds b;
    if (is_wfg(id)) {
        const std::size_t n = kWfgPosition + kWfgDistance;
        b.lower.assign(n, 0.0);
        b.upper.resize(n);
        for (std::size_t j = 0; j < n; ++j) b.upper[j] = 2.0 * static_cast<double>(j + 1);
        return b;
    }
    const std::size_t n = kUfVariables;
    b.lower.assign(n, 0.0);
    b.upper.assign(n, 1.0);
    switch (id) {
    case ProblemId::UF1: case ProblemId::UF2: case ProblemId::UF5:
    case ProblemId::UF6: case ProblemId::UF7:
        std::fill(b.lower.begin() + 1, b.lower.end(), -1.0);
        break;
    case ProblemId::UF3:
        break;
    case ProblemId::UF4:
        std::fill(b.lower.begin() + 1, b.lower.end(), -2.0);
        std::fill(b.upper.begin() + 1, b.upper.end(), 2.0);
        break;
    case ProblemId::UF8: case ProblemId::UF9: case ProblemId::UF10:
        std::fill(b.lower.begin() + 2, b.lower.end(), -2.0);
        std::fill(b.upper.begin() + 2, b.upper.end(), 2.0);
        break;
    default:
        break;
    }
    return b;
}

Problem::Problem(ProblemId id) : id_(id), bounds_(problem_bounds(id)) {
    if (is_wfg(id)) {
        m_ = 2;
        wfg_k_ = kWfgPosition;
    } else {
        const int which = uf_index(id);
        m_ = which >= 8 ? 3 : 2;
    }
}

Vec Problem::evaluate(std::span<const double> x) const {
    if (x.size() != bounds_.size()) {
        throw ParameterError(std::string(name()) + " expects " + std::to_string(bounds_.size()) +
                             " variables, got " + std::to_string(x.size()));
    }
    if (!bounds_.contains(x)) {
        throw ParameterError(std::string(name()) + ": decision vector outside bounds");
    }
    Vec f(m_);
    evaluate_into(x, f);
    return f;
}

void Problem::evaluate_into(std::span<const double> x, std::span<double> out) const noexcept {
    if (is_wfg(id_)) {
        detail::evaluate_wfg(wfg_index(id_), wfg_k_, x, out.first(m_));
    } else {
        detail::evaluate_uf(uf_index(id_), x, out.first(m_));
    }
}

// ---- Pareto front sampling ----------------------------------------------

namespace {

using Point2 = std::array<double, 2>;

Point2 front_curve(ProblemId id, double t) {
    if (is_wfg(id)) {
        return detail::wfg_front_point(wfg_index(id), t);
    }
    switch (id) {
    case ProblemId::UF1: case ProblemId::UF2: case ProblemId::UF3:
        // Grid on sqrt(f1): close to arc length for f2 = 1 - sqrt(f1).
        return {t * t, 1.0 - t};
    case ProblemId::UF4:
        return {t, 1.0 - t * t};
    case ProblemId::UF6: {
        double h = 0.7 * std::sin(4.0 * std::numbers::pi * t);
        if (h < 0.0) h = 0.0;
        return {t + h, 1.0 - t + h};
    }
    default:
        return {t, 1.0 - t};
    }
}

struct Run {
    std::size_t first;
    std::size_t last;
    double length;
};

std::vector<Vec> sample_two_objective(ProblemId id, std::size_t count) {
    const std::size_t grid = std::max<std::size_t>(200000, 20 * count);
    std::vector<Point2> pts(grid + 1);
    for (std::size_t i = 0; i <= grid; ++i) {
        pts[i] = front_curve(id, static_cast<double>(i) / static_cast<double>(grid));
    }
    // A curve point is on the front if no other curve point dominates it.
    // Sorting by (f1, f2) lets a running minimum of f2 decide that.
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pts[a] < pts[b];
    });
    std::vector<char> keep(pts.size(), 0);
    double best_f2 = std::numeric_limits<double>::infinity();
    for (std::size_t idx : order) {
        if (pts[idx][1] < best_f2) {
            keep[idx] = 1;
            best_f2 = pts[idx][1];
        }
    }
    std::vector<Run> runs;
    for (std::size_t i = 0; i <= grid; ++i) {
        if (!keep[i]) continue;
        if (!runs.empty() && runs.back().last + 1 == i) {
            const Point2& a = pts[i - 1];
            const Point2& b = pts[i];
            runs.back().length += std::hypot(b[0] - a[0], b[1] - a[1]);
            runs.back().last = i;
        } else {
            runs.push_back({i, i, 0.0});
        }
    }
    const double total = std::accumulate(runs.begin(), runs.end(), 0.0,
                                         [](double s, const Run& r) { return s + r.length; });
    // Largest-remainder allocation with at least one point per run.
    std::vector<std::size_t> alloc(runs.size(), 1);
    std::size_t remaining = count > runs.size() ? count - runs.size() : 0;
    if (total > 0.0 && remaining > 0) {
        std::vector<std::pair<double, std::size_t>> frac;
        std::size_t used = 0;
        for (std::size_t r = 0; r < runs.size(); ++r) {
            const double share = static_cast<double>(remaining) * runs[r].length / total;
            const auto whole = static_cast<std::size_t>(std::floor(share));
            alloc[r] += whole;
            used += whole;
            frac.emplace_back(share - static_cast<double>(whole), r);
        }
        std::stable_sort(frac.begin(), frac.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        for (std::size_t i = 0; used < remaining && i < frac.size(); ++i, ++used) {
            ++alloc[frac[i].second];
        }
    }
    std::vector<Vec> out;
    out.reserve(count);
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const double t0 = static_cast<double>(runs[r].first) / static_cast<double>(grid);
        const double t1 = static_cast<double>(runs[r].last) / static_cast<double>(grid);
        const std::size_t c = alloc[r];
        for (std::size_t i = 0; i < c; ++i) {
            const double t = c == 1 ? t0 : t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(c - 1);
            const Point2 p = front_curve(id, t);
            out.push_back({p[0], p[1]});
        }
    }
    return out;
}

std::size_t lattice_size(std::size_t H) { return (H + 1) * (H + 2) / 2; }

std::vector<std::array<double, 3>> simplex_lattice(std::size_t H) {
    std::vector<std::array<double, 3>> out;
    const double h = static_cast<double>(H);
    for (std::size_t i = 0; i <= H; ++i) {
        for (std::size_t j = 0; j + i <= H; ++j) {
            const std::size_t k = H - i - j;
            out.push_back({static_cast<double>(i) / h, static_cast<double>(j) / h, static_cast<double>(k) / h});
        }
    }
    return out;
}

bool uf9_on_front(const std::array<double, 3>& w) {
    constexpr double tol = 1e-12;
    const double span = 1.0 - w[2];
    return w[0] <= 0.25 * span + tol || w[0] >= 0.75 * span - tol;
}

std::vector<Vec> sample_three_objective(ProblemId id, std::size_t count) {
    std::vector<Vec> out;
    if (id == ProblemId::UF9) {
        std::size_t H = 1;
        while (true) {
            std::size_t kept = 0;
            for (const auto& w : simplex_lattice(H + 1)) kept += uf9_on_front(w) ? 1 : 0;
            if (kept > count) break;
            ++H;
        }
        for (const auto& w : simplex_lattice(H)) {
            if (uf9_on_front(w)) out.push_back({w[0], w[1], w[2]});
        }
        return out;
    }
    std::size_t H = 1;
    while (lattice_size(H + 1) <= count) ++H;
    for (const auto& w : simplex_lattice(H)) {
        const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
        out.push_back({w[0] / norm, w[1] / norm, w[2] / norm});
    }
    return out;
}

} // namespace

std::vector<Vec> sample_true_pf(const Problem& problem, std::size_t count) {
    if (count < 2) {
        throw ParameterError("front sampling needs at least two points");
    }
    if (problem.id() == ProblemId::UF5) {
        std::vector<Vec> out;
        for (int i = 0; i <= 20; ++i) {
            const double f1 = static_cast<double>(i) / 20.0;
            out.push_back({f1, 1.0 - f1});
        }
        return out;
    }
    if (problem.num_objectives() == 3) {
        return sample_three_objective(problem.id(), count);
    }
    return sample_two_objective(problem.id(), count);
}

} // namespace dyts
