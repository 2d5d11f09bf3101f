// Walking Fish Group toolkit problems WFG1-WFG9 with M objectives, k position
// and l = n - k distance parameters. Decision variable z_i lives in [0, 2i].

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numbers>
#include <span>

#include "dyts/problems.hpp"

namespace dyts::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxVars = 128;
constexpr std::size_t kMaxObjs = 8;

using Buffer = std::array<double, kMaxVars>;

// Snaps values that drifted just outside [0, 1] by rounding.
double correct_to_01(double a) noexcept {
    constexpr double eps = 1.0e-10;
    if (a <= 0.0 && a >= -eps) return 0.0;
    if (a >= 1.0 && a <= 1.0 + eps) return 1.0;
    return a;
}

// ---- transformation functions -------------------------------------------

double b_poly(double y, double alpha) noexcept { return correct_to_01(std::pow(y, alpha)); }

double b_flat(double y, double A, double B, double C) noexcept {
    const double t1 = std::min(0.0, std::floor(y - B)) * A * (B - y) / B;
    const double t2 = std::min(0.0, std::floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C);
    return correct_to_01(A + t1 - t2);
}

double b_param(double y, double u, double A, double B, double C) noexcept {
    const double v = A - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + A);
    return correct_to_01(std::pow(y, B + (C - B) * v));
}

double s_linear(double y, double A) noexcept {
    return correct_to_01(std::fabs(y - A) / std::fabs(std::floor(A - y) + A));
}

double s_decept(double y, double A, double B, double C) noexcept {
    const double t1 = std::floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B);
    const double t2 = std::floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B);
    return correct_to_01(1.0 + (std::fabs(y - A) - B) * (t1 + t2 + 1.0 / B));
}

double s_multi(double y, double A, double B, double C) noexcept {
    const double t1 = std::fabs(y - C) / (2.0 * (std::floor(C - y) + C));
    const double t2 = (4.0 * A + 2.0) * kPi * (0.5 - t1);
    return correct_to_01((1.0 + std::cos(t2) + 4.0 * B * t1 * t1) / (B + 2.0));
}

double r_sum(std::span<const double> y, std::span<const double> w) noexcept {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return correct_to_01(num / den);
}

double r_sum_unit(std::span<const double> y) noexcept {
    double num = 0.0;
    for (double v : y) num += v;
    return correct_to_01(num / static_cast<double>(y.size()));
}

double r_nonsep(std::span<const double> y, std::size_t A) noexcept {
    const std::size_t n = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 2 <= A; ++k) {
            num += std::fabs(y[j] - y[(j + k + 1) % n]);
        }
    }
    const double half = std::ceil(static_cast<double>(A) / 2.0);
    const double Ad = static_cast<double>(A);
    const double den = static_cast<double>(n) * half * (1.0 + 2.0 * Ad - 2.0 * half) / Ad;
    return correct_to_01(num / den);
}

// ---- shape functions (m is 1-based) -------------------------------------

double shape_linear(std::span<const double> x, std::size_t m) noexcept {
    const std::size_t M = x.size();
    double r = 1.0;
    for (std::size_t i = 1; i <= M - m; ++i) r *= x[i - 1];
    if (m != 1) r *= 1.0 - x[M - m];
    return correct_to_01(r);
}

double shape_convex(std::span<const double> x, std::size_t m) noexcept {
    const std::size_t M = x.size();
    double r = 1.0;
    for (std::size_t i = 1; i <= M - m; ++i) r *= 1.0 - std::cos(x[i - 1] * kPi / 2.0);
    if (m != 1) r *= 1.0 - std::sin(x[M - m] * kPi / 2.0);
    return correct_to_01(r);
}

double shape_concave(std::span<const double> x, std::size_t m) noexcept {
    const std::size_t M = x.size();
    double r = 1.0;
    for (std::size_t i = 1; i <= M - m; ++i) r *= std::sin(x[i - 1] * kPi / 2.0);
    if (m != 1) r *= std::cos(x[M - m] * kPi / 2.0);
    return correct_to_01(r);
}

double shape_mixed(std::span<const double> x, double A, double alpha) noexcept {
    const double t = 2.0 * A * kPi;
    return correct_to_01(std::pow(1.0 - x[0] - std::cos(t * x[0] + kPi / 2.0) / t, alpha));
}

double shape_disc(std::span<const double> x, double A, double alpha, double beta) noexcept {
    const double c = std::cos(A * std::pow(x[0], beta) * kPi);
    return correct_to_01(1.0 - std::pow(x[0], alpha) * c * c);
}

// ---- transformation stages ----------------------------------------------

// Position groups have k / (M - 1) members each.
struct Layout {
    std::size_t n;
    std::size_t k;
    std::size_t M;
    std::size_t group() const noexcept { return k / (M - 1); }
};

void t_linear_distance(Buffer& y, const Layout& L) noexcept {
    for (std::size_t i = L.k; i < L.n; ++i) y[i] = s_linear(y[i], 0.35);
}

// Pairs of distance parameters collapse into one; returns the new length.
std::size_t t_nonsep_pairs(Buffer& y, const Layout& L) noexcept {
    const std::size_t l = L.n - L.k;
    Buffer out = y;
    for (std::size_t i = L.k + 1; i <= L.k + l / 2; ++i) {
        const std::size_t head = L.k + 2 * (i - L.k) - 2;
        out[i - 1] = r_nonsep(std::span<const double>(y.data() + head, 2), 2);
    }
    y = out;
    return L.k + l / 2;
}

// Unit-weight reduction to M values; `len` is the current vector length.
void t_reduce_sum(Buffer& y, std::size_t len, const Layout& L, std::array<double, kMaxObjs>& t) noexcept {
    const std::size_t g = L.group();
    for (std::size_t i = 0; i + 1 < L.M; ++i) {
        t[i] = r_sum_unit(std::span<const double>(y.data() + i * g, g));
    }
    t[L.M - 1] = r_sum_unit(std::span<const double>(y.data() + L.k, len - L.k));
}

void t_reduce_nonsep(Buffer& y, const Layout& L, std::array<double, kMaxObjs>& t) noexcept {
    const std::size_t g = L.group();
    for (std::size_t i = 0; i + 1 < L.M; ++i) {
        t[i] = r_nonsep(std::span<const double>(y.data() + i * g, g), g);
    }
    t[L.M - 1] = r_nonsep(std::span<const double>(y.data() + L.k, L.n - L.k), L.n - L.k);
}

enum class Shape { Wfg1, Wfg2, Linear, Concave };

void finish(const std::array<double, kMaxObjs>& t, const Layout& L, Shape shape,
            std::span<double> f) noexcept {
    const std::size_t M = L.M;
    std::array<double, kMaxObjs> x{};
    // Degeneracy constants are all 1 for the problems configured here
    // (WFG3's single non-zero A_1 covers the whole position block when M = 2).
    for (std::size_t i = 0; i + 1 < M; ++i) {
        const double A = (shape == Shape::Linear && i > 0) ? 0.0 : 1.0;
        x[i] = std::max(t[M - 1], A) * (t[i] - 0.5) + 0.5;
    }
    x[M - 1] = t[M - 1];
    const std::span<const double> xs(x.data(), M);
    for (std::size_t m = 1; m <= M; ++m) {
        double h = 0.0;
        switch (shape) {
        case Shape::Wfg1:
            h = m < M ? shape_convex(xs, m) : shape_mixed(xs, 5.0, 1.0);
            break;
        case Shape::Wfg2:
            h = m < M ? shape_convex(xs, m) : shape_disc(xs, 5.0, 1.0, 1.0);
            break;
        case Shape::Linear:
            h = shape_linear(xs, m);
            break;
        case Shape::Concave:
            h = shape_concave(xs, m);
            break;
        }
        f[m - 1] = x[M - 1] + 2.0 * static_cast<double>(m) * h;
    }
}

} // namespace

void evaluate_wfg(int which, std::size_t k, std::span<const double> z, std::span<double> f) noexcept {
    const Layout L{z.size(), k, f.size()};
    assert(L.n <= kMaxVars && L.M <= kMaxObjs);
    Buffer y{};
    for (std::size_t i = 0; i < L.n; ++i) {
        y[i] = z[i] / (2.0 * static_cast<double>(i + 1));
    }
    std::array<double, kMaxObjs> t{};
    constexpr double kParamA = 0.98 / 49.98;

    switch (which) {
    case 1: {
        t_linear_distance(y, L);
        for (std::size_t i = L.k; i < L.n; ++i) y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
        for (std::size_t i = 0; i < L.n; ++i) y[i] = b_poly(y[i], 0.02);
        Buffer w{};
        for (std::size_t i = 0; i < L.n; ++i) w[i] = 2.0 * static_cast<double>(i + 1);
        const std::size_t g = L.group();
        for (std::size_t i = 0; i + 1 < L.M; ++i) {
            t[i] = r_sum(std::span<const double>(y.data() + i * g, g),
                         std::span<const double>(w.data() + i * g, g));
        }
        t[L.M - 1] = r_sum(std::span<const double>(y.data() + L.k, L.n - L.k),
                           std::span<const double>(w.data() + L.k, L.n - L.k));
        finish(t, L, Shape::Wfg1, f);
        return;
    }
    case 2:
    case 3: {
        t_linear_distance(y, L);
        const std::size_t len = t_nonsep_pairs(y, L);
        t_reduce_sum(y, len, L, t);
        finish(t, L, which == 2 ? Shape::Wfg2 : Shape::Linear, f);
        return;
    }
    case 4:
        for (std::size_t i = 0; i < L.n; ++i) y[i] = s_multi(y[i], 30.0, 10.0, 0.35);
        t_reduce_sum(y, L.n, L, t);
        break;
    case 5:
        for (std::size_t i = 0; i < L.n; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
        t_reduce_sum(y, L.n, L, t);
        break;
    case 6:
        t_linear_distance(y, L);
        t_reduce_nonsep(y, L, t);
        break;
    case 7: {
        Buffer out = y;
        for (std::size_t i = 0; i < L.k; ++i) {
            const double u = r_sum_unit(std::span<const double>(y.data() + i + 1, L.n - i - 1));
            out[i] = b_param(y[i], u, kParamA, 0.02, 50.0);
        }
        y = out;
        t_linear_distance(y, L);
        t_reduce_sum(y, L.n, L, t);
        break;
    }
    case 8: {
        Buffer out = y;
        for (std::size_t i = L.k; i < L.n; ++i) {
            const double u = r_sum_unit(std::span<const double>(y.data(), i));
            out[i] = b_param(y[i], u, kParamA, 0.02, 50.0);
        }
        y = out;
        t_linear_distance(y, L);
        t_reduce_sum(y, L.n, L, t);
        break;
    }
    case 9: {
        Buffer out = y;
        for (std::size_t i = 0; i + 1 < L.n; ++i) {
            const double u = r_sum_unit(std::span<const double>(y.data() + i + 1, L.n - i - 1));
            out[i] = b_param(y[i], u, kParamA, 0.02, 50.0);
        }
        y = out;
        for (std::size_t i = 0; i < L.k; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
        for (std::size_t i = L.k; i < L.n; ++i) y[i] = s_multi(y[i], 30.0, 95.0, 0.35);
        t_reduce_nonsep(y, L, t);
        break;
    }
    default:
        return;
    }
    finish(t, L, Shape::Concave, f);
}

std::array<double, 2> wfg_front_point(int which, double t) noexcept {
    const std::array<double, 2> x{t, 0.0};
    const std::span<const double> xs(x.data(), 2);
    double h1 = 0.0;
    double h2 = 0.0;
    switch (which) {
    case 1:
        h1 = shape_convex(xs, 1);
        h2 = shape_mixed(xs, 5.0, 1.0);
        break;
    case 2:
        h1 = shape_convex(xs, 1);
        h2 = shape_disc(xs, 5.0, 1.0, 1.0);
        break;
    case 3:
        h1 = shape_linear(xs, 1);
        h2 = shape_linear(xs, 2);
        break;
    default:
        h1 = shape_concave(xs, 1);
        h2 = shape_concave(xs, 2);
        break;
    }
    return {2.0 * h1, 4.0 * h2};
}

} // namespace dyts::detail
