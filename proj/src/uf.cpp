// CEC 2009 unconstrained test problems UF1-UF10. Variable indices j in the
// comments are 1-based as in the competition report; x[j - 1] in code.

#include <cmath>
#include <numbers>
#include <span>

#include "dyts/problems.hpp"

namespace dyts::detail {

namespace {

constexpr double kPi = std::numbers::pi;

struct Accum {
    double sum = 0.0;
    double prod = 1.0;
    int count = 0;
};

// Two-objective split: odd j -> J1, even j -> J2, for j = 2..n.
inline int group2(std::size_t j) noexcept { return (j % 2 == 1) ? 0 : 1; }

// Three-objective split for j = 3..n: (j-1)%3==0 -> J1, (j-2)%3==0 -> J2, j%3==0 -> J3.
inline int group3(std::size_t j) noexcept {
    if ((j - 1) % 3 == 0) return 0;
    if ((j - 2) % 3 == 0) return 1;
    return 2;
}

void uf1(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    Accum a[2];
    for (std::size_t j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        auto& g = a[group2(j)];
        g.sum += y * y;
        ++g.count;
    }
    f[0] = x[0] + 2.0 * a[0].sum / a[0].count;
    f[1] = 1.0 - std::sqrt(x[0]) + 2.0 * a[1].sum / a[1].count;
}

void uf2(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    Accum a[2];
    for (std::size_t j = 2; j <= n; ++j) {
        const double amp = 0.3 * x[0] * x[0] * std::cos(24.0 * kPi * x[0] + 4.0 * j * kPi / n) + 0.6 * x[0];
        const double phase = 6.0 * kPi * x[0] + j * kPi / n;
        const int grp = group2(j);
        const double y = x[j - 1] - amp * (grp == 0 ? std::cos(phase) : std::sin(phase));
        a[grp].sum += y * y;
        ++a[grp].count;
    }
    f[0] = x[0] + 2.0 * a[0].sum / a[0].count;
    f[1] = 1.0 - std::sqrt(x[0]) + 2.0 * a[1].sum / a[1].count;
}

void uf3(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    Accum a[2];
    for (std::size_t j = 2; j <= n; ++j) {
        const double expo = 0.5 * (1.0 + 3.0 * (static_cast<double>(j) - 2.0) / (static_cast<double>(n) - 2.0));
        const double y = x[j - 1] - std::pow(x[0], expo);
        auto& g = a[group2(j)];
        g.sum += y * y;
        g.prod *= std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
        ++g.count;
    }
    f[0] = x[0] + 2.0 / a[0].count * (4.0 * a[0].sum - 2.0 * a[0].prod + 2.0);
    f[1] = 1.0 - std::sqrt(x[0]) + 2.0 / a[1].count * (4.0 * a[1].sum - 2.0 * a[1].prod + 2.0);
}

void uf4(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    Accum a[2];
    for (std::size_t j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        const double t = std::fabs(y);
        auto& g = a[group2(j)];
        g.sum += t / (1.0 + std::exp(2.0 * t));
        ++g.count;
    }
    f[0] = x[0] + 2.0 * a[0].sum / a[0].count;
    f[1] = 1.0 - x[0] * x[0] + 2.0 * a[1].sum / a[1].count;
}

void uf5(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    constexpr double N = 10.0;
    constexpr double eps = 0.1;
    Accum a[2];
    for (std::size_t j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        auto& g = a[group2(j)];
        g.sum += 2.0 * y * y - std::cos(4.0 * kPi * y) + 1.0;
        ++g.count;
    }
    const double h = (0.5 / N + eps) * std::fabs(std::sin(2.0 * N * kPi * x[0]));
    f[0] = x[0] + h + 2.0 * a[0].sum / a[0].count;
    f[1] = 1.0 - x[0] + h + 2.0 * a[1].sum / a[1].count;
}

void uf6(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    constexpr double N = 2.0;
    constexpr double eps = 0.1;
    Accum a[2];
    for (std::size_t j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        auto& g = a[group2(j)];
        g.sum += y * y;
        g.prod *= std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
        ++g.count;
    }
    double h = 2.0 * (0.5 / N + eps) * std::sin(2.0 * N * kPi * x[0]);
    if (h < 0.0) h = 0.0;
    f[0] = x[0] + h + 2.0 / a[0].count * (4.0 * a[0].sum - 2.0 * a[0].prod + 2.0);
    f[1] = 1.0 - x[0] + h + 2.0 / a[1].count * (4.0 * a[1].sum - 2.0 * a[1].prod + 2.0);
}

void uf7(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    Accum a[2];
    for (std::size_t j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        auto& g = a[group2(j)];
        g.sum += y * y;
        ++g.count;
    }
    const double r = std::pow(x[0], 0.2);
    f[0] = r + 2.0 * a[0].sum / a[0].count;
    f[1] = 1.0 - r + 2.0 * a[1].sum / a[1].count;
}

// Residual of variable j in the three-objective problems.
inline double uf3obj_y(std::span<const double> x, std::size_t j, std::size_t n) noexcept {
    return x[j - 1] - 2.0 * x[1] * std::sin(2.0 * kPi * x[0] + j * kPi / n);
}

void uf8(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    Accum a[3];
    for (std::size_t j = 3; j <= n; ++j) {
        const double y = uf3obj_y(x, j, n);
        auto& g = a[group3(j)];
        g.sum += y * y;
        ++g.count;
    }
    f[0] = std::cos(0.5 * x[0] * kPi) * std::cos(0.5 * x[1] * kPi) + 2.0 * a[0].sum / a[0].count;
    f[1] = std::cos(0.5 * x[0] * kPi) * std::sin(0.5 * x[1] * kPi) + 2.0 * a[1].sum / a[1].count;
    f[2] = std::sin(0.5 * x[0] * kPi) + 2.0 * a[2].sum / a[2].count;
}

void uf9(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    constexpr double eps = 0.1;
    Accum a[3];
    for (std::size_t j = 3; j <= n; ++j) {
        const double y = uf3obj_y(x, j, n);
        auto& g = a[group3(j)];
        g.sum += y * y;
        ++g.count;
    }
    double bump = (1.0 + eps) * (1.0 - 4.0 * (2.0 * x[0] - 1.0) * (2.0 * x[0] - 1.0));
    if (bump < 0.0) bump = 0.0;
    f[0] = 0.5 * (bump + 2.0 * x[0]) * x[1] + 2.0 * a[0].sum / a[0].count;
    f[1] = 0.5 * (bump - 2.0 * x[0] + 2.0) * x[1] + 2.0 * a[1].sum / a[1].count;
    f[2] = 1.0 - x[1] + 2.0 * a[2].sum / a[2].count;
}

void uf10(std::span<const double> x, std::span<double> f) noexcept {
    const std::size_t n = x.size();
    Accum a[3];
    for (std::size_t j = 3; j <= n; ++j) {
        const double y = uf3obj_y(x, j, n);
        auto& g = a[group3(j)];
        g.sum += 4.0 * y * y - std::cos(8.0 * kPi * y) + 1.0;
        ++g.count;
    }
    f[0] = std::cos(0.5 * x[0] * kPi) * std::cos(0.5 * x[1] * kPi) + 2.0 * a[0].sum / a[0].count;
    f[1] = std::cos(0.5 * x[0] * kPi) * std::sin(0.5 * x[1] * kPi) + 2.0 * a[1].sum / a[1].count;
    f[2] = std::sin(0.5 * x[0] * kPi) + 2.0 * a[2].sum / a[2].count;
}

} // namespace

void evaluate_uf(int which, std::span<const double> x, std::span<double> f) noexcept {
    switch (which) {
    case 1: uf1(x, f); break;
    case 2: uf2(x, f); break;
    case 3: uf3(x, f); break;
    case 4: uf4(x, f); break;
    case 5: uf5(x, f); break;
    case 6: uf6(x, f); break;
    case 7: uf7(x, f); break;
    case 8: uf8(x, f); break;
    case 9: uf9(x, f); break;
    case 10: uf10(x, f); break;
    default: break;
    }
}

} // namespace dyts::detail
