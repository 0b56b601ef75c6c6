#pragma once

// Test-only oracles: closed-form spectra computed by direct enumeration over
// mode indices, independent of the library's assembly and solver paths.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

using Spectrum = std::vector<std::pair<double, int>>;  // (eigenvalue, multiplicity)

inline Spectrum group(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    Spectrum spec;
    for (double v : values) {
        if (!spec.empty() && std::abs(v - spec.back().first) <= 1e-9 * std::max(1.0, v))
            spec.back().second += 1;
        else
            spec.push_back({v, 1});
    }
    return spec;
}

// -Laplace eigenvalues k^2 / r^2, k = 0..num_modes, with multiplicity 2 for
// k >= 1 (cos and sin).
inline Spectrum circle_laplace(int num_modes, double r) {
    std::vector<double> values{0.0};
    for (int k = 1; k <= num_modes; ++k) {
        values.push_back(double(k) * k / (r * r));
        values.push_back(double(k) * k / (r * r));
    }
    return group(std::move(values));
}

// |2 pi k1 / L1|^2 + |2 pi k2 / L2|^2 over the truncated integer lattice.
inline Spectrum torus_laplace(int m1, int m2, double L1, double L2) {
    std::vector<double> values;
    for (int k1 = -m1; k1 <= m1; ++k1) {
        for (int k2 = -m2; k2 <= m2; ++k2) {
            const double w1 = 2.0 * kPi * k1 / L1;
            const double w2 = 2.0 * kPi * k2 / L2;
            values.push_back(w1 * w1 + w2 * w2);
        }
    }
    return group(std::move(values));
}

// l(l+1) / r^2 with multiplicity 2l+1.
inline Spectrum sphere_laplace(int max_degree, double r) {
    Spectrum spec;
    for (int l = 0; l <= max_degree; ++l)
        spec.push_back({l * (l + 1.0) / (r * r), 2 * l + 1});
    return spec;
}

// First `count` eigenvalues, each repeated by multiplicity.
inline std::vector<double> flatten(const Spectrum& spec, int count) {
    std::vector<double> out;
    for (const auto& [value, mult] : spec) {
        for (int i = 0; i < mult && static_cast<int>(out.size()) < count; ++i)
            out.push_back(value);
        if (static_cast<int>(out.size()) >= count) break;
    }
    return out;
}

// Pencil eigenvalues nu^2 + c*nu + shift of Lap^2 - div(c g^{-1} d) + shift,
// enumerated over a -Laplace spectrum and re-sorted.
inline std::vector<double> quartic_pencil(const Spectrum& laplace, double c, double shift,
                                          int count) {
    std::vector<double> values;
    for (const auto& [nu, mult] : laplace)
        for (int i = 0; i < mult; ++i) values.push_back(nu * nu + c * nu + shift);
    std::sort(values.begin(), values.end());
    values.resize(std::min<std::size_t>(values.size(), count));
    return values;
}

}  // namespace oracle
