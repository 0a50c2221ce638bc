// eigen.hpp — deterministic cyclic Jacobi eigensolver for small dense
// symmetric matrices, and spectra with tolerance-grouped multiplicities.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "eccentra/symmatrix.hpp"

namespace eccentra {

inline constexpr double kEigTolDefault = 1e-12;   // per-sweep convergence, scaled by n*||A||
inline constexpr double kGroupTolAbs = 1e-8;      // absolute grouping tolerance

// Cyclic Jacobi sweeps over the upper triangle; deterministic order, no
// randomized starts, so runs are bit-reproducible.
inline std::vector<double> jacobi_eigenvalues(const SymMatrix& m, double tol = kEigTolDefault) {
    int n = m.n;
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<double>(m.a[i]);
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double norm = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) norm += at(i, j) * at(i, j);
    norm = std::sqrt(norm);
    const double thresh = (norm == 0) ? 0 : tol * norm * n;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2 * at(i, j) * at(i, j);
        if (std::sqrt(off) <= thresh) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

struct SpectrumGroup {
    double value = 0;  // representative (first member encountered, descending)
    int multiplicity = 0;
};

struct Spectrum {
    std::vector<double> values;        // descending
    std::vector<SpectrumGroup> groups; // tolerance-grouped
    std::vector<std::string> annotations;

    int size() const { return static_cast<int>(values.size()); }
};

inline Spectrum make_spectrum(std::vector<double> values, double group_tol = kGroupTolAbs) {
    std::sort(values.begin(), values.end(), std::greater<double>());
    Spectrum s;
    s.values = std::move(values);
    for (double v : s.values) {
        if (!s.groups.empty() && std::abs(s.groups.back().value - v) <= group_tol)
            ++s.groups.back().multiplicity;
        else
            s.groups.push_back({v, 1});
    }
    return s;
}

inline Spectrum spectrum_of(const SymMatrix& m, double tol = kEigTolDefault) {
    return make_spectrum(jacobi_eigenvalues(m, tol));
}

}  // namespace eccentra
