#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "plancherel/characters.hpp"
#include "plancherel/coefficients.hpp"
#include "plancherel/kernels.hpp"
#include "plancherel/signatures.hpp"

namespace plancherel {

struct CalibrationFit {
    GroupFamily family;
    double kappa = 1.0;       // +-2^exponent
    int exponent = 0;
    double raw_mean = 1.0;    // mean quadrature / closed-form ratio
    double spread = 0.0;      // max relative deviation among the ratios
    std::vector<double> ratios;

    bool accepted(double max_spread = 1e-7, int max_exponent = 3) const {
        return spread <= max_spread && std::abs(exponent) <= max_exponent &&
               std::fabs(raw_mean - kappa) <= max_spread * std::fabs(kappa);
    }
};

inline std::vector<SpectralParameter> calibration_points(GroupFamily f) {
    const int n = f.rank;
    switch (f.tag) {
        case Family::U: return {SpectralParameter::U(n, 0.2, 0.1), SpectralParameter::U(n, -0.15, 0.35)};
        case Family::O: return {SpectralParameter::O(n, 0.2), SpectralParameter::O(n, 0.35)};
        case Family::Sp: return {SpectralParameter::Sp(n, 0.2), SpectralParameter::Sp(n, 0.35)};
    }
    return {};
}

// The `count` signatures closest to the trivial one (l1 distance, ties by order).
inline std::vector<Signature> smallest_signatures(GroupFamily f, std::size_t count = 10) {
    const Signature triv = trivial_signature(f);
    auto dist = [&](const Signature& s) {
        int d = 0;
        for (int j = 0; j < f.rank; ++j) d += std::abs(s[j] - triv[j]);
        return d;
    };
    std::vector<Signature> all;
    for (int bound = f.rank + 1;; bound *= 2) {
        all = enumerate_signatures(f, bound);
        // every signature within the distance of the count-th one must be present
        if (all.size() >= 4 * count) break;
    }
    std::stable_sort(all.begin(), all.end(), [&](const Signature& a, const Signature& b) { return dist(a) < dist(b); });
    all.resize(std::min(count, all.size()));
    return all;
}

// <ell, chi> by the most accurate available quadrature: adaptive for rank 1,
// graded tensor trapezoid otherwise.
inline std::vector<cplx> quadrature_coefficients(const SpectralParameter& p, const std::vector<Signature>& sigs,
                                                 int points_per_dimension = 512) {
    auto f = [&](const TorusPoint& t) { return ell(p, t); };
    if (p.family.rank == 1) {
        std::vector<cplx> r;
        for (const auto& s : sigs) r.push_back(project_harmonic_adaptive(f, s));
        return r;
    }
    QuadratureGrid grid;
    grid.family = p.family;
    grid.points_per_dimension = points_per_dimension;
    grid.spacing = Spacing::Graded;
    return project_harmonics(f, sigs, grid);
}

inline CalibrationFit fit_calibration(GroupFamily f, int points_per_dimension = 512) {
    CalibrationFit fit;
    fit.family = f;
    const auto sigs = smallest_signatures(f);
    double imag_dev = 0.0;
    for (const auto& p : calibration_points(f)) {
        const auto q = quadrature_coefficients(p, sigs, points_per_dimension);
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            const double c = coefficient(p, sigs[i]);
            fit.ratios.push_back(q[i].real() / c);
            imag_dev = std::max(imag_dev, std::fabs(q[i].imag() / c));
        }
    }
    double sum = 0.0;
    for (double r : fit.ratios) sum += r;
    fit.raw_mean = sum / static_cast<double>(fit.ratios.size());
    fit.spread = imag_dev / std::fabs(fit.raw_mean);
    for (double r : fit.ratios) fit.spread = std::max(fit.spread, std::fabs(r - fit.raw_mean) / std::fabs(fit.raw_mean));
    fit.exponent = static_cast<int>(std::lround(std::log2(std::fabs(fit.raw_mean))));
    fit.kappa = std::copysign(std::ldexp(1.0, fit.exponent), fit.raw_mean);
    return fit;
}

}  // namespace plancherel
