#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "plancherel/errors.hpp"
#include "plancherel/signatures.hpp"

namespace plancherel {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angles are read mod 2 pi everywhere; O and Sp also identify psi with -psi.
struct TorusPoint {
    GroupFamily family;
    std::vector<double> angles;
};

inline double circle_distance(double a, double b) {
    double d = std::fmod(std::fabs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

// Smallest separation between angles (and their negatives for O/Sp).
inline double distinctness_gap(const TorusPoint& t) {
    double g = std::numeric_limits<double>::infinity();
    const auto& a = t.angles;
    const bool reflect = t.family.tag != Family::U;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = j + 1; k < a.size(); ++k) {
            g = std::min(g, circle_distance(a[j], a[k]));
            if (reflect) g = std::min(g, circle_distance(a[j], -a[k]));
        }
    return g;
}

namespace detail {

inline double hadamard_bound(const Eigen::MatrixXcd& m) {
    double b = 1.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) b *= m.row(r).norm();
    return b;
}

inline Eigen::MatrixXcd numerator_matrix(const Signature& sig, const std::vector<double>& psi) {
    const int n = sig.rank();
    Eigen::MatrixXcd a(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const double x = sig[j] * psi[k];
            switch (sig.family().tag) {
                case Family::U: a(j, k) = std::polar(1.0, x); break;
                case Family::O: a(j, k) = std::cos(x); break;
                case Family::Sp: a(j, k) = std::sin(x); break;
            }
        }
    return a;
}

// Reference alternant, built from the trivial signature so that chi_trivial == 1.
inline Eigen::MatrixXcd denominator_matrix(GroupFamily f, const std::vector<double>& psi) {
    return numerator_matrix(trivial_signature(f), psi);
}

inline bool degenerate(cplx den, const Eigen::MatrixXcd& d) { return std::abs(den) <= 1e-12 * hadamard_bound(d); }

inline void check_rank(const Signature& sig, const TorusPoint& t) {
    if (sig.family() != t.family) throw DimensionMismatch("signature and torus point belong to different groups");
    if (static_cast<int>(t.angles.size()) != sig.rank()) throw DimensionMismatch("torus point has wrong rank");
}

}  // namespace detail

inline cplx character_numerator(const Signature& sig, const std::vector<double>& psi) {
    return detail::numerator_matrix(sig, psi).determinant();
}

inline cplx character_denominator(GroupFamily f, const std::vector<double>& psi) {
    return detail::denominator_matrix(f, psi).determinant();
}

inline cplx character(const Signature& sig, const TorusPoint& t) {
    detail::check_rank(sig, t);
    const Eigen::MatrixXcd d = detail::denominator_matrix(t.family, t.angles);
    const cplx den = d.determinant();
    if (detail::degenerate(den, d))
        throw DegenerateTorusPoint("character denominator vanishes at this torus point");
    const cplx v = character_numerator(sig, t.angles) / den;
    if (sig.family().tag == Family::U) return v;
    if (std::fabs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v))) throw InternalError("O/Sp character is not real");
    return {v.real(), 0.0};
}

// The two halves of the merged O(2n) character for l_n > 0.
inline cplx character_pm(const Signature& sig, const TorusPoint& t, int eps) {
    detail::check_rank(sig, t);
    if (sig.family().tag != Family::O) throw InvalidSignature("character_pm needs an O signature");
    if (sig.parts().back() == 0) throw InvalidSignature("character_pm needs l_n > 0");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    const int n = sig.rank();
    Eigen::MatrixXd s(n, n);
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) s(k, m) = std::sin(sig[k] * t.angles[m]);
    const Eigen::MatrixXcd d = detail::denominator_matrix(t.family, t.angles);
    const cplx den = d.determinant();
    if (detail::degenerate(den, d))
        throw DegenerateTorusPoint("character denominator vanishes at this torus point");
    const double c = character_numerator(sig, t.angles).real();
    return {(c + eps * s.determinant()) / (2.0 * den.real()), 0.0};
}

enum class Spacing { Uniform, Graded };

// Tensor trapezoid on [0, 2 pi)^n. Graded applies the periodic sin^4 (Sidi)
// substitution, which clusters nodes at psi = 0 where |sin(psi/2)|^p cusps live.
struct QuadratureGrid {
    int points_per_dimension = 256;
    bool offset = true;
    GroupFamily family;
    Spacing spacing = Spacing::Uniform;

    // Nodes and weights on one axis; weights sum to 1.
    void axis(std::vector<double>& psi, std::vector<double>& w) const {
        const int N = points_per_dimension;
        if (N < 1) throw std::invalid_argument("grid needs at least one node");
        psi.resize(N);
        w.resize(N);
        const double pi = std::numbers::pi;
        for (int i = 0; i < N; ++i) {
            const double u = (i + (offset ? 0.5 : 0.0)) / N;
            if (spacing == Spacing::Uniform) {
                psi[i] = kTwoPi * u;
                w[i] = 1.0 / N;
                continue;
            }
            const double s = std::sin(pi * u);
            w[i] = (8.0 / 3.0) * s * s * s * s / N;
            // w(u) = u - (8 sin 2 pi u - sin 4 pi u) / (12 pi)
            psi[i] = kTwoPi * (u - (8.0 * std::sin(2 * pi * u) - std::sin(4 * pi * u)) / (12.0 * pi));
        }
    }
};

// Weyl density times (2 pi)^n, i.e. the factor multiplying the normalized
// torus weights. O integrates over SO(2n) with total mass 1.
inline double weyl_prefactor(GroupFamily f) {
    double fact = 1.0;
    for (int i = 2; i <= f.rank; ++i) fact *= i;
    switch (f.tag) {
        case Family::U: return 1.0 / fact;
        case Family::O: return std::ldexp(1.0, f.rank - 1) / fact;
        case Family::Sp: return std::ldexp(1.0, f.rank) / fact;
    }
    return 0.0;
}

inline double weyl_density(GroupFamily f, const std::vector<double>& psi) {
    return weyl_prefactor(f) * std::norm(character_denominator(f, psi));
}

namespace detail {

constexpr std::size_t kPairwiseLeaf = 128;

// Fixed binary-tree reduction over [lo, hi).
template <class Value, class G>
Value pairwise_sum(std::size_t lo, std::size_t hi, const G& g, const Value& zero) {
    if (hi - lo <= kPairwiseLeaf) {
        Value acc = zero;
        for (std::size_t i = lo; i < hi; ++i) acc += g(i);
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    Value a = pairwise_sum(lo, mid, g, zero);
    a += pairwise_sum(mid, hi, g, zero);
    return a;
}

struct TensorNodes {
    std::vector<double> psi, w;
    int n = 1;
    std::size_t total = 1;

    explicit TensorNodes(const QuadratureGrid& grid) : n(grid.family.rank) {
        grid.axis(psi, w);
        for (int k = 0; k < n; ++k) total *= psi.size();
    }
    // Decode a flat index; returns the product weight.
    double node(std::size_t idx, std::vector<double>& angles) const {
        angles.resize(n);
        double weight = 1.0;
        const std::size_t N = psi.size();
        for (int k = n - 1; k >= 0; --k) {
            const std::size_t i = idx % N;
            idx /= N;
            angles[k] = psi[i];
            weight *= w[i];
        }
        return weight;
    }
};

}  // namespace detail

template <class F>
cplx weyl_integrate(const F& f, const QuadratureGrid& grid) {
    const detail::TensorNodes nodes(grid);
    const double pre = weyl_prefactor(grid.family);
    auto term = [&](std::size_t i) -> cplx {
        TorusPoint t{grid.family, {}};
        const double w = nodes.node(i, t.angles);
        const Eigen::MatrixXcd d = detail::denominator_matrix(grid.family, t.angles);
        const cplx den = d.determinant();
        // the density is O(1e-24) at such nodes; f may be undefined there
        if (w == 0.0 || detail::degenerate(den, d)) return 0.0;
        const double dens = std::norm(den);
        return w * dens * cplx(f(t));
    };
    return pre * detail::pairwise_sum<cplx>(0, nodes.total, term, cplx(0.0));
}

namespace detail {

// conj(chi) times the Weyl density, in a division-free form.
inline cplx projection_weight(const Signature& sig, const std::vector<double>& psi, cplx den) {
    const cplx num = character_numerator(sig, psi);
    if (sig.family().tag == Family::U) return std::conj(num) * den;
    return num * den;
}

}  // namespace detail

// Gram matrix <chi_a, chi_b> over the grid, from numerators only: the
// Weyl density cancels both denominators. Nodes are taken in blocks so the
// rank-k updates go through one matrix product each.
inline Eigen::MatrixXcd character_gram(const std::vector<Signature>& sigs, const QuadratureGrid& grid) {
    for (const auto& s : sigs)
        if (s.family() != grid.family) throw DimensionMismatch("signature family differs from grid family");
    const detail::TensorNodes nodes(grid);
    const Eigen::Index m = static_cast<Eigen::Index>(sigs.size());
    constexpr std::size_t kBlock = 256;
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m), v(m, kBlock);
    std::vector<double> psi;
    for (std::size_t lo = 0; lo < nodes.total; lo += kBlock) {
        const std::size_t hi = std::min(nodes.total, lo + kBlock);
        v.setZero();
        for (std::size_t i = lo; i < hi; ++i) {
            const double w = std::sqrt(nodes.node(i, psi));
            for (Eigen::Index a = 0; a < m; ++a)
                v(a, static_cast<Eigen::Index>(i - lo)) = w * character_numerator(sigs[a], psi);
        }
        g.noalias() += v * v.adjoint();
    }
    return weyl_prefactor(grid.family) * g;
}

// <f, chi_sig> for every signature in one pass over the grid.
template <class F>
std::vector<cplx> project_harmonics(const F& f, const std::vector<Signature>& sigs, const QuadratureGrid& grid) {
    for (const auto& s : sigs)
        if (s.family() != grid.family) throw DimensionMismatch("signature family differs from grid family");
    const detail::TensorNodes nodes(grid);
    const double pre = weyl_prefactor(grid.family);
    const std::vector<cplx> zero(sigs.size(), cplx(0.0));
    struct Acc {
        std::vector<cplx> v;
        Acc& operator+=(const Acc& o) {
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
            return *this;
        }
    };
    auto term = [&](std::size_t i) -> Acc {
        Acc a{zero};
        TorusPoint t{grid.family, {}};
        const double w = nodes.node(i, t.angles);
        const Eigen::MatrixXcd d = detail::denominator_matrix(grid.family, t.angles);
        const cplx den = d.determinant();
        if (w == 0.0 || detail::degenerate(den, d)) return a;
        const cplx fv = w * cplx(f(t));
        for (std::size_t s = 0; s < sigs.size(); ++s) a.v[s] = fv * detail::projection_weight(sigs[s], t.angles, den);
        return a;
    };
    Acc total = detail::pairwise_sum<Acc>(0, nodes.total, term, Acc{zero});
    for (auto& x : total.v) x *= pre;
    return total.v;
}

template <class F>
cplx project_harmonic(const F& f, const Signature& sig, const QuadratureGrid& grid) {
    return project_harmonics(f, std::vector<Signature>{sig}, grid).front();
}

// Rank-1 projection by tanh-sinh quadrature on (0, pi), folding psi and -psi
// together so the singular end is approached through exact small angles.
template <class F>
cplx project_harmonic_adaptive(const F& f, const Signature& sig, double tol = 1e-13) {
    if (sig.rank() != 1) throw DimensionMismatch("adaptive projection is rank-1 only");
    const GroupFamily fam = sig.family();
    const double pre = weyl_prefactor(fam);
    auto integrand = [&](double x, int part) {
        cplx acc = 0.0;
        for (double psi : {x, -x}) {
            const std::vector<double> a{psi};
            const cplx den = character_denominator(fam, a);
            acc += cplx(f(TorusPoint{fam, a})) * detail::projection_weight(sig, a, den);
        }
        return part == 0 ? acc.real() : acc.imag();
    };
    boost::math::quadrature::tanh_sinh<double> ts(15);
    const double pi = std::numbers::pi;
    const double re = ts.integrate([&](double x) { return integrand(x, 0); }, 0.0, pi, tol);
    const double im = ts.integrate([&](double x) { return integrand(x, 1); }, 0.0, pi, tol);
    return pre * cplx(re, im) / kTwoPi;
}

}  // namespace plancherel
