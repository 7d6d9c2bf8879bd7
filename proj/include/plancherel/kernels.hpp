#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "plancherel/characters.hpp"
#include "plancherel/errors.hpp"
#include "plancherel/signatures.hpp"

namespace plancherel {

using Eigen::MatrixXcd;

// (sigma, tau) for U(n); lambda for O(2n) and Sp(n).
struct SpectralParameter {
    GroupFamily family;
    double sigma = 0.0, tau = 0.0, lambda = 0.0;

    static SpectralParameter U(int n, double sigma, double tau) { return {{Family::U, n}, sigma, tau, 0.0}; }
    static SpectralParameter O(int n, double lambda) { return {{Family::O, n}, 0.0, 0.0, lambda}; }
    static SpectralParameter Sp(int n, double lambda) { return {{Family::Sp, n}, 0.0, 0.0, lambda}; }

    // Hypotheses of the expansion theorems.
    bool expansion_valid() const { return family.tag == Family::U ? sigma + tau < 1.0 : lambda < 0.5; }
};

inline std::string to_string(const SpectralParameter& p) {
    char buf[96];
    if (p.family.tag == Family::U) std::snprintf(buf, sizeof buf, "sigma=%.17g;tau=%.17g", p.sigma, p.tau);
    else std::snprintf(buf, sizeof buf, "lambda=%.17g", p.lambda);
    return buf;
}

inline double wrap_angle(double x) {
    double r = std::fmod(x, kTwoPi);
    return r < 0 ? r + kTwoPi : r;
}

namespace detail {

// |sin(psi/2)|^e, with the psi = 0 convention of the kernels.
inline double sin_half_pow(double psi, double e) {
    const double s = std::fabs(std::sin(psi / 2.0));
    if (s == 0.0) {
        if (e > 0.0) return 0.0;
        if (e == 0.0) return 1.0;
        throw SingularKernelPoint("kernel is singular at psi = 0 for this parameter");
    }
    return std::pow(s, e);
}

}  // namespace detail

// in_special_component: false marks an O(2n) point with det = -1.
inline cplx ell(const SpectralParameter& p, const TorusPoint& t, bool in_special_component = true) {
    if (p.family != t.family) throw DimensionMismatch("parameter and torus point belong to different groups");
    if (static_cast<int>(t.angles.size()) != p.family.rank) throw DimensionMismatch("torus point has wrong rank");
    if (p.family.tag == Family::U) {
        const double e = p.sigma + p.tau;
        double mag = 1.0, phase = 0.0;
        for (double psi : t.angles) {
            mag *= detail::sin_half_pow(psi, e);
            phase += (wrap_angle(psi) - std::numbers::pi) / 2.0;
        }
        return std::polar(mag, (p.sigma - p.tau) * phase);
    }
    if (p.family.tag == Family::O && !in_special_component) return 0.0;
    double mag = 1.0;
    for (double psi : t.angles) mag *= detail::sin_half_pow(psi, 2.0 * p.lambda);
    return mag;
}

// Size of the matrices representing the compact group (complex image for Sp).
inline int compact_size(GroupFamily f) { return f.tag == Family::U ? f.rank : 2 * f.rank; }

namespace detail {

inline void require_unitary(const MatrixXcd& g, double tol, const char* what) {
    const MatrixXcd e = g * g.adjoint() - MatrixXcd::Identity(g.rows(), g.cols());
    if (e.cwiseAbs().maxCoeff() > tol) throw NonUnitaryInput(what);
}

inline bool is_quaternionic(const MatrixXcd& g, double tol) {
    const Eigen::Index n = g.rows() / 2;
    if (g.rows() != 2 * n || g.cols() != 2 * n) return false;
    const MatrixXcd z = g.topLeftCorner(n, n), w = g.topRightCorner(n, n);
    return (g.bottomLeftCorner(n, n) + w.conjugate()).cwiseAbs().maxCoeff() <= tol &&
           (g.bottomRightCorner(n, n) - z.conjugate()).cwiseAbs().maxCoeff() <= tol;
}

// For O/Sp the 2n eigenvalues pair as e^{+-i psi}; keep one |arg| per pair.
inline std::vector<double> paired_angles(const Eigen::VectorXcd& ev) {
    std::vector<double> a(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) a[i] = std::fabs(std::arg(ev[i]));
    std::sort(a.begin(), a.end());
    std::vector<double> r(a.size() / 2);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = 0.5 * (a[2 * j] + a[2 * j + 1]);
    return r;
}

}  // namespace detail

// Ascending angles in [0, 2 pi).
inline std::vector<double> unitary_eigenangles(const MatrixXcd& g) {
    const Eigen::ComplexEigenSolver<MatrixXcd> es(g, false);
    std::vector<double> a(g.rows());
    for (Eigen::Index i = 0; i < g.rows(); ++i) a[i] = wrap_angle(std::arg(es.eigenvalues()[i]));
    std::sort(a.begin(), a.end());
    return a;
}

// Angles in [0, pi] for an element of SO(2n), O(2n) or (the complex image of) Sp(n).
inline std::vector<double> paired_eigenangles(const MatrixXcd& g) {
    const Eigen::ComplexEigenSolver<MatrixXcd> es(g, false);
    return detail::paired_angles(es.eigenvalues());
}

inline TorusPoint torus_point_of(GroupFamily f, const MatrixXcd& g) {
    if (f.tag == Family::U) return {f, unitary_eigenangles(g)};
    return {f, paired_eigenangles(g)};
}

inline void check_compact(GroupFamily f, const MatrixXcd& g, double tol = 1e-10) {
    const int d = compact_size(f);
    if (g.rows() != d || g.cols() != d) throw DimensionMismatch("compact element has the wrong size");
    detail::require_unitary(g, tol, "matrix is not unitary");
    if (f.tag == Family::O && g.imag().cwiseAbs().maxCoeff() > tol) throw NonUnitaryInput("O element must be real");
    if (f.tag == Family::Sp && !detail::is_quaternionic(g, tol))
        throw NonUnitaryInput("Sp element must be the complex image of a quaternionic matrix");
}

constexpr double kAngleSnap = 1e-12;

// L(g, h) = ell(g h^{-1}).
inline cplx kernel_L(const SpectralParameter& p, const MatrixXcd& g, const MatrixXcd& h) {
    check_compact(p.family, g);
    check_compact(p.family, h);
    const MatrixXcd x = g * h.adjoint();
    bool special = true;
    if (p.family.tag == Family::O) special = x.real().determinant() > 0.0;
    TorusPoint t = torus_point_of(p.family, x);
    for (double& a : t.angles)
        if (circle_distance(a, 0.0) < kAngleSnap) a = 0.0;  // eigensolver noise at eigenvalue 1
    return ell(p, t, special);
}

// ---- random compact elements ----

template <class Rng>
MatrixXcd haar_unitary(int n, Rng& rng) {
    std::normal_distribution<double> N01(0.0, 1.0);
    MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = cplx(N01(rng), N01(rng));
    const Eigen::HouseholderQR<MatrixXcd> qr(z);
    MatrixXcd q = qr.householderQ();
    const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
    return q;
}

template <class Rng>
MatrixXcd haar_special_orthogonal(int d, Rng& rng) {
    std::normal_distribution<double> N01(0.0, 1.0);
    Eigen::MatrixXd z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) z(i, j) = N01(rng);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j)
        if (r(j, j) < 0) q.col(j) *= -1.0;
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return q.cast<cplx>();
}

namespace detail {

template <class Rng>
MatrixXcd gaussian(int r, int c, Rng& rng, bool complex_entries) {
    std::normal_distribution<double> N01(0.0, 1.0);
    MatrixXcd z(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) z(i, j) = complex_entries ? cplx(N01(rng), N01(rng)) : cplx(N01(rng), 0.0);
    return z;
}

// Complex image [[Z, W], [-conj W, conj Z]] of the quaternionic matrix Z + W j.
inline MatrixXcd quaternion_image(const MatrixXcd& z, const MatrixXcd& w) {
    const Eigen::Index n = z.rows();
    MatrixXcd m(2 * n, 2 * n);
    m << z, w, -w.conjugate(), z.conjugate();
    return m;
}

// Random element of the compact Lie algebra (anti-Hermitian / antisymmetric / sp(n)).
template <class Rng>
MatrixXcd random_compact_algebra(GroupFamily f, Rng& rng, double scale) {
    const int n = f.rank;
    if (f.tag == Family::U) {
        const MatrixXcd a = gaussian(n, n, rng, true);
        return scale * 0.5 * (a - a.adjoint());
    }
    if (f.tag == Family::O) {
        const MatrixXcd a = gaussian(2 * n, 2 * n, rng, false);
        return scale * 0.5 * (a - a.transpose());
    }
    const MatrixXcd a = gaussian(n, n, rng, true), b = gaussian(n, n, rng, true);
    return scale * quaternion_image(0.5 * (a - a.adjoint()), 0.5 * (b + b.transpose()));
}

}  // namespace detail

template <class Rng>
MatrixXcd random_compact(GroupFamily f, Rng& rng) {
    if (f.tag == Family::U) return haar_unitary(f.rank, rng);
    if (f.tag == Family::O) return haar_special_orthogonal(2 * f.rank, rng);
    return detail::random_compact_algebra(f, rng, 2.0).exp();
}

// ---- block Mobius action ----

// Blocks are compact_size x compact_size; Sp blocks are complex images.
struct BlockMobiusElement {
    GroupFamily family;
    MatrixXcd alpha, beta, gamma, delta;

    static BlockMobiusElement identity(GroupFamily f) {
        const int d = compact_size(f);
        const MatrixXcd I = MatrixXcd::Identity(d, d), Z = MatrixXcd::Zero(d, d);
        return {f, I, Z, Z, I};
    }
    static BlockMobiusElement block_diagonal(GroupFamily f, const MatrixXcd& u1, const MatrixXcd& u2) {
        const int d = compact_size(f);
        const MatrixXcd Z = MatrixXcd::Zero(d, d);
        return {f, u1, Z, Z, u2};
    }
    static BlockMobiusElement from_full(GroupFamily f, const MatrixXcd& g) {
        const int d = compact_size(f);
        if (g.rows() != 2 * d || g.cols() != 2 * d) throw DimensionMismatch("block element has the wrong size");
        return {f, g.topLeftCorner(d, d), g.topRightCorner(d, d), g.bottomLeftCorner(d, d), g.bottomRightCorner(d, d)};
    }

    MatrixXcd full() const {
        const Eigen::Index d = alpha.rows();
        MatrixXcd g(2 * d, 2 * d);
        g << alpha, beta, gamma, delta;
        return g;
    }

    // g diag(1,-1) g^* = diag(1,-1)
    double pseudo_unitarity_defect() const {
        const Eigen::Index d = alpha.rows();
        MatrixXcd J = MatrixXcd::Identity(2 * d, 2 * d);
        J.bottomRightCorner(d, d) *= -1.0;
        const MatrixXcd g = full();
        return (g * J * g.adjoint() - J).cwiseAbs().maxCoeff();
    }
};

inline BlockMobiusElement operator*(const BlockMobiusElement& a, const BlockMobiusElement& b) {
    return BlockMobiusElement::from_full(a.family, a.full() * b.full());
}

// exp of a random element of u(n,n), o(2n,2n) or sp(n,n).
template <class Rng>
BlockMobiusElement random_block_element(GroupFamily f, Rng& rng, double boost = 0.5) {
    const int d = compact_size(f);
    const int n = f.rank;
    const MatrixXcd a = detail::random_compact_algebra(f, rng, 1.0);
    const MatrixXcd dd = detail::random_compact_algebra(f, rng, 1.0);
    MatrixXcd b;
    if (f.tag == Family::U) b = detail::gaussian(d, d, rng, true);
    else if (f.tag == Family::O) b = detail::gaussian(d, d, rng, false);
    else b = detail::quaternion_image(detail::gaussian(n, n, rng, true), detail::gaussian(n, n, rng, true));
    b *= boost;
    MatrixXcd x(2 * d, 2 * d);
    x << a, b, b.adjoint(), dd;
    return BlockMobiusElement::from_full(f, x.exp());
}

constexpr double kMaxCondition = 1e12;

// h^[g] = (alpha + h gamma)^{-1} (beta + h delta)
inline MatrixXcd mobius_apply(const BlockMobiusElement& g, const MatrixXcd& h) {
    const MatrixXcd den = g.alpha + h * g.gamma;
    const Eigen::JacobiSVD<MatrixXcd> svd(den);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) == 0.0 || s(0) / s(s.size() - 1) > kMaxCondition)
        throw IllConditionedDenominator("alpha + h gamma is ill-conditioned");
    return den.partialPivLu().solve(g.beta + h * g.delta);
}

namespace detail {

inline double covariance_factor(const SpectralParameter& p, const BlockMobiusElement& g, const MatrixXcd& h) {
    const double d = std::abs((g.alpha + h * g.gamma).determinant());
    switch (p.family.tag) {
        case Family::U: return std::pow(d, -2.0 * p.sigma);
        case Family::O:
        case Family::Sp: return std::pow(d, -p.lambda);
    }
    return 0.0;
}

}  // namespace detail

// |L(u^g, v^g) - L(u,v) F_g(u) F_g(v)| / |L(u,v)|; U requires sigma = tau.
inline double covariance_residual(const SpectralParameter& p, const BlockMobiusElement& g, const MatrixXcd& u,
                                  const MatrixXcd& v) {
    if (p.family.tag == Family::U && p.sigma != p.tau) throw std::invalid_argument("covariance check needs sigma = tau");
    if (g.family != p.family) throw MixedFamily("block element and parameter belong to different families");
    const cplx lhs = kernel_L(p, mobius_apply(g, u), mobius_apply(g, v));
    const cplx base = kernel_L(p, u, v);
    const cplx rhs = base * detail::covariance_factor(p, g, u) * detail::covariance_factor(p, g, v);
    return std::abs(lhs - rhs) / std::abs(base);
}

// Change of variables on U(1): int f dmu vs int f(h^[g]) |alpha + h gamma|^{-2} dmu.
inline double jacobian_residual_1d(const BlockMobiusElement& g, const std::function<cplx(cplx)>& f,
                                   int nodes = 4096) {
    if (g.family.tag != Family::U || g.family.rank != 1) throw DimensionMismatch("jacobian check is for U(1,1)");
    const cplx a = g.alpha(0, 0), b = g.beta(0, 0), c = g.gamma(0, 0), d = g.delta(0, 0);
    auto lhs_term = [&](std::size_t i) { return f(std::polar(1.0, kTwoPi * (i + 0.5) / nodes)); };
    auto rhs_term = [&](std::size_t i) {
        const cplx h = std::polar(1.0, kTwoPi * (i + 0.5) / nodes);
        const cplx den = a + h * c;
        return f((b + h * d) / den) / std::norm(den);
    };
    const cplx lhs = detail::pairwise_sum<cplx>(0, nodes, lhs_term, cplx(0.0));
    const cplx rhs = detail::pairwise_sum<cplx>(0, nodes, rhs_term, cplx(0.0));
    return std::abs(lhs - rhs) / nodes;
}

}  // namespace plancherel
