#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "plancherel/errors.hpp"
#include "plancherel/special_functions.hpp"

namespace plancherel {

enum class IdentityId { Cauchy, L11, L12, L13, L14 };

inline std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::Cauchy: return "Cauchy";
        case IdentityId::L11: return "L11";
        case IdentityId::L12: return "L12";
        case IdentityId::L13: return "L13";
        case IdentityId::L14: return "L14";
    }
    return "?";
}

inline constexpr IdentityId kAllIdentities[] = {IdentityId::Cauchy, IdentityId::L11, IdentityId::L12,
                                                IdentityId::L13, IdentityId::L14};

// Cauchy uses x and y; L11 uses x, b (n-1); L12 x, a, b (n-1); L13 x, a, b (n);
// L14 x, a, b (n-1).
struct IdentityInstance {
    IdentityId id = IdentityId::Cauchy;
    Eigen::VectorXd x, y, a, b;

    int n() const { return static_cast<int>(x.size()); }
};

constexpr double kMinSeparation = 1e-6;

namespace detail {

inline int param_length(IdentityId id, int n) { return id == IdentityId::L13 ? n : n - 1; }

inline void require(bool ok, const char* msg) {
    if (!ok) throw NearSingularDenominator(msg);
}

inline void validate(const IdentityInstance& in) {
    const int n = in.n();
    if (n < 1) throw DimensionMismatch("instance needs n >= 1");
    const int p = param_length(in.id, n);
    if (in.id == IdentityId::Cauchy) {
        if (in.y.size() != n) throw DimensionMismatch("Cauchy needs y of length n");
    } else {
        if (in.b.size() != p) throw DimensionMismatch("b has the wrong length");
        if (in.id != IdentityId::L11 && in.a.size() != p) throw DimensionMismatch("a has the wrong length");
    }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) require(std::fabs(in.x[k] - in.x[l]) >= kMinSeparation, "x entries collide");
    for (int k = 0; k < n; ++k) {
        if (in.id == IdentityId::Cauchy) {
            for (int l = 0; l < n; ++l) require(std::fabs(in.x[k] + in.y[l]) >= kMinSeparation, "x_k + y_l ~ 0");
            continue;
        }
        for (int al = 0; al < in.b.size(); ++al) {
            require(std::fabs(in.x[k] + in.b[al]) >= kMinSeparation, "x_k + b ~ 0");
            if (in.id == IdentityId::L13 || in.id == IdentityId::L14)
                require(std::fabs(in.x[k] - in.b[al]) >= kMinSeparation, "x_k - b ~ 0");
        }
    }
}

}  // namespace detail

// 50 significant digits; the determinants are evaluated in this type.
using Extended = boost::multiprecision::cpp_bin_float_50;

namespace detail {

template <class T>
T partial_ratio_t(const T& x, const Eigen::VectorXd& a, const Eigen::VectorXd& b, int l, int sgn) {
    T r = 1;
    for (int j = 0; j < l; ++j) r *= (x + sgn * T(a[j])) / (x + sgn * T(b[j]));
    return r;
}

}  // namespace detail

template <class T = double>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> build_matrix_as(const IdentityInstance& in) {
    detail::validate(in);
    const int n = in.n();
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const T x = in.x[k];
            switch (in.id) {
                case IdentityId::Cauchy: m(r, k) = T(1) / (x + T(in.y[r])); break;
                case IdentityId::L11: m(r, k) = r == 0 ? T(1) : T(1) / (x + T(in.b[r - 1])); break;
                case IdentityId::L12: m(r, k) = detail::partial_ratio_t(x, in.a, in.b, r, 1); break;
                case IdentityId::L13:
                    m(r, k) = detail::partial_ratio_t(x, in.a, in.b, r + 1, 1) -
                              detail::partial_ratio_t(x, in.a, in.b, r + 1, -1);
                    break;
                case IdentityId::L14:
                    m(r, k) = detail::partial_ratio_t(x, in.a, in.b, r, 1) + detail::partial_ratio_t(x, in.a, in.b, r, -1);
                    break;
            }
        }
    return m;
}

inline Eigen::MatrixXd build_matrix(const IdentityInstance& in) { return build_matrix_as<double>(in); }

inline SignedLogValue closed_form_log(const IdentityInstance& in) {
    detail::validate(in);
    const int n = in.n();
    const auto& x = in.x;
    const auto& a = in.a;
    const auto& b = in.b;
    SignedLogValue r = SignedLogValue::one();
    auto mul = [&](double v) { r *= v; };
    auto div = [&](double v) { r /= v; };
    const int p = static_cast<int>(b.size());
    switch (in.id) {
        case IdentityId::Cauchy:
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    mul(x[k] - x[l]);
                    mul(in.y[k] - in.y[l]);
                }
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) div(x[k] + in.y[l]);
            break;
        case IdentityId::L11:
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) mul(x[k] - x[l]);
            for (int al = 0; al < p; ++al)
                for (int be = al + 1; be < p; ++be) mul(b[al] - b[be]);
            for (int k = 0; k < n; ++k)
                for (int al = 0; al < p; ++al) div(x[k] + b[al]);
            break;
        case IdentityId::L12:
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) mul(x[k] - x[l]);
            for (int al = 0; al < p; ++al)
                for (int be = al; be < p; ++be) mul(a[al] - b[be]);
            for (int k = 0; k < n; ++k)
                for (int be = 0; be < p; ++be) div(x[k] + b[be]);
            break;
        case IdentityId::L13:
        case IdentityId::L14: {
            const bool l13 = in.id == IdentityId::L13;
            if ((n * (n - 1) / 2) % 2) r = r.flipped(-1);
            if (l13) {
                r *= SignedLogValue{n * std::log(2.0), 1};
                for (int k = 0; k < n; ++k) mul(x[k]);
            } else {
                mul(2.0);
            }
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) mul(x[k] * x[k] - x[l] * x[l]);
            for (int al = 0; al < p; ++al)
                for (int be = l13 ? al + 1 : al; be < p; ++be) mul(b[al] + b[be]);
            for (int al = 0; al < p; ++al)
                for (int be = al; be < p; ++be) mul(a[al] - b[be]);
            for (int k = 0; k < n; ++k)
                for (int al = 0; al < p; ++al) div(x[k] * x[k] - b[al] * b[al]);
            break;
        }
    }
    return r;
}

inline double closed_form(const IdentityInstance& in) { return closed_form_log(in).value(); }

// Partial-pivoting determinant in log-magnitude/sign form.
template <class T>
SignedLogValue log_determinant(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m) {
    using std::abs;
    using std::log;
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const Eigen::PartialPivLU<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>> lu(m);
    int sign = static_cast<int>(lu.permutationP().determinant());
    T logmag = 0;
    const auto& u = lu.matrixLU();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        if (u(i, i) == 0) return SignedLogValue::zero();
        if (u(i, i) < 0) sign = -sign;
        logmag += log(abs(u(i, i)));
    }
    return {static_cast<double>(logmag), sign};
}

enum class Precision { Double, Extended };

// |det / closed_form - 1|, with the determinant evaluated in the given precision
// (the instance and the closed form are always double).
inline double identity_residual(const IdentityInstance& in, Precision prec = Precision::Extended) {
    const SignedLogValue det = prec == Precision::Extended ? log_determinant(build_matrix_as<Extended>(in))
                                                           : log_determinant(build_matrix_as<double>(in));
    const SignedLogValue cf = closed_form_log(in);
    if (det.sign != cf.sign) return det.is_zero() || cf.is_zero() ? 1.0 : 2.0;
    return std::fabs(std::expm1(det.log_magnitude - cf.log_magnitude));
}

// Entries uniform in [-3, 3], redrawn until every denominator, and every
// pair that must stay distinct, is separated by at least gap.
template <class Rng>
IdentityInstance random_instance(IdentityId id, int n, Rng& rng, double gap = 1e-2) {
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    const int p = detail::param_length(id, n);
    IdentityInstance in;
    in.id = id;
    auto far = [&](double u, double v) { return std::fabs(u - v) >= gap; };
    for (int attempt = 0; attempt < 100000; ++attempt) {
        in.x.resize(n);
        for (int k = 0; k < n; ++k) in.x[k] = U(rng);
        if (id == IdentityId::Cauchy) {
            in.y.resize(n);
            for (int k = 0; k < n; ++k) in.y[k] = U(rng);
        } else {
            in.b.resize(p);
            for (int k = 0; k < p; ++k) in.b[k] = U(rng);
            if (id != IdentityId::L11) {
                in.a.resize(p);
                for (int k = 0; k < p; ++k) in.a[k] = U(rng);
            }
        }
        bool ok = true;
        for (int k = 0; k < n && ok; ++k)
            for (int l = k + 1; l < n && ok; ++l) ok = far(in.x[k], in.x[l]) && (id < IdentityId::L13 || far(in.x[k], -in.x[l]));
        if (id == IdentityId::Cauchy) {
            for (int k = 0; k < n && ok; ++k)
                for (int l = 0; l < n && ok; ++l) ok = far(in.x[k], -in.y[l]) && (l <= k || far(in.y[k], in.y[l]));
        } else {
            for (int al = 0; al < p && ok; ++al)
                for (int be = al + 1; be < p && ok; ++be)
                    ok = far(in.b[al], in.b[be]) && (id < IdentityId::L13 || far(in.b[al], -in.b[be]));
            for (int k = 0; k < n && ok; ++k)
                for (int al = 0; al < p && ok; ++al)
                    ok = far(in.x[k], -in.b[al]) && (id < IdentityId::L13 || far(in.x[k], in.b[al]));
            // numerator factors too, so the determinant is not accidentally tiny
            for (int al = 0; al < in.a.size() && ok; ++al)
                for (int be = al; be < p && ok; ++be) ok = far(in.a[al], in.b[be]);
            for (int al = 0; al < p && ok && id >= IdentityId::L13; ++al) ok = far(in.b[al], -in.b[al]);
            for (int k = 0; k < n && ok && id == IdentityId::L13; ++k) ok = far(in.x[k], 0.0);
        }
        if (ok) return in;
    }
    throw InternalError("could not draw a separated identity instance");
}

}  // namespace plancherel
