#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "plancherel/coefficients.hpp"
#include "plancherel/errors.hpp"
#include "plancherel/signatures.hpp"

namespace plancherel {

// sigma = -n + alpha + s eps, tau = t eps. Real coordinates only.
struct BlowupPoint {
    int alpha = 1;
    double s = 1.0, t = 1.0, eps = 1e-4;

    BlowupPoint rescaled(double u) const { return {alpha, s * u, t * u, eps / u}; }
};

// (s, t) used for the constancy check of the residue factor.
inline constexpr std::pair<double, double> kGenericPoints[2] = {{1.0, 1.0}, {1.0, 2.0}};
inline constexpr double kEpsLadder[3] = {1e-2, 1e-3, 1e-4};

struct SignatureClass {
    bool tail = true;
    int theta = -1;

    bool operator==(const SignatureClass&) const = default;
};

inline std::string to_string(const SignatureClass& c) { return c.tail ? "Tail" : "Z" + std::to_string(c.theta); }

namespace detail {

inline void check_u_alpha(int alpha, const Signature& sig) {
    if (sig.family().tag != Family::U) throw InvalidSignature("unipotent analysis needs a U signature");
    if (alpha < 1 || alpha > sig.rank() - 1) throw std::invalid_argument("alpha must lie in [1, n-1]");
}

inline int count_in(const Signature& sig, int lo, int hi) {
    int c = 0;
    for (int m : sig.parts()) c += (m >= lo && m <= hi);
    return c;
}

}  // namespace detail

// Z_theta: theta negative parts, the block alpha-1, ..., 0 just before them,
// parts >= alpha in front.
inline SignatureClass classify_signature(int alpha, const Signature& sig) {
    detail::check_u_alpha(alpha, sig);
    const int n = sig.rank();
    int theta = 0;
    for (int m : sig.parts()) theta += m < 0;
    if (theta > n - alpha) return {};
    for (int i = 0; i < alpha; ++i)
        if (sig[n - theta - 1 - i] != i) return {};
    return {false, theta};
}

// Exponent k of eps and exponent j of t in the blown-up coefficient.
inline std::pair<int, int> coefficient_orders(int alpha, const Signature& sig) {
    detail::check_u_alpha(alpha, sig);
    const int k = alpha - detail::count_in(sig, 0, alpha - 1);
    const int j = detail::count_in(sig, std::numeric_limits<int>::min(), -1);
    return {k, j};
}

inline SpectralParameter blowup_parameter(const BlowupPoint& bp, int n) {
    return SpectralParameter::U(n, -n + bp.alpha + bp.s * bp.eps, bp.t * bp.eps);
}

namespace detail {

inline void check_pole_line(const BlowupPoint& bp) {
    if (bp.s == 0.0 && bp.t == 0.0) throw std::invalid_argument("(s, t) must not both vanish");
    if (std::fabs(bp.s + bp.t) < 1e-6 * std::max(std::fabs(bp.s), std::fabs(bp.t)))
        throw PoleLine("(s, t) lies on the pole line s + t = 0");
}

}  // namespace detail

// Coefficient at finite eps.
inline double blowup_coefficient(const BlowupPoint& bp, int n, const Signature& sig, const Calibration& cal = {}) {
    detail::check_u_alpha(bp.alpha, sig);
    detail::check_pole_line(bp);
    if (sig.rank() != n) throw DimensionMismatch("signature rank differs from n");
    return coefficient(blowup_parameter(bp, n), sig, cal);
}

// Leading term in eps along the fixed ray (s, t).
inline Leading blowup_leading(const BlowupPoint& bp, int n, const Signature& sig, const Calibration& cal = {}) {
    detail::check_u_alpha(bp.alpha, sig);
    detail::check_pole_line(bp);
    if (sig.rank() != n) throw DimensionMismatch("signature rank differs from n");
    const SpectralParameter p0 = SpectralParameter::U(n, -n + bp.alpha, 0.0);
    return coefficient_directional(p0, sig, Direction{bp.s, bp.t, 0.0}, cal);
}

inline double blowup_limit(const BlowupPoint& bp, int n, const Signature& sig, const Calibration& cal = {}) {
    return blowup_leading(bp, n, sig, cal).limit();
}

namespace detail {

inline double residue_scale(int n, int alpha, int j, double s, double t) {
    return std::pow(s + t, n - alpha) / (std::pow(t, j) * std::pow(s, n - alpha - j));
}

}  // namespace detail

// R_m(s, t, 0) for sig in Z_j, else 0. Checked for (s, t)-independence.
inline double xi_coefficient(int alpha, int j, const Signature& sig, const Calibration& cal = {}) {
    const SignatureClass c = classify_signature(alpha, sig);
    if (c.tail || c.theta != j) return 0.0;
    const int n = sig.rank();
    double v[2];
    for (int i = 0; i < 2; ++i) {
        const auto [s, t] = kGenericPoints[i];
        v[i] = blowup_limit({alpha, s, t, 0.0}, n, sig, cal) * detail::residue_scale(n, alpha, j, s, t);
    }
    if (std::fabs(v[0] - v[1]) > 1e-8 * std::max(std::fabs(v[0]), std::fabs(v[1])))
        throw NonConstantResidue("residue factor depends on (s, t) for " + to_string(sig));
    return v[0];
}

// Neville extrapolation to eps = 0 from samples (eps_i, f_i).
inline double richardson_limit(const std::vector<double>& eps, std::vector<double> f) {
    const std::size_t m = eps.size();
    for (std::size_t k = 1; k < m; ++k)
        for (std::size_t i = m - 1; i >= k; --i) {
            f[i] = (eps[i - k] * f[i] - eps[i] * f[i - 1]) / (eps[i - k] - eps[i]);
            if (i == k) break;
        }
    return f[m - 1];
}

// Numeric counterpart of xi_coefficient along (s, t), from the eps ladder.
// log|R| is extrapolated: its Taylor coefficients are polygamma sums, which
// stay small where those of R itself grow with |m|. The ladder is applied to
// the representative of (s, t) with max(|s|, |t|, |s+t|) = 1.
inline double xi_numeric(int alpha, int j, const Signature& sig, double s, double t, const Calibration& cal = {}) {
    const int n = sig.rank();
    const double u = 1.0 / std::max({std::fabs(s), std::fabs(t), std::fabs(s + t)});
    s *= u;
    t *= u;
    std::vector<double> eps(std::begin(kEpsLadder), std::end(kEpsLadder)), f;
    int sign = 0;
    for (double e : eps) {
        const double r = blowup_coefficient({alpha, s, t, e}, n, sig, cal) * detail::residue_scale(n, alpha, j, s, t);
        const int sg = r > 0 ? 1 : (r < 0 ? -1 : 0);
        if (sg == 0 || (sign != 0 && sg != sign)) throw NonConstantResidue("residue changes sign along the eps ladder");
        sign = sg;
        f.push_back(std::log(std::fabs(r)));
    }
    return sign * std::exp(richardson_limit(eps, f));
}

// Log-log slope of |c| between eps_a and eps_b along (s, t).
inline double empirical_order(int alpha, const Signature& sig, double s = 1.0, double t = 2.0, double eps_a = 1e-3,
                              double eps_b = 1e-5, const Calibration& cal = {}) {
    const int n = sig.rank();
    const double a = std::fabs(blowup_coefficient({alpha, s, t, eps_a}, n, sig, cal));
    const double b = std::fabs(blowup_coefficient({alpha, s, t, eps_b}, n, sig, cal));
    return (std::log(a) - std::log(b)) / (std::log(eps_a) - std::log(eps_b));
}

// ---- O family at lambda = -n + alpha ----

inline bool classify_O_unipotent(int alpha, const Signature& sig, int n) {
    if (sig.family().tag != Family::O) throw InvalidSignature("classify_O_unipotent needs an O signature");
    if (sig.rank() != n) throw DimensionMismatch("signature rank differs from n");
    if (alpha < 1 || alpha > n) throw std::invalid_argument("alpha must lie in [1, n]");
    for (int i = 0; i < alpha; ++i)
        if (sig[n - 1 - i] != i) return false;
    return true;
}

inline int O_unipotent_order(int alpha, const Signature& sig) {
    int c = 0;
    for (int l : sig.parts()) c += l <= alpha - 1;
    return alpha - c;
}

// lim_{lambda -> -n + alpha} c_l(lambda).
inline double O_unipotent_limit(int alpha, const Signature& sig, const Calibration& cal = {}) {
    const int n = sig.rank();
    const SpectralParameter p0 = SpectralParameter::O(n, -n + alpha);
    return coefficient_directional(p0, sig, Direction{0.0, 0.0, 1.0}, cal).limit();
}

}  // namespace plancherel
