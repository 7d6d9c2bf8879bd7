#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plancherel/characters.hpp"
#include "plancherel/errors.hpp"
#include "plancherel/kernels.hpp"
#include "plancherel/signatures.hpp"
#include "plancherel/special_functions.hpp"

namespace plancherel {

// kappa per (family, rank); missing entries mean kappa = 1.
struct Calibration {
    std::map<std::pair<Family, int>, double> kappa;

    bool has(GroupFamily f) const { return kappa.count({f.tag, f.rank}) != 0; }
    double get(GroupFamily f) const {
        const auto it = kappa.find({f.tag, f.rank});
        return it == kappa.end() ? 1.0 : it->second;
    }
    void set(GroupFamily f, double k) { kappa[{f.tag, f.rank}] = k; }
};

// Direction of approach for coefficients at integer parameter points:
// (sigma, tau) = p0 + delta (dsigma, dtau), lambda = lambda0 + delta dlambda.
struct Direction {
    double dsigma = 0.0, dtau = 0.0, dlambda = 0.0;
};

namespace detail {

inline int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

inline void check_family(const SpectralParameter& p, const Signature& s) {
    if (p.family != s.family()) throw MixedFamily("parameter and signature belong to different groups");
}

inline SignedLogValue power_of_two(double e) { return {e * std::numbers::ln2, 1}; }

// Everything except the parameter-only prefactor.
inline Leading signature_leading(const SpectralParameter& p, const Signature& sig, const Direction& d) {
    check_family(p, sig);
    const int n = sig.rank();
    Leading r;
    long long total = 0;
    for (int j = 0; j < n; ++j) total += sig[j];
    switch (p.family.tag) {
        case Family::U:
            r.coeff = r.coeff.flipped(parity_sign(total));
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) r *= static_cast<double>(sig[a] - sig[b]);
            for (int j = 0; j < n; ++j) {
                r *= rgamma_leading(p.sigma - sig[j] + n, d.dsigma);
                r *= rgamma_leading(p.tau + sig[j] + 1, d.dtau);
            }
            break;
        case Family::O:
            r.coeff = r.coeff.flipped(parity_sign(total));
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) r *= static_cast<double>(sig[a]) * sig[a] - static_cast<double>(sig[b]) * sig[b];
            for (int j = 0; j < n; ++j) {
                r *= rgamma_leading(-sig[j] + p.lambda + n, d.dlambda);
                r *= rgamma_leading(sig[j] + p.lambda + n, d.dlambda);
            }
            break;
        case Family::Sp:
            for (int a = 0; a < n; ++a) r *= 2.0 * sig[a];
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) r *= static_cast<double>(sig[a]) * sig[a] - static_cast<double>(sig[b]) * sig[b];
            for (int j = 0; j < n; ++j) {
                r.coeff = r.coeff.flipped(parity_sign(sig[j] - n + 1));
                r *= rgamma_leading(1 - sig[j] + p.lambda + n, d.dlambda);
                r *= rgamma_leading(sig[j] + p.lambda + 1 + n, d.dlambda);
            }
            break;
    }
    return r;
}

// prod Gamma(sigma+tau+j) (U), prod Gamma(2 lambda + 2k - 1) (O), prod Gamma(2 lambda + 2k) (Sp),
// with the elementary factors in front.
inline Leading prefactor_leading(const SpectralParameter& p, const Direction& d) {
    const int n = p.family.rank;
    Leading r;
    switch (p.family.tag) {
        case Family::U:
            r.coeff = power_of_two(-(p.sigma + p.tau) * n).flipped(parity_sign(n * (n - 1) / 2));
            for (int j = 1; j <= n; ++j) r *= gamma_leading(p.sigma + p.tau + j, d.dsigma + d.dtau);
            break;
        case Family::O:
            r.coeff = power_of_two(-2.0 * n * p.lambda).flipped(parity_sign(n * (n - 1) / 2));
            for (int k = 1; k <= n; ++k) r *= gamma_leading(2 * p.lambda + 2 * k - 1, 2 * d.dlambda);
            break;
        case Family::Sp:
            r.coeff = power_of_two(-2.0 * n * p.lambda);
            for (int k = 1; k <= n; ++k) r *= gamma_leading(2 * p.lambda + 2 * k, 2 * d.dlambda);
            break;
    }
    return r;
}

}  // namespace detail

inline bool prefactor_has_pole(const SpectralParameter& p) {
    const int n = p.family.rank;
    for (int k = 1; k <= n; ++k) {
        const double a = p.family.tag == Family::U    ? p.sigma + p.tau + k
                         : p.family.tag == Family::O ? 2 * p.lambda + 2 * k - 1
                                                      : 2 * p.lambda + 2 * k;
        if (is_gamma_pole(a)) return true;
    }
    return false;
}

// Signature-dependent factor alone (always finite).
inline SignedLogValue signature_factor_log(const SpectralParameter& p, const Signature& sig) {
    const Leading l = detail::signature_leading(p, sig, Direction{});
    return l.identically_zero ? SignedLogValue::zero() : l.coeff;
}

inline SignedLogValue prefactor_log(const SpectralParameter& p) {
    if (prefactor_has_pole(p)) throw PrefactorPole("coefficient prefactor has a pole at " + to_string(p));
    return detail::prefactor_leading(p, Direction{}).coeff;
}

// Calibrated closed-form coefficient in signed-log form.
inline SignedLogValue coefficient_log(const SpectralParameter& p, const Signature& sig, const Calibration& cal = {}) {
    SignedLogValue r = prefactor_log(p);
    r *= signature_factor_log(p, sig);
    r *= cal.get(p.family);
    return r;
}

inline double coefficient(const SpectralParameter& p, const Signature& sig, const Calibration& cal = {}) {
    return coefficient_log(p, sig, cal).value();
}

// Leading behaviour of the coefficient along p0 + delta * dir as delta -> 0.
inline Leading coefficient_directional(const SpectralParameter& p0, const Signature& sig, const Direction& dir,
                                       const Calibration& cal = {}) {
    Leading r = detail::prefactor_leading(p0, dir);
    r *= detail::signature_leading(p0, sig, dir);
    r *= cal.get(p0.family);
    return r;
}

// ---- alternative closed forms, for cross-checks ----

// Gamma-product forms with a sin^n prefactor. Sp uses the product index k = n.
// Uncalibrated. For U and O they equal (-1)^n times the pole-free forms.
inline double sine_form(const SpectralParameter& p, const Signature& sig) {
    detail::check_family(p, sig);
    const int n = sig.rank();
    const double pi = std::numbers::pi;
    SignedLogValue r = SignedLogValue::one();
    auto gam = [&](double x) { r *= log_gamma_signed(x); };
    switch (p.family.tag) {
        case Family::U:
            if ((n * (n - 1) / 2) % 2) r = r.flipped(-1);
            r *= std::pow(std::sin(pi * p.sigma), n) * std::pow(pi, -n);
            r *= detail::power_of_two(-(p.sigma + p.tau) * n);
            for (int j = 1; j <= n; ++j) gam(p.sigma + p.tau + j);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) r *= static_cast<double>(sig[a] - sig[b]);
            for (int j = 0; j < n; ++j) {
                gam(-p.sigma + sig[j] - n + 1);
                r /= log_gamma_signed(p.tau + sig[j] + 1);
            }
            break;
        case Family::O:
            if ((n * (n - 1) / 2) % 2) r = r.flipped(-1);
            r *= detail::power_of_two(2.0 * n * p.lambda + 1.0);
            r *= std::pow(std::sin(pi * p.lambda), n) * std::pow(pi, -n);
            for (int k = 1; k <= n; ++k) gam(2 * p.lambda + 2 * k - 1);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) r *= static_cast<double>(sig[a]) * sig[a] - static_cast<double>(sig[b]) * sig[b];
            for (int j = 0; j < n; ++j) {
                gam(sig[j] - p.lambda - n + 1);
                r /= log_gamma_signed(sig[j] + p.lambda + n);
            }
            break;
        case Family::Sp:
            r *= detail::power_of_two(-2.0 * n * p.lambda);
            r *= std::pow(std::sin(pi * p.lambda), n) * std::pow(pi, -n);
            for (int k = 1; k <= n; ++k) gam(2 * p.lambda + 2 * k);
            for (int a = 0; a < n; ++a) r *= 2.0 * sig[a];
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) r *= static_cast<double>(sig[a]) * sig[a] - static_cast<double>(sig[b]) * sig[b];
            for (int j = 0; j < n; ++j) {
                gam(sig[j] - p.lambda - n);
                r /= log_gamma_signed(sig[j] + p.lambda + 1 + n);
            }
            break;
    }
    return r.value();
}

// Pole-free forms with the uncorrected O prefactor 2^{2 n lambda + 1}.
// Not provided for Sp.
inline double uncorrected_reciprocal_form(const SpectralParameter& p, const Signature& sig) {
    if (p.family.tag == Family::Sp) throw std::invalid_argument("no reciprocal form for Sp");
    SignedLogValue r = coefficient_log(p, sig, Calibration{});
    if (p.family.tag == Family::O) r *= detail::power_of_two(4.0 * p.family.rank * p.lambda + 1.0);
    return r.value();
}

// ---- expansions ----

inline std::vector<Signature> default_scan_signatures(GroupFamily f, int bound = 0) {
    if (bound <= 0) bound = f.rank <= 2 ? 8 : 5;
    return enumerate_signatures(f, bound);
}

// Weight of chi_sig in the expansion: 2 for merged O characters with l_n > 0
// (their SO(2n) norm^2 is 1/2), else 1.
inline double expansion_weight(const Signature& sig) {
    return (sig.family().tag == Family::O && sig.parts().back() > 0) ? 2.0 : 1.0;
}

inline cplx reconstruct_kernel(const SpectralParameter& p, const TorusPoint& t, int bound, const Calibration& cal = {}) {
    cplx acc = 0.0;
    for (const auto& sig : enumerate_signatures(p.family, bound))
        acc += expansion_weight(sig) * coefficient(p, sig, cal) * character(sig, t);
    return acc;
}

// ---- positivity ----

enum class Classification { PositiveDefinite, NegativeDefinite, Indefinite, DegenerateNonnegative };

inline std::string to_string(Classification c) {
    switch (c) {
        case Classification::PositiveDefinite: return "PositiveDefinite";
        case Classification::NegativeDefinite: return "NegativeDefinite";
        case Classification::Indefinite: return "Indefinite";
        case Classification::DegenerateNonnegative: return "DegenerateNonnegative";
    }
    return "?";
}

struct PositivityVerdict {
    Classification classification = Classification::Indefinite;
    std::optional<std::pair<Signature, Signature>> witness;
    // true when the prefactor has a pole and only the residue's signs were read
    bool residue = false;

    bool definite() const {
        return classification == Classification::PositiveDefinite || classification == Classification::NegativeDefinite;
    }
};

namespace detail {

inline bool is_integer(double x) { return std::fabs(x - std::round(x)) <= kPoleTolerance; }

inline PositivityVerdict verdict_from_signs(const std::vector<Signature>& sigs, const std::vector<int>& signs) {
    PositivityVerdict v;
    std::optional<std::size_t> pos, neg;
    bool zero = false;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (signs[i] > 0 && !pos) pos = i;
        if (signs[i] < 0 && !neg) neg = i;
        if (signs[i] == 0) zero = true;
    }
    if (pos && neg) {
        v.classification = Classification::Indefinite;
        v.witness = std::make_pair(sigs[*pos], sigs[*neg]);
    } else if (zero) {
        v.classification = Classification::DegenerateNonnegative;
    } else {
        v.classification = pos ? Classification::PositiveDefinite : Classification::NegativeDefinite;
    }
    return v;
}

}  // namespace detail

// Sign-definiteness region predicted analytically, or nullopt when no claim is made.
// U: floor(-sigma-n) = floor(tau) for non-integer sigma, tau (the unit squares
// of the positivity figure). O: -n < lambda < -n+1. Sp: -n-1 < lambda < -n.
inline std::optional<bool> analytic_definite(const SpectralParameter& p) {
    const int n = p.family.rank;
    switch (p.family.tag) {
        case Family::U:
            if (detail::is_integer(p.sigma) || detail::is_integer(p.tau)) return std::nullopt;
            return std::floor(-p.sigma - n) == std::floor(p.tau);
        case Family::O:
            if (p.lambda > -n && p.lambda < -n + 1) return true;
            return std::nullopt;
        case Family::Sp:
            if (p.lambda > -n - 1 && p.lambda < -n) return true;
            return std::nullopt;
    }
    return std::nullopt;
}

inline PositivityVerdict classify_positivity(const SpectralParameter& p, int bound = 0, const Calibration& cal = {}) {
    const auto sigs = default_scan_signatures(p.family, bound);
    const bool pole = prefactor_has_pole(p);
    int overall = cal.get(p.family) < 0 ? -1 : 1;
    if (!pole) overall *= prefactor_log(p).sign;
    std::vector<int> signs(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) signs[i] = overall * signature_factor_log(p, sigs[i]).sign;
    PositivityVerdict v = detail::verdict_from_signs(sigs, signs);
    v.residue = pole;
    if (const auto expect = analytic_definite(p)) {
        const bool got = v.definite();
        if (*expect != got)
            throw AnalyticEmpiricalMismatch("coefficient signs " + std::string(got ? "are" : "are not") +
                                            " definite at " + to_string(p) + " against the analytic criterion");
    }
    return v;
}

enum class BWClass { Definite, DegenerateNonnegative, Indefinite };

inline std::string to_string(BWClass c) {
    switch (c) {
        case BWClass::Definite: return "Definite";
        case BWClass::DegenerateNonnegative: return "DegenerateNonnegative";
        case BWClass::Indefinite: return "Indefinite";
    }
    return "?";
}

// tau = 0 slice: definite below -n+1, degenerate at -n+1, ..., 0.
inline BWClass berezin_wallach_rule(double sigma, int n) {
    if (detail::is_integer(sigma) && std::round(sigma) >= -n + 1 && std::round(sigma) <= 0)
        return BWClass::DegenerateNonnegative;
    if (sigma < -n + 1) return BWClass::Definite;
    return BWClass::Indefinite;
}

// Coefficient signs over m_n >= 0 at tau = 0 (m_n < 0 vanish identically);
// integer sigma is approached along sigma -> sigma + delta.
inline BWClass berezin_wallach_empirical(double sigma, int n, int bound = 8, const Calibration& cal = {}) {
    const SpectralParameter p0 = SpectralParameter::U(n, sigma, 0.0);
    std::vector<Signature> sigs;
    for (auto& s : enumerate_signatures(p0.family, bound))
        if (s.parts().back() >= 0) sigs.push_back(s);
    std::vector<Leading> lead;
    int min_order = std::numeric_limits<int>::max();
    for (const auto& s : sigs) {
        lead.push_back(coefficient_directional(p0, s, Direction{1.0, 0.0, 0.0}, cal));
        if (!lead.back().identically_zero) min_order = std::min(min_order, lead.back().order);
    }
    std::vector<int> signs(sigs.size(), 0);
    for (std::size_t i = 0; i < sigs.size(); ++i)
        if (!lead[i].identically_zero && lead[i].order == min_order) signs[i] = lead[i].coeff.sign;
    const PositivityVerdict v = detail::verdict_from_signs(sigs, signs);
    if (v.classification == Classification::Indefinite) return BWClass::Indefinite;
    if (v.classification == Classification::DegenerateNonnegative) return BWClass::DegenerateNonnegative;
    return BWClass::Definite;
}

inline BWClass berezin_wallach_classify(double sigma, int n, int bound = 8, const Calibration& cal = {}) {
    const BWClass rule = berezin_wallach_rule(sigma, n);
    const BWClass seen = berezin_wallach_empirical(sigma, n, bound, cal);
    if (rule != seen)
        throw AnalyticEmpiricalMismatch("Berezin-Wallach rule says " + to_string(rule) + " but coefficient signs give " +
                                        to_string(seen));
    return rule;
}

// ---- forms on harmonic expansions ----

// Coefficients with respect to characters.
struct HarmonicExpansion {
    GroupFamily family;
    std::map<Signature, cplx> terms;

    void add(const Signature& s, cplx c) {
        if (s.family() != family) throw MixedFamily("term belongs to a different group");
        terms[s] += c;
    }
};

// sum c_m / dim_m q_m conj(r_m); chi_m has unit L^2 norm.
inline cplx inner_product(const HarmonicExpansion& q, const HarmonicExpansion& r, const SpectralParameter& p,
                          const Calibration& cal = {}) {
    if (q.family != r.family || q.family != p.family) throw MixedFamily("expansions and parameter must share a group");
    if (p.family.tag != Family::U) throw MixedFamily("inner_product is defined for the U family only");
    cplx acc = 0.0;
    for (const auto& [sig, qv] : q.terms) {
        const auto it = r.terms.find(sig);
        if (it == r.terms.end()) continue;
        acc += coefficient(p, sig, cal) / static_cast<double>(dimension_unitary(sig)) * qv * std::conj(it->second);
    }
    return acc;
}

inline double sobolev_norm_sq(const HarmonicExpansion& q, double s) {
    double acc = 0.0;
    for (const auto& [sig, v] : q.terms) {
        double w = 1.0;
        for (int m : sig.parts()) w *= std::pow(1.0 + std::abs(m), s);
        acc += std::norm(v) * w;
    }
    return acc;
}

// Exponent s with c_m / dim_m ~ prod (1+|m_j|)^{-s}.
inline double sobolev_exponent(const SpectralParameter& p) { return p.sigma + p.tau + p.family.rank; }

}  // namespace plancherel
