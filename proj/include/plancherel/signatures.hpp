#pragma once

#include <cmath>
#include <compare>
#include <string>
#include <vector>

#include "plancherel/errors.hpp"

namespace plancherel {

enum class Family { U, O, Sp };

inline std::string family_tag(Family f) {
    switch (f) {
        case Family::U: return "U";
        case Family::O: return "O";
        case Family::Sp: return "Sp";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    if (s == "U") return Family::U;
    if (s == "O") return Family::O;
    if (s == "Sp") return Family::Sp;
    throw std::invalid_argument("unknown family '" + s + "' (expected U, O or Sp)");
}

// rank is n for U(n), O(2n) and Sp(n).
struct GroupFamily {
    Family tag = Family::U;
    int rank = 1;

    GroupFamily() = default;
    GroupFamily(Family f, int n) : tag(f), rank(n) {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
    }
    auto operator<=>(const GroupFamily&) const = default;
};

inline std::string to_string(const GroupFamily& g) {
    switch (g.tag) {
        case Family::U: return "U(" + std::to_string(g.rank) + ")";
        case Family::O: return "O(" + std::to_string(2 * g.rank) + ")";
        case Family::Sp: return "Sp(" + std::to_string(g.rank) + ")";
    }
    return "?";
}

// Strict (rho-shifted) coordinates.
class Signature {
public:
    Signature() = default;
    Signature(GroupFamily f, std::vector<int> parts) : family_(f), parts_(std::move(parts)) { validate(); }

    const GroupFamily& family() const { return family_; }
    const std::vector<int>& parts() const { return parts_; }
    int rank() const { return family_.rank; }
    int operator[](std::size_t i) const { return parts_[i]; }

    auto operator<=>(const Signature&) const = default;
    bool operator==(const Signature&) const = default;

private:
    void validate() const {
        const int n = family_.rank;
        if (static_cast<int>(parts_.size()) != n)
            throw InvalidSignature("signature length " + std::to_string(parts_.size()) + " != rank " + std::to_string(n));
        for (int i = 0; i + 1 < n; ++i)
            if (parts_[i] <= parts_[i + 1]) throw InvalidSignature("signature parts must be strictly decreasing");
        if (family_.tag == Family::O && parts_.back() < 0) throw InvalidSignature("O signature needs l_n >= 0");
        if (family_.tag == Family::Sp && parts_.back() <= 0) throw InvalidSignature("Sp signature needs l_n > 0");
    }

    GroupFamily family_;
    std::vector<int> parts_;
};

inline std::string to_string(const Signature& s) {
    std::string r;
    for (std::size_t i = 0; i < s.parts().size(); ++i) {
        if (i) r += ';';
        r += std::to_string(s[i]);
    }
    return r;
}

inline Signature trivial_signature(GroupFamily f) {
    const int n = f.rank;
    std::vector<int> p(n);
    for (int j = 0; j < n; ++j) p[j] = (f.tag == Family::Sp) ? n - j : n - 1 - j;
    return {f, p};
}

namespace detail {

inline void enumerate_rec(int lo, int hi, int remaining, std::vector<int>& cur, const GroupFamily& f,
                          std::vector<Signature>& out) {
    if (remaining == 0) {
        out.emplace_back(f, cur);
        return;
    }
    for (int v = hi; v - (remaining - 1) >= lo; --v) {
        cur.push_back(v);
        enumerate_rec(lo, v - 1, remaining - 1, cur, f, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Descending lexicographic order.
inline std::vector<Signature> enumerate_signatures(GroupFamily f, int bound) {
    int lo = -bound;
    if (f.tag == Family::O) lo = 0;
    if (f.tag == Family::Sp) lo = 1;
    std::vector<Signature> out;
    std::vector<int> cur;
    if (bound >= 0) detail::enumerate_rec(lo, bound, f.rank, cur, f, out);
    if (out.empty())
        throw EmptyEnumeration("no " + to_string(f) + " signature with |parts| <= " + std::to_string(bound));
    return out;
}

inline long long dimension_unitary(const Signature& m) {
    if (m.family().tag != Family::U) throw InvalidSignature("dimension_unitary needs a U signature");
    const int n = m.rank();
    long double num = 1.0L, den = 1.0L;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) num *= static_cast<long double>(m[a] - m[b]);
    for (int j = 1; j <= n - 1; ++j)
        for (int i = 2; i <= j; ++i) den *= i;
    const long double d = num / den;
    const long double r = std::round(d);
    if (r < 1.0L || std::fabs(d - r) > 1e-6L * r) throw InternalError("dimension formula produced a non-integer");
    return static_cast<long long>(r);
}

inline Signature shift_signature(const Signature& m, int k) {
    if (m.family().tag != Family::U) throw InvalidSignature("shift_signature needs a U signature");
    std::vector<int> p = m.parts();
    for (int& x : p) x += k;
    return {m.family(), p};
}

// Signature of the contragredient: m*_j = n-1-m_{n+1-j}.
inline Signature dual_signature(const Signature& m) {
    if (m.family().tag != Family::U) throw InvalidSignature("dual_signature needs a U signature");
    const int n = m.rank();
    std::vector<int> p(n);
    for (int j = 0; j < n; ++j) p[j] = n - 1 - m[n - 1 - j];
    return {m.family(), p};
}

}  // namespace plancherel
