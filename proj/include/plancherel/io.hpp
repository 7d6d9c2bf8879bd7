#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plancherel/coefficients.hpp"
#include "plancherel/errors.hpp"
#include "plancherel/signatures.hpp"

namespace plancherel {

// Shortest decimal is not required; 17 significant digits always round-trip.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline nlohmann::json calibration_to_json(const Calibration& cal) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, kappa] : cal.kappa)
        entries.push_back({{"family", family_tag(key.first)}, {"rank", key.second}, {"kappa", kappa}});
    return {{"format", "plancherel-calibration"}, {"version", 1}, {"entries", entries}};
}

inline Calibration calibration_from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "plancherel-calibration") throw std::invalid_argument("not a calibration file");
    Calibration cal;
    for (const auto& e : j.at("entries"))
        cal.set(GroupFamily(parse_family(e.at("family").get<std::string>()), e.at("rank").get<int>()),
                e.at("kappa").get<double>());
    return cal;
}

inline Calibration load_calibration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open calibration file " + path);
    return calibration_from_json(nlohmann::json::parse(in));
}

inline void save_calibration(const std::string& path, const Calibration& cal) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write calibration file " + path);
    out << calibration_to_json(cal).dump(2) << '\n';
}

inline nlohmann::json signature_to_json(const Signature& s) {
    return {{"family", family_tag(s.family().tag)}, {"rank", s.rank()}, {"parts", s.parts()}};
}

inline Signature signature_from_json(const nlohmann::json& j) {
    const GroupFamily f(parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>());
    return {f, j.at("parts").get<std::vector<int>>()};
}

// {"family": "U", "rank": n, "terms": [{"parts": [...], "re": x, "im": y}, ...]}
inline HarmonicExpansion expansion_from_json(const nlohmann::json& j) {
    HarmonicExpansion e{GroupFamily(parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()), {}};
    for (const auto& t : j.at("terms"))
        e.add(Signature(e.family, t.at("parts").get<std::vector<int>>()),
              cplx(t.at("re").get<double>(), t.value("im", 0.0)));
    return e;
}

inline nlohmann::json expansion_to_json(const HarmonicExpansion& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [sig, v] : e.terms) terms.push_back({{"parts", sig.parts()}, {"re", v.real()}, {"im", v.imag()}});
    return {{"family", family_tag(e.family.tag)}, {"rank", e.family.rank}, {"terms", terms}};
}

}  // namespace plancherel
