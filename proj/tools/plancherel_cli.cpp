#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "plancherel/plancherel.hpp"

using namespace plancherel;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kOutDirEnv = "PLANCHEREL_OUT_DIR";

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string family = "U";
    int rank = 1;
    double sigma = 0.0, tau = 0.0, lambda = 0.0;
    int bound = 0;
    std::string calibration;
    std::string out;
    std::string format;
    unsigned seed = 0;
};

std::string fmt(double x) { return format_double(x); }

// Parses "a..b".
std::pair<double, double> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) throw UsageError("range '" + s + "' must look like a..b");
    try {
        std::size_t used = 0;
        const std::string a = s.substr(0, pos), b = s.substr(pos + 2);
        const double lo = std::stod(a, &used);
        if (used != a.size()) throw UsageError("bad range start in '" + s + "'");
        const double hi = std::stod(b, &used);
        if (used != b.size()) throw UsageError("bad range end in '" + s + "'");
        if (hi < lo) throw UsageError("range '" + s + "' is empty");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("range '" + s + "' must look like a..b");
    }
}

// Grid lo, lo+step, ... <= hi, computed as lo + i*step so values are reproducible.
std::vector<double> grid_values(std::pair<double, double> r, double step) {
    if (!(step > 0.0)) throw UsageError("--step must be positive");
    std::vector<double> v;
    for (long i = 0;; ++i) {
        const double x = r.first + static_cast<double>(i) * step;
        if (x > r.second + 1e-9 * step) break;
        v.push_back(x);
    }
    return v;
}

GroupFamily group(const Common& c) {
    try {
        return GroupFamily(parse_family(c.family), c.rank);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

SpectralParameter parameter(const Common& c) {
    const GroupFamily g = group(c);
    if (g.tag == Family::U) return SpectralParameter::U(g.rank, c.sigma, c.tau);
    if (g.tag == Family::O) return SpectralParameter::O(g.rank, c.lambda);
    return SpectralParameter::Sp(g.rank, c.lambda);
}

json parameter_json(const SpectralParameter& p) {
    if (p.family.tag == Family::U) return {{"sigma", p.sigma}, {"tau", p.tau}};
    return {{"lambda", p.lambda}};
}

Calibration load_cal(const Common& c) {
    if (c.calibration.empty()) {
        std::cerr << "WARNING: no --calibration file given; every kappa = 1 (UNCALIBRATED coefficients)\n";
        return {};
    }
    return load_calibration(c.calibration);
}

std::string resolve_out(const std::string& out) {
    if (out.empty() || out == "-") return "";
    std::filesystem::path p(out);
    if (p.is_relative())
        if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
    return p.string();
}

void emit(const std::string& out, const std::string& text) {
    const std::string path = resolve_out(out);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    if (const auto parent = std::filesystem::path(path).parent_path(); !parent.empty())
        std::filesystem::create_directories(parent);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write output file " + path);
    f << text;
}

json header(const std::string& command, const json& config, unsigned seed) {
    return {{"tool", "plancherel_cli"}, {"version", kVersion}, {"command", command}, {"config", config}, {"seed", seed}};
}

std::string csv_header(const json& h) {
    std::ostringstream s;
    s << "# tool: plancherel_cli " << kVersion << "\n";
    s << "# command: " << h.at("command").get<std::string>() << "\n";
    s << "# config: " << h.at("config").dump() << "\n";
    s << "# seed: " << h.at("seed").get<unsigned>() << "\n";
    return s.str();
}

// nlohmann writes the shortest decimal that round-trips each double.
std::string dump_json(const json& j) {
    std::string s = j.dump(2);
    return s + "\n";
}

json common_config(const Common& c, bool with_params) {
    json j{{"family", c.family}, {"rank", c.rank}, {"calibration", c.calibration.empty() ? json() : json(c.calibration)}};
    if (with_params) {
        if (c.family == "U") {
            j["sigma"] = c.sigma;
            j["tau"] = c.tau;
        } else {
            j["lambda"] = c.lambda;
        }
    }
    if (c.bound) j["bound"] = c.bound;
    return j;
}

void add_family_options(CLI::App* sub, Common& c) {
    sub->add_option("--family", c.family, "Group family: U, O or Sp")->check(CLI::IsMember({"U", "O", "Sp"}));
    sub->add_option("--rank", c.rank, "Rank n (U(n), O(2n), Sp(n))")->check(CLI::Range(1, 12));
    sub->add_option("--calibration", c.calibration, "Calibration constants file (JSON)");
    sub->add_option("--out", c.out, "Output file (relative paths go under $" + std::string(kOutDirEnv) + ")");
}

void add_param_options(CLI::App* sub, Common& c) {
    sub->add_option("--sigma", c.sigma, "sigma (U family)");
    sub->add_option("--tau", c.tau, "tau (U family)");
    sub->add_option("--lambda", c.lambda, "lambda (O and Sp families)");
}

// ---- coeffs ----

int run_coeffs(const Common& c) {
    const SpectralParameter p = parameter(c);
    const Calibration cal = load_cal(c);
    const auto sigs = default_scan_signatures(p.family, c.bound);
    std::vector<SignedLogValue> vals;
    try {
        for (const auto& s : sigs) vals.push_back(coefficient_log(p, s, cal));
    } catch (const PrefactorPole& e) {
        throw UsageError(std::string(e.what()) + "; use the `unipotent` subcommand at integer points");
    }
    const json h = header("coeffs", common_config(c, true), c.seed);
    if (c.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < sigs.size(); ++i)
            rows.push_back({{"signature", sigs[i].parts()},
                            {"coefficient", vals[i].value()},
                            {"log_magnitude", vals[i].is_zero() ? json() : json(vals[i].log_magnitude)},
                            {"sign", vals[i].sign}});
        emit(c.out, dump_json({{"header", h}, {"parameters", parameter_json(p)}, {"coefficients", rows}}));
        return kOk;
    }
    std::ostringstream s;
    s << csv_header(h);
    s << "family,rank,parameters,signature,coefficient,log_magnitude,sign\n";
    for (std::size_t i = 0; i < sigs.size(); ++i)
        s << c.family << ',' << c.rank << ',' << to_string(p) << ',' << to_string(sigs[i]) << ','
          << fmt(vals[i].value()) << ',' << (vals[i].is_zero() ? "-inf" : fmt(vals[i].log_magnitude)) << ','
          << vals[i].sign << '\n';
    emit(c.out, s.str());
    return kOk;
}

// ---- verify-identities ----

struct IdentityOpts {
    int n_max = 6;
    int instances = 500;
    double threshold = 1e-9;
    double gap = 1e-2;
    bool per_instance = false;
    std::string precision = "extended";  // which residual the pass column judges
};

int run_identities(const Common& c, const IdentityOpts& o) {
    if (o.n_max < 1 || o.instances < 1) throw UsageError("--n-max and --instances must be positive");
    std::mt19937_64 rng(c.seed);
    std::ostringstream s;
    const json cfg{{"n_max", o.n_max},         {"instances", o.instances}, {"threshold", o.threshold},
                   {"gap", o.gap},             {"precision", o.precision}};
    s << csv_header(header("verify-identities", cfg, c.seed));
    if (o.per_instance) s << "identity,n,instance,residual,residual_double\n";
    else s << "identity,n,instances,max_residual,max_residual_double,pass\n";
    bool ok = true;
    for (IdentityId id : kAllIdentities)
        for (int n = 1; n <= o.n_max; ++n) {
            double worst = 0.0, worst_double = 0.0;
            for (int i = 0; i < o.instances; ++i) {
                const IdentityInstance in = random_instance(id, n, rng, o.gap);
                const double r = identity_residual(in);
                const double rd = identity_residual(in, Precision::Double);
                worst = std::max(worst, r);
                worst_double = std::max(worst_double, rd);
                if (o.per_instance)
                    s << identity_name(id) << ',' << n << ',' << i << ',' << fmt(r) << ',' << fmt(rd) << '\n';
            }
            const bool pass = (o.precision == "double" ? worst_double : worst) <= o.threshold;
            ok = ok && pass;
            if (!o.per_instance)
                s << identity_name(id) << ',' << n << ',' << o.instances << ',' << fmt(worst) << ','
                  << fmt(worst_double) << ',' << (pass ? "true" : "false") << '\n';
        }
    emit(c.out, s.str());
    return ok ? kOk : kMismatch;
}

// ---- oracle-compare ----

struct OracleOpts {
    int grid = 512;
    std::string spacing = "graded";
    double tolerance = -1.0;
    std::string metric;
};

int run_oracle(const Common& c, const OracleOpts& o) {
    const SpectralParameter p = parameter(c);
    const Calibration cal = load_cal(c);
    if (!p.expansion_valid()) throw UsageError("parameters outside the expansion range");
    const int bound = c.bound ? c.bound : (p.family.rank == 1 ? 20 : 4);
    const auto sigs = enumerate_signatures(p.family, bound);
    const std::string metric = o.metric.empty() ? (p.family.rank == 1 ? "abs" : "rel") : o.metric;
    const double tol = o.tolerance > 0 ? o.tolerance : (p.family.rank == 1 ? 1e-7 : 1e-3);
    std::vector<cplx> q;
    std::string method;
    auto f = [&](const TorusPoint& t) { return ell(p, t); };
    if (p.family.rank == 1) {
        method = "adaptive";
        for (const auto& s : sigs) q.push_back(project_harmonic_adaptive(f, s));
    } else {
        QuadratureGrid g;
        g.family = p.family;
        g.points_per_dimension = o.grid;
        g.spacing = o.spacing == "uniform" ? Spacing::Uniform : Spacing::Graded;
        method = "trapezoid-" + o.spacing + "-" + std::to_string(o.grid);
        q = project_harmonics(f, sigs, g);
    }
    json cfg = common_config(c, true);
    cfg["bound"] = bound;
    cfg["method"] = method;
    cfg["metric"] = metric;
    cfg["tolerance"] = tol;
    std::ostringstream s;
    s << csv_header(header("oracle-compare", cfg, c.seed));
    s << "signature,closed_form,quadrature_re,quadrature_im,abs_error,rel_error,pass\n";
    bool ok = true;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        const double cf = coefficient(p, sigs[i], cal);
        const double ae = std::abs(q[i] - cf);
        const double re = ae / std::max(std::fabs(cf), std::numeric_limits<double>::min());
        const bool pass = (metric == "abs" ? ae : re) <= tol;
        ok = ok && pass;
        s << to_string(sigs[i]) << ',' << fmt(cf) << ',' << fmt(q[i].real()) << ',' << fmt(q[i].imag()) << ','
          << fmt(ae) << ',' << fmt(re) << ',' << (pass ? "true" : "false") << '\n';
    }
    emit(c.out, s.str());
    return ok ? kOk : kMismatch;
}

// ---- positivity-map ----

struct PositivityOpts {
    std::string sigma_range = "-3..1", tau_range = "-3..1", lambda_range = "-3..0.5";
    double step = 0.25;
};

json verdict_json(const PositivityVerdict& v) {
    json j{{"classification", to_string(v.classification)}, {"residue", v.residue}};
    if (v.witness) j["witness"] = {v.witness->first.parts(), v.witness->second.parts()};
    return j;
}

int run_positivity(const Common& c, const PositivityOpts& o) {
    const GroupFamily g = group(c);
    const Calibration cal = load_cal(c);
    json cells = json::array();
    json cfg = common_config(c, false);
    cfg["step"] = o.step;
    const int bound = c.bound ? c.bound : (g.rank <= 2 ? 8 : 5);
    cfg["bound"] = bound;
    auto cell = [&](const SpectralParameter& p) {
        const PositivityVerdict v = classify_positivity(p, bound, cal);
        json j = parameter_json(p);
        j.update(verdict_json(v));
        const auto a = analytic_definite(p);
        j["analytic_definite"] = a ? json(*a) : json();
        j["expansion_valid"] = p.expansion_valid();
        cells.push_back(j);
    };
    if (g.tag == Family::U) {
        cfg["sigma"] = o.sigma_range;
        cfg["tau"] = o.tau_range;
        for (double s : grid_values(parse_range(o.sigma_range), o.step))
            for (double t : grid_values(parse_range(o.tau_range), o.step)) cell(SpectralParameter::U(g.rank, s, t));
    } else {
        cfg["lambda"] = o.lambda_range;
        for (double l : grid_values(parse_range(o.lambda_range), o.step))
            cell(g.tag == Family::O ? SpectralParameter::O(g.rank, l) : SpectralParameter::Sp(g.rank, l));
    }
    emit(c.out, dump_json({{"header", header("positivity-map", cfg, c.seed)}, {"cells", cells}}));
    return kOk;
}

// ---- sobolev ----

struct SobolevOpts {
    std::string expansion;
    std::optional<double> s;
};

int run_sobolev(const Common& c, const SobolevOpts& o) {
    std::ifstream in(o.expansion);
    if (!in) throw UsageError("cannot open expansion file " + o.expansion);
    json ej;
    try {
        ej = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("expansion file: ") + e.what());
    }
    HarmonicExpansion q;
    try {
        q = expansion_from_json(ej);
    } catch (const json::exception& e) {
        throw UsageError(std::string("expansion file: ") + e.what());
    }
    if (q.family.tag != Family::U) throw UsageError("sobolev needs a U-family expansion");
    const SpectralParameter p = SpectralParameter::U(q.family.rank, c.sigma, c.tau);
    const double s = o.s ? *o.s : sobolev_exponent(p);
    json cfg{{"expansion", o.expansion}, {"sigma", c.sigma}, {"tau", c.tau}, {"s", s},
             {"calibration", c.calibration.empty() ? json() : json(c.calibration)}};
    json result{{"header", header("sobolev", cfg, c.seed)}, {"terms", q.terms.size()}};
    result["norm_sq_L2"] = sobolev_norm_sq(q, 0.0);
    result["norm_sq_minus_s"] = sobolev_norm_sq(q, -s);
    const Calibration cal = load_cal(c);
    try {
        const cplx ip = inner_product(q, q, p, cal);
        result["form"] = {{"re", ip.real()}, {"im", ip.imag()}};
    } catch (const PrefactorPole& e) {
        throw UsageError(e.what());
    }
    emit(c.out, dump_json(result));
    return kOk;
}

// ---- unipotent ----

struct UnipotentOpts {
    int alpha = 0;
};

int run_unipotent(const Common& c, const UnipotentOpts& o) {
    const GroupFamily g = group(c);
    const Calibration cal = load_cal(c);
    const int bound = c.bound ? c.bound : 6;
    json cfg = common_config(c, false);
    cfg["bound"] = bound;
    cfg["alpha"] = o.alpha;
    json blocks = json::array();
    bool ok = true;
    const auto sigs = enumerate_signatures(g, bound);
    if (g.tag == Family::U) {
        if (g.rank < 2) throw UsageError("unipotent points need rank >= 2 for the U family");
        if (o.alpha != 0 && (o.alpha < 1 || o.alpha > g.rank - 1)) throw UsageError("--alpha must lie in [1, n-1]");
        for (int a = 1; a <= g.rank - 1; ++a) {
            if (o.alpha && a != o.alpha) continue;
            json rows = json::array();
            std::map<int, std::pair<int, int>> summary;  // theta -> (count, sign)
            std::map<int, bool> constant;
            for (const auto& s : sigs) {
                const SignatureClass cl = classify_signature(a, s);
                const auto [k, j] = coefficient_orders(a, s);
                if ((k == 0) == cl.tail || (!cl.tail && j != cl.theta)) ok = false;
                json row{{"signature", s.parts()}, {"class", to_string(cl)}, {"k", k}, {"j", j}};
                if (!cl.tail) {
                    const double xi = xi_coefficient(a, j, s, cal);
                    row["xi"] = xi;
                    const int sg = xi > 0 ? 1 : -1;
                    auto& e = summary[j];
                    if (e.first == 0) {
                        e.second = sg;
                        constant[j] = true;
                    } else if (e.second != sg) {
                        constant[j] = false;
                    }
                    ++e.first;
                }
                rows.push_back(row);
            }
            json sum = json::array();
            for (const auto& [j, e] : summary) {
                sum.push_back({{"block", "Z" + std::to_string(j)}, {"count", e.first}, {"sign", e.second},
                               {"sign_constant", constant[j]}});
                ok = ok && constant[j];
            }
            blocks.push_back({{"alpha", a}, {"signatures", rows}, {"blocks", sum}});
        }
    } else if (g.tag == Family::O) {
        if (o.alpha != 0 && (o.alpha < 1 || o.alpha > g.rank)) throw UsageError("--alpha must lie in [1, n]");
        for (int a = 1; a <= g.rank; ++a) {
            if (o.alpha && a != o.alpha) continue;
            json rows = json::array();
            int sign = 0;
            bool constant = true;
            for (const auto& s : sigs) {
                const double lim = O_unipotent_limit(a, s, cal);
                const bool surv = classify_O_unipotent(a, s, g.rank);
                if (surv != (lim != 0.0)) ok = false;
                if (lim != 0.0) {
                    const int sg = lim > 0 ? 1 : -1;
                    if (sign && sg != sign) constant = false;
                    sign = sg;
                }
                rows.push_back({{"signature", s.parts()}, {"survivor", surv}, {"order", O_unipotent_order(a, s)},
                                {"limit", lim}});
            }
            ok = ok && constant;
            blocks.push_back({{"alpha", a}, {"lambda", -g.rank + a}, {"signatures", rows},
                              {"survivor_sign", sign}, {"sign_constant", constant}});
        }
    } else {
        throw UsageError("unipotent analysis is available for the U and O families");
    }
    emit(c.out, dump_json({{"header", header("unipotent", cfg, c.seed)}, {"alphas", blocks}}));
    return ok ? kOk : kMismatch;
}

// ---- calibrate ----

struct CalibrateOpts {
    int max_rank = 2;
    int grid = 512;
};

int run_calibrate(const Common& c, const CalibrateOpts& o) {
    if (o.max_rank < 1 || o.max_rank > 3) throw UsageError("--max-rank must lie in [1, 3]");
    Calibration cal;
    json fits = json::array();
    bool ok = true;
    for (Family f : {Family::U, Family::O, Family::Sp})
        for (int n = 1; n <= o.max_rank; ++n) {
            const CalibrationFit fit = fit_calibration(GroupFamily(f, n), o.grid);
            const bool pass = fit.accepted();
            ok = ok && pass;
            cal.set(fit.family, fit.kappa);
            fits.push_back({{"family", family_tag(f)}, {"rank", n}, {"kappa", fit.kappa}, {"exponent", fit.exponent},
                            {"raw_mean", fit.raw_mean}, {"spread", fit.spread}, {"accepted", pass}});
        }
    const json cfg{{"max_rank", o.max_rank}, {"grid", o.grid}};
    json doc = calibration_to_json(cal);
    doc["header"] = header("calibrate", cfg, c.seed);
    doc["fits"] = fits;
    emit(c.out.empty() ? "calibration.json" : c.out, dump_json(doc));
    if (!ok) std::cerr << "calibration fit rejected (spread or exponent out of range)\n";
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character expansions of determinant kernels on U(n), O(2n) and Sp(n)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Common c;
    app.add_option("--seed", c.seed, "Random seed")->capture_default_str();

    auto* coeffs = app.add_subcommand("coeffs", "Coefficient table");
    add_family_options(coeffs, c);
    add_param_options(coeffs, c);
    coeffs->add_option("--bound", c.bound, "Signature bound (default 8, or 5 for rank >= 3)");
    coeffs->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    IdentityOpts io;
    auto* ident = app.add_subcommand("verify-identities", "Random determinant-identity residuals");
    ident->add_option("--n-max", io.n_max, "Largest matrix size");
    ident->add_option("--instances", io.instances, "Instances per identity and size");
    ident->add_option("--threshold", io.threshold, "Residual threshold");
    ident->add_option("--gap", io.gap, "Minimal separation of parameters");
    ident->add_flag("--per-instance", io.per_instance, "One row per instance");
    ident->add_option("--precision", io.precision, "Residual judged against the threshold: extended or double")
        ->check(CLI::IsMember({"extended", "double"}));
    ident->add_option("--seed", c.seed, "Random seed");
    ident->add_option("--out", c.out, "Output file");

    OracleOpts oo;
    auto* oracle = app.add_subcommand("oracle-compare", "Closed form vs quadrature");
    add_family_options(oracle, c);
    add_param_options(oracle, c);
    oracle->add_option("--bound", c.bound, "Signature bound (default 20 for rank 1, else 4)");
    oracle->add_option("--grid", oo.grid, "Nodes per dimension (rank >= 2)");
    oracle->add_option("--spacing", oo.spacing, "graded or uniform")->check(CLI::IsMember({"graded", "uniform"}));
    oracle->add_option("--tolerance", oo.tolerance, "Tolerance (default 1e-7 abs for rank 1, 1e-3 rel otherwise)");
    oracle->add_option("--metric", oo.metric, "abs or rel")->check(CLI::IsMember({"abs", "rel"}));

    PositivityOpts po;
    auto* pos = app.add_subcommand("positivity-map", "Sign-definiteness verdicts on a parameter grid");
    add_family_options(pos, c);
    pos->add_option("--sigma", po.sigma_range, "sigma range a..b (U)");
    pos->add_option("--tau", po.tau_range, "tau range a..b (U)");
    pos->add_option("--lambda", po.lambda_range, "lambda range a..b (O, Sp)");
    pos->add_option("--step", po.step, "Grid step");
    pos->add_option("--bound", c.bound, "Signature bound");

    SobolevOpts so;
    auto* sob = app.add_subcommand("sobolev", "Sobolev norms and the kernel form of an expansion");
    sob->add_option("--expansion", so.expansion, "Expansion JSON file")->required();
    sob->add_option("--sigma", c.sigma, "sigma");
    sob->add_option("--tau", c.tau, "tau");
    sob->add_option("--s", so.s, "Sobolev exponent (default sigma+tau+n)");
    sob->add_option("--calibration", c.calibration, "Calibration constants file (JSON)");
    sob->add_option("--out", c.out, "Output file");

    UnipotentOpts uo;
    auto* uni = app.add_subcommand("unipotent", "Blow-up report at integer parameter points");
    add_family_options(uni, c);
    uni->add_option("--alpha", uo.alpha, "Only this alpha (default: all admissible)");
    uni->add_option("--bound", c.bound, "Signature bound (default 6)");

    CalibrateOpts co;
    auto* cal = app.add_subcommand("calibrate", "Fit the calibration constants and write them");
    cal->add_option("--max-rank", co.max_rank, "Largest rank to fit");
    cal->add_option("--grid", co.grid, "Nodes per dimension for rank >= 2");
    cal->add_option("--out", c.out, "Output file (default calibration.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*coeffs) return run_coeffs(c);
        if (*ident) return run_identities(c, io);
        if (*oracle) return run_oracle(c, oo);
        if (*pos) return run_positivity(c, po);
        if (*sob) return run_sobolev(c, so);
        if (*uni) return run_unipotent(c, uo);
        if (*cal) return run_calibrate(c, co);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const AnalyticEmpiricalMismatch& e) {
        std::cerr << "internal assertion failed: " << e.what() << "\n";
        return kInternal;
    } catch (const InvalidSignature& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const EmptyEnumeration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
