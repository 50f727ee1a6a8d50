#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zising/arrangement.hpp"
#include "zising/correlations.hpp"
#include "zising/elliptic.hpp"
#include "zising/json_io.hpp"
#include "zising/nearcritical.hpp"
#include "zising/oracle.hpp"
#include "zising/region.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string regionPath;
    double m = 0.0;
    int seed = 0;
    std::string format = "json";
    std::string outPath;
    double t = 0.0;
    bool dumpGraph = false;
    bool strict = false;
};

struct ExitWith {
    int code;
    std::string message;
};

zising::Region load_region(const Options& opt) {
    std::ifstream in(opt.regionPath);
    if (!in) throw ExitWith{kExitParse, "cannot open region file: " + opt.regionPath};
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ExitWith{kExitParse, std::string("malformed JSON: ") + e.what()};
    }
    zising::Region r;
    try {
        r = zising::region_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw ExitWith{kExitValidation, e.what()};
    } catch (const std::runtime_error& e) {
        throw ExitWith{kExitNumerical, e.what()};
    }
    auto violations = zising::validate(r);
    if (!violations.empty()) {
        std::string msg = "invalid region:";
        for (const auto& v : violations) msg += "\n  - " + v;
        throw ExitWith{kExitValidation, msg};
    }
    return r;
}

void require_m(double m) {
    if (!(m < 1.0)) throw ExitWith{kExitValidation, "--m must be < 1"};
}

void emit(const Options& opt, const std::string& text) {
    if (opt.outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.outPath, std::ios::binary);
    if (!out) throw ExitWith{kExitNumerical, "cannot open output file: " + opt.outPath};
    out << text;
}

void emit_matrix(const Options& opt, const nlohmann::json& extra, const Eigen::MatrixXd& m) {
    if (opt.format == "csv") {
        emit(opt, zising::matrix_to_csv(m));
        return;
    }
    nlohmann::json out = extra;
    out["M"] = zising::matrix_to_json(m);
    emit(opt, out.dump(2) + "\n");
}

int cmd_validate(const Options& opt) {
    load_region(opt);
    emit(opt, "{\"valid\": true}\n");
    return 0;
}

int cmd_correlate(const Options& opt) {
    zising::Region r = load_region(opt);
    require_m(opt.m);
    zising::CorrelationResult res;
    try {
        res = zising::correlation_matrix(r, opt.m);
    } catch (const std::exception& e) {
        throw ExitWith{kExitNumerical, e.what()};
    }
    std::fprintf(stderr, "condition number of A K_n: %.6g\n", res.cond);
    if (opt.strict && res.cond > 1e12)
        throw ExitWith{kExitNumerical,
                       "condition number " + std::to_string(res.cond) + " exceeds 1e12"};
    emit_matrix(opt, nlohmann::json::object(), res.M);
    return 0;
}

int cmd_oracle(const Options& opt) {
    zising::Region r = load_region(opt);
    require_m(opt.m);
    try {
        zising::ChordArrangement arr = zising::build_arrangement(r, opt.seed);
        zising::IsingGraph g = zising::build_black_graph(arr, opt.m);
        zising::OracleResult res = zising::exact_correlations(g);
        nlohmann::json extra;
        extra["logZ"] = res.logZ;
        if (opt.dumpGraph)
            extra["graph"] = zising::graph_to_json(arr, zising::enumerate_cells(arr), g);
        emit_matrix(opt, extra, res.correlations);
    } catch (const std::exception& e) {
        throw ExitWith{kExitNumerical, e.what()};
    }
    return 0;
}

int cmd_check(const Options& opt) {
    zising::Region r = load_region(opt);
    require_m(opt.m);
    bool ok = true;
    std::ostringstream report;
    try {
        zising::CorrelationResult res = zising::correlation_matrix(r, opt.m);
        if (opt.strict && res.cond > 1e12)
            throw ExitWith{kExitNumerical,
                           "condition number " + std::to_string(res.cond) + " exceeds 1e12"};

        double sym = (res.M - res.M.transpose()).cwiseAbs().maxCoeff();
        report << "symmetry residual: " << sym << "\n";
        ok = ok && sym < 1e-9;

        zising::ChordArrangement arr = zising::build_arrangement(r, opt.seed);
        zising::IsingGraph g = zising::build_black_graph(arr, opt.m);
        if (g.numVertices <= 24) {
            double dev =
                (res.M - zising::exact_correlations(g).correlations).cwiseAbs().maxCoeff();
            report << "formula vs enumeration: " << dev << "\n";
            ok = ok && dev < 1e-8;
        } else {
            report << "formula vs enumeration: skipped (" << g.numVertices
                   << " spins, enumeration capped at 24)\n";
        }

        std::vector<double> ts;
        for (int i = 0; i < 20; ++i) ts.push_back(0.05 + 6.2 * i / 20.0);
        for (int j : zising::tau_descents(r)) {
            if (j == r.n2() && opt.m != 0.0) continue;
            double dev = zising::descent_transport_check(r, opt.m, j, ts);
            report << "transport across descent " << j << ": " << dev << "\n";
            ok = ok && dev < 1e-9;
        }

        zising::DualityResiduals d = zising::duality_checks(r, opt.m, 50, opt.seed);
        report << "duality ratio spread: " << d.ratioSpread << "\n";
        report << "duality projector distance: " << d.projectorDistance << "\n";
        report << "coupling duality residual: " << d.kwResidual << "\n";
        ok = ok && d.ratioSpread < 1e-9 && d.projectorDistance < 1e-7 && d.kwResidual < 1e-10;
    } catch (const ExitWith&) {
        throw;
    } catch (const std::exception& e) {
        throw ExitWith{kExitNumerical, e.what()};
    }
    emit(opt, report.str());
    if (!ok) throw ExitWith{kExitNumerical, "consistency checks failed"};
    return 0;
}

int cmd_expand(const Options& opt) {
    zising::Region r = load_region(opt);
    zising::ExpansionSample s = zising::gamma_expansion(r, opt.t);
    nlohmann::json out;
    out["t"] = s.t;
    out["zeroth"] = std::vector<double>(s.zeroth.data(), s.zeroth.data() + s.zeroth.size());
    out["secondOrder"] =
        std::vector<double>(s.secondOrder.data(), s.secondOrder.data() + s.secondOrder.size());
    emit(opt, out.dump(2) + "\n");
    return 0;
}

int cmd_dualize(const Options& opt) {
    zising::Region r = load_region(opt);
    require_m(opt.m);
    nlohmann::json out = zising::region_to_json(zising::dual_region(r));
    out["m_dual"] = zising::dual_parameter(opt.m);
    emit(opt, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary spin correlations of polygonal Ising regions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool withM, bool withSeed, bool withFormat) {
        sub->add_option("region", opt.regionPath, "region JSON file")->required();
        if (withM) sub->add_option("--m", opt.m, "elliptic parameter (k^2 < 1; negatives allowed)");
        if (withSeed) sub->add_option("--seed", opt.seed, "jitter seed");
        if (withFormat)
            sub->add_option("--format", opt.format, "output format")
                ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", opt.outPath, "write output to a file instead of stdout");
        return sub;
    };

    CLI::App* validate = add_common(app.add_subcommand("validate", "check region conditions"),
                                    false, false, false);
    CLI::App* correlate = add_common(
        app.add_subcommand("correlate", "boundary correlation matrix via the curve formula"),
        true, false, true);
    correlate->add_flag("--strict", opt.strict, "fail on condition number > 1e12");
    CLI::App* oracle = add_common(
        app.add_subcommand("oracle", "correlation matrix by exact enumeration"), true, true, true);
    oracle->add_flag("--dump-graph", opt.dumpGraph, "include the arrangement and spin graph");
    CLI::App* check = add_common(
        app.add_subcommand("check", "cross-verify formula, enumeration, transport, duality"),
        true, true, false);
    check->add_flag("--strict", opt.strict, "fail on condition number > 1e12");
    CLI::App* expand = add_common(
        app.add_subcommand("expand", "leading terms of the curve in m at a sample point"),
        false, false, false);
    expand->add_option("--t", opt.t, "sample point");
    CLI::App* dualize =
        add_common(app.add_subcommand("dualize", "index-shifted dual region"), true, false, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (correlate->parsed()) return cmd_correlate(opt);
        if (oracle->parsed()) return cmd_oracle(opt);
        if (check->parsed()) return cmd_check(opt);
        if (expand->parsed()) return cmd_expand(opt);
        if (dualize->parsed()) return cmd_dualize(opt);
    } catch (const ExitWith& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
