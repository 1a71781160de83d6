#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cobord/charclass.hpp"
#include "cobord/errors.hpp"
#include "cobord/gmod.hpp"
#include "cobord/report.hpp"

using namespace cobord;

namespace {

constexpr int kUsageError = 2;

int print_report(const Report& rep, const std::string& format, const std::string& json_path)
{
    const std::string doc = rep.to_json().dump(2) + "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return kUsageError;
        }
        out << doc;
    }
    if (format == "json")
        std::cout << doc;
    else
        std::cout << rep.text();
    return rep.exit_code();
}

int obstruct(const std::string& expr)
{
    const SqAlgebra b = bso4_ring(12);
    const MGPoly cls = b.parse(expr);
    if (!cls.is_homogeneous())
        throw ConfigError("'" + expr + "' is not homogeneous");
    const AHObstruction o = ah_obstruction(cls, b);
    std::cout << "Sq^3(" << cls.str() << ") = " << o.sq3.str() << " in H^*(BSO(4), Z/2): " << verdict_name(o.verdict)
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification driver for the BP and Steenrod computations on the extraspecial group"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<int> deg;
    std::optional<int> n;
    std::optional<std::string> window;
    std::optional<std::string> axioms;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format;
    std::string json_path;
    std::string config_path;
    app.add_option("--deg", deg, "Length of the printed 2-series");
    app.add_option("--n", n, "Skeleton Y_2n (skeleton, tor), free rank of H^7 (lemma64), or largest n (verify)");
    app.add_option("--window", window, "Degree window LO..HI of the selected module");
    app.add_option("--axioms", axioms, "all, none, or a comma-separated list of axiom tags");
    app.add_option("--seed", seed, "Seed for random modules and random Steenrod elements");
    app.add_option("--format", format, "text or json on stdout");
    app.add_option("--json", json_path, "Also write the JSON report here");
    app.add_option("--config", config_path, "key=value config file; flags override it");

    std::string target = "all";
    auto* verify = app.add_subcommand("verify", "Run every check in dependency order");
    verify->add_option("target", target, "Only 'all' is supported")->check(CLI::IsMember({"all"}));
    auto* fgl = app.add_subcommand("fgl", "2-series, integrality and formal sum");
    auto* skeleton = app.add_subcommand("skeleton", "Skeleton resolutions and BP^*Y_8 (x) Z(2)");
    bool oracle = false;
    auto* tor = app.add_subcommand("tor", "Tor constraint rows; --oracle compares the two Tor computations");
    tor->add_flag("--oracle", oracle, "Run the oracle matrix");
    std::string steenrod_check;
    auto* steenrod = app.add_subcommand("steenrod", "Steenrod algebra checks");
    steenrod->add_option("--check", steenrod_check, "sq3w4, torsion-shift, freeness, cartan or ideal-closure");
    std::string charclass_check;
    std::string obstruct_expr;
    auto* charclass = app.add_subcommand("charclass", "Chern classes and the Atiyah-Hirzebruch obstruction");
    charclass->add_option("--check", charclass_check, "euler-identity or ah-obstruction");
    charclass->add_option("--obstruct", obstruct_expr, "Sq^3 of a class in H^*(BSO(4), Z/2), e.g. w4");
    auto* lemma = app.add_subcommand("lemma64", "Leading-term decision for the degree-8 Tor classes");
    std::string report_path;
    auto* report = app.add_subcommand("report", "Render a saved JSON report as text");
    report->add_option("path", report_path, "JSON report")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (report->parsed()) {
            std::ifstream in(report_path);
            if (!in)
                throw ConfigError("cannot read " + report_path);
            const Report rep = Report::from_json(nlohmann::ordered_json::parse(in));
            std::cout << rep.text(false);
            return rep.exit_code();
        }

        RunConfig cfg;
        if (!config_path.empty())
            cfg.load_file(config_path);
        if (deg)
            cfg.deg = *deg;
        if (axioms)
            cfg.axioms = AxiomSet::parse(*axioms);
        if (seed)
            cfg.seed = *seed;
        if (format)
            cfg.format = *format;

        Request req;
        req.command = app.get_subcommands().front()->get_name();
        if (n) {
            if (verify->parsed())
                cfg.n = *n;
            else
                req.n = *n;
        }
        if (window) {
            const Window w = Window::parse(*window);
            if (skeleton->parsed())
                cfg.skeleton_window = w;
            else if (tor->parsed())
                cfg.tor_window = w;
            else if (lemma->parsed())
                cfg.ahss_window = w;
            else
                throw ConfigError("--window applies to skeleton, tor and lemma64 only");
        }
        req.oracle = oracle;
        req.check = steenrod->parsed() ? steenrod_check : charclass_check;
        cfg.validate();

        if (charclass->parsed() && !obstruct_expr.empty())
            return obstruct(obstruct_expr);

        const Report rep = run(req, cfg);
        if (tor->parsed() && cfg.format == "text") {
            const CSeries s = two_series(std::max(cfg.n, req.n.value_or(0)), cfg.k);
            for (const auto& row : tor_constraint_system(req.n.value_or(cfg.n), s))
                std::cout << row << "\n";
        }
        if (fgl->parsed() && cfg.format == "text" && !rep.claims.empty())
            std::cout << rep.claims.front().witness << "\n";
        return print_report(rep, cfg.format, json_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
}
