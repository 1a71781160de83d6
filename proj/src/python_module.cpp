#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cobord/ahss.hpp"
#include "cobord/charclass.hpp"
#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"
#include "cobord/fpmodule.hpp"
#include "cobord/gmod.hpp"
#include "cobord/report.hpp"
#include "cobord/steenrod.hpp"

namespace py = pybind11;
using namespace cobord;

namespace {

// Nonzero degrees only, as text.
std::map<int, std::string> groups(const DegreewiseModule& m)
{
    std::map<int, std::string> out;
    for (int d = m.lo(); d <= m.hi(); ++d)
        if (!m.at(d).is_zero())
            out[d] = m.at(d).str();
    return out;
}

py::dict verdict_dict(const Verdict& v)
{
    py::dict d;
    d["status"] = status_name(v.status);
    d["failed_stage"] = v.failed_stage ? py::cast(*v.failed_stage) : py::none();
    d["failing_dependency"] = v.failing_dependency;
    d["witness"] = v.witness;
    py::list trace;
    for (const auto& s : v.trace) {
        py::dict step;
        step["statement"] = s.statement;
        step["anchor"] = s.anchor;
        step["axiom"] = s.axiom;
        step["witness"] = s.witness;
        trace.append(step);
    }
    d["trace"] = trace;
    d["trace_problems"] = validate_trace(v);
    return d;
}

const SqAlgebra& shared_ring()
{
    static const SqAlgebra r = extraspecial_ring(10);
    return r;
}

}  // namespace

PYBIND11_MODULE(_cobord, m)
{
    m.doc() = "BP^* and Steenrod computations on the order-32 extraspecial group";
    m.attr("__version__") = kArtifactVersion;
    m.attr("DEFAULT_GENERATOR_COUNT") = kDefaultGeneratorCount;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<WindowError>(m, "WindowError", PyExc_IndexError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
    py::register_exception<IntegralityError>(m, "IntegralityError", PyExc_ArithmeticError);

    m.def(
        "two_series",
        [](int n, int k) {
            const CSeries s = two_series(n, k);
            std::vector<std::string> c;
            for (const auto& e : s.coefficients())
                c.push_back(e.str());
            return c;
        },
        py::arg("n"), py::arg("k") = kDefaultGeneratorCount, "Coefficients of c1^1..c1^n of [2](c1) as text.");
    m.def(
        "two_series_text", [](int n, int k) { return two_series(n, k).str(); }, py::arg("n"),
        py::arg("k") = kDefaultGeneratorCount);
    m.def(
        "formal_sum_consistent", [](int n) { return TwoTypicalFGL(n).formal_sum_consistent(); }, py::arg("n"));

    m.def(
        "skeleton_presentation", [](int n, int k) { return skeleton_presentation(n, k).str(); }, py::arg("n"),
        py::arg("k") = kDefaultGeneratorCount);
    m.def(
        "resolution_exact",
        [](int n, int lo, int hi, int k) { return resolution_exactness_check(n, lo, hi, k).exact; }, py::arg("n"),
        py::arg("lo"), py::arg("hi"), py::arg("k") = kDefaultGeneratorCount);
    m.def(
        "tensor_unit_skeleton",
        [](int n, int lo, int hi, int k) { return groups(tensor_unit(skeleton_presentation(n, k), lo, hi)); },
        py::arg("n"), py::arg("lo"), py::arg("hi"), py::arg("k") = kDefaultGeneratorCount,
        "Z(2) (x) BP^*Y_2n by degree (nonzero degrees only).");
    m.def(
        "tor1_random_vs_skeleton",
        [](std::uint64_t seed, int n, int lo, int hi) {
            const FPModule a = random_fpmodule(seed);
            const FPModule y = skeleton_presentation(n);
            const auto r = tor1_via_resolution(a, y, lo, hi);
            return py::make_tuple(groups(r), r == tor1_bruteforce(a, y, lo, hi));
        },
        py::arg("seed"), py::arg("n"), py::arg("lo"), py::arg("hi"),
        "Tor_1 of a seeded random module against BP^*Y_2n, and whether both computations agree.");
    m.def(
        "tor_constraints", [](int n) { return tor_constraint_system(n, two_series(std::max(n, 1))); }, py::arg("n"));

    m.def("sq3_w4_bso4", [] {
        const SqAlgebra b = bso4_ring(12);
        return b.sq(3, b.gen("w4")).str();
    });
    m.def("extraspecial_dimensions", [] { return shared_ring().poincare_series(); });
    m.def("torsion_shift_passes", [] { return torsion_shift_check(shared_ring()).pass(); });
    m.def(
        "sq",
        [](int k, const std::string& cls) {
            const SqAlgebra& a = shared_ring();
            return a.sq(k, a.reduce(a.parse(cls))).str();
        },
        py::arg("k"), py::arg("cls"), "Sq^k in H^*(BG, Z/2) on a class written in x1..x4, w4.");
    m.def(
        "obstruction",
        [](const std::string& cls) {
            const SqAlgebra b = bso4_ring(12);
            const auto o = ah_obstruction(b.parse(cls), b);
            return py::make_tuple(o.sq3.str(), verdict_name(o.verdict));
        },
        py::arg("cls"), "Sq^3 of a class in H^*(BSO(4), Z/2) and the obstruction verdict.");

    m.def(
        "euler_identity",
        [](int epsilon) {
            const auto e = euler_identity_check(epsilon);
            py::dict d;
            d["difference"] = e.difference.str();
            d["chi"] = e.chi.str();
            d["identity_holds"] = e.identity_holds;
            d["squared_identity_holds"] = e.squared_identity_holds;
            d["c1_vanishes"] = e.c1_vanishes;
            return d;
        },
        py::arg("epsilon") = kOrientationSign);

    m.def(
        "lemma64",
        [](const std::string& axioms, int h7_free_rank) {
            return verdict_dict(lemma64_decide(bg_cohomology_input(shared_ring(), AxiomSet::parse(axioms), h7_free_rank)));
        },
        py::arg("axioms") = "all", py::arg("h7_free_rank") = 0);

    m.def("claim_ids", &claim_ids);
    m.def(
        "run",
        [](const std::string& command, const std::map<std::string, std::string>& config, std::optional<int> n,
           bool oracle, const std::string& check) {
            RunConfig cfg;
            for (const auto& [key, value] : config)
                cfg.set(key, value);
            Request req;
            req.command = command;
            req.n = n;
            req.oracle = oracle;
            req.check = check;
            py::gil_scoped_release release;
            return run(req, cfg).to_json().dump();
        },
        py::arg("command") = "verify", py::arg("config") = std::map<std::string, std::string>{},
        py::arg("n") = py::none(), py::arg("oracle") = false, py::arg("check") = "",
        "Runs a command and returns the JSON report as text.");
}
