#include "cobord/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <sstream>

#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"
#include "cobord/fpmodule.hpp"
#include "cobord/gmod.hpp"
#include "cobord/steenrod.hpp"

namespace cobord {

namespace {

using nlohmann::ordered_json;

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    T v{};
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || p != t.data() + t.size())
        throw ConfigError(key + ": expected an integer, got '" + text + "'");
    return v;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

std::string one_line(std::string s)
{
    while (!s.empty() && s.back() == '\n')
        s.pop_back();
    for (std::size_t p; (p = s.find('\n')) != std::string::npos;)
        s.replace(p, 1, "; ");
    return s;
}

bool int_key(const std::string& key)
{
    return key == "k" || key == "N" || key == "n" || key == "deg" || key == "epsilon" || key == "seed" ||
           key == "samples" || key == "h7-rank-max";
}

const std::string& anchor_statement(const std::string& id)
{
    static const std::string none;
    if (auto it = anchor_registry().find(id); it != anchor_registry().end())
        return it->second;
    if (auto it = axiom_registry().find(id); it != axiom_registry().end())
        return it->second;
    return none;
}

ordered_json step_json(const TraceStep& s)
{
    ordered_json j;
    j["statement"] = s.statement;
    j["anchor"] = s.anchor;
    j["axiom"] = s.axiom;
    j["witness"] = s.witness;
    return j;
}

std::string step_text(const TraceStep& s)
{
    std::string out = s.statement;
    if (!s.anchor.empty())
        out += "  [" + s.anchor + "]";
    if (!s.axiom.empty())
        out += "  [axiom " + s.axiom + "]";
    if (!s.witness.empty())
        out += "  : " + s.witness;
    return out;
}

// Builds the records of one run; each claim is isolated from the others' failures.
class Runner {
public:
    Runner(const Request& req, const RunConfig& cfg) : req_(req), cfg_(cfg) {}

    Report report;

    void claim(const std::string& id, const std::string& anchor, const std::function<void(ClaimRecord&)>& body)
    {
        ClaimRecord rec;
        rec.id = id;
        rec.anchor = anchor;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(rec);
        } catch (const std::exception& e) {
            rec.status = ClaimStatus::Fail;
            rec.witness = std::string("error: ") + e.what();
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if ((rec.status == ClaimStatus::Pass || rec.status == ClaimStatus::Fail) && rec.witness.empty())
            rec.witness = "(no witness)";
        report.claims.push_back(std::move(rec));
    }

    const SqAlgebra& ring()
    {
        if (!ring_)
            ring_ = extraspecial_ring(10);
        return *ring_;
    }
    const SqAlgebra& bso4()
    {
        if (!bso4_)
            bso4_ = bso4_ring(12);
        return *bso4_;
    }

    std::vector<int> skeleta() const
    {
        if (req_.n)
            return {*req_.n};
        std::vector<int> ns;
        for (int n = 1; n <= cfg_.n; ++n)
            ns.push_back(n);
        return ns;
    }

    void fgl();
    void gmod(bool exactness, bool y8, bool oracles);
    void steenrod(const std::string& check);
    void charclass(const std::string& check);
    void ahss_input();
    void vi_injectivity();
    void lemma64(bool ablation);
    void prop_chain();
    void axioms();

private:
    const Request& req_;
    const RunConfig& cfg_;
    std::optional<SqAlgebra> ring_;
    std::optional<SqAlgebra> bso4_;
    std::optional<Verdict> lemma_f0_;
};

void pass_if(ClaimRecord& r, bool ok) { r.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail; }

void Runner::fgl()
{
    claim("fgl.two-series", "two-series", [&](ClaimRecord& r) {
        const int len = std::max(cfg_.deg, 4);
        const CSeries s = two_series(len, cfg_.k);
        const std::vector<BPElem> expected{
            BPElem(LocalInt2(2)), BPElem::monomial(VMonomial::generator(1)),
            BPElem::monomial(VMonomial({2}), LocalInt2(2)), BPElem::monomial(VMonomial::generator(2))};
        const std::vector<BPElem> head(s.coefficients().begin(), s.coefficients().begin() + 4);
        pass_if(r, head == expected);
        const auto& c = s.coefficients();
        r.witness = CSeries(std::vector<BPElem>(c.begin(), c.begin() + cfg_.deg)).str();
        r.trace.push_back({"coefficients of c1^1..c1^4", "two-series", "",
                           join({head[0].str(), head[1].str(), head[2].str(), head[3].str()}, ", ")});
    });
    claim("fgl.integrality", "two-series", [&](ClaimRecord& r) {
        const CSeries s = two_series(cfg_.truncation, cfg_.k);
        pass_if(r, s.degrees_consistent() && s.truncation() == cfg_.truncation);
        r.witness = "coefficients of c1^1..c1^" + std::to_string(cfg_.truncation) + " lie in Z(2)[v1..v" +
                    std::to_string(cfg_.k) + "] with degree 2 - 2j";
    });
    claim("fgl.formal-sum", "formal-sum", [&](ClaimRecord& r) {
        const TwoTypicalFGL f(cfg_.truncation);
        const bool sum = f.formal_sum_consistent();
        const bool log = f.log_consistent();
        const bool trip = f.basis_round_trip();
        pass_if(r, sum && log && trip);
        r.witness = std::string("F(x, x) = [2](x): ") + (sum ? "yes" : "no") + ", log [2](x) = 2 log x: " +
                    (log ? "yes" : "no") + ", m <-> v round trip: " + (trip ? "yes" : "no") + " (to x^" +
                    std::to_string(cfg_.truncation) + ")";
    });
}

void Runner::gmod(bool exactness, bool y8, bool oracles)
{
    if (exactness)
        claim("gmod.resolution-exactness", "skeleton-resolution", [&](ClaimRecord& r) {
            const Window& w = cfg_.skeleton_window;
            bool ok = true;
            std::vector<std::string> parts;
            for (int n : skeleta()) {
                const auto rep = resolution_exactness_check(n, w.lo, w.hi, cfg_.k);
                ok = ok && rep.exact;
                parts.push_back("n = " + std::to_string(n) + ": " +
                                (rep.exact ? "exact" : "kernel in degree " + std::to_string(*rep.first_failing_degree)));
            }
            pass_if(r, ok);
            r.witness = join(parts, ", ") + " on " + w.str();
        });
    if (y8)
        claim("gmod.tensor-unit-y8", "y8-surjective", [&](ClaimRecord& r) {
            const DegreewiseModule y = tensor_unit(skeleton_presentation(4, cfg_.k), 0, 8);
            bool ok = y.at(0) == AbelianGroup{1, {}};
            for (int d = 1; d <= 8; ++d)
                ok = ok && y.at(d) == (d % 2 == 0 ? AbelianGroup{0, {1}} : AbelianGroup{});
            pass_if(r, ok);
            r.witness = one_line(y.str());
        });
    if (oracles)
        claim("gmod.tor-oracles", "kunneth-sequence", [&](ClaimRecord& r) {
            const Window& w = cfg_.tor_window;
            std::vector<std::pair<std::string, FPModule>> ms;
            ms.emplace_back("free", FPModule({0}));
            for (int n = 1; n <= cfg_.n; ++n)
                ms.emplace_back("Y" + std::to_string(2 * n), skeleton_presentation(n, cfg_.k));
            for (std::uint64_t s = cfg_.seed; s < cfg_.seed + 5; ++s)
                ms.emplace_back("random" + std::to_string(s), random_fpmodule(s));
            std::size_t compared = 0;
            std::vector<std::string> bad;
            for (int n : skeleta()) {
                const FPModule y = skeleton_presentation(n, cfg_.k);
                for (const auto& [name, m] : ms) {
                    ++compared;
                    if (!(tor1_via_resolution(m, y, w.lo, w.hi, cfg_.k) == tor1_bruteforce(m, y, w.lo, w.hi, cfg_.k)))
                        bad.push_back(name + " vs Y" + std::to_string(2 * n));
                }
            }
            pass_if(r, bad.empty());
            r.witness = bad.empty() ? std::to_string(compared) + " pairs agree degreewise on " + w.str()
                                    : "disagree: " + join(bad, ", ");
        });
}

void Runner::steenrod(const std::string& check)
{
    const bool all = check.empty();
    if (all || check == "sq3w4")
        claim("steenrod.sq3w4", "sq3-w4", [&](ClaimRecord& r) {
            const MGPoly s = bso4().sq(3, bso4().gen("w4"));
            pass_if(r, s == bso4().parse("w3*w4"));
            r.witness = "Sq^3 w4 = " + s.str();
        });
    if (all || check == "cartan") {
        std::optional<CartanReport> rep;
        auto run_once = [&] {
            if (!rep)
                rep = cartan_unstability_check(ring(), cfg_.samples, cfg_.seed);
            return *rep;
        };
        claim("steenrod.cartan", "cartan-formula", [&](ClaimRecord& r) {
            const CartanReport c = run_once();
            pass_if(r, !c.cartan_failure);
            r.witness = c.cartan_failure ? "fails for " + *c.cartan_failure
                                         : std::to_string(c.cartan_checked) + " identities on " +
                                               std::to_string(c.samples) + " random pairs";
        });
        claim("steenrod.unstability", "cartan-formula", [&](ClaimRecord& r) {
            const CartanReport c = run_once();
            pass_if(r, !c.unstability_failure);
            r.witness = c.unstability_failure ? *c.unstability_failure
                                              : std::to_string(c.unstability_checked) + " identities on " +
                                                    std::to_string(c.samples) + " random elements";
        });
    }
    if (all || check == "ideal-closure")
        claim("steenrod.ideal-closure", "ideal-closure", [&](ClaimRecord& r) {
            const auto v = ring().ideal_closure_violation();
            pass_if(r, !v);
            r.witness = v ? *v : std::to_string(ring().ideal().size()) + " relations closed to degree 10";
        });
    const auto sw = [&] { return std::vector<MGPoly>{ring().named.at("w2"), ring().named.at("w3"), ring().gen("w4")}; };
    if (all || check == "freeness") {
        claim("steenrod.freeness", "sw-freeness", [&](ClaimRecord& r) {
            const auto f = freeness_check(ring(), sw(), 8);
            pass_if(r, f.free && f.polynomial_subalgebra);
            std::vector<std::string> gens;
            for (auto g : f.module_generators)
                gens.push_back(std::to_string(g));
            r.witness = f.free ? "free over F_2[w2, w3, w4] to degree 8, generators per degree " + join(gens, " ")
                               : "fails in degree " + std::to_string(f.first_failing_degree.value_or(-1)) + ": " +
                                     f.dependency;
        });
        claim("steenrod.control-extra-relation", "sw-freeness", [&](ClaimRecord& r) {
            const SqAlgebra m = ring().with_extra_relation(ring().parse("w4*x1"));
            const auto f = freeness_check(m, sw(), 8);
            pass_if(r, !f.free);
            r.witness = f.free ? "extra relation w4*x1 went undetected"
                               : "extra relation w4*x1 breaks freeness in degree " +
                                     std::to_string(f.first_failing_degree.value_or(-1));
        });
    }
    if (all || check == "torsion-shift") {
        claim("steenrod.torsion-shift", "torsion-shift", [&](ClaimRecord& r) {
            const auto t = torsion_shift_check(ring());
            pass_if(r, t.pass());
            r.witness = t.pass() ? "Sq^3(w4 + Sq^1 z) != 0 for all " + std::to_string(t.enumerated) + " z in H^3"
                                 : "Sq^3(w4 + Sq^1 z) = 0 for " + t.witness.value_or("(weight check)");
        });
        claim("steenrod.control-sq3w4-zero", "torsion-shift", [&](ClaimRecord& r) {
            const SqAlgebra m = ring().with_sq_entry("w4", 3, MGPoly(ring().generators()));
            const auto t = torsion_shift_check(m);
            pass_if(r, !t.pass());
            r.witness = t.pass() ? "Sq^3 w4 := 0 went undetected"
                                 : "Sq^3 w4 := 0 gives the witness " + t.witness.value_or("(weight check)");
        });
    }
}

void Runner::charclass(const std::string& check)
{
    const bool all = check.empty();
    if (all || check == "euler-identity") {
        const EulerIdentityReport e = euler_identity_check(cfg_.epsilon);
        claim("charclass.euler-identity", "euler-identity", [&](ClaimRecord& r) {
            pass_if(r, e.identity_holds && e.weyl_invariant);
            r.witness = "c2(A) - c2(B) = " + e.difference.str() + ", chi = " + e.chi.str() +
                        " (epsilon = " + std::to_string(e.epsilon) + ")";
        });
        claim("charclass.squared-identity", "squared-identity", [&](ClaimRecord& r) {
            pass_if(r, e.squared_identity_holds);
            r.witness = "(2 chi)^2 = " + (RootPoly::constant(4) * e.chi * e.chi).str();
        });
        claim("charclass.c1-vanishes", "c1-vanishing", [&](ClaimRecord& r) {
            pass_if(r, e.c1_vanishes);
            r.witness = "c1(A) = " + chern_class(restrict_rep(RepTag::A), 1).str() +
                        ", c1(B) = " + chern_class(restrict_rep(RepTag::B), 1).str();
        });
    }
    if (all || check == "ah-obstruction")
        claim("charclass.ah-obstruction", "sq3-w4", [&](ClaimRecord& r) {
            const auto o = ah_obstruction(bso4().gen("w4"), bso4());
            pass_if(r, o.verdict == ObstructionVerdict::Obstructed);
            r.witness = "Sq^3 w4 = " + o.sq3.str() + ": " + verdict_name(o.verdict);
        });
}

void Runner::ahss_input()
{
    claim("ahss.input", "bockstein-rank", [&](ClaimRecord& r) {
        const CohomologyInput in = bg_cohomology_input(ring(), cfg_.axioms);
        std::vector<std::string> groups;
        for (int s = 1; s <= in.dimension; ++s)
            groups.push_back("H^" + std::to_string(s) + " = " + in.h[static_cast<std::size_t>(s)].str());
        for (const auto& n : in.notes)
            r.trace.push_back({n, "bockstein-rank", "", ""});
        pass_if(r, true);
        r.witness = join(groups, "; ");
        if (!in.holes().empty())
            r.witness += "; " + std::to_string(in.holes().size()) + " summands known only up to a lower bound";
    });
}

void Runner::vi_injectivity()
{
    claim("ahss.vi-injectivity", "vi-injective", [&](ClaimRecord& r) {
        const EInftyModel m(bg_cohomology_input(ring(), cfg_.axioms), cfg_.ahss_window.lo, cfg_.ahss_window.hi, cfg_.k);
        const auto rep = vi_injectivity_report(m);
        pass_if(r, rep.pass);
        r.witness = rep.violation ? *rep.violation
                                  : std::to_string(rep.maps_checked) + " maps, " +
                                        std::to_string(rep.non_injective.size()) +
                                        " non-injective v1 maps, all over H^6 or H^7";
    });
}

void Runner::lemma64(bool ablation)
{
    claim("lemma64", "leading-term", [&](ClaimRecord& r) {
        std::vector<int> ranks;
        if (req_.command == "lemma64" && req_.n)
            ranks.push_back(*req_.n);
        else
            for (int f = 0; f <= cfg_.h7_rank_max; ++f)
                ranks.push_back(f);
        std::optional<Verdict> first;
        std::optional<Verdict> failing;
        std::vector<std::string> parts;
        for (int f : ranks) {
            const Verdict v = lemma64_decide(bg_cohomology_input(ring(), cfg_.axioms, f), cfg_.ahss_window.lo,
                                             cfg_.ahss_window.hi, cfg_.k);
            if (f == 0)
                lemma_f0_ = v;
            const auto problems = validate_trace(v);
            std::string part = "f = " + std::to_string(f) + ": " + status_name(v.status);
            if (v.failed_stage)
                part += " at stage " + std::to_string(*v.failed_stage);
            if (!problems.empty())
                part += " (invalid trace: " + problems.front() + ")";
            parts.push_back(part);
            if (!first)
                first = v;
            if (!failing && (v.status != Status::ForcedZero || !problems.empty()))
                failing = v;
        }
        const bool ok = !failing;
        const Verdict* shown = failing ? &*failing : &*first;
        pass_if(r, ok);
        r.verdict = status_name(shown->status);
        r.witness = join(parts, ", ");
        if (!shown->witness.empty())
            r.witness += "; " + shown->witness;
        r.trace = shown->trace;
    });
    if (!ablation)
        return;
    claim("lemma64.ablation", "leading-term", [&](ClaimRecord& r) {
        AxiomSet a = cfg_.axioms;
        a.h7_no_4torsion = false;
        const Verdict v =
            lemma64_decide(bg_cohomology_input(ring(), a), cfg_.ahss_window.lo, cfg_.ahss_window.hi, cfg_.k);
        pass_if(r, v.status == Status::NotForced && v.failed_stage == 3);
        r.verdict = status_name(v.status);
        r.witness = "without " + std::string(kAxiomH7) + ": " + status_name(v.status) +
                    (v.failed_stage ? " at stage " + std::to_string(*v.failed_stage) : "") + "; " + v.witness;
        r.trace = v.trace;
    });
}

void Runner::prop_chain()
{
    std::optional<PropChainReport> rep;
    std::string error;
    try {
        PropChainInputs in = gather_prop_chain_inputs(ring(), cfg_.axioms, 0, cfg_.k);
        in.euler = euler_identity_check(cfg_.epsilon);
        if (lemma_f0_)
            in.lemma64 = lemma_f0_;
        rep = prop_chain_report(in);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const auto record = [&](const std::string& id, const std::string& anchor, const Verdict* v) {
        claim(id, anchor, [&](ClaimRecord& r) {
            if (!v)
                throw std::runtime_error(error);
            const auto problems = validate_trace(*v);
            pass_if(r, v->status == Status::Nonzero && problems.empty());
            r.verdict = status_name(v->status);
            r.witness = v->witness;
            if (!v->failing_dependency.empty())
                r.witness += (r.witness.empty() ? "" : "; ") + std::string("depends on ") + v->failing_dependency;
            if (!problems.empty())
                r.witness += "; invalid trace: " + join(problems, ", ");
            r.trace = v->trace;
        });
    };
    record("prop-6.1", "c-nonzero", rep ? &rep->prop61 : nullptr);
    record("prop-6.2", "cc1-nonzero", rep ? &rep->prop62 : nullptr);
}

void Runner::axioms()
{
    for (const auto& [tag, statement] : axiom_registry()) {
        claim("axiom." + tag, tag, [&](ClaimRecord& r) {
            const bool cleared = (tag == kAxiomHOdd && !cfg_.axioms.h_odd_elementary) ||
                                 (tag == kAxiomH7 && !cfg_.axioms.h7_no_4torsion);
            r.status = cleared ? ClaimStatus::Skipped : ClaimStatus::Axiom;
            r.axiom = tag;
            r.witness = cleared ? "cleared by config" : statement;
        });
    }
}

const std::vector<std::string> kCommands{"verify", "fgl", "skeleton", "tor", "steenrod", "charclass", "lemma64"};
const std::vector<std::string> kSteenrodChecks{"sq3w4", "torsion-shift", "freeness", "cartan", "ideal-closure"};
const std::vector<std::string> kCharclassChecks{"euler-identity", "ah-obstruction"};

bool contains(const std::vector<std::string>& v, const std::string& s)
{
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

Window Window::parse(const std::string& text)
{
    const std::string t = trim(text);
    const auto dots = t.find("..");
    if (dots == std::string::npos)
        throw ConfigError("window '" + text + "' is not of the form LO..HI");
    Window w{parse_number<int>("window", t.substr(0, dots)), parse_number<int>("window", t.substr(dots + 2))};
    if (w.lo > w.hi)
        throw ConfigError("window '" + text + "' has LO > HI");
    return w;
}

std::string Window::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

std::vector<std::pair<std::string, std::string>> RunConfig::items() const
{
    return {{"k", std::to_string(k)},
            {"N", std::to_string(truncation)},
            {"n", std::to_string(n)},
            {"deg", std::to_string(deg)},
            {"window.skeleton", skeleton_window.str()},
            {"window.tor", tor_window.str()},
            {"window.ahss", ahss_window.str()},
            {"axioms", axioms.str()},
            {"epsilon", std::to_string(epsilon)},
            {"seed", std::to_string(seed)},
            {"samples", std::to_string(samples)},
            {"h7-rank-max", std::to_string(h7_rank_max)},
            {"format", format}};
}

void RunConfig::set(const std::string& key, const std::string& value)
{
    if (key == "k")
        k = parse_number<int>(key, value);
    else if (key == "N")
        truncation = parse_number<int>(key, value);
    else if (key == "n")
        n = parse_number<int>(key, value);
    else if (key == "deg")
        deg = parse_number<int>(key, value);
    else if (key == "window.skeleton")
        skeleton_window = Window::parse(value);
    else if (key == "window.tor")
        tor_window = Window::parse(value);
    else if (key == "window.ahss")
        ahss_window = Window::parse(value);
    else if (key == "axioms")
        axioms = AxiomSet::parse(value);
    else if (key == "epsilon")
        epsilon = parse_number<int>(key, value);
    else if (key == "seed")
        seed = parse_number<std::uint64_t>(key, value);
    else if (key == "samples")
        samples = parse_number<int>(key, value);
    else if (key == "h7-rank-max")
        h7_rank_max = parse_number<int>(key, value);
    else if (key == "format")
        format = trim(value);
    else
        throw ConfigError("unknown config key '" + key + "'");
}

void RunConfig::load(std::istream& in, const std::string& source)
{
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source + ":" + std::to_string(lineno) + ": expected key=value");
        try {
            set(trim(t.substr(0, eq)), t.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError(source + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void RunConfig::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    load(in, path);
}

void RunConfig::validate() const
{
    if (k < 2 || k > 8)
        throw ConfigError("k must lie in 2..8 (v2 is needed)");
    const int capacity = (1 << (k + 1)) - 1;  // highest c1 power without v_{k+1}
    if (truncation < 4 || truncation > capacity)
        throw ConfigError("N must lie in 4.." + std::to_string(capacity) + " for k = " + std::to_string(k));
    if (deg < 1 || deg > capacity)
        throw ConfigError("deg must lie in 1.." + std::to_string(capacity) + " for k = " + std::to_string(k));
    if (n < 1 || n > capacity)
        throw ConfigError("n must lie in 1.." + std::to_string(capacity) + " for k = " + std::to_string(k));
    if (ahss_window.lo > -8 || ahss_window.hi < 8)
        throw ConfigError("window.ahss must cover -8..8, got " + ahss_window.str());
    if (epsilon != 1 && epsilon != -1)
        throw ConfigError("epsilon must be 1 or -1");
    if (samples < 1)
        throw ConfigError("samples must be positive");
    if (h7_rank_max < 0 || h7_rank_max > 16)
        throw ConfigError("h7-rank-max must lie in 0..16");
    if (format != "text" && format != "json")
        throw ConfigError("format must be 'text' or 'json'");
}

nlohmann::ordered_json RunConfig::to_json() const
{
    ordered_json j;
    for (const auto& [key, value] : items()) {
        if (key == "seed")
            j[key] = seed;
        else if (int_key(key))
            j[key] = std::stoi(value);
        else
            j[key] = value;
    }
    return j;
}

RunConfig RunConfig::from_json(const nlohmann::ordered_json& j)
{
    RunConfig c;
    for (const auto& [key, value] : j.items())
        c.set(key, value.is_string() ? value.get<std::string>() : value.dump());
    return c;
}

std::string claim_status_name(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Pass:
        return "PASS";
    case ClaimStatus::Fail:
        return "FAIL";
    case ClaimStatus::Axiom:
        return "AXIOM";
    case ClaimStatus::Skipped:
        return "SKIPPED";
    }
    return "?";
}

ClaimStatus parse_claim_status(const std::string& s)
{
    for (ClaimStatus c : {ClaimStatus::Pass, ClaimStatus::Fail, ClaimStatus::Axiom, ClaimStatus::Skipped})
        if (claim_status_name(c) == s)
            return c;
    throw ConfigError("unknown claim status '" + s + "'");
}

std::size_t Report::count(ClaimStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(claims.begin(), claims.end(), [&](const ClaimRecord& c) { return c.status == s; }));
}

bool Report::any_failure() const { return count(ClaimStatus::Fail) > 0; }

nlohmann::ordered_json Report::to_json() const
{
    ordered_json j;
    j["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
    j["command"] = command;
    j["config"] = config.to_json();
    j["claims"] = ordered_json::array();
    for (const auto& c : claims) {
        ordered_json r;
        r["id"] = c.id;
        r["anchor"] = {{"id", c.anchor}, {"statement", anchor_statement(c.anchor)}};
        r["status"] = claim_status_name(c.status);
        if (c.verdict)
            r["verdict"] = *c.verdict;
        if (!c.axiom.empty())
            r["axiom"] = c.axiom;
        r["witness"] = c.witness;
        r["trace"] = ordered_json::array();
        for (const auto& s : c.trace)
            r["trace"].push_back(step_json(s));
        j["claims"].push_back(r);
    }
    ordered_json s;
    s["claims"] = claims.size();
    for (ClaimStatus st : {ClaimStatus::Pass, ClaimStatus::Fail, ClaimStatus::Axiom, ClaimStatus::Skipped})
        s[claim_status_name(st)] = count(st);
    s["failed"] = ordered_json::array();
    for (const auto& c : claims)
        if (c.status == ClaimStatus::Fail)
            s["failed"].push_back(c.id);
    s["exit_code"] = exit_code();
    j["summary"] = s;
    return j;
}

Report Report::from_json(const nlohmann::ordered_json& j)
{
    Report r;
    try {
        r.command = j.at("command").get<std::string>();
        r.config = RunConfig::from_json(j.at("config"));
        for (const auto& c : j.at("claims")) {
            ClaimRecord rec;
            rec.id = c.at("id").get<std::string>();
            rec.anchor = c.at("anchor").at("id").get<std::string>();
            rec.status = parse_claim_status(c.at("status").get<std::string>());
            rec.witness = c.at("witness").get<std::string>();
            if (c.contains("verdict"))
                rec.verdict = c.at("verdict").get<std::string>();
            if (c.contains("axiom"))
                rec.axiom = c.at("axiom").get<std::string>();
            for (const auto& s : c.at("trace"))
                rec.trace.push_back({s.at("statement").get<std::string>(), s.at("anchor").get<std::string>(),
                                     s.at("axiom").get<std::string>(), s.at("witness").get<std::string>()});
            r.claims.push_back(std::move(rec));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
    return r;
}

std::string Report::text(bool timings) const
{
    std::ostringstream out;
    out << kArtifactName << ' ' << kArtifactVersion << ' ' << command << '\n';
    out << "config:";
    for (const auto& [key, value] : config.items())
        out << ' ' << key << '=' << value;
    out << '\n';
    for (const auto& c : claims) {
        out << std::left << std::setw(8) << claim_status_name(c.status) << std::setw(34) << c.id;
        if (c.verdict)
            out << *c.verdict << "  ";
        out << c.witness;
        if (timings)
            out << "  (" << std::fixed << std::setprecision(2) << c.seconds << " s)";
        out << '\n';
        for (const auto& s : c.trace)
            out << "        - " << step_text(s) << '\n';
    }
    out << "summary: " << claims.size() << " claims, " << count(ClaimStatus::Pass) << " PASS, "
        << count(ClaimStatus::Fail) << " FAIL, " << count(ClaimStatus::Axiom) << " AXIOM, "
        << count(ClaimStatus::Skipped) << " SKIPPED\n";
    return out.str();
}

Report run(const Request& req, const RunConfig& config)
{
    config.validate();
    if (!contains(kCommands, req.command))
        throw ConfigError("unknown command '" + req.command + "'");
    if (!req.check.empty()) {
        const auto& allowed = req.command == "steenrod" ? kSteenrodChecks : kCharclassChecks;
        if ((req.command != "steenrod" && req.command != "charclass") || !contains(allowed, req.check))
            throw ConfigError("unknown check '" + req.check + "' for " + req.command);
    }
    if (req.n) {
        if (req.command == "lemma64" ? *req.n < 0 || *req.n > 16 : *req.n < 1 || *req.n > config.n)
            throw ConfigError("--n " + std::to_string(*req.n) + " out of range for " + req.command);
    }

    Runner run(req, config);
    run.report.command = req.command;
    run.report.config = config;
    const std::string& c = req.command;
    if (c == "verify") {
        run.fgl();
        run.gmod(true, true, true);
        run.steenrod("");
        run.charclass("");
        run.ahss_input();
        run.vi_injectivity();
        run.lemma64(true);
        run.prop_chain();
        run.axioms();
    } else if (c == "fgl") {
        run.fgl();
    } else if (c == "skeleton") {
        run.gmod(true, true, false);
    } else if (c == "tor") {
        run.gmod(false, false, req.oracle);
    } else if (c == "steenrod") {
        run.steenrod(req.check);
    } else if (c == "charclass") {
        run.charclass(req.check);
    } else if (c == "lemma64") {
        run.lemma64(false);
        run.axioms();
    }
    return std::move(run.report);
}

const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v{"fgl.two-series",
                                   "fgl.integrality",
                                   "fgl.formal-sum",
                                   "gmod.resolution-exactness",
                                   "gmod.tensor-unit-y8",
                                   "gmod.tor-oracles",
                                   "steenrod.sq3w4",
                                   "steenrod.cartan",
                                   "steenrod.unstability",
                                   "steenrod.ideal-closure",
                                   "steenrod.freeness",
                                   "steenrod.control-extra-relation",
                                   "steenrod.torsion-shift",
                                   "steenrod.control-sq3w4-zero",
                                   "charclass.euler-identity",
                                   "charclass.squared-identity",
                                   "charclass.c1-vanishes",
                                   "charclass.ah-obstruction",
                                   "ahss.input",
                                   "ahss.vi-injectivity",
                                   "lemma64",
                                   "lemma64.ablation",
                                   "prop-6.1",
                                   "prop-6.2"};
        for (const auto& [tag, statement] : axiom_registry())
            v.push_back("axiom." + tag);
        return v;
    }();
    return ids;
}

}  // namespace cobord
