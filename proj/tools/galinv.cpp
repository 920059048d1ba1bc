#include "galinv/catalog.hpp"
#include "galinv/classify.hpp"
#include "galinv/contraction.hpp"
#include "galinv/energy.hpp"
#include "galinv/forms.hpp"
#include "galinv/invariants.hpp"
#include "galinv/simulator.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace galinv;

namespace {

const char* kVersion = "0.1.0";

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Check {
    std::string name;
    std::string ref;
    std::string status;  // pass, fail, unverifiable
    Json detail;
    std::string summary;
};

std::string status_of(bool ok) { return ok ? "pass" : "fail"; }

class Report {
public:
    Report(std::string command, uint64_t seed) : command_(std::move(command)), seed_(seed) {}

    void add(Check c) { checks_.push_back(std::move(c)); }
    void add(const std::string& name, const std::string& ref, bool ok, Json detail, std::string summary = "") {
        add(Check{name, ref, status_of(ok), std::move(detail), std::move(summary)});
    }
    void time(const std::string& section, double seconds) { timing_[section] = seconds; }
    void result(const std::string& key, Json value) { results_[key] = std::move(value); }
    void merge(const Report& r, const std::string& section) {
        for (auto c : r.checks_) {
            c.name = section + ": " + c.name;
            checks_.push_back(std::move(c));
        }
        for (auto& [k, v] : r.timing_.items()) timing_[section + "." + k] = v;
    }

    bool pass() const {
        for (auto& c : checks_)
            if (c.status == "fail") return false;
        return true;
    }

    Json to_json() const {
        Json cs = Json::array();
        for (auto& c : checks_) cs.push_back(Json{{"name", c.name}, {"ref", c.ref}, {"status", c.status}, {"detail", c.detail}});
        Json j{{"command", command_}, {"version", kVersion}, {"seed", seed_}, {"checks", cs},
               {"timing", timing_},   {"pass", pass()}};
        if (!results_.empty()) j["results"] = results_;
        return j;
    }

    std::string text() const {
        std::ostringstream os;
        for (auto& c : checks_) {
            std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP";
            os << tag << "  " << c.name;
            if (!c.summary.empty()) os << "  " << c.summary;
            os << "\n";
        }
        int passed = 0, failed = 0;
        for (auto& c : checks_) {
            if (c.status == "pass") ++passed;
            if (c.status == "fail") ++failed;
        }
        os << passed << "/" << checks_.size() << " checks pass";
        if (failed) os << ", " << failed << " fail";
        os << "\n";
        return os.str();
    }

private:
    std::string command_;
    uint64_t seed_;
    std::vector<Check> checks_;
    Json timing_ = Json::object();
    Json results_ = Json::object();
};

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string short_str(const std::string& s, size_t n = 160) { return s.size() <= n ? s : s.substr(0, n) + "..."; }

std::string binding_str(const std::vector<RepBinding>& reps) {
    std::string out;
    for (auto& b : reps) {
        if (!out.empty()) out += " + ";
        out += b.label.str() + " on (";
        for (size_t i = 0; i < b.names.size(); ++i)
            out += (i ? ", " : "") + std::string(b.names[i].sign < 0 ? "-" : "") + b.names[i].name;
        out += ")";
    }
    return out;
}

// A catalog name or a path to a .gal file
FieldSystem load_system(const std::string& arg) {
    if (std::filesystem::exists(arg)) return parse_system(read_file(arg));
    if (arg.size() > 4 && arg.substr(arg.size() - 4) == ".gal") throw UsageError("no such file " + arg);
    return catalog(arg);
}

// "v=1/2,0,0,rot=1,0,0,1,a=2,b=0,1,0": the rotation is a quaternion with
// integer components
GalileiMotion parse_motion(const std::string& text) {
    std::map<std::string, std::vector<std::string>> parts;
    std::string key;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq != std::string::npos) {
            key = tok.substr(0, eq);
            tok = tok.substr(eq + 1);
        }
        if (key.empty()) throw UsageError("motion must start with a key, e.g. v=1,0,0");
        parts[key].push_back(tok);
    }
    GalileiMotion g;
    auto vec = [&](const std::string& k) {
        auto& p = parts.at(k);
        if (p.size() != 3) throw UsageError("motion key " + k + " needs 3 components");
        return Vec3Q{Rational::parse(p[0]), Rational::parse(p[1]), Rational::parse(p[2])};
    };
    for (auto& [k, p] : parts) {
        if (k == "v") {
            g.v = vec(k);
        } else if (k == "b") {
            g.b = vec(k);
        } else if (k == "a") {
            if (p.size() != 1) throw UsageError("motion key a needs 1 component");
            g.a = Rational::parse(p[0]);
        } else if (k == "rot") {
            if (p.size() != 4) throw UsageError("rot needs 4 integer quaternion components");
            g.rot = Rotation::from_quaternion(std::stol(p[0]), std::stol(p[1]), std::stol(p[2]), std::stol(p[3]));
        } else {
            throw UsageError("unknown motion key " + k);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Sections

Report reps_list() {
    Report r("reps list", 0);
    Json out = Json::array();
    for (auto& l : catalog_labels()) {
        GalileiRep rep = build_galilei_rep(l);
        out.push_back(Json{{"label", l.str()}, {"dimension", rep.dim()}, {"layout", rep.layout()}});
        r.add("build " + l.str(), l.str(), true, Json{{"dimension", rep.dim()}, {"layout", rep.layout()}},
              "dim " + std::to_string(rep.dim()) + " " + rep.layout());
    }
    r.result("reps", out);
    return r;
}

Json rep_check_json(const RepCheck& c) {
    Json fails = Json::array();
    for (auto& f : c.failures) fails.push_back(Json{{"relation", f.relation}, {"a", f.a}, {"b", f.b}});
    return fails;
}

Report reps_check() {
    Report r("reps check", 0);
    Stopwatch sw;
    Json out = Json::array();
    for (auto& l : catalog_labels()) {
        GalileiRep rep = build_galilei_rep(l);
        RepCheck c = check_rep(rep);
        Json fails = rep_check_json(c);
        out.push_back(Json{{"label", l.str()},
                           {"dimension", rep.dim()},
                           {"layout", rep.layout()},
                           {"checks", Json::array({Json{{"name", "algebra and boost law"}, {"pass", c.ok}, {"detail", fails}}})}});
        r.add(l.str() + " algebra and boost law", l.str(), c.ok, fails);
    }
    int accepted = 0;
    Json rejected = Json::array();
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            for (int lam = 0; lam <= 2; ++lam) {
                RepLabel l{m, n, lam};
                try {
                    build_galilei_rep(l);
                    ++accepted;
                } catch (const UnknownLabel&) {
                    rejected.push_back(l.str());
                }
            }
    r.add("exactly ten labels in m, n <= 3, lambda <= 2", "D(m,n,lambda)", accepted == 10,
          Json{{"accepted", accepted}, {"rejected", rejected.size()}},
          std::to_string(accepted) + " accepted, " + std::to_string(rejected.size()) + " rejected");
    for (auto& name : lorentz_rep_names()) {
        RepCheck c = check_lorentz(lorentz_rep(name));
        r.add("so(1,3) relations on " + name, name, c.ok, rep_check_json(c));
    }
    r.result("reps", out);
    r.time("total", sw.seconds());
    return r;
}

struct ContractionCase {
    std::string rep, matrix, expect;
};

const std::vector<ContractionCase>& contraction_table() {
    static const std::vector<ContractionCase> t{{"D12", "V1", "D(1,1,0)"},      {"D12", "V2", "D(1,1,1)"},
                                                {"D12+D00", "V3", "D(1,2,1)"},  {"D10+D01", "V4", "D(2,0,0)"},
                                                {"D10+D01", "V5", "D(2,0,0)"},  {"BI", "V6", "D(2,0,0)+D(2,0,0)"},
                                                {"BI", "V7", "D(2,0,0)+D(2,0,0)"}};
    return t;
}

Json contraction_json(const std::string& rep, const std::string& matrix, const ContractionResult* c,
                      const std::string& error) {
    Json j{{"input", rep}, {"matrix", matrix}};
    if (!c) {
        j["status"] = "singular";
        j["detail"] = error;
        return j;
    }
    j["status"] = "ok";
    j["label"] = c->label();
    Json S = Json::array(), eta = Json::array();
    for (int a = 0; a < 3; ++a) {
        S.push_back(to_json(c->S[a]));
        eta.push_back(to_json(c->eta[a]));
    }
    j["generators"] = Json{{"S", S}, {"eta", eta}};
    return j;
}

Report contract_cmd(const std::string& rep, const std::string& matrix) {
    Report r("contract", 0);
    Stopwatch sw;
    std::vector<ContractionCase> cases;
    if (rep.empty() && matrix.empty()) {
        cases = contraction_table();
    } else {
        if (rep.empty() || matrix.empty()) throw UsageError("contract needs both --rep and --matrix, or neither");
        ContractionCase c{rep, matrix, ""};
        for (auto& t : contraction_table())
            if (t.rep == rep && t.matrix == matrix) c.expect = t.expect;
        cases.push_back(c);
    }
    Json out = Json::array();
    for (auto& cs : cases) {
        LorentzRep L = lorentz_rep(cs.rep);
        MatLQ V = standard_matrix(cs.matrix);
        if (V.rows() != L.dim) throw UsageError(cs.matrix + " does not act on " + cs.rep);
        std::string name = cs.matrix + " on " + cs.rep;
        try {
            ContractionResult c = contract(L, V);
            bool ok = cs.expect.empty() || c.label() == cs.expect;
            Json d{{"label", c.label()}};
            if (!cs.expect.empty()) d["expected"] = cs.expect;
            r.add(name, cs.rep + "," + cs.matrix, ok, d, "-> " + c.label());
            out.push_back(contraction_json(cs.rep, cs.matrix, &c, ""));
        } catch (const SingularLimit& e) {
            r.add(name, cs.rep + "," + cs.matrix, false, Json{{"singular", e.what()}}, e.what());
            out.push_back(contraction_json(cs.rep, cs.matrix, nullptr, e.what()));
        }
    }
    r.result("contractions", out);
    r.time("total", sw.seconds());
    return r;
}

CovarianceMode parse_mode(const std::string& m) {
    if (m == "jet") return CovarianceMode::Jet;
    if (m == "direct") return CovarianceMode::Direct;
    throw UsageError("mode must be jet or direct");
}

Report verify_cmd(const std::string& system, const CovarianceOptions& opt) {
    Report r("verify", opt.seed);
    Stopwatch sw;
    std::vector<FieldSystem> systems;
    if (system == "all") {
        for (auto& n : covariance_suite()) systems.push_back(catalog(n));
    } else {
        systems.push_back(load_system(system));
    }
    for (auto& s : systems) {
        Stopwatch one;
        CovarianceReport c = covariance_check(compile_system(s), opt);
        Json j = c.to_json();
        j["rep"] = binding_str(s.field_reps);
        std::string summary = std::to_string(c.trials) + " trials x " + std::to_string(c.motions) + " motions";
        if (c.counterexample)
            summary += ", counterexample on " + c.counterexample->equation + "[" +
                       std::to_string(c.counterexample->component) + "] under " + c.counterexample->motion.str();
        r.add("covariance of " + s.name, s.name, c.pass, j, summary);
        r.time(s.name, one.seconds());
    }
    r.time("total", sw.seconds());
    return r;
}

Report classify_cmd(const std::string& arg, const CovarianceOptions& opt) {
    Report r("classify", opt.seed);
    Stopwatch sw;
    FieldSystem s = load_system(arg);
    ClassificationReport c = classify(s, opt);
    Json j = c.to_json();
    std::string forms;
    for (auto& f : c.matched_forms()) forms += (forms.empty() ? "" : ", ") + f;
    std::string summary = c.linear ? "forms {" + forms + "}" : "nonlinear, no form matching";
    if (c.counterexample_boost) summary += ", counterexample boost " + c.counterexample_boost->motion.str();
    r.add("covariance of " + s.name, s.name, c.covariant, j, summary);
    r.time("total", sw.seconds());
    return r;
}

Report invariants_cmd(uint64_t seed, int points) {
    Report r("invariants", seed);
    Stopwatch sw;
    for (auto& c : check_bilinear_invariants())
        r.add(c.name + " invariant", c.name, c.invariant, Json{{"change", c.change.str()}});
    InvarianceCheck ed = check_ED();
    r.add("E.D alone is not invariant", "E.D", !ed.invariant, Json{{"change", ed.change.str()}},
          "change " + short_str(ed.change.str(), 80));
    for (BornInfeld b : {BornInfeld::Electric, BornInfeld::Magnetic}) {
        std::string v = variant_name(b);
        BornInfeldSymbolic s = born_infeld_symbolic(b);
        r.add("Born-Infeld " + v + " symbolic laws", v, s.pass(),
              Json{{"radicand_invariant", s.radicand_invariant}, {"D_law", s.D_law}, {"H_law", s.H_law}});
        BornInfeldNumeric n = born_infeld_numeric(b, points, seed);
        bool ok = n.points == points && n.max_error <= 1e-12;
        std::ostringstream os;
        os << n.points << " points, max error " << n.max_error;
        r.add("Born-Infeld " + v + " numeric", v, ok, Json{{"points", n.points}, {"max_error", n.max_error}, {"tolerance", 1e-12}},
              os.str());
    }
    r.time("total", sw.seconds());
    return r;
}

Report forms_cmd() {
    Report r("forms", 0);
    Stopwatch sw;
    for (auto& c : appendix_closure()) {
        Check k{c.set.context + " " + c.set.str(), c.set.context, "", c.to_json(), c.status};
        k.status = c.status == "closed" ? "pass" : c.status == "unverifiable" ? "unverifiable" : "fail";
        r.add(k);
    }
    r.time("total", sw.seconds());
    return r;
}

TensorVariant parse_tensor(const std::string& t) {
    if (t == "printed") return TensorVariant::Printed;
    if (t == "corrected") return TensorVariant::Corrected;
    throw UsageError("tensor must be printed, corrected or both");
}

// static harmonic A, harmonic A0, A4 = -t div A + harmonic
ExtendedFields harmonic_solution() {
    PolyQ t = coord(0), x = coord(1), y = coord(2), z = coord(3);
    Potentials p{x * x - z * z, {x * y, y * z, x * x - y * y}, PolyQ()};
    p.A4 = -(t * div(p.A)) + x * z;
    return fields_from_potentials(p);
}

Report emt_cmd(const std::string& tensor) {
    Report r("emt", 0);
    Stopwatch sw;
    std::vector<TensorVariant> variants;
    if (tensor == "both") {
        variants = {TensorVariant::Printed, TensorVariant::Corrected};
    } else {
        variants = {parse_tensor(tensor)};
    }
    ExtendedFields f = harmonic_solution();
    const char* axis[] = {"energy", "momentum x", "momentum y", "momentum z"};
    for (TensorVariant v : variants) {
        std::string vn = v == TensorVariant::Printed ? "printed" : "corrected";
        for (bool nu : {false, true}) {
            EnergyCertificate c = energy_certificate(nu, v);
            Json j = c.to_json();
            for (int k = 0; k < 4; ++k) {
                const auto& comp = c.components[k];
                r.add(vn + " tensor, " + axis[k] + " certificate" + (nu ? " (nu symbolic)" : " (nu = 0)"), "last",
                      comp.found, j["components"][k], comp.found ? short_str(comp.str(), 100) : "no combination");
            }
        }
        EnergyMomentum em = energy_momentum(f, v);
        for (int k = 0; k < 4; ++k)
            r.add(vn + " tensor, " + axis[k] + " continuity on a harmonic solution", "coupl", em.continuity[k].is_zero(),
                  Json{{"residual", em.continuity[k].str()}}, em.continuity[k].is_zero() ? "" : "residual " + em.continuity[k].str());
    }
    r.time("total", sw.seconds());
    return r;
}

sim::Trajectory run_system(const std::string& system, const sim::RunConfig& c) {
    if (system == "magnetic") return sim::run_magnetic(c);
    if (system == "electric") return sim::run_electric(c);
    if (system == "extended") return sim::run_extended(c);
    throw UsageError("system must be magnetic, electric or extended");
}

void add_run_checks(Report& r, const std::string& label, const sim::Trajectory& tr) {
    std::ostringstream a, b;
    a << tr.max_residual();
    b << tr.div_curl;
    r.add(label + " residuals <= 1e-8", tr.system, tr.max_residual() <= 1e-8,
          Json{{"max_residual", tr.max_residual()}, {"equations", tr.equations}, {"header", tr.header}}, a.str());
    r.add(label + " discrete div curl <= 1e-13", tr.system, tr.div_curl <= 1e-13, Json{{"div_curl", tr.div_curl}}, b.str());
}

Report simulate_cmd(const std::string& system, const std::string& config, const std::string& out) {
    Report r("simulate", 0);
    Stopwatch sw;
    Json cfg;
    try {
        cfg = Json::parse(read_file(config));
    } catch (const Json::parse_error& e) {
        throw UsageError(config + ": " + e.what());
    }
    sim::RunConfig c = sim::RunConfig::from_json(cfg);
    sim::Trajectory tr = run_system(system, c);
    if (!out.empty()) sim::write_outputs(tr, out);
    add_run_checks(r, system, tr);
    Json j{{"system", tr.system}, {"rep", tr.rep}, {"header", tr.header}, {"steps", tr.steps.size()},
           {"snapshots", tr.snapshots.size()}, {"max_residual", tr.max_residual()}, {"div_curl", tr.div_curl}};
    if (system == "extended") j["max_continuity"] = tr.max_continuity();
    if (!out.empty()) j["out"] = out;
    r.result("run", j);
    r.time("total", sw.seconds());
    return r;
}

// Simulator regression: residual runs, 2nd-order continuity decay, frame checks
Report simulator_suite() {
    Report r("simulator", 0);
    Stopwatch sw;
    auto config = [](const Json& src, double dt, double t_end) {
        sim::RunConfig c;
        c.dt = dt;
        c.t_end = t_end;
        c.sources = sim::SourceSpec::from_json(src, c.grid.L());
        return c;
    };
    Json mag_src{{"j0", "cos(y)*sin(t)+sin(x+z)"}, {"j", {"cos(x)*sin(y)*cos(t)", "-sin(x)*cos(y)*cos(t)", "0"}}};
    Json el_src{{"j4", "cos(x)*(1+t)+sin(y+z)*cos(t)"}, {"j", {"sin(x)", "cos(y+z)*sin(t)/2", "cos(y+z)*sin(t)/2"}}};
    Json ext_src{{"j0", "cos(y)*sin(t)"}, {"j4", "cos(x)*t + sin(y)"}, {"j", {"sin(x)", "sin(z)", "cos(x)"}}};
    add_run_checks(r, "magnetic", sim::run_magnetic(config(mag_src, 0.02, 0.1)));
    add_run_checks(r, "electric", sim::run_electric(config(el_src, 0.02, 0.1)));
    add_run_checks(r, "extended", sim::run_extended(config(ext_src, 0.02, 0.1)));

    Json osc{{"j0", "cos(y)*sin(t)"},
             {"j4", "2*cos(2*x)*sin(3*t)/3"},
             {"j", {"sin(2*x)*cos(3*t)", "sin(z)", "cos(x)"}}};
    double coarse = sim::run_extended(config(osc, 0.02, 0.2)).max_continuity();
    double fine = sim::run_extended(config(osc, 0.01, 0.2)).max_continuity();
    std::ostringstream os;
    os << "ratio " << coarse / fine;
    r.add("extended continuity decays at 2nd order under dt halving", "extended", coarse / fine >= 3.9,
          Json{{"dt", {0.02, 0.01}}, {"max_continuity", {coarse, fine}}, {"ratio", coarse / fine}}, os.str());

    for (auto [limit, name, src] : {std::tuple{sim::Limit::Magnetic, "magnetic", mag_src},
                                    std::tuple{sim::Limit::Electric, "electric", el_src}}) {
        sim::FrameComparison f = sim::frame_consistency(limit, config(src, 0.02, 0.2));
        std::ostringstream e;
        e << f.max_error;
        r.add(std::string(name) + " boosted frame <= 1e-6", name, f.max_error <= 1e-6,
              Json{{"v", f.v}, {"shift", f.shift}, {"max_error", f.max_error}}, e.str());
    }
    r.time("total", sw.seconds());
    return r;
}

const char* kMagFlip = R"(system magflip {
  fields { E: vector H: vector }
  rep D(2,0,0) on (E, -H)
  sources { j0: scalar j: vector }
  rep D(1,1,0) on (j, j0)
  params { e }
  eq F: curl(E) + dt(H) = 0
  eq G: div(E) = e*j0
  eq M: curl(H) = e*j
  eq Q: div(H) = 0
  residual rep D(1,1,0) on (M, G)
  residual rep D(1,1,1) on (F, -Q)
})";

Report dsl_suite(const CovarianceOptions& opt) {
    Report r("dsl", opt.seed);
    Stopwatch sw;
    for (auto& n : catalog_names()) {
        const FieldSystem& s = catalog(n);
        std::string printed = print_system(s);
        FieldSystem back = parse_system(printed);
        r.add("round trip of " + n, n, same_system(back, s) && print_system(back) == printed, Json{{"chars", printed.size()}});
    }
    ClassificationReport c = classify(parse_system(kMagFlip), opt);
    bool ok = !c.covariant && c.counterexample_boost.has_value();
    r.add("sign-flipped mag is not covariant", "magflip", ok, c.to_json(),
          ok ? "counterexample boost " + c.counterexample_boost->motion.str() : "");
    r.time("total", sw.seconds());
    return r;
}

Report reproduce_all(const CovarianceOptions& opt, int points) {
    Report r("reproduce-all", opt.seed);
    Stopwatch sw;
    r.merge(reps_check(), "reps");
    r.merge(contract_cmd("", ""), "contract");
    r.merge(verify_cmd("all", opt), "verify");
    r.merge(forms_cmd(), "forms");
    r.merge(invariants_cmd(opt.seed, points), "invariants");
    r.merge(emt_cmd("both"), "emt");
    r.merge(simulator_suite(), "simulate");
    r.merge(dsl_suite(opt), "dsl");
    r.time("total", sw.seconds());
    return r;
}

int emit(const Report& r, bool json, const std::string& out) {
    std::string body = json ? r.to_json().dump(2) + "\n" : r.text();
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw UsageError("cannot write " + out);
        f << r.to_json().dump(2) << "\n";
    }
    std::cout << body;
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galilei invariance toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    bool json = false;
    uint64_t seed = 42;
    int trials = 50, motions = 10, points = 100;
    std::string out;
    auto common = [&](CLI::App* c) {
        c->add_flag("--json", json, "machine-readable report");
        c->add_option("--seed", seed, "random seed");
        c->add_option("--out", out, "output path");
    };
    auto sampling = [&](CLI::App* c) {
        c->add_option("--trials", trials, "random multiplets per motion")->check(CLI::PositiveNumber);
        c->add_option("--motions", motions, "random motions")->check(CLI::PositiveNumber);
    };

    auto* reps = app.add_subcommand("reps", "representation catalog");
    std::string reps_action;
    reps->add_option("action", reps_action, "list or check")->required()->check(CLI::IsMember({"list", "check"}));
    common(reps);

    auto* contract = app.add_subcommand("contract", "Inonu-Wigner contraction of so(1,3) representations");
    std::string rep_name, matrix_name;
    contract->add_option("--rep", rep_name, "D12, D12+D00, D10+D01 or BI");
    contract->add_option("--matrix", matrix_name, "V1..V7");
    common(contract);

    auto* verify = app.add_subcommand("verify", "exact covariance check");
    std::string system = "all", motion, mode = "jet";
    verify->add_option("--system", system, "catalog name, .gal file, or all");
    verify->add_option("--motion", motion, "fixed motion, e.g. v=1/2,0,0,rot=1,0,0,0");
    verify->add_option("--mode", mode, "jet or direct");
    common(verify);
    sampling(verify);

    auto* cls = app.add_subcommand("classify", "classify a system");
    std::string cls_arg;
    cls->add_option("system", cls_arg, ".gal file or catalog name")->required();
    common(cls);
    sampling(cls);

    auto* inv = app.add_subcommand("invariants", "bilinear invariants and Born-Infeld maps");
    inv->add_option("--points", points, "numeric Born-Infeld points")->check(CLI::PositiveNumber);
    common(inv);

    auto* forms = app.add_subcommand("forms", "closure of the covariant form sets");
    common(forms);

    auto* emt = app.add_subcommand("emt", "energy-momentum continuity certificates");
    std::string tensor = "printed";
    emt->add_option("--tensor", tensor, "printed, corrected or both");
    common(emt);

    auto* simulate = app.add_subcommand("simulate", "periodic-grid simulation");
    std::string sim_system, config, report_path;
    simulate->add_option("--system", sim_system, "magnetic, electric or extended")->required();
    simulate->add_option("--config", config, "run configuration JSON")->required();
    simulate->add_option("--out", out, "output directory");
    simulate->add_option("--report", report_path, "also write the JSON report here");
    simulate->add_flag("--json", json, "machine-readable report");

    auto* all = app.add_subcommand("reproduce-all", "full regression suite");
    common(all);
    sampling(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CovarianceOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    opt.motions = motions;

    try {
        if (*reps) return emit(reps_action == "list" ? reps_list() : reps_check(), json, out);
        if (*contract) return emit(contract_cmd(rep_name, matrix_name), json, out);
        if (*verify) {
            opt.mode = parse_mode(mode);
            if (!motion.empty()) opt.motion = parse_motion(motion);
            return emit(verify_cmd(system, opt), json, out);
        }
        if (*cls) return emit(classify_cmd(cls_arg, opt), json, out);
        if (*inv) return emit(invariants_cmd(seed, points), json, out);
        if (*forms) return emit(forms_cmd(), json, out);
        if (*emt) return emit(emt_cmd(tensor), json, out);
        if (*simulate) return emit(simulate_cmd(sim_system, config, out), json, report_path);
        if (*all) return emit(reproduce_all(opt, points), json, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const sim::IncompatibleSources& e) {
        std::cerr << "incompatible sources: " << e.what() << "\n";
        return 2;
    } catch (const DslError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
