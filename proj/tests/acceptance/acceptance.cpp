#include "galinv/catalog.hpp"
#include "galinv/classify.hpp"
#include "galinv/contraction.hpp"
#include "galinv/energy.hpp"
#include "galinv/forms.hpp"
#include "galinv/invariants.hpp"
#include "galinv/simulator.hpp"

#include <Eigen/Geometry>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace galinv;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(3) << x;
    return os.str();
}

// Criteria whose failure is a reproduced finding rather than a defect
const std::set<std::string> kKnownFailures{"AC3", "AC4", "AC6"};

GaussRational I() { return GaussRational::i(); }

MatQi to_complex(const MatQ& m) {
    return mat_map(m, [](const Rational& r) { return GaussRational(r); });
}

Vec3Q random_vec(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

// ---------------------------------------------------------------------------

Outcome ac1() {
    Outcome o;
    const std::set<std::string> expected{"D(0,1,0)", "D(1,0,0)", "D(1,1,0)", "D(1,1,1)", "D(1,2,1)",
                                         "D(2,0,0)", "D(2,1,0)", "D(2,1,1)", "D(2,2,1)", "D(3,1,1)"};
    std::set<std::string> accepted;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            for (int l = 0; l <= 2; ++l) {
                try {
                    build_galilei_rep(RepLabel{m, n, l});
                    accepted.insert(RepLabel{m, n, l}.str());
                } catch (const UnknownLabel&) {
                }
            }
    o.require(accepted == expected, "accepted labels differ from the ten");

    std::mt19937_64 rng(42);
    for (const auto& l : catalog_labels()) {
        GalileiRep r = build_galilei_rep(l);
        o.require(check_rep(r).ok, l.str() + ": algebra check");
        // hg(1,3) relations, computed here directly
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                MatQi ss = zeros<GaussRational>(r.dim(), r.dim()), es = ss;
                for (int c = 0; c < 3; ++c) {
                    GaussRational f = I() * GaussRational(Rational(levi_civita(a, b, c)));
                    ss = mat_add(ss, mat_scale(r.S[c], f));
                    es = mat_add(es, mat_scale(r.eta[c], f));
                }
                o.require(mat_equal(commutator(r.S[a], r.S[b]), ss), l.str() + ": [S,S]");
                o.require(mat_equal(commutator(r.eta[a], r.S[b]), es), l.str() + ": [eta,S]");
                o.require(is_zero_matrix(commutator(r.eta[a], r.eta[b])), l.str() + ": [eta,eta]");
            }
        for (int trial = 0; trial < 5; ++trial) {
            Vec3Q v = random_vec(rng), w = random_vec(rng);
            Vec3Q vw{v[0] + w[0], v[1] + w[1], v[2] + w[2]};
            o.require(mat_equal(mat_mul(r.boost(v), r.boost(w)), r.boost(vw)), l.str() + ": Lambda group law");
            MatQi x = zeros<GaussRational>(r.dim(), r.dim());
            for (int a = 0; a < 3; ++a) x = mat_add(x, mat_scale(r.eta[a], I() * GaussRational(v[a])));
            o.require(mat_equal(nilpotent_exp(x), to_complex(r.boost(v))), l.str() + ": exp(i v.eta) = Lambda(v)");
            Rotation R = Rotation::from_quaternion(1, trial, 2, -1);
            MatQ lhs = mat_mul(mat_mul(r.rotation(R), r.boost(v)), r.rotation(R.inverse()));
            o.require(mat_equal(lhs, r.boost(R.apply(v))), l.str() + ": R Lambda(v) R^-1 = Lambda(Rv)");
        }
    }
    o.notes.push_back(std::to_string(accepted.size()) + " labels accepted");
    return o;
}

// k_a = (i delta_a1, i delta_a2, i delta_a3) as a row
MatQi k_row(int a) {
    MatQi k = zeros<GaussRational>(1, 3);
    k(0, a) = I();
    return k;
}

MatQi dagger(const MatQi& m) {
    MatQi r(m.cols(), m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
    return r;
}

MatQi spin_block(int a, int dim) {
    MatQi s = zeros<GaussRational>(dim, dim);
    s.block(0, 0, 3, 3) = spin1(a);
    return s;
}

Outcome ac2() {
    Outcome o;
    ContractionResult v1 = contract(lorentz_rep("D12"), standard_matrix("V1"));
    ContractionResult v2 = contract(lorentz_rep("D12"), standard_matrix("V2"));
    ContractionResult v3 = contract(lorentz_rep("D12+D00"), standard_matrix("V3"));
    o.require(v1.label() == "D(1,1,0)", "V1 label " + v1.label());
    o.require(v2.label() == "D(1,1,1)", "V2 label " + v2.label());
    o.require(v3.label() == "D(1,2,1)", "V3 label " + v3.label());
    for (int a = 0; a < 3; ++a) {
        MatQi e1 = zeros<GaussRational>(4, 4), e2 = e1, e3 = zeros<GaussRational>(5, 5);
        e1.block(3, 0, 1, 3) = k_row(a);
        e2.block(0, 3, 3, 1) = mat_scale(dagger(k_row(a)), GaussRational(-1));
        e3.block(0, 3, 3, 1) = dagger(k_row(a));
        e3.block(4, 0, 1, 3) = k_row(a);
        o.require(mat_equal(v1.eta[a], e1) && mat_equal(v1.S[a], spin_block(a, 4)), "V1 generators");
        o.require(mat_equal(v2.eta[a], e2) && mat_equal(v2.S[a], spin_block(a, 4)), "V2 generators");
        o.require(mat_equal(v3.eta[a], e3) && mat_equal(v3.S[a], spin_block(a, 5)), "V3 generators");
    }
    // D(1,0)+D(0,1): the identification map carries the limit onto the catalog generators
    GalileiRep d200 = build_galilei_rep(RepLabel{2, 0, 0});
    for (const char* V : {"V4", "V5"}) {
        ContractionResult c = contract(lorentz_rep("D10+D01"), standard_matrix(V));
        o.require(c.label() == "D(2,0,0)", std::string(V) + " label " + c.label());
        if (c.blocks.size() != 1) continue;
        MatQi P = to_complex(c.blocks[0].id.basis_map), Pt = P.transpose();
        for (int a = 0; a < 3; ++a) {
            o.require(mat_equal(mat_mul(mat_mul(P, c.eta[a]), Pt), d200.eta[a]), std::string(V) + " eta");
            o.require(mat_equal(mat_mul(mat_mul(P, c.S[a]), Pt), d200.S[a]), std::string(V) + " S");
        }
    }
    return o;
}

Outcome ac3() {
    Outcome o;
    CovarianceOptions opt;
    opt.trials = 50;
    opt.motions = 10;
    opt.seed = 42;
    opt.degree = 3;
    const std::vector<std::string> names{"mag", "el",  "coupl", "coupl1", "coupl2",   "coupl4", "mag1",
                                         "111", "coupl3", "last", "NL",  "LastLast", "LLL"};
    int passed = 0;
    for (auto& n : names) {
        CovarianceReport r = covariance_check(compile_system(catalog(n)), opt);
        o.require(r.trials >= 50 && r.motions >= 10, n + ": sample size");
        if (r.pass) {
            ++passed;
        } else {
            std::string where = r.counterexample ? " at " + r.counterexample->equation + "[" +
                                                       std::to_string(r.counterexample->component) + "]"
                                                 : "";
            o.require(false, n + " not covariant" + where);
        }
    }
    o.notes.push_back(std::to_string(passed) + "/" + std::to_string(names.size()) + " systems covariant");
    return o;
}

Outcome ac4() {
    Outcome o;
    int closed = 0, unverifiable = 0;
    for (auto& r : appendix_closure()) {
        if (r.status == "closed") {
            ++closed;
        } else if (r.status == "unverifiable") {
            ++unverifiable;
        } else {
            o.require(false, r.set.context + " " + r.set.str() + " " + r.status);
        }
    }
    o.require(unverifiable == 2, "unverifiable entries: " + std::to_string(unverifiable));
    o.notes.push_back(std::to_string(closed) + " closed, " + std::to_string(unverifiable) + " unverifiable");
    return o;
}

Outcome ac5() {
    Outcome o;
    for (auto& c : check_bilinear_invariants()) o.require(c.invariant && c.change.is_zero(), c.name + " not invariant");
    InvarianceCheck ed = check_ED();
    o.require(!ed.invariant && !ed.change.is_zero(), "E.D reported invariant");

    // floating-point cross-check of the same six quantities
    using V = Eigen::Vector3d;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> d(-2, 2);
    auto rv = [&] { return V(d(rng), d(rng), d(rng)); };
    auto six = [](const V& E, const V& B, const V& D, const V& H) {
        return std::array<double, 6>{E.dot(B), H.dot(D), D.dot(D), B.dot(B), E.dot(D) - H.dot(B), B.dot(D)};
    };
    double worst = 0, ed_change = 0;
    for (int i = 0; i < 100; ++i) {
        V E = rv(), B = rv(), D = rv(), H = rv(), v = rv();
        V Ep = E + v.cross(B), Hp = H - v.cross(D);
        auto a = six(E, B, D, H), b = six(Ep, B, D, Hp);
        for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(a[k] - b[k]) / (1 + std::abs(a[k])));
        ed_change = std::max(ed_change, std::abs(Ep.dot(D) - E.dot(D)));
    }
    o.require(worst <= 1e-12, "numeric invariant drift " + fmt(worst));
    o.require(ed_change > 1e-3, "E.D did not change numerically");

    for (BornInfeld b : {BornInfeld::Electric, BornInfeld::Magnetic}) {
        std::string v = variant_name(b);
        o.require(born_infeld_symbolic(b).pass(), v + " symbolic laws");
        BornInfeldNumeric n = born_infeld_numeric(b, 100, 42);
        o.require(n.points == 100, v + " points");
        o.require(n.max_error <= 1e-12, v + " numeric error " + fmt(n.max_error));
        o.notes.push_back(v + " numeric error " + fmt(n.max_error));
    }
    return o;
}

Outcome ac6() {
    Outcome o;
    const char* axis[] = {"energy", "momentum x", "momentum y", "momentum z"};
    for (bool nu : {false, true}) {
        EnergyCertificate c = energy_certificate(nu, TensorVariant::Printed);
        for (int k = 0; k < 4; ++k)
            o.require(c.components[k].found,
                      std::string(axis[k]) + " has no certificate" + (nu ? " (nu symbolic)" : " (nu = 0)"));
    }
    PolyQ t = coord(0), x = coord(1), y = coord(2), z = coord(3);
    Potentials p{x * x - z * z, {x * y, y * z, x * x - y * y}, PolyQ()};
    p.A4 = -(t * div(p.A)) + x * z;
    ExtendedFields f = fields_from_potentials(p);
    EnergyMomentum em = energy_momentum(f, TensorVariant::Printed);
    for (int k = 0; k < 4; ++k)
        o.require(em.continuity[k].is_zero(),
                  std::string(axis[k]) + " residual on a harmonic solution: " + em.continuity[k].str());

    bool corrected = energy_certificate(false, TensorVariant::Corrected).pass() &&
                     energy_certificate(true, TensorVariant::Corrected).pass();
    EnergyMomentum cm = energy_momentum(f, TensorVariant::Corrected);
    for (auto& c : cm.continuity) corrected = corrected && c.is_zero();
    o.notes.push_back(std::string("corrected stress tensor: ") + (corrected ? "all four hold" : "fails"));
    return o;
}

Outcome ac7() {
    Outcome o;
    auto config = [](const Json& src, double dt, double t_end) {
        sim::RunConfig c;
        c.grid = sim::Grid(32, 2 * M_PI / 32);
        c.dt = dt;
        c.t_end = t_end;
        c.sources = sim::SourceSpec::from_json(src, c.grid.L());
        return c;
    };
    const Json mag{{"j0", "cos(y)*sin(t)+sin(x+z)"}, {"j", {"cos(x)*sin(y)*cos(t)", "-sin(x)*cos(y)*cos(t)", "0"}}};
    const Json el{{"j4", "cos(x)*(1+t)+sin(y+z)*cos(t)"}, {"j", {"sin(x)", "cos(y+z)*sin(t)/2", "cos(y+z)*sin(t)/2"}}};
    const Json ext{{"j0", "cos(y)*sin(t)"}, {"j4", "cos(x)*t + sin(y)"}, {"j", {"sin(x)", "sin(z)", "cos(x)"}}};

    double worst_res = 0, worst_dc = 0;
    for (auto& tr : {sim::run_magnetic(config(mag, 0.02, 0.2)), sim::run_electric(config(el, 0.02, 0.2)),
                     sim::run_extended(config(ext, 0.02, 0.2))}) {
        o.require(tr.max_residual() <= 1e-8, tr.system + " residual " + fmt(tr.max_residual()));
        o.require(tr.div_curl <= 1e-13, tr.system + " div curl " + fmt(tr.div_curl));
        worst_res = std::max(worst_res, tr.max_residual());
        worst_dc = std::max(worst_dc, tr.div_curl);
    }
    o.notes.push_back("max residual " + fmt(worst_res) + ", div curl " + fmt(worst_dc));

    // -lap A4 = j4 = cos(x)(1+t) gives E = -grad A4 = (sin(x)(1+t), 0, 0)
    sim::Trajectory e = sim::run_electric(config({{"j4", "cos(x)*(1+t)"}, {"j", {"sin(x)", "0", "0"}}}, 0.05, 0.1));
    const sim::Snapshot& s = e.snapshots.back();
    double err = 0;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; j += 7) {
            size_t k = e.grid.index(i, j, 3);
            err = std::max({err, std::abs(s.component("E1")[k] - std::sin(i * e.grid.h) * (1 + s.t)),
                            std::abs(s.component("E2")[k]), std::abs(s.component("E3")[k])});
        }
    o.require(err <= 1e-12, "electric field against the closed form " + fmt(err));

    const Json osc{{"j0", "cos(y)*sin(t)"},
                   {"j4", "2*cos(2*x)*sin(3*t)/3"},
                   {"j", {"sin(2*x)*cos(3*t)", "sin(z)", "cos(x)"}}};
    std::vector<double> cont, mom;
    for (double dt : {0.02, 0.01, 0.005}) {
        sim::Trajectory tr = sim::run_extended(config(osc, dt, 0.2));
        cont.push_back(tr.max_continuity());
        double m = 0;
        for (auto& st : tr.steps) m = std::max(m, st.momentum_continuity);
        mom.push_back(m);
    }
    std::string orders;
    for (size_t k = 0; k + 1 < cont.size(); ++k) {
        double pe = std::log2(cont[k] / cont[k + 1]), pm = std::log2(mom[k] / mom[k + 1]);
        o.require(pe >= 1.9, "energy continuity order " + fmt(pe));
        o.require(pm >= 1.9, "momentum continuity order " + fmt(pm));
        orders += (orders.empty() ? "" : ", ") + fmt(pe) + "/" + fmt(pm);
    }
    o.notes.push_back("continuity orders " + orders);

    for (auto [limit, name, src] : {std::tuple{sim::Limit::Magnetic, "magnetic", mag},
                                    std::tuple{sim::Limit::Electric, "electric", el}}) {
        sim::FrameComparison f = sim::frame_consistency(limit, config(src, 0.02, 0.2));
        o.require(f.max_error <= 1e-6, std::string(name) + " boosted frame " + fmt(f.max_error));
        o.notes.push_back(std::string(name) + " frame " + fmt(f.max_error));
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    for (auto& n : catalog_names()) {
        const FieldSystem& s = catalog(n);
        std::string printed = print_system(s);
        FieldSystem back = parse_system(printed);
        o.require(same_system(back, s) && print_system(back) == printed, n + " round trip");
    }
    const char* flipped = R"(system magflip {
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
    CovarianceOptions opt;
    opt.trials = 50;
    opt.motions = 10;
    opt.seed = 42;
    ClassificationReport r = classify(parse_system(flipped), opt);
    o.require(!r.covariant, "magflip classified covariant");
    o.require(r.counterexample_boost.has_value(), "no counterexample boost");
    if (r.counterexample_boost) {
        const GalileiMotion& g = r.counterexample_boost->motion;
        GalileiMotion pure = GalileiMotion::boost(g.v);
        o.require(g.rot.matrix() == identity<Rational>(3) && g.str() == pure.str(), "counterexample is not a pure boost");
        o.require(!r.counterexample_boost->mismatch.is_zero(), "counterexample has no mismatch");
        o.notes.push_back("counterexample " + g.str() + " on " + r.counterexample_boost->equation);
    }
    o.require(classify(catalog("mag"), opt).covariant, "mag itself classified non-covariant");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        std::string id, title;
        std::function<Outcome()> run;
        double budget;  // seconds
    };
    const std::vector<Criterion> criteria{
        {"AC1", "representation catalog", ac1, 1},   {"AC2", "contraction table", ac2, 1},
        {"AC3", "covariance suite", ac3, 60},        {"AC4", "appendix closure", ac4, 1e9},
        {"AC5", "invariants and Born-Infeld", ac5, 1e9}, {"AC6", "energy-momentum certificate", ac6, 1e9},
        {"AC7", "simulator", ac7, 120},              {"AC8", "DSL round trip and sign-flipped mag", ac8, 1e9}};

    int unexpected = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (sec >= c.budget) o.require(false, "runtime " + fmt(sec) + " s exceeds " + fmt(c.budget) + " s");
        bool known = kKnownFailures.count(c.id) > 0;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  (" << fmt(sec) << " s)";
        if (!o.pass) std::cout << (known ? "  [known failure]" : "  [unexpected]");
        std::cout << "\n";
        for (auto& n : o.notes) std::cout << "    " << n << "\n";
        if (!o.pass && !known) ++unexpected;
        if (o.pass && known) std::cout << "    listed as a known failure but passed\n";
    }
    std::cout << (unexpected ? "unexpected failures: " + std::to_string(unexpected) : "no unexpected failures") << "\n";
    return unexpected ? 1 : 0;
}
