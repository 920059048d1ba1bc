#include "galinv/catalog.hpp"

#include <map>

namespace galinv {

SystemBuilder::SystemBuilder(std::string name) { s_.name = std::move(name); }

SystemBuilder& SystemBuilder::field(const std::string& n, ValueType t) {
    s_.fields.push_back({n, t});
    return *this;
}

SystemBuilder& SystemBuilder::source(const std::string& n, ValueType t) {
    s_.sources.push_back({n, t});
    return *this;
}

SystemBuilder& SystemBuilder::params(std::vector<std::string> p) {
    s_.params = std::move(p);
    return *this;
}

namespace {
RepBinding make_binding(const std::string& label, const std::vector<std::string>& names) {
    RepBinding b;
    b.label = RepLabel::parse(label);
    for (auto& n : names) {
        if (!n.empty() && n[0] == '-')
            b.names.push_back({-1, n.substr(1)});
        else
            b.names.push_back({1, n});
    }
    return b;
}
}  // namespace

SystemBuilder& SystemBuilder::field_rep(const std::string& label, const std::vector<std::string>& names) {
    s_.field_reps.push_back(make_binding(label, names));
    return *this;
}

SystemBuilder& SystemBuilder::source_rep(const std::string& label, const std::vector<std::string>& names) {
    s_.source_reps.push_back(make_binding(label, names));
    return *this;
}

SystemBuilder& SystemBuilder::residual_rep(const std::string& label, const std::vector<std::string>& names) {
    s_.residual_reps.push_back(make_binding(label, names));
    return *this;
}

SystemBuilder& SystemBuilder::eq(const std::string& name, ExprPtr lhs, ExprPtr rhs) {
    s_.equations.push_back({name, std::move(lhs), std::move(rhs)});
    return *this;
}

FieldSystem SystemBuilder::build() const {
    check_system(s_);
    return s_;
}

namespace {

using namespace dsl;
constexpr ValueType S = ValueType::Scalar;
constexpr ValueType V = ValueType::Vector;

const char* kConvention =
    "boost parameter v enters the field laws as printed; the matching motion is x -> Rx - vt + b";

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    auto E = id("E"), H = id("H"), e = id("e"), j = id("j"), j0 = id("j0"), j4 = id("j4");
    auto B = id("B"), N = id("N"), W = id("W"), R = id("R");
    auto zero = num(0);

    c.push_back({SystemBuilder("mag")
                     .field("E", V)
                     .field("H", V)
                     .field_rep("D(2,0,0)", {"E", "-H"})
                     .source("j0", S)
                     .source("j", V)
                     .source_rep("D(1,1,0)", {"j", "j0"})
                     .params({"e"})
                     .eq("F", curl(E) - dt(H), zero)
                     .eq("G", div(E), e * j0)
                     .eq("M", curl(H), e * j)
                     .eq("Q", div(H), zero)
                     .residual_rep("D(1,1,0)", {"M", "G"})
                     .residual_rep("D(1,1,1)", {"F", "-Q"})
                     .build(),
                 "magnetic Galilean limit of the Maxwell equations",
                 "invariant under Galilei transformations when H -> H, E -> E - v x H, j -> j, j0 -> j0 + v.j",
                 {kConvention},
                 true,
                 false});

    c.push_back({SystemBuilder("el")
                     .field("E", V)
                     .field("H", V)
                     .field_rep("D(2,0,0)", {"H", "E"})
                     .source("j4", S)
                     .source("j", V)
                     .source_rep("D(1,1,1)", {"j", "j4"})
                     .params({"e"})
                     .eq("X", curl(H) + dt(E), e * j)
                     .eq("Y", div(E), e * j4)
                     .eq("Z", curl(E), zero)
                     .eq("Q", div(H), zero)
                     .residual_rep("D(1,1,1)", {"X", "Y"})
                     .residual_rep("D(1,1,0)", {"-Z", "Q"})
                     .build(),
                 "electric Galilean limit of the Maxwell equations",
                 "invariant when H -> H + v x E, E -> E, j -> j + v j4, j4 -> j4",
                 {kConvention},
                 true,
                 false});

    c.push_back({SystemBuilder("coupl")
                     .field("B", S)
                     .field("N", V)
                     .field("W", V)
                     .field("R", V)
                     .field_rep("D(3,1,1)", {"B", "N", "W", "R"})
                     .source("j0", S)
                     .source("j", V)
                     .source("j4", S)
                     .source_rep("D(1,2,1)", {"j", "j4", "-j0"})
                     .params({"e"})
                     .eq("C", div(N) - dt(B) - e * j0, zero)
                     .eq("U", dt(R) + curl(W) - e * j, zero)
                     .eq("A", div(R) - e * j4, zero)
                     .eq("N", dt(W) + curl(N), zero)
                     .eq("W", dt(R) - grad(B), zero)
                     .eq("R", -curl(R), zero)
                     .eq("B", div(W), zero)
                     .residual_rep("D(1,2,1)", {"U", "A", "-C"})
                     .residual_rep("D(3,1,1)", {"B", "N", "W", "R"})
                     .build(),
                 "extended Galilei electromagnetism on the D(3,1,1) multiplet with five-current sources",
                 "covariant with respect to the Galilei group; fields transform by the D(3,1,1) law, current by "
                 "D(1,2,1)",
                 {kConvention,
                  "with the printed sign of the first equation the current must enter as (j, j4, -j0); the printed "
                  "current law j0 -> j0 + v.j + v^2 j4/2 makes the first equation non-covariant"},
                 true,
                 false});

    auto Ht = id("Ht"), Et = id("Et"), Sf = id("S");
    c.push_back({SystemBuilder("coupl1")
                     .field("Ht", V)
                     .field("Et", V)
                     .field("S", S)
                     .field_rep("D(2,1,1)", {"S", "Et", "Ht"})
                     .source("j0", S)
                     .source("j", V)
                     .source_rep("D(1,1,0)", {"j", "-j0"})
                     .params({"e"})
                     .eq("P1", dt(Ht) + curl(Et), zero)
                     .eq("P2", curl(Ht), e * j)
                     .eq("P3", div(Ht), zero)
                     .eq("P4", div(Et), dt(Sf) + e * j0)
                     .eq("P5", grad(Sf), zero)
                     .residual_rep("D(2,1,1)", {"P3", "P1", "-P5"})
                     .residual_rep("D(1,1,0)", {"-P2", "P4"})
                     .build(),
                 "reduction of coupl by R = 0, j4 = 0",
                 "Et -> Et + v x Ht + v S, Ht -> Ht, S -> S (carrier space of D(2,1,1))",
                 {kConvention, "as in coupl, the printed fourth equation needs the current law j0 -> j0 - v.j"},
                 true,
                 false});

    c.push_back({SystemBuilder("coupl2")
                     .field("B", S)
                     .field("W", V)
                     .field("R", V)
                     .field_rep("D(2,1,0)", {"R", "W", "B"})
                     .source("j", V)
                     .source("j4", S)
                     .source_rep("D(1,1,1)", {"j", "j4"})
                     .params({"e"})
                     .eq("U", curl(W) + dt(R) - e * j, zero)
                     .eq("A", div(R) - e * j4, zero)
                     .eq("W", dt(R) - grad(B), zero)
                     .eq("mR", curl(R), zero)
                     .eq("B", div(W), zero)
                     .residual_rep("D(1,1,1)", {"U", "A"})
                     .residual_rep("D(2,1,0)", {"-mR", "W", "B"})
                     .build(),
                 "subsystem of coupl without N and j0",
                 "Galilei-covariant; W, R, B and j, j4 transform as in coupl",
                 {kConvention},
                 true,
                 false});

    c.push_back({SystemBuilder("coupl4")
                     .field("R", V)
                     .field("B", S)
                     .field_rep("D(1,1,0)", {"R", "B"})
                     .source("j4", S)
                     .params({"e"})
                     .eq("A", div(R) - e * j4, zero)
                     .eq("W", dt(R) - grad(B), zero)
                     .eq("mR", curl(R), zero)
                     .residual_rep("D(0,1,0)", {"A"})
                     .residual_rep("D(2,0,0)", {"W", "-mR"})
                     .build(),
                 "reduction of coupl2 to two vector and two scalar variables",
                 "Galilei-covariant; residuals form the D(1,1,0) forms of the appendix",
                 {kConvention},
                 true,
                 false});

    auto Eh = id("Eh"), rho = id("rho");
    c.push_back({SystemBuilder("e-static")
                     .field("Eh", V)
                     .source("rho", S)
                     .params({"e"})
                     .eq("curlE", curl(Eh), zero)
                     .eq("divE", div(Eh), e * rho)
                     .build(),
                 "reduction of mag by H = 0, j = 0",
                 "Galilei-invariant since Eh and rho do not change",
                 {"the harmonic function in A = grad(phi) is unspecified; potentials use A = 0"},
                 true,
                 false});

    auto Hh = id("Hh");
    c.push_back({SystemBuilder("m-static")
                     .field("Hh", V)
                     .source("j", V)
                     .params({"e"})
                     .eq("curlH", curl(Hh), e * j)
                     .eq("divH", div(Hh), zero)
                     .build(),
                 "reduction of el by E = 0, j4 = 0",
                 "Galilei-invariant reduction of the electric limit",
                 {},
                 true,
                 false});

    c.push_back({SystemBuilder("coupl3")
                     .field("Hh", V)
                     .field("S", S)
                     .source("j", V)
                     .params({"e"})
                     .eq("curlH", curl(Hh) - e * j, zero)
                     .eq("divH", div(Hh), zero)
                     .eq("gradS", grad(Sf), zero)
                     .build(),
                 "reduction of coupl2 by R = 0, j4 = 0",
                 "decoupled Galilei-invariant system",
                 {},
                 true,
                 false});

    auto nu = id("nu"), lambda = id("lambda"), sigma = id("sigma"), omega = id("omega"), mu = id("mu"),
         rh = id("rho");
    c.push_back(
        {SystemBuilder("NL")
             .field("B", S)
             .field("N", V)
             .field("W", V)
             .field("R", V)
             .field_rep("D(3,1,1)", {"B", "N", "W", "R"})
             .source("j0", S)
             .source("j", V)
             .source("j4", S)
             .source_rep("D(1,2,1)", {"j", "j4", "j0"})
             .params({"e", "nu", "lambda", "sigma", "omega", "mu", "rho"})
             .eq("C",
                 dt(B) - div(N) + nu * dot(W, N) + lambda * dot(R, W) + sigma * (B * B - dot(R, N)) +
                     omega * dot(R, R) + mu * B,
                 e * j0)
             .eq("U", dt(R) + curl(W) + nu * (B * W + cross(R, N)) + sigma * (cross(R, W) + B * R) + mu * R, e * j)
             .eq("A", div(R) + nu * dot(R, W) + sigma * dot(R, R), e * j4)
             .eq("N", dt(W) + curl(N) + rh * N, zero)
             .eq("W", dt(R) - grad(B) + rh * W, zero)
             .eq("R", -curl(R) + rh * R, zero)
             .eq("B", div(W) + rh * B, zero)
             .residual_rep("D(1,2,1)", {"U", "A", "C"})
             .residual_rep("D(3,1,1)", {"B", "N", "W", "R"})
             .build(),
         "general quasilinear Galilei-invariant extension of coupl",
         "adding the bilinear currents and linear terms does not violate Galilei invariance",
         {kConvention,
          "the first equation carries dt(B) - div(N) = e j0, the opposite sign of coupl for the j0 term; at zero "
          "Greek parameters NL equals coupl up to the sign of each scalar equation and of j0"},
         true,
         false});

    c.push_back({SystemBuilder("last")
                     .field("B", S)
                     .field("N", V)
                     .field("W", V)
                     .field("R", V)
                     .field_rep("D(3,1,1)", {"B", "N", "W", "R"})
                     .source("j0", S)
                     .source("j", V)
                     .source("j4", S)
                     .source_rep("D(1,2,1)", {"j", "j4", "j0"})
                     .params({"e", "nu"})
                     .eq("C", dt(B) - div(N) + nu * dot(W, N), e * j0)
                     .eq("U", dt(R) + curl(W) + nu * (B * W + cross(R, N)), e * j)
                     .eq("A", div(R) + nu * dot(R, W), e * j4)
                     .eq("N", dt(W) + curl(N), zero)
                     .eq("W", dt(R) - grad(B), zero)
                     .eq("R", curl(R), zero)
                     .eq("B", div(W), zero)
                     .residual_rep("D(1,2,1)", {"U", "A", "C"})
                     .residual_rep("D(3,1,1)", {"B", "N", "W", "-R"})
                     .build(),
                 "NL at omega = sigma = lambda = mu = rho = 0",
                 "particular case of NL with zero arbitrary parameters; admits a Lagrangian",
                 {kConvention, "the sixth equation is printed as curl(R) = 0, the negative of the NL form"},
                 true,
                 false});

    auto Em = id("Em"), Hm = id("Hm");
    c.push_back({SystemBuilder("LastLast")
                     .field("Em", V)
                     .field("Hm", V)
                     .field_rep("D(2,0,0)", {"Em", "-Hm"})
                     .source("j0", S)
                     .source("j", V)
                     .source_rep("D(1,1,0)", {"j", "j0"})
                     .params({"e", "nu"})
                     .eq("G", div(Em) + nu * dot(Hm, Em), e * j0)
                     .eq("M", curl(Hm), e * j)
                     .eq("F", dt(Hm) - curl(Em), zero)
                     .eq("Q", div(Hm), zero)
                     .residual_rep("D(1,1,0)", {"M", "G"})
                     .residual_rep("D(1,1,1)", {"-F", "-Q"})
                     .build(),
                 "magnetic limit of last",
                 "Galilei-invariant reduction of the nonlinear system",
                 {kConvention, "called a limit of last although the parameter correspondence is not stated"},
                 true,
                 true});

    auto Ee = id("Ee"), He = id("He");
    c.push_back({SystemBuilder("LLL")
                     .field("Ee", V)
                     .field("He", V)
                     .field_rep("D(2,0,0)", {"He", "Ee"})
                     .source("j4", S)
                     .source("j", V)
                     .source_rep("D(1,1,1)", {"j", "j4"})
                     .params({"e", "mu", "nu"})
                     .eq("X", dt(Ee) + curl(He) + mu * Ee, e * j)
                     .eq("Z", curl(Ee), zero)
                     .eq("Y", div(Ee) + nu * dot(Ee, He), e * j4)
                     .eq("Q", div(He), zero)
                     .residual_rep("D(1,1,1)", {"X", "Y"})
                     .residual_rep("D(1,1,0)", {"-Z", "Q"})
                     .build(),
                 "electric limit of last",
                 "Galilei-invariant reduction of the nonlinear system",
                 {kConvention,
                  "mu is zero in last but appears here; the boost of the first equation produces v (div(Ee) - e j4) "
                  "while the third equation supplies div(Ee) + nu Ee.He - e j4, so the nu term breaks covariance"},
                 true,
                 true});

    auto D = id("D"), Bm = id("B");
    c.push_back({SystemBuilder("BI-electric")
                     .field("D", V)
                     .field("H", V)
                     .field("B", V)
                     .field("E", V)
                     .field_rep("D(2,0,0)", {"H", "-D"})
                     .field_rep("D(2,0,0)", {"B", "-E"})
                     .eq("X", dt(D), curl(H))
                     .eq("Y", div(D), zero)
                     .eq("Z", curl(E), zero)
                     .eq("Q", div(Bm), zero)
                     .residual_rep("D(1,1,1)", {"X", "Y"})
                     .residual_rep("D(1,1,0)", {"Z", "Q"})
                     .build(),
                 "Galilean Born-Infeld system from the contraction V6",
                 "Galilei-invariant with D -> D, H -> H + v x D, B -> B + v x E, E -> E",
                 {"the printed laws hold with the opposite sign of v relative to mag, el and the media law; here "
                  "H -> H - v x D and B -> B - v x E"},
                 true,
                 false});

    c.push_back({SystemBuilder("BI-magnetic")
                     .field("D", V)
                     .field("H", V)
                     .field("B", V)
                     .field("E", V)
                     .field_rep("D(2,0,0)", {"D", "H"})
                     .field_rep("D(2,0,0)", {"E", "B"})
                     .eq("P", curl(H), zero)
                     .eq("Y", div(D), zero)
                     .eq("X", dt(Bm), -curl(E))
                     .eq("Q", div(Bm), zero)
                     .residual_rep("D(1,1,0)", {"-P", "Y"})
                     .residual_rep("D(1,1,1)", {"X", "Q"})
                     .build(),
                 "Galilean Born-Infeld system from the contraction V7",
                 "Galilei-invariant with D -> D - v x H, H -> H, B -> B, E -> E - v x B",
                 {"the printed laws hold with the opposite sign of v; here D -> D + v x H and E -> E + v x B"},
                 true,
                 false});

    auto chi = id("chi");
    c.push_back(
        {SystemBuilder("media")
             .field("D", V)
             .field("H", V)
             .field("B", V)
             .field("E", V)
             .field_rep("D(2,0,0)", {"E", "B"})
             .field_rep("D(2,0,0)", {"H", "-D"})
             .params({"sigma", "chi"})
             .eq("X", dt(D), curl(H))
             .eq("Y", div(D), zero)
             .eq("Z", dt(Bm), -curl(E))
             .eq("Q", div(Bm), zero)
             .eq("P", Bm, sigma * D)
             .eq("K", chi * D, E + sigma * H)
             .residual_rep("D(1,1,1)", {"X", "Y"})
             .residual_rep("D(1,1,1)", {"Z", "Q"})
             .residual_rep("D(2,0,0)", {"K", "-P"})
             .build(),
         "Maxwell equations in a medium with Galilei-invariant linear constitutive equations",
         "B = mu H + nu E, D = kappa E + lambda H are Galilei-invariant provided sigma kappa = nu and mu = sigma lambda",
         {"E -> E + v x B, H -> H - v x D, D -> D, B -> B",
          "invariance also needs lambda = nu; with kappa = 1/chi, nu = lambda = sigma kappa, mu = sigma^2 kappa the "
          "constitutive equations are B = sigma D and chi D = E + sigma H"},
         true,
         false});

    auto F = id("F"), F0 = id("F0");
    c.push_back({SystemBuilder("maxwell-FF")
                     .field("E", V)
                     .field("H", V)
                     .field("F", V)
                     .field("F0", S)
                     .source("j0", S)
                     .source("j", V)
                     .source("j4", S)
                     .params({"e"})
                     .eq("faraday", curl(E) - dt(H), zero)
                     .eq("divH", div(H), zero)
                     .eq("ampere", curl(H) + dt(E), e * j)
                     .eq("gauss", div(E), e * j0)
                     .eq("scalar", dt(F0) - div(F), e * j4)
                     .eq("curlF", curl(F), zero)
                     .eq("gradF", dt(F), grad(F0))
                     .build(),
                 "relativistic Maxwell equations with the four-gradient of the scalar potential (dt is d/dx0)",
                 "decoupled relativistic precursor of coupl",
                 {"Lorentz covariant; no Galilei law is declared"},
                 false,
                 false});

    c.push_back({SystemBuilder("born-infeld")
                     .field("D", V)
                     .field("H", V)
                     .field("B", V)
                     .field("E", V)
                     .eq("X", dt(D), curl(H))
                     .eq("Y", div(D), zero)
                     .eq("Z", dt(Bm), -curl(E))
                     .eq("Q", div(Bm), zero)
                     .build(),
                 "relativistic Maxwell equations in a medium (dt is d/dx0)",
                 "contracts to BI-electric under V6 and to BI-magnetic under V7",
                 {"Lorentz covariant; no Galilei law is declared"},
                 false,
                 false});
    return c;
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> c = build_catalog();
    return c;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (auto& e : entries()) n.push_back(e.system.name);
        return n;
    }();
    return names;
}

const std::vector<std::string>& covariance_suite() {
    static const std::vector<std::string> names = {"mag",      "el", "coupl", "coupl1", "coupl2",   "coupl4", "e-static",
                                                   "m-static", "coupl3", "last", "NL",     "LastLast", "LLL"};
    return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    static const std::map<std::string, std::string> aliases = {{"mag1", "e-static"}, {"111", "m-static"}};
    auto a = aliases.find(name);
    const std::string& key = a == aliases.end() ? name : a->second;
    for (auto& e : entries())
        if (e.system.name == key) return e;
    std::string list;
    for (auto& n : catalog_names()) list += (list.empty() ? "" : ", ") + n;
    throw UnknownSystem("unknown system '" + name + "'; available: " + list);
}

const FieldSystem& catalog(const std::string& name) { return catalog_entry(name).system; }

}  // namespace galinv
