#include "galinv/calculus.hpp"
#include "galinv/catalog.hpp"
#include "galinv/classify.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace galinv;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

DslError parse_error(const std::string& text) {
    try {
        parse_system(text);
    } catch (const DslError& e) {
        return e;
    }
    FAIL("expected a DslError");
    throw;
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

}  // namespace

TEST_CASE("print then parse is the identity on every catalog system") {
    for (const auto& n : catalog_names()) {
        CAPTURE(n);
        const FieldSystem& s = catalog(n);
        FieldSystem back = parse_system(print_system(s));
        CHECK(same_system(back, s));
        CHECK(print_system(back) == print_system(s));
    }
}

TEST_CASE("shipped .gal files equal the built-in systems") {
    int files = 0;
    for (const auto& n : catalog_names()) {
        CAPTURE(n);
        std::filesystem::path p = std::filesystem::path(GALINV_SYSTEMS_DIR) / (n + ".gal");
        REQUIRE(std::filesystem::exists(p));
        CHECK(same_system(parse_system(read_file(p)), catalog(n)));
        ++files;
    }
    CHECK(files == static_cast<int>(catalog_names().size()));
}

TEST_CASE("diagnostics carry kind, line and column") {
    DslError e = parse_error("system s {\n  fields { B: scalar }\n  eq X: curl(B) = 0\n}");
    CHECK(e.kind() == DslError::Kind::Type);
    CHECK(e.line() == 3);
    CHECK(e.col() > 0);

    DslError u = parse_error("system s {\n  fields { B: scalar }\n  eq X: dt(C) = 0\n}");
    CHECK(u.kind() == DslError::Kind::Undeclared);
    CHECK(u.line() == 3);

    DslError empty = parse_error("");
    CHECK(empty.kind() == DslError::Kind::Syntax);
    CHECK(std::string(empty.what()).find("no system block") != std::string::npos);

    DslError syn = parse_error("system s { fields { B: scalar } eq X: dt(B = 0 }");
    CHECK(syn.kind() == DslError::Kind::Syntax);

    // second derivatives are outside the grammar's first-order terms
    CHECK_THROWS_AS(parse_system("system s { fields { B: scalar } eq X: dt(dt(B)) = 0 }"), DslError);
}

TEST_CASE("catalog lookups") {
    const FieldSystem& c = catalog("coupl");
    std::vector<std::string> names;
    for (auto& e : c.equations) names.push_back(e.name);
    CHECK(names == std::vector<std::string>{"C", "U", "A", "N", "W", "R", "B"});
    CHECK(catalog("mag1").name == catalog("e-static").name);
    CHECK(catalog("111").name == catalog("m-static").name);
    try {
        catalog("foo");
        FAIL("expected UnknownSystem");
    } catch (const UnknownSystem& e) {
        CHECK(std::string(e.what()).find("coupl") != std::string::npos);
    }
}

TEST_CASE("last is NL at zero omega, sigma, lambda, mu, rho") {
    CompiledSystem nl = compile_system(catalog("NL"));
    CompiledSystem last = compile_system(catalog("last"));
    std::mt19937_64 rng(41);
    PolyVec f, s;
    for (int i = 0; i < 10; ++i) f.push_back(random_poly(rng, 2));
    for (int i = 0; i < 5; ++i) s.push_back(random_poly(rng, 2));
    ParamValues p{{"e", Rational(3)}, {"nu", Rational(-2, 5)}};
    ParamValues q = p;
    for (const char* g : {"lambda", "sigma", "omega", "mu", "rho"}) q[g] = Rational(0);
    PolyVec a = residuals(last, f, s, p), b = residuals(nl, f, s, q);
    REQUIRE(a.size() == b.size());
    // the R equation is printed with opposite signs in the two systems
    size_t r = last.residual_offset("R");
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == (i >= r && i < r + 3 ? -b[i] : b[i]));
}

TEST_CASE("classify coupl4: forms A1, W2, R2 and covariant") {
    CovarianceOptions o;
    o.trials = 5;
    o.motions = 3;
    ClassificationReport r = classify(catalog("coupl4"), o);
    auto forms = r.matched_forms();
    std::sort(forms.begin(), forms.end());
    CHECK(forms == std::vector<std::string>{"A1", "R2", "W2"});
    CHECK(r.covariant);
    CHECK(r.closed.value_or(false));
    CHECK_FALSE(r.residual_rep.empty());
}

TEST_CASE("classify grad A = J: R1 on D(0,1,0)") {
    auto s = parse_system(
        "system g { fields { A: scalar } rep D(0,1,0) on (A) sources { J: vector } eq X: grad(A) = J }");
    CovarianceOptions o;
    o.trials = 5;
    o.motions = 3;
    ClassificationReport r = classify(s, o);
    REQUIRE(r.matches.size() == 1);
    CHECK(r.matches[0].form == "R1");
    CHECK(r.matches[0].multiplet.find("D(0,1,0)") != std::string::npos);
    CHECK(r.covariant);
}

TEST_CASE("sign-flipped mag is not covariant and yields a counterexample boost") {
    CovarianceOptions o;
    o.trials = 5;
    o.motions = 3;
    ClassificationReport r = classify(parse_system(kMagFlip), o);
    CHECK_FALSE(r.covariant);
    REQUIRE(r.counterexample_boost);
    CHECK(r.counterexample_boost->motion.rot.matrix() == identity<Rational>(3));
    CHECK_FALSE(r.counterexample_boost->mismatch.is_zero());
    CHECK(r.counterexample_boost->equation == "F");
    // the unflipped system passes with the same options
    CHECK(classify(catalog("mag"), o).covariant);
}

TEST_CASE("nonlinear systems skip form matching") {
    CovarianceOptions o;
    o.trials = 3;
    o.motions = 2;
    ClassificationReport r = classify(catalog("last"), o);
    CHECK_FALSE(r.linear);
    CHECK(r.matches.empty());
    CHECK(r.covariant);
}
