#include "galinv/simulator.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

using namespace galinv;
using namespace galinv::sim;

namespace {

Grid small_grid() { return Grid(16, 2 * std::numbers::pi / 16); }

Scalar field_of(const Grid& g, const std::function<double(double, double, double)>& f) {
    return sample(g, [&](double, double x, double y, double z) { return f(x, y, z); }, 0);
}

RunConfig small_run(const Json& sources, double dt = 0.05, double t_end = 0.1) {
    RunConfig c;
    c.grid = small_grid();
    c.dt = dt;
    c.t_end = t_end;
    c.sources = SourceSpec::from_json(sources, c.grid.L());
    return c;
}

}  // namespace

TEST_CASE("grid invariants") {
    CHECK_THROWS(Grid(4, 0.1));
    CHECK_THROWS(Grid(12, 0.1));
    CHECK_THROWS(Grid(16, 0));
    Grid g(8, 0.5);
    CHECK(g.L() == 4);
    CHECK(g.index(1, 2, 3) == 1 + 8 * (2 + 8 * 3));
}

TEST_CASE("Poisson solve: eigenfunction, zero and nonzero mean") {
    Grid g(32, 2 * std::numbers::pi / 32 * 1.5);
    const double L = g.L(), k = 2 * std::numbers::pi / L;
    Scalar rhs = field_of(g, [&](double x, double, double) { return std::sin(k * x); });
    Scalar u = poisson_solve(rhs, g);
    double err = 0;
    for (int i = 0; i < g.N; ++i) err = std::max(err, std::abs(u[g.index(i, 3, 5)] + std::sin(k * i * g.h) / (k * k)));
    CHECK(err < 1e-12);

    Spectral sp(g);
    Scalar lap = sp.laplacian(u);
    double r = 0;
    for (size_t i = 0; i < u.size(); ++i) r = std::max(r, std::abs(lap[i] - rhs[i]));
    CHECK(r <= 1e-10 * max_abs(rhs));

    CHECK(max_abs(poisson_solve(zeros(g), g)) == 0);
    CHECK_THROWS_AS(poisson_solve(Scalar(g.size(), 2.0), g), NonZeroMean);
}

TEST_CASE("property: spectral Poisson inverts the Laplacian on smooth periodic inputs") {
    Grid g = small_grid();
    Spectral sp(g);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> kd(-3, 3);
    std::uniform_real_distribution<double> ad(-1, 1);
    for (int trial = 0; trial < 10; ++trial) {
        int a = kd(rng), b = kd(rng), c = kd(rng);
        if (a == 0 && b == 0 && c == 0) a = 1;
        double amp = ad(rng), ph = ad(rng);
        Scalar rhs = field_of(g, [&](double x, double y, double z) { return amp * std::cos(a * x + b * y + c * z + ph); });
        Scalar u = sp.poisson(rhs), lap = sp.laplacian(u);
        double r = 0;
        for (size_t i = 0; i < u.size(); ++i) r = std::max(r, std::abs(lap[i] - rhs[i]));
        CHECK(r <= 1e-10 * max_abs(rhs));
    }
}

TEST_CASE("central-difference identities") {
    Grid g = small_grid();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-1, 1);
    Vector A;
    for (auto& c : A) {
        c.resize(g.size());
        for (double& x : c) x = d(rng);
    }
    double scale = max_abs(A) / (g.h * g.h);
    CHECK(max_abs(cd_div(g, cd_curl(g, A))) / scale <= 1e-13);
    CHECK(max_abs(cd_curl(g, cd_grad(g, A[0]))) / scale <= 1e-13);
}

TEST_CASE("source expressions") {
    const double L = 2 * std::numbers::pi;
    SourceExpr e("2*sin(x)^2 - cos(y + z)/3 + t*L/pi", L);
    CHECK(std::abs(e(1, 0.5, 1, 2) - (2 * std::pow(std::sin(0.5), 2) - std::cos(3.0) / 3 + 2)) < 1e-14);
    CHECK_NOTHROW(e.check_periodic(L));
    CHECK_THROWS_AS(SourceExpr("x", L).check_periodic(L), IncompatibleSources);
    CHECK_THROWS_AS(SourceExpr("sin(x/2)", L).check_periodic(L), IncompatibleSources);
    SourceExpr gs("gauss(1, 2, 3, 0.4)", L);
    CHECK_NOTHROW(gs.check_periodic(L));
    CHECK(std::abs(gs(0, 1, 2, 3) - 1) < 1e-6);
    CHECK_THROWS_AS(SourceExpr("sin(x", L), std::invalid_argument);
    CHECK_THROWS_AS(SourceExpr("foo(x)", L), std::invalid_argument);
    CHECK_THROWS_AS(SourceExpr("x^y", L), std::invalid_argument);
    CHECK_THROWS(SourceSpec::from_json(Json{{"q", 1}}, L));
}

TEST_CASE("zero sources give zero fields") {
    for (auto run : {run_magnetic, run_electric, run_extended}) {
        Trajectory tr = run(small_run(Json::object()));
        CHECK(tr.max_residual() == 0);
        REQUIRE(tr.snapshots.size() == 1);
        for (auto& c : tr.snapshots[0].components) CHECK(max_abs(c) == 0);
    }
}

TEST_CASE("magnetic limit with a static solenoidal current") {
    // j = curl (0, 0, sin x cos y)
    Trajectory tr = run_magnetic(small_run({{"j", {"-sin(x)*sin(y)", "-cos(x)*cos(y)", "0"}}}));
    CHECK(tr.max_residual() <= 1e-8);
    const Snapshot& s = tr.snapshots.back();
    CHECK(max_abs(s.component("E1")) <= 1e-12);
    CHECK(std::abs(max_abs(s.component("H3")) - 1) < 1e-12);
    CHECK(tr.steps.front().energy == doctest::Approx(tr.steps.back().energy).epsilon(1e-12));
    CHECK(tr.div_curl <= 1e-13);
    CHECK_THROWS_AS(run_magnetic(small_run({{"j", {"sin(x)", "0", "0"}}})), IncompatibleSources);
}

TEST_CASE("electric limit with a compatible current") {
    Trajectory tr = run_electric(small_run({{"j4", "cos(x)*(1 + t)"}, {"j", {"sin(x)", "0", "0"}}}));
    CHECK(tr.max_residual() <= 1e-8);
    CHECK_THROWS_AS(run_electric(small_run({{"j4", "cos(x)*t"}, {"j", {"-sin(x)", "0", "0"}}})),
                    IncompatibleSources);
}

TEST_CASE("extended system: residuals, positivity and source conditions") {
    Json src{{"j0", "cos(y)*sin(t)"}, {"j4", "cos(x)*t + sin(y)"}, {"j", {"sin(x)", "sin(z)", "cos(x)"}}};
    Trajectory tr = run_extended(small_run(src));
    CHECK(tr.equations == std::vector<std::string>{"C", "U", "A", "N", "W", "R", "B"});
    CHECK(tr.max_residual() <= 1e-8);
    for (auto& s : tr.steps) CHECK(s.energy >= 0);
    CHECK(tr.header.find("+div A") != std::string::npos);

    // a time-dependent transverse current cannot be represented
    Json moving{{"j", {"0", "sin(x)*t", "0"}}};
    CHECK_THROWS_AS(run_extended(small_run(moving)), IncompatibleSources);
    Json charge{{"j4", "cos(x)*t"}};
    CHECK_THROWS_AS(run_extended(small_run(charge)), IncompatibleSources);
}

TEST_CASE("snapshot round trip and errors") {
    Grid g(8, 0.25);
    Snapshot s{"magnetic", "D(2,0,0) on (E, -H)", 8, 0.25, 0.5, {}, {}};
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-1, 1);
    for (int c = 0; c < 2; ++c) {
        Scalar f(g.size());
        for (double& x : f) x = d(rng);
        s.components.push_back(f);
    }
    std::vector<char> bytes = encode_snapshot(s);
    CHECK(bytes.size() == 8 + 4 + 8 + 4 + 19 + 4 + 8 + 8 + 4 + 2 * 512 * 8);
    Snapshot back = decode_snapshot(bytes);
    CHECK(back.system == s.system);
    CHECK(back.rep == s.rep);
    CHECK(back.N == 8);
    CHECK(back.t == 0.5);
    CHECK(back.components == s.components);
    CHECK(encode_snapshot(back) == bytes);

    auto path = std::filesystem::temp_directory_path() / "galinv_unit_snapshot.gfld";
    write_snapshot(path.string(), s);
    CHECK(encode_snapshot(read_snapshot(path.string())) == bytes);
    CHECK_THROWS_AS(read_snapshot(path.string(), 16), GridMismatch);
    std::filesystem::remove(path);

    std::vector<char> bad = bytes;
    bad[0] = 'X';
    CHECK_THROWS_AS(decode_snapshot(bad), BadMagic);
    std::vector<char> cut(bytes.begin(), bytes.end() - 8);
    CHECK_THROWS_AS(decode_snapshot(cut), Truncated);
    std::vector<char> longer = bytes;
    longer.push_back(0);
    CHECK_THROWS_AS(decode_snapshot(longer), Truncated);
}

TEST_CASE("diagnostics csv and output files") {
    Trajectory tr = run_magnetic(small_run({{"j0", "sin(x)"}}));
    std::string csv = tr.csv();
    CHECK(csv.rfind("t,residual_F,residual_G,residual_M,residual_Q,energy,momentum_x,momentum_y,momentum_z,"
                    "continuity\n",
                    0) == 0);
    auto dir = std::filesystem::temp_directory_path() / "galinv_unit_out";
    std::filesystem::remove_all(dir);
    write_outputs(tr, dir.string());
    CHECK(std::filesystem::exists(dir / "diagnostics.csv"));
    CHECK(std::filesystem::exists(dir / "magnetic_0.gfld"));
    std::filesystem::remove_all(dir);
}
