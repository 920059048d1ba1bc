#include "galinv/calculus.hpp"
#include "galinv/catalog.hpp"
#include "galinv/energy.hpp"

#include <doctest.h>

#include <random>

using namespace galinv;

namespace {

PolyQ T() { return coord(0); }
PolyQ X() { return coord(1); }
PolyQ Y() { return coord(2); }
PolyQ Z() { return coord(3); }

bool all_zero(const PolyVec& v) {
    for (auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

PolyVec random_vec(std::mt19937_64& rng, int degree) {
    return {random_poly(rng, degree), random_poly(rng, degree), random_poly(rng, degree)};
}

PolyVec flatten(std::initializer_list<PolyVec> parts) {
    PolyVec out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

TEST_CASE("curl of (yz, 0, 0) by hand and by finite differences") {
    PolyVec F{Y() * Z(), PolyQ(), PolyQ()};
    PolyVec c = curl(F);
    CHECK(c[0].is_zero());
    CHECK(c[1] == Y());
    CHECK(c[2] == -Z());

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    const Rational h(1, 1000);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> p{Rational(d(rng), 3), Rational(d(rng), 4), Rational(d(rng), 5), Rational(d(rng), 7)};
        auto fd = [&](const PolyQ& f, int mu) {
            auto a = p, b = p;
            a[mu] += h;
            b[mu] -= h;
            return (f.evaluate(a) - f.evaluate(b)) / (Rational(2) * h);
        };
        for (int k = 0; k < 3; ++k) {
            int q = (k + 1) % 3, r = (k + 2) % 3;
            Rational expect = fd(F[r], q + 1) - fd(F[q], r + 1);
            CHECK(std::abs((c[k].evaluate(p) - expect).to_double()) < 1e-12);
        }
    }
}

TEST_CASE("property: div curl = 0 and curl grad = 0") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        PolyVec F = random_vec(rng, 3);
        CHECK(div(curl(F)).is_zero());
        CHECK(all_zero(curl(grad(random_poly(rng, 3)))));
    }
    CHECK_THROWS(div(PolyVec{X(), Y()}));
}

TEST_CASE("pullback of (R, B) under a pure boost") {
    Vec3Q v{Rational(1, 2), Rational(-3), Rational(2, 7)};
    PolyVec R{X() * T(), Y() * Y(), Z() + T()};
    PolyQ B = X() * Y() - Z();
    FieldMultiplet m = make_multiplet(RepLabel{1, 1, 0}, {R[0], R[1], R[2], B});
    FieldMultiplet p = pullback(m, GalileiMotion::boost(v));

    // argument x + v t in the toolkit's convention x' = x - v t
    PolyVec shift{T(), X() + T() * PolyQ(v[0]), Y() + T() * PolyQ(v[1]), Z() + T() * PolyQ(v[2])};
    Substitution<Rational> sub(spacetime(), shift);
    PolyVec Rs{sub.apply(R[0]), sub.apply(R[1]), sub.apply(R[2])};
    for (int a = 0; a < 3; ++a) CHECK(p.components[a] == Rs[a]);
    PolyQ vR = Rs[0] * PolyQ(v[0]) + Rs[1] * PolyQ(v[1]) + Rs[2] * PolyQ(v[2]);
    CHECK(p.components[3] == sub.apply(B) + vR);
}

TEST_CASE("property: pullback is a group action and the identity acts trivially") {
    std::mt19937_64 rng(23);
    for (const auto& l : catalog_labels()) {
        CAPTURE(l.str());
        GalileiRep r = build_galilei_rep(l);
        PolyVec comps;
        for (int i = 0; i < r.dim(); ++i) comps.push_back(random_poly(rng, 2));
        FieldMultiplet m = make_multiplet(l, comps);
        GalileiMotion g1 = random_motion(rng), g2 = random_motion(rng);
        FieldMultiplet seq = pullback(pullback(m, g1), g2);
        FieldMultiplet once = pullback(m, compose(g2, g1));
        for (int i = 0; i < r.dim(); ++i) CHECK(seq.components[i] == once.components[i]);
        FieldMultiplet same = pullback(m, GalileiMotion{});
        for (int i = 0; i < r.dim(); ++i) CHECK(same.components[i] == comps[i]);
        CHECK(compose(g1.inverse(), g1).is_identity());
    }
}

TEST_CASE("residuals of mag on constant H and of coupl on potential-derived fields") {
    CompiledSystem mag = compile_system(catalog("mag"));
    PolyVec fields{0, 0, 0, 0, 0, 1}, sources{0, 0, 0, 0};
    CHECK(all_zero(residuals(mag, fields, sources, {{"e", Rational(3)}})));
    CHECK(all_zero(residuals(mag, PolyVec(6), sources, {{"e", Rational(3)}})));

    // static harmonic A, harmonic A0, A4 = -t div A + harmonic
    Potentials p{X() * X() - Z() * Z(), {X() * Y(), Y() * Z(), X() * X() - Y() * Y()}, PolyQ()};
    p.A4 = -(T() * div(p.A)) + X() * Z();
    ExtendedFields f = fields_from_potentials(p);
    CompiledSystem coupl = compile_system(catalog("coupl"));
    PolyVec fl = flatten({{f.B}, f.N, f.W, f.R});
    CHECK(all_zero(residuals(coupl, fl, PolyVec(5), {{"e", Rational(2)}})));

    CHECK_THROWS(residuals(coupl, PolyVec(4), PolyVec(5), {{"e", Rational(2)}}));
}

TEST_CASE("covariance: mag passes, the identity motion passes, the wrong law fails") {
    CovarianceOptions o;
    o.trials = 6;
    o.motions = 3;
    CHECK(covariance_check(compile_system(catalog("mag")), o).pass);

    FieldSystem wrong = catalog("mag");
    wrong.name = "mag-invariant-fields";
    wrong.field_reps.clear();  // E and H merely rotate
    CovarianceReport r = covariance_check(compile_system(wrong), o);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample);
    CHECK_FALSE(r.counterexample->mismatch.is_zero());

    CovarianceOptions id = o;
    id.motion = GalileiMotion{};
    CHECK(covariance_check(compile_system(wrong), id).pass);
}

TEST_CASE("covariance: jet and direct modes agree") {
    for (const char* name : {"coupl4", "LLL", "el"}) {
        CAPTURE(name);
        CovarianceOptions o;
        o.trials = 4;
        o.motions = 2;
        o.seed = 9;
        CompiledSystem s = compile_system(catalog(name));
        CovarianceReport jet = covariance_check(s, o);
        o.mode = CovarianceMode::Direct;
        CovarianceReport direct = covariance_check(s, o);
        CHECK(jet.pass == direct.pass);
    }
}

TEST_CASE("NL with zero Greek parameters against coupl") {
    CompiledSystem nl = compile_system(catalog("NL"));
    CompiledSystem coupl = compile_system(catalog("coupl"));
    std::mt19937_64 rng(31);
    PolyVec f, s;
    for (int i = 0; i < 10; ++i) f.push_back(random_poly(rng, 2));
    for (int i = 0; i < 5; ++i) s.push_back(random_poly(rng, 2));
    ParamValues zero{{"e", Rational(2)}};
    for (auto& p : nl.system.params)
        if (p != "e") zero[p] = Rational(0);
    PolyVec negated = s;
    negated[0] = -negated[0];
    PolyVec a = residuals(nl, f, s, zero), b = residuals(coupl, f, negated, {{"e", Rational(2)}});
    REQUIRE(a.size() == b.size());
    // C is written with the opposite overall sign, and j0 enters coupl negated
    size_t c = nl.residual_offset("C");
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == (i == c ? -b[i] : b[i]));
}
