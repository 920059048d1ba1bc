#include "galinv/forms.hpp"
#include "galinv/linsolve.hpp"

#include <doctest.h>

#include <random>

using namespace galinv;

namespace {

PolyQ X() { return coord(1); }

const EvaluatedForm& find_form(const std::vector<EvaluatedForm>& fs, const std::string& n) {
    for (auto& f : fs)
        if (f.name == n) return f;
    throw std::out_of_range(n);
}

}  // namespace

TEST_CASE("exact linear solve") {
    LinearSystem s(3);
    s.add({{0, Rational(1)}, {1, Rational(2)}}, Rational(5));
    s.add({{1, Rational(1)}, {2, Rational(-1)}}, Rational(1));
    s.add({{0, Rational(1)}, {2, Rational(1)}}, Rational(2));
    auto x = s.solve();
    REQUIRE(x);
    CHECK((*x)[0] + Rational(2) * (*x)[1] == Rational(5));
    CHECK((*x)[1] - (*x)[2] == Rational(1));
    CHECK((*x)[0] + (*x)[2] == Rational(2));

    LinearSystem bad(1);
    bad.add({{0, Rational(1)}}, Rational(1));
    bad.add({{0, Rational(2)}}, Rational(3));
    CHECK_FALSE(bad.solve());

    Echelon e;
    CHECK(e.insert({{0, Rational(1)}, {1, Rational(1)}}));
    CHECK(e.insert({{1, Rational(1)}}));
    CHECK_FALSE(e.insert({{0, Rational(3)}}));
    CHECK(e.rank() == 2);
}

TEST_CASE("D(0,1,0): R1 = grad A on A = x^2") {
    auto fs = covariant_forms(RepLabel{0, 1, 0}, {X() * X()});
    const auto& r1 = find_form(fs, "R1");
    CHECK(r1.value[0] == X() * PolyQ(2));
    CHECK(r1.value[1].is_zero());
    CHECK(r1.value[2].is_zero());
}

TEST_CASE("D(1,1,1) forms on a sample multiplet") {
    // layout (U, A)
    PolyQ t = coord(0), y = coord(2), z = coord(3);
    PolyVec U{X() * y, t * z, y * y};
    PolyQ A = t * X();
    auto fs = covariant_forms(RepLabel{1, 1, 1}, {U[0], U[1], U[2], A});
    PolyQ divU = div(U);
    CHECK(find_form(fs, "B1").value[0] == (dt(A) + divU).scaled(Rational(1, 2)));
    CHECK(find_form(fs, "A2").value[0] == dt(A) - divU);
    PolyVec c = curl(U);
    for (int a = 0; a < 3; ++a) CHECK(find_form(fs, "W1").value[a] == c[a]);
}

TEST_CASE("property: every form vanishes on constant fields") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-5, 5);
    for (const auto& l : catalog_labels()) {
        CAPTURE(l.str());
        PolyVec comps;
        for (int i = 0; i < build_galilei_rep(l).dim(); ++i) comps.push_back(PolyQ(Rational(d(rng))));
        for (auto& f : covariant_forms(l, comps))
            for (auto& p : f.value) CHECK(p.is_zero());
    }
}

TEST_CASE("closure: a bracketed set passes, a truncated one fails, undefined symbols are unverifiable") {
    CHECK(closure_test(FormSet{"D(3,1,1)", {"W2", "R2", "B2"}}).status == "closed");
    CHECK(closure_test(FormSet{"D(3,1,1)", {"R2"}}).status == "closed");
    ClosureResult w = closure_test(FormSet{"D(3,1,1)", {"W2"}});
    CHECK(w.status == "not closed");
    CHECK_FALSE(w.detail.empty());

    int unverifiable = 0;
    for (auto& r : appendix_closure())
        if (r.status == "unverifiable") ++unverifiable;
    CHECK(unverifiable == 2);
}

TEST_CASE("every vector-form set of the appendix is closed") {
    for (auto& s : vector_form_sets()) {
        CAPTURE(s.context + " " + s.str());
        CHECK(closure_test(s).status == "closed");
    }
}
