#include "galinv/reps.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace galinv;

TEST_CASE("exactly ten labels are accepted") {
    int accepted = 0;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            for (int l = 0; l <= 1; ++l) {
                RepLabel lab{m, n, l};
                try {
                    GalileiRep r = build_galilei_rep(lab);
                    ++accepted;
                    // m vectors and n scalars
                    int nv = 0, ns = 0;
                    for (auto& s : r.slots) (s.kind() == SlotKind::Vector ? nv : ns)++;
                    CHECK(nv == m);
                    CHECK(ns == n);
                } catch (const UnknownLabel&) {
                }
            }
    CHECK(accepted == 10);
    CHECK_THROWS_AS(build_galilei_rep(RepLabel{4, 0, 0}), UnknownLabel);
    CHECK_THROWS_AS(build_galilei_rep(RepLabel{0, 0, 0}), UnknownLabel);
}

TEST_CASE("layouts") {
    CHECK(build_galilei_rep(RepLabel{1, 1, 0}).layout() == "(R, B)");
    CHECK(build_galilei_rep(RepLabel{3, 1, 1}).layout() == "(B, N, W, R)");
    CHECK(build_galilei_rep(RepLabel{2, 1, 0}).layout() == "(R, W, B)");
    CHECK(build_galilei_rep(RepLabel{3, 1, 1}).dim() == 10);
    CHECK(RepLabel::parse("D(2,2,1)") == RepLabel{2, 2, 1});
}

TEST_CASE("every catalog rep satisfies the algebra and integrates to its boost law") {
    for (const auto& l : catalog_labels()) {
        CAPTURE(l.str());
        GalileiRep r = build_galilei_rep(l);
        RepCheck c = check_rep(r);
        CHECK(c.ok);
        Identification id = identify_rep(r.S, r.eta);
        CHECK(id.label == l);
        CHECK(mat_equal(id.basis_map, identity<Rational>(r.dim())));
    }
}

TEST_CASE("property: Lambda(v) Lambda(w) = Lambda(v + w) and rotation covariance") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-6, 6), q(-3, 3);
    auto rv = [&] { return Vec3Q{Rational(d(rng), 3), Rational(d(rng), 2), Rational(d(rng), 5)}; };
    for (const auto& l : catalog_labels()) {
        GalileiRep r = build_galilei_rep(l);
        for (int t = 0; t < 20; ++t) {
            Vec3Q v = rv(), w = rv();
            Vec3Q s{v[0] + w[0], v[1] + w[1], v[2] + w[2]};
            CHECK(mat_equal(mat_mul(r.boost(v), r.boost(w)), r.boost(s)));
            long a = q(rng), b = q(rng), c = q(rng), e = q(rng);
            if (a == 0 && b == 0 && c == 0 && e == 0) a = 1;
            Rotation R = Rotation::from_quaternion(a, b, c, e);
            // Rot(R) Lambda(v) Rot(R)^-1 = Lambda(R v)
            MatQ lhs = mat_mul(mat_mul(r.rotation(R), r.boost(v)), r.rotation(R.inverse()));
            CHECK(mat_equal(lhs, r.boost(R.apply(v))));
        }
    }
}

TEST_CASE("rotation generators integrate to rotations") {
    GalileiRep r = build_galilei_rep(RepLabel{2, 1, 0});
    Eigen::Vector3d n(1, 2, -2);
    double theta = 0.7;
    n.normalize();
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(r.dim(), r.dim());
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < r.dim(); ++i)
            for (int j = 0; j < r.dim(); ++j)
                gen(i, j) += n[a] * std::complex<double>(r.S[a](i, j).re().to_double(), r.S[a](i, j).im().to_double());
    // exp(-i theta n.S) by a truncated series
    Eigen::MatrixXcd x = std::complex<double>(0, -theta) * gen, term = Eigen::MatrixXcd::Identity(r.dim(), r.dim());
    Eigen::MatrixXcd e = term;
    for (int k = 1; k < 40; ++k) {
        term = term * x / double(k);
        e += term;
    }
    Eigen::Matrix3d R = rotation_matrix(n, theta);
    CHECK((e.block(0, 0, 3, 3).real() - R).norm() < 1e-12);
    CHECK(e.block(0, 0, 3, 3).imag().norm() < 1e-12);
}

TEST_CASE("rotations must be orthogonal") {
    MatQ m = identity<Rational>(3);
    m(0, 1) = Rational(1);
    CHECK_THROWS_AS(Rotation{m}, NotOrthogonal);
    MatQ refl = identity<Rational>(3);
    refl(2, 2) = Rational(-1);
    CHECK_THROWS_AS(Rotation{refl}, NotOrthogonal);
}

TEST_CASE("identify_rep handles sign flips and permutations, rejects broken generators") {
    GalileiRep r = build_galilei_rep(RepLabel{1, 2, 1});  // (U, A, C)
    // reorder to (A, C, U) with C negated
    MatQ P = zeros<Rational>(5, 5);
    P(0, 3) = Rational(1);
    P(1, 4) = Rational(-1);
    for (int k = 0; k < 3; ++k) P(2 + k, k) = Rational(1);
    MatQi Pc = mat_map(P, [](const Rational& x) { return GaussRational(x); });
    std::array<MatQi, 3> S, eta;
    for (int a = 0; a < 3; ++a) {
        S[a] = mat_mul(mat_mul(Pc, r.S[a]), MatQi(Pc.transpose()));
        eta[a] = mat_mul(mat_mul(Pc, r.eta[a]), MatQi(Pc.transpose()));
    }
    Identification id = identify_rep(S, eta);
    CHECK(id.label == RepLabel{1, 2, 1});
    eta[0](0, 0) = GaussRational(1);
    CHECK_THROWS_AS(identify_rep(S, eta), NotARep);
}

TEST_CASE("Lorentz inputs satisfy so(1,3)") {
    for (const auto& name : lorentz_rep_names()) {
        CAPTURE(name);
        CHECK(check_lorentz(lorentz_rep(name)).ok);
    }
}
