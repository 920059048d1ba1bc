#include "galinv/contraction.hpp"

#include <doctest.h>

using namespace galinv;

namespace {

GaussRational I() { return GaussRational::i(); }

// k_a = i e_a as a row
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

}  // namespace

TEST_CASE("V1 on D(1/2,1/2) gives eta_a = [[0,0],[k_a,0]] and D(1,1,0)") {
    ContractionResult r = contract(lorentz_rep("D12"), standard_matrix("V1"));
    for (int a = 0; a < 3; ++a) {
        MatQi expect = zeros<GaussRational>(4, 4);
        expect.block(3, 0, 1, 3) = k_row(a);
        CHECK(mat_equal(r.eta[a], expect));
    }
    CHECK(r.label() == "D(1,1,0)");
}

TEST_CASE("V2 on D(1/2,1/2) gives eta_a = [[0,-k_a^dagger],[0,0]] and D(1,1,1)") {
    ContractionResult r = contract(lorentz_rep("D12"), standard_matrix("V2"));
    for (int a = 0; a < 3; ++a) {
        MatQi expect = zeros<GaussRational>(4, 4);
        expect.block(0, 3, 3, 1) = mat_scale(dagger(k_row(a)), GaussRational(-1));
        CHECK(mat_equal(r.eta[a], expect));
    }
    CHECK(r.label() == "D(1,1,1)");
}

TEST_CASE("V3 on D(1/2,1/2)+D(0,0) gives the five dimensional D(1,2,1)") {
    ContractionResult r = contract(lorentz_rep("D12+D00"), standard_matrix("V3"));
    for (int a = 0; a < 3; ++a) {
        MatQi expect = zeros<GaussRational>(5, 5);
        expect.block(0, 3, 3, 1) = dagger(k_row(a));
        expect.block(4, 0, 1, 3) = k_row(a);
        CHECK(mat_equal(r.eta[a], expect));
    }
    CHECK(r.label() == "D(1,2,1)");
}

TEST_CASE("V4..V7 regression table") {
    CHECK(contract(lorentz_rep("D10+D01"), standard_matrix("V4")).label() == "D(2,0,0)");
    CHECK(contract(lorentz_rep("D10+D01"), standard_matrix("V5")).label() == "D(2,0,0)");
    CHECK(contract(lorentz_rep("BI"), standard_matrix("V6")).label() == "D(2,0,0)+D(2,0,0)");
    CHECK(contract(lorentz_rep("BI"), standard_matrix("V7")).label() == "D(2,0,0)+D(2,0,0)");
}

TEST_CASE("contracted generators satisfy the Galilei algebra") {
    struct Case {
        const char* rep;
        const char* v;
    } cases[] = {{"D12", "V1"}, {"D12", "V2"}, {"D12+D00", "V3"}, {"D10+D01", "V4"},
                 {"D10+D01", "V5"}, {"BI", "V6"}, {"BI", "V7"}};
    for (auto& c : cases) {
        CAPTURE(c.v);
        ContractionResult r = contract(lorentz_rep(c.rep), standard_matrix(c.v));
        CHECK(check_rep(r.S, r.eta).ok);
    }
}

TEST_CASE("identity matrix has no finite boost limit") {
    MatLQ id = identity<LaurentQ>(4);
    ContractionResult r = contract(lorentz_rep("D12"), id);
    // eps * S_0a -> 0: all boosts vanish, the result is a sum of trivial blocks
    for (int a = 0; a < 3; ++a) CHECK(is_zero_matrix(r.eta[a]));
}

TEST_CASE("singular limit is reported") {
    MatLQ v = identity<LaurentQ>(4);
    v(3, 3) = LaurentQ::monomial(2);
    CHECK_THROWS_AS(contract(lorentz_rep("D12"), v), SingularLimit);
    CHECK_THROWS_AS(contract(lorentz_rep("D12"), standard_matrix("V4")), DomainError);
}

TEST_CASE("contract_fields scalings for V6 and V7") {
    std::vector<FieldSlot> f = {{"B"}, {"E"}, {"D"}, {"H"}};
    FieldContraction c6 = contract_fields(f, standard_matrix("V6"));
    CHECK(c6.rules[0].str() == "B = [(1)*eps^1] B'");
    CHECK(c6.rules[1].str() == "E = E'");
    CHECK(c6.rules[2].str() == "D = D'");
    CHECK(c6.rules[3].str() == "H = [(1)*eps^1] H'");
    FieldContraction c7 = contract_fields(f, standard_matrix("V7"));
    CHECK(c7.rules[0].str() == "B = B'");
    CHECK(c7.rules[1].str() == "E = [(1)*eps^1] E'");
    CHECK(c7.rules[2].str() == "D = [(1)*eps^1] D'");
    CHECK(c7.rules[3].str() == "H = H'");
    FieldContraction idc = contract_fields(f, identity<LaurentQ>(12));
    for (auto& r : idc.rules) CHECK(r.terms.size() == 1);
    CHECK_THROWS_AS(contract_fields(f, standard_matrix("V4")), DomainError);
}
