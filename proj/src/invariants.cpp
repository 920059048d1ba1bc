#include "galinv/invariants.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <random>
#include <stdexcept>

namespace galinv {

namespace {

PolyVec symbols(const VarList& vars, const std::string& prefix) {
    PolyVec out;
    for (int i = 1; i <= 3; ++i) out.push_back(PolyQ::var(vars, prefix + std::to_string(i)));
    return out;
}

PolyVec add(const PolyVec& a, const PolyVec& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

PolyVec sub(const PolyVec& a, const PolyVec& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

PolyVec scale(const PolyQ& s, const PolyVec& a) { return {s * a[0], s * a[1], s * a[2]}; }

VarList field_vars() {
    static const VarList v = make_vars({"E1", "E2", "E3", "B1", "B2", "B3", "D1", "D2", "D3", "H1", "H2", "H3",
                                        "v1", "v2", "v3"});
    return v;
}

// Images of the 15 variables under E -> E + v x B, H -> H - v x D
Substitution<Rational> field_boost() {
    VarList vars = field_vars();
    PolyVec E = symbols(vars, "E"), B = symbols(vars, "B"), D = symbols(vars, "D"), H = symbols(vars, "H"),
            v = symbols(vars, "v");
    PolyVec E2 = add(E, cross(v, B)), H2 = sub(H, cross(v, D));
    std::vector<PolyQ> images;
    for (auto& x : E2) images.push_back(x);
    for (auto& x : B) images.push_back(x);
    for (auto& x : D) images.push_back(x);
    for (auto& x : H2) images.push_back(x);
    for (auto& x : v) images.push_back(x);
    return Substitution<Rational>(vars, std::move(images));
}

InvarianceCheck check_one(const std::string& name, const PolyQ& q) {
    Substitution<Rational> s = field_boost();
    InvarianceCheck c;
    c.name = name;
    c.change = s.apply(q) - q;
    c.invariant = c.change.is_zero();
    return c;
}

}  // namespace

std::vector<PolyQ> bilinear_invariants(const PolyVec& E, const PolyVec& B, const PolyVec& D, const PolyVec& H) {
    return {dot(E, B), dot(H, D), dot(D, D), dot(B, B), dot(E, D) - dot(H, B), dot(B, D)};
}

const std::vector<std::string>& bilinear_invariant_names() {
    static const std::vector<std::string> n = {"E.B", "H.D", "D^2", "B^2", "E.D-H.B", "B.D"};
    return n;
}

std::vector<InvarianceCheck> check_bilinear_invariants() {
    VarList vars = field_vars();
    auto q = bilinear_invariants(symbols(vars, "E"), symbols(vars, "B"), symbols(vars, "D"), symbols(vars, "H"));
    std::vector<InvarianceCheck> out;
    for (size_t i = 0; i < q.size(); ++i) out.push_back(check_one(bilinear_invariant_names()[i], q[i]));
    return out;
}

InvarianceCheck check_ED() {
    VarList vars = field_vars();
    return check_one("E.D", dot(symbols(vars, "E"), symbols(vars, "D")));
}

// ---------------------------------------------------------------------------

std::string variant_name(BornInfeld v) {
    switch (v) {
    case BornInfeld::Electric: return "electric";
    case BornInfeld::Magnetic: return "magnetic";
    case BornInfeld::Relativistic: return "relativistic";
    }
    return "";
}

BornInfeld parse_variant(const std::string& s) {
    if (s == "electric" || s == "electric-limit") return BornInfeld::Electric;
    if (s == "magnetic" || s == "magnetic-limit") return BornInfeld::Magnetic;
    if (s == "relativistic") return BornInfeld::Relativistic;
    throw std::invalid_argument("unknown Born-Infeld variant '" + s + "'");
}

DH born_infeld(BornInfeld variant, const Eigen::Vector3d& E, const Eigen::Vector3d& B) {
    const double be = B.dot(E);
    switch (variant) {
    case BornInfeld::Electric: {
        double r = 1 - E.squaredNorm();
        if (r <= 0) throw DomainError("electric Born-Infeld map needs |E| < 1");
        double s = std::sqrt(r);
        return {E / s, (B - be * E) / s};
    }
    case BornInfeld::Magnetic: {
        double s = std::sqrt(1 + B.squaredNorm());
        return {(E + be * B) / s, B / s};
    }
    case BornInfeld::Relativistic: {
        double r = 1 + B.squaredNorm() - E.squaredNorm() - be * be;
        if (r <= 0) throw DomainError("relativistic Born-Infeld map needs 1 + B^2 - E^2 - (B.E)^2 > 0");
        double L = std::sqrt(r);
        return {(E + be * B) / L, (B - be * E) / L};
    }
    }
    throw std::logic_error("unreachable");
}

DH born_infeld(BornInfeld variant, const Vec3Q& E, const Vec3Q& B) {
    Eigen::Vector3d e, b;
    for (int i = 0; i < 3; ++i) {
        e[i] = E[i].to_double();
        b[i] = B[i].to_double();
    }
    return born_infeld(variant, e, b);
}

namespace {

// p with s^2 replaced by r, leaving at most a linear dependence on s
PolyQ reduce_root(const PolyQ& p, size_t s, const PolyQ& r) {
    PolyQ out, rk(1);
    if (p.is_zero()) return out;
    PolyQ sv = PolyQ::var(p.vars(), s);
    const int deg = p.degree_in(s);
    for (int k = 0; k <= deg; k += 2) {
        out += p.coefficient(s, k) * rk;
        if (k + 1 <= deg) out += p.coefficient(s, k + 1) * rk * sv;
        rk = rk * r;
    }
    return out;
}

}  // namespace

BornInfeldSymbolic born_infeld_symbolic(BornInfeld variant) {
    if (variant == BornInfeld::Relativistic)
        throw std::invalid_argument("the relativistic map carries no Galilei boost law");
    VarList vars = make_vars({"E1", "E2", "E3", "B1", "B2", "B3", "v1", "v2", "v3", "s"});
    const size_t si = 9;
    PolyVec E = symbols(vars, "E"), B = symbols(vars, "B"), v = symbols(vars, "v");
    PolyQ s = PolyQ::var(vars, si);
    const bool electric = variant == BornInfeld::Electric;
    PolyQ r = electric ? PolyQ(1) - dot(E, E) : PolyQ(1) + dot(B, B);

    // outputs as numerators over the formal root s
    auto outputs = [&](const PolyVec& e, const PolyVec& b) {
        PolyQ be = dot(b, e);
        if (electric) return std::pair{e, sub(b, scale(be, e))};
        return std::pair{add(e, scale(be, b)), b};
    };
    PolyVec E2 = electric ? E : sub(E, cross(v, B));
    PolyVec B2 = electric ? add(B, cross(v, E)) : B;
    std::vector<PolyQ> images;
    for (auto& x : E2) images.push_back(x);
    for (auto& x : B2) images.push_back(x);
    for (auto& x : v) images.push_back(x);
    images.push_back(s);
    Substitution<Rational> T(vars, images);

    BornInfeldSymbolic out;
    out.variant = variant;
    // s maps to itself exactly when its radicand does
    out.radicand_invariant = reduce_root(T.apply(r) - r, si, r).is_zero();
    auto [ND, NH] = outputs(E, B);
    auto [ND2, NH2] = outputs(E2, B2);
    PolyVec wantD = electric ? ND : sub(ND, cross(v, NH));
    PolyVec wantH = electric ? add(NH, cross(v, ND)) : NH;
    out.D_law = out.H_law = true;
    for (int i = 0; i < 3; ++i) {
        // D = ND / s: compare s D' with s (law applied to D)
        PolyQ dD = reduce_root(s * (ND2[i] - wantD[i]), si, r);
        PolyQ dH = reduce_root(s * (NH2[i] - wantH[i]), si, r);
        out.D_law = out.D_law && dD.is_zero();
        out.H_law = out.H_law && dH.is_zero();
    }
    return out;
}

BornInfeldNumeric born_infeld_numeric(BornInfeld variant, int points, uint64_t seed) {
    if (variant == BornInfeld::Relativistic)
        throw std::invalid_argument("the relativistic map carries no Galilei boost law");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-40, 40);
    auto rational_vec = [&](int den) {
        Vec3Q q;
        for (auto& c : q) c = Rational(num(rng), den);
        return q;
    };
    auto to_d = [](const Vec3Q& q) { return Eigen::Vector3d(q[0].to_double(), q[1].to_double(), q[2].to_double()); };
    BornInfeldNumeric out;
    while (out.points < points) {
        // |E| <= sqrt(3) * 40/80 < 1
        Eigen::Vector3d E = to_d(rational_vec(80)), B = to_d(rational_vec(20)), v = to_d(rational_vec(10));
        DH f = born_infeld(variant, E, B);
        DH got, want;
        if (variant == BornInfeld::Electric) {
            got = born_infeld(variant, E, B + v.cross(E));
            want = {f.D, f.H + v.cross(f.D)};
        } else {
            got = born_infeld(variant, E - v.cross(B), B);
            want = {f.D - v.cross(f.H), f.H};
        }
        double err = std::max((got.D - want.D).cwiseAbs().maxCoeff(), (got.H - want.H).cwiseAbs().maxCoeff());
        out.max_error = std::max(out.max_error, err);
        ++out.points;
    }
    return out;
}

}  // namespace galinv
