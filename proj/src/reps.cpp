#include "galinv/reps.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>

namespace galinv {

std::string RepLabel::str() const {
    return "D(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(lambda) + ")";
}

RepLabel RepLabel::parse(const std::string& s) {
    static const std::regex re(R"(\s*D?\(?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UnknownLabel("cannot parse representation label '" + s + "'");
    return RepLabel{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
}

SlotKind slot_kind(char letter) {
    switch (letter) {
        case 'A':
        case 'B':
        case 'C':
            return SlotKind::Scalar;
        case 'R':
        case 'U':
        case 'W':
        case 'K':
        case 'N':
            return SlotKind::Vector;
        default:
            throw NotARep(std::string("unknown slot letter ") + letter);
    }
}

SlotKind Slot::kind() const { return slot_kind(letter); }

int levi_civita(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

MatQi spin1(int a) {
    MatQi m = zeros<GaussRational>(3, 3);
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
            if (int e = levi_civita(a, b, c)) m(b, c) = GaussRational(Rational(0), Rational(-e));
    return m;
}

// ---------------------------------------------------------------------------
// Rotations

Rotation::Rotation(const MatQ& m) : m_(m) {
    if (m.rows() != 3 || m.cols() != 3) throw NotOrthogonal("rotation must be 3x3");
    MatQ mt = m.transpose();
    if (!mat_equal(mat_mul(mt, m), identity<Rational>(3))) throw NotOrthogonal("matrix is not orthogonal");
    Rational det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    if (det != Rational(1)) throw NotOrthogonal("orthogonal matrix with determinant -1");
}

Rotation Rotation::from_quaternion(long a, long b, long c, long d) {
    Rational n(a * a + b * b + c * c + d * d);
    if (n.is_zero()) throw NotOrthogonal("zero quaternion");
    MatQ m(3, 3);
    m << Rational(a * a + b * b - c * c - d * d), Rational(2 * (b * c - a * d)), Rational(2 * (b * d + a * c)),
        Rational(2 * (b * c + a * d)), Rational(a * a - b * b + c * c - d * d), Rational(2 * (c * d - a * b)),
        Rational(2 * (b * d - a * c)), Rational(2 * (c * d + a * b)), Rational(a * a - b * b - c * c + d * d);
    for (int i = 0; i < 9; ++i) m(i) /= n;
    return Rotation(m);
}

Rotation Rotation::inverse() const {
    Rotation r;
    r.m_ = m_.transpose();
    return r;
}

Vec3Q Rotation::apply(const Vec3Q& x) const {
    Vec3Q y{Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += m_(i, j) * x[j];
    return y;
}

Rotation operator*(const Rotation& a, const Rotation& b) {
    Rotation r;
    r.m_ = mat_mul(a.m_, b.m_);
    return r;
}

Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& axis, double theta) {
    return Eigen::AngleAxisd(theta, axis.normalized()).toRotationMatrix();
}

// ---------------------------------------------------------------------------
// Catalog

const std::vector<RepLabel>& catalog_labels() {
    static const std::vector<RepLabel> labels = {
        {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1},
        {2, 0, 0}, {2, 1, 0}, {2, 1, 1}, {2, 2, 1}, {3, 1, 1},
    };
    return labels;
}

std::vector<Slot> layout_of(const RepLabel& l) {
    auto is = [&](int m, int n, int lam) { return l.m == m && l.n == n && l.lambda == lam; };
    if (is(0, 1, 0)) return {{'A'}};
    if (is(1, 0, 0)) return {{'R'}};
    if (is(1, 1, 0)) return {{'R'}, {'B'}};
    if (is(1, 1, 1)) return {{'U'}, {'A'}};
    if (is(1, 2, 1)) return {{'U'}, {'A'}, {'C'}};
    if (is(2, 0, 0)) return {{'W'}, {'R'}};
    if (is(2, 1, 0)) return {{'R'}, {'W'}, {'B'}};
    if (is(2, 1, 1)) return {{'A'}, {'K'}, {'R'}};
    if (is(2, 2, 1)) return {{'A'}, {'B'}, {'K'}, {'R'}};
    if (is(3, 1, 1)) return {{'B'}, {'N'}, {'W'}, {'R'}};
    throw UnknownLabel("no indecomposable representation " + l.str());
}

int GalileiRep::dim() const {
    int d = 0;
    for (auto& s : slots) d += s.size();
    return d;
}

int GalileiRep::offset(size_t slot) const {
    int o = 0;
    for (size_t i = 0; i < slot; ++i) o += slots[i].size();
    return o;
}

std::string GalileiRep::layout() const {
    std::string s = "(";
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) s += ", ";
        s += slots[i].letter;
    }
    return s + ")";
}

MatQ GalileiRep::rotation(const Rotation& r) const {
    MatQ m = identity<Rational>(dim());
    for (size_t s = 0; s < slots.size(); ++s)
        if (slots[s].kind() == SlotKind::Vector) m.block(offset(s), offset(s), 3, 3) = r.matrix();
    return m;
}

MatPQ GalileiRep::boost_symbolic() const {
    static const VarList vv = make_vars({"v1", "v2", "v3"});
    Vec3<PolyQ> v{PolyQ::var(vv, 0), PolyQ::var(vv, 1), PolyQ::var(vv, 2)};
    return boost<PolyQ>(v);
}

GalileiRep build_galilei_rep(const std::vector<Slot>& layout, const RepLabel& label) {
    GalileiRep rep;
    rep.label = label;
    rep.slots = layout;
    const int d = rep.dim();
    for (int a = 0; a < 3; ++a) {
        rep.S[a] = zeros<GaussRational>(d, d);
        for (size_t s = 0; s < layout.size(); ++s)
            if (layout[s].kind() == SlotKind::Vector) rep.S[a].block(rep.offset(s), rep.offset(s), 3, 3) = spin1(a);
    }
    // eta_a = -i dLambda/dv_a at v = 0; Lambda is at most quadratic
    MatPQ L = rep.boost_symbolic();
    for (int a = 0; a < 3; ++a) {
        rep.eta[a] = zeros<GaussRational>(d, d);
        Exponents ea(3, '\0');
        ea[a] = 1;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const PolyQ& p = L(i, j);
                auto it = p.terms().find(ea);
                if (it != p.terms().end()) rep.eta[a](i, j) = GaussRational(Rational(0), -it->second);
            }
    }
    return rep;
}

GalileiRep build_galilei_rep(const RepLabel& label) {
    const auto& labels = catalog_labels();
    if (std::find(labels.begin(), labels.end(), label) == labels.end())
        throw UnknownLabel("no indecomposable representation " + label.str());
    return build_galilei_rep(layout_of(label), label);
}

GalileiRep direct_sum(const GalileiRep& a, const GalileiRep& b) {
    GalileiRep r;
    r.label = a.label;  // label of the first summand; composite reps are identified per block
    r.slots = a.slots;
    r.slots.insert(r.slots.end(), b.slots.begin(), b.slots.end());
    for (int k = 0; k < 3; ++k) {
        r.S[k] = block_diag(a.S[k], b.S[k]);
        r.eta[k] = block_diag(a.eta[k], b.eta[k]);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Relations

namespace {

MatQi eps_combo(const std::array<MatQi, 3>& X, int a, int b) {
    // i eps_abc X_c
    const Eigen::Index d = X[0].rows();
    MatQi r = zeros<GaussRational>(d, d);
    for (int c = 0; c < 3; ++c)
        if (int e = levi_civita(a, b, c)) r = mat_add(r, mat_scale(X[c], GaussRational(Rational(0), Rational(e))));
    return r;
}

}  // namespace

RepCheck check_rep(const std::array<MatQi, 3>& S, const std::array<MatQi, 3>& eta) {
    RepCheck out;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (!mat_equal(commutator(S[a], S[b]), eps_combo(S, a, b))) {
                out.ok = false;
                out.failures.push_back({"[S_a,S_b] = i eps_abc S_c", a, b});
            }
            if (!mat_equal(commutator(eta[a], S[b]), eps_combo(eta, a, b))) {
                out.ok = false;
                out.failures.push_back({"[eta_a,S_b] = i eps_abc eta_c", a, b});
            }
            if (!is_zero_matrix(commutator(eta[a], eta[b]))) {
                out.ok = false;
                out.failures.push_back({"[eta_a,eta_b] = 0", a, b});
            }
        }
    return out;
}

RepCheck check_rep(const GalileiRep& rep) {
    RepCheck out = check_rep(rep.S, rep.eta);
    // i v.eta is real because eta is purely imaginary
    static const VarList vv = make_vars({"v1", "v2", "v3"});
    const int d = rep.dim();
    MatPQ M = zeros<PolyQ>(d, d);
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const GaussRational& z = rep.eta[a](i, j);
                if (!z.re().is_zero()) {
                    out.ok = false;
                    out.failures.push_back({"eta_a purely imaginary", a, a});
                }
                if (!z.im().is_zero()) M(i, j) -= PolyQ::var(vv, a).scaled(z.im());
            }
    if (!mat_equal(nilpotent_exp(M), rep.boost_symbolic())) {
        out.ok = false;
        out.failures.push_back({"exp(i v.eta) = Lambda(v)", 0, 0});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identification

namespace {

struct CandidateSlot {
    SlotKind kind;
    int offset;
};

std::vector<CandidateSlot> detect_slots(const std::array<MatQi, 3>& S) {
    const Eigen::Index d = S[0].rows();
    std::vector<bool> scalar(d, true);
    for (int a = 0; a < 3; ++a)
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                if (!S[a](i, j).is_zero()) scalar[i] = scalar[j] = false;
    std::vector<CandidateSlot> slots;
    for (Eigen::Index i = 0; i < d;) {
        if (scalar[i]) {
            slots.push_back({SlotKind::Scalar, static_cast<int>(i)});
            ++i;
            continue;
        }
        if (i + 3 > d) throw NotARep("rotation generators do not split into spin-1 blocks");
        for (Eigen::Index k = i; k < i + 3; ++k)
            if (scalar[k]) throw NotARep("rotation generators do not split into spin-1 blocks");
        slots.push_back({SlotKind::Vector, static_cast<int>(i)});
        i += 3;
    }
    // every vector block must be exactly spin-1, with no cross terms
    for (int a = 0; a < 3; ++a) {
        MatQi expect = zeros<GaussRational>(d, d);
        for (auto& s : slots)
            if (s.kind == SlotKind::Vector) expect.block(s.offset, s.offset, 3, 3) = spin1(a);
        if (!mat_equal(expect, S[a])) throw NotARep("rotation generators are not standard spin-1 blocks");
    }
    return slots;
}

}  // namespace

Identification identify_rep(const std::array<MatQi, 3>& S, const std::array<MatQi, 3>& eta) {
    RepCheck rc = check_rep(S, eta);
    if (!rc.ok) throw NotARep("commutation relation fails: " + rc.failures.front().relation);
    std::vector<CandidateSlot> cand = detect_slots(S);
    const Eigen::Index d = S[0].rows();
    int nv = 0, ns = 0;
    for (auto& c : cand) (c.kind == SlotKind::Vector ? nv : ns)++;

    for (const RepLabel& label : catalog_labels()) {
        if (label.m != nv || label.n != ns) continue;
        GalileiRep target = build_galilei_rep(label);
        const size_t k = cand.size();
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool kinds_ok = true;
            for (size_t s = 0; s < k; ++s)
                if (target.slots[s].kind() != cand[perm[s]].kind) kinds_ok = false;
            if (!kinds_ok) continue;
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                MatQ P = zeros<Rational>(d, d);
                std::vector<int> signs(k);
                for (size_t s = 0; s < k; ++s) {
                    signs[s] = (mask >> s) & 1 ? -1 : 1;
                    const int sz = target.slots[s].size();
                    for (int q = 0; q < sz; ++q) P(target.offset(s) + q, cand[perm[s]].offset + q) = Rational(signs[s]);
                }
                MatQi Pc = mat_map(P, [](const Rational& r) { return GaussRational(r); });
                MatQi Pt = Pc.transpose();
                bool ok = true;
                for (int a = 0; a < 3 && ok; ++a)
                    ok = mat_equal(mat_mul(mat_mul(Pc, eta[a]), Pt), target.eta[a]) &&
                         mat_equal(mat_mul(mat_mul(Pc, S[a]), Pt), target.S[a]);
                if (ok) return Identification{label, P, perm, signs};
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw NotARep("generators satisfy the algebra but match no catalog representation under signed slot permutations");
}

// ---------------------------------------------------------------------------
// Lorentz side

namespace {

LorentzRep make_lorentz(std::string name, int dim) {
    LorentzRep r;
    r.name = std::move(name);
    r.dim = dim;
    for (auto& row : r.S)
        for (auto& m : row) m = zeros<GaussRational>(dim, dim);
    return r;
}

void fill_spatial(LorentzRep& r, const std::array<MatQi, 3>& Sa) {
    // S_ab = eps_abc S_c
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            MatQi m = zeros<GaussRational>(r.dim, r.dim);
            for (int c = 0; c < 3; ++c)
                if (int e = levi_civita(a, b, c)) m = mat_add(m, mat_scale(Sa[c], GaussRational(e)));
            r.S[a + 1][b + 1] = m;
        }
}

void set_boost(LorentzRep& r, int a, const MatQi& m) {
    r.S[0][a + 1] = m;
    r.S[a + 1][0] = mat_scale(m, GaussRational(-1));
}

LorentzRep lorentz_sum(const LorentzRep& x, const LorentzRep& y, std::string name) {
    LorentzRep r = make_lorentz(std::move(name), x.dim + y.dim);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) r.S[m][n] = block_diag(x.S[m][n], y.S[m][n]);
    return r;
}

}  // namespace

std::vector<std::string> lorentz_rep_names() { return {"D12", "D12+D00", "D10+D01", "BI"}; }

LorentzRep lorentz_rep(const std::string& name) {
    if (name == "D12" || name == "D12+D00") {
        const int extra = name == "D12" ? 0 : 1;
        LorentzRep r = make_lorentz(name, 4 + extra);
        std::array<MatQi, 3> Sa;
        for (int a = 0; a < 3; ++a) {
            Sa[a] = zeros<GaussRational>(r.dim, r.dim);
            Sa[a].block(0, 0, 3, 3) = spin1(a);
        }
        fill_spatial(r, Sa);
        for (int a = 0; a < 3; ++a) {
            // k_a = i e_a as a row in the fourth row, -k_a^dagger as a column
            MatQi m = zeros<GaussRational>(r.dim, r.dim);
            m(3, a) = GaussRational::i();
            m(a, 3) = GaussRational::i();  // -(i)^* = i
            set_boost(r, a, m);
        }
        return r;
    }
    if (name == "D10+D01" || name == "BI") {
        LorentzRep r = make_lorentz("D10+D01", 6);
        std::array<MatQi, 3> Sa;
        for (int a = 0; a < 3; ++a) Sa[a] = block_diag(spin1(a), spin1(a));
        fill_spatial(r, Sa);
        for (int a = 0; a < 3; ++a) {
            MatQi m = zeros<GaussRational>(6, 6);
            m.block(0, 3, 3, 3) = mat_scale(spin1(a), GaussRational(-1));
            m.block(3, 0, 3, 3) = spin1(a);
            set_boost(r, a, m);
        }
        if (name == "BI") return lorentz_sum(r, r, "BI");
        return r;
    }
    throw UnknownLabel("unknown Lorentz representation '" + name + "'");
}

RepCheck check_lorentz(const LorentzRep& rep) {
    RepCheck out;
    const int g[4] = {-1, 1, 1, 1};
    auto G = [&](int m, int n) { return m == n ? g[m] : 0; };
    const GaussRational i = GaussRational::i();
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s) {
                    MatQi rhs = zeros<GaussRational>(rep.dim, rep.dim);
                    auto add = [&](int coeff, const MatQi& x) {
                        if (coeff) rhs = mat_add(rhs, mat_scale(x, GaussRational(coeff)));
                    };
                    add(G(m, r), rep.S[n][s]);
                    add(G(n, s), rep.S[m][r]);
                    add(-G(m, s), rep.S[n][r]);
                    add(-G(n, r), rep.S[m][s]);
                    rhs = mat_scale(rhs, i);
                    if (!mat_equal(commutator(rep.S[m][n], rep.S[r][s]), rhs)) {
                        out.ok = false;
                        out.failures.push_back({"so(1,3) relation " + std::to_string(m) + std::to_string(n) +
                                                    std::to_string(r) + std::to_string(s),
                                                m * 4 + n, r * 4 + s});
                    }
                }
    return out;
}

}  // namespace galinv
