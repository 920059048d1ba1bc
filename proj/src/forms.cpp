#include "galinv/forms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace galinv {

SparseVec linear_coefficients(const JetSpace& js, const PolyQ& p) {
    SparseVec v;
    for (auto& [e, c] : p.terms()) {
        size_t var = e.size();
        int deg = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) {
                deg += static_cast<unsigned char>(e[i]);
                var = i;
            }
        if (deg != 1 || var < js.params.size())
            throw DomainError("form " + p.str() + " is not linear in the field components");
        v[var] = c;
    }
    return v;
}

namespace {

SparseVec image_coefficients(const JetSpace& js, Substitution<Rational>& sub, const PolyQ& p) {
    return linear_coefficients(js, sub.apply(p));
}

// Exact derivative at s = 0 of an image that is polynomial of degree <= 4 in s
SparseVec boost_derivative(const JetSpace& js, const PolyQ& p, const ComponentAction& action, int a,
                           std::map<int, Substitution<Rational>>& subs) {
    auto at = [&](int s) -> SparseVec {
        auto it = subs.find(s);
        if (it == subs.end()) {
            Vec3Q v{Rational(0), Rational(0), Rational(0)};
            v[a] = Rational(s);
            GalileiMotion g = GalileiMotion::boost(v);
            it = subs.emplace(s, Substitution<Rational>(js.vars, jet_images(js, action(Rotation(), v), g))).first;
        }
        return image_coefficients(js, it->second, p);
    };
    SparseVec r;
    auto add = [&](const SparseVec& x, const Rational& f) {
        for (auto& [k, c] : x) {
            Rational& y = r[k];
            y += f * c;
        }
    };
    add(at(1), Rational(8, 12));
    add(at(-1), Rational(-8, 12));
    add(at(2), Rational(-1, 12));
    add(at(-2), Rational(1, 12));
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

std::vector<Rotation> test_rotations() {
    return {Rotation::from_quaternion(1, 2, 0, 0), Rotation::from_quaternion(2, 1, -1, 3),
            Rotation::from_quaternion(0, 1, 1, 1)};
}

}  // namespace

SpanTest span_closed(const JetSpace& js, const std::vector<PolyQ>& forms, const ComponentAction& action) {
    Echelon span;
    for (auto& f : forms) span.insert(linear_coefficients(js, f));
    for (int a = 0; a < 3; ++a) {
        std::map<int, Substitution<Rational>> subs;
        for (auto& f : forms) {
            SparseVec d = boost_derivative(js, f, action, a, subs);
            if (!span.contains(d))
                return {false, "the boost generator along axis " + std::to_string(a + 1) + " maps " +
                                   f.str() + " out of the span"};
        }
    }
    const Vec3Q zero{Rational(0), Rational(0), Rational(0)};
    for (auto& r : test_rotations()) {
        GalileiMotion g;
        g.rot = r;
        Substitution<Rational> sub(js.vars, jet_images(js, action(r, zero), g));
        for (auto& f : forms)
            if (!span.contains(image_coefficients(js, sub, f)))
                return {false, "a rotation maps " + f.str() + " out of the span"};
    }
    return {};
}

std::optional<std::array<MatQ, 3>> boost_generators(const JetSpace& js, const std::vector<PolyQ>& forms,
                                                    const ComponentAction& action) {
    const size_t n = forms.size();
    std::vector<SparseVec> basis;
    std::set<size_t> cols;
    for (auto& f : forms) {
        basis.push_back(linear_coefficients(js, f));
        for (auto& [k, c] : basis.back()) cols.insert(k);
    }
    {
        Echelon e;
        for (auto& b : basis)
            if (!e.insert(b)) return std::nullopt;
    }
    std::array<MatQ, 3> X;
    for (int a = 0; a < 3; ++a) {
        X[a] = zeros<Rational>(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        std::map<int, Substitution<Rational>> subs;
        for (size_t k = 0; k < n; ++k) {
            SparseVec d = boost_derivative(js, forms[k], action, a, subs);
            // d = sum_l x_l basis_l, one equation per jet coordinate
            LinearSystem sys(n);
            std::set<size_t> rows = cols;
            for (auto& [c, v] : d) rows.insert(c);
            for (size_t r : rows) {
                SparseVec row;
                for (size_t l = 0; l < n; ++l) {
                    auto it = basis[l].find(r);
                    if (it != basis[l].end()) row[l] = it->second;
                }
                auto it = d.find(r);
                sys.add(row, it == d.end() ? Rational(0) : it->second);
            }
            auto sol = sys.solve();
            if (!sol) return std::nullopt;
            for (size_t l = 0; l < n; ++l) X[a](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = (*sol)[l];
        }
    }
    return X;
}

// ---------------------------------------------------------------------------

std::string kind_name(FormKind k) {
    switch (k) {
        case FormKind::Scalar:
            return "scalar";
        case FormKind::Vector:
            return "vector";
        case FormKind::Tensor:
            return "tensor";
    }
    return "";
}

std::vector<char> FormDef::letters() const {
    std::vector<char> out;
    const std::string& f = formula;
    for (size_t i = 0; i < f.size(); ++i) {
        bool start = i == 0 || !(std::isalnum(static_cast<unsigned char>(f[i - 1])) || f[i - 1] == '_');
        bool end = i + 1 == f.size() || !(std::isalnum(static_cast<unsigned char>(f[i + 1])) || f[i + 1] == '_');
        if (start && end && std::string("ABCRUWKN").find(f[i]) != std::string::npos &&
            std::find(out.begin(), out.end(), f[i]) == out.end())
            out.push_back(f[i]);
    }
    return out;
}

const std::vector<FormDef>& form_library() {
    using K = FormKind;
    static const std::vector<FormDef> lib = {
        {"R1", K::Vector, "grad(A)"},
        {"R2", K::Vector, "-curl(R)"},
        {"A1", K::Scalar, "div(R)"},
        {"W2", K::Vector, "dt(R) - grad(B)"},
        {"B1", K::Scalar, "1/2*(dt(A) + div(U))"},
        {"W1", K::Vector, "curl(U)"},
        {"A2", K::Scalar, "dt(A) - div(U)"},
        {"U1", K::Vector, "dt(R) + curl(W)"},
        {"B2", K::Scalar, "div(W)"},
        {"N1", K::Vector, "dt(U) - grad(C)"},
        {"Bt1", K::Scalar, "dt(A)"},
        {"K1", K::Vector, "dt(R) + curl(K)"},
        {"Rt1", K::Vector, "-grad(A)"},
        {"Bt2", K::Scalar, "div(K) - dt(A)"},
        {"N2", K::Vector, "dt(W) + curl(N)"},
        {"C1", K::Scalar, "dt(B) - div(N)"},
        // tensorial forms
        {"Yab", K::Tensor, "sym(R)"},
        {"Lab", K::Tensor, "sym(N)"},
        {"Z1ab", K::Tensor, "sym(U)"},
        {"Rab", K::Tensor, "sym(W)"},
        {"Z2ab", K::Tensor, "sym(K) - sym(W)"},
        {"Tab", K::Tensor, "sym(K)"},
        // auxiliary scalar and vector forms
        {"G", K::Scalar, "dt(B)"},
        {"D", K::Scalar, "dt(C)"},
        {"Gv", K::Vector, "dt(W)"},
        {"F", K::Vector, "dt(N)"},
        {"P", K::Vector, "dt(R)"},
        {"Tv", K::Vector, "dt(K)"},
        {"X", K::Vector, "curl(W)"},
        {"S", K::Vector, "dt(K) - dt(W)"},
        {"M", K::Vector, "dt(R) + grad(B)"},
        {"J", K::Vector, "dt(U) + grad(C)"},
    };
    return lib;
}

const FormDef& form_def(const std::string& name) {
    for (auto& f : form_library())
        if (f.name == name) return f;
    throw DomainError("unknown form " + name);
}

std::string FormSet::str() const {
    std::string s = "{";
    for (size_t i = 0; i < members.size(); ++i) s += (i ? ", " : "") + members[i];
    return s + "}";
}

const std::vector<FormSet>& vector_form_sets() {
    static const std::vector<FormSet> sets = [] {
        std::vector<FormSet> v;
        auto add = [&](const char* rep, std::vector<std::string> m, std::string note = "") {
            v.push_back({rep, std::move(m), false, std::move(note)});
        };
        add("D(0,1,0)", {"R1"});
        add("D(1,0,0)", {"R2"});
        add("D(1,0,0)", {"A1"});
        add("D(1,1,0)", {"R2", "W2"});
        add("D(1,1,0)", {"R2"});
        add("D(1,1,0)", {"A1"});
        add("D(1,1,1)", {"B1", "W1", "R1"});
        add("D(1,1,1)", {"B1", "R1"});
        add("D(1,1,1)", {"W1", "R1"});
        add("D(1,1,1)", {"R1"});
        add("D(1,1,1)", {"A2"});
        add("D(2,0,0)", {"U1", "A1"});
        add("D(2,0,0)", {"A1"});
        add("D(2,0,0)", {"B2", "R2"});
        add("D(2,0,0)", {"R2"});
        add("D(1,2,1)", {"N1", "W1", "R1", "Bt1"});
        add("D(1,2,1)", {"W1", "R1", "Bt1"});
        add("D(1,2,1)", {"Bt1", "R1"});
        add("D(1,2,1)", {"W1", "R1"});
        add("D(1,2,1)", {"R1"});
        add("D(1,2,1)", {"A2"});
        add("D(2,1,0)", {"W2", "R2", "B2"});
        add("D(2,1,0)", {"B2", "R2"});
        add("D(2,1,0)", {"W2", "R2"});
        add("D(2,1,0)", {"R2"});
        add("D(2,1,0)", {"A1"});
        add("D(2,1,1)", {"K1", "Rt1", "A1"});
        add("D(2,1,1)", {"Rt1"});
        add("D(2,1,1)", {"A1"});
        add("D(2,1,1)", {"Bt2", "R2"});
        add("D(2,1,1)", {"R2"});
        add("D(2,2,1)", {"K1", "Rt1", "A1"}, "K1 uses the K slot of this layout");
        add("D(2,2,1)", {"Rt1"});
        add("D(2,2,1)", {"A1"});
        add("D(2,2,1)", {"Bt2", "W2", "R2"});
        add("D(2,2,1)", {"Bt2", "R2"});
        add("D(2,2,1)", {"W2", "R2"});
        add("D(2,2,1)", {"R2"});
        add("D(3,1,1)", {"N2", "W2", "R2", "B2"});
        add("D(3,1,1)", {"W2", "R2", "B2"}, "the printed subset is read with R2 and B2 = div W");
        add("D(3,1,1)", {"B2", "R2"});
        add("D(3,1,1)", {"W2", "R2"});
        add("D(3,1,1)", {"R2"});
        add("D(3,1,1)", {"C1", "U1", "A1"});
        add("D(3,1,1)", {"U1", "A1"});
        add("D(3,1,1)", {"A1"});
        return v;
    }();
    return sets;
}

const std::vector<FormSet>& tensor_form_sets() {
    static const std::vector<FormSet> sets = [] {
        std::vector<FormSet> v;
        auto add = [&](std::vector<std::string> m, bool unverifiable = false, std::string note = "") {
            v.push_back({"tensor", std::move(m), unverifiable, std::move(note)});
        };
        add({"Yab"});
        add({"Z1ab", "R1"});
        add({"Rab", "Yab", "R2"});
        add({"Z2ab", "R2"});
        add({"M", "Yab"});
        add({"P", "Yab", "R2"});
        add({"G", "M", "Yab"});
        add({"D", "Z1ab", "R1", "J", "Bt1"});
        add({"J", "Bt1", "R1", "Z1ab"});
        add({"Gv", "Rab", "Yab", "R2", "P", "U1"});
        add({"S", "Z2ab", "R1", "U2-K2", "Bt1"}, true, "U2 and K2 are not defined");
        add({"Tab", "Rab", "X", "R1"});
        add({"Tab", "Rab", "X", "R1"}, false, "listed twice");
        add({"Tab", "Rab", "X", "S", "R1", "K2-P", "Bt1"}, true, "K2 is not defined");
        add({"Yab", "Rab", "Lab", "R2", "P", "X"});
        add({"Yab", "Rab", "Lab", "R2", "P", "X", "F", "M", "Gv", "G"});
        return v;
    }();
    return sets;
}

const GalileiRep& universal_multiplet() {
    // the label is nominal; only the letters and their boost laws are used
    static const GalileiRep rep = build_galilei_rep(
        {Slot{'A'}, Slot{'B'}, Slot{'C'}, Slot{'R'}, Slot{'U'}, Slot{'W'}, Slot{'K'}, Slot{'N'}}, RepLabel{5, 3, 1});
    return rep;
}

FieldSystem letter_system(const std::vector<Slot>& slots) {
    FieldSystem s;
    s.name = "forms";
    for (auto& sl : slots)
        s.fields.push_back({std::string(1, sl.letter), sl.kind() == SlotKind::Vector ? ValueType::Vector : ValueType::Scalar});
    return s;
}

std::vector<PolyQ> compile_form(const FormDef& f, const FieldSystem& letters, const JetSpace& js) {
    if (f.kind != FormKind::Tensor) return compile_expr(letters, js, parse_expr(f.formula));
    // sum of +-sym(X) terms
    std::vector<PolyQ> out(6);
    std::istringstream in(f.formula);
    std::string tok;
    int sign = 1;
    while (in >> tok) {
        if (tok == "-") {
            sign = -1;
            continue;
        }
        if (tok == "+") {
            sign = 1;
            continue;
        }
        if (tok.size() != 6 || tok.rfind("sym(", 0) != 0) throw DomainError("bad tensor formula " + f.formula);
        size_t c0 = js.component_of(std::string(1, tok[4]));
        int k = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b, ++k) {
                out[k] += PolyQ::var(js.vars, js.deriv_var(c0 + b, a + 1)).scaled(Rational(sign));
                out[k] += PolyQ::var(js.vars, js.deriv_var(c0 + a, b + 1)).scaled(Rational(sign));
            }
        sign = 1;
    }
    return out;
}

std::vector<std::string> forms_for(const RepLabel& label) {
    std::vector<std::string> names;
    auto push = [&](const std::string& n) {
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    };
    for (auto& s : vector_form_sets())
        if (s.context == label.str())
            for (auto& m : s.members) push(m);
    std::vector<Slot> layout = layout_of(label);
    auto has = [&](char c) {
        return std::any_of(layout.begin(), layout.end(), [&](const Slot& s) { return s.letter == c; });
    };
    bool in_sets = false;
    for (auto& f : form_library()) {
        if (f.name == "Yab") in_sets = true;
        if (!in_sets) continue;
        auto ls = f.letters();
        if (std::all_of(ls.begin(), ls.end(), has)) push(f.name);
    }
    return names;
}

std::vector<EvaluatedForm> covariant_forms(const RepLabel& label, const PolyVec& fields) {
    GalileiRep rep = build_galilei_rep(label);
    if (static_cast<int>(fields.size()) != rep.dim())
        throw DomainError("layout " + rep.layout() + " of " + label.str() + " needs " + std::to_string(rep.dim()) +
                          " components, got " + std::to_string(fields.size()));
    FieldSystem letters = letter_system(rep.slots);
    JetSpace js = make_jet_space(letters);
    Substitution<Rational> at_fields(js.vars, jet_values(js, fields, {}));
    std::vector<EvaluatedForm> out;
    for (auto& name : forms_for(label)) {
        const FormDef& f = form_def(name);
        EvaluatedForm ev{f.name, f.kind, f.formula, {}};
        for (auto& p : compile_form(f, letters, js)) ev.value.push_back(at_fields.apply(p));
        out.push_back(std::move(ev));
    }
    return out;
}

// ---------------------------------------------------------------------------

Json ClosureResult::to_json() const {
    Json j{{"context", set.context}, {"set", set.str()}, {"status", status}};
    if (!detail.empty()) j["detail"] = detail;
    if (!set.note.empty()) j["note"] = set.note;
    return j;
}

ClosureResult closure_test(const FormSet& s) {
    ClosureResult r{s, "closed", ""};
    if (s.unverifiable) {
        r.status = "unverifiable";
        r.detail = s.note;
        return r;
    }
    const GalileiRep& uni = universal_multiplet();
    FieldSystem letters = letter_system(uni.slots);
    JetSpace js = make_jet_space(letters);
    std::vector<PolyQ> comps;
    for (auto& m : s.members)
        for (auto& p : compile_form(form_def(m), letters, js)) comps.push_back(p);
    ComponentAction act = [&](const Rotation& rot, const Vec3Q& v) {
        return mat_mul(uni.boost(v), uni.rotation(rot));
    };
    SpanTest t = span_closed(js, comps, act);
    if (!t.closed) {
        r.status = "not closed";
        r.detail = t.detail;
    }
    return r;
}

std::vector<ClosureResult> appendix_closure() {
    std::vector<ClosureResult> out;
    for (auto& s : vector_form_sets()) out.push_back(closure_test(s));
    for (auto& s : tensor_form_sets()) out.push_back(closure_test(s));
    return out;
}

}  // namespace galinv
