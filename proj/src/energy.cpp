#include "galinv/energy.hpp"

#include "galinv/catalog.hpp"
#include "galinv/linsolve.hpp"

#include <map>

namespace galinv {

namespace {

void need3(const PolyVec& v, const char* what) {
    if (v.size() != 3) throw std::invalid_argument(std::string(what) + " must have 3 components");
}

// T built from values given as polynomials; derivatives supplied by d(p, mu)
template <class D>
EnergyMomentum build(const PolyQ& B, const PolyVec& N, const PolyVec& W, const PolyVec& R, TensorVariant variant,
                     D&& d) {
    need3(N, "N");
    need3(W, "W");
    need3(R, "R");
    EnergyMomentum t;
    const Rational half(1, 2);
    PolyQ W2 = dot(W, W), RW = dot(R, W), NR = dot(N, R);
    t.T00 = (B * B + W2).scaled(half);
    PolyVec NxW = cross(N, W), RxW = cross(R, W);
    for (int a = 0; a < 3; ++a) {
        t.T0a.push_back(NxW[a] - B * N[a]);
        t.Ta0.push_back(B * R[a] + RxW[a]);
    }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            PolyQ v = N[a] * R[b] + N[b] * R[a] - W[a] * W[b];
            if (variant == TensorVariant::Printed) {
                if (a == b) v += t.T00 - RW;
            } else {
                if (a == b) v += t.T00 - NR;
                v = -v;
            }
            t.Tab[a].push_back(v);
        }
    PolyQ c0 = d(t.T00, 0);
    for (int a = 0; a < 3; ++a) c0 += d(t.T0a[a], a + 1);
    t.continuity[0] = c0;
    for (int b = 0; b < 3; ++b) {
        PolyQ c = d(t.Ta0[b], 0);
        for (int a = 0; a < 3; ++a) c += d(t.Tab[b][a], a + 1);
        t.continuity[b + 1] = c;
    }
    return t;
}

}  // namespace

ExtendedFields fields_from_potentials(const Potentials& p) {
    need3(p.A, "A");
    ExtendedFields f;
    f.W = curl(p.A);
    PolyVec gA0 = grad(p.A0);
    for (int a = 0; a < 3; ++a) f.N.push_back(dt(p.A[a]) - gA0[a]);
    f.R = grad(p.A4);
    f.B = dt(p.A4);
    return f;
}

EnergyMomentum energy_momentum(const ExtendedFields& f, TensorVariant variant) {
    return build(f.B, f.N, f.W, f.R, variant, [](const PolyQ& p, int mu) { return partial(p, mu); });
}

std::string ContinuityCertificate::str() const {
    if (!found) return "none";
    std::string s;
    for (auto& t : terms) {
        if (!s.empty()) s += t.coeff.sign() < 0 ? " - " : " + ";
        else if (t.coeff.sign() < 0) s += "-";
        Rational c = abs(t.coeff);
        if (!c.is_one()) s += c.str() + "*";
        if (t.field != "1") s += t.field + "*";
        s += t.equation + (t.component ? "[" + std::to_string(t.component) + "]" : "");
    }
    return s.empty() ? "0" : s;
}

bool EnergyCertificate::pass() const {
    for (auto& c : components)
        if (!c.found) return false;
    return true;
}

Json EnergyCertificate::to_json() const {
    Json j;
    j["symbolic_nu"] = symbolic_nu;
    j["tensor"] = variant == TensorVariant::Printed ? "printed" : "corrected";
    j["pass"] = pass();
    Json comps = Json::array();
    for (auto& c : components) comps.push_back(Json{{"nu", c.nu}, {"found", c.found}, {"combination", c.str()}});
    j["components"] = comps;
    return j;
}

EnergyCertificate energy_certificate(bool symbolic_nu, TensorVariant variant) {
    CompiledSystem cs = compile_system(catalog("last"));
    const JetSpace& js = cs.space;
    std::vector<PolyQ> fix;
    for (size_t i = 0; i < js.vars->size(); ++i) fix.push_back(PolyQ::var(js.vars, i));
    fix[js.param_var("e")] = PolyQ();
    if (!symbolic_nu) fix[js.param_var("nu")] = PolyQ();
    Substitution<Rational> sub(js.vars, fix);

    auto val = [&](const std::string& s, int k) { return PolyQ::var(js.vars, js.value_var(js.component_of(s) + k)); };
    PolyVec N, W, R;
    for (int k = 0; k < 3; ++k) {
        N.push_back(val("N", k));
        W.push_back(val("W", k));
        R.push_back(val("R", k));
    }
    EnergyMomentum t = build(val("B", 0), N, W, R, variant,
                             [&](const PolyQ& p, int mu) { return total_derivative(js, p, mu); });

    // multipliers: 1, field values, and nu times field values
    std::vector<std::pair<std::string, PolyQ>> mult{{"1", PolyQ(1)}};
    for (size_t c = 0; c < js.component_count(); ++c) {
        if (js.components[c].source) continue;
        const auto& comp = js.components[c];
        std::string name = comp.symbol + (comp.symbol == "B" ? "" : std::to_string(comp.index + 1));
        PolyQ v = PolyQ::var(js.vars, js.value_var(c));
        mult.emplace_back(name, v);
        if (symbolic_nu) mult.emplace_back("nu*" + name, v * PolyQ::var(js.vars, js.param_var("nu")));
    }
    struct Unknown {
        size_t mult;
        size_t eq;
        int comp;
    };
    std::vector<Unknown> unknowns;
    std::vector<PolyQ> products;
    for (size_t e = 0; e < cs.residuals.size(); ++e)
        for (size_t k = 0; k < cs.residuals[e].components.size(); ++k) {
            PolyQ r = sub.apply(cs.residuals[e].components[k]);
            for (size_t m = 0; m < mult.size(); ++m) {
                unknowns.push_back({m, e, static_cast<int>(k)});
                products.push_back(mult[m].second * r);
            }
        }

    EnergyCertificate out;
    out.symbolic_nu = symbolic_nu;
    out.variant = variant;
    for (int nu = 0; nu < 4; ++nu) {
        ContinuityCertificate& cert = out.components[nu];
        cert.nu = nu;
        PolyQ target = sub.apply(t.continuity[nu]);
        std::map<Exponents, SparseVec> rows;
        std::map<Exponents, Rational> rhs;
        for (size_t u = 0; u < products.size(); ++u)
            for (auto& [e, c] : products[u].terms()) rows[e][u] = c;
        for (auto& [e, c] : target.terms()) {
            rows[e];
            rhs[e] = c;
        }
        LinearSystem ls(unknowns.size());
        for (auto& [e, row] : rows) {
            auto it = rhs.find(e);
            ls.add(row, it == rhs.end() ? Rational(0) : it->second);
        }
        auto x = ls.solve();
        if (!x) continue;
        cert.found = true;
        for (size_t u = 0; u < unknowns.size(); ++u)
            if (!(*x)[u].is_zero())
                cert.terms.push_back(
                    {(*x)[u], mult[unknowns[u].mult].first, cs.residuals[unknowns[u].eq].equation,
                     cs.residuals[unknowns[u].eq].type == ValueType::Vector ? unknowns[u].comp + 1 : 0});
    }
    return out;
}

PolyQ lagrangian_density(const ExtendedFields& f, const Potentials& p, const Sources& s, const Rational& e,
                         const Rational& nu) {
    need3(s.j, "j");
    ExtendedFields g = fields_from_potentials(p);
    auto same = [](const PolyVec& a, const PolyVec& b) { return a.size() == b.size() && a == b; };
    if (!(f.B == g.B) || !same(f.N, g.N) || !same(f.W, g.W) || !same(f.R, g.R))
        throw RelationError("fields do not derive from the given potentials");
    PolyQ L = (f.B * f.B - dot(f.W, f.W)).scaled(Rational(1, 2)) - dot(f.N, f.R);
    PolyVec WB, RxN = cross(f.R, f.N);
    for (int a = 0; a < 3; ++a) WB.push_back(f.W[a] * f.B + RxN[a]);
    L += (p.A4 * dot(f.W, f.N) + p.A0 * dot(f.R, f.W) - dot(p.A, WB)).scaled(nu);
    L -= (p.A4 * s.j0 + p.A0 * s.j4 - dot(p.A, s.j)).scaled(e);
    return L;
}

PolyQ lagrangian_density(const Potentials& p, const Sources& s, const Rational& e, const Rational& nu) {
    return lagrangian_density(fields_from_potentials(p), p, s, e, nu);
}

}  // namespace galinv
