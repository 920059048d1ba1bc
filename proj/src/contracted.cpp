#include "galinv/contracted.hpp"

#include <map>

namespace galinv {

using namespace dsl;

namespace {

const char* const kEps = "eps";
const char* const kEpsInv = "eps_inv";

ExprPtr power(const char* sym, int k) {
    ExprPtr e = id(sym);
    for (int i = 1; i < k; ++i) e = e * id(sym);
    return e;
}

ExprPtr laurent_factor(const LaurentQ& f) {
    ExprPtr sum;
    for (auto& [k, c] : f.terms()) {
        ExprPtr t = num(abs(c));
        if (k > 0) t = t * power(kEps, k);
        if (k < 0) t = t * power(kEpsInv, -k);
        if (c.sign() < 0) t = -t;
        sum = sum ? sum + t : t;
    }
    return sum;
}

ExprPtr rewrite(const ExprPtr& e, const std::map<std::string, ExprPtr>& fields, int time_power) {
    if (e->op == ExprOp::Ident) {
        auto it = fields.find(e->name);
        return it == fields.end() ? e : it->second;
    }
    if (e->op == ExprOp::Num) return e;
    auto copy = std::make_shared<Expr>(*e);
    for (auto& a : copy->args) a = rewrite(a, fields, time_power);
    ExprPtr out = copy;
    if (e->op == ExprOp::Call && e->name == "dt" && time_power != 0)
        out = time_power > 0 ? power(kEps, time_power) * out : power(kEpsInv, -time_power) * out;
    return out;
}

// p over `to`, dropping the given variables of `from`
PolyQ rebase(const PolyQ& p, const VarList& to, const std::vector<size_t>& drop) {
    PolyQ out;
    if (p.is_zero()) return out;
    const VarList& from = p.vars();
    std::vector<long> map(from->size(), -1);
    for (size_t i = 0; i < from->size(); ++i) {
        if (std::find(drop.begin(), drop.end(), i) != drop.end()) continue;
        map[i] = static_cast<long>(PolyQ::index_of(to, (*from)[i]));
    }
    for (auto& [e, c] : p.terms()) {
        Exponents ne(to->size(), '\0');
        for (size_t i = 0; i < e.size(); ++i)
            if (map[i] >= 0) ne[map[i]] = e[i];
        out += PolyQ::monomial(to, ne, c);
    }
    return out;
}

}  // namespace

ContractedSystem contract_system(const FieldSystem& s, const FieldContraction& fc) {
    std::map<std::string, ExprPtr> images;
    for (auto& r : fc.rules) {
        if (!s.find_symbol(r.old_field)) throw DomainError("contraction rule for undeclared " + r.old_field);
        ExprPtr sum;
        for (auto& [f, name] : r.terms) {
            ExprPtr t = laurent_factor(f) * id(name);
            sum = sum ? sum + t : t;
        }
        images[r.old_field] = sum ? sum : num(0L);
    }
    ContractedSystem out;
    out.scaled = s;
    out.scaled.name = s.name + "-contracted";
    out.scaled.params.push_back(kEps);
    out.scaled.params.push_back(kEpsInv);
    out.scaled.field_reps.clear();
    out.scaled.residual_reps.clear();
    for (auto& eq : out.scaled.equations) {
        eq.lhs = rewrite(eq.lhs, images, fc.time_power);
        eq.rhs = rewrite(eq.rhs, images, fc.time_power);
    }
    CompiledSystem cs = compile_system(out.scaled);
    FieldSystem plain = s;
    plain.field_reps.clear();
    plain.residual_reps.clear();
    out.space = make_jet_space(plain);
    const size_t pe = cs.space.param_var(kEps), pi = cs.space.param_var(kEpsInv);
    for (auto& r : cs.residuals) {
        ContractedEquation ce{r.equation, 0, r.type, {}};
        // split by order eps^(p - q)
        std::map<int, std::vector<PolyQ>> by_order;
        for (size_t k = 0; k < r.components.size(); ++k)
            for (auto& [e, c] : r.components[k].terms()) {
                int order = static_cast<unsigned char>(e[pe]) - static_cast<unsigned char>(e[pi]);
                auto& v = by_order[order];
                v.resize(r.components.size());
                v[k] += rebase(PolyQ::monomial(cs.space.vars, e, c), out.space.vars, {pe, pi});
            }
        // cancellations between eps^(p) eps_inv^(q) with equal p - q
        for (auto it = by_order.begin(); it != by_order.end();) {
            bool zero = true;
            for (auto& p : it->second) zero = zero && p.is_zero();
            it = zero ? by_order.erase(it) : std::next(it);
        }
        if (!by_order.empty()) {
            ce.order = by_order.begin()->first;
            ce.leading = by_order.begin()->second;
        } else {
            ce.leading.assign(r.components.size(), PolyQ());
        }
        out.equations.push_back(std::move(ce));
    }
    return out;
}

std::optional<std::vector<Correspondence>> match_residuals(const ContractedSystem& c, const FieldSystem& target) {
    CompiledSystem ct = compile_system(target);
    std::vector<Correspondence> out;
    for (auto& eq : c.equations) {
        std::optional<Correspondence> found;
        for (auto& r : ct.residuals) {
            if (r.type != eq.type) continue;
            for (int sign : {1, -1}) {
                bool ok = true;
                for (size_t k = 0; k < r.components.size() && ok; ++k) {
                    PolyQ t = rebase(r.components[k], c.space.vars, {});
                    ok = (eq.leading[k] - t.scaled(Rational(sign))).is_zero();
                }
                if (ok) {
                    found = Correspondence{eq.equation, r.equation, sign};
                    break;
                }
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
        out.push_back(*found);
    }
    return out;
}

}  // namespace galinv
