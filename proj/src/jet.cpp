#include "galinv/jet.hpp"

namespace galinv {

size_t JetSpace::param_var(const std::string& p) const {
    for (size_t i = 0; i < params.size(); ++i)
        if (params[i] == p) return i;
    throw DomainError("unknown parameter " + p);
}

size_t JetSpace::component_of(const std::string& symbol) const {
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].symbol == symbol) return i;
    throw DomainError("unknown symbol " + symbol);
}

JetSpace make_jet_space(const FieldSystem& s) {
    JetSpace j;
    j.params = s.params;
    std::vector<std::string> names = s.params;
    auto add = [&](const Decl& d, bool source) {
        int n = d.type == ValueType::Vector ? 3 : 1;
        for (int k = 0; k < n; ++k) {
            j.components.push_back({d.name, k, source});
            std::string base = n == 3 ? d.name + "." + std::to_string(k + 1) : d.name;
            names.push_back(base);
            for (const char* mu : {".t", ".x", ".y", ".z"}) names.push_back(base + mu);
        }
    };
    for (auto& d : s.fields) add(d, false);
    for (auto& d : s.sources) add(d, true);
    j.vars = make_vars(std::move(names));
    return j;
}

PolyQ total_derivative(const JetSpace& space, const PolyQ& p, int mu) {
    PolyQ r;
    if (p.nvars() == 0) return r;
    const PolyQ q = p.over(space.vars);
    for (size_t v = space.params.size(); v < space.vars->size(); ++v) {
        if (q.degree_in(v) == 0) continue;
        if (space.is_deriv_var(v)) throw DomainError("second derivative in a first order system");
        r += q.derivative(v) * PolyQ::var(space.vars, space.deriv_var(space.comp_of_var(v), mu));
    }
    return r;
}

namespace {

using Val = std::vector<PolyQ>;

class Compiler {
public:
    Compiler(const FieldSystem& s, const JetSpace& j) : s_(s), j_(j) {}

    Val eval(const ExprPtr& e) {
        switch (e->op) {
            case ExprOp::Num:
                return {PolyQ(e->value)};
            case ExprOp::Ident: {
                if (s_.is_param(e->name)) return {PolyQ::var(j_.vars, j_.param_var(e->name))};
                const Decl* d = s_.find_symbol(e->name);
                if (!d) throw DslError(DslError::Kind::Undeclared, e->line, e->col, "'" + e->name + "' is not declared");
                size_t c = j_.component_of(e->name);
                Val r;
                for (int k = 0; k < (d->type == ValueType::Vector ? 3 : 1); ++k)
                    r.push_back(PolyQ::var(j_.vars, j_.value_var(c + k)));
                return r;
            }
            case ExprOp::Neg: {
                Val a = eval(e->args[0]);
                for (auto& p : a) p = -p;
                return a;
            }
            case ExprOp::Add:
            case ExprOp::Sub: {
                Val a = eval(e->args[0]), b = eval(e->args[1]);
                need(e, a.size() == b.size(), "cannot add a scalar and a vector");
                for (size_t i = 0; i < a.size(); ++i) a[i] = e->op == ExprOp::Add ? a[i] + b[i] : a[i] - b[i];
                return a;
            }
            case ExprOp::Mul: {
                Val a = eval(e->args[0]), b = eval(e->args[1]);
                need(e, a.size() == 1 || b.size() == 1, "product of two vectors; use dot or cross");
                if (a.size() == 1) std::swap(a, b);
                for (auto& p : a) p = p * b[0];
                return a;
            }
            case ExprOp::Div: {
                Val a = eval(e->args[0]), b = eval(e->args[1]);
                need(e, b.size() == 1 && b[0].is_constant() && !b[0].is_zero(), "division only by nonzero numbers");
                for (auto& p : a) p = p / b[0];
                return a;
            }
            case ExprOp::Call:
                return call(e);
        }
        return {};
    }

private:
    void need(const ExprPtr& e, bool ok, const std::string& msg) const {
        if (!ok) throw DslError(DslError::Kind::Type, e->line, e->col, msg);
    }

    PolyQ D(const ExprPtr& e, const PolyQ& p, int mu) const {
        try {
            return total_derivative(j_, p, mu);
        } catch (const DomainError&) {
            throw DslError(DslError::Kind::Type, e->line, e->col, "nested derivative; only first order terms are allowed");
        }
    }

    Val call(const ExprPtr& e) {
        std::vector<Val> a;
        for (auto& x : e->args) a.push_back(eval(x));
        const std::string& f = e->name;
        if (f == "dot" || f == "cross") {
            need(e, a.size() == 2 && a[0].size() == 3 && a[1].size() == 3, f + " needs two vectors");
            const Val &u = a[0], &w = a[1];
            if (f == "dot") return {u[0] * w[0] + u[1] * w[1] + u[2] * w[2]};
            return {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
        }
        need(e, a.size() == 1, f + " takes one argument");
        const Val& u = a[0];
        if (f == "dt") {
            Val r;
            for (auto& p : u) r.push_back(D(e, p, 0));
            return r;
        }
        if (f == "grad") {
            need(e, u.size() == 1, "grad needs a scalar");
            return {D(e, u[0], 1), D(e, u[0], 2), D(e, u[0], 3)};
        }
        if (f == "div") {
            need(e, u.size() == 3, "div needs a vector");
            return {D(e, u[0], 1) + D(e, u[1], 2) + D(e, u[2], 3)};
        }
        if (f == "curl") {
            need(e, u.size() == 3, "curl needs a vector");
            return {D(e, u[2], 2) - D(e, u[1], 3), D(e, u[0], 3) - D(e, u[2], 1), D(e, u[1], 1) - D(e, u[0], 2)};
        }
        throw DslError(DslError::Kind::Undeclared, e->line, e->col, "unknown function '" + f + "'");
    }

    const FieldSystem& s_;
    const JetSpace& j_;
};

}  // namespace

std::vector<PolyQ> compile_expr(const FieldSystem& s, const JetSpace& space, const ExprPtr& e) {
    return Compiler(s, space).eval(e);
}

size_t CompiledSystem::residual_component_count() const {
    size_t n = 0;
    for (auto& r : residuals) n += r.components.size();
    return n;
}

size_t CompiledSystem::residual_offset(const std::string& eq) const {
    size_t n = 0;
    for (auto& r : residuals) {
        if (r.equation == eq) return n;
        n += r.components.size();
    }
    throw DomainError("unknown equation " + eq);
}

CompiledSystem compile_system(const FieldSystem& s) {
    check_system(s);
    CompiledSystem c;
    c.system = s;
    c.space = make_jet_space(s);
    Compiler comp(s, c.space);
    for (auto& eq : s.equations) {
        Val l = comp.eval(eq.lhs), r = comp.eval(eq.rhs);
        if (is_zero_literal(eq.lhs)) l.assign(r.size(), PolyQ());
        if (is_zero_literal(eq.rhs)) r.assign(l.size(), PolyQ());
        Residual res;
        res.equation = eq.name;
        res.type = l.size() == 3 ? ValueType::Vector : ValueType::Scalar;
        for (size_t i = 0; i < l.size(); ++i) res.components.push_back(l[i] - r[i]);
        c.residuals.push_back(std::move(res));
    }
    return c;
}

}  // namespace galinv
