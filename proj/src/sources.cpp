#include "galinv/simulator.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <random>

namespace galinv::sim {

struct SourceExpr::Node {
    enum Kind { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Fn } kind;
    double value = 0;
    int var = 0;  // 0 t, 1 x, 2 y, 3 z
    std::string fn;
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodeP = std::shared_ptr<const SourceExpr::Node>;
using Node = SourceExpr::Node;

class ExprParser {
public:
    ExprParser(const std::string& s, double L) : s_(s), L_(L) {}

    NodeP parse() {
        NodeP e = sum();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& m) const {
        throw std::invalid_argument("source expression '" + s_ + "' at " + std::to_string(p_ + 1) + ": " + m);
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    static NodeP make(Node::Kind k, std::vector<NodeP> a) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->args = std::move(a);
        return n;
    }
    static NodeP number(double v) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Num;
        n->value = v;
        return n;
    }

    NodeP sum() {
        NodeP a = product();
        for (;;) {
            if (eat('+'))
                a = make(Node::Add, {a, product()});
            else if (eat('-'))
                a = make(Node::Sub, {a, product()});
            else
                return a;
        }
    }
    NodeP product() {
        NodeP a = unary();
        for (;;) {
            if (eat('*'))
                a = make(Node::Mul, {a, unary()});
            else if (eat('/'))
                a = make(Node::Div, {a, unary()});
            else
                return a;
        }
    }
    NodeP unary() {
        if (eat('-')) return make(Node::Neg, {unary()});
        if (eat('+')) return unary();
        return power();
    }
    NodeP power() {
        NodeP a = atom();
        if (eat('^')) {
            NodeP b = unary();
            if (b->kind != Node::Num && !(b->kind == Node::Neg && b->args[0]->kind == Node::Num))
                fail("exponent must be an integer literal");
            double v = b->kind == Node::Num ? b->value : -b->args[0]->value;
            if (v != std::floor(v)) fail("exponent must be an integer");
            return make(Node::Pow, {a, number(v)});
        }
        return a;
    }
    NodeP atom() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end");
        char c = s_[p_];
        if (eat('(')) {
            NodeP e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t used = 0;
            double v = std::stod(s_.substr(p_), &used);
            p_ += used;
            return number(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t b = p_;
            while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
            std::string w = s_.substr(b, p_ - b);
            if (w == "pi") return number(std::numbers::pi);
            if (w == "L") return number(L_);
            static const char* vars[] = {"t", "x", "y", "z"};
            for (int i = 0; i < 4; ++i)
                if (w == vars[i]) {
                    auto n = std::make_shared<Node>();
                    n->kind = Node::Var;
                    n->var = i;
                    return n;
                }
            static const std::map<std::string, size_t> arity = {
                {"sin", 1}, {"cos", 1}, {"exp", 1}, {"sqrt", 1}, {"gauss", 4}};
            auto it = arity.find(w);
            if (it == arity.end()) fail("unknown name '" + w + "'");
            if (!eat('(')) fail("expected '(' after " + w);
            std::vector<NodeP> args{sum()};
            while (eat(',')) args.push_back(sum());
            if (!eat(')')) fail("expected ')'");
            if (args.size() != it->second) fail(w + " takes " + std::to_string(it->second) + " arguments");
            auto n = std::make_shared<Node>();
            n->kind = Node::Fn;
            n->fn = w;
            n->args = std::move(args);
            if (w == "gauss") n->value = L_;
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    double L_;
    size_t p_ = 0;
};

double eval(const Node& n, const double* v) {
    switch (n.kind) {
    case Node::Num: return n.value;
    case Node::Var: return v[n.var];
    case Node::Neg: return -eval(*n.args[0], v);
    case Node::Add: return eval(*n.args[0], v) + eval(*n.args[1], v);
    case Node::Sub: return eval(*n.args[0], v) - eval(*n.args[1], v);
    case Node::Mul: return eval(*n.args[0], v) * eval(*n.args[1], v);
    case Node::Div: return eval(*n.args[0], v) / eval(*n.args[1], v);
    case Node::Pow: return std::pow(eval(*n.args[0], v), n.args[1]->value);
    case Node::Fn: {
        double a = eval(*n.args[0], v);
        if (n.fn == "sin") return std::sin(a);
        if (n.fn == "cos") return std::cos(a);
        if (n.fn == "exp") return std::exp(a);
        if (n.fn == "sqrt") return std::sqrt(a);
        // periodized Gaussian with period L = n.value
        const double L = n.value, s = eval(*n.args[3], v);
        const double c[3] = {a, eval(*n.args[1], v), eval(*n.args[2], v)};
        double total = 1;
        for (int d = 0; d < 3; ++d) {
            double r = std::remainder(v[d + 1] - c[d], L), sum = 0;
            for (int m = -1; m <= 1; ++m) sum += std::exp(-std::pow(r + m * L, 2) / (2 * s * s));
            total *= sum;
        }
        return total;
    }
    }
    return 0;
}

}  // namespace

SourceExpr::SourceExpr(const std::string& text, double L) : text_(text), root_(ExprParser(text, L).parse()) {}

double SourceExpr::operator()(double t, double x, double y, double z) const {
    const double v[4] = {t, x, y, z};
    return eval(*root_, v);
}

void SourceExpr::check_periodic(double L) const {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(0, L);
    for (int trial = 0; trial < 8; ++trial) {
        double p[4] = {u(rng) / L, u(rng), u(rng), u(rng)};
        double f = (*this)(p[0], p[1], p[2], p[3]);
        for (int d = 1; d <= 3; ++d) {
            double q[4] = {p[0], p[1], p[2], p[3]};
            q[d] += L;
            double g = (*this)(q[0], q[1], q[2], q[3]);
            if (std::abs(f - g) > 1e-9 * (1 + std::abs(f)))
                throw IncompatibleSources("source '" + text_ + "' is not periodic with period L = " +
                                          std::to_string(L));
        }
    }
}

// ---------------------------------------------------------------------------

SourceSpec::SourceSpec() {
    SourceFn zero = [](double, double, double, double) { return 0.0; };
    j0 = j4 = zero;
    j = {zero, zero, zero};
}

SourceSpec SourceSpec::from_json(const Json& src, double L) {
    SourceSpec s;
    auto load = [&](const Json& v) -> SourceFn {
        if (v.is_number()) {
            double c = v.get<double>();
            return [c](double, double, double, double) { return c; };
        }
        SourceExpr e(v.get<std::string>(), L);
        e.check_periodic(L);
        return e;
    };
    for (auto& [key, val] : src.items()) {
        if (key == "j0")
            s.j0 = load(val);
        else if (key == "j4")
            s.j4 = load(val);
        else if (key == "j") {
            if (!val.is_array() || val.size() != 3) throw std::invalid_argument("source j needs three components");
            for (int a = 0; a < 3; ++a) s.j[a] = load(val[a]);
        } else
            throw std::invalid_argument("unknown source component '" + key + "'");
    }
    return s;
}

Scalar sample(const Grid& g, const SourceFn& f, double t) {
    Scalar out(g.size());
    for (int k = 0; k < g.N; ++k)
        for (int j = 0; j < g.N; ++j)
            for (int i = 0; i < g.N; ++i) out[g.index(i, j, k)] = f(t, i * g.h, j * g.h, k * g.h);
    return out;
}

Vector sample(const Grid& g, const std::array<SourceFn, 3>& f, double t) {
    return {sample(g, f[0], t), sample(g, f[1], t), sample(g, f[2], t)};
}

namespace {

SourceFn moved(SourceFn f, const std::array<double, 3>& v) {
    return [f = std::move(f), v](double t, double x, double y, double z) {
        return f(t, x + v[0] * t, y + v[1] * t, z + v[2] * t);
    };
}

}  // namespace

SourceSpec boost_magnetic_sources(const SourceSpec& s, const std::array<double, 3>& v) {
    SourceSpec b;
    for (int a = 0; a < 3; ++a) b.j[a] = moved(s.j[a], v);
    b.j4 = moved(s.j4, v);
    auto j = b.j;
    SourceFn j0 = moved(s.j0, v);
    b.j0 = [j0, j, v](double t, double x, double y, double z) {
        return j0(t, x, y, z) + v[0] * j[0](t, x, y, z) + v[1] * j[1](t, x, y, z) + v[2] * j[2](t, x, y, z);
    };
    return b;
}

SourceSpec boost_electric_sources(const SourceSpec& s, const std::array<double, 3>& v) {
    SourceSpec b;
    b.j0 = moved(s.j0, v);
    b.j4 = moved(s.j4, v);
    SourceFn j4 = b.j4;
    for (int a = 0; a < 3; ++a) {
        SourceFn ja = moved(s.j[a], v);
        double va = v[a];
        b.j[a] = [ja, j4, va](double t, double x, double y, double z) {
            return ja(t, x, y, z) + va * j4(t, x, y, z);
        };
    }
    return b;
}

RunConfig RunConfig::from_json(const Json& j) {
    RunConfig c;
    int N = j.value("N", 32);
    double h = j.contains("h") ? j.at("h").get<double>() : 2 * std::numbers::pi / N;
    c.grid = Grid(N, h);
    c.dt = j.value("dt", c.dt);
    c.t_end = j.value("t_end", c.t_end);
    c.e = j.value("e", c.e);
    c.time_order = j.value("time_order", c.time_order);
    if (c.time_order != 2 && c.time_order != 4) throw std::invalid_argument("time_order must be 2 or 4");
    if (!(c.dt > 0)) throw std::invalid_argument("dt must be positive");
    if (c.t_end < 0) throw std::invalid_argument("t_end must not be negative");
    if (j.contains("sources")) c.sources = SourceSpec::from_json(j.at("sources"), c.grid.L());
    if (j.contains("outputs")) c.outputs = j.at("outputs").get<std::vector<double>>();
    return c;
}

}  // namespace galinv::sim
