#include "galinv/system.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace galinv {

DslError::DslError(Kind k, int line, int col, const std::string& msg)
    : std::runtime_error([&] {
          const char* kind = k == Kind::Syntax ? "syntax error" : k == Kind::Type ? "type error" : "undeclared symbol";
          std::ostringstream os;
          os << line << ":" << col << ": " << kind << ": " << msg;
          return os.str();
      }()),
      kind_(k), line_(line), col_(col), detail_(msg) {}

bool same_tree(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->op != b->op || a->name != b->name || a->args.size() != b->args.size()) return false;
    if (a->op == ExprOp::Num && a->value != b->value) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!same_tree(a->args[i], b->args[i])) return false;
    return true;
}

const Decl* FieldSystem::find_symbol(const std::string& n) const {
    for (auto& d : fields)
        if (d.name == n) return &d;
    for (auto& d : sources)
        if (d.name == n) return &d;
    return nullptr;
}

bool FieldSystem::is_param(const std::string& n) const {
    return std::find(params.begin(), params.end(), n) != params.end();
}

const Equation* FieldSystem::find_equation(const std::string& n) const {
    for (auto& e : equations)
        if (e.name == n) return &e;
    return nullptr;
}

bool same_system(const FieldSystem& a, const FieldSystem& b) {
    if (a.name != b.name || a.fields != b.fields || a.sources != b.sources || a.params != b.params ||
        a.field_reps != b.field_reps || a.source_reps != b.source_reps || a.residual_reps != b.residual_reps ||
        a.equations.size() != b.equations.size())
        return false;
    for (size_t i = 0; i < a.equations.size(); ++i) {
        const auto& x = a.equations[i];
        const auto& y = b.equations[i];
        if (x.name != y.name || !same_tree(x.lhs, y.lhs) || !same_tree(x.rhs, y.rhs)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        int l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), l, cl});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            out.push_back({Tok::Number, src.substr(i, j - i), l, cl});
            advance(j - i);
            continue;
        }
        if (std::string("{}():=,+-*/").find(c) != std::string::npos) {
            out.push_back({Tok::Punct, std::string(1, c), l, cl});
            advance(1);
            continue;
        }
        throw DslError(DslError::Kind::Syntax, l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

ExprPtr make(ExprOp op, std::string name, std::vector<ExprPtr> args, int line = 0, int col = 0) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->name = std::move(name);
    e->args = std::move(args);
    e->line = line;
    e->col = col;
    return e;
}

const std::set<std::string> kFunctions = {"dt", "grad", "div", "curl", "dot", "cross"};
const std::set<std::string> kKeywords = {"system", "fields", "sources", "params", "rep",
                                         "on",     "eq",     "residual", "scalar", "vector"};

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    ExprPtr standalone_expr() {
        ExprPtr e = expr();
        if (peek().kind != Tok::End) throw error(peek(), "unexpected " + describe(peek()) + " after expression");
        return e;
    }

    FieldSystem parse() {
        if (peek().kind == Tok::End) throw error(peek(), "no system block");
        expect_word("system");
        FieldSystem s;
        s.name = ident("system name");
        while (is("-") && toks_[pos_ + 1].kind == Tok::Ident) {
            next();
            s.name += "-" + next().text;
        }
        expect("{");
        enum { None, Fields, Sources } last = None;
        while (!is("}")) {
            const Token& t = peek();
            if (t.kind != Tok::Ident) throw error(t, "expected a declaration or equation, found " + describe(t));
            if (t.text == "fields" || t.text == "sources") {
                next();
                bool f = t.text == "fields";
                expect("{");
                auto& list = f ? s.fields : s.sources;
                do {
                    Decl d;
                    const Token& nt = peek();
                    d.name = ident("symbol name");
                    if (s.find_symbol(d.name) || s.is_param(d.name))
                        throw error(nt, "symbol '" + d.name + "' declared twice");
                    expect(":");
                    const Token& ty = peek();
                    std::string tn = ident("type");
                    if (tn == "scalar")
                        d.type = ValueType::Scalar;
                    else if (tn == "vector")
                        d.type = ValueType::Vector;
                    else
                        throw error(ty, "expected 'scalar' or 'vector', found '" + tn + "'");
                    list.push_back(d);
                } while (!is("}"));
                expect("}");
                last = f ? Fields : Sources;
            } else if (t.text == "params") {
                next();
                expect("{");
                do {
                    const Token& nt = peek();
                    std::string p = ident("parameter name");
                    if (s.find_symbol(p) || s.is_param(p)) throw error(nt, "symbol '" + p + "' declared twice");
                    s.params.push_back(p);
                } while (!is("}"));
                expect("}");
            } else if (t.text == "rep") {
                if (last == None) throw error(t, "rep clause must follow a fields or sources block");
                next();
                RepBinding b = binding();
                (last == Fields ? s.field_reps : s.source_reps).push_back(b);
            } else if (t.text == "residual") {
                next();
                expect_word("rep");
                s.residual_reps.push_back(binding());
            } else if (t.text == "eq") {
                next();
                Equation e;
                const Token& nt = peek();
                e.name = ident("equation name");
                if (s.find_equation(e.name)) throw error(nt, "equation '" + e.name + "' defined twice");
                expect(":");
                e.lhs = expr();
                expect("=");
                e.rhs = expr();
                s.equations.push_back(e);
            } else
                throw error(t, "expected a declaration or equation, found '" + t.text + "'");
        }
        expect("}");
        if (peek().kind != Tok::End) throw error(peek(), "unexpected " + describe(peek()) + " after system block");
        return s;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool is(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }
    DslError error(const Token& t, const std::string& msg) const {
        return DslError(DslError::Kind::Syntax, t.line, t.col, msg);
    }
    void expect(const char* p) {
        if (!is(p)) throw error(peek(), std::string("expected '") + p + "', found " + describe(peek()));
        next();
    }
    void expect_word(const char* w) {
        if (peek().kind != Tok::Ident || peek().text != w)
            throw error(peek(), std::string("expected '") + w + "', found " + describe(peek()));
        next();
    }
    std::string ident(const char* what) {
        if (peek().kind != Tok::Ident) throw error(peek(), std::string("expected ") + what + ", found " + describe(peek()));
        return next().text;
    }
    int integer() {
        if (peek().kind != Tok::Number || peek().text.find('.') != std::string::npos)
            throw error(peek(), "expected an integer, found " + describe(peek()));
        return std::stoi(next().text);
    }

    RepBinding binding() {
        const Token& lt = peek();
        if (lt.kind != Tok::Ident || lt.text != "D") throw error(lt, "expected a label D(m,n,l), found " + describe(lt));
        next();
        expect("(");
        RepLabel l;
        l.m = integer();
        expect(",");
        l.n = integer();
        expect(",");
        l.lambda = integer();
        expect(")");
        RepBinding b;
        b.label = l;
        expect_word("on");
        expect("(");
        do {
            if (is(",")) next();
            int sign = 1;
            if (is("-")) {
                next();
                sign = -1;
            }
            b.names.push_back({sign, ident("name")});
        } while (!is(")"));
        expect(")");
        return b;
    }

    // expr := term (('+'|'-') term)*
    ExprPtr expr() {
        ExprPtr e = term();
        while (is("+") || is("-")) {
            const Token& t = next();
            e = make(t.text == "+" ? ExprOp::Add : ExprOp::Sub, "", {e, term()}, t.line, t.col);
        }
        return e;
    }
    // term := factor (('*'|'/') factor)*
    ExprPtr term() {
        ExprPtr e = factor();
        while (is("*") || is("/")) {
            const Token& t = next();
            e = make(t.text == "*" ? ExprOp::Mul : ExprOp::Div, "", {e, factor()}, t.line, t.col);
        }
        return e;
    }
    // factor := '-' factor | NUMBER | IDENT | IDENT '(' args ')' | '(' expr ')'
    ExprPtr factor() {
        const Token& t = peek();
        if (is("-")) {
            next();
            return make(ExprOp::Neg, "", {factor()}, t.line, t.col);
        }
        if (is("(")) {
            next();
            ExprPtr e = expr();
            expect(")");
            return e;
        }
        if (t.kind == Tok::Number) {
            next();
            auto e = std::make_shared<Expr>();
            e->op = ExprOp::Num;
            e->value = Rational::parse(t.text);
            e->line = t.line;
            e->col = t.col;
            return e;
        }
        if (t.kind == Tok::Ident) {
            if (kKeywords.count(t.text)) throw error(t, "unexpected keyword '" + t.text + "' in expression");
            next();
            if (is("(")) {
                next();
                std::vector<ExprPtr> args;
                if (!is(")")) {
                    args.push_back(expr());
                    while (is(",")) {
                        next();
                        args.push_back(expr());
                    }
                }
                expect(")");
                return make(ExprOp::Call, t.text, std::move(args), t.line, t.col);
            }
            return make(ExprOp::Ident, t.text, {}, t.line, t.col);
        }
        throw error(t, "expected an expression, found " + describe(t));
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

int precedence(const ExprPtr& e) {
    switch (e->op) {
        case ExprOp::Add:
        case ExprOp::Sub:
            return 1;
        case ExprOp::Mul:
        case ExprOp::Div:
            return 2;
        case ExprOp::Neg:
            return 3;
        default:
            return 4;
    }
}

std::string number_text(const Rational& v) {
    if (v.is_integer()) return v.str();
    // terminating decimals print as decimals; anything else keeps a fraction
    mpz_class den = v.den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) den /= 2, ++twos;
    while (den % 5 == 0) den /= 5, ++fives;
    if (den != 1) return "(" + v.str() + ")";
    int digits = std::max(twos, fives);
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = v.num() * scale / v.den();
    std::string s = scaled.get_str(10);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    while (static_cast<int>(s.size()) <= digits) s.insert(0, "0");
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

std::string print(const ExprPtr& e) {
    auto wrap = [](const ExprPtr& sub, bool paren) { return paren ? "(" + print(sub) + ")" : print(sub); };
    switch (e->op) {
        case ExprOp::Num:
            return number_text(e->value);
        case ExprOp::Ident:
            return e->name;
        case ExprOp::Neg:
            return "-" + wrap(e->args[0], precedence(e->args[0]) < 3);
        case ExprOp::Add:
        case ExprOp::Sub:
            return wrap(e->args[0], precedence(e->args[0]) < 1) + (e->op == ExprOp::Add ? " + " : " - ") +
                   wrap(e->args[1], precedence(e->args[1]) <= 1);
        case ExprOp::Mul:
        case ExprOp::Div:
            return wrap(e->args[0], precedence(e->args[0]) < 2) + (e->op == ExprOp::Mul ? "*" : "/") +
                   wrap(e->args[1], precedence(e->args[1]) <= 2);
        case ExprOp::Call: {
            std::string s = e->name + "(";
            for (size_t i = 0; i < e->args.size(); ++i) s += (i ? ", " : "") + print(e->args[i]);
            return s + ")";
        }
    }
    return "";
}

std::string print_binding(const RepBinding& b) {
    std::string s = b.label.str() + " on (";
    for (size_t i = 0; i < b.names.size(); ++i)
        s += (i ? ", " : "") + std::string(b.names[i].sign < 0 ? "-" : "") + b.names[i].name;
    return s + ")";
}

// ---------------------------------------------------------------------------
// Type checking

struct TypeInfo {
    ValueType type;
    bool has_field = false;   // depends on a field or source
    bool has_source = false;
    bool has_deriv = false;
    int degree = 0;           // polynomial degree in fields and sources
};

class Checker {
public:
    explicit Checker(const FieldSystem& s) : s_(s) {}

    TypeInfo check(const ExprPtr& e) {
        auto fail = [&](const std::string& m) { return DslError(DslError::Kind::Type, e->line, e->col, m); };
        switch (e->op) {
            case ExprOp::Num:
                return {ValueType::Scalar};
            case ExprOp::Ident: {
                if (s_.is_param(e->name)) return {ValueType::Scalar};
                const Decl* d = s_.find_symbol(e->name);
                if (!d) throw DslError(DslError::Kind::Undeclared, e->line, e->col, "'" + e->name + "' is not declared");
                bool src = std::any_of(s_.sources.begin(), s_.sources.end(),
                                       [&](const Decl& x) { return x.name == e->name; });
                return {d->type, true, src, false, 1};
            }
            case ExprOp::Neg:
                return check(e->args[0]);
            case ExprOp::Add:
            case ExprOp::Sub: {
                TypeInfo a = check(e->args[0]), b = check(e->args[1]);
                if (a.type != b.type) throw fail("cannot add a scalar and a vector");
                return merge(a, b, std::max(a.degree, b.degree), a.type);
            }
            case ExprOp::Mul: {
                TypeInfo a = check(e->args[0]), b = check(e->args[1]);
                if (a.type == ValueType::Vector && b.type == ValueType::Vector)
                    throw fail("product of two vectors; use dot or cross");
                return product(e, a, b, a.type == ValueType::Vector || b.type == ValueType::Vector ? ValueType::Vector
                                                                                                  : ValueType::Scalar);
            }
            case ExprOp::Div: {
                TypeInfo a = check(e->args[0]), b = check(e->args[1]);
                if (b.type != ValueType::Scalar || b.has_field) throw fail("division only by constants and parameters");
                return a;
            }
            case ExprOp::Call:
                return call(e);
        }
        throw fail("bad expression");
    }

private:
    static TypeInfo merge(const TypeInfo& a, const TypeInfo& b, int degree, ValueType t) {
        TypeInfo r{t};
        r.has_field = a.has_field || b.has_field;
        r.has_source = a.has_source || b.has_source;
        r.has_deriv = a.has_deriv || b.has_deriv;
        r.degree = degree;
        return r;
    }
    TypeInfo product(const ExprPtr& e, const TypeInfo& a, const TypeInfo& b, ValueType t) {
        if (a.degree + b.degree > 2)
            throw DslError(DslError::Kind::Type, e->line, e->col, "term is more than bilinear in the fields");
        if (a.has_deriv && b.has_deriv)
            throw DslError(DslError::Kind::Type, e->line, e->col, "term carries more than one derivative");
        return merge(a, b, a.degree + b.degree, t);
    }

    TypeInfo call(const ExprPtr& e) {
        auto fail = [&](const std::string& m) { return DslError(DslError::Kind::Type, e->line, e->col, m); };
        if (!kFunctions.count(e->name))
            throw DslError(DslError::Kind::Undeclared, e->line, e->col, "unknown function '" + e->name + "'");
        const size_t arity = (e->name == "dot" || e->name == "cross") ? 2 : 1;
        if (e->args.size() != arity)
            throw fail(e->name + " takes " + std::to_string(arity) + " argument" + (arity > 1 ? "s" : ""));
        if (arity == 2) {
            TypeInfo a = check(e->args[0]), b = check(e->args[1]);
            if (a.type != ValueType::Vector || b.type != ValueType::Vector) throw fail(e->name + " needs two vectors");
            return product(e, a, b, e->name == "dot" ? ValueType::Scalar : ValueType::Vector);
        }
        TypeInfo a = check(e->args[0]);
        if (a.has_deriv) throw fail("nested derivative; only first order terms are allowed");
        if (a.has_source) throw fail("derivatives apply to fields only");
        if (!a.has_field) throw fail("derivative of a constant expression");
        TypeInfo r = a;
        r.has_deriv = true;
        if (e->name == "dt") return r;
        if (e->name == "grad") {
            if (a.type != ValueType::Scalar) throw fail("grad needs a scalar");
            r.type = ValueType::Vector;
        } else if (e->name == "div") {
            if (a.type != ValueType::Vector) throw fail("div needs a vector");
            r.type = ValueType::Scalar;
        } else {
            if (a.type != ValueType::Vector) throw fail("curl needs a vector");
        }
        return r;
    }

    const FieldSystem& s_;
};

void check_binding(const FieldSystem& s, const RepBinding& b, const char* what, bool residual) {
    std::vector<Slot> layout;
    try {
        layout = layout_of(b.label);
    } catch (const UnknownLabel& e) {
        throw DslError(DslError::Kind::Type, 0, 0, e.what());
    }
    if (layout.size() != b.names.size())
        throw DslError(DslError::Kind::Type, 0, 0,
                       std::string(what) + " rep " + b.label.str() + " needs " + std::to_string(layout.size()) +
                           " names for layout " + build_galilei_rep(b.label).layout());
    for (size_t i = 0; i < layout.size(); ++i) {
        const std::string& n = b.names[i].name;
        ValueType t;
        if (residual) {
            const Equation* eq = s.find_equation(n);
            if (!eq) throw DslError(DslError::Kind::Undeclared, 0, 0, "residual rep names unknown equation '" + n + "'");
            t = type_of(s, is_zero_literal(eq->lhs) ? eq->rhs : eq->lhs);
        } else {
            const Decl* d = s.find_symbol(n);
            if (!d) throw DslError(DslError::Kind::Undeclared, 0, 0, std::string(what) + " rep names unknown '" + n + "'");
            t = d->type;
        }
        bool vec = layout[i].kind() == SlotKind::Vector;
        if (vec != (t == ValueType::Vector))
            throw DslError(DslError::Kind::Type, 0, 0,
                           "slot " + std::string(1, layout[i].letter) + " of " + b.label.str() + " is a " +
                               (vec ? "vector" : "scalar") + " but '" + n + "' is not");
    }
}

}  // namespace

bool is_zero_literal(const ExprPtr& e) { return e->op == ExprOp::Num && e->value.is_zero(); }

ExprPtr parse_expr(const std::string& text) { return Parser(text).standalone_expr(); }

FieldSystem parse_system(const std::string& text) {
    Parser p(text);
    FieldSystem s = p.parse();
    check_system(s);
    return s;
}

ValueType type_of(const FieldSystem& s, const ExprPtr& e) {
    return Checker(s).check(e).type;
}

void check_system(const FieldSystem& s) {
    Checker c(s);
    for (auto& eq : s.equations) {
        TypeInfo l = c.check(eq.lhs), r = c.check(eq.rhs);
        if (l.type != r.type && !is_zero_literal(eq.lhs) && !is_zero_literal(eq.rhs))
            throw DslError(DslError::Kind::Type, eq.lhs->line, eq.lhs->col,
                           "equation '" + eq.name + "' equates a scalar and a vector");
    }
    std::set<std::string> seen_fields, seen_sources, seen_eqs;
    for (auto& b : s.field_reps) {
        check_binding(s, b, "field", false);
        for (auto& n : b.names) {
            if (std::none_of(s.fields.begin(), s.fields.end(), [&](const Decl& d) { return d.name == n.name; }))
                throw DslError(DslError::Kind::Type, 0, 0, "field rep names '" + n.name + "', which is not a field");
            if (!seen_fields.insert(n.name).second)
                throw DslError(DslError::Kind::Type, 0, 0, "'" + n.name + "' appears in two rep clauses");
        }
    }
    for (auto& b : s.source_reps) {
        check_binding(s, b, "source", false);
        for (auto& n : b.names) {
            if (std::none_of(s.sources.begin(), s.sources.end(), [&](const Decl& d) { return d.name == n.name; }))
                throw DslError(DslError::Kind::Type, 0, 0, "source rep names '" + n.name + "', which is not a source");
            if (!seen_sources.insert(n.name).second)
                throw DslError(DslError::Kind::Type, 0, 0, "'" + n.name + "' appears in two rep clauses");
        }
    }
    for (auto& b : s.residual_reps) {
        check_binding(s, b, "residual", true);
        for (auto& n : b.names)
            if (!seen_eqs.insert(n.name).second)
                throw DslError(DslError::Kind::Type, 0, 0, "equation '" + n.name + "' appears in two residual reps");
    }
}

std::string print_expr(const ExprPtr& e) { return print(e); }

std::string print_system(const FieldSystem& s) {
    std::ostringstream os;
    auto decls = [&](const char* kw, const std::vector<Decl>& ds, const std::vector<RepBinding>& reps) {
        if (ds.empty()) return;
        os << "  " << kw << " {";
        for (auto& d : ds) os << " " << d.name << ": " << (d.type == ValueType::Scalar ? "scalar" : "vector");
        os << " }\n";
        for (auto& b : reps) os << "  rep " << print_binding(b) << "\n";
    };
    os << "system " << s.name << " {\n";
    decls("fields", s.fields, s.field_reps);
    decls("sources", s.sources, s.source_reps);
    if (!s.params.empty()) {
        os << "  params {";
        for (auto& p : s.params) os << " " << p;
        os << " }\n";
    }
    for (auto& e : s.equations) os << "  eq " << e.name << ": " << print(e.lhs) << " = " << print(e.rhs) << "\n";
    for (auto& b : s.residual_reps) os << "  residual rep " << print_binding(b) << "\n";
    os << "}\n";
    return os.str();
}

namespace dsl {

ExprPtr num(long v) {
    if (v < 0) return make(ExprOp::Neg, "", {num(-v)});
    auto e = std::make_shared<Expr>();
    e->op = ExprOp::Num;
    e->value = Rational(v);
    return e;
}

ExprPtr num(const Rational& v) {
    if (v.sign() < 0) return make(ExprOp::Neg, "", {num(-v)});
    if (!v.is_integer()) {
        auto n = std::make_shared<Expr>();
        n->op = ExprOp::Num;
        n->value = Rational(v.num());
        auto d = std::make_shared<Expr>();
        d->op = ExprOp::Num;
        d->value = Rational(v.den());
        return make(ExprOp::Div, "", {n, d});
    }
    auto e = std::make_shared<Expr>();
    e->op = ExprOp::Num;
    e->value = v;
    return e;
}

ExprPtr id(const std::string& name) { return make(ExprOp::Ident, name, {}); }
ExprPtr call(const std::string& fn, std::vector<ExprPtr> args) { return make(ExprOp::Call, fn, std::move(args)); }
ExprPtr dt(ExprPtr e) { return call("dt", {std::move(e)}); }
ExprPtr grad(ExprPtr e) { return call("grad", {std::move(e)}); }
ExprPtr div(ExprPtr e) { return call("div", {std::move(e)}); }
ExprPtr curl(ExprPtr e) { return call("curl", {std::move(e)}); }
ExprPtr dot(ExprPtr a, ExprPtr b) { return call("dot", {std::move(a), std::move(b)}); }
ExprPtr cross(ExprPtr a, ExprPtr b) { return call("cross", {std::move(a), std::move(b)}); }
ExprPtr operator+(ExprPtr a, ExprPtr b) { return make(ExprOp::Add, "", {std::move(a), std::move(b)}); }
ExprPtr operator-(ExprPtr a, ExprPtr b) { return make(ExprOp::Sub, "", {std::move(a), std::move(b)}); }
ExprPtr operator*(ExprPtr a, ExprPtr b) { return make(ExprOp::Mul, "", {std::move(a), std::move(b)}); }
ExprPtr operator/(ExprPtr a, ExprPtr b) { return make(ExprOp::Div, "", {std::move(a), std::move(b)}); }
ExprPtr operator-(ExprPtr a) { return make(ExprOp::Neg, "", {std::move(a)}); }

}  // namespace dsl

}  // namespace galinv
