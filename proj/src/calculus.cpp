#include "galinv/calculus.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace galinv {

const VarList& spacetime() {
    static const VarList v = make_vars({"t", "x", "y", "z"});
    return v;
}

PolyQ coord(int mu) { return PolyQ::var(spacetime(), static_cast<size_t>(mu)); }

PolyQ partial(const PolyQ& f, int mu) {
    if (f.nvars() == 0) return {};
    return f.over(spacetime()).derivative(static_cast<size_t>(mu));
}

PolyQ dt(const PolyQ& f) { return partial(f, 0); }

namespace {
void need3(const PolyVec& F, const char* op) {
    if (F.size() != 3) throw DomainError(std::string(op) + " needs 3 components, got " + std::to_string(F.size()));
}
}  // namespace

PolyVec grad(const PolyQ& f) { return {partial(f, 1), partial(f, 2), partial(f, 3)}; }

PolyQ div(const PolyVec& F) {
    need3(F, "div");
    return partial(F[0], 1) + partial(F[1], 2) + partial(F[2], 3);
}

PolyVec curl(const PolyVec& F) {
    need3(F, "curl");
    return {partial(F[2], 2) - partial(F[1], 3), partial(F[0], 3) - partial(F[2], 1),
            partial(F[1], 1) - partial(F[0], 2)};
}

PolyQ dot(const PolyVec& a, const PolyVec& b) {
    need3(a, "dot");
    need3(b, "dot");
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

PolyVec cross(const PolyVec& a, const PolyVec& b) {
    need3(a, "cross");
    need3(b, "cross");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// ---------------------------------------------------------------------------

GalileiMotion GalileiMotion::boost(const Vec3Q& v) {
    GalileiMotion g;
    g.v = v;
    return g;
}

std::array<Rational, 4> GalileiMotion::apply(const std::array<Rational, 4>& tx) const {
    Vec3Q x{tx[1], tx[2], tx[3]};
    Vec3Q rx = rot.apply(x);
    std::array<Rational, 4> r;
    r[0] = tx[0] + a;
    for (int i = 0; i < 3; ++i) r[i + 1] = rx[i] - v[i] * tx[0] + b[i];
    return r;
}

GalileiMotion GalileiMotion::inverse() const {
    GalileiMotion g;
    g.rot = rot.inverse();
    g.a = -a;
    Vec3Q rv = g.rot.apply(v);
    Vec3Q shift;
    for (int i = 0; i < 3; ++i) shift[i] = b[i] + v[i] * a;
    Vec3Q rs = g.rot.apply(shift);
    for (int i = 0; i < 3; ++i) {
        g.v[i] = -rv[i];
        g.b[i] = -rs[i];
    }
    return g;
}

PolyVec GalileiMotion::inverse_map() const {
    GalileiMotion g = inverse();
    PolyVec m(4);
    m[0] = coord(0) + PolyQ(g.a);
    const MatQ& R = g.rot.matrix();
    for (int i = 0; i < 3; ++i) {
        PolyQ s = PolyQ(g.b[i]) - coord(0).scaled(g.v[i]);
        for (int j = 0; j < 3; ++j)
            if (!R(i, j).is_zero()) s += coord(j + 1).scaled(R(i, j));
        m[i + 1] = s;
    }
    return m;
}

bool GalileiMotion::is_identity() const {
    if (!mat_equal(rot.matrix(), identity<Rational>(3)) || !a.is_zero()) return false;
    for (int i = 0; i < 3; ++i)
        if (!v[i].is_zero() || !b[i].is_zero()) return false;
    return true;
}

std::string GalileiMotion::str() const {
    auto vec = [](const Vec3Q& x) { return "(" + x[0].str() + "," + x[1].str() + "," + x[2].str() + ")"; };
    std::string r;
    const MatQ& R = rot.matrix();
    for (int i = 0; i < 3; ++i) {
        r += i ? ";" : "";
        for (int j = 0; j < 3; ++j) r += (j ? "," : "") + R(i, j).str();
    }
    return "v=" + vec(v) + " rot=[" + r + "] a=" + a.str() + " b=" + vec(b);
}

Json GalileiMotion::to_json() const {
    auto vec = [](const Vec3Q& x) { return Json::array({x[0].str(), x[1].str(), x[2].str()}); };
    return Json{{"v", vec(v)}, {"rot", galinv::to_json(rot.matrix())}, {"a", a.str()}, {"b", vec(b)}};
}

GalileiMotion compose(const GalileiMotion& g2, const GalileiMotion& g1) {
    GalileiMotion g;
    g.rot = g2.rot * g1.rot;
    Vec3Q rv = g2.rot.apply(g1.v), rb = g2.rot.apply(g1.b);
    g.a = g1.a + g2.a;
    for (int i = 0; i < 3; ++i) {
        g.v[i] = rv[i] + g2.v[i];
        g.b[i] = rb[i] + g2.b[i] - g2.v[i] * g1.a;
    }
    return g;
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    // splitmix64 finaliser over the pair
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {
Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return Rational(num(rng), den(rng));
}
}  // namespace

GalileiMotion random_motion(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> q(-3, 3);
    GalileiMotion g;
    long a, b, c, d;
    do {
        a = q(rng), b = q(rng), c = q(rng), d = q(rng);
    } while (a == 0 && b == 0 && c == 0 && d == 0);
    g.rot = Rotation::from_quaternion(a, b, c, d);
    for (int i = 0; i < 3; ++i) g.v[i] = random_rational(rng);
    g.a = random_rational(rng);
    for (int i = 0; i < 3; ++i) g.b[i] = random_rational(rng);
    return g;
}

PolyQ random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<long> c(-5, 5);
    PolyQ p;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j)
            for (int k = 0; i + j + k <= degree; ++k)
                for (int l = 0; i + j + k + l <= degree; ++l) {
                    long v = c(rng);
                    if (v == 0) continue;
                    Exponents e{static_cast<char>(i), static_cast<char>(j), static_cast<char>(k), static_cast<char>(l)};
                    p += PolyQ::monomial(spacetime(), e, Rational(v));
                }
    return p;
}

// ---------------------------------------------------------------------------

FieldMultiplet make_multiplet(const RepLabel& label, PolyVec components) {
    FieldMultiplet m{build_galilei_rep(label), std::move(components)};
    if (static_cast<int>(m.components.size()) != m.rep.dim())
        throw DomainError("multiplet " + label.str() + " needs " + std::to_string(m.rep.dim()) + " components, got " +
                          std::to_string(m.components.size()));
    return m;
}

namespace {

PolyVec apply_action(const MatQ& action, const PolyVec& f) {
    PolyVec r(f.size());
    for (Eigen::Index i = 0; i < action.rows(); ++i)
        for (Eigen::Index j = 0; j < action.cols(); ++j)
            if (!action(i, j).is_zero() && !f[j].is_zero()) r[i] += f[j].scaled(action(i, j));
    return r;
}

PolyVec compose_inverse(Substitution<Rational>& sub, const PolyVec& f) {
    PolyVec r;
    r.reserve(f.size());
    for (auto& p : f) r.push_back(sub.apply(p));
    return r;
}

PolyVec pullback_with(Substitution<Rational>& sub, const PolyVec& f, const MatQ& action) {
    return apply_action(action, compose_inverse(sub, f));
}

}  // namespace

PolyVec pullback(const PolyVec& f, const MatQ& action, const GalileiMotion& g) {
    if (action.rows() != static_cast<Eigen::Index>(f.size()) || action.cols() != action.rows())
        throw DomainError("action size does not match the multiplet");
    Substitution<Rational> sub(spacetime(), g.inverse_map());
    return pullback_with(sub, f, action);
}

FieldMultiplet pullback(const FieldMultiplet& m, const GalileiMotion& g) {
    MatQ action = mat_mul(m.rep.boost(g.v), m.rep.rotation(g.rot));
    return {m.rep, pullback(m.components, action, g)};
}

MatQ galilei_action(const std::vector<Decl>& layout, const std::vector<RepBinding>& reps, const Rotation& rot,
                    const Vec3Q& v) {
    std::map<std::string, int> offset;
    int n = 0;
    for (auto& d : layout) {
        offset[d.name] = n;
        n += d.type == ValueType::Vector ? 3 : 1;
    }
    MatQ A = zeros<Rational>(n, n);
    std::map<std::string, bool> bound;
    for (auto& b : reps)
        for (auto& s : b.names) bound[s.name] = true;
    for (auto& d : layout) {
        if (bound.count(d.name)) continue;
        int o = offset[d.name];
        if (d.type == ValueType::Vector)
            A.block(o, o, 3, 3) = rot.matrix();
        else
            A(o, o) = Rational(1);
    }
    for (auto& b : reps) {
        GalileiRep rep = build_galilei_rep(b.label);
        MatQ L = mat_mul(rep.boost(v), rep.rotation(rot));
        for (size_t i = 0; i < rep.slots.size(); ++i)
            for (size_t j = 0; j < rep.slots.size(); ++j) {
                auto oi = offset.find(b.names[i].name), oj = offset.find(b.names[j].name);
                if (oi == offset.end() || oj == offset.end())
                    throw DomainError("rep binding names an unknown quantity");
                Rational sign(b.names[i].sign * b.names[j].sign);
                for (int r = 0; r < rep.slots[i].size(); ++r)
                    for (int c = 0; c < rep.slots[j].size(); ++c)
                        A(oi->second + r, oj->second + c) = sign * L(rep.offset(i) + r, rep.offset(j) + c);
            }
    }
    return A;
}

std::vector<Decl> residual_layout(const CompiledSystem& sys) {
    std::vector<Decl> l;
    for (auto& r : sys.residuals) l.push_back({r.equation, r.type});
    return l;
}

namespace {
size_t field_count(const CompiledSystem& sys) {
    size_t nf = 0;
    for (auto& c : sys.space.components) nf += c.source ? 0 : 1;
    return nf;
}

PolyVec evaluate_all(const CompiledSystem& sys, const std::vector<PolyQ>& x) {
    PolyVec out;
    for (auto& r : sys.residuals)
        for (auto& p : r.components) out.push_back(p.evaluate(x));
    return out;
}
}  // namespace

std::vector<PolyQ> jet_values(const JetSpace& js, const PolyVec& inputs, const ParamValues& params) {
    if (inputs.size() != js.components.size())
        throw DomainError("expected " + std::to_string(js.components.size()) + " field and source components, got " +
                          std::to_string(inputs.size()));
    std::vector<PolyQ> x(js.vars->size());
    for (size_t i = 0; i < js.params.size(); ++i) {
        auto it = params.find(js.params[i]);
        if (it == params.end()) throw DomainError("missing value for parameter " + js.params[i]);
        x[i] = PolyQ(it->second);
    }
    for (size_t c = 0; c < js.components.size(); ++c) {
        x[js.value_var(c)] = inputs[c];
        for (int mu = 0; mu < 4; ++mu) x[js.deriv_var(c, mu)] = partial(inputs[c], mu);
    }
    return x;
}

std::vector<PolyQ> jet_values(const CompiledSystem& sys, const PolyVec& inputs, const ParamValues& params) {
    try {
        return jet_values(sys.space, inputs, params);
    } catch (const DomainError& e) {
        throw DomainError("system " + sys.system.name + ": " + e.what());
    }
}

PolyVec residuals(const CompiledSystem& sys, const PolyVec& fields, const PolyVec& sources, const ParamValues& params) {
    const size_t nf = field_count(sys);
    if (fields.size() != nf || sources.size() != sys.space.components.size() - nf)
        throw DomainError("system " + sys.system.name + " expects " + std::to_string(nf) + " field and " +
                          std::to_string(sys.space.components.size() - nf) + " source components");
    PolyVec in = fields;
    in.insert(in.end(), sources.begin(), sources.end());
    return evaluate_all(sys, jet_values(sys, in, params));
}

namespace {

struct Actions {
    MatQ in, out;
};

Actions system_actions(const CompiledSystem& sys, const GalileiMotion& g) {
    std::vector<Decl> in_layout = sys.system.fields;
    in_layout.insert(in_layout.end(), sys.system.sources.begin(), sys.system.sources.end());
    std::vector<RepBinding> in_reps = sys.system.field_reps;
    in_reps.insert(in_reps.end(), sys.system.source_reps.begin(), sys.system.source_reps.end());
    return {galilei_action(in_layout, in_reps, g.rot, g.v),
            galilei_action(residual_layout(sys), sys.system.residual_reps, g.rot, g.v)};
}

}  // namespace

std::vector<PolyQ> jet_images(const JetSpace& js, const MatQ& action, const GalileiMotion& g) {
    // J(nu, mu) = dY_nu / dX_mu for Y = g^-1 X
    PolyVec inv = g.inverse_map();
    Rational J[4][4];
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu) J[nu][mu] = partial(inv[nu], mu).constant_term();
    std::vector<PolyQ> images(js.vars->size());
    for (size_t i = 0; i < js.params.size(); ++i) images[i] = PolyQ::var(js.vars, i);
    const size_t nc = js.components.size();
    for (size_t c = 0; c < nc; ++c) {
        PolyQ val;
        for (size_t d = 0; d < nc; ++d)
            if (!action(c, d).is_zero()) val += PolyQ::var(js.vars, js.value_var(d)).scaled(action(c, d));
        images[js.value_var(c)] = val;
        for (int mu = 0; mu < 4; ++mu) {
            PolyQ der;
            for (size_t d = 0; d < nc; ++d) {
                if (action(c, d).is_zero()) continue;
                for (int nu = 0; nu < 4; ++nu)
                    if (!J[nu][mu].is_zero())
                        der += PolyQ::var(js.vars, js.deriv_var(d, nu)).scaled(action(c, d) * J[nu][mu]);
            }
            images[js.deriv_var(c, mu)] = der;
        }
    }
    return images;
}

PolyVec covariance_defect(const CompiledSystem& sys, const GalileiMotion& g) {
    const JetSpace& js = sys.space;
    Actions A = system_actions(sys, g);
    std::vector<PolyQ> images = jet_images(js, A.in, g);
    Substitution<Rational> sub(js.vars, std::move(images));
    PolyVec base;
    for (auto& r : sys.residuals)
        for (auto& p : r.components) base.push_back(p);
    PolyVec defect;
    for (size_t k = 0; k < base.size(); ++k) {
        PolyQ d = sub.apply(base[k]);
        for (size_t l = 0; l < base.size(); ++l)
            if (!A.out(k, l).is_zero()) d -= base[l].scaled(A.out(k, l));
        defect.push_back(d);
    }
    return defect;
}

// ---------------------------------------------------------------------------

int default_threads() {
    if (const char* s = std::getenv("GALINV_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

Json CovarianceReport::to_json() const {
    Json j{{"system", system},
           {"pass", pass},
           {"trials", trials},
           {"motions", motions},
           {"seed", seed},
           {"mode", mode == CovarianceMode::Jet ? "jet" : "direct"}};
    if (mode == CovarianceMode::Jet) j["defect_zero"] = defect_zero;
    if (counterexample) {
        const auto& c = *counterexample;
        Json p = Json::object();
        for (auto& [k, v] : c.params) p[k] = v.str();
        j["counterexample"] = Json{{"motion", c.motion.to_json()}, {"trial", c.trial},         {"params", p},
                                   {"equation", c.equation},       {"component", c.component}, {"mismatch", c.mismatch.str()}};
    }
    return j;
}

CovarianceReport covariance_check(const CompiledSystem& sys, const CovarianceOptions& opt) {
    CovarianceReport rep;
    rep.system = sys.system.name;
    rep.trials = opt.trials;
    rep.motions = opt.motion ? 1 : opt.motions;
    rep.seed = opt.seed;
    rep.mode = opt.mode;
    const size_t nf = field_count(sys);
    const size_t nin = sys.space.components.size();

    struct Outcome {
        std::optional<Counterexample> cex;
        bool defect_zero = true;
    };
    std::vector<Outcome> found(rep.motions);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int mi; (mi = next++) < rep.motions;) {
            std::mt19937_64 mrng(derive_seed(opt.seed, static_cast<uint64_t>(mi)));
            GalileiMotion g = opt.motion ? *opt.motion : random_motion(mrng);
            Actions A = system_actions(sys, g);
            Substitution<Rational> sub(spacetime(), g.inverse_map());
            PolyVec defect;
            bool zero = true;
            if (opt.mode == CovarianceMode::Jet) {
                defect = covariance_defect(sys, g);
                for (auto& d : defect) zero = zero && d.is_zero();
                found[mi].defect_zero = zero;
            }
            for (int t = 0; t < opt.trials; ++t) {
                std::mt19937_64 rng(derive_seed(opt.seed ^ 0x5bd1e995ULL, static_cast<uint64_t>(mi) * 100003ULL + t));
                PolyVec in(nin);
                for (auto& p : in) p = random_poly(rng, opt.degree);
                ParamValues params;
                if (opt.params)
                    params = *opt.params;
                else {
                    std::uniform_int_distribution<long> pd(1, 5), sg(0, 1);
                    for (auto& p : sys.space.params) params[p] = Rational(pd(rng) * (sg(rng) ? 1 : -1));
                }
                PolyVec diff;
                if (opt.mode == CovarianceMode::Jet) {
                    if (zero) continue;  // the defect evaluates to zero on every input
                    std::vector<PolyQ> x = jet_values(sys, in, params);
                    for (auto& d : defect) diff.push_back(sub.apply(d.evaluate(x)));
                } else {
                    PolyVec moved = pullback_with(sub, in, A.in);
                    PolyVec lhs = residuals(sys, PolyVec(moved.begin(), moved.begin() + nf),
                                            PolyVec(moved.begin() + nf, moved.end()), params);
                    PolyVec rhs = pullback_with(
                        sub, residuals(sys, PolyVec(in.begin(), in.begin() + nf), PolyVec(in.begin() + nf, in.end()), params),
                        A.out);
                    for (size_t k = 0; k < lhs.size(); ++k) diff.push_back(lhs[k] - rhs[k]);
                }
                for (size_t k = 0; k < diff.size(); ++k) {
                    if (diff[k].is_zero()) continue;
                    Counterexample c;
                    c.motion = g;
                    c.trial = t;
                    c.params = params;
                    size_t off = 0;
                    for (auto& r : sys.residuals) {
                        if (k < off + r.components.size()) {
                            c.equation = r.equation;
                            c.component = static_cast<int>(k - off);
                            break;
                        }
                        off += r.components.size();
                    }
                    c.mismatch = diff[k];
                    found[mi].cex = c;
                    break;
                }
                if (found[mi].cex) break;
            }
        }
    };
    int nt = std::max(1, std::min(opt.threads > 0 ? opt.threads : default_threads(), rep.motions));
    if (nt == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& f : found) {
        rep.defect_zero = rep.defect_zero && f.defect_zero;
        if (f.cex && !rep.counterexample) {
            rep.pass = false;
            rep.counterexample = f.cex;
        }
    }
    return rep;
}

}  // namespace galinv
