#include "galinv/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace galinv {

namespace {

struct Block {
    int row, rows;
};

std::vector<Block> blocks_of(const std::vector<SlotKind>& kinds) {
    std::vector<Block> b;
    int o = 0;
    for (auto k : kinds) {
        int n = k == SlotKind::Vector ? 3 : 1;
        b.push_back({o, n});
        o += n;
    }
    return b;
}

MatQ sub_block(const MatQ& m, const Block& r, const Block& c) { return m.block(r.row, c.row, r.rows, c.rows); }

// r with a = r b, or nullopt when a and b are not proportional or both zero
std::optional<Rational> ratio(const MatQ& a, const MatQ& b) {
    std::optional<Rational> r;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const Rational &x = a(i, j), &y = b(i, j);
            if (x.is_zero() != y.is_zero()) return std::nullopt;
            if (x.is_zero()) continue;
            Rational q = x / y;
            if (r && *r != q) return std::nullopt;
            r = q;
        }
    return r;
}

bool is_zero_block(const MatQ& m) { return is_zero_matrix(m); }

// Real boost generators X_a = i eta_a of a catalog rep
std::array<MatQ, 3> catalog_X(const GalileiRep& rep) {
    std::array<MatQ, 3> X;
    for (int a = 0; a < 3; ++a)
        X[a] = mat_map(rep.eta[a], [](const GaussRational& z) { return -z.im(); });
    return X;
}

bool match_with(const std::vector<SlotKind>& kinds, const std::array<MatQ, 3>& X, const GalileiRep& cat,
                const std::vector<int>& perm) {
    // slot s of the catalog rep corresponds to slot perm[s] of the candidate
    auto cb = blocks_of([&] {
        std::vector<SlotKind> k;
        for (auto& s : cat.slots) k.push_back(s.kind());
        return k;
    }());
    auto xb = blocks_of(kinds);
    std::array<MatQ, 3> Y = catalog_X(cat);
    const size_t n = perm.size();
    // c[s] / c[t] = ratio on every coupled pair
    std::vector<std::vector<std::optional<Rational>>> rel(n, std::vector<std::optional<Rational>>(n));
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t) {
            std::optional<Rational> r;
            for (int a = 0; a < 3; ++a) {
                MatQ y = sub_block(Y[a], cb[s], cb[t]);
                MatQ x = sub_block(X[a], xb[perm[s]], xb[perm[t]]);
                if (is_zero_block(y) && is_zero_block(x)) continue;
                auto q = ratio(y, x);
                if (!q || (r && *r != *q)) return false;
                r = q;
            }
            rel[s][t] = r;
        }
    std::vector<std::optional<Rational>> c(n);
    for (size_t root = 0; root < n; ++root) {
        if (c[root]) continue;
        c[root] = Rational(1);
        std::vector<size_t> stack{root};
        while (!stack.empty()) {
            size_t s = stack.back();
            stack.pop_back();
            for (size_t t = 0; t < n; ++t) {
                // c_s = r c_t along s -> t, c_t = r c_s along t -> s
                std::optional<Rational> want;
                if (rel[s][t]) want = *c[s] / *rel[s][t];
                if (rel[t][s]) {
                    Rational w = *rel[t][s] * *c[s];
                    if (want && *want != w) return false;
                    want = w;
                }
                if (!want) continue;
                if (c[t]) {
                    if (*c[t] != *want) return false;
                } else {
                    c[t] = want;
                    stack.push_back(t);
                }
            }
        }
    }
    return true;
}

}  // namespace

std::optional<std::string> identify_scaled(const std::vector<SlotKind>& kinds, const std::array<MatQ, 3>& X) {
    const int nv = static_cast<int>(std::count(kinds.begin(), kinds.end(), SlotKind::Vector));
    const int ns = static_cast<int>(kinds.size()) - nv;
    for (auto& label : catalog_labels()) {
        if (label.m != nv || label.n != ns) continue;
        GalileiRep cat = build_galilei_rep(label);
        std::vector<int> perm(kinds.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool kinds_ok = true;
            for (size_t s = 0; s < perm.size(); ++s) kinds_ok = kinds_ok && cat.slots[s].kind() == kinds[perm[s]];
            if (kinds_ok && match_with(kinds, X, cat, perm)) return label.str();
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

namespace {

struct Multiplet {
    RepLabel label;
    std::vector<SignedName> names;  // in layout order
    std::string str() const {
        std::string s = label.str() + " on (";
        for (size_t i = 0; i < names.size(); ++i)
            s += (i ? ", " : "") + std::string(names[i].sign < 0 ? "-" : "") + names[i].name;
        return s + ")";
    }
};

std::vector<Multiplet> field_multiplets(const FieldSystem& s) {
    std::vector<Multiplet> out;
    std::set<std::string> bound;
    for (auto& b : s.field_reps) {
        out.push_back({b.label, b.names});
        for (auto& n : b.names) bound.insert(n.name);
    }
    for (auto& d : s.fields)
        if (!bound.count(d.name))
            out.push_back({d.type == ValueType::Vector ? RepLabel{1, 0, 0} : RepLabel{0, 1, 0}, {{1, d.name}}});
    return out;
}

// Forms of the appendix table for a multiplet, expressed over the system jets
std::vector<std::pair<std::string, std::vector<PolyQ>>> multiplet_forms(const Multiplet& m, const JetSpace& js) {
    std::vector<Slot> layout = layout_of(m.label);
    FieldSystem letters = letter_system(layout);
    JetSpace jl = make_jet_space(letters);
    std::vector<PolyQ> images(jl.vars->size());
    for (size_t i = 0; i < layout.size(); ++i) {
        size_t cl = jl.component_of(std::string(1, layout[i].letter));
        size_t cs = js.component_of(m.names[i].name);
        Rational sg(m.names[i].sign);
        for (int k = 0; k < layout[i].size(); ++k) {
            images[jl.value_var(cl + k)] = PolyQ::var(js.vars, js.value_var(cs + k)).scaled(sg);
            for (int mu = 0; mu < 4; ++mu)
                images[jl.deriv_var(cl + k, mu)] = PolyQ::var(js.vars, js.deriv_var(cs + k, mu)).scaled(sg);
        }
    }
    Substitution<Rational> sub(jl.vars, std::move(images));
    std::set<std::string> names;
    for (auto& set : vector_form_sets())
        if (set.context == m.label.str())
            for (auto& n : set.members) names.insert(n);
    std::vector<std::pair<std::string, std::vector<PolyQ>>> out;
    for (auto& f : form_library()) {
        if (!names.count(f.name)) continue;
        std::vector<PolyQ> comps;
        for (auto& p : compile_form(f, letters, jl)) comps.push_back(sub.apply(p));
        out.emplace_back(f.name, std::move(comps));
    }
    return out;
}

std::optional<Rational> scale_between(const std::vector<PolyQ>& a, const std::vector<PolyQ>& b) {
    // a = r b
    if (a.size() != b.size()) return std::nullopt;
    std::optional<Rational> r;
    for (size_t i = 0; i < a.size() && !r; ++i)
        if (!b[i].is_zero()) {
            auto& [e, c] = *b[i].terms().begin();
            auto it = a[i].terms().find(e);
            if (it == a[i].terms().end()) return std::nullopt;
            r = it->second / c;
        }
    if (!r) return std::nullopt;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] - b[i].scaled(*r)).is_zero()) return std::nullopt;
    return r;
}

enum class PartKind { Linear, ParamCoefficient, Nonlinear };

// Terms of a residual component that contain a field variable
PolyQ field_part(const JetSpace& js, const PolyQ& p, PartKind& kind) {
    PolyQ out;
    for (auto& [e, c] : p.terms()) {
        int field_deg = 0, other_deg = 0;
        bool param = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            int d = static_cast<unsigned char>(e[i]);
            if (i < js.params.size()) {
                param = true;
                continue;
            }
            if (js.components[js.comp_of_var(i)].source)
                other_deg += d;
            else
                field_deg += d;
        }
        if (field_deg + other_deg > 1) kind = PartKind::Nonlinear;
        if (field_deg == 0) continue;
        if (param && kind == PartKind::Linear) kind = PartKind::ParamCoefficient;
        out += PolyQ::monomial(js.vars, e, c);
    }
    return out;
}

}  // namespace

std::vector<std::string> ClassificationReport::matched_forms() const {
    std::vector<std::string> out;
    for (auto& m : matches)
        if (!m.form.empty()) out.push_back(m.form);
    return out;
}

ClassificationReport classify(const FieldSystem& s, const CovarianceOptions& opt) {
    CompiledSystem cs = compile_system(s);
    const JetSpace& js = cs.space;
    ClassificationReport rep;
    rep.system = s.name;

    std::vector<std::vector<PolyQ>> parts;
    std::vector<PartKind> kinds;
    for (auto& r : cs.residuals) {
        PartKind k = PartKind::Linear;
        std::vector<PolyQ> comps;
        for (auto& p : r.components) comps.push_back(field_part(js, p, k));
        if (k == PartKind::Nonlinear) rep.linear = false;
        parts.push_back(std::move(comps));
        kinds.push_back(k);
    }

    if (rep.linear) {
        auto multiplets = field_multiplets(s);
        std::vector<std::pair<Multiplet, std::vector<std::pair<std::string, std::vector<PolyQ>>>>> table;
        for (auto& m : multiplets) table.emplace_back(m, multiplet_forms(m, js));
        for (size_t i = 0; i < cs.residuals.size(); ++i) {
            FormMatch fm;
            fm.equation = cs.residuals[i].equation;
            bool zero = std::all_of(parts[i].begin(), parts[i].end(), [](const PolyQ& p) { return p.is_zero(); });
            if (zero)
                fm.reason = "no field terms";
            else if (kinds[i] == PartKind::ParamCoefficient)
                fm.reason = "field terms carry parameters";
            for (auto& [m, forms] : table) {
                if (!fm.reason.empty() || !fm.form.empty()) break;
                for (auto& [name, comps] : forms)
                    if (auto r = scale_between(parts[i], comps)) {
                        fm.form = name;
                        fm.multiplet = m.str();
                        fm.scale = *r;
                        break;
                    }
            }
            if (fm.form.empty() && fm.reason.empty()) fm.reason = "no appendix form matches";
            rep.matches.push_back(fm);
        }

        // closure of the field parts and the representation they carry
        std::vector<PolyQ> flat;
        std::vector<SlotKind> slot_kinds;
        std::vector<std::string> slot_eq;
        bool usable = true;
        for (size_t i = 0; i < parts.size(); ++i) {
            bool zero = std::all_of(parts[i].begin(), parts[i].end(), [](const PolyQ& p) { return p.is_zero(); });
            if (zero) continue;
            if (kinds[i] != PartKind::Linear) usable = false;
            for (auto& p : parts[i]) flat.push_back(p);
            slot_kinds.push_back(parts[i].size() == 3 ? SlotKind::Vector : SlotKind::Scalar);
            slot_eq.push_back(cs.residuals[i].equation);
        }
        if (usable && !flat.empty()) {
            std::vector<Decl> layout = s.fields;
            layout.insert(layout.end(), s.sources.begin(), s.sources.end());
            std::vector<RepBinding> reps = s.field_reps;
            reps.insert(reps.end(), s.source_reps.begin(), s.source_reps.end());
            ComponentAction act = [&](const Rotation& r, const Vec3Q& v) { return galilei_action(layout, reps, r, v); };
            SpanTest t = span_closed(js, flat, act);
            rep.closed = t.closed;
            rep.closure_detail = t.detail;
            if (t.closed) {
                auto X = boost_generators(js, flat, act);
                if (!X) {
                    rep.closure_detail = "field parts are linearly dependent; representation not identified";
                } else {
                    // split into blocks coupled by the generators
                    auto bl = blocks_of(slot_kinds);
                    const size_t n = slot_kinds.size();
                    std::vector<int> comp(n, -1);
                    int nc = 0;
                    for (size_t r = 0; r < n; ++r) {
                        if (comp[r] >= 0) continue;
                        std::vector<size_t> st{r};
                        comp[r] = nc;
                        while (!st.empty()) {
                            size_t i = st.back();
                            st.pop_back();
                            for (size_t j = 0; j < n; ++j) {
                                bool coupled = false;
                                for (int a = 0; a < 3; ++a)
                                    coupled = coupled || !is_zero_block(sub_block((*X)[a], bl[i], bl[j])) ||
                                              !is_zero_block(sub_block((*X)[a], bl[j], bl[i]));
                                if (coupled && comp[j] < 0) {
                                    comp[j] = nc;
                                    st.push_back(j);
                                }
                            }
                        }
                        ++nc;
                    }
                    for (int c = 0; c < nc; ++c) {
                        std::vector<size_t> idx;
                        for (size_t i = 0; i < n; ++i)
                            if (comp[i] == c) idx.push_back(i);
                        std::vector<SlotKind> k;
                        std::vector<Block> sb;
                        int dim = 0;
                        for (size_t i : idx) {
                            k.push_back(slot_kinds[i]);
                            sb.push_back(bl[i]);
                            dim += bl[i].rows;
                        }
                        std::array<MatQ, 3> Xs;
                        for (int a = 0; a < 3; ++a) {
                            Xs[a] = zeros<Rational>(dim, dim);
                            int ro = 0;
                            for (size_t p = 0; p < idx.size(); ++p) {
                                int co = 0;
                                for (size_t q = 0; q < idx.size(); ++q) {
                                    Xs[a].block(ro, co, sb[p].rows, sb[q].rows) = sub_block((*X)[a], sb[p], sb[q]);
                                    co += sb[q].rows;
                                }
                                ro += sb[p].rows;
                            }
                        }
                        RepBlock b;
                        b.label = identify_scaled(k, Xs).value_or("unidentified");
                        for (size_t i : idx) b.equations.push_back(slot_eq[i]);
                        rep.residual_rep.push_back(b);
                    }
                }
            }
        }
    }

    rep.covariance = covariance_check(cs, opt);
    rep.covariant = rep.covariance.pass;
    if (!rep.covariant) {
        const std::vector<Vec3Q> boosts = {{Rational(1), Rational(0), Rational(0)},
                                           {Rational(0), Rational(1), Rational(0)},
                                           {Rational(0), Rational(0), Rational(1)},
                                           {Rational(1), Rational(-2), Rational(3)}};
        for (auto& v : boosts) {
            CovarianceOptions o = opt;
            o.motion = GalileiMotion::boost(v);
            o.trials = std::min(opt.trials, 5);
            CovarianceReport r = covariance_check(cs, o);
            if (!r.pass) {
                rep.counterexample_boost = r.counterexample;
                break;
            }
        }
    }
    return rep;
}

Json ClassificationReport::to_json() const {
    Json m = Json::array();
    for (auto& x : matches) {
        Json j{{"equation", x.equation}};
        if (x.form.empty()) {
            j["form"] = nullptr;
            j["reason"] = x.reason;
        } else {
            j["form"] = x.form;
            j["multiplet"] = x.multiplet;
            j["scale"] = x.scale.str();
        }
        m.push_back(j);
    }
    Json rr = Json::array();
    for (auto& b : residual_rep) rr.push_back(Json{{"label", b.label}, {"equations", b.equations}});
    Json j{{"system", system}, {"linear", linear}, {"matches", m}};
    if (closed) {
        j["closed"] = *closed;
        if (!closure_detail.empty()) j["closure_detail"] = closure_detail;
    } else {
        j["closed"] = nullptr;
    }
    j["residual_rep"] = rr;
    j["covariant"] = covariant;
    j["covariance"] = covariance.to_json();
    if (counterexample_boost) {
        const auto& c = *counterexample_boost;
        Json v = Json::array();
        for (auto& x : c.motion.v) v.push_back(x.str());
        j["counterexample_boost"] = Json{{"v", v}, {"equation", c.equation}, {"component", c.component},
                                         {"mismatch", c.mismatch.str()}};
    }
    return j;
}

}  // namespace galinv
