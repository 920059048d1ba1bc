#include "galinv/contraction.hpp"

#include <map>
#include <numeric>

namespace galinv {

namespace {

LaurentQ eps_pow(int k, const Rational& c = Rational(1)) { return LaurentQ::monomial(k, c); }

MatLQ diag3(const std::vector<std::pair<int, int>>& blocks) {
    // (size, eps power) blocks
    int n = 0;
    for (auto& b : blocks) n += b.first;
    MatLQ m = zeros<LaurentQ>(n, n);
    int o = 0;
    for (auto& [size, k] : blocks) {
        for (int i = 0; i < size; ++i) m(o + i, o + i) = eps_pow(k);
        o += size;
    }
    return m;
}

}  // namespace

std::vector<std::string> standard_matrix_names() { return {"V1", "V2", "V3", "V4", "V5", "V6", "V7"}; }

MatLQ standard_matrix(const std::string& name) {
    if (name == "V1") return diag3({{3, 1}, {1, 0}});
    if (name == "V2") return diag3({{3, 0}, {1, 1}});
    if (name == "V3") {
        MatLQ m = identity<LaurentQ>(5);
        m(3, 3) = eps_pow(1, Rational(-1, 2));
        m(3, 4) = eps_pow(1, Rational(1, 2));
        m(4, 3) = eps_pow(-1);
        m(4, 4) = eps_pow(-1);
        return m;
    }
    if (name == "V4") return diag3({{3, 1}, {3, 0}});
    if (name == "V5") return diag3({{3, 0}, {3, 1}});
    if (name == "V6") return diag3({{3, 1}, {3, 0}, {3, 0}, {3, 1}});
    if (name == "V7") return diag3({{3, 0}, {3, 1}, {3, 1}, {3, 0}});
    throw UnknownLabel("unknown contraction matrix '" + name + "'");
}

std::string ContractionResult::label() const {
    std::string s;
    for (auto& b : blocks) {
        if (!s.empty()) s += "+";
        s += b.id.label.str();
    }
    return s;
}

ContractionResult contract(const LorentzRep& rep, const MatLQ& V) {
    if (V.rows() != rep.dim || V.cols() != rep.dim)
        throw DomainError("contraction matrix is " + std::to_string(V.rows()) + "x" + std::to_string(V.cols()) +
                          " but the representation has dimension " + std::to_string(rep.dim));
    MatLQi Vc = mat_map(V, [](const LaurentQ& p) { return convert_coeffs<Rational, GaussRational>(p); });
    MatLQi Vi = inverse(Vc);
    auto conj_by = [&](const MatQi& X) {
        MatLQi Xl = mat_map(X, [](const GaussRational& z) { return LaurentQi(z); });
        return mat_mul(mat_mul(Vc, Xl), Vi);
    };
    ContractionResult out;
    std::array<std::array<MatQi, 3>, 3> Sbc;
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) Sbc[b][c] = laurent_limit(conj_by(rep.S[b + 1][c + 1]));
    for (int a = 0; a < 3; ++a) {
        MatQi s = zeros<GaussRational>(rep.dim, rep.dim);
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (int e = levi_civita(a, b, c)) s = mat_add(s, mat_scale(Sbc[b][c], GaussRational(Rational(e, 2))));
        out.S[a] = s;
        MatLQi boosted = conj_by(rep.S[0][a + 1]);
        out.eta[a] = laurent_limit(mat_scale(boosted, LaurentQi::eps()));
    }
    try {
        out.blocks = identify_components(out.S, out.eta);
    } catch (const NotARep&) {
        out.blocks.clear();
    }
    return out;
}

std::vector<ComponentId> identify_components(const std::array<MatQi, 3>& S, const std::array<MatQi, 3>& eta) {
    const int d = static_cast<int>(S[0].rows());
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!S[a](i, j).is_zero() || !eta[a](i, j).is_zero()) parent[find(i)] = find(j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < d; ++i) groups[find(i)].push_back(i);
    // order blocks by their first index
    std::vector<std::vector<int>> ordered;
    for (auto& [root, idx] : groups) ordered.push_back(idx);
    std::sort(ordered.begin(), ordered.end());
    std::vector<ComponentId> out;
    for (auto& idx : ordered) {
        const int k = static_cast<int>(idx.size());
        std::array<MatQi, 3> s, e;
        for (int a = 0; a < 3; ++a) {
            s[a] = MatQi(k, k);
            e[a] = MatQi(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    s[a](i, j) = S[a](idx[i], idx[j]);
                    e[a](i, j) = eta[a](idx[i], idx[j]);
                }
        }
        out.push_back({identify_rep(s, e), idx});
    }
    return out;
}

std::string SubstitutionRule::str() const {
    std::string s = old_field + " = ";
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) s += " + ";
        const LaurentQ& f = terms[i].first;
        if (f == LaurentQ(1))
            s += terms[i].second + "'";
        else
            s += "[" + f.str() + "] " + terms[i].second + "'";
    }
    return s;
}

FieldContraction contract_fields(const std::vector<FieldSlot>& fields, const MatLQ& V, const std::vector<int>& scaling) {
    std::vector<int> offs;
    int n = 0;
    for (auto& f : fields) {
        offs.push_back(n);
        n += f.vector ? 3 : 1;
    }
    if (V.rows() != n || V.cols() != n)
        throw DomainError("contraction matrix size " + std::to_string(V.rows()) + " does not match " +
                          std::to_string(n) + " field components");
    if (!scaling.empty() && scaling.size() != fields.size()) throw DomainError("one scaling power per field expected");
    FieldContraction out;
    for (size_t i = 0; i < fields.size(); ++i) {
        SubstitutionRule rule{fields[i].name, {}};
        const int si = fields[i].vector ? 3 : 1;
        for (size_t j = 0; j < fields.size(); ++j) {
            const int sj = fields[j].vector ? 3 : 1;
            // the block must be a multiple of the identity (or of a scalar)
            LaurentQ c = V(offs[i], offs[j]);
            bool zero_block = true;
            for (int p = 0; p < si; ++p)
                for (int q = 0; q < sj; ++q) {
                    const LaurentQ& x = V(offs[i] + p, offs[j] + q);
                    if (!x.is_zero()) zero_block = false;
                    LaurentQ expect = (si == sj && p == q) || (si == 1 && sj == 1) ? c : LaurentQ();
                    if (!(x == expect)) throw DomainError("contraction matrix mixes components of " + fields[i].name);
                }
            if (zero_block) continue;
            if (si != sj) throw DomainError("contraction matrix mixes a vector with a scalar");
            if (!scaling.empty()) c = c * LaurentQ::monomial(scaling[i]);
            rule.terms.emplace_back(c, fields[j].name);
        }
        out.rules.push_back(std::move(rule));
    }
    return out;
}

}  // namespace galinv
