#pragma once

#include "galinv/calculus.hpp"
#include "galinv/linsolve.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace galinv {

// ---------------------------------------------------------------------------
// Linear forms on a jet space

// Linear action on the components of a jet space for a rotation and boost
using ComponentAction = std::function<MatQ(const Rotation&, const Vec3Q&)>;

// Coefficients of a linear jet polynomial; throws DomainError when the
// polynomial is not linear and homogeneous in the component coordinates
SparseVec linear_coefficients(const JetSpace& js, const PolyQ& p);

struct SpanTest {
    bool closed = true;
    std::string detail;  // first form leaving the span
};

// Whether span{forms} is mapped into itself by the induced action on jets.
// Boosts are checked through their exact infinitesimal generators, rotations
// at fixed rational rotations.
SpanTest span_closed(const JetSpace& js, const std::vector<PolyQ>& forms, const ComponentAction& action);

// Matrices X_a with  f_k o Phi(exp(s e_a)) = f_k + s sum_l X_a(k, l) f_l + O(s^2)
// for linearly independent forms f_k spanning a closed space. nullopt if the
// span is not closed or the forms are dependent.
std::optional<std::array<MatQ, 3>> boost_generators(const JetSpace& js, const std::vector<PolyQ>& forms,
                                                    const ComponentAction& action);

// ---------------------------------------------------------------------------
// Library of covariant differential forms

enum class FormKind { Scalar, Vector, Tensor };
std::string kind_name(FormKind k);

struct FormDef {
    std::string name;
    FormKind kind;
    std::string formula;  // DSL expression over slot letters; sym(X) = grad_a X_b + grad_b X_a
    std::vector<char> letters() const;
};

const std::vector<FormDef>& form_library();
const FormDef& form_def(const std::string& name);

struct FormSet {
    std::string context;  // representation label, or "tensor"
    std::vector<std::string> members;
    bool unverifiable = false;
    std::string note;
    std::string str() const;  // e.g. "{W2, R2}"
};

// Bracketed sets per representation, in appendix order
const std::vector<FormSet>& vector_form_sets();
// Sets containing tensorial forms
const std::vector<FormSet>& tensor_form_sets();

// Letters A, B, C (scalars) and R, U, W, K, N (vectors) in one multiplet;
// each letter transforms by its own boost law
const GalileiRep& universal_multiplet();

struct EvaluatedForm {
    std::string name;
    FormKind kind;
    std::string formula;
    PolyVec value;  // tensors: components 11, 12, 13, 22, 23, 33
};

// Forms listed for a representation, plus the tensorial and auxiliary forms
// whose letters all belong to its layout, evaluated on a multiplet
std::vector<EvaluatedForm> covariant_forms(const RepLabel& label, const PolyVec& fields);
// Names of the forms covariant_forms returns for a label
std::vector<std::string> forms_for(const RepLabel& label);

// Fields named by slot letters, in layout order
FieldSystem letter_system(const std::vector<Slot>& slots);

// Jet polynomials of a form over a jet space whose fields are named by
// slot letters, components in order
std::vector<PolyQ> compile_form(const FormDef& f, const FieldSystem& letters, const JetSpace& js);

struct ClosureResult {
    FormSet set;
    std::string status;  // "closed", "not closed", "unverifiable"
    std::string detail;
    Json to_json() const;
};

ClosureResult closure_test(const FormSet& s);
std::vector<ClosureResult> appendix_closure();

}  // namespace galinv
