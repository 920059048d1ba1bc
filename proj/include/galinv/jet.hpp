#pragma once

#include "galinv/system.hpp"

#include <string>
#include <vector>

namespace galinv {

// Coordinates of the first jet space of a system. Variables are laid out as
// params first, then per component c the value and its four derivatives
// (t, x, y, z).
struct JetSpace {
    struct Component {
        std::string symbol;
        int index;  // 0 for scalars, 0..2 for vectors
        bool source;
    };
    std::vector<std::string> params;
    std::vector<Component> components;
    VarList vars;

    size_t param_var(const std::string& p) const;
    size_t value_var(size_t comp) const { return params.size() + 5 * comp; }
    size_t deriv_var(size_t comp, int mu) const { return params.size() + 5 * comp + 1 + mu; }
    // first component index of a declared symbol
    size_t component_of(const std::string& symbol) const;
    size_t component_count() const { return components.size(); }
    bool is_deriv_var(size_t v) const { return v >= params.size() && (v - params.size()) % 5 != 0; }
    size_t comp_of_var(size_t v) const { return (v - params.size()) / 5; }
};

JetSpace make_jet_space(const FieldSystem& s);

// A residual lhs - rhs, one jet polynomial per component
struct Residual {
    std::string equation;
    ValueType type;
    std::vector<PolyQ> components;
};

struct CompiledSystem {
    FieldSystem system;
    JetSpace space;
    std::vector<Residual> residuals;

    size_t residual_component_count() const;
    // offset of a given equation in the flattened residual vector
    size_t residual_offset(const std::string& eq) const;
};

// Evaluates each equation to jet polynomials. Type errors are reported as
// DslError, with the position of the offending term.
CompiledSystem compile_system(const FieldSystem& s);

// Value of an expression over the jet space, 1 or 3 components
std::vector<PolyQ> compile_expr(const FieldSystem& s, const JetSpace& space, const ExprPtr& e);

// Total derivative D_mu of a jet polynomial containing no derivative
// variables. mu = 0 is time.
PolyQ total_derivative(const JetSpace& space, const PolyQ& p, int mu);

}  // namespace galinv
