#pragma once

#include "galinv/reps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galinv {

// Named contraction matrices V1..V7 over Laurent polynomials in eps
MatLQ standard_matrix(const std::string& name);
std::vector<std::string> standard_matrix_names();

struct ComponentId {
    Identification id;
    std::vector<int> indices;  // component indices of the input basis
};

struct ContractionResult {
    std::array<MatQi, 3> S;
    std::array<MatQi, 3> eta;
    // identification of each indecomposable block; empty if none
    std::vector<ComponentId> blocks;
    std::string label() const;  // e.g. "D(2,0,0)+D(2,0,0)"
};

// S_a = 1/2 eps_abc lim V S_bc V^-1,  eta_a = lim eps V S_0a V^-1.
// Throws SingularLimit if a limit diverges.
ContractionResult contract(const LorentzRep& rep, const MatLQ& V);

// Splits generators into blocks coupled by S and eta and identifies each one
std::vector<ComponentId> identify_components(const std::array<MatQi, 3>& S, const std::array<MatQi, 3>& eta);

// Field substitution old = V new induced by a contraction matrix, slot by
// slot. Each slot (scalar or 3-vector) must map to a combination of slots.
struct FieldSlot {
    std::string name;
    bool vector = true;
};

struct SubstitutionRule {
    std::string old_field;
    std::vector<std::pair<LaurentQ, std::string>> terms;  // sum factor * new_field
    std::string str() const;
};

struct FieldContraction {
    std::vector<SubstitutionRule> rules;
    int time_power = 1;  // d/dx0 = eps^time_power d/dt
};

FieldContraction contract_fields(const std::vector<FieldSlot>& fields, const MatLQ& V,
                                 const std::vector<int>& scaling = {});

}  // namespace galinv
