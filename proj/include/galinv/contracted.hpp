#pragma once

#include "galinv/contraction.hpp"
#include "galinv/jet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galinv {

struct ContractedEquation {
    std::string equation;
    int order = 0;  // lowest power of eps
    ValueType type;
    std::vector<PolyQ> leading;
};

struct ContractedSystem {
    FieldSystem scaled;  // equations after substitution, with params eps and eps_inv
    JetSpace space;      // jets of the contracted fields, without eps
    std::vector<ContractedEquation> equations;
};

// Substitutes the rules of a field contraction into every equation (each
// derivative in time gains eps^time_power) and keeps the lowest order in eps
ContractedSystem contract_system(const FieldSystem& s, const FieldContraction& fc);

struct Correspondence {
    std::string equation;
    std::string target;
    int sign = 1;  // leading = sign * target residual
};

// One target residual per contracted equation, equal up to sign; nullopt if
// some equation has no counterpart
std::optional<std::vector<Correspondence>> match_residuals(const ContractedSystem& c, const FieldSystem& target);

}  // namespace galinv
