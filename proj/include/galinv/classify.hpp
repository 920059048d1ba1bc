#pragma once

#include "galinv/calculus.hpp"
#include "galinv/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galinv {

struct FormMatch {
    std::string equation;
    std::string form;       // empty when unmatched
    std::string multiplet;  // e.g. "D(1,1,0) on (R, B)"
    Rational scale;         // field part = scale * form
    std::string reason;     // why nothing matched
};

struct RepBlock {
    std::string label;  // catalog label, or "unidentified"
    std::vector<std::string> equations;
};

struct ClassificationReport {
    std::string system;
    bool linear = true;
    std::vector<FormMatch> matches;
    // Field parts of the residuals span a Galilei-closed space
    std::optional<bool> closed;
    std::string closure_detail;
    std::vector<RepBlock> residual_rep;
    CovarianceReport covariance;
    bool covariant = false;
    // a failing pure boost, searched when the system is not covariant
    std::optional<Counterexample> counterexample_boost;

    std::vector<std::string> matched_forms() const;
    Json to_json() const;
};

ClassificationReport classify(const FieldSystem& s, const CovarianceOptions& opt = {});

// Catalog label whose generators match (S, eta) of a direct summand up to a
// slot permutation and a rational rescaling of each slot. X_a = i eta_a are
// the real boost generators on a basis of scalar and vector slots.
std::optional<std::string> identify_scaled(const std::vector<SlotKind>& kinds, const std::array<MatQ, 3>& X);

}  // namespace galinv
