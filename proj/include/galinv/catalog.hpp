#pragma once

#include "galinv/system.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace galinv {

class UnknownSystem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
    FieldSystem system;
    std::string title;
    std::string claim;               // the statement in the source being reproduced
    std::vector<std::string> notes;  // deviations and sign decisions
    bool galilean = true;            // false for the relativistic precursor
    bool flagged = false;            // ambiguous source; covariance may fail
};

// Catalog names in a fixed order
const std::vector<std::string>& catalog_names();
// Systems whose covariance is asserted by the acceptance suite
const std::vector<std::string>& covariance_suite();
// Also accepts the aliases "mag1" and "111"
const CatalogEntry& catalog_entry(const std::string& name);
const FieldSystem& catalog(const std::string& name);

// Helper for building systems in C++
class SystemBuilder {
public:
    explicit SystemBuilder(std::string name);
    SystemBuilder& field(const std::string& n, ValueType t);
    SystemBuilder& source(const std::string& n, ValueType t);
    SystemBuilder& params(std::vector<std::string> p);
    SystemBuilder& field_rep(const std::string& label, const std::vector<std::string>& names);
    SystemBuilder& source_rep(const std::string& label, const std::vector<std::string>& names);
    SystemBuilder& residual_rep(const std::string& label, const std::vector<std::string>& names);
    SystemBuilder& eq(const std::string& name, ExprPtr lhs, ExprPtr rhs);
    FieldSystem build() const;

private:
    FieldSystem s_;
};

}  // namespace galinv
