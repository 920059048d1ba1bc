#pragma once

#include "galinv/calculus.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galinv {

// Fields (B, N, W, R) of the extended system
struct ExtendedFields {
    PolyQ B;
    PolyVec N, W, R;
};

// Potentials (A0, A, A4)
struct Potentials {
    PolyQ A0;
    PolyVec A;
    PolyQ A4;
};

// W = curl A, N = dA/dt - grad A0, R = grad A4, B = dA4/dt
ExtendedFields fields_from_potentials(const Potentials& p);

// Printed: T^a_b = N_a R_b + N_b R_a - W_a W_b + delta_ab (T^0_0 - R.W).
// Corrected: T^a_b = W_a W_b - N_a R_b - N_b R_a + delta_ab (N.R - T^0_0),
// the flux for which the momentum densities T^a_0 are conserved.
enum class TensorVariant { Printed, Corrected };

struct EnergyMomentum {
    PolyQ T00;
    PolyVec T0a;                  // T^0_a
    PolyVec Ta0;                  // T^a_0
    std::array<PolyVec, 3> Tab;   // Tab[a][b] = T^a_b
    // nu = 0: dT^0_0/dt + d_a T^0_a; nu = b: dT^b_0/dt + d_a T^b_a
    std::array<PolyQ, 4> continuity;
};

EnergyMomentum energy_momentum(const ExtendedFields& f, TensorVariant variant = TensorVariant::Printed);

// Continuity residual nu as an exact combination
// sum c * (field component) * (residual component) of the equations of the
// system "last" with e = 0
struct CertificateTerm {
    Rational coeff;
    std::string field;     // e.g. "W2", or "1" for a constant factor
    std::string equation;  // residual name
    int component = 0;
};

struct ContinuityCertificate {
    int nu = 0;
    bool found = false;
    std::vector<CertificateTerm> terms;
    std::string str() const;
};

struct EnergyCertificate {
    bool symbolic_nu = false;  // nu kept as a free parameter
    TensorVariant variant = TensorVariant::Printed;
    std::array<ContinuityCertificate, 4> components;
    bool pass() const;
    Json to_json() const;
};

// Certificates over the first jets of the fields; with symbolic_nu the
// coupling nu stays a free symbol, otherwise nu = 0
EnergyCertificate energy_certificate(bool symbolic_nu, TensorVariant variant = TensorVariant::Printed);

class RelationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Sources {
    PolyQ j0;
    PolyVec j;
    PolyQ j4;
};

// Lagrangian density of the extended system; throws RelationError unless the
// fields derive from the potentials
PolyQ lagrangian_density(const ExtendedFields& f, const Potentials& p, const Sources& s, const Rational& e,
                         const Rational& nu);
PolyQ lagrangian_density(const Potentials& p, const Sources& s, const Rational& e, const Rational& nu);

}  // namespace galinv
