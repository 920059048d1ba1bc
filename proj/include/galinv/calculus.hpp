#pragma once

#include "galinv/jet.hpp"
#include "galinv/serialize.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace galinv {

using PolyVec = std::vector<PolyQ>;
using ParamValues = std::map<std::string, Rational>;

// Variables (t, x, y, z) shared by every polynomial field
const VarList& spacetime();
PolyQ coord(int mu);  // mu = 0 is t

PolyQ dt(const PolyQ& f);
PolyQ partial(const PolyQ& f, int mu);
PolyVec grad(const PolyQ& f);
PolyQ div(const PolyVec& F);
PolyVec curl(const PolyVec& F);
PolyQ dot(const PolyVec& a, const PolyVec& b);
PolyVec cross(const PolyVec& a, const PolyVec& b);

// (t, x) -> (t + a, R x - v t + b). Fields transform as
// psi'(t, x) = Lambda(v) Rot(R) psi(g^-1 (t, x)).
struct GalileiMotion {
    Rotation rot;
    Vec3Q v{Rational(0), Rational(0), Rational(0)};
    Rational a;
    Vec3Q b{Rational(0), Rational(0), Rational(0)};

    static GalileiMotion boost(const Vec3Q& v);
    std::array<Rational, 4> apply(const std::array<Rational, 4>& tx) const;
    GalileiMotion inverse() const;
    // images of t, x, y, z under g^-1, as affine polynomials
    PolyVec inverse_map() const;
    bool is_identity() const;
    std::string str() const;
    Json to_json() const;
};

// g2 after g1
GalileiMotion compose(const GalileiMotion& g2, const GalileiMotion& g1);

GalileiMotion random_motion(std::mt19937_64& rng);
PolyQ random_poly(std::mt19937_64& rng, int degree);
// deterministic per-item seed derived from a base seed
uint64_t derive_seed(uint64_t seed, uint64_t index);

struct FieldMultiplet {
    GalileiRep rep;
    PolyVec components;
};

FieldMultiplet make_multiplet(const RepLabel& label, PolyVec components);
FieldMultiplet pullback(const FieldMultiplet& m, const GalileiMotion& g);

// Composes f with g^-1 componentwise, then applies a linear action
PolyVec pullback(const PolyVec& f, const MatQ& action, const GalileiMotion& g);

// Linear Galilei action on a flattened list of declared quantities. Bound
// names follow their rep with slot signs; unbound vectors just rotate.
MatQ galilei_action(const std::vector<Decl>& layout, const std::vector<RepBinding>& reps, const Rotation& rot,
                    const Vec3Q& v);

// Residual components of a compiled system, flattened in equation order.
// fields and sources are flattened in declaration order.
PolyVec residuals(const CompiledSystem& sys, const PolyVec& fields, const PolyVec& sources, const ParamValues& params);

std::vector<Decl> residual_layout(const CompiledSystem& sys);

// Jet: per motion, the identity is reduced to a defect polynomial over the jet
// space, which is then evaluated on each random multiplet at the pre-image
// point. Direct: both sides are computed by literal substitution.
enum class CovarianceMode { Jet, Direct };

struct CovarianceOptions {
    CovarianceMode mode = CovarianceMode::Jet;
    int trials = 50;
    int motions = 10;
    uint64_t seed = 1;
    int degree = 3;
    std::optional<GalileiMotion> motion;  // fixed motion instead of random ones
    std::optional<ParamValues> params;    // fixed parameters instead of random ones
    int threads = 0;                      // 0: default_threads()
};

struct Counterexample {
    GalileiMotion motion;
    int trial = 0;
    ParamValues params;
    std::string equation;
    int component = 0;
    PolyQ mismatch;
};

struct CovarianceReport {
    std::string system;
    bool pass = true;
    int trials = 0;
    int motions = 0;
    uint64_t seed = 0;
    CovarianceMode mode = CovarianceMode::Jet;
    // Jet mode: the defect vanished identically for every motion
    bool defect_zero = true;
    std::optional<Counterexample> counterexample;
    Json to_json() const;
};

CovarianceReport covariance_check(const CompiledSystem& sys, const CovarianceOptions& opt);

// Defect of the covariance identity for one motion, one jet polynomial per
// residual component: R o Phi_g - Lambda_res(g) R, where Phi_g is the induced
// action on first jets. Params stay symbolic.
PolyVec covariance_defect(const CompiledSystem& sys, const GalileiMotion& g);

// Values of the jet variables for given fields, sources and params
std::vector<PolyQ> jet_values(const CompiledSystem& sys, const PolyVec& inputs, const ParamValues& params);
std::vector<PolyQ> jet_values(const JetSpace& js, const PolyVec& inputs, const ParamValues& params);

// Images of the jet coordinates under the action of g on first jets, for a
// given linear action on the components. Params map to themselves.
std::vector<PolyQ> jet_images(const JetSpace& js, const MatQ& action, const GalileiMotion& g);

// GALINV_THREADS when set, otherwise hardware concurrency
int default_threads();

}  // namespace galinv
