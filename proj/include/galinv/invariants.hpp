#pragma once

#include "galinv/calculus.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace galinv {

// E.B, H.D, D^2, B^2, E.D - H.B, B.D
std::vector<PolyQ> bilinear_invariants(const PolyVec& E, const PolyVec& B, const PolyVec& D, const PolyVec& H);
const std::vector<std::string>& bilinear_invariant_names();

struct InvarianceCheck {
    std::string name;
    bool invariant = false;
    PolyQ change;  // transformed minus original, over E, B, D, H, v
};

// Each quantity under E -> E + v x B, H -> H - v x D with all 15 components
// symbolic
std::vector<InvarianceCheck> check_bilinear_invariants();
// The same check for the single product E.D
InvarianceCheck check_ED();

// ---------------------------------------------------------------------------
// Born-Infeld constitutive maps, all returning (D, H) from (E, B)

enum class BornInfeld { Electric, Magnetic, Relativistic };
std::string variant_name(BornInfeld v);
BornInfeld parse_variant(const std::string& s);

struct DH {
    Eigen::Vector3d D, H;
};

// Throws DomainError outside the domain of the square root
DH born_infeld(BornInfeld variant, const Eigen::Vector3d& E, const Eigen::Vector3d& B);
DH born_infeld(BornInfeld variant, const Vec3Q& E, const Vec3Q& B);

struct BornInfeldSymbolic {
    BornInfeld variant;
    bool radicand_invariant = false;
    bool D_law = false;  // D transforms by its boost law
    bool H_law = false;
    bool pass() const { return radicand_invariant && D_law && H_law; }
};

// With the square root as a formal symbol s, s^2 = radicand: electric limit
// under B -> B + v x E (expect D -> D, H -> H + v x D); magnetic limit under
// E -> E - v x B (expect D -> D - v x H, H -> H)
BornInfeldSymbolic born_infeld_symbolic(BornInfeld variant);

struct BornInfeldNumeric {
    int points = 0;
    double max_error = 0;  // numeric map vs symbolic transformation law
};

// Random in-domain rational points and boosts; compares the map at the
// transformed arguments with the predicted transformation of its output
BornInfeldNumeric born_infeld_numeric(BornInfeld variant, int points, uint64_t seed);

}  // namespace galinv
