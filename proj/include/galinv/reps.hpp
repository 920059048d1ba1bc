#pragma once

#include "galinv/matrix.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galinv {

template <class S>
using Vec3 = std::array<S, 3>;
using Vec3Q = Vec3<Rational>;

class UnknownLabel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotARep : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotOrthogonal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// D(m, n, lambda): m vector slots, n scalar slots
struct RepLabel {
    int m = 0, n = 0, lambda = 0;
    std::string str() const;
    static RepLabel parse(const std::string& s);
    friend bool operator==(const RepLabel&, const RepLabel&) = default;
    friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
};

enum class SlotKind { Scalar, Vector };

// Slot letters follow the boost laws: A, B, C scalars; R, U, W, K, N vectors.
struct Slot {
    char letter;
    SlotKind kind() const;
    int size() const { return kind() == SlotKind::Vector ? 3 : 1; }
};

SlotKind slot_kind(char letter);

// Exact 3x3 rotation. Construction checks R^T R = I and det R = 1.
class Rotation {
public:
    Rotation() : m_(identity<Rational>(3)) {}
    explicit Rotation(const MatQ& m);
    // Euler-Rodrigues from an integer quaternion (not all zero)
    static Rotation from_quaternion(long a, long b, long c, long d);
    const MatQ& matrix() const { return m_; }
    Rotation inverse() const;
    Vec3Q apply(const Vec3Q& x) const;
    friend Rotation operator*(const Rotation& a, const Rotation& b);

private:
    MatQ m_;
};

// Proper rotation about unit axis n by angle theta, in doubles
Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& axis, double theta);

struct GalileiRep {
    RepLabel label;
    std::vector<Slot> slots;
    std::array<MatQi, 3> S;    // rotation generators
    std::array<MatQi, 3> eta;  // boost generators

    int dim() const;
    int offset(size_t slot) const;
    std::string layout() const;  // e.g. "(R, B)"

    // Lambda(v): the finite boost acting on the full multiplet
    template <class T>
    Mat<T> boost(const Vec3<T>& v) const;
    MatQ boost(const Vec3Q& v) const { return boost<Rational>(v); }
    MatQ rotation(const Rotation& r) const;
    // Lambda(v) with v = (v1, v2, v3) left symbolic
    MatPQ boost_symbolic() const;
};

// Slot layout per label; the order is fixed and used everywhere
const std::vector<RepLabel>& catalog_labels();
std::vector<Slot> layout_of(const RepLabel& l);

GalileiRep build_galilei_rep(const RepLabel& label);
GalileiRep build_galilei_rep(const std::vector<Slot>& layout, const RepLabel& label);
GalileiRep direct_sum(const GalileiRep& a, const GalileiRep& b);

// Spin-1 generators (s_a)_bc = -i eps_abc
MatQi spin1(int a);
int levi_civita(int a, int b, int c);

struct RelationFailure {
    std::string relation;
    int a, b;
};

struct RepCheck {
    bool ok = true;
    std::vector<RelationFailure> failures;
};

// Commutation relations of the homogeneous Galilei algebra:
// [S_a,S_b] = i eps S_c, [eta_a,S_b] = i eps eta_c, [eta_a,eta_b] = 0
RepCheck check_rep(const std::array<MatQi, 3>& S, const std::array<MatQi, 3>& eta);
// Also checks exp(i v.eta) = Lambda(v) symbolically
RepCheck check_rep(const GalileiRep& rep);

struct Identification {
    RepLabel label;
    // new = P old, with P a signed slot permutation
    MatQ basis_map;
    std::vector<int> slot_perm;   // catalog slot -> candidate slot index
    std::vector<int> slot_signs;  // +-1 per catalog slot
};

// Finds the catalog label and signed slot permutation carrying (S, eta) onto
// the catalog generators. Throws NotARep when nothing matches.
Identification identify_rep(const std::array<MatQi, 3>& S, const std::array<MatQi, 3>& eta);

// so(1,3) representations used as contraction inputs
struct LorentzRep {
    std::string name;
    int dim = 0;
    // S[mu][nu], mu, nu in 0..3, antisymmetric
    std::array<std::array<MatQi, 4>, 4> S;
};

LorentzRep lorentz_rep(const std::string& name);  // "D12", "D12+D00", "D10+D01", "BI"
std::vector<std::string> lorentz_rep_names();
RepCheck check_lorentz(const LorentzRep& rep);

// ---------------------------------------------------------------------------

template <class T>
Mat<T> GalileiRep::boost(const Vec3<T>& v) const {
    const int d = dim();
    Mat<T> L = identity<T>(d);
    auto find = [&](char c) -> int {
        for (size_t i = 0; i < slots.size(); ++i)
            if (slots[i].letter == c) return offset(i);
        throw NotARep(std::string("boost law needs slot ") + c + " in layout " + layout());
    };
    T v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    T half(Rational(1, 2));
    auto cross = [&](int row, int col) {  // (v x X) block
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                T s(0);
                for (int j = 0; j < 3; ++j) {
                    int e = levi_civita(i, j, k);
                    if (e) s += T(e) * v[j];
                }
                L(row + i, col + k) += s;
            }
    };
    for (size_t s = 0; s < slots.size(); ++s) {
        const int o = offset(s);
        switch (slots[s].letter) {
            case 'A':
            case 'R':
                break;
            case 'B': {
                int r = find('R');
                for (int k = 0; k < 3; ++k) L(o, r + k) += v[k];
                break;
            }
            case 'C': {
                int u = find('U'), a = find('A');
                for (int k = 0; k < 3; ++k) L(o, u + k) += v[k];
                L(o, a) += half * v2;
                break;
            }
            case 'U': {
                int a = find('A');
                for (int k = 0; k < 3; ++k) L(o + k, a) += v[k];
                break;
            }
            case 'W':
                cross(o, find('R'));
                break;
            case 'K': {
                cross(o, find('R'));
                int a = find('A');
                for (int k = 0; k < 3; ++k) L(o + k, a) += v[k];
                break;
            }
            case 'N': {
                cross(o, find('W'));
                int b = find('B'), r = find('R');
                for (int i = 0; i < 3; ++i) {
                    L(o + i, b) += v[i];
                    for (int k = 0; k < 3; ++k) L(o + i, r + k) += v[i] * v[k];
                    L(o + i, r + i) -= half * v2;
                }
                break;
            }
            default:
                throw NotARep(std::string("unknown slot letter ") + slots[s].letter);
        }
    }
    return L;
}

}  // namespace galinv
