#pragma once

// The Grothendieck group of the category as the affine root lattice of type
// A_n^(1): Euler form, roots, delta, wall tests and the simple-root basis a
// generic central charge carves out of the imaginary part.

#include "twistcat/scalars.hpp"

#include <vector>

namespace twistcat {

// Coordinates in the simple-class basis [E_0], ..., [E_n].
struct LatticeVector {
    std::vector<int64_t> c;

    int n() const { return static_cast<int>(c.size()) - 1; }
    bool operator==(const LatticeVector& o) const { return c == o.c; }
    bool operator<(const LatticeVector& o) const { return c < o.c; }
    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator-() const;
    bool is_zero() const;
    std::string to_string() const;  // "[v0,...,vn]"
};

LatticeVector simple_class(int n, int i);
LatticeVector zero_vector(int n);
LatticeVector delta_class(int n);  // class of a point, (1,...,1)

// Euler pairing in the simple-class basis: 2 on the diagonal, -1 between
// cyclically adjacent indices (n >= 2); for n = 1 the double-edge matrix
// [[2,-2],[-2,2]].
int64_t euler_form(const LatticeVector& u, const LatticeVector& v);

enum class RootKind { NotRoot, RealRoot, ImaginaryRoot };
RootKind classify_root(const LatticeVector& v);

// sigma_i reflection v - chi(alpha_i, v) alpha_i.
LatticeVector reflect(int i, const LatticeVector& v);

// The n(n+1) cyclic interval sums of fewer than n+1 consecutive simple
// classes: a full set of representatives for the real root classes mod delta.
std::vector<LatticeVector> real_root_classes_mod_delta(int n);

// Canonical representative mod Z*delta: subtract min coordinate.
LatticeVector mod_delta_rep(const LatticeVector& v);

struct RatComplex {
    Rat re, im;
    bool operator==(const RatComplex& o) const { return re == o.re && im == o.im; }
    RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
    RatComplex operator-(const RatComplex& o) const { return {re - o.re, im - o.im}; }
    std::string to_string() const;  // exact "a/b + c/d i"
};

// Homomorphism K -> C with exact rational coordinates, one value per simple
// class.
struct CentralCharge {
    std::vector<RatComplex> z;

    int n() const { return static_cast<int>(z.size()) - 1; }
    RatComplex eval(const LatticeVector& v) const;
};

// True iff Z(delta) is real negative and Im Z misses every real root class
// mod delta.
bool is_off_walls(const CentralCharge& Z);

// The n positive-imaginary-part root classes (mod delta) every other
// positive class decomposes into, ordered along the A_n Dynkin path; the
// colexicographically smaller end comes first.
std::vector<LatticeVector> simple_roots_from_charge(const CentralCharge& Z);

}  // namespace twistcat
