#pragma once

// The preprojective algebra of the affine A_n quiver: paths (i_1|...|i_l)
// with steps +-1 mod (n+1), the P(i,l,m) normal form, and finite-dimensional
// nilpotent module representations (the standard heart).

#include "twistcat/lattice.hpp"
#include "twistcat/scalars.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace twistcat {

struct Path {
    int n;
    std::vector<int> vertices;  // length >= 1, consecutive entries differ by +-1 mod n+1

    void validate() const;  // n >= 2 only; n = 1 has doubled arrows and is unsupported
    int source() const { return vertices.front(); }
    int target() const { return vertices.back(); }
};

// Normal-form basis label: P(i,l,m) = (loop at i)^m followed by the monotone
// path of displacement l.
struct PLabel {
    int i;
    int64_t l;
    int64_t m;
    bool operator<(const PLabel& o) const { return std::tie(i, l, m) < std::tie(o.i, o.l, o.m); }
    bool operator==(const PLabel& o) const { return i == o.i && l == o.l && m == o.m; }
    std::string to_string() const;
};

struct AlgebraElement {
    int n;
    Field field;
    std::map<PLabel, Scalar> terms;  // no zero coefficients stored

    bool operator==(const AlgebraElement& o) const;
    std::string to_string() const;
};

AlgebraElement algebra_zero(int n, const Field& f);
AlgebraElement path_element(const Path& p, const Field& f);  // = normal form, coefficient 1
PLabel normal_form(const Path& p);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b);

// Nilpotent representation: V_i per vertex, a_i: V_i -> V_{i+1} acting for
// the arrow (i|i+1), b_i: V_{i+1} -> V_i for (i+1|i).  Linear-map matrices
// are target-rows by source-columns.
class NilpotentModule {
public:
    NilpotentModule(int n, const Field& f, std::vector<int> dims);

    int n() const { return n_; }
    int m() const { return n_ + 1; }
    const Field& field() const { return field_; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;
    LatticeVector dim_vector() const;

    Matrix& a(int i) { return a_[i]; }
    Matrix& b(int i) { return b_[i]; }
    const Matrix& a(int i) const { return a_[i]; }
    const Matrix& b(int i) const { return b_[i]; }

    // preprojective relations b_i a_i = a_{i-1} b_{i-1} plus nilpotency of
    // the total arrow endomorphism
    void validate() const;
    bool relations_hold() const;
    bool is_nilpotent() const;

    bool operator==(const NilpotentModule& o) const;

private:
    int n_;
    Field field_;
    std::vector<int> dims_;
    std::vector<Matrix> a_, b_;
};

NilpotentModule simple_module(int n, const Field& f, int i);
NilpotentModule direct_sum(const NilpotentModule& x, const NilpotentModule& y);

// Dimension of the space of module homomorphisms (intertwiners).
size_t module_hom(const NilpotentModule& m, const NilpotentModule& n);

struct Submodule {
    std::vector<std::vector<std::vector<Scalar>>> bases;  // per-vertex echelon row bases
    NilpotentModule module;                               // induced structure
    std::vector<int> dims;
};

// All arrow-invariant tuples of subspaces.  Finite fields only; throws when
// the total dimension exceeds the bound.
std::vector<Submodule> submodules(const NilpotentModule& m, int dim_bound = 6);

// Quotient by an invariant subspace tuple.
NilpotentModule quotient_module(const NilpotentModule& m, const Submodule& s);

// Every module with the given dimension vector over a finite field,
// relations and nilpotency enforced (exhaustive matrix fill; desk scale).
void enumerate_modules(int n, const Field& f, const std::vector<int>& dims,
                       const std::function<void(const NilpotentModule&)>& visit);

// Fingerprint used to deduplicate isomorphism classes in sweeps.
std::string module_fingerprint(const NilpotentModule& m);

}  // namespace twistcat
