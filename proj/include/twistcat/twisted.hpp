#pragma once

// Twisted complexes over the zigzag category: formal sums of shifted
// generators L_i[k] with a strictly triangular degree-1 differential
// squaring to zero.  Since the coefficient category is a dg category with
// zero differential, the Maurer-Cartan condition is exactly d.d = 0.

#include "twistcat/lattice.hpp"
#include "twistcat/scalars.hpp"
#include "twistcat/zigzag.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace twistcat {

struct Term {
    int vertex;
    int shift;
    bool operator==(const Term& o) const { return vertex == o.vertex && shift == o.shift; }
    bool operator<(const Term& o) const { return std::tie(shift, vertex) < std::tie(o.shift, o.vertex); }
};

class TwistedComplex;

// A morphism X -> Y of pure total degree.  A component from X-term s to
// Y-term t lives on the unique zigzag basis element of degree
// p = degree - shift(s) + shift(t); only the coefficient is stored.
struct Morphism {
    int degree = 0;
    std::map<std::pair<size_t, size_t>, Scalar> comps;
};

class TwistedComplex {
public:
    TwistedComplex(int n, const Field& f) : n_(n), field_(f) { cat(); }

    int n() const { return n_; }
    const Field& field() const { return field_; }
    ZigzagCategory cat() const { return ZigzagCategory(n_); }
    const std::vector<Term>& terms() const { return terms_; }
    const std::map<std::pair<size_t, size_t>, Scalar>& diff() const { return diff_; }

    size_t add_term(int vertex, int shift);
    // Sets the differential entry s -> t (must carry total degree 1).
    void set_diff(size_t s, size_t t, const Scalar& c);

    // Required zigzag basis degree of a differential entry s -> t.
    int entry_basis_degree(size_t s, size_t t) const;

    // Asserts entry legality, d.d = 0 and strict triangularity (a
    // topological order of the terms exists).  Throws on violation.
    void validate() const;

    LatticeVector k_class() const;
    bool operator==(const TwistedComplex& o) const;

    std::string to_string() const;

private:
    int n_;
    Field field_;
    std::vector<Term> terms_;
    std::map<std::pair<size_t, size_t>, Scalar> diff_;
};

TwistedComplex generator(int n, const Field& f, int vertex, int shift);
TwistedComplex shift(const TwistedComplex& x, int k);

// Graded hom complex between two twisted complexes, with the twisted
// differential D(phi) = d_Y.phi - (-1)^{deg phi} phi.d_X.
class HomComplex {
public:
    struct BasisElt {
        size_t s, t;
        HomKind kind;
        int degree;
    };

    HomComplex(const TwistedComplex& x, const TwistedComplex& y);

    const std::vector<BasisElt>& basis() const { return basis_; }
    // D(basis[b]) as coefficient list over the basis.
    const std::vector<std::pair<size_t, Scalar>>& differential_of(size_t b) const { return dmat_[b]; }

    std::map<int, size_t> cohomology_dims() const;
    size_t total_cohomology_dim() const;
    int64_t euler_characteristic() const;

    bool is_closed(const Morphism& f) const;
    // index of (s,t,kind) in the basis
    std::optional<size_t> index_of(size_t s, size_t t, HomKind kind) const;

private:
    const Field field_;
    int n_;
    std::vector<BasisElt> basis_;
    std::map<std::tuple<size_t, size_t, int>, size_t> index_;  // (s,t,kind)
    std::vector<std::vector<std::pair<size_t, Scalar>>> dmat_;
};

// Cone of a closed degree-0 morphism f: X -> Y.  Throws if f is not closed
// of degree 0.
TwistedComplex cone(const TwistedComplex& x, const TwistedComplex& y, const Morphism& f);

// Gaussian elimination of invertible identity components; returns a
// quasi-isomorphic complex with no eliminable entries, terms in a
// deterministic topological order (ties by shift, then vertex).
TwistedComplex minimize(const TwistedComplex& x);

std::optional<std::pair<int, int>> is_shifted_generator(const TwistedComplex& x);

// dim H^d hom(L_i, X) for all generators; the complete dimension record used
// for object comparisons throughout.
using HomFingerprint = std::map<std::pair<int, int>, size_t>;
HomFingerprint hom_fingerprint(const TwistedComplex& x);

}  // namespace twistcat
