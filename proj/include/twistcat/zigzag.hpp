#pragma once

// The cyclic zigzag category on objects L_0, ..., L_n: hom spaces spanned by
// {e_i, f_i, x_i, y_i} with deg e = 0, deg x = deg y = 1, deg f = 2, and the
// products y_{i+1} x_i = x_{i-1} y_i = f_i.  This is the Ext algebra of the
// vertex simples and the coefficient category for twisted complexes.

#include <optional>
#include <string>
#include <vector>

namespace twistcat {

enum class HomKind { E, X, Y, F };

struct HomBasisElement {
    HomKind kind;
    int index;  // source vertex i

    bool operator==(const HomBasisElement& o) const { return kind == o.kind && index == o.index; }
};

int hom_degree(HomKind k);
char hom_kind_char(HomKind k);
HomKind hom_kind_from_char(char c);

struct ZigzagCategory {
    int n;
    bool allow_rank_one = false;  // n = 1 sits behind this flag

    ZigzagCategory(int n_, bool allow_rank_one_ = false);
    int m() const { return n + 1; }
    int source(const HomBasisElement& b) const { return b.index; }
    int target(const HomBasisElement& b) const;

    // Graded basis of hom(L_i, L_j).
    std::vector<HomBasisElement> hom_basis(int i, int j) const;
    // The basis element of hom(L_i, L_j) in degree p, if the space is
    // nonzero there.  Unique for n >= 2; throws for n = 1 where degree-1
    // pieces are two-dimensional.
    std::optional<HomBasisElement> basis_in_degree(int i, int j, int p) const;

    // m2 product g . f for f: a -> b, g: b -> c; zero is nullopt.  The
    // nonzero structure constants are all 1.
    std::optional<HomBasisElement> compose(const HomBasisElement& g, const HomBasisElement& f) const;
};

}  // namespace twistcat
