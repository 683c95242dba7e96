#include "twistcat/zigzag.hpp"

#include <stdexcept>

namespace twistcat {

int hom_degree(HomKind k) {
    switch (k) {
        case HomKind::E: return 0;
        case HomKind::X: return 1;
        case HomKind::Y: return 1;
        case HomKind::F: return 2;
    }
    return 0;
}

char hom_kind_char(HomKind k) {
    switch (k) {
        case HomKind::E: return 'e';
        case HomKind::X: return 'x';
        case HomKind::Y: return 'y';
        case HomKind::F: return 'f';
    }
    return '?';
}

HomKind hom_kind_from_char(char c) {
    switch (c) {
        case 'e': return HomKind::E;
        case 'x': return HomKind::X;
        case 'y': return HomKind::Y;
        case 'f': return HomKind::F;
    }
    throw std::invalid_argument("bad hom kind");
}

ZigzagCategory::ZigzagCategory(int n_, bool allow_rank_one_) : n(n_), allow_rank_one(allow_rank_one_) {
    if (n < 1 || (n == 1 && !allow_rank_one))
        throw std::invalid_argument("zigzag category needs n >= 2 (n = 1 only behind the flag)");
}

int ZigzagCategory::target(const HomBasisElement& b) const {
    switch (b.kind) {
        case HomKind::E:
        case HomKind::F: return b.index;
        case HomKind::X: return (b.index + 1) % m();
        case HomKind::Y: return (b.index - 1 + m()) % m();
    }
    return b.index;
}

std::vector<HomBasisElement> ZigzagCategory::hom_basis(int i, int j) const {
    if (i < 0 || i > n || j < 0 || j > n) throw std::invalid_argument("vertex out of range");
    std::vector<HomBasisElement> out;
    if (i == j) {
        out.push_back({HomKind::E, i});
        out.push_back({HomKind::F, i});
        return out;
    }
    if (j == (i + 1) % m()) out.push_back({HomKind::X, i});
    if (j == (i - 1 + m()) % m()) out.push_back({HomKind::Y, i});
    return out;
}

std::optional<HomBasisElement> ZigzagCategory::basis_in_degree(int i, int j, int p) const {
    std::optional<HomBasisElement> found;
    for (const auto& b : hom_basis(i, j)) {
        if (hom_degree(b.kind) != p) continue;
        if (found) throw std::logic_error("degree piece is not one-dimensional (n = 1)");
        found = b;
    }
    return found;
}

std::optional<HomBasisElement> ZigzagCategory::compose(const HomBasisElement& g, const HomBasisElement& f) const {
    if (target(f) != source(g)) throw std::invalid_argument("non-composable pair");
    if (f.kind == HomKind::E) return g;
    if (g.kind == HomKind::E) return f;
    // any product involving f_i in positive total degree vanishes
    if (f.kind == HomKind::F || g.kind == HomKind::F) return std::nullopt;
    // degree-1 times degree-1
    if (g.kind == HomKind::Y && f.kind == HomKind::X)
        return HomBasisElement{HomKind::F, f.index};  // y_{i+1} x_i = f_i
    if (g.kind == HomKind::X && f.kind == HomKind::Y)
        return HomBasisElement{HomKind::F, f.index};  // x_{i-1} y_i = f_i
    return std::nullopt;  // x x and y y
}

}  // namespace twistcat
