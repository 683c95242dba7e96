#include "twistcat/scalars.hpp"

#include <algorithm>

namespace twistcat {

static bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field Field::fp(uint32_t p) {
    if (p >= (1u << 16) || !is_prime_u32(p))
        throw std::invalid_argument("Fp requires a prime p < 2^16");
    if (p == 2) return f2();
    return Field{FieldKind::Fp, p};
}

Field Field::parse(const std::string& s) {
    if (s == "F2" || s == "f2") return f2();
    if (s == "Q" || s == "q") return rationals();
    if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0)
        return fp(static_cast<uint32_t>(std::stoul(s.substr(3))));
    throw std::invalid_argument("bad field spec: " + s);
}

std::string Field::to_string() const {
    switch (kind) {
        case FieldKind::F2: return "F2";
        case FieldKind::Fp: return "Fp:" + std::to_string(p);
        case FieldKind::Q: return "Q";
    }
    return "?";
}

uint32_t Field::order() const {
    if (!finite()) throw std::logic_error("order() on Q");
    return p;
}

Scalar Field::one() const {
    Scalar s;
    if (kind == FieldKind::Q) s.q = 1;
    else s.r = 1;
    return s;
}

Scalar Field::from_int(int64_t v) const {
    Scalar s;
    if (kind == FieldKind::Q) { s.q = v; return s; }
    int64_t m = static_cast<int64_t>(p);
    s.r = ((v % m) + m) % m;
    return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (kind == FieldKind::Q) s.q = a.q + b.q;
    else s.r = (a.r + b.r) % p;
    return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (kind == FieldKind::Q) s.q = a.q - b.q;
    else s.r = (a.r - b.r + p) % p;
    return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (kind == FieldKind::Q) s.q = a.q * b.q;
    else s.r = (a.r * b.r) % p;
    return s;
}

Scalar Field::neg(const Scalar& a) const {
    Scalar s;
    if (kind == FieldKind::Q) s.q = -a.q;
    else s.r = (p - a.r) % p;
    return s;
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    Scalar s;
    if (kind == FieldKind::Q) { s.q = 1 / a.q; return s; }
    // extended Euclid on (a.r, p)
    int64_t t = 0, nt = 1, r = p, nr = a.r;
    while (nr != 0) {
        int64_t qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    s.r = ((t % p) + p) % p;
    return s;
}

bool Field::is_zero(const Scalar& a) const {
    return kind == FieldKind::Q ? a.q.is_zero() : a.r == 0;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    return kind == FieldKind::Q ? a.q == b.q : a.r == b.r;
}

std::string Field::scalar_to_string(const Scalar& a) const {
    if (kind != FieldKind::Q) return std::to_string(a.r);
    Rat q = a.q;
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

Scalar Field::scalar_parse(const std::string& s) const {
    if (kind != FieldKind::Q) return from_int(std::stoll(s));
    Scalar out;
    auto slash = s.find('/');
    if (slash == std::string::npos) out.q = Rat(BigInt(s));
    else out.q = Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    return out;
}

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in mul");
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (field_.is_zero(at(i, k))) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(at(i, k), o.at(k, j)));
        }
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch in add");
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch in sub");
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.sub(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& s : e_)
        if (!field_.is_zero(s)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (!field_.eq(e_[i], o.e_[i])) return false;
    return true;
}

std::vector<size_t> Matrix::echelonize() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pr = row;
        while (pr < rows_ && field_.is_zero(at(pr, col))) ++pr;
        if (pr == rows_) continue;
        if (pr != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(pr, j), at(row, j));
        Scalar pinv = field_.inv(at(row, col));
        for (size_t j = col; j < cols_; ++j) at(row, j) = field_.mul(at(row, j), pinv);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || field_.is_zero(at(i, col))) continue;
            Scalar c = at(i, col);
            for (size_t j = col; j < cols_; ++j)
                at(i, j) = field_.sub(at(i, j), field_.mul(c, at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return m.echelonize().size();
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw std::invalid_argument("solve: row count mismatch");
    Matrix aug(field_, rows_, cols_ + b.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (size_t j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
    }
    // echelonize only over the coefficient columns
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pr = row;
        while (pr < rows_ && field_.is_zero(aug.at(pr, col))) ++pr;
        if (pr == rows_) continue;
        if (pr != row)
            for (size_t j = 0; j < aug.cols_; ++j) std::swap(aug.at(pr, j), aug.at(row, j));
        Scalar pinv = field_.inv(aug.at(row, col));
        for (size_t j = col; j < aug.cols_; ++j) aug.at(row, j) = field_.mul(aug.at(row, j), pinv);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || field_.is_zero(aug.at(i, col))) continue;
            Scalar c = aug.at(i, col);
            for (size_t j = col; j < aug.cols_; ++j)
                aug.at(i, j) = field_.sub(aug.at(i, j), field_.mul(c, aug.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    for (size_t i = row; i < rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j)
            if (!field_.is_zero(aug.at(i, cols_ + j))) return std::nullopt;
    Matrix x(field_, cols_, b.cols_);
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t j = 0; j < b.cols_; ++j) x.at(pivots[k], j) = aug.at(k, cols_ + j);
    return x;
}

Matrix Matrix::kernel_basis() const {
    Matrix m = *this;
    std::vector<size_t> pivots = m.echelonize();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(field_, cols_, free_cols.size());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        size_t fc = free_cols[fi];
        k.at(fc, fi) = field_.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], fi) = field_.neg(m.at(r, fc));
    }
    return k;
}

// Enumerate reduced-echelon bases: choose pivot columns, fill free entries.
std::vector<std::vector<std::vector<Scalar>>> all_subspaces(const Field& f, size_t d) {
    if (!f.finite()) throw std::invalid_argument("all_subspaces needs a finite field");
    uint32_t q = f.order();
    std::vector<std::vector<std::vector<Scalar>>> out;
    for (uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<size_t> piv;
        for (size_t c = 0; c < d; ++c)
            if (mask & (1u << c)) piv.push_back(c);
        size_t k = piv.size();
        // free entries: row r, column c with c > piv[r] and c not a pivot col
        std::vector<std::pair<size_t, size_t>> free_pos;
        for (size_t r = 0; r < k; ++r)
            for (size_t c = piv[r] + 1; c < d; ++c)
                if (!(mask & (1u << c))) free_pos.push_back({r, c});
        std::vector<uint32_t> digits(free_pos.size(), 0);
        while (true) {
            std::vector<std::vector<Scalar>> basis(k, std::vector<Scalar>(d, f.zero()));
            for (size_t r = 0; r < k; ++r) basis[r][piv[r]] = f.one();
            for (size_t t = 0; t < free_pos.size(); ++t)
                basis[free_pos[t].first][free_pos[t].second] = f.from_int(digits[t]);
            out.push_back(std::move(basis));
            size_t t = 0;
            for (; t < digits.size(); ++t) {
                if (++digits[t] < q) break;
                digits[t] = 0;
            }
            if (t == digits.size()) break;
        }
    }
    return out;
}

bool in_row_span(const Field& f, const std::vector<std::vector<Scalar>>& basis,
                 const std::vector<Scalar>& v) {
    std::vector<Scalar> w = v;
    size_t d = v.size();
    for (const auto& row : basis) {
        size_t lead = 0;
        while (lead < d && f.is_zero(row[lead])) ++lead;
        if (lead == d) continue;
        if (f.is_zero(w[lead])) continue;
        Scalar c = f.mul(w[lead], f.inv(row[lead]));
        for (size_t j = 0; j < d; ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
    }
    for (const auto& s : w)
        if (!f.is_zero(s)) return false;
    return true;
}

}  // namespace twistcat
