#pragma once

// Exact field arithmetic (F2, Fp with p < 2^16 prime, Q) and the dense
// matrix kernels shared by every algebraic module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistcat {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { F2, Fp, Q };

// Value in a field.  Finite fields use the residue in [0, p); Q uses an
// arbitrary-precision rational, always in lowest terms with positive
// denominator (cpp_rational normalizes on construction).
struct Scalar {
    int64_t r = 0;
    Rat q;
};

struct Field {
    FieldKind kind = FieldKind::F2;
    uint32_t p = 2;

    static Field f2() { return Field{FieldKind::F2, 2}; }
    static Field fp(uint32_t p);
    static Field rationals() { return Field{FieldKind::Q, 0}; }
    static Field parse(const std::string& s);  // "F2" | "Fp:p" | "Q"
    std::string to_string() const;

    bool operator==(const Field& o) const { return kind == o.kind && (kind != FieldKind::Fp || p == o.p); }
    bool finite() const { return kind != FieldKind::Q; }
    uint32_t order() const;  // finite fields only

    Scalar zero() const { return Scalar{}; }
    Scalar one() const;
    Scalar from_int(int64_t v) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    bool is_zero(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;
    std::string scalar_to_string(const Scalar& a) const;
    Scalar scalar_parse(const std::string& s) const;  // "c" or "a/b"
};

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols) {}
    static Matrix identity(const Field& f, size_t n);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Matrix mul(const Matrix& o) const;
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    // Row echelon form in place (first-nonzero-entry pivoting); returns the
    // pivot column of each pivot row.
    std::vector<size_t> echelonize();
    size_t rank() const;
    // Some x with this*x = b, or nullopt when inconsistent.  Throws on a row
    // count mismatch.
    std::optional<Matrix> solve(const Matrix& b) const;
    // Basis of the right kernel, one column per basis vector.
    Matrix kernel_basis() const;

private:
    Field field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

// All subspaces of F_q^d, each as a list of basis rows in reduced echelon
// form (finite fields only; meant for small d).
std::vector<std::vector<std::vector<Scalar>>> all_subspaces(const Field& f, size_t d);

// Membership of v in the row span of basis (basis in reduced echelon form).
bool in_row_span(const Field& f, const std::vector<std::vector<Scalar>>& basis,
                 const std::vector<Scalar>& v);

}  // namespace twistcat
