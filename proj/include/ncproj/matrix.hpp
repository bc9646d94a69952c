#pragma once

#include <cstddef>
#include <vector>

#include "ncproj/field.hpp"

namespace ncproj {

/// Dense matrix over a single runtime field. Entries are canonical
/// (gcd-reduced rationals / residues in [0,p)), enforced at the boundary.
/// Row-vector convention throughout the library: linear maps act by
/// right multiplication, `image = v * M`.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), e_(rows * cols, mpq_class(0)) {}

    static Matrix identity(Field f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return f_; }

    Scalar at(std::size_t r, std::size_t c) const { return Scalar(f_, e_[r * cols_ + c]); }
    void set(std::size_t r, std::size_t c, const Scalar& s) {
        check_same_field(f_, s.field(), "matrix entry");
        e_[r * cols_ + c] = s.value();
    }
    void set_int(std::size_t r, std::size_t c, long v) { set(r, c, Scalar::of_int(f_, v)); }

    const mpq_class& raw(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    mpq_class& raw(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (sgn(x) != 0) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix row(std::size_t r) const {
        Matrix out(f_, 1, cols_);
        for (std::size_t c = 0; c < cols_; ++c) out.e_[c] = e_[r * cols_ + c];
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(e_[a * cols_ + c], e_[b * cols_ + c]);
    }

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<mpq_class> e_;
};

struct RowReduceResult {
    std::size_t rank;
    Matrix rref;
    std::vector<std::size_t> pivot_cols;
};

/// Deterministic reduced row echelon form: columns scanned left to right,
/// pivot taken from the first remaining row with a nonzero entry.
RowReduceResult row_reduce(const Matrix& m);

/// Basis for the right null space {v : m v^T = 0}, rows in RREF.
Matrix kernel_basis(const Matrix& m);

/// Canonical (RREF) basis of the intersection of two row spaces,
/// computed via the kernel of the stacked system.
Matrix intersect_rowspaces(const Matrix& u, const Matrix& v);

Matrix transpose(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Scalar& c, const Matrix& a);

/// Stack b below a (same column count).
Matrix stack(const Matrix& a, const Matrix& b);

/// Canonical basis (RREF, zero rows dropped) of the row space.
Matrix row_space_basis(const Matrix& m);

/// Reduce a single row vector against an RREF basis; returns the residual.
Matrix reduce_against(const Matrix& rref, const std::vector<std::size_t>& pivot_cols, const Matrix& v);

/// Canonical coordinates on k^n modulo a row space: the non-pivot columns
/// index the quotient basis, proj (n x (n-rank)) maps a vector to the free
/// coordinates of its reduced representative.
struct QuotientCoords {
    std::vector<std::size_t> nonpivot_cols;
    Matrix proj{Field::rationals(), 0, 0};
};
QuotientCoords quotient_coords(const RowReduceResult& rr, std::size_t ncols);

/// True if every row of v lies in the row space spanned by the RREF basis.
bool rowspace_contains(const Matrix& rref_basis, const Matrix& v);

/// One solution x of x a = b, if any (rows of b solved independently).
/// Returns empty optional-style: {found, x}.
struct SolveResult {
    bool ok;
    Matrix x;
};
SolveResult solve_row_system(const Matrix& a, const Matrix& b);

} // namespace ncproj
