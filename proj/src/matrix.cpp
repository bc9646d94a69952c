#include "ncproj/matrix.hpp"

#include <cstdint>

namespace ncproj {

namespace {

// int64 elimination for prime fields; p < 2^31 so products fit in int64.
struct PrimeOps {
    std::int64_t p;
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t r = a - b;
        return r < 0 ? r + p : r;
    }
    std::int64_t inv(std::int64_t a) const {
        std::int64_t t = 0, newt = 1, r = p, newr = a % p;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        return t < 0 ? t + p : t;
    }
};

RowReduceResult row_reduce_prime(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    PrimeOps ops{static_cast<std::int64_t>(m.field().characteristic())};
    std::vector<std::int64_t> a(R * C);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) {
            const mpq_class& q = m.raw(i, j);
            std::int64_t v;
            if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
                v = q.get_num().get_si() % ops.p;
                if (v < 0) v += ops.p;
            } else {
                v = reduce_mod(q, m.field().characteristic()).get_num().get_si();
            }
            a[i * C + j] = v;
        }

    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < C && pr < R; ++c) {
        std::size_t sel = pr;
        while (sel < R && a[sel * C + c] == 0) ++sel;
        if (sel == R) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < C; ++j) std::swap(a[sel * C + j], a[pr * C + j]);
        std::int64_t piv_inv = ops.inv(a[pr * C + c]);
        for (std::size_t j = c; j < C; ++j) a[pr * C + j] = ops.mul(a[pr * C + j], piv_inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == pr) continue;
            std::int64_t f = a[i * C + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < C; ++j)
                a[i * C + j] = ops.sub(a[i * C + j], ops.mul(f, a[pr * C + j]));
        }
        pivots.push_back(c);
        ++pr;
    }
    Matrix out(m.field(), R, C);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            if (a[i * C + j] != 0) out.raw(i, j) = static_cast<long>(a[i * C + j]);
    return {pivots.size(), std::move(out), std::move(pivots)};
}

RowReduceResult row_reduce_rational(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < C && pr < R; ++c) {
        std::size_t sel = pr;
        while (sel < R && sgn(a.raw(sel, c)) == 0) ++sel;
        if (sel == R) continue;
        a.swap_rows(sel, pr);
        mpq_class piv = a.raw(pr, c);
        for (std::size_t j = c; j < C; ++j) {
            a.raw(pr, j) /= piv;
            a.raw(pr, j).canonicalize();
        }
        for (std::size_t i = 0; i < R; ++i) {
            if (i == pr) continue;
            mpq_class f = a.raw(i, c);
            if (sgn(f) == 0) continue;
            for (std::size_t j = c; j < C; ++j) {
                a.raw(i, j) -= f * a.raw(pr, j);
                a.raw(i, j).canonicalize();
            }
        }
        pivots.push_back(c);
        ++pr;
    }
    return {pivots.size(), std::move(a), std::move(pivots)};
}

} // namespace

RowReduceResult row_reduce(const Matrix& m) {
    if (m.field().is_prime()) return row_reduce_prime(m);
    return row_reduce_rational(m);
}

Matrix row_space_basis(const Matrix& m) {
    RowReduceResult r = row_reduce(m);
    Matrix out(m.field(), r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(i, j) = r.rref.raw(i, j);
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    RowReduceResult r = row_reduce(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix raw(m.field(), free_cols.size(), C);
    const bool prime = m.field().is_prime();
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        raw.raw(k, f) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) {
            mpq_class v = -r.rref.raw(i, f);
            raw.raw(k, r.pivot_cols[i]) = prime ? reduce_mod(v, m.field().characteristic()) : v;
        }
    }
    // canonicalize: basis of the kernel presented in RREF
    return row_space_basis(raw);
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(j, i) = m.raw(i, j);
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    check_same_field(a.field(), b.field(), "matrix product");
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    Matrix out(a.field(), a.rows(), b.cols());
    const bool prime = a.field().is_prime();
    mpz_class pz(prime ? a.field().characteristic() : 1ul);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpq_class& aik = a.raw(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const mpq_class& bkj = b.raw(k, j);
                if (sgn(bkj) == 0) continue;
                out.raw(i, j) += aik * bkj;
                out.raw(i, j).canonicalize();
            }
        }
    if (prime)
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j)
                out.raw(i, j) = reduce_mod(out.raw(i, j), a.field().characteristic());
    return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    check_same_field(a.field(), b.field(), "matrix sum");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

Matrix mat_scale(const Scalar& c, const Matrix& a) {
    check_same_field(a.field(), c.field(), "matrix scale");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, c * a.at(i, j));
    return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    check_same_field(a.field(), b.field(), "stack");
    if (a.cols() != b.cols()) throw DimensionMismatch("stack column counts");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.raw(i, j) = a.raw(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.raw(a.rows() + i, j) = b.raw(i, j);
    return out;
}

Matrix intersect_rowspaces(const Matrix& u, const Matrix& v) {
    check_same_field(u.field(), v.field(), "rowspace intersection");
    if (u.cols() != v.cols()) throw DimensionMismatch("rowspace intersection ambient dimensions");
    Matrix ub = row_space_basis(u), vb = row_space_basis(v);
    if (ub.rows() == 0 || vb.rows() == 0) return Matrix(u.field(), 0, u.cols());
    // rows (a|b) with a*U = b*V; x = a*U spans the intersection
    Matrix neg_vb = mat_scale(Scalar::of_int(v.field(), -1), vb);
    Matrix sys = transpose(stack(ub, neg_vb));
    Matrix ab = kernel_basis(sys);
    Matrix a_part(u.field(), ab.rows(), ub.rows());
    for (std::size_t i = 0; i < ab.rows(); ++i)
        for (std::size_t j = 0; j < ub.rows(); ++j) a_part.raw(i, j) = ab.raw(i, j);
    return row_space_basis(mat_mul(a_part, ub));
}

Matrix reduce_against(const Matrix& rref, const std::vector<std::size_t>& pivot_cols, const Matrix& v) {
    if (v.cols() != rref.cols()) throw DimensionMismatch("reduce_against ambient dimensions");
    Matrix out = v;
    for (std::size_t r = 0; r < v.rows(); ++r)
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            mpq_class f = out.raw(r, pivot_cols[i]);
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < rref.cols(); ++j) {
                out.raw(r, j) -= f * rref.raw(i, j);
                out.raw(r, j).canonicalize();
            }
            if (out.field().is_prime())
                for (std::size_t j = 0; j < rref.cols(); ++j)
                    out.raw(r, j) = reduce_mod(out.raw(r, j), out.field().characteristic());
        }
    return out;
}

QuotientCoords quotient_coords(const RowReduceResult& rr, std::size_t ncols) {
    QuotientCoords qc;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (pi < rr.pivot_cols.size() && rr.pivot_cols[pi] == c)
            ++pi;
        else
            qc.nonpivot_cols.push_back(c);
    }
    const Field& f = rr.rref.field();
    Matrix proj(f, ncols, qc.nonpivot_cols.size());
    for (std::size_t j = 0; j < qc.nonpivot_cols.size(); ++j) proj.raw(qc.nonpivot_cols[j], j) = 1;
    for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
        for (std::size_t j = 0; j < qc.nonpivot_cols.size(); ++j) {
            mpq_class v = -rr.rref.raw(pr, qc.nonpivot_cols[j]);
            proj.raw(rr.pivot_cols[pr], j) = f.is_prime() ? reduce_mod(v, f.characteristic()) : v;
        }
    qc.proj = std::move(proj);
    return qc;
}

bool rowspace_contains(const Matrix& rref_basis, const Matrix& v) {
    RowReduceResult r = row_reduce(rref_basis);
    return reduce_against(r.rref, r.pivot_cols, v).is_zero();
}

SolveResult solve_row_system(const Matrix& a, const Matrix& b) {
    // solve x a = b row-wise: transpose to a^T x^T = b^T and eliminate
    // with an augmented column per right-hand side
    Matrix at = transpose(a);
    Matrix bt = transpose(b);
    Matrix x(a.field(), b.rows(), a.rows());
    for (std::size_t k = 0; k < b.rows(); ++k) {
        Matrix system(a.field(), at.rows(), at.cols() + 1);
        for (std::size_t i = 0; i < at.rows(); ++i) {
            for (std::size_t j = 0; j < at.cols(); ++j) system.raw(i, j) = at.raw(i, j);
            system.raw(i, at.cols()) = bt.raw(i, k);
        }
        RowReduceResult rr = row_reduce(system);
        // inconsistent iff a pivot lands in the last column
        for (std::size_t c : rr.pivot_cols)
            if (c == at.cols()) return {false, Matrix(a.field(), 0, 0)};
        std::vector<mpq_class> sol(at.cols(), mpq_class(0));
        for (std::size_t i = 0; i < rr.rank; ++i)
            sol[rr.pivot_cols[i]] = rr.rref.raw(i, at.cols());
        for (std::size_t j = 0; j < at.cols(); ++j) x.raw(k, j) = sol[j];
    }
    return {true, std::move(x)};
}

} // namespace ncproj
