#include "ncproj/module.hpp"

#include <algorithm>

namespace ncproj {

namespace {

int cover_dim_at(const GradedAlgebra& a, const std::vector<int>& gd, int e) {
    int t = 0;
    for (int d : gd) t += a.dim(e - d);
    return t;
}

// Right multiplication by generator g on the free cover, block-diagonal:
// slot i contributes A_{e-d_i} -> A_{e+w-d_i}.
Matrix cover_act(const GradedAlgebra& a, const std::vector<int>& gd, std::size_t g, int e) {
    int w = a.table()->weight(g);
    Matrix out(a.field(), static_cast<std::size_t>(cover_dim_at(a, gd, e)),
               static_cast<std::size_t>(cover_dim_at(a, gd, e + w)));
    std::size_t roff = 0, coff = 0;
    for (int d : gd) {
        std::size_t src = static_cast<std::size_t>(a.dim(e - d));
        std::size_t tgt = static_cast<std::size_t>(a.dim(e + w - d));
        if (src > 0 && tgt > 0) {
            const Matrix& rm = a.right_mult_gen(g, e - d);
            for (std::size_t r = 0; r < src; ++r)
                for (std::size_t c = 0; c < tgt; ++c) out.raw(roff + r, coff + c) = rm.raw(r, c);
        }
        roff += src;
        coff += tgt;
    }
    return out;
}

Matrix relation_coords(const GradedAlgebra& a, const std::vector<int>& gd,
                       const std::vector<FreePoly>& row, int e) {
    Matrix out(a.field(), 1, static_cast<std::size_t>(cover_dim_at(a, gd, e)));
    std::size_t off = 0;
    for (std::size_t i = 0; i < gd.size(); ++i) {
        std::size_t cd = static_cast<std::size_t>(a.dim(e - gd[i]));
        if (!row[i].is_zero()) {
            Matrix c = a.coords(row[i], e - gd[i]);
            for (std::size_t j = 0; j < cd; ++j) out.raw(0, off + j) = c.raw(0, j);
        }
        off += cd;
    }
    return out;
}

Matrix take_rows(const Matrix& m, std::size_t n) {
    Matrix out(m.field(), n, m.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.raw(r, c) = m.raw(r, c);
    return out;
}

int basis_pos(const GradedAlgebra& a, int degree, const Word& w) {
    const auto& b = a.basis(degree);
    auto it = std::lower_bound(b.begin(), b.end(), w, [&](const Word& x, const Word& y) {
        return term_compare(*a.table(), x, y) < 0;
    });
    if (it == b.end() || *it != w) throw Error("word missing from the normal basis");
    return static_cast<int>(it - b.begin());
}

} // namespace

int GradedModule::dim(int e) const {
    if (e < lo) {
        if (bottom_exact) return 0;
        throw WindowInsufficient(e, "module degree below the certified window");
    }
    if (e > hi) throw WindowInsufficient(e, "module degree above the certified window");
    return dims[static_cast<std::size_t>(e - lo)];
}

Matrix GradedModule::action(std::size_t g, int e) const {
    int w = alg->table()->weight(g);
    std::size_t de = static_cast<std::size_t>(dim(e));
    std::size_t dt = static_cast<std::size_t>(dim(e + w));
    if (de == 0 || dt == 0) return Matrix(field(), de, dt);
    return act[g][static_cast<std::size_t>(e - lo)];
}

Matrix GradedModule::action_word(const Word& w, int e) const {
    Matrix out = Matrix::identity(field(), static_cast<std::size_t>(dim(e)));
    int d = e;
    for (Letter l : w) {
        out = mat_mul(out, action(l, d));
        d += alg->table()->weight(l);
    }
    return out;
}

Matrix GradedModule::action_of_poly(const FreePoly& f, int e, int deg_hint) const {
    check_same_table(alg->table(), f.table(), "module action");
    if (f.is_zero()) {
        if (deg_hint < 0) throw Error("action of zero needs a degree hint for its shape");
        return Matrix(field(), static_cast<std::size_t>(dim(e)),
                      static_cast<std::size_t>(dim(e + deg_hint)));
    }
    if (!f.is_homogeneous())
        throw InhomogeneousRelation("module action of an inhomogeneous element");
    int df = f.degree();
    if (deg_hint >= 0 && deg_hint != df)
        throw DimensionMismatch("degree hint disagrees with the element's degree");
    Matrix out(field(), static_cast<std::size_t>(dim(e)), static_cast<std::size_t>(dim(e + df)));
    for (const auto& [w, c] : f.terms()) out = mat_add(out, mat_scale(c, action_word(w, e)));
    return out;
}

int GradedModule::cover_dim(int e) const {
    if (!presented) throw Error("module carries no presentation");
    return cover_dim_at(*alg, gen_degrees, e);
}

int GradedModule::cover_offset(std::size_t i, int e) const {
    if (!presented) throw Error("module carries no presentation");
    int off = 0;
    for (std::size_t j = 0; j < i; ++j) off += alg->dim(e - gen_degrees[j]);
    return off;
}

GradedModule present_module(AlgebraHandle alg, std::vector<int> gen_degrees,
                            std::vector<std::vector<FreePoly>> relations, int lo, int hi) {
    if (!alg) throw Error("presentation needs an algebra");
    const GradedAlgebra& A = *alg;
    const Field& F = A.field();
    std::size_t s = gen_degrees.size();
    if (hi < lo) throw Error("empty module window");
    if (s > 0) {
        int mind = *std::min_element(gen_degrees.begin(), gen_degrees.end());
        if (lo > mind) throw Error("window must start at or below the lowest generator degree");
        if (hi > A.bound() + mind)
            throw WindowExceeded(hi, "free cover runs past the algebra bound");
    }

    std::vector<int> rel_deg(relations.size(), -1);
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& row = relations[r];
        if (row.size() != s) throw DimensionMismatch("relation row arity");
        int deg = -1;
        bool seen = false;
        for (std::size_t i = 0; i < s; ++i) {
            check_same_table(A.table(), row[i].table(), "module relation");
            if (row[i].is_zero()) continue;
            if (!row[i].is_homogeneous())
                throw InhomogeneousRelation("module relation slot");
            int d = gen_degrees[i] + row[i].degree();
            if (seen && d != deg) throw InhomogeneousRelation("module relation mixes degrees");
            deg = d;
            seen = true;
        }
        if (!seen) throw Error("zero relation row");
        rel_deg[r] = deg;
    }

    GradedModule m;
    m.alg = alg;
    m.lo = lo;
    m.hi = hi;
    m.bottom_exact = true;
    m.presented = true;
    m.gen_degrees = gen_degrees;
    m.relations = relations;

    std::size_t span = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Matrix> rel_basis;
    std::vector<std::vector<std::size_t>> nonpivots(span);
    rel_basis.reserve(span);
    m.dims.assign(span, 0);
    m.eval.reserve(span);

    for (int e = lo; e <= hi; ++e) {
        std::size_t idx = static_cast<std::size_t>(e - lo);
        std::size_t cd = static_cast<std::size_t>(cover_dim_at(A, gen_degrees, e));
        Matrix rows(F, 0, cd);
        for (std::size_t g = 0; g < A.table()->size(); ++g) {
            int pe = e - A.table()->weight(g);
            if (pe < lo) continue;
            const Matrix& prev = rel_basis[static_cast<std::size_t>(pe - lo)];
            if (prev.rows() == 0) continue;
            rows = stack(rows, mat_mul(prev, cover_act(A, gen_degrees, g, pe)));
        }
        for (std::size_t r = 0; r < relations.size(); ++r)
            if (rel_deg[r] == e)
                rows = stack(rows, relation_coords(A, gen_degrees, relations[r], e));
        RowReduceResult rr = row_reduce(rows);
        QuotientCoords qc = quotient_coords(rr, cd);
        m.dims[idx] = static_cast<int>(cd - rr.rank);
        nonpivots[idx] = std::move(qc.nonpivot_cols);
        m.eval.push_back(std::move(qc.proj));
        rel_basis.push_back(take_rows(rr.rref, rr.rank));
    }

    m.act.assign(A.table()->size(), {});
    for (std::size_t g = 0; g < A.table()->size(); ++g) {
        int w = A.table()->weight(g);
        m.act[g].reserve(span);
        for (int e = lo; e <= hi; ++e) {
            std::size_t idx = static_cast<std::size_t>(e - lo);
            if (e + w > hi || m.dims[idx] == 0 ||
                m.dims[static_cast<std::size_t>(e + w - lo)] == 0) {
                m.act[g].push_back(Matrix(F, 0, 0));
                continue;
            }
            Matrix ca = cover_act(A, gen_degrees, g, e);
            Matrix lift(F, static_cast<std::size_t>(m.dims[idx]), ca.cols());
            for (std::size_t k = 0; k < nonpivots[idx].size(); ++k)
                for (std::size_t c = 0; c < ca.cols(); ++c)
                    lift.raw(k, c) = ca.raw(nonpivots[idx][k], c);
            m.act[g].push_back(mat_mul(lift, m.eval[static_cast<std::size_t>(e + w - lo)]));
        }
    }

    m.gen_rows.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
        int d = gen_degrees[i];
        if (d > hi) throw WindowExceeded(d, "generator degree outside the window");
        std::size_t idx = static_cast<std::size_t>(d - lo);
        std::size_t off = static_cast<std::size_t>(m.cover_offset(i, d));
        Matrix row(F, 1, static_cast<std::size_t>(m.dims[idx]));
        for (std::size_t c = 0; c < row.cols(); ++c) row.raw(0, c) = m.eval[idx].raw(off, c);
        m.gen_rows.push_back(std::move(row));
    }
    return m;
}

GradedModule free_module(AlgebraHandle alg, std::vector<int> gen_degrees, int hi) {
    int lo = 0;
    if (!gen_degrees.empty())
        lo = *std::min_element(gen_degrees.begin(), gen_degrees.end());
    return present_module(std::move(alg), std::move(gen_degrees), {}, lo, hi);
}

GradedModule regular_module(AlgebraHandle alg, int hi) { return free_module(std::move(alg), {0}, hi); }

GradedModule shift_module(const GradedModule& m, int p) {
    GradedModule out = m;
    out.lo = m.lo - p;
    out.hi = m.hi - p;
    for (int& d : out.gen_degrees) d -= p;
    return out;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
    if (a.alg.get() != b.alg.get()) throw ContextMismatch("direct sum over different algebras");
    if (!a.presented || !b.presented) throw Error("direct sum needs presented summands");
    std::vector<int> gd = a.gen_degrees;
    gd.insert(gd.end(), b.gen_degrees.begin(), b.gen_degrees.end());
    FreePoly z = FreePoly::zero(a.alg->table());
    std::vector<std::vector<FreePoly>> rels;
    for (const auto& row : a.relations) {
        auto r = row;
        r.insert(r.end(), b.gen_degrees.size(), z);
        rels.push_back(std::move(r));
    }
    for (const auto& row : b.relations) {
        std::vector<FreePoly> r(a.gen_degrees.size(), z);
        r.insert(r.end(), row.begin(), row.end());
        rels.push_back(std::move(r));
    }
    return present_module(a.alg, std::move(gd), std::move(rels),
                          std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}

GradedModule regenerate(const GradedModule& m) {
    if (!m.bottom_exact)
        throw WindowInsufficient(m.lo, "minimal presentation needs an exact window bottom");
    const GradedAlgebra& A = *m.alg;
    const Field& F = A.field();
    const GenTable& T = *A.table();

    GradedModule out = m;
    out.presented = true;
    out.gen_degrees.clear();
    out.relations.clear();
    out.gen_rows.clear();
    out.eval.clear();

    std::vector<int>& gd = out.gen_degrees;
    // blocks[i][e - d_i]: slot i of the evaluation at module degree e,
    // rows indexed by the normal words of A_{e - d_i}
    std::vector<std::vector<Matrix>> blocks;
    std::vector<Matrix> kernels;
    // raw minimal relations as (degree, cover row); converted after the sweep
    std::vector<std::pair<int, Matrix>> raw_rels;

    for (int e = m.lo; e <= m.hi; ++e) {
        std::size_t de = static_cast<std::size_t>(m.dim(e));

        Matrix low(F, 0, de);
        for (std::size_t g = 0; g < T.size(); ++g) {
            int pe = e - T.weight(g);
            if (pe < m.lo || m.dim(pe) == 0 || de == 0) continue;
            low = stack(low, m.action(g, pe));
        }
        QuotientCoords lq = quotient_coords(row_reduce(low), de);
        for (std::size_t c : lq.nonpivot_cols) {
            Matrix row(F, 1, de);
            row.raw(0, c) = 1;
            gd.push_back(e);
            out.gen_rows.push_back(std::move(row));
            blocks.emplace_back();
        }

        for (std::size_t i = 0; i < gd.size(); ++i) {
            int bd = e - gd[i];
            if (bd < 0) continue;
            if (bd == 0) {
                blocks[i].push_back(out.gen_rows[i]);
                continue;
            }
            std::size_t nw = static_cast<std::size_t>(A.dim(bd));
            Matrix blk(F, nw, de);
            const auto& words = A.basis(bd);
            for (std::size_t r = 0; r < nw; ++r) {
                const Word& v = words[r];
                Letter l = v.back();
                Word head(v.begin(), v.end() - 1);
                int hd = bd - T.weight(l);
                const Matrix& prev = blocks[i][static_cast<std::size_t>(hd)];
                if (prev.cols() == 0 || de == 0) continue;
                Matrix img = mat_mul(prev.row(static_cast<std::size_t>(basis_pos(A, hd, head))),
                                     m.action(l, e - T.weight(l)));
                for (std::size_t c = 0; c < de; ++c) blk.raw(r, c) = img.raw(0, c);
            }
            blocks[i].push_back(std::move(blk));
        }

        std::size_t cd = static_cast<std::size_t>(cover_dim_at(A, gd, e));
        Matrix phi(F, cd, de);
        {
            std::size_t roff = 0;
            for (std::size_t i = 0; i < gd.size(); ++i) {
                int bd = e - gd[i];
                if (bd < 0) continue;
                const Matrix& blk = blocks[i][static_cast<std::size_t>(bd)];
                for (std::size_t r = 0; r < blk.rows(); ++r)
                    for (std::size_t c = 0; c < de; ++c) phi.raw(roff + r, c) = blk.raw(r, c);
                roff += blk.rows();
            }
        }
        if (row_reduce(phi).rank != de)
            throw Error("degree-wise data is not generated inside the window");

        Matrix K = kernel_basis(transpose(phi));

        Matrix klow(F, 0, cd);
        for (std::size_t g = 0; g < T.size(); ++g) {
            int pe = e - T.weight(g);
            if (pe < m.lo) continue;
            const Matrix& kp = kernels[static_cast<std::size_t>(pe - m.lo)];
            if (kp.rows() == 0) continue;
            klow = stack(klow, mat_mul(kp, cover_act(A, gd, g, pe)));
        }
        Matrix acc = row_space_basis(klow);
        for (std::size_t r = 0; r < K.rows(); ++r) {
            Matrix v = K.row(r);
            if (rowspace_contains(acc, v)) continue;
            acc = row_space_basis(stack(acc, v));
            raw_rels.emplace_back(e, std::move(v));
        }
        kernels.push_back(std::move(K));
        out.eval.push_back(std::move(phi));
    }

    for (const auto& [e, v] : raw_rels) {
        std::vector<FreePoly> row;
        std::size_t off = 0;
        for (int d : gd) {
            std::size_t w = static_cast<std::size_t>(A.dim(e - d));
            if (w == 0) {
                row.push_back(FreePoly::zero(A.table()));
            } else {
                Matrix slice(F, 1, w);
                for (std::size_t c = 0; c < w; ++c) slice.raw(0, c) = v.raw(0, off + c);
                row.push_back(A.poly_of(e - d, slice));
            }
            off += w;
        }
        out.relations.push_back(std::move(row));
    }
    return out;
}

GradedModule submodule_on_rows(const GradedModule& m, const std::vector<Matrix>& rows) {
    std::size_t span = static_cast<std::size_t>(m.hi - m.lo + 1);
    if (rows.size() != span) throw DimensionMismatch("one row family per window degree");
    const GradedAlgebra& A = *m.alg;
    const Field& F = A.field();

    std::vector<Matrix> S;
    S.reserve(span);
    for (int e = m.lo; e <= m.hi; ++e) {
        const Matrix& r = rows[static_cast<std::size_t>(e - m.lo)];
        if (r.cols() != static_cast<std::size_t>(m.dim(e)))
            throw DimensionMismatch("row width vs module dimension");
        S.push_back(row_space_basis(r));
    }

    GradedModule out;
    out.alg = m.alg;
    out.lo = m.lo;
    out.hi = m.hi;
    out.bottom_exact = m.bottom_exact;
    out.dims.resize(span);
    for (std::size_t i = 0; i < span; ++i) out.dims[i] = static_cast<int>(S[i].rows());

    out.act.assign(A.table()->size(), {});
    for (std::size_t g = 0; g < A.table()->size(); ++g) {
        int w = A.table()->weight(g);
        for (int e = m.lo; e <= m.hi; ++e) {
            std::size_t idx = static_cast<std::size_t>(e - m.lo);
            if (e + w > m.hi) {
                out.act[g].push_back(Matrix(F, 0, 0));
                continue;
            }
            std::size_t tdx = static_cast<std::size_t>(e + w - m.lo);
            Matrix img = mat_mul(S[idx], m.action(g, e));
            if (out.dims[idx] == 0 || out.dims[tdx] == 0) {
                if (!img.is_zero()) throw Error("rows are not closed under the action");
                out.act[g].push_back(Matrix(F, 0, 0));
                continue;
            }
            SolveResult sr = solve_row_system(S[tdx], img);
            if (!sr.ok) throw Error("rows are not closed under the action");
            out.act[g].push_back(std::move(sr.x));
        }
    }
    return out;
}

GradedModule quotient_by_rows(const GradedModule& m, const std::vector<Matrix>& rows,
                              std::vector<Matrix>* proj_out) {
    std::size_t span = static_cast<std::size_t>(m.hi - m.lo + 1);
    if (rows.size() != span) throw DimensionMismatch("one row family per window degree");
    const GradedAlgebra& A = *m.alg;
    const Field& F = A.field();

    std::vector<Matrix> bases;
    std::vector<QuotientCoords> qcs;
    bases.reserve(span);
    qcs.reserve(span);
    for (int e = m.lo; e <= m.hi; ++e) {
        const Matrix& r = rows[static_cast<std::size_t>(e - m.lo)];
        std::size_t de = static_cast<std::size_t>(m.dim(e));
        if (r.cols() != de) throw DimensionMismatch("row width vs module dimension");
        RowReduceResult rr = row_reduce(r);
        bases.push_back(take_rows(rr.rref, rr.rank));
        qcs.push_back(quotient_coords(rr, de));
    }

    GradedModule out;
    out.alg = m.alg;
    out.lo = m.lo;
    out.hi = m.hi;
    out.bottom_exact = m.bottom_exact;
    out.dims.resize(span);
    for (std::size_t i = 0; i < span; ++i)
        out.dims[i] = static_cast<int>(qcs[i].nonpivot_cols.size());

    out.act.assign(A.table()->size(), {});
    for (std::size_t g = 0; g < A.table()->size(); ++g) {
        int w = A.table()->weight(g);
        for (int e = m.lo; e <= m.hi; ++e) {
            std::size_t idx = static_cast<std::size_t>(e - m.lo);
            if (e + w > m.hi) {
                out.act[g].push_back(Matrix(F, 0, 0));
                continue;
            }
            std::size_t tdx = static_cast<std::size_t>(e + w - m.lo);
            Matrix full = m.action(g, e);
            if (bases[idx].rows() > 0) {
                Matrix img = mat_mul(bases[idx], full);
                if (!rowspace_contains(bases[tdx], img))
                    throw Error("rows are not closed under the action");
            }
            if (out.dims[idx] == 0 || out.dims[tdx] == 0) {
                out.act[g].push_back(Matrix(F, 0, 0));
                continue;
            }
            Matrix lift(F, static_cast<std::size_t>(out.dims[idx]), full.cols());
            for (std::size_t k = 0; k < qcs[idx].nonpivot_cols.size(); ++k)
                for (std::size_t c = 0; c < full.cols(); ++c)
                    lift.raw(k, c) = full.raw(qcs[idx].nonpivot_cols[k], c);
            out.act[g].push_back(mat_mul(lift, qcs[tdx].proj));
        }
    }
    if (proj_out) {
        proj_out->clear();
        for (auto& q : qcs) proj_out->push_back(std::move(q.proj));
    }
    return out;
}

std::vector<FreePoly> express_in_generators(const GradedModule& m, int e, const Matrix& row,
                                            std::size_t r) {
    if (!m.presented) throw Error("module carries no presentation");
    const GradedAlgebra& A = *m.alg;
    const Field& F = A.field();
    std::size_t de = static_cast<std::size_t>(m.dim(e));
    if (row.cols() != de) throw DimensionMismatch("element width vs module dimension");
    if (r >= row.rows()) throw DimensionMismatch("row index out of range");

    std::vector<FreePoly> parts;
    if (de == 0) {
        for (std::size_t i = 0; i < m.gen_degrees.size(); ++i)
            parts.push_back(FreePoly::zero(A.table()));
        return parts;
    }
    SolveResult sr = solve_row_system(m.eval[static_cast<std::size_t>(e - m.lo)], row.row(r));
    if (!sr.ok) throw Error("element is outside the generated span");
    std::size_t off = 0;
    for (int d : m.gen_degrees) {
        std::size_t w = static_cast<std::size_t>(A.dim(e - d));
        if (w == 0) {
            parts.push_back(FreePoly::zero(A.table()));
        } else {
            Matrix slice(F, 1, w);
            for (std::size_t c = 0; c < w; ++c) slice.raw(0, c) = sr.x.raw(0, off + c);
            parts.push_back(A.poly_of(e - d, slice));
        }
        off += w;
    }
    return parts;
}

ModuleMapSpace graded_hom(const GradedModule& m, const GradedModule& n, int p) {
    if (!m.presented) throw Error("Hom needs a presented source");
    if (m.alg.get() != n.alg.get()) throw ContextMismatch("Hom over different algebras");
    const Field& F = n.field();
    std::size_t s = m.gen_degrees.size();

    ModuleMapSpace h;
    h.shift = p;
    h.slot_offsets.assign(s + 1, 0);
    for (std::size_t i = 0; i < s; ++i)
        h.slot_offsets[i + 1] = h.slot_offsets[i] + n.dim(m.gen_degrees[i] + p);
    std::size_t total = static_cast<std::size_t>(h.slot_offsets[s]);

    std::size_t ccols = 0;
    std::vector<int> rel_deg(m.relations.size(), -1);
    for (std::size_t r = 0; r < m.relations.size(); ++r) {
        for (std::size_t i = 0; i < s; ++i)
            if (!m.relations[r][i].is_zero()) {
                rel_deg[r] = m.gen_degrees[i] + m.relations[r][i].degree();
                break;
            }
        ccols += static_cast<std::size_t>(n.dim(rel_deg[r] + p));
    }

    Matrix cons(F, total, ccols);
    std::size_t coff = 0;
    for (std::size_t r = 0; r < m.relations.size(); ++r) {
        std::size_t w = static_cast<std::size_t>(n.dim(rel_deg[r] + p));
        if (w > 0) {
            for (std::size_t i = 0; i < s; ++i) {
                const FreePoly& a = m.relations[r][i];
                if (a.is_zero()) continue;
                std::size_t sw = static_cast<std::size_t>(n.dim(m.gen_degrees[i] + p));
                if (sw == 0) continue;
                Matrix b = n.action_of_poly(a, m.gen_degrees[i] + p);
                for (std::size_t x = 0; x < sw; ++x)
                    for (std::size_t y = 0; y < w; ++y)
                        cons.raw(static_cast<std::size_t>(h.slot_offsets[i]) + x, coff + y) =
                            b.raw(x, y);
            }
        }
        coff += w;
    }
    h.basis = kernel_basis(transpose(cons));
    return h;
}

Matrix hom_apply(const ModuleMapSpace& h, std::size_t k, const GradedModule& m,
                 const GradedModule& n, int e, const Matrix& row, std::size_t r) {
    if (k >= h.basis.rows()) throw DimensionMismatch("map index out of range");
    const Field& F = n.field();
    std::vector<FreePoly> parts = express_in_generators(m, e, row, r);
    Matrix out(F, 1, static_cast<std::size_t>(n.dim(e + h.shift)));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].is_zero()) continue;
        int sd = m.gen_degrees[i] + h.shift;
        std::size_t sw = static_cast<std::size_t>(n.dim(sd));
        if (sw == 0) continue;
        Matrix u(F, 1, sw);
        for (std::size_t c = 0; c < sw; ++c)
            u.raw(0, c) = h.basis.raw(k, static_cast<std::size_t>(h.slot_offsets[i]) + c);
        out = mat_add(out, mat_mul(u, n.action_of_poly(parts[i], sd)));
    }
    return out;
}

} // namespace ncproj
