#include "ncproj/veronese.hpp"

#include <algorithm>
#include <map>

namespace ncproj {

namespace {

// re-anchor a poly on an extended table; letter indices stay valid because
// generators are only ever appended
FreePoly retable(const FreePoly& f, const GenTableHandle& nt) {
    FreePoly out = FreePoly::zero(nt);
    for (const auto& [w, c] : f.terms())
        out = out + FreePoly::monomial(nt, w, Scalar(nt->field(), c.value()));
    return out;
}

// coordinate matrices of the evaluation cur_j -> A_{nj}, degrees 0..k; row r
// of ev[j] is the image of the r-th normal word. Suffixes of normal words
// are normal, so each row is the previous row pushed through one left
// multiplication.
std::vector<Matrix> eval_maps(const GradedAlgebra& cur, const GradedAlgebra& parent, int n,
                              const std::vector<FreePoly>& images, int k) {
    const Field& F = parent.field();
    std::vector<Matrix> ev;
    std::vector<std::map<Word, std::size_t>> index((std::size_t)k + 1);
    for (int j = 0; j <= k; ++j) {
        const std::vector<Word>& words = cur.basis(j);
        Matrix m(F, words.size(), (std::size_t)parent.dim(n * j));
        for (std::size_t r = 0; r < words.size(); ++r) {
            const Word& w = words[r];
            index[(std::size_t)j][w] = r;
            if (w.empty()) {
                m.set(r, 0, Scalar::one(F));
                continue;
            }
            Letter g = w.front();
            int wg = cur.table()->weight(g);
            Word rest(w.begin() + 1, w.end());
            std::size_t pix = index[(std::size_t)(j - wg)].at(rest);
            Matrix img = mat_mul(ev[(std::size_t)(j - wg)].row(pix),
                                 parent.left_mult_elem(images[g], n * (j - wg)));
            for (std::size_t c = 0; c < img.cols(); ++c) m.set(r, c, img.at(0, c));
        }
        ev.push_back(std::move(m));
    }
    return ev;
}

std::vector<std::size_t> nonpivot_columns(const Matrix& rows, std::size_t width) {
    RowReduceResult rr = row_reduce(rows);
    std::vector<bool> piv(width, false);
    for (std::size_t c : rr.pivot_cols) piv[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < width; ++c)
        if (!piv[c]) out.push_back(c);
    return out;
}

} // namespace

VeroneseAlgebra veronese_algebra(const AlgebraHandle& a, int n, int D) {
    if (!a) throw Error("veronese needs an algebra");
    if (n < 1) throw Error("veronese index must be at least 1");
    if (D > a->bound()) throw DegreeAboveBound(D, "parent algebra is certified below the window");
    const Field& F = a->field();
    const int dv = D / n;

    VeroneseAlgebra out;
    out.parent = a;
    out.n = n;
    out.searched_to = dv;

    std::vector<GeneratorInfo> gens;
    std::vector<FreePoly> images; // over the parent table
    std::vector<FreePoly> rels;   // over the current veronese table
    GenTableHandle vt = make_gen_table(F, {});
    AlgebraHandle cur = make_algebra(make_presentation(vt, {}), dv);

    for (int i = 1; i <= dv; ++i) {
        // generators: complement of the products of lower components
        std::size_t width = (std::size_t)a->dim(n * i);
        Matrix reach(F, 0, width);
        for (int j = 1; j < i; ++j)
            reach = stack(reach, component_mul_full(*a, n * j, n * (i - j)));
        bool changed = false;
        std::size_t k = 0;
        for (std::size_t c : nonpivot_columns(reach, width)) {
            if (gens.size() >= 255)
                throw Error("veronese presentation needs more than 255 generators");
            gens.push_back({"v" + std::to_string(i) + "_" + std::to_string(k++), i});
            Matrix unit(F, 1, width);
            unit.set(0, c, Scalar::one(F));
            images.push_back(a->poly_of(n * i, unit));
            changed = true;
        }
        if (changed) {
            vt = make_gen_table(F, gens);
            for (FreePoly& r : rels) r = retable(r, vt);
            cur = make_algebra(make_presentation(vt, rels), dv);
        }

        // relations: kernel of the evaluation into A_{ni}
        std::vector<Matrix> ev = eval_maps(*cur, *a, n, images, i);
        Matrix ker = kernel_basis(transpose(ev[(std::size_t)i]));
        if (ker.rows() > 0) {
            for (std::size_t r = 0; r < ker.rows(); ++r) {
                rels.push_back(cur->poly_of(i, ker, r));
                out.relation_degrees.push_back(i);
            }
            cur = make_algebra(make_presentation(vt, rels), dv);
        }
        if (cur->dim(i) != a->dim(n * i))
            throw Error("veronese dimension mismatch in degree " + std::to_string(i));
    }

    out.presentation = cur;
    out.embedding = make_morphism(cur, a, images, n);
    return out;
}

GradedModule veronese_pushforward(const VeroneseAlgebra& v, const GradedModule& m) {
    return restrict_along(v.embedding, m);
}

GradedModule veronese_pullback(const VeroneseAlgebra& v, const GradedModule& nmod, int lo, int hi) {
    GradedModule out = induce_along(v.embedding, nmod, lo, hi);
    // the unit: pushing the pullback back down reproduces the module
    GradedModule back = restrict_along(v.embedding, out);
    int clo = std::max(back.lo, nmod.lo), chi = std::min(back.hi, nmod.hi);
    for (int i = clo; i <= chi; ++i)
        if (back.dim(i) != nmod.dim(i))
            throw Error("veronese unit failed in degree " + std::to_string(i));
    return out;
}

GradedModule veronese_coinduce(const VeroneseAlgebra& v, const GradedModule& nmod, int lo, int hi) {
    return coinduce_along(v.embedding, nmod, lo, hi);
}

namespace {

// I_r as a right ideal: every component A_d with d = r (mod n) joins whole,
// everything else is the right-multiplication closure from below. Minimal
// generators are the complements picked up along the way.
GradedIdeal family_component(const AlgebraHandle& a, int n, int r, int D) {
    const GradedAlgebra& A = *a;
    const Field& F = A.field();
    const int rem = ((r % n) + n) % n;

    GradedIdeal k;
    k.alg = a;
    k.side = Sidedness::Right;
    k.hi = D;
    for (int e = 0; e <= D; ++e) {
        std::size_t de = (std::size_t)A.dim(e);
        Matrix rows(F, 0, de);
        for (std::size_t g = 0; g < A.table()->size(); ++g) {
            int w = A.table()->weight(g);
            if (e - w < 0) continue;
            const Matrix& lower = k.comps[(std::size_t)(e - w)];
            if (lower.rows() == 0) continue;
            rows = stack(rows, mat_mul(lower, A.right_mult_gen(g, e - w)));
        }
        rows = row_space_basis(rows);
        if (e % n == rem) {
            for (std::size_t c : nonpivot_columns(rows, de)) {
                Matrix unit(F, 1, de);
                unit.set(0, c, Scalar::one(F));
                k.gens.push_back(A.poly_of(e, unit));
            }
            k.comps.push_back(Matrix::identity(F, de));
        } else {
            k.comps.push_back(std::move(rows));
        }
        k.exact.push_back(true);
    }
    return k;
}

bool twosided_on_window(const GradedIdeal& k, int D) {
    const GradedAlgebra& A = *k.alg;
    for (int e = 0; e <= D; ++e) {
        if (k.dim(e) == 0) continue;
        for (std::size_t g = 0; g < A.table()->size(); ++g) {
            int w = A.table()->weight(g);
            if (e + w > D) continue;
            Matrix moved = mat_mul(k.component(e), A.left_mult_gen(g, e));
            if (!rowspace_contains(k.component(e + w), moved)) return false;
        }
    }
    return true;
}

} // namespace

IdealFamily ideal_family(const AlgebraHandle& a, int n, int D) {
    if (!a) throw Error("ideal family needs an algebra");
    if (n < 1) throw Error("veronese index must be at least 1");
    if (D > a->bound()) throw DegreeAboveBound(D, "algebra is certified below the window");

    IdealFamily out;
    out.alg = a;
    out.n = n;
    out.hi = D;
    for (int r = 1; r <= n; ++r) out.ir.push_back(family_component(a, n, r, D));

    out.isect.alg = a;
    out.isect.side = Sidedness::Right;
    out.isect.hi = D;
    for (int e = 0; e <= D; ++e) {
        Matrix comp = out.ir[0].comps[(std::size_t)e];
        for (int r = 2; r <= n; ++r)
            comp = intersect_rowspaces(comp, out.ir[(std::size_t)(r - 1)].comps[(std::size_t)e]);
        out.isect.comps.push_back(std::move(comp));
        out.isect.exact.push_back(true);
    }
    out.isect_twosided = twosided_on_window(out.isect, D);
    if (out.isect_twosided) out.isect.side = Sidedness::TwoSided;
    return out;
}

LemmaIReport check_lemma_I(const AlgebraHandle& a, int n, int D) {
    IdealFamily fam = ideal_family(a, n, D);
    const GradedAlgebra& A = *a;
    const Field& F = A.field();
    const GradedIdeal& I = fam.isect;

    LemmaIReport rep;
    rep.n = n;
    rep.hi = D;
    for (int e = 0; e <= D && rep.min_i_degree < 0; ++e)
        if (I.dim(e) > 0) rep.min_i_degree = e;
    if (rep.min_i_degree >= 0 && 2 * n * rep.min_i_degree > D)
        throw WindowInsufficient(2 * n * rep.min_i_degree,
                                 "window cannot hold the 2n-fold power of the ideal");

    // I^{2n} degree by degree
    std::vector<Matrix> power;
    for (int e = 0; e <= D; ++e) power.push_back(I.component(e));
    for (int k = 2; k <= 2 * n; ++k) {
        std::vector<Matrix> next;
        for (int e = 0; e <= D; ++e) {
            Matrix rows(F, 0, (std::size_t)A.dim(e));
            for (int d = 0; d <= e; ++d) {
                if (power[(std::size_t)(e - d)].rows() == 0 || I.dim(d) == 0) continue;
                rows = stack(rows,
                             subspace_mul(A, e - d, power[(std::size_t)(e - d)], d, I.component(d)));
            }
            next.push_back(row_space_basis(rows));
        }
        power = std::move(next);
    }

    // the right ideal the n-divisible components of I generate
    std::vector<Matrix> rhs;
    for (int e = 0; e <= D; ++e) {
        Matrix rows = (e % n == 0) ? I.component(e) : Matrix(F, 0, (std::size_t)A.dim(e));
        for (std::size_t g = 0; g < A.table()->size(); ++g) {
            int w = A.table()->weight(g);
            if (e - w < 0 || rhs[(std::size_t)(e - w)].rows() == 0) continue;
            rows = stack(rows, mat_mul(rhs[(std::size_t)(e - w)], A.right_mult_gen(g, e - w)));
        }
        rhs.push_back(row_space_basis(rows));
    }

    for (int e = 0; e <= D; ++e) {
        rep.lhs_dims.push_back((int)power[(std::size_t)e].rows());
        rep.rhs_dims.push_back((int)rhs[(std::size_t)e].rows());
        bool p = rowspace_contains(rhs[(std::size_t)e], power[(std::size_t)e]);
        rep.pass.push_back(p);
        if (!p) rep.ok = false;
    }
    return rep;
}

GradedModule projector(const GradedModule& m, int n, int r) {
    if (n < 1) throw Error("veronese index must be at least 1");
    const GradedAlgebra& A = *m.alg;
    for (int i = 1; i <= A.bound(); ++i)
        if (i % n != 0 && A.dim(i) != 0)
            throw AlgebraNotConcentrated("algebra has dimension in degree " + std::to_string(i) +
                                         " which is not divisible by " + std::to_string(n));
    const Field& F = A.field();
    const int rem = ((r % n) + n) % n;

    std::vector<Matrix> rows;
    for (int e = m.lo; e <= m.hi; ++e) {
        std::size_t de = (std::size_t)m.dim(e);
        if (((e % n) + n) % n == rem)
            rows.push_back(Matrix::identity(F, de));
        else
            rows.push_back(Matrix(F, 0, de));
    }
    GradedModule out = submodule_on_rows(m, rows);
    return m.bottom_exact ? regenerate(out) : out;
}

bool tails_window_equal(const GradedModule& m, const GradedModule& nmod, int s, int hi,
                        std::string* note) {
    if (note) note->clear();
    if (m.alg.get() != nmod.alg.get())
        throw ContextMismatch("window comparison needs modules over one algebra");
    if (s > hi) throw Error("empty comparison window");
    if (m.hi < hi || nmod.hi < hi)
        throw WindowInsufficient(hi, "modules are not certified across the window");

    const GradedAlgebra& A = *m.alg;
    const Field& F = A.field();
    const std::size_t span = (std::size_t)(hi - s + 1);

    for (int e = s; e <= hi; ++e)
        if (m.dim(e) != nmod.dim(e)) return false;

    std::vector<std::size_t> off(span + 1, 0);
    for (std::size_t i = 0; i < span; ++i) {
        std::size_t d = (std::size_t)m.dim(s + (int)i);
        off[i + 1] = off[i] + d * d;
    }
    const std::size_t total = off[span];
    if (total == 0) return true;

    // one equation per entry of each intertwining square
    std::size_t neq = 0;
    for (std::size_t g = 0; g < A.table()->size(); ++g) {
        int w = A.table()->weight(g);
        for (int e = s; e + w <= hi; ++e)
            neq += (std::size_t)(m.dim(e) * m.dim(e + w));
    }
    Matrix sys(F, total, neq);
    std::size_t q = 0;
    for (std::size_t g = 0; g < A.table()->size(); ++g) {
        int w = A.table()->weight(g);
        for (int e = s; e + w <= hi; ++e) {
            std::size_t d0 = (std::size_t)m.dim(e), d1 = (std::size_t)m.dim(e + w);
            if (d0 == 0 || d1 == 0) continue;
            Matrix am = m.action(g, e), an = nmod.action(g, e);
            std::size_t b0 = off[(std::size_t)(e - s)], b1 = off[(std::size_t)(e + w - s)];
            for (std::size_t i = 0; i < d0; ++i)
                for (std::size_t j = 0; j < d1; ++j) {
                    for (std::size_t t = 0; t < d1; ++t)
                        sys.raw(b1 + t * d1 + j, q) += am.raw(i, t);
                    for (std::size_t t = 0; t < d0; ++t)
                        sys.raw(b0 + i * d0 + t, q) -= an.raw(t, j);
                    ++q;
                }
        }
    }
    Matrix sol = kernel_basis(transpose(sys));
    if (sol.rows() == 0) return false;

    auto invertible = [&](const Matrix& x) {
        for (std::size_t b = 0; b < span; ++b) {
            std::size_t d = (std::size_t)m.dim(s + (int)b);
            if (d == 0) continue;
            Matrix blk(F, d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) blk.raw(i, j) = x.raw(0, off[b] + i * d + j);
            if (row_reduce(blk).rank != d) return false;
        }
        return true;
    };

    std::size_t tries = 0;
    for (std::size_t r = 0; r < sol.rows() && tries < 25; ++r, ++tries)
        if (invertible(sol.row(r))) return true;
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    while (tries < 25) {
        Matrix x(F, 1, total);
        for (std::size_t r = 0; r < sol.rows(); ++r) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            long c = (long)((state >> 33) % 7) - 3;
            if (c == 0) continue;
            x = mat_add(x, mat_scale(Scalar::of_int(F, c), sol.row(r)));
        }
        ++tries;
        if (invertible(x)) return true;
    }
    if (note)
        *note = "intertwiner space has dimension " + std::to_string(sol.rows()) +
                " but no invertible combination was sampled";
    return false;
}

VerevkinReport verevkin_defect(const AlgebraHandle& a, int n, const GradedModule& m, int D) {
    if (m.alg.get() != a.get()) throw ContextMismatch("module is not over the given algebra");
    if (D > a->bound()) throw DegreeAboveBound(D, "algebra is certified below the window");
    if (!m.bottom_exact)
        throw WindowInsufficient(m.lo, "module window is open at the bottom");
    const GradedAlgebra& A = *a;
    const Field& F = A.field();
    const int mh = std::min(m.hi, D);
    if (mh < m.lo) throw WindowInsufficient(D, "analysis window misses the module");

    VerevkinReport rep;
    rep.n = n;

    VeroneseAlgebra v = veronese_algebra(a, n, D);
    IdealFamily fam = ideal_family(a, n, D);
    const GradedIdeal& I = fam.isect;

    // the image submodule: right closure of the n-divisible components of m
    std::vector<Matrix> sub;
    for (int e = m.lo; e <= mh; ++e) {
        std::size_t de = (std::size_t)m.dim(e);
        if (((e % n) + n) % n == 0) {
            sub.push_back(Matrix::identity(F, de));
            continue;
        }
        Matrix rows(F, 0, de);
        for (std::size_t g = 0; g < A.table()->size(); ++g) {
            int w = A.table()->weight(g);
            if (e - w < m.lo) continue;
            const Matrix& lower = sub[(std::size_t)(e - w - m.lo)];
            if (lower.rows() == 0) continue;
            rows = stack(rows, mat_mul(lower, m.action(g, e - w)));
        }
        sub.push_back(row_space_basis(rows));
    }

    rep.clo = m.lo;
    rep.chi = mh;
    for (int e = m.lo; e <= mh; ++e)
        rep.cokernel_dims.push_back(m.dim(e) - (int)sub[(std::size_t)(e - m.lo)].rows());

    // the pullback of the pushforward, and the multiplication map down to m
    GradedModule nn = restrict_along(v.embedding, m);
    if (!nn.presented) throw WindowInsufficient(nn.lo, "pushforward could not be presented");
    GradedModule p;
    if (nn.gen_degrees.empty()) {
        p = present_module(a, {}, {}, m.lo, mh);
    } else {
        int mingd = *std::min_element(nn.gen_degrees.begin(), nn.gen_degrees.end());
        int plo = n * mingd;
        // stay where the pushforward window covers every n-divisible degree
        int phi = std::min({mh, a->bound() + plo, n * nn.hi + n - 1});
        if (phi < plo) throw WindowInsufficient(phi, "analysis window misses the induced module");
        p = induce_along(v.embedding, nn, plo, phi);
    }
    rep.klo = p.lo;
    rep.khi = p.hi;

    std::vector<Matrix> ker;
    for (int e = p.lo; e <= p.hi; ++e) {
        std::size_t dp = (std::size_t)p.dim(e);
        std::size_t dm = (std::size_t)m.dim(e);
        if (dp == 0) {
            rep.kernel_dims.push_back(0);
            ker.push_back(Matrix(F, 0, 0));
            continue;
        }
        // multiplication on the free cover: slot i sends a word to the
        // generator row of the pushforward moved by that word inside m
        Matrix cover_map(F, (std::size_t)p.cover_dim(e), dm);
        for (std::size_t i = 0; i < p.gen_degrees.size(); ++i) {
            int d = p.gen_degrees[i];
            if (e - d < 0) continue;
            std::size_t base = (std::size_t)p.cover_offset(i, e);
            const std::vector<Word>& words = A.basis(e - d);
            for (std::size_t c = 0; c < words.size(); ++c) {
                Matrix img = mat_mul(nn.gen_rows[i], m.action_word(words[c], d));
                for (std::size_t t = 0; t < dm; ++t) cover_map.set(base + c, t, img.at(0, t));
            }
        }
        const Matrix& ev = p.eval[(std::size_t)(e - p.lo)];
        SolveResult lift = solve_row_system(ev, Matrix::identity(F, dp));
        if (!lift.ok) throw Error("induced cover does not project onto the module");
        Matrix mu = mat_mul(lift.x, cover_map);
        if (!(mat_mul(ev, mu) == cover_map))
            throw Error("multiplication map is not well defined on the induced module");

        Matrix img = row_space_basis(mu);
        const Matrix& se = sub[(std::size_t)(e - m.lo)];
        if (img.rows() != se.rows() || !rowspace_contains(row_space_basis(se), img))
            throw Error("induced image disagrees with the generated submodule");
        rep.kernel_dims.push_back((int)dp - (int)img.rows());
        ker.push_back(kernel_basis(transpose(mu)));
    }

    // cokernel * I = 0: every component of m lands in the image submodule
    for (int e = m.lo; e <= mh && rep.cokernel_annihilated; ++e) {
        if (m.dim(e) == 0) continue;
        for (int d = 0; d <= mh - e && d <= fam.hi && rep.cokernel_annihilated; ++d) {
            Matrix comp = I.component(d);
            for (std::size_t r = 0; r < comp.rows(); ++r) {
                Matrix img = mat_mul(Matrix::identity(F, (std::size_t)m.dim(e)),
                                     m.action_of_poly(A.poly_of(d, comp, r), e, d));
                if (!rowspace_contains(sub[(std::size_t)(e + d - m.lo)], img)) {
                    rep.cokernel_annihilated = false;
                    break;
                }
            }
        }
    }

    // kernel * I = 0 inside the induced module
    for (int e = p.lo; e <= p.hi && rep.kernel_annihilated; ++e) {
        const Matrix& kb = ker[(std::size_t)(e - p.lo)];
        if (kb.rows() == 0) continue;
        for (int d = 0; d <= p.hi - e && d <= fam.hi && rep.kernel_annihilated; ++d) {
            Matrix comp = I.component(d);
            for (std::size_t r = 0; r < comp.rows(); ++r) {
                if (!mat_mul(kb, p.action_of_poly(A.poly_of(d, comp, r), e, d)).is_zero()) {
                    rep.kernel_annihilated = false;
                    break;
                }
            }
        }
    }
    return rep;
}

MinVeroneseResult min_veronese_gen1(const AlgebraHandle& a, int dmax) {
    if (!a) throw Error("veronese search needs an algebra");
    if (dmax < 1) throw Error("search bound must be at least 1");
    const GradedAlgebra& A = *a;
    const Field& F = A.field();

    MinVeroneseResult out;
    for (int d = 1; d <= dmax; ++d) {
        int top = A.bound() / d;
        if (top < 2) break; // nothing testable here or for any larger d
        Matrix first = Matrix::identity(F, (std::size_t)A.dim(d));
        Matrix power = first;
        bool ok = true;
        for (int i = 2; i <= top && ok; ++i) {
            if (power.rows() == 0) {
                ok = A.dim(d * i) == 0;
                continue;
            }
            power = subspace_mul(A, d, first, d * (i - 1), power);
            if ((int)power.rows() != A.dim(d * i)) ok = false;
        }
        if (ok) {
            out.found = true;
            out.d = d;
            out.certified_i = top;
            return out;
        }
    }
    return out;
}

} // namespace ncproj
