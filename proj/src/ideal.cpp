#include "ncproj/ideal.hpp"

#include <algorithm>

namespace ncproj {

namespace {

// {c : c * rows lies in the row space of target}, as rref rows
Matrix coefficients_into(const Matrix& rows, const Matrix& target) {
    RowReduceResult rr = row_reduce(target);
    Matrix residual = reduce_against(rr.rref, rr.pivot_cols, rows);
    return kernel_basis(transpose(residual));
}

// shrink basis to the subspace whose image under step lies in target
Matrix constrain(const Matrix& basis, const Matrix& step, const Matrix& target) {
    if (basis.rows() == 0) return basis;
    Matrix img = mat_mul(basis, step);
    Matrix c = coefficients_into(img, target);
    if (c.rows() == basis.rows()) return basis;
    return row_space_basis(mat_mul(c, basis));
}

} // namespace

int GradedIdeal::dim(int e) const {
    if (e < 0) return 0;
    if (e > hi) throw WindowExceeded(e, "ideal components stop here");
    return (int)comps[(std::size_t)e].rows();
}

Matrix GradedIdeal::component(int e) const {
    if (e < 0) return Matrix(alg->field(), 0, 0);
    if (e > hi) throw WindowExceeded(e, "ideal components stop here");
    return comps[(std::size_t)e];
}

GradedIdeal make_ideal(AlgebraHandle a, std::vector<FreePoly> gens, Sidedness side, int hi) {
    if (!a) throw Error("ideal needs an algebra");
    if (hi < 0) throw Error("ideal window must reach degree 0");
    if (hi > a->bound()) throw WindowExceeded(hi, "algebra is certified below the requested window");

    GradedIdeal out;
    out.alg = a;
    out.side = side;
    for (FreePoly& g : gens) {
        check_same_table(g.table(), a->table(), "ideal generator");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw InhomogeneousRelation("ideal generator " + g.to_string());
        FreePoly nf = a->normal_form(g);
        if (!nf.is_zero()) out.gens.push_back(std::move(nf));
    }
    out.hi = hi;

    const GenTable& t = *a->table();
    const Field& f = a->field();
    out.comps.reserve((std::size_t)hi + 1);
    for (int e = 0; e <= hi; ++e) {
        Matrix rows(f, 0, (std::size_t)a->dim(e));
        for (const FreePoly& g : out.gens)
            if (g.degree() == e) rows = stack(rows, a->coords(g, e));
        for (std::size_t g = 0; g < t.size(); ++g) {
            int w = t.weight(g);
            if (e - w < 0) continue;
            const Matrix& lower = out.comps[(std::size_t)(e - w)];
            if (lower.rows() == 0) continue;
            rows = stack(rows, mat_mul(lower, a->right_mult_gen(g, e - w)));
            if (side == Sidedness::TwoSided)
                rows = stack(rows, mat_mul(lower, a->left_mult_gen(g, e - w)));
        }
        out.comps.push_back(row_space_basis(rows));
    }
    out.exact.assign((std::size_t)hi + 1, true);
    return out;
}

Matrix ideal_components(const GradedIdeal& i, int e) { return i.component(e); }

TwoSidedCheck is_twosided(const GradedIdeal& k, int D) {
    if (D > k.hi) throw WindowExceeded(D, "ideal components stop here");
    TwoSidedCheck out;
    if (k.side == Sidedness::TwoSided) return out;
    const GradedAlgebra& a = *k.alg;
    const GenTable& t = *a.table();
    for (int e = 0; e <= D; ++e) {
        const Matrix& comp = k.comps[(std::size_t)e];
        if (comp.rows() == 0) continue;
        for (std::size_t g = 0; g < t.size(); ++g) {
            int w = t.weight(g);
            if (e + w > D) continue;
            Matrix img = mat_mul(comp, a.left_mult_gen(g, e));
            RowReduceResult rr = row_reduce(k.comps[(std::size_t)(e + w)]);
            Matrix residual = reduce_against(rr.rref, rr.pivot_cols, img);
            for (std::size_t r = 0; r < residual.rows(); ++r) {
                bool zero = true;
                for (std::size_t c = 0; c < residual.cols() && zero; ++c)
                    zero = residual.at(r, c).is_zero();
                if (zero) continue;
                out.twosided = false;
                out.gen = g;
                out.element = a.poly_of(e, comp, r);
                out.product = a.poly_of(e + w, img, r);
                return out;
            }
        }
    }
    return out;
}

GradedIdeal largest_twosided_inside(const GradedIdeal& k, int D) {
    if (D > k.hi) throw WindowExceeded(D, "ideal components stop here");
    const GradedAlgebra& a = *k.alg;
    const GenTable& t = *a.table();

    GradedIdeal out;
    out.alg = k.alg;
    out.side = Sidedness::TwoSided;
    out.hi = D;
    out.comps.assign(k.comps.begin(), k.comps.begin() + D + 1);
    out.exact.assign((std::size_t)D + 1, false);

    // one descending sweep reaches the window fixpoint: each degree only
    // constrains the degrees below it
    for (int e = D; e >= 0; --e) {
        Matrix& comp = out.comps[(std::size_t)e];
        bool all_in_window = true;
        bool uppers_exact = true;
        for (std::size_t g = 0; g < t.size(); ++g) {
            int w = t.weight(g);
            if (e + w > D) {
                all_in_window = false;
                continue;
            }
            comp = constrain(comp, a.left_mult_gen(g, e), out.comps[(std::size_t)(e + w)]);
            uppers_exact = uppers_exact && out.exact[(std::size_t)(e + w)];
        }
        out.exact[(std::size_t)e] = comp.rows() == 0 || (all_in_window && uppers_exact);
    }
    return out;
}

namespace {

// right ideal phi(m)B generated by the images of the source generators
GradedIdeal image_right_ideal(const AlgebraMorphism& phi, int D) {
    std::vector<FreePoly> gens;
    for (const FreePoly& f : phi.images)
        if (!f.is_zero()) gens.push_back(f);
    return make_ideal(phi.target, std::move(gens), Sidedness::Right, D);
}

} // namespace

AffineHypothesisResult check_affine_hypothesis(const AlgebraMorphism& phi, int nmax, int D) {
    if (nmax < 1) throw Error("exponent bound must be at least 1");
    const GradedAlgebra& b = *phi.target;
    if (D > b.bound()) throw WindowExceeded(D, "target algebra is certified below the window");
    const int n = phi.scale;
    if (D / n > phi.source->bound())
        throw WindowExceeded(D / n, "source algebra is certified below the window");

    GradedIdeal rhs = image_right_ideal(phi, D);
    const Field& f = b.field();

    // phi(m) degree by degree: the image of A_i sits in B_{n*i}
    std::vector<Matrix> mimg;
    mimg.reserve((std::size_t)D + 1);
    for (int d = 0; d <= D; ++d) {
        if (d == 0 || d % n != 0) {
            mimg.push_back(Matrix(f, 0, (std::size_t)b.dim(d)));
            continue;
        }
        mimg.push_back(row_space_basis(phi.component_matrix(d / n)));
    }

    AffineHypothesisResult out;
    out.certified_to = D;
    std::vector<Matrix> power = mimg; // phi(m)^k
    for (int k = 1; k <= nmax; ++k) {
        if (k > 1) {
            std::vector<Matrix> next;
            next.reserve((std::size_t)D + 1);
            for (int e = 0; e <= D; ++e) {
                Matrix rows(f, 0, (std::size_t)b.dim(e));
                for (int d = n; d <= e; d += n) {
                    if (mimg[(std::size_t)d].rows() == 0 || power[(std::size_t)(e - d)].rows() == 0)
                        continue;
                    rows = stack(rows, subspace_mul(b, e - d, power[(std::size_t)(e - d)], d,
                                                    mimg[(std::size_t)d]));
                }
                next.push_back(row_space_basis(rows));
            }
            power = std::move(next);
        }

        // left-module closure of phi(m)^k, degree by degree
        std::vector<Matrix> lhs;
        lhs.reserve((std::size_t)D + 1);
        for (int e = 0; e <= D; ++e) {
            Matrix rows = power[(std::size_t)e];
            for (std::size_t g = 0; g < b.table()->size(); ++g) {
                int w = b.table()->weight(g);
                if (e - w < 0 || lhs[(std::size_t)(e - w)].rows() == 0) continue;
                rows = stack(rows, mat_mul(lhs[(std::size_t)(e - w)], b.left_mult_gen(g, e - w)));
            }
            lhs.push_back(row_space_basis(rows));
        }

        bool ok = true;
        for (int e = 0; e <= D && ok; ++e) {
            const Matrix& rows = lhs[(std::size_t)e];
            if (rows.rows() == 0) continue;
            RowReduceResult rr = row_reduce(rhs.comps[(std::size_t)e]);
            Matrix residual = reduce_against(rr.rref, rr.pivot_cols, rows);
            if (residual.is_zero()) continue;
            ok = false;
            if (k == nmax) {
                for (std::size_t r = 0; r < rows.rows(); ++r) {
                    bool zero = true;
                    for (std::size_t c = 0; c < residual.cols() && zero; ++c)
                        zero = residual.at(r, c).is_zero();
                    if (zero) continue;
                    out.witness = "degree " + std::to_string(e) + " element " +
                                  b.poly_of(e, rows, r).to_string();
                    break;
                }
            }
        }
        if (ok) {
            out.found = true;
            out.n = k;
            return out;
        }
    }
    return out;
}

FiniteModuleReport finite_module_check(const AlgebraMorphism& phi, int D) {
    const GradedAlgebra& b = *phi.target;
    if (D > b.bound()) throw WindowExceeded(D, "target algebra is certified below the window");

    FiniteModuleReport out;
    GradedIdeal r = image_right_ideal(phi, D);
    out.quotient_dims.reserve((std::size_t)D + 1);
    for (int e = 0; e <= D; ++e) out.quotient_dims.push_back(b.dim(e) - r.dim(e));

    int v = D + 1;
    while (v > 0 && out.quotient_dims[(std::size_t)(v - 1)] == 0) --v;
    if (v <= D) {
        out.finite = true;
        out.vanish_from = v;
    }

    out.annihilator = largest_twosided_inside(r, D);
    out.mod_annihilator_dims.reserve((std::size_t)D + 1);
    for (int e = 0; e <= D; ++e)
        out.mod_annihilator_dims.push_back(b.dim(e) - out.annihilator.dim(e));
    return out;
}

AlgebraHandle quotient_algebra(const GradedIdeal& j) {
    if (j.side != Sidedness::TwoSided) throw Error("quotients need a two-sided ideal");
    Presentation pres = j.alg->presentation();
    for (const FreePoly& g : j.gens) pres.relations.push_back(g);
    return make_algebra(std::move(pres), j.alg->bound());
}

AlgebraMorphism quotient_morphism(const AlgebraHandle& a, const AlgebraHandle& aj) {
    if (a->table() != aj->table()) throw ContextMismatch("quotient must share the generator table");
    std::vector<FreePoly> images;
    for (std::size_t g = 0; g < a->table()->size(); ++g)
        images.push_back(FreePoly::monomial(aj->table(), {(Letter)g}, Scalar::one(aj->field())));
    return make_morphism(a, aj, std::move(images), 1);
}

GradedModule quotient_inflate(const GradedIdeal& j, const GradedModule& m) {
    if (j.side != Sidedness::TwoSided) throw Error("inflation needs a two-sided ideal");
    if (m.alg->table() != j.alg->table())
        throw ContextMismatch("module lives over a different generator table");
    for (const FreePoly& g : j.gens) {
        int d = g.degree();
        for (int e = m.lo; e + d <= m.hi; ++e)
            if (!m.action_of_poly(g, e, d).is_zero())
                throw JActsNonzero("generator " + g.to_string() + " acts at degree " +
                                   std::to_string(e));
    }
    GradedModule out = m;
    out.alg = j.alg;
    out.presented = false;
    out.gen_degrees.clear();
    out.relations.clear();
    out.gen_rows.clear();
    out.eval.clear();
    if (out.bottom_exact) out = regenerate(out);
    return out;
}

GradedModule quotient_pullback(const GradedIdeal& j, const AlgebraHandle& quot,
                               const GradedModule& m) {
    if (j.side != Sidedness::TwoSided) throw Error("pullback needs a two-sided ideal");
    if (m.alg.get() != j.alg.get()) throw ContextMismatch("module must live over the ideal's algebra");
    if (quot->table() != j.alg->table())
        throw ContextMismatch("quotient must share the generator table");
    if (!m.bottom_exact)
        throw WindowInsufficient(m.lo, "products from below the window are unknown");

    const GenTable& t = *m.alg->table();
    std::vector<Matrix> rows;
    rows.reserve((std::size_t)(m.hi - m.lo + 1));
    for (int e = m.lo; e <= m.hi; ++e) {
        Matrix r(m.field(), 0, (std::size_t)m.dim(e));
        for (const FreePoly& g : j.gens) {
            int d = g.degree();
            if (e - d < m.lo || m.dim(e - d) == 0) continue;
            r = stack(r, m.action_of_poly(g, e - d, d));
        }
        for (std::size_t g = 0; g < t.size(); ++g) {
            int w = t.weight(g);
            if (e - w < m.lo) continue;
            const Matrix& lower = rows[(std::size_t)(e - w - m.lo)];
            if (lower.rows() == 0) continue;
            r = stack(r, mat_mul(lower, m.action(g, e - w)));
        }
        rows.push_back(row_space_basis(r));
    }

    GradedModule out = quotient_by_rows(m, rows);
    out.alg = quot;
    if (out.bottom_exact) out = regenerate(out);
    return out;
}

TorsionResult torsion_submodule(const GradedIdeal& j, const AlgebraHandle& quot,
                                const GradedModule& m) {
    if (j.side != Sidedness::TwoSided) throw Error("torsion needs a two-sided ideal");
    if (m.alg.get() != j.alg.get()) throw ContextMismatch("module must live over the ideal's algebra");
    if (quot->table() != j.alg->table())
        throw ContextMismatch("quotient must share the generator table");
    if (j.gens.empty()) throw Error("torsion of the zero ideal is the whole module");
    int mind = j.gens.front().degree();
    for (const FreePoly& g : j.gens) mind = std::min(mind, g.degree());
    if (m.lo + mind > m.hi)
        throw WindowInsufficient(m.hi, "window too narrow to test the ideal action");

    const GenTable& t = *m.alg->table();
    const std::size_t span = (std::size_t)(m.hi - m.lo + 1);
    std::vector<Matrix> tor;
    std::vector<bool> exact(span, false);
    tor.reserve(span);
    for (std::size_t i = 0; i < span; ++i)
        tor.push_back(Matrix(m.field(), 0, 0));

    for (int e = m.hi; e >= m.lo; --e) {
        const std::size_t ei = (std::size_t)(e - m.lo);
        Matrix basis = Matrix::identity(m.field(), (std::size_t)m.dim(e));
        bool gens_in_window = true;
        for (const FreePoly& g : j.gens) {
            int d = g.degree();
            if (e + d > m.hi) {
                gens_in_window = false;
                continue;
            }
            if (basis.rows() == 0) break;
            Matrix img = mat_mul(basis, m.action_of_poly(g, e, d));
            Matrix c = kernel_basis(transpose(img));
            if (c.rows() < basis.rows()) basis = row_space_basis(mat_mul(c, basis));
        }
        bool uppers_exact = true;
        for (std::size_t g = 0; g < t.size(); ++g) {
            int w = t.weight(g);
            if (e + w > m.hi) {
                gens_in_window = false;
                continue;
            }
            if (basis.rows() == 0) break;
            basis = constrain(basis, m.action(g, e), tor[(std::size_t)(e + w - m.lo)]);
            uppers_exact = uppers_exact && exact[(std::size_t)(e + w - m.lo)];
        }
        tor[ei] = basis;
        exact[ei] = basis.rows() == 0 || (gens_in_window && uppers_exact);
    }

    TorsionResult out;
    out.mod = submodule_on_rows(m, tor);
    out.mod.alg = quot;
    out.exact = std::move(exact);
    return out;
}

} // namespace ncproj
