#include "ncproj/bimodule.hpp"

#include <algorithm>
#include <limits>

namespace ncproj {

namespace {

int relation_degree(const GradedModule& m, std::size_t r) {
    for (std::size_t i = 0; i < m.gen_degrees.size(); ++i)
        if (!m.relations[r][i].is_zero())
            return m.gen_degrees[i] + m.relations[r][i].degree();
    throw Error("relation row is zero");
}

} // namespace

const GradedModule& BigradedBimodule::row(int p) const {
    if (p < plo || p > phi)
        throw WindowInsufficient(p, "bimodule row outside the stored window");
    return rows[(std::size_t)(p - plo)];
}

Matrix BigradedBimodule::left_action(std::size_t g, int p, int q) const {
    const GenTable& tab = *f.target->table();
    const int i = tab.weight(g);
    const GradedModule& rp = row(p);
    if (p + i > phi)
        throw WindowInsufficient(p + i, "bimodule row outside the stored window");
    const GradedModule& rt = row(p + i);
    const int dsrc = rp.dim(q);
    const int dtgt = rt.dim(q);
    if (dsrc == 0 || dtgt == 0) return Matrix(f.target->field(), (std::size_t)dsrc, (std::size_t)dtgt);
    return lact[g][(std::size_t)(p - plo)][(std::size_t)(q - rp.lo)];
}

Matrix BigradedBimodule::left_poly_action(const FreePoly& a, int p, int q, int deg_hint) const {
    const Field& F = f.target->field();
    const GenTable& tab = *f.target->table();
    if (a.is_zero()) {
        if (deg_hint < 0) throw Error("left action of zero needs a degree hint");
        return Matrix(F, (std::size_t)row(p).dim(q), (std::size_t)row(p + deg_hint).dim(q));
    }
    if (!a.is_homogeneous())
        throw InhomogeneousRelation("left action needs a homogeneous element");
    const int deg = a.degree();
    const int dsrc = row(p).dim(q);
    const int dtgt = row(p + deg).dim(q);
    Matrix out(F, (std::size_t)dsrc, (std::size_t)dtgt);
    if (dsrc == 0 || dtgt == 0) return out;
    for (const auto& [w, c] : a.terms()) {
        Matrix acc = Matrix::identity(F, (std::size_t)dsrc);
        int pp = p;
        bool dead = false;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            acc = mat_mul(acc, left_action(*it, pp, q));
            pp += tab.weight(*it);
            if (acc.cols() == 0) { dead = true; break; }
        }
        if (dead) continue;
        out = mat_add(out, mat_scale(c, acc));
    }
    return out;
}

BigradedBimodule watts_bimodule(const AlgebraMorphism& f, int plo, int phi) {
    if (!f.source || !f.target) throw Error("morphism carries no algebras");
    if (phi < plo) throw Error("empty row window");
    BigradedBimodule out;
    out.f = f;
    out.plo = plo;
    out.phi = phi;
    const int bound = f.target->bound();
    const int n = f.scale;
    GradedModule reg = regular_module(f.target, bound);
    out.rows.reserve((std::size_t)(phi - plo + 1));
    for (int p = plo; p <= phi; ++p)
        out.rows.push_back(restrict_along(f, shift_module(reg, p)));

    // restrict_along regenerates in the original coordinates, so the stored
    // bases at degree q are the parent bases at degree n*q + p and the left
    // multiplications of the parent restrict verbatim.
    const GenTable& tab = *f.target->table();
    out.lact.assign(tab.size(), {});
    for (std::size_t g = 0; g < tab.size(); ++g) {
        const int i = tab.weight(g);
        auto& per = out.lact[g];
        per.resize(out.rows.size());
        for (int p = plo; p <= phi; ++p) {
            const GradedModule& rp = out.rows[(std::size_t)(p - plo)];
            auto& slots = per[(std::size_t)(p - plo)];
            slots.reserve((std::size_t)(rp.hi - rp.lo + 1));
            for (int q = rp.lo; q <= rp.hi; ++q) {
                bool stored = p + i <= phi;
                if (stored) stored = q <= out.rows[(std::size_t)(p + i - plo)].hi;
                if (!stored) {
                    slots.push_back(Matrix(f.target->field(), 0, 0));
                    continue;
                }
                slots.push_back(f.target->left_mult_gen(g, n * q + p));
            }
        }
    }
    return out;
}

GradedModule bar_tensor(const GradedModule& l, const BigradedBimodule& m) {
    if (!m.f.target || l.alg.get() != m.f.target.get())
        throw ContextMismatch("left factor must live over the bimodule's target algebra");
    if (!l.presented) throw Error("bar tensor needs a presented left factor");
    const Field& F = l.field();
    const std::size_t s = l.gen_degrees.size();

    GradedModule out;
    out.alg = m.f.source;
    if (s == 0) {
        out.lo = out.hi = 0;
        out.dims = {0};
        out.act.assign(m.f.source->table()->size(), {Matrix(F, 0, 0)});
        return out;
    }

    std::vector<int> rel_deg(l.relations.size(), 0);
    for (std::size_t r = 0; r < l.relations.size(); ++r)
        rel_deg[r] = relation_degree(l, r);

    std::vector<int> used;
    for (int d : l.gen_degrees) used.push_back(-d);
    for (int re : rel_deg) used.push_back(-re);

    int qhi = std::numeric_limits<int>::max();
    int qlo_all = std::numeric_limits<int>::max();
    int qlo_hard = std::numeric_limits<int>::min();
    bool exact = true;
    for (int p : used) {
        const GradedModule& rp = m.row(p);
        qhi = std::min(qhi, rp.hi);
        qlo_all = std::min(qlo_all, rp.lo);
        if (!rp.bottom_exact) {
            exact = false;
            qlo_hard = std::max(qlo_hard, rp.lo);
        }
    }
    const int qlo = exact ? qlo_all : qlo_hard;
    if (qhi < qlo) throw WindowInsufficient(qlo, "bar tensor window is empty");

    out.lo = qlo;
    out.hi = qhi;
    out.bottom_exact = exact;
    const std::size_t span = (std::size_t)(qhi - qlo + 1);

    // degree-q data: block offsets in the glued cover, quotient coordinates
    std::vector<std::vector<std::size_t>> offs(span);
    std::vector<QuotientCoords> qc(span);
    out.dims.assign(span, 0);
    for (int q = qlo; q <= qhi; ++q) {
        const std::size_t qi = (std::size_t)(q - qlo);
        auto& off = offs[qi];
        off.assign(s + 1, 0);
        for (std::size_t i = 0; i < s; ++i)
            off[i + 1] = off[i] + (std::size_t)m.row(-l.gen_degrees[i]).dim(q);
        const std::size_t total = off[s];

        std::size_t nrel = 0;
        for (std::size_t r = 0; r < l.relations.size(); ++r)
            nrel += (std::size_t)m.row(-rel_deg[r]).dim(q);
        Matrix rels(F, nrel, total);
        std::size_t base = 0;
        for (std::size_t r = 0; r < l.relations.size(); ++r) {
            const int dr = m.row(-rel_deg[r]).dim(q);
            if (dr == 0) continue;
            for (std::size_t i = 0; i < s; ++i) {
                const FreePoly& slot = l.relations[r][i];
                if (slot.is_zero()) continue;
                Matrix img = m.left_poly_action(slot, -rel_deg[r], q);
                for (std::size_t a = 0; a < img.rows(); ++a)
                    for (std::size_t b = 0; b < img.cols(); ++b)
                        rels.set(base + a, off[i] + b, img.at(a, b));
            }
            base += (std::size_t)dr;
        }
        qc[qi] = quotient_coords(row_reduce(rels), total);
        out.dims[qi] = (int)qc[qi].nonpivot_cols.size();
    }

    const GenTable& stab = *m.f.source->table();
    out.act.assign(stab.size(), {});
    for (std::size_t g = 0; g < stab.size(); ++g) {
        const int w = stab.weight(g);
        auto& per = out.act[g];
        per.reserve(span);
        for (int q = qlo; q <= qhi; ++q) {
            const std::size_t qi = (std::size_t)(q - qlo);
            if (q + w > qhi) {
                per.push_back(Matrix(F, (std::size_t)out.dims[qi], 0));
                continue;
            }
            const std::size_t ti = (std::size_t)(q + w - qlo);
            Matrix a(F, (std::size_t)out.dims[qi], (std::size_t)out.dims[ti]);
            if (out.dims[qi] > 0 && out.dims[ti] > 0) {
                std::vector<Matrix> blocks;
                blocks.reserve(s);
                for (std::size_t i = 0; i < s; ++i)
                    blocks.push_back(m.row(-l.gen_degrees[i]).action(g, q));
                const std::size_t tgt_total = offs[ti][s];
                for (std::size_t k = 0; k < qc[qi].nonpivot_cols.size(); ++k) {
                    const std::size_t c = qc[qi].nonpivot_cols[k];
                    std::size_t blk = 0;
                    while (c >= offs[qi][blk + 1]) ++blk;
                    const std::size_t inner = c - offs[qi][blk];
                    Matrix v(F, 1, tgt_total);
                    const Matrix& bm = blocks[blk];
                    for (std::size_t b = 0; b < bm.cols(); ++b)
                        v.set(0, offs[ti][blk] + b, bm.at(inner, b));
                    Matrix coords = mat_mul(v, qc[ti].proj);
                    for (std::size_t b = 0; b < coords.cols(); ++b)
                        a.set(k, b, coords.at(0, b));
                }
            }
            per.push_back(std::move(a));
        }
    }
    return out;
}

GradedModule underline_hom(const BigradedBimodule& m, const GradedModule& n, int hlo, int hhi) {
    if (!m.f.source || n.alg.get() != m.f.source.get())
        throw ContextMismatch("hom target must live over the bimodule's source algebra");
    if (hhi < hlo) throw Error("empty hom window");
    if (-hhi < m.plo || -hlo > m.phi)
        throw WindowInsufficient(-hhi, "bimodule row outside the stored window");
    const Field& F = m.f.target->field();

    std::vector<ModuleMapSpace> homs;
    homs.reserve((std::size_t)(hhi - hlo + 1));
    for (int p = hlo; p <= hhi; ++p) homs.push_back(graded_hom(m.row(-p), n, 0));

    GradedModule out;
    out.alg = m.f.target;
    out.lo = hlo;
    out.hi = hhi;
    out.bottom_exact = false; // hom spaces below hlo are simply not computed
    const std::size_t span = homs.size();
    out.dims.assign(span, 0);
    for (std::size_t i = 0; i < span; ++i) out.dims[i] = (int)homs[i].size();

    const GenTable& tab = *m.f.target->table();
    out.act.assign(tab.size(), {});
    for (std::size_t g = 0; g < tab.size(); ++g) {
        const int w = tab.weight(g);
        auto& per = out.act[g];
        per.reserve(span);
        for (int p = hlo; p <= hhi; ++p) {
            const std::size_t pi = (std::size_t)(p - hlo);
            if (p + w > hhi) {
                per.push_back(Matrix(F, (std::size_t)out.dims[pi], 0));
                continue;
            }
            const std::size_t ti = (std::size_t)(p + w - hlo);
            const ModuleMapSpace& src = homs[pi];
            const ModuleMapSpace& dst = homs[ti];
            Matrix a(F, src.size(), dst.size());
            if (src.size() > 0) {
                // precompose with the left action: push the generators of
                // row(-p-w) into row(-p), apply the hom, express in dst
                const GradedModule& rdn = m.row(-(p + w));
                const GradedModule& rup = m.row(-p);
                const std::size_t cols = dst.slot_offsets.back();
                for (std::size_t k = 0; k < src.size(); ++k) {
                    Matrix tuple(F, 1, cols);
                    for (std::size_t j = 0; j < rdn.gen_degrees.size(); ++j) {
                        const int dj = rdn.gen_degrees[j];
                        Matrix moved = mat_mul(rdn.gen_rows[j], m.left_action(g, -(p + w), dj));
                        Matrix img = hom_apply(src, k, rup, n, dj, moved);
                        for (std::size_t b = 0; b < img.cols(); ++b)
                            tuple.set(0, dst.slot_offsets[j] + b, img.at(0, b));
                    }
                    SolveResult sr = solve_row_system(dst.basis, tuple);
                    if (!sr.ok) throw Error("composed map escaped the certified hom space");
                    for (std::size_t b = 0; b < sr.x.cols(); ++b) a.set(k, b, sr.x.at(0, b));
                }
            }
            per.push_back(std::move(a));
        }
    }
    return out;
}

GradedModule coinduce_along(const AlgebraMorphism& f, const GradedModule& m, int hlo, int hhi) {
    BigradedBimodule w = watts_bimodule(f, -hhi, -hlo);
    return underline_hom(w, m, hlo, hhi);
}

AdjunctionSample adjunction_check(const GradedModule& l, const BigradedBimodule& m,
                                  const GradedModule& n) {
    if (!l.presented) throw Error("adjunction check needs a presented left factor");
    AdjunctionSample out;
    if (l.gen_degrees.empty()) return out;

    GradedModule lhs = regenerate(bar_tensor(l, m));
    out.lhs = (int)graded_hom(lhs, n, 0).size();

    int hlo = l.gen_degrees[0], hhi = l.gen_degrees[0];
    for (int d : l.gen_degrees) {
        hlo = std::min(hlo, d);
        hhi = std::max(hhi, d);
    }
    for (std::size_t r = 0; r < l.relations.size(); ++r)
        hhi = std::max(hhi, relation_degree(l, r));
    GradedModule h = underline_hom(m, n, hlo, hhi);
    out.rhs = (int)graded_hom(l, h, 0).size();
    return out;
}

} // namespace ncproj
