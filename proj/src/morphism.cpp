#include "ncproj/morphism.hpp"

#include <algorithm>

namespace ncproj {

int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

FreePoly AlgebraMorphism::apply(const FreePoly& f) const {
    check_same_table(source->table(), f.table(), "morphism argument");
    FreePoly out = FreePoly::zero(target->table());
    for (const auto& [w, c] : f.terms()) {
        FreePoly acc = FreePoly::monomial(target->table(), {}, Scalar(target->field(), c.value()));
        for (Letter l : w) {
            if (acc.is_zero()) break;
            acc = target->nf_mul(acc, images[l]);
        }
        out = out + acc;
    }
    return target->normal_form(out);
}

Matrix AlgebraMorphism::component_matrix(int e) const {
    const GradedAlgebra& S = *source;
    std::size_t rows = static_cast<std::size_t>(S.dim(e));
    std::size_t cols = static_cast<std::size_t>(target->dim(scale * e));
    Matrix out(S.field(), rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        FreePoly img = apply(FreePoly::monomial(S.table(), S.basis(e)[r], Scalar::one(S.field())));
        if (img.is_zero()) continue;
        Matrix c = target->coords(img, scale * e);
        for (std::size_t j = 0; j < cols; ++j) out.raw(r, j) = c.raw(0, j);
    }
    return out;
}

AlgebraMorphism make_morphism(AlgebraHandle source, AlgebraHandle target,
                              std::vector<FreePoly> images, int scale) {
    if (!source || !target) throw Error("morphism needs both algebras");
    if (scale < 1) throw Error("morphism scale must be positive");
    check_same_field(source->field(), target->field(), "morphism");
    if (images.size() != source->table()->size())
        throw DimensionMismatch("one image per source generator");
    for (std::size_t g = 0; g < images.size(); ++g) {
        check_same_table(target->table(), images[g].table(), "morphism image");
        if (images[g].is_zero()) continue;
        if (!images[g].is_homogeneous() ||
            images[g].degree() != scale * source->table()->weight(g))
            throw InhomogeneousRelation("image of " + source->table()->name(g) +
                                        " must be homogeneous of its scaled weight");
    }
    AlgebraMorphism f{std::move(source), std::move(target), scale, std::move(images)};
    for (const FreePoly& r : f.source->presentation().relations)
        if (!f.apply(r).is_zero())
            throw Error("morphism does not preserve the relation " + r.to_string());
    return f;
}

AlgebraMorphism identity_morphism(AlgebraHandle a) {
    std::vector<FreePoly> images;
    for (std::size_t g = 0; g < a->table()->size(); ++g)
        images.push_back(FreePoly::monomial(a->table(), {static_cast<Letter>(g)},
                                            Scalar::one(a->field())));
    return make_morphism(a, a, std::move(images), 1);
}

GradedModule restrict_along(const AlgebraMorphism& f, const GradedModule& m) {
    if (m.alg.get() != f.target.get())
        throw ContextMismatch("restriction needs a module over the morphism target");
    int n = f.scale;
    int lo = ceil_div(m.lo, n), hi = floor_div(m.hi, n);
    // degrees past the source bound cannot be regenerated or acted on later
    hi = std::min(hi, f.source->bound() + std::min(lo, 0));
    if (hi < lo) throw WindowInsufficient(m.lo, "window too narrow to restrict");
    const GenTable& S = *f.source->table();

    GradedModule out;
    out.alg = f.source;
    out.lo = lo;
    out.hi = hi;
    out.bottom_exact = m.bottom_exact;
    std::size_t span = static_cast<std::size_t>(hi - lo + 1);
    out.dims.resize(span);
    for (int e = lo; e <= hi; ++e)
        out.dims[static_cast<std::size_t>(e - lo)] = m.dim(n * e);
    out.act.assign(S.size(), {});
    for (std::size_t g = 0; g < S.size(); ++g) {
        int w = S.weight(g);
        for (int e = lo; e <= hi; ++e) {
            if (e + w > hi) {
                out.act[g].push_back(Matrix(m.field(), 0, 0));
                continue;
            }
            out.act[g].push_back(m.action_of_poly(f.images[g], n * e, n * w));
        }
    }
    if (out.bottom_exact) out = regenerate(out);
    return out;
}

GradedModule induce_along(const AlgebraMorphism& f, const GradedModule& m, int lo, int hi) {
    if (m.alg.get() != f.source.get())
        throw ContextMismatch("induction needs a module over the morphism source");
    if (!m.presented) throw Error("induction needs a presented module");
    std::vector<int> gd;
    for (int d : m.gen_degrees) gd.push_back(f.scale * d);
    std::vector<std::vector<FreePoly>> rels;
    for (const auto& row : m.relations) {
        std::vector<FreePoly> mapped;
        bool live = false;
        for (const FreePoly& p : row) {
            mapped.push_back(p.is_zero() ? FreePoly::zero(f.target->table()) : f.apply(p));
            if (!mapped.back().is_zero()) live = true;
        }
        if (live) rels.push_back(std::move(mapped));
    }
    return present_module(f.target, std::move(gd), std::move(rels), lo, hi);
}

} // namespace ncproj
