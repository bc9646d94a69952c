#include "ncproj/ore.hpp"

namespace ncproj {

namespace {

// delta of a word, recursively from the left letter, in the free algebra
FreePoly delta_word(const OreData& o, const Word& w, std::size_t from) {
    const GenTableHandle& tab = o.base->table();
    if (from == w.size()) return FreePoly::zero(tab);
    std::size_t g = w[from];
    Word rest(w.begin() + (std::ptrdiff_t)from + 1, w.end());
    FreePoly out = poly_mul(o.delta[g], FreePoly::monomial(tab, rest, Scalar::one(tab->field())));
    FreePoly tail = delta_word(o, w, from + 1);
    if (!tail.is_zero()) out = out + poly_mul(o.sigma.images[g], tail);
    return out;
}

FreePoly retable(const FreePoly& f, const GenTableHandle& nt) {
    FreePoly out = FreePoly::zero(nt);
    for (const auto& [w, c] : f.terms())
        out = out + FreePoly::monomial(nt, w, Scalar(nt->field(), c.value()));
    return out;
}

} // namespace

FreePoly ore_delta(const OreData& o, const FreePoly& f) {
    check_same_table(f.table(), o.base->table(), "ore delta argument");
    FreePoly out = FreePoly::zero(o.base->table());
    for (const auto& [w, c] : f.terms()) out = out + delta_word(o, w, 0).scaled(c);
    return o.base->normal_form(out);
}

AlgebraHandle ore_extension(const OreData& o, int D) {
    if (!o.base) throw Error("ore extension needs a base algebra");
    const GradedAlgebra& r = *o.base;
    if (D > r.bound()) throw WindowExceeded(D, "base algebra is certified below the window");
    if (o.t_weight < 1) throw ZeroWeight("t must have positive weight");
    if (o.sigma.source.get() != o.base.get() || o.sigma.target.get() != o.base.get())
        throw ContextMismatch("sigma must be an endomorphism of the base");
    if (o.sigma.scale != 1) throw NotAnAutomorphism("sigma must preserve degrees");
    if (o.delta.size() != r.table()->size())
        throw DimensionMismatch("one delta image per generator");

    for (int e = 1; e <= D; ++e) {
        Matrix c = o.sigma.component_matrix(e);
        if (row_reduce(c).rank != (std::size_t)r.dim(e))
            throw NotAnAutomorphism("sigma is singular in degree " + std::to_string(e));
    }

    const GenTable& t = *r.table();
    for (std::size_t g = 0; g < t.size(); ++g) {
        const FreePoly& d = o.delta[g];
        check_same_table(d.table(), r.table(), "delta image");
        if (d.is_zero()) continue;
        if (!d.is_homogeneous() || d.degree() != t.weight(g) + o.t_weight)
            throw NotADerivation("delta image of " + t.name(g) + " must be homogeneous of degree " +
                                 std::to_string(t.weight(g) + o.t_weight));
    }
    for (const FreePoly& rel : r.presentation().relations) {
        FreePoly d = ore_delta(o, rel);
        if (!d.is_zero())
            throw NotADerivation("delta does not descend through " + rel.to_string());
    }

    std::vector<GeneratorInfo> gens = t.gens();
    gens.push_back({o.t_name, o.t_weight});
    GenTableHandle nt = make_gen_table(r.field(), std::move(gens));
    const Letter ti = (Letter)t.size();

    Presentation pres;
    pres.table = nt;
    for (const FreePoly& rel : r.presentation().relations) pres.relations.push_back(retable(rel, nt));
    for (std::size_t g = 0; g < t.size(); ++g) {
        FreePoly rel = FreePoly::monomial(nt, {ti, (Letter)g}, Scalar::one(r.field()));
        for (const auto& [w, c] : o.sigma.images[g].terms()) {
            Word tw = w;
            tw.push_back(ti);
            rel = rel - FreePoly::monomial(nt, tw, Scalar(r.field(), c.value()));
        }
        rel = rel - retable(o.delta[g], nt);
        pres.relations.push_back(std::move(rel));
    }

    AlgebraHandle s = make_algebra(std::move(pres), D);

    // the extension is free as a module over the base, one copy per power of t
    std::vector<int> hr = r.hilbert();
    std::vector<int> hs = s->hilbert();
    for (int i = 0; i <= D; ++i) {
        int want = 0;
        for (int k = 0; i - k * o.t_weight >= 0; ++k) want += hr[(std::size_t)(i - k * o.t_weight)];
        if (hs[(std::size_t)i] != want)
            throw Error("ore extension has the wrong dimension in degree " + std::to_string(i));
    }
    return s;
}

} // namespace ncproj
