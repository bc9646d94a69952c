#include "ncproj/algebra.hpp"

#include <algorithm>

#include "ncproj/errors.hpp"

namespace ncproj {

GradedAlgebra::GradedAlgebra(Presentation pres, int bound)
    : pres_(std::move(pres)), bound_(bound), builder_(pres_.table, bound) {
    for (const auto& r : pres_.relations) builder_.add_relation(r);
    builder_.finalize();
    gb_ = builder_.elements();

    // normal words by degree: extend shorter normal words on the right
    basis_.assign(bound_ + 1, {});
    basis_[0] = {Word{}};
    const GenTable& t = *pres_.table;
    std::vector<Word> leads;
    for (const auto& g : gb_) leads.push_back(g.leading().first);
    for (int i = 1; i <= bound_; ++i) {
        std::vector<Word>& out = basis_[i];
        for (std::size_t g = 0; g < t.size(); ++g) {
            int prev = i - t.weight(g);
            if (prev < 0) continue;
            for (const Word& w : basis_[prev]) {
                Word nw = w;
                nw.push_back(static_cast<Letter>(g));
                bool normal = true;
                for (const Word& lead : leads)
                    if (subword_at_end(nw, lead)) { normal = false; break; }
                if (normal) out.push_back(std::move(nw));
            }
        }
        std::sort(out.begin(), out.end(),
                  [&t](const Word& a, const Word& b) { return term_compare(t, a, b) < 0; });
    }
    dims_.resize(bound_ + 1);
    for (int i = 0; i <= bound_; ++i) dims_[i] = static_cast<int>(basis_[i].size());
}

int GradedAlgebra::dim(int i) const {
    if (i < 0) return 0;
    if (i > bound_) throw DegreeAboveBound(i, "algebra certified to " + std::to_string(bound_));
    return dims_[i];
}

const std::vector<Word>& GradedAlgebra::basis(int i) const {
    if (i < 0 || i > bound_) throw DegreeAboveBound(i, "algebra certified to " + std::to_string(bound_));
    return basis_[i];
}

std::vector<int> GradedAlgebra::hilbert() const { return dims_; }

FreePoly GradedAlgebra::normal_form(const FreePoly& f) const { return builder_.normal_form(f); }

FreePoly GradedAlgebra::nf_mul(const FreePoly& a, const FreePoly& b) const {
    return normal_form(poly_mul(a, b));
}

int GradedAlgebra::basis_index(int degree, const Word& w) const {
    const auto& bs = basis(degree);
    const GenTable& t = *pres_.table;
    auto it = std::lower_bound(bs.begin(), bs.end(), w, [&t](const Word& a, const Word& b) {
        return term_compare(t, a, b) < 0;
    });
    if (it == bs.end() || term_compare(t, *it, w) != 0)
        throw Error("word is not a normal word of degree " + std::to_string(degree));
    return static_cast<int>(it - bs.begin());
}

Matrix GradedAlgebra::coords(const FreePoly& f, int expected_degree) const {
    check_same_table(table(), f.table(), "coords");
    FreePoly nf = normal_form(f);
    Matrix row(field(), 1, dim(expected_degree));
    if (nf.is_zero()) return row;
    if (!nf.is_homogeneous() || nf.degree() != expected_degree)
        throw Error("element is not homogeneous of degree " + std::to_string(expected_degree));
    for (const auto& t : nf.terms())
        row.set(0, basis_index(expected_degree, t.first), t.second);
    return row;
}

FreePoly GradedAlgebra::poly_of(int degree, const Matrix& row, std::size_t r) const {
    const auto& bs = basis(degree);
    if (row.cols() != bs.size()) throw DimensionMismatch("poly_of row length");
    FreePoly out(table());
    for (std::size_t j = 0; j < bs.size(); ++j) {
        Scalar c = row.at(r, j);
        if (!c.is_zero()) out = out + FreePoly::monomial(table(), bs[j], c);
    }
    return out;
}

const Matrix& GradedAlgebra::right_mult_gen(std::size_t g, int e) const {
    auto key = std::make_pair(g, e);
    auto it = rmul_.find(key);
    if (it != rmul_.end()) return it->second;
    const GenTable& t = *pres_.table;
    int w = t.weight(g);
    if (e + w > bound_) throw DegreeAboveBound(e + w, "multiplication leaves the certified window");
    Matrix m(field(), dim(e), dim(e + w));
    for (int r = 0; r < dim(e); ++r) {
        Word word = basis(e)[r];
        word.push_back(static_cast<Letter>(g));
        FreePoly p = normal_form(FreePoly::monomial(table(), word, Scalar::one(field())));
        for (const auto& term : p.terms())
            m.set(r, basis_index(e + w, term.first), term.second);
    }
    return rmul_.emplace(key, std::move(m)).first->second;
}

const Matrix& GradedAlgebra::left_mult_gen(std::size_t g, int e) const {
    auto key = std::make_pair(g, e);
    auto it = lmul_.find(key);
    if (it != lmul_.end()) return it->second;
    const GenTable& t = *pres_.table;
    int w = t.weight(g);
    if (e + w > bound_) throw DegreeAboveBound(e + w, "multiplication leaves the certified window");
    Matrix m(field(), dim(e), dim(e + w));
    for (int r = 0; r < dim(e); ++r) {
        Word word;
        word.push_back(static_cast<Letter>(g));
        const Word& b = basis(e)[r];
        word.insert(word.end(), b.begin(), b.end());
        FreePoly p = normal_form(FreePoly::monomial(table(), word, Scalar::one(field())));
        for (const auto& term : p.terms())
            m.set(r, basis_index(e + w, term.first), term.second);
    }
    return lmul_.emplace(key, std::move(m)).first->second;
}

Matrix GradedAlgebra::right_mult_word(const Word& w, int e) const {
    Matrix m = Matrix::identity(field(), dim(e));
    int d = e;
    for (Letter l : w) {
        m = mat_mul(m, right_mult_gen(l, d));
        d += pres_.table->weight(l);
    }
    return m;
}

Matrix GradedAlgebra::left_mult_word(const Word& w, int e) const {
    Matrix m = Matrix::identity(field(), dim(e));
    int d = e;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        m = mat_mul(m, left_mult_gen(*it, d));
        d += pres_.table->weight(*it);
    }
    return m;
}

Matrix GradedAlgebra::right_mult_elem(const FreePoly& f, int e) const {
    if (f.is_zero()) throw Error("multiplication by zero element has no degree");
    if (!f.is_homogeneous()) throw Error("multiplication by inhomogeneous element");
    Matrix acc(field(), dim(e), dim(e + f.degree()));
    for (const auto& t : f.terms())
        acc = mat_add(acc, mat_scale(t.second, right_mult_word(t.first, e)));
    return acc;
}

Matrix GradedAlgebra::left_mult_elem(const FreePoly& f, int e) const {
    if (f.is_zero()) throw Error("multiplication by zero element has no degree");
    if (!f.is_homogeneous()) throw Error("multiplication by inhomogeneous element");
    Matrix acc(field(), dim(e), dim(e + f.degree()));
    for (const auto& t : f.terms())
        acc = mat_add(acc, mat_scale(t.second, left_mult_word(t.first, e)));
    return acc;
}

AlgebraHandle make_algebra(Presentation pres, int bound) {
    return std::make_shared<const GradedAlgebra>(std::move(pres), bound);
}

Matrix subspace_mul(const GradedAlgebra& a, int du, const Matrix& u, int dv, const Matrix& v) {
    if (u.cols() != static_cast<std::size_t>(a.dim(du)) ||
        v.cols() != static_cast<std::size_t>(a.dim(dv)))
        throw DimensionMismatch("subspace_mul coordinate lengths");
    Matrix rows(a.field(), 0, a.dim(du + dv));
    for (std::size_t j = 0; j < v.rows(); ++j) {
        FreePoly vp = a.poly_of(dv, v, j);
        if (vp.is_zero()) continue;
        Matrix r = a.right_mult_elem(vp, du); // A_du -> A_{du+dv}
        rows = stack(rows, mat_mul(u, r));
    }
    return row_space_basis(rows);
}

Matrix component_mul_full(const GradedAlgebra& a, int du, int dv) {
    Matrix u = Matrix::identity(a.field(), a.dim(du));
    Matrix v = Matrix::identity(a.field(), a.dim(dv));
    return subspace_mul(a, du, u, dv, v);
}

} // namespace ncproj
