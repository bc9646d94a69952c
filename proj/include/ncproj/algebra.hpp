#pragma once

#include <map>
#include <memory>

#include "ncproj/groebner.hpp"
#include "ncproj/matrix.hpp"

namespace ncproj {

/// Connected graded algebra presented by generators and homogeneous
/// relations, certified up to a fixed degree bound: Groebner data,
/// per-degree monomial bases (normal words) and multiplication matrices.
///
/// Instances are immutable after construction apart from single-threaded
/// lazy multiplication caches; share via AlgebraHandle.
class GradedAlgebra {
public:
    GradedAlgebra(Presentation pres, int bound);

    const Presentation& presentation() const { return pres_; }
    const GenTableHandle& table() const { return pres_.table; }
    const Field& field() const { return pres_.table->field(); }
    int bound() const { return bound_; }

    const std::vector<FreePoly>& gb() const { return gb_; }

    /// dim_k A_i; zero for i < 0, DegreeAboveBound past the window.
    int dim(int i) const;

    /// Normal words of degree i, ascending term order.
    const std::vector<Word>& basis(int i) const;

    std::vector<int> hilbert() const; // dims 0..bound

    FreePoly normal_form(const FreePoly& f) const;
    FreePoly nf_mul(const FreePoly& a, const FreePoly& b) const;

    /// Coordinate row of a homogeneous element in the degree-d basis.
    Matrix coords(const FreePoly& f, int expected_degree) const;
    FreePoly poly_of(int degree, const Matrix& row, std::size_t r = 0) const;

    /// Right/left multiplication by generator g: A_e -> A_{e+wt(g)},
    /// rows indexed by basis(e) (row-vector convention).
    const Matrix& right_mult_gen(std::size_t g, int e) const;
    const Matrix& left_mult_gen(std::size_t g, int e) const;

    Matrix right_mult_word(const Word& w, int e) const;
    Matrix left_mult_word(const Word& w, int e) const;
    Matrix right_mult_elem(const FreePoly& f, int e) const;
    Matrix left_mult_elem(const FreePoly& f, int e) const;

private:
    int basis_index(int degree, const Word& w) const;

    Presentation pres_;
    int bound_;
    std::vector<FreePoly> gb_;
    std::vector<std::vector<Word>> basis_;
    std::vector<int> dims_;
    mutable std::map<std::pair<std::size_t, int>, Matrix> rmul_, lmul_;
    GroebnerBuilder builder_;
};

using AlgebraHandle = std::shared_ptr<const GradedAlgebra>;

AlgebraHandle make_algebra(Presentation pres, int bound);

/// Span of {u * v : u in U, v in V} inside A_{du+dv}; U, V are coordinate
/// row spaces in degrees du, dv. Returns an RREF basis.
Matrix subspace_mul(const GradedAlgebra& a, int du, const Matrix& u, int dv, const Matrix& v);

/// Full component product A_du * A_dv as a subspace of A_{du+dv}.
Matrix component_mul_full(const GradedAlgebra& a, int du, int dv);

} // namespace ncproj
