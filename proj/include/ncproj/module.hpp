#pragma once

#include "ncproj/algebra.hpp"

namespace ncproj {

/// Graded right module over a GradedAlgebra, represented degree-wise on a
/// certified window [lo, hi]: dimensions and one action matrix per algebra
/// generator (M_e -> M_{e+w}, row-vector convention). When bottom_exact is
/// set, M_e = 0 for every e < lo; otherwise those degrees are unknown.
///
/// A module may additionally carry a presentation: generator degrees d_i,
/// relation rows over the free cover C = g_1 A + ... + g_s A (one FreePoly
/// per slot), coordinate rows of the generators, and per-degree evaluation
/// matrices C_e -> M_e. Hom computations require the presentation.
struct GradedModule {
    AlgebraHandle alg;
    int lo = 0;
    int hi = -1;
    bool bottom_exact = true;
    std::vector<int> dims;                     // index e - lo
    std::vector<std::vector<Matrix>> act;      // act[g][e - lo], valid while e + w_g <= hi

    bool presented = false;
    std::vector<int> gen_degrees;
    std::vector<std::vector<FreePoly>> relations; // row r, slot i; zero or homogeneous
    std::vector<Matrix> gen_rows;              // 1 x dim(d_i)
    std::vector<Matrix> eval;                  // eval[e - lo]: cover_e -> M_e

    const Field& field() const { return alg->field(); }

    /// 0 below lo when bottom_exact; WindowInsufficient outside the window.
    int dim(int e) const;

    /// Action of generator g on degree e; degenerate edges (zero source or
    /// target outside the window with zero dimension) come back as empty
    /// matrices of the right shape.
    Matrix action(std::size_t g, int e) const;

    Matrix action_word(const Word& w, int e) const;

    /// Action of a homogeneous element; deg_hint names the degree shift when
    /// f is zero (a zero map still needs a shape).
    Matrix action_of_poly(const FreePoly& f, int e, int deg_hint = -1) const;

    int cover_dim(int e) const;                    // presented only
    int cover_offset(std::size_t i, int e) const;  // presented only

    std::vector<int> hilbert() const { return dims; }
};

/// Quotient of the free cover on gen_degrees by the submodule the relation
/// rows generate, computed degree-wise on [lo, hi]. Requires
/// lo <= min(gen_degrees) and hi <= alg.bound() + min(gen_degrees).
GradedModule present_module(AlgebraHandle alg, std::vector<int> gen_degrees,
                            std::vector<std::vector<FreePoly>> relations, int lo, int hi);

GradedModule free_module(AlgebraHandle alg, std::vector<int> gen_degrees, int hi);

/// The regular module A as a right module over itself.
GradedModule regular_module(AlgebraHandle alg, int hi);

/// shift_module(m, p)_e = M_{e+p} (the twist M(p)).
GradedModule shift_module(const GradedModule& m, int p);

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

/// Recover a minimal presentation from degree-wise data: new generators are
/// canonical complements of what lower degrees reach, relations are minimal
/// kernel elements of the evaluation from the new free cover. Keeps the
/// original coordinates. Requires bottom_exact.
GradedModule regenerate(const GradedModule& m);

/// Submodule spanned degree-wise by the given coordinate rows (must be
/// closed under all generator actions). rows[e - m.lo] may have any row
/// count; bases are canonicalized.
GradedModule submodule_on_rows(const GradedModule& m, const std::vector<Matrix>& rows);

/// Quotient of m by the row family (same closure requirement). When
/// proj_out is given it receives the per-degree projection M_e -> Q_e.
GradedModule quotient_by_rows(const GradedModule& m, const std::vector<Matrix>& rows,
                              std::vector<Matrix>* proj_out = nullptr);

/// Solve row = sum_i gen_i * a_i against the presentation; returns the a_i.
std::vector<FreePoly> express_in_generators(const GradedModule& m, int e, const Matrix& row,
                                            std::size_t r = 0);

/// Basis of Hom_{Gr}(M, N(p)): each basis element is the concatenated
/// coordinate tuple of its generator images, slot i in N_{d_i + p}.
struct ModuleMapSpace {
    int shift = 0;
    std::vector<int> slot_offsets; // size s+1; slot i occupies [off_i, off_{i+1})
    Matrix basis{Field::rationals(), 0, 0}; // one row per independent map
    std::size_t size() const { return basis.rows(); }
};

ModuleMapSpace graded_hom(const GradedModule& m, const GradedModule& n, int p);

/// Image of a degree-e element of M under basis map k; a 1 x dim N_{e+p} row.
Matrix hom_apply(const ModuleMapSpace& h, std::size_t k, const GradedModule& m,
                 const GradedModule& n, int e, const Matrix& row, std::size_t r = 0);

} // namespace ncproj
