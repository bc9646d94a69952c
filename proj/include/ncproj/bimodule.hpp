#pragma once

#include "ncproj/morphism.hpp"

namespace ncproj {

/// Bigraded bimodule attached to the restriction functor of a ring map
/// f: S -> T. Row p is the S-module obtained by restricting the shifted
/// regular module T(p); a target generator t of weight i acts on the left,
/// row p -> row p+i, degree by degree (row-vector convention, so matrices
/// multiply on the right).
struct BigradedBimodule {
    AlgebraMorphism f;
    int plo = 0, phi = -1;
    std::vector<GradedModule> rows; // rows[p - plo], presented S-modules
    // lact[g][p - plo][q - rows[p].lo]: row(p)_q -> row(p + wt_T(g))_q
    std::vector<std::vector<std::vector<Matrix>>> lact;

    const GradedModule& row(int p) const;
    Matrix left_action(std::size_t g, int p, int q) const;
    /// Left action of a homogeneous target element, rows p -> p + deg.
    Matrix left_poly_action(const FreePoly& a, int p, int q, int deg_hint = -1) const;
};

/// Del Rio / Watts data for restriction along f, rows plo..phi.
BigradedBimodule watts_bimodule(const AlgebraMorphism& f, int plo, int phi);

/// Graded tensor l (x)-bar m for a presented l over the target algebra:
/// computed from the presentation (cover rows glued along relation slots
/// acting on the left), giving an S-module on the common row window.
GradedModule bar_tensor(const GradedModule& l, const BigradedBimodule& m);

/// underline-Hom: degree-p component Hom(row(-p), n), with target elements
/// acting by precomposition with the left action. Certified on [hlo, hhi];
/// the result is a plain window module (no presentation, bottom not exact).
GradedModule underline_hom(const BigradedBimodule& m, const GradedModule& n, int hlo, int hhi);

/// Coinduction f^! along f, as underline_hom of the Watts bimodule.
GradedModule coinduce_along(const AlgebraMorphism& f, const GradedModule& m, int hlo, int hhi);

struct AdjunctionSample {
    int lhs = 0; // dim Hom(l (x)-bar m, n)
    int rhs = 0; // dim Hom(l, underline_hom(m, n))
    bool equal() const { return lhs == rhs; }
};

AdjunctionSample adjunction_check(const GradedModule& l, const BigradedBimodule& m,
                                  const GradedModule& n);

} // namespace ncproj
