#pragma once

#include "ncproj/module.hpp"

namespace ncproj {

/// Graded ring map f: A -> B. The image of a weight-w generator is zero or
/// homogeneous of degree scale*w; scale = 1 is the ordinary degree-preserving
/// case, scale = n regrades the source (used for Veronese embeddings, where
/// A^(n) in its own grading maps into degree n*i of the parent).
struct AlgebraMorphism {
    AlgebraHandle source, target;
    int scale = 1;
    std::vector<FreePoly> images; // over the target table, one per source generator

    /// Substitute generator images and reduce to normal form in the target.
    FreePoly apply(const FreePoly& f) const;

    /// Induced map of components A_e -> B_{scale*e} on basis rows.
    Matrix component_matrix(int e) const;
};

/// Validates image degrees and that every defining relation of the source
/// maps to zero in the target.
AlgebraMorphism make_morphism(AlgebraHandle source, AlgebraHandle target,
                              std::vector<FreePoly> images, int scale = 1);

AlgebraMorphism identity_morphism(AlgebraHandle a);

/// Restriction of scalars along f: the target module m becomes a source
/// module with (f_* m)_e = m_{scale*e} and generators acting through their
/// images. Presented by regeneration when the bottom is exact.
GradedModule restrict_along(const AlgebraMorphism& f, const GradedModule& m);

/// Induction - tensor up along f: generators of m in degree d become target
/// generators in degree scale*d, relations are pushed through f.
GradedModule induce_along(const AlgebraMorphism& f, const GradedModule& m, int lo, int hi);

int floor_div(int a, int b);
int ceil_div(int a, int b);

} // namespace ncproj
