#pragma once

#include "ncproj/bimodule.hpp"
#include "ncproj/ideal.hpp"

namespace ncproj {

/// The n-th Veronese A^(n), degree i = parent degree n*i, carried as its own
/// presented algebra plus the weight-scaling embedding into the parent.
/// Generators are discovered degree by degree (complements of products of
/// lower Veronese components), relations as kernels of the evaluation into
/// the parent. Nothing is claimed past searched_to.
struct VeroneseAlgebra {
    AlgebraHandle parent;
    int n = 1;
    AlgebraHandle presentation;
    AlgebraMorphism embedding;         // presentation -> parent, scale n
    std::vector<int> relation_degrees; // Veronese degrees of the discovered relations
    int searched_to = 0;
};

VeroneseAlgebra veronese_algebra(const AlgebraHandle& a, int n, int D);

/// Direct image: reindex M at the degrees n*i (restriction along the
/// embedding, original coordinates kept).
GradedModule veronese_pushforward(const VeroneseAlgebra& v, const GradedModule& m);

/// Inverse image: induction along the embedding. The unit "pushforward of
/// the pullback = the module" is recomputed and asserted degree-wise.
GradedModule veronese_pullback(const VeroneseAlgebra& v, const GradedModule& nmod, int lo, int hi);

/// Twisted image: component i is Hom(pushforward(A(-i)), nmod) in degree 0.
GradedModule veronese_coinduce(const VeroneseAlgebra& v, const GradedModule& nmod, int lo, int hi);

/// The right ideals I_r = sum_j A_{nj+r} A for r = 1..n and their
/// intersection I. The sum runs over all integers j with nj + r >= 0, so
/// I_n always contains A_0 A and is the whole ring. Two-sidedness of I is
/// verified on the window, never forced.
struct IdealFamily {
    AlgebraHandle alg;
    int n = 1;
    int hi = -1;
    std::vector<GradedIdeal> ir; // index r - 1
    GradedIdeal isect;
    bool isect_twosided = false;
};

IdealFamily ideal_family(const AlgebraHandle& a, int n, int D);

/// Degree-wise containment of I^{2n} in the right ideal generated by the
/// n-divisible components of I.
struct LemmaIReport {
    int n = 1;
    int hi = -1;
    int min_i_degree = -1;     // lowest degree where I is nonzero; -1 when I = 0
    std::vector<int> lhs_dims; // dim (I^{2n})_e
    std::vector<int> rhs_dims; // dim (I^(n) A)_e
    std::vector<bool> pass;
    bool ok = true;
};

LemmaIReport check_lemma_I(const AlgebraHandle& a, int n, int D);

/// Congruence-class submodule p_r(M) = sum of the M_{r+in}, in the original
/// coordinates. Needs the algebra concentrated in degrees divisible by n
/// (checked from its dimension data).
GradedModule projector(const GradedModule& m, int n, int r);

/// Window proxy for agreement up to finite-dimensional pieces: true iff the
/// two modules admit a degree-preserving invertible intertwiner on [s, hi].
/// The intertwiner space is solved exactly; an invertible element is then
/// searched by deterministic small-coefficient sampling, so "false" with a
/// nonzero space sets note. Certifies the window only.
bool tails_window_equal(const GradedModule& m, const GradedModule& nmod, int s, int hi,
                        std::string* note = nullptr);

/// Kernel and cokernel of the multiplication map from the pullback of the
/// pushforward back to the module, with the I-annihilation checks.
struct VerevkinReport {
    int n = 1;
    int klo = 0, khi = -1; // window of the induced module
    std::vector<int> kernel_dims;
    int clo = 0, chi = -1; // analysis window on m
    std::vector<int> cokernel_dims;
    bool kernel_annihilated = true;
    bool cokernel_annihilated = true;
};

VerevkinReport verevkin_defect(const AlgebraHandle& a, int n, const GradedModule& m, int D);

/// Smallest d <= dmax whose Veronese is generated in degree one on the
/// certified window: (A_d)^i = A_{di} for every testable i >= 2. Candidates
/// with no testable degree (bound/d < 2) never qualify.
struct MinVeroneseResult {
    bool found = false;
    int d = 0;
    int certified_i = 0; // top Veronese degree tested for the returned d
};

MinVeroneseResult min_veronese_gen1(const AlgebraHandle& a, int dmax);

} // namespace ncproj
