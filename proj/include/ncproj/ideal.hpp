#pragma once

#include <optional>

#include "ncproj/morphism.hpp"

namespace ncproj {

enum class Sidedness { TwoSided, Right };

/// Homogeneous ideal stored degree by degree: comps[e] is an rref row basis
/// of I_e against the monomial basis of A_e, certified on [0, hi]. For plain
/// generated ideals every degree is exact; approximate results (the largest
/// two-sided ideal inside a right ideal) carry per-degree exactness flags.
struct GradedIdeal {
    AlgebraHandle alg;
    Sidedness side = Sidedness::TwoSided;
    std::vector<FreePoly> gens;
    int hi = -1;
    std::vector<Matrix> comps;
    std::vector<bool> exact;

    int dim(int e) const;
    Matrix component(int e) const;
};

GradedIdeal make_ideal(AlgebraHandle a, std::vector<FreePoly> gens, Sidedness side, int hi);

/// rref basis of I_e. WindowExceeded above the certified window.
Matrix ideal_components(const GradedIdeal& i, int e);

struct TwoSidedCheck {
    bool twosided = true;
    std::size_t gen = 0; // algebra generator multiplied on the left
    std::optional<FreePoly> element;
    std::optional<FreePoly> product; // gen * element, not in the ideal
};

/// For a right ideal: is generator*K_e inside K degree-wise up to D?
TwoSidedCheck is_twosided(const GradedIdeal& k, int D);

/// Degree-wise greatest family T subseteq K with gen*T_e inside T for every
/// algebra generator, i.e. the window approximation of the largest two-sided
/// ideal contained in K. Contains the true ideal degree-wise; exact flags
/// mark degrees where the window certifies equality.
GradedIdeal largest_twosided_inside(const GradedIdeal& k, int D);

struct AffineHypothesisResult {
    bool found = false;
    int n = 0;          // minimal verified exponent when found
    int certified_to = -1;
    std::string witness; // first offending product when not found
};

/// Smallest n <= nmax with B*phi(m)^n inside phi(m)*B, tested degree-wise
/// up to D. phi(m) is the image of the augmentation ideal of the source.
AffineHypothesisResult check_affine_hypothesis(const AlgebraMorphism& phi, int nmax, int D);

struct FiniteModuleReport {
    std::vector<int> quotient_dims; // B / phi(m)B on [0, D]
    bool finite = false;            // dims vanish inside the window
    int vanish_from = -1;           // first degree of the trailing zero run
    GradedIdeal annihilator;        // largest two-sided ideal inside phi(m)B
    std::vector<int> mod_annihilator_dims; // B / I on [0, D]
};

FiniteModuleReport finite_module_check(const AlgebraMorphism& phi, int D);

/// A / J with the same generator table and bound.
AlgebraHandle quotient_algebra(const GradedIdeal& j);

/// The projection A -> A/J, generators to generators.
AlgebraMorphism quotient_morphism(const AlgebraHandle& a, const AlgebraHandle& aj);

/// Push an A/J-module forward along the projection: same graded data, the
/// action read as an A-action. Verifies that J really acts as zero.
GradedModule quotient_inflate(const GradedIdeal& j, const GradedModule& m);

/// M / MJ as a module over A/J.
GradedModule quotient_pullback(const GradedIdeal& j, const AlgebraHandle& quot,
                               const GradedModule& m);

struct TorsionResult {
    GradedModule mod; // largest submodule of m killed by J, over A/J
    std::vector<bool> exact;
};

TorsionResult torsion_submodule(const GradedIdeal& j, const AlgebraHandle& quot,
                                const GradedModule& m);

} // namespace ncproj
