#pragma once

#include "ncproj/morphism.hpp"

namespace ncproj {

/// Data for S = R[t; sigma, delta] with t*r = sigma(r)*t + delta(r) and
/// deg t = t_weight. delta is given on generators only and raises degree
/// by t_weight; it extends by delta(r*s) = sigma(r)*delta(s) + delta(r)*s.
struct OreData {
    AlgebraHandle base;
    AlgebraMorphism sigma;
    std::vector<FreePoly> delta;
    int t_weight = 1;
    std::string t_name = "t";
};

/// The extension of delta to an arbitrary element, reduced in the base.
FreePoly ore_delta(const OreData& o, const FreePoly& f);

/// Presentation of the extension, certified to degree D. Checks that sigma
/// is a degree-wise automorphism, that delta descends through the base
/// relations, and that the result has the expected dimension count.
AlgebraHandle ore_extension(const OreData& o, int D);

} // namespace ncproj
