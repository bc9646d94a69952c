#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncproj/algebra.hpp"
#include "ncproj/dsl.hpp"

namespace testsupport {

/// splitmix64: tiny deterministic PRNG, identical across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
};

inline ncproj::AlgebraHandle algebra_from(const std::string& text, int bound) {
    return ncproj::make_algebra(ncproj::parse_presentation(text), bound);
}

inline std::string qplane(const std::string& q = "2") {
    return "field Q\ngen x 1\ngen y 1\nrel y*x - " + q + "*x*y\n";
}

inline std::string wtd12() { return "field Q\ngen x 1\ngen z 2\nrel z*x - x*z\n"; }
inline std::string wtd23() { return "field Q\ngen x 2\ngen z 3\nrel z*x - x*z\n"; }
inline std::string kx(int w = 1) { return "field Q\ngen x " + std::to_string(w) + "\n"; }
inline std::string kxy_comm() { return "field Q\ngen x 1\ngen y 1\nrel y*x - x*y\n"; }
inline std::string free2() { return "field Q\ngen x 1\ngen y 1\n"; }

/// Random homogeneous polynomial of given degree over the full word basis
/// of the free algebra on the table; may be zero.
ncproj::FreePoly random_homogeneous(Rng& rng, const ncproj::GenTableHandle& table, int degree);

/// Random small presentation: <=3 generators with weights in {1,2},
/// <=2 homogeneous relations of degree 2..4; deterministic in rng.
ncproj::Presentation random_presentation(Rng& rng, bool allow_prime_field = true);

/// All words of the given weighted degree in declaration order.
std::vector<ncproj::Word> all_words(const ncproj::GenTable& t, int degree);

/// Brute-force dimension of the degree-i component of the two-sided ideal
/// generated by the relations inside the free algebra: enumerate all rows
/// a*r*b and take one big RREF. Slow, only for small instances.
int free_ideal_dim_naive(const ncproj::Presentation& p, int i);

/// Quotient dimensions computed by iterated linear algebra, no rewriting:
/// A_i = (sum over generators x of x*A_{i-wt x}) modulo the rows coming
/// from relation multiples. Independent of the Groebner machinery.
std::vector<int> quotient_dims_linear(const ncproj::Presentation& p, int up_to);

/// Random presentation whose quotient stays small: redraws until every
/// component dimension up to bound is <= cap. A low-degree probe discards
/// free-ish draws before paying for the full build.
ncproj::AlgebraHandle random_tame_algebra(Rng& rng, int bound, int cap,
                                          bool allow_prime_field = true);

} // namespace testsupport
