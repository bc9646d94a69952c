#pragma once

#include <optional>
#include <utility>

#include "ncproj/word.hpp"

namespace ncproj {

/// Element of the weighted free associative algebra over a GenTable.
/// Terms are kept sorted in strictly descending term order with nonzero
/// coefficients; the leading term is terms().front().
class FreePoly {
public:
    using Term = std::pair<Word, Scalar>;

    explicit FreePoly(GenTableHandle tab) : tab_(std::move(tab)) {}
    static FreePoly zero(GenTableHandle tab) { return FreePoly(std::move(tab)); }
    static FreePoly monomial(GenTableHandle tab, Word w, Scalar c);
    static FreePoly unit(GenTableHandle tab) {
        Field f = tab->field();
        return monomial(std::move(tab), {}, Scalar::one(f));
    }

    const GenTableHandle& table() const { return tab_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading() const;

    /// Weighted degree if homogeneous (zero poly has no degree).
    bool is_homogeneous() const;
    int degree() const; // requires nonzero homogeneous

    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator-() const;
    FreePoly scaled(const Scalar& c) const;
    bool operator==(const FreePoly& o) const;

    std::string to_string() const;

private:
    friend FreePoly poly_mul(const FreePoly& a, const FreePoly& b);
    friend FreePoly add_scaled_shifted(const FreePoly& f, const Scalar& c, const Word& l,
                                       const FreePoly& g, const Word& r);
    void insert_term(const Word& w, const Scalar& c); // merge, keep sorted
    GenTableHandle tab_;
    std::vector<Term> terms_;
};

/// Product in the free algebra (noncommutative).
FreePoly poly_mul(const FreePoly& a, const FreePoly& b);

/// f + c * (l g r) for words l, r: the elementary rewriting step.
FreePoly add_scaled_shifted(const FreePoly& f, const Scalar& c, const Word& l,
                            const FreePoly& g, const Word& r);

void check_same_table(const GenTableHandle& a, const GenTableHandle& b, const char* what);

/// Finitely presented graded algebra data: generator context and
/// homogeneous defining relations of degree >= 1.
struct Presentation {
    GenTableHandle table;
    std::vector<FreePoly> relations;
};

/// Validates homogeneity/nonzero-ness of the relations.
Presentation make_presentation(GenTableHandle table, std::vector<FreePoly> relations);

} // namespace ncproj
