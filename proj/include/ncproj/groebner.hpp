#pragma once

#include <set>

#include "ncproj/poly.hpp"

namespace ncproj {

/// Degree-truncated two-sided Buchberger completion for homogeneous
/// relations. Processing every overlap obstruction of degree <= bound
/// makes rewriting confluent in all degrees <= bound, which certifies
/// normal forms, monomial bases and dimensions on that window.
class GroebnerBuilder {
public:
    GroebnerBuilder(GenTableHandle table, int bound);

    /// Add a homogeneous relation of degree <= bound.
    void add_relation(const FreePoly& r);

    /// Process all pending obstructions of degree <= deg (<= bound).
    void process_up_to(int deg);

    /// Finish to the bound and tail-reduce; elements come out monic,
    /// inter-reduced and sorted by (degree, term order of lead).
    void finalize();

    FreePoly normal_form(const FreePoly& f) const;

    /// Alive elements in canonical order (valid after finalize();
    /// mid-build the order is insertion order).
    std::vector<FreePoly> elements() const;

    int bound() const { return bound_; }
    const GenTableHandle& table() const { return tab_; }
    int processed_degree() const { return processed_; }

private:
    struct Obstruction {
        int degree;
        std::size_t i, j, k; // leads i,j overlap with suffix/prefix length k
        bool operator<(const Obstruction& o) const {
            if (degree != o.degree) return degree < o.degree;
            if (i != o.i) return i < o.i;
            if (j != o.j) return j < o.j;
            return k < o.k;
        }
    };
    struct Elem {
        FreePoly poly;
        Word lead;
        bool alive;
    };

    void add_element(FreePoly p);
    void enqueue_overlaps(std::size_t idx);
    FreePoly s_element(const Obstruction& o) const;

    GenTableHandle tab_;
    int bound_;
    int processed_ = 0;
    std::vector<Elem> elems_;
    std::set<Obstruction> queue_;
};

/// One-shot completion of a presentation's relations.
std::vector<FreePoly> complete(const Presentation& p, int bound);

} // namespace ncproj
