#include "ncproj/groebner.hpp"

#include <algorithm>

#include "ncproj/errors.hpp"

namespace ncproj {

GroebnerBuilder::GroebnerBuilder(GenTableHandle table, int bound)
    : tab_(std::move(table)), bound_(bound) {
    if (bound < 0) throw Error("negative truncation bound");
}

void GroebnerBuilder::add_relation(const FreePoly& r) {
    check_same_table(tab_, r.table(), "relation");
    if (r.is_zero()) return;
    if (!r.is_homogeneous()) throw InhomogeneousRelation(r.to_string());
    if (r.degree() > bound_)
        throw DegreeAboveBound(r.degree(), "relation exceeds truncation bound " + std::to_string(bound_));
    add_element(r);
}

FreePoly GroebnerBuilder::normal_form(const FreePoly& f) const {
    check_same_table(tab_, f.table(), "normal form");
    FreePoly g = f;
    bool changed = true;
    while (changed && !g.is_zero()) {
        changed = false;
        // scan terms largest first; elements tried in slot order
        for (const auto& term : g.terms()) {
            for (const auto& e : elems_) {
                if (!e.alive) continue;
                std::size_t pos = find_subword(term.first, e.lead);
                if (pos == static_cast<std::size_t>(-1)) continue;
                Word left(term.first.begin(), term.first.begin() + pos);
                Word right(term.first.begin() + pos + e.lead.size(), term.first.end());
                g = add_scaled_shifted(g, -term.second, left, e.poly, right);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return g;
}

void GroebnerBuilder::add_element(FreePoly p) {
    p = normal_form(p);
    if (p.is_zero()) return;
    FreePoly monic = p.scaled(p.leading().second.inverse());
    Word lead = monic.leading().first;
    std::size_t idx = elems_.size();
    elems_.push_back(Elem{std::move(monic), lead, true});
    enqueue_overlaps(idx);

    // retire older elements whose lead became reducible
    for (std::size_t i = 0; i < idx; ++i) {
        if (!elems_[i].alive) continue;
        if (find_subword(elems_[i].lead, lead) != static_cast<std::size_t>(-1)) {
            elems_[i].alive = false;
            FreePoly rest = elems_[i].poly;
            add_element(std::move(rest));
        }
    }
}

void GroebnerBuilder::enqueue_overlaps(std::size_t idx) {
    const Word& u = elems_[idx].lead;
    for (std::size_t other = 0; other < elems_.size(); ++other) {
        if (!elems_[other].alive) continue;
        const Word& v = elems_[other].lead;
        // (idx, other): suffix of u = prefix of v, proper on both sides
        for (std::size_t k = 1; k < u.size() && k < v.size(); ++k) {
            bool match = true;
            for (std::size_t t = 0; t < k; ++t)
                if (u[u.size() - k + t] != v[t]) { match = false; break; }
            if (match) {
                Word overlap(v.begin(), v.begin() + k);
                int deg = word_degree(*tab_, u) + word_degree(*tab_, v) - word_degree(*tab_, overlap);
                if (deg <= bound_) queue_.insert({deg, idx, other, k});
            }
        }
        if (other == idx) continue;
        const Word& w = elems_[other].lead;
        // (other, idx): suffix of w = prefix of u
        for (std::size_t k = 1; k < w.size() && k < u.size(); ++k) {
            bool match = true;
            for (std::size_t t = 0; t < k; ++t)
                if (w[w.size() - k + t] != u[t]) { match = false; break; }
            if (match) {
                Word overlap(u.begin(), u.begin() + k);
                int deg = word_degree(*tab_, w) + word_degree(*tab_, u) - word_degree(*tab_, overlap);
                if (deg <= bound_) queue_.insert({deg, other, idx, k});
            }
        }
    }
}

FreePoly GroebnerBuilder::s_element(const Obstruction& o) const {
    const Word& u = elems_[o.i].lead;
    const Word& v = elems_[o.j].lead;
    Word a(u.begin(), u.end() - o.k);              // u = a * c
    Word b(v.begin() + o.k, v.end());              // v = c * b
    // common multiple a*c*b = u*b = a*v
    FreePoly left = poly_mul(elems_[o.i].poly, FreePoly::monomial(tab_, b, Scalar::one(tab_->field())));
    FreePoly right = poly_mul(FreePoly::monomial(tab_, a, Scalar::one(tab_->field())), elems_[o.j].poly);
    return left - right;
}

void GroebnerBuilder::process_up_to(int deg) {
    deg = std::min(deg, bound_);
    while (!queue_.empty() && queue_.begin()->degree <= deg) {
        Obstruction o = *queue_.begin();
        queue_.erase(queue_.begin());
        if (!elems_[o.i].alive || !elems_[o.j].alive) continue;
        add_element(s_element(o));
    }
    processed_ = std::max(processed_, deg);
}

void GroebnerBuilder::finalize() {
    process_up_to(bound_);
    // tail-reduce: leads are already mutually irreducible
    for (auto& e : elems_) {
        if (!e.alive) continue;
        FreePoly lead_mono = FreePoly::monomial(tab_, e.lead, Scalar::one(tab_->field()));
        FreePoly tail = normal_form(e.poly - lead_mono);
        e.poly = lead_mono + tail;
    }
}

std::vector<FreePoly> GroebnerBuilder::elements() const {
    std::vector<const Elem*> alive;
    for (const auto& e : elems_)
        if (e.alive) alive.push_back(&e);
    std::sort(alive.begin(), alive.end(), [this](const Elem* a, const Elem* b) {
        return term_compare(*tab_, a->lead, b->lead) < 0;
    });
    std::vector<FreePoly> out;
    out.reserve(alive.size());
    for (const Elem* e : alive) out.push_back(e->poly);
    return out;
}

std::vector<FreePoly> complete(const Presentation& p, int bound) {
    GroebnerBuilder gb(p.table, bound);
    for (const auto& r : p.relations) gb.add_relation(r);
    gb.finalize();
    return gb.elements();
}

} // namespace ncproj
