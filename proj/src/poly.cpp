#include "ncproj/poly.hpp"

#include <algorithm>

#include "ncproj/errors.hpp"

namespace ncproj {

void check_same_table(const GenTableHandle& a, const GenTableHandle& b, const char* what) {
    if (a.get() != b.get())
        throw ContextMismatch(std::string(what) + ": operands belong to different generator tables");
}

FreePoly FreePoly::monomial(GenTableHandle tab, Word w, Scalar c) {
    check_same_field(tab->field(), c.field(), "monomial coefficient");
    FreePoly p(std::move(tab));
    if (!c.is_zero()) p.terms_.emplace_back(std::move(w), std::move(c));
    return p;
}

const FreePoly::Term& FreePoly::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

bool FreePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = word_degree(*tab_, terms_.front().first);
    for (const auto& t : terms_)
        if (word_degree(*tab_, t.first) != d) return false;
    return true;
}

int FreePoly::degree() const {
    if (terms_.empty()) throw Error("degree of zero polynomial");
    return word_degree(*tab_, terms_.front().first);
}

void FreePoly::insert_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    // binary search in descending order
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [this](const Term& t, const Word& key) {
                                   return term_compare(*tab_, t.first, key) > 0;
                               });
    if (it != terms_.end() && term_compare(*tab_, it->first, w) == 0) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{w, c});
    }
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    check_same_table(tab_, o.tab_, "polynomial sum");
    FreePoly out = *this;
    for (const auto& t : o.terms_) out.insert_term(t.first, t.second);
    return out;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    check_same_table(tab_, o.tab_, "polynomial difference");
    FreePoly out = *this;
    for (const auto& t : o.terms_) out.insert_term(t.first, -t.second);
    return out;
}

FreePoly FreePoly::operator-() const {
    FreePoly out(tab_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
    check_same_field(tab_->field(), c.field(), "polynomial scale");
    FreePoly out(tab_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second *= c;
    return out;
}

bool FreePoly::operator==(const FreePoly& o) const {
    check_same_table(tab_, o.tab_, "polynomial comparison");
    return terms_ == o.terms_;
}

FreePoly poly_mul(const FreePoly& a, const FreePoly& b) {
    check_same_table(a.tab_, b.tab_, "polynomial product");
    FreePoly out(a.tab_);
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            out.insert_term(word_cat(ta.first, tb.first), ta.second * tb.second);
    return out;
}

FreePoly add_scaled_shifted(const FreePoly& f, const Scalar& c, const Word& l,
                            const FreePoly& g, const Word& r) {
    check_same_table(f.tab_, g.tab_, "polynomial rewrite");
    FreePoly out = f;
    for (const auto& t : g.terms_)
        out.insert_term(word_cat(word_cat(l, t.first), r), c * t.second);
    return out;
}

std::string FreePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        const Scalar& c = t.second;
        mpq_class v = c.value();
        bool neg = sgn(v) < 0 && !tab_->field().is_prime();
        mpq_class absv = neg ? mpq_class(-v) : v;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string coeff = absv.get_str();
        if (t.first.empty()) {
            s += coeff;
        } else if (coeff == "1") {
            s += word_to_string(*tab_, t.first);
        } else {
            s += coeff + "*" + word_to_string(*tab_, t.first);
        }
    }
    return s;
}

Presentation make_presentation(GenTableHandle table, std::vector<FreePoly> relations) {
    for (const auto& r : relations) {
        check_same_table(table, r.table(), "presentation relation");
        if (r.is_zero()) throw Error("zero relation in presentation");
        if (!r.is_homogeneous()) throw InhomogeneousRelation(r.to_string());
        if (r.degree() < 1) throw Error("relation of degree < 1");
    }
    return Presentation{std::move(table), std::move(relations)};
}

} // namespace ncproj
