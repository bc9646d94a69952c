#include "ncproj/word.hpp"

#include <set>

#include "ncproj/errors.hpp"

namespace ncproj {

GenTable::GenTable(Field f, std::vector<GeneratorInfo> gens)
    : field_(f), gens_(std::move(gens)), max_weight_(0) {
    std::set<std::string> seen;
    if (gens_.size() > 255) throw Error("too many generators");
    for (const auto& g : gens_) {
        if (g.weight <= 0) throw ZeroWeight("generator " + g.name + " has weight " + std::to_string(g.weight));
        if (!seen.insert(g.name).second) throw DuplicateGenerator(g.name);
        if (g.weight > max_weight_) max_weight_ = g.weight;
    }
}

int GenTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

GenTableHandle make_gen_table(Field f, std::vector<GeneratorInfo> gens) {
    return std::make_shared<const GenTable>(f, std::move(gens));
}

int word_degree(const GenTable& t, const Word& w) {
    int d = 0;
    for (Letter l : w) d += t.weight(l);
    return d;
}

std::string word_to_string(const GenTable& t, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += t.name(w[i]);
    }
    return s;
}

Word word_cat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

int term_compare(const GenTable& t, const Word& a, const Word& b) {
    int da = word_degree(t, a), db = word_degree(t, b);
    if (da != db) return da < db ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool subword_at(const Word& w, const Word& sub, std::size_t pos) {
    if (pos + sub.size() > w.size()) return false;
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (w[pos + i] != sub[i]) return false;
    return true;
}

std::size_t find_subword(const Word& w, const Word& sub) {
    if (sub.empty() || sub.size() > w.size()) return static_cast<std::size_t>(-1);
    for (std::size_t pos = 0; pos + sub.size() <= w.size(); ++pos)
        if (subword_at(w, sub, pos)) return pos;
    return static_cast<std::size_t>(-1);
}

bool subword_at_end(const Word& w, const Word& sub) {
    if (sub.size() > w.size()) return false;
    return subword_at(w, sub, w.size() - sub.size());
}

} // namespace ncproj
