#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ncproj/field.hpp"

namespace ncproj {

struct GeneratorInfo {
    std::string name;
    int weight; // >= 1
};

/// Immutable generator context: base field plus the ordered generator list.
/// Declaration order is the term-order letter order (earlier = smaller).
class GenTable {
public:
    GenTable(Field f, std::vector<GeneratorInfo> gens);

    const Field& field() const { return field_; }
    const std::vector<GeneratorInfo>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    int weight(std::size_t i) const { return gens_[i].weight; }
    const std::string& name(std::size_t i) const { return gens_[i].name; }
    int index_of(const std::string& name) const; // -1 if absent
    int max_weight() const { return max_weight_; }

private:
    Field field_;
    std::vector<GeneratorInfo> gens_;
    int max_weight_;
};

using GenTableHandle = std::shared_ptr<const GenTable>;

GenTableHandle make_gen_table(Field f, std::vector<GeneratorInfo> gens);

/// Word in the free algebra: sequence of generator indices; {} is the unit.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

int word_degree(const GenTable& t, const Word& w);
std::string word_to_string(const GenTable& t, const Word& w); // "x*y*x", "1" for unit
Word word_cat(const Word& a, const Word& b);

/// Fixed multiplicative total order: weighted degree, then length, then
/// left-to-right letter comparison in declaration order.
/// Returns <0, 0, >0.
int term_compare(const GenTable& t, const Word& a, const Word& b);

/// True if `sub` occurs as a contiguous subword of `w` at position pos.
bool subword_at(const Word& w, const Word& sub, std::size_t pos);

/// First position where `sub` occurs in `w`, or npos.
std::size_t find_subword(const Word& w, const Word& sub);

/// True if `sub` occurs ending at the last letter of `w`.
bool subword_at_end(const Word& w, const Word& sub);

} // namespace ncproj
