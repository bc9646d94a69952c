#include "support.hpp"

#include <functional>
#include <map>

namespace testsupport {

using namespace ncproj;

std::vector<Word> all_words(const GenTable& t, int degree) {
    std::vector<Word> out;
    if (degree < 0) return out;
    if (degree == 0) {
        out.push_back({});
        return out;
    }
    for (std::size_t g = 0; g < t.size(); ++g) {
        int w = t.weight(g);
        if (w > degree) continue;
        for (const Word& tail : all_words(t, degree - w)) {
            Word full;
            full.reserve(tail.size() + 1);
            full.push_back(static_cast<Letter>(g));
            full.insert(full.end(), tail.begin(), tail.end());
            out.push_back(std::move(full));
        }
    }
    return out;
}

int free_ideal_dim_naive(const Presentation& p, int i) {
    const GenTable& t = *p.table;
    Field f = t.field();
    auto words = all_words(t, i);
    std::map<Word, int> idx;
    for (std::size_t j = 0; j < words.size(); ++j) idx[words[j]] = static_cast<int>(j);

    std::vector<std::vector<std::pair<int, Scalar>>> rows;
    for (const FreePoly& r : p.relations) {
        int dr = r.degree();
        if (dr > i) continue;
        for (int da = 0; da + dr <= i; ++da) {
            int db = i - dr - da;
            for (const Word& a : all_words(t, da)) {
                for (const Word& b : all_words(t, db)) {
                    std::vector<std::pair<int, Scalar>> row;
                    for (const auto& [u, c] : r.terms())
                        row.emplace_back(idx.at(word_cat(word_cat(a, u), b)), c);
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    Matrix m(f, rows.size(), words.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (const auto& [col, c] : rows[j]) m.set(j, col, m.at(j, col) + c);
    return static_cast<int>(row_reduce(m).rank);
}

std::vector<int> quotient_dims_linear(const Presentation& p, int up_to) {
    const GenTable& t = *p.table;
    Field f = t.field();
    std::size_t ng = t.size();

    std::vector<int> adim(up_to + 1, 0);
    adim[0] = 1;
    // Pi[e] maps the ambient sum of shifted lower components onto A_e
    // (columns = quotient coordinates). off[e][g] is generator g's block
    // offset inside the ambient row, -1 if its weight exceeds e.
    std::vector<Matrix> Pi;
    Pi.push_back(Matrix::identity(f, 1)); // degree 0, never applied
    std::vector<std::vector<int>> off(up_to + 1, std::vector<int>(ng, -1));
    std::vector<std::map<Word, Matrix>> cls(up_to + 1);
    cls[0].emplace(Word{}, Matrix::identity(f, 1));

    std::function<const Matrix&(int, const Word&)> cls_of = [&](int e, const Word& w) -> const Matrix& {
        auto it = cls[e].find(w);
        if (it != cls[e].end()) return it->second;
        Letter x = w[0];
        int wx = t.weight(x);
        Word tail(w.begin() + 1, w.end());
        const Matrix& tc = cls_of(e - wx, tail);
        Matrix amb(f, 1, Pi[e].rows());
        for (std::size_t c = 0; c < tc.cols(); ++c) amb.raw(0, off[e][x] + c) = tc.raw(0, c);
        Matrix res = mat_mul(amb, Pi[e]);
        return cls[e].emplace(w, std::move(res)).first->second;
    };

    for (int i = 1; i <= up_to; ++i) {
        std::size_t m_i = 0;
        for (std::size_t g = 0; g < ng; ++g) {
            int wg = t.weight(g);
            if (wg > i) continue;
            off[i][g] = static_cast<int>(m_i);
            m_i += static_cast<std::size_t>(adim[i - wg]);
        }

        std::vector<Matrix> cand;
        for (const FreePoly& r : p.relations) {
            int dr = r.degree();
            if (dr > i) continue;
            for (const Word& w : all_words(t, i - dr)) {
                Matrix row(f, 1, m_i);
                for (const auto& [u, c] : r.terms()) {
                    Letter x = u[0];
                    int wx = t.weight(x);
                    Word rest(u.begin() + 1, u.end());
                    const Matrix& cv = cls_of(i - wx, word_cat(rest, w));
                    for (std::size_t ccol = 0; ccol < cv.cols(); ++ccol) {
                        std::size_t col = off[i][x] + ccol;
                        row.set(0, col, row.at(0, col) + c * cv.at(0, ccol));
                    }
                }
                cand.push_back(std::move(row));
            }
        }

        Matrix rel(f, cand.size(), m_i);
        for (std::size_t j = 0; j < cand.size(); ++j)
            for (std::size_t c = 0; c < m_i; ++c) rel.raw(j, c) = cand[j].raw(0, c);
        RowReduceResult rr = row_reduce(rel);

        adim[i] = static_cast<int>(m_i - rr.rank);
        std::vector<std::size_t> nonpivot;
        {
            std::size_t pi = 0;
            for (std::size_t c = 0; c < m_i; ++c) {
                if (pi < rr.pivot_cols.size() && rr.pivot_cols[pi] == c)
                    ++pi;
                else
                    nonpivot.push_back(c);
            }
        }
        Matrix proj(f, m_i, nonpivot.size());
        for (std::size_t j = 0; j < nonpivot.size(); ++j) proj.raw(nonpivot[j], j) = 1;
        for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
            for (std::size_t j = 0; j < nonpivot.size(); ++j)
                proj.raw(rr.pivot_cols[pr], j) = -rr.rref.raw(pr, nonpivot[j]);
        if (f.is_prime())
            for (std::size_t a = 0; a < proj.rows(); ++a)
                for (std::size_t b = 0; b < proj.cols(); ++b)
                    proj.raw(a, b) = reduce_mod(proj.raw(a, b), f.characteristic());
        Pi.push_back(std::move(proj));
    }
    return adim;
}

FreePoly random_homogeneous(Rng& rng, const GenTableHandle& table, int degree) {
    auto words = all_words(*table, degree);
    FreePoly out = FreePoly::zero(table);
    if (words.empty()) return out;
    Field f = table->field();
    int nterms = 1 + static_cast<int>(rng.below(3));
    static const long coefs[] = {1, 2, -1, -2};
    for (int k = 0; k < nterms; ++k) {
        const Word& w = words[rng.below(words.size())];
        long c = coefs[rng.below(4)];
        out = out + FreePoly::monomial(table, w, Scalar::of_int(f, c));
    }
    return out;
}

Presentation random_presentation(Rng& rng, bool allow_prime_field) {
    static const unsigned long primes[] = {3, 5, 7, 101, 32003};
    Field f = (allow_prime_field && rng.below(2) == 0) ? Field::prime(primes[rng.below(5)])
                                                       : Field::rationals();
    int ngens = 1 + static_cast<int>(rng.below(3));
    static const char* names[] = {"x", "y", "z"};
    std::vector<GeneratorInfo> gens;
    for (int g = 0; g < ngens; ++g)
        gens.push_back({names[g], 1 + static_cast<int>(rng.below(2))});
    GenTableHandle table = make_gen_table(f, gens);

    int nrels = static_cast<int>(rng.below(3));
    std::vector<FreePoly> rels;
    for (int r = 0; r < nrels; ++r) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            int d = 2 + static_cast<int>(rng.below(3));
            FreePoly cand = random_homogeneous(rng, table, d);
            if (!cand.is_zero()) {
                rels.push_back(cand);
                break;
            }
        }
    }
    return make_presentation(table, rels);
}

AlgebraHandle random_tame_algebra(Rng& rng, int bound, int cap, bool allow_prime_field) {
    int probe_to = std::min(bound, 6);
    int probe_cap = std::min(cap, 24);
    for (int tries = 0; tries < 400; ++tries) {
        Presentation p = random_presentation(rng, allow_prime_field);
        AlgebraHandle probe = make_algebra(p, probe_to);
        bool ok = true;
        for (int e = 0; e <= probe_to && ok; ++e) ok = probe->dim(e) <= probe_cap;
        if (!ok) continue;
        if (bound <= probe_to) return probe;
        AlgebraHandle full = make_algebra(p, bound);
        for (int e = probe_to + 1; e <= bound && ok; ++e) ok = full->dim(e) <= cap;
        if (ok) return full;
    }
    throw Error("random algebra sampling kept exceeding the dimension cap");
}

} // namespace testsupport
