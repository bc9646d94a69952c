#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncproj/dsl.hpp"
#include "ncproj/poly.hpp"
#include "support.hpp"

using namespace ncproj;

namespace {

GenTableHandle xyz_table() {
    return make_gen_table(Field::rationals(), {{"x", 1}, {"y", 1}, {"z", 2}});
}

FreePoly gen(const GenTableHandle& t, const char* name) {
    return FreePoly::monomial(t, Word{static_cast<Letter>(t->index_of(name))},
                              Scalar::one(t->field()));
}

} // namespace

TEST_CASE("generator table validation") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(make_gen_table(q, {{"x", 0}}), ZeroWeight);
    CHECK_THROWS_AS(make_gen_table(q, {{"x", -2}}), ZeroWeight);
    CHECK_THROWS_AS(make_gen_table(q, {{"x", 1}, {"x", 1}}), DuplicateGenerator);
    auto t = xyz_table();
    CHECK(t->size() == 3);
    CHECK(t->index_of("z") == 2);
    CHECK(t->index_of("w") == -1);
    CHECK(t->max_weight() == 2);
}

TEST_CASE("term order: degree, then length, then leftmost letter") {
    auto t = xyz_table();
    Word x{0}, y{1}, z{2};
    Word xy{0, 1}, yx{1, 0}, xx{0, 0};

    CHECK(term_compare(*t, x, z) < 0);        // weighted degree decides
    CHECK(term_compare(*t, z, xy) < 0);       // same degree, shorter word first
    CHECK(term_compare(*t, xy, yx) < 0);      // same shape, x declared before y
    CHECK(term_compare(*t, xx, xy) < 0);
    CHECK(term_compare(*t, yx, yx) == 0);
    CHECK(term_compare(*t, Word{}, x) < 0);

    CHECK(word_degree(*t, Word{0, 1, 2}) == 4);
    CHECK(word_to_string(*t, Word{0, 1, 0}) == "x*y*x");
    CHECK(word_to_string(*t, Word{}) == "1");

    Word w{0, 1, 0, 2};
    CHECK(subword_at(w, Word{1, 0}, 1));
    CHECK(!subword_at(w, Word{1, 0}, 0));
    CHECK(find_subword(w, Word{0, 2}) == 2);
    CHECK(find_subword(w, Word{2, 2}) == static_cast<std::size_t>(-1));
    CHECK(find_subword(w, Word{0}) == 0); // leftmost occurrence
    CHECK(subword_at_end(w, Word{0, 2}));
    CHECK(!subword_at_end(w, Word{0, 1}));
}

TEST_CASE("free polynomial arithmetic") {
    auto t = xyz_table();
    FreePoly x = gen(t, "x"), y = gen(t, "y"), z = gen(t, "z");
    FreePoly one = FreePoly::unit(t);

    FreePoly s = x + y;
    FreePoly sq = poly_mul(s, s);
    CHECK(sq.to_string() == "y*y + y*x + x*y + x*x");
    CHECK(sq.terms().size() == 4);
    CHECK(sq.leading().first == Word{1, 1});

    CHECK((x - x).is_zero());
    CHECK((x + (-x)).is_zero());
    CHECK(poly_mul(s, x - y).to_string() == "-y*y + y*x - x*y + x*x");

    FreePoly mixed = poly_mul(x, x) - y + one;
    CHECK(mixed.to_string() == "x*x - y + 1");
    CHECK(!mixed.is_homogeneous());
    CHECK(sq.is_homogeneous());
    CHECK(sq.degree() == 2);
    CHECK(z.degree() == 2);
    CHECK_THROWS_AS(FreePoly::zero(t).degree(), Error);
    CHECK_THROWS_AS(FreePoly::zero(t).leading(), Error);

    FreePoly lead_demo = poly_mul(y, x) - poly_mul(x, y).scaled(Scalar::of_int(t->field(), 2));
    CHECK(lead_demo.leading().first == Word{1, 0}); // y*x beats x*y
    CHECK(lead_demo.to_string() == "y*x - 2*x*y");

    // elementary rewrite step: 0 + 2 * x (y + 1) z
    FreePoly step = add_scaled_shifted(FreePoly::zero(t), Scalar::of_int(t->field(), 2),
                                       Word{0}, y + one, Word{2});
    CHECK(step.to_string() == "2*x*y*z + 2*x*z");

    // same data in a different table is a different context
    auto t2 = xyz_table();
    CHECK_THROWS_AS(x + gen(t2, "x"), ContextMismatch);
}

TEST_CASE("presentation validation") {
    auto t = xyz_table();
    FreePoly x = gen(t, "x"), y = gen(t, "y");
    CHECK_NOTHROW(make_presentation(t, {poly_mul(y, x) - poly_mul(x, y)}));
    CHECK_THROWS_AS(make_presentation(t, {poly_mul(x, x) - y}), InhomogeneousRelation);
    CHECK_THROWS_AS(make_presentation(t, {FreePoly::zero(t)}), Error);
    CHECK_THROWS_AS(make_presentation(t, {FreePoly::unit(t)}), Error);
}

TEST_CASE("presentation text format") {
    Presentation p = parse_presentation("# quantum plane\nfield Q\ngen x 1\ngen y 1\nrel y*x - 2*x*y\n");
    CHECK(p.table->field() == Field::rationals());
    REQUIRE(p.table->size() == 2);
    CHECK(p.table->weight(0) == 1);
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].to_string() == "y*x - 2*x*y");

    Presentation wp = parse_presentation("field Q\ngen x 2\ngen z 3\n");
    CHECK(wp.table->weight(1) == 3);
    CHECK(wp.relations.empty());

    Presentation fp = parse_presentation("field F 7\ngen x 1\ngen y 1\nrel y*x - 9*x*y\n");
    CHECK(fp.table->field() == Field::prime(7));
    // -9 is 5 mod 7
    CHECK(fp.relations[0].to_string() == "y*x + 5*x*y");
}

TEST_CASE("presentation text errors") {
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    CHECK_THROWS_AS(parse_presentation("gen x 1\n"), ParseError); // field first
    CHECK_THROWS_AS(parse_presentation("field Q\nfield Q\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("field F 8\ngen x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("field R\ngen x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("field Q\ngen x 0\n"), ZeroWeight);
    CHECK_THROWS_AS(parse_presentation("field Q\ngen x 1\ngen x 2\n"), DuplicateGenerator);
    CHECK_THROWS_AS(parse_presentation("field Q\ngen x 1\nrel x*x + x\n"), InhomogeneousRelation);
    CHECK_THROWS_AS(parse_presentation("field Q\ngen x 1\nrel x - x\n"), ParseError); // zero relation
    CHECK_THROWS_AS(parse_presentation("field Q\nbogus x\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("field Q\ngen x 1 extra\n"), ParseError);

    try {
        parse_presentation("field Q\ngen x 1\nrel x*x +\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 10);
    }
}

TEST_CASE("polynomial expression parsing") {
    auto t = xyz_table();
    FreePoly x = gen(t, "x"), y = gen(t, "y"), z = gen(t, "z");

    CHECK(parse_poly("x*(y + 2*z)", t) == poly_mul(x, y + z.scaled(Scalar::of_int(t->field(), 2))));
    CHECK(parse_poly("(x+y)*(x-y)", t).to_string() == "-y*y + y*x - x*y + x*x");
    CHECK(parse_poly("1/2*x", t) == x.scaled(Scalar(t->field(), mpq_class(1) / 2)));
    CHECK(parse_poly("-x + 3", t).to_string() == "-x + 3");
    CHECK(parse_poly("+x", t) == x); // one leading sign is fine
    CHECK(parse_poly("2*3*x", t) == x.scaled(Scalar::of_int(t->field(), 6)));
    CHECK(parse_poly("x*y*x", t).leading().first == Word{0, 1, 0});
    CHECK(parse_poly("0", t).is_zero());
    CHECK(parse_poly("  x  ", t) == x);

    try {
        parse_poly("x + ", t);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
    try {
        parse_poly("x*q", t);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column == 3);
    }
    CHECK_THROWS_AS(parse_poly("1/0", t), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", t), ParseError);
    CHECK_THROWS_AS(parse_poly("x y", t), ParseError); // implicit products rejected
}

TEST_CASE("morphism and skew extension specs") {
    MorphismSpec m = parse_morphism_spec(
        "source a.alg\ntarget b.alg\nmap x -> x*x\nmap y -> x*y + y*x\n");
    CHECK(m.source_path == "a.alg");
    CHECK(m.target_path == "b.alg");
    CHECK(m.images.at("y") == "x*y + y*x");
    CHECK_THROWS_AS(parse_morphism_spec("source a.alg\nmap x -> x\n"), ParseError);
    CHECK_THROWS_AS(parse_morphism_spec("source a\ntarget b\nmap x -> x\nmap x -> y\n"), ParseError);
    CHECK_THROWS_AS(parse_morphism_spec("source a\ntarget b\nmap x y\n"), ParseError);

    OreSpec o = parse_ore_spec("base r.alg\ntweight 2\ntwist x -> -x\nder x -> x*x*x\n");
    CHECK(o.base_path == "r.alg");
    CHECK(o.tname == "t");
    CHECK(o.tweight == 2);
    CHECK(o.twist.at("x") == "-x");
    CHECK(o.der.at("x") == "x*x*x");
    CHECK_THROWS_AS(parse_ore_spec("base r.alg\n"), ParseError);
    CHECK(parse_ore_spec("base r.alg\ntname s\ntweight 1\n").tname == "s");
}
