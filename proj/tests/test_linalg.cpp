#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncproj/matrix.hpp"
#include "support.hpp"

using namespace ncproj;
using testsupport::Rng;

namespace {

Matrix from_ints(Field f, std::size_t rows, std::size_t cols, std::initializer_list<long> vals) {
    Matrix m(f, rows, cols);
    std::size_t k = 0;
    for (long v : vals) {
        m.set_int(k / cols, k % cols, v);
        ++k;
    }
    return m;
}

Matrix random_matrix(Rng& rng, Field f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.below(3) != 0) m.set_int(i, j, rng.int_in(-5, 5));
    return m;
}

} // namespace

TEST_CASE("field construction and arithmetic") {
    Field q = Field::rationals();
    Field f7 = Field::prime(7);

    CHECK(q.to_string() == "Q");
    CHECK(f7.to_string() == "F 7");
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Field::prime(1), Error);
    CHECK_THROWS_AS(Field::prime(1ul << 31), Error);
    CHECK(Field::prime(2147483647).characteristic() == 2147483647ul); // 2^31 - 1 is prime

    Scalar half(q, mpq_class(1) / 2);
    CHECK((half + half) == Scalar::one(q));
    CHECK(half.inverse() == Scalar::of_int(q, 2));
    CHECK(half.to_string() == "1/2");

    // 1/2 = 4 in F_7
    Scalar h7(f7, mpq_class(1) / 2);
    CHECK(h7 == Scalar::of_int(f7, 4));
    // -3/2 = 1 in F_5
    Field f5 = Field::prime(5);
    CHECK(Scalar(f5, mpq_class(-3) / 2) == Scalar::of_int(f5, 1));
    // residues stay canonical
    CHECK(Scalar::of_int(f7, -1).to_string() == "6");
    CHECK(Scalar::of_int(f7, 14).is_zero());

    CHECK_THROWS_AS(Scalar::of_int(q, 1) + Scalar::of_int(f7, 1), FieldMismatch);
    CHECK_THROWS_AS(Scalar::of_int(f7, 0).inverse(), Error);
}

TEST_CASE("rref of a singular integer matrix") {
    Field q = Field::rationals();
    Matrix m = from_ints(q, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    RowReduceResult r = row_reduce(m);
    CHECK(r.rank == 2);
    REQUIRE(r.pivot_cols == std::vector<std::size_t>{0, 1});
    Matrix expect = from_ints(q, 3, 3, {1, 0, -1, 0, 1, 2, 0, 0, 0});
    CHECK(r.rref == expect);
}

TEST_CASE("kernel basis is canonical") {
    Field q = Field::rationals();
    Matrix m = from_ints(q, 1, 3, {1, 2, 3});
    Matrix k = kernel_basis(m);
    REQUIRE(k.rows() == 2);
    CHECK(k.at(0, 0) == Scalar::of_int(q, 1));
    CHECK(k.at(0, 1).is_zero());
    CHECK(k.at(0, 2) == Scalar(q, mpq_class(-1) / 3));
    CHECK(k.at(1, 0).is_zero());
    CHECK(k.at(1, 1) == Scalar::of_int(q, 1));
    CHECK(k.at(1, 2) == Scalar(q, mpq_class(-2) / 3));
    // rows really annihilate m (as column vectors of m's row space)
    CHECK(mat_mul(m, transpose(k)).is_zero());

    CHECK(kernel_basis(Matrix::identity(q, 4)).rows() == 0);
}

TEST_CASE("rank nullity and idempotence over both fields") {
    for (Field f : {Field::rationals(), Field::prime(5), Field::prime(32003)}) {
        CAPTURE(f.to_string());
        Rng rng(0x5eed0001);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
            Matrix m = random_matrix(rng, f, rows, cols);
            RowReduceResult r = row_reduce(m);
            Matrix k = kernel_basis(m);
            CHECK(r.rank + k.rows() == cols);
            CHECK(mat_mul(m, transpose(k)).is_zero());
            // rref is a fixed point
            CHECK(row_reduce(r.rref).rref == r.rref);
            // row space unchanged by rescaling a row
            Matrix doubled = stack(m, mat_scale(Scalar::of_int(f, 2), m));
            CHECK(row_space_basis(doubled) == row_space_basis(m));
        }
    }
}

TEST_CASE("prime field rref stays in canonical residues") {
    Field f5 = Field::prime(5);
    Rng rng(0x5eed0002);
    Matrix m = random_matrix(rng, f5, 5, 7);
    RowReduceResult r = row_reduce(m);
    for (std::size_t i = 0; i < r.rref.rows(); ++i)
        for (std::size_t j = 0; j < r.rref.cols(); ++j) {
            const mpq_class& v = r.rref.raw(i, j);
            CHECK(v.get_den() == 1);
            CHECK(v.get_num() >= 0);
            CHECK(v.get_num() < 5);
        }
}

TEST_CASE("rowspace intersection") {
    Field q = Field::rationals();
    Matrix u = from_ints(q, 2, 3, {1, 0, 0, 0, 1, 0});
    Matrix v = from_ints(q, 2, 3, {1, 1, 1, 0, 0, 1});
    Matrix w = intersect_rowspaces(u, v);
    // both span contains (1,1,0); intersection is exactly its line
    REQUIRE(w.rows() == 1);
    CHECK(w.at(0, 0) == Scalar::of_int(q, 1));
    CHECK(w.at(0, 1) == Scalar::of_int(q, 1));
    CHECK(w.at(0, 2).is_zero());

    Matrix a = from_ints(q, 1, 2, {1, 0});
    Matrix b = from_ints(q, 1, 2, {0, 1});
    CHECK(intersect_rowspaces(a, b).rows() == 0);

    // intersection with self is self (canonical form)
    CHECK(intersect_rowspaces(u, u) == row_space_basis(u));
}

TEST_CASE("intersection properties on random spaces") {
    Rng rng(0x5eed0003);
    for (Field f : {Field::rationals(), Field::prime(101)}) {
        for (int trial = 0; trial < 10; ++trial) {
            Matrix u = random_matrix(rng, f, 1 + rng.below(4), 5);
            Matrix v = random_matrix(rng, f, 1 + rng.below(4), 5);
            Matrix w = intersect_rowspaces(u, v);
            CHECK(rowspace_contains(row_space_basis(u), w));
            CHECK(rowspace_contains(row_space_basis(v), w));
            // dim(U)+dim(V) = dim(U+V)+dim(U cap V)
            std::size_t du = row_space_basis(u).rows();
            std::size_t dv = row_space_basis(v).rows();
            std::size_t ds = row_space_basis(stack(u, v)).rows();
            CHECK(du + dv == ds + w.rows());
        }
    }
}

TEST_CASE("reduce_against and containment") {
    Field q = Field::rationals();
    Matrix basis = from_ints(q, 2, 3, {1, 0, -1, 0, 1, 2});
    RowReduceResult r = row_reduce(basis);
    Matrix in = from_ints(q, 1, 3, {1, 1, 1});
    CHECK(reduce_against(r.rref, r.pivot_cols, in).is_zero());
    Matrix out = from_ints(q, 1, 3, {1, 1, 0});
    Matrix res = reduce_against(r.rref, r.pivot_cols, out);
    CHECK(!res.is_zero());
    CHECK(res.at(0, 2) == Scalar::of_int(q, -1));
    CHECK(rowspace_contains(basis, in));
    CHECK(!rowspace_contains(basis, out));
}

TEST_CASE("solve_row_system") {
    Field q = Field::rationals();
    Matrix a = from_ints(q, 2, 2, {1, 2, 3, 4});
    Matrix b = from_ints(q, 1, 2, {5, 6});
    SolveResult s = solve_row_system(a, b);
    REQUIRE(s.ok);
    CHECK(s.x.at(0, 0) == Scalar::of_int(q, -1));
    CHECK(s.x.at(0, 1) == Scalar::of_int(q, 2));
    CHECK(mat_mul(s.x, a) == b);

    Matrix bad_a = from_ints(q, 1, 2, {1, 0});
    Matrix bad_b = from_ints(q, 1, 2, {0, 1});
    CHECK(!solve_row_system(bad_a, bad_b).ok);

    // random solvable systems round-trip
    Rng rng(0x5eed0004);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
        for (int trial = 0; trial < 10; ++trial) {
            Matrix m = random_matrix(rng, f, 3, 4);
            Matrix x0 = random_matrix(rng, f, 2, 3);
            Matrix rhs = mat_mul(x0, m);
            SolveResult got = solve_row_system(m, rhs);
            REQUIRE(got.ok);
            CHECK(mat_mul(got.x, m) == rhs);
        }
    }
}

TEST_CASE("matrix arithmetic basics") {
    Field q = Field::rationals();
    Matrix a = from_ints(q, 2, 2, {1, 2, 3, 4});
    Matrix b = from_ints(q, 2, 2, {0, 1, 1, 0});
    CHECK(mat_mul(a, b) == from_ints(q, 2, 2, {2, 1, 4, 3}));
    CHECK(mat_mul(b, a) == from_ints(q, 2, 2, {3, 4, 1, 2}));
    CHECK(mat_add(a, b) == from_ints(q, 2, 2, {1, 3, 4, 4}));
    CHECK(mat_scale(Scalar::of_int(q, -1), a) == from_ints(q, 2, 2, {-1, -2, -3, -4}));
    CHECK(transpose(a) == from_ints(q, 2, 2, {1, 3, 2, 4}));
    CHECK(mat_mul(a, Matrix::identity(q, 2)) == a);
    CHECK(stack(a, b).rows() == 4);
    CHECK_THROWS_AS(mat_mul(a, from_ints(q, 3, 1, {1, 2, 3})), DimensionMismatch);
    CHECK_THROWS_AS(mat_add(a, from_ints(q, 1, 2, {1, 2})), DimensionMismatch);
    Field f7 = Field::prime(7);
    CHECK_THROWS_AS(mat_mul(a, Matrix::identity(f7, 2)), FieldMismatch);
}
