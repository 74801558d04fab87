#include <doctest.h>

#include "axtk/catalog.hpp"

using namespace axtk;

TEST_CASE("catalog parameter guards") {
    FieldPtr Q = Field::rationals();
    CHECK_THROWS_AS(catalog::build_6A(Q->zero()), InvalidParameter);
    CHECK_THROWS_AS(catalog::build_6A(Q->one()), InvalidParameter);
    CHECK_THROWS_AS(catalog::build_6A(Q->from_rat(Rat(1, 2))), InvalidParameter);
    CHECK_THROWS_AS(catalog::build_6A(Q->from_rat(Rat(4, 9))), InvalidParameter);
    CHECK_NOTHROW(catalog::build_6A(Q->from_rat(Rat(1, 3))));
    CHECK_THROWS_AS(catalog::build_3C(Q->zero()), InvalidParameter);
    CHECK_THROWS_AS(catalog::build_3C(Q->one()), InvalidParameter);
    CHECK_NOTHROW(catalog::build_3C(Q->from_int(-1)));
    CHECK_THROWS_AS(catalog::build("nope", std::nullopt), InvalidParameter);
    CHECK_THROWS_AS(catalog::build("2B", Q->from_int(3)), InvalidParameter);
}

TEST_CASE("catalog entries carry consistent metadata") {
    for (const std::string& name : catalog::entry_names()) {
        catalog::CatalogEntry e = catalog::build(name, std::nullopt);
        CHECK(e.name == name);
        CHECK(!e.axes.empty());
        for (std::size_t i : e.axes) {
            // every designated axis is at least idempotent (the full report
            // runs in the acceptance suite)
            Vector a = e.algebra->basis_vector(i);
            CHECK(e.algebra->multiply(a, a) == a);
        }
    }
}

TEST_CASE("6A in prime characteristic") {
    FieldPtr F13 = Field::function(Field::prime(13), {"alpha"});
    catalog::CatalogEntry e = catalog::build_6A(F13->variable("alpha"));
    CHECK(e.algebra->dim() == 8);
    Vector b0 = e.algebra->basis_vector(2);
    CHECK(e.algebra->multiply(b0, b0) == b0);
    // the specialized build also works at a concrete residue
    FieldPtr P13 = Field::prime(13);
    catalog::CatalogEntry e5 = catalog::build_6A(P13->from_int(5));
    Decomposition dec = decompose(*e5.algebra, e5.algebra->basis_vector(2), e5.law);
    CHECK(dec.total_dim() == 8);
}

TEST_CASE("6A at alpha = 1/3 has beta = 1/12, i.e. alpha = 4 beta") {
    catalog::CatalogEntry e = catalog::build_6A(Field::rationals()->from_rat(Rat(1, 3)));
    Scalar beta = e.law.beta();
    CHECK(beta == Field::rationals()->from_rat(Rat(1, 12)));
    CHECK(e.law.alpha() == beta * 4);
}

TEST_CASE("6A rejects parameters that collapse the fusion eigenvalues") {
    // in F_11, alpha = 4/9 is the residue 4 * 9^-1 = 4 * 5 = 20 = 9
    FieldPtr P11 = Field::prime(11);
    CHECK_THROWS_AS(catalog::build_6A(P11->from_int(9)), InvalidParameter);
    CHECK_NOTHROW(catalog::build_6A(P11->from_int(3)));
}

TEST_CASE("6A at alpha = 2 over F_11 realizes the (2, -4) parameter pair") {
    FieldPtr P11 = Field::prime(11);
    catalog::CatalogEntry e = catalog::build_6A(P11->from_int(2));
    CHECK(e.law.beta() == P11->from_int(-4));
    // alpha + beta = -2, which is not 1 in F_11
    CHECK(e.law.alpha() + e.law.beta() == P11->from_int(-2));
    CHECK(e.law.alpha() + e.law.beta() != P11->one());
    for (std::size_t i : e.axes)
        CHECK(axis_report(*e.algebra, e.algebra->basis_vector(i), e.law).pass());
}
