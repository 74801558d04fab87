#include <doctest.h>

#include "axtk/fields.hpp"
#include "test_support.hpp"

using namespace axtk;

namespace {

std::vector<FieldPtr> all_field_kinds() {
    return {
        Field::rationals(),
        Field::prime(7),
        Field::quadratic(Field::rationals(), Rat(97)),
        Field::quadratic(Field::prime(11), Rat(2)),  // 2 is not a square mod 11
        Field::function(Field::rationals(), {"alpha"}),
        Field::function(Field::rationals(), {"alpha", "beta"}),
        Field::function(Field::prime(7), {"alpha"}),
    };
}

}  // namespace

TEST_CASE("descriptor invariants") {
    CHECK_THROWS_AS(Field::prime(2), InvalidParameter);
    CHECK_THROWS_AS(Field::prime(9), InvalidParameter);
    CHECK_THROWS_AS(Field::prime(1), InvalidParameter);
    CHECK_THROWS_AS(Field::quadratic(Field::rationals(), Rat(4)), InvalidParameter);
    CHECK_THROWS_AS(Field::quadratic(Field::rationals(), Rat(9, 25)), InvalidParameter);
    CHECK_THROWS_AS(Field::quadratic(Field::rationals(), Rat(0)), InvalidParameter);
    CHECK_NOTHROW(Field::quadratic(Field::rationals(), Rat(-1)));
    CHECK_THROWS_AS(Field::function(Field::rationals(), {}), InvalidParameter);
    CHECK_THROWS_AS(Field::function(Field::rationals(), {"a", "a"}), InvalidParameter);
    CHECK_THROWS_AS(Field::function(Field::rationals(), {"sqrt"}), InvalidParameter);
    CHECK_THROWS_AS(Field::quadratic(Field::function(Field::rationals(), {"a"}), Rat(2)),
                    InvalidParameter);
}

TEST_CASE("quadratic residue rejection agrees with exhaustion") {
    // the constructor's Euler-criterion check vs an exhaustive square table
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 101ul, 293ul}) {
        std::vector<bool> square(p, false);
        for (unsigned long x = 0; x < p; ++x) square[(x * x) % p] = true;
        FieldPtr base = Field::prime(p);
        for (unsigned long d = 1; d < p; ++d) {
            bool accepted = true;
            try {
                Field::quadratic(base, Rat(d));
            } catch (const InvalidParameter&) {
                accepted = false;
            }
            CHECK(accepted == !square[d]);
        }
    }
}

TEST_CASE("field axioms hold in every descriptor kind") {
    std::mt19937 rng(29);
    for (const FieldPtr& f : all_field_kinds()) {
        CAPTURE(f->describe());
        for (int t = 0; t < 15; ++t) {
            Scalar a = test::random_scalar(rng, f);
            Scalar b = test::random_scalar(rng, f);
            Scalar c = test::random_scalar(rng, f);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == f->one());
                CHECK(a / a == f->one());
            }
        }
    }
}

TEST_CASE("equality is canonical-form equality") {
    FieldPtr f = Field::function(Field::rationals(), {"alpha"});
    Scalar alpha = f->variable("alpha");
    // (alpha^2 - 1)/(alpha - 1) normalizes to alpha + 1
    Scalar q = (alpha * alpha - 1) / (alpha - 1);
    CHECK(q == alpha + 1);
    CHECK(q.den().is_one());
    // denominators normalize to monic form: 1/(2 alpha - 1) = (1/2)/(alpha - 1/2)
    Scalar r = f->one() / (f->from_int(2) * alpha - 1);
    CHECK(r.den().leading_coeff() == 1);
    CHECK(r.num().constant_value() == Rat(1, 2));
    // the same value built two ways compares equal
    CHECK(r == (f->from_rat(Rat(1, 2))) / (alpha - f->from_rat(Rat(1, 2))));
    // partial-fraction style cross-route
    Scalar lhs = f->one() / (alpha - 1) + f->one() / (alpha + 1);
    Scalar rhs = (alpha + alpha) / (alpha * alpha - 1);
    CHECK(lhs == rhs);
}

TEST_CASE("normalization is idempotent: raw fraction inputs reach canonical form") {
    FieldPtr F = Field::function(Field::rationals(), {"alpha"});
    std::mt19937 rng(73);
    MPoly num = test::random_poly(rng, 1, 0, 3, 3);
    // 2num / 2den equals num / den, whatever the representative
    MPoly two = MPoly::constant(1, 0, Rat(2));
    MPoly den = MPoly::variable(1, 0, 0);
    Scalar a = Scalar::make_function(F, num, den);
    Scalar b = Scalar::make_function(F, num * two, den * two);
    CHECK(a == b);
    // scaling numerator and denominator by a common polynomial cancels
    Scalar c = Scalar::make_function(F, num * den, den * den);
    CHECK(a == c);
}

TEST_CASE("arithmetic anchors") {
    FieldPtr Q = Field::rationals();
    CHECK(Q->from_int(131) * Q->from_int(131) == Q->from_int(17161));
    FieldPtr K = Field::quadratic(Q, Rat(97));
    Scalar root13 = K->from_parts(Q->zero(), Q->from_int(13));
    CHECK(root13 * root13 == K->from_int(16393));
    std::mt19937 rng(31);
    for (const FieldPtr& f : all_field_kinds()) {
        Scalar x = test::random_scalar(rng, f);
        CHECK(x + f->zero() == x);
    }
}

TEST_CASE("quadratic conjugate norm identity") {
    std::mt19937 rng(37);
    FieldPtr K = Field::quadratic(Field::rationals(), Rat(5));
    Scalar d = K->base()->from_rat(Rat(5));
    for (int t = 0; t < 20; ++t) {
        Scalar a = K->base()->from_rat(test::random_rat(rng));
        Scalar b = K->base()->from_rat(test::random_rat(rng));
        Scalar x = K->from_parts(a, b);
        Scalar conj = K->from_parts(a, -b);
        Scalar norm = a * a - b * b * d;
        CHECK(x * conj == K->from_parts(norm, K->base()->zero()));
    }
}

TEST_CASE("specialize") {
    FieldPtr F = Field::function(Field::rationals(), {"alpha"});
    FieldPtr Q = Field::rationals();
    Scalar alpha = F->variable("alpha");
    Scalar gamma = alpha / (F->from_int(8) * (F->from_int(2) * alpha - 1));

    SUBCASE("gamma at alpha = 1/3 is -1/8, and the 1/18 cross-check holds") {
        std::map<std::string, Scalar> third{{"alpha", Q->from_rat(Rat(1, 3))}};
        CHECK(gamma.specialize(third) == Q->from_rat(Rat(-1, 8)));
        // alpha^2/2 - 2(3 alpha - 1) gamma at alpha = 1/3
        Scalar expr = alpha * alpha / 2 - 2 * (3 * alpha - 1) * gamma;
        CHECK(expr.specialize(third) == Q->from_rat(Rat(1, 18)));
    }
    SUBCASE("plain substitution") {
        CHECK(alpha.specialize({{"alpha", Q->from_int(5)}}) == Q->from_int(5));
    }
    SUBCASE("pole detection") {
        Scalar x = F->one() / (F->from_int(2) * alpha - 1);
        CHECK_THROWS_AS(x.specialize({{"alpha", Q->from_rat(Rat(1, 2))}}), PoleAtSpecialization);
    }
    SUBCASE("missing assignment") {
        CHECK_THROWS_AS(alpha.specialize({}), InvalidParameter);
    }
    SUBCASE("substitution is a ring homomorphism away from poles") {
        std::mt19937 rng(41);
        int done = 0;
        while (done < 20) {
            Scalar x = test::random_scalar(rng, F);
            Scalar y = test::random_scalar(rng, F);
            std::map<std::string, Scalar> at{{"alpha", Q->from_rat(test::random_rat(rng))}};
            try {
                Scalar sx = x.specialize(at), sy = y.specialize(at);
                CHECK((x + y).specialize(at) == sx + sy);
                CHECK((x * y).specialize(at) == sx * sy);
                ++done;
            } catch (const PoleAtSpecialization&) {
                continue;  // resample
            }
        }
    }
    SUBCASE("prime-characteristic targets") {
        FieldPtr F7 = Field::prime(7);
        CHECK(gamma.specialize({{"alpha", F7->from_int(3)}}) ==
              F7->from_int(3) / (F7->from_int(8) * F7->from_int(5)));
    }
}

TEST_CASE("char_constraints") {
    FieldPtr Q = Field::rationals();
    SUBCASE("rational input: primes dividing the numerator") {
        auto cc = char_constraints(Q->from_rat(Rat(-2, 3)));
        CHECK(cc.evidence == 2);
        CHECK(cc.primes == std::vector<Int>{Int(2)});
        auto cc3 = char_constraints(Q->from_rat(Rat(-3)));
        CHECK(cc3.primes == std::vector<Int>{Int(3)});
    }
    SUBCASE("quadratic input squares both sides") {
        FieldPtr K = Field::quadratic(Q, Rat(97));
        Scalar x = K->from_parts(Q->from_rat(Rat(-131, 192)), Q->from_rat(Rat(13, 192)));
        auto cc = char_constraints(x);
        CHECK(cc.evidence == 768);
        REQUIRE(cc.factorization.size() == 2);
        CHECK(cc.factorization[0] == std::make_pair(Int(2), 8u));
        CHECK(cc.factorization[1] == std::make_pair(Int(3), 1u));
        CHECK(cc.primes == std::vector<Int>{Int(2), Int(3)});
    }
    SUBCASE("quadratic input with zero irrational part") {
        FieldPtr K = Field::quadratic(Q, Rat(5));
        auto cc = char_constraints(K->from_rat(Rat(10, 3)));
        CHECK(cc.evidence == 10);
        CHECK(cc.primes == std::vector<Int>{Int(2), Int(5)});
    }
    SUBCASE("zero input vanishes everywhere") {
        CHECK_THROWS_AS(char_constraints(Q->zero()), ZeroInput);
    }
    SUBCASE("function-field input is rejected") {
        FieldPtr F = Field::function(Q, {"alpha"});
        CHECK_THROWS_AS(char_constraints(F->variable("alpha")), InvalidParameter);
    }
}

TEST_CASE("errors") {
    FieldPtr Q = Field::rationals();
    FieldPtr F7 = Field::prime(7);
    CHECK_THROWS_AS(Q->one() / Q->zero(), DivisionByZero);
    CHECK_THROWS_AS(Q->zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(Q->one() + F7->one(), DescriptorMismatch);
    CHECK_THROWS_AS(F7->from_rat(Rat(1, 7)), DivisionByZero);
    CHECK_THROWS_AS(Field::rationals()->variable("alpha"), UnknownVariable);
}

TEST_CASE("powers, including negative exponents") {
    FieldPtr F = Field::function(Field::rationals(), {"alpha"});
    Scalar alpha = F->variable("alpha");
    CHECK(alpha.pow(0) == F->one());
    CHECK(alpha.pow(3) == alpha * alpha * alpha);
    CHECK(alpha.pow(-2) == F->one() / (alpha * alpha));
}
