#include <doctest.h>

#include "pmds/field.hpp"

using namespace pmds;

TEST_CASE("prime field construction and basic arithmetic") {
    auto f7 = Field::prime(7);
    CHECK(f7->order() == 7);
    CHECK(f7->kind() == FieldKind::Prime);
    CHECK(f7->add(3, 5) == 1);
    CHECK(f7->mul(3, 5) == 1);
    CHECK(f7->inv(3) == 5);
    CHECK(f7->sub(2, 5) == 4);
    CHECK(f7->neg(3) == 4);

    auto f3 = Field::prime(3);
    CHECK(f3->mul(2, 2) == 1);

    CHECK_THROWS_AS(Field::prime(6), InvalidArgumentError);
    CHECK_THROWS_AS(Field::prime(1), InvalidArgumentError);
}

TEST_CASE("gf(4) matches the polynomial-basis encoding") {
    // alpha is encoded as 2, alpha+1 as 3.
    auto f4 = Field::binary_ext(2);
    CHECK(f4->order() == 4);
    CHECK(f4->mul(2, 2) == 3);   // alpha * alpha = alpha + 1
    CHECK(f4->inv(2) == 3);      // alpha * (alpha+1) = 1
    CHECK(f4->add(2, 3) == 1);
    CHECK(f4->mul(3, 3) == 2);
}

TEST_CASE("division by zero is an error") {
    auto f5 = Field::prime(5);
    CHECK_THROWS_AS(f5->inv(0), DivisionByZeroError);
    CHECK_THROWS_AS(f5->div(3, 0), DivisionByZeroError);
}

TEST_CASE("make() rejects invalid specs") {
    CHECK_THROWS_AS(Field::make(FieldKind::Prime, 6, 1), InvalidArgumentError);
    CHECK_THROWS_AS(Field::make(FieldKind::BinaryExt, 3, 2), InvalidArgumentError);
    // x^2 + 1 = (x+1)^2 is reducible over GF(2)
    CHECK_THROWS_AS(Field::binary_ext(2, 0b101), InvalidArgumentError);
    CHECK_NOTHROW(Field::make(FieldKind::BinaryExt, 2, 2, 0b111));
}

TEST_CASE("elements() is the canonical order") {
    auto f3 = Field::prime(3);
    CHECK(f3->elements() == std::vector<std::uint32_t>{0, 1, 2});
    auto f4 = Field::binary_ext(2);
    CHECK(f4->elements() == std::vector<std::uint32_t>{0, 1, 2, 3});
    auto f2 = Field::prime(2);
    CHECK(f2->elements() == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("default modulus table is irreducible for all degrees") {
    for (unsigned h = 2; h <= 16; ++h) {
        auto f = Field::binary_ext(h);
        CHECK(f->order() == (1u << h));
        // Spot-check the field axioms via a few inverses.
        for (std::uint32_t a : {1u, 2u, f->order() - 1}) {
            CHECK(f->mul(a, f->inv(a)) == 1);
        }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    std::vector<FieldPtr> fields = {
        Field::prime(2),     Field::prime(3),      Field::prime(5),
        Field::prime(7),     Field::prime(11),     Field::prime(13),
        Field::binary_ext(2), Field::binary_ext(3), Field::binary_ext(4),
    };
    for (const auto& f : fields) {
        const std::uint32_t q = f->order();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius: squaring is additive in characteristic 2") {
    for (unsigned h = 2; h <= 4; ++h) {
        auto f = Field::binary_ext(h);
        for (std::uint32_t a = 0; a < f->order(); ++a) {
            for (std::uint32_t b = 0; b < f->order(); ++b) {
                const std::uint32_t lhs = f->mul(f->add(a, b), f->add(a, b));
                const std::uint32_t rhs = f->add(f->mul(a, a), f->mul(b, b));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("field literals parse and round-trip") {
    CHECK(Field::parse("gf(7)")->order() == 7);
    CHECK(Field::parse("gf(7)")->literal() == "gf(7)");
    auto f8 = Field::parse("gf(2^3)");
    CHECK(f8->order() == 8);
    CHECK(f8->literal() == "gf(2^3)");
    auto f8x = Field::parse("gf(2^3;0b1011)");
    CHECK(f8x->order() == 8);
    CHECK(f8x->modulus_bits() == 0b1011);
    // 0b1011 is the default for degree 3, so the canonical literal is short.
    CHECK(f8x->literal() == "gf(2^3)");
    // x^3 + x^2 + 1, the other irreducible cubic.
    auto f8y = Field::parse("gf(2^3;0b1101)");
    CHECK(f8y->literal() == "gf(2^3;0b1101)");
    CHECK(Field::parse(f8y->literal())->same_as(*f8y));

    CHECK_THROWS_AS(Field::parse("gf()"), ParseError);
    CHECK_THROWS_AS(Field::parse("gf(8)"), InvalidArgumentError);  // 8 is not prime
    CHECK_THROWS_AS(Field::parse("7"), ParseError);
    CHECK_THROWS_AS(Field::parse("gf(3^2)"), InvalidArgumentError);
}

TEST_CASE("elements from different fields never combine") {
    Elem a(1, Field::prime(3));
    Elem b(1, Field::prime(5));
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a * b, FieldMismatchError);
    Elem c(2, Field::prime(3));
    CHECK((a + c).value() == 0);
    CHECK((a - c).value() == 2);
    CHECK((-c).value() == 1);
}
