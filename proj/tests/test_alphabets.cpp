#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thomschur/alphabet.hpp"
#include "thomschur/errors.hpp"

using namespace thomschur;

TEST_CASE("letters are atomic linear forms")
{
    Letter two_x = parse_letter("2x");
    CHECK(two_x.form() == MPoly::variable(var("x")) * Int(2));
    CHECK(parse_letter("x1+x2").form()
          == MPoly::variable(var("x1")) + MPoly::variable(var("x2")));
    CHECK(parse_letter("-3").form() == MPoly(-3));
    CHECK(parse_letter("[2x]") == two_x);

    // quadratic forms are not letters
    MPoly q = MPoly::variable(var("x1")) * MPoly::variable(var("x2"));
    CHECK_THROWS_AS(Letter{q}, UnsupportedProduct);
}

TEST_CASE("multiset semantics")
{
    Alphabet x({Letter::variable("x")});
    Alphabet two = x + x;
    CHECK(two.size() == 2);
    CHECK(two.letters()[0] == two.letters()[1]);
    CHECK((x + Alphabet()) == x);

    Alphabet a = standard_alphabet("B2");
    Alphabet b = standard_alphabet("X2");
    CHECK((a + b).size() == a.size() + b.size());
}

TEST_CASE("named alphabets")
{
    Alphabet b3 = standard_alphabet("B3");
    REQUIRE(b3.size() == 3);
    // canonical order lists the largest monomial first
    CHECK(b3.letters()[0] == Letter::variable("b3"));
    CHECK(b3.letters()[2] == Letter::variable("b1"));

    Alphabet x2 = standard_alphabet("X2");
    CHECK(x2.size() == 2);
    CHECK(x2.letters()[0] == Letter::variable("x2"));
    CHECK(x2.letters()[1] == Letter::variable("x1"));

    Alphabet d = standard_alphabet("D");
    Alphabet d_manual;
    d_manual.add(parse_letter("2x1"));
    d_manual.add(parse_letter("2x2"));
    d_manual.add(parse_letter("x1+x2"));
    CHECK(d == d_manual);

    Alphabet e = standard_alphabet("E");
    Alphabet e_manual;
    e_manual.add(parse_letter("2x1"));
    e_manual.add(parse_letter("2x2"));
    CHECK(e == e_manual);

    Alphabet int2 = standard_alphabet("int:2");
    REQUIRE(int2.size() == 2);
    CHECK(int2.letters()[0] == Letter::constant(1));
    CHECK(int2.letters()[1] == Letter::constant(1));

    CHECK(standard_alphabet("B0").empty());
    CHECK_THROWS_AS(standard_alphabet("Q3"), UnknownSpec);
}

TEST_CASE("scaling")
{
    Alphabet boxed;
    boxed.add(Letter::constant(2));
    boxed.add(Letter::constant(3));
    Alphabet scaled = boxed.scaled(Letter::variable("x"));
    Alphabet expect;
    expect.add(parse_letter("2x"));
    expect.add(parse_letter("3x"));
    CHECK(scaled == expect);

    CHECK(boxed.scaled(Letter::constant(1)) == boxed);

    // scaling distributes over union
    Alphabet four;
    four.add(Letter::constant(4));
    Letter x = Letter::variable("x");
    CHECK((boxed + four).scaled(x) == boxed.scaled(x) + four.scaled(x));

    // a constant alphabet scaled by a composite letter stays linear
    Alphabet comp = boxed.scaled(parse_letter("x1+x2"));
    Alphabet comp_expect;
    comp_expect.add(parse_letter("2x1+2x2"));
    comp_expect.add(parse_letter("3x1+3x2"));
    CHECK(comp == comp_expect);

    // but scaling a variable letter by one is quadratic and rejected
    CHECK_THROWS_AS(Alphabet({Letter::variable("y1")}).scaled(parse_letter("x1+x2")),
                    UnsupportedProduct);
}

TEST_CASE("negation")
{
    Alphabet b2 = standard_alphabet("B2");
    Alphabet neg = b2.negated();
    CHECK(neg.size() == 2);
    for (const auto& l : neg.letters())
        CHECK((-l.form() == Letter::variable("b1").form()
               || -l.form() == Letter::variable("b2").form()));
    CHECK(neg.negated() == b2);
}

TEST_CASE("virtual alphabets keep both sides verbatim")
{
    Alphabet x({Letter::variable("x")});
    VirtualAlphabet v(x + x, x);
    CHECK(v.plus.size() == 2); // no cancellation at construction
    CHECK(v.minus.size() == 1);
    CHECK(v.negated() == VirtualAlphabet(x, x + x));
}

TEST_CASE("virtual alphabet parsing")
{
    VirtualAlphabet v = parse_virtual_alphabet("X2 - [2x1] - [2x2] - B1");
    CHECK(v.plus == standard_alphabet("X2"));
    Alphabet minus;
    minus.add(parse_letter("2x1"));
    minus.add(parse_letter("2x2"));
    minus.add(Letter::variable("b1"));
    CHECK(v.minus == minus);

    VirtualAlphabet w = parse_virtual_alphabet("x - [2x]");
    CHECK(w.plus == Alphabet({Letter::variable("x")}));
    CHECK(w.minus == Alphabet({parse_letter("2x")}));

    VirtualAlphabet u = parse_virtual_alphabet("int:2 + [3]");
    CHECK(u.plus.size() == 3);
    CHECK(u.minus.empty());

    CHECK(parse_virtual_alphabet("0").plus.empty());
    CHECK_THROWS_AS(parse_virtual_alphabet("X2 - - B1"), ParseError);
}
