#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thomschur/errors.hpp"
#include "thomschur/thom.hpp"

using namespace thomschur;

namespace {

MPoly v(const std::string& name) { return MPoly::variable(var(name)); }

SchurExpansion single_term(std::vector<int> parts, Int c)
{
    SchurExpansion e;
    e.add_term(Partition(std::move(parts)), std::move(c));
    return e;
}

} // namespace

TEST_CASE("singularity identifiers")
{
    CHECK(SingularityId::A(3, 2).codim() == 6);
    CHECK(SingularityId::A(1, 5).codim() == 5);
    CHECK(SingularityId::I22(2).codim() == 7);
    CHECK(SingularityId::III22(2).codim() == 6);
    CHECK(SingularityId::parse("A4", 1).codim() == 4);
    CHECK(SingularityId::parse("I22", 3).family == Family::I22);
    CHECK(SingularityId::III22(3).str() == "III22(r=3)");
    CHECK_THROWS_AS(SingularityId::parse("B2", 1), UnsupportedSingularity);
}

TEST_CASE("coefficient tables")
{
    CoeffTable d = d_table(7);
    CHECK(d.get(1, 1) == 1);
    CHECK(d.get(7, 1) == 127);
    CHECK(d.get(7, 2) == 119);
    CHECK(d.get(7, 3) == 91);
    CHECK(d.get(7, 4) == 35);
    CHECK(d.get(6, 4) == 0); // outside the support
    CHECK(d.get(3, 0) == 0);

    CoeffTable e = e_table(8);
    CHECK(e.get(2, 0) == 5);
    CHECK(e.get(8, 0) == 9329);
    CHECK(e.get(8, 1) == 4402);
    CHECK(e.get(8, 2) == 1904);
    CHECK(e.get(8, 3) == 526);
    CHECK(e.get(7, 3) == 0);

    // Pascal-type recursions inside the support
    for (int i = 2; i <= 6; ++i)
        for (int j = 2; j <= (i + 2) / 2; ++j)
            CHECK(d.get(i + 1, j) == d.get(i, j - 1) + d.get(i, j));
    for (int i = 2; i <= 7; ++i)
        for (int j = 1; j <= (i + 1) / 2 - 1; ++j)
            CHECK(e.get(i + 1, j) == e.get(i, j - 1) + e.get(i, j));
}

TEST_CASE("closed-form examples")
{
    // T^{I22} at r = 1 and 2
    SchurExpansion i22_1 = single_term({2, 2}, 1);
    CHECK(thom_I22(1) == i22_1);
    SchurExpansion i22_2 = single_term({1, 3, 3}, 1) + single_term({3, 4}, 3);
    CHECK(thom_I22(2) == i22_2);

    // two-row parts
    CHECK(p_r_o(1) == single_term({2, 2}, 1));
    CHECK(p_r_o(6) == single_term({7, 12}, 63) + single_term({8, 11}, 56)
                          + single_term({9, 10}, 35));

    // F^(2)_r = sum_j 2^j S_{r-j, r+j}
    for (int r = 1; r <= 4; ++r) {
        SchurExpansion want;
        Int c = 1;
        for (int j = 0; j <= r; ++j) {
            want.add_term(Partition({r - j, r + j}), c);
            c *= 2;
        }
        CHECK(f_i_r(2, r) == want);
    }
    CHECK(f_i_r(1, 3) == single_term({3}, 1));

    // correction term two-row parts
    CHECK(h_r(1).empty());
    CHECK(h_r_o(5) == single_term({6, 9}, 300) + single_term({7, 8}, 113));

    CHECK(thom_III22(2) == single_term({3, 3}, 1));
    CHECK(thom_A(4, 1) == f_i_r(4, 1) + single_term({2, 2}, 10));
    CHECK(thom_A(3, 2) == f_i_r(3, 2) + h_r(2));
    CHECK(thom_polynomial(SingularityId::I22(3)) == thom_I22(3));

    CHECK_THROWS_AS(thom_A(4, 2), UnsupportedSingularity);
    CHECK_THROWS_AS(thom_A(5, 1), UnsupportedSingularity);
    CHECK_THROWS_AS(thom_polynomial(SingularityId::III22(1)), UnsupportedSingularity);
}

TEST_CASE("two-row recursion and its iterated form")
{
    for (int r = 2; r <= 7; ++r)
        CHECK(thom_I22(r) == p_r_o(r) + thom_I22(r - 1).tau_shift());
    for (int r = 2; r <= 7; ++r)
        CHECK(h_r(r) == h_r_o(r) + h_r(r - 1).tau_shift());

    for (int r = 1; r <= 6; ++r) {
        SchurExpansion acc;
        for (int i = 0; i < r; ++i) {
            SchurExpansion part = p_r_o(r - i);
            for (int k = 0; k < i; ++k)
                part = part.tau_shift();
            acc = acc + part;
        }
        CHECK(acc == thom_I22(r));
    }
}

TEST_CASE("two-row part evaluated on the plain rank-2 alphabet")
{
    // P°_r(X2) = (x1 x2)^{r+1} S_{r-1}(D)
    VirtualAlphabet x2(standard_alphabet("X2"), Alphabet());
    VirtualAlphabet dplus(standard_alphabet("D"), Alphabet());
    MPoly x1x2 = v("x1") * v("x2");
    for (int r = 1; r <= 5; ++r) {
        MPoly want = complete_function(r - 1, dplus);
        for (int k = 0; k <= r; ++k)
            want = want * x1x2;
        CHECK(p_r_o(r).evaluate(x2) == want);
    }
}

TEST_CASE("correction term support shape")
{
    for (int r = 2; r <= 7; ++r) {
        SchurExpansion h = h_r(r);
        CHECK(h.homogeneous());
        CHECK(h.common_weight() == 3 * r);
        for (const auto& [p, c] : h.terms()) {
            CHECK(p.length() <= 3);
            CHECK(c > 0);
        }
    }
}

TEST_CASE("restriction equation shapes")
{
    auto i22 = restriction_equations(SingularityId::I22(3));
    REQUIRE(i22.size() == 5);
    CHECK(i22[0].label == "A0");
    CHECK(i22[3].label == "III22");
    CHECK(i22[4].label == "I22 normalization");
    for (std::size_t k = 0; k + 1 < i22.size(); ++k)
        CHECK(i22[k].rhs.is_zero());
    CHECK(!i22[4].rhs.is_zero());

    auto a1 = restriction_equations(SingularityId::A(1, 1));
    REQUIRE(a1.size() == 2);
    CHECK(a1[1].rhs == -v("x")); // resultant(x, [2x])

    auto iii2 = restriction_equations(SingularityId::III22(2));
    auto iii3 = restriction_equations(SingularityId::III22(3));
    auto has = [](const std::vector<RestrictionEquation>& eqs, const std::string& l) {
        for (const auto& e : eqs)
            if (e.label == l)
                return true;
        return false;
    };
    CHECK(has(iii2, "A3"));
    CHECK(!has(iii3, "A3"));

    CHECK_THROWS_AS(restriction_equations(SingularityId::A(4, 2)),
                    UnsupportedSingularity);
}

TEST_CASE("candidate enumeration")
{
    PartitionFilter f;
    f.max_length = 3;
    f.contains = Partition({3, 3});
    auto c7 = candidate_partitions(7, f);
    REQUIRE(c7.size() == 2);
    CHECK(c7[0] == Partition({1, 3, 3}));
    CHECK(c7[1] == Partition({3, 4}));

    CHECK(candidate_partitions(0, PartitionFilter()).size() == 1);

    f.contains = Partition({4, 4});
    CHECK(candidate_partitions(10, f).size() == 4);

    CHECK(default_candidates(SingularityId::I22(2)) == c7);
}

TEST_CASE("solver reproduces the closed forms")
{
    auto a2 = solve_singularity(SingularityId::A(2, 1), CandidateSet::All);
    CHECK(a2.kernel_dim == 0);
    CHECK(a2.expansion == single_term({1, 1}, 1) + single_term({2}, 2));

    auto i22 = solve_singularity(SingularityId::I22(2));
    CHECK(i22.kernel_dim == 0);
    CHECK(i22.used_heuristic_candidates);
    CHECK(i22.expansion == thom_I22(2));

    auto iii = solve_singularity(SingularityId::III22(3));
    CHECK(iii.expansion == thom_III22(3));
}

TEST_CASE("solver error paths")
{
    // only the trivially satisfied vanishing condition: everything in the
    // kernel
    RestrictionSystem sys;
    SingularityId target = SingularityId::I22(2);
    sys.codim = target.codim();
    sys.r = target.r;
    sys.candidates = default_candidates(target);
    sys.equations = {restriction_equations(target)[0]};
    CHECK_THROWS_AS(solve_restriction_system(sys), Underdetermined);
    try {
        solve_restriction_system(sys);
    } catch (const Underdetermined& u) {
        CHECK(u.kernel_dim == 2);
    }

    // contradictory right-hand sides
    RestrictionSystem bad;
    bad.codim = 1;
    bad.r = 1;
    bad.candidates = {Partition({1})};
    VirtualAlphabet x(Alphabet({Letter::variable("x")}), Alphabet());
    bad.equations = {{"zero", x, MPoly(0)}, {"one", x, v("x")}};
    CHECK_THROWS_AS(solve_restriction_system(bad), InconsistentSystem);

    RestrictionSystem empty;
    empty.codim = 1;
    empty.r = 1;
    CHECK_THROWS_AS(solve_restriction_system(empty), Error);
}

TEST_CASE("verification reports")
{
    for (int r = 1; r <= 3; ++r) {
        SingularityId t = SingularityId::I22(r);
        CHECK(verify(thom_I22(r), t).all_pass());
    }
    CHECK(verify(thom_A(3, 3), SingularityId::A(3, 3)).all_pass());

    // the first approximation alone fails exactly the extra vanishing of A4
    Report rep = verify(f_i_r(4, 1), SingularityId::A(4, 1));
    CHECK(!rep.all_pass());
    MPoly x1 = v("x1"), x2 = v("x2");
    MPoly twisted = x1 * x2 * (x1 - x2 * Int(2)) * (x2 - x1 * Int(2));
    bool found = false;
    for (const auto& e : rep.entries) {
        if (e.label == "I22") {
            found = true;
            CHECK(!e.pass);
            CHECK(e.residual == -(twisted * Int(10)));
        } else {
            CHECK(e.pass);
        }
    }
    CHECK(found);
    CHECK(rep.str().find("FAIL") != std::string::npos);
}

TEST_CASE("hook recursion check records the observed failures")
{
    for (int i = 1; i <= 3; ++i)
        CHECK(!porteous_recursion_check(i).all_pass());
}

TEST_CASE("appendix quantities")
{
    AppendixUV a2 = appendix_UV(2);
    CHECK(a2.u_at_0 == MPoly(5));
    CHECK(a2.v_at_0 == MPoly(5));
    CHECK(a2.full_check.all_pass());

    AppendixUV a3 = appendix_UV(3);
    CHECK(a3.u_at_0 == (v("x1") + v("x2")) * Int(9));
    CHECK(a3.full_check.all_pass());

    AppendixUV a4 = appendix_UV(4);
    MPoly x1 = v("x1"), x2 = v("x2");
    CHECK(a4.u_at_0 == x1 * x1 * Int(27) + x1 * x2 * Int(9) + x2 * x2 * Int(27));
    CHECK(a4.full_check.all_pass());
}
