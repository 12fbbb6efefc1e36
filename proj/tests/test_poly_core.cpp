#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thomschur/errors.hpp"
#include "thomschur/matrix.hpp"
#include "thomschur/mpoly.hpp"
#include "thomschur/schur.hpp"

using namespace thomschur;

namespace {

MPoly v(const std::string& name) { return MPoly::variable(var(name)); }

MPoly random_poly(std::mt19937& rng, int max_terms = 4)
{
    static const std::vector<std::string> names = {"x1", "x2", "b1", "y1"};
    MPoly out;
    int terms = std::uniform_int_distribution<int>(0, max_terms)(rng);
    for (int t = 0; t < terms; ++t) {
        MPoly m(std::uniform_int_distribution<int>(-3, 3)(rng));
        int deg = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int d = 0; d < deg; ++d)
            m = m * v(names[std::uniform_int_distribution<std::size_t>(
                0, names.size() - 1)(rng)]);
        out += m;
    }
    return out;
}

MPoly naive_det(const std::vector<std::vector<MPoly>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return MPoly(1);
    if (n == 1)
        return m[0][0];
    MPoly out;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<MPoly>> minor;
        for (std::size_t row = 1; row < n; ++row) {
            std::vector<MPoly> line;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col)
                    line.push_back(m[row][c]);
            minor.push_back(std::move(line));
        }
        MPoly term = m[0][col] * naive_det(minor);
        out = col % 2 == 0 ? out + term : out - term;
    }
    return out;
}

} // namespace

TEST_CASE("basic polynomial arithmetic")
{
    MPoly x1 = v("x1"), x2 = v("x2");
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

    MPoly p = x1 * x2 + MPoly(7);
    CHECK(p + MPoly(0) == p);

    // letters x-2x and x-3x multiply to 2x^2
    MPoly x = v("x");
    CHECK((x - x * Int(2)) * (x - x * Int(3)) == x * x * Int(2));

    CHECK((p - p).is_zero());
    CHECK(MPoly(0).str() == "0");
    CHECK(x1.pow(3) == x1 * x1 * x1);
    CHECK(x1.pow(0) == MPoly(1));
}

TEST_CASE("coefficient extraction")
{
    MPoly x1 = v("x1"), b1 = v("b1");
    MPoly p = x1 * x1 * b1 * Int(3) - b1;
    Monomial m = Monomial::variable(var("x1"), 2) * Monomial::variable(var("b1"));
    CHECK(p.coeff(m) == 3);
    CHECK(p.coeff(Monomial::variable(var("b1"))) == -1);
    CHECK(MPoly(0).coeff(m) == 0);

    // coefficient of b2^1 (b-degree profile (0,1)) in (x1+x2-b1)(x1+x2-b2)
    Alphabet a({Letter(v("x1") + v("x2"))});
    MPoly r = resultant(a, standard_alphabet("B2"));
    MPoly partial = r.coeff_partial(Monomial::variable(var("b2")));
    CHECK(partial == -(v("x1") + v("x2") - v("b1")));
}

TEST_CASE("exact division")
{
    MPoly x1 = v("x1"), x2 = v("x2");
    MPoly prod = (x1 - x2) * (x1 + x2 * Int(2));
    CHECK(prod.divide_exact(x1 - x2) == x1 + x2 * Int(2));
    CHECK_THROWS_AS(prod.divide_exact(x1 + x2), DivisionFailed);
    CHECK_THROWS_AS(x1.divide_exact(MPoly(0)), DivisionFailed);
}

TEST_CASE("determinants")
{
    MPoly p = v("x1") * v("x2") + MPoly(1);
    CHECK(det_fraction_free({{p}}) == p);

    std::vector<std::vector<MPoly>> eye(4, std::vector<MPoly>(4, MPoly(0)));
    for (int i = 0; i < 4; ++i)
        eye[i][i] = MPoly(1);
    CHECK(det_fraction_free(eye) == MPoly(1));

    std::mt19937 rng(7u);
    for (int order = 2; order <= 6; ++order)
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::vector<MPoly>> m(
                static_cast<std::size_t>(order),
                std::vector<MPoly>(static_cast<std::size_t>(order)));
            for (auto& row : m)
                for (auto& e : row)
                    e = MPoly(std::uniform_int_distribution<int>(-5, 5)(rng));
            CHECK(det_fraction_free(m) == naive_det(m));
        }

    // symbolic entries through the Bareiss path (order 6)
    std::mt19937 rng2(8u);
    std::vector<std::vector<MPoly>> m(6, std::vector<MPoly>(6));
    for (auto& row : m)
        for (auto& e : row)
            e = random_poly(rng2, 2);
    CHECK(det_fraction_free(m) == naive_det(m));
}

TEST_CASE("rational linear solve")
{
    RatMatrix eye(3, 3);
    for (int i = 0; i < 3; ++i)
        eye.at(i, i) = 1;
    auto sol = solve_rational_system(eye, {Rat(1), Rat(0), Rat(0)});
    CHECK(sol.kernel_dim == 0);
    CHECK(sol.solution == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});

    RatMatrix wide(1, 2);
    wide.at(0, 0) = 1;
    wide.at(0, 1) = 1;
    auto under = solve_rational_system(wide, {Rat(2)});
    CHECK(under.kernel_dim == 1);
    CHECK(under.solution[0] + under.solution[1] == Rat(2));

    RatMatrix bad(2, 1);
    bad.at(0, 0) = 1;
    bad.at(1, 0) = 1;
    CHECK_THROWS_AS(solve_rational_system(bad, {Rat(1), Rat(2)}), InconsistentSystem);

    std::mt19937 rng(11u);
    for (int trial = 0; trial < 20; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        int m = std::uniform_int_distribution<int>(n, 6)(rng);
        RatMatrix A(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                A.at(i, j) = Rat(std::uniform_int_distribution<int>(-4, 4)(rng));
        std::vector<Rat> x(static_cast<std::size_t>(n));
        for (auto& xi : x)
            xi = Rat(std::uniform_int_distribution<int>(-3, 3)(rng));
        std::vector<Rat> rhs(static_cast<std::size_t>(m), Rat(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                rhs[static_cast<std::size_t>(i)] +=
                    A.at(i, j) * x[static_cast<std::size_t>(j)];
        auto s = solve_rational_system(A, rhs);
        // returned solution reproduces rhs exactly
        for (int i = 0; i < m; ++i) {
            Rat acc(0);
            for (int j = 0; j < n; ++j)
                acc += A.at(i, j) * s.solution[static_cast<std::size_t>(j)];
            CHECK(acc == rhs[static_cast<std::size_t>(i)]);
        }
        CHECK(s.kernel_dim == n - rational_rank(A));
    }
}

TEST_CASE("ring axioms on random samples")
{
    std::mt19937 rng(13u);
    for (int trial = 0; trial < 30; ++trial) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("monomial order is graded lexicographic")
{
    MonoLess less;
    Monomial x = Monomial::variable(var("x"));
    Monomial x1 = Monomial::variable(var("x1"));
    Monomial b1 = Monomial::variable(var("b1"));
    CHECK(less(x, x * x));          // degree first
    CHECK(less(b1, x));             // earlier variable is larger at equal degree
    CHECK(less(x1, x));
    CHECK(less(b1 * b1, x * b1));
    CHECK(!less(x, x));
}
