#include "thomschur/thom.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "thomschur/errors.hpp"
#include "thomschur/matrix.hpp"

namespace thomschur {

int SingularityId::codim() const
{
    switch (family) {
    case Family::A:
        return r * i;
    case Family::I22:
        return 3 * r + 1;
    case Family::III22:
        return 2 * r + 2;
    }
    return 0;
}

std::string SingularityId::str() const
{
    switch (family) {
    case Family::A:
        return "A" + std::to_string(i) + "(r=" + std::to_string(r) + ")";
    case Family::I22:
        return "I22(r=" + std::to_string(r) + ")";
    case Family::III22:
        return "III22(r=" + std::to_string(r) + ")";
    }
    return "?";
}

SingularityId SingularityId::parse(const std::string& name, int r)
{
    if (name == "I22")
        return I22(r);
    if (name == "III22")
        return III22(r);
    if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '9')
        return A(name[1] - '0', r);
    throw UnsupportedSingularity("unknown singularity: " + name);
}

// ---- coefficient tables ----

namespace {

// coefficients of the power series P(z)/Q(z), Q(0) = 1
std::vector<Int> series_coeffs(const std::vector<Int>& P, const std::vector<Int>& Q, int n)
{
    std::vector<Int> c(static_cast<std::size_t>(n), Int(0));
    for (int k = 0; k < n; ++k) {
        Int v = k < static_cast<int>(P.size()) ? P[static_cast<std::size_t>(k)] : Int(0);
        for (int j = 1; j <= k && j < static_cast<int>(Q.size()); ++j)
            v -= Q[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = v; // Q[0] == 1
    }
    return c;
}

// number of stored columns in row i
int d_row_support(int i) { return (i + 1) / 2; }       // columns j = 1..support
int e_row_support(int i) { return i / 2 - 1; }         // columns j = 0..support

} // namespace

CoeffTable::CoeffTable(Kind kind, int rows) : kind_(kind), rows_(rows)
{
    if (kind == Kind::d) {
        if (rows < 1)
            throw Error("d table needs at least one row");
        // first column: 1/((1-z)(1-2z)) = 1 + 3z + 7z^2 + ...
        std::vector<Int> col = series_coeffs({1}, {1, -3, 2}, rows);
        data_.assign(static_cast<std::size_t>(rows), {});
        for (int i = 1; i <= rows; ++i) {
            auto& row = data_[static_cast<std::size_t>(i - 1)];
            row.assign(static_cast<std::size_t>(d_row_support(i)), Int(0));
            row[0] = col[static_cast<std::size_t>(i - 1)];
            for (int j = 2; j <= d_row_support(i); ++j)
                row[static_cast<std::size_t>(j - 1)] = get(i - 1, j - 1) + get(i - 1, j);
        }
    } else {
        if (rows < 2)
            throw Error("e table needs at least two rows");
        // first column: (5-6z)/((1-z)(1-2z)(1-3z)) = 5 + 24z + 89z^2 + ...
        std::vector<Int> col = series_coeffs({5, -6}, {1, -6, 11, -6}, rows - 1);
        data_.assign(static_cast<std::size_t>(rows - 1), {});
        for (int i = 2; i <= rows; ++i) {
            auto& row = data_[static_cast<std::size_t>(i - 2)];
            row.assign(static_cast<std::size_t>(e_row_support(i) + 1), Int(0));
            row[0] = col[static_cast<std::size_t>(i - 2)];
            for (int j = 1; j <= e_row_support(i); ++j)
                row[static_cast<std::size_t>(j)] = get(i - 1, j - 1) + get(i - 1, j);
        }
    }
}

Int CoeffTable::get(int i, int j) const
{
    int ri = i - first_row();
    int cj = j - first_col();
    if (ri < 0 || ri >= static_cast<int>(data_.size()) || cj < 0
        || cj >= static_cast<int>(data_[static_cast<std::size_t>(ri)].size()))
        return 0;
    return data_[static_cast<std::size_t>(ri)][static_cast<std::size_t>(cj)];
}

CoeffTable d_table(int rows) { return CoeffTable(CoeffTable::Kind::d, rows); }
CoeffTable e_table(int rows) { return CoeffTable(CoeffTable::Kind::e, rows); }

// ---- closed forms ----

SchurExpansion p_r_o(int r)
{
    if (r < 1)
        throw Error("r must be >= 1");
    CoeffTable d = d_table(r);
    SchurExpansion out;
    out.r = r;
    for (int j = 1; 2 * j <= r + 1; ++j)
        out.add_term(Partition({r + j, 2 * r + 1 - j}), d.get(r, j));
    return out;
}

SchurExpansion thom_I22(int r)
{
    if (r < 1)
        throw Error("r must be >= 1");
    CoeffTable d = d_table(r);
    SchurExpansion out;
    out.r = r;
    out.name = "I22";
    for (int k = 0; k <= r - 1; ++k)
        for (int j = 1; k + 2 * j <= r + 1; ++j)
            out.add_term(Partition({k, r + j, 2 * r - k - j + 1}), d.get(r - k, j));
    return out;
}

namespace {

Alphabet boxed_integers(int from, int to)
{
    std::vector<Letter> letters;
    for (int v = from; v <= to; ++v)
        letters.push_back(Letter::constant(v));
    return Alphabet(std::move(letters));
}

} // namespace

SchurExpansion f_i_r(int i, int r)
{
    if (i < 1 || r < 1)
        throw Error("indices must be >= 1");
    SchurExpansion out;
    out.r = r;
    out.name = "F" + std::to_string(i);
    if (i == 1) {
        out.add_term(Partition({r}), 1);
        return out;
    }
    const int m = i - 1;
    VirtualAlphabet coeff_alphabet(boxed_integers(2, i), Alphabet());
    // partitions J = (j_1 <= ... <= j_m) inside the (m x r) box
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        MPoly c = schur(idx, coeff_alphabet);
        if (!c.is_zero()) {
            int weight = 0;
            for (int v : idx)
                weight += v;
            std::vector<int> seq;
            for (int p = m - 1; p >= 0; --p)
                seq.push_back(r - idx[static_cast<std::size_t>(p)]);
            seq.push_back(r + weight);
            if (auto s = straighten(seq)) {
                Int coeff = c.constant_value() * s->first;
                out.add_term(s->second, coeff);
            }
        }
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == r)
            --pos;
        if (pos < 0)
            break;
        int next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int p = pos; p < m; ++p)
            idx[static_cast<std::size_t>(p)] = next;
    }
    return out;
}

SchurExpansion h_r_o(int r)
{
    if (r < 2)
        throw Error("two-row correction needs r >= 2");
    CoeffTable e = e_table(r);
    SchurExpansion out;
    out.r = r;
    for (int j = 0; 2 * j <= r - 2; ++j)
        out.add_term(Partition({r + 1 + j, 2 * r - 1 - j}), e.get(r, j));
    return out;
}

SchurExpansion h_r(int r)
{
    if (r < 1)
        throw Error("r must be >= 1");
    SchurExpansion out;
    out.r = r;
    out.name = "H";
    if (r == 1)
        return out;
    CoeffTable e = e_table(r);
    for (int k = 0; k <= r - 2; ++k)
        for (int j = 0; k + 2 * j <= r - 2; ++j)
            out.add_term(Partition({k, r + j + 1, 2 * r - k - j - 1}), e.get(r - k, j));
    return out;
}

SchurExpansion thom_A(int i, int r)
{
    if (r < 1)
        throw Error("r must be >= 1");
    SchurExpansion out;
    switch (i) {
    case 1:
        out.add_term(Partition({r}), 1);
        break;
    case 2:
        out = f_i_r(2, r);
        break;
    case 3:
        out = f_i_r(3, r) + h_r(r);
        break;
    case 4:
        if (r != 1)
            throw UnsupportedSingularity(
                "closed form for A4 is only available at r = 1");
        out = f_i_r(4, 1);
        out.add_term(Partition({2, 2}), 10);
        break;
    default:
        throw UnsupportedSingularity("no closed form for A" + std::to_string(i));
    }
    out.r = r;
    out.name = "A" + std::to_string(i);
    return out;
}

SchurExpansion thom_III22(int r)
{
    if (r < 2)
        throw UnsupportedSingularity("III22 needs r >= 2");
    SchurExpansion out;
    out.r = r;
    out.name = "III22";
    out.add_term(Partition({r + 1, r + 1}), 1);
    return out;
}

SchurExpansion thom_polynomial(const SingularityId& target)
{
    switch (target.family) {
    case Family::A:
        return thom_A(target.i, target.r);
    case Family::I22:
        return thom_I22(target.r);
    case Family::III22:
        return thom_III22(target.r);
    }
    throw UnsupportedSingularity("unknown singularity");
}

// ---- restriction equations ----

namespace {

Alphabet single(const Letter& l) { return Alphabet({l}); }

Letter x_letter() { return Letter::variable("x"); }

Letter boxed_px(int p)
{
    return Letter(MPoly::variable(var("x")) * Int(p));
}

Alphabet b_alphabet(int n)
{
    if (n < 0)
        throw Error("negative alphabet size");
    return standard_alphabet("B" + std::to_string(n));
}

MPoly i22_euler(int r)
{
    // x1x2(x1-2x2)(x2-2x1) * prod_j (x1-bj)(x2-bj)(x1+x2-bj)
    MPoly x1 = MPoly::variable(var("x1"));
    MPoly x2 = MPoly::variable(var("x2"));
    MPoly out = x1 * x2 * (x1 - x2 * Int(2)) * (x2 - x1 * Int(2));
    Alphabet x2plus = standard_alphabet("X2") + single(parse_letter("x1+x2"));
    return out * resultant(x2plus, b_alphabet(r - 1));
}

} // namespace

std::vector<RestrictionEquation> restriction_equations(const SingularityId& target)
{
    const int r = target.r;
    if (r < 1)
        throw UnsupportedSingularity("r must be >= 1");
    std::vector<RestrictionEquation> eqs;
    Alphabet B1 = b_alphabet(r - 1);
    Alphabet X2 = standard_alphabet("X2");
    Alphabet D = standard_alphabet("D");
    auto vanish = [&](std::string label, VirtualAlphabet v) {
        eqs.push_back({std::move(label), std::move(v), MPoly(0)});
    };
    auto a_substitution = [&](int p) {
        // x - [(p+1)x] - B_{r-1}
        return VirtualAlphabet(single(x_letter()), single(boxed_px(p + 1)) + B1);
    };

    switch (target.family) {
    case Family::A: {
        const int i = target.i;
        if (i < 1 || i > 4 || (i == 4 && r != 1))
            throw UnsupportedSingularity("restriction system not available for "
                                         + target.str());
        vanish("A0", VirtualAlphabet(Alphabet(), B1));
        for (int p = 1; p < i; ++p)
            vanish("A" + std::to_string(p), a_substitution(p));
        if (i == 3 && r >= 2)
            vanish("III22", VirtualAlphabet(X2, D + b_alphabet(r - 2)));
        if (i == 4)
            vanish("I22", VirtualAlphabet(
                              X2, single(parse_letter("2x1")) + single(parse_letter("2x2"))));
        Alphabet lhs_plus = single(x_letter()) + boxed_integers(2, i).scaled(x_letter());
        Alphabet rhs_minus = B1 + single(boxed_px(i + 1));
        eqs.push_back({"A" + std::to_string(i) + " normalization", a_substitution(i),
                       resultant(lhs_plus, rhs_minus)});
        break;
    }
    case Family::I22: {
        vanish("A0", VirtualAlphabet(Alphabet(), B1));
        vanish("A1", a_substitution(1));
        vanish("A2", a_substitution(2));
        if (r >= 2)
            vanish("III22", VirtualAlphabet(X2, D + b_alphabet(r - 2)));
        VirtualAlphabet norm(X2, single(parse_letter("2x1")) + single(parse_letter("2x2"))
                                     + B1);
        eqs.push_back({"I22 normalization", std::move(norm), i22_euler(r)});
        break;
    }
    case Family::III22: {
        if (r < 2)
            throw UnsupportedSingularity("III22 needs r >= 2");
        vanish("A0", VirtualAlphabet(Alphabet(), B1));
        vanish("A1", a_substitution(1));
        vanish("A2", a_substitution(2));
        if (r == 2)
            vanish("A3", a_substitution(3)); // same codimension; only this r needs it
        Alphabet dmb = D + b_alphabet(r - 2);
        eqs.push_back({"III22 normalization", VirtualAlphabet(X2, dmb),
                       resultant(X2, dmb)});
        break;
    }
    }
    return eqs;
}

std::vector<Partition> candidate_partitions(int weight, const PartitionFilter& filter)
{
    return enumerate_partitions(weight, filter);
}

std::vector<Partition> default_candidates(const SingularityId& target)
{
    PartitionFilter f;
    switch (target.family) {
    case Family::A:
        f.max_length = target.i;
        break;
    case Family::I22:
        f.max_length = 3;
        f.contains = Partition({target.r + 1, target.r + 1});
        break;
    case Family::III22:
        f.max_length = 2;
        f.not_in_hook = std::make_pair(1, target.r);
        break;
    }
    return enumerate_partitions(target.codim(), f);
}

SchurExpansion solve_restriction_system(const RestrictionSystem& sys)
{
    if (sys.candidates.empty())
        throw Error("restriction system has no candidate partitions");
    for (const auto& p : sys.candidates)
        if (p.weight() != sys.codim)
            throw Error("candidate " + p.str() + " does not have weight "
                        + std::to_string(sys.codim));

    // one block of linear constraints per equation, one row per monomial
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (const auto& eq : sys.equations) {
        SeriesContext ctx(eq.substitution);
        std::vector<MPoly> evals;
        evals.reserve(sys.candidates.size());
        for (const auto& p : sys.candidates)
            evals.push_back(schur(p, ctx));
        std::map<Monomial, int, MonoLess> mono_index;
        for (const auto& e : evals)
            for (const auto& [m, c] : e.terms())
                mono_index.emplace(m, 0);
        for (const auto& [m, c] : eq.rhs.terms())
            mono_index.emplace(m, 0);
        int base = static_cast<int>(rows.size());
        int idx = 0;
        for (auto& [m, i] : mono_index)
            i = idx++;
        rows.resize(rows.size() + mono_index.size(),
                    std::vector<Rat>(sys.candidates.size(), Rat(0)));
        rhs.resize(rows.size(), Rat(0));
        for (std::size_t col = 0; col < evals.size(); ++col)
            for (const auto& [m, c] : evals[col].terms())
                rows[static_cast<std::size_t>(base + mono_index[m])][col] = Rat(c);
        for (const auto& [m, c] : eq.rhs.terms())
            rhs[static_cast<std::size_t>(base + mono_index[m])] = Rat(c);
    }

    RatMatrix A(static_cast<int>(rows.size()), static_cast<int>(sys.candidates.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        A.a[i] = rows[i];
    LinearSolution sol = solve_rational_system(A, rhs);
    if (sol.kernel_dim != 0)
        throw Underdetermined(sol.kernel_dim);

    SchurExpansion out;
    out.r = sys.r;
    for (std::size_t i = 0; i < sys.candidates.size(); ++i) {
        const Rat& c = sol.solution[i];
        if (c == 0)
            continue;
        if (denominator(c) != 1)
            throw NonIntegerCoefficients("solution coefficient " + c.str()
                                         + " is not an integer");
        out.add_term(sys.candidates[i], numerator(c));
    }
    return out;
}

SolveResult solve_singularity(const SingularityId& target, CandidateSet candidates)
{
    RestrictionSystem sys;
    sys.equations = restriction_equations(target);
    sys.codim = target.codim();
    sys.r = target.r;
    SolveResult out;
    if (candidates == CandidateSet::Default) {
        sys.candidates = default_candidates(target);
        out.used_heuristic_candidates = true;
        try {
            out.expansion = solve_restriction_system(sys);
            return out;
        } catch (const Underdetermined&) {
            // fall through to the unrestricted candidate set
        } catch (const InconsistentSystem&) {
        }
    }
    sys.candidates = enumerate_partitions(sys.codim);
    out.used_heuristic_candidates = false;
    out.expansion = solve_restriction_system(sys);
    return out;
}

// ---- verification ----

bool Report::all_pass() const
{
    for (const auto& e : entries)
        if (!e.pass)
            return false;
    return true;
}

std::string Report::to_json() const
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json o;
        o["equation_label"] = e.label;
        o["status"] = e.pass ? "PASS" : "FAIL";
        o["residual"] = e.residual.str();
        j.push_back(o);
    }
    return j.dump();
}

std::string Report::str() const
{
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.pass ? "PASS" : "FAIL") << "  " << e.label;
        if (!e.pass)
            os << "  residual: " << e.residual.str();
        os << "\n";
    }
    return os.str();
}

Report verify(const SchurExpansion& e, const SingularityId& target)
{
    Report rep;
    for (const auto& eq : restriction_equations(target)) {
        MPoly residual = e.evaluate(eq.substitution) - eq.rhs;
        rep.entries.push_back({eq.label, residual.is_zero(), residual});
    }
    return rep;
}

Report porteous_recursion_check(int i)
{
    if (i < 1)
        throw Error("index must be >= 1");
    VirtualAlphabet v(standard_alphabet("A" + std::to_string(i)),
                      standard_alphabet("B" + std::to_string(i)));
    MPoly lhs = f_i_r(i, 1).evaluate(v);
    MPoly rhs;
    Int fact_im1 = 1;
    for (int k = 2; k <= i - 1; ++k)
        fact_im1 *= k;
    for (int j = 1; j <= i; ++j) {
        Int denom = 1;
        for (int k = 2; k <= i - j; ++k)
            denom *= k;
        Int coeff = fact_im1 / denom; // (i-1)!/(i-j)! is always integral
        rhs += lambda_function(j, v) * f_i_r(j, 1).evaluate(v) * coeff;
    }
    MPoly residual = lhs - rhs;
    Report rep;
    rep.entries.push_back({"hook recursion i=" + std::to_string(i), residual.is_zero(),
                           residual});
    return rep;
}

// ---- appendix quantities ----

namespace {

// V_r(X2; B) from the correction-term coefficients
MPoly v_series_form(int r, const Alphabet& B)
{
    CoeffTable e = e_table(r);
    Alphabet D = standard_alphabet("D");
    VirtualAlphabet x2(standard_alphabet("X2"), Alphabet());
    SeriesContext neg(VirtualAlphabet(Alphabet(), D + B));
    MPoly out;
    for (int k = 0; k <= r - 2; ++k)
        for (int j = 0; k + 2 * j <= r - 2; ++j) {
            Int c = e.get(r - k, j);
            if (c == 0)
                continue;
            out += neg.complete(k) * schur({j, r - k - j - 2}, x2) * c;
        }
    return out;
}

// -F3_r(X2 - D - B) / R(X2, D + B)
MPoly u_by_division(int r, const Alphabet& B)
{
    Alphabet D = standard_alphabet("D");
    Alphabet X2 = standard_alphabet("X2");
    MPoly num = f_i_r(3, r).evaluate(VirtualAlphabet(X2, D + B));
    MPoly den = resultant(X2, D + B);
    return (-num).divide_exact(den);
}

// "at 0" keeps the cardinality: n copies of the zero letter, not the empty
// alphabet, so the resultant in the denominator keeps its degree
Alphabet zero_alphabet(int n)
{
    std::vector<Letter> letters(static_cast<std::size_t>(n), Letter::constant(0));
    return Alphabet(std::move(letters));
}

} // namespace

AppendixUV appendix_UV(int r)
{
    if (r < 2)
        throw Error("appendix quantities need r >= 2");
    Alphabet B = b_alphabet(r - 2);
    Alphabet D = standard_alphabet("D");
    Alphabet X2 = standard_alphabet("X2");
    Alphabet none;

    AppendixUV out;
    out.v_at_0 = v_series_form(r, none);
    out.u_at_0 = u_by_division(r, zero_alphabet(r - 2));

    auto check = [&](std::string label, const MPoly& residual) {
        out.full_check.entries.push_back({std::move(label), residual.is_zero(), residual});
    };

    // correction term divided by the resultant matches the coefficient form
    MPoly hv = h_r(r).evaluate(VirtualAlphabet(X2, D + B));
    MPoly big_r = resultant(X2, D + B);
    MPoly v_full = hv.divide_exact(big_r);
    check("V matches H/R", v_full - v_series_form(r, B));

    MPoly u_full = u_by_division(r, B); // throws DivisionFailed if not divisible
    check("resultant divides F3 specialization", MPoly(0));

    // expansion of V and U in the b-variables
    SeriesContext negB(VirtualAlphabet(Alphabet(), B));
    MPoly v_expanded, u_expanded;
    for (int i = 0; i <= r - 2; ++i) {
        v_expanded += v_series_form(r - i, none) * negB.complete(i);
        u_expanded += u_by_division(r - i, zero_alphabet(r - i - 2)) * negB.complete(i);
    }
    check("V expansion over B", v_full - v_expanded);
    check("U expansion over B", u_full - u_expanded);

    // closed form at B = 0: 3^{r-2} (3 S_{r-2}(X2) - 2 S_{1,r-3}(X2))
    VirtualAlphabet x2(X2, none);
    Int p3 = 1;
    for (int k = 0; k < r - 2; ++k)
        p3 *= 3;
    MPoly closed = (schur({r - 2}, x2) * Int(3) - schur({1, r - 3}, x2) * Int(2)) * p3;
    check("U at 0 closed form", out.u_at_0 - closed);
    check("V at 0 closed form", out.v_at_0 - closed);
    check("U = V at 0", out.u_at_0 - out.v_at_0);

    // the correction term vanishes on every A substitution
    SchurExpansion h = h_r(r);
    Alphabet Brm1 = b_alphabet(r - 1);
    check("H vanishes at A0", h.evaluate(VirtualAlphabet(none, Brm1)));
    for (int p = 2; p <= 4; ++p)
        check("H vanishes at A" + std::to_string(p - 1),
              h.evaluate(VirtualAlphabet(single(x_letter()), single(boxed_px(p)) + Brm1)));

    // total vanishing of the corrected first approximation
    MPoly total = (f_i_r(3, r) + h).evaluate(VirtualAlphabet(X2, D + B));
    check("corrected F3 vanishes at the III22 substitution", total);

    return out;
}

} // namespace thomschur
