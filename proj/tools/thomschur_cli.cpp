#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "thomschur/errors.hpp"
#include "thomschur/selftest.hpp"
#include "thomschur/thom.hpp"

#ifndef THOMSCHUR_GOLDEN_DIR
#define THOMSCHUR_GOLDEN_DIR "data/golden"
#endif

namespace {

using namespace thomschur;

// "S[1,3,3]" or sums like "S[1,3,3]+3S[3,4]-2S[6]"
SchurExpansion parse_expansion_expr(const std::string& text)
{
    SchurExpansion out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    bool first = true;
    while (skip_ws(), pos < text.size()) {
        Int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-')
                sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' in expression at position "
                             + std::to_string(pos));
        }
        first = false;
        std::size_t num_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        Int coeff = pos > num_start ? Int(text.substr(num_start, pos - num_start))
                                    : Int(1);
        skip_ws();
        if (pos >= text.size() || text[pos] != 'S')
            throw ParseError("expected 'S[...]' term in expression");
        ++pos;
        skip_ws();
        if (pos >= text.size() || text[pos] != '[')
            throw ParseError("expected '[' after S");
        std::size_t close = text.find(']', pos);
        if (close == std::string::npos)
            throw ParseError("unterminated '[' in expression");
        std::string inner = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        std::vector<int> parts;
        std::size_t start = 0;
        while (start <= inner.size()) {
            std::size_t comma = inner.find(',', start);
            std::string piece = inner.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!piece.empty())
                parts.push_back(std::stoi(piece));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (!std::is_sorted(parts.begin(), parts.end()))
            throw ParseError("partition parts must be weakly increasing: [" + inner
                             + "]");
        out.add_term(Partition(parts), coeff * sign);
    }
    return out;
}

SingularityId parse_target(const std::string& name, int r)
{
    return SingularityId::parse(name, r);
}

void print_expansion(const SchurExpansion& e, const std::string& format)
{
    if (format == "json")
        std::cout << e.to_json() << "\n";
    else
        std::cout << e.str() << "\n";
}

void print_table(const CoeffTable& t, int rows, const std::string& format)
{
    int width = 0;
    for (int i = t.first_row(); i < t.first_row() + rows; ++i)
        for (int j = t.first_col();; ++j) {
            if (t.get(i, j) == 0 && j > t.first_col()) {
                width = std::max(width, j - t.first_col());
                break;
            }
        }
    if (format == "json") {
        std::cout << "{\"kind\": \"" << (t.kind() == CoeffTable::Kind::d ? "d" : "e")
                  << "\", \"first_row\": " << t.first_row()
                  << ", \"first_col\": " << t.first_col() << ", \"rows\": [";
        for (int i = 0; i < rows; ++i) {
            std::cout << (i ? ", [" : "[");
            for (int j = 0; j < width; ++j)
                std::cout << (j ? ", " : "")
                          << t.get(t.first_row() + i, t.first_col() + j).str();
            std::cout << "]";
        }
        std::cout << "]}\n";
    } else {
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < width; ++j)
                std::cout << (j ? " " : "")
                          << t.get(t.first_row() + i, t.first_col() + j).str();
            std::cout << "\n";
        }
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Schur-function calculus and Thom polynomials of singularities"};
    app.require_subcommand(1);

    std::string target, format = "text", candidates = "default";
    std::string expr, at, golden_dir = THOMSCHUR_GOLDEN_DIR;
    int r = 1, rows = 7, max_r = 8;

    auto add_common = [&](CLI::App* sub, bool with_r) {
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        if (with_r) {
            sub->add_option("--r", r);
            sub->add_option("--max-r", max_r);
        }
    };

    CLI::App* compute = app.add_subcommand("compute", "closed-form Thom polynomial");
    compute->add_option("target", target)->required();
    add_common(compute, true);

    CLI::App* verify_cmd = app.add_subcommand("verify",
                                              "check a closed form against its "
                                              "restriction equations");
    verify_cmd->add_option("target", target)->required();
    add_common(verify_cmd, true);

    CLI::App* solve = app.add_subcommand("solve", "solve the restriction system");
    solve->add_option("target", target)->required();
    solve->add_option("--candidates", candidates)
        ->check(CLI::IsMember({"default", "all"}));
    add_common(solve, true);

    CLI::App* table = app.add_subcommand("table", "coefficient tables");
    table->add_option("kind", target)->required()->check(CLI::IsMember({"d", "e"}));
    table->add_option("--rows", rows);
    add_common(table, false);

    CLI::App* eval = app.add_subcommand("eval",
                                        "evaluate a Schur expansion at a virtual "
                                        "alphabet");
    eval->add_option("expr", expr)->required();
    eval->add_option("--at", at)->required();
    add_common(eval, false);

    CLI::App* selftest = app.add_subcommand("selftest", "full acceptance suite");
    selftest->add_option("--golden-dir", golden_dir);
    add_common(selftest, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            if (r < 1 || r > max_r)
                throw ParseError("--r out of range 1.." + std::to_string(max_r));
            print_expansion(thom_polynomial(parse_target(target, r)), format);
        } else if (*verify_cmd) {
            if (r < 1 || r > max_r)
                throw ParseError("--r out of range 1.." + std::to_string(max_r));
            SingularityId id = parse_target(target, r);
            Report rep = verify(thom_polynomial(id), id);
            if (format == "json")
                std::cout << rep.to_json() << "\n";
            else
                std::cout << rep.str();
            return rep.all_pass() ? 0 : 1;
        } else if (*solve) {
            if (r < 1 || r > max_r)
                throw ParseError("--r out of range 1.." + std::to_string(max_r));
            SolveResult sol = solve_singularity(parse_target(target, r),
                                                candidates == "all"
                                                    ? CandidateSet::All
                                                    : CandidateSet::Default);
            print_expansion(sol.expansion, format);
            if (sol.used_heuristic_candidates && format == "text")
                std::cerr << "note: solved over the heuristic candidate set\n";
        } else if (*table) {
            if (rows < (target == "d" ? 1 : 2))
                throw ParseError("--rows too small for the " + target + " table");
            CoeffTable t = target == "d" ? d_table(rows) : e_table(rows + 1);
            print_table(t, rows, format);
        } else if (*eval) {
            SchurExpansion e = parse_expansion_expr(expr);
            MPoly value = e.evaluate(parse_virtual_alphabet(at));
            if (format == "json")
                std::cout << "{\"polynomial\": \"" << value.str() << "\"}\n";
            else
                std::cout << value.str() << "\n";
        } else if (*selftest) {
            SelftestReport rep = run_selftest(golden_dir);
            if (format == "json")
                std::cout << rep.to_json() << "\n";
            else
                std::cout << rep.str();
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Underdetermined& e) {
        std::cout << "{\"error\": \"underdetermined\", \"kernel_dim\": "
                  << e.kernel_dim << "}\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
