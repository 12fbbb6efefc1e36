#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thomschur/errors.hpp"
#include "thomschur/selftest.hpp"
#include "thomschur/thom.hpp"

namespace py = pybind11;
using namespace thomschur;

namespace {

SingularityId target_of(const std::string& name, int r)
{
    return SingularityId::parse(name, r);
}

std::string compute_json(const std::string& name, int r)
{
    return thom_polynomial(target_of(name, r)).to_json();
}

py::tuple verify_json(const std::string& name, int r)
{
    SingularityId id = target_of(name, r);
    Report rep = verify(thom_polynomial(id), id);
    return py::make_tuple(rep.all_pass(), rep.to_json());
}

py::tuple solve_json(const std::string& name, int r, const std::string& candidates)
{
    SolveResult sol = solve_singularity(target_of(name, r),
                                        candidates == "all" ? CandidateSet::All
                                                            : CandidateSet::Default);
    return py::make_tuple(sol.expansion.to_json(), sol.used_heuristic_candidates);
}

std::vector<std::vector<std::string>> table_rows(const std::string& kind, int rows)
{
    CoeffTable t = kind == "d" ? d_table(rows) : e_table(rows + 1);
    int width = (rows + 1) / 2 + 1;
    std::vector<std::vector<std::string>> out;
    for (int i = 0; i < rows; ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < width; ++j)
            row.push_back(t.get(t.first_row() + i, t.first_col() + j).str());
        out.push_back(std::move(row));
    }
    return out;
}

std::string eval_expansion_json(const std::string& expansion_json, const std::string& at)
{
    SchurExpansion e = SchurExpansion::from_json(expansion_json);
    return e.evaluate(parse_virtual_alphabet(at)).str();
}

std::string schur_at(const std::vector<int>& seq, const std::string& at)
{
    return schur(seq, parse_virtual_alphabet(at)).str();
}

std::string complete_at(int i, const std::string& at)
{
    return complete_function(i, parse_virtual_alphabet(at)).str();
}

py::tuple selftest_json(const std::string& golden_dir)
{
    SelftestReport rep = run_selftest(golden_dir);
    return py::make_tuple(rep.all_pass(), rep.to_json());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Schur-function calculus and Thom polynomials";
    m.def("compute", &compute_json, py::arg("target"), py::arg("r"),
          "Closed-form Thom polynomial as canonical JSON");
    m.def("verify", &verify_json, py::arg("target"), py::arg("r"),
          "(all_pass, report_json) for the closed form against its equations");
    m.def("solve", &solve_json, py::arg("target"), py::arg("r"),
          py::arg("candidates") = "default",
          "(expansion_json, used_heuristic_candidates) from the restriction system");
    m.def("table", &table_rows, py::arg("kind"), py::arg("rows"),
          "Coefficient table rows as decimal strings");
    m.def("eval_expansion", &eval_expansion_json, py::arg("expansion_json"),
          py::arg("at"), "Evaluate an expansion at a virtual alphabet");
    m.def("schur", &schur_at, py::arg("sequence"), py::arg("at"),
          "Schur function of an integer sequence at a virtual alphabet");
    m.def("complete", &complete_at, py::arg("i"), py::arg("at"),
          "Complete function S_i at a virtual alphabet");
    m.def("selftest", &selftest_json, py::arg("golden_dir"),
          "(all_pass, report_json) for the full acceptance suite");

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedSingularity>(m, "UnsupportedSingularity",
                                                   PyExc_ValueError);
    static py::exception<Error> base_error(m, "ThomschurError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ParseError&) {
            throw; // handled by the registered exceptions above
        } catch (const UnsupportedSingularity&) {
            throw;
        } catch (const Error& e) {
            py::set_error(base_error, e.what());
        }
    });
}
