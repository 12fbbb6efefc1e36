#pragma once

#include <string>
#include <vector>

#include "thomschur/expansion.hpp"

namespace thomschur {

// Supported singularity classes.  The A family carries the index i; the
// parameter r = k+1 is shared by all of them.
enum class Family { A, I22, III22 };

struct SingularityId {
    Family family = Family::A;
    int i = 1; // A family only
    int r = 1;

    int codim() const;
    std::string str() const;

    static SingularityId A(int i, int r) { return {Family::A, i, r}; }
    static SingularityId I22(int r) { return {Family::I22, 0, r}; }
    static SingularityId III22(int r) { return {Family::III22, 0, r}; }
    // "A3", "I22", "III22"
    static SingularityId parse(const std::string& name, int r);
};

struct RestrictionEquation {
    std::string label;
    VirtualAlphabet substitution;
    MPoly rhs; // zero for vanishing conditions, the Euler class otherwise
};

struct RestrictionSystem {
    std::vector<RestrictionEquation> equations;
    std::vector<Partition> candidates;
    int codim = 0;
    int r = 1;
};

// Integer coefficient tables behind the closed forms.  Entries are addressed
// with the row/column coordinates of the displayed matrices: the d table has
// rows i >= 1 and columns j >= 1, the e table rows i >= 2 and columns j >= 0.
class CoeffTable {
public:
    enum class Kind { d, e };
    CoeffTable(Kind kind, int rows);

    Kind kind() const { return kind_; }
    int rows() const { return rows_; }
    int first_row() const { return kind_ == Kind::d ? 1 : 2; }
    int first_col() const { return kind_ == Kind::d ? 1 : 0; }
    // 0 outside the stored support
    Int get(int i, int j) const;

private:
    Kind kind_;
    int rows_;
    std::vector<std::vector<Int>> data_;
};

CoeffTable d_table(int rows);
CoeffTable e_table(int rows);

// ---- closed forms ----

// two-row part of the I22 Thom polynomial
SchurExpansion p_r_o(int r);
// full Thom polynomial for I22
SchurExpansion thom_I22(int r);
// first approximation to the A_i Thom polynomial
SchurExpansion f_i_r(int i, int r);
// correction term for A3 and its two-row part (h_r(1) is empty)
SchurExpansion h_r(int r);
SchurExpansion h_r_o(int r);
// closed-form Thom polynomials for (1,r), (2,r), (3,r) and (4,1)
SchurExpansion thom_A(int i, int r);
// S_{r+1,r+1}
SchurExpansion thom_III22(int r);
// closed form for any supported singularity
SchurExpansion thom_polynomial(const SingularityId& target);

// ---- restriction equations and the generic solver ----

std::vector<RestrictionEquation> restriction_equations(const SingularityId& target);

enum class CandidateSet { Default, All };

std::vector<Partition> candidate_partitions(int weight, const PartitionFilter& filter);
std::vector<Partition> default_candidates(const SingularityId& target);

struct SolveResult {
    SchurExpansion expansion;
    int kernel_dim = 0;
    bool used_heuristic_candidates = true;
};

SchurExpansion solve_restriction_system(const RestrictionSystem& sys);
// builds the system for a singularity and solves it; on underdetermination
// with the default (heuristic) candidate set, retries with all partitions of
// the codimension weight
SolveResult solve_singularity(const SingularityId& target,
                              CandidateSet candidates = CandidateSet::Default);

// ---- verification ----

struct CheckEntry {
    std::string label;
    bool pass = false;
    MPoly residual; // the defect; zero on pass
};

struct Report {
    std::vector<CheckEntry> entries;
    bool all_pass() const;
    std::string to_json() const;
    std::string str() const;
};

// evaluates e at every restriction equation of the target
Report verify(const SchurExpansion& e, const SingularityId& target);

// hook recursion for the first approximations at r = 1: compares
// F^(i) against sum_j (i-1)!/(i-j)! Lambda_j F^(j), both sides evaluated at
// the generic (i,i) variable template with pointwise products
Report porteous_recursion_check(int i);

// ---- appendix quantities ----

struct AppendixUV {
    MPoly u_at_0;        // U_r(X2; 0)
    MPoly v_at_0;        // V_r(X2; 0)
    Report full_check;   // expansion identities, vanishings, total vanishing
};

AppendixUV appendix_UV(int r);

} // namespace thomschur
