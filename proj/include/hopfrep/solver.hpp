#pragma once

#include <optional>

#include "hopfrep/catalog.hpp"

namespace hopfrep {

// A prescribed restriction to the group part: a sorted multiset of dihedral
// irrep labels with the block-diagonal G, H those labels induce.
struct RestrictionSpec {
    std::vector<IrrepLabel> labels;
    unsigned dim = 0;
    Mat G, H;
    std::vector<unsigned> block_of_row; // row index -> position in labels
};

inline constexpr unsigned kDefaultDimCap = 12;

// Sorts the labels; CapExceeded when the total dimension exceeds the cap.
RestrictionSpec make_restriction(const DihedralParams& params, std::vector<IrrepLabel> labels,
                                 unsigned cap = kDefaultDimCap);

// "rho(5)+rho(1)" or "chi(0,0)+rho(2)"; whitespace around '+' is ignored.
RestrictionSpec parse_spec(const DihedralParams& params, const std::string& text,
                           unsigned cap = kDefaultDimCap);

enum class SolveStatus { NoSolution, Finite, Parametrized, Undecided };

std::string to_string(SolveStatus status);

struct SolverSolution {
    std::string branch; // decision signature, deterministic
    Representation rep;
};

// Classification of all X (with Y = GXG) completing the restriction to a
// module over the algebra.
//   NoSolution:   every branch died; certificates hold the exact 0 = c facts.
//   Finite:       solutions is the complete list up to the block-rescaling
//                 gauge; classes groups them by equivalence.
//   Parametrized: free variables remain; solutions holds sample
//                 instantiations only (free_vars lists the parameters).
//   Undecided:    residual lists equations the propagation cannot reduce;
//                 solutions holds whatever complete branches produced.
struct SolutionFamily {
    SolveStatus status = SolveStatus::Undecided;
    std::vector<SolverSolution> solutions;
    std::vector<std::vector<size_t>> classes; // indices into solutions
    std::vector<std::string> certificates;
    std::vector<std::string> residual;
    std::vector<std::string> free_vars;
    bool exploratory = false;
    std::vector<std::string> notes;
};

// Stage 1 forces X entries to zero unless the H-eigenvalue sum mu_r + mu_c
// vanishes; stage 2 propagates the quadratic relations (X^2, XY + YX; the
// Y^2 relation is G-conjugate to the X^2 one, hence implied); stage 3
// instantiates, asserts check_relations, dedupes, and buckets equivalence
// classes.  z0 feeds fourth-root extraction for equations u^4 = -4*lambda^2
// (defaults to the builtin root when available).
SolutionFamily solve(InstancePtr inst, const RestrictionSpec& spec,
                     std::optional<Cyc> z0 = std::nullopt,
                     std::uint64_t seed = kEquivalenceSeed);

// Same pipeline, but only for configurations whose classification is open:
// all blocks rho(t) with 2 <= multiplicity <= 4, or four blocks all generic
// (omega^{2li} != 1 and l != t).  Output is tagged exploratory with a
// mandatory no-ground-truth banner.  NotAnOpenCase otherwise.
SolutionFamily probe_open_case(InstancePtr inst, const RestrictionSpec& spec,
                                 std::optional<Cyc> z0 = std::nullopt,
                                 std::uint64_t seed = kEquivalenceSeed);

} // namespace hopfrep
