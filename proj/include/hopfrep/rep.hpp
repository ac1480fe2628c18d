#pragma once

#include <cstdint>
#include <optional>

#include "hopfrep/ain_algebra.hpp"
#include "hopfrep/matrix.hpp"

namespace hopfrep {

// A module over the algebra: images of the four generators.  Validity (the
// nine defining relations as matrix identities) is checked by check_relations;
// constructors in the catalog assert it, hand-built inputs may violate it.
struct Representation {
    InstancePtr inst;
    unsigned dim = 0;
    Mat G, H, X, Y;
};

Representation make_representation(InstancePtr inst, Mat g, Mat h, Mat x, Mat y);
Representation direct_sum(const Representation& a, const Representation& b);

struct Violation {
    std::string relation; // e.g. "HX = -XH"
    unsigned row = 0, col = 0;  // first entry where the difference is nonzero
};

// Empty iff G^2=I, H^m=I, GHG=H^{m-1}, GX=YG, HX=-XH, HY=-YH,
// X^2=lambda(I-H^{2i}), Y^2=lambda(I-H^{-2i}), XY=-YX.
std::vector<Violation> check_relations(const Representation& rep);

// The algebra morphism determined by the generator images, on normal forms.
Mat evaluate_word(const Representation& rep, const BasisWord& w);
Mat evaluate(const Representation& rep, const AlgebraElement& elem);

// trace(evaluate(w)) for every basis word.
std::map<BasisWord, Cyc> character(const Representation& rep);

// Burnside criterion: the four generator images span the full d x d algebra.
bool is_absolutely_irreducible(const Representation& rep);

// Best-effort search for a proper nonzero invariant subspace: spins up
// H-eigenvectors (every submodule is H-homogeneous), kernel slices of X and Y
// inside higher-multiplicity eigenspaces, and eigenlines of 2x2 transition
// maps when they are exactly solvable.  none = search exhausted, not a proof
// of irreducibility; incomplete for eigenspace multiplicities >= 3.
std::optional<std::vector<Vec>> find_submodule_witness(const Representation& rep);

// Basis of {S : S * rho_A(a) = rho_B(a) * S for a in {g,h,x,y}}.
std::vector<Mat> intertwiners(const Representation& a, const Representation& b);

enum class Equivalence { No, Yes, Undecided };

inline constexpr std::uint64_t kEquivalenceSeed = 0x5eedc0de;

// Exact for absolutely irreducible operands; otherwise certifies Yes by
// exhibiting an invertible intertwiner among basis elements and up to 32
// seeded rational combinations, and No by an empty intertwiner space or a
// character mismatch.  Undecided when sampling cannot certify either way.
Equivalence equivalence_verdict(const Representation& a, const Representation& b,
                                std::uint64_t seed = kEquivalenceSeed);

// Convenience wrapper; Error(Undecided) when the verdict is Undecided.
bool equivalent(const Representation& a, const Representation& b,
                std::uint64_t seed = kEquivalenceSeed);

// Restriction to the group part: constituents of (G, H).
std::map<IrrepLabel, unsigned> restrict_to_group(const Representation& rep);

} // namespace hopfrep
