#pragma once

#include <map>

#include "hopfrep/dihedral.hpp"

namespace hopfrep {

// Constituents of the tensor product of two dihedral irreps, with
// multiplicities: the pointwise product of the characters decomposed by
// exact inner products against each irreducible character.
std::map<IrrepLabel, unsigned> tensor_decompose(const DihedralParams& params,
                                                const IrrepLabel& j, const IrrepLabel& k);

// Grothendieck ring of the group representations: labels in the canonical
// order (the four chi, then rho(1..n-1)) and structure constants
// constants[j][k][i] with M_j (x) M_k = sum_i constants[j][k][i] * M_i.
// The identical ring also presents the Grothendieck rings of the
// bosonizations B(M_{i,k}) # kD_m and B_L, and of A_{i,n}(0); no independent
// computation is done on that side.
struct FusionTable {
    DihedralParams params;
    std::vector<IrrepLabel> labels;
    std::vector<std::vector<std::vector<unsigned>>> constants;
    std::string presents;

    unsigned index_of(const IrrepLabel& label) const; // InvalidLabel when absent
};

FusionTable fusion_table(const DihedralParams& params);

// Ring axioms checked exhaustively on the table: unit row/column at
// chi(0,0), commutativity, associativity over all label triples, and the
// dimension law deg(j)deg(k) = sum_i N_{jk}^i deg(i).
struct RingReport {
    bool unital = false;
    bool commutative = false;
    bool associative = false;
    bool dimension_law = false;
    std::vector<std::string> failures;

    bool ok() const { return unital && commutative && associative && dimension_law; }
};

RingReport verify_ring(const FusionTable& table);

} // namespace hopfrep
