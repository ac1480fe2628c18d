#pragma once

#include <array>
#include <optional>

#include "hopfrep/rep.hpp"

namespace hopfrep {

// The four fourth roots of -4*lambda^2: {z0, i*z0, -z0, -i*z0}.
struct FourRoots {
    Cyc z0;
    std::array<Cyc, 4> roots;
};

// 1-dim rep extending chi_{c,d} with X = Y = [0].
Representation extend_chi_by_zero(InstancePtr inst, unsigned c, unsigned d);

// X = Y = 0 over rho_l; valid iff omega^{2li} = 1 or lambda = 0.  Otherwise
// NotExtendable naming the square relation that would fail.
Representation extend_rho_by_zero(InstancePtr inst, unsigned l);

// Verifies z0^4 = -4*lambda^2 exactly and z0 != 0 (lambda = 0 admits only
// z0 = 0, rejected because the four roots collapse).  NotAFourthRoot.
FourRoots four_roots(const AlgebraInstance& inst, const Cyc& z0);

// q(1+i) when lambda = q^2 or lambda = -q^2 for rational q != 0, since
// (q(1+i))^4 = -4q^4 = -4*lambda^2 either way; nullopt otherwise.
std::optional<Cyc> builtin_root(const AlgebraInstance& inst);

// dim-2 rep over rho_t with X = [[0, 2*lambda/z], [z, 0]] and
// Y = [[0, z], [2*lambda/z, 0]].  Requires z^4 = -4*lambda^2 and odd i
// (omega^{ni} = -1; even i makes X^2 = 2*lambda*I unsatisfiable).
Representation rho_z(InstancePtr inst, const Cyc& z);

// dim-4 reps over rho_{l1} + rho_{l2}; require l1 + l2 = n, l_j != t and
// omega^{2*l_j*i} != 1.  F_prime flips the signs of the omega^{l2*i}-bearing
// entries of X and Y.
Representation F(InstancePtr inst, unsigned l1, unsigned l2);
Representation F_prime(InstancePtr inst, unsigned l1, unsigned l2);

struct CatalogEntry {
    std::string label;
    Representation rep;
};

// Every representation the classification exhibits as irreducible: the four
// chi_bar, rho_bar for each l with omega^{2li} = 1, the four rho_z over the
// roots of z0 (odd i and lambda != 0 only), and F/F' per unordered pair
// {l1 < l2} meeting the F preconditions.  z0 defaults to the builtin root and
// is verified when supplied.  lambda = 0 degenerates to chi_bar plus every
// rho_bar.  No completeness claim.
std::vector<CatalogEntry> known_irreducibles(InstancePtr inst,
                                             std::optional<Cyc> z0 = std::nullopt);

} // namespace hopfrep
