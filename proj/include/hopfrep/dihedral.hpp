#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfrep/matrix.hpp"

namespace hopfrep {

// Dihedral group D_m = <g, h : g^2 = 1 = h^m, ghg = h^{m-1}> with its fixed
// primitive m-th root omega = zeta_N^{N/m}.  Plain group operations only need
// m even; the Hopf algebra layer additionally requires m = 4t, t >= 3.
struct DihedralParams {
    unsigned m = 0;
    unsigned n = 0;     // m/2
    unsigned order = 0; // ambient cyclotomic order N, m | N
    Cyc omega;

    // Requires 4 | m.
    unsigned t() const;
};

// order defaults to lcm(m, 4) so the imaginary unit is always available.
DihedralParams make_dihedral(unsigned m, unsigned order = 0);

struct IrrepLabel {
    enum class Kind { Chi, Rho };
    Kind kind = Kind::Chi;
    unsigned c = 0, d = 0; // Chi(c, d), c,d in {0,1}
    unsigned l = 0;        // Rho(l), 1 <= l < n

    static IrrepLabel chi(unsigned c, unsigned d) { return {Kind::Chi, c, d, 0}; }
    static IrrepLabel rho(unsigned l) { return {Kind::Rho, 0, 0, l}; }

    friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
        return a.kind == b.kind && a.c == b.c && a.d == b.d && a.l == b.l;
    }
    friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
        if (a.kind != b.kind) return a.kind < b.kind; // all chi before all rho
        if (a.kind == Kind::Chi) return a.c != b.c ? a.c < b.c : a.d < b.d;
        return a.l < b.l;
    }
};

// "chi(c,d)" / "rho(l)"
std::string label_to_string(const IrrepLabel& label);
IrrepLabel label_from_string(const std::string& text);

void validate_label(const DihedralParams& params, const IrrepLabel& label);
unsigned label_degree(const IrrepLabel& label);

// The complete set of n+3 irreducible labels: chi(0,0), chi(0,1), chi(1,0),
// chi(1,1), rho(1), ..., rho(n-1).
std::vector<IrrepLabel> all_labels(const DihedralParams& params);

// Value at g^a h^b for every a in {0,1}, 0 <= b < m, indexed a*m + b.
struct Character {
    unsigned m = 0;
    std::vector<Cyc> values;

    const Cyc& at(unsigned a, unsigned b) const { return values[a % 2 * m + b % m]; }
};

// rho_l(g^a h^b) = swap^a * diag(omega^l, omega^-l)^b;
// chi_{c,d}(g^a h^b) = [(-1)^{ac} (-1)^{db}].
Mat irrep_matrix(const DihedralParams& params, const IrrepLabel& label, unsigned a, long b);

Character character_of(const DihedralParams& params, const IrrepLabel& label);
Character trace_character(const DihedralParams& params, const Mat& g, const Mat& h);
Character sum_characters(const Character& a, const Character& b);

// (1/2m) sum over the group of x1 * conj(x2); the cyclotomic parts cancel
// exactly, the result is a plain rational.
Rational inner_product(const DihedralParams& params, const Character& x1, const Character& x2);

// Multiset of irreducible constituents of the (G, H) representation,
// by exact character inner products.  Verifies the three group relations.
std::map<IrrepLabel, unsigned> decompose(const DihedralParams& params, const Mat& g, const Mat& h);

} // namespace hopfrep
