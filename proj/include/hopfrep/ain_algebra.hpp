#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopfrep/dihedral.hpp"

namespace hopfrep {

// A_{i,n}(lambda): generated by g, h, x, y over D_m with
//   g^2 = 1 = h^m, ghg = h^{m-1}, gx = yg, hx = -xh, hy = -yh,
//   x^2 = lambda(1 - h^{2i}), y^2 = lambda(1 - h^{-2i}), xy = -yx.
// PBW-type normal form g^a h^b x^c y^d; dimension 8m.
struct AlgebraInstance {
    DihedralParams params;
    unsigned i = 0;
    Cyc lambda;
    bool lambda_is_zero = false; // flagged: the algebra degenerates to the graded case
    bool i_is_odd = false;       // derived flag; omega^{ni} = -1 iff i is odd

    unsigned m() const { return params.m; }
    unsigned n() const { return params.n; }
    unsigned order() const { return params.order; }
    bool same_instance(const AlgebraInstance& other) const;
};

using InstancePtr = std::shared_ptr<const AlgebraInstance>;

// Requires m = 4t with t >= 3, 1 <= i <= n-1, m | order.  lambda is lifted to
// the instance order (which grows to absorb lambda's own order if needed).
InstancePtr make_instance(unsigned m, unsigned i, const Cyc& lambda, unsigned order = 0);

// g^a h^b x^c y^d
struct BasisWord {
    unsigned a = 0, b = 0, c = 0, d = 0;

    friend bool operator==(const BasisWord& u, const BasisWord& v) {
        return u.a == v.a && u.b == v.b && u.c == v.c && u.d == v.d;
    }
    friend bool operator<(const BasisWord& u, const BasisWord& v) {
        if (u.a != v.a) return u.a < v.a;
        if (u.b != v.b) return u.b < v.b;
        if (u.c != v.c) return u.c < v.c;
        return u.d < v.d;
    }
};

std::string word_to_string(const BasisWord& w);

// Sparse linear combination of basis words; zero coefficients are never stored.
class AlgebraElement {
public:
    explicit AlgebraElement(InstancePtr inst) : inst_(std::move(inst)) {}
    static AlgebraElement unit(InstancePtr inst);
    static AlgebraElement from_word(InstancePtr inst, const BasisWord& w,
                                    const Cyc& coeff = Cyc(Rational(1)));

    const InstancePtr& instance() const { return inst_; }
    const std::map<BasisWord, Cyc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BasisWord& w, const Cyc& coeff);

    friend AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v);
    friend AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v);
    friend AlgebraElement operator*(const Cyc& s, const AlgebraElement& u);
    friend bool operator==(const AlgebraElement& u, const AlgebraElement& v);
    friend bool operator!=(const AlgebraElement& u, const AlgebraElement& v) { return !(u == v); }

private:
    InstancePtr inst_;
    std::map<BasisWord, Cyc> terms_;
};

// Product in normal form via the confluent rewrite rules.  InstanceMismatch
// when the operands disagree on (m, i, order, lambda).
AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v);

// The 8m basis words in lexicographic (a, b, c, d) order.
std::vector<BasisWord> algebra_basis(const AlgebraInstance& inst);

// Product of two basis words, in normal form.
AlgebraElement multiply_words(InstancePtr inst, const BasisWord& u, const BasisWord& v);

} // namespace hopfrep
