#include "hopfrep/ain_algebra.hpp"

#include <numeric>

#include "hopfrep/error.hpp"

namespace hopfrep {

bool AlgebraInstance::same_instance(const AlgebraInstance& other) const {
    return params.m == other.params.m && i == other.i && params.order == other.params.order &&
           lambda == other.lambda;
}

InstancePtr make_instance(unsigned m, unsigned i, const Cyc& lambda, unsigned order) {
    if (m % 4 != 0 || m / 4 < 3) fail(errk::InvalidParams, "m must be 4t with t >= 3");
    unsigned n = m / 2;
    if (i < 1 || i > n - 1) fail(errk::InvalidParams, "i must satisfy 1 <= i <= n-1");
    if (order == 0) order = static_cast<unsigned>(std::lcm(m, 4u));
    order = static_cast<unsigned>(std::lcm(order, lambda.order()));
    auto inst = std::make_shared<AlgebraInstance>();
    inst->params = make_dihedral(m, order);
    inst->i = i;
    inst->lambda = lambda.lifted_to(order);
    inst->lambda_is_zero = lambda.is_zero();
    inst->i_is_odd = (i % 2 == 1);
    return inst;
}

std::string word_to_string(const BasisWord& w) {
    std::string out;
    if (w.a) out += "g";
    if (w.b) {
        out += "h";
        if (w.b > 1) out += "^" + std::to_string(w.b);
    }
    if (w.c) out += "x";
    if (w.d) out += "y";
    if (out.empty()) out = "1";
    return out;
}

AlgebraElement AlgebraElement::unit(InstancePtr inst) {
    return from_word(std::move(inst), BasisWord{});
}

AlgebraElement AlgebraElement::from_word(InstancePtr inst, const BasisWord& w, const Cyc& coeff) {
    AlgebraElement e(std::move(inst));
    e.add_term(w, coeff);
    return e;
}

void AlgebraElement::add_term(const BasisWord& w, const Cyc& coeff) {
    if (w.a > 1 || w.b >= inst_->m() || w.c > 1 || w.d > 1)
        fail(errk::InvalidParams, "basis word out of range");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(w, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
    if (!u.inst_->same_instance(*v.inst_)) fail(errk::InstanceMismatch, "algebra element add");
    AlgebraElement out = u;
    for (const auto& [w, c] : v.terms_) out.add_term(w, c);
    return out;
}

AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) {
    return u + (Cyc(Rational(-1)) * v);
}

AlgebraElement operator*(const Cyc& s, const AlgebraElement& u) {
    AlgebraElement out(u.inst_);
    if (s.is_zero()) return out;
    for (const auto& [w, c] : u.terms_) out.add_term(w, s * c);
    return out;
}

bool operator==(const AlgebraElement& u, const AlgebraElement& v) {
    return u.inst_->same_instance(*v.inst_) && u.terms_ == v.terms_;
}

std::vector<BasisWord> algebra_basis(const AlgebraInstance& inst) {
    std::vector<BasisWord> out;
    out.reserve(8 * inst.m());
    for (unsigned a = 0; a <= 1; ++a)
        for (unsigned b = 0; b < inst.m(); ++b)
            for (unsigned c = 0; c <= 1; ++c)
                for (unsigned d = 0; d <= 1; ++d) out.push_back(BasisWord{a, b, c, d});
    return out;
}

namespace {

// Letters of a not-yet-normalized word; h carries its exponent mod m.
struct Atom {
    char sym;       // 'g', 'h', 'x', 'y'
    unsigned h_exp; // meaningful for 'h' only, in (0, m)
};

struct PendingTerm {
    Cyc coeff;
    std::vector<Atom> atoms;
};

// One leftmost rewrite step.  Returns:
//   0 = normal form reached, 1 = rewrote in place, 2 = split (extra pushed).
int rewrite_step(const AlgebraInstance& inst, PendingTerm& term, std::vector<PendingTerm>& extra) {
    const unsigned m = inst.m();
    auto& at = term.atoms;
    for (size_t j = 0; j + 1 < at.size(); ++j) {
        char s1 = at[j].sym, s2 = at[j + 1].sym;
        if (s1 == 'g' && s2 == 'g') {
            at.erase(at.begin() + static_cast<long>(j), at.begin() + static_cast<long>(j) + 2);
            return 1;
        }
        if (s1 == 'h' && s2 == 'h') {
            unsigned k = (at[j].h_exp + at[j + 1].h_exp) % m;
            at.erase(at.begin() + static_cast<long>(j) + 1);
            if (k == 0)
                at.erase(at.begin() + static_cast<long>(j));
            else
                at[j].h_exp = k;
            return 1;
        }
        if (s1 == 'h' && s2 == 'g') { // h^k g -> g h^{m-k}
            unsigned k = at[j].h_exp;
            at[j] = Atom{'g', 0};
            at[j + 1] = Atom{'h', (m - k) % m};
            if (at[j + 1].h_exp == 0) at.erase(at.begin() + static_cast<long>(j) + 1);
            return 1;
        }
        if ((s1 == 'x' || s1 == 'y') && s2 == 'g') { // xg -> gy, yg -> gx
            at[j + 1] = Atom{s1 == 'x' ? 'y' : 'x', 0};
            at[j] = Atom{'g', 0};
            return 1;
        }
        if ((s1 == 'x' || s1 == 'y') && s2 == 'h') { // xh^k -> (-1)^k h^k x
            if (at[j + 1].h_exp % 2 == 1) term.coeff = -term.coeff;
            std::swap(at[j], at[j + 1]);
            return 1;
        }
        if (s1 == 'y' && s2 == 'x') { // yx -> -xy
            term.coeff = -term.coeff;
            at[j] = Atom{'x', 0};
            at[j + 1] = Atom{'y', 0};
            return 1;
        }
        if ((s1 == 'x' && s2 == 'x') || (s1 == 'y' && s2 == 'y')) {
            // x^2 -> lambda(1 - h^{2i}), y^2 -> lambda(1 - h^{-2i})
            unsigned e = s1 == 'x' ? (2 * inst.i) % m : (m - (2 * inst.i) % m) % m;
            PendingTerm with_h = term;
            with_h.coeff = -(inst.lambda * term.coeff);
            if (e == 0) {
                // h^0: the two branches combine to lambda(1-1) = 0; drop both.
                term.coeff = Cyc();
                at.clear();
                return 1;
            }
            with_h.atoms[j] = Atom{'h', e};
            with_h.atoms.erase(with_h.atoms.begin() + static_cast<long>(j) + 1);
            extra.push_back(std::move(with_h));
            term.coeff = inst.lambda * term.coeff;
            at.erase(at.begin() + static_cast<long>(j), at.begin() + static_cast<long>(j) + 2);
            return 2;
        }
    }
    return 0;
}

} // namespace

AlgebraElement multiply_words(InstancePtr inst, const BasisWord& u, const BasisWord& v) {
    const unsigned m = inst->m();
    AlgebraElement out(inst);
    std::vector<PendingTerm> work;
    PendingTerm init;
    init.coeff = Cyc(Rational(1));
    auto push_word = [&](const BasisWord& w) {
        if (w.a) init.atoms.push_back(Atom{'g', 0});
        if (w.b % m) init.atoms.push_back(Atom{'h', w.b % m});
        if (w.c) init.atoms.push_back(Atom{'x', 0});
        if (w.d) init.atoms.push_back(Atom{'y', 0});
    };
    push_word(u);
    push_word(v);
    work.push_back(std::move(init));

    // Termination: each step either shortens the word or strictly reduces the
    // (y-before-x, x/y-past-group-letter) disorder; budget asserts it.
    unsigned steps = 0;
    const unsigned budget = 10 * m;
    while (!work.empty()) {
        PendingTerm term = std::move(work.back());
        work.pop_back();
        for (;;) {
            if (term.coeff.is_zero()) break;
            int r = rewrite_step(*inst, term, work);
            if (r == 0) break;
            if (++steps > budget)
                fail(errk::RewriteBudgetExceeded, "rewrite exceeded 10*m steps");
        }
        if (term.coeff.is_zero()) continue;
        BasisWord w{};
        for (const auto& atom : term.atoms) {
            switch (atom.sym) {
                case 'g': w.a = 1; break;
                case 'h': w.b = atom.h_exp; break;
                case 'x': w.c = 1; break;
                default: w.d = 1; break;
            }
        }
        out.add_term(w, term.coeff);
    }
    return out;
}

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) {
    if (!u.instance()->same_instance(*v.instance()))
        fail(errk::InstanceMismatch, "algebra multiply across instances");
    AlgebraElement out(u.instance());
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            AlgebraElement prod = multiply_words(u.instance(), wu, wv);
            for (const auto& [w, c] : prod.terms()) out.add_term(w, cu * cv * c);
        }
    return out;
}

} // namespace hopfrep
