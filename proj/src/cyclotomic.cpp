#include "hopfrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfrep/error.hpp"

namespace hopfrep {

namespace {

using Poly = std::vector<Rational>; // ascending degree

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division; requires the remainder to vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        poly_trim(num);
    }
    if (!num.empty()) fail(errk::InternalError, "inexact polynomial division");
    return q;
}

// Per-order data: Phi_N and the reduction of z^k mod Phi_N for k in [phi, N).
struct FieldTable {
    unsigned order = 1;
    unsigned phi = 1;
    Poly cyclo;                                  // length phi + 1, monic
    std::vector<std::vector<Rational>> zpow;     // zpow[k - phi], length phi
};

unsigned phi_raw(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Poly cyclo_raw(unsigned n, const std::map<unsigned, std::shared_ptr<const FieldTable>>& cache);

const FieldTable& field_table(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const FieldTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto t = std::make_shared<FieldTable>();
    t->order = n;
    t->phi = phi_raw(n);
    t->cyclo = cyclo_raw(n, cache);
    if (t->cyclo.size() != t->phi + 1)
        fail(errk::InternalError, "cyclotomic polynomial degree mismatch");
    // z^phi = -(lower part of Phi); extend iteratively up to z^{N-1}.
    t->zpow.reserve(n > t->phi ? n - t->phi : 0);
    std::vector<Rational> cur(t->phi, Rational(0));
    for (unsigned j = 0; j < t->phi; ++j) cur[j] = -t->cyclo[j];
    for (unsigned k = t->phi; k < n; ++k) {
        t->zpow.push_back(cur);
        // cur(z) * z, reducing the overflowing top coefficient through Phi.
        std::vector<Rational> next(t->phi, Rational(0));
        Rational top = cur[t->phi - 1];
        for (unsigned j = t->phi - 1; j > 0; --j) next[j] = cur[j - 1];
        next[0] = Rational(0);
        if (top != 0)
            for (unsigned j = 0; j < t->phi; ++j) next[j] -= top * t->cyclo[j];
        cur = std::move(next);
    }
    auto [pos, inserted] = cache.emplace(n, std::move(t));
    (void)inserted;
    return *pos->second;
}

Poly cyclo_raw(unsigned n, const std::map<unsigned, std::shared_ptr<const FieldTable>>& cache) {
    if (n == 1) return Poly{Rational(-1), Rational(1)};
    Poly num(n + 1, Rational(0));
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto it = cache.find(d);
        Poly phi_d = it != cache.end() ? it->second->cyclo : cyclo_raw(d, cache);
        num = poly_div_exact(std::move(num), phi_d);
    }
    return num;
}

// Reduce an exponent-indexed accumulation (k in [0, N)) to the power basis.
std::vector<Rational> fold_to_basis(const FieldTable& t, const std::vector<Rational>& by_exp) {
    std::vector<Rational> out(t.phi, Rational(0));
    for (unsigned k = 0; k < by_exp.size(); ++k) {
        const Rational& c = by_exp[k];
        if (c == 0) continue;
        if (k < t.phi) {
            out[k] += c;
        } else {
            const auto& row = t.zpow[k - t.phi];
            for (unsigned j = 0; j < t.phi; ++j) out[j] += c * row[j];
        }
    }
    return out;
}

unsigned lcm_u(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(a, b));
}

} // namespace

unsigned euler_phi(unsigned n) {
    if (n == 0) fail(errk::InvalidParams, "euler_phi(0)");
    return field_table(n).phi;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) fail(errk::InvalidParams, "cyclotomic_polynomial(0)");
    return field_table(n).cyclo;
}

Cyc Cyc::zeta(unsigned order, long power) {
    if (order == 0) fail(errk::InvalidParams, "zeta of order 0");
    const FieldTable& t = field_table(order);
    long k = power % static_cast<long>(order);
    if (k < 0) k += order;
    std::vector<Rational> by_exp(order, Rational(0));
    by_exp[static_cast<unsigned>(k)] = Rational(1);
    return Cyc(order, fold_to_basis(t, by_exp));
}

Cyc Cyc::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
    if (order == 0) fail(errk::InvalidParams, "order 0");
    if (coeffs.size() != field_table(order).phi)
        fail(errk::DimensionMismatch, "coefficient vector length must be phi(order)");
    return Cyc(order, std::move(coeffs));
}

Cyc Cyc::imaginary_unit(unsigned order) {
    if (order % 4 != 0) fail(errk::InvalidParams, "imaginary unit needs 4 | order");
    return zeta(order, order / 4);
}

bool Cyc::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyc::is_rational() const {
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    return true;
}

Rational Cyc::rational_value() const {
    if (!is_rational()) fail(errk::InternalError, "rational_value of non-rational " + to_string());
    return coeffs_[0];
}

Cyc Cyc::lifted_to(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order == 0 || new_order % order_ != 0)
        fail(errk::OrderMismatch, "lift requires order | new_order");
    const FieldTable& t = field_table(new_order);
    unsigned step = new_order / order_;
    std::vector<Rational> by_exp(new_order, Rational(0));
    for (unsigned j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) by_exp[j * step] += coeffs_[j];
    return Cyc(new_order, fold_to_basis(t, by_exp));
}

std::optional<Cyc> Cyc::projected_to(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order == 0 || order_ % new_order != 0)
        fail(errk::OrderMismatch, "project requires new_order | order");
    unsigned ph_small = field_table(new_order).phi;
    unsigned ph_big = field_table(order_).phi;
    // Columns: lifts of the small power basis; solve for coordinates.
    std::vector<std::vector<Rational>> aug(ph_big, std::vector<Rational>(ph_small + 1, Rational(0)));
    for (unsigned j = 0; j < ph_small; ++j) {
        Cyc col = Cyc::zeta(new_order, j).lifted_to(order_);
        for (unsigned r = 0; r < ph_big; ++r) aug[r][j] = col.coeffs()[r];
    }
    for (unsigned r = 0; r < ph_big; ++r) aug[r][ph_small] = coeffs_[r];

    unsigned row = 0;
    std::vector<int> pivot_of_col(ph_small, -1);
    for (unsigned col = 0; col < ph_small && row < ph_big; ++col) {
        unsigned sel = row;
        while (sel < ph_big && aug[sel][col] == 0) ++sel;
        if (sel == ph_big) continue;
        std::swap(aug[sel], aug[row]);
        Rational inv = Rational(1) / aug[row][col];
        for (unsigned j = col; j <= ph_small; ++j) aug[row][j] *= inv;
        for (unsigned r = 0; r < ph_big; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (unsigned j = col; j <= ph_small; ++j) aug[r][j] -= f * aug[row][j];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    for (unsigned r = row; r < ph_big; ++r)
        if (aug[r][ph_small] != 0) return std::nullopt;
    std::vector<Rational> out(ph_small, Rational(0));
    for (unsigned col = 0; col < ph_small; ++col)
        if (pivot_of_col[col] >= 0) out[col] = aug[static_cast<unsigned>(pivot_of_col[col])][ph_small];
    return Cyc(new_order, std::move(out));
}

Cyc Cyc::conj() const {
    const FieldTable& t = field_table(order_);
    std::vector<Rational> by_exp(order_, Rational(0));
    for (unsigned j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) by_exp[(order_ - j) % order_] += coeffs_[j];
    return Cyc(order_, fold_to_basis(t, by_exp));
}

Cyc Cyc::inverse() const {
    if (is_zero()) fail(errk::DivisionByZero, "inverse of zero");
    const FieldTable& t = field_table(order_);
    // Extended Euclid on (this, Phi_N) over Q[x]; Phi_N irreducible over Q,
    // so the gcd is a nonzero constant.
    Poly r0(coeffs_.begin(), coeffs_.end());
    poly_trim(r0);
    Poly r1 = t.cyclo;
    Poly s0{Rational(1)}, s1{};
    while (!r1.empty()) {
        // r0 = q*r1 + rem
        Poly rem = r0;
        Poly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
            poly_trim(rem);
        }
        // s update: s0 - q*s1
        Poly s2 = s0;
        if (!q.empty() && !s1.empty()) {
            s2.resize(std::max(s2.size(), q.size() + s1.size() - 1), Rational(0));
            for (size_t a = 0; a < q.size(); ++a) {
                if (q[a] == 0) continue;
                for (size_t b = 0; b < s1.size(); ++b) s2[a + b] -= q[a] * s1[b];
            }
            poly_trim(s2);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) fail(errk::InternalError, "gcd with cyclotomic polynomial not constant");
    Rational g = r0[0];
    std::vector<Rational> out(t.phi, Rational(0));
    for (size_t j = 0; j < s0.size() && j < out.size(); ++j) out[j] = s0[j] / g;
    return Cyc(order_, std::move(out));
}

Cyc Cyc::pow(long e) const {
    Cyc base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Cyc acc(Rational(1));
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc.lifted_to(order_);
}

Cyc Cyc::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return Cyc(order_, std::move(out));
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    unsigned n = lcm_u(a.order_, b.order_);
    Cyc la = a.lifted_to(n), lb = b.lifted_to(n);
    for (size_t j = 0; j < la.coeffs_.size(); ++j) la.coeffs_[j] += lb.coeffs_[j];
    return la;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    return a + (-b);
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    unsigned n = lcm_u(a.order_, b.order_);
    Cyc la = a.lifted_to(n), lb = b.lifted_to(n);
    const FieldTable& t = field_table(n);
    std::vector<Rational> by_exp(n, Rational(0));
    for (unsigned ja = 0; ja < la.coeffs_.size(); ++ja) {
        if (la.coeffs_[ja] == 0) continue;
        for (unsigned jb = 0; jb < lb.coeffs_.size(); ++jb) {
            if (lb.coeffs_[jb] == 0) continue;
            by_exp[(ja + jb) % n] += la.coeffs_[ja] * lb.coeffs_[jb];
        }
    }
    return Cyc(n, fold_to_basis(t, by_exp));
}

Cyc operator/(const Cyc& a, const Cyc& b) {
    if (b.is_zero()) fail(errk::DivisionByZero, "division by zero");
    unsigned n = lcm_u(a.order_, b.order_);
    return a.lifted_to(n) * b.lifted_to(n).inverse();
}

bool operator==(const Cyc& a, const Cyc& b) {
    unsigned n = lcm_u(a.order_, b.order_);
    return a.lifted_to(n).coeffs_ == b.lifted_to(n).coeffs_;
}

std::string Cyc::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (j == 0) {
            out << rational_to_string(mag);
        } else {
            if (mag != 1) out << rational_to_string(mag) << "*";
            out << "z";
            if (j > 1) out << "^" << j;
        }
    }
    if (first) return "0";
    return out.str();
}

namespace {

struct LiteralParser {
    const std::string& s;
    size_t pos = 0;

    explicit LiteralParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void die(const std::string& why) {
        fail(errk::ParseError, why + " at position " + std::to_string(pos) + " in '" + s + "'");
    }
    Integer integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) die("expected integer");
        return Integer(s.substr(start, pos - start));
    }
    long signed_int() {
        bool neg = accept('-');
        if (!neg) accept('+');
        Integer v = integer();
        if (v > 1000000000) die("exponent too large");
        long out = v.convert_to<long>();
        return neg ? -out : out;
    }
};

} // namespace

Cyc Cyc::parse(unsigned order, const std::string& text) {
    if (order == 0) fail(errk::InvalidParams, "order 0");
    LiteralParser p(text);
    Cyc total = Cyc::zeta(order, 0) - Cyc::zeta(order, 0); // zero at the requested order
    bool any = false;
    while (!p.eof()) {
        bool neg = false;
        if (any || p.peek() == '+' || p.peek() == '-') {
            if (p.accept('-'))
                neg = true;
            else if (!p.accept('+') && any)
                p.die("expected '+' or '-' between terms");
        }
        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
            Integer num = p.integer();
            if (p.accept('/')) {
                Integer den = p.integer();
                if (den == 0) p.die("zero denominator");
                coef = Rational(num, den);
            } else {
                coef = Rational(num);
            }
            have_coef = true;
        }
        long power = 0;
        bool have_z = false;
        if (have_coef ? p.accept('*') : false) {
            if (!p.accept('z')) p.die("expected 'z' after '*'");
            have_z = true;
        } else if (!have_coef) {
            if (!p.accept('z')) p.die("expected coefficient or 'z'");
            have_z = true;
        }
        if (have_z) {
            power = p.accept('^') ? p.signed_int() : 1;
        }
        if (!have_coef && !have_z) p.die("empty term");
        Cyc term = have_z ? Cyc::zeta(order, power) : Cyc::zeta(order, 0);
        term = Cyc(coef) * term;
        total = neg ? total - term : total + term;
        any = true;
    }
    if (!any) fail(errk::ParseError, "empty literal");
    return total.lifted_to(order);
}

std::optional<std::pair<Rational, unsigned>> as_rational_monomial(const Cyc& value) {
    if (value.is_zero()) return std::nullopt;
    unsigned n = value.order();
    for (unsigned k = 0; k < n; ++k) {
        Cyc q = value * Cyc::zeta(n, -static_cast<long>(k));
        if (q.is_rational()) return std::make_pair(q.rational_value(), k);
    }
    return std::nullopt;
}

std::optional<Cyc> monomial_sqrt(const Cyc& value) {
    if (value.is_zero()) return Cyc();
    unsigned n = value.order();
    auto mono = as_rational_monomial(value);
    if (!mono) return std::nullopt;
    // Scan the equivalent monomial forms q*z^k (sign flips shift k by n/2).
    for (int variant = 0; variant < 2; ++variant) {
        Rational q = mono->first;
        unsigned k = mono->second;
        if (variant == 1) {
            if (n % 2 != 0) break;
            q = -q;
            k = (k + n / 2) % n;
        }
        if (k % 2 != 0 && n % 2 != 0) k += n; // odd order: shift once, k+n is even
        if (k % 2 != 0) continue;
        unsigned half = k / 2;
        if (q > 0) {
            if (auto r = rational_sqrt(q)) return Cyc(*r) * Cyc::zeta(n, half);
        } else if (n % 4 == 0) {
            if (auto r = rational_sqrt(-q))
                return Cyc(*r) * Cyc::zeta(n, static_cast<long>(half) + n / 4);
        }
    }
    return std::nullopt;
}

} // namespace hopfrep
