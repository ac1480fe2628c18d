#include "hopfrep/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hopfrep/error.hpp"

namespace hopfrep {

RestrictionSpec make_restriction(const DihedralParams& params, std::vector<IrrepLabel> labels,
                                 unsigned cap) {
    if (labels.empty()) fail(errk::InvalidParams, "restriction needs at least one block");
    std::sort(labels.begin(), labels.end());
    unsigned dim = 0;
    for (const auto& label : labels) {
        validate_label(params, label);
        dim += label_degree(label);
    }
    if (dim > cap)
        fail(errk::CapExceeded, "restriction dimension " + std::to_string(dim) +
                                    " exceeds cap " + std::to_string(cap));
    RestrictionSpec spec;
    spec.labels = std::move(labels);
    spec.dim = dim;
    bool first = true;
    for (size_t b = 0; b < spec.labels.size(); ++b) {
        Mat g = irrep_matrix(params, spec.labels[b], 1, 0);
        Mat h = irrep_matrix(params, spec.labels[b], 0, 1);
        spec.G = first ? g : direct_sum(spec.G, g);
        spec.H = first ? h : direct_sum(spec.H, h);
        first = false;
        for (unsigned r = 0; r < label_degree(spec.labels[b]); ++r)
            spec.block_of_row.push_back(static_cast<unsigned>(b));
    }
    return spec;
}

RestrictionSpec parse_spec(const DihedralParams& params, const std::string& text, unsigned cap) {
    std::vector<IrrepLabel> labels;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t plus = text.find('+', pos);
        std::string token = text.substr(pos, plus == std::string::npos ? plus : plus - pos);
        size_t begin = token.find_first_not_of(" \t");
        size_t end = token.find_last_not_of(" \t");
        if (begin == std::string::npos)
            fail(errk::ParseError, "empty block in restriction spec '" + text + "'");
        labels.push_back(label_from_string(token.substr(begin, end - begin + 1)));
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return make_restriction(params, std::move(labels), cap);
}

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::NoSolution: return "NoSolution";
        case SolveStatus::Finite: return "Finite";
        case SolveStatus::Parametrized: return "Parametrized";
        default: return "Undecided";
    }
}

namespace {

using VarId = unsigned; // r * dim + c of the unknown X entry

std::string var_name(VarId v, unsigned dim) {
    return "x[" + std::to_string(v / dim) + "," + std::to_string(v % dim) + "]";
}

std::string cyc_lit(const Cyc& c) {
    std::string s = c.to_string();
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

// coeff * x_u * x_v, a single quadratic monomial of a source equation.
struct QuadTerm {
    Cyc coeff;
    VarId u, v;
};

struct SourceEq {
    std::string name;
    std::vector<QuadTerm> terms;
    Cyc constant; // sum(terms) + constant = 0
};

// A Laurent monomial in the current free variables (zero iff coeff is zero).
struct Value {
    Cyc coeff;
    std::map<VarId, int> exps;
};

Value zero_value() { return Value{Cyc(), {}}; }

// A term of a reduced equation: coeff * prod(unresolved^e) * prod(free^e).
struct Term {
    Cyc coeff;
    std::map<VarId, int> unres;
    std::map<VarId, int> fre;
};

struct Reduced {
    const SourceEq* src = nullptr;
    std::vector<Term> terms;
};

struct Branch {
    std::map<VarId, Value> assign;
    std::set<VarId> free_nonzero;
    std::set<VarId> free_maybe;
    std::set<VarId> unres_nonzero; // unresolved but known nonzero
    std::vector<std::string> sig;
};

std::string sig_text(const Branch& b) {
    if (b.sig.empty()) return "root";
    std::string out;
    for (size_t k = 0; k < b.sig.size(); ++k) {
        if (k) out += " | ";
        out += b.sig[k];
    }
    return out;
}

std::string render_term(const Term& t, unsigned dim) {
    std::string out = cyc_lit(t.coeff);
    for (const auto& [v, e] : t.unres) {
        out += "*" + var_name(v, dim);
        if (e != 1) out += "^" + std::to_string(e);
    }
    for (const auto& [v, e] : t.fre) {
        out += "*" + var_name(v, dim);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string render_value(const Value& v, unsigned dim) {
    if (v.coeff.is_zero()) return "0";
    std::string out = cyc_lit(v.coeff);
    for (const auto& [f, e] : v.exps) {
        out += "*" + var_name(f, dim);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

class Solver {
public:
    Solver(InstancePtr inst, const RestrictionSpec& spec, std::optional<Cyc> z0)
        : inst_(std::move(inst)), spec_(spec), dim_(spec.dim) {
        if (z0) {
            four_roots(*inst_, *z0); // exact witness check
            root_witness_ = *z0;
        } else if (auto b = builtin_root(*inst_)) {
            root_witness_ = *b;
        }
        find_variables();
        build_equations();
    }

    SolutionFamily run(std::uint64_t seed);

private:
    // ---- setup --------------------------------------------------------

    void find_variables() {
        for (unsigned r = 0; r < dim_; ++r)
            for (unsigned c = 0; c < dim_; ++c)
                if (r != c && !spec_.H.at(r, c).is_zero())
                    fail(errk::InternalError, "restriction H must be diagonal");
        for (unsigned r = 0; r < dim_; ++r)
            for (unsigned c = 0; c < dim_; ++c)
                if ((spec_.H.at(r, r) + spec_.H.at(c, c)).is_zero())
                    vars_.push_back(r * dim_ + c);
    }

    bool is_var(unsigned r, unsigned c) const {
        return std::binary_search(vars_.begin(), vars_.end(), r * dim_ + c);
    }

    void build_equations() {
        const unsigned m = inst_->m();
        Mat h2i = spec_.H.pow((2 * inst_->i) % m);
        // Y(r,c) = sum G(r,a) x_{ab} G(b,c): a monomial list since G is.
        std::vector<std::vector<std::pair<Cyc, VarId>>> y(dim_ * dim_);
        for (unsigned a = 0; a < dim_; ++a)
            for (unsigned b = 0; b < dim_; ++b) {
                if (!is_var(a, b)) continue;
                for (unsigned r = 0; r < dim_; ++r) {
                    if (spec_.G.at(r, a).is_zero()) continue;
                    for (unsigned c = 0; c < dim_; ++c) {
                        Cyc coeff = spec_.G.at(r, a) * spec_.G.at(b, c);
                        if (!coeff.is_zero()) y[r * dim_ + c].push_back({coeff, a * dim_ + b});
                    }
                }
            }

        for (unsigned r = 0; r < dim_; ++r)
            for (unsigned c = 0; c < dim_; ++c) {
                SourceEq eq;
                eq.name = "(X^2 - lambda(I - H^{2i}))[" + std::to_string(r) + "," +
                          std::to_string(c) + "]";
                for (unsigned k = 0; k < dim_; ++k)
                    if (is_var(r, k) && is_var(k, c))
                        eq.terms.push_back({Cyc(Rational(1)), r * dim_ + k, k * dim_ + c});
                Cyc rhs = r == c ? inst_->lambda * (Cyc(Rational(1)) - h2i.at(r, c))
                                 : -(inst_->lambda * h2i.at(r, c));
                eq.constant = -rhs;
                if (!eq.terms.empty() || !eq.constant.is_zero()) eqs_.push_back(std::move(eq));
            }

        for (unsigned r = 0; r < dim_; ++r)
            for (unsigned c = 0; c < dim_; ++c) {
                SourceEq eq;
                eq.name = "(XY + YX)[" + std::to_string(r) + "," + std::to_string(c) + "]";
                for (unsigned k = 0; k < dim_; ++k) {
                    if (is_var(r, k))
                        for (const auto& [coeff, w] : y[k * dim_ + c])
                            eq.terms.push_back({coeff, r * dim_ + k, w});
                    if (is_var(k, c))
                        for (const auto& [coeff, w] : y[r * dim_ + k])
                            eq.terms.push_back({coeff, w, k * dim_ + c});
                }
                eq.constant = Cyc();
                if (!eq.terms.empty()) eqs_.push_back(std::move(eq));
            }
    }

    // ---- reduction ----------------------------------------------------

    enum class Flavor { Unresolved, Free, Assigned };

    Flavor flavor(const Branch& b, VarId v) const {
        if (b.assign.count(v)) return Flavor::Assigned;
        if (b.free_nonzero.count(v) || b.free_maybe.count(v)) return Flavor::Free;
        return Flavor::Unresolved;
    }

    // Multiply a variable into a term under the branch's assignments;
    // false when the term dies (a factor is exactly zero).
    bool absorb(const Branch& b, VarId v, Term& t) const {
        switch (flavor(b, v)) {
            case Flavor::Assigned: {
                const Value& val = b.assign.at(v);
                if (val.coeff.is_zero()) return false;
                t.coeff = t.coeff * val.coeff;
                for (const auto& [f, e] : val.exps)
                    if ((t.fre[f] += e) == 0) t.fre.erase(f);
                return true;
            }
            case Flavor::Free:
                if ((t.fre[v] += 1) == 0) t.fre.erase(v);
                return true;
            default:
                if ((t.unres[v] += 1) == 0) t.unres.erase(v);
                return true;
        }
    }

    Reduced reduce(const Branch& b, const SourceEq& src) const {
        std::map<std::pair<std::map<VarId, int>, std::map<VarId, int>>, Cyc> acc;
        for (const QuadTerm& qt : src.terms) {
            Term t{qt.coeff, {}, {}};
            if (!absorb(b, qt.u, t) || !absorb(b, qt.v, t)) continue;
            acc[{t.unres, t.fre}] += t.coeff;
        }
        if (!src.constant.is_zero()) acc[{{}, {}}] += src.constant;

        Reduced red;
        red.src = &src;
        for (const auto& [key, coeff] : acc)
            if (!coeff.is_zero()) red.terms.push_back({coeff, key.first, key.second});

        // Strip variables known to be nonzero: divide by the common power
        // (min > 0) or clear denominators (min < 0); both are exact.
        auto strip = [&red](const std::set<VarId>& nonzero, bool unres_slot) {
            std::set<VarId> seen;
            for (const Term& t : red.terms)
                for (const auto& [v, e] : (unres_slot ? t.unres : t.fre))
                    if (nonzero.count(v)) seen.insert(v);
            for (VarId v : seen) {
                int mn = 0;
                bool first = true;
                for (const Term& t : red.terms) {
                    const auto& mp = unres_slot ? t.unres : t.fre;
                    auto it = mp.find(v);
                    int e = it == mp.end() ? 0 : it->second;
                    mn = first ? e : std::min(mn, e);
                    first = false;
                }
                if (mn == 0) continue;
                for (Term& t : red.terms) {
                    auto& mp = unres_slot ? t.unres : t.fre;
                    int e = (mp.count(v) ? mp[v] : 0) - mn;
                    if (e == 0)
                        mp.erase(v);
                    else
                        mp[v] = e;
                }
            }
        };
        if (!red.terms.empty()) {
            strip(b.unres_nonzero, true);
            strip(b.free_nonzero, false);
        }
        return red;
    }

    // ---- roots --------------------------------------------------------

    static std::optional<Integer> integer_root(const Integer& value, unsigned e) {
        if (value < 0) return std::nullopt;
        if (value == 0) return Integer(0);
        Integer lo = 1, hi = 1;
        while (boost::multiprecision::pow(hi, e) < value) hi <<= 1;
        while (lo < hi) {
            Integer mid = (lo + hi) / 2;
            if (boost::multiprecision::pow(mid, e) < value)
                lo = mid + 1;
            else
                hi = mid;
        }
        return boost::multiprecision::pow(lo, e) == value ? std::optional<Integer>(lo)
                                                          : std::nullopt;
    }

    static std::optional<Rational> rational_root(const Rational& q, unsigned e) {
        bool negate = q < 0;
        if (negate && e % 2 == 0) return std::nullopt;
        Rational mag = negate ? Rational(-q) : q;
        auto num = integer_root(rat_num(mag), e);
        auto den = integer_root(rat_den(mag), e);
        if (!num || !den) return std::nullopt;
        Rational root(*num, *den);
        return negate ? Rational(-root) : root;
    }

    // One e-th root of c when c is a rational monomial q * zeta^k with an
    // exactly rootable magnitude; the exponent may shift by multiples of N.
    static std::optional<Cyc> monomial_eroot(const Cyc& c, unsigned e) {
        auto mono = as_rational_monomial(c);
        if (!mono) return std::nullopt;
        unsigned order = c.order();
        if (order % 2 != 0) return std::nullopt; // instance orders are multiples of 4
        auto [q, k] = *mono;
        std::vector<std::pair<Rational, unsigned>> variants{
            {q, k}, {Rational(-q), (k + order / 2) % order}};
        for (const auto& [qv, kv] : variants) {
            auto s = rational_root(qv, e);
            if (!s) continue;
            for (unsigned j = 0; j < e; ++j) {
                unsigned long shifted = kv + static_cast<unsigned long>(j) * order;
                if (shifted % e != 0) continue;
                Cyc u0 = Cyc(*s) * Cyc::zeta(order, static_cast<long>((shifted / e) % order));
                if (u0.pow(static_cast<long>(e)) == c) return u0;
            }
        }
        return std::nullopt;
    }

    // All e-th roots of c inside the field, or empty when no seed root is
    // found (not a proof that none exists).
    std::vector<Cyc> root_candidates(const Cyc& c, unsigned e) const {
        std::optional<Cyc> u0 = monomial_eroot(c, e);
        if (!u0 && e == 4 && root_witness_) {
            Cyc target = Cyc(Rational(-4)) * inst_->lambda * inst_->lambda;
            if (c == target) u0 = *root_witness_;
        }
        if (!u0) return {};
        unsigned order = inst_->order();
        unsigned g = std::gcd(e, order);
        std::vector<Cyc> roots;
        for (unsigned j = 0; j < g; ++j) {
            Cyc r = *u0 * Cyc::zeta(order, static_cast<long>(j) * (order / g));
            if (r.pow(static_cast<long>(e)) != c)
                fail(errk::InternalError, "root candidate failed verification");
            roots.push_back(std::move(r));
        }
        return roots;
    }

    // ---- propagation actions -----------------------------------------

    struct Outcome {
        enum Kind { Dead, Leaf, Split } kind;
        std::string certificate;          // Dead
        std::vector<Reduced> residual;    // Leaf
        std::vector<Branch> children;     // Split
    };

    void rebind_free(Branch& b, VarId f, const Value& val) const {
        for (auto& [u, existing] : b.assign) {
            auto it = existing.exps.find(f);
            if (it == existing.exps.end()) continue;
            int e = it->second;
            existing.exps.erase(it);
            if (val.coeff.is_zero()) {
                if (e < 0) fail(errk::InternalError, "zero bound to an inverted variable");
                existing = zero_value();
                continue;
            }
            existing.coeff = existing.coeff * val.coeff.pow(e);
            for (const auto& [g, ge] : val.exps)
                if ((existing.exps[g] += ge * e) == 0) existing.exps.erase(g);
        }
        b.free_nonzero.erase(f);
        b.free_maybe.erase(f);
        b.assign[f] = val;
    }

    void assign_var(Branch& b, VarId v, const Value& val) const {
        b.unres_nonzero.erase(v);
        b.assign[v] = val;
    }

    // Branch into w := 0 versus w != 0 for a maybe-zero variable.
    std::vector<Branch> promote_split(const Branch& b, VarId w, bool w_is_free) const {
        Branch zero = b, nonzero = b;
        zero.sig.push_back(var_name(w, dim_) + ":=0");
        if (w_is_free)
            rebind_free(zero, w, zero_value());
        else
            assign_var(zero, w, zero_value());
        nonzero.sig.push_back(var_name(w, dim_) + "!=0");
        if (w_is_free) {
            nonzero.free_maybe.erase(w);
            nonzero.free_nonzero.insert(w);
        } else {
            nonzero.unres_nonzero.insert(w);
        }
        return {std::move(zero), std::move(nonzero)};
    }

    std::optional<VarId> first_maybe_free(const Branch& b, const Term& t) const {
        for (const auto& [f, e] : t.fre)
            if (e > 0 && b.free_maybe.count(f)) return f;
        return std::nullopt;
    }

    // Handles an equation of exactly two terms, one carrying unresolved
    // variables and one without.  nullopt = not applicable (stay residual).
    std::optional<Outcome> solve_single(const Branch& b, const Term& with,
                                        const Term& without) const {
        // The  without  side must be provably nonzero before it can force
        // anything; a maybe-zero factor splits the branch.
        if (auto w = first_maybe_free(b, without)) return Outcome{Outcome::Split, {}, {}, promote_split(b, *w, true)};

        Branch next = b;
        // without != 0 forces every factor of  with  to be nonzero.
        for (const auto& [f, e] : with.fre)
            if (e > 0 && next.free_maybe.count(f)) {
                next.free_maybe.erase(f);
                next.free_nonzero.insert(f);
            }

        // Pick the unresolved variable to solve: highest index with
        // exponent 1; lower ones become free (nonzero).
        VarId target = 0;
        bool found = false;
        for (const auto& [u, e] : with.unres)
            if (e == 1) {
                target = u;
                found = true;
            }
        if (!found) {
            // u^e = const * monomial: branch over the e-th roots.
            if (with.unres.size() != 1) return std::nullopt;
            auto [u, e] = *with.unres.begin();
            Value rhs;
            rhs.coeff = -(without.coeff / with.coeff);
            rhs.exps = without.fre;
            for (const auto& [f, fe] : with.fre)
                if ((rhs.exps[f] -= fe) == 0) rhs.exps.erase(f);
            for (const auto& [f, fe] : rhs.exps)
                if (fe % e != 0) return std::nullopt;
            auto roots = root_candidates(rhs.coeff, static_cast<unsigned>(e));
            if (roots.empty()) return std::nullopt;
            std::vector<Branch> children;
            for (const Cyc& r : roots) {
                Branch child = next;
                Value val{r, {}};
                for (const auto& [f, fe] : rhs.exps) val.exps[f] = fe / e;
                child.sig.push_back(var_name(u, dim_) + ":=" + render_value(val, dim_));
                assign_var(child, u, val);
                children.push_back(std::move(child));
            }
            return Outcome{Outcome::Split, {}, {}, std::move(children)};
        }

        Value val;
        val.coeff = -(without.coeff / with.coeff);
        val.exps = without.fre;
        for (const auto& [f, e] : with.fre)
            if ((val.exps[f] -= e) == 0) val.exps.erase(f);
        for (const auto& [u, e] : with.unres) {
            if (u == target) continue;
            next.free_nonzero.insert(u);
            next.unres_nonzero.erase(u);
            next.sig.push_back(var_name(u, dim_) + " free");
            if ((val.exps[u] -= e) == 0) val.exps.erase(u);
        }
        assign_var(next, target, val);
        return Outcome{Outcome::Split, {}, {}, {std::move(next)}};
    }

    // Two pure-free terms: a binomial relation among the free variables.
    std::optional<Outcome> solve_free_binomial(const Branch& b, const Term& t1,
                                               const Term& t2) const {
        std::map<VarId, int> diff = t1.fre;
        for (const auto& [f, e] : t2.fre)
            if ((diff[f] -= e) == 0) diff.erase(f);
        if (diff.empty()) return std::nullopt; // merged terms cannot reach here
        auto [f, e_signed] = *diff.begin();    // lowest index
        const Term& hi = e_signed > 0 ? t1 : t2;
        const Term& lo = e_signed > 0 ? t2 : t1;
        int e = e_signed > 0 ? e_signed : -e_signed;

        Value rhs;
        rhs.coeff = -(lo.coeff / hi.coeff);
        rhs.exps = lo.fre;
        for (const auto& [g, ge] : hi.fre)
            if ((rhs.exps[g] -= ge) == 0) rhs.exps.erase(g);
        rhs.exps[f] += e;
        if (rhs.exps[f] == 0) rhs.exps.erase(f); // f eliminated by construction
        for (const auto& [g, ge] : rhs.exps) {
            if (ge % e != 0) return std::nullopt;
            if (ge / e < 0 && b.free_maybe.count(g))
                return Outcome{Outcome::Split, {}, {}, promote_split(b, g, true)};
        }
        auto roots = e == 1 ? std::vector<Cyc>{rhs.coeff}
                            : root_candidates(rhs.coeff, static_cast<unsigned>(e));
        if (roots.empty()) return std::nullopt;

        bool f_nonzero = b.free_nonzero.count(f) > 0;
        std::vector<Branch> children;
        for (const Cyc& r : roots) {
            Branch child = b;
            Value val{r, {}};
            for (const auto& [g, ge] : rhs.exps) val.exps[g] = ge / e;
            // A nonzero-flavored variable forces its own monomial nonzero.
            if (f_nonzero)
                for (const auto& [g, ge] : val.exps)
                    if (child.free_maybe.count(g)) {
                        child.free_maybe.erase(g);
                        child.free_nonzero.insert(g);
                    }
            child.sig.push_back(var_name(f, dim_) + ":=" + render_value(val, dim_));
            rebind_free(child, f, val);
            children.push_back(std::move(child));
        }
        return Outcome{Outcome::Split, {}, {}, std::move(children)};
    }

    std::optional<Outcome> act_on(const Branch& b, const Reduced& eq) const {
        const auto& terms = eq.terms;
        if (terms.size() == 1) {
            const Term& t = terms[0];
            // All nonzero-flavored factors are stripped, so every remaining
            // variable is zero-capable and one of them must vanish.
            std::vector<std::pair<VarId, bool>> candidates; // (var, is_free)
            for (const auto& [u, e] : t.unres) candidates.push_back({u, false});
            for (const auto& [f, e] : t.fre)
                if (b.free_maybe.count(f)) candidates.push_back({f, true});
            if (candidates.empty()) return std::nullopt; // constant: handled as contradiction
            std::sort(candidates.begin(), candidates.end());
            if (candidates.size() == 1) {
                Branch next = b;
                auto [v, is_free] = candidates[0];
                next.sig.push_back(var_name(v, dim_) + ":=0 (forced)");
                if (is_free)
                    rebind_free(next, v, zero_value());
                else
                    assign_var(next, v, zero_value());
                return Outcome{Outcome::Split, {}, {}, {std::move(next)}};
            }
            std::vector<Branch> children;
            for (auto [v, is_free] : candidates) {
                Branch child = b;
                child.sig.push_back(var_name(v, dim_) + ":=0");
                if (is_free)
                    rebind_free(child, v, zero_value());
                else
                    assign_var(child, v, zero_value());
                children.push_back(std::move(child));
            }
            return Outcome{Outcome::Split, {}, {}, std::move(children)};
        }
        if (terms.size() != 2) return std::nullopt;

        bool u1 = !terms[0].unres.empty(), u2 = !terms[1].unres.empty();
        if (!u1 && !u2) return solve_free_binomial(b, terms[0], terms[1]);
        if (u1 != u2) return solve_single(b, u1 ? terms[0] : terms[1], u1 ? terms[1] : terms[0]);

        // Both terms carry unresolved variables.  A variable shared by both
        // can be factored after a zero/nonzero split; otherwise declare the
        // second term's variables as parameters and retry as solve_single.
        for (const auto& [v, e] : terms[0].unres)
            if (terms[1].unres.count(v))
                return Outcome{Outcome::Split, {}, {}, promote_split(b, v, false)};
        Branch next = b;
        for (const auto& [v, e] : terms[1].unres) {
            if (next.unres_nonzero.erase(v))
                next.free_nonzero.insert(v);
            else
                next.free_maybe.insert(v);
            next.sig.push_back(var_name(v, dim_) + " free (unconstrained)");
        }
        return Outcome{Outcome::Split, {}, {}, {std::move(next)}};
    }

    Outcome step(const Branch& b) const {
        std::vector<Reduced> live;
        for (const SourceEq& src : eqs_) {
            Reduced red = reduce(b, src);
            if (red.terms.empty()) continue;
            if (red.terms.size() == 1 && red.terms[0].unres.empty() && red.terms[0].fre.empty()) {
                std::string cert =
                    red.src->name + ": 0 = " + cyc_lit(-red.terms[0].coeff);
                return Outcome{Outcome::Dead, cert, {}, {}};
            }
            live.push_back(std::move(red));
        }
        for (const Reduced& eq : live)
            if (auto outcome = act_on(b, eq)) return *outcome;
        return Outcome{Outcome::Leaf, {}, std::move(live), {}};
    }

    // ---- instantiation -------------------------------------------------

    struct Dsu {
        std::vector<unsigned> parent;
        explicit Dsu(size_t k) : parent(k) {
            for (size_t j = 0; j < k; ++j) parent[j] = static_cast<unsigned>(j);
        }
        unsigned find(unsigned a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
        bool unite(unsigned a, unsigned b) {
            a = find(a);
            b = find(b);
            if (a == b) return false;
            parent[b] = a;
            return true;
        }
    };

    Cyc eval_value(const Value& v, const std::map<VarId, Cyc>& fvals) const {
        if (v.coeff.is_zero()) return Cyc();
        Cyc acc = v.coeff;
        for (const auto& [f, e] : v.exps) {
            const Cyc& fv = fvals.at(f);
            if (fv.is_zero()) {
                if (e < 0) fail(errk::InternalError, "zero sample for an inverted variable");
                return Cyc();
            }
            acc = acc * fv.pow(e);
        }
        return acc;
    }

    // Turns a completed branch into concrete representations.  exact means
    // the instantiations exhaust the branch up to the block-rescaling gauge.
    void instantiate(const Branch& b, SolutionFamily& family, bool& exact) {
        Branch leaf = b;
        for (VarId v : vars_)
            if (flavor(leaf, v) == Flavor::Unresolved) {
                if (leaf.unres_nonzero.erase(v))
                    leaf.free_nonzero.insert(v);
                else
                    leaf.free_maybe.insert(v);
            }

        // Gauge: conjugating by block scalars rescales x[r,c] by c_br/c_bc.
        // Nonzero free variables whose block edges form a forest can be
        // normalized to 1 exactly; the rest are genuine parameters.
        Dsu dsu(spec_.labels.size());
        std::vector<VarId> normalized, sampled;
        for (VarId f : leaf.free_nonzero) {
            unsigned br = spec_.block_of_row[f / dim_];
            unsigned bc = spec_.block_of_row[f % dim_];
            if (br != bc && dsu.unite(br, bc))
                normalized.push_back(f);
            else
                sampled.push_back(f);
        }
        std::vector<VarId> maybe(leaf.free_maybe.begin(), leaf.free_maybe.end());

        exact = sampled.empty() && maybe.empty();
        std::string base_sig = sig_text(leaf);
        if (!normalized.empty()) {
            std::string note = "gauge-normalized to 1:";
            for (VarId f : normalized) note += " " + var_name(f, dim_);
            family.notes.push_back("branch [" + base_sig + "]: " + note);
        }
        if (!exact) {
            std::string fv = "branch [" + base_sig + "]:";
            for (VarId f : sampled) fv += " " + var_name(f, dim_) + " (nonzero)";
            for (VarId f : maybe) fv += " " + var_name(f, dim_) + " (may vanish)";
            family.free_vars.push_back(fv);
        }

        size_t combos = maybe.size() > 6 ? 64 : (size_t{1} << maybe.size());
        if (maybe.size() > 6)
            family.notes.push_back("branch [" + base_sig +
                                   "]: sampling truncated to the first 6 parameters");
        for (size_t mask = 0; mask < combos; ++mask) {
            std::map<VarId, Cyc> fvals;
            for (VarId f : normalized) fvals[f] = Cyc(Rational(1));
            for (VarId f : sampled) fvals[f] = Cyc(Rational(1));
            std::string combo_sig;
            for (size_t j = 0; j < maybe.size(); ++j) {
                bool on = j < 6 && (mask >> j) & 1;
                fvals[maybe[j]] = Cyc(Rational(on ? 1 : 0));
                combo_sig += (combo_sig.empty() ? "" : ", ") + var_name(maybe[j], dim_) +
                             (on ? "=1" : "=0");
            }

            Mat x(dim_, dim_);
            for (VarId v : vars_) {
                Cyc val;
                if (leaf.assign.count(v))
                    val = eval_value(leaf.assign.at(v), fvals);
                else
                    val = fvals.at(v);
                x.at(v / dim_, v % dim_) = val;
            }
            bool dup = false;
            for (const auto& sol : family.solutions)
                if (sol.rep.X == x) {
                    dup = true;
                    break;
                }
            if (dup) continue;

            Mat yy = spec_.G * x * spec_.G;
            Representation rep = make_representation(inst_, spec_.G, spec_.H, x, yy);
            if (!check_relations(rep).empty())
                fail(errk::InternalError, "solver emitted an invalid representation");
            std::string label = base_sig;
            if (!combo_sig.empty()) label += " | sample {" + combo_sig + "}";
            family.solutions.push_back({label, std::move(rep)});
        }
    }

    // ---- shared state ---------------------------------------------------

    InstancePtr inst_;
    const RestrictionSpec& spec_;
    unsigned dim_;
    std::optional<Cyc> root_witness_;
    std::vector<VarId> vars_;
    std::vector<SourceEq> eqs_;
};

SolutionFamily Solver::run(std::uint64_t seed) {
    SolutionFamily family;
    std::vector<Branch> stack{Branch{}};
    unsigned budget = 1 << 10;
    bool any_exact = false, any_sampled = false, any_residual = false;

    while (!stack.empty()) {
        Branch b = std::move(stack.back());
        stack.pop_back();
        for (;;) {
            Outcome out = step(b);
            if (out.kind == Outcome::Dead) {
                family.certificates.push_back("branch [" + sig_text(b) + "]: " +
                                              out.certificate);
                break;
            }
            if (out.kind == Outcome::Leaf) {
                if (!out.residual.empty()) {
                    any_residual = true;
                    for (const Reduced& eq : out.residual) {
                        std::string text = "branch [" + sig_text(b) + "]: " + eq.src->name + ": ";
                        for (size_t j = 0; j < eq.terms.size(); ++j) {
                            if (j) text += " + ";
                            text += render_term(eq.terms[j], dim_);
                        }
                        family.residual.push_back(text + " = 0");
                    }
                    break;
                }
                bool exact = false;
                instantiate(b, family, exact);
                (exact ? any_exact : any_sampled) = true;
                break;
            }
            if (out.children.size() == 1) {
                b = std::move(out.children[0]);
                continue;
            }
            if (out.children.size() > budget) fail(errk::CapExceeded, "branch budget exceeded");
            budget -= static_cast<unsigned>(out.children.size());
            for (auto it = out.children.rbegin(); it != out.children.rend(); ++it)
                stack.push_back(std::move(*it));
            break;
        }
    }

    std::stable_sort(family.solutions.begin(), family.solutions.end(),
                     [](const SolverSolution& a, const SolverSolution& b) {
                         return a.branch < b.branch;
                     });

    if (any_residual)
        family.status = SolveStatus::Undecided;
    else if (any_sampled)
        family.status = SolveStatus::Parametrized;
    else if (any_exact)
        family.status = SolveStatus::Finite;
    else
        family.status = SolveStatus::NoSolution;

    // Equivalence classes over the concrete solutions.  Pairwise testing is
    // only meaningful when the list is complete; for sampled or undecided
    // families each solution stays in its own class.
    size_t count = family.solutions.size();
    if (count > 0 && family.status != SolveStatus::Finite) {
        for (size_t a = 0; a < count; ++a) family.classes.push_back({a});
        family.notes.push_back("classes are singletons: the solution list is not complete");
    } else if (count > 0) {
        Dsu dsu(count);
        for (size_t a = 0; a < count; ++a)
            for (size_t b2 = a + 1; b2 < count; ++b2) {
                if (dsu.find(static_cast<unsigned>(a)) == dsu.find(static_cast<unsigned>(b2)))
                    continue;
                switch (equivalence_verdict(family.solutions[a].rep, family.solutions[b2].rep, seed)) {
                    case Equivalence::Yes:
                        dsu.unite(static_cast<unsigned>(a), static_cast<unsigned>(b2));
                        break;
                    case Equivalence::Undecided:
                        family.notes.push_back("equivalence undecided between solutions " +
                                               std::to_string(a) + " and " + std::to_string(b2));
                        break;
                    default: break;
                }
            }
        std::map<unsigned, std::vector<size_t>> buckets;
        for (size_t a = 0; a < count; ++a)
            buckets[dsu.find(static_cast<unsigned>(a))].push_back(a);
        for (auto& [root, members] : buckets) family.classes.push_back(std::move(members));
        std::sort(family.classes.begin(), family.classes.end());
    }
    return family;
}

} // namespace

SolutionFamily solve(InstancePtr inst, const RestrictionSpec& spec, std::optional<Cyc> z0,
                     std::uint64_t seed) {
    for (const auto& label : spec.labels) validate_label(inst->params, label);
    Solver solver(std::move(inst), spec, std::move(z0));
    return solver.run(seed);
}

SolutionFamily probe_open_case(InstancePtr inst, const RestrictionSpec& spec,
                               std::optional<Cyc> z0, std::uint64_t seed) {
    unsigned t = inst->params.t();
    size_t r = spec.labels.size();
    bool all_rho = true, all_t = true, all_generic = true;
    for (const auto& label : spec.labels) {
        if (label.kind != IrrepLabel::Kind::Rho) {
            all_rho = false;
            break;
        }
        if (label.l != t) all_t = false;
        if (label.l == t ||
            inst->params.omega.pow(2L * label.l * inst->i) == Cyc(Rational(1)))
            all_generic = false;
    }
    bool open = all_rho && ((all_t && r >= 2 && r <= 4) || (all_generic && r == 4));
    if (!open)
        fail(errk::NotAnOpenCase,
             "restriction does not match an open configuration (rho(t) x 2..4, or four generic "
             "rho blocks)");

    SolutionFamily family = solve(std::move(inst), spec, std::move(z0), seed);
    family.exploratory = true;
    family.notes.insert(family.notes.begin(),
                        "NO GROUND TRUTH: open configuration; exploratory output, "
                        "irreducibility reported via the Burnside criterion only");
    return family;
}

} // namespace hopfrep
