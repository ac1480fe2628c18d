#include "hopfrep/rep.hpp"

#include <random>

#include "hopfrep/error.hpp"

namespace hopfrep {

Representation make_representation(InstancePtr inst, Mat g, Mat h, Mat x, Mat y) {
    unsigned d = g.rows();
    for (const Mat* m : {&g, &h, &x, &y})
        if (!m->is_square() || m->rows() != d)
            fail(errk::DimensionMismatch, "generator matrices must be square of equal size");
    Representation rep;
    rep.inst = std::move(inst);
    rep.dim = d;
    rep.G = std::move(g);
    rep.H = std::move(h);
    rep.X = std::move(x);
    rep.Y = std::move(y);
    return rep;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!a.inst->same_instance(*b.inst)) fail(errk::InstanceMismatch, "direct sum across instances");
    return make_representation(a.inst, direct_sum(a.G, b.G), direct_sum(a.H, b.H),
                               direct_sum(a.X, b.X), direct_sum(a.Y, b.Y));
}

std::vector<Violation> check_relations(const Representation& rep) {
    const unsigned m = rep.inst->m();
    const Cyc& lambda = rep.inst->lambda;
    Mat eye = Mat::identity(rep.dim);
    unsigned two_i = (2 * rep.inst->i) % m;
    Mat h2i = rep.H.pow(two_i);
    Mat h2i_inv = rep.H.pow((m - two_i) % m);

    std::vector<std::pair<std::string, Mat>> diffs;
    diffs.emplace_back("G^2 = I", rep.G * rep.G - eye);
    diffs.emplace_back("H^m = I", rep.H.pow(m) - eye);
    diffs.emplace_back("GHG = H^{m-1}", rep.G * rep.H * rep.G - rep.H.pow(m - 1));
    diffs.emplace_back("GX = YG", rep.G * rep.X - rep.Y * rep.G);
    diffs.emplace_back("HX = -XH", rep.H * rep.X + rep.X * rep.H);
    diffs.emplace_back("HY = -YH", rep.H * rep.Y + rep.Y * rep.H);
    diffs.emplace_back("X^2 = lambda(I - H^{2i})", rep.X * rep.X - lambda * (eye - h2i));
    diffs.emplace_back("Y^2 = lambda(I - H^{-2i})", rep.Y * rep.Y - lambda * (eye - h2i_inv));
    diffs.emplace_back("XY = -YX", rep.X * rep.Y + rep.Y * rep.X);

    std::vector<Violation> out;
    for (const auto& [name, diff] : diffs) {
        for (unsigned r = 0; r < rep.dim; ++r) {
            bool found = false;
            for (unsigned c = 0; c < rep.dim; ++c)
                if (!diff.at(r, c).is_zero()) {
                    out.push_back(Violation{name, r, c});
                    found = true;
                    break;
                }
            if (found) break;
        }
    }
    return out;
}

Mat evaluate_word(const Representation& rep, const BasisWord& w) {
    Mat acc = w.a ? rep.G : Mat::identity(rep.dim);
    if (w.b) acc = acc * rep.H.pow(w.b % rep.inst->m());
    if (w.c) acc = acc * rep.X;
    if (w.d) acc = acc * rep.Y;
    return acc;
}

Mat evaluate(const Representation& rep, const AlgebraElement& elem) {
    if (!rep.inst->same_instance(*elem.instance()))
        fail(errk::InstanceMismatch, "evaluate across instances");
    Mat acc(rep.dim, rep.dim);
    for (const auto& [w, c] : elem.terms()) acc = acc + c * evaluate_word(rep, w);
    return acc;
}

std::map<BasisWord, Cyc> character(const Representation& rep) {
    const unsigned m = rep.inst->m();
    std::vector<Mat> h_pow{Mat::identity(rep.dim)};
    for (unsigned b = 1; b < m; ++b) h_pow.push_back(h_pow.back() * rep.H);
    Mat xy = rep.X * rep.Y;
    std::map<BasisWord, Cyc> out;
    for (const BasisWord& w : algebra_basis(*rep.inst)) {
        Mat tail = w.c ? (w.d ? xy : rep.X) : (w.d ? rep.Y : Mat::identity(rep.dim));
        Mat word = h_pow[w.b] * tail;
        if (w.a) word = rep.G * word;
        out.emplace(w, word.trace());
    }
    return out;
}

bool is_absolutely_irreducible(const Representation& rep) {
    return algebra_span_dim({rep.G, rep.H, rep.X, rep.Y}) == rep.dim * rep.dim;
}

namespace {

// Orthonormal-free helper: basis vectors of ker(M) restricted to a subspace
// given by basis columns E: solve (M * E) * c = 0 and map back through E.
std::vector<Vec> kernel_within(const Mat& m, const std::vector<Vec>& space) {
    if (space.empty()) return {};
    unsigned d = static_cast<unsigned>(space.front().size());
    unsigned k = static_cast<unsigned>(space.size());
    Mat cols(d, k);
    for (unsigned j = 0; j < k; ++j)
        for (unsigned r = 0; r < d; ++r) cols.at(r, j) = space[j][r];
    auto res = rref_rank_kernel(m * cols);
    std::vector<Vec> out;
    for (const auto& coeff : res.kernel) {
        Vec v(d, Cyc());
        for (unsigned j = 0; j < k; ++j)
            for (unsigned r = 0; r < d; ++r) v[r] += coeff[j] * space[j][r];
        out.push_back(std::move(v));
    }
    return out;
}

// The restriction of T to span(space) as a k x k matrix, when T maps the
// space into itself; nullopt otherwise.
std::optional<Mat> restriction_matrix(const Mat& t, const std::vector<Vec>& space) {
    unsigned k = static_cast<unsigned>(space.size());
    unsigned d = static_cast<unsigned>(space.front().size());
    RowSpan span(d);
    for (const auto& v : space) span.insert(v);
    // Solve space-coordinates of T*v_j by augmenting [basis | image].
    Mat coeffs(k, k);
    for (unsigned j = 0; j < k; ++j) {
        Vec img = mat_vec(t, space[j]);
        if (!span.contains(img)) return std::nullopt;
        // Express img over the reduced rows: peel off pivots greedily.
        Mat aug(d, k + 1);
        for (unsigned col = 0; col < k; ++col)
            for (unsigned r = 0; r < d; ++r) aug.at(r, col) = space[col][r];
        for (unsigned r = 0; r < d; ++r) aug.at(r, k) = img[r];
        auto res = rref_rank_kernel(aug);
        // Consistent by the contains() check; read the solution column.
        for (unsigned r = 0; r < res.rank; ++r) {
            unsigned lead = 0;
            while (lead < k && res.rref.at(r, lead).is_zero()) ++lead;
            if (lead < k) coeffs.at(lead, j) = res.rref.at(r, k);
        }
    }
    return coeffs;
}

std::vector<Vec> eigenline_candidates_2x2(const Mat& c, const std::vector<Vec>& space) {
    // Candidate eigenvalues of the 2x2 restriction: triangular reads them off
    // the diagonal; otherwise try an exactly-solvable discriminant.
    std::vector<Cyc> eigenvalues;
    if (c.at(1, 0).is_zero() || c.at(0, 1).is_zero()) {
        eigenvalues.push_back(c.at(0, 0));
        eigenvalues.push_back(c.at(1, 1));
    } else {
        Cyc tr = c.at(0, 0) + c.at(1, 1);
        Cyc det = c.at(0, 0) * c.at(1, 1) - c.at(0, 1) * c.at(1, 0);
        if (auto s = monomial_sqrt(tr * tr - Cyc(Rational(4)) * det)) {
            Cyc half(Rational(1, 2));
            eigenvalues.push_back(half * (tr + *s));
            eigenvalues.push_back(half * (tr - *s));
        }
    }
    std::vector<Vec> out;
    for (const auto& ev : eigenvalues) {
        Mat shifted = c - ev * Mat::identity(2);
        for (const auto& coeff : rref_rank_kernel(shifted).kernel) {
            Vec v(space.front().size(), Cyc());
            for (unsigned j = 0; j < 2; ++j)
                for (size_t r = 0; r < v.size(); ++r) v[r] += coeff[j] * space[j][r];
            out.push_back(std::move(v));
        }
    }
    return out;
}

} // namespace

std::optional<std::vector<Vec>> find_submodule_witness(const Representation& rep) {
    const unsigned d = rep.dim;
    const unsigned m = rep.inst->m();
    const unsigned order = rep.inst->order();
    std::vector<Mat> gens{rep.G, rep.H, rep.X, rep.Y};

    std::vector<std::vector<Vec>> eigenspaces;
    for (unsigned k = 0; k < m; ++k) {
        Cyc mu = Cyc::zeta(order, static_cast<long>(k) * (order / m));
        auto res = rref_rank_kernel(rep.H - mu * Mat::identity(d));
        if (!res.kernel.empty()) eigenspaces.push_back(res.kernel);
    }

    std::vector<Vec> candidates;
    auto add_all = [&candidates](const std::vector<Vec>& vs) {
        candidates.insert(candidates.end(), vs.begin(), vs.end());
    };
    for (const auto& space : eigenspaces) {
        add_all(space);
        if (space.size() < 2) continue;
        add_all(kernel_within(rep.X, space));
        add_all(kernel_within(rep.Y, space));
        if (space.size() == 2) {
            for (const Mat& word : {rep.X * rep.Y, rep.Y * rep.X, rep.G, rep.G * rep.X * rep.Y}) {
                if (auto c = restriction_matrix(word, space))
                    add_all(eigenline_candidates_2x2(*c, space));
            }
        }
    }
    if (eigenspaces.empty()) {
        // H not diagonalizable over the ambient roots (invalid input rep);
        // fall back to standard basis lines.
        for (unsigned j = 0; j < d; ++j) {
            Vec e(d, Cyc());
            e[j] = Cyc(Rational(1));
            candidates.push_back(std::move(e));
        }
    }

    for (const auto& v : candidates) {
        bool nonzero = false;
        for (const auto& e : v)
            if (!e.is_zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) continue;
        auto basis = spin_up({v}, gens);
        if (!basis.empty() && basis.size() < d) return basis;
    }
    return std::nullopt;
}

std::vector<Mat> intertwiners(const Representation& a, const Representation& b) {
    if (!a.inst->same_instance(*b.inst)) fail(errk::InstanceMismatch, "intertwiners across instances");
    const unsigned da = a.dim, db = b.dim;
    // Unknown S is db x da, row-major vec index p*da + q.
    // For each generator pair (A, B): sum_q S_{pq} A_{qj} - sum_r B_{pr} S_{rj} = 0.
    const std::vector<const Mat*> gens_a{&a.G, &a.H, &a.X, &a.Y};
    const std::vector<const Mat*> gens_b{&b.G, &b.H, &b.X, &b.Y};
    Mat system(4 * db * da, db * da);
    unsigned eq = 0;
    for (unsigned gidx = 0; gidx < 4; ++gidx) {
        const Mat& A = *gens_a[gidx];
        const Mat& B = *gens_b[gidx];
        for (unsigned p = 0; p < db; ++p)
            for (unsigned j = 0; j < da; ++j) {
                for (unsigned q = 0; q < da; ++q) system.at(eq, p * da + q) += A.at(q, j);
                for (unsigned r = 0; r < db; ++r) system.at(eq, r * da + j) -= B.at(p, r);
                ++eq;
            }
    }
    std::vector<Mat> out;
    for (const auto& v : rref_rank_kernel(system).kernel) {
        Mat s(db, da);
        for (unsigned p = 0; p < db; ++p)
            for (unsigned q = 0; q < da; ++q) s.at(p, q) = v[p * da + q];
        out.push_back(std::move(s));
    }
    return out;
}

Equivalence equivalence_verdict(const Representation& a, const Representation& b,
                                std::uint64_t seed) {
    if (!a.inst->same_instance(*b.inst)) fail(errk::InstanceMismatch, "equivalence across instances");
    if (a.dim != b.dim) return Equivalence::No;
    if (character(a) != character(b)) return Equivalence::No;
    auto space = intertwiners(a, b);
    if (space.empty()) return Equivalence::No;

    auto invertible = [&](const Mat& s) { return rref_rank_kernel(s).rank == a.dim; };

    bool both_irreducible = is_absolutely_irreducible(a) && is_absolutely_irreducible(b);
    for (const auto& s : space) {
        if (invertible(s)) return Equivalence::Yes;
    }
    if (both_irreducible) {
        // A nonzero intertwiner between absolutely irreducible modules is
        // invertible (its kernel and image are submodules), so reaching this
        // point means the space was zero-dimensional; guarded above.
        fail(errk::InternalError, "singular intertwiner between irreducible modules");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 32; ++trial) {
        Mat s(a.dim, a.dim);
        for (const auto& basis_elt : space) s = s + Cyc(Rational(coeff(rng))) * basis_elt;
        if (invertible(s)) return Equivalence::Yes;
    }
    return Equivalence::Undecided;
}

bool equivalent(const Representation& a, const Representation& b, std::uint64_t seed) {
    switch (equivalence_verdict(a, b, seed)) {
        case Equivalence::Yes: return true;
        case Equivalence::No: return false;
        default: fail(errk::Undecided, "equivalence sampling could not certify either way");
    }
}

std::map<IrrepLabel, unsigned> restrict_to_group(const Representation& rep) {
    return decompose(rep.inst->params, rep.G, rep.H);
}

} // namespace hopfrep
