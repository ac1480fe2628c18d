// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Expects the CLI binary path as argv[1] (supplied by ctest).
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sys/wait.h>

#include "hopfrep/error.hpp"
#include "hopfrep/json_io.hpp"

using namespace hopfrep;

namespace {

Cyc rat(long v) { return Cyc(Rational(v)); }

struct Check {
    bool ok = true;
    std::string why;
    void expect(bool cond, const std::string& message) {
        if (ok && !cond) {
            ok = false;
            why = message;
        }
    }
};

struct Gate {
    int failures = 0;
    void report(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    template <typename F>
    void criterion(const std::string& name, F body) {
        Check chk;
        try {
            body(chk);
        } catch (const std::exception& e) {
            chk.expect(false, std::string("exception: ") + e.what());
        }
        report(name, chk.ok, chk.why);
    }
};

std::string run_cli(const std::string& command, int* exit_code = nullptr) {
    std::string out;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        if (exit_code) *exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Cyc trace_of(const Mat& a) {
    Cyc acc;
    for (unsigned r = 0; r < a.rows(); ++r) acc += a.at(r, r);
    return acc;
}

bool invariant_subspace(const Representation& rep, const std::vector<Vec>& basis) {
    RowSpan span(rep.dim);
    for (const Vec& v : basis) span.insert(v);
    if (span.dim() == 0 || span.dim() >= rep.dim) return false;
    for (const Mat* gen : {&rep.G, &rep.H, &rep.X, &rep.Y})
        for (const Vec& v : span.rows())
            if (!span.contains(mat_vec(*gen, v))) return false;
    return true;
}

bool reducibility_certified(const Representation& rep) {
    if (!is_absolutely_irreducible(rep)) return true;
    return find_submodule_witness(rep).has_value();
}

Rational rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

Cyc rand_cyc(std::mt19937_64& rng, unsigned order) {
    std::uniform_int_distribution<long> power(0, order - 1);
    Cyc acc;
    for (int t = 0; t < 3; ++t) acc += Cyc(rand_rat(rng)) * Cyc::zeta(order, power(rng));
    return acc;
}

// Independent floating-point character oracle for the fusion spot-check.
std::complex<double> numeric_char(const IrrepLabel& label, unsigned m, unsigned a, unsigned b) {
    if (label.kind == IrrepLabel::Kind::Chi) {
        int sign = ((label.c * a + label.d * b) % 2 == 0) ? 1 : -1;
        return {static_cast<double>(sign), 0.0};
    }
    if (a == 1) return {0.0, 0.0};
    double angle = 2.0 * M_PI * static_cast<double>(label.l) * static_cast<double>(b) /
                   static_cast<double>(m);
    return {2.0 * std::cos(angle), 0.0};
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-hopfrep-cli>\n";
        return 1;
    }
    const std::string cli = argv[1];
    Gate gate;

    // ------------------------------------------------------------------
    gate.criterion("criterion 1: 12 pairwise non-equivalent irreducibles at m=12, i=3, lambda=1",
                   [&](Check& chk) {
        int rc = 0;
        std::string out = run_cli(cli + " irreps-ain --m 12 --i 3 --lambda 1", &rc);
        chk.expect(rc == 0, "cli exit code nonzero");
        Json doc = Json::parse(out);
        chk.expect(doc["count"] == 12, "count != 12");
        chk.expect(doc["irreducibles"].size() == 12, "list size != 12");

        std::map<unsigned, int> dims;
        int chi_bar = 0, rho_z_count = 0;
        std::set<std::string> labels;
        std::vector<Representation> reps;
        for (const Json& entry : doc["irreducibles"]) {
            std::string label = entry["label"];
            labels.insert(label);
            if (label.rfind("chi_bar", 0) == 0) ++chi_bar;
            if (label.rfind("rho_z", 0) == 0) ++rho_z_count;
            Representation rep = rep_from_json(entry["rep"]);
            dims[rep.dim]++;
            reps.push_back(std::move(rep));
        }
        chk.expect(dims[1] == 4 && dims[2] == 6 && dims[4] == 2, "dimension histogram mismatch");
        chk.expect(chi_bar == 4, "expected 4 chi_bar entries");
        chk.expect(rho_z_count == 4, "expected 4 rho_z entries");
        chk.expect(labels.count("rho_bar(2)") && labels.count("rho_bar(4)"),
                   "rho_bar(2)/rho_bar(4) missing");
        chk.expect(labels.count("F(1,5)") && labels.count("F'(1,5)"), "F(1,5)/F'(1,5) missing");

        for (const Representation& rep : reps) {
            chk.expect(check_relations(rep).empty(), "a relation fails after round-trip");
            chk.expect(is_absolutely_irreducible(rep), "an entry fails the Burnside criterion");
        }
        int pairs = 0;
        for (size_t a = 0; a < reps.size(); ++a)
            for (size_t b = a + 1; b < reps.size(); ++b) {
                ++pairs;
                chk.expect(equivalence_verdict(reps[a], reps[b]) == Equivalence::No,
                           "a pair is equivalent or undecided");
            }
        chk.expect(pairs == 66, "expected 66 pairs");

        // Round-trip invariant: every emitted representation re-ingested by
        // `check` passes.
        for (size_t k = 0; k < reps.size(); ++k) {
            std::string path = "accept_rep_" + std::to_string(k) + ".json";
            std::ofstream(path) << rep_to_json(reps[k]).dump(2) << "\n";
            int crc = 0;
            run_cli(cli + " check " + path, &crc);
            chk.expect(crc == 0, "cli check rejected emitted JSON: " + path);
            std::remove(path.c_str());
        }
    });

    // ------------------------------------------------------------------
    gate.criterion("criterion 2: extend-by-zero boundary (m=12,i=3 -> {2,4}; m=16,i=1 -> {})",
                   [&](Check& chk) {
        struct Case { unsigned m, i; std::set<unsigned> expected; };
        for (const Case& cs : {Case{12, 3, {2, 4}}, Case{16, 1, {}}}) {
            auto inst = make_instance(cs.m, cs.i, rat(1));
            // Independent derivation: omega^{2li} = 1 iff m | 2li.
            std::set<unsigned> derived;
            for (unsigned l = 1; l < cs.m / 2; ++l)
                if ((2 * l * cs.i) % cs.m == 0) derived.insert(l);
            chk.expect(derived == cs.expected, "derived valid set mismatch");
            for (unsigned l = 1; l < cs.m / 2; ++l) {
                bool ok = true;
                try {
                    Representation rep = extend_rho_by_zero(inst, l);
                    chk.expect(check_relations(rep).empty(), "extension violates a relation");
                } catch (const Error&) {
                    ok = false;
                }
                chk.expect(ok == (derived.count(l) > 0),
                           "extend_rho_by_zero disagrees at l=" + std::to_string(l));
            }
        }
    });

    // ------------------------------------------------------------------
    gate.criterion("criterion 3: rho_z at z=1+i valid; same X,Y over rho_l(h), l != 3, break HX=-XH",
                   [&](Check& chk) {
        auto inst = make_instance(12, 3, rat(1));
        Cyc z = rat(1) + Cyc::imaginary_unit(12);
        Representation good = rho_z(inst, z);
        chk.expect(check_relations(good).empty(), "rho_z(1+i) violates a relation");
        for (unsigned l = 1; l <= 5; ++l) {
            if (l == 3) continue;
            Mat g = irrep_matrix(inst->params, IrrepLabel::rho(l), 1, 0);
            Mat h = irrep_matrix(inst->params, IrrepLabel::rho(l), 0, 1);
            Representation bad = make_representation(inst, g, h, good.X, good.Y);
            auto violations = check_relations(bad);
            bool hx = false;
            for (const Violation& v : violations)
                if (v.relation == "HX = -XH") hx = true;
            chk.expect(hx, "HX=-XH does not fail at l=" + std::to_string(l));
        }
    });

    // ------------------------------------------------------------------
    gate.criterion("criterion 4: rho(5)+rho(1) -> Finite, 2 classes, characters at h^d x y match",
                   [&](Check& chk) {
        auto inst = make_instance(12, 3, rat(1));
        SolutionFamily family = solve(inst, parse_spec(inst->params, "rho(5)+rho(1)"));
        chk.expect(family.status == SolveStatus::Finite, "status not Finite");
        chk.expect(family.classes.size() == 2, "expected exactly 2 classes");
        const Cyc& omega = inst->params.omega;
        Cyc base = rat(2) * inst->lambda * (omega.pow(-3) - omega.pow(3));
        int signs[2] = {0, 0};
        for (size_t c = 0; c < family.classes.size() && c < 2; ++c) {
            const Representation& rep = family.solutions[family.classes[c][0]].rep;
            Cyc tr = trace_of(evaluate_word(rep, BasisWord{0, 1, 1, 1}));
            Cyc expected = base * (omega.pow(5) + omega);
            if (tr == expected) signs[c] = 1;
            else if (tr == -expected) signs[c] = -1;
            chk.expect(signs[c] != 0, "character at h x y matches neither sign");
            for (unsigned d : {1u, 3u, 5u, 7u, 9u, 11u}) {
                Cyc lhs = trace_of(evaluate_word(rep, BasisWord{0, d, 1, 1}));
                Cyc rhs = base * (omega.pow(5L * d) + omega.pow(1L * d));
                if (signs[c] < 0) rhs = -rhs;
                chk.expect(lhs == rhs, "character mismatch at d=" + std::to_string(d));
            }
        }
        chk.expect(signs[0] * signs[1] == -1, "the two classes do not have opposite signs");
    });

    // ------------------------------------------------------------------
    gate.criterion("criterion 5: NoSolution with exact certificates for the three forbidden specs",
                   [&](Check& chk) {
        auto inst = make_instance(12, 3, rat(1));
        for (const char* text : {"rho(1)+rho(1)", "rho(1)+rho(1)+rho(5)", "rho(1)+rho(5)+rho(5)"}) {
            SolutionFamily family = solve(inst, parse_spec(inst->params, text));
            chk.expect(family.status == SolveStatus::NoSolution,
                       std::string(text) + " is not NoSolution");
            chk.expect(!family.certificates.empty(), std::string(text) + " lacks a certificate");
            bool exact = false;
            for (const std::string& cert : family.certificates)
                if (cert.find("0 = ") != std::string::npos) exact = true;
            chk.expect(exact, std::string(text) + " certificate is not an exact contradiction");
        }
    });

    // ------------------------------------------------------------------
    gate.criterion("criterion 6: reducibility ledger rows at m=12, i=3 (no irreducible solutions)",
                   [&](Check& chk) {
        auto inst = make_instance(12, 3, rat(1));
        std::vector<std::string> specs;
        const char* chis[4] = {"chi(0,0)", "chi(0,1)", "chi(1,0)", "chi(1,1)"};
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b)
                specs.push_back(std::string(chis[a]) + "+" + chis[b]);
        specs.insert(specs.end(), {"chi(0,0)+rho(2)", "chi(1,1)+rho(2)", "rho(2)+rho(4)",
                                   "rho(2)+rho(3)", "rho(1)+rho(2)"});
        for (const std::string& text : specs) {
            SolutionFamily family = solve(inst, parse_spec(inst->params, text));
            for (const SolverSolution& sol : family.solutions)
                chk.expect(reducibility_certified(sol.rep),
                           text + " produced an absolutely irreducible solution");
        }
    });

    // ------------------------------------------------------------------
    gate.criterion("criterion 7: property suites (field axioms, Gram, associativity, ring, Burnside)",
                   [&](Check& chk) {
        // (a) field axioms + conj involution, 1000 samples.
        std::mt19937_64 rng(0xacce97ed);
        const unsigned orders[3] = {4, 8, 12};
        for (int s = 0; s < 1000; ++s) {
            unsigned order = orders[s % 3];
            Cyc a = rand_cyc(rng, order), b = rand_cyc(rng, order), c = rand_cyc(rng, order);
            chk.expect((a + b) + c == a + (b + c), "addition associativity fails");
            chk.expect((a * b) * c == a * (b * c), "multiplication associativity fails");
            chk.expect(a * (b + c) == a * b + a * c, "distributivity fails");
            chk.expect(a * b == b * a, "commutativity fails");
            chk.expect(a + (-a) == Cyc(), "additive inverse fails");
            chk.expect(a.conj().conj() == a, "conj is not an involution");
            chk.expect((a * b).conj() == a.conj() * b.conj(), "conj is not multiplicative");
            if (!a.is_zero()) chk.expect(a * a.inverse() == rat(1), "multiplicative inverse fails");
            if (!chk.ok) return;
        }
        // (b) character orthogonality Gram = identity.
        for (unsigned m : {12u, 16u, 20u}) {
            DihedralParams params = make_dihedral(m);
            auto labels = all_labels(params);
            std::vector<Character> chars;
            for (const IrrepLabel& l : labels) chars.push_back(character_of(params, l));
            for (size_t j = 0; j < labels.size(); ++j)
                for (size_t k = 0; k < labels.size(); ++k) {
                    Rational expected(j == k ? 1 : 0);
                    chk.expect(inner_product(params, chars[j], chars[k]) == expected,
                               "Gram matrix is not the identity at m=" + std::to_string(m));
                }
        }
        // (c) algebra associativity on 500 random triples.
        for (unsigned m : {12u, 16u}) {
            auto inst = make_instance(m, 3, rat(1));
            std::uniform_int_distribution<unsigned> bit(0, 1), rot(0, m - 1);
            for (int s = 0; s < 500; ++s) {
                BasisWord u{bit(rng), rot(rng), bit(rng), bit(rng)};
                BasisWord v{bit(rng), rot(rng), bit(rng), bit(rng)};
                BasisWord w{bit(rng), rot(rng), bit(rng), bit(rng)};
                auto eu = AlgebraElement::from_word(inst, u);
                auto ev = AlgebraElement::from_word(inst, v);
                auto ew = AlgebraElement::from_word(inst, w);
                chk.expect(multiply(multiply(eu, ev), ew) == multiply(eu, multiply(ev, ew)),
                           "basis-word associativity fails at m=" + std::to_string(m));
                if (!chk.ok) return;
            }
        }
        // (d) fusion ring axioms.
        for (unsigned m : {12u, 16u})
            chk.expect(verify_ring(fusion_table(make_dihedral(m))).ok(),
                       "verify_ring fails at m=" + std::to_string(m));
        // (e) Burnside/witness consistency: catalog entries are irreducible
        // with no witness; random direct sums fail Burnside and any witness
        // found spans a proper invariant subspace.
        auto inst = make_instance(12, 3, rat(1));
        auto entries = known_irreducibles(inst);
        for (const CatalogEntry& e : entries) {
            chk.expect(is_absolutely_irreducible(e.rep), e.label + " fails Burnside");
            chk.expect(!find_submodule_witness(e.rep).has_value(),
                       e.label + " has a spurious submodule witness");
        }
        std::uniform_int_distribution<size_t> pick(0, entries.size() - 1);
        for (int s = 0; s < 50; ++s) {
            const CatalogEntry& a = entries[pick(rng)];
            const CatalogEntry& b = entries[pick(rng)];
            Representation sum = direct_sum(a.rep, b.rep);
            chk.expect(!is_absolutely_irreducible(sum),
                       a.label + " + " + b.label + " passes Burnside");
            auto witness = find_submodule_witness(sum);
            chk.expect(witness.has_value(),
                       "no witness for " + a.label + " + " + b.label);
            if (witness)
                chk.expect(invariant_subspace(sum, *witness),
                           "witness for " + a.label + " + " + b.label + " is not invariant");
            if (!chk.ok) return;
        }
    });

    // ------------------------------------------------------------------
    gate.criterion("criterion 8: rho(1) x rho(1) at m=12 = chi(0,0)+chi(1,0)+rho(2) vs numeric oracle",
                   [&](Check& chk) {
        DihedralParams params = make_dihedral(12);
        auto result = tensor_decompose(params, IrrepLabel::rho(1), IrrepLabel::rho(1));
        std::map<IrrepLabel, unsigned> expected{{IrrepLabel::chi(0, 0), 1},
                                                {IrrepLabel::chi(1, 0), 1},
                                                {IrrepLabel::rho(2), 1}};
        chk.expect(result == expected, "decomposition differs from the frozen value");
        // Recompute the expectation with the independent numeric oracle.
        std::map<IrrepLabel, unsigned> oracle;
        for (const IrrepLabel& label : all_labels(params)) {
            std::complex<double> acc = 0.0;
            for (unsigned a = 0; a < 2; ++a)
                for (unsigned b = 0; b < 12; ++b) {
                    auto j = numeric_char(IrrepLabel::rho(1), 12, a, b);
                    acc += j * j * std::conj(numeric_char(label, 12, a, b));
                }
            double mult = acc.real() / 24.0;
            long rounded = std::lround(mult);
            chk.expect(std::abs(mult - static_cast<double>(rounded)) < 1e-9,
                       "oracle multiplicity is not integral");
            if (rounded != 0) oracle[label] = static_cast<unsigned>(rounded);
        }
        chk.expect(result == oracle, "library decomposition differs from the numeric oracle");
    });

    // ------------------------------------------------------------------
    gate.criterion("invariant: byte-identical output for identical flags and seed", [&](Check& chk) {
        for (const std::string& cmd :
             {cli + " irreps-ain --m 12 --i 3 --lambda 1",
              cli + " solve-extensions --m 12 --i 3 --lambda 1 --spec \"rho(2)+rho(4)\"",
              cli + " fusion --m 12 --csv"}) {
            int rc1 = 0, rc2 = 0;
            std::string first = run_cli(cmd, &rc1);
            std::string second = run_cli(cmd, &rc2);
            chk.expect(rc1 == 0 && rc2 == 0, "command failed: " + cmd);
            chk.expect(!first.empty() && first == second, "output differs between runs: " + cmd);
        }
    });

    if (gate.failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << gate.failures << " criterion(s) failed\n";
    return 1;
}
