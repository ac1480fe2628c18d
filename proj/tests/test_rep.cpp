#include "hopfrep/rep.hpp"

#include "doctest.h"
#include "hopfrep/error.hpp"
#include "test_util.hpp"

using namespace hopfrep;

namespace {

// Hand-built reference reps, assembled directly from the defining matrix
// entries so the catalog constructors can later be checked against them.

Representation chi_bar(const InstancePtr& inst, unsigned c, unsigned d) {
    Mat g(1, 1), h(1, 1), zero(1, 1);
    g.at(0, 0) = Cyc(Rational(c ? -1 : 1));
    h.at(0, 0) = Cyc(Rational(d ? -1 : 1));
    return make_representation(inst, g, h, zero, zero);
}

Representation rho_bar(const InstancePtr& inst, unsigned l) {
    Mat g = irrep_matrix(inst->params, IrrepLabel::rho(l), 1, 0);
    Mat h = irrep_matrix(inst->params, IrrepLabel::rho(l), 0, 1);
    return make_representation(inst, g, h, Mat(2, 2), Mat(2, 2));
}

Representation rho_z_rep(const InstancePtr& inst, const Cyc& z) {
    unsigned t = inst->params.t();
    Mat g = irrep_matrix(inst->params, IrrepLabel::rho(t), 1, 0);
    Mat h = irrep_matrix(inst->params, IrrepLabel::rho(t), 0, 1);
    Cyc two_lambda_over_z = Cyc(Rational(2)) * inst->lambda / z;
    Mat x(2, 2), y(2, 2);
    x.at(0, 1) = two_lambda_over_z;
    x.at(1, 0) = z;
    y.at(0, 1) = z;
    y.at(1, 0) = two_lambda_over_z;
    return make_representation(inst, g, h, x, y);
}

Representation f_rep(const InstancePtr& inst, unsigned l1, unsigned l2, bool primed) {
    const DihedralParams& p = inst->params;
    Mat g = direct_sum(irrep_matrix(p, IrrepLabel::rho(l1), 1, 0),
                       irrep_matrix(p, IrrepLabel::rho(l2), 1, 0));
    Mat h = direct_sum(irrep_matrix(p, IrrepLabel::rho(l1), 0, 1),
                       irrep_matrix(p, IrrepLabel::rho(l2), 0, 1));
    Cyc w_l2i = p.omega.pow(static_cast<long>(l2) * inst->i);
    Cyc lam = inst->lambda;
    Cyc one(Rational(1));
    Cyc a = lam * (one - w_l2i * w_l2i) / w_l2i;      // lambda(1-w^{2 l2 i})/w^{l2 i}
    Cyc b = lam * (one - (w_l2i * w_l2i).inverse());  // lambda(1-w^{-2 l2 i})
    Cyc s(Rational(primed ? -1 : 1));
    Mat x(4, 4), y(4, 4);
    x.at(0, 3) = one;
    x.at(1, 2) = s * w_l2i;
    x.at(2, 1) = s * a;
    x.at(3, 0) = b;
    y.at(0, 3) = s * w_l2i;
    y.at(1, 2) = one;
    y.at(2, 1) = b;
    y.at(3, 0) = s * a;
    return make_representation(inst, g, h, x, y);
}

std::vector<std::string> violated_relations(const Representation& rep) {
    std::vector<std::string> names;
    for (const auto& v : check_relations(rep)) names.push_back(v.relation);
    return names;
}

bool spans_invariant(const Representation& rep, const std::vector<Vec>& basis) {
    RowSpan span(rep.dim);
    for (const auto& v : basis) span.insert(v);
    for (const Mat* gen : {&rep.G, &rep.H, &rep.X, &rep.Y})
        for (const auto& v : basis)
            if (!span.contains(mat_vec(*gen, v))) return false;
    return true;
}

} // namespace

TEST_CASE("relation checking on extensions by zero") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));

    CHECK(check_relations(chi_bar(inst, 0, 0)).empty());
    CHECK(check_relations(chi_bar(inst, 1, 0)).empty());
    CHECK(check_relations(chi_bar(inst, 0, 1)).empty());
    CHECK(check_relations(chi_bar(inst, 1, 1)).empty());

    // omega^{2li} = zeta_12^{6l}: trivial for l = 2, 4 only.
    CHECK(check_relations(rho_bar(inst, 2)).empty());
    CHECK(check_relations(rho_bar(inst, 4)).empty());

    auto names = violated_relations(rho_bar(inst, 1));
    REQUIRE(!names.empty());
    bool has_x2 = false;
    for (const auto& s : names) has_x2 |= (s == "X^2 = lambda(I - H^{2i})");
    CHECK(has_x2);
}

TEST_CASE("relation checking on rho_z") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));
    Cyc z = Cyc(Rational(1)) + Cyc::imaginary_unit(12); // 1 + i, (1+i)^4 = -4
    CHECK(z.pow(4) == Cyc(Rational(-4)));
    Representation rep = rho_z_rep(inst, z);
    CHECK(check_relations(rep).empty());

    // Same X, Y over rho_1(g), rho_1(h) must break anti-commutation with H.
    Mat g1 = irrep_matrix(inst->params, IrrepLabel::rho(1), 1, 0);
    Mat h1 = irrep_matrix(inst->params, IrrepLabel::rho(1), 0, 1);
    Representation bad = make_representation(inst, g1, h1, rep.X, rep.Y);
    auto names = violated_relations(bad);
    REQUIRE(!names.empty());
    bool has_hx = false, has_hy = false;
    for (const auto& s : names) {
        has_hx |= (s == "HX = -XH");
        has_hy |= (s == "HY = -YH");
    }
    CHECK(has_hx);
    CHECK(has_hy);
}

TEST_CASE("make_representation validates shapes") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));
    CHECK_THROWS_WITH_AS(make_representation(inst, Mat::identity(2), Mat::identity(2),
                                             Mat::identity(2), Mat(3, 3)),
                         doctest::Contains("square"), Error);
    CHECK_THROWS_AS(make_representation(inst, Mat(2, 3), Mat::identity(2), Mat::identity(2),
                                        Mat::identity(2)),
                    Error);
}

TEST_CASE("evaluate is the algebra morphism determined by the generators") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));
    Cyc z = Cyc(Rational(1)) + Cyc::imaginary_unit(12);
    Representation rep = rho_z_rep(inst, z);

    AlgebraElement e1 = AlgebraElement::from_word(inst, BasisWord{0, 0, 1, 0});
    e1.add_term(BasisWord{1, 3, 0, 0}, Cyc(Rational(2)));
    AlgebraElement e2 = AlgebraElement::from_word(inst, BasisWord{0, 0, 0, 1});
    e2.add_term(BasisWord{0, 1, 1, 1}, Cyc(Rational(-1, 3)));

    CHECK(evaluate(rep, multiply(e1, e2)) == evaluate(rep, e1) * evaluate(rep, e2));
    CHECK(evaluate(rep, multiply(e2, e1)) == evaluate(rep, e2) * evaluate(rep, e1));
    CHECK(evaluate(rep, multiply(e2, e2)) == evaluate(rep, e2) * evaluate(rep, e2));
    CHECK(evaluate(rep, AlgebraElement::unit(inst)) == Mat::identity(2));

    auto other = make_instance(12, 5, Cyc(Rational(1)));
    CHECK_THROWS_AS(evaluate(rep, AlgebraElement::unit(other)), Error);
}

TEST_CASE("character values") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));
    Cyc z = Cyc(Rational(1)) + Cyc::imaginary_unit(12);

    SUBCASE("at the unit word the character is the dimension") {
        for (const Representation& rep :
             {chi_bar(inst, 1, 1), rho_z_rep(inst, z), f_rep(inst, 5, 1, false)}) {
            auto chi = character(rep);
            CHECK(chi.at(BasisWord{0, 0, 0, 0}) == Cyc(Rational(rep.dim)));
        }
    }

    SUBCASE("F and F' at h^d x y") {
        for (bool primed : {false, true}) {
            unsigned l1 = 5, l2 = 1;
            Representation rep = f_rep(inst, l1, l2, primed);
            REQUIRE(check_relations(rep).empty());
            auto chi = character(rep);
            const Cyc& w = inst->params.omega;
            Cyc w_l2i = w.pow(static_cast<long>(l2) * inst->i);
            for (unsigned d = 0; d < 12; ++d) {
                Cyc got = chi.at(BasisWord{0, d, 1, 1});
                if (d % 2 == 0) {
                    CHECK(got.is_zero());
                } else {
                    Cyc expected = Cyc(Rational(2)) * inst->lambda *
                                   (w_l2i.inverse() - w_l2i) *
                                   (w.pow(static_cast<long>(l1) * d) +
                                    w.pow(static_cast<long>(l2) * d));
                    if (primed) expected = -expected;
                    CHECK(got == expected);
                }
            }
        }
    }

    SUBCASE("character of a direct sum is the pointwise sum") {
        Representation a = rho_z_rep(inst, z);
        Representation b = chi_bar(inst, 0, 1);
        auto ca = character(a), cb = character(b), cs = character(direct_sum(a, b));
        for (const auto& [w, v] : cs) CHECK(v == ca.at(w) + cb.at(w));
    }
}

TEST_CASE("absolute irreducibility via the full matrix algebra criterion") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));
    Cyc z = Cyc(Rational(1)) + Cyc::imaginary_unit(12);

    CHECK(is_absolutely_irreducible(chi_bar(inst, 0, 0)));
    CHECK(is_absolutely_irreducible(rho_z_rep(inst, z)));
    CHECK(is_absolutely_irreducible(f_rep(inst, 5, 1, false)));
    CHECK(is_absolutely_irreducible(f_rep(inst, 5, 1, true)));
    CHECK(is_absolutely_irreducible(rho_bar(inst, 2)));
    CHECK(!is_absolutely_irreducible(direct_sum(chi_bar(inst, 0, 0), chi_bar(inst, 0, 0))));
    CHECK(!is_absolutely_irreducible(direct_sum(rho_bar(inst, 2), rho_bar(inst, 4))));
}

TEST_CASE("submodule witnesses") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));
    Cyc z = Cyc(Rational(1)) + Cyc::imaginary_unit(12);

    SUBCASE("two copies of the trivial extension") {
        Representation rep = direct_sum(chi_bar(inst, 0, 0), chi_bar(inst, 0, 0));
        auto witness = find_submodule_witness(rep);
        REQUIRE(witness.has_value());
        CHECK(witness->size() == 1);
        CHECK(spans_invariant(rep, *witness));
    }

    SUBCASE("irreducible reps have none") {
        CHECK(!find_submodule_witness(rho_z_rep(inst, z)).has_value());
        CHECK(is_absolutely_irreducible(rho_z_rep(inst, z)));
        CHECK(!find_submodule_witness(f_rep(inst, 5, 1, false)).has_value());
    }

    SUBCASE("block sums of distinct characters") {
        Representation rep = direct_sum(chi_bar(inst, 0, 0), chi_bar(inst, 1, 0));
        auto witness = find_submodule_witness(rep);
        REQUIRE(witness.has_value());
        CHECK(witness->size() < rep.dim);
        CHECK(spans_invariant(rep, *witness));
    }

    SUBCASE("mixed-dimension block sums") {
        Representation rep = direct_sum(rho_bar(inst, 2), rho_z_rep(inst, z));
        auto witness = find_submodule_witness(rep);
        REQUIRE(witness.has_value());
        CHECK(spans_invariant(rep, *witness));
        CHECK(!is_absolutely_irreducible(rep));
    }

    SUBCASE("a witness implies reducibility") {
        for (const Representation& rep :
             {direct_sum(f_rep(inst, 5, 1, false), chi_bar(inst, 1, 1)),
              direct_sum(rho_z_rep(inst, z), rho_z_rep(inst, z))}) {
            auto witness = find_submodule_witness(rep);
            if (witness.has_value()) {
                CHECK(spans_invariant(rep, *witness));
                CHECK(!is_absolutely_irreducible(rep));
            }
        }
    }
}

TEST_CASE("intertwiners and equivalence") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));
    Cyc i_unit = Cyc::imaginary_unit(12);
    Cyc z = Cyc(Rational(1)) + i_unit;
    Cyc z_prime = i_unit * z;
    CHECK(z_prime.pow(4) == Cyc(Rational(-4)));

    SUBCASE("a rep is equivalent to itself") {
        Representation rep = rho_z_rep(inst, z);
        CHECK(equivalent(rep, rep));
        auto basis = intertwiners(rep, rep);
        CHECK(basis.size() == 1); // Schur: scalars only
    }

    SUBCASE("distinct fourth roots give non-equivalent reps") {
        CHECK(!equivalent(rho_z_rep(inst, z), rho_z_rep(inst, z_prime)));
    }

    SUBCASE("F and F' are non-equivalent") {
        CHECK(!equivalent(f_rep(inst, 5, 1, false), f_rep(inst, 5, 1, true)));
    }

    SUBCASE("block order does not matter") {
        CHECK(equivalent(f_rep(inst, 5, 1, false), f_rep(inst, 1, 5, false)));
        Representation ab = direct_sum(chi_bar(inst, 0, 0), chi_bar(inst, 1, 0));
        Representation ba = direct_sum(chi_bar(inst, 1, 0), chi_bar(inst, 0, 0));
        CHECK(equivalent(ab, ba));
    }

    SUBCASE("character mismatch is an immediate no") {
        CHECK(equivalence_verdict(chi_bar(inst, 0, 0), chi_bar(inst, 1, 0)) == Equivalence::No);
    }

    SUBCASE("instance mismatch is rejected") {
        auto other = make_instance(12, 5, Cyc(Rational(1)));
        Cyc oz = Cyc(Rational(1)) + Cyc::imaginary_unit(12);
        CHECK_THROWS_AS(equivalent(rho_z_rep(inst, z), rho_z_rep(other, oz)), Error);
    }
}

TEST_CASE("restriction to the group part") {
    auto inst = make_instance(12, 3, Cyc(Rational(1)));
    Cyc z = Cyc(Rational(1)) + Cyc::imaginary_unit(12);

    auto r1 = restrict_to_group(rho_z_rep(inst, z));
    REQUIRE(r1.size() == 1);
    CHECK(r1.at(IrrepLabel::rho(3)) == 1);

    auto r2 = restrict_to_group(f_rep(inst, 5, 1, false));
    REQUIRE(r2.size() == 2);
    CHECK(r2.at(IrrepLabel::rho(1)) == 1);
    CHECK(r2.at(IrrepLabel::rho(5)) == 1);

    auto r3 = restrict_to_group(chi_bar(inst, 1, 1));
    REQUIRE(r3.size() == 1);
    CHECK(r3.at(IrrepLabel::chi(1, 1)) == 1);
}
