#include "hopfrep/catalog.hpp"

#include "hopfrep/error.hpp"

namespace hopfrep {

namespace {

Representation checked(Representation rep) {
    if (!check_relations(rep).empty())
        fail(errk::InternalError, "catalog constructor produced an invalid representation");
    return rep;
}

Cyc omega_pow(const AlgebraInstance& inst, long e) { return inst.params.omega.pow(e); }

} // namespace

Representation extend_chi_by_zero(InstancePtr inst, unsigned c, unsigned d) {
    if (c > 1 || d > 1) fail(errk::InvalidParams, "chi parameters must be 0 or 1");
    const DihedralParams& p = inst->params;
    Mat g = irrep_matrix(p, IrrepLabel::chi(c, d), 1, 0);
    Mat h = irrep_matrix(p, IrrepLabel::chi(c, d), 0, 1);
    return checked(make_representation(std::move(inst), g, h, Mat(1, 1), Mat(1, 1)));
}

Representation extend_rho_by_zero(InstancePtr inst, unsigned l) {
    const DihedralParams& p = inst->params;
    validate_label(p, IrrepLabel::rho(l));
    if (!inst->lambda_is_zero &&
        omega_pow(*inst, 2L * l * inst->i) != Cyc(Rational(1)))
        fail(errk::NotExtendable,
             "X = 0 breaks X^2 = lambda(I - H^{2i}): omega^{2li} != 1 for l = " +
                 std::to_string(l));
    Mat g = irrep_matrix(p, IrrepLabel::rho(l), 1, 0);
    Mat h = irrep_matrix(p, IrrepLabel::rho(l), 0, 1);
    return checked(make_representation(std::move(inst), g, h, Mat(2, 2), Mat(2, 2)));
}

FourRoots four_roots(const AlgebraInstance& inst, const Cyc& z0) {
    if (z0.is_zero())
        fail(errk::NotAFourthRoot, "z0 = 0 collapses the four roots (lambda = 0 has no witness)");
    Cyc target = Cyc(Rational(-4)) * inst.lambda * inst.lambda;
    if (z0.pow(4) != target)
        fail(errk::NotAFourthRoot, "z0^4 != -4*lambda^2 for z0 = " + z0.to_string());
    Cyc i_unit = Cyc::imaginary_unit(inst.order());
    Cyc minus_one(Rational(-1));
    return FourRoots{z0, {z0, i_unit * z0, minus_one * z0, minus_one * i_unit * z0}};
}

std::optional<Cyc> builtin_root(const AlgebraInstance& inst) {
    if (inst.lambda_is_zero || !inst.lambda.is_rational()) return std::nullopt;
    Rational lam = inst.lambda.rational_value();
    auto q = rational_sqrt(lam < 0 ? Rational(-lam) : lam);
    if (!q) return std::nullopt;
    Cyc one_plus_i = Cyc(Rational(1)) + Cyc::imaginary_unit(inst.order());
    return Cyc(*q) * one_plus_i;
}

Representation rho_z(InstancePtr inst, const Cyc& z) {
    four_roots(*inst, z); // validates z^4 = -4*lambda^2, z != 0
    if (!inst->i_is_odd)
        fail(errk::PreconditionViolated,
             "rho_z needs omega^{ni} = -1 (odd i); for even i rho_t extends by zero instead");
    const DihedralParams& p = inst->params;
    unsigned t = p.t();
    Mat g = irrep_matrix(p, IrrepLabel::rho(t), 1, 0);
    Mat h = irrep_matrix(p, IrrepLabel::rho(t), 0, 1);
    Cyc two_lambda_over_z = Cyc(Rational(2)) * inst->lambda / z;
    Mat x(2, 2), y(2, 2);
    x.at(0, 1) = two_lambda_over_z;
    x.at(1, 0) = z;
    y.at(0, 1) = z;
    y.at(1, 0) = two_lambda_over_z;
    return checked(make_representation(std::move(inst), g, h, x, y));
}

namespace {

Representation f_family(InstancePtr inst, unsigned l1, unsigned l2, bool primed) {
    const DihedralParams& p = inst->params;
    validate_label(p, IrrepLabel::rho(l1));
    validate_label(p, IrrepLabel::rho(l2));
    if (l1 + l2 != p.n)
        fail(errk::PreconditionViolated, "F needs l1 + l2 = n, got " + std::to_string(l1) +
                                             " + " + std::to_string(l2));
    unsigned t = p.t();
    if (l1 == t || l2 == t) fail(errk::PreconditionViolated, "F needs l1, l2 != t");
    for (unsigned l : {l1, l2})
        if (omega_pow(*inst, 2L * l * inst->i) == Cyc(Rational(1)))
            fail(errk::PreconditionViolated,
                 "F needs omega^{2li} != 1, violated at l = " + std::to_string(l));

    Mat g = direct_sum(irrep_matrix(p, IrrepLabel::rho(l1), 1, 0),
                       irrep_matrix(p, IrrepLabel::rho(l2), 1, 0));
    Mat h = direct_sum(irrep_matrix(p, IrrepLabel::rho(l1), 0, 1),
                       irrep_matrix(p, IrrepLabel::rho(l2), 0, 1));
    Cyc w = omega_pow(*inst, static_cast<long>(l2) * inst->i);
    Cyc one(Rational(1));
    Cyc a = inst->lambda * (one - w * w) / w;          // lambda(1 - omega^{2 l2 i}) / omega^{l2 i}
    Cyc b = inst->lambda * (one - (w * w).inverse());  // lambda(1 - omega^{-2 l2 i})
    Cyc s(Rational(primed ? -1 : 1));
    Mat x(4, 4), y(4, 4);
    x.at(0, 3) = one;
    x.at(1, 2) = s * w;
    x.at(2, 1) = s * a;
    x.at(3, 0) = b;
    y.at(0, 3) = s * w;
    y.at(1, 2) = one;
    y.at(2, 1) = b;
    y.at(3, 0) = s * a;
    return checked(make_representation(std::move(inst), g, h, x, y));
}

} // namespace

Representation F(InstancePtr inst, unsigned l1, unsigned l2) {
    return f_family(std::move(inst), l1, l2, false);
}

Representation F_prime(InstancePtr inst, unsigned l1, unsigned l2) {
    return f_family(std::move(inst), l1, l2, true);
}

std::vector<CatalogEntry> known_irreducibles(InstancePtr inst, std::optional<Cyc> z0) {
    std::vector<CatalogEntry> out;
    for (unsigned c = 0; c <= 1; ++c)
        for (unsigned d = 0; d <= 1; ++d)
            out.push_back({"chi_bar(" + std::to_string(c) + "," + std::to_string(d) + ")",
                           extend_chi_by_zero(inst, c, d)});

    const unsigned n = inst->n();
    for (unsigned l = 1; l < n; ++l)
        if (inst->lambda_is_zero || omega_pow(*inst, 2L * l * inst->i) == Cyc(Rational(1)))
            out.push_back({"rho_bar(" + std::to_string(l) + ")", extend_rho_by_zero(inst, l)});

    if (z0 && inst->lambda_is_zero)
        fail(errk::NotAFourthRoot, "lambda = 0 admits no fourth-root witness");

    if (!inst->lambda_is_zero && inst->i_is_odd) {
        if (!z0) z0 = builtin_root(*inst);
        if (!z0)
            fail(errk::InvalidParams,
                 "no builtin fourth root of -4*lambda^2 for this lambda; supply z0");
        for (const Cyc& r : four_roots(*inst, *z0).roots)
            out.push_back({"rho_z(" + r.to_string() + ")", rho_z(inst, r)});
    }

    if (!inst->lambda_is_zero) {
        unsigned t = inst->params.t();
        for (unsigned l1 = 1; 2 * l1 < n; ++l1) {
            unsigned l2 = n - l1;
            if (l1 == t || l2 == t) continue;
            if (omega_pow(*inst, 2L * l1 * inst->i) == Cyc(Rational(1))) continue;
            if (omega_pow(*inst, 2L * l2 * inst->i) == Cyc(Rational(1))) continue;
            std::string pair = "(" + std::to_string(l1) + "," + std::to_string(l2) + ")";
            out.push_back({"F" + pair, F(inst, l1, l2)});
            out.push_back({"F'" + pair, F_prime(inst, l1, l2)});
        }
    }
    return out;
}

} // namespace hopfrep
