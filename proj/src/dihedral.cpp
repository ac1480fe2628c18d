#include "hopfrep/dihedral.hpp"

#include <numeric>

#include "hopfrep/error.hpp"

namespace hopfrep {

unsigned DihedralParams::t() const {
    if (m % 4 != 0) fail(errk::InvalidParams, "t is defined only when 4 | m");
    return m / 4;
}

DihedralParams make_dihedral(unsigned m, unsigned order) {
    if (m < 2 || m % 2 != 0) fail(errk::InvalidParams, "m must be even and positive");
    if (order == 0) order = static_cast<unsigned>(std::lcm(m, 4u));
    if (order % m != 0) fail(errk::InvalidParams, "ambient order must be a multiple of m");
    DihedralParams p;
    p.m = m;
    p.n = m / 2;
    p.order = order;
    p.omega = Cyc::zeta(order, order / m);
    return p;
}

std::string label_to_string(const IrrepLabel& label) {
    if (label.kind == IrrepLabel::Kind::Chi)
        return "chi(" + std::to_string(label.c) + "," + std::to_string(label.d) + ")";
    return "rho(" + std::to_string(label.l) + ")";
}

IrrepLabel label_from_string(const std::string& text) {
    auto parse_args = [&](size_t open) {
        if (text.back() != ')') fail(errk::InvalidLabel, "missing ')' in '" + text + "'");
        return text.substr(open + 1, text.size() - open - 2);
    };
    if (text.rfind("chi(", 0) == 0) {
        std::string args = parse_args(3);
        size_t comma = args.find(',');
        if (comma == std::string::npos) fail(errk::InvalidLabel, "chi needs two arguments: '" + text + "'");
        try {
            unsigned c = static_cast<unsigned>(std::stoul(args.substr(0, comma)));
            unsigned d = static_cast<unsigned>(std::stoul(args.substr(comma + 1)));
            if (c > 1 || d > 1) fail(errk::InvalidLabel, "chi arguments must be 0 or 1: '" + text + "'");
            return IrrepLabel::chi(c, d);
        } catch (const std::logic_error&) {
            fail(errk::InvalidLabel, "bad chi arguments: '" + text + "'");
        }
    }
    if (text.rfind("rho(", 0) == 0) {
        std::string args = parse_args(3);
        try {
            return IrrepLabel::rho(static_cast<unsigned>(std::stoul(args)));
        } catch (const std::logic_error&) {
            fail(errk::InvalidLabel, "bad rho argument: '" + text + "'");
        }
    }
    fail(errk::InvalidLabel, "unknown label '" + text + "'");
}

void validate_label(const DihedralParams& params, const IrrepLabel& label) {
    if (label.kind == IrrepLabel::Kind::Chi) {
        if (label.c > 1 || label.d > 1) fail(errk::InvalidLabel, "chi(c,d) needs c,d in {0,1}");
    } else if (label.l < 1 || label.l >= params.n) {
        fail(errk::InvalidLabel, "rho(l) needs 1 <= l < " + std::to_string(params.n));
    }
}

unsigned label_degree(const IrrepLabel& label) {
    return label.kind == IrrepLabel::Kind::Chi ? 1u : 2u;
}

std::vector<IrrepLabel> all_labels(const DihedralParams& params) {
    std::vector<IrrepLabel> out;
    for (unsigned c = 0; c <= 1; ++c)
        for (unsigned d = 0; d <= 1; ++d) out.push_back(IrrepLabel::chi(c, d));
    for (unsigned l = 1; l < params.n; ++l) out.push_back(IrrepLabel::rho(l));
    return out;
}

Mat irrep_matrix(const DihedralParams& params, const IrrepLabel& label, unsigned a, long b) {
    validate_label(params, label);
    long bb = b % static_cast<long>(params.m);
    if (bb < 0) bb += params.m;
    if (label.kind == IrrepLabel::Kind::Chi) {
        Mat m(1, 1);
        long sign_exp = static_cast<long>(a % 2) * label.c + bb * label.d;
        m.at(0, 0) = Cyc(Rational(sign_exp % 2 == 0 ? 1 : -1));
        return m;
    }
    Mat diag(2, 2);
    diag.at(0, 0) = params.omega.pow(static_cast<long>(label.l) * bb);
    diag.at(1, 1) = params.omega.pow(-static_cast<long>(label.l) * bb);
    if (a % 2 == 0) return diag;
    Mat swap(2, 2);
    swap.at(0, 1) = Cyc(Rational(1));
    swap.at(1, 0) = Cyc(Rational(1));
    return swap * diag;
}

Character character_of(const DihedralParams& params, const IrrepLabel& label) {
    validate_label(params, label);
    Character ch;
    ch.m = params.m;
    ch.values.reserve(2 * params.m);
    for (unsigned a = 0; a <= 1; ++a)
        for (unsigned b = 0; b < params.m; ++b) {
            if (label.kind == IrrepLabel::Kind::Chi) {
                long sign_exp = static_cast<long>(a) * label.c + static_cast<long>(b) * label.d;
                ch.values.push_back(Cyc(Rational(sign_exp % 2 == 0 ? 1 : -1)));
            } else if (a == 1) {
                ch.values.push_back(Cyc());
            } else {
                long lb = static_cast<long>(label.l) * b;
                ch.values.push_back(params.omega.pow(lb) + params.omega.pow(-lb));
            }
        }
    return ch;
}

Character trace_character(const DihedralParams& params, const Mat& g, const Mat& h) {
    Character ch;
    ch.m = params.m;
    ch.values.reserve(2 * params.m);
    std::vector<Mat> h_pow{Mat::identity(h.rows())};
    for (unsigned b = 1; b < params.m; ++b) h_pow.push_back(h_pow.back() * h);
    for (unsigned a = 0; a <= 1; ++a)
        for (unsigned b = 0; b < params.m; ++b)
            ch.values.push_back(a == 0 ? h_pow[b].trace() : (g * h_pow[b]).trace());
    return ch;
}

Character sum_characters(const Character& a, const Character& b) {
    if (a.m != b.m) fail(errk::ParamMismatch, "characters over different groups");
    Character out = a;
    for (size_t j = 0; j < out.values.size(); ++j) out.values[j] += b.values[j];
    return out;
}

Rational inner_product(const DihedralParams& params, const Character& x1, const Character& x2) {
    if (x1.m != params.m || x2.m != params.m)
        fail(errk::ParamMismatch, "character/params group size mismatch");
    Cyc acc;
    for (size_t j = 0; j < x1.values.size(); ++j) acc += x1.values[j] * x2.values[j].conj();
    acc = acc / Cyc(Rational(2 * params.m));
    if (!acc.is_rational())
        fail(errk::InternalError, "character inner product not rational: " + acc.to_string());
    return acc.rational_value();
}

std::map<IrrepLabel, unsigned> decompose(const DihedralParams& params, const Mat& g, const Mat& h) {
    if (!g.is_square() || !h.is_square() || g.rows() != h.rows())
        fail(errk::DimensionMismatch, "G, H must be square of equal size");
    Mat eye = Mat::identity(g.rows());
    if (g * g != eye) fail(errk::NotARepresentation, "G^2 != I");
    if (h.pow(params.m) != eye) fail(errk::NotARepresentation, "H^m != I");
    if (g * h * g != h.pow(params.m - 1)) fail(errk::NotARepresentation, "GHG != H^{m-1}");

    Character tr = trace_character(params, g, h);
    std::map<IrrepLabel, unsigned> out;
    unsigned total = 0;
    for (const auto& label : all_labels(params)) {
        Rational mult = inner_product(params, tr, character_of(params, label));
        if (mult == 0) continue;
        if (mult < 0 || rat_den(mult) != 1)
            fail(errk::NonIntegralMultiplicity,
                 "multiplicity of " + label_to_string(label) + " is " + rational_to_string(mult));
        unsigned count = rat_num(mult).convert_to<unsigned>();
        out[label] = count;
        total += count * label_degree(label);
    }
    if (total != g.rows())
        fail(errk::NonIntegralMultiplicity, "constituent degrees do not sum to the dimension");
    return out;
}

} // namespace hopfrep
