#include "hopfrep/fusion.hpp"

#include "hopfrep/error.hpp"

namespace hopfrep {

std::map<IrrepLabel, unsigned> tensor_decompose(const DihedralParams& params,
                                                const IrrepLabel& j, const IrrepLabel& k) {
    validate_label(params, j);
    validate_label(params, k);
    Character cj = character_of(params, j);
    Character ck = character_of(params, k);
    Character prod;
    prod.m = params.m;
    prod.values.reserve(cj.values.size());
    for (size_t w = 0; w < cj.values.size(); ++w)
        prod.values.push_back(cj.values[w] * ck.values[w]);

    std::map<IrrepLabel, unsigned> result;
    for (const IrrepLabel& label : all_labels(params)) {
        Rational mult = inner_product(params, prod, character_of(params, label));
        if (rat_den(mult) != 1 || mult < 0)
            fail(errk::NonIntegralMultiplicity,
                 "tensor multiplicity " + rational_to_string(mult) + " at " +
                     label_to_string(label));
        unsigned count = static_cast<unsigned>(rat_num(mult).convert_to<unsigned long>());
        if (count > 0) result[label] = count;
    }
    return result;
}

unsigned FusionTable::index_of(const IrrepLabel& label) const {
    for (unsigned idx = 0; idx < labels.size(); ++idx)
        if (labels[idx] == label) return idx;
    fail(errk::InvalidLabel, "label " + label_to_string(label) + " is not in the table");
}

FusionTable fusion_table(const DihedralParams& params) {
    FusionTable table;
    table.params = params;
    table.labels = all_labels(params);
    table.presents =
        "Grothendieck ring of Rep(kD_" + std::to_string(params.m) +
        "); by the ring isomorphism of the Grothendieck rings it equally presents the "
        "bosonizations B(M_{i,k}) # kD_m and B_L, and A_{i,n}(0)";
    size_t count = table.labels.size();
    table.constants.assign(count, std::vector<std::vector<unsigned>>(
                                      count, std::vector<unsigned>(count, 0)));
    for (size_t j = 0; j < count; ++j)
        for (size_t k = j; k < count; ++k) {
            auto parts = tensor_decompose(params, table.labels[j], table.labels[k]);
            for (const auto& [label, mult] : parts) {
                unsigned idx = table.index_of(label);
                table.constants[j][k][idx] = mult;
                table.constants[k][j][idx] = mult;
            }
        }
    return table;
}

RingReport verify_ring(const FusionTable& table) {
    RingReport report;
    size_t count = table.labels.size();
    const auto& n = table.constants;
    auto flag = [&report](const std::string& text) { report.failures.push_back(text); };

    report.unital = true;
    unsigned unit = table.index_of(IrrepLabel::chi(0, 0));
    for (size_t j = 0; j < count && report.unital; ++j)
        for (size_t q = 0; q < count; ++q) {
            unsigned expected = q == j ? 1 : 0;
            if (n[unit][j][q] != expected || n[j][unit][q] != expected) {
                report.unital = false;
                flag("unit fails at " + label_to_string(table.labels[j]));
                break;
            }
        }

    report.commutative = true;
    for (size_t j = 0; j < count && report.commutative; ++j)
        for (size_t k = 0; k < count && report.commutative; ++k)
            for (size_t q = 0; q < count; ++q)
                if (n[j][k][q] != n[k][j][q]) {
                    report.commutative = false;
                    flag("commutativity fails at (" + label_to_string(table.labels[j]) + ", " +
                         label_to_string(table.labels[k]) + ")");
                    break;
                }

    report.associative = true;
    for (size_t j = 0; j < count; ++j)
        for (size_t k = 0; k < count; ++k)
            for (size_t l = 0; l < count; ++l)
                for (size_t q = 0; q < count; ++q) {
                    unsigned long left = 0, right = 0;
                    for (size_t p = 0; p < count; ++p) {
                        left += static_cast<unsigned long>(n[j][k][p]) * n[p][l][q];
                        right += static_cast<unsigned long>(n[k][l][p]) * n[j][p][q];
                    }
                    if (left != right) {
                        report.associative = false;
                        flag("associativity fails at (" + label_to_string(table.labels[j]) +
                             ", " + label_to_string(table.labels[k]) + ", " +
                             label_to_string(table.labels[l]) + ")");
                        goto assoc_done;
                    }
                }
assoc_done:

    report.dimension_law = true;
    for (size_t j = 0; j < count && report.dimension_law; ++j)
        for (size_t k = 0; k < count; ++k) {
            unsigned long total = 0;
            for (size_t q = 0; q < count; ++q)
                total += static_cast<unsigned long>(n[j][k][q]) * label_degree(table.labels[q]);
            if (total != static_cast<unsigned long>(label_degree(table.labels[j])) *
                             label_degree(table.labels[k])) {
                report.dimension_law = false;
                flag("dimension law fails at (" + label_to_string(table.labels[j]) + ", " +
                     label_to_string(table.labels[k]) + ")");
                break;
            }
        }
    return report;
}

} // namespace hopfrep
