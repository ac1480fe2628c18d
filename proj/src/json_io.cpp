#include "hopfrep/json_io.hpp"

#include "hopfrep/error.hpp"

namespace hopfrep {

namespace {

const Json& get_field(const Json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(errk::ParseError, std::string("missing field \"") + key + "\"");
    return *it;
}

unsigned get_unsigned(const Json& doc, const char* key) {
    const Json& v = get_field(doc, key);
    if (!v.is_number_unsigned())
        fail(errk::ParseError, std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<unsigned>();
}

std::string get_string(const Json& doc, const char* key) {
    const Json& v = get_field(doc, key);
    if (!v.is_string()) fail(errk::ParseError, std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::map<IrrepLabel, unsigned> constants_row(const FusionTable& table, unsigned j, unsigned k) {
    std::map<IrrepLabel, unsigned> out;
    for (size_t idx = 0; idx < table.labels.size(); ++idx)
        if (unsigned mult = table.constants[j][k][idx]) out[table.labels[idx]] = mult;
    return out;
}

} // namespace

Json mat_to_json(const Mat& a, unsigned order) {
    Json rows = Json::array();
    for (unsigned r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (unsigned c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"order", order}, {"entries", std::move(rows)}};
}

Mat mat_from_json(const Json& doc) {
    if (!doc.is_object()) fail(errk::ParseError, "matrix must be an object");
    unsigned order = get_unsigned(doc, "order");
    if (order == 0) fail(errk::ParseError, "matrix order must be positive");
    const Json& entries = get_field(doc, "entries");
    if (!entries.is_array() || entries.empty())
        fail(errk::ParseError, "matrix entries must be a nonempty array of rows");
    unsigned rows = static_cast<unsigned>(entries.size());
    unsigned cols = 0;
    Mat out;
    for (unsigned r = 0; r < rows; ++r) {
        const Json& row = entries[r];
        if (!row.is_array() || row.empty())
            fail(errk::ParseError, "matrix rows must be nonempty arrays");
        if (r == 0) {
            cols = static_cast<unsigned>(row.size());
            out = Mat(rows, cols);
        } else if (row.size() != cols) {
            fail(errk::ParseError, "matrix rows must have equal length");
        }
        for (unsigned c = 0; c < cols; ++c) {
            if (!row[c].is_string()) fail(errk::ParseError, "matrix entries must be literals");
            out.at(r, c) = Cyc::parse(order, row[c].get<std::string>());
        }
    }
    return out;
}

Json rep_to_json(const Representation& rep) {
    unsigned N = rep.inst->order();
    return Json{
        {"schema", kSchemaTag},
        {"m", rep.inst->m()},
        {"N", N},
        {"i", rep.inst->i},
        {"lambda", rep.inst->lambda.to_string()},
        {"dim", rep.dim},
        {"g", mat_to_json(rep.G, N)},
        {"h", mat_to_json(rep.H, N)},
        {"x", mat_to_json(rep.X, N)},
        {"y", mat_to_json(rep.Y, N)},
    };
}

Representation rep_from_json(const Json& doc) {
    if (!doc.is_object()) fail(errk::ParseError, "representation must be an object");
    if (get_string(doc, "schema") != kSchemaTag)
        fail(errk::ParseError, "unsupported schema tag");
    unsigned m = get_unsigned(doc, "m");
    unsigned N = get_unsigned(doc, "N");
    unsigned i = get_unsigned(doc, "i");
    unsigned dim = get_unsigned(doc, "dim");
    Cyc lambda = Cyc::parse(N, get_string(doc, "lambda"));
    InstancePtr inst = make_instance(m, i, lambda, N);
    if (inst->order() != N)
        fail(errk::OrderMismatch, "declared order N is incompatible with m");
    Mat gens[4];
    const char* keys[4] = {"g", "h", "x", "y"};
    for (int k = 0; k < 4; ++k) {
        const Json& mat = get_field(doc, keys[k]);
        if (get_unsigned(mat, "order") != N)
            fail(errk::OrderMismatch, std::string("matrix \"") + keys[k] +
                                          "\" must use the representation order N");
        gens[k] = mat_from_json(mat);
        if (!gens[k].is_square() || gens[k].rows() != dim)
            fail(errk::DimensionMismatch, std::string("matrix \"") + keys[k] +
                                              "\" must be square of size dim");
    }
    // No relation check here: `check` must be able to load and report on
    // files that are not valid modules.
    return make_representation(std::move(inst), std::move(gens[0]), std::move(gens[1]),
                               std::move(gens[2]), std::move(gens[3]));
}

Json violations_to_json(const std::vector<Violation>& violations) {
    Json out = Json::array();
    for (const Violation& v : violations)
        out.push_back(Json{{"relation", v.relation}, {"row", v.row}, {"col", v.col}});
    return out;
}

Json multiset_to_json(const std::map<IrrepLabel, unsigned>& parts) {
    Json out = Json::object();
    for (const auto& [label, mult] : parts) out[label_to_string(label)] = mult;
    return out;
}

Json catalog_to_json(const InstancePtr& inst, const std::vector<CatalogEntry>& entries) {
    Json list = Json::array();
    for (const CatalogEntry& e : entries)
        list.push_back(Json{
            {"label", e.label},
            {"dim", e.rep.dim},
            {"restriction", multiset_to_string(restrict_to_group(e.rep))},
            {"rep", rep_to_json(e.rep)},
        });
    return Json{
        {"schema", kSchemaTag},     {"m", inst->m()},
        {"N", inst->order()},       {"i", inst->i},
        {"lambda", inst->lambda.to_string()},
        {"count", entries.size()},  {"irreducibles", std::move(list)},
    };
}

Json family_to_json(const SolutionFamily& family) {
    Json sols = Json::array();
    for (const SolverSolution& s : family.solutions)
        sols.push_back(Json{
            {"branch", s.branch},
            {"absolutely_irreducible", is_absolutely_irreducible(s.rep)},
            {"rep", rep_to_json(s.rep)},
        });
    Json classes = Json::array();
    for (const auto& cls : family.classes) classes.push_back(cls);
    return Json{
        {"schema", kSchemaTag},
        {"status", to_string(family.status)},
        {"solutions", std::move(sols)},
        {"classes", std::move(classes)},
        {"certificates", family.certificates},
        {"residual", family.residual},
        {"free_vars", family.free_vars},
        {"exploratory", family.exploratory},
        {"notes", family.notes},
    };
}

Json fusion_to_json(const FusionTable& table, const RingReport& report) {
    Json labels = Json::array();
    for (const IrrepLabel& l : table.labels) labels.push_back(label_to_string(l));
    Json products = Json::object();
    for (size_t j = 0; j < table.labels.size(); ++j) {
        Json row = Json::object();
        for (size_t k = 0; k < table.labels.size(); ++k)
            row[label_to_string(table.labels[k])] =
                multiset_to_json(constants_row(table, static_cast<unsigned>(j),
                                               static_cast<unsigned>(k)));
        products[label_to_string(table.labels[j])] = std::move(row);
    }
    return Json{
        {"schema", kSchemaTag},
        {"m", table.params.m},
        {"labels", std::move(labels)},
        {"presents", table.presents},
        {"products", std::move(products)},
        {"ring",
         Json{{"unital", report.unital},
              {"commutative", report.commutative},
              {"associative", report.associative},
              {"dimension_law", report.dimension_law},
              {"ok", report.ok()},
              {"failures", report.failures}}},
    };
}

std::string fusion_to_csv(const FusionTable& table) {
    std::string out = "j,k,decomposition\n";
    for (size_t j = 0; j < table.labels.size(); ++j)
        for (size_t k = 0; k < table.labels.size(); ++k) {
            out += label_to_string(table.labels[j]);
            out += ',';
            out += label_to_string(table.labels[k]);
            out += ',';
            out += multiset_to_string(constants_row(table, static_cast<unsigned>(j),
                                                    static_cast<unsigned>(k)));
            out += '\n';
        }
    return out;
}

std::string multiset_to_string(const std::map<IrrepLabel, unsigned>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (const auto& [label, mult] : parts) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += std::to_string(mult) + "*";
        out += label_to_string(label);
    }
    return out;
}

} // namespace hopfrep
