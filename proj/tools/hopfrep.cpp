#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hopfrep/error.hpp"
#include "hopfrep/json_io.hpp"

using namespace hopfrep;

namespace {

// Exit code set by subcommands that report a verdict (check).
int g_exit = 0;

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// --order 0 means "unset": fall back to HOPFREP_ORDER, then to lcm(m, 4).
unsigned effective_order(unsigned flag_value) {
    if (flag_value != 0) return flag_value;
    if (const char* env = std::getenv("HOPFREP_ORDER")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            fail(errk::ParseError, "HOPFREP_ORDER must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return 0;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errk::ParseError, "cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(errk::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

struct SolveOpts {
    unsigned m = 12;
    unsigned i = 3;
    unsigned order = 0;
    std::string lambda = "1";
    std::string z0;
    std::string spec;
    std::uint64_t seed = kEquivalenceSeed;
};

void add_instance_flags(CLI::App* cmd, SolveOpts& o) {
    cmd->add_option("--m", o.m, "group parameter m (must be 4t, t >= 3)")->required();
    cmd->add_option("--i", o.i, "algebra parameter i (1 <= i <= n-1)")->required();
    cmd->add_option("--lambda", o.lambda, "lambda as a cyclotomic literal")
        ->capture_default_str();
    cmd->add_option("--order", o.order, "cyclotomic order N (default lcm(m,4))");
    cmd->add_option("--z0", o.z0, "fourth root of -4*lambda^2 as a literal");
}

InstancePtr make_cli_instance(const SolveOpts& o) {
    unsigned order = effective_order(o.order);
    unsigned parse_order = order ? order : static_cast<unsigned>(std::lcm(o.m, 4u));
    Cyc lambda = Cyc::parse(parse_order, o.lambda);
    return make_instance(o.m, o.i, lambda, order);
}

std::optional<Cyc> parse_z0(const InstancePtr& inst, const std::string& text) {
    if (text.empty()) return std::nullopt;
    return Cyc::parse(inst->order(), text);
}

// ---- irreps-dm ------------------------------------------------------------

void run_irreps_dm(unsigned m, unsigned order_flag, const std::string& format) {
    DihedralParams params = make_dihedral(m, effective_order(order_flag));
    auto labels = all_labels(params);
    if (format == "table") {
        std::cout << "label      degree\n";
        for (const IrrepLabel& l : labels)
            std::cout << std::left << std::setw(11) << label_to_string(l)
                      << label_degree(l) << "\n";
        return;
    }
    Json list = Json::array();
    for (const IrrepLabel& l : labels)
        list.push_back(Json{{"label", label_to_string(l)}, {"degree", label_degree(l)}});
    emit(Json{{"schema", kSchemaTag},
              {"m", params.m},
              {"N", params.order},
              {"count", labels.size()},
              {"irreps", std::move(list)}});
}

// ---- irreps-ain -----------------------------------------------------------

void run_irreps_ain(const SolveOpts& o, const std::string& format) {
    InstancePtr inst = make_cli_instance(o);
    auto entries = known_irreducibles(inst, parse_z0(inst, o.z0));
    if (format == "table") {
        size_t width = 5;
        for (const CatalogEntry& e : entries) width = std::max(width, e.label.size());
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "label"
                  << std::setw(5) << "dim" << "restriction\n";
        for (const CatalogEntry& e : entries)
            std::cout << std::left << std::setw(static_cast<int>(width) + 2) << e.label
                      << std::setw(5) << e.rep.dim
                      << multiset_to_string(restrict_to_group(e.rep)) << "\n";
        return;
    }
    emit(catalog_to_json(inst, entries));
}

// ---- check / decompose / char ----------------------------------------------

void run_check(const std::string& path) {
    Representation rep = rep_from_json(load_json(path));
    auto violations = check_relations(rep);
    emit(Json{{"schema", kSchemaTag},
              {"ok", violations.empty()},
              {"dim", rep.dim},
              {"violations", violations_to_json(violations)}});
    if (!violations.empty()) g_exit = 1;
}

void run_decompose(const std::string& path, const std::string& format) {
    Representation rep = rep_from_json(load_json(path));
    auto parts = restrict_to_group(rep);
    if (format == "table") {
        std::cout << multiset_to_string(parts) << "\n";
        return;
    }
    emit(Json{{"schema", kSchemaTag},
              {"dim", rep.dim},
              {"restriction", multiset_to_json(parts)},
              {"restriction_string", multiset_to_string(parts)}});
}

void run_char(const std::string& path, unsigned m, unsigned order_flag,
              const std::string& label_text, const std::string& format) {
    if (!path.empty()) {
        Representation rep = rep_from_json(load_json(path));
        auto chi = character(rep);
        if (format == "table") {
            for (const auto& [word, value] : chi)
                std::cout << word_to_string(word) << " = " << value.to_string() << "\n";
            return;
        }
        Json values = Json::object();
        for (const auto& [word, value] : chi) values[word_to_string(word)] = value.to_string();
        emit(Json{{"schema", kSchemaTag},
                  {"kind", "algebra"},
                  {"dim", rep.dim},
                  {"character", std::move(values)}});
        return;
    }
    if (m == 0) fail(errk::ParseError, "char needs a representation file or --m with --label");
    DihedralParams params = make_dihedral(m, effective_order(order_flag));
    IrrepLabel label = label_from_string(label_text);
    validate_label(params, label);
    Character chi = character_of(params, label);
    if (format == "table") {
        for (unsigned a = 0; a < 2; ++a)
            for (unsigned b = 0; b < params.m; ++b)
                std::cout << word_to_string(BasisWord{a, b, 0, 0}) << " = "
                          << chi.at(a, b).to_string() << "\n";
        return;
    }
    Json values = Json::object();
    for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = 0; b < params.m; ++b)
            values[word_to_string(BasisWord{a, b, 0, 0})] = chi.at(a, b).to_string();
    emit(Json{{"schema", kSchemaTag},
              {"kind", "group"},
              {"m", params.m},
              {"N", params.order},
              {"label", label_to_string(label)},
              {"character", std::move(values)}});
}

// ---- solve-extensions / probe-open ------------------------------------------

void run_solver(const SolveOpts& o, bool probe) {
    InstancePtr inst = make_cli_instance(o);
    RestrictionSpec spec = parse_spec(inst->params, o.spec);
    std::optional<Cyc> z0 = parse_z0(inst, o.z0);
    SolutionFamily family;
    if (probe) {
        try {
            family = probe_open_case(inst, spec, z0, o.seed);
        } catch (const Error& e) {
            if (e.kind() != errk::NotAnOpenCase) throw;
            family = solve(inst, spec, z0, o.seed);
            family.notes.insert(family.notes.begin(),
                                "not an open configuration; routed to the standard solver");
        }
    } else {
        family = solve(inst, spec, z0, o.seed);
    }
    emit(family_to_json(family));
}

// ---- fusion -----------------------------------------------------------------

void run_fusion(unsigned m, unsigned order_flag, const std::string& format) {
    FusionTable table = fusion_table(make_dihedral(m, effective_order(order_flag)));
    if (format == "csv") {
        std::cout << fusion_to_csv(table);
        return;
    }
    if (format == "table") {
        for (size_t j = 0; j < table.labels.size(); ++j)
            for (size_t k = 0; k < table.labels.size(); ++k) {
                std::map<IrrepLabel, unsigned> parts;
                for (size_t idx = 0; idx < table.labels.size(); ++idx)
                    if (unsigned mult = table.constants[j][k][idx])
                        parts[table.labels[idx]] = mult;
                std::cout << label_to_string(table.labels[j]) << " * "
                          << label_to_string(table.labels[k]) << " = "
                          << multiset_to_string(parts) << "\n";
            }
        return;
    }
    emit(fusion_to_json(table, verify_ring(table)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact representation toolkit for the algebras A_{i,n}(lambda) over dihedral groups"};
    app.require_subcommand(1);

    std::string format = "json";

    // irreps-dm
    unsigned dm_m = 0, dm_order = 0;
    auto* dm = app.add_subcommand("irreps-dm", "list the irreducible representations of D_m");
    dm->add_option("--m", dm_m, "group parameter m")->required();
    dm->add_option("--order", dm_order, "cyclotomic order N");
    dm->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    // irreps-ain
    SolveOpts ain;
    auto* ia = app.add_subcommand("irreps-ain",
                                  "list the known irreducible representations of A_{i,n}(lambda)");
    add_instance_flags(ia, ain);
    ia->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    // check
    std::string check_path;
    auto* ck = app.add_subcommand("check", "verify the defining relations on a representation file");
    ck->add_option("file", check_path, "representation JSON file")->required();

    // decompose
    std::string dec_path;
    auto* dc = app.add_subcommand("decompose", "restriction of a representation to the group part");
    dc->add_option("file", dec_path, "representation JSON file")->required();
    dc->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    // char
    std::string char_path, char_label;
    unsigned char_m = 0, char_order = 0;
    auto* ch = app.add_subcommand("char", "character of a representation file or of a group irrep");
    ch->add_option("file", char_path, "representation JSON file");
    ch->add_option("--m", char_m, "group parameter m (with --label)");
    ch->add_option("--order", char_order, "cyclotomic order N");
    ch->add_option("--label", char_label, "group irrep label, e.g. rho(1)");
    ch->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    // solve-extensions
    SolveOpts sx;
    auto* sv = app.add_subcommand("solve-extensions",
                                  "classify extensions of a prescribed group restriction");
    add_instance_flags(sv, sx);
    sv->add_option("--spec", sx.spec, "restriction, e.g. \"rho(5)+rho(1)\"")->required();
    sv->add_option("--seed", sx.seed, "seed for sampled equivalence certificates");

    // probe-open
    SolveOpts po;
    auto* pr = app.add_subcommand("probe-open",
                                  "run the solver on an open configuration (exploratory output)");
    add_instance_flags(pr, po);
    pr->add_option("--spec", po.spec, "restriction, e.g. \"rho(3)+rho(3)\"")->required();
    pr->add_option("--seed", po.seed, "seed for sampled equivalence certificates");

    // fusion
    unsigned fu_m = 0, fu_order = 0;
    bool fu_csv = false, fu_json = false;
    auto* fu = app.add_subcommand("fusion", "Grothendieck ring table of Rep(kD_m)");
    fu->add_option("--m", fu_m, "group parameter m")->required();
    fu->add_option("--order", fu_order, "cyclotomic order N");
    auto* fu_csv_flag = fu->add_flag("--csv", fu_csv, "CSV output");
    auto* fu_json_flag = fu->add_flag("--json", fu_json, "JSON output (default)");
    fu_csv_flag->excludes(fu_json_flag);
    fu->add_option("--format", format, "json, table or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));

    dm->callback([&] { run_irreps_dm(dm_m, dm_order, format); });
    ia->callback([&] { run_irreps_ain(ain, format); });
    ck->callback([&] { run_check(check_path); });
    dc->callback([&] { run_decompose(dec_path, format); });
    ch->callback([&] { run_char(char_path, char_m, char_order, char_label, format); });
    sv->callback([&] { run_solver(sx, false); });
    pr->callback([&] { run_solver(po, true); });
    fu->callback([&] {
        if (fu_csv) format = "csv";
        if (fu_json) format = "json";
        run_fusion(fu_m, fu_order, format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::string message = e.what();
        const std::string prefix = e.kind() + ": ";
        if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
        emit(Json{{"schema", kSchemaTag}, {"error", e.kind()}, {"message", message}});
        return 1;
    } catch (const std::exception& e) {
        emit(Json{{"schema", kSchemaTag}, {"error", errk::InternalError}, {"message", e.what()}});
        return 1;
    }
    return g_exit;
}
