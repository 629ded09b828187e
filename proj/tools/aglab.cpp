#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "aglab/census.hpp"
#include "aglab/inflation.hpp"
#include "aglab/json.hpp"
#include "aglab/structure.hpp"
#include "aglab/table_io.hpp"

namespace {

using namespace aglab;
using nlohmann::json;

// Exit codes: 0 positive/clean verdict, 1 negative verdict, 2 input error,
// 3 theorem violation (measured data contradicting a verified theorem).
constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTheoremViolation = 3;

int order_guard() {
    const char* env = std::getenv("AGLAB_MAX_ORDER");
    if (env == nullptr) return kMaxOrder;
    int value = 0;
    try {
        std::size_t used = 0;
        value = std::stoi(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw InputError("AGLAB_MAX_ORDER is not an integer");
    }
    if (value < 1 || value > kMaxOrder) {
        throw InputError("AGLAB_MAX_ORDER must be between 1 and " + std::to_string(kMaxOrder)
                         + " (hard cap)");
    }
    return value;
}

FiniteGroupoid load_groupoid(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open \"" + path + "\"");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_table(buffer.str(), order_guard());
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InputError("\"" + item + "\" is not an integer");
        }
    }
    if (values.empty()) {
        throw InputError("expected a comma-separated integer list");
    }
    return values;
}

void emit(const json& payload, bool as_json, const std::string& human) {
    if (as_json) {
        std::cout << payload.dump() << "\n";
    } else {
        std::cout << human;
    }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string set_with_labels(const FiniteGroupoid& g, const ElementSet& set) {
    std::string out = "{";
    bool first = true;
    for (int x : set) {
        if (!first) out += ", ";
        out += g.label(x);
        first = false;
    }
    return out + "}";
}

int run_check(const std::string& file, const std::string& law_name, bool as_json) {
    static const std::map<std::string, Law> laws = {
        {"invertive", Law::invertive}, {"medial", Law::medial},
        {"paramedial", Law::paramedial}, {"agss", Law::ag_star_star},
        {"assoc", Law::associative},    {"comm", Law::commutative}};
    const FiniteGroupoid g = load_groupoid(file);
    const LawReport report = check_law(g, laws.at(law_name));
    std::ostringstream human;
    if (report.holds) {
        human << law_name << ": holds\n";
    } else {
        human << law_name << ": fails at (";
        for (std::size_t i = 0; i < report.counterexample->tuple.size(); ++i) {
            human << (i ? "," : "") << g.label(report.counterexample->tuple[i]);
        }
        human << "): " << g.label(report.counterexample->lhs) << " != "
              << g.label(report.counterexample->rhs) << "\n";
    }
    emit(reports::law_report_json(report), as_json, human.str());
    return report.holds ? kExitPositive : kExitNegative;
}

int run_classify(const std::string& file, bool as_json) {
    const FiniteGroupoid g = load_groupoid(file);
    const PropertyReport r = classify(g);
    std::ostringstream human;
    human << "ag (invertive law): " << yesno(r.ag) << "\n"
          << "ag** identity: " << yesno(r.ag_star_star) << "\n"
          << "strongly regular: " << yesno(r.strongly_regular) << "\n"
          << "E(S) is a semilattice: " << yesno(r.e_semilattice) << "\n"
          << "completely inverse: " << yesno(r.completely_inverse) << "\n"
          << "class3: " << (r.class3 == Class3::all_three ? "all-three" : "none") << "\n";
    emit(reports::property_report_json(r), as_json, human.str());
    if (r.theorem3_violation) {
        std::cerr << "THEOREM-VIOLATION: Theorem 3 characterizations disagree\n";
        return kExitTheoremViolation;
    }
    return r.class3 == Class3::all_three ? kExitPositive : kExitNegative;
}

int run_inverses(const std::string& file, bool as_json) {
    const FiniteGroupoid g = load_groupoid(file);
    const InverseData data = inverse_data(g);
    std::ostringstream human;
    for (int a = 0; a < g.order(); ++a) {
        human << g.label(a) << ": V = " << set_with_labels(g, data.v[a]);
        if (data.inverse_map) {
            human << ", inverse = " << g.label((*data.inverse_map)[a])
                  << (data.commuting[a] ? " (commuting)" : "");
        }
        human << "\n";
    }
    human << "inverse map: " << (data.inverse_map ? "total" : "absent") << "\n";
    emit(reports::inverse_data_json(data), as_json, human.str());
    return kExitPositive;
}

int run_derive(const std::string& file, bool as_json) {
    const DerivedGroupoid d = derive(load_groupoid(file));
    json payload = reports::derive_json(d);
    payload["table_text"] = serialize_table(d.derived);
    emit(payload, as_json, serialize_table(d.derived));
    return kExitPositive;
}

int run_decompose(const std::string& file, bool as_json) {
    const FiniteGroupoid g = load_groupoid(file);
    const CliffordDecomposition d = clifford_decompose(g);
    std::ostringstream human;
    human << "idempotents: " << set_with_labels(g, d.idempotent_set) << "\n";
    for (const auto& [e, members] : d.groups) {
        human << "G_" << g.label(e) << " = " << set_with_labels(g, members)
              << (d.abelian.at(e) ? " (abelian)" : "") << "\n";
    }
    emit(reports::clifford_json(d), as_json, human.str());
    return kExitPositive;
}

int run_canon(const std::string& file, bool as_json) {
    const CanonicalForm form = canonical_form(load_groupoid(file));
    json payload = reports::envelope("canon");
    payload["canonical_table"] = reports::table_json(form.canonical_table);
    payload["witness_perm"] = form.witness_perm.images();
    std::ostringstream human;
    human << serialize_table(form.canonical_table) << "witness:";
    for (int v : form.witness_perm.images()) human << " " << v;
    human << "\n";
    emit(payload, as_json, human.str());
    return kExitPositive;
}

int run_iso(const std::string& file1, const std::string& file2, bool as_json) {
    const FiniteGroupoid g = load_groupoid(file1);
    const FiniteGroupoid h = load_groupoid(file2);
    const std::optional<Permutation> witness = are_isomorphic(g, h);
    json payload = reports::envelope("iso");
    payload["isomorphic"] = witness.has_value();
    payload["witness"] = witness ? json(witness->images()) : json(nullptr);
    std::ostringstream human;
    if (witness) {
        human << "isomorphic via";
        for (int v : witness->images()) human << " " << v;
        human << "\n";
    } else {
        human << "not isomorphic\n";
    }
    emit(payload, as_json, human.str());
    return witness ? kExitPositive : kExitNegative;
}

int run_autos(const std::string& file, bool involutive_only, bool efixed_only, bool as_json) {
    const FiniteGroupoid g = load_groupoid(file);
    std::vector<Automorphism> autos;
    for (const Automorphism& a : automorphisms(g)) {
        if (involutive_only && !a.involutive) continue;
        if (efixed_only && !a.e_fixed) continue;
        autos.push_back(a);
    }
    json payload = reports::envelope("autos");
    json list = json::array();
    std::ostringstream human;
    for (const Automorphism& a : autos) {
        list.push_back(reports::automorphism_json(a));
        for (int v : a.perm.images()) human << v << " ";
        human << (a.involutive ? "[involutive] " : "") << (a.e_fixed ? "[e-fixed]" : "") << "\n";
    }
    payload["automorphisms"] = std::move(list);
    payload["count"] = autos.size();
    human << "count: " << autos.size() << "\n";
    emit(payload, as_json, human.str());
    return kExitPositive;
}

int run_construct(const std::string& file, const std::string& perm_spec, bool as_json) {
    const FiniteGroupoid sga = load_groupoid(file);
    const Permutation perm(parse_int_list(perm_spec));
    const StructurePair pair = make_structure_pair(sga, perm);
    const FiniteGroupoid result = construct_thm20(pair);
    json payload = reports::envelope("construct");
    payload["result"] = reports::groupoid_json(result);
    payload["table_text"] = serialize_table(result);
    emit(payload, as_json, serialize_table(result));
    return kExitPositive;
}

int run_extract(const std::string& file, bool as_json) {
    const StructurePair pair = extract_thm21(load_groupoid(file));
    json payload = reports::envelope("extract");
    payload["sga"] = reports::groupoid_json(pair.sga);
    payload["sga_table_text"] = serialize_table(pair.sga);
    payload["automorphism"] = reports::automorphism_json(pair.automorphism);
    std::ostringstream human;
    human << serialize_table(pair.sga) << "automorphism:";
    for (int v : pair.automorphism.perm.images()) human << " " << v;
    human << "\n";
    emit(payload, as_json, human.str());
    return kExitPositive;
}

int run_roundtrip(const std::string& file, bool as_json) {
    const bool holds = roundtrip_cor22(load_groupoid(file));
    json payload = reports::envelope("roundtrip");
    payload["holds"] = holds;
    emit(payload, as_json, std::string("roundtrip: ") + (holds ? "exact" : "not applicable")
                               + "\n");
    return holds ? kExitPositive : kExitNegative;
}

int run_aggroup(const std::string& file, bool as_json) {
    const FiniteGroupoid g = load_groupoid(file);
    const AgGroupReport r = ag_group_report(g);
    std::ostringstream human;
    human << "left identity: "
          << (r.left_identity ? g.label(*r.left_identity) : std::string("none")) << "\n"
          << "AG-group: " << yesno(r.is_ag_group) << "\n"
          << "left simple: " << yesno(r.left_simple.left_simple) << "\n";
    if (r.left_simple.witness) {
        human << "proper left ideal: " << set_with_labels(g, *r.left_simple.witness) << "\n";
    }
    emit(reports::ag_group_report_json(r), as_json, human.str());
    return r.is_ag_group ? kExitPositive : kExitNegative;
}

int run_ideals(const std::string& file, bool as_json) {
    const FiniteGroupoid g = load_groupoid(file);
    json payload = reports::envelope("ideals");
    json per_element = json::array();
    std::ostringstream human;
    for (int a = 0; a < g.order(); ++a) {
        const PrincipalIdeals ideals = principal_ideals(g, a);
        per_element.push_back(json{{"element", a},
                                   {"a_s", reports::element_set_json(ideals.a_s)},
                                   {"s_a", reports::element_set_json(ideals.s_a)}});
        human << g.label(a) << "S = " << set_with_labels(g, ideals.a_s)
              << ", S" << g.label(a) << " = " << set_with_labels(g, ideals.s_a) << "\n";
    }
    payload["ideals"] = std::move(per_element);
    emit(payload, as_json, human.str());
    return kExitPositive;
}

int run_inflate(const std::string& file, const std::string& sizes_spec, bool as_json) {
    const FiniteGroupoid base = load_groupoid(file);
    const FiniteGroupoid result = inflate(base, parse_int_list(sizes_spec));
    json payload = reports::envelope("inflate");
    payload["result"] = reports::groupoid_json(result);
    payload["table_text"] = serialize_table(result);
    emit(payload, as_json, serialize_table(result));
    return kExitPositive;
}

int run_deflate(const std::string& file, bool as_json) {
    const FiniteGroupoid g = load_groupoid(file);
    const Theorem10Result r = theorem10_check(g);
    std::ostringstream human;
    human << "medial: " << yesno(r.medial) << "\n"
          << "S^2 completely inverse AG**: " << yesno(r.s2_good) << "\n";
    if (r.witness) {
        human << "base: " << set_with_labels(g, r.witness->base_elements) << "\nretraction:";
        for (int x = 0; x < g.order(); ++x) {
            human << " " << g.label(x) << "->" << g.label(r.witness->retraction[x]);
        }
        human << "\n";
    } else {
        human << "not an inflation of a completely inverse AG**-groupoid\n";
    }
    emit(reports::theorem10_json(r), as_json, human.str());
    return r.witness ? kExitPositive : kExitNegative;
}

int run_census(int order, const std::string& class_name, int jobs, const std::string& method_name,
               bool symmetry_break, bool exhaustive_unpruned, const std::string& emit_dir) {
    const std::optional<CensusClass> cls = census_class_from_name(class_name);
    if (!cls) {
        throw InputError("unknown class \"" + class_name
                         + "\" (expected all|ag|agss|cia|sga|aggroup)");
    }
    CensusOptions opts;
    opts.jobs = jobs;
    opts.symmetry_break = symmetry_break;
    opts.allow_exhaustive_unpruned = exhaustive_unpruned;
    if (method_name == "naive") {
        opts.method = EnumMethod::naive;
    } else if (method_name == "pruned") {
        opts.method = EnumMethod::pruned;
    } else if (method_name != "auto") {
        throw InputError("unknown method \"" + method_name + "\"");
    }
    const CensusResult result = enumerate_class(order, *cls, opts);
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        int index = 0;
        for (const FiniteGroupoid& g : result.canonical_tables) {
            std::ostringstream name;
            name << "canon_" << std::setw(4) << std::setfill('0') << index++ << ".tbl";
            std::ofstream out(std::filesystem::path(emit_dir) / name.str());
            out << serialize_table(g);
        }
    }
    std::cout << reports::census_json(result).dump() << "\n";
    std::cerr << "wall: " << result.stats.wall_seconds << "s\n";
    return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aglab: classify, decompose and enumerate finite Abel-Grassmann groupoids"};
    app.require_subcommand(1);
    int exit_code = kExitPositive;

    struct {
        std::string file, file2, law, perm, sizes, emit_dir;
        std::string census_class = "cia", method = "auto";
        int order = 0, jobs = 1;
        bool json = false, involutive = false, efixed = false;
        bool symmetry_break = false, exhaustive_unpruned = false;
    } args;

    const auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", args.json, "JSON output"); };

    auto* check = app.add_subcommand("check", "Check one equational law");
    check->add_option("file", args.file)->required();
    check->add_option("--law", args.law, "invertive|medial|paramedial|agss|assoc|comm")
        ->required()
        ->check(CLI::IsMember({"invertive", "medial", "paramedial", "agss", "assoc", "comm"}));
    add_json(check);
    check->callback([&] { exit_code = run_check(args.file, args.law, args.json); });

    auto* classify_cmd = app.add_subcommand("classify", "Theorem 3 class report");
    classify_cmd->add_option("file", args.file)->required();
    add_json(classify_cmd);
    classify_cmd->callback([&] { exit_code = run_classify(args.file, args.json); });

    auto* inverses_cmd = app.add_subcommand("inverses", "Left inverses, V(a), inverse map");
    inverses_cmd->add_option("file", args.file)->required();
    add_json(inverses_cmd);
    inverses_cmd->callback([&] { exit_code = run_inverses(args.file, args.json); });

    auto* derive_cmd = app.add_subcommand("derive", "Derived product table");
    derive_cmd->add_option("file", args.file)->required();
    add_json(derive_cmd);
    derive_cmd->callback([&] { exit_code = run_derive(args.file, args.json); });

    auto* decompose_cmd = app.add_subcommand("decompose", "Clifford decomposition");
    decompose_cmd->add_option("file", args.file)->required();
    add_json(decompose_cmd);
    decompose_cmd->callback([&] { exit_code = run_decompose(args.file, args.json); });

    auto* canon_cmd = app.add_subcommand("canon", "Canonical form");
    canon_cmd->add_option("file", args.file)->required();
    add_json(canon_cmd);
    canon_cmd->callback([&] { exit_code = run_canon(args.file, args.json); });

    auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test with witness");
    iso_cmd->add_option("file", args.file)->required();
    iso_cmd->add_option("file2", args.file2)->required();
    add_json(iso_cmd);
    iso_cmd->callback([&] { exit_code = run_iso(args.file, args.file2, args.json); });

    auto* autos_cmd = app.add_subcommand("autos", "Automorphism list");
    autos_cmd->add_option("file", args.file)->required();
    autos_cmd->add_flag("--involutive", args.involutive, "only involutions");
    autos_cmd->add_flag("--efixed", args.efixed, "only idempotent-fixed");
    add_json(autos_cmd);
    autos_cmd->callback(
        [&] { exit_code = run_autos(args.file, args.involutive, args.efixed, args.json); });

    auto* construct_cmd = app.add_subcommand("construct", "Theorem 20 product from (sga, A)");
    construct_cmd->add_option("file", args.file, "semilattice-of-abelian-groups table")
        ->required();
    construct_cmd->add_option("--auto", args.perm, "automorphism as comma-separated images")
        ->required();
    add_json(construct_cmd);
    construct_cmd->callback([&] { exit_code = run_construct(args.file, args.perm, args.json); });

    auto* extract_cmd = app.add_subcommand("extract", "Theorem 21 decomposition");
    extract_cmd->add_option("file", args.file)->required();
    add_json(extract_cmd);
    extract_cmd->callback([&] { exit_code = run_extract(args.file, args.json); });

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Corollary 22 round trip");
    roundtrip_cmd->add_option("file", args.file)->required();
    add_json(roundtrip_cmd);
    roundtrip_cmd->callback([&] { exit_code = run_roundtrip(args.file, args.json); });

    auto* aggroup_cmd = app.add_subcommand("aggroup", "AG-group report (Lemma 4, Theorem 8)");
    aggroup_cmd->add_option("file", args.file)->required();
    add_json(aggroup_cmd);
    aggroup_cmd->callback([&] { exit_code = run_aggroup(args.file, args.json); });

    auto* ideals_cmd = app.add_subcommand("ideals", "Principal ideals aS and Sa");
    ideals_cmd->add_option("file", args.file)->required();
    add_json(ideals_cmd);
    ideals_cmd->callback([&] { exit_code = run_ideals(args.file, args.json); });

    auto* inflate_cmd = app.add_subcommand("inflate", "Inflate a base groupoid");
    inflate_cmd->add_option("file", args.file)->required();
    inflate_cmd->add_option("--sizes", args.sizes, "per-element fiber sizes, e.g. 1,2,1")
        ->required();
    add_json(inflate_cmd);
    inflate_cmd->callback([&] { exit_code = run_inflate(args.file, args.sizes, args.json); });

    auto* deflate_cmd = app.add_subcommand("deflate", "Theorem 10 inflation witness");
    deflate_cmd->add_option("file", args.file)->required();
    add_json(deflate_cmd);
    deflate_cmd->callback([&] { exit_code = run_deflate(args.file, args.json); });

    auto* census_cmd = app.add_subcommand("census", "Enumerate isomorphism classes");
    census_cmd->add_option("--order", args.order)->required();
    census_cmd->add_option("--class", args.census_class, "all|ag|agss|cia|sga|aggroup");
    census_cmd->add_option("--jobs", args.jobs, "worker threads");
    census_cmd->add_option("--method", args.method, "auto|naive|pruned");
    census_cmd->add_flag("--symmetry-break", args.symmetry_break,
                         "prune lexicographically dominated partial tables");
    census_cmd->add_flag("--exhaustive-unpruned", args.exhaustive_unpruned,
                         "unlock the unpruned order-4 full scan");
    census_cmd->add_option("--emit-tables", args.emit_dir, "write canonical tables here");
    census_cmd->callback([&] {
        exit_code = run_census(args.order, args.census_class, args.jobs, args.method,
                               args.symmetry_break, args.exhaustive_unpruned, args.emit_dir);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    } catch (const TheoremViolation& e) {
        std::cerr << "THEOREM-VIOLATION: " << e.what() << "\n";
        return kExitTheoremViolation;
    } catch (const NotCompletelyInverse& e) {
        std::cerr << "negative: " << e.what() << "\n";
        return kExitNegative;
    } catch (const NotSemilatticeOfAbelianGroups& e) {
        std::cerr << "negative: " << e.what() << "\n";
        return kExitNegative;
    } catch (const InvalidWitness& e) {
        std::cerr << "negative: " << e.what() << "\n";
        return kExitNegative;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return exit_code;
}
