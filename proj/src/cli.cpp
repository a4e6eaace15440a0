#include "strippaths/cli.hpp"

#include <optional>

#include "CLI11.hpp"
#include "strippaths/bijection.hpp"
#include "strippaths/counting.hpp"
#include "strippaths/genfunc.hpp"
#include "strippaths/trees.hpp"

namespace strippaths {

namespace {

// Raised for parameter combinations CLI11 cannot check on its own.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EnumerateArgs {
    std::string family;
    std::size_t n = 0;
    int k = 0;
    std::optional<int> end;
};

struct CountArgs {
    std::size_t n = 0;
    int k = 0;
    std::string method = "formula";
};

struct MapArgs {
    std::string direction;
    int k = 0;
    std::string path;
};

struct VerifyArgs {
    std::size_t n_max = 12;
    int k_max = 5;
    bool serial = false;
};

struct TreeArgs {
    std::string op;
    std::optional<std::string> path;
    std::optional<std::string> json;
    bool pretty = false;
};

Family parse_family(const std::string& s) { return s == "A" ? Family::A : Family::B; }

LatticePath parse_path_arg(const std::string& text) {
    try {
        return parse_path(text);
    } catch (const PathParseError& e) {
        throw UsageError(e.what());
    }
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const Family f = parse_family(a.family);
    const auto paths = a.end ? enumerate_by_end(f, a.n, a.k, *a.end) : enumerate(FamilySpec::make(f, a.k), a.n);
    for (const auto& p : paths) out << format_path(p) << '\n';
    out << "count=" << paths.size() << '\n';
    return kExitOk;
}

int cmd_count(const CountArgs& a, std::ostream& out) {
    if (a.method == "brute") {
        out << enumerate(FamilySpec::a(a.k), a.n).size() << '\n';
    } else if (a.method == "formula") {
        out << strip_count(a.n, a.k) << '\n';
    } else {
        if (a.n % 2 != 0 || a.k % 2 != 0) throw UsageError("--method genfunc needs even --n and even --k");
        out << phi0_series(a.k / 2, a.n)[a.n] << '\n';
    }
    return kExitOk;
}

int cmd_map(const MapArgs& a, std::ostream& out) {
    const LatticePath p = parse_path_arg(a.path);
    const bool forward = a.direction == "a2b";
    const LatticePath image = forward ? a_to_b(p, a.k) : b_to_a(p, a.k);
    const SubsetLabel label = forward ? classify_A(p, a.k) : classify_B(p, a.k);
    out << format_path(image) << '\n' << "label=" << label.name() << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    VerifyOptions options;
    options.n_max = a.n_max;
    options.k_max = a.k_max;
    options.parallel = !a.serial;
    options.a_to_b = hooks.a_to_b;
    options.b_to_a = hooks.b_to_a;
    const VerifyReport report = run_verification(options);
    out << format_report(report);
    if (const SuiteResult* failed = report.first_failure()) {
        out << "counterexample: " << failed->counterexample << '\n';
        err << "verification failed in suite " << failed->name << '\n';
        return kExitVerifyFailed;
    }
    out << "all " << report.suites.size() << " suites passed\n";
    return kExitOk;
}

int cmd_tree(const TreeArgs& a, std::ostream& out) {
    const bool wants_path = a.op == "glove" || a.op == "elena-encode";
    if (wants_path && !a.path) throw UsageError("--op " + a.op + " needs --path");
    if (!wants_path && !a.json) throw UsageError("--op " + a.op + " needs --json");
    if (a.path && a.json) throw UsageError("give either --path or --json, not both");

    if (a.op == "glove") {
        out << to_json(glove_encode(parse_path_arg(*a.path)), a.pretty) << '\n';
    } else if (a.op == "elena-encode") {
        out << to_json(path_to_elena(parse_path_arg(*a.path)), a.pretty) << '\n';
    } else if (a.op == "unglove") {
        out << format_path(glove_decode(plane_tree_from_json(*a.json))) << '\n';
    } else if (a.op == "elena-decode") {
        out << format_path(elena_to_path(elena_tree_from_json(*a.json))) << '\n';
    } else if (a.op == "elena-to-plane") {
        out << to_json(elena_to_plane(elena_tree_from_json(*a.json)), a.pretty) << '\n';
    } else {
        out << to_json(plane_to_elena(plane_tree_from_json(*a.json)), a.pretty) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    CLI::App app{"Lattice paths in strips: enumeration, counting, bijections and tree encodings", "strippaths"};
    app.require_subcommand(1);
    const auto max_length = static_cast<std::size_t>(kMaxPathLength);
    const auto family_choice = CLI::IsMember({"A", "B"});
    const auto width = CLI::Range(1, 1 << 20);

    EnumerateArgs en;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the paths of a family, lexicographically with D < U");
    enumerate_cmd->add_option("--family", en.family, "A or B")->required()->check(family_choice);
    enumerate_cmd->add_option("--n", en.n, "Path length")->required()->check(CLI::Range(std::size_t{0}, max_length));
    enumerate_cmd->add_option("--k", en.k, "Strip width")->required()->check(width);
    enumerate_cmd->add_option("--end", en.end, "Only paths ending at this height (A: endpoint rule dropped)");

    CountArgs co;
    auto* count_cmd = app.add_subcommand("count", "Count A_{n,k}");
    count_cmd->add_option("--n", co.n, "Path length")->required()->check(CLI::Range(std::size_t{0}, max_length));
    count_cmd->add_option("--k", co.k, "Strip width")->required()->check(width);
    count_cmd->add_option("--method", co.method, "brute, formula or genfunc")
        ->check(CLI::IsMember({"brute", "formula", "genfunc"}));

    MapArgs ma;
    auto* map_cmd = app.add_subcommand("map", "Apply the bijection A_{n,k} -> B_{n,k} or its inverse");
    map_cmd->add_option("--direction", ma.direction, "a2b or b2a")->required()->check(CLI::IsMember({"a2b", "b2a"}));
    map_cmd->add_option("--k", ma.k, "Strip width")->required()->check(width);
    map_cmd->add_option("--path", ma.path, "Path over {U, D}")->required();

    VerifyArgs ve;
    auto* verify_cmd = app.add_subcommand("verify", "Run every invariant suite");
    verify_cmd->add_option("--n-max", ve.n_max, "Largest length for the strip sweeps")
        ->check(CLI::Range(std::size_t{0}, max_length));
    verify_cmd->add_option("--k-max", ve.k_max, "Largest width for the strip sweeps")->check(width);
    verify_cmd->add_flag("--serial", ve.serial, "Do not run sweep cells concurrently");

    TreeArgs tr;
    auto* tree_cmd = app.add_subcommand("tree", "Convert between paths, plane trees and Elena trees");
    tree_cmd->add_option("--op", tr.op, "glove, unglove, elena-encode, elena-decode, elena-to-plane, plane-to-elena")
        ->required()
        ->check(CLI::IsMember(
            {"glove", "unglove", "elena-encode", "elena-decode", "elena-to-plane", "plane-to-elena"}));
    tree_cmd->add_option("--path", tr.path, "Input path");
    tree_cmd->add_option("--json", tr.json, "Input tree as JSON");
    tree_cmd->add_flag("--pretty", tr.pretty, "Indent JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enumerate_cmd) return cmd_enumerate(en, out);
        if (*count_cmd) return cmd_count(co, out);
        if (*map_cmd) return cmd_map(ma, out);
        if (*verify_cmd) return cmd_verify(ve, out, err, hooks);
        return cmd_tree(tr, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const TreeFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace strippaths
