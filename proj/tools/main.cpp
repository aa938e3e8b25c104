#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "neumaier/canonical.hpp"
#include "neumaier/construction.hpp"
#include "neumaier/errors.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/graph6.hpp"
#include "neumaier/json_io.hpp"
#include "neumaier/spectral.hpp"
#include "neumaier/switching.hpp"
#include "neumaier/version.hpp"
#include "reproduce.hpp"

namespace fs = std::filesystem;
using neumaier::json;

namespace {

// Exit codes: 0 ok, 1 mismatch, 2 usage, 3 internal-consistency failure.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw neumaier::ArgumentError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Options {
    std::string out_dir;
    std::string format = "json";
};

void emit(const Options& opts, const std::string& command, const json& inputs, json outputs,
          double wall_ms, const std::string& plain) {
    if (opts.format == "graph6") {
        std::cout << plain << "\n";
    } else {
        std::cout << outputs.dump(2) << "\n";
    }
    if (!opts.out_dir.empty()) {
        fs::create_directories(opts.out_dir);
        json report{{"command", command},
                    {"tool_version", neumaier::kVersion},
                    {"inputs", inputs},
                    {"outputs", std::move(outputs)},
                    {"wall_clock_ms", wall_ms}};
        std::ofstream out(fs::path(opts.out_dir) / "report.json");
        out << report.dump(2) << "\n";
    }
}

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

int cmd_generate(const Options& opts, const std::string& name, int n,
                 const std::vector<int>& connections, bool log2_powers, bool list) {
    Timer timer;
    if (list) {
        json arr = json::array();
        for (const auto& info : neumaier::generator_registry()) {
            arr.push_back({{"name", info.name},
                           {"parameters", info.parameters},
                           {"description", info.description}});
            if (opts.format == "graph6") {
                std::cout << info.name << (info.parameters.empty() ? "" : " " + info.parameters)
                          << "  - " << info.description << "\n";
            }
        }
        if (opts.format != "graph6") std::cout << arr.dump(2) << "\n";
        return kOk;
    }

    neumaier::GeneratedGraph gen;
    if (name == "icosahedron" || name == "dodecahedron") {
        gen = neumaier::named_graph(name);
    } else if (name == "double-dodecahedron") {
        gen = neumaier::double_dodecahedron();
    } else if (name == "circulant65") {
        gen = neumaier::circulant_65();
    } else if (name == "delta1") {
        gen = neumaier::triangular_quotient(1);
    } else if (name == "delta2") {
        gen = neumaier::triangular_quotient(2);
    } else if (name == "circulant") {
        if (n <= 0) throw neumaier::ArgumentError("circulant requires --n");
        if (log2_powers) {
            auto conn = neumaier::power_of_two_connections(n);
            gen = {neumaier::circulant(n, conn), std::nullopt, "circulant"};
        } else if (!connections.empty()) {
            gen = {neumaier::circulant(n, connections), std::nullopt, "circulant"};
        } else {
            throw neumaier::ArgumentError("circulant requires --connections or --log2-powers");
        }
    } else {
        throw neumaier::ArgumentError("unknown generator name: " + name + " (try --list)");
    }

    std::string g6 = neumaier::graph6_encode(gen.graph);
    json outputs{{"name", name}, {"graph6", g6}, {"description", gen.description}};
    auto rc = neumaier::classify_regularity(gen.graph);
    outputs["regularity"] = rc.to_string();
    if (gen.partition) outputs["partition"] = neumaier::partition_to_json(*gen.partition);
    emit(opts, "generate " + name, json{{"digest", fnv1a_digest(g6)}}, std::move(outputs),
         timer.ms(), g6);
    return kOk;
}

int cmd_construct(const Options& opts, const std::string& recipe_path, bool no_assert,
                  bool with_spectrum) {
    Timer timer;
    auto text = read_file(recipe_path);
    auto [inputs, pi] = neumaier::recipe_from_json(json::parse(text));
    auto ctx = neumaier::make_context(std::move(inputs), std::move(pi));
    auto result = neumaier::f_pi_construct(ctx, !no_assert);
    auto cert = neumaier::certify_neumaier(result.graph, result.spread.front(), &result.spread);
    auto verdict = neumaier::strictness_verdict(ctx, result.graph);

    std::string g6 = neumaier::graph6_encode(result.graph);
    json outputs{{"graph6", g6},
                 {"spread", result.spread},
                 {"certificate", neumaier::certificate_to_json(cert)},
                 {"strictness_basis",
                  verdict.basis == neumaier::StrictnessBasis::theorem ? "theorem" : "measured"}};
    if (with_spectrum)
        outputs["spectrum"] = neumaier::spectrum_to_json(neumaier::spectrum_report(result.graph));
    emit(opts, "construct", json{{"recipe", recipe_path}, {"digest", fnv1a_digest(text)}},
         std::move(outputs), timer.ms(), g6);
    return kOk;
}

int cmd_switch(const Options& opts, const std::string& recipe_path, std::vector<int> copies, int i,
               int j) {
    Timer timer;
    auto text = read_file(recipe_path);
    auto [inputs, pi] = neumaier::recipe_from_json(json::parse(text));
    auto ctx = neumaier::make_context(std::move(inputs), std::move(pi));
    auto before = neumaier::f_pi_construct(ctx);
    auto result = neumaier::spread_switch(ctx, copies, i, j);
    bool cospec = neumaier::cospectral(before.graph, result.graph);
    if (!cospec)
        throw neumaier::InternalConsistencyError("switched graph is not cospectral with the input");

    std::string g6 = neumaier::graph6_encode(result.graph);
    json outputs{{"before_graph6", neumaier::graph6_encode(before.graph)},
                 {"after_graph6", g6},
                 {"pi_prime", result.pi_prime.perms},
                 {"cospectral", cospec},
                 {"switched_c1", result.partition.c1},
                 {"switched_c2", result.partition.c2}};
    emit(opts, "switch", json{{"recipe", recipe_path}, {"digest", fnv1a_digest(text)}},
         std::move(outputs), timer.ms(), g6);
    return kOk;
}

int cmd_reproduce(const Options& opts, const std::string& section,
                  const std::optional<std::string>& row, std::size_t limit) {
    Timer timer;
    auto report = neumaier::repro::run_section(section, row, limit);
    for (const auto& c : report.checks) {
        std::cout << (c.ok ? "   ok " : " FAIL ") << section << "/" << c.name
                  << "  expected: " << c.expected << "  actual: " << c.actual << "\n";
    }
    std::cout << (report.ok() ? "PASS " : "FAIL ") << "reproduce " << section << "\n";
    if (!opts.out_dir.empty()) {
        fs::create_directories(opts.out_dir);
        json j = neumaier::repro::report_to_json(report);
        j["tool_version"] = neumaier::kVersion;
        j["wall_clock_ms"] = timer.ms();
        std::ofstream out(fs::path(opts.out_dir) / ("reproduce-" + section + ".json"));
        out << j.dump(2) << "\n";
    }
    return report.ok() ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and exact certification of strictly Neumaier graphs"};
    app.set_version_flag("--version", neumaier::kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    Options opts;
    app.add_option("--out", opts.out_dir, "directory for run reports")->group("Global");
    app.add_option("--format", opts.format, "output format: json (default) or graph6")
        ->check(CLI::IsMember({"json", "graph6"}))
        ->group("Global");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a catalogue graph with its partition");
    std::string gen_name;
    int gen_n = 0;
    std::vector<int> gen_connections;
    bool gen_log2 = false, gen_list = false;
    generate->add_option("name", gen_name, "generator name (see --list)");
    generate->add_option("--n", gen_n, "order of the circulant");
    generate->add_option("--connections", gen_connections, "circulant connection residues")
        ->delimiter(',');
    generate->add_flag("--log2-powers", gen_log2, "use the powers of 2 as connection set");
    generate->add_flag("--list", gen_list, "list the generator registry");

    // construct
    auto* construct = app.add_subcommand("construct", "run the clique-spread construction");
    std::string recipe_path;
    bool no_assert = false, with_spectrum = false;
    construct->add_option("--recipe", recipe_path, "recipe JSON file")->required();
    construct->add_flag("--no-assert", no_assert, "skip postcondition checks (batch mode)");
    construct->add_flag("--spectrum", with_spectrum, "embed the exact spectrum in the report");

    // switch
    auto* switch_cmd =
        app.add_subcommand("switch", "spectrum-preserving switch on a stored recipe");
    std::string switch_recipe;
    std::vector<int> switch_copies{1};
    int switch_i = 0, switch_j = 0;
    switch_cmd->add_option("--recipe", switch_recipe, "recipe JSON file")->required();
    switch_cmd->add_option("--copies,-I", switch_copies, "copy indices forming the switching sets")
        ->delimiter(',');
    switch_cmd->add_option("--i", switch_i, "first code index (1-based)")->required();
    switch_cmd->add_option("--j", switch_j, "second code index (1-based)")->required();

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "rebuild a catalogue target and compare");
    std::string section;
    std::string row;
    std::size_t limit = 0;
    reproduce->add_option("section", section, "target: 4.1, 4.2, 4.3, 4.4, 4.5, 5-tables")
        ->required();
    reproduce->add_option("--row", row, "5-tables row filter, e.g. n=3 or t2:n=3");
    reproduce->add_option("--limit", limit, "cap the 4.1 permutation sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (generate->parsed()) {
            if (!gen_list && gen_name.empty())
                throw neumaier::ArgumentError("generate needs a name or --list");
            return cmd_generate(opts, gen_name, gen_n, gen_connections, gen_log2, gen_list);
        }
        if (construct->parsed())
            return cmd_construct(opts, recipe_path, no_assert, with_spectrum);
        if (switch_cmd->parsed())
            return cmd_switch(opts, switch_recipe, switch_copies, switch_i, switch_j);
        if (reproduce->parsed())
            return cmd_reproduce(opts, section, row.empty() ? std::nullopt : std::optional(row),
                                 limit);
    } catch (const neumaier::InternalConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kInternal;
    } catch (const neumaier::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
