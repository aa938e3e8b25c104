// End-to-end checks of the command-line binary: exit codes, output
// schemas, report files.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "neumaier/graph.hpp"
#include "neumaier/graph6.hpp"
#include "neumaier/json_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    fs::path out = fs::temp_directory_path() / "neumaier_cli_out.txt";
    std::string cmd = g_binary + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::ostringstream os;
    os << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, os.str()};
}

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::printf("[PASS] %s\n", what.c_str());
    } else {
        std::printf("[FAIL] %s\n", what.c_str());
        ++g_failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
        return 2;
    }
    g_binary = argv[1];
    fs::path work = fs::temp_directory_path() / "neumaier_cli_tests";
    fs::create_directories(work);

    {
        auto r = run("generate icosahedron --format graph6");
        expect(r.exit_code == 0, "generate exits 0");
        std::string g6 = r.output.substr(0, r.output.find('\n'));
        auto g = neumaier::graph6_decode(g6);
        auto rc = neumaier::classify_regularity(g);
        expect(rc.is_edge_regular() && rc.erg() == neumaier::ErgParams{12, 5, 2},
               "generate emits an edge-regular (12,5,2) graph6 string");
    }
    {
        auto r = run("generate --list");
        expect(r.exit_code == 0 && json::parse(r.output).size() == 7,
               "generate --list reports the registry");
    }
    {
        auto r = run("generate nosuch");
        expect(r.exit_code == 2, "unknown generator exits 2");
    }
    {
        auto r = run("generate circulant --n 65 --log2-powers");
        auto j = json::parse(r.output);
        expect(r.exit_code == 0 && j.at("regularity") == "edge_regular(65,12,3)",
               "circulant --log2-powers is edge-regular (65,12,3)");
    }

    // Build a recipe from the generate output.
    fs::path recipe = work / "recipe.json";
    {
        auto r = run("generate icosahedron");
        auto j = json::parse(r.output);
        json rec{{"inputs", json::array({json{{"graph6", j.at("graph6")},
                                              {"partition", j.at("partition")}},
                                         json{{"graph6", j.at("graph6")},
                                              {"partition", j.at("partition")}}})},
                 {"pi", json::array({json::array({2, 1, 4, 3, 6, 5})})}};
        std::ofstream out(recipe);
        out << rec.dump();
    }
    {
        auto r = run("construct --recipe " + recipe.string() + " --out " + (work / "c").string());
        auto j = json::parse(r.output);
        expect(r.exit_code == 0 && j.at("certificate").at("params").at("v") == 24 &&
                   j.at("certificate").at("strict") == true &&
                   j.at("strictness_basis") == "theorem",
               "construct certifies a strict 24-vertex graph");
        expect(fs::exists(work / "c" / "report.json"), "construct writes a run report");
        auto report = json::parse(std::ifstream(work / "c" / "report.json"));
        expect(report.contains("tool_version") && report.at("outputs").contains("graph6"),
               "run report embeds the output graph");
    }
    {
        // one input graph where t = 2 is required: validation error
        auto r = run("generate icosahedron");
        auto j = json::parse(r.output);
        json bad{{"inputs", json::array({json{{"graph6", j.at("graph6")},
                                              {"partition", j.at("partition")}}})},
                 {"pi", json::array()}};
        fs::path bad_path = work / "bad.json";
        std::ofstream(bad_path) << bad.dump();
        auto rr = run("construct --recipe " + bad_path.string());
        expect(rr.exit_code == 2, "invalid recipe exits 2");
    }
    {
        auto r = run("switch --recipe " + recipe.string() + " -I 1 --i 1 --j 2");
        auto j = json::parse(r.output);
        expect(r.exit_code == 0 && j.at("cospectral") == true &&
                   j.at("pi_prime") == json::array({json::array({1, 2, 4, 3, 6, 5})}),
               "switch reports the updated tuple and cospectrality");
    }
    {
        auto r = run("reproduce 4.2 --out " + (work / "r").string());
        expect(r.exit_code == 0, "reproduce 4.2 exits 0");
        expect(fs::exists(work / "r" / "reproduce-4.2.json"), "reproduce writes a report");
    }
    {
        auto r = run("reproduce nosuch");
        expect(r.exit_code == 2, "unknown section exits 2");
    }
    {
        auto r = run("");
        expect(r.exit_code == 2, "missing subcommand exits 2");
    }
    {
        auto r = run("reproduce 5-tables --row n=6");
        expect(r.exit_code == 0 && r.output.find("desk-scale") != std::string::npos,
               "desk-scale table row is accepted");
    }

    if (g_failures > 0) std::printf("%d CLI check(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
