#include "doctest.h"

// Drives the built binary end to end: output schema, formats, exit codes.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string in_file = std::string(PMC_CLI_PATH) + ".stdin.tmp";
    {
        std::ofstream f(in_file);
        f << stdin_text;
    }
    std::string cmd = std::string(PMC_CLI_PATH) + " " + args + " < " + in_file + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    std::remove(in_file.c_str());
    return {WEXITSTATUS(status), out};
}

std::string golden(const std::string& name) {
    std::ifstream f(std::string(PMC_GOLDEN_DIR) + "/" + name);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("json output matches the golden schema") {
    auto r = run_cli("solve - --output json --emit-certificate", "pmc 4 4\n0 1\n1 2\n2 3\n0 3\n");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    j["stats"]["seconds"] = 0.0;
    auto want = nlohmann::json::parse(golden("solve_c4.json"));
    CHECK(j == want);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("solve -", "pmc 4 4\n0 1\n1 2\n2 3\n0 3\n").exit_code == 0);
    CHECK(run_cli("solve -", "pmc 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").exit_code == 0); // "no"
    CHECK(run_cli("solve -", "pmc 2 1\n0 0\n").exit_code == 2);   // parse error
    CHECK(run_cli("solve -", "pmc 4 2\n0 1\n2 3\n").exit_code == 2); // disconnected
    CHECK(run_cli("solve - --solver oracle --oracle-cap 4", "pmc 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
              .exit_code == 3); // cap
    CHECK(run_cli("nonsense").exit_code != 0);
}

TEST_CASE("graph6 input is accepted") {
    auto r = run_cli("solve - --format graph6", "C~\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("no") == 0); // K4
}

TEST_CASE("gen round-trips through solve") {
    auto gen = run_cli("gen petersen");
    CHECK(gen.exit_code == 0);
    auto solved = run_cli("solve -", gen.out);
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find("yes") == 0);
}

TEST_CASE("batch mode keeps input order") {
    std::string base = std::string(PMC_CLI_PATH) + ".batch";
    {
        std::ofstream a(base + "1.gr");
        a << "pmc 4 4\n0 1\n1 2\n2 3\n0 3\n"; // C4: yes
        std::ofstream b(base + "2.gr");
        b << "pmc 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"; // K4: no
    }
    auto r = run_cli("solve --each " + base + "1.gr " + base + "2.gr");
    CHECK(r.exit_code == 0);
    auto yes_at = r.out.find("yes");
    auto no_at = r.out.find("no", yes_at + 1);
    CHECK(yes_at != std::string::npos);
    CHECK(no_at != std::string::npos);
    CHECK(yes_at < no_at);
    std::remove((base + "1.gr").c_str());
    std::remove((base + "2.gr").c_str());
}

TEST_CASE("verify subcommand") {
    std::string prism = "pmc 6 9\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n0 3\n1 4\n2 5\n";
    std::string file = std::string(PMC_CLI_PATH) + ".m.tmp";
    {
        std::ofstream f(file);
        f << "0 3\n1 4\n2 5\n";
    }
    auto ok = run_cli("verify - --matching " + file, prism);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("accepted") == 0);
    {
        std::ofstream f(file);
        f << "[[0, 1], [2, 5]]";
    }
    auto rejected = run_cli("verify - --matching " + file, prism);
    CHECK(rejected.exit_code == 0);
    CHECK(rejected.out.find("rejected") == 0);
    {
        std::ofstream f(file);
        f << "0 1\n1 2\n"; // shares a vertex: an input error
    }
    CHECK(run_cli("verify - --matching " + file, prism).exit_code == 2);
    std::remove(file.c_str());
}

TEST_CASE("reduce emits a target and a sidecar") {
    std::string base = std::string(PMC_CLI_PATH) + ".red";
    auto r = run_cli("reduce - --target diam3 -o " + base + ".gr --map " + base + ".json",
                     "pmc 2 1\n0 1\n");
    CHECK(r.exit_code == 0);
    std::ifstream tgt(base + ".gr");
    std::string header;
    std::getline(tgt, header);
    CHECK(header.rfind("pmc 12 ", 0) == 0);
    auto j = nlohmann::json::parse(std::ifstream(base + ".json"));
    CHECK(j["kind"] == "diam3");
    CHECK(j["target_n"] == 12);
    std::remove((base + ".gr").c_str());
    std::remove((base + ".json").c_str());
}

TEST_CASE("treewidth path through a supplied decomposition") {
    std::string td_file = std::string(PMC_CLI_PATH) + ".td.tmp";
    {
        std::ofstream f(td_file);
        f << "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n";
    }
    auto r = run_cli("solve - --td " + td_file + " --output json", "pmc 4 3\n0 1\n1 2\n2 3\n");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["solver"] == "treewidth");
    CHECK(j["answer"] == "yes");
    std::remove(td_file.c_str());
}
