// Golden-file checks for the CLI: each pinned invocation must reproduce its
// stored output byte for byte, and seeded subcommands must be deterministic
// across repeated runs.
//
// Usage: cli_golden <path-to-cli> <golden-dir>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult result;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((command + " 2>&1").c_str(), "r"), pclose);
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe.get()))
        result.output.append(buffer.data(), n);
    int status = pclose(pipe.release());
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int g_failures = 0;

void expect_golden(const std::string& name, const std::string& command,
                   const std::string& golden_path, int expected_exit) {
    RunResult r = run(command);
    std::string want = read_file(golden_path);
    bool ok = (r.exit_code == expected_exit) && (r.output == want);
    std::printf("[%s] golden %s\n", ok ? "PASS" : "FAIL", name.c_str());
    if (!ok) {
        ++g_failures;
        std::printf("  command: %s\n  exit: %d (want %d)\n", command.c_str(), r.exit_code,
                    expected_exit);
        std::printf("  --- got ---\n%s  --- want ---\n%s  -----------\n", r.output.c_str(),
                    want.c_str());
    }
}

void expect_deterministic(const std::string& name, const std::string& command) {
    RunResult a = run(command);
    RunResult b = run(command);
    bool ok = a.exit_code == b.exit_code && a.output == b.output && a.exit_code == 0;
    std::printf("[%s] determinism %s\n", ok ? "PASS" : "FAIL", name.c_str());
    if (!ok) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: cli_golden <cli> <golden-dir>\n");
        return 2;
    }
    std::string cli = argv[1];
    std::string dir = argv[2];

    expect_golden("cm-demo", cli + " --format kv cm-demo --xmax 100", dir + "/cm_demo_100.kv", 0);
    expect_golden("bound", cli + " --format kv bound --degree 4 --factorial", dir + "/bound_4.kv",
                  0);
    expect_golden("lattice", cli + " --format kv lattice --matrix \"[[0,1],[-1,0]]\" --samples 25",
                  dir + "/lattice_rot4.kv", 0);
    expect_golden("powermap-torus", cli + " --format kv powermap --demo torus --samples 40",
                  dir + "/powermap_torus.kv", 0);
    expect_golden("powermap-swap", cli + " --format kv powermap --demo swap --samples 60",
                  dir + "/powermap_swap.kv", 0);
    expect_golden("compare", cli + " --format kv compare --table " + dir + "/cm_60.table",
                  dir + "/compare_cm60.kv", 0);
    expect_golden("compare-force-m",
                  cli + " --format kv compare --table " + dir + "/cm_60.table --force-m 4",
                  dir + "/compare_cm60_m4.kv", 0);

    expect_deterministic("powermap-swap", cli + " --format kv powermap --demo swap --samples 30");
    expect_deterministic("cm-demo", cli + " --format kv cm-demo --xmax 300");

    // error paths: empty table and a malformed line with its position
    {
        RunResult r = run(cli + " compare --table " + dir + "/empty.table");
        bool ok = r.exit_code == 2 && r.output == "error: compare: table has no entries\n";
        std::printf("[%s] golden compare-empty\n", ok ? "PASS" : "FAIL");
        if (!ok) ++g_failures;
    }
    {
        RunResult r = run(cli + " compare --table " + dir + "/malformed.table");
        bool ok = r.exit_code == 2 &&
                  r.output == "error: line 2, column 16: invalid character 'j' in number\n";
        std::printf("[%s] golden compare-malformed\n", ok ? "PASS" : "FAIL");
        if (!ok) ++g_failures;
    }

    if (g_failures) std::printf("%d golden checks FAILED\n", g_failures);
    return g_failures;
}
