#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "zetacomp/cli.hpp"

using namespace zetacomp;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_config(cli::RunConfig config)
{
    std::ostringstream out, err;
    const int code = cli::run(config, out, err);
    return {code, out.str(), err.str()};
}

cli::RunConfig gen_config(cli::Command command, std::string spec,
                          cli::Format format = cli::Format::plain)
{
    cli::RunConfig config;
    config.command = command;
    config.gen_spec = std::move(spec);
    config.format = format;
    return config;
}

/* Run the installed binary and capture stdout plus the exit status. */
RunResult run_binary(const std::string& args)
{
    const std::string command = std::string(ZETACOMP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output, ""};
}

} // namespace

TEST_CASE("info reports chi and the census")
{
    const RunResult chain3 = run_config(gen_config(cli::Command::info, "chain:3"));
    CHECK(chain3.code == cli::kExitOk);
    CHECK(chain3.out.find("n: 3") != std::string::npos);
    CHECK(chain3.out.find("c_k: 3 3 1") != std::string::npos);
    CHECK(chain3.out.find("\xcf\x87: 1") != std::string::npos);
    CHECK(chain3.out.find("\xcf\x87\xcc\x83: 0") != std::string::npos);

    const RunResult anti5 = run_config(gen_config(cli::Command::info, "antichain:5", cli::Format::machine));
    CHECK(anti5.code == cli::kExitOk);
    const json doc = json::parse(anti5.out);
    CHECK(doc["chi"] == "5");
    CHECK(doc["chi_reduced"] == "4");
    CHECK(doc["maximum"].is_null());

    const RunResult bool2 = run_config(gen_config(cli::Command::info, "boolean:2", cli::Format::machine));
    const json bool_doc = json::parse(bool2.out);
    CHECK(bool_doc["chi"] == "1");
    CHECK(bool_doc["det_complement"] == "0");
    CHECK(bool_doc["maximum"] == "{1,2}");
}

TEST_CASE("matrices prints all four matrices and the Mobius sum")
{
    const RunResult result = run_config(gen_config(cli::Command::matrices, "antichain:2"));
    CHECK(result.code == cli::kExitOk);
    CHECK(result.out.find("Z:\n1 0\n0 1\n") != std::string::npos);
    CHECK(result.out.find("0 1\n1 0\n") != std::string::npos); // the complement
    CHECK(result.out.find("= \xcf\x87: 2") != std::string::npos);

    const RunResult chain2 =
        run_config(gen_config(cli::Command::matrices, "chain:2", cli::Format::machine));
    const json doc = json::parse(chain2.out);
    CHECK(doc["mobius"] == json::parse(R"([["1","-1"],["0","1"]])"));
    CHECK(doc["mobius_sum"] == "1");
}

TEST_CASE("matrices --relabel renders an upper unitriangular zeta")
{
    cli::RunConfig config = gen_config(cli::Command::matrices, "random:8", cli::Format::machine);
    config.seed = 4;
    config.relabel = true;
    const RunResult result = run_config(config);
    const json doc = json::parse(result.out);
    const auto& zeta = doc["zeta"];
    for (int i = 0; i < 8; ++i) {
        CHECK(zeta[i][i] == "1");
        for (int j = 0; j < i; ++j)
            CHECK(zeta[i][j] == "0");
    }
}

TEST_CASE("charpoly prints both routes and they agree")
{
    const RunResult anti2 = run_config(gen_config(cli::Command::charpoly, "antichain:2"));
    CHECK(anti2.code == cli::kExitOk);
    CHECK(anti2.out.find("[-1, 0, 1]") != std::string::npos);
    CHECK(anti2.out.find("equal: yes") != std::string::npos);

    const RunResult chain4 = run_config(gen_config(cli::Command::charpoly, "chain:4", cli::Format::machine));
    const json doc = json::parse(chain4.out);
    CHECK(doc["formula"] == json::parse(R"(["0","0","0","0","1"])"));
    CHECK(doc["equal"] == true);

    const RunResult single = run_config(gen_config(cli::Command::charpoly, "chain:1", cli::Format::machine));
    const json sdoc = json::parse(single.out);
    CHECK(sdoc["formula"] == json::parse(R"(["0","-1"])"));
}

TEST_CASE("verify passes on generated posets")
{
    const RunResult divisor = run_config(gen_config(cli::Command::verify, "divisor:12"));
    CHECK(divisor.code == cli::kExitOk);
    CHECK(divisor.out.find("0 failed") != std::string::npos);

    cli::RunConfig config = gen_config(cli::Command::verify, "random:10", cli::Format::machine);
    config.seed = 7;
    const RunResult random = run_config(config);
    CHECK(random.code == cli::kExitOk);
    const json doc = json::parse(random.out);
    CHECK(doc["summary"]["failed"] == 0);
}

TEST_CASE("input errors exit with the usage status")
{
    // no input source
    cli::RunConfig none;
    none.command = cli::Command::info;
    CHECK(run_config(none).code == cli::kExitUsage);

    // both input sources
    cli::RunConfig both = gen_config(cli::Command::info, "chain:3");
    both.input_file = "whatever.json";
    CHECK(run_config(both).code == cli::kExitUsage);

    // malformed generator specs
    CHECK(run_config(gen_config(cli::Command::info, "chain")).code == cli::kExitUsage);
    CHECK(run_config(gen_config(cli::Command::info, "chain:x")).code == cli::kExitUsage);
    CHECK(run_config(gen_config(cli::Command::info, "mystery:4")).code == cli::kExitUsage);
    CHECK(run_config(gen_config(cli::Command::info, "chain:100000")).code == cli::kExitUsage);
    CHECK(run_config(gen_config(cli::Command::info, "divisor:-4")).code == cli::kExitUsage);

    // cyclic input file
    const std::string path = "cycle_test_poset.json";
    {
        std::ofstream file(path);
        file << R"({"names":["a","b"],"mode":"relations","pairs":[["a","b"],["b","a"]]})";
    }
    cli::RunConfig cyclic;
    cyclic.command = cli::Command::verify;
    cyclic.input_file = path;
    const RunResult result = run_config(cyclic);
    CHECK(result.code == cli::kExitUsage);
    CHECK(result.err.find("antisymmetry") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("sweep verifies whole families")
{
    cli::RunConfig exhaustive;
    exhaustive.command = cli::Command::sweep;
    exhaustive.sweep_kind = cli::SweepKind::exhaustive;
    exhaustive.sweep_n = 3;
    const RunResult result = run_config(exhaustive);
    CHECK(result.code == cli::kExitOk);
    CHECK(result.out.find("19 posets") != std::string::npos);
    CHECK(result.out.find("all pass") != std::string::npos);

    cli::RunConfig random;
    random.command = cli::Command::sweep;
    random.sweep_kind = cli::SweepKind::random;
    random.sweep_n = 8;
    random.count = 25;
    random.seed = 42;
    random.format = cli::Format::machine;
    const RunResult r = run_config(random);
    CHECK(r.code == cli::kExitOk);

    // newline-delimited: one report per poset plus the trailing summary
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    json last;
    while (std::getline(lines, line)) {
        last = json::parse(line); // every line is a standalone object
        ++count;
    }
    CHECK(count == 26);
    CHECK(last["command"] == "sweep");
    CHECK(last["posets"] == 25);
    CHECK(last["failed"] == 0);
    CHECK(last["rng"] == "mt19937_64");
}

TEST_CASE("sweep machine output is byte-identical across reruns")
{
    cli::RunConfig config;
    config.command = cli::Command::sweep;
    config.sweep_kind = cli::SweepKind::random;
    config.sweep_n = 9;
    config.count = 40;
    config.seed = 2025;
    config.format = cli::Format::machine;
    const RunResult first = run_config(config);
    const RunResult second = run_config(config);
    CHECK(first.code == cli::kExitOk);
    CHECK(first.out == second.out);
}

TEST_CASE("sweep exhaustive size guard")
{
    cli::RunConfig config;
    config.command = cli::Command::sweep;
    config.sweep_kind = cli::SweepKind::exhaustive;
    config.sweep_n = 6;
    CHECK(run_config(config).code == cli::kExitUsage);
}

TEST_CASE("the installed binary honors the exit-status contract")
{
    CHECK(run_binary("verify --gen divisor:12").code == 0);
    CHECK(run_binary("info --gen nonsense:1").code == 2);
    CHECK(run_binary("info").code == 2);          // no input source
    CHECK(run_binary("charpoly --gen chain:3 --format machine").code == 0);

    const RunResult sweep = run_binary("sweep exhaustive --n 3");
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("19 posets") != std::string::npos);
}

TEST_CASE("the installed binary produces identical sweep bytes across runs")
{
    const std::string args = "sweep random --n 8 --count 10 --seed 11 --format machine";
    const RunResult first = run_binary(args);
    const RunResult second = run_binary(args);
    CHECK(first.code == 0);
    CHECK_FALSE(first.out.empty());
    CHECK(first.out == second.out);
}
