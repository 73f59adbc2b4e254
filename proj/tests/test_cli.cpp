#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <chrono>
#include <algorithm>

#include "symcoef/cli.hpp"
#include "symcoef/constants.hpp"

using namespace symcoef;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("symcoef-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

TempDir& cache_dir() {
    static TempDir dir;
    return dir;
}

RunResult run_cli(std::vector<std::string> args) {
    args.push_back("--cache-dir");
    args.push_back(cache_dir().path.string());
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("golden values match the library") {
    auto kron = run_cli({"kron", "2,1", "2,1", "2,1"});
    CHECK(kron.status == 0);
    CHECK(kron.out == "1\n");

    auto syt = run_cli({"syt", "count", "2,2,1"});
    CHECK(syt.status == 0);
    CHECK(syt.out == "5\n");

    auto lr = run_cli({"lr", "6,4,3", "3,1", "4,3,2", "--output", "json"});
    CHECK(lr.status == 0);
    CHECK(lr.out == "{\"args\":[\"6,4,3\",\"3,1\",\"4,3,2\"],\"op\":\"lr\",\"value\":2}\n");

    auto kostka_out = run_cli({"kostka", "3,3,1", "2,2,2,1"});
    CHECK(kostka_out.out == "3\n");

    auto chi = run_cli({"character", "value", "2,1", "3"});
    CHECK(chi.out == "-1\n");
    auto chi_jt = run_cli({"character", "value", "2,1", "3", "--algorithm", "jt"});
    CHECK(chi_jt.out == "-1\n");

    auto pleth = run_cli({"pleth", "a", "2,2", "2", "2"});
    CHECK(pleth.out == "1\n");

    auto sk = run_cli({"sk", "2", "1,1"});
    CHECK(sk.out == "1\n");

    auto sw = run_cli({"kron", "2,2", "2,2", "2,2", "--schur-weyl"});
    CHECK(sw.out == "1\n");

    auto empty_inner = run_cli({"lr", "3", "", "3"});
    CHECK(empty_inner.status == 0);
    CHECK(empty_inner.out == "1\n");

    // a query sample against direct library calls
    CharTableProvider tables(std::nullopt);
    auto g = kronecker({Partition({3, 2}), Partition({3, 2}), Partition({4, 1})}, tables);
    auto cli_g = run_cli({"kron", "3,2", "3,2", "4,1"});
    CHECK(cli_g.out == g.str() + "\n");
}

TEST_CASE("rsk and enumeration output") {
    auto r = run_cli({"rsk", "4,1,2,3"});
    CHECK(r.status == 0);
    CHECK(r.out == "P: 1,2,3 / 4\nQ: 1,3,4 / 2\n");

    auto list = run_cli({"partition", "enumerate", "4"});
    CHECK(list.out == "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");

    auto constrained = run_cli({"partition", "enumerate", "6", "--max-length", "2"});
    CHECK(constrained.out == "6\n5,1\n4,2\n3,3\n");

    auto info = run_cli({"partition", "info", "3,2,1", "--output", "json"});
    CHECK(info.status == 0);
    CHECK(info.out.find("\"durfee\":2") != std::string::npos);
    CHECK(info.out.find("\"principal_hooks\":[5,1]") != std::string::npos);

    auto syt_list = run_cli({"syt", "list", "2,1"});
    CHECK(syt_list.out == "1,2 / 3\n1,3 / 2\n");

    auto expand = run_cli({"pleth", "expand", "2", "1,1", "--output", "json"});
    CHECK(expand.out ==
          "{\"basis\":\"schur\",\"degree\":4,\"terms\":[[[2,2],1,1],[[1,1,1,1],1,1]]}\n");
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"nosuchcmd"}).status == 1);
    CHECK(run_cli({"kron", "abc", "2,1", "2,1"}).status == 1); // malformed partition
    CHECK(run_cli({"kron", "1,3", "2,2", "2,2"}).status == 1); // not weakly decreasing
    CHECK(run_cli({"rsk", "1,3"}).status == 1);                // not a permutation
    CHECK(run_cli({"kron", "2,1", "2,1", "4"}).status == 2);   // size mismatch
    CHECK(run_cli({"lr", "3", "1", "1"}).status == 2);
    CHECK(run_cli({"partition", "enumerate", "200"}).status == 3); // over the cap
    CHECK(run_cli({"kron", "10,10", "10,10", "10,10"}).status == 3);
    CHECK(run_cli({"pleth", "a", "4,4,4,4,4", "4", "5", "--var-budget", "3"}).status == 3);
    CHECK(run_cli({}).status == 0); // help
    CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("json output is byte-stable across identical invocations") {
    auto first = run_cli({"character", "table", "5", "--output", "json"});
    auto second = run_cli({"character", "table", "5", "--output", "json"});
    CHECK(first.status == 0);
    CHECK(first.out == second.out);

    auto v1 = run_cli({"verify", "semigroup", "--samples", "10", "--bound", "6", "--seed", "99",
                       "--output", "json"});
    auto v2 = run_cli({"verify", "semigroup", "--samples", "10", "--bound", "6", "--seed", "99",
                       "--output", "json"});
    CHECK(v1.status == 0);
    // strip elapsed_ms, the only nondeterministic field
    auto strip = [](std::string s) {
        auto a = s.find("\"elapsed_ms\":");
        auto b = s.find(',', a);
        s.erase(a, b - a + 1);
        return s;
    };
    CHECK(strip(v1.out) == strip(v2.out));
}

TEST_CASE("verify subcommands and report plumbing") {
    auto saxl = run_cli({"verify", "saxl", "--k", "3"});
    CHECK(saxl.status == 0);
    CHECK(saxl.out.find("PASS") != std::string::npos);

    auto dip = run_cli({"verify", "dip", "--n", "2", "--output", "json"});
    CHECK(dip.status == 0);
    CHECK(dip.out.find("\"suite\":\"dip_identity\"") != std::string::npos);

    // the n=9 tensor-square sweep honestly reports and stays non-fatal
    auto t9 = run_cli({"verify", "tensor-square", "--n", "9"});
    CHECK(t9.status == 0);
    CHECK(t9.out.find("FAIL") != std::string::npos);

    auto kp = run_cli({"verify", "kron-pleth", "--rho", "2,1", "--n", "3", "--d", "2"});
    CHECK(kp.status == 0);

    auto foulkes = run_cli({"verify", "foulkes", "--n", "2", "--d", "3", "--var-budget", "6"});
    CHECK(foulkes.status == 0);
    CHECK(foulkes.out.find("PASS") != std::string::npos);
}

TEST_CASE("batch: order, isolation, parallel determinism") {
    TempDir dir;
    fs::path file = dir.path / "queries.jsonl";
    {
        std::ofstream out(file);
        out << R"({"op":"kron","args":["2,1","2,1","2,1"]})" << "\n";
        out << R"({"op":"syt_count","args":["2,2,1"]})" << "\n";
        out << R"({"op":"kostka","args":["3,3,1","2,2,2,1"]})" << "\n";
        out << R"({"op":"kron","args":["2,1","2,1","4"]})" << "\n"; // domain error line
        out << R"({"op":"lr","args":["6,4,3","3,1","4,3,2"]})" << "\n";
        out << R"({"op":"pleth_a","args":["2,2","2","2"]})" << "\n";
        out << R"({"op":"character","args":["2,1","3"]})" << "\n";
        out << R"(this is not json)" << "\n";
    }
    auto serial = run_cli({"batch", file.string()});
    CHECK(serial.status == 0); // per-line isolation keeps the run green
    std::vector<std::string> lines;
    std::stringstream ss(serial.out);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0].find("\"value\":1") != std::string::npos);
    CHECK(lines[1].find("\"value\":5") != std::string::npos);
    CHECK(lines[2].find("\"value\":3") != std::string::npos);
    CHECK(lines[3].find("\"error\"") != std::string::npos);
    CHECK(lines[4].find("\"value\":2") != std::string::npos);
    CHECK(lines[5].find("\"value\":1") != std::string::npos);
    CHECK(lines[6].find("\"value\":-1") != std::string::npos);
    CHECK(lines[7].find("\"error\"") != std::string::npos);

    auto parallel = run_cli({"batch", file.string(), "--threads", "4"});
    CHECK(parallel.out == serial.out);

    CHECK(run_cli({"batch", (dir.path / "missing.jsonl").string()}).status == 1);
}

TEST_CASE("batch: 1000-triple n=8 sweep completes with a warm cache") {
    TempDir dir;
    fs::path file = dir.path / "sweep.jsonl";
    auto ps = enumerate_partitions(8);
    {
        std::ofstream out(file);
        size_t count = 0;
        for (const auto& a : ps) {
            for (const auto& b : ps) {
                for (const auto& c : ps) {
                    if (count >= 1000) break;
                    out << R"({"op":"kron","args":[")" << format_partition(a) << R"(",")"
                        << format_partition(b) << R"(",")" << format_partition(c) << R"("]})"
                        << "\n";
                    ++count;
                }
                if (count >= 1000) break;
            }
            if (count >= 1000) break;
        }
    }
    run_cli({"character", "table", "8"}); // warm the disk cache
    auto start = std::chrono::steady_clock::now();
    auto sweep = run_cli({"batch", file.string(), "--threads", "4"});
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    CHECK(sweep.status == 0);
    CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 1000);
    CHECK(sweep.out.find("\"error\"") == std::string::npos);
    CHECK(elapsed < 60000);
}

TEST_CASE("cache subcommands") {
    TempDir dir;
    std::vector<std::string> base{"--cache-dir", dir.path.string()};

    std::ostringstream out1, err1;
    CHECK(cli::run({"character", "table", "4", "--cache-dir", dir.path.string()}, out1, err1) == 0);

    std::ostringstream out2, err2;
    CHECK(cli::run({"cache", "status", "--cache-dir", dir.path.string()}, out2, err2) == 0);
    CHECK(out2.str().find("chartable-v1-n4.json") != std::string::npos);

    std::ostringstream out3, err3;
    CHECK(cli::run({"cache", "clear", "--cache-dir", dir.path.string()}, out3, err3) == 0);
    CHECK(out3.str().find("removed 1") != std::string::npos);
    CHECK(!fs::exists(dir.path / "chartable-v1-n4.json"));
}

TEST_CASE("environment variable cache resolution") {
    TempDir dir;
    ::setenv("SYMCOEF_CACHE_DIR", dir.path.string().c_str(), 1);
    std::ostringstream out, err;
    CHECK(cli::run({"character", "table", "3"}, out, err) == 0);
    CHECK(fs::exists(dir.path / "chartable-v1-n3.json"));
    ::unsetenv("SYMCOEF_CACHE_DIR");
}
