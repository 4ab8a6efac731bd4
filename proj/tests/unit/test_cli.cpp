#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(SWF_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string corpus(const std::string& name) { return std::string(SWF_CORPUS_DIR) + "/" + name + ".json"; }

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("swf_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("validate exit codes")
    {
        CHECK(run("validate " + corpus("X1")).code == 0);
        CHECK(run("validate " + temp_file("bad.json", "{ not json")).code == 2);
        const auto broken = temp_file("broken.json", R"({"name": "B", "level": 0, "m": 0, "n": "0/1",
            "free_generators": [{"name": "x1", "degree": 1}, {"name": "x2", "degree": 2}],
            "differential": {"x1": [{"coef": [[0, 0]], "target": "FIXED:c0"}],
                             "x2": [{"coef": [[0, 0]], "target": "x1"}]}})");
        CHECK(run("validate " + broken).code == 3);
        CHECK(run("check " + broken).code == 3);
        CHECK(run("validate /nonexistent/file.json").code == 2);
    }

    TEST_CASE("invariants")
    {
        const auto r = run("invariants " + corpus("X2") + " --json");
        REQUIRE(r.code == 0);
        CHECK(r.out.find("\"delta\": \"3/1\"") != std::string::npos);
        CHECK(r.out.find("\"delta_G\": \"2/1\"") != std::string::npos);
        const auto shifted = run("invariants " + corpus("X2") + " --m 2 --n 1/2 --json");
        REQUIRE(shifted.code == 0);
        CHECK(shifted.out.find("\"delta\": \"1/1\"") != std::string::npos);
        CHECK(shifted.out.find("\"alpha\": \"2/1\"") != std::string::npos);
        CHECK(run("invariants " + corpus("X2") + " --n 1/3").code == 2);
    }

    TEST_CASE("check and corpus")
    {
        CHECK(run("check --corpus").code == 0);
        CHECK(run("check " + corpus("X1") + " --theorems invariants,gysin").code == 0);
        CHECK(run("check " + corpus("X1") + " --theorems nonsense").code == 1);
        const auto list = run("corpus list");
        CHECK(list.out.find("RTILDE3") != std::string::npos);
        CHECK(run("borel " + corpus("S0") + " --group pin2 --max-degree 8").code == 0);
        CHECK(run("borel " + corpus("S0") + " --group so3").code == 1);
    }

    TEST_CASE("fuzz is deterministic")
    {
        const auto a = run("fuzz --seed 11 --count 12 --threads 3 --json");
        const auto b = run("fuzz --seed 11 --count 12 --threads 1 --json");
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}
