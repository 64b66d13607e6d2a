// End-to-end checks of the installed CLI binary: exit codes, file I/O and
// determinism, run through std::system against SUBARR_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const fs::path& workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "subarr_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args) {
    const std::string command =
        std::string(SUBARR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("gen then verify round-trips with exit 0") {
    const fs::path file = workdir() / "a22.json";
    CHECK(run("gen orbit-config --m 2 --n 2 -o " + file.string()) == 0);
    CHECK(run("verify " + file.string()) == 0);

    const fs::path report = workdir() / "v22.json";
    CHECK(run("verify " + file.string() + " -o " + report.string()) == 0);
    const std::string payload = slurp(report);
    CHECK(payload.find("\"status\": \"ok\"") != std::string::npos);
    CHECK(payload.find("\"betti_dga\"") != std::string::npos);
}

TEST_CASE("betti on the empty arrangement exits 0 and reports (1)") {
    const fs::path file = workdir() / "empty.json";
    std::ofstream(file) << R"({"ambient_dim": 2, "atoms": []})";
    const fs::path report = workdir() / "betti_empty.json";
    CHECK(run("betti " + file.string() + " -o " + report.string()) == 0);
    const auto doc = nlohmann::json::parse(slurp(report));
    CHECK(doc["betti_dga"] == nlohmann::json::array({1, 0, 0}));
}

TEST_CASE("the oversized generator exits with the cap code") {
    CHECK(run("gen orbit-config --m 2 --n 4") == 2);
}

TEST_CASE("missing and malformed inputs exit with the input code") {
    CHECK(run("verify " + (workdir() / "nope.json").string()) == 1);
    const fs::path bad = workdir() / "bad.json";
    std::ofstream(bad) << "{broken";
    CHECK(run("betti " + bad.string()) == 1);
    CHECK(run("gen orbit-config --m 0 --n 2") == 1);
}

TEST_CASE("reports are byte-identical across thread widths") {
    const fs::path file = workdir() / "a13.json";
    REQUIRE(run("gen orbit-config --m 1 --n 3 -o " + file.string()) == 0);
    const fs::path one = workdir() / "one.json";
    const fs::path max = workdir() / "max.json";
    CHECK(run("verify " + file.string() + " --threads 1 -o " + one.string()) == 0);
    CHECK(run("verify " + file.string() + " --threads 0 -o " + max.string()) == 0);
    CHECK(slurp(one) == slurp(max));
}

TEST_CASE("text format renders a summary") {
    const fs::path file = workdir() / "a22t.json";
    REQUIRE(run("gen orbit-config --m 2 --n 2 -o " + file.string()) == 0);
    const fs::path text = workdir() / "summary.txt";
    CHECK(run("verify " + file.string() + " --format text -o " + text.string()) == 0);
    const std::string payload = slurp(text);
    CHECK(payload.find("betti (cochain algebra): 1 9 0 0 0") != std::string::npos);
}
