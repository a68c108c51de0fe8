#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_cases.hpp"

#include <cstdlib>
#include <filesystem>

// Set ENCAP_UPDATE_GOLDEN=1 to rewrite the golden files from the current build.
TEST_CASE("golden CLI output and exit codes") {
    std::filesystem::create_directories(std::string(ENCAP_BINARY_DIR) + "/empty_tree");
    const bool update = std::getenv("ENCAP_UPDATE_GOLDEN") != nullptr;
    for (const cli::Case& c : cli::cases()) {
        CAPTURE(c.args);
        const cli::Result first = cli::run(c.args);
        CHECK(first.exit_code == c.exit_code);
        if (!c.stderr_contains.empty()) CHECK(first.err.find(c.stderr_contains) != std::string::npos);
        if (c.name.empty()) {
            CHECK(first.out.empty());
            continue;
        }
        if (update) std::ofstream(cli::golden_path(c.name), std::ios::binary) << first.out;
        CHECK(first.out == cli::slurp(cli::golden_path(c.name)));
        const cli::Result second = cli::run(c.args);
        CHECK(second.out == first.out);
        CHECK(second.exit_code == first.exit_code);
    }
}

TEST_CASE("curve writes to a file") {
    const std::string path = std::string(ENCAP_BINARY_DIR) + "/curve_out.csv";
    const cli::Result r = cli::run("curve --x 10 --p 1 --n-start 100 --n-end 1000000 --points 2 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(cli::slurp(path) == "n,config_efficiency\n100,1.000000\n1000000,0.901794\n# asymptote,0.900000\n");
}
