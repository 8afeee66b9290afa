// End-to-end tests of the CLI binary: exit codes, report validity against the
// shipped schemas, and byte-level determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ifba/report_json.hpp"
#include "ifba/schema.hpp"
#include "support.hpp"

#ifndef IFBA_CLI_PATH
#error "IFBA_CLI_PATH must be defined by the build"
#endif
#ifndef IFBA_SCHEMA_DIR
#error "IFBA_SCHEMA_DIR must be defined by the build"
#endif

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(IFBA_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Report text with the timestamp excluded, re-rendered canonically.
std::string canonical_without_timestamp(const std::filesystem::path& path) {
    auto j = ifba::report::read_json_file(path);
    j.erase("timestamp");
    return ifba::report::to_canonical_text(j);
}

void check_schema(const std::filesystem::path& report_path, const std::string& kind) {
    const auto doc = nlohmann::json::parse(slurp(report_path));
    const auto schema = nlohmann::json::parse(
        slurp(std::filesystem::path(IFBA_SCHEMA_DIR) / (kind + ".schema.json")));
    const auto res = ifba::schema::validate(doc, schema);
    INFO(kind, " schema: ", res.error);
    CHECK(res.valid);
}

} // namespace

TEST_CASE("neumann command produces a valid, correct report") {
    testsupport::TempDir dir("cli_neumann");
    const auto out = dir.file("n.json");
    CHECK(run_cli("neumann --model scalar --x 0.5 --tol 1e-8 --out " + out.string()) == 0);
    check_schema(out, "neumann");
    const auto j = ifba::report::read_json_file(out);
    CHECK(std::abs(j.at("result").at("approx_inverse").at("data").at(0).get<double>() - 2.0) <=
          1e-8);
    CHECK(j.at("result").at("terms_used").get<int>() == 28);
    CHECK(j.at("config").at("tol").get<double>() == 1e-8);
}

TEST_CASE("usage errors exit with status 2") {
    testsupport::TempDir dir("cli_usage");
    CHECK(run_cli("resolvent --model scalar --x 0.5 --lambda 0 --out " +
                  dir.file("r.json").string()) == 2);
    CHECK(run_cli("neumann --model lattice:n=2 --x 0.5 --out " + dir.file("x.json").string()) == 2);
    CHECK(run_cli("neumann --model scalar --out " + dir.file("y.json").string()) == 2);
    CHECK(run_cli("converge --model scalar --family constant --base 1 --limit 1 --r 2 --out " +
                  dir.file("z.json").string()) == 2);
    CHECK(run_cli("neumann --model scalar --x 0.5 --bogus-flag 1") == 2);
}

TEST_CASE("diverged series exits 1 and reports the trace") {
    testsupport::TempDir dir("cli_diverge");
    const auto out = dir.file("d.json");
    CHECK(run_cli("neumann --model scalar --x 1.5 --out " + out.string()) == 1);
    check_schema(out, "neumann");
    const auto j = ifba::report::read_json_file(out);
    CHECK(j.at("result").at("status") == "diverged");
    CHECK(j.at("result").at("term_norms").size() >= 8);
}

TEST_CASE("axiom failures are data, not errors") {
    testsupport::TempDir dir("cli_axioms");
    const auto out = dir.file("a.json");
    CHECK(run_cli("check-axioms --model matrix:n=2 --samples 300 --seed 7 --out " +
                  out.string()) == 0);
    check_schema(out, "check-axioms");
    const auto j = ifba::report::read_json_file(out);
    bool vi_failed = false;
    for (const auto& ax : j.at("result").at("axioms"))
        if (ax.at("id") == "vi" && ax.at("status") == "fail") vi_failed = true;
    CHECK(vi_failed);
}

TEST_CASE("every command emits a schema-valid report") {
    testsupport::TempDir dir("cli_all");
    testsupport::write_text(dir.file("z.csv"), "1,0\n0,0\n");
    testsupport::write_text(dir.file("x0.csv"), "1,0\n0,1\n");

    const std::vector<std::pair<std::string, std::string>> runs = {
        {"check-tnorm", "check-tnorm --op product --grid 11"},
        {"check-axioms", "check-axioms --model scalar --samples 200 --seed 1"},
        {"converge",
         "converge --model scalar --family perturbation --base 0 --pert 1 --limit 0 --r 0.1 --t 1"},
        {"cauchy", "cauchy --model scalar --family partial_sum --base 0.5 --r 0.1 --t 1 --p-max 10"},
        {"product-limit",
         "product-limit --model scalar --family-x perturbation --base-x 1 --pert-x 1 --limit-x 1 "
         "--family-y constant --base-y 2 --limit-y 2 --r 0.1 --t 1"},
        {"neumann", "neumann --model scalar --x 0.5 --ball-r 0.4 --ball-t 1"},
        {"inverse", "inverse --model scalar --x 0.8"},
        {"resolvent", "resolvent --model scalar --x 0.5 --lambda 2"},
        {"probe-open", "probe-open --model matrix:n=2 --x0-file " + dir.file("x0.csv").string() +
                           " --t 1 --samples 100 --seed 5"},
        {"probe-continuity", "probe-continuity --model scalar --x0 1 --epsilon 1 --samples 50 --seed 2"},
        {"tdz", "tdz --model matrix:n=2 --z-file " + dir.file("z.csv").string() + " --r 0.4 --t 1"},
        {"tdz-population", "tdz-population --model matrix:n=2 --samples 60 --seed 3"},
    };
    // Tabulated operation from CSV through check-tnorm.
    testsupport::write_text(dir.file("table.csv"),
                            ",0,0.5,1\n0,0,0,0\n0.5,0,0.25,0.5\n1,0,0.5,1\n");
    {
        const auto out = dir.file("check_tnorm_tab.json");
        CHECK(run_cli("check-tnorm --op tabulated --class tnorm --table " +
                      dir.file("table.csv").string() + " --grid 3 --out " + out.string()) == 0);
        check_schema(out, "check-tnorm");
        const auto j = ifba::report::read_json_file(out);
        CHECK(j.at("result").at("axiom_report").at("interpolation") == "bilinear");
        CHECK(j.at("result").at("axiom_report").at("all_pass").get<bool>());
    }

    // Explicit-sequence variant of converge: one scalar element per CSV row.
    testsupport::write_text(dir.file("seq.csv"), "1\n0.5\n0.25\n0.125\n0.0625\n");
    {
        const auto out = dir.file("converge_csv.json");
        CHECK(run_cli("converge --model scalar --family csv --seq-file " +
                      dir.file("seq.csv").string() + " --limit 0 --r 0.5 --t 1 --out " +
                      out.string()) == 0);
        check_schema(out, "converge");
    }
    for (const auto& [kind, args] : runs) {
        const auto out = dir.file(kind + ".json");
        INFO(kind);
        CHECK(run_cli(args + " --out " + out.string()) == 0);
        check_schema(out, kind);
    }
}

TEST_CASE("reruns with the same seed are byte-identical modulo the timestamp") {
    testsupport::TempDir dir("cli_determinism");
    const std::vector<std::pair<std::string, std::string>> runs = {
        {"a", "check-axioms --model matrix:n=2 --samples 300 --seed 11"},
        {"b", "probe-open --model scalar --x0 1 --t 1 --samples 200 --seed 12"},
        {"c", "tdz-population --model matrix:n=2 --samples 40 --seed 13"},
        {"d", "neumann --model scalar --x 0.5"},
    };
    for (const auto& [tag, args] : runs) {
        const auto out1 = dir.file(tag + "_1.json");
        const auto out2 = dir.file(tag + "_2.json");
        REQUIRE(run_cli(args + " --out " + out1.string()) == 0);
        REQUIRE(run_cli(args + " --out " + out2.string()) == 0);
        INFO(args);
        CHECK(canonical_without_timestamp(out1) == canonical_without_timestamp(out2));
    }
}

TEST_CASE("IFBA_SEED environment variable is the seed fallback") {
    testsupport::TempDir dir("cli_env");
    const auto out1 = dir.file("e1.json");
    const auto out2 = dir.file("e2.json");
    const std::string base = "check-axioms --model scalar --samples 100";
    REQUIRE(std::system(("IFBA_SEED=77 " + std::string(IFBA_CLI_PATH) + " " + base + " --out " +
                         out1.string() + " > /dev/null 2>&1")
                            .c_str()) == 0);
    REQUIRE(run_cli(base + " --seed 77 --out " + out2.string()) == 0);
    CHECK(canonical_without_timestamp(out1) == canonical_without_timestamp(out2));
}

TEST_CASE("summarize flattens reports of one kind") {
    testsupport::TempDir dir("cli_summarize");
    const auto n1 = dir.file("n1.json");
    const auto n2 = dir.file("n2.json");
    REQUIRE(run_cli("neumann --model scalar --x 0.5 --out " + n1.string()) == 0);
    REQUIRE(run_cli("neumann --model scalar --x 0.25 --out " + n2.string()) == 0);

    const auto csv = dir.file("sum.csv");
    CHECK(run_cli("summarize " + n1.string() + " " + n2.string() + " --out " + csv.string()) == 0);
    const auto text = slurp(csv);
    CHECK(text.rfind("command,model,norm_x,terms_used,residual\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(text.find("neumann,scalar,0.5,28,") != std::string::npos);

    // Mixed kinds are a usage error.
    const auto t1 = dir.file("t1.json");
    testsupport::write_text(dir.file("z.csv"), "1,0\n0,0\n");
    REQUIRE(run_cli("tdz --model matrix:n=2 --z-file " + dir.file("z.csv").string() + " --out " +
                    t1.string()) == 0);
    CHECK(run_cli("summarize " + n1.string() + " " + t1.string() + " --out " +
                  dir.file("bad.csv").string()) == 2);

    // Empty input with a kind hint: header-only CSV.
    const auto empty_csv = dir.file("empty.csv");
    CHECK(run_cli("summarize --kind neumann --out " + empty_csv.string()) == 0);
    CHECK(slurp(empty_csv) == "command,model,norm_x,terms_used,residual\n");
}

TEST_CASE("probe-open with an adversarial radius still exits 0 and flags the bound") {
    testsupport::TempDir dir("cli_adversarial");
    const auto out = dir.file("p.json");
    CHECK(run_cli("probe-open --model scalar --x0 1 --t 1 --samples 100 --seed 9 --r 0.9 --out " +
                  out.string()) == 0);
    const auto j = ifba::report::read_json_file(out);
    CHECK(j.at("result").at("bound_exceeded").get<bool>());
    CHECK(j.at("result").at("uncertified_count").get<int>() > 0);
    CHECK(j.at("result").contains("first_uncertified"));
}
