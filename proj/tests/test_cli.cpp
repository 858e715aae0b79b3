#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "pmds/cli.hpp"
#include "pmds/io.hpp"
#include "schema_validator.hpp"

using namespace pmds;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) {
    return std::string(PMDS_SOURCE_DIR) + "/data/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("pmds_cli_test_" + name);
    std::ofstream f(path);
    f << text;
    return path.string();
}

json shipped_schema() {
    std::ifstream f(std::string(PMDS_SOURCE_DIR) + "/share/pmds-report.schema.json");
    REQUIRE(f.good());
    return json::parse(f);
}

}  // namespace

TEST_CASE("construct emits the canonical code file") {
    CliResult res = run({"construct", "--m", "2", "--l", "2", "--r", "1,1", "--field", "gf(3)"});
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "field gf(3)\n"
          "params m=2 l=2 r=1,1 k=3\n"
          "1 0 1 0 1 1\n"
          "0 1 2 0 1 1\n"
          "0 0 0 1 1 2\n");
}

TEST_CASE("construct rejects too-small fields with exit 2") {
    CliResult res = run({"construct", "--m", "2", "--l", "2", "--r", "2,2", "--field", "gf(3)"});
    CHECK(res.exit_code == 2);
    CHECK(res.err.find("q >= 4") != std::string::npos);
}

TEST_CASE("construct builds locality-1 codes with extra parities") {
    CliResult res = run({"construct", "--l", "1", "--s", "2", "--m", "4", "--r", "1,1,1,1",
                         "--field", "gf(3)"});
    CHECK(res.exit_code == 0);
    ParsedFile file = parse_code_file(res.out, FileKind::Matrix);
    CHECK(file.params.s() == 2);
    CHECK(pmds_oracle(*file.matrix, file.params).is_pmds);

    // s > 1 with l > 1 is out of range for the builders.
    res = run({"construct", "--l", "2", "--s", "2", "--m", "2", "--r", "1,1", "--field",
               "gf(7)"});
    CHECK(res.exit_code == 2);
}

TEST_CASE("verify modes and exit codes") {
    CHECK(run({"verify", data_path("example_gf3_n6.code")}).exit_code == 0);
    CHECK(run({"verify", data_path("example_gf3_n6.code"), "--mode", "classify"}).exit_code == 0);
    CHECK(run({"verify", data_path("example_gf3_n6.code"), "--mode", "both"}).exit_code == 0);
    CHECK(run({"verify", data_path("example_gf3_n6.code"), "--mode", "mr"}).exit_code == 0);
    CHECK(run({"verify", data_path("example_gf7_n8_s2.code"), "--mode", "oracle"}).exit_code ==
          0);

    // A corrupted file fails with exit 1 and a witness in the report.
    std::string mutated =
        "field gf(3)\n"
        "params m=2 l=2 r=1,1 k=3\n"
        "1 0 1 0 1 1\n"
        "0 1 2 0 1 0\n"
        "0 0 0 1 1 2\n";
    std::string path = write_temp("mutated.code", mutated);
    CliResult res = run({"verify", path, "--json"});
    CHECK(res.exit_code == 1);
    json report = json::parse(res.out);
    CHECK(report["ok"] == false);
    CHECK(report["verdict"]["is_pmds"] == false);
    CHECK(report["verdict"]["failing_stage"] == "block-mds");

    CHECK(run({"verify", "no_such_file.code"}).exit_code == 2);
}

TEST_CASE("decode round trip through the CLI") {
    std::string word =
        "field gf(3)\n"
        "params m=2 l=2 r=1,1 k=3\n"
        "1 1 ? ? 0 ?\n";
    std::string wpath = write_temp("word.word", word);
    CliResult res = run({"decode", data_path("example_gf3_n6.code"), wpath});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("1 1 0 1 0 1") != std::string::npos);

    // No erasures: the word is echoed back.
    std::string intact =
        "field gf(3)\n"
        "params m=2 l=2 r=1,1 k=3\n"
        "1 1 0 1 0 1\n";
    wpath = write_temp("intact.word", intact);
    res = run({"decode", data_path("example_gf3_n6.code"), wpath});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("1 1 0 1 0 1") != std::string::npos);

    // Uncorrectable: n - k + 1 = 4 erasures.
    std::string lost =
        "field gf(3)\n"
        "params m=2 l=2 r=1,1 k=3\n"
        "? ? ? ? 0 1\n";
    wpath = write_temp("lost.word", lost);
    res = run({"decode", data_path("example_gf3_n6.code"), wpath, "--json"});
    CHECK(res.exit_code == 1);
    json report = json::parse(res.out);
    CHECK(report["verdict"]["uncorrectable"] == true);

    // A word off the code is a decode failure, not a crash.
    std::string off =
        "field gf(3)\n"
        "params m=2 l=2 r=1,1 k=3\n"
        "2 1 0 1 0 1\n";
    wpath = write_temp("off.word", off);
    CHECK(run({"decode", data_path("example_gf3_n6.code"), wpath}).exit_code == 1);

    // The structured and generic paths agree.
    std::string epath = write_temp("word2.word",
                                   "field gf(3)\n"
                                   "params m=2 l=2 r=1,1 k=3\n"
                                   "1 1 ? ? 0 ?\n");
    CliResult structured = run({"decode", data_path("example_gf3_n6.code"), epath, "--json"});
    CliResult generic =
        run({"decode", data_path("example_gf3_n6.code"), epath, "--generic", "--json"});
    CHECK(json::parse(structured.out)["verdict"]["decoder"] == "structured");
    CHECK(json::parse(generic.out)["verdict"]["decoder"] == "generic");
    CHECK(json::parse(structured.out)["verdict"]["recovered"] ==
          json::parse(generic.out)["verdict"]["recovered"]);
}

TEST_CASE("encode emits a word file") {
    CliResult res =
        run({"encode", data_path("example_gf3_n6.code"), "--message", "1,1,1"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("1 1 0 1 0 1") != std::string::npos);
    CHECK(run({"encode", data_path("example_gf3_n6.code"), "--message", "1,1"}).exit_code == 2);
}

TEST_CASE("search reports completions and respects budgets") {
    // One wildcard next to a poisoned entry: no completion can exist.
    std::string none =
        "field gf(3)\n"
        "params m=2 l=2 r=1,1 k=3\n"
        "1 0 * 0 1 1\n"
        "0 1 0 0 1 1\n"
        "0 0 0 1 1 2\n";
    std::string path = write_temp("none.tmpl", none);
    CliResult res = run({"search", path, "--json"});
    CHECK(res.exit_code == 1);
    json report = json::parse(res.out);
    CHECK(report["verdict"]["found"] == false);
    CHECK(report["verdict"]["assignments_tried"] == 3);

    // Single recoverable entry: the completion comes back as a code file.
    std::string one =
        "field gf(3)\n"
        "params m=2 l=2 r=1,1 k=3\n"
        "1 0 * 0 1 1\n"
        "0 1 2 0 1 1\n"
        "0 0 0 1 1 2\n";
    path = write_temp("one.tmpl", one);
    res = run({"search", path});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("1 0 1 0 1 1") != std::string::npos);

    CHECK(run({"search", data_path("template_gf7_n8.tmpl"), "--budget", "100"}).exit_code == 3);
}

TEST_CASE("bounds command") {
    CliResult res = run({"bounds", "--m", "2", "--l", "3", "--r", "2,1", "--s", "1", "--json"});
    CHECK(res.exit_code == 0);
    json report = json::parse(res.out);
    CHECK(report["verdict"]["min_q"] == 4);
    CHECK(report["verdict"]["doubly_extended_case"] == true);

    res = run({"bounds", "--l", "1", "--m", "3", "--s", "1", "--json"});
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["verdict"]["min_q"] == 2);

    res = run({"bounds", "--m", "2", "--l", "3", "--r", "1,1", "--s", "2", "--field", "gf(3)",
               "--json"});
    CHECK(res.exit_code == 0);
    report = json::parse(res.out);
    CHECK(report["verdict"]["min_q"] == 5);
    CHECK(report["verdict"]["necessary_conditions"]["pass"] == false);

    // Locality 1 with extra parities follows the concatenation bound.
    res = run({"bounds", "--l", "1", "--m", "4", "--s", "2", "--json"});
    CHECK(json::parse(res.out)["verdict"]["min_q"] == 3);
    res = run({"bounds", "--l", "1", "--m", "4", "--s", "3", "--json"});
    CHECK(json::parse(res.out)["verdict"]["min_q"] == 2);
    res = run({"bounds", "--l", "1", "--m", "6", "--s", "3", "--json"});
    report = json::parse(res.out);
    CHECK(report["verdict"]["min_q"] == 4);
    CHECK(report["verdict"]["doubly_extended_case"] == true);
}

TEST_CASE("classification is refused outside s=1 with exit 2") {
    CliResult res = run({"verify", data_path("example_gf7_n8_s2.code"), "--mode", "classify"});
    CHECK(res.exit_code == 2);
    res = run({"standardize", data_path("example_gf7_n8_s2.code")});
    CHECK(res.exit_code == 2);
}

TEST_CASE("decoding a two-parity code uses the generic decoder") {
    // Erase one coordinate per block plus two extras (s = 2 budget).
    std::string word =
        "field gf(7)\n"
        "params m=2 l=3 r=1,1 k=4\n"
        "? 0 0 1 ? 1 ? ?\n";
    std::string wpath = write_temp("gf7.word", word);
    CliResult res = run({"decode", data_path("example_gf7_n8_s2.code"), wpath, "--json"});
    CHECK(res.exit_code == 0);
    json report = json::parse(res.out);
    CHECK(report["verdict"]["decoder"] == "generic");
    CHECK(report["verdict"]["recovered"] == json::array({1, 0, 0, 1, 0, 1, 2, 2}));
}

TEST_CASE("standardize command") {
    CliResult res = run({"standardize", data_path("example_gf4_n9.code"), "--json"});
    CHECK(res.exit_code == 0);
    json report = json::parse(res.out);
    CHECK(report["verdict"]["standardized"] == true);
    CHECK(report["verdict"]["standard_form"]["alphas"][0] == json::array({1, 1, 1}));

    std::string zeroed =
        "field gf(3)\n"
        "params m=2 l=2 r=1,1 k=3\n"
        "1 0 1 0 0 1\n"
        "0 1 2 0 1 1\n"
        "0 0 0 1 1 2\n";
    std::string path = write_temp("zeroed.code", zeroed);
    res = run({"standardize", path});
    CHECK(res.exit_code == 1);
}

TEST_CASE("JSON reports validate against the shipped schema") {
    const json schema = shipped_schema();
    auto check_report = [&](CliResult res) {
        json report = json::parse(res.out);
        std::string why;
        bool ok = schema_validator::validate(schema, report, &why);
        INFO(why);
        CHECK(ok);
        CHECK(report["exit_code"] == res.exit_code);
    };
    check_report(run({"verify", data_path("example_gf3_n6.code"), "--json"}));
    check_report(run({"verify", data_path("example_gf3_n6.code"), "--mode", "mr", "--json"}));
    check_report(run({"construct", "--m", "2", "--l", "2", "--r", "1,1", "--field", "gf(3)",
                      "--json"}));
    check_report(run({"bounds", "--m", "2", "--l", "2", "--r", "1,1", "--json"}));
    check_report(run({"standardize", data_path("example_gf3_n6.code"), "--json"}));
    check_report(run({"verify", "missing_file.code", "--json"}));  // error envelope
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"unknown-command"}).exit_code == 2);
    CHECK(run({"construct", "--m", "2"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
}
