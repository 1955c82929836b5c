#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "ghom/input_doc.hpp"

using namespace ghom;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GHOM_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) res.output += buf.data();
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

std::string input(const std::string& name) { return std::string(GHOM_INPUTS_DIR) + "/" + name; }

}  // namespace

TEST_CASE("validate accepts good documents and rejects the broken one") {
    CHECK(run_cli("validate " + input("pair3.json")).exit_code == 0);
    CHECK(run_cli("validate " + input("sft_A.json")).exit_code == 0);

    RunResult broken = run_cli("validate " + input("broken.json"));
    CHECK(broken.exit_code == 1);
    CHECK(broken.output.find("G6") != std::string::npos);
}

TEST_CASE("parse errors exit 2") {
    CHECK(run_cli("validate /nonexistent/file.json").exit_code == 2);
    CHECK(run_cli("homology " + input("sft_A.json") + " --max-degree 1 --coefficients Q").exit_code == 2);
    CHECK(run_cli("frobnicate " + input("sft_A.json")).exit_code == 2);
}

TEST_CASE("homology of the worked SFT matrices") {
    RunResult a = run_cli("homology " + input("sft_A.json") + " --max-degree 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output.find("Z/2") != std::string::npos);

    RunResult js = run_cli("homology " + input("sft_A.json") + " --max-degree 2 --json");
    CHECK(js.exit_code == 0);
    CHECK(js.output ==
          "{\"coefficients\":\"Z\",\"degrees\":{\"0\":{\"free_rank\":0,\"torsion\":[\"2\"]},"
          "\"1\":{\"free_rank\":0,\"torsion\":[]},\"2\":{\"free_rank\":0,\"torsion\":[]}}}\n");

    // Byte-identical across runs.
    RunResult js2 = run_cli("homology " + input("sft_A.json") + " --max-degree 2 --json");
    CHECK(js.output == js2.output);

    RunResult comb = run_cli("homology " + input("sft_combined.json") + " --max-degree 1 --json");
    CHECK(comb.output ==
          "{\"coefficients\":\"Z\",\"degrees\":{\"0\":{\"free_rank\":1,\"torsion\":[\"2\",\"2\"]},"
          "\"1\":{\"free_rank\":1,\"torsion\":[]}}}\n");
}

TEST_CASE("groupoid homology through the CLI") {
    RunResult z2 = run_cli("homology " + input("z2.json") + " --max-degree 3 --json");
    CHECK(z2.exit_code == 0);
    CHECK(z2.output ==
          "{\"coefficients\":\"Z\",\"degrees\":{\"0\":{\"free_rank\":1,\"torsion\":[]},"
          "\"1\":{\"free_rank\":0,\"torsion\":[\"2\"]},\"2\":{\"free_rank\":0,\"torsion\":[]},"
          "\"3\":{\"free_rank\":0,\"torsion\":[\"2\"]}}}\n");

    RunResult mod2 = run_cli("homology " + input("z2.json") + " --max-degree 2 --coefficients Z/2");
    CHECK(mod2.exit_code == 0);

    RunResult units = run_cli("homology " + input("units5.json") + " --max-degree 2 --json");
    CHECK(units.output.find("\"free_rank\":5") != std::string::npos);
}

TEST_CASE("uct subcommand prints the three groups") {
    RunResult u = run_cli("uct " + input("sft_combined.json") + " --degree 1 --coefficients Z/2 --json");
    CHECK(u.exit_code == 0);
    CHECK(u.output ==
          "{\"degree\":1,\"left\":{\"free_rank\":0,\"torsion\":[\"2\"]},"
          "\"middle\":{\"free_rank\":0,\"torsion\":[\"2\",\"2\",\"2\"]},"
          "\"right\":{\"free_rank\":0,\"torsion\":[\"2\",\"2\"]}}\n");
}

TEST_CASE("cohomology subcommand") {
    RunResult c = run_cli("cohomology " + input("z2.json") + " --max-degree 2 --coefficients Z --json");
    CHECK(c.exit_code == 0);
    CHECK(c.output ==
          "{\"coefficients\":\"Z\",\"degrees\":{\"0\":{\"free_rank\":1,\"torsion\":[]},"
          "\"1\":{\"free_rank\":0,\"torsion\":[]},\"2\":{\"free_rank\":0,\"torsion\":[\"2\"]}}}\n");
}

TEST_CASE("mayer-vietoris subcommand reports the LES and exactness") {
    RunResult mv = run_cli("mayer-vietoris " + input("mv_three_components.json") +
                           " --u1 u1 --u2 u2 --max-degree 1");
    CHECK(mv.exit_code == 0);
    CHECK(mv.output.find("exact: yes") != std::string::npos);
    CHECK(mv.output.find("overlap") != std::string::npos);

    RunResult missing = run_cli("mayer-vietoris " + input("mv_three_components.json") +
                                " --u1 u1 --u2 nope --max-degree 1");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("subgroupoid-les subcommand") {
    RunResult s = run_cli("subgroupoid-les " + input("z4.json") + " --sub even --max-degree 1");
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("exact: yes") != std::string::npos);
}

TEST_CASE("support-local flag admits non-saturated covers") {
    std::string base = "mayer-vietoris " + input("pair2_cover.json") +
                       " --u1 left --u2 right --max-degree 1";
    RunResult rejected = run_cli(base);
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.output.find("saturated") != std::string::npos);

    RunResult local = run_cli(base + " --support-local");
    CHECK(local.exit_code == 0);
    CHECK(local.output.find("exact: yes") != std::string::npos);
}

TEST_CASE("cohomology of an sft document goes through the Ext-Hom route") {
    RunResult c = run_cli("cohomology " + input("sft_A.json") + " --max-degree 1 --json");
    CHECK(c.exit_code == 0);
    CHECK(c.output ==
          "{\"coefficients\":\"Z\",\"degrees\":{\"0\":{\"free_rank\":0,\"torsion\":[]},"
          "\"1\":{\"free_rank\":0,\"torsion\":[\"2\"]}}}\n");
}

TEST_CASE("convolve subcommand") {
    // chi_(0,1) * chi_(1,0) = chi_(0,0) on pair(2) inside pair3? Use pair(3):
    // arrows are (i,j) indexed 3i+j; chi_(0,1)=e1, chi_(1,0)=e3, product e0.
    RunResult c = run_cli("convolve " + input("pair3.json") +
                          " --f 0,1,0,0,0,0,0,0,0 --g 0,0,0,1,0,0,0,0,0");
    CHECK(c.exit_code == 0);
    CHECK(c.output == "1,0,0,0,0,0,0,0,0\n");
}

TEST_CASE("groupoid serialization round-trips bit-exactly") {
    for (const char* name : {"pair3.json", "z2.json", "mv_three_components.json"}) {
        InputDocument doc = parse_document(
            [&] {
                std::ifstream in(input(name));
                std::ostringstream ss;
                ss << in.rdbuf();
                return ss.str();
            }());
        if (doc.kind != InputDocument::Kind::Groupoid) continue;
        nlohmann::ordered_json j = groupoid_to_json(doc.groupoid);
        FiniteGroupoid back = groupoid_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == doc.groupoid);
        CHECK(groupoid_to_json(back).dump() == j.dump());
    }
}
