#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(TVCF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    return RunResult{WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("classify prints the subclass tag") {
    RunResult r = run_cli("classify perron_log x=1 --digits 32");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.at("tag") == "Dt21");
    CHECK(j.at("schema") == "tvcf/1");
    CHECK(j.contains("roots"));
}

TEST_CASE("classify --with-tail exposes the model") {
    RunResult r = run_cli("classify perron_incgamma z=1/16 alpha=4 --with-tail --digits 32");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.at("tag") == "De10");
    CHECK(j.at("tail_model").at("mu") == 1);
    CHECK(j.at("tail_model").at("m") == 1);
    CHECK(j.at("tail_model").at("theta") == 1);
    CHECK(j.at("tail_model").at("tau").contains("-1"));
}

TEST_CASE("eval reports the classical accuracy") {
    RunResult r = run_cli(
        "eval perron_digamma x=1 nu=1/2 --n 100 "
        "--reference literal:1.327052799890558739735 --digits 64");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.at("acc") == "2.25");
}

TEST_CASE("table emits the triangular CSV") {
    RunResult r = run_cli(
        "--format csv table perron_digamma x=1 nu=1/2 --rows 4 --iters 3 "
        "--reference literal:1.327052799890558739735 --digits 64");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("n,j,delta\n", 0) == 0);
    CHECK(r.out.find("1,0,1.24") != std::string::npos);
    CHECK(r.out.find("1,1,2.40") != std::string::npos);
    // triangular: no cell (4, 1)
    CHECK(r.out.find("4,1,") == std::string::npos);

    RunResult r0 = run_cli(
        "--format csv table perron_digamma x=1 nu=1/2 --rows 3 --iters 0 "
        "--reference literal:1.327052799890558739735 --digits 48");
    int lines = 0;
    for (char c : r0.out)
        if (c == '\n') ++lines;
    CHECK(lines == 4);  // header + three j=0 cells
}

TEST_CASE("full reproduction table is byte-comparable") {
    // every printed cell of the 11-row digamma table, 2-decimal CSV
    const char* golden =
        "n,j,delta\n"
        "1,0,1.24\n1,1,2.40\n1,2,3.24\n1,3,4.04\n1,4,4.82\n1,5,5.62\n1,6,6.44\n"
        "1,7,7.29\n1,8,8.17\n1,9,9.10\n1,10,10.08\n"
        "2,0,1.79\n2,1,3.03\n2,2,3.90\n2,3,4.72\n2,4,5.53\n2,5,6.36\n2,6,7.22\n"
        "2,7,8.10\n2,8,9.03\n2,9,10.01\n"
        "3,0,2.13\n3,1,3.46\n3,2,4.38\n3,3,5.25\n3,4,6.11\n3,5,6.98\n3,6,7.87\n"
        "3,7,8.80\n3,8,9.78\n"
        "4,0,2.38\n4,1,3.78\n4,2,4.76\n4,3,5.68\n4,4,6.58\n4,5,7.49\n4,6,8.43\n4,7,9.40\n"
        "5,0,2.57\n5,1,4.04\n5,2,5.08\n5,3,6.04\n5,4,6.98\n5,5,7.94\n5,6,8.91\n"
        "6,0,2.73\n6,1,4.25\n6,2,5.34\n6,3,6.34\n6,4,7.33\n6,5,8.32\n"
        "7,0,2.86\n7,1,4.44\n7,2,5.57\n7,3,6.61\n7,4,7.64\n"
        "8,0,2.98\n8,1,4.60\n8,2,5.77\n8,3,6.85\n"
        "9,0,3.08\n9,1,4.74\n9,2,5.95\n"
        "10,0,3.17\n10,1,4.87\n"
        "11,0,3.25\n";
    RunResult r = run_cli(
        "--format csv table perron_digamma x=1 nu=0.5 --rows 11 --iters 10 "
        "--reference literal:1.327052799890558739735");
    CHECK(r.status == 0);
    CHECK(r.out == golden);
}

TEST_CASE("round trip through --dump-cf and --input") {
    RunResult dumped = run_cli("classify perron_log x=-1.5+0.01i --dump-cf --digits 48");
    REQUIRE(dumped.status == 0);
    json j = json::parse(dumped.out);
    std::string path = "/tmp/tvcf_roundtrip_test.json";
    {
        std::ofstream f(path);
        f << j.at("cf").dump();
    }
    RunResult again = run_cli("classify --input " + path + " --digits 48");
    CHECK(again.status == 0);
    json j2 = json::parse(again.out);
    CHECK(j2.at("tag") == j.at("tag"));
    CHECK(j2.at("roots") == j.at("roots"));

    // identical u_{1,3} bit for bit at the same precision
    RunResult a = run_cli("accelerate perron_log x=-1.5+0.01i --rows 4 --iters 3 --digits 48");
    RunResult b = run_cli("accelerate --input " + path + " --rows 4 --iters 3 --digits 48");
    CHECK(json::parse(a.out).at("value") == json::parse(b.out).at("value"));
    std::remove(path.c_str());
}

TEST_CASE("errors map to stable codes and nonzero exit") {
    RunResult r = run_cli("eval perron_digamma x=-1 nu=1/2 --n 5 --digits 32");
    CHECK(r.status == 1);
    json j = json::parse(r.out);
    CHECK(j.at("error").at("code") == "DOMAIN_ERROR");

    RunResult r2 = run_cli("classify perron_log x=zebra --digits 32");
    CHECK(r2.status == 1);

    RunResult r3 = run_cli("accelerate perron_log x=1 --rows 3 --iters 5 --digits 32");
    CHECK(r3.status == 1);
    CHECK(json::parse(r3.out).at("error").at("code") == "DOMAIN_ERROR");
}

TEST_CASE("gallery list names the built-in instances") {
    RunResult r = run_cli("gallery list");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.at("entries").size() == 5);
    bool found = false;
    for (const auto& e : j.at("entries"))
        if (e.at("id") == "perron_cn") found = true;
    CHECK(found);
}

TEST_CASE("precision comes from the environment unless overridden") {
    RunResult r = run_cli("classify perron_log x=1", "TVCF_DIGITS=40");
    CHECK(json::parse(r.out).at("digits") == 40);
    RunResult r2 = run_cli("classify perron_log x=1 --digits 24", "TVCF_DIGITS=40");
    CHECK(json::parse(r2.out).at("digits") == 24);
}

TEST_CASE("complex literals accept rational and imaginary forms") {
    RunResult r = run_cli("eval perron_log x=-1.5+0.01i --n 10 --reference oracle --digits 32");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    // delta_10 = -0.3 for this parameter
    CHECK(j.at("acc") == "-0.28");
}
