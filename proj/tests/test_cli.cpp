/*
   Copyright 2026 The hopfkernel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hopfkernel/cli.hpp"
#include "support.hpp"

using namespace hopfkernel;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hopfkernel");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(int(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string ks3() { return support::data("instances/kS3.json").string(); }
std::string group_file(const char* name) { return support::data(std::string("groups/") + name + ".group.json").string(); }

std::filesystem::path scratch(const std::string& leaf) {
    const auto dir = std::filesystem::temp_directory_path() / "hopfkernel_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / leaf;
}

std::vector<std::string> names(const nlohmann::json& members) {
    return members.get<std::vector<std::string>>();
}

}  // namespace

TEST_CASE("validate") {
    const auto r = run({"validate", ks3()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("status: pass") != std::string::npos);
    const auto j = run({"--json", "validate", ks3()}).json();
    CHECK(j["status"] == "pass");
    CHECK(j["instance"] == "kS3");
    CHECK(j["command"] == "validate");
}

TEST_CASE("validate reports violations with exit code 1") {
    auto doc = nlohmann::json::parse(std::ifstream(ks3()));
    for (auto& e : doc["fusion_h"])
        if (e[0] == 2 && e[1] == 2 && e[2] == 2) e[3] = 2;
    const auto path = scratch("bad_kS3.json");
    std::ofstream(path) << doc.dump();
    const auto r = run({"validate", path.string(), "--json"});
    CHECK(r.code == kExitAssertion);
    const auto j = r.json();
    CHECK(j["status"] == "fail");
    CHECK(r.out.find("degree homomorphism") != std::string::npos);
    // Other commands refuse an invalid instance outright.
    CHECK(run({"kernels", path.string()}).code == kExitUsage);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"validate"}).code == kExitUsage);
    const auto missing = run({"validate", support::data("instances/missing.json").string()});
    CHECK(missing.code == kExitUsage);
    CHECK_FALSE(missing.err.empty());
    CHECK(run({"normal", ks3(), "--subset", "zz"}).code == kExitUsage);
    CHECK(run({"normal", ks3()}).code == kExitUsage);
    CHECK(run({"cosets", ks3(), "--k", "t"}).code == kExitUsage);
    CHECK(run({"--eps", "-1", "validate", ks3()}).code == kExitUsage);
    const auto garbage = scratch("garbage.json");
    std::ofstream(garbage) << "{ not json";
    CHECK(run({"validate", garbage.string()}).code == kExitUsage);
}

TEST_CASE("kernels") {
    const auto r = run({"kernels", ks3(), "--json"});
    REQUIRE(r.code == kExitOk);
    const auto j = r.json();
    CHECK(names(j["findings"]["sgn"]["ker"]) == std::vector<std::string>{"e", "r", "r2"});
    CHECK(names(j["findings"]["rho"]["z"]) == std::vector<std::string>{"e"});
    CHECK(j["findings"]["sgn"]["Z_subdim"] == 6);
}

TEST_CASE("normal and core accept labels and indices") {
    const auto by_label = run({"--json", "normal", ks3(), "--subset", "r"}).json();
    CHECK(by_label["findings"]["result"]["normal"] == true);
    const auto by_index = run({"--json", "normal", ks3(), "--subset", "1"}).json();
    CHECK(by_index["findings"]["result"] == by_label["findings"]["result"]);
    const auto t = run({"--json", "normal", ks3(), "--subset", "t"}).json();
    CHECK(t["findings"]["result"]["normal"] == false);
    CHECK(t["findings"]["induced_trivial"]["multiplicities"] == nlohmann::json{{"eps", 1}, {"rho", 1}});
    const auto c = run({"core", ks3(), "--subset", "t", "--json"});
    REQUIRE(c.code == kExitOk);
    CHECK(c.out.find("\"e\"") != std::string::npos);
    CHECK(run({"core", ks3(), "--subset", "t,r"}).code == kExitOk);
}

TEST_CASE("lattice, partition and cosets") {
    CHECK(run({"lattice", ks3()}).code == kExitOk);
    const auto p = run({"partition", ks3(), "--json"});
    CHECK(p.code == kExitOk);
    CHECK(p.json()["status"] == "pass");
    const auto c = run({"cosets", ks3(), "--k", "t", "--l", "t", "--json"});
    REQUIRE(c.code == kExitOk);
    const auto j = c.json();
    CHECK(j["findings"]["classes"]["count"] == 2);
    CHECK(j["findings"]["eigen"]["eigenvalue"] == 4.0);
    CHECK(j["findings"]["dims"]["ratio"] == 1);
}

TEST_CASE("output is deterministic and independent of the thread count") {
    for (const char* cmd : {"kernels", "lattice", "partition"}) {
        CAPTURE(cmd);
        const auto a = run({cmd, ks3(), "--json"});
        const auto b = run({cmd, ks3(), "--json"});
        const auto c = run({cmd, ks3(), "--json", "--threads", "4"});
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
    const auto g1 = run({"oracle-compare", group_file("D4"), "--json"});
    const auto g2 = run({"oracle-compare", group_file("D4"), "--json", "--threads", "3"});
    CHECK(g1.code == kExitOk);
    CHECK(g1.out == g2.out);
}

TEST_CASE("build-group writes an instance that validates") {
    const auto inline_doc = run({"build-group", group_file("S3")});
    REQUIRE(inline_doc.code == kExitOk);
    CHECK(nlohmann::json::parse(inline_doc.out)["name"] == "kS3");

    const auto path = scratch("dual_S3.json");
    std::filesystem::remove(path);
    const auto built = run({"build-group", "--dual", group_file("S3"), "-o", path.string()});
    REQUIRE(built.code == kExitOk);
    REQUIRE(std::filesystem::exists(path));
    const auto v = run({"validate", path.string(), "--json"});
    CHECK(v.code == kExitOk);
    CHECK(v.json()["instance"] == "dual(kS3)");
    // Same seed, same bytes.
    const auto again = run({"build-group", group_file("A4")});
    CHECK(again.out == run({"build-group", group_file("A4"), "--seed", "20240611"}).out);
}

TEST_CASE("oracle-compare passes on the bundled groups") {
    for (const char* name : {"C2", "C4", "C2xC2", "S3", "Q8", "A4", "D5"}) {
        CAPTURE(name);
        const auto r = run({"oracle-compare", group_file(name)});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
}
