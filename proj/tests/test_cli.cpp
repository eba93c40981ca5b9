/*
 * Copyright 2026 the asymnet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Drives the installed binary as a subprocess and freezes its observable
// contract: exit codes, stdout bytes and stderr diagnostics.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#ifndef ASYMNET_CLI_PATH
#error "ASYMNET_CLI_PATH must point at the built binary"
#endif
#ifndef ASYMNET_CORPUS_DIR
#error "ASYMNET_CORPUS_DIR must point at tests/corpus"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string temp_path(const std::string& hint) {
  static int counter = 0;
  return "/tmp/asymnet_cli_" + std::to_string(::getpid()) + "_" +
         std::to_string(counter++) + "_" + hint;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  REQUIRE(out.good());
}

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string out_path = temp_path("stdout");
  std::string err_path = temp_path("stderr");
  std::string cmd = std::string(ASYMNET_CLI_PATH) + " " + args + " > " +
                    out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

std::string corpus(const std::string& rel) {
  return std::string(ASYMNET_CORPUS_DIR) + "/" + rel;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("validate reports ok for a healthy file") {
  RunResult r = run_cli("validate " + corpus("valid/zones.acpt"));
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("subnetwork XY_1: ok\n") != std::string::npos);
  CHECK(r.out.find("subnetwork XY_2: ok\n") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 3) == "ok\n");
}

TEST_CASE("validate flags overlap and gaps with exit 1") {
  RunResult r = run_cli("validate " + corpus("error/err_overlap.acpt"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("invalid") != std::string::npos);
  CHECK(r.out.find("overlap") != std::string::npos);
  CHECK(r.err.find("validate: ") != std::string::npos);
  CHECK(r.err.find("invalid") != std::string::npos);
}

TEST_CASE("validate emits machine-readable json on request") {
  RunResult r = run_cli("validate --json " + corpus("error/err_overlap.acpt"));
  CHECK(r.exit_code == 1);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("valid") == false);
  bool overlap_seen = false;
  for (const auto& object : doc.at("objects")) {
    for (const auto& violation : object.at("violations")) {
      overlap_seen = overlap_seen || violation.at("kind") == "overlap";
    }
  }
  CHECK(overlap_seen);
}

TEST_CASE("every nonzero exit code path prints to stderr") {
  SUBCASE("usage errors exit 2") {
    RunResult none = run_cli("");
    CHECK(none.exit_code == 2);
    CHECK_FALSE(none.err.empty());
    RunResult unknown = run_cli("frobnicate x.acpt");
    CHECK(unknown.exit_code == 2);
    CHECK_FALSE(unknown.err.empty());
    RunResult bad_flag = run_cli("validate --no-such-flag x.acpt");
    CHECK(bad_flag.exit_code == 2);
    CHECK_FALSE(bad_flag.err.empty());
  }
  SUBCASE("missing input files exit 3") {
    RunResult r = run_cli("validate /nonexistent/model.acpt");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("io-error") != std::string::npos);
  }
  SUBCASE("the atom budget exits 4") {
    RunResult r = run_cli("validate " + corpus("error/err_resource.acpt"));
    CHECK(r.exit_code == 4);
    CHECK(r.err.find("atom-limit-exceeded") != std::string::npos);
  }
  SUBCASE("parse failures exit 1 with located diagnostics") {
    RunResult r = run_cli("validate " + corpus("error/err_duplicate.acpt"));
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("parse-failed") != std::string::npos);
    CHECK(r.err.find(":3:10: duplicate name:") != std::string::npos);
  }
}

TEST_CASE("a larger atom budget unblocks the resource file") {
  RunResult r = run_cli("validate --max-atoms 3000000 " +
                        corpus("error/err_resource.acpt"));
  CHECK(r.exit_code == 0);
}

TEST_CASE("atoms prints the expansion of a named brace") {
  RunResult r =
      run_cli("atoms " + corpus("valid/zones.acpt") + " --element XY_1_1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "variables: X Y\n(x1, y1)\n(x2, y4)\n(x3, y4)\n");

  RunResult missing =
      run_cli("atoms " + corpus("valid/zones.acpt") + " --element nope");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("nope") != std::string::npos);

  RunResult json_run = run_cli("atoms --json " + corpus("valid/zones.acpt") +
                               " --element XY_1_1");
  CHECK(json_run.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(json_run.out);
  CHECK(doc.at("variables") == nlohmann::json({"X", "Y"}));
  CHECK(doc.at("atoms").size() == 3);
}

TEST_CASE("canon output is deterministic and a fixpoint") {
  RunResult first = run_cli("canon " + corpus("valid/zones.acpt"));
  RunResult second = run_cli("canon " + corpus("valid/zones.acpt"));
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  std::string canon_file = temp_path("canon.acpt");
  spill(canon_file, first.out);
  RunResult again = run_cli("canon " + canon_file);
  CHECK(again.exit_code == 0);
  CHECK(again.out == first.out);
  std::remove(canon_file.c_str());
}

TEST_CASE("the combine, stats and expand pipeline reproduces the full table") {
  std::string combined = temp_path("combined.acpt");
  RunResult c = run_cli("combine " + corpus("valid/zones_z1.acpt") + " " +
                        corpus("valid/zones_z2.acpt") + " --out " + combined);
  CHECK(c.exit_code == 0);

  RunResult s = run_cli("stats " + combined);
  CHECK(s.exit_code == 0);
  CHECK(s.out ==
        "factored combined_W: dense_rows=24 mappings=4 "
        "distinct_distributions=4 covered_atoms=24 ratio=6\n");

  RunResult e = run_cli("expand " + combined + " --cpt combined_W");
  CHECK(e.exit_code == 0);
  CHECK(count_lines(e.out) == 25);
  CHECK(e.out.substr(0, e.out.find('\n')) == "X\tY\tZ\tW=w1\tW=w2");
  CHECK(e.out.find("x1\ty1\tz1\t0.9\t0.1\n") != std::string::npos);

  // The same end state is reachable from the single-file model.
  std::string combined2 = temp_path("combined_one.acpt");
  RunResult c2 = run_cli("combine " + corpus("valid/zones.acpt") + " --out " +
                         combined2);
  CHECK(c2.exit_code == 0);
  RunResult d = run_cli("diff " + combined + " " + combined2);
  CHECK(d.exit_code == 0);
  std::remove(combined.c_str());
  std::remove(combined2.c_str());
}

TEST_CASE("combine applies the overlap policy") {
  std::string one = corpus("valid/zones_z1.acpt");
  RunResult conflict = run_cli("combine " + one + " " + one);
  CHECK(conflict.exit_code == 1);
  CHECK(conflict.err.find("combine-conflict") != std::string::npos);

  RunResult merged = run_cli("combine --policy merge " + one + " " + one);
  CHECK(merged.exit_code == 0);

  std::string direct = temp_path("direct.acpt");
  spill(direct, merged.out);
  RunResult against = run_cli("combine " + one);
  CHECK(against.exit_code == 0);
  std::string lone = temp_path("lone.acpt");
  spill(lone, against.out);
  RunResult d = run_cli("diff " + direct + " " + lone);
  CHECK(d.exit_code == 0);
  std::remove(direct.c_str());
  std::remove(lone.c_str());
}

TEST_CASE("lift rewrites a context-bound network over wider parents") {
  RunResult r = run_cli("lift " + corpus("valid/zones.acpt") +
                        " --network XY_1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("factored XY_1 for W given X, Y, Z {") !=
        std::string::npos);
  CHECK(r.out.find("Z=z1") != std::string::npos);
}

TEST_CASE("expand refuses a gappy factored CPT and names a missing atom") {
  RunResult r = run_cli("expand " + corpus("valid/factored_partial.acpt") +
                        " --cpt PartialC");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("incomplete-coverage") != std::string::npos);
  CHECK(r.err.find("(a2, b2)") != std::string::npos);
}

TEST_CASE("stats reports every declaration in the file") {
  RunResult r = run_cli("stats " + corpus("valid/factored_partial.acpt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "factored PartialC: dense_rows=4 mappings=2 "
        "distinct_distributions=2 covered_atoms=3 ratio=2\n");

  RunResult j = run_cli("stats --json " + corpus("valid/factored_partial.acpt"));
  CHECK(j.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.at("objects").is_array());
  REQUIRE(doc.at("objects").size() == 1);
  CHECK(doc.at("objects")[0].at("dense_rows") == 4);
  CHECK(doc.at("objects")[0].at("mappings") == 2);
  CHECK(doc.at("objects")[0].at("ratio") == 2.0);
}

TEST_CASE("diff finds semantic differences and ignores formatting") {
  std::string a = corpus("valid/zones.acpt");
  RunResult same = run_cli("diff " + a + " " + a);
  CHECK(same.exit_code == 0);
  CHECK(same.out.empty());
  CHECK(same.err.empty());

  std::string canon_file = temp_path("zones_canon.acpt");
  RunResult canon_run = run_cli("canon " + a);
  spill(canon_file, canon_run.out);
  RunResult reshaped = run_cli("diff " + a + " " + canon_file);
  CHECK(reshaped.exit_code == 0);
  std::remove(canon_file.c_str());

  RunResult different = run_cli("diff " + a + " " +
                                corpus("valid/minimal.acpt"));
  CHECK(different.exit_code == 1);
  CHECK_FALSE(different.out.empty());
  CHECK(different.err.find("difference") != std::string::npos);
}

TEST_CASE("combine rejects inconsistent state spaces") {
  std::string clash = temp_path("clash.acpt");
  spill(clash,
        "variable X { x1, x9 }\nvariable W { w1, w2 }\n"
        "distribution P for W { w1: 1, w2: 1 }\n"
        "network N for W given X {\n"
        "  element all = X=x1 + X=x9 -> P\n}\n");
  RunResult r = run_cli("combine " + corpus("valid/zones_z1.acpt") + " " + clash);
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("different states") != std::string::npos);
  std::remove(clash.c_str());
}
