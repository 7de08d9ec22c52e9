// Copyright 2026 The linwidth Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "linwidth/linwidth.hpp"
#include <json.hpp>

using namespace linwidth;
using namespace linwidth::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("linwidth_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename Args, typename Fn>
Run run(Fn fn, const Args& args) {
  std::ostringstream out, err;
  const int code = fn(args, out, err);
  return {code, out.str(), err.str()};
}

// Strips header lines, leaving the certificate block.
std::string certificate_block(const std::string& text) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    kept += line + "\n";
  }
  return kept;
}

// 40 vertices and 60 edges, beyond every exact engine's default guard.
Graph ten_k4() {
  Graph g = gen::clique(4);
  for (int i = 1; i < 10; ++i) g = gen::disjoint_union(g, gen::clique(4));
  return g;
}

const char* kK3 = "p 3 3\ne 1 2\ne 2 3\ne 1 3\n";

}  // namespace

TEST_CASE("compute with each engine", "[cli]") {
  TempDir dir;
  const std::string k3 = dir.write("k3.gr", kK3);
  for (const char* engine : {"auto", "brute", "dp2m", "closure2n", "approx"}) {
    ComputeArgs args;
    args.input = k3;
    args.engine = engine;
    const Run r = run(cmd_compute, args);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("# width: 2\n") != std::string::npos);
    CHECK(r.out.find("layout\n") != std::string::npos);
  }
  ComputeArgs args;
  args.input = k3;
  args.format = Format::kStructured;
  const Run r = run(cmd_compute, args);
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["width"] == 2);
  CHECK(doc["engine"] == "brute");
  CHECK(doc["sha256"].get<std::string>().size() == 64);
  CHECK(doc["seconds"].is_number());
}

TEST_CASE("compute in decision mode", "[cli]") {
  TempDir dir;
  const std::string k3 = dir.write("k3.gr", kK3);
  ComputeArgs args;
  args.input = k3;
  args.engine = "closure2n";
  args.bound = 1;
  Run r = run(cmd_compute, args);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("no layout of width <= 1") != std::string::npos);
  args.bound = 2;
  r = run(cmd_compute, args);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("# decision: true") != std::string::npos);

  args.engine = "approx";
  CHECK(run(cmd_compute, args).code == kExitParse);
}

TEST_CASE("compute error exits", "[cli]") {
  TempDir dir;
  ComputeArgs args;
  args.input = dir.write("bad.gr", "p 3 1\ne 1 1\n");
  Run r = run(cmd_compute, args);
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("self") != std::string::npos);

  args.input = dir.path() + "/missing.gr";
  CHECK(run(cmd_compute, args).code == kExitParse);

  args.input = dir.write("k3.gr", kK3);
  args.engine = "nope";
  CHECK(run(cmd_compute, args).code == kExitParse);

  const std::string big_text = serialize_graph(ten_k4());
  args.input = dir.write("big.gr", big_text);
  args.engine = "auto";
  r = run(cmd_compute, args);
  CHECK(r.code == kExitGuard);
  CHECK(r.err.find("approx") != std::string::npos);
  args.engine = "approx";
  CHECK(run(cmd_compute, args).code == kExitOk);
}

TEST_CASE("verify accepts and rejects", "[cli]") {
  TempDir dir;
  const std::string k3 = dir.write("k3.gr", kK3);
  const std::string good = dir.write("good.cert", "layout\n1 2 3\nend\n");
  VerifyArgs args{k3, good, 2};
  Run r = run(cmd_verify, args);
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("pass:", 0) == 0);
  args.claimed_width = 1;
  r = run(cmd_verify, args);
  CHECK(r.code == kExitFail);
  CHECK(r.out.rfind("fail:", 0) == 0);

  // Edge {1,3} lies in no bag.
  const std::string p3pd = dir.write("p3.cert", "pd\n1 2\n2 3\nend\n");
  VerifyArgs pd_args{k3, p3pd, 5};
  r = run(cmd_verify, pd_args);
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("edge") != std::string::npos);

  const std::string wrong = dir.write("wrong.cert", "layout\n1 2\nend\n");
  VerifyArgs short_args{k3, wrong, 3};
  CHECK(run(cmd_verify, short_args).code == kExitFail);

  const std::string junk = dir.write("junk.cert", "layout\n1 9 2\nend\n");
  VerifyArgs junk_args{k3, junk, 3};
  CHECK(run(cmd_verify, junk_args).code == kExitParse);
}

TEST_CASE("verify round-trips compute output", "[cli]") {
  TempDir dir;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::string text_text = serialize_graph(gen::gnp(7, 0.5, seed));
    const std::string input = dir.write("g.gr", text_text);
    ComputeArgs args;
    args.input = input;
    args.engine = "closure2n";
    const Run r = run(cmd_compute, args);
    REQUIRE(r.code == kExitOk);
    const std::string cert = dir.write("g.cert", r.out);
    const int width = std::stoi(r.out.substr(r.out.find("# width: ") + 9));
    CHECK(run(cmd_verify, VerifyArgs{input, cert, width}).code == kExitOk);
    if (width > 0) CHECK(run(cmd_verify, VerifyArgs{input, cert, width - 1}).code == kExitFail);
  }
}

TEST_CASE("convert between certificates", "[cli]") {
  TempDir dir;
  const std::string k3 = dir.write("k3.gr", kK3);
  const std::string layout = dir.write("k3.cert", "layout\n1 2 3\nend\n");
  ConvertArgs to_pd{k3, layout, "layout-to-pd", false};
  Run r = run(cmd_convert, to_pd);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("pd\n") != std::string::npos);
  const std::string pd = dir.write("k3.pd", certificate_block(r.out));
  CHECK(run(cmd_verify, VerifyArgs{k3, pd, 2}).code == kExitOk);

  ConvertArgs back{k3, pd, "pd-to-layout", false};
  r = run(cmd_convert, back);
  REQUIRE(r.code == kExitOk);
  const std::string again = dir.write("k3.again", certificate_block(r.out));
  CHECK(run(cmd_verify, VerifyArgs{k3, again, 3}).code == kExitOk);

  const std::string p3 = dir.write("p3.gr", "p 3 2\ne 1 2\ne 2 3\n");
  const std::string p3pd = dir.write("p3.pd", "pd\n1 2\n2 3\nend\n");
  r = run(cmd_convert, ConvertArgs{p3, p3pd, "pd-to-layout", false});
  CHECK(r.code == kExitOk);
  CHECK(certificate_block(r.out) == "layout\n1 2\nend\n");

  const std::string k2 = dir.write("k2.gr", "p 2 1\ne 1 2\n");
  const std::string k2l = dir.write("k2.cert", "layout\n1\nend\n");
  r = run(cmd_convert, ConvertArgs{k2, k2l, "layout-to-pd", true});
  CHECK(r.code == kExitOk);
  CHECK(certificate_block(r.out) == "pd\n1 2\nend\n");

  CHECK(run(cmd_convert, ConvertArgs{k3, layout, "sideways", false}).code == kExitParse);
  CHECK(run(cmd_convert, ConvertArgs{k3, layout, "pd-to-layout", false}).code == kExitFail);
}

TEST_CASE("gen is deterministic", "[cli]") {
  GenArgs args;
  args.family = "gnp";
  args.n = 9;
  args.p = 0.4;
  args.seed = 17;
  const Run a = run(cmd_gen, args);
  const Run b = run(cmd_gen, args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out == serialize_graph(gen::gnp(9, 0.4, 17)));
  CHECK(serialize_graph(parse_graph(a.out)) == a.out);

  GenArgs path;
  path.family = "path";
  path.n = 1;
  const Run p = run(cmd_gen, path);
  CHECK(p.code == kExitOk);
  CHECK(parse_graph(p.out).n() == 1);
  CHECK(parse_graph(p.out).m() == 0);

  GenArgs unknown;
  unknown.family = "hypercube";
  CHECK(run(cmd_gen, unknown).code == kExitParse);
}

TEST_CASE("bench over a corpus", "[cli]") {
  TempDir empty;
  BenchArgs args;
  args.corpus = empty.path();
  Run r = run(cmd_bench, args);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("instance\tn\tm\tdp2m\tclosure2n\n") != std::string::npos);

  TempDir corpus;
  int count = 0;
  gen::for_each_graph(4, [&](const Graph& g) {
    if (count % 7 == 0) {
      const std::string text_text = serialize_graph(g);
      corpus.write("g" + std::to_string(100 + count) + ".gr", text_text);
    }
    ++count;
  });
  args.corpus = corpus.path();
  args.engines = {"brute", "dp2m", "closure2n", "approx"};
  r = run(cmd_bench, args);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("g100.gr\t4\t0\t0/") != std::string::npos);

  args.format = Format::kStructured;
  r = run(cmd_bench, args);
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 10);

  args.corpus = corpus.path() + "/nothing";
  CHECK(run(cmd_bench, args).code == kExitParse);
}

TEST_CASE("sha256 digest", "[cli]") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
