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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "linwidth/linwidth.hpp"
#include "oracles.hpp"

using namespace linwidth;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr double kCriterion2Seconds = 300.0;
constexpr double kDp2mInstanceBudget = 10.0;
constexpr double kBenchBudget = 60.0;
constexpr int kBenchInstances = 2;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.ok) ++failures;
  std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", o.ok ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

SolverOptions unguarded() {
  SolverOptions o;
  o.ignore_guards = true;
  return o;
}

bool layout_ok(const Graph& g, const SolveResult& r) {
  return r.has_layout() && verify_layout(g, r.layout(), r.width).ok &&
         layout_width(g, r.layout()) == r.width;
}

std::vector<Graph> connected_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      if (is_connected(g)) out.push_back(g);
    });
  }
  return out;
}

// pw(G) <= lw(G) whenever some component has three or more vertices.
int pathwidth_lower_bound(const Graph& g) {
  for (const Component& c : components(g)) {
    if (c.graph.n() >= 3) return pw_exact(g).width;
  }
  return 0;
}

Graph criterion2_instance(int i) {
  static constexpr double kP[] = {0.2, 0.5, 0.8};
  return gen::gnp(6 + i % 5, kP[(i / 5) % 3], 1000 + static_cast<std::uint64_t>(i));
}

std::string write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

Outcome criterion1() {
  Outcome o;
  const auto graphs = connected_graphs(5);
  for (const Graph& g : graphs) {
    const SolveResult brute = lw_bruteforce(g, unguarded());
    const SolveResult dp = lw_dp_2m(g);
    const SolveResult cl = lw_closure_2n(g);
    if (brute.width != dp.width || dp.width != cl.width) {
      o.fail("disagreement on " + serialize_graph(g));
    }
    if (!layout_ok(g, brute) || !layout_ok(g, dp) || !layout_ok(g, cl)) {
      o.fail("certificate failed on " + serialize_graph(g));
    }
  }
  if (o.ok) o.detail = std::to_string(graphs.size()) + " connected graphs";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int hinted = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = criterion2_instance(i);
    const SolveResult cl = lw_closure_2n(g);
    SolverOptions plain = unguarded();
    plain.deadline = Deadline::after(std::chrono::duration<double>(kDp2mInstanceBudget));
    SolveResult dp;
    try {
      dp = lw_dp_2m(g, plain);
    } catch (const Timeout&) {
      SolverOptions with_bound = unguarded();
      with_bound.known_lower_bound = pathwidth_lower_bound(g);
      dp = lw_dp_2m(g, with_bound);
      ++hinted;
    }
    if (dp.width != cl.width) o.fail("instance " + std::to_string(i) + " disagrees");
    if (!layout_ok(g, dp) || !layout_ok(g, cl)) {
      o.fail("instance " + std::to_string(i) + " certificate failed");
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= kCriterion2Seconds) o.fail("took " + std::to_string(secs) + "s");
  if (o.ok) {
    o.detail = "500 instances; " + std::to_string(hinted) +
               " dp2m runs started from the pathwidth lower bound after a " +
               std::to_string(static_cast<int>(kDp2mInstanceBudget)) + "s budget";
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto expect = [&](const char* name, const Graph& g, int want) {
    const int got = lw_bruteforce(g).width;
    if (got != want) {
      o.fail(std::string(name) + " gave " + std::to_string(got));
    }
  };
  const Graph k2 = gen::clique(2);
  expect("K2", k2, 0);
  if (pw_exact(k2).width != 1) o.fail("pw(K2) != 1");
  expect("K3", gen::clique(3), 2);
  expect("K4", gen::clique(4), 3);
  expect("K1,3", gen::star(4), 1);
  expect("C4", gen::cycle(4), 2);
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      bool small = true;
      for (const Component& c : components(g)) small = small && c.graph.n() <= 2;
      if ((lw_bruteforce(g).width == 0) != small) o.fail("lw = 0 rule broken on " + serialize_graph(g));
      ++checked;
    });
  }
  if (o.ok) o.detail = "named graphs plus " + std::to_string(checked) + " graphs for the lw = 0 rule";
  return o;
}

bool submodular_by_oracle(const oracle::EdgeList& edges, const std::set<int>& x,
                          const std::set<int>& y, int e) {
  std::set<int> xe = x, ye = y;
  xe.insert(e);
  ye.insert(e);
  return oracle::d(edges, xe) - oracle::d(edges, x) >= oracle::d(edges, ye) - oracle::d(edges, y);
}

Outcome criterion4() {
  Outcome o;
  std::uint64_t exhaustive = 0;
  for (int n = 1; n <= 4; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      const int m = g.m();
      if (m > 6) return;
      const auto edges = oracle::edge_list(g);
      for (int e = 0; e < m; ++e) {
        const std::uint64_t rest = ((std::uint64_t{1} << m) - 1) & ~(std::uint64_t{1} << e);
        for (std::uint64_t y = rest;; y = (y - 1) & rest) {
          for (std::uint64_t x = y;; x = (x - 1) & y) {
            const bool lib = check_submodularity(g, EdgeSet::from_word(m, x), EdgeSet::from_word(m, y), e);
            const bool ref = submodular_by_oracle(edges, oracle::mask_to_set(x), oracle::mask_to_set(y), e);
            if (!lib || !ref) o.fail("violated on " + serialize_graph(g));
            ++exhaustive;
            if (x == 0) break;
          }
          if (y == 0) break;
        }
      }
    });
  }
  std::mt19937_64 rng(4);
  int random = 0;
  Graph g = gen::gnp(8, 0.5, rng());
  while (random < 10000) {
    if (random % 100 == 0) g = gen::gnp(8, 0.5, rng());
    const int m = g.m();
    if (m == 0) {
      g = gen::gnp(8, 0.5, rng());
      continue;
    }
    const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
    std::set<int> x, y;
    EdgeSet xs(m), ys(m);
    for (int f = 0; f < m; ++f) {
      if (f == e) continue;
      const int pick = static_cast<int>(rng() % 3);  // 0: outside, 1: Y only, 2: X and Y
      if (pick >= 1) {
        y.insert(f);
        ys.insert(f);
      }
      if (pick == 2) {
        x.insert(f);
        xs.insert(f);
      }
    }
    const auto edges = oracle::edge_list(g);
    if (!check_submodularity(g, xs, ys, e) || !submodular_by_oracle(edges, x, y, e)) {
      o.fail("violated on random triple");
    }
    ++random;
  }
  if (o.ok) {
    o.detail = std::to_string(exhaustive) + " exhaustive triples, " + std::to_string(random) +
               " random triples on G(8, 0.5)";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  int configs = 0;
  int extendable = 0;
  while (configs < 1000) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = gen::gnp(n, 0.3 + 0.5 * static_cast<double>(rng() % 2), rng());
    const int m = g.m();
    if (m < 2) continue;
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const int length = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
    const PartialLayout sigma(g, std::vector<int>(order.begin(), order.begin() + length));
    const int bound = sigma.width() + (rng() % 4 == 0 ? 1 : 0);
    std::vector<int> candidates;
    for (int e = 0; e < m; ++e) {
      if (!sigma.edges().contains(e) && sigma.d_if_added(e) <= sigma.d()) candidates.push_back(e);
    }
    if (candidates.empty()) continue;
    const int e = candidates[rng() % candidates.size()];
    if (!check_prune_lemma(g, sigma, e, bound)) o.fail("lemma failed on " + serialize_graph(g));
    if (is_k_extendable(sigma, bound)) ++extendable;
    ++configs;
  }
  if (o.ok) {
    o.detail = std::to_string(configs) + " configurations, " + std::to_string(extendable) +
               " of them extendable";
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  int checked = 0;
  for (const Graph& g : connected_graphs(5)) {
    const SolveResult lw = lw_closure_2n(g);
    if (lw.width < 1) continue;
    const int pw = pw_exact(g).width;
    if (pw > lw.width || lw.width > pw + 1) o.fail("sandwich broken on " + serialize_graph(g));
    const PathDecomposition pd = layout_to_pd(g, lw.layout());
    if (!verify_path_decomposition(g, pd).ok() || pd_width(pd) > lw.width) {
      o.fail("layout_to_pd failed on " + serialize_graph(g));
    }
    const SolveResult approx = lw_approx(g);
    const int gap = approx.width - lw.width;
    if (!layout_ok(g, approx) || gap < 0 || gap > 1) o.fail("approx gap on " + serialize_graph(g));
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " connected graphs with lw >= 1";
  return o;
}

Outcome criterion7() {
  Outcome o;
  double worst = 0.0;
  int runs = 0;
  const auto check = [&](const Graph& g) {
    const SolveResult r = lw_closure_2n(g, unguarded());
    const double cap = static_cast<double>(std::uint64_t{1} << g.n());
    for (const auto& [k, entries] : r.stats.memo_entries_per_bound) {
      if (static_cast<double>(entries) > cap) o.fail("bound " + std::to_string(k) + " exceeded 2^n");
      worst = std::max(worst, static_cast<double>(entries) / cap);
    }
    ++runs;
  };
  for (int i = 0; i < 500; ++i) check(criterion2_instance(i));
  for (const Graph& g : connected_graphs(5)) check(g);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) check(gen::gnp(16, 0.3, rng()));
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d runs, max entries / 2^n = %.4f", runs, worst);
    o.detail = buf;
  }
  return o;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("linwidth_acceptance_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  return out;
}

Outcome criterion8() {
  Outcome o;
  TempDir dir;
  for (int i = 0; i < kBenchInstances; ++i) {
    write_file(dir.path / ("dense14_" + std::to_string(i) + ".gr"),
               serialize_graph(gen::gnm(14, 64, 800 + static_cast<std::uint64_t>(i))));
  }
  cli::BenchArgs args;
  args.corpus = dir.path.string();
  args.engines = {"closure2n", "dp2m"};
  args.budget_seconds = kBenchBudget;
  args.guard_override = true;
  std::ostringstream out, err;
  const int code = cli::cmd_bench(args, out, err);
  std::printf("%s", out.str().c_str());
  if (code != cli::kExitOk) o.fail("bench exited " + std::to_string(code) + ": " + err.str());
  std::istringstream lines(out.str());
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("dense14_", 0) != 0) continue;
    const auto cells = split(line, '\t');
    if (cells.size() != 5) {
      o.fail("malformed row: " + line);
      continue;
    }
    if (std::stoi(cells[2]) < 60) o.fail("instance too sparse");
    const std::string& closure = cells[3];
    if (closure == "TIMEOUT" || closure == "GUARD") o.fail("closure2n did not finish");
    if (cells[4] != "TIMEOUT") o.fail("dp2m finished within the budget: " + cells[4]);
    ++rows;
  }
  if (rows != kBenchInstances) o.fail("expected " + std::to_string(kBenchInstances) + " rows");
  if (o.ok) o.detail = std::to_string(rows) + " dense n = 14 instances, budget 60s";
  return o;
}

Outcome criterion9() {
  Outcome o;
  TempDir dir;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const double p = 0.2 + 0.2 * static_cast<double>(rng() % 4);
    const Graph g = gen::gnp(n, p, rng());
    const std::string input = write_file(dir.path / "g.gr", serialize_graph(g));
    cli::ComputeArgs compute;
    compute.input = input;
    std::ostringstream out, err;
    if (cli::cmd_compute(compute, out, err) != cli::kExitOk) {
      o.fail("compute failed: " + err.str());
      continue;
    }
    const std::string text = out.str();
    const std::size_t at = text.find("# width: ");
    if (at == std::string::npos) {
      o.fail("no width reported");
      continue;
    }
    const int width = std::stoi(text.substr(at + 9));
    const std::string cert = write_file(dir.path / "g.cert", text);
    std::ostringstream vout, verr;
    if (cli::cmd_verify({input, cert, width}, vout, verr) != cli::kExitOk) {
      o.fail("rejected at reported width " + std::to_string(width));
    }
    if (cli::cmd_verify({input, cert, width - 1}, vout, verr) != cli::kExitFail) {
      o.fail("accepted at width - 1 = " + std::to_string(width - 1));
    }
  }
  if (o.ok) o.detail = "100 instances";
  return o;
}

}  // namespace

int main() {
  report(1, "brute = dp2m = closure2n on connected graphs with n <= 5", criterion1);
  report(2, "dp2m = closure2n on 500 seeded G(n, p) instances", criterion2);
  report(3, "known values", criterion3);
  report(4, "boundary submodularity", criterion4);
  report(5, "prune lemma on random configurations", criterion5);
  report(6, "pw <= lw <= pw + 1, layout conversion, approximation gap", criterion6);
  report(7, "per-bound memo entries <= 2^n", criterion7);
  report(8, "dense n = 14: closure2n within 60s, dp2m over budget", criterion8);
  report(9, "verify accepts compute output and rejects width - 1", criterion9);
  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
