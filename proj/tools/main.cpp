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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace linwidth::cli;
  CLI::App app{"Exact linearwidth and pathwidth of small graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const std::map<std::string, Format> formats = {{"text", Format::kText},
                                                 {"structured", Format::kStructured}};

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute the linearwidth of a graph");
  c->add_option("input", compute.input, "Edge-list file")->required();
  c->add_option("--engine", compute.engine, "Solver engine")
      ->check(CLI::IsMember({"auto", "brute", "dp2m", "closure2n", "approx"}));
  c->add_option("--bound", compute.bound, "Only decide whether width <= bound");
  c->add_option("--budget-seconds", compute.budget_seconds, "Wall-clock budget");
  c->add_flag("--guard-override", compute.guard_override, "Lift the soft size guards");
  c->add_option("--format", compute.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a certificate against a claimed width");
  v->add_option("input", verify.input, "Edge-list file")->required();
  v->add_option("certificate", verify.certificate, "Certificate or result document")->required();
  v->add_option("width", verify.claimed_width, "Claimed width")->required();

  ConvertArgs convert;
  auto* cv = app.add_subcommand("convert", "Convert between layouts and path decompositions");
  cv->add_option("input", convert.input, "Edge-list file")->required();
  cv->add_option("certificate", convert.certificate, "Certificate file")->required();
  cv->add_option("direction", convert.direction, "layout-to-pd | pd-to-layout")
      ->required()
      ->check(CLI::IsMember({"layout-to-pd", "pd-to-layout"}));
  cv->add_flag("--simplify", convert.simplify, "Drop bags contained in a neighbour");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a graph in edge-list format");
  g->add_option("family", gen.family, "gnp | gnm | path | cycle | clique | star | grid")
      ->required()
      ->check(CLI::IsMember({"gnp", "gnm", "path", "cycle", "clique", "star", "grid"}));
  g->add_option("--n", gen.n, "Vertex count");
  g->add_option("--m", gen.m, "Edge count (gnm)");
  g->add_option("--p", gen.p, "Edge probability (gnp)");
  g->add_option("--rows", gen.rows, "Grid rows");
  g->add_option("--cols", gen.cols, "Grid columns");
  g->add_option("--seed", gen.seed, "Random seed");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run engines over a directory of graphs");
  b->add_option("corpus", bench.corpus, "Directory of edge-list files")->required();
  b->add_option("--engines", bench.engines, "Engines to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"brute", "dp2m", "closure2n", "approx"}));
  b->add_option("--budget-seconds", bench.budget_seconds, "Per-instance, per-engine budget");
  b->add_flag("--guard-override", bench.guard_override, "Lift the soft size guards");
  b->add_option("--format", bench.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  CLI11_PARSE(app, argc, argv);

  if (*c) return cmd_compute(compute, std::cout, std::cerr);
  if (*v) return cmd_verify(verify, std::cout, std::cerr);
  if (*cv) return cmd_convert(convert, std::cout, std::cerr);
  if (*g) return cmd_gen(gen, std::cout, std::cerr);
  if (*b) return cmd_bench(bench, std::cout, std::cerr);
  return kExitParse;
}
