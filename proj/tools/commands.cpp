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

#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "linwidth/linwidth.hpp"

namespace linwidth::cli {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", s);
  return buf;
}

SolverOptions make_options(bool guard_override, std::optional<double> budget) {
  SolverOptions options;
  options.ignore_guards = guard_override;
  if (budget) options.deadline = Deadline::after(std::chrono::duration<double>(*budget));
  return options;
}

bool guard_allows(const std::string& engine, const Graph& g, const SolverOptions& options) {
  const Guards& gd = options.guards;
  const bool lift = options.ignore_guards;
  auto within = [&](int value, int soft, int hard) {
    return value <= (lift ? hard : std::min(soft, hard));
  };
  if (engine == "brute") return within(g.m(), gd.brute_max_edges, Guards::kBruteHardCap);
  if (engine == "dp2m") return within(g.m(), gd.dp_max_edges, Guards::kDpHardCap);
  if (engine == "closure2n") {
    return within(g.n(), gd.closure_max_vertices, Guards::kClosureHardCap);
  }
  if (engine == "approx") {
    for (const Component& c : components(g)) {
      if (!within(c.graph.n(), gd.pw_max_vertices, Guards::kPwHardCap)) return false;
    }
    return true;
  }
  return false;
}

const std::vector<std::string>& all_engines() {
  static const std::vector<std::string> names = {"brute", "dp2m", "closure2n", "approx"};
  return names;
}

std::string feasible_engines(const Graph& g, const SolverOptions& options) {
  std::string out;
  for (const std::string& name : all_engines()) {
    if (!guard_allows(name, g, options)) continue;
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out.empty() ? "none" : out;
}

// Cheapest exact engine whose guard admits the graph, or "" if none.
std::string pick_auto(const Graph& g, const SolverOptions& options) {
  if (g.m() <= 8 && guard_allows("brute", g, options)) return "brute";
  if (guard_allows("closure2n", g, options)) return "closure2n";
  if (guard_allows("dp2m", g, options)) return "dp2m";
  return "";
}

bool is_exact(const std::string& engine) { return engine != "approx"; }

SolveResult run_engine(const std::string& engine, const Graph& g, const SolverOptions& options) {
  if (engine == "brute") return lw_bruteforce(g, options);
  if (engine == "dp2m") return lw_dp_2m(g, options);
  if (engine == "closure2n") return lw_closure_2n(g, options);
  if (engine == "approx") return lw_approx(g, options);
  throw PreconditionError("unknown engine '" + engine + "'");
}

Decision run_decision(const std::string& engine, const Graph& g, int bound,
                      const SolverOptions& options) {
  if (engine == "brute") return decide_bruteforce(g, bound, options);
  if (engine == "dp2m") return decide_dp_2m(g, bound, options);
  if (engine == "closure2n") return decide_closure_2n(g, bound, options);
  throw PreconditionError("engine '" + engine + "' cannot decide a bound");
}

// Metadata lines plus certificate section; emitted as '#' lines or as JSON.
struct ResultDocument {
  std::vector<std::pair<std::string, json>> fields;
  std::optional<std::string> certificate;  // serialized certificate section
  std::optional<Certificate> certificate_value;

  void set(std::string key, json value) { fields.emplace_back(std::move(key), std::move(value)); }

  void render(std::ostream& out, const Graph& g, Format format) const {
    if (format == Format::kStructured) {
      json doc = json::object();
      for (const auto& [k, v] : fields) doc[k] = v;
      if (certificate_value) {
        if (const auto* pi = std::get_if<Layout>(&*certificate_value)) {
          json labels = json::array();
          for (int e : pi->order) labels.push_back(e + 1);
          doc["layout"] = labels;
        } else {
          json bags = json::array();
          for (VertexSet bag : std::get<PathDecomposition>(*certificate_value).bags) {
            json b = json::array();
            bag.for_each([&](int v) { b.push_back(g.label(v)); });
            std::sort(b.begin(), b.end());
            bags.push_back(b);
          }
          doc["pd"] = bags;
        }
      }
      out << doc.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : fields) {
      out << "# " << k << ": ";
      if (v.is_string()) {
        out << v.get<std::string>();
      } else if (v.is_number_float()) {
        out << format_seconds(v.get<double>());
      } else {
        out << v.dump();
      }
      out << "\n";
    }
    if (certificate) out << *certificate;
  }
};

void add_stats(ResultDocument& doc, const SearchStats& s) {
  doc.set("states", s.states_expanded);
  doc.set("memo_entries", s.memo_entries);
  doc.set("max_memo_entries", s.max_memo_entries());
  doc.set("memo_hits", s.memo_hits);
  doc.set("seconds", s.seconds);
}

struct LoadedGraph {
  Graph graph;
  std::string text;
};

// Reads and parses; on failure reports and returns nullopt.
std::optional<LoadedGraph> load_graph(const std::string& path, std::ostream& err) {
  try {
    std::string text = read_file(path);
    Graph g = parse_graph(text);
    return LoadedGraph{std::move(g), std::move(text)};
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return std::nullopt;
}

std::optional<Certificate> load_certificate(const Graph& g, const std::string& path,
                                            std::ostream& err) {
  try {
    return parse_certificate(g, read_file(path));
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  const auto loaded = load_graph(args.input, err);
  if (!loaded) return kExitParse;
  const Graph& g = loaded->graph;
  SolverOptions options = make_options(args.guard_override, args.budget_seconds);

  std::string engine = args.engine;
  if (engine == "auto") {
    engine = pick_auto(g, options);
    if (engine.empty()) {
      err << "error: no exact engine admits n = " << g.n() << ", m = " << g.m()
          << "; feasible engines: " << feasible_engines(g, options) << "\n";
      return kExitGuard;
    }
  }
  if (std::find(all_engines().begin(), all_engines().end(), engine) == all_engines().end()) {
    err << "error: unknown engine '" << engine << "'\n";
    return kExitParse;
  }
  if (args.bound && !is_exact(engine)) {
    err << "error: --bound needs an exact engine (brute, dp2m, closure2n)\n";
    return kExitParse;
  }

  ResultDocument doc;
  doc.set("tool", std::string("linwidth ") + kVersion);
  doc.set("input", std::filesystem::path(args.input).filename().string());
  doc.set("sha256", sha256_hex(loaded->text));
  doc.set("engine", engine);
  doc.set("n", g.n());
  doc.set("m", g.m());
  try {
    if (args.bound) {
      const Decision d = run_decision(engine, g, *args.bound, options);
      doc.set("bound", *args.bound);
      doc.set("decision", d.feasible);
      if (d.feasible) {
        const int w = layout_width(g, *d.layout);
        if (w > *args.bound) {
          err << "error: internal: certificate width " << w << " exceeds bound\n";
          return kExitInternal;
        }
        doc.set("width", w);
        doc.certificate = serialize_certificate(g, *d.layout);
        doc.certificate_value = *d.layout;
      } else {
        doc.set("result", "no layout of width <= " + std::to_string(*args.bound));
      }
      add_stats(doc, d.stats);
    } else {
      const SolveResult r = run_engine(engine, g, options);
      const LayoutCheck check = verify_layout(g, r.layout(), r.width);
      if (!check || layout_width(g, r.layout()) != r.width) {
        err << "error: internal: certificate does not verify at width " << r.width << "\n";
        return kExitInternal;
      }
      doc.set("width", r.width);
      doc.set("exact", is_exact(engine));
      add_stats(doc, r.stats);
      doc.certificate = serialize_certificate(g, r.certificate);
      doc.certificate_value = r.certificate;
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "; feasible engines: " << feasible_engines(g, options)
        << "\n";
    return kExitGuard;
  } catch (const Timeout&) {
    err << "error: time budget exhausted\n";
    return kExitTimeout;
  }
  doc.render(out, g, args.format);
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto loaded = load_graph(args.input, err);
  if (!loaded) return kExitParse;
  const Graph& g = loaded->graph;
  const auto cert = load_certificate(g, args.certificate, err);
  if (!cert) return kExitParse;

  if (const auto* pi = std::get_if<Layout>(&*cert)) {
    const LayoutCheck check = verify_layout(g, *pi, args.claimed_width);
    if (!check) {
      out << "fail: " << check.reason << "\n";
      return kExitFail;
    }
    out << "pass: layout width " << layout_width(g, *pi) << " <= " << args.claimed_width << "\n";
    return kExitOk;
  }
  const auto& pd = std::get<PathDecomposition>(*cert);
  const PdCheck check = verify_path_decomposition(g, pd);
  if (!check) {
    out << "fail: " << to_string(check.violation);
    if (check.edge >= 0) {
      const Edge& e = g.edge(check.edge);
      out << " (edge " << check.edge + 1 << ": " << g.label(e.u) << " " << g.label(e.v) << ")";
    }
    if (check.vertex >= 0 && check.vertex < g.n()) out << " (vertex " << g.label(check.vertex) << ")";
    out << "\n";
    return kExitFail;
  }
  if (pd.bags.empty()) {
    out << "fail: decomposition has no bags\n";
    return kExitFail;
  }
  const int w = pd_width(pd);
  if (w > args.claimed_width) {
    out << "fail: width " << w << " > " << args.claimed_width << "\n";
    return kExitFail;
  }
  out << "pass: decomposition width " << w << " <= " << args.claimed_width << "\n";
  return kExitOk;
}

int cmd_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err) {
  const auto loaded = load_graph(args.input, err);
  if (!loaded) return kExitParse;
  const Graph& g = loaded->graph;
  const auto cert = load_certificate(g, args.certificate, err);
  if (!cert) return kExitParse;

  try {
    if (args.direction == "layout-to-pd") {
      const auto* pi = std::get_if<Layout>(&*cert);
      if (!pi) {
        err << "error: layout-to-pd needs a layout certificate\n";
        return kExitFail;
      }
      PathDecomposition pd = layout_to_pd(g, *pi);
      if (args.simplify) pd = simplify_pd(std::move(pd));
      out << "# width-before: " << layout_width(g, *pi) << "\n";
      out << "# width-after: " << (pd.bags.empty() ? -1 : pd_width(pd)) << "\n";
      out << serialize_certificate(g, pd);
      return kExitOk;
    }
    if (args.direction == "pd-to-layout") {
      const auto* pd = std::get_if<PathDecomposition>(&*cert);
      if (!pd) {
        err << "error: pd-to-layout needs a pd certificate\n";
        return kExitFail;
      }
      const Layout pi = pd_to_layout(g, *pd);
      out << "# width-before: " << pd_width(*pd) << "\n";
      out << "# width-after: " << layout_width(g, pi) << "\n";
      out << serialize_certificate(g, pi);
      return kExitOk;
    }
  } catch (const InvalidCertificate& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  err << "error: unknown direction '" << args.direction << "'\n";
  return kExitParse;
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  try {
    Graph g;
    const std::string& f = args.family;
    if (f == "gnp") {
      g = gen::gnp(args.n, args.p, args.seed);
    } else if (f == "gnm") {
      g = gen::gnm(args.n, args.m, args.seed);
    } else if (f == "path") {
      g = gen::path(args.n);
    } else if (f == "cycle") {
      g = gen::cycle(args.n);
    } else if (f == "clique") {
      g = gen::clique(args.n);
    } else if (f == "star") {
      g = gen::star(args.n);
    } else if (f == "grid") {
      g = gen::grid(args.rows, args.cols);
    } else {
      err << "error: unknown family '" << f << "'\n";
      return kExitParse;
    }
    out << serialize_graph(g);
    return kExitOk;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  for (const std::string& e : args.engines) {
    if (std::find(all_engines().begin(), all_engines().end(), e) == all_engines().end()) {
      err << "error: unknown engine '" << e << "'\n";
      return kExitParse;
    }
  }
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(args.corpus, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) {
    err << "error: cannot list '" << args.corpus << "': " << ec.message() << "\n";
    return kExitParse;
  }
  std::sort(files.begin(), files.end());

  json rows = json::array();
  if (args.format == Format::kText) {
    out << "# tool: linwidth " << kVersion << "\n";
    out << "# budget_seconds: " << args.budget_seconds << "\n";
    out << "instance\tn\tm";
    for (const std::string& e : args.engines) out << "\t" << e;
    out << "\n";
  }
  int status = kExitOk;
  for (const fs::path& file : files) {
    const auto loaded = load_graph(file.string(), err);
    if (!loaded) return kExitParse;
    const Graph& g = loaded->graph;
    json row = {{"instance", file.filename().string()}, {"n", g.n()}, {"m", g.m()}};
    std::string line = file.filename().string() + "\t" + std::to_string(g.n()) + "\t" +
                       std::to_string(g.m());
    std::optional<int> agreed;
    for (const std::string& engine : args.engines) {
      SolverOptions options = make_options(args.guard_override, args.budget_seconds);
      json cell;
      std::string text;
      try {
        const SolveResult r = run_engine(engine, g, options);
        if (!verify_layout(g, r.layout(), r.width)) {
          err << "error: " << engine << " certificate fails on " << file.filename() << "\n";
          status = kExitInternal;
        }
        cell = {{"status", "ok"},
                {"width", r.width},
                {"seconds", r.stats.seconds},
                {"states", r.stats.states_expanded}};
        text = std::to_string(r.width) + "/" + format_seconds(r.stats.seconds) + "s/" +
               std::to_string(r.stats.states_expanded);
        if (is_exact(engine)) {
          if (agreed && *agreed != r.width) {
            err << "error: engines disagree on " << file.filename() << "\n";
            status = kExitInternal;
          }
          agreed = r.width;
        }
      } catch (const Timeout&) {
        cell = {{"status", "timeout"}};
        text = "TIMEOUT";
      } catch (const GuardExceeded&) {
        cell = {{"status", "guard"}};
        text = "GUARD";
      }
      row[engine] = cell;
      line += "\t" + text;
    }
    rows.push_back(row);
    if (args.format == Format::kText) out << line << "\n" << std::flush;
    if (status != kExitOk) break;
  }
  if (args.format == Format::kStructured) {
    out << json{{"tool", std::string("linwidth ") + kVersion},
                {"budget_seconds", args.budget_seconds},
                {"rows", rows}}
               .dump(2)
        << "\n";
  }
  return status;
}

}  // namespace linwidth::cli
