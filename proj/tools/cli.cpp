#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "setseq/classify.hpp"
#include "setseq/construct.hpp"
#include "setseq/error.hpp"
#include "setseq/glue.hpp"
#include "setseq/io.hpp"
#include "setseq/partition.hpp"
#include "setseq/search.hpp"
#include "setseq/splice.hpp"
#include "setseq/trees.hpp"

namespace setseq::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

// Bad command-line values or unreadable files.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Run {
  Run(std::ostream& o, std::ostream& e, std::vector<std::string> a)
      : out(o), err(e), args(std::move(a)) {}

  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> args;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  json inputs = json::array();
  json outputs = json::array();
  std::optional<std::uint64_t> seed;

  std::string read_input(const std::string& path) {
    std::string text;
    try {
      text = read_file(path);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    inputs.push_back({{"path", path}, {"hash", content_hash(text)}});
    return text;
  }

  Certificate load_certificate(const std::string& path) {
    std::string text = read_input(path);
    try {
      return parse_certificate(text);
    } catch (const ParseError& e) {
      throw UsageError(path + ": " + e.what());
    } catch (const PreconditionError& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  Graph load_graph(const std::string& path) {
    std::string text = read_input(path);
    try {
      return parse_graph(text);
    } catch (const ParseError& e) {
      throw UsageError(path + ": " + e.what());
    } catch (const PreconditionError& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  void emit_file(const fs::path& p, const std::string& text) {
    write_file(p, text);
    outputs.push_back({{"path", p.string()}, {"hash", content_hash(text)}});
  }

  // Writes PREFIX.graph and PREFIX.lab, reloading the certificate to check it.
  void emit_certificate(const fs::path& prefix, const Certificate& c) {
    std::string lab = format_certificate(c);
    Certificate back = parse_certificate(lab);
    if (!verify(back).ok() || format_certificate(back) != lab)
      throw std::logic_error("certificate does not survive a round trip");
    fs::path g = prefix;
    g += ".graph";
    fs::path l = prefix;
    l += ".lab";
    emit_file(g, format_graph(back.graph));
    emit_file(l, lab);
  }

  void write_manifest(const fs::path& p) {
    std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    json m;
    std::string cmd;
    for (const auto& a : args) cmd += (cmd.empty() ? "" : " ") + a;
    m["command"] = cmd;
    m["inputs"] = inputs;
    m["outputs"] = outputs;
    m["seed"] = seed ? json(*seed) : json(nullptr);
    m["elapsed_seconds"] = el.count();
    m["tool_version"] = kVersion;
    write_file(p, m.dump(2) + "\n");
  }

  // Certificate to PREFIX files plus manifest, or to stdout.
  void deliver(const std::string& prefix, const Certificate& c) {
    if (prefix.empty()) {
      out << format_certificate(c);
      return;
    }
    emit_certificate(prefix, c);
    write_manifest(prefix + ".manifest.json");
    out << "wrote " << prefix << ".graph, " << prefix << ".lab\n";
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
}

// n-bit 0/1 strings are bitstrings; anything else is hex (optional 0x).
GF2Vector parse_target(const std::string& s, int n) {
  bool bits = static_cast<int>(s.size()) == n &&
              s.find_first_not_of("01") == std::string::npos;
  if (bits) return GF2Vector::parse(s);
  std::string h = s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0 ? s.substr(2) : s;
  if (h.empty() || h.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
    throw UsageError("bad target '" + s + "'");
  std::uint64_t v = std::stoull(h, nullptr, 16);
  if (v > dim_mask(n)) throw UsageError("target '" + s + "' exceeds n bits");
  return GF2Vector(n, v);
}

SearchOptions search_options(std::uint64_t nodes, double secs, bool no_sym,
                             int threads) {
  SearchOptions o;
  o.budget.max_nodes = nodes;
  o.budget.max_seconds = secs;
  o.symmetry = !no_sym;
  o.threads = threads;
  return o;
}

std::optional<fs::path> cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return fs::path(env);
  return std::nullopt;
}

// "s:v>t:u-w" with 1-based copy numbers.
SpliceOp parse_op(const std::string& s) {
  auto gt = s.find('>');
  auto c1 = s.find(':');
  auto c2 = s.find(':', gt);
  auto dash = s.find('-', gt);
  if (gt == std::string::npos || c1 > gt || c2 == std::string::npos ||
      dash == std::string::npos || dash < c2)
    throw UsageError("splice operation '" + s + "' is not src:v>dst:u-w");
  SpliceOp op;
  op.source = to_int(s.substr(0, c1)) - 1;
  op.vertex = to_int(s.substr(c1 + 1, gt - c1 - 1));
  op.target_copy = to_int(s.substr(gt + 1, c2 - gt - 1)) - 1;
  op.target = {to_int(s.substr(c2 + 1, dash - c2 - 1)),
               to_int(s.substr(dash + 1))};
  return op;
}

void print_partition(std::ostream& out, const DifferenceInstance& inst,
                     const PairPartition& p) {
  for (size_t i = 0; i < p.pairs.size(); ++i)
    out << p.pairs[i].first.str() << " + " << p.pairs[i].second.str() << " = "
        << inst.targets[i].str() << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Set-sequential labelings: search, constructions, verification",
               "setseq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string path, out_prefix, out_dir, cache;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  double budget_secs = SearchBudget{}.max_seconds;
  bool no_symmetry = false, odd = false;
  int threads = 1;

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate file");
  verify_cmd->add_option("file", path, "certificate")->required();

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget-nodes", budget_nodes, "node limit");
    c->add_option("--budget-secs", budget_secs, "time limit in seconds");
    c->add_flag("--no-symmetry", no_symmetry, "do not fix the first label");
    c->add_option("--threads", threads, "worker threads")
        ->check(CLI::Range(1, 256));
  };
  auto* search_cmd = app.add_subcommand("search", "search for a labeling");
  search_cmd->add_option("graph", path, "graph file")->required();
  add_budget(search_cmd);
  search_cmd->add_option("--out", out_prefix, "output prefix");

  int vertices = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "list trees");
  enum_cmd->add_option("--vertices", vertices, "vertex count")->required();
  enum_cmd->add_flag("--odd", odd, "only trees with all degrees odd");
  enum_cmd->add_option("--out", out_dir, "directory for graph files");

  auto* classify_cmd = app.add_subcommand("classify", "search every tree");
  classify_cmd->add_option("--vertices", vertices, "vertex count")->required();
  classify_cmd->add_flag("--odd", odd, "only trees with all degrees odd");
  classify_cmd->add_option("--out", out_dir, "directory for certificates");
  add_budget(classify_cmd);

  int n = 0, k = 0, h = 0;
  bool end = false;
  auto* construct_cmd = app.add_subcommand("construct", "caterpillar builds");
  construct_cmd->require_subcommand(1);
  auto* ck3_cmd = construct_cmd->add_subcommand("c-k3", "degrees 1 and 3");
  ck3_cmd->add_option("--n", n, "2^n vertices")->required();
  auto* cat_cmd = construct_cmd->add_subcommand("caterpillar", "general shape");
  cat_cmd->add_option("--n", n, "2^n vertices")->required();
  cat_cmd->add_option("--k", k, "spine of 2^(k-1) vertices")->required();
  auto* end_opt = cat_cmd->add_flag("--end", end, "attach at the end vertex");
  auto* int_opt = cat_cmd->add_option("--interior", h, "attach at spine position");
  end_opt->excludes(int_opt);
  for (auto* c : {ck3_cmd, cat_cmd}) {
    c->add_option("--cache", cache, "path certificate cache directory");
    c->add_option("--out", out_prefix, "output prefix");
  }

  int set_id = 0;
  std::vector<std::string> tree_files;
  std::string choice, flip;
  bool no_label_check = false;
  auto* splice_cmd = app.add_subcommand("splice", "splice four trees");
  splice_cmd->add_option("--set", set_id, "1, 2 or 3")->required()
      ->check(CLI::Range(1, 3));
  splice_cmd->add_option("--trees", tree_files, "four certificates")
      ->required()->expected(4);
  splice_cmd->add_option("--choice", choice,
                         "three src:v>dst:u-w operations, comma separated")
      ->required();
  splice_cmd->add_option("--flip", flip,
                         "copies whose class X is the side without vertex 0");
  splice_cmd->add_flag("--no-label-check", no_label_check,
                       "allow differing class label sets");
  splice_cmd->add_option("--out", out_prefix, "output prefix");

  std::string targets;
  std::uint64_t samples = 0, seed = 0;
  bool long_job = false;
  auto* part_cmd = app.add_subcommand("partition", "pair partitions");
  part_cmd->require_subcommand(1);
  auto* thm_cmd = part_cmd->add_subcommand("theorem4", "constructive pairing");
  auto* oracle_cmd = part_cmd->add_subcommand("oracle", "exhaustive pairing");
  for (auto* c : {thm_cmd, oracle_cmd}) {
    c->add_option("--n", n, "dimension")->required();
    c->add_option("--targets", targets, "bitstrings or hex, comma separated")
        ->required();
  }
  auto* scan_cmd = part_cmd->add_subcommand("scan", "check many instances");
  scan_cmd->add_option("--n", n, "dimension")->required();
  auto* sample_opt = scan_cmd->add_option("--sample", samples, "sample count");
  scan_cmd->add_option("--seed", seed, "sampling seed")->needs(sample_opt);
  scan_cmd->add_flag("--long", long_job, "allow the exhaustive n = 5 scan");
  scan_cmd->add_option("--threads", threads, "worker threads")
      ->check(CLI::Range(1, 256));

  std::string attach;
  auto* extend_cmd = app.add_subcommand("extend", "double a tree by pairing");
  extend_cmd->add_option("--tree", path, "certificate")->required();
  extend_cmd->add_option("--attach", attach, "vertex:multiplicity,...")
      ->required();
  extend_cmd->add_option("--out", out_prefix, "output prefix");

  std::string glue_case, joins;
  bool glue_flip = false;
  auto* glue_cmd = app.add_subcommand("glue", "join four copies");
  glue_cmd->add_option("--graph", path, "certificate")->required();
  glue_cmd->add_option("--case", glue_case, "lemma, a, b or c")
      ->required()->check(CLI::IsMember({"lemma", "a", "b", "c"}));
  glue_cmd->add_option("--joins", joins, "three joined leaves")->required();
  glue_cmd->add_flag("--flip", glue_flip,
                     "class X is the side without vertex 0");
  glue_cmd->add_option("--out", out_prefix, "output prefix");

  std::vector<std::string> argv_store{"setseq"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Run run(out, err, args);
  try {
    if (*verify_cmd) {
      Certificate c = run.load_certificate(path);
      VerifyReport r = verify(c);
      if (r.ok()) {
        out << "PASS\n";
        return kOk;
      }
      out << "FAIL: " << clause_name(r.failed) << ": " << r.detail << '\n';
      return kNegative;
    }

    if (*search_cmd) {
      Graph g = run.load_graph(path);
      SearchReport r = find_labeling(
          g, search_options(budget_nodes, budget_secs, no_symmetry, threads));
      std::ostringstream stats;
      stats << "nodes " << r.nodes_expanded << ", " << std::fixed
            << std::setprecision(3) << r.elapsed_seconds << " s\n";
      switch (r.outcome) {
        case SearchOutcome::kFound:
          out << "FOUND\n" << stats.str();
          run.deliver(out_prefix, {g, *r.labeling, {"found by search"}});
          return kOk;
        case SearchOutcome::kExhaustedNone:
          out << "NO LABELING ("
              << (r.reason.empty() ? "exhausted" : r.reason) << ")\n"
              << stats.str();
          return kNegative;
        case SearchOutcome::kAborted:
          out << "ABORTED (" << r.reason << ")\n" << stats.str();
          return kInconclusive;
      }
    }

    if (*enum_cmd) {
      TreeCatalog cat = enumerate_trees(vertices, odd);
      out << cat.trees.size() << (odd ? " odd" : "") << " trees on "
          << vertices << " vertices\n";
      for (size_t i = 0; i < cat.trees.size(); ++i) {
        if (out_dir.empty()) {
          out << "# tree " << i << '\n' << format_graph(cat.trees[i]);
        } else {
          std::ostringstream name;
          name << "tree-" << std::setw(4) << std::setfill('0') << i << ".graph";
          run.emit_file(fs::path(out_dir) / name.str(),
                        format_graph(cat.trees[i]));
        }
      }
      if (!out_dir.empty()) run.write_manifest(fs::path(out_dir) / "manifest.json");
      return kOk;
    }

    if (*classify_cmd) {
      TreeCatalog cat = enumerate_trees(vertices, odd);
      ClassifySummary s = classify(
          cat, search_options(budget_nodes, budget_secs, no_symmetry, threads));
      for (size_t i = 0; i < s.entries.size(); ++i) {
        const auto& e = s.entries[i];
        out << "tree " << i << ": " << outcome_name(e.report.outcome);
        if (!e.report.reason.empty()) out << " (" << e.report.reason << ")";
        out << ", nodes " << e.report.nodes_expanded << '\n';
        if (!out_dir.empty() && e.report.labeling) {
          std::ostringstream name;
          name << "tree-" << std::setw(4) << std::setfill('0') << i;
          run.emit_certificate(fs::path(out_dir) / name.str(),
                               {e.tree, *e.report.labeling, {"found by search"}});
        }
      }
      out << "found " << s.found << ", exhausted " << s.exhausted
          << ", aborted " << s.aborted << '\n';
      if (!out_dir.empty()) run.write_manifest(fs::path(out_dir) / "manifest.json");
      if (s.aborted) return kInconclusive;
      return s.exhausted ? kNegative : kOk;
    }

    if (*construct_cmd) {
      PathSource src;
      src.cache_dir = cache_dir(cache);
      Certificate c;
      if (*ck3_cmd) {
        c = build_c_k3(n, src);
      } else {
        if (!end && int_opt->count() == 0)
          throw UsageError("caterpillar needs --end or --interior");
        CaterpillarSpec spec{n, k, EndVertex{}};
        if (!end) spec.attach = Interior{h};
        c = build_caterpillar(spec, src);
      }
      out << "caterpillar on " << c.graph.num_vertices() << " vertices: PASS\n";
      run.deliver(out_prefix, c);
      return kOk;
    }

    if (*splice_cmd) {
      std::vector<int> flipped;
      for (const auto& f : split_list(flip)) flipped.push_back(to_int(f) - 1);
      FourTreeInput input;
      for (int c = 0; c < 4; ++c) {
        Certificate cert = run.load_certificate(tree_files[c]);
        auto classes = two_coloring(cert.graph);
        if (!classes) throw UsageError(tree_files[c] + " is not bipartite");
        bool f = std::find(flipped.begin(), flipped.end(), c) != flipped.end();
        input[c] = {cert, f ? classes->flipped() : *classes};
      }
      auto ops = split_list(choice);
      if (ops.size() != 3) throw UsageError("--choice needs three operations");
      SpliceChoice sc;
      sc.set_id = set_id;
      for (int i = 0; i < 3; ++i) sc.ops[i] = parse_op(ops[i]);
      SpliceOptions opt;
      opt.check_label_sets = !no_label_check;
      Certificate c = splice_four(input, sc, opt);
      out << "spliced tree on " << c.graph.num_vertices() << " vertices: PASS\n";
      run.deliver(out_prefix, c);
      return kOk;
    }

    if (*part_cmd) {
      if (*scan_cmd) {
        ScanOptions opt;
        opt.exhaustive = sample_opt->count() == 0;
        opt.allow_long = long_job;
        opt.samples = samples;
        opt.seed = seed;
        opt.threads = threads;
        ScanReport r = scan_pairing_conjecture(n, opt);
        out << "n " << r.n << ", "
            << (r.exhaustive ? "exhaustive" : "sampled (seed " +
                                                  std::to_string(r.seed) + ")")
            << ": tried " << r.tried << ", solved " << r.solved
            << ", unsolved " << r.unsolved.size() << '\n';
        for (const auto& inst : r.unsolved) {
          out << "unsolved:";
          for (const auto& t : inst.targets) out << ' ' << t.str();
          out << '\n';
        }
        return r.unsolved.empty() ? kOk : kNegative;
      }
      DifferenceInstance inst{n, {}};
      for (const auto& t : split_list(targets))
        inst.targets.push_back(parse_target(t, n));
      check_instance(inst);
      if (*thm_cmd) {
        TracedPartition tp = theorem4_partition_traced(inst);
        print_partition(out, inst, tp.partition);
        out << "cases:";
        for (int c : tp.cases) out << ' ' << c;
        out << '\n';
        return kOk;
      }
      auto p = brute_force_pairing(inst);
      if (!p) {
        out << "NO SOLUTION\n";
        return kNegative;
      }
      print_partition(out, inst, *p);
      return kOk;
    }

    if (*extend_cmd) {
      Certificate base = run.load_certificate(path);
      std::vector<int> list;
      for (const auto& item : split_list(attach)) {
        auto colon = item.find(':');
        int v = to_int(item.substr(0, colon));
        int mult = colon == std::string::npos ? 1 : to_int(item.substr(colon + 1));
        if (mult < 0) throw UsageError("negative multiplicity");
        list.insert(list.end(), mult, v);
      }
      Certificate c = extend_tree_via_pairing(base, list);
      out << "extended tree on " << c.graph.num_vertices() << " vertices: PASS\n";
      run.deliver(out_prefix, c);
      return kOk;
    }

    if (*glue_cmd) {
      Certificate base = run.load_certificate(path);
      auto classes = two_coloring(base.graph);
      if (!classes) throw UsageError(path + " is not bipartite");
      if (glue_flip) classes = classes->flipped();
      auto list = split_list(joins);
      if (list.size() != 3) throw UsageError("--joins needs three vertices");
      GlueSpec spec;
      spec.kind = glue_case == "lemma" ? GlueCase::kLemma
                  : glue_case == "a"   ? GlueCase::kA
                  : glue_case == "b"   ? GlueCase::kB
                                       : GlueCase::kC;
      for (int i = 0; i < 3; ++i) spec.joins[i] = to_int(list[i]);
      GlueResult r = glue_four(base.graph, base.labeling, *classes, spec);
      out << "glued graph on " << r.cert.graph.num_vertices()
          << " vertices: PASS\nconnectors:";
      for (const auto& c : r.connectors) out << ' ' << c.str();
      out << "\nsuffix table " << (r.standard_table ? "standard" : "searched")
          << ", swapped leaves:";
      for (int v : r.swapped) out << ' ' << v;
      out << '\n';
      run.deliver(out_prefix, r.cert);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NoLabelingError& e) {
    out << "NO LABELING: " << e.what() << '\n';
    return kNegative;
  } catch (const LabelCollisionError& e) {
    out << "COLLISION: " << e.what() << '\n';
    return kNegative;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kInconclusive;
  }
  return kUsage;
}

}  // namespace setseq::cli
