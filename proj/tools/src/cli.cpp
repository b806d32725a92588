#include "hdq_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "hdq/codec.hpp"
#include "hdq/error.hpp"
#include "hdq/pipeline.hpp"
#include "hdq/torus2.hpp"
#include "hdq/torus3.hpp"
#include "hdq/verify.hpp"

namespace hdq::cli {

namespace {

struct GenOptions {
  int n = 0;
  int k = 0;
  std::string merging_set = "latin";
  bool expand = false;
  bool json = false;
  std::string out = "-";
  std::uint64_t max_steps = 0;
  bool max_steps_given = false;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t budget(const GenOptions& o) {
  if (o.max_steps_given) return o.max_steps;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Usage(std::string(kBudgetEnv) + " must be a non-negative integer, got '" + env + "'");
    }
    return v;
  }
  return kDefaultStepBudget;
}

// 4^(n*k) * count, saturating.
std::uint64_t torus_steps(int n, int k, int count) {
  const int bits = 2 * n * k;
  if (bits >= 62) return UINT64_MAX;
  return (std::uint64_t{1} << bits) * static_cast<std::uint64_t>(count);
}

/// Output sink: stdout for "-", otherwise a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) {
    if (path == "-") {
      stream_ = &out;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Usage("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

/// Emits a source pair, or with `expand` all of its permuted cycles,
/// streaming each permuted cycle straight from the source.
void emit(const GenOptions& o, const SourcePair& sp, const std::optional<MergingSet>& mset,
          std::ostream& out) {
  if (o.json) {
    Artifact a;
    if (o.expand) {
      a = Artifact::from(sp.expand());
    } else {
      a = Artifact::from(sp);
    }
    a.merging_set = mset;
    out << encode_json(a);
    return;
  }
  const auto len = sp.cycle.steps.size();
  if (!o.expand) {
    StreamWriter w(out, sp.cycle.kind, 1, len);
    w.write_cycle(sp.cycle.steps);
    w.write_matrix(sp.matrix);
    if (mset) w.write_merging_set(*mset);
    w.finish();
    return;
  }
  StreamWriter w(out, sp.cycle.kind, static_cast<std::uint64_t>(sp.matrix.size()), len);
  for (int i = 0; i < sp.matrix.size(); ++i) {
    const auto sigma = sp.matrix.row(i);
    for (const auto& s : sp.cycle.steps) w.put(sigma(s));
    w.end_cycle();
  }
  if (mset) w.write_merging_set(*mset);
  w.finish();
}

void emit_cycles(const GenOptions& o, const std::vector<CycleCode>& cycles, const MergingSet& mset,
                 std::ostream& out) {
  auto a = Artifact::from(cycles);
  a.merging_set = mset;
  if (o.json) {
    out << encode_json(a);
  } else {
    encode_text(a, out);
  }
}

int gen_q(const GenOptions& o, std::ostream& out, std::ostream& err) {
  const auto sp = build(o.n, budget(o));
  Sink sink(o.out, out);
  emit(o, sp, std::nullopt, sink.stream());
  err << "generated " << sp.cycle.kind.to_string() << ": " << (o.expand ? o.n : 1) << " cycle(s) of "
      << sp.cycle.steps.size() << " steps\n";
  return kOk;
}

int gen_torus(const GenOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw Usage("--n must be >= 1");
  const bool default_set = o.k == 3 && o.merging_set == "default";
  const int count = (o.expand || default_set) ? o.k : 1;
  const auto steps = torus_steps(o.n, o.k, count);
  if (steps > budget(o)) {
    throw BudgetExceeded("G_{" + std::to_string(o.n) + "," + std::to_string(o.k) + "} output needs " +
                         (steps == UINT64_MAX ? std::string("more than 2^62") : std::to_string(steps)) +
                         " steps, over the budget of " + std::to_string(budget(o)));
  }
  Sink sink(o.out, out);
  if (o.k == 2) {
    emit(o, hd_torus2(o.n), std::nullopt, sink.stream());
  } else if (default_set) {
    const auto s = default_merging_set(o.n);
    const auto d = hd_torus3_surgery(s);
    emit_cycles(o, {d.x, d.y, d.z}, s, sink.stream());
  } else {
    const auto s = latin_merging_set(o.n);
    emit(o, source_pair_torus3(s), s, sink.stream());
  }
  err << "generated G_{" << o.n << "," << o.k << "}: " << count << " cycle(s) of "
      << torus_steps(o.n, o.k, 1) << " steps\n";
  return kOk;
}

Artifact load(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw Usage("cannot open '" + path + "'");
    in = &file;
  }
  const int first = (*in >> std::ws).peek();
  if (first == '{') {
    std::stringstream buf;
    buf << in->rdbuf();
    return decode_json(buf.str());
  }
  return decode_text(*in);
}

verify::Report verify_artifact(const Artifact& a, int jobs) {
  verify::Report r;
  const auto& kind = a.kind;
  if (a.matrix && a.cycles.size() == 1) {
    r.merge(verify::check_latin(a.source_pair(), jobs));
  } else if (!a.cycles.empty()) {
    if (a.matrix) {
      r.add("matrix layout", false, "a MATRIX section needs exactly one source cycle");
    }
    const bool partial = a.cycles.size() < static_cast<std::size_t>(kind.decomposition_size());
    r.merge(verify::check_hd(a.cycles, kind, jobs, !partial));
  } else if (!a.merging_set) {
    r.add("content", false, "file has neither cycles nor a merging set");
  }
  if (a.merging_set) {
    const int n = kind.family() == Family::Torus && kind.k() == 3 ? kind.n() : a.merging_set->n;
    r.merge(verify::check_merging_set(*a.merging_set, n), "merging set ");
  }
  return r;
}

int cmd_verify(const std::string& path, bool json, int jobs, std::ostream& out, std::ostream& err) {
  Artifact a;
  try {
    a = load(path);
  } catch (const ParseError& e) {
    verify::Report r;
    r.add("parse", false, e.what());
    out << (json ? r.to_json() : r.to_text());
    return kVerifyFailed;
  }
  const auto r = verify_artifact(a, jobs);
  out << (json ? r.to_json() : r.to_text());
  if (!r.ok()) err << "verification failed\n";
  return r.ok() ? kOk : kVerifyFailed;
}

int cmd_info(const std::string& path, std::ostream& out) {
  const auto a = load(path);
  const auto& kind = a.kind;
  out << "graph: " << kind.to_string() << '\n';
  out << "family: " << (kind.family() == Family::Hypercube ? "Q" : "G") << '\n';
  out << "n: " << kind.n() << '\n';
  if (kind.family() == Family::Torus) out << "k: " << kind.k() << '\n';
  out << "vertices: " << kind.vertex_count() << '\n';
  out << "edges: " << kind.edge_count() << '\n';
  out << "cycles: " << a.cycles.size() << '\n';
  if (!a.cycles.empty()) out << "cycle length: " << a.cycles.front().steps.size() << '\n';
  for (std::size_t i = 0; i < a.cycles.size(); ++i) {
    std::map<int, std::uint64_t> hist;
    std::uint64_t backward = 0;
    for (const auto& s : a.cycles[i].steps) {
      ++hist[s.dimension];
      backward += s.direction == Direction::Backward;
    }
    out << "cycle " << i + 1 << " steps per dimension:";
    for (const auto& [d, c] : hist) out << ' ' << d << ':' << c;
    out << " (backward " << backward << ")\n";
  }
  if (a.matrix) {
    out << "matrix " << a.matrix->size() << "x" << a.matrix->size() << ":\n";
    for (const auto& row : a.matrix->rows()) {
      out << ' ';
      for (int v : row) out << ' ' << v;
      out << '\n';
    }
  }
  if (a.merging_set) {
    out << "merging set: n = " << a.merging_set->n << ", " << a.merging_set->elements.size()
        << " elements\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton decompositions of hypercubes and 4^n-ary tori", "hdq"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a decomposition");
  gen_cmd->require_subcommand(1);
  auto add_common = [&gen](CLI::App* cmd) {
    cmd->add_flag("--expand", gen.expand, "Write every permuted cycle instead of the source pair");
    cmd->add_flag("--json", gen.json, "Write the structured JSON form");
    cmd->add_option("--out", gen.out, "Output path, '-' for stdout")->capture_default_str();
    cmd->add_option("--max-steps", gen.max_steps,
                    "Largest number of steps to generate (default 2^28, or $HDQ_MAX_STEPS)");
  };
  auto* gen_q_cmd = gen_cmd->add_subcommand("q", "Source pair of Q_{2n}, n = 2^a 3^b");
  gen_q_cmd->add_option("--n", gen.n, "Half the hypercube dimension")->required();
  add_common(gen_q_cmd);
  auto* gen_t_cmd = gen_cmd->add_subcommand("torus", "Decomposition of the torus G_{n,k}");
  gen_t_cmd->add_option("--n", gen.n, "Each axis has 4^n vertices")->required();
  gen_t_cmd->add_option("--k", gen.k, "Number of axes")->required()->check(CLI::IsMember({2, 3}));
  auto* mset_opt = gen_t_cmd->add_option("--merging-set", gen.merging_set, "Merging set for k = 3")
                       ->check(CLI::IsMember({"latin", "default"}))
                       ->capture_default_str();
  add_common(gen_t_cmd);

  std::string path;
  bool json = false;
  int jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Check a file produced by gen");
  verify_cmd->add_option("path", path, "HDQ1 or JSON file, '-' for stdin")->required();
  verify_cmd->add_flag("--json", json, "Machine-readable report");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 64));

  auto* info_cmd = app.add_subcommand("info", "Summarize a file");
  info_cmd->add_option("path", path, "HDQ1 or JSON file, '-' for stdin")->required();

  std::vector<std::string> storage{"hdq"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArguments;
  }

  try {
    if (gen_q_cmd->parsed()) {
      gen.max_steps_given = gen_q_cmd->count("--max-steps") > 0;
      return gen_q(gen, out, err);
    }
    if (gen_t_cmd->parsed()) {
      gen.max_steps_given = gen_t_cmd->count("--max-steps") > 0;
      if (gen.k == 2 && mset_opt->count() > 0) throw Usage("--merging-set applies only to k = 3");
      return gen_torus(gen, out, err);
    }
    if (verify_cmd->parsed()) return cmd_verify(path, json, jobs, out, err);
    if (info_cmd->parsed()) return cmd_info(path, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const UnsupportedOrder& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedOrder;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "; raise --max-steps or " << kBudgetEnv << '\n';
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kBadArguments;
}

}  // namespace hdq::cli
