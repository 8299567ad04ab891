#include "webworld/cli.hpp"

#include "webworld/cases.hpp"
#include "webworld/enumeration.hpp"
#include "webworld/error.hpp"
#include "webworld/io.hpp"
#include "webworld/matrices.hpp"
#include "webworld/posets.hpp"
#include "webworld/transitive.hpp"
#include "webworld/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace webworld::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string inline_json;
  std::string format = "json";
  std::size_t max_world = kDefaultWorldGuard;
  std::size_t max_dimension = 5000;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.path, "JSON file, or - for stdin");
  cmd->add_option("--json", in.inline_json, "inline JSON instead of a file");
  cmd->add_option("--max-world", in.max_world, "abort when a world exceeds this many diagrams")
      ->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-f,--format", in.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

json load(const InputOptions& in) {
  if (!in.inline_json.empty()) return parse_json(in.inline_json);
  if (in.path.empty()) throw UsageError("an --input file or --json text is required");
  std::stringstream buf;
  if (in.path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(in.path);
    if (!f) throw UsageError("cannot read " + in.path);
    buf << f.rdbuf();
  }
  return parse_json(buf.str());
}

bool is_world_json(const json& j) { return j.is_object() && (j.contains("represent") || j.contains("seed_diagram")); }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json traces_json(const IntPolynomial& m, const BigRational& r) {
  return {{"colouring", to_json(m)}, {"colouring_text", m.to_string()}, {"mixing", to_json(r)}};
}

// ---- subcommands ----

int cmd_validate(const InputOptions& in, std::ostream& out) {
  const WebDiagram d = diagram_from_json(load(in));
  const auto pegs = d.pegs();
  if (in.format == "csv") {
    std::string p;
    for (std::size_t i = 0; i < pegs.size(); ++i) p += (i ? ";" : "") + std::to_string(pegs[i]);
    out << "n,edges,pegs\n" << d.peg_count() << ',' << d.size() << ',' << p << '\n';
    return kExitOk;
  }
  json j = to_json(d);
  j["valid"] = true;
  j["pegs"] = pegs;
  print(out, j);
  return kExitOk;
}

int cmd_world(const InputOptions& in, std::ostream& out) {
  const WebWorld w = world_from_json(load(in), in.max_world);
  if (in.format == "csv") {
    out << "index,diagram\n";
    for (std::size_t i = 0; i < w.size(); ++i) out << i << ',' << csv_quote(w[i].to_string()) << '\n';
    return kExitOk;
  }
  json diagrams = json::array();
  for (const auto& d : w.diagrams()) diagrams.push_back(to_json(d)["edges"]);
  const RepresentMatrix a = represent(w);
  print(out, {{"size", w.size()},
              {"n", w.peg_count()},
              {"represent", to_json(a)},
              {"size_formula", to_json(world_size(a))},
              {"proper", is_proper(a)},
              {"diagrams", diagrams}});
  return kExitOk;
}

int cmd_matrix(const InputOptions& in, const std::string& kind, std::ostream& out) {
  const WebWorld w = world_from_json(load(in), in.max_world);
  const auto m = colouring_matrix(w, {.max_dimension = in.max_dimension});
  if (kind == "colouring") {
    if (in.format == "csv") out << to_csv(m);
    else
      print(out, {{"kind", kind}, {"dimension", m.dimension()}, {"trace", to_json(trace(m))}, {"entries", to_json(m)}});
    return kExitOk;
  }
  const auto r = mixing_matrix(m);
  if (in.format == "csv") out << to_csv(r);
  else
    print(out, {{"kind", kind},
                {"dimension", r.dimension()},
                {"trace", to_json(trace(r))},
                {"rank", rank(r)},
                {"idempotent", is_idempotent(r)},
                {"entries", to_json(r)}});
  return kExitOk;
}

int cmd_trace(const InputOptions& in, const std::string& via, std::ostream& out) {
  const WebWorld w = world_from_json(load(in), in.max_world);
  IntPolynomial tm;
  BigRational tr;
  if (via == "posets") {
    const TracePair tp = trace_via_posets(w);
    tm = tp.colouring;
    tr = tp.mixing;
  } else {
    tm = colouring_trace(w);
    tr = mixing_trace(w);
  }
  if (in.format == "csv") {
    out << "colouring,mixing\n" << tm.to_csv() << ',' << to_string(tr) << '\n';
    return kExitOk;
  }
  json j = traces_json(tm, tr);
  j["via"] = via;
  j["size"] = w.size();
  print(out, j);
  return kExitOk;
}

json block_json(const Block& b) {
  json edges = json::array();
  for (const Edge& e : b.edges) edges.push_back({e.x, e.y, e.a, e.b});
  return {{"label", b.label}, {"edges", edges}, {"normalized", to_json(b.normalized)}};
}

int cmd_posets(const InputOptions& in, std::ostream& out) {
  const json input = load(in);
  if (is_world_json(input)) {
    const WebWorld w = world_from_json(input, in.max_world);
    json census = json::array();
    for (const auto& [key, count] : poset_census(w)) census.push_back({{"poset", key}, {"count", count}});
    json j = {{"size", w.size()}, {"census", census}};
    try {
      const TracePair tp = trace_via_posets(w);
      j["trace"] = traces_json(tp.colouring, tp.mixing);
    } catch (const WebError& e) {
      j["trace_error"] = e.what();
    }
    print(out, j);
    return kExitOk;
  }
  const WebDiagram d = diagram_from_json(input);
  const DecompositionPoset p = decomposition_poset(d);
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(block_json(b));
  json exts = json::array(), des = json::array();
  for (const auto& le : linear_extensions(p.order)) {
    exts.push_back(le);
    des.push_back(descents(le));
  }
  json j = {{"blocks", blocks},
            {"poset", to_json(p.order)},
            {"linear_extensions", exts},
            {"descents", des},
            {"distinct_blocks", p.has_distinct_blocks()}};
  if (p.has_distinct_blocks())
    j["diagonal"] = traces_json(diag_colouring_poly(p), diag_mixing(p));
  print(out, j);
  return kExitOk;
}

struct EnumerateOptions {
  std::string count;
  bool list = false;
  int census = -1;
  int max_m = 4, max_t = 4, max_n = 4;
  int max_pegs = 3, max_edges = 3;
  std::string filter = "all";
  bool check = false;
};

WorldFilter parse_filter(const std::string& f) {
  if (f == "no-isolated") return WorldFilter::NoIsolatedPegs;
  if (f == "proper") return WorldFilter::Proper;
  if (f == "transitive") return WorldFilter::Transitive;
  return WorldFilter::All;
}

void print_matrices(std::ostream& out, const std::vector<RepresentMatrix>& ms, const std::string& format) {
  if (format == "csv") {
    out << "pegs,edges,entries\n";
    for (const auto& a : ms) {
      std::string cells;
      for (const auto& row : a.rows())
        for (int v : row) cells += (cells.empty() ? "" : ";") + std::to_string(v);
      out << a.size() << ',' << a.total() << ',' << cells << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const auto& a : ms) arr.push_back(to_json(a));
  print(out, {{"count", ms.size()}, {"matrices", arr}});
}

int cmd_enumerate(const EnumerateOptions& o, const std::string& format, std::ostream& out) {
  if (o.census >= 0) {
    print_matrices(out, edge_census(o.census), format);
    return kExitOk;
  }
  if (o.list) {
    print_matrices(out, enumerate_worlds(o.max_pegs, o.max_edges, parse_filter(o.filter)), format);
    return kExitOk;
  }
  if (o.count.empty()) throw UsageError("enumerate needs --count, --list or --census");
  if (o.max_m > 8 || o.max_t > 10 || o.max_n > 10) throw WebError(ErrorKind::BoundsTooLarge, "table bounds too large");
  struct Row {
    int m, t, n;
    BigInt value, direct;
  };
  std::vector<Row> rows;
  std::vector<std::vector<std::vector<BigInt>>> npww_values;
  if (o.count == "npww") npww_values = npww_table(o.max_m, o.max_t, o.max_n);
  for (int m = 1; m <= o.max_m; ++m)
    for (int t = 0; t <= o.max_t; ++t)
      for (int n = 0; n <= o.max_n; ++n) {
        Row r{m, t, n, 0, 0};
        if (o.count == "nww") {
          if (m < 2) continue;
          r.value = nww_series_coefficient(m, t, n);
          if (o.check) r.direct = nww(m, t, n);
        } else if (o.count == "nwwnip") {
          if (m < 2 || t < 1 || n < 1) continue;
          r.value = nwwnip(m, t, n);
          if (o.check) r.direct = nwwnip_direct(m, t, n);
        } else {
          if (t < 1 || n < 1) continue;
          r.value = npww_values[m][t][n];
          if (o.check) r.direct = npww_direct(m, t, n);
        }
        rows.push_back(r);
      }
  bool mismatch = false;
  if (format == "csv") {
    out << "m,t,n,count" << (o.check ? ",direct" : "") << '\n';
    for (const auto& r : rows) {
      out << r.m << ',' << r.t << ',' << r.n << ',' << r.value;
      if (o.check) out << ',' << r.direct;
      out << '\n';
      mismatch = mismatch || (o.check && r.value != r.direct);
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      json row = {{"m", r.m}, {"t", r.t}, {"n", r.n}, {"count", to_json(r.value)}};
      if (o.check) row["direct"] = to_json(r.direct);
      arr.push_back(row);
      mismatch = mismatch || (o.check && r.value != r.direct);
    }
    print(out, {{"table", o.count}, {"rows", arr}});
  }
  return mismatch ? kExitMismatch : kExitOk;
}

struct CaseOptions {
  int n = 2;
  std::string matrix;
  bool trace = false;
  bool verify = false;
};

int finish_report(const Report& rep, std::ostream& out) {
  out << rep.to_text();
  return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_case(int which, const CaseOptions& o, const std::string& format, std::ostream& out) {
  if (o.n < 1 || o.n > 6) throw WebError(ErrorKind::BoundsTooLarge, "case commands support 1 <= n <= 6");
  if (o.verify) {
    if (which == 1) return finish_report(verify_case1(o.n), out);
    if (which == 2) return finish_report(verify_case2(o.n), out);
    return finish_report(verify_case3(o.n), out);
  }
  if (!o.matrix.empty()) {
    if (which == 3) {
      // Labeled brute force, rows and columns in sign-code order.
      const auto codes = all_sign_codes(o.n);
      std::ostringstream csv;
      json rows = json::array();
      for (const auto& pi : codes) {
        json row = json::array();
        for (std::size_t j = 0; j < codes.size(); ++j) {
          IntPolynomial p;
          BigRational r;
          for (int k = 1; k <= o.n; ++k) {
            const BigInt f = case3_labeled_f(pi, codes[j], k);
            p.add_term(k, f);
            r += BigRational(f) * BigRational(BigInt(k % 2 ? 1 : -1), BigInt(k));
          }
          const std::string cell = o.matrix == "colouring" ? p.to_csv() : to_string(r);
          csv << (j ? "," : "") << cell;
          row.push_back(o.matrix == "colouring" ? to_json(p) : to_json(r));
        }
        csv << '\n';
        rows.push_back(row);
      }
      json codes_json = codes;
      if (format == "csv") out << csv.str();
      else print(out, {{"kind", o.matrix}, {"codes", codes_json}, {"entries", rows}});
      return kExitOk;
    }
    const WebWorld w = which == 1 ? case1_world(o.n) : case2_world(o.n);
    const auto m = colouring_matrix(w);
    if (o.matrix == "colouring") {
      if (format == "csv") out << to_csv(m);
      else print(out, {{"kind", o.matrix}, {"dimension", m.dimension()}, {"entries", to_json(m)}});
    } else {
      const auto r = mixing_matrix(m);
      if (format == "csv") out << to_csv(r);
      else print(out, {{"kind", o.matrix}, {"dimension", r.dimension()}, {"entries", to_json(r)}});
    }
    return kExitOk;
  }
  EntryPair closed, brute;
  if (which == 1) {
    closed = case1_traces(o.n);
    const WebWorld w = case1_world(o.n);
    brute = {colouring_trace(w), mixing_trace(w)};
  } else if (which == 2) {
    closed = case2_traces(o.n);
    const WebWorld w = case2_world(o.n);
    brute = {colouring_trace(w), mixing_trace(w)};
  } else {
    if (o.n < 2) throw UsageError("case3 needs n >= 2");
    closed = case3_traces(o.n);
    brute = case3_labeled_traces(o.n);
  }
  if (format == "csv") {
    out << "source,colouring,mixing\n"
        << "closed," << closed.colouring.to_csv() << ',' << to_string(closed.mixing) << '\n'
        << "brute," << brute.colouring.to_csv() << ',' << to_string(brute.mixing) << '\n';
  } else {
    print(out, {{"n", o.n},
                {"closed", traces_json(closed.colouring, closed.mixing)},
                {"brute", traces_json(brute.colouring, brute.mixing)},
                {"match", closed.colouring == brute.colouring && closed.mixing == brute.mixing}});
  }
  return kExitOk;
}

int cmd_transitive(int edges, bool list, const std::string& format, std::ostream& out) {
  const auto worlds = transitive_worlds(edges);
  if (format == "csv") {
    print_matrices(out, worlds, format);
    return kExitOk;
  }
  json j = {{"edges", edges}, {"count", worlds.size()}};
  if (list) {
    json arr = json::array();
    for (const auto& a : worlds) arr.push_back({{"represent", to_json(a)}, {"core", core_matrix(a)}});
    j["matrices"] = arr;
  }
  print(out, j);
  return kExitOk;
}

struct VerifyOptions {
  std::string suite = "all";
  int n = 3;
  int max_pegs = 4;
  int max_edges = 4;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  Report rep;
  const bool all = o.suite == "all";
  if (all || o.suite == "mixing") rep.append(verify_mixing_laws(o.max_pegs, o.max_edges));
  if (all || o.suite == "diagonal") rep.append(verify_diagonals(o.max_pegs, o.max_edges));
  if (all || o.suite == "counting") rep.append(verify_counting(std::min(o.max_edges, 4)));
  if (all || o.suite == "case1") rep.append(verify_case1(o.n));
  if (all || o.suite == "case2") rep.append(verify_case2(o.n));
  if (all || o.suite == "case3") rep.append(verify_case3(std::max(o.n, 2)));
  if (all || o.suite == "keys") rep.append(verify_keys(6));
  if (all || o.suite == "transitive") rep.append(verify_transitive());
  return finish_report(rep, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Web diagrams, web worlds and their colouring and mixing matrices"};
  app.name(args.empty() ? "webworld" : args.front());
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "report elapsed time on stderr");

  InputOptions in;
  std::string kind = "mixing", via = "diagonal";
  EnumerateOptions en;
  CaseOptions cs;
  int t_edges = 3;
  bool t_list = false;
  VerifyOptions vo;

  auto* validate = app.add_subcommand("validate", "check a diagram and print Pegs(D)");
  add_input(validate, in);
  add_format(validate, in);

  auto* world = app.add_subcommand("world", "list every diagram of a world");
  add_input(world, in);
  add_format(world, in);

  auto* matrix = app.add_subcommand("matrix", "full colouring or mixing matrix of a world");
  add_input(matrix, in);
  add_format(matrix, in);
  matrix->add_option("-k,--kind", kind, "colouring or mixing")->check(CLI::IsMember({"colouring", "mixing"}));
  matrix->add_option("--max-dim", in.max_dimension, "largest world to materialize")->check(CLI::PositiveNumber);

  auto* trace_cmd = app.add_subcommand("trace", "traces from diagonal entries only");
  add_input(trace_cmd, in);
  add_format(trace_cmd, in);
  trace_cmd->add_option("--via", via, "diagonal or posets")->check(CLI::IsMember({"diagonal", "posets"}));

  auto* posets = app.add_subcommand("posets", "decomposition poset of a diagram, or poset census of a world");
  add_input(posets, in);

  auto* enumerate = app.add_subcommand("enumerate", "count or list web worlds");
  add_format(enumerate, in);
  enumerate->add_option("--count", en.count, "table to print")->check(CLI::IsMember({"nww", "nwwnip", "npww"}));
  enumerate->add_flag("--list", en.list, "list represent matrices");
  enumerate->add_option("--census", en.census, "worlds with exactly this many edges, no isolated pegs")
      ->check(CLI::Range(0, 6));
  enumerate->add_option("--max-m", en.max_m, "first index bound (pegs; edges for npww)");
  enumerate->add_option("--max-t", en.max_t, "second index bound (edges; pairs for npww)");
  enumerate->add_option("--max-n", en.max_n, "third index bound (pairs; pegs for npww)");
  enumerate->add_option("--max-pegs", en.max_pegs, "peg bound for --list");
  enumerate->add_option("--max-edges", en.max_edges, "edge bound for --list");
  enumerate->add_option("--filter", en.filter, "world filter for --list")
      ->check(CLI::IsMember({"all", "no-isolated", "proper", "transitive"}));
  enumerate->add_flag("--check", en.check, "add a direct-enumeration column; exit 1 on mismatch");

  std::array<CLI::App*, 3> case_cmds{};
  for (int c = 1; c <= 3; ++c) {
    auto* cmd = app.add_subcommand("case" + std::to_string(c), "exactly solvable family " + std::to_string(c));
    add_format(cmd, in);
    cmd->add_option("-n,--n", cs.n, "family size")->required();
    auto* mx = cmd->add_option("--matrix", cs.matrix, "print the colouring or mixing matrix")
                   ->check(CLI::IsMember({"colouring", "mixing"}));
    auto* tr = cmd->add_flag("--trace", cs.trace, "closed-form and brute-force traces (default)");
    auto* vf = cmd->add_flag("--verify", cs.verify, "cross-check closed forms against brute force");
    mx->excludes(tr)->excludes(vf);
    tr->excludes(vf);
    case_cmds[c - 1] = cmd;
  }

  auto* transitive = app.add_subcommand("transitive", "transitive worlds with a given edge count");
  add_format(transitive, in);
  transitive->add_option("--edges", t_edges, "edge count")->required();
  transitive->add_flag("--list", t_list, "include the matrices and their cores");

  auto* verify = app.add_subcommand("verify", "run cross-validation suites");
  verify->add_option("--suite", vo.suite, "suite name")
      ->check(CLI::IsMember({"all", "mixing", "diagonal", "counting", "case1", "case2", "case3", "keys", "transitive"}));
  verify->add_option("-n,--n", vo.n, "size for the case suites")->check(CLI::Range(1, 5));
  verify->add_option("--max-pegs", vo.max_pegs, "peg bound for world suites")->check(CLI::Range(2, 5));
  verify->add_option("--max-edges", vo.max_edges, "edge bound for world suites")->check(CLI::Range(1, 5));

  std::vector<const char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"webworld"} : args;
  for (const auto& a : storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto dispatch = [&]() -> int {
    if (*validate) return cmd_validate(in, out);
    if (*world) return cmd_world(in, out);
    if (*matrix) return cmd_matrix(in, kind, out);
    if (*trace_cmd) return cmd_trace(in, via, out);
    if (*posets) return cmd_posets(in, out);
    if (*enumerate) return cmd_enumerate(en, in.format, out);
    for (int c = 1; c <= 3; ++c)
      if (*case_cmds[c - 1]) return cmd_case(c, cs, in.format, out);
    if (*transitive) return cmd_transitive(t_edges, t_list, in.format, out);
    if (*verify) return cmd_verify(vo, out);
    return kExitUsage;
  };
  try {
    const int code = dispatch();
    if (verbose) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
      err << app.get_subcommands().front()->get_name() << ": exit " << code << " after " << ms.count() << " ms\n";
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const WebError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::WorldTooLarge:
      case ErrorKind::BoundsTooLarge:
      case ErrorKind::SeriesTruncationTooSmall:
        return kExitGuard;
      default:
        return kExitUsage;
    }
  }
}

}  // namespace webworld::cli
