#include "upo/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "upo/axioms.hpp"
#include "upo/compose.hpp"
#include "upo/layers.hpp"
#include "upo/oracle.hpp"
#include "upo/upg.hpp"

namespace upo {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Files land via a temp-and-rename so readers never observe a half-written
// result.
void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path == "-") {
    out << content;
    out.flush();
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::SyntaxError, "cannot write '" + tmp + "'");
    f << content;
    if (!f.flush()) throw Error(ErrorKind::SyntaxError, "cannot write '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::SyntaxError, "cannot rename onto '" + path + "'");
  }
}

std::string annotate_witness(const Diagnostic& d, const UpgDocument& doc) {
  if (d.witness.empty()) return "";
  std::string s = " (witness:";
  bool first = true;
  for (const std::string& w : d.witness) {
    s += first ? " " : ", ";
    first = false;
    s += w;
    auto it = doc.source_lines.find(w);
    if (it != doc.source_lines.end()) s += " @ line " + std::to_string(it->second);
  }
  s += ")";
  return s;
}

void print_diagnostics(const CheckReport& report, const UpgDocument& doc,
                       std::ostream& out) {
  for (const Diagnostic& d : report.diagnostics) {
    out << "  [" << to_string(d.axiom) << "] " << d.message
        << annotate_witness(d, doc) << "\n";
  }
  if (report.truncated) out << "  ... diagnostics truncated\n";
}

std::string verdict(const std::string& label, const CheckReport& report) {
  if (report.passed) return label + ": pass";
  std::size_t n = report.diagnostics.size();
  return label + ": fail (" + std::to_string(n) +
         (n == 1 ? " violation" : " violations") + (report.truncated ? "+" : "") + ")";
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::ValidationError:
    case ErrorKind::OrderDomainMismatch:
    case ErrorKind::MalformedToken:
    case ErrorKind::TooLarge:
      return kBadInput;
    default:
      return kCheckFailed;  // well-formed input, failed operation
  }
}

UpgDocument load_document(const std::string& path, std::istream& in,
                          bool need_order) {
  UpgDocument doc = parse_upg(read_input(path, in));
  if (need_order && !doc.order) {
    throw Error(ErrorKind::OrderDomainMismatch,
                "'" + path + "' has no order line");
  }
  return doc;
}

struct CheckArgs {
  std::string file;
  std::string definition = "q";
  bool admissible = false;
};

int run_check(const CheckArgs& args, std::istream& in, std::ostream& out) {
  UpgDocument doc = load_document(args.file, in, true);
  std::vector<std::pair<std::string, CheckReport>> results;
  if (args.definition == "u" || args.definition == "both") {
    results.emplace_back("U", check_u(doc.graph, *doc.order));
  }
  if (args.definition == "q" || args.definition == "both") {
    results.emplace_back("Q", check_q(doc.graph, *doc.order));
  }
  if (args.admissible) {
    results.emplace_back("admissible", check_admissible(doc.graph, *doc.order));
  }

  bool all_passed = true;
  std::string line;
  for (const auto& [label, report] : results) {
    if (!line.empty()) line += ", ";
    line += verdict(label, report);
    all_passed = all_passed && report.passed;
  }
  out << line << "\n";
  for (const auto& [label, report] : results) print_diagnostics(report, doc, out);
  return all_passed ? kOk : kCheckFailed;
}

struct ComposeArgs {
  std::string first;
  std::string second;
  std::string output;
  bool strict_wires = false;
};

int run_compose(const ComposeArgs& args, std::istream& in, std::ostream& out) {
  UpgDocument first = load_document(args.first, in, true);
  UpgDocument second = load_document(args.second, in, true);
  ComposeOptions opts;
  opts.strict_wires = args.strict_wires;
  ComposedGraph composed = compose(UpoGraph{first.graph, *first.order},
                                   UpoGraph{second.graph, *second.order}, opts);
  UpgDocument result;
  result.graph = composed.graph;
  result.order = composed.order;
  write_output(args.output, serialize_upg(result), out);
  return kOk;
}

struct PipelineArgs {
  std::string file;
  std::string output;
};

int run_pipeline(const PipelineArgs& args, std::istream& in, std::ostream& out) {
  LayerStack stack = parse_layers(read_input(args.file, in));
  ComposedGraph composed = pipeline(stack);
  UpgDocument result;
  result.graph = composed.graph;
  result.order = composed.order;
  write_output(args.output, serialize_upg(result), out);
  return kOk;
}

struct EnumerateArgs {
  std::string file;
  std::string definition = "q";
  bool admissible = false;
  bool count_only = false;
  bool force = false;
  std::size_t limit = kNoLimit;
};

int run_enumerate(const EnumerateArgs& args, std::istream& in, std::ostream& out) {
  UpgDocument doc = load_document(args.file, in, false);
  Definition def = args.definition == "u" ? Definition::U : Definition::Q;
  EnumerationResult found =
      enumerate_upos(doc.graph, args.admissible, def, args.limit, args.force);
  if (args.count_only) {
    out << found.orders.size() << "\n";
  } else {
    for (const EdgeOrder& order : found.orders) {
      std::string line;
      for (const EdgeId& e : order.sequence()) {
        if (!line.empty()) line += ' ';
        line += e;
      }
      out << line << "\n";
    }
  }
  if (!found.exhausted) out << "# limit reached, enumeration truncated\n";
  return kOk;
}

struct ExportArgs {
  std::string file;
  std::string output;
};

int run_export_dot(const ExportArgs& args, std::istream& in, std::ostream& out) {
  UpgDocument doc = load_document(args.file, in, false);
  write_output(args.output, export_dot(doc), out);
  return kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"upward planar orders on progressive graphs"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "check the axioms of an ordered UPG file");
  check->add_option("file", check_args.file, "UPG file, or - for stdin")->required();
  check->add_option("--definition", check_args.definition,
                    "which definition to check (u, q or both)")
      ->check(CLI::IsMember({"u", "q", "both"}));
  check->add_flag("--admissible", check_args.admissible,
                  "also check boundary admissibility");

  ComposeArgs compose_args;
  CLI::App* comp = app.add_subcommand("compose", "glue two ordered UPG files");
  comp->add_option("first", compose_args.first, "first factor")->required();
  comp->add_option("second", compose_args.second, "second factor")->required();
  comp->add_option("-o,--output", compose_args.output, "output UPG file, or -")
      ->required();
  comp->add_flag("--strict-wires", compose_args.strict_wires,
                 "refuse wire-with-wire fusions");

  PipelineArgs pipeline_args;
  CLI::App* pipe = app.add_subcommand("pipeline", "compose a layer file top to bottom");
  pipe->add_option("file", pipeline_args.file, "layer file, or - for stdin")->required();
  pipe->add_option("-o,--output", pipeline_args.output, "output UPG file, or -")
      ->required();

  EnumerateArgs enum_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list every order passing the axioms");
  enumerate->add_option("file", enum_args.file, "UPG file, or - for stdin")->required();
  enumerate->add_option("--definition", enum_args.definition,
                        "definition to enumerate against (u or q)")
      ->check(CLI::IsMember({"u", "q"}));
  enumerate->add_flag("--admissible", enum_args.admissible,
                      "keep only admissible orders");
  enumerate->add_flag("--count-only", enum_args.count_only, "print only the count");
  enumerate->add_option("--limit", enum_args.limit, "stop after this many orders");
  enumerate->add_flag("--force", enum_args.force, "override the size cap");

  ExportArgs export_args;
  CLI::App* dot = app.add_subcommand("export-dot", "render a UPG file as Graphviz");
  dot->add_option("file", export_args.file, "UPG file, or - for stdin")->required();
  dot->add_option("-o,--output", export_args.output, "output DOT file, or -")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (check->parsed()) return run_check(check_args, in, out);
    if (comp->parsed()) return run_compose(compose_args, in, out);
    if (pipe->parsed()) return run_pipeline(pipeline_args, in, out);
    if (enumerate->parsed()) return run_enumerate(enum_args, in, out);
    if (dot->parsed()) return run_export_dot(export_args, in, out);
  } catch (const NotAdmissibleError& e) {
    err << "error: " << e.what() << "\n";
    for (const Diagnostic& d : e.report().diagnostics) {
      err << "  [" << to_string(d.axiom) << "] " << d.message << "\n";
    }
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kBadInput;  // unreachable with require_subcommand(1)
}

}  // namespace upo
