// knotcert: batch certifier for knot and link diagrams.
//
// Reads diagrams one per line (or as a JSON array), writes one report per
// record, and exits 0 only if every record was analyzed. See README.md for
// the input grammars.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "knotcert/report.hpp"

namespace {

struct CommonArgs {
  std::string file = "-";
  std::string format = "auto";
  bool json = false;
  bool text = false;
  std::uint32_t jobs = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("file", args.file,
                  "Input file of diagram records ('-' reads stdin)")
      ->default_val("-");
  cmd->add_option("--format", args.format,
                  "Input grammar; auto sniffs per record")
      ->check(CLI::IsMember({"auto", "pd", "gauss", "braid", "json"}))
      ->default_val("auto");
  CLI::Option* j = cmd->add_flag("--json", args.json, "Emit JSON lines");
  cmd->add_flag("--text", args.text, "Emit human-readable text (default)")
      ->excludes(j);
  cmd->add_option("--jobs", args.jobs, "Worker threads (output is identical)")
      ->check(CLI::Range(1u, 256u))
      ->default_val(1);
}

knotcert::InputFormat to_format(const std::string& name) {
  if (name == "pd") return knotcert::InputFormat::Pd;
  if (name == "gauss") return knotcert::InputFormat::Gauss;
  if (name == "braid") return knotcert::InputFormat::Braid;
  if (name == "json") return knotcert::InputFormat::Json;
  return knotcert::InputFormat::Auto;
}

int run(const CommonArgs& args, knotcert::AnalyzeOptions::Mode mode,
        bool assume_nontrivial) {
  knotcert::AnalyzeOptions opts;
  opts.mode = mode;
  opts.format = to_format(args.format);
  opts.assume_nontrivial = assume_nontrivial;
  opts.json = args.json;
  opts.jobs = args.jobs;

  knotcert::BatchResult result;
  if (args.file == "-") {
    result = knotcert::analyze_batch(std::cin, opts);
  } else {
    std::ifstream in(args.file, std::ios::binary);
    if (!in) {
      std::cerr << "knotcert: cannot open " << args.file << "\n";
      return 2;
    }
    result = knotcert::analyze_batch(in, opts);
  }
  std::cout << result.rendered;
  return result.failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifying analyzer for knot and link diagrams"};
  app.require_subcommand(1);

  CommonArgs analyze_args;
  bool assume_nontrivial = false;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Certify each diagram record");
  add_common(analyze, analyze_args);
  analyze->add_flag("--assume-nontrivial", assume_nontrivial,
                    "Record non-triviality as an external assumption when "
                    "no internal criterion applies");

  CommonArgs inv_args;
  CLI::App* invariants =
      app.add_subcommand("invariants", "Report diagram invariants only");
  add_common(invariants, inv_args);

  CommonArgs bridge_args;
  CLI::App* bridges =
      app.add_subcommand("bridges", "Report the over/under bridge structure");
  add_common(bridges, bridge_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze->parsed())
    return run(analyze_args, knotcert::AnalyzeOptions::Mode::Analyze,
               assume_nontrivial);
  if (invariants->parsed())
    return run(inv_args, knotcert::AnalyzeOptions::Mode::Invariants, false);
  return run(bridge_args, knotcert::AnalyzeOptions::Mode::Bridges, false);
}
