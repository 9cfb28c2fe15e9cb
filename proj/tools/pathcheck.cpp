// pathcheck — command-line front end.
//
//   pathcheck check FILE...        type-check files in order, one shared state
//   pathcheck norm FILE --term X   print the eta-long normal form of a definition
//   pathcheck corpus [--root DIR]  check the bundled library against its manifest
//   pathcheck finmodel [...]       run finite-model suites
//   pathcheck report FILE          re-read a JSON report and exit by its summary
//
// Exit codes: 0 all passed, 1 failures (a report was still emitted), 2 usage,
// IO or parse errors. Diagnostics go to stderr; the report goes to stdout.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgl/core.hpp"
#include "rgl/corpus.hpp"
#include "rgl/error.hpp"
#include "rgl/finmodel.hpp"
#include "rgl/pretty.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailures = 1;
constexpr int kUsage = 2;

void print_report(const rgl::Report& r, bool json) {
  std::cout << (json ? rgl::report_to_json(r) : rgl::report_to_human(r));
}

void print_diagnostics(const rgl::Report& r) {
  for (const rgl::ReportItem& it : r.entries)
    if (!it.pass && !it.message.empty()) std::cerr << it.message << "\n";
}

int finish(const rgl::Report& r, bool json) {
  print_report(r, json);
  print_diagnostics(r);
  return r.ok() ? kOk : kFailures;
}

int run_check(const std::vector<std::string>& paths, bool json) {
  rgl::Checker ck;
  rgl::Report rep;
  rep.command = "check";
  bool structural = false;  // an input failed to read or parse
  for (const std::string& path : paths) {
    rgl::FileReport fr = rgl::check_file(*ck.globals, path);
    for (rgl::ReportItem& it : fr.items) {
      if (!it.pass && (it.name == "(parse)" || it.name == "(io)")) structural = true;
      if (paths.size() > 1) it.name = path + ":" + it.name;
      rep.add(std::move(it));
    }
  }
  int code = finish(rep, json);
  return structural ? kUsage : code;
}

int run_norm(const std::string& path, const std::string& term, bool json) {
  rgl::Checker ck;
  rgl::FileReport fr = rgl::check_file(*ck.globals, path);
  for (const rgl::ReportItem& it : fr.items)
    if (!it.pass && !it.message.empty()) std::cerr << it.message << "\n";
  if (fr.aborted) return kUsage;

  const rgl::GlobalEntry* entry = ck.globals->lookup(term);
  if (entry == nullptr) {
    std::cerr << "no definition named '" << term << "' in " << path << "\n";
    return kUsage;
  }
  if (!entry->body) {
    std::cerr << "'" << term << "' is a postulate; it has no normal form\n";
    return kUsage;
  }
  rgl::CPtr nf = rgl::normalize(ck.base(), *entry->body, entry->type);
  std::string printed = rgl::pretty(rgl::unresolve(*ck.globals, {}, nf));
  if (json) {
    rgl::Report rep;
    rep.command = "norm";
    rep.add({term, "norm", true, printed, 0.0});
    print_report(rep, true);
  } else {
    std::cout << printed << "\n";
  }
  return kOk;
}

int run_corpus_cmd(const std::string& root_flag, bool json) {
  std::string root = root_flag.empty() ? rgl::default_corpus_root() : root_flag;
  rgl::CorpusManifest manifest = rgl::load_manifest(root);
  rgl::Report rep = rgl::run_corpus(root, manifest);
  return finish(rep, json);
}

int run_finmodel(const std::string& suite, const rgl::fin::SuiteOptions& opt, bool json) {
  rgl::Report rep =
      suite.empty() ? rgl::fin::run_all_suites(opt) : rgl::fin::run_suite(suite, opt);
  return finish(rep, json);
}

int run_report(const std::string& path, bool json) {
  rgl::Report rep = rgl::report_from_json(rgl::read_text_file(path));
  print_report(rep, json);
  return rep.ok() ? kOk : kFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checker and finite-model laboratory for a reflexive-graph lens library"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit reports as JSON");

  auto* check = app.add_subcommand("check", "type-check .rgl files against one shared state");
  std::vector<std::string> paths;
  check->add_option("files", paths, ".rgl files, checked in the order given")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_flag("--json", json, "emit the report as JSON");

  auto* norm = app.add_subcommand("norm", "normalize one definition from a file");
  std::string norm_file, term;
  norm->add_option("file", norm_file, ".rgl file")->required()->check(CLI::ExistingFile);
  norm->add_option("--term", term, "name of the definition to normalize")->required();
  norm->add_flag("--json", json, "emit the result as a JSON report");

  auto* corpus = app.add_subcommand("corpus", "check the bundled library");
  std::string root;
  corpus->add_option("--root", root, "corpus directory (default: built-in, or PATHCHECK_CORPUS)");
  corpus->add_flag("--json", json, "emit the report as JSON");

  auto* fm = app.add_subcommand("finmodel", "run finite-model suites");
  std::string suite;
  rgl::fin::SuiteOptions opt;
  fm->add_option("--suite", suite, "suite name (default: every suite)");
  fm->add_option("--max-vertices", opt.max_vertices, "largest base graph size")
      ->check(CLI::PositiveNumber);
  fm->add_option("--max-mult", opt.max_mult, "largest edge multiplicity")
      ->check(CLI::PositiveNumber);
  fm->add_option("--max-fibers", opt.max_fibers, "largest fiber size")
      ->check(CLI::NonNegativeNumber);
  fm->add_option("--seed", opt.seed, "seed for sampled sub-suites");
  fm->add_flag("--json", json, "emit the report as JSON");

  auto* report = app.add_subcommand("report", "replay a stored JSON report");
  std::string report_file;
  report->add_option("file", report_file, "report.json produced by --json")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_flag("--json", json, "re-emit as JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check(paths, json);
    if (*norm) return run_norm(norm_file, term, json);
    if (*corpus) return run_corpus_cmd(root, json);
    if (*fm) return run_finmodel(suite, opt, json);
    if (*report) return run_report(report_file, json);
  } catch (const rgl::PosError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
