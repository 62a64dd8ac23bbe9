// ejmt: command-line driver for the English -> Japanese transfer engine.
//
//   ejmt translate --grammar F --lexicon F --taxonomy F --xforms F --config F
//                  [--beam N|inf] [--kbest N] [--text S | --input FILE] [--constraints FILE]
//   ejmt parse     <resource flags> [--text S | --input FILE]
//   ejmt regress   <resource flags> --corpus F --out REPORT [--baseline REPORT]
//   ejmt serve     <resource flags> --port N [--host H]
//
// Exit codes: 0 success (regress: no regressions), 1 regressions, 2 load errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ejmt/forest.hpp"
#include "ejmt/regression.hpp"
#include "ejmt/service.hpp"
#include "ejmt/transfer.hpp"

namespace {

constexpr int kExitRegressions = 1;
constexpr int kExitLoadError = 2;

struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_resource_flags(CLI::App* cmd, ejmt::ResourcePaths& paths) {
  cmd->add_option("--grammar", paths.grammar, "grammar rules file")->required();
  cmd->add_option("--lexicon", paths.lexicon, "lexicon file")->required();
  cmd->add_option("--taxonomy", paths.taxonomy, "semantic taxonomy file")->required();
  cmd->add_option("--xforms", paths.xforms, "analyze (xform) rules file")->required();
  cmd->add_option("--config", paths.config, "expert weight config file")->required();
}

std::shared_ptr<const ejmt::ResourceBundle> load_bundle(const ejmt::ResourcePaths& paths) {
  try {
    return ejmt::ResourceBundle::load_files(paths);
  } catch (const ejmt::ResourceError& e) {
    throw LoadError(e.what());
  }
}

std::string input_text(const std::string& text, const std::string& input) {
  if (!input.empty()) return slurp(input);
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based English to Japanese translation engine"};
  app.require_subcommand(1);

  ejmt::ResourcePaths paths;
  std::string text, input, beam_text, constraints_path, corpus_path, out_path, baseline_path, host = "127.0.0.1";
  std::size_t kbest = 0;
  int port = 8080;
  bool serial = false;

  auto* translate_cmd = app.add_subcommand("translate", "translate text and print JSON");
  add_resource_flags(translate_cmd, paths);
  translate_cmd->add_option("--beam", beam_text, "per-node beam width or inf");
  translate_cmd->add_option("--kbest", kbest, "number of alternatives")->check(CLI::Range(1, 100));
  auto* text_opt = translate_cmd->add_option("--text", text, "input text");
  translate_cmd->add_option("--input", input, "input file")->excludes(text_opt);
  translate_cmd->add_option("--constraints", constraints_path, "JSON constraints for the first sentence");

  auto* parse_cmd = app.add_subcommand("parse", "print the packed forest and parse counts");
  add_resource_flags(parse_cmd, paths);
  auto* parse_text = parse_cmd->add_option("--text", text, "input text");
  parse_cmd->add_option("--input", input, "input file")->excludes(parse_text);

  auto* regress_cmd = app.add_subcommand("regress", "run a golden corpus and diff against a baseline");
  add_resource_flags(regress_cmd, paths);
  regress_cmd->add_option("--corpus", corpus_path, "TSV corpus")->required();
  regress_cmd->add_option("--out", out_path, "JSON-lines report to write")->required();
  regress_cmd->add_option("--baseline", baseline_path, "previous report to diff against");
  regress_cmd->add_flag("--serial", serial, "evaluate cases on one thread");

  auto* serve_cmd = app.add_subcommand("serve", "serve the HTTP API");
  add_resource_flags(serve_cmd, paths);
  serve_cmd->add_option("--port", port, "TCP port")->required();
  serve_cmd->add_option("--host", host, "bind address");

  CLI11_PARSE(app, argc, argv);

  try {
    if (translate_cmd->parsed()) {
      auto bundle = load_bundle(paths);
      ejmt::TranslateOptions options;
      if (!beam_text.empty()) {
        options.beam = ejmt::parse_beam(beam_text);
        if (!options.beam) {
          std::cerr << "--beam must be a positive integer or inf\n";
          return kExitLoadError;
        }
      }
      if (kbest) options.kbest = kbest;
      ejmt::Constraints constraints;
      if (!constraints_path.empty()) {
        try {
          constraints = ejmt::constraints_from_json(ejmt::Json::parse(slurp(constraints_path)));
        } catch (const std::exception& e) {
          throw LoadError(std::string("constraints: ") + e.what());
        }
      }
      auto results = ejmt::translate(input_text(text, input), bundle, constraints, options);
      std::cout << ejmt::response_to_json(results).dump(2) << "\n";
      return 0;
    }

    if (parse_cmd->parsed()) {
      auto bundle = load_bundle(paths);
      for (const auto& sentence : ejmt::split_sentences(input_text(text, input))) {
        std::cout << "# sentence: " << sentence << "\n";
        try {
          auto forest = ejmt::parse_to_forest(ejmt::tokenize(sentence), bundle);
          auto count = ejmt::count_parses(forest);
          auto log10 = ejmt::log10_count(count);
          std::cout << "# nodes: " << forest.nodes().size() << "\n";
          std::cout << "# parse_count: " << count.str() << "\n";
          std::cout << "# log10_count: " << (log10 ? std::to_string(*log10) : std::string("null")) << "\n";
          if (!forest.root()) {
            std::cout << "# status: no-parse";
            if (auto span = forest.longest_span()) std::cout << " longest span [" << span->begin << "," << span->end << ")";
            std::cout << "\n";
          }
          std::cout << ejmt::serialize_forest(forest);
        } catch (const ejmt::UnknownTokenError& e) {
          std::cout << "# status: unknown-token " << e.what() << "\n";
        }
      }
      return 0;
    }

    if (regress_cmd->parsed()) {
      auto bundle = load_bundle(paths);
      std::vector<ejmt::CorpusCase> corpus;
      std::optional<ejmt::RunReport> baseline;
      try {
        corpus = ejmt::load_corpus(slurp(corpus_path));
        if (!baseline_path.empty()) baseline = ejmt::parse_report(slurp(baseline_path));
      } catch (const ejmt::ResourceError& e) {
        throw LoadError(e.what());
      } catch (const std::invalid_argument& e) {
        throw LoadError(e.what());
      }
      auto report = ejmt::run_suite(corpus, bundle, serial ? ejmt::Execution::serial : ejmt::Execution::parallel);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw LoadError("cannot write " + out_path);
      out << ejmt::format_report(report);
      out.close();
      std::cerr << "pass " << report.summary.pass << " fail " << report.summary.fail << " error "
                << report.summary.error << "\n";
      if (!baseline) return 0;
      auto diff = ejmt::diff_runs(*baseline, report);
      std::cout << ejmt::format_diff(diff) << "\n";
      return diff.regressions.empty() ? 0 : kExitRegressions;
    }

    if (serve_cmd->parsed()) {
      auto bundle = load_bundle(paths);
      ejmt::TranslationService service(bundle);
      service.serve(host, port, [&](int bound) { std::cerr << "listening on " << host << ":" << bound << "\n"; });
      return 0;
    }
  } catch (const LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLoadError;
  } catch (const ejmt::ConstraintError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLoadError;
  }
  return 0;
}
