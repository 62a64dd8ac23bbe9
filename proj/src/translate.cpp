#include <exception>

#include "ejmt/transfer.hpp"

namespace ejmt {

std::string_view status_name(SentenceStatus status) {
  switch (status) {
    case SentenceStatus::ok:
      return "ok";
    case SentenceStatus::no_parse:
      return "no-parse";
    case SentenceStatus::unknown_token:
      return "unknown-token";
    case SentenceStatus::constraints_unsatisfiable:
      return "constraints-unsatisfiable";
  }
  return "ok";
}

SentenceResult translate_sentence(std::string text, const std::shared_ptr<const ResourceBundle>& bundle,
                                  const Constraints& constraints, const TranslateOptions& options) {
  SentenceResult result;
  result.tokens = tokenize(text);
  result.text = std::move(text);
  const auto& cfg = bundle->config();
  const std::size_t beam = options.beam.value_or(cfg.beam);
  const std::size_t kbest = options.kbest.value_or(cfg.kbest);

  std::optional<Forest> forest;
  try {
    forest.emplace(parse_to_forest(result.tokens, bundle));
  } catch (const UnknownTokenError& e) {
    result.status = SentenceStatus::unknown_token;
    result.message = e.what();
    return result;
  }
  result.parse_count = count_parses(*forest);
  result.log10_count = log10_count(result.parse_count);
  if (!forest->root()) {
    result.status = SentenceStatus::no_parse;
    result.message = "no-parse";
    if (auto span = forest->longest_span()) {
      result.message += "; longest span [" + std::to_string(span->begin) + "," + std::to_string(span->end) + ")";
    }
    return result;
  }

  std::vector<Interpretation> ranked;
  try {
    ranked = kbest_interpretations(*forest, *bundle, constraints, beam, kbest);
  } catch (const InterpretationError& e) {
    result.status = e.kind() == InterpretationError::Kind::unsatisfiable ? SentenceStatus::constraints_unsatisfiable
                                                                         : SentenceStatus::no_parse;
    result.message = e.what();
    return result;
  }
  for (const auto& interp : ranked) {
    result.alternatives.push_back({interp.signature, interp.breakdown.total, realize(interp, *bundle)});
  }
  result.japanese = result.alternatives.front().japanese;
  result.best = std::move(ranked.front());
  return result;
}

namespace {

std::vector<SentenceResult> run_all(const std::vector<std::string>& sentences,
                                    const std::shared_ptr<const ResourceBundle>& bundle,
                                    const std::vector<const Constraints*>& constraints, const TranslateOptions& options,
                                    Execution execution) {
  const auto n = static_cast<long>(sentences.size());
  std::vector<SentenceResult> results(sentences.size());
  std::vector<std::exception_ptr> errors(sentences.size());
  auto one = [&](long i) {
    try {
      results[i] = translate_sentence(sentences[i], bundle, *constraints[i], options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) one(i);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

std::vector<SentenceResult> translate(std::string_view text, const std::shared_ptr<const ResourceBundle>& bundle,
                                      const Constraints& constraints, const TranslateOptions& options,
                                      Execution execution) {
  const auto sentences = split_sentences(text);
  if (!constraints.empty()) {
    if (sentences.empty()) throw ConstraintError("constraints given but text has no sentence");
    validate_constraints(constraints, tokenize(sentences.front()), *bundle);
  }
  const Constraints none;
  std::vector<const Constraints*> per(sentences.size(), &none);
  if (!per.empty()) per.front() = &constraints;
  return run_all(sentences, bundle, per, options, execution);
}

std::vector<SentenceResult> translate_sentences(const std::vector<std::string>& sentences,
                                                const std::shared_ptr<const ResourceBundle>& bundle,
                                                const TranslateOptions& options, Execution execution) {
  const Constraints none;
  std::vector<const Constraints*> per(sentences.size(), &none);
  return run_all(sentences, bundle, per, options, execution);
}

}  // namespace ejmt
