//
// Copyright 2026 The Diacritica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//


// Command-line front end: corpus statistics, dataset preparation, model and
// lexicon building, restoration runs and evaluation.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "diacritica/diacritica.hpp"

namespace fs = std::filesystem;

namespace diacritica {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBackend = 3;

constexpr std::size_t kShardLines = 4096;

Diagnostics g_diagnostics;

// Reads a corpus and validates it: UTF-8 only, no NUL or CR inside a line.
std::vector<std::string> read_corpus(const fs::path& path) {
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    for (std::size_t pos = 0; pos < line.size();) {
      const Utf8Char c = decode_utf8(line, pos);
      if (!c.valid) {
        throw DataError(path.string() + ":" + std::to_string(i + 1) + ": invalid UTF-8");
      }
      if (c.code_point == 0 || c.code_point == U'\r') {
        throw DataError(path.string() + ":" + std::to_string(i + 1) +
                        ": control character inside a line");
      }
      pos += c.length;
    }
    split_tokens(line, &g_diagnostics);
  }
  return lines;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    write_file(path, content);
  }
}

void write_corpus(const std::string& path, const std::vector<std::string>& lines) {
  if (path.empty() || path == "-") {
    for (const auto& l : lines) std::cout << l << '\n';
    std::cout.flush();
  } else {
    write_lines(path, lines);
  }
}

// Splits [0, n) into shards, maps each in parallel and returns per-shard
// results in order.
template <typename Fn>
auto map_shards(std::size_t n, unsigned threads, Fn&& fn) {
  const std::size_t shards = (n + kShardLines - 1) / kShardLines;
  return parallel_map(
      shards,
      [&](std::size_t s) {
        const std::size_t begin = s * kShardLines;
        return fn(begin, std::min(n, begin + kShardLines));
      },
      threads);
}

std::vector<std::string> strip_corpus(const std::vector<std::string>& lines,
                                      const DiacriticTable& table, unsigned threads) {
  return parallel_map(
      lines.size(), [&](std::size_t i) { return strip_diacritics(lines[i], table); }, threads);
}

struct CorruptedCorpus {
  std::vector<std::string> lines;
  std::vector<std::vector<CorruptionEvent>> events;
  CorruptionReport report;
};

CorruptedCorpus corrupt_corpus(const std::vector<std::string>& lines, const TypoModel& model,
                               std::uint64_t seed, std::uint64_t epoch, unsigned threads) {
  auto results = parallel_map(
      lines.size(),
      [&](std::size_t i) { return corrupt(lines[i], model, derive_seed(seed, i, epoch)); },
      threads);
  CorruptedCorpus out;
  out.lines.reserve(lines.size());
  out.events.reserve(lines.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    out.report.add(lines[i], results[i].events);
    out.lines.push_back(std::move(results[i].text));
    out.events.push_back(std::move(results[i].events));
  }
  return out;
}

std::string format_events(const std::vector<std::vector<CorruptionEvent>>& events) {
  std::string out = "line\tkind\tposition\toriginal\treplacement\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (const auto& e : events[i]) {
      out += std::to_string(i + 1) + '\t' + std::string(to_string(e.kind)) + '\t' +
             std::to_string(e.position) + '\t' + e.original + '\t' + e.replacement + '\n';
    }
  }
  return out;
}

UnigramLexicon build_lexicon_sharded(const std::vector<std::string>& lines,
                                     const DiacriticTable& table, unsigned threads) {
  auto shards = map_shards(lines.size(), threads, [&](std::size_t begin, std::size_t end) {
    UnigramLexicon lex(table.language());
    for (std::size_t i = begin; i < end; ++i) lex.add_line(lines[i], table);
    return lex;
  });
  UnigramLexicon lex(table.language());
  for (auto& s : shards) lex.merge(s);
  lex.finalize();
  return lex;
}

std::string format_stats(const CorpusStats& s, const std::string& language) {
  std::string out = "# corpus statistics: " + language + "\n#\n";
  char line[160];
  std::snprintf(line, sizeof line, "#   sentences %llu, alpha-words %llu\n",
                static_cast<unsigned long long>(s.sentences),
                static_cast<unsigned long long>(s.alpha_words));
  out += line;
  out += "#   words with diacritics " + st::fixed2(s.diacritic_word_pct()) +
         "%, letters with diacritics " + st::fixed2(s.diacritic_letter_pct()) + "%\n\n";
  out += "[stats]\n";
  out += "language = " + st::quote(language) + "\n";
  out += "sentences = " + std::to_string(s.sentences) + "\n";
  out += "tokens = " + std::to_string(s.tokens) + "\n";
  out += "alpha_words = " + std::to_string(s.alpha_words) + "\n";
  out += "diacritized_alpha_words = " + std::to_string(s.diacritized_alpha_words) + "\n";
  out += "letters = " + std::to_string(s.letters) + "\n";
  out += "diacritic_letters = " + std::to_string(s.diacritic_letters) + "\n";
  out += "alpha_word_pct = " + st::fixed2(s.alpha_word_pct()) + "\n";
  out += "diacritic_word_pct = " + st::fixed2(s.diacritic_word_pct()) + "\n";
  out += "diacritic_letter_pct = " + st::fixed2(s.diacritic_letter_pct()) + "\n";
  out += std::string("defined = ") + (s.defined() ? "true" : "false") + "\n";
  return out;
}

TypoModel typo_model_from_edits(const fs::path& edits, LayoutFamily layout, double scale,
                                std::uint64_t min_count) {
  const TypoModel model =
      build_typo_model(EditCorpus::load(edits, min_count), KeyboardLayout(layout), scale);
  if (model.clamp_count() > 0) {
    std::cerr << "warning: " << model.clamp_count()
              << " scaled probabilities exceed 1 and are clamped\n";
  }
  return model;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Backends

struct BackendOptions {
  std::string kind = "identity";
  std::string endpoint;
  std::string fallback = "keep_backend";
  int timeout_ms = 30000;
  unsigned retries = 0;
};

std::shared_ptr<RestorationBackend> make_backend(
    const BackendOptions& opt, const std::shared_ptr<const UnigramLexicon>& lexicon) {
  const auto need_lexicon = [&] {
    if (!lexicon) throw UsageError("backend '" + opt.kind + "' needs a lexicon");
  };
  const auto remote = [&]() -> std::shared_ptr<RestorationBackend> {
    if (opt.endpoint.empty()) throw UsageError("backend '" + opt.kind + "' needs --endpoint");
    RemoteOptions ro;
    ro.timeout = std::chrono::milliseconds(opt.timeout_ms);
    return std::make_shared<RemoteBackend>(Endpoint::parse(opt.endpoint), ro);
  };
  if (opt.kind == "identity") return std::make_shared<IdentityBackend>();
  if (opt.kind == "dict") {
    need_lexicon();
    return std::make_shared<DictionaryBackend>(lexicon);
  }
  if (opt.kind == "remote") return remote();
  if (opt.kind == "hybrid") {
    need_lexicon();
    const HybridPolicy policy{parse_alignment_fallback(opt.fallback)};
    return std::make_shared<HybridBackend>(lexicon, remote(), policy, &g_diagnostics);
  }
  throw UsageError("unknown backend '" + opt.kind + "' (expected identity, dict, remote or hybrid)");
}

std::string format_failures(const std::vector<BatchFailure>& failures) {
  std::string out;
  for (const auto& f : failures) {
    out += std::to_string(f.index + 1) + '\t' + f.message + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Experiment config

struct ExperimentConfig {
  std::string language;
  std::string task = "diacritics_only";
  std::uint64_t seed = 1;
  double scale = 3.0;
  LayoutFamily layout = LayoutFamily::kQwerty;
  unsigned threads = 0;
  std::uint64_t min_char_count = kDefaultMinCharCount;

  fs::path table, train, dev, test, edit_corpus, typo_model, lexicon, output;

  std::vector<std::string> backends{"identity", "dict"};
  BackendOptions backend;
};

ExperimentConfig load_config(const fs::path& path) {
  const StructuredDoc doc = StructuredDoc::parse(read_file(path));
  const fs::path base = path.parent_path();
  ExperimentConfig c;
  c.language = doc.get("", "language").as_string();
  if (const auto* v = doc.find("", "task")) c.task = v->as_string();
  if (c.task != "diacritics_only" && c.task != "diacritics_plus_typos") {
    throw DataError("config: unknown task '" + c.task + "'");
  }
  if (const auto* v = doc.find("", "seed")) c.seed = v->as_uint();
  if (const auto* v = doc.find("", "scale")) c.scale = v->as_double();
  c.layout = layout_for_language(c.language);
  if (const auto* v = doc.find("", "layout")) c.layout = parse_layout_family(v->as_string());
  if (const auto* v = doc.find("", "threads")) c.threads = static_cast<unsigned>(v->as_uint());
  if (const auto* v = doc.find("", "min_char_count")) c.min_char_count = v->as_uint();

  const auto path_of = [&](std::string_view key) -> fs::path {
    const auto* v = doc.find("paths", key);
    if (v == nullptr || v->as_string().empty()) return {};
    const fs::path p = v->as_string();
    return p.is_absolute() ? p : base / p;
  };
  c.table = path_of("table");
  c.train = path_of("train");
  c.dev = path_of("dev");
  c.test = path_of("test");
  c.edit_corpus = path_of("edit_corpus");
  c.typo_model = path_of("typo_model");
  c.lexicon = path_of("lexicon");
  c.output = path_of("output");

  if (const auto* v = doc.find("backend", "names")) c.backends = split_list(v->as_string());
  if (const auto* v = doc.find("backend", "endpoint")) c.backend.endpoint = v->as_string();
  if (const auto* v = doc.find("backend", "fallback")) c.backend.fallback = v->as_string();
  if (const auto* v = doc.find("backend", "timeout_ms")) {
    c.backend.timeout_ms = static_cast<int>(v->as_uint());
  }
  if (const auto* v = doc.find("backend", "retries")) {
    c.backend.retries = static_cast<unsigned>(v->as_uint());
  }
  return c;
}

void validate_config(const ExperimentConfig& c) {
  if (c.table.empty()) throw DataError("config: paths.table is required");
  if (c.test.empty()) throw DataError("config: paths.test is required");
  if (c.output.empty()) throw DataError("config: paths.output is required");
  if (c.backends.empty()) throw DataError("config: backend.names is empty");
  for (const fs::path* p : {&c.table, &c.train, &c.dev, &c.test, &c.edit_corpus, &c.typo_model,
                            &c.lexicon}) {
    if (!p->empty() && !fs::exists(*p)) throw DataError("config: missing file " + p->string());
  }
  if (c.task == "diacritics_plus_typos" && c.typo_model.empty() && c.edit_corpus.empty()) {
    throw DataError("config: task diacritics_plus_typos needs paths.typo_model or paths.edit_corpus");
  }
  const bool needs_lexicon = std::any_of(c.backends.begin(), c.backends.end(), [](const auto& b) {
    return b == "dict" || b == "hybrid";
  });
  if (needs_lexicon && c.lexicon.empty() && c.train.empty()) {
    throw DataError("config: dict and hybrid backends need paths.lexicon or paths.train");
  }
}

// ---------------------------------------------------------------------------
// Commands

struct Common {
  unsigned threads = 0;
  unsigned resolved_threads() const { return threads ? threads : default_thread_count(); }
};

struct PrepareArgs {
  std::string table, input, task = "diacritics_only", model, edits, language, layout;
  std::string input_out, gold_out, report;
  std::uint64_t seed = 1, epoch = 0, min_count = kDefaultMinCharCount;
  double scale = 3.0;
  bool scale_set = false;
};

struct Prepared {
  std::vector<std::string> input;
  std::vector<std::string> gold;
  std::optional<CorruptionReport> report;
};

Prepared prepare(const std::vector<std::string>& gold, const DiacriticTable& table,
                 const std::optional<TypoModel>& model, std::uint64_t seed, std::uint64_t epoch,
                 unsigned threads) {
  Prepared p;
  p.gold = gold;
  p.input = strip_corpus(gold, table, threads);
  if (model) {
    CorruptedCorpus c = corrupt_corpus(p.input, *model, seed, epoch, threads);
    p.input = std::move(c.lines);
    p.report = c.report;
  }
  return p;
}

int cmd_stats(const Common& common, const std::string& table_path,
              const std::vector<std::string>& inputs, const std::string& output) {
  const DiacriticTable table = DiacriticTable::load(table_path);
  CorpusStats total;
  for (const auto& input : inputs) {
    const auto lines = read_corpus(input);
    for (const auto& s : map_shards(lines.size(), common.resolved_threads(),
                                    [&](std::size_t b, std::size_t e) {
                                      CorpusStats st;
                                      for (std::size_t i = b; i < e; ++i) st.add(lines[i], table);
                                      return st;
                                    })) {
      total.merge(s);
    }
  }
  write_output(output, format_stats(total, table.language()));
  return kExitOk;
}

int cmd_strip(const Common& common, const std::string& table_path, const std::string& input,
              const std::string& output) {
  const DiacriticTable table = DiacriticTable::load(table_path);
  write_corpus(output, strip_corpus(read_corpus(input), table, common.resolved_threads()));
  return kExitOk;
}

int cmd_corrupt(const Common& common, const std::string& model_path, const std::string& input,
                const std::string& output, std::uint64_t seed, std::uint64_t epoch,
                std::optional<double> scale, const std::string& events_path,
                const std::string& report_path) {
  TypoModel model = load_model(model_path);
  if (scale) model = model.with_scale(*scale);
  const CorruptedCorpus c =
      corrupt_corpus(read_corpus(input), model, seed, epoch, common.resolved_threads());
  write_corpus(output, c.lines);
  if (!events_path.empty()) write_file(events_path, format_events(c.events));
  if (!report_path.empty()) write_output(report_path, c.report.to_structured_text());
  std::cerr << "corrupted " << c.report.corrupted_characters << " of " << c.report.characters
            << " characters (" << st::fixed2(c.report.corrupted_pct()) << "%)\n";
  return kExitOk;
}

int cmd_build_typo_model(const std::string& edits, const std::string& output,
                         const std::string& layout, const std::string& language, double scale,
                         std::uint64_t min_count) {
  const LayoutFamily family =
      !layout.empty() ? parse_layout_family(layout) : layout_for_language(language);
  const TypoModel model = typo_model_from_edits(edits, family, scale, min_count);
  write_output(output, serialize_model(model));
  return kExitOk;
}

int cmd_build_lexicon(const Common& common, const std::string& table_path,
                      const std::vector<std::string>& inputs, const std::string& output) {
  const DiacriticTable table = DiacriticTable::load(table_path);
  std::vector<std::string> lines;
  for (const auto& input : inputs) {
    auto part = read_corpus(input);
    lines.insert(lines.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  const UnigramLexicon lex = build_lexicon_sharded(lines, table, common.resolved_threads());
  if (output.empty() || output == "-") {
    lex.save(std::cout);
  } else {
    lex.save(output);
  }
  return kExitOk;
}

int cmd_restore(const Common& common, const BackendOptions& opt, const std::string& lexicon_path,
                const std::string& table_path, const std::string& input,
                const std::string& output, const std::string& errors_path) {
  std::shared_ptr<const UnigramLexicon> lexicon;
  if (!lexicon_path.empty()) {
    if (table_path.empty()) throw UsageError("--lexicon needs --table");
    lexicon = std::make_shared<const UnigramLexicon>(
        UnigramLexicon::load(fs::path(lexicon_path), DiacriticTable::load(table_path)));
  }
  const auto backend = make_backend(opt, lexicon);
  const BatchResult r =
      restore_batch(*backend, read_corpus(input), common.resolved_threads(), opt.retries);
  write_corpus(output, r.lines);
  if (r.failures.empty()) return kExitOk;
  g_diagnostics.backend_failures += r.failures.size();
  if (!errors_path.empty()) write_file(errors_path, format_failures(r.failures));
  std::cerr << "error: " << r.failures.size() << " sentences failed; first: line "
            << r.failures.front().index + 1 << ": " << r.failures.front().message << '\n';
  return kExitBackend;
}

std::vector<std::string> default_names(const std::vector<std::string>& preds,
                                       std::vector<std::string> names) {
  if (!names.empty() && names.size() != preds.size()) {
    throw UsageError("--name must be given once per --pred");
  }
  if (names.empty()) {
    for (const auto& p : preds) names.push_back(fs::path(p).stem().string());
  }
  return names;
}

int cmd_evaluate(const std::string& gold_path, const std::vector<std::string>& preds,
                 const std::vector<std::string>& names_in, const std::string& output) {
  const auto gold = read_corpus(gold_path);
  const auto names = default_names(preds, names_in);
  std::vector<EvalReport> reports;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    reports.push_back(alpha_word_accuracy(gold, read_corpus(preds[i]), names[i]));
  }
  write_output(output, format_accuracy_report(reports));
  return kExitOk;
}

std::string analysis_report(const std::vector<std::string>& gold,
                            const std::vector<std::string>& pred, const std::string& name,
                            const FrequencyIndex& train, const DiacriticTable& table) {
  return format_frequency_report(frequency_bucket_report(gold, pred, train, name)) + "\n" +
         format_unseen_report(unseen_confusion(gold, pred, train, table, name));
}

int cmd_analyze(const Common& common, const std::string& gold_path, const std::string& pred_path,
                const std::string& name_in, const std::string& compare_path,
                const std::string& compare_name_in, const std::string& train_path,
                const std::string& table_path, const std::string& output) {
  const DiacriticTable table = DiacriticTable::load(table_path);
  const auto gold = read_corpus(gold_path);
  const auto pred = read_corpus(pred_path);
  const auto train = read_corpus(train_path);
  const std::string name = name_in.empty() ? fs::path(pred_path).stem().string() : name_in;
  const UnigramLexicon lex = build_lexicon_sharded(train, table, common.resolved_threads());
  const FrequencyIndex index = FrequencyIndex::from_lexicon(lex);
  std::string out = analysis_report(gold, pred, name, index, table);
  if (!compare_path.empty()) {
    const std::string compare_name =
        compare_name_in.empty() ? fs::path(compare_path).stem().string() : compare_name_in;
    out += "\n" + format_candidate_ratio_report(error_ratio_by_candidates(
                      gold, pred, read_corpus(compare_path), lex, table, name, compare_name));
  }
  write_output(output, out);
  return kExitOk;
}

int cmd_prepare(const Common& common, const PrepareArgs& a) {
  const DiacriticTable table = DiacriticTable::load(a.table);
  if (a.task != "diacritics_only" && a.task != "diacritics_plus_typos") {
    throw UsageError("unknown task '" + a.task + "'");
  }
  std::optional<TypoModel> model;
  if (a.task == "diacritics_plus_typos") {
    if (!a.model.empty()) {
      model = load_model(a.model);
      if (a.scale_set) model = model->with_scale(a.scale);
    } else if (!a.edits.empty()) {
      const std::string& lang = a.language.empty() ? table.language() : a.language;
      const LayoutFamily family =
          a.layout.empty() ? layout_for_language(lang) : parse_layout_family(a.layout);
      model = typo_model_from_edits(a.edits, family, a.scale, a.min_count);
    } else {
      throw UsageError("task diacritics_plus_typos needs --model or --edits");
    }
  }
  const Prepared p =
      prepare(read_corpus(a.input), table, model, a.seed, a.epoch, common.resolved_threads());
  write_lines(a.input_out, p.input);
  write_lines(a.gold_out, p.gold);
  if (p.report) {
    if (!a.report.empty()) write_file(a.report, p.report->to_structured_text());
    std::cerr << "corrupted " << p.report->corrupted_characters << " of "
              << p.report->characters << " characters ("
              << st::fixed2(p.report->corrupted_pct()) << "%)\n";
  }
  return kExitOk;
}

int cmd_run(ExperimentConfig c) {
  validate_config(c);
  const unsigned threads = c.threads ? c.threads : default_thread_count();
  const DiacriticTable table = DiacriticTable::load(c.table);
  fs::create_directories(c.output);

  std::optional<TypoModel> model;
  if (c.task == "diacritics_plus_typos") {
    if (!c.typo_model.empty()) {
      model = load_model(c.typo_model).with_scale(c.scale);
    } else {
      model = typo_model_from_edits(c.edit_corpus, c.layout, c.scale, c.min_char_count);
      save_model(c.output / "typo_model.toml", *model);
    }
  }

  const Prepared p = prepare(read_corpus(c.test), table, model, c.seed, 0, threads);
  write_lines(c.output / "input.txt", p.input);
  write_lines(c.output / "gold.txt", p.gold);
  if (p.report) write_file(c.output / "corruption.txt", p.report->to_structured_text());

  std::vector<std::string> train;
  if (!c.train.empty()) train = read_corpus(c.train);
  std::shared_ptr<const UnigramLexicon> lexicon;
  if (!c.lexicon.empty()) {
    lexicon = std::make_shared<const UnigramLexicon>(UnigramLexicon::load(c.lexicon, table));
  } else if (!train.empty()) {
    lexicon = std::make_shared<const UnigramLexicon>(build_lexicon_sharded(train, table, threads));
    lexicon->save(c.output / "lexicon.tsv");
  }

  int status = kExitOk;
  std::vector<EvalReport> reports;
  std::vector<std::pair<std::string, std::vector<std::string>>> outputs;
  for (const auto& name : c.backends) {
    BackendOptions opt = c.backend;
    opt.kind = name;
    const auto backend = make_backend(opt, lexicon);
    BatchResult r = restore_batch(*backend, p.input, threads, opt.retries);
    write_lines(c.output / ("pred." + name + ".txt"), r.lines);
    if (!r.failures.empty()) {
      g_diagnostics.backend_failures += r.failures.size();
      write_file(c.output / ("errors." + name + ".tsv"), format_failures(r.failures));
      std::cerr << "error: backend " << name << ": " << r.failures.size()
                << " sentences failed\n";
      status = kExitBackend;
    }
    reports.push_back(alpha_word_accuracy(p.gold, r.lines, name));
    outputs.emplace_back(name, std::move(r.lines));
  }

  std::string report = format_accuracy_report(reports);
  if (lexicon) {
    const FrequencyIndex index = train.empty() ? FrequencyIndex::from_lexicon(*lexicon)
                                               : FrequencyIndex::from_lines(train);
    for (const auto& [name, lines] : outputs) {
      write_file(c.output / ("analysis." + name + ".txt"),
                 analysis_report(p.gold, lines, name, index, table));
    }
    const auto dict = std::find_if(outputs.begin(), outputs.end(),
                                   [](const auto& o) { return o.first == "dict"; });
    if (dict != outputs.end()) {
      for (const auto& [name, lines] : outputs) {
        if (name == "dict" || name == "identity") continue;
        report += "\n" + format_candidate_ratio_report(error_ratio_by_candidates(
                             p.gold, lines, dict->second, *lexicon, table, name, "dict"));
      }
    }
  }
  write_file(c.output / "report.txt", report);
  std::cout << report;
  return status;
}

int run_main(int argc, char** argv) {
  CLI::App app{"Diacritics restoration and typo generation toolkit", "diacritica"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (0 = all cores)");

  // stats
  std::string stats_table, stats_output;
  std::vector<std::string> stats_inputs;
  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--table", stats_table, "Diacritic table")->required()->check(CLI::ExistingFile);
  stats->add_option("--input", stats_inputs, "Corpus files")->required()->check(CLI::ExistingFile);
  stats->add_option("--output", stats_output, "Report path (default stdout)");

  // strip
  std::string strip_table, strip_input, strip_output;
  auto* strip = app.add_subcommand("strip", "Remove diacritics");
  strip->add_option("--table", strip_table, "Diacritic table")->required()->check(CLI::ExistingFile);
  strip->add_option("--input", strip_input, "Corpus")->required()->check(CLI::ExistingFile);
  strip->add_option("--output", strip_output, "Output corpus (default stdout)");

  // corrupt
  std::string cor_model, cor_input, cor_output, cor_events, cor_report;
  std::uint64_t cor_seed = 1, cor_epoch = 0;
  double cor_scale = 3.0;
  auto* cor = app.add_subcommand("corrupt", "Inject typos");
  cor->add_option("--model", cor_model, "Typo model")->required()->check(CLI::ExistingFile);
  cor->add_option("--input", cor_input, "Corpus")->required()->check(CLI::ExistingFile);
  cor->add_option("--output", cor_output, "Output corpus (default stdout)");
  cor->add_option("--seed", cor_seed, "Global seed");
  cor->add_option("--epoch", cor_epoch, "Epoch mixed into per-sentence seeds");
  auto* cor_scale_opt =
      cor->add_option("--scale", cor_scale, "Override the scale stored in the model");
  cor->add_option("--events", cor_events, "Event log (TSV)");
  cor->add_option("--report", cor_report, "Corruption report");

  // build-typo-model
  std::string btm_edits, btm_output, btm_layout, btm_language;
  double btm_scale = 3.0;
  std::uint64_t btm_min = kDefaultMinCharCount;
  auto* btm = app.add_subcommand("build-typo-model", "Derive a typo model from an edit corpus");
  btm->add_option("--edits", btm_edits, "Edit corpus: typed<TAB>corrected")
      ->required()
      ->check(CLI::ExistingFile);
  btm->add_option("--output", btm_output, "Model path (default stdout)");
  btm->add_option("--layout", btm_layout, "qwerty, qwertz or azerty");
  btm->add_option("--language", btm_language, "Pick the layout for this language");
  btm->add_option("--scale", btm_scale, "Probability scale");
  btm->add_option("--min-count", btm_min, "Minimum character frequency");

  // build-lexicon
  std::string bl_table, bl_output;
  std::vector<std::string> bl_inputs;
  auto* bl = app.add_subcommand("build-lexicon", "Build the unigram lexicon");
  bl->add_option("--table", bl_table, "Diacritic table")->required()->check(CLI::ExistingFile);
  bl->add_option("--input", bl_inputs, "Training corpora")->required()->check(CLI::ExistingFile);
  bl->add_option("--output", bl_output, "Lexicon path (default stdout)");

  // restore
  BackendOptions rs_opt;
  std::string rs_lexicon, rs_table, rs_input, rs_output, rs_errors;
  auto* rs = app.add_subcommand("restore", "Restore diacritics");
  rs->add_option("--backend", rs_opt.kind, "identity, dict, remote or hybrid")
      ->check(CLI::IsMember({"identity", "dict", "remote", "hybrid"}));
  rs->add_option("--endpoint", rs_opt.endpoint, "Remote backend host:port");
  rs->add_option("--fallback", rs_opt.fallback, "keep_backend or keep_dictionary")
      ->check(CLI::IsMember({"keep_backend", "keep_dictionary"}));
  rs->add_option("--timeout-ms", rs_opt.timeout_ms, "Per-request timeout")
      ->check(CLI::PositiveNumber);
  rs->add_option("--retries", rs_opt.retries, "Retries per failed sentence");
  rs->add_option("--lexicon", rs_lexicon, "Lexicon file")->check(CLI::ExistingFile);
  rs->add_option("--table", rs_table, "Diacritic table")->check(CLI::ExistingFile);
  rs->add_option("--input", rs_input, "Input corpus")->required()->check(CLI::ExistingFile);
  rs->add_option("--output", rs_output, "Output corpus (default stdout)");
  rs->add_option("--errors", rs_errors, "Per-sentence error log");

  // evaluate
  std::string ev_gold, ev_output;
  std::vector<std::string> ev_preds, ev_names;
  auto* ev = app.add_subcommand("evaluate", "Alpha-word accuracy");
  ev->add_option("--gold", ev_gold, "Gold corpus")->required()->check(CLI::ExistingFile);
  ev->add_option("--pred", ev_preds, "Predictions")->required()->check(CLI::ExistingFile);
  ev->add_option("--name", ev_names, "System names, one per --pred");
  ev->add_option("--output", ev_output, "Report path (default stdout)");

  // analyze
  std::string an_gold, an_pred, an_name, an_compare, an_compare_name, an_train, an_table,
      an_output;
  auto* an = app.add_subcommand("analyze", "Frequency, unseen-word and candidate analyses");
  an->add_option("--gold", an_gold, "Gold corpus")->required()->check(CLI::ExistingFile);
  an->add_option("--pred", an_pred, "Predictions")->required()->check(CLI::ExistingFile);
  an->add_option("--name", an_name, "System name");
  an->add_option("--compare", an_compare, "Second system for the candidate-count ratio")
      ->check(CLI::ExistingFile);
  an->add_option("--compare-name", an_compare_name, "Name of the second system");
  an->add_option("--train", an_train, "Training corpus")->required()->check(CLI::ExistingFile);
  an->add_option("--table", an_table, "Diacritic table")->required()->check(CLI::ExistingFile);
  an->add_option("--output", an_output, "Report path (default stdout)");

  // prepare
  PrepareArgs pa;
  auto* pr = app.add_subcommand("prepare", "Build input/gold corpora for a task");
  pr->add_option("--table", pa.table, "Diacritic table")->required()->check(CLI::ExistingFile);
  pr->add_option("--input", pa.input, "Gold corpus")->required()->check(CLI::ExistingFile);
  pr->add_option("--task", pa.task, "diacritics_only or diacritics_plus_typos")
      ->check(CLI::IsMember({"diacritics_only", "diacritics_plus_typos"}));
  pr->add_option("--model", pa.model, "Typo model")->check(CLI::ExistingFile);
  pr->add_option("--edits", pa.edits, "Edit corpus")->check(CLI::ExistingFile);
  pr->add_option("--language", pa.language, "Language for the default layout");
  pr->add_option("--layout", pa.layout, "qwerty, qwertz or azerty");
  pr->add_option("--min-count", pa.min_count, "Minimum character frequency");
  pr->add_option("--seed", pa.seed, "Global seed");
  pr->add_option("--epoch", pa.epoch, "Epoch mixed into per-sentence seeds");
  auto* pa_scale = pr->add_option("--scale", pa.scale, "Probability scale");
  pr->add_option("--input-out", pa.input_out, "Input corpus path")->required();
  pr->add_option("--gold-out", pa.gold_out, "Gold corpus path")->required();
  pr->add_option("--report", pa.report, "Corruption report");

  // run
  std::string run_config, run_layout;
  std::uint64_t run_seed = 0;
  double run_scale = 0;
  auto* run = app.add_subcommand("run", "Run a full experiment from a config file");
  run->add_option("--config", run_config, "Experiment config")->required()->check(CLI::ExistingFile);
  auto* run_seed_opt = run->add_option("--seed", run_seed, "Override the config seed");
  auto* run_scale_opt = run->add_option("--scale", run_scale, "Override the config scale");
  run->add_option("--layout", run_layout, "Override the config layout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*stats) return cmd_stats(common, stats_table, stats_inputs, stats_output);
  if (*strip) return cmd_strip(common, strip_table, strip_input, strip_output);
  if (*cor) {
    return cmd_corrupt(common, cor_model, cor_input, cor_output, cor_seed, cor_epoch,
                       cor_scale_opt->count() ? std::optional<double>(cor_scale) : std::nullopt,
                       cor_events, cor_report);
  }
  if (*btm) return cmd_build_typo_model(btm_edits, btm_output, btm_layout, btm_language, btm_scale,
                                        btm_min);
  if (*bl) return cmd_build_lexicon(common, bl_table, bl_inputs, bl_output);
  if (*rs) return cmd_restore(common, rs_opt, rs_lexicon, rs_table, rs_input, rs_output, rs_errors);
  if (*ev) return cmd_evaluate(ev_gold, ev_preds, ev_names, ev_output);
  if (*an) {
    return cmd_analyze(common, an_gold, an_pred, an_name, an_compare, an_compare_name, an_train,
                       an_table, an_output);
  }
  if (*pr) {
    pa.scale_set = pa_scale->count() > 0;
    return cmd_prepare(common, pa);
  }
  ExperimentConfig config = load_config(run_config);
  if (run_seed_opt->count()) config.seed = run_seed;
  if (run_scale_opt->count()) config.scale = run_scale;
  if (!run_layout.empty()) config.layout = parse_layout_family(run_layout);
  if (common.threads) config.threads = common.threads;
  return cmd_run(std::move(config));
}

}  // namespace
}  // namespace diacritica

int main(int argc, char** argv) {
  using namespace diacritica;
  int status = kExitData;
  try {
    status = run_main(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    status = kExitUsage;
  } catch (const BackendError& e) {
    std::cerr << "backend error: " << e.what() << '\n';
    status = kExitBackend;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    status = kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    status = kExitData;
  }
  const Diagnostics& d = g_diagnostics;
  if (d.irregular_spacing_lines || d.alignment_fallbacks || d.backend_failures) {
    std::cerr << "diagnostics: ";
    d.print(std::cerr);
  }
  return status;
}
