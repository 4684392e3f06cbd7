// Copyright 2026 The ambistl Authors.
//
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

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit codes: 0 ok, 1 usage, 2 translation failure, 3 I/O, 4 corpus
// mismatch.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ambistl/ambistl.hpp"
#include "ambistl/json.hpp"

namespace ambistl::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kTranslationFailure = 2, kIoFailure = 3, kMismatch = 4 };

struct CliConfig {
  std::string lexicon_path;  // empty: AMBISTL_LEXICON or the bundled lexicon
  std::size_t n_best = kDefaultNBest;
  std::string format = "text";
  int verbosity = 0;
};

struct CorpusLine {
  std::string id;
  std::string sentence;
};

struct Expectation {
  std::size_t count = 0;
  std::set<std::string> formulas;  // canonical renderings
};

namespace detail {

inline std::string format_fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<CorpusLine> parse_corpus(const std::string& text) {
  std::vector<CorpusLine> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (ambistl::detail::trim(line).empty() || ambistl::detail::trim(line).front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorKind::kSyntax, "corpus line " + std::to_string(lineno) + ": expected 'id<TAB>sentence'");
    }
    out.push_back({std::string(ambistl::detail::trim(line.substr(0, tab))), line.substr(tab + 1)});
  }
  return out;
}

inline std::map<std::string, Expectation> parse_expectations(const std::string& text) {
  std::map<std::string, Expectation> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (ambistl::detail::trim(line).empty() || ambistl::detail::trim(line).front() == '#') continue;
    auto where = "expectations line " + std::to_string(lineno) + ": ";
    auto cols = ambistl::detail::split(line, '\t');
    if (cols.size() != 3) throw Error(ErrorKind::kSyntax, where + "expected 'id<TAB>count<TAB>formulas'");
    auto count = ambistl::detail::parse_int(cols[1]);
    if (!count || *count < 0) throw Error(ErrorKind::kSyntax, where + "bad count");
    Expectation e;
    e.count = static_cast<std::size_t>(*count);
    for (auto f : ambistl::detail::split(cols[2], ';')) {
      if (ambistl::detail::trim(f).empty()) continue;
      try {
        e.formulas.insert(stl::format(stl::canonicalize(stl::parse_formula(f))));
      } catch (const Error& err) {
        throw Error(ErrorKind::kSyntax, where + err.what());
      }
    }
    out[std::string(ambistl::detail::trim(cols[0]))] = std::move(e);
  }
  return out;
}

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kEmptyInput:
    case ErrorKind::kInvalidArgument:
      return kUsage;
    case ErrorKind::kIo:
      return kIoFailure;
    default:
      return kTranslationFailure;
  }
}

// Runs a file parser; a syntax error in the file is reported as an input
// (exit 3) failure naming the file.
template <typename Fn>
auto parse_input_file(const std::string& path, Fn&& parse) {
  try {
    return parse(read_file(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kSyntax) throw;
    throw Error(ErrorKind::kIo, path + ": " + e.what());
  }
}

inline Lexicon load_configured_lexicon(const CliConfig& cfg, std::ostream& err) {
  std::string path = cfg.lexicon_path;
  if (path.empty()) {
    if (const char* env = std::getenv("AMBISTL_LEXICON"); env != nullptr && *env != '\0') path = env;
  }
  if (path.empty()) return default_lexicon();
  std::vector<std::string> warnings;
  Lexicon lex = parse_input_file(path, [&](const std::string& text) { return load_lexicon_string(text, &warnings); });
  if (cfg.verbosity > 0) {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
  }
  return lex;
}

inline void print_candidates(std::ostream& out, const CandidateSet& set) {
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    const auto& c = set.candidates[i];
    out << (i + 1) << "  " << format_fixed(c.probability) << "  " << c.text << '\n';
  }
}

inline void print_tree(std::ostream& out, const Derivation& d, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (d.is_leaf()) {
    out << pad << d.category().str() << "  '" << d.entry().surface_text() << "'  " << format(d.entry().meaning)
        << '\n';
    return;
  }
  out << pad << d.category().str() << "  <" << d.rule() << ">";
  if (d.local_score() != 0.0) out << "  " << format_fixed(d.local_score(), 3);
  out << '\n';
  print_tree(out, d.left(), depth + 1);
  print_tree(out, d.right(), depth + 1);
}

inline void print_analysis(std::ostream& out, std::size_t index, const Analysis& a) {
  out << "  derivation " << index << "  score " << format_fixed(a.derivation.score(), 3) << '\n';
  print_tree(out, a.derivation, 2);
  out << "    meaning: " << format(a.meaning) << '\n';
  if (a.conversion.ok()) {
    out << "    formula: " << stl::format(stl::canonicalize(*a.conversion.formula)) << '\n';
  } else {
    out << "    formula: ill-formed (" << a.conversion.reason << ")\n";
  }
}

}  // namespace detail

inline int cmd_translate(const std::string& sentence, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Lexicon lex = detail::load_configured_lexicon(cfg, err);
  CandidateSet set = translate(sentence, lex, cfg.n_best);
  if (cfg.format == "json") {
    out << candidate_set_json(set).dump(2) << '\n';
  } else {
    detail::print_candidates(out, set);
    if (cfg.verbosity > 0) {
      err << set.n_derivations << " derivation(s), " << set.n_discarded << " discarded as ill-formed\n";
    }
  }
  return kOk;
}

inline int cmd_explain(const std::string& sentence, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Lexicon lex = detail::load_configured_lexicon(cfg, err);
  Translation tr = translate_detailed(sentence, lex, cfg.n_best);
  out << "sentence: " << sentence << '\n';
  out << "tokens:";
  for (const auto& t : tokenize(sentence)) out << ' ' << t.text;
  out << '\n';
  out << tr.candidates.n_derivations << " derivation(s) retained of " << tr.total_derivations << ", "
      << tr.candidates.n_discarded << " ill-formed\n";
  for (std::size_t rank = 0; rank < tr.candidates.candidates.size(); ++rank) {
    const auto& c = tr.candidates.candidates[rank];
    out << "\ncandidate " << (rank + 1) << "  p=" << detail::format_fixed(c.probability) << "  " << c.text << '\n';
    for (auto id : c.derivation_ids) detail::print_analysis(out, id, tr.analyses[id]);
  }
  if (cfg.verbosity > 0 && tr.candidates.n_discarded > 0) {
    out << "\nill-formed\n";
    for (std::size_t i = 0; i < tr.analyses.size(); ++i) {
      if (!tr.analyses[i].conversion.ok()) detail::print_analysis(out, i, tr.analyses[i]);
    }
  }
  return kOk;
}

inline int cmd_eval(const std::string& sentence, const std::string& trajectory_path, const std::string& regions_path,
                    const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Lexicon lex = detail::load_configured_lexicon(cfg, err);
  std::istringstream traj_in(detail::read_file(trajectory_path));
  std::istringstream reg_in(detail::read_file(regions_path));
  Trajectory x = [&] {
    try {
      return load_trajectory(traj_in);
    } catch (const Error& e) {
      throw Error(ErrorKind::kIo, trajectory_path + ": " + e.what());
    }
  }();
  RegionMap regions = [&] {
    try {
      return load_regions(reg_in);
    } catch (const Error& e) {
      throw Error(ErrorKind::kIo, regions_path + ": " + e.what());
    }
  }();
  CandidateSet set = translate(sentence, lex, cfg.n_best);
  RobustnessReport report = evaluate_candidates(set, x, regions);
  for (const auto& row : report.rows) {
    if (row.error == ErrorKind::kUnknownAtom) {
      err << "error: " << row.error_message << '\n';
      return kTranslationFailure;
    }
  }
  if (cfg.format == "json") {
    out << candidate_set_json(set, &report).dump(2) << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    out << (i + 1) << "  " << detail::format_fixed(row.probability) << "  ";
    if (row.robustness) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%+10.4f", *row.robustness);
      out << buf << "  " << (row.satisfied ? "satisfied" : "violated ");
    } else {
      out << std::string(10 - std::min<std::size_t>(10, std::string(error_kind_name(*row.error)).size()), ' ')
          << error_kind_name(*row.error) << "  -        ";
    }
    out << "  " << row.formula << '\n';
  }
  return kOk;
}

inline int cmd_corpus(const std::string& corpus_path, const std::optional<std::string>& expect_path,
                      const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Lexicon lex = detail::load_configured_lexicon(cfg, err);
  auto corpus = detail::parse_input_file(corpus_path, detail::parse_corpus);
  std::optional<std::map<std::string, Expectation>> expectations;
  if (expect_path) expectations = detail::parse_input_file(*expect_path, detail::parse_expectations);

  struct Outcome {
    std::optional<CandidateSet> set;
    std::string error;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& line : corpus) {
    jobs.push_back(std::async(std::launch::async, [&lex, &cfg, sentence = line.sentence]() {
      try {
        return Outcome{translate(sentence, lex, cfg.n_best), {}};
      } catch (const Error& e) {
        return Outcome{std::nullopt, e.what()};
      }
    }));
  }

  std::vector<std::string> mismatched;
  bool failed = false;
  ordered_json all = ordered_json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& id = corpus[i].id;
    Outcome o = jobs[i].get();
    if (!o.set) {
      failed = true;
      if (cfg.format == "json") {
        all.push_back({{"id", id}, {"error", o.error}});
      } else {
        out << id << "\terror: " << o.error << '\n';
      }
      if (expectations) mismatched.push_back(id);
      continue;
    }
    const auto& set = *o.set;
    if (cfg.format == "json") {
      auto j = candidate_set_json(set);
      ordered_json row;
      row["id"] = id;
      for (auto it = j.begin(); it != j.end(); ++it) row[it.key()] = it.value();
      all.push_back(std::move(row));
    } else {
      out << id << '\t' << set.candidates.size() << '\t' << set.candidates.front().text << '\n';
    }
    if (expectations) {
      auto it = expectations->find(id);
      if (it == expectations->end()) {
        err << "mismatch " << id << ": no expectation\n";
        mismatched.push_back(id);
        continue;
      }
      std::set<std::string> got;
      for (const auto& c : set.candidates) got.insert(c.text);
      bool ok = true;
      if (it->second.count != set.candidates.size()) {
        err << "mismatch " << id << ": expected " << it->second.count << " candidate(s), got "
            << set.candidates.size() << '\n';
        ok = false;
      }
      if (!it->second.formulas.empty() && it->second.formulas != got) {
        for (const auto& f : it->second.formulas) {
          if (!got.count(f)) err << "mismatch " << id << ": missing " << f << '\n';
        }
        for (const auto& f : got) {
          if (!it->second.formulas.count(f)) err << "mismatch " << id << ": unexpected " << f << '\n';
        }
        ok = false;
      }
      if (!ok) mismatched.push_back(id);
    }
  }
  if (cfg.format == "json") out << all.dump(2) << '\n';
  if (expectations) {
    for (const auto& [id, _] : *expectations) {
      bool present = std::any_of(corpus.begin(), corpus.end(), [&](const CorpusLine& l) { return l.id == id; });
      if (!present) {
        err << "mismatch " << id << ": not in corpus\n";
        mismatched.push_back(id);
      }
    }
    if (!mismatched.empty()) {
      err << "corpus mismatch:";
      for (const auto& id : mismatched) err << ' ' << id;
      err << '\n';
      return kMismatch;
    }
    err << "all " << corpus.size() << " sentences match expectations\n";
    return kOk;
  }
  return failed ? kTranslationFailure : kOk;
}

// Parses argv and dispatches. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ambistl: ambiguity-preserving translation of navigation commands into STL"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("--lexicon", cfg.lexicon_path, "Lexicon file (default: $AMBISTL_LEXICON or the bundled lexicon)");
  app.add_option("--n-best", cfg.n_best, "Number of derivations retained")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("-v", cfg.verbosity, "Verbose output (repeatable)");

  std::string sentence, corpus_path, trajectory_path, regions_path;
  std::optional<std::string> expect_path;

  auto* translate_cmd = app.add_subcommand("translate", "Print the ranked STL candidates of a sentence");
  translate_cmd->add_option("sentence", sentence, "Sentence to translate")->required();
  translate_cmd->fallthrough();

  auto* corpus_cmd = app.add_subcommand("corpus", "Translate a corpus file (id<TAB>sentence per line)");
  corpus_cmd->add_option("corpus", corpus_path, "Corpus file")->required();
  corpus_cmd->add_option("--expect", expect_path, "Expectations file (id<TAB>count<TAB>f1;f2;...)");
  corpus_cmd->fallthrough();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate every candidate's robustness on a trajectory");
  eval_cmd->add_option("sentence", sentence, "Sentence to translate")->required();
  eval_cmd->add_option("--trajectory", trajectory_path, "Trajectory CSV (t,x,y)")->required();
  eval_cmd->add_option("--regions", regions_path, "Regions file (name: xmin ymin xmax ymax)")->required();
  eval_cmd->fallthrough();

  auto* explain_cmd = app.add_subcommand("explain", "Dump derivations grouped by candidate");
  explain_cmd->add_option("sentence", sentence, "Sentence to analyze")->required();
  explain_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (translate_cmd->parsed() || eval_cmd->parsed() || explain_cmd->parsed()) {
      if (ambistl::detail::trim(sentence).empty()) {
        err << "usage error: empty sentence\n" << app.help();
        return kUsage;
      }
    }
    if (translate_cmd->parsed()) return cmd_translate(sentence, cfg, out, err);
    if (corpus_cmd->parsed()) return cmd_corpus(corpus_path, expect_path, cfg, out, err);
    if (eval_cmd->parsed()) return cmd_eval(sentence, trajectory_path, regions_path, cfg, out, err);
    if (explain_cmd->parsed()) return cmd_explain(sentence, cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return detail::exit_code_for(e);
  }
  return kUsage;
}

}  // namespace ambistl::cli
