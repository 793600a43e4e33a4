#include "drchi/cli.hpp"

#include "drchi/matrix_io.hpp"
#include "drchi/recursion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drchi::cli {

namespace {

struct Options {
  std::string method = "closed";
  bool check = false;
  bool leading_term = false;
  bool json = false;
  bool stats = false;
  bool no_cache = false;
  bool normalize_keys = false;
  bool inject_fault = false;
  int threads = 1;
  std::string batch;
  std::string matrix;
};

struct Record {
  std::string text;   // formatted output, newline-terminated
  std::string stats;  // diagnostic line, newline-terminated, may be empty
  std::string error;
  bool input_error = false;
  bool disagreement = false;
};

MethodSelection selection_for(const Options& opts) {
  MethodSelection sel{.closed = false, .recursion = false, .rank_one = false,
                      .leading_term = opts.leading_term};
  if (opts.method == "closed") sel.closed = true;
  if (opts.method == "recursion") sel.recursion = true;
  if (opts.method == "rank1") sel.rank_one = true;
  if (opts.method == "both") sel.closed = sel.recursion = true;
  return sel;
}

void add_value(nlohmann::ordered_json& j, const std::string& name, const ExactRational& v) {
  j[name] = v.to_string();
  j[name + "_num"] = v.numerator().get_str();
  j[name + "_den"] = v.denominator().get_str();
}

std::vector<std::pair<std::string, ExactRational>> chi_values(const EvalReport& report) {
  std::vector<std::pair<std::string, ExactRational>> out;
  if (report.closed) out.emplace_back("closed", *report.closed);
  if (report.recursion) out.emplace_back("recursion", *report.recursion);
  if (report.rank_one) out.emplace_back("rank1", *report.rank_one);
  return out;
}

std::string stats_line(const EvalReport& report, std::optional<std::size_t> index) {
  std::ostringstream os;
  os << "stats:";
  if (index) os << " index=" << *index;
  if (report.closed) os << " closed_ms=" << report.closed_ms;
  if (report.recursion)
    os << " recursion_ms=" << report.recursion_ms << " cache_hits=" << report.cache_hits
       << " cache_misses=" << report.cache_misses;
  if (report.rank_one) os << " rank1_ms=" << report.rank_one_ms;
  os << '\n';
  return os.str();
}

Record format_report(const EvalReport& report, const Options& opts,
                     std::optional<std::size_t> index) {
  Record rec;
  rec.disagreement = !report.agree;
  const auto values = chi_values(report);

  if (opts.json) {
    nlohmann::ordered_json j;
    if (index) j["index"] = *index;
    j["input"] = report.input;
    j["rank"] = report.rank;
    j["markings"] = report.markings;
    for (const auto& [name, v] : values) add_value(j, name, v);
    if (report.leading) add_value(j, "leading_term", *report.leading);
    j["agree"] = report.agree;
    if (opts.stats) {
      if (report.closed) j["closed_ms"] = report.closed_ms;
      if (report.recursion) {
        j["recursion_ms"] = report.recursion_ms;
        j["cache_hits"] = report.cache_hits;
        j["cache_misses"] = report.cache_misses;
      }
      if (report.rank_one) j["rank1_ms"] = report.rank_one_ms;
    }
    rec.text = j.dump() + "\n";
  } else if (index) {
    std::ostringstream os;
    os << "[" << *index << "] " << report.input << " =>";
    for (const auto& [name, v] : values) os << ' ' << name << '=' << v;
    if (report.leading) os << " leading_term=" << *report.leading;
    if (values.size() > 1) os << " agree=" << (report.agree ? "true" : "false");
    os << '\n';
    rec.text = os.str();
  } else if (values.size() == 1 && !report.leading) {
    rec.text = values.front().second.to_string() + "\n";
  } else {
    std::ostringstream os;
    for (const auto& [name, v] : values) os << name << ": " << v << '\n';
    if (report.leading) os << "leading_term: " << *report.leading << '\n';
    if (values.size() > 1) os << "agree: " << (report.agree ? "true" : "false") << '\n';
    rec.text = os.str();
  }
  if (opts.stats) rec.stats = stats_line(report, index);
  return rec;
}

Record error_record(const std::string& message, const Options& opts,
                    std::optional<std::size_t> index) {
  Record rec;
  rec.input_error = true;
  rec.error = message;
  if (opts.json) {
    nlohmann::ordered_json j;
    if (index) j["index"] = *index;
    j["error"] = message;
    rec.text = j.dump() + "\n";
  } else if (index) {
    rec.text = "[" + std::to_string(*index) + "] error: " + message + "\n";
  }
  return rec;
}

// Evaluates one matrix text. `first_line` shifts parse-error line numbers for
// batch input.
Record evaluate_text(const std::string& text, std::size_t first_line, const Options& opts,
                     EvalCache* cache, std::optional<std::size_t> index) {
  try {
    const DRMatrix a = [&] {
      try {
        return parse_matrix(text);
      } catch (const ParseError& e) {
        throw ParseError(e.line() + first_line - 1, e.column(), e.detail());
      }
    }();
    const MethodSelection sel = selection_for(opts);
    if (sel.rank_one && a.rank() != 1)
      throw std::invalid_argument("method rank1 requires a single-row matrix, got " +
                                  std::to_string(a.rank()) + " rows");
    EvalReport report = evaluate(a, sel, opts.no_cache ? nullptr : cache);
    if (opts.inject_fault && report.recursion) {
      report.recursion = *report.recursion + ExactRational(1);
      if (report.closed && !(*report.closed == *report.recursion)) report.agree = false;
    }
    return format_report(report, opts, index);
  } catch (const std::invalid_argument& e) {
    return error_record(e.what(), opts, index);
  }
}

int run_batch(const Options& opts, std::ostream& out, std::ostream& err) {
  std::ifstream file(opts.batch);
  if (!file) {
    err << "error: cannot open batch file '" << opts.batch << "'\n";
    return kInputError;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  const auto paragraphs = split_paragraphs(buffer.str());

  bool any_error = false, any_disagreement = false;
  auto emit = [&](const Record& rec) {
    out << rec.text;
    out.flush();
    err << rec.stats;
    any_error |= rec.input_error;
    any_disagreement |= rec.disagreement;
  };

  const KeyMode mode = opts.normalize_keys ? KeyMode::kNormalized : KeyMode::kRaw;
  if (opts.threads <= 1) {
    EvalCache cache(mode);
    for (std::size_t i = 0; i < paragraphs.size(); ++i)
      emit(evaluate_text(paragraphs[i].text, paragraphs[i].first_line, opts, &cache, i + 1));
  } else {
    // One cache per worker; records are emitted in input order afterwards.
    std::vector<Record> records(paragraphs.size());
    std::vector<std::unique_ptr<EvalCache>> caches;
    for (int t = 0; t < opts.threads; ++t) caches.push_back(std::make_unique<EvalCache>(mode));
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(paragraphs.size()); ++i) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      const auto& p = paragraphs[static_cast<std::size_t>(i)];
      records[static_cast<std::size_t>(i)] =
          evaluate_text(p.text, p.first_line, opts, caches[static_cast<std::size_t>(tid)].get(),
                        static_cast<std::size_t>(i) + 1);
    }
    for (const auto& rec : records) emit(rec);
  }
  if (opts.check && any_disagreement) return kDisagreement;
  return any_error ? kInputError : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Orbifold Euler characteristics of genus-one double ramification loci"};
  app.name("drchi");
  app.add_option("matrix", opts.matrix,
                 "Matrix rows separated by ';' or newlines, entries by whitespace");
  app.add_option("--method", opts.method, "Evaluation method")
      ->check(CLI::IsMember({"closed", "recursion", "rank1", "both"}))
      ->capture_default_str();
  app.add_flag("--check", opts.check, "Exit with status 2 if the methods disagree");
  app.add_flag("--leading-term", opts.leading_term, "Also print the leading term");
  app.add_flag("--json", opts.json, "One JSON record per matrix");
  app.add_option("--batch", opts.batch, "File of blank-line separated matrices");
  app.add_flag("--stats", opts.stats, "Timings and cache counters on stderr");
  app.add_flag("--no-cache", opts.no_cache, "Disable memoization in the recursion");
  app.add_flag("--normalize-keys", opts.normalize_keys,
               "Memoize on column-sorted, row-reduced matrices");
  app.add_option("--threads", opts.threads, "Worker threads for --batch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--inject-fault", opts.inject_fault, "Perturb the recursion result (testing)")
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (!opts.batch.empty()) {
    if (!opts.matrix.empty()) {
      err << "error: give either a matrix or --batch, not both\n";
      return kInputError;
    }
    return run_batch(opts, out, err);
  }

  std::string text = opts.matrix;
  if (text.empty()) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  const KeyMode mode = opts.normalize_keys ? KeyMode::kNormalized : KeyMode::kRaw;
  EvalCache cache(mode);
  const Record rec = evaluate_text(text, 1, opts, &cache, std::nullopt);
  if (rec.input_error) {
    out << rec.text;
    err << "error: " << rec.error << '\n';
    return kInputError;
  }
  out << rec.text;
  err << rec.stats;
  if (opts.check && rec.disagreement) return kDisagreement;
  return kSuccess;
}

}  // namespace drchi::cli
