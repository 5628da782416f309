#include "fieldevo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "CLI11.hpp"
#include "fieldevo/csv.hpp"
#include "fieldevo/corpus.hpp"
#include "fieldevo/errors.hpp"
#include "fieldevo/evolution.hpp"
#include "fieldevo/keyword_distribution.hpp"
#include "fieldevo/report.hpp"

namespace fieldevo {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> inputs;
  std::string format = "tsv";
  std::string fields;
  std::string years;
  std::string periods;
  std::string language;
  std::string out_dir = ".";
  bool strict = false;
  bool dump_distributions = false;
  std::string scatter = "clark,czekanowski,jensen_shannon,lorentzian,prob_symmetric_chi2";
};

const std::vector<YearRange> kDefaultPeriods = {
    {1991, 2000}, {2001, 2010}, {2011, 2019}, {1991, 2019}};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
  return value;
}

YearRange parse_range(const std::string& text, const std::string& what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(what + " must be A:B, got '" + text + "'");
  const YearRange r{parse_int(text.substr(0, colon), what),
                    parse_int(text.substr(colon + 1), what)};
  if (r.empty()) throw UsageError("empty " + what + " '" + text + "'");
  return r;
}

struct Corpus {
  std::vector<std::string> fields;
  YearRange years;
  std::vector<YearRange> periods;
  Partition partition;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  // Usage-level validation that does not need the data.
  void validate() const {
    if (opt_.format != "tsv" && opt_.format != "jsonl") {
      throw UsageError("--format must be tsv or jsonl");
    }
    if (!opt_.years.empty()) parse_range(opt_.years, "year range");
    for (const auto& p : split_list(opt_.periods)) parse_range(p, "period");
    for (const auto& m : split_list(opt_.scatter)) {
      if (!measure_from_name(m)) throw UsageError("unknown measure '" + m + "'");
    }
  }

  Corpus load() const {
    const auto format = opt_.format == "jsonl" ? InputFormat::kJsonl : InputFormat::kTsv;
    std::vector<BibRecord> records;
    for (const auto& path : opt_.inputs) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw DataError("cannot open input '" + path + "'");
      ParseResult parsed;
      try {
        parsed = parse_records(in, format, opt_.strict);
      } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
      }
      for (const auto& issue : parsed.issues) {
        err_ << path << ':' << issue.line << ": " << issue.message << '\n';
      }
      if (!parsed.issues.empty()) {
        err_ << path << ": skipped " << parsed.issues.size() << " malformed record(s)\n";
      }
      std::move(parsed.records.begin(), parsed.records.end(), std::back_inserter(records));
    }

    Corpus c;
    const std::optional<std::string> language =
        opt_.language.empty() ? std::nullopt : std::optional(opt_.language);
    c.fields = split_list(opt_.fields);
    if (c.fields.empty()) {
      std::unordered_set<std::string> seen;
      for (const auto& r : records) {
        if (seen.insert(r.field).second) c.fields.push_back(r.field);
      }
    }
    if (c.fields.empty()) throw DataError("no records to analyze");

    if (!opt_.years.empty()) {
      c.years = parse_range(opt_.years, "year range");
    } else {
      const std::unordered_set<std::string> wanted(c.fields.begin(), c.fields.end());
      bool any = false;
      for (const auto& r : records) {
        if (!wanted.contains(r.field) || (language && r.language != language)) continue;
        c.years.first = any ? std::min(c.years.first, r.year) : r.year;
        c.years.last = any ? std::max(c.years.last, r.year) : r.year;
        any = true;
      }
      if (!any) throw DataError("no records match the selected fields");
    }

    for (const auto& p : split_list(opt_.periods)) {
      const auto r = parse_range(p, "period");
      if (r.first < c.years.first || r.last > c.years.last) {
        throw UsageError("period " + p + " lies outside the analyzed years");
      }
      c.periods.push_back(r);
    }
    if (c.periods.empty()) {
      const bool default_windows_fit =
          std::all_of(kDefaultPeriods.begin(), kDefaultPeriods.end(), [&](const YearRange& r) {
            return r.first >= c.years.first && r.last <= c.years.last;
          });
      c.periods = default_windows_fit ? kDefaultPeriods : std::vector<YearRange>{c.years};
    }

    c.partition = partition(records, c.fields, c.years, language);
    if (c.partition.filtered > 0) {
      err_ << c.partition.filtered << " record(s) outside the field/year/language filter\n";
    }
    return c;
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& emit) const {
    fs::create_directories(opt_.out_dir);
    const auto path = fs::path(opt_.out_dir) / name;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw DataError("cannot write '" + path.string() + "'");
    emit(file);
    file.flush();
    if (!file) throw DataError("failed writing '" + path.string() + "'");
    out_ << "wrote " << path.string() << '\n';
  }

  void ingest(const Corpus& c) const {
    write("buckets.csv", [&](std::ostream& os) {
      os << "field,year,articles,keywords\n";
      for (const auto& [key, bucket] : c.partition.buckets) {
        std::size_t kws = 0;
        for (const auto& r : bucket.records) kws += r.keywords.size();
        os << csv::escape(key.first) << ',' << key.second << ',' << bucket.records.size() << ','
           << kws << '\n';
      }
    });
    if (!opt_.dump_distributions) return;
    for (const auto& [key, bucket] : c.partition.buckets) {
      try {
        const auto dist = build_distribution(bucket);
        write("distribution_" + key.first + "_" + std::to_string(key.second) + ".csv",
              [&](std::ostream& os) { write_distribution_csv(os, dist); });
      } catch (const EmptyVocabulary&) {
        err_ << key.first << '/' << key.second << ": no keywords, distribution skipped\n";
      }
    }
  }

  void stats(const Corpus& c) const {
    const auto s = descriptive_stats(c.partition, c.fields, c.years, c.periods);
    write("corpus_stats.csv", [&](std::ostream& os) { write_corpus_stats_csv(os, s); });
  }

  void write_matrix(const DissimilarityMatrix& m) const {
    write("dissimilarity.csv", [&](std::ostream& os) { write_dissimilarity_csv(os, m); });
  }

  void dissim(const Corpus& c, const DissimilarityMatrix& m) const {
    write_matrix(m);
    std::vector<MeasureSummary> summaries;
    std::vector<CorrelationReport> correlations;
    for (const auto& f : c.fields) {
      summaries.push_back(measure_summary(m, f));
      if (m.for_field(f).size() >= 3) {
        correlations.push_back(correlation_report(m, f));
      } else {
        err_ << f << ": fewer than three year pairs, correlation skipped\n";
      }
    }
    write("measure_summary.csv", [&](std::ostream& os) { write_measure_summary_csv(os, summaries); });
    write("correlation.csv", [&](std::ostream& os) { write_correlation_csv(os, correlations); });
    const auto names = split_list(opt_.scatter);
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        const auto x = *measure_from_name(names[i]);
        const auto y = *measure_from_name(names[j]);
        write("scatter_" + names[i] + "_" + names[j] + ".csv",
              [&](std::ostream& os) { write_scatter_csv(os, m, x, y); });
      }
    }
  }

  EvolutionResult pca(const Corpus& c, const DissimilarityMatrix& m) const {
    auto result = run_evolution(m, c.fields);
    write("pca_loadings.csv", [&](std::ostream& os) { write_loadings_csv(os, result.model); });
    write("pca_scree.csv", [&](std::ostream& os) { write_scree_csv(os, result.model); });
    out_ << "PC1 explains " << csv::number(result.model.explained_fraction(0) * 100.0)
         << "% of variance\n";
    return result;
  }

  void evolve(const Corpus& c, const EvolutionResult& r) const {
    write("evolution.csv", [&](std::ostream& os) { write_evolution_csv(os, r.series); });
    std::vector<SpeedReport> speeds;
    for (const auto& s : r.series) {
      for (const auto& p : c.periods) {
        if (p.first < p.last) speeds.push_back(speed_report(s, p.first, p.last));
      }
    }
    write("speed.csv", [&](std::ostream& os) { write_speed_csv(os, speeds); });
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

void add_common(CLI::App& cmd, Options& opt) {
  cmd.add_option("--input", opt.inputs, "Record file (repeatable)")->required();
  cmd.add_option("--format", opt.format, "Input format: tsv or jsonl");
  cmd.add_option("--fields", opt.fields, "Comma-separated field codes (default: all)");
  cmd.add_option("--years", opt.years, "Inclusive year range A:B (default: data span)");
  cmd.add_option("--periods", opt.periods, "Report windows A:B[,A:B...]");
  cmd.add_option("--language", opt.language, "Keep only records with this language tag");
  cmd.add_option("--out", opt.out_dir, "Output directory");
  cmd.add_flag("--strict", opt.strict, "Treat malformed records as fatal");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Keyword-based evolution analysis of publication corpora", "fieldevo"};
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest", "Parse and bucket records");
  auto* stats = app.add_subcommand("stats", "Corpus statistics (corpus_stats.csv)");
  auto* dissim = app.add_subcommand("dissim", "Successive-year dissimilarity measures");
  auto* pca = app.add_subcommand("pca", "PCA of the pooled dissimilarity matrix");
  auto* evolve = app.add_subcommand("evolve", "Evolution series and speeds");
  auto* report = app.add_subcommand("report", "Full pipeline, every CSV");
  for (auto* cmd : {ingest, stats, dissim, pca, evolve, report}) add_common(*cmd, opt);
  ingest->add_flag("--dump-distributions", opt.dump_distributions,
                   "Write distribution_<field>_<year>.csv per bucket");
  for (auto* cmd : {dissim, report}) {
    cmd->add_option("--scatter", opt.scatter, "Measures paired in scatter_<a>_<b>.csv files");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  Session session(opt, out, err);
  try {
    session.validate();
    const Corpus corpus = session.load();
    if (ingest->parsed()) {
      session.ingest(corpus);
    } else if (stats->parsed()) {
      session.stats(corpus);
    } else {
      const auto matrix = build_dissimilarity_matrix(corpus.partition, corpus.fields, corpus.years);
      const bool full = report->parsed();
      if (full) session.stats(corpus);
      if (full || dissim->parsed()) {
        session.dissim(corpus, matrix);
      } else {
        session.write_matrix(matrix);
      }
      if (!dissim->parsed()) {
        const auto result = session.pca(corpus, matrix);
        if (full || evolve->parsed()) session.evolve(corpus, result);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace fieldevo
