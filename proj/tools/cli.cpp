#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "boilerplate/analysis.hpp"
#include "boilerplate/corpus.hpp"
#include "boilerplate/errors.hpp"
#include "boilerplate/evaluation.hpp"
#include "boilerplate/external_sort.hpp"
#include "boilerplate/format.hpp"
#include "boilerplate/frequency_store.hpp"
#include "boilerplate/pipeline.hpp"
#include "boilerplate/report_io.hpp"
#include "boilerplate/synthetic.hpp"

namespace fs = std::filesystem;

namespace boilerplate {

namespace {

constexpr std::string_view kExternal = "external";

// Writes to a file, or to the fallback stream when the path is empty or "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    stream_->flush();
    if (file_.is_open()) file_.close();
    if (!*stream_) throw IoError("failed writing " + (path_.empty() ? "output" : path_));
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

// Temporary spool for the external backend when the caller gave no path.
class TempFile {
 public:
  TempFile() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("boilerplate-spool-" + std::to_string(rd()) + ".txt");
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct StoreOptions {
  std::string backend = "exact";
  StoreConfig config;
  std::size_t sort_memory = std::size_t{512} << 20;
  std::string temp_dir;

  void add_to(CLI::App& app) {
    app.add_option("--backend", backend, "exact, crc64, kbit, gm or external")
        ->capture_default_str();
    app.add_option("--K", config.threshold, "frequent iff count >= K")->capture_default_str();
    app.add_option("--k-bits", config.kbit.hash_bits, "kbit: log2 of the counter count")
        ->capture_default_str();
    app.add_option("--counter-width", config.kbit.counter_width, "kbit: bits per counter (1..8)")
        ->capture_default_str();
    app.add_flag("--morris", config.kbit.morris, "kbit: Morris counting");
    app.add_option("--morris-seed", config.kbit.seed, "kbit: Morris seed")->capture_default_str();
    app.add_option("--gm-counters", config.gm.counters, "gm: counter budget c")
        ->capture_default_str();
    app.add_option("--gm-threshold", config.gm.report_threshold, "gm: residual counter threshold")
        ->capture_default_str();
    app.add_flag("--gm-keys", config.gm.store_keys, "gm: monitor CRC-64 keys instead of texts");
    app.add_option("--sort-memory", sort_memory, "external: bytes per sorted run")
        ->capture_default_str();
    app.add_option("--temp-dir", temp_dir, "external: scratch directory");
  }

  bool external() const { return backend == kExternal; }

  StoreConfig resolved() const {
    StoreConfig out = config;
    if (external()) {
      out.backend = Backend::frequent_set;
      return out;
    }
    const auto parsed = parse_backend(backend);
    if (!parsed || *parsed == Backend::frequent_set) {
      throw ConfigError("unknown backend '" + backend + "'");
    }
    out.backend = *parsed;
    make_store(out);  // parameter validation
    return out;
  }
};

void add_detector_options(CLI::App& app, DetectorConfig& config, bool& no_heuristics) {
  app.add_option("--gap-max", config.gap_max, "infrequent lines that end a region")
      ->capture_default_str();
  app.add_option("--p-max", config.p_max, "non-trivial lines scanned at the start")
      ->capture_default_str();
  app.add_option("--e-max", config.e_max, "non-trivial lines scanned at the end")
      ->capture_default_str();
  app.add_option("--min-line-length", config.min_line_length, "shorter lines are trivial")
      ->capture_default_str();
  app.add_flag("--no-heuristics", no_heuristics, "disable the marker-line overrides");
}

struct Pass1 {
  std::unique_ptr<FrequencyStore> store;
  std::vector<FrequentLine> frequent;  // external backend only
};

Pass1 run_pass1(const CorpusManifest& manifest, const StoreOptions& options,
                const DetectorConfig& detector, std::size_t workers, const std::string& spool) {
  const StoreConfig config = options.resolved();
  detector.validate();
  Pass1 out;
  if (!options.external() && spool.empty()) {
    out.store = build_index(manifest, config, detector, workers);
    return out;
  }
  std::optional<TempFile> temp;
  fs::path spool_path = spool;
  if (spool_path.empty()) spool_path = temp.emplace().path();
  {
    Output sink(spool_path.string(), std::cout);
    write_spool(manifest, detector.p_max, detector.e_max, detector.min_line_length, sink.stream());
    sink.close();
  }
  if (!options.external()) {
    out.store = build_index_from_spool(spool_path, config);
    return out;
  }
  ExternalSortOptions sort;
  sort.threshold = config.threshold;
  sort.memory_budget = options.sort_memory;
  sort.temp_dir = options.temp_dir;
  out.frequent = external_sort_count(spool_path, sort);
  out.store = std::make_unique<FrequentSetStore>(config.threshold, out.frequent);
  return out;
}

bool approximate_merge(const StoreConfig& config, std::size_t workers, std::size_t files) {
  if (std::min(workers, files) <= 1) return false;
  return config.backend == Backend::gm || (config.backend == Backend::kbit && config.kbit.morris);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string seconds(double value) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(3) << value;
  return os.str();
}

// ---------------------------------------------------------------------------

struct GenerateCommand {
  std::string out_dir;
  SyntheticSpec spec;

  void add_to(CLI::App& app) {
    app.add_option("--out", out_dir, "output directory")->required();
    app.add_option("--files", spec.files, "number of files")->capture_default_str();
    app.add_option("--seed", spec.seed, "generator seed")->capture_default_str();
    app.add_option("--mutation", spec.mutation_rate, "per-line template mutation rate")
        ->capture_default_str();
    app.add_option("--epilogue-prob", spec.epilogue_probability, "chance a file has an epilogue")
        ->capture_default_str();
    app.add_option("--body-min", spec.body_min_lines, "minimum body lines")->capture_default_str();
    app.add_option("--body-max", spec.body_max_lines, "maximum body lines")->capture_default_str();
  }

  int run(std::ostream&, std::ostream& err) const {
    spec.validate();
    const auto corpus = generate_synthetic(spec);
    write_synthetic(corpus, out_dir);
    err << "generated " << corpus.files.size() << " files and gold.tsv in " << out_dir << '\n';
    return 0;
  }
};

struct IndexCommand {
  std::string corpus;
  StoreOptions store;
  DetectorConfig detector;
  bool no_heuristics = false;  // accepted for config sharing with strip
  std::size_t workers = 1;
  std::string out;
  std::string frequent_out;
  std::string spool;

  void add_to(CLI::App& app) {
    app.add_option("--corpus", corpus, "corpus root directory")->required();
    store.add_to(app);
    add_detector_options(app, detector, no_heuristics);
    app.add_option("--workers", workers, "pass-1 worker threads")->capture_default_str();
    app.add_option("--out", out, "index file");
    app.add_option("--frequent-out", frequent_out, "frequent-line list (exact or external)");
    app.add_option("--spool", spool, "write window lines here and count from this file");
  }

  int run(std::ostream& o, std::ostream& err) const {
    if (out.empty() && frequent_out.empty()) throw ConfigError("index needs --out or --frequent-out");
    const auto manifest = ingest(corpus);
    const auto start = std::chrono::steady_clock::now();
    const auto pass1 = run_pass1(manifest, store, detector, workers, spool);
    err << "pass1_seconds=" << seconds(seconds_since(start)) << " files=" << manifest.entries.size()
        << " skipped=" << manifest.skipped << '\n';
    if (!frequent_out.empty()) {
      std::vector<FrequentLine> lines = pass1.frequent;
      if (const auto* exact = dynamic_cast<const ExactStore*>(pass1.store.get())) {
        lines = exact->frequent_lines();
      } else if (!store.external()) {
        throw ConfigError("--frequent-out needs the exact or external backend");
      }
      Output sink(frequent_out, o);
      write_frequent_lines(sink.stream(), lines);
      sink.close();
    }
    if (!out.empty()) {
      Output sink(out, o);
      pass1.store->save(sink.stream());
      sink.close();
    }
    return 0;
  }
};

struct StripCommand {
  std::string corpus;
  StoreOptions store;
  DetectorConfig detector;
  bool no_heuristics = false;
  std::size_t workers = 1;
  std::string report;
  std::string bodies;
  std::string save_index;
  std::string load_index;
  std::string spool;

  void add_to(CLI::App& app) {
    app.add_option("--corpus", corpus, "corpus root directory")->required();
    store.add_to(app);
    add_detector_options(app, detector, no_heuristics);
    app.add_option("--workers", workers, "worker threads for both passes")->capture_default_str();
    app.add_option("--report", report, "boundary report TSV (default: standard output)");
    app.add_option("--write-bodies", bodies, "write stripped copies under this directory");
    app.add_option("--save-index", save_index, "save the pass-1 index");
    app.add_option("--load-index", load_index, "reuse a saved index instead of pass 1");
    app.add_option("--spool", spool, "write window lines here and count from this file");
  }

  int run(std::ostream& o, std::ostream& err) {
    detector.heuristics = !no_heuristics;
    detector.validate();
    const auto manifest = ingest(corpus);

    const auto start = std::chrono::steady_clock::now();
    std::unique_ptr<FrequencyStore> index;
    std::string label;
    bool approximate = false;
    if (!load_index.empty()) {
      auto in = open_input(load_index);
      index = load_store(in);
      label = std::string(to_string(index->backend()));
    } else {
      const StoreConfig config = store.resolved();
      index = run_pass1(manifest, store, detector, workers, spool).store;
      label = store.external() ? std::string(kExternal) : std::string(to_string(config.backend));
      approximate = approximate_merge(config, workers, manifest.entries.size());
    }
    const double pass1 = seconds_since(start);
    if (!save_index.empty()) {
      Output sink(save_index, o);
      index->save(sink.stream());
      sink.close();
    }

    const auto detect_start = std::chrono::steady_clock::now();
    const auto reports = detect_corpus(manifest, *index, detector, workers);
    const double pass2 = seconds_since(detect_start);

    Output sink(report, o);
    auto& s = sink.stream();
    s << "# boilerplate strip\n";
    s << "# backend=" << label << ' ' << index->describe() << " gap_max=" << detector.gap_max
      << " p_max=" << detector.p_max << " e_max=" << detector.e_max
      << " min_line_length=" << detector.min_line_length
      << " heuristics=" << (detector.heuristics ? 1 : 0) << " files=" << manifest.entries.size();
    if (approximate) s << " approximate=1";
    s << '\n';
    write_reports(s, reports);
    sink.close();

    if (!bodies.empty()) write_bodies(manifest, reports);
    err << "pass1_seconds=" << seconds(pass1) << " pass2_seconds=" << seconds(pass2)
        << " files=" << manifest.entries.size() << " skipped=" << manifest.skipped << '\n';
    return 0;
  }

  void write_bodies(const CorpusManifest& manifest, const std::vector<BoundaryReport>& reports) const {
    parallel_for(manifest.entries.size(), workers, [&](std::size_t i) {
      const auto lines = read_lines(manifest.absolute(manifest.entries[i]));
      const fs::path target = fs::path(bodies) / manifest.entries[i].path;
      std::error_code ec;
      fs::create_directories(target.parent_path(), ec);
      if (ec) throw IoError("cannot create " + target.parent_path().string() + ": " + ec.message());
      std::ofstream out(target, std::ios::binary);
      for (const auto& line : strip(lines, reports[i])) out << line.text << '\n';
      if (!out) throw IoError("failed writing " + target.string());
    });
  }
};

struct EvaluateCommand {
  std::string reports;
  std::string gold;
  std::vector<long long> tolerances{0, 5, 10};
  std::string out;
  std::string summary;
  std::string curves;

  void add_to(CLI::App& app) {
    app.add_option("--reports", reports, "detected boundaries TSV")->required();
    app.add_option("--gold", gold, "gold boundaries TSV")->required();
    app.add_option("--tolerance", tolerances, "tolerances for the summary, e.g. 0,5,10")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--out", out, "per-file error CSV (default: standard output)");
    app.add_option("--summary", summary, "summary CSV");
    app.add_option("--curves", curves, "sorted error curves CSV");
  }

  int run(std::ostream& o, std::ostream&) const {
    auto reports_in = open_input(reports);
    auto gold_in = open_input(gold);
    const auto detected = read_reports(reports_in);
    const auto truth = read_reports(gold_in);
    const auto evaluation = evaluate(detected, truth);
    {
      Output sink(out, o);
      write_evaluation_csv(sink.stream(), evaluation);
      sink.close();
    }
    if (!summary.empty()) {
      Output sink(summary, o);
      write_summary_csv(sink.stream(), evaluation, tolerances);
      sink.close();
    }
    if (!curves.empty()) {
      Output sink(curves, o);
      write_curves_csv(sink.stream(), evaluation);
      sink.close();
    }
    return 0;
  }
};

// ---------------------------------------------------------------------------

struct Prop1Command {
  std::vector<double> p{0.25};
  std::vector<std::size_t> n{10};
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  void add_to(CLI::App& app) {
    app.add_option("--p", p, "head probabilities")->delimiter(',')->capture_default_str();
    app.add_option("--n", n, "run lengths")->delimiter(',')->capture_default_str();
    app.add_option("--trials", trials, "Monte-Carlo trials (0: closed form only)")
        ->capture_default_str();
    app.add_option("--seed", seed, "simulation seed")->capture_default_str();
  }

  int run(std::ostream& o, std::ostream&) const {
    std::ostringstream s;
    s << "p,n,expected_run_time" << (trials ? ",simulated_run_time" : "") << '\n';
    for (double pv : p) {
      for (std::size_t nv : n) {
        const analysis::RunModel model{pv, nv};
        s << format_number(pv) << ',' << nv << ',' << format_number(analysis::expected_run_time(model));
        if (trials) s << ',' << format_number(analysis::simulate_run_time(model, trials, seed));
        s << '\n';
      }
    }
    o << s.str();
    return 0;
  }
};

struct OvershootCommand {
  std::vector<double> p{0.0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<std::size_t> gap_max{10};

  void add_to(CLI::App& app) {
    app.add_option("--p", p, "false-positive probabilities")->delimiter(',')->capture_default_str();
    app.add_option("--gap-max", gap_max, "gap lengths")->delimiter(',')->capture_default_str();
  }

  int run(std::ostream& o, std::ostream&) const {
    std::ostringstream s;
    s << "p_fp,gap_max,expected_overshoot\n";
    for (double pv : p) {
      for (std::size_t g : gap_max) {
        s << format_number(pv) << ',' << g << ',' << format_number(analysis::expected_overshoot(pv, g))
          << '\n';
      }
    }
    o << s.str();
    return 0;
  }
};

struct FpBoundsCommand {
  std::uint64_t n = 3400001;
  std::vector<std::uint64_t> c{std::uint64_t{1} << 23};
  std::vector<std::uint64_t> k{kDefaultThreshold};
  double p = 0.001;
  bool no_empirical = false;
  std::uint64_t seed = 0;

  void add_to(CLI::App& app) {
    app.add_option("--n", n, "distinct lines")->capture_default_str();
    app.add_option("--c", c, "counter counts")->delimiter(',')->capture_default_str();
    app.add_option("--K", k, "thresholds")->delimiter(',')->capture_default_str();
    app.add_option("--p", p, "skew probability for the skewed bound")->capture_default_str();
    app.add_flag("--no-empirical", no_empirical, "skip the collision simulation");
    app.add_option("--seed", seed, "simulation seed")->capture_default_str();
  }

  int run(std::ostream& o, std::ostream&) const {
    std::vector<std::uint64_t> counts;
    if (!no_empirical) counts = analysis::synthetic_line_counts(n, seed);
    std::ostringstream s;
    s << "c,K,empirical_fp_rate,crude_bound,skewed_bound\n";
    for (std::uint64_t cv : c) {
      for (std::uint64_t kv : k) {
        const analysis::FpBoundInput in{n, cv, p, kv};
        s << cv << ',' << kv << ',';
        if (!no_empirical) s << format_number(analysis::empirical_fp_rate(counts, cv, kv, seed));
        s << ',' << format_number(analysis::fp_bound_crude(in)) << ','
          << format_number(analysis::fp_bound_skewed(in)) << '\n';
      }
    }
    o << s.str();
    return 0;
  }
};

struct HistogramCommand {
  std::string corpus;
  std::string spool;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  std::string weighting = "occurrence";
  DetectorConfig detector;
  bool no_heuristics = false;
  std::size_t workers = 1;

  void add_to(CLI::App& app) {
    app.add_option("--corpus", corpus, "count window lines of this corpus");
    app.add_option("--spool", spool, "count the lines of this spool file");
    app.add_option("--n", n, "synthetic distinct lines (without --corpus/--spool)")
        ->capture_default_str();
    app.add_option("--seed", seed, "synthetic seed")->capture_default_str();
    app.add_option("--weighting", weighting, "occurrence or distinct")->capture_default_str();
    add_detector_options(app, detector, no_heuristics);
    app.add_option("--workers", workers, "pass-1 worker threads")->capture_default_str();
  }

  int run(std::ostream& o, std::ostream&) const {
    analysis::TailWeighting w;
    if (weighting == "occurrence") {
      w = analysis::TailWeighting::by_occurrence;
    } else if (weighting == "distinct") {
      w = analysis::TailWeighting::by_distinct;
    } else {
      throw ConfigError("unknown weighting '" + weighting + "'");
    }
    if (!corpus.empty() && !spool.empty()) throw ConfigError("give --corpus or --spool, not both");

    analysis::OccurrenceHistogram h;
    if (corpus.empty() && spool.empty()) {
      h = analysis::occurrence_histogram(analysis::synthetic_line_counts(n, seed), w);
    } else {
      StoreConfig exact;
      exact.backend = Backend::exact;
      const auto store = corpus.empty() ? build_index_from_spool(spool, exact)
                                        : build_index(ingest(corpus), exact, detector, workers);
      h = analysis::occurrence_histogram(dynamic_cast<const ExactStore&>(*store), w);
    }
    std::ostringstream s;
    s << "occurrences,distinct_lines,tail_probability\n";
    auto tail = h.tail.begin();
    for (const auto& [count, distinct] : h.distinct_by_count) {
      while (tail != h.tail.end() && tail->first < count) ++tail;
      s << count << ',' << distinct << ',' << format_number(tail->second) << '\n';
    }
    o << s.str();
    return 0;
  }
};

struct ZipfCommand {
  std::vector<double> x{0, 0.5, 1, 1.5, 2, 2.5, 3, 3.5, 4};
  analysis::ZipfExperiment base;
  std::size_t workers = 1;

  void add_to(CLI::App& app) {
    app.add_option("--x", x, "Zipf exponents")->delimiter(',')->capture_default_str();
    app.add_option("--n-items", base.n_items, "stream length")->capture_default_str();
    app.add_option("--n-distinct", base.n_distinct, "distinct items")->capture_default_str();
    app.add_option("--c", base.counters, "GM counters")->capture_default_str();
    app.add_option("--trials", base.trials, "trials per exponent")->capture_default_str();
    app.add_option("--seed", base.seed, "seed of the first trial")->capture_default_str();
    app.add_option("--workers", workers, "exponents evaluated in parallel")->capture_default_str();
  }

  int run(std::ostream& o, std::ostream&) const {
    std::vector<double> efficiency(x.size());
    for (double xv : x) {
      analysis::ZipfExperiment e = base;
      e.exponent = xv;
      e.validate();
    }
    parallel_for(x.size(), workers, [&](std::size_t i) {
      analysis::ZipfExperiment e = base;
      e.exponent = x[i];
      efficiency[i] = analysis::zipf_gm_efficiency(e);
    });
    std::ostringstream s;
    s << "x,mean_efficiency\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
      s << format_number(x[i]) << ',' << format_number(efficiency[i]) << '\n';
    }
    o << s.str();
    return 0;
  }
};

// Config keys outside any [section] belong to the subcommand being run.
class ScopedConfig : public CLI::ConfigTOML {
 public:
  explicit ScopedConfig(const CLI::App* app) : app_(app) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigTOML::from_config(input);
    std::vector<std::string> scope;
    for (const CLI::App* a = app_;;) {
      const auto active = a->get_subcommands();
      if (active.empty()) break;
      a = active.front();
      scope.push_back(a->get_name());
    }
    for (auto& item : items) {
      if (item.parents.empty()) item.parents = scope;
    }
    return items;
  }

 private:
  const CLI::App* app_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boilerplate detection for plain-text e-book corpora", "boilerplate"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML-style key = value file; flags win");
  app.config_formatter(std::make_shared<ScopedConfig>(&app));
  app.allow_config_extras(CLI::config_extras_mode::error);

  GenerateCommand generate;
  IndexCommand index;
  StripCommand strip_cmd;
  EvaluateCommand evaluate_cmd;
  Prop1Command prop1;
  OvershootCommand overshoot;
  FpBoundsCommand fp_bounds;
  HistogramCommand histogram;
  ZipfCommand zipf;

  auto* generate_app = app.add_subcommand("generate", "write a synthetic corpus with gold.tsv");
  generate.add_to(*generate_app);
  auto* index_app = app.add_subcommand("index", "pass 1 only: build and save a frequency index");
  index.add_to(*index_app);
  auto* strip_app = app.add_subcommand("strip", "detect boilerplate boundaries");
  strip_cmd.add_to(*strip_app);
  auto* evaluate_app = app.add_subcommand("evaluate", "score reports against gold boundaries");
  evaluate_cmd.add_to(*evaluate_app);
  auto* analyze_app = app.add_subcommand("analyze", "CSV tables of the analytical models");
  analyze_app->require_subcommand(1);
  auto* prop1_app = analyze_app->add_subcommand("prop1", "expected flips until n heads in a row");
  prop1.add_to(*prop1_app);
  auto* overshoot_app = analyze_app->add_subcommand("overshoot", "expected preamble overshoot");
  overshoot.add_to(*overshoot_app);
  auto* fp_app = analyze_app->add_subcommand("fp-bounds", "counter-array false-positive bounds");
  fp_bounds.add_to(*fp_app);
  auto* histogram_app = analyze_app->add_subcommand("histogram", "line occurrence histogram");
  histogram.add_to(*histogram_app);
  auto* zipf_app = analyze_app->add_subcommand("zipf-gm", "GM efficiency on Zipf streams");
  zipf.add_to(*zipf_app);
  for (auto* sub : {generate_app, index_app, strip_app, evaluate_app, analyze_app, prop1_app,
                    overshoot_app, fp_app, histogram_app, zipf_app}) {
    sub->fallthrough();  // lets --config follow the subcommand
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate_app) return generate.run(out, err);
    if (*index_app) return index.run(out, err);
    if (*strip_app) return strip_cmd.run(out, err);
    if (*evaluate_app) return evaluate_cmd.run(out, err);
    if (*prop1_app) return prop1.run(out, err);
    if (*overshoot_app) return overshoot.run(out, err);
    if (*fp_app) return fp_bounds.run(out, err);
    if (*histogram_app) return histogram.run(out, err);
    if (*zipf_app) return zipf.run(out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace boilerplate
