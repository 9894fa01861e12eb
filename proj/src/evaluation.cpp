#include "boilerplate/evaluation.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "boilerplate/errors.hpp"
#include "boilerplate/format.hpp"

namespace boilerplate {

namespace {

SideError compare(std::optional<std::size_t> gold, std::optional<std::size_t> detected,
                  bool gold_minus_detected) {
  if (gold && detected) {
    const auto g = static_cast<long long>(*gold);
    const auto d = static_cast<long long>(*detected);
    return {gold_minus_detected ? g - d : d - g, Mismatch::none};
  }
  if (!gold && !detected) return {0, Mismatch::none};
  return {std::nullopt, gold ? Mismatch::missing : Mismatch::spurious};
}

std::string optional_number(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string FileEvaluation::category() const {
  std::string out;
  auto add = [&out](std::string_view side, Mismatch m) {
    if (m == Mismatch::none) return;
    if (!out.empty()) out += ';';
    out += side;
    out += m == Mismatch::missing ? "_missing" : "_spurious";
  };
  add("preamble", preamble.mismatch);
  add("epilogue", epilogue.mismatch);
  return out.empty() ? "ok" : out;
}

double Evaluation::fraction_within(Side s, long long tolerance) const {
  if (files.empty()) return 1.0;
  const auto n = std::count_if(files.begin(), files.end(), [&](const FileEvaluation& f) {
    const auto& e = side(f, s);
    return e.error && (*e.error < 0 ? -*e.error : *e.error) <= tolerance;
  });
  return static_cast<double>(n) / static_cast<double>(files.size());
}

std::size_t Evaluation::mismatches(Side s) const {
  return static_cast<std::size_t>(std::count_if(files.begin(), files.end(), [&](const FileEvaluation& f) {
    return side(f, s).mismatch != Mismatch::none;
  }));
}

std::vector<long long> Evaluation::sorted_errors(Side s) const {
  std::vector<long long> out;
  for (const auto& f : files) {
    if (const auto& e = side(f, s); e.error) out.push_back(*e.error);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> Evaluation::sorted_magnitudes(Side s) const {
  std::vector<long long> out;
  for (const auto& f : files) {
    const auto& e = side(f, s);
    out.push_back(e.error ? (*e.error < 0 ? -*e.error : *e.error)
                          : std::numeric_limits<long long>::max());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Evaluation evaluate(std::span<const BoundaryReport> reports, std::span<const GoldAnnotation> gold) {
  std::unordered_map<std::string_view, const BoundaryReport*> by_file;
  for (const auto& r : reports) {
    if (!by_file.emplace(r.file, &r).second) throw ConfigError("duplicate report for " + r.file);
  }
  if (by_file.size() != gold.size()) {
    throw ConfigError("reports and gold annotations cover different files");
  }
  Evaluation evaluation;
  for (const auto& g : gold) {
    auto it = by_file.find(g.file);
    if (it == by_file.end()) throw ConfigError("no report for " + g.file);
    const auto& r = *it->second;
    evaluation.files.push_back({g.file, compare(g.preamble_end, r.preamble_end, true),
                                compare(g.epilogue_start, r.epilogue_start, false)});
  }
  return evaluation;
}

void write_evaluation_csv(std::ostream& out, const Evaluation& evaluation) {
  out << "file,preamble_error,epilogue_error,category\n";
  for (const auto& f : evaluation.files) {
    out << csv_field(f.file) << ',' << optional_number(f.preamble.error) << ','
        << optional_number(f.epilogue.error) << ',' << f.category() << '\n';
  }
}

void write_summary_csv(std::ostream& out, const Evaluation& evaluation,
                       std::span<const long long> tolerances) {
  out << "side,files,mismatches";
  for (auto t : tolerances) out << ",within_" << t;
  out << '\n';
  for (auto [s, name] : {std::pair{Side::preamble, "preamble"}, std::pair{Side::epilogue, "epilogue"}}) {
    out << name << ',' << evaluation.files.size() << ',' << evaluation.mismatches(s);
    for (auto t : tolerances) out << ',' << format_number(evaluation.fraction_within(s, t));
    out << '\n';
  }
}

void write_curves_csv(std::ostream& out, const Evaluation& evaluation) {
  const auto pre = evaluation.sorted_errors(Side::preamble);
  const auto epi = evaluation.sorted_errors(Side::epilogue);
  out << "rank,preamble_error,epilogue_error\n";
  for (std::size_t i = 0; i < std::max(pre.size(), epi.size()); ++i) {
    out << i + 1 << ',' << (i < pre.size() ? std::to_string(pre[i]) : "") << ','
        << (i < epi.size() ? std::to_string(epi[i]) : "") << '\n';
  }
}

}  // namespace boilerplate
