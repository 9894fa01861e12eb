#include "boilerplate/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <string_view>
#include <utility>

#include "boilerplate/errors.hpp"
#include "boilerplate/random.hpp"
#include "boilerplate/report_io.hpp"

namespace fs = std::filesystem;

namespace boilerplate {

namespace {

using Substitutions = std::vector<std::pair<std::string_view, std::string_view>>;

constexpr std::string_view kLicenseIntro =
    "This electronic book may be read by anyone anywhere without charge and with "
    "almost no restrictions of any kind. You are free to copy it, to give it away or "
    "to reuse it under the terms of the Project Gutenberg License that ships with this "
    "eBook or that can be read online at the project web site.";

constexpr std::string_view kHeaderNote =
    "Copyright laws are changing all over the world. Be sure to check the copyright "
    "laws for your country before downloading or redistributing this or any other "
    "Project Gutenberg eBook. This header should be the first thing seen when viewing "
    "this Project Gutenberg file. Please do not remove it. Do not change or edit the "
    "header without written permission.";

constexpr std::array<std::string_view, 5> kSmallPrint = {
    "Why is this Small Print statement here? You know: lawyers. They tell us you might "
    "sue us if there is something wrong with your copy of this eBook, even if you got it "
    "for free from someone other than us, and even if what is wrong is not our fault.",
    "By using or reading any part of this Project Gutenberg eBook, you indicate that you "
    "understand, agree to and accept this Small Print statement. If you do not, you can "
    "receive a refund of the money (if any) you paid for this eBook by sending a request "
    "within thirty days of receiving it to the person you got it from.",
    "This eBook, like most Project Gutenberg eBooks, is a public domain work distributed "
    "by Professor Hart through the Project Gutenberg Association. Among other things, this "
    "means that no one owns a United States copyright on or for this work, so the Project "
    "and you can copy and distribute it in the United States without permission and "
    "without paying copyright royalties.",
    "To create these eBooks, the Project expends considerable efforts to identify, "
    "transcribe and proofread public domain works. Despite these efforts, the Project's "
    "eBooks and any medium they may be on may contain Defects. Among other things, "
    "Defects may take the form of incomplete, inaccurate or corrupt data, transcription "
    "errors, a copyright or other intellectual property infringement, a defective or "
    "damaged disk or other eBook medium, a computer virus, or computer codes that damage "
    "or cannot be read by your equipment.",
    "You may distribute copies of this eBook electronically, or by disk, book or any "
    "other medium if you either delete this Small Print and all other references to "
    "Project Gutenberg, or only alter, modify or add to the eBook as either delimited "
    "text or in machine readable binary, compressed, mark-up or proprietary form.",
};

constexpr std::array<std::string_view, 3> kDonation = {
    "The Project gratefully accepts contributions of money, time, public domain "
    "materials, or royalty free copyright licenses. Money should be paid to the Project "
    "Gutenberg Literary Archive Foundation.",
    "Each eBook is prepared by volunteers who proofread the scanned pages line by line. "
    "Corrections and updates are released as new editions, and older editions are kept "
    "for reference under a different file name.",
    "Most people start at our web site which has the main search facility. This site "
    "includes information about the Project, including how to make donations to the "
    "Foundation, how to help produce our new eBooks, and how to subscribe to our email "
    "newsletter to hear about new eBooks.",
};

constexpr std::array<std::string_view, 160> kWords = {
    "river",   "morning", "garden",  "silver",  "window",   "captain", "letter",  "shadow",
    "quiet",   "forest",  "little",  "ancient", "thought",  "village", "summer",  "winter",
    "bright",  "candle",  "distant", "evening", "father",   "mother",  "sister",  "brother",
    "friend",  "stranger", "mountain", "valley", "harbour", "island",  "kingdom", "castle",
    "wooden",  "golden",  "gentle",  "strange", "weary",    "hollow",  "narrow",  "crimson",
    "autumn",  "meadow",  "orchard", "chapel",  "tower",    "bridge",  "market",  "journey",
    "silence", "promise", "secret",  "answer",  "question", "reason",  "feeling", "memory",
    "moment",  "hour",    "season",  "voice",   "laughter", "sorrow",  "courage", "patience",
    "was",     "were",    "had",     "would",   "could",    "should",  "might",   "seemed",
    "walked",  "looked",  "turned",  "spoke",   "listened", "waited",  "opened",  "closed",
    "carried", "followed", "remembered", "wondered", "smiled", "sighed", "answered", "asked",
    "the",     "a",       "and",     "of",      "to",       "in",      "with",    "upon",
    "beneath", "beyond",  "toward",  "through", "across",   "against", "after",   "before",
    "slowly",  "softly",  "nearly",  "always",  "never",    "perhaps", "again",   "still",
    "her",     "his",     "their",   "our",     "its",      "my",      "your",    "this",
    "that",    "these",   "those",   "every",   "some",     "many",    "few",     "no",
    "old",     "young",   "long",    "short",   "dark",     "pale",    "warm",    "cold",
    "horse",   "carriage", "road",   "field",   "stone",    "fire",    "water",   "bread",
    "table",   "chair",   "door",    "room",    "house",    "church",  "school",  "ship",
    "sea",     "sky",     "cloud",   "rain",    "wind",     "snow",    "star",    "moon",
};

constexpr std::array<std::string_view, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

std::string substitute(std::string_view text, const Substitutions& subs) {
  std::string out(text);
  for (const auto& [from, to] : subs) {
    for (std::size_t pos = out.find(from); pos != std::string::npos;
         pos = out.find(from, pos + to.size())) {
      out.replace(pos, from.size(), to);
    }
  }
  return out;
}

// Greedy word wrap at `width` columns.
void wrap(std::string_view paragraph, std::vector<std::string>& out, std::size_t width = 68) {
  std::string line;
  std::size_t pos = 0;
  while (pos < paragraph.size()) {
    auto end = paragraph.find(' ', pos);
    if (end == std::string_view::npos) end = paragraph.size();
    const auto word = paragraph.substr(pos, end - pos);
    if (!line.empty() && line.size() + 1 + word.size() > width) {
      out.push_back(std::move(line));
      line.clear();
    }
    if (!line.empty()) line.push_back(' ');
    line.append(word);
    pos = end + 1;
  }
  if (!line.empty()) out.push_back(std::move(line));
}

void paragraph(std::vector<std::string>& out, std::string_view text, const Substitutions& subs) {
  wrap(substitute(text, subs), out);
  out.emplace_back();
}

BoilerplateTemplate short_preamble(const Substitutions& subs) {
  BoilerplateTemplate t;
  auto& l = t.lines;
  l.push_back(substitute("The Project Gutenberg EBook of {TITLE}, by {AUTHOR}", subs));
  l.emplace_back();
  l.emplace_back("Title: {TITLE}");
  l.emplace_back("Author: {AUTHOR}");
  l.push_back(substitute("Release Date: {DATE} [EBook #{ID}]", subs));
  l.emplace_back("Language: English");
  l.emplace_back();
  paragraph(l, kLicenseIntro, subs);
  l.push_back(substitute("*** START OF THIS PROJECT GUTENBERG EBOOK {TITLE_UC} ***", subs));
  return t;
}

BoilerplateTemplate small_print_preamble(const Substitutions& subs) {
  BoilerplateTemplate t;
  auto& l = t.lines;
  l.push_back(substitute("The Project Gutenberg eBook of {TITLE}, by {AUTHOR}", subs));
  l.emplace_back();
  paragraph(l, kHeaderNote, subs);
  l.push_back(substitute("**Welcome To The World of Free Plain Vanilla Electronic Texts**", subs));
  l.push_back(substitute("**eBooks Readable By Both Humans and By Computers, Since 1971**", subs));
  l.push_back(substitute("*****These eBooks Were Prepared By Thousands of Volunteers!*****", subs));
  l.emplace_back();
  l.emplace_back("Title: {TITLE}");
  l.emplace_back("Author: {AUTHOR}");
  l.push_back(substitute("Release Date: {DATE} [eBook #{ID}]", subs));
  l.emplace_back("Edition: 10");
  l.emplace_back();
  l.push_back(substitute("*** START: FULL LICENSE AND SMALL PRINT INFORMATION ***", subs));
  l.emplace_back();
  for (auto p : kSmallPrint) paragraph(l, p, subs);
  l.push_back("*END*THE SMALL PRINT! FOR PUBLIC DOMAIN EBOOKS*Ver.02/11/02*END*");
  return t;
}

BoilerplateTemplate modern_epilogue(const Substitutions& subs) {
  BoilerplateTemplate t;
  auto& l = t.lines;
  l.push_back(substitute("End of the Project Gutenberg EBook of {TITLE}, by {AUTHOR}", subs));
  l.emplace_back();
  l.push_back(substitute("*** END OF THIS PROJECT GUTENBERG EBOOK {TITLE_UC} ***", subs));
  l.emplace_back();
  l.emplace_back("***** This file should be named {ID}.txt or {ID}.zip *****");
  l.push_back(substitute("This and all associated files of various formats will be found in:", subs));
  l.emplace_back("        http://www.gutenberg.org/dirs/{ID}/");
  l.emplace_back();
  for (auto p : kDonation) paragraph(l, p, subs);
  for (auto p : kSmallPrint) paragraph(l, p, subs);
  return t;
}

BoilerplateTemplate short_epilogue(const Substitutions& subs) {
  BoilerplateTemplate t;
  auto& l = t.lines;
  l.push_back(substitute("End of the Project Gutenberg eBook of {TITLE}", subs));
  l.emplace_back();
  for (auto p : kDonation) paragraph(l, p, subs);
  return t;
}

std::string capitalize(std::string_view word) {
  std::string s(word);
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string upper(std::string s) {
  for (auto& c : s) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return s;
}

std::string_view pick_word(std::mt19937_64& rng) { return kWords[uniform_index(rng, kWords.size())]; }

std::string roman(std::size_t n) {
  static constexpr std::array<std::pair<std::size_t, std::string_view>, 13> table = {{
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"}, {50, "L"},
      {40, "XL"}, {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"}}};
  std::string out;
  for (auto [value, symbol] : table) {
    while (n >= value) {
      out += symbol;
      n -= value;
    }
  }
  return out;
}

struct FileFacts {
  std::string title;
  std::string author;
  std::string id;
  std::string date;
};

std::string fill(std::string_view line, const FileFacts& facts) {
  return substitute(line, {{"{TITLE_UC}", upper(facts.title)},
                           {"{TITLE}", facts.title},
                           {"{AUTHOR}", facts.author},
                           {"{ID}", facts.id},
                           {"{DATE}", facts.date}});
}

// Appends the template to `out`, mutating eligible lines. Returns the raw
// indices of the first and last non-blank template lines.
std::pair<std::size_t, std::size_t> emit_template(const BoilerplateTemplate& tpl,
                                                  const FileFacts& facts, double rate,
                                                  std::mt19937_64& rng, SyntheticFile& file) {
  std::size_t first = std::string::npos;
  std::size_t last = std::string::npos;
  for (const auto& raw : tpl.lines) {
    std::string line = fill(raw, facts);
    if (!is_trivial(canonicalize(line))) {
      ++file.template_lines;
      if (uniform01(rng) < rate) {
        ++file.mutated_lines;
        line += " (" + facts.id + "." + std::to_string(file.lines.size()) + ")";
      }
    }
    if (!canonicalize(line).empty()) {
      if (first == std::string::npos) first = file.lines.size();
      last = file.lines.size();
    }
    file.lines.push_back(std::move(line));
  }
  return {first, last};
}

void emit_body(std::size_t count, std::size_t file_index, std::mt19937_64& rng,
               SyntheticFile& file) {
  std::size_t chapter = 1;
  for (std::size_t i = 0; i < count; ++i) {
    const double u = uniform01(rng);
    if (u < 0.12) {
      file.lines.emplace_back();
      continue;
    }
    if (u < 0.13) {
      file.lines.push_back("CHAPTER " + roman(chapter++) + ".");
      continue;
    }
    std::string line = capitalize(pick_word(rng));
    const std::size_t target = 45 + uniform_index(rng, 25);
    while (line.size() < target) {
      line.push_back(' ');
      line.append(pick_word(rng));
    }
    line += uniform01(rng) < 0.5 ? ", " : "; ";
    line += "[" + std::to_string(file_index) + ":" + std::to_string(file.lines.size()) + "]";
    file.lines.push_back(std::move(line));
  }
}

}  // namespace

std::vector<BoilerplateTemplate> default_preamble_templates() {
  const Substitutions modern;
  const Substitutions older = {{"eBook", "Etext"}, {"EBook", "Etext"}};
  return {short_preamble(modern), small_print_preamble(modern), short_preamble(older),
          small_print_preamble(older)};
}

std::vector<BoilerplateTemplate> default_epilogue_templates() {
  const Substitutions modern;
  const Substitutions foundation = {{"Project Gutenberg License", "Foundation License"},
                                    {"eBook", "EBook"}};
  return {modern_epilogue(modern), short_epilogue(modern), modern_epilogue(foundation)};
}

void SyntheticSpec::validate() const {
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw ConfigError("mutation rate must lie in [0, 1]");
  }
  if (!(epilogue_probability >= 0.0 && epilogue_probability <= 1.0)) {
    throw ConfigError("epilogue probability must lie in [0, 1]");
  }
  if (preambles.empty()) throw ConfigError("need at least one preamble template");
  if (epilogues.empty() && epilogue_probability > 0.0) {
    throw ConfigError("need an epilogue template when epilogues are requested");
  }
  if (body_min_lines > body_max_lines) throw ConfigError("body_min_lines > body_max_lines");
}

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  SyntheticCorpus corpus;

  std::mt19937_64 assign_rng(spec.seed);
  auto permute = [&](std::size_t variants) {
    std::vector<std::size_t> order(variants);
    std::iota(order.begin(), order.end(), 0);
    shuffle(std::span(order), assign_rng);
    return order;
  };
  const auto preamble_order = permute(spec.preambles.size());
  const auto epilogue_order = permute(std::max<std::size_t>(spec.epilogues.size(), 1));

  const int width = static_cast<int>(std::to_string(std::max<std::size_t>(spec.files, 1)).size());
  for (std::size_t i = 0; i < spec.files; ++i) {
    std::seed_seq seq{spec.seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);

    char name[64];
    std::snprintf(name, sizeof name, "ebook-%0*zu.txt", width, i);
    SyntheticFile file;
    file.name = name;

    FileFacts facts;
    facts.title = capitalize(pick_word(rng)) + " " + capitalize(pick_word(rng)) + " and the " +
                  capitalize(pick_word(rng));
    facts.author = capitalize(pick_word(rng)) + " " + capitalize(pick_word(rng));
    facts.id = std::to_string(10000 + i);
    facts.date = std::string(kMonths[uniform_index(rng, 12)]) + " " +
                 std::to_string(1 + uniform_index(rng, 28)) + ", " +
                 std::to_string(1995 + uniform_index(rng, 15));

    file.preamble_variant = preamble_order[i % preamble_order.size()];
    GoldAnnotation gold{file.name, std::nullopt, std::nullopt};
    gold.preamble_end =
        emit_template(spec.preambles[file.preamble_variant], facts, spec.mutation_rate, rng, file)
            .second;

    const std::size_t body =
        spec.body_min_lines + uniform_index(rng, spec.body_max_lines - spec.body_min_lines + 1);
    file.lines.emplace_back();
    emit_body(body, i, rng, file);
    file.lines.emplace_back();

    if (uniform01(rng) < spec.epilogue_probability) {
      const auto& tpl = spec.epilogues[epilogue_order[i % epilogue_order.size()]];
      gold.epilogue_start = emit_template(tpl, facts, spec.mutation_rate, rng, file).first;
    }
    corpus.files.push_back(std::move(file));
    corpus.gold.push_back(std::move(gold));
  }
  return corpus;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

void write_synthetic(const SyntheticCorpus& corpus, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& file : corpus.files) {
    std::ofstream out(dir / file.name, std::ios::binary);
    out << join_lines(file.lines);
    if (!out) throw IoError("failed writing " + (dir / file.name).string());
  }
  std::ofstream gold(dir / "gold.tsv", std::ios::binary);
  write_reports(gold, corpus.gold);
  if (!gold) throw IoError("failed writing gold annotations");
}

}  // namespace boilerplate
