// Command-line front end for the seqdist library.
//
// Exit status: 0 success, 1 domain error (bad sequence, matrix, code, ...),
// 2 usage or I/O error.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "seqdist/seqdist.hpp"

namespace {

using namespace seqdist;
using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string alphabet = "text";
  std::uint64_t seed = SeededGenerator::default_seed;
  std::string format;
  bool upper = false;
  bool literal = false;
};

Alphabet alphabet_named(const std::string& name) {
  if (name == "dna") return Alphabet::dna();
  if (name == "binary") return Alphabet::binary();
  return Alphabet::text();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Literal text or file content, depending on --literal.
std::string input_text(const Globals& g, const std::string& arg) {
  return g.literal ? arg : read_file(arg);
}

Sequence load_sequence(const Globals& g, const std::string& arg,
                       const Alphabet& alphabet) {
  std::string text = g.literal ? arg
                               : sequence_text(read_file(arg),
                                               g.alphabet == "text");
  if (g.upper) {
    text = fold_upper(text);
  }
  return Sequence{std::move(text), alphabet};
}

Sequence load_sequence(const Globals& g, const std::string& arg) {
  return load_sequence(g, arg, alphabet_named(g.alphabet));
}

Format table_format(const Globals& g, Format fallback = Format::csv) {
  if (g.format.empty()) return fallback;
  const auto f = parse_format(g.format);
  if (!f || *f == Format::phylip) {
    throw UsageError("format '" + g.format + "' is not available here");
  }
  return *f;
}

WidthPolicy width_policy(const std::string& name) {
  const auto p = parse_width_policy(name);
  if (!p) throw UsageError("unknown width policy '" + name + "'");
  return *p;
}

// ---------------------------------------------------------------- dist

struct DistOptions {
  std::string measure = "all";
  std::vector<std::string> inputs;
};

void run_dist(const Globals& g, const DistOptions& o) {
  const Sequence a = load_sequence(g, o.inputs.at(0));
  const Sequence b = load_sequence(g, o.inputs.at(1));
  const std::string& m = o.measure;
  const bool all = m == "all";
  const bool same_length = a.size() == b.size();
  const bool nonempty = !a.empty() && !b.empty();

  Table t{{"measure", "value"}, {}, {}};
  auto add = [&](const std::string& name, auto value) {
    t.rows.push_back({name, value});
  };
  if (m == "hamming" || (all && same_length)) add("hamming", hamming(a, b));
  if (m == "levenshtein" || all) add("levenshtein", levenshtein(a, b));
  if (m == "osa" || all) add("osa", osa(a, b));
  if (m == "dl" || m == "damerau_levenshtein" || all)
    add("dl", damerau_levenshtein(a, b));
  if (m == "rotation" || (all && same_length && nonempty))
    add("rotation", min_rotation_distance(a, b).distance);
  if (m == "lz_d" || (all && nonempty)) add("lz_d", otu_sayood_d(a, b).d);
  if (m == "lz_dstar" || (all && nonempty))
    add("lz_dstar", otu_sayood_d_star(a, b).d_star);
  std::cout << render(t, table_format(g));
}

// ---------------------------------------------------------------- align

struct AlignOptions {
  std::vector<std::string> inputs;
  std::string matrix_path;
  int match = 1;
  int mismatch = -1;
  int gap = -10;
  bool local = false;
  bool show_matrices = false;
};

template <typename T, typename F>
std::string render_grid(const Grid<T>& grid, std::string_view rows,
                        std::string_view cols, F cell) {
  std::vector<std::vector<std::string>> text(grid.rows() + 1);
  text[0].push_back("");
  text[0].push_back("");
  for (char c : cols) text[0].emplace_back(1, c);
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    auto& line = text[i + 1];
    line.push_back(i == 0 ? "" : std::string(1, rows[i - 1]));
    for (std::size_t j = 0; j < grid.cols(); ++j) line.push_back(cell(grid(i, j)));
  }
  std::size_t width = 1;
  for (const auto& line : text)
    for (const auto& s : line) width = std::max(width, s.size());
  std::ostringstream out;
  for (const auto& line : text) {
    std::string row;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k != 0) row.push_back(' ');
      row += std::string(width - line[k].size(), ' ') + line[k];
    }
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << '\n';
  }
  return out.str();
}

void run_align(const Globals& g, const AlignOptions& o) {
  const Alphabet alphabet = alphabet_named(g.alphabet);
  const Sequence a = load_sequence(g, o.inputs.at(0), alphabet);
  const Sequence b = load_sequence(g, o.inputs.at(1), alphabet);
  const SubstitutionMatrix m =
      o.matrix_path.empty()
          ? SubstitutionMatrix::match_mismatch(alphabet, o.match, o.mismatch)
          : parse_substitution_matrix(read_file(o.matrix_path));
  const GapPenalty gap{o.gap};
  if (gap.rewards_gaps()) {
    std::cerr << "seqdist: warning: positive gap score " << gap.score
              << " rewards gaps\n";
  }
  if (!m.is_symmetric()) {
    std::cerr << "seqdist: warning: substitution matrix is not symmetric\n";
  }
  const AlignmentResult r =
      o.local ? smith_waterman(a, b, m, gap) : needleman_wunsch(a, b, m, gap);

  if (g.format == "json") {
    ordered_json doc;
    doc["mode"] = o.local ? "local" : "global";
    doc["aligned_a"] = r.aligned_a;
    doc["aligned_b"] = r.aligned_b;
    doc["score"] = r.score;
    doc["a_range"] = {r.a_begin, r.a_end};
    doc["b_range"] = {r.b_begin, r.b_end};
    if (o.show_matrices) {
      ordered_json scores = ordered_json::array();
      ordered_json moves = ordered_json::array();
      for (std::size_t i = 0; i < r.score_matrix.rows(); ++i) {
        ordered_json srow = ordered_json::array();
        ordered_json mrow = ordered_json::array();
        for (std::size_t j = 0; j < r.score_matrix.cols(); ++j) {
          srow.push_back(r.score_matrix(i, j));
          mrow.push_back(std::string(to_string(r.traceback(i, j))));
        }
        scores.push_back(std::move(srow));
        moves.push_back(std::move(mrow));
      }
      doc["score_matrix"] = std::move(scores);
      doc["traceback"] = std::move(moves);
    }
    std::cout << doc.dump(2) << '\n';
    return;
  }

  std::cout << r.aligned_a << '\n' << r.aligned_b << '\n';
  std::cout << "score: " << r.score << '\n';
  if (o.local) {
    std::cout << "a: [" << r.a_begin << ", " << r.a_end << ")  b: ["
              << r.b_begin << ", " << r.b_end << ")\n";
  }
  if (o.show_matrices) {
    std::cout << "\nscore matrix\n"
              << render_grid(r.score_matrix, a.view(), b.view(),
                             [](int v) { return std::to_string(v); })
              << "\ntraceback matrix\n"
              << render_grid(r.traceback, a.view(), b.view(), [](Move mv) {
                   return std::string(to_string(mv));
                 });
  }
}

// ---------------------------------------------------------------- rotate-min

void run_rotate(const Globals& g, const std::vector<std::string>& inputs) {
  const Sequence a = load_sequence(g, inputs.at(0));
  const Sequence b = load_sequence(g, inputs.at(1));
  const RotationProfile p = rotation_profile(a, b);
  Table t{{"shift", "distance", "best"}, {}, {}};
  for (std::size_t k = 0; k < p.distances.size(); ++k) {
    t.rows.push_back({k, p.distances[k], k == p.best_shift ? 1 : 0});
  }
  std::cout << render(t, table_format(g));
}

// ---------------------------------------------------------------- lzc

void run_lzc(const Globals& g, const std::vector<std::string>& inputs) {
  std::vector<Sequence> seqs;
  for (const auto& in : inputs) seqs.push_back(load_sequence(g, in));
  Table t{{"label", "count", "history"}, {}, {}};
  auto add = [&](const std::string& label, const std::string& s) {
    const auto h = exhaustive_history(s);
    t.rows.push_back({label, h.count(), h.render()});
  };
  add("a", seqs[0].str());
  if (seqs.size() == 2) {
    add("b", seqs[1].str());
    add("ab", seqs[0].str() + seqs[1].str());
    add("ba", seqs[1].str() + seqs[0].str());
    const auto r = lz_distance_report(seqs[0], seqs[1]);
    t.notes.push_back("d=" + std::to_string(r.d));
    t.notes.push_back("d_star=" + std::to_string(r.d_star));
  }
  std::cout << render(t, table_format(g));
}

// ---------------------------------------------------------------- lzw

struct LzwOptions {
  std::string input;
  std::string width = "fixed_minimal";
  bool report = false;
};

std::string join_codes(const std::vector<Code>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(codes[i]);
  }
  return out;
}

std::vector<Code> parse_codes(const std::string& text) {
  std::vector<Code> codes;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    Code value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidCode("'" + token + "' is not a code");
    }
    codes.push_back(value);
  }
  return codes;
}

void run_lzw_encode(const Globals& g, const LzwOptions& o) {
  const WidthPolicy policy = width_policy(o.width);
  const CodeStream cs = lzw_encode(load_sequence(g, o.input), policy);
  if (!o.report) {
    std::cout << join_codes(cs.codes) << '\n';
    return;
  }
  Table t{{"policy", "code_count", "bits"}, {}, {}};
  for (auto p : {WidthPolicy::fixed12, WidthPolicy::fixed_minimal,
                 WidthPolicy::variable}) {
    const auto size = compressed_size(cs, p);
    t.rows.push_back({std::string(to_string(p)), size.code_count, size.bits});
  }
  t.notes.push_back("codes=" + join_codes(cs.codes));
  std::cout << render(t, table_format(g));
}

void run_lzw_decode(const Globals& g, const LzwOptions& o) {
  const CodeStream cs{parse_codes(input_text(g, o.input)),
                      alphabet_named(g.alphabet), width_policy(o.width)};
  std::cout << lzw_decode(cs).str() << '\n';
}

// ---------------------------------------------------------------- dseq

void run_dseq(const Globals& g, std::uint64_t prime, std::uint64_t base) {
  const DSequence d = dseq_digits(prime, base);
  Table t{{"prime", "base", "period", "maximum_length", "digits"}, {}, {}};
  t.rows.push_back({d.prime, d.base, d.period, d.maximum_length() ? 1 : 0,
                    d.to_string()});
  std::cout << render(t, table_format(g));
}

// ---------------------------------------------------------------- components

struct ComponentOptions {
  std::string input;
  std::string mode = "both";
  bool render_runs = false;
};

void run_components(const Globals& g, const ComponentOptions& o) {
  const Sequence s = load_sequence(g, o.input);
  Table t{{"mode", "unit_count", "components"}, {}, {}};
  if (o.mode == "with" || o.mode == "both") {
    const auto p = parse_with_rle(s);
    t.rows.push_back({"with_rle", p.unit_count(), p.render('|', o.render_runs)});
  }
  if (o.mode == "without" || o.mode == "both") {
    const auto p = parse_without_rle(s);
    t.rows.push_back({"without_rle", p.unit_count(), p.render('|')});
  }
  std::cout << render(t, table_format(g));
}

// ---------------------------------------------------------------- curve

struct CurveOptions {
  std::string input;
  std::string gen;
  std::size_t step = 1;
};

void run_curve(const Globals& g, const CurveOptions& o) {
  if (o.input.empty() == o.gen.empty()) {
    throw UsageError("curve needs exactly one of an input or --gen");
  }
  std::string text;
  if (!o.gen.empty()) {
    const auto generated = generate_sequence(o.gen, g.seed);
    if (!generated) throw UsageError("unknown generator spec '" + o.gen + "'");
    text = *generated;
  } else {
    text = load_sequence(g, o.input).str();
  }
  Table t{{"prefix_length", "with_rle", "without_rle"}, {}, {}};
  for (const auto& pt : randomness_curve(text, o.step)) {
    t.rows.push_back({pt.prefix_length, pt.with_rle, pt.without_rle});
  }
  std::cout << render(t, table_format(g));
}

// ---------------------------------------------------------------- tables

struct TableOptions {
  std::uint64_t from = 3;
  std::uint64_t to = 97;
  std::string width = "fixed_minimal";
};

std::string fixed6(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << v;
  return out.str();
}

void run_table1(const Globals& g, const TableOptions& o) {
  const WidthPolicy policy = width_policy(o.width);
  const auto rows = lzw_dseq_table(o.from, o.to);
  Table t{{"prime", "length", "code_count", "bits_fixed12",
           "bits_fixed_minimal", "bits_variable"},
          {},
          {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.prime, r.length, r.code_count, r.bits_fixed12,
                      r.bits_fixed_minimal, r.bits_variable});
  }
  if (!rows.empty()) {
    const auto s = expansion_summary(rows, policy);
    t.notes.push_back("expanded=" + std::to_string(s.expanded) + "/" +
                      std::to_string(s.total) + " fraction=" +
                      fixed6(s.fraction()) + " policy=" +
                      std::string(to_string(policy)));
  }
  std::cout << render(t, table_format(g));
}

void run_table2(const Globals& g, const TableOptions& o) {
  const WidthPolicy policy = width_policy(o.width);
  Table t{{"prime", "length", "hamming_before", "bits_dseq", "bits_random",
           "hamming_after"},
          {},
          {}};
  for (const auto& r : lzw_hamming_table(o.from, o.to, g.seed, policy)) {
    t.rows.push_back({r.prime, r.length, r.hamming_before, r.bits_dseq,
                      r.bits_random, r.hamming_after});
  }
  std::cout << render(t, table_format(g));
}

// ---------------------------------------------------------------- matrix

void run_matrix(const Globals& g, const std::string& path,
                const std::string& measure_name) {
  LZMeasure measure = LZMeasure::d;
  if (measure_name == "d_star") {
    measure = LZMeasure::d_star;
  } else if (measure_name != "d") {
    throw UsageError("unknown measure '" + measure_name + "'");
  }
  const auto records = parse_fasta(read_file(path));
  if (records.size() < 2) {
    throw UsageError("matrix needs at least two FASTA records");
  }
  const Alphabet alphabet = alphabet_named(g.alphabet);
  std::vector<std::string> names;
  std::vector<Sequence> seqs;
  for (const auto& r : records) {
    names.push_back(r.name);
    seqs.emplace_back(g.upper ? fold_upper(r.sequence) : r.sequence, alphabet);
  }
  const auto m = lz_distance_matrix(seqs, measure);

  Format f = Format::phylip;
  if (!g.format.empty()) {
    const auto parsed = parse_format(g.format);
    if (!parsed) throw UsageError("unknown format '" + g.format + "'");
    f = *parsed;
  }
  if (f == Format::phylip) {
    std::cout << render_phylip(names, m);
    return;
  }
  Table t;
  t.header.push_back("taxon");
  t.header.insert(t.header.end(), names.begin(), names.end());
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::vector<ordered_json> row{names[i]};
    for (std::size_t j = 0; j < names.size(); ++j) row.emplace_back(m(i, j));
    t.rows.push_back(std::move(row));
  }
  std::cout << render(t, f);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequence distances, alignments and compression-based "
               "sequence characterisation"};
  app.name("seqdist");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--alphabet", g.alphabet, "Symbol alphabet")
      ->check(CLI::IsMember({"dna", "binary", "text"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for generated sequences")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "tsv", "json", "phylip"}));
  app.add_flag("--upper", g.upper, "Upper-case inputs before validation");
  app.add_flag("--literal", g.literal,
               "Treat sequence arguments as sequences, not file paths");

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two sequences");
  dist_cmd->add_option("--measure", dist.measure)
      ->check(CLI::IsMember({"all", "hamming", "levenshtein", "osa", "dl",
                             "damerau_levenshtein", "rotation", "lz_d",
                             "lz_dstar"}))
      ->capture_default_str();
  dist_cmd->add_option("inputs", dist.inputs)->required()->expected(2);

  AlignOptions align;
  auto* align_cmd = app.add_subcommand("align", "Global or local DP alignment");
  align_cmd->add_option("inputs", align.inputs)->required()->expected(2);
  align_cmd->add_option("--matrix", align.matrix_path, "Substitution matrix file");
  align_cmd->add_option("--match", align.match)->capture_default_str();
  align_cmd->add_option("--mismatch", align.mismatch)->capture_default_str();
  align_cmd->add_option("--gap", align.gap, "Additive score per gap symbol")
      ->capture_default_str();
  align_cmd->add_flag("--local", align.local, "Smith-Waterman local alignment");
  align_cmd->add_flag("--show-matrices", align.show_matrices);

  std::vector<std::string> rotate_inputs;
  auto* rotate_cmd = app.add_subcommand(
      "rotate-min", "Hamming distance over all rotations of the second input");
  rotate_cmd->add_option("inputs", rotate_inputs)->required()->expected(2);

  std::vector<std::string> lzc_inputs;
  auto* lzc_cmd = app.add_subcommand(
      "lzc", "Exhaustive history and LZ complexity; with two inputs, d and d*");
  lzc_cmd->add_option("inputs", lzc_inputs)->required()->expected(1, 2);

  LzwOptions lzw;
  auto* lzw_cmd = app.add_subcommand("lzw", "LZW coding");
  lzw_cmd->require_subcommand(1);
  auto* enc_cmd = lzw_cmd->add_subcommand("encode", "Encode to decimal codes");
  enc_cmd->add_option("input", lzw.input)->required();
  enc_cmd->add_option("--width", lzw.width)->capture_default_str();
  enc_cmd->add_flag("--report", lzw.report, "Report sizes under every policy");
  auto* dec_cmd = lzw_cmd->add_subcommand("decode", "Decode comma-separated codes");
  dec_cmd->add_option("input", lzw.input)->required();
  dec_cmd->add_option("--width", lzw.width)->capture_default_str();

  std::uint64_t dseq_prime = 0;
  std::uint64_t dseq_base = 2;
  auto* dseq_cmd = app.add_subcommand("dseq", "Expansion of 1/p over one period");
  dseq_cmd->add_option("prime", dseq_prime)->required();
  dseq_cmd->add_option("--base", dseq_base)->capture_default_str();

  ComponentOptions comp;
  auto* comp_cmd = app.add_subcommand("components",
                                      "Information units with and without RLE");
  comp_cmd->add_option("input", comp.input)->required();
  comp_cmd->add_option("--mode", comp.mode)
      ->check(CLI::IsMember({"both", "with", "without"}))
      ->capture_default_str();
  comp_cmd->add_flag("--render-runs", comp.render_runs,
                     "Show runs as count followed by unit");

  CurveOptions curve;
  auto* curve_cmd = app.add_subcommand("curve", "Unit counts over growing prefixes");
  curve_cmd->add_option("input", curve.input);
  curve_cmd->add_option("--gen", curve.gen,
                        "runs:N, periodic:N[:UNIT] or random:N");
  curve_cmd->add_option("--step", curve.step)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  TableOptions table1;
  auto* table1_cmd = app.add_subcommand("table1", "LZW size of binary D-sequences");
  table1_cmd->add_option("--from", table1.from)->capture_default_str();
  table1_cmd->add_option("--to", table1.to)->capture_default_str();
  table1_cmd->add_option("--width", table1.width)->capture_default_str();

  TableOptions table2{2, 97, "fixed_minimal"};
  auto* table2_cmd = app.add_subcommand(
      "table2", "Hamming distance to a random sequence before and after LZW");
  table2_cmd->add_option("--from", table2.from)->capture_default_str();
  table2_cmd->add_option("--to", table2.to)->capture_default_str();
  table2_cmd->add_option("--width", table2.width)->capture_default_str();

  std::string matrix_path;
  std::string matrix_measure = "d";
  auto* matrix_cmd = app.add_subcommand("matrix", "LZ distance matrix of a FASTA file");
  matrix_cmd->add_option("fasta", matrix_path)->required();
  matrix_cmd->add_option("--measure", matrix_measure)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dist_cmd) run_dist(g, dist);
    else if (*align_cmd) run_align(g, align);
    else if (*rotate_cmd) run_rotate(g, rotate_inputs);
    else if (*lzc_cmd) run_lzc(g, lzc_inputs);
    else if (*enc_cmd) run_lzw_encode(g, lzw);
    else if (*dec_cmd) run_lzw_decode(g, lzw);
    else if (*dseq_cmd) run_dseq(g, dseq_prime, dseq_base);
    else if (*comp_cmd) run_components(g, comp);
    else if (*curve_cmd) run_curve(g, curve);
    else if (*table1_cmd) run_table1(g, table1);
    else if (*table2_cmd) run_table2(g, table2);
    else if (*matrix_cmd) run_matrix(g, matrix_path, matrix_measure);
  } catch (const UsageError& e) {
    std::cerr << "seqdist: " << e.what() << '\n';
    return 2;
  } catch (const seqdist::Error& e) {
    std::cerr << "seqdist: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "seqdist: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
