#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qcwalk/bounds.hpp"
#include "qcwalk/graph.hpp"

namespace qcwalk {

/// %.12g — every numeric cell in CSV output goes through this.
std::string format_sig(double v);

/// Tiny CSV assembler with the versioned schema comment on top.
class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return body_; }

 private:
  std::string body_;
  std::size_t width_;
};

struct CorpusEntry {
  std::string label;
  Graph graph;
};

/// Cycles 4..8, lines 3..8, K4, K5, Petersen, lollipop(12), semi_regular(10,4),
/// double_star(i=3,k=2,n=8).
const std::vector<CorpusEntry>& standard_corpus();

/// Members satisfying the degree-sum condition (drops the stars/double-stars).
std::vector<CorpusEntry> assumption_corpus();

struct SweepRow {
  std::string family;
  int n = 0;
  int m = 0;
  int diam = 0;
  double tbar = 0;
  double ratio = 0;  // tbar / (m n D)
  std::string method;  // "exact" or "mc"
};

/// Worst meeting time vs the m*n*D normalizer per family and size; families
/// out of their admissible range are skipped.
std::vector<SweepRow> sweep_ratio(const std::vector<std::string>& families, int n_lo, int n_hi,
                                  bool exact, long long trials, std::uint64_t seed);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Flat key-value experiment description; one section per run.
struct ExperimentConfig {
  std::string kind;  // subcommand name
  std::map<std::string, std::string> fields;

  static ExperimentConfig from_stream(std::istream& in);
  static ExperimentConfig from_file(const std::string& path);
  std::string serialize() const;

  bool has(const std::string& key) const { return fields.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback = "") const;
  long long get_int(const std::string& key, long long fallback) const;
  std::uint64_t get_seed() const { return static_cast<std::uint64_t>(get_int("seed", 0)); }
};

struct ExperimentResult {
  std::string body;    // CSV or JSON payload
  bool is_csv = true;
  bool ok = true;      // false iff a hard assertion failed
};

/// Single dispatch behind every CLI subcommand; pure function of the config,
/// so identical configs give byte-identical bodies.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace qcwalk
