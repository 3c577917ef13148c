#include "qcwalk/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "qcwalk/acceptance.hpp"
#include "qcwalk/dynamics.hpp"
#include "qcwalk/exact.hpp"
#include "qcwalk/spectral.hpp"
#include "qcwalk/time_varying.hpp"
#include "qcwalk/walkers.hpp"

namespace qcwalk {

using nlohmann::json;

std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CsvBuilder::CsvBuilder(const std::vector<std::string>& header) : width_(header.size()) {
  body_ = "# schema=1\n";
  for (std::size_t i = 0; i < header.size(); ++i) {
    body_ += header[i];
    body_ += (i + 1 < header.size()) ? ',' : '\n';
  }
}

void CsvBuilder::row(const std::vector<std::string>& cells) {
  QCW_CHECK(cells.size() == width_, "csv row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    body_ += cells[i];
    body_ += (i + 1 < cells.size()) ? ',' : '\n';
  }
}

const std::vector<CorpusEntry>& standard_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    for (int n = 4; n <= 8; ++n) c.push_back({"C" + std::to_string(n), make_cycle(n)});
    for (int n = 3; n <= 8; ++n) c.push_back({"P" + std::to_string(n), make_line(n)});
    c.push_back({"K4", make_complete(4)});
    c.push_back({"K5", make_complete(5)});
    c.push_back({"petersen", make_petersen()});
    c.push_back({"lollipop12", make_lollipop(12)});
    c.push_back({"semi_regular(10,4)", make_semi_regular(10, 4)});
    c.push_back({"double_star(3,2,8)", make_double_star(3, 2, 8)});
    return c;
  }();
  return corpus;
}

std::vector<CorpusEntry> assumption_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& e : standard_corpus())
    if (assumption_check(e.graph).holds) out.push_back(e);
  return out;
}

std::vector<SweepRow> sweep_ratio(const std::vector<std::string>& families, int n_lo, int n_hi,
                                  bool exact, long long trials, std::uint64_t seed) {
  std::vector<SweepRow> rows;
  for (const auto& family : families) {
    for (int n = n_lo; n <= n_hi; ++n) {
      Graph g;
      if (family == "line") {
        if (n < 3) continue;
        g = make_line(n);
      } else if (family == "star") {
        if (n < 3) continue;
        g = make_star(n);
      } else if (family == "lollipop") {
        if (n < 8) continue;
        g = make_lollipop(n);
      } else if (family == "semi_regular") {
        if (n <= 8) continue;  // k = 4 wants n > 2k
        g = make_semi_regular(n, 4);
      } else {
        throw std::invalid_argument("sweep family must be line|star|lollipop|semi_regular");
      }
      SweepRow row;
      row.family = family;
      row.n = n;
      row.m = g.m();
      row.diam = diameter(g);
      if (exact && n <= kOracleMaxNodes) {
        row.tbar = exact_meeting_times(g, ProcessKind::original).max_time;
        row.method = "exact";
      } else {
        // beyond the oracle range probe only the per-node farthest pairs
        std::vector<std::pair<int, int>> starts;
        for (int x = 0; x < g.n; ++x) {
          auto dist = bfs_distances(g, x);
          int far = static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
          starts.emplace_back(x, far);
        }
        auto est = estimate_max_meeting(ProcessKind::original, g, trials, seed, &starts);
        row.tbar = est.max_mean;
        row.method = "mc";
      }
      row.ratio = row.tbar / (static_cast<double>(row.m) * row.n * row.diam);
      rows.push_back(row);
    }
  }
  return rows;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  QCW_CHECK(x.size() == y.size() && x.size() >= 2, "slope needs matched samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  auto k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

ExperimentConfig ExperimentConfig::from_stream(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.front() == '[' && line.back() == ']') {
      cfg.kind = line.substr(1, line.size() - 2);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line is neither [section] nor key = value: " + line);
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    cfg.fields[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
  }
  if (cfg.kind.empty()) throw std::invalid_argument("config missing [experiment] section header");
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
  return from_stream(in);
}

std::string ExperimentConfig::serialize() const {
  std::string out = "[" + kind + "]\n";
  for (const auto& [k, v] : fields) out += k + " = " + v + "\n";
  return out;
}

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
  auto it = fields.find(key);
  return it == fields.end() ? fallback : it->second;
}

long long ExperimentConfig::get_int(const std::string& key, long long fallback) const {
  auto it = fields.find(key);
  return it == fields.end() ? fallback : std::stoll(it->second);
}

namespace {

std::string pair_key(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

json table_json(const Eigen::MatrixXd& t) {
  json out = json::object();
  for (int x = 0; x < t.rows(); ++x)
    for (int y = 0; y < t.cols(); ++y)
      if (x != y) out[pair_key(x, y)] = t(x, y);
  return out;
}

json bound_report_json(const BoundReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"reference", c.reference},
                      {"has_reference", c.has_reference},
                      {"violated", c.violated},
                      {"diagnostic", c.diagnostic},
                      {"slack", c.slack}});
  return {{"graph", rep.graph}, {"checks", checks}, {"hard_violation", rep.any_hard_violation()}};
}

ExperimentResult run_graph(const ExperimentConfig& cfg) {
  Graph g = parse_graph_spec(cfg.get("graph", cfg.get("spec")));
  ExperimentResult res;
  if (cfg.get("format", "text") == "json") {
    auto rep = assumption_check(g);
    json j = {{"n", g.n},
              {"m", g.m()},
              {"connected", g.connected},
              {"degrees", g.degree},
              {"diameter", g.connected ? diameter(g) : -1},
              {"assumption_holds", rep.holds},
              {"max_edge_degree_sum", rep.worst_degree_sum}};
    if (!rep.holds) j["failure_shape"] = rep.failure_shape;
    res.body = j.dump(2) + "\n";
    res.is_csv = false;
  } else {
    std::ostringstream os;
    write_graph_text(g, os);
    res.body = os.str();
    res.is_csv = false;
  }
  return res;
}

ExperimentResult run_simulate(const ExperimentConfig& cfg) {
  Graph g = parse_graph_spec(cfg.get("graph"));
  OpinionProfile x0 = parse_profile(cfg.get("profile"), g.n);
  long long trials = cfg.get_int("trials", 1);
  long long max_steps = cfg.get_int("max_steps", kDefaultMaxSteps);
  std::uint64_t seed = cfg.get_seed();
  CsvBuilder csv({"trial", "steps", "nontrivial", "converged"});
  for (long long t = 0; t < trials; ++t) {
    RunTrace tr = run_consensus(g, x0, Rng::derived(seed, static_cast<std::uint64_t>(t)).next_u64(),
                                max_steps);
    csv.row({std::to_string(t), std::to_string(tr.steps_to_consensus),
             std::to_string(tr.nontrivial_updates), tr.terminated ? "1" : "0"});
  }
  return {csv.str(), true, true};
}

ExperimentResult run_walkers(const ExperimentConfig& cfg) {
  Graph g = parse_graph_spec(cfg.get("graph"));
  ProcessKind kind = cfg.get("kind", "original") == "virtual" ? ProcessKind::virtual_
                                                              : ProcessKind::original;
  long long trials = cfg.get_int("trials", 1000);
  std::uint64_t seed = cfg.get_seed();
  std::vector<std::pair<int, int>> starts;
  const std::vector<std::pair<int, int>>* subset = nullptr;
  if (cfg.has("start")) {
    int a = 0, b = 0;
    if (std::sscanf(cfg.get("start").c_str(), "%d,%d", &a, &b) != 2)
      throw std::invalid_argument("start wants 'a,b'");
    starts.emplace_back(a, b);
    subset = &starts;
  }
  auto est = estimate_max_meeting(kind, g, trials, seed, subset);
  if (cfg.get("format", "csv") == "json") {
    json rows = json::array();
    for (const auto& p : est.pairs)
      rows.push_back({{"start_a", p.start_a},
                      {"start_b", p.start_b},
                      {"mean", p.mean},
                      {"stderr", p.stderr_},
                      {"trials", p.trials},
                      {"censored", p.censored}});
    json j = {{"pairs", rows},
              {"max_mean", est.max_mean},
              {"max_stderr", est.max_stderr},
              {"argmax", {est.argmax_a, est.argmax_b}}};
    return {j.dump(2) + "\n", false, true};
  }
  CsvBuilder csv({"start_a", "start_b", "mean", "stderr", "trials", "censored"});
  for (const auto& p : est.pairs)
    csv.row({std::to_string(p.start_a), std::to_string(p.start_b), format_sig(p.mean),
             format_sig(p.stderr_), std::to_string(p.trials), std::to_string(p.censored)});
  return {csv.str(), true, true};
}

ExperimentResult run_exact(const ExperimentConfig& cfg) {
  Graph g = parse_graph_spec(cfg.get("graph"));
  std::string what = cfg.get("what", "hitting");
  json j;
  if (what == "hitting") {
    j["lazy"] = table_json(hitting_table(lazy_transition_matrix(g)));
    j["simple"] = table_json(hitting_table(simple_transition_matrix(g)));
  } else if (what == "resistance") {
    j["resistance"] = table_json(resistance_matrix(g));
  } else if (what == "meeting:original" || what == "meeting:virtual") {
    auto kind = what == "meeting:original" ? ProcessKind::original : ProcessKind::virtual_;
    MeetingTable t = exact_meeting_times(g, kind);
    j["times"] = table_json(t.times);
    j["max"] = t.max_time;
    j["argmax"] = {t.argmax_x, t.argmax_y};
  } else if (what == "phi") {
    j["phi"] = table_json(potential_table(g));
    j["hidden_vertex"] = hidden_vertex(lazy_transition_matrix(g));
  } else {
    throw std::invalid_argument("exact --what hitting|resistance|meeting:original|meeting:virtual|phi");
  }
  return {j.dump(2) + "\n", false, true};
}

ExperimentResult run_spectral(const ExperimentConfig& cfg) {
  Graph g = parse_graph_spec(cfg.get("graph"));
  std::string what = cfg.get("what", "spectrum");
  double tolerance = std::stod(cfg.get("tolerance", "1e-8"));
  json j;
  bool ok = true;
  if (what == "spectrum") {
    auto dump = [](const Spectrum& s) {
      return std::vector<double>(s.values.data(), s.values.data() + s.values.size());
    };
    j["laplacian"] = dump(symmetric_spectrum(laplacian_matrix(g)));
    j["lazy"] = dump(symmetric_spectrum(lazy_transition_matrix(g).mat));
  } else if (what == "random-target") {
    double r = random_target_residual(lazy_transition_matrix(g));
    j["residual"] = r;
    j["within_tolerance"] = r <= tolerance;
    ok = r <= tolerance;
  } else if (what == "product") {
    double r = product_spectrum_check(g);
    j["residual"] = r;
    j["within_tolerance"] = r <= tolerance;
    ok = r <= tolerance;
  } else if (what == "lemma7") {
    auto rep = laplacian_max_eig_report(g);
    j = {{"alpha1", rep.alpha1},
         {"degree_sum_bound", rep.degree_sum_bound},
         {"half_refinement", rep.half_refinement},
         {"violated", rep.violated}};
  } else if (what == "kbar") {
    auto kb = kbar_matrix(g);
    Spectrum s = symmetric_spectrum(kb.mat);
    j = {{"states", kb.mat.rows()},
         {"alpha2", s.values(1)},
         {"alpha_min", s.values(s.values.size() - 1)},
         {"row_sum_error", (kb.mat.rowwise().sum().array() - 1.0).abs().maxCoeff()}};
  } else if (what == "contraction") {
    auto rep = contraction_factor(g);
    j = {{"alpha2_kbar", rep.alpha2_kbar},
         {"alpha_min_kbar", rep.alpha_min_kbar},
         {"alpha2_lazy", rep.alpha2_lazy},
         {"alpha_min_from_laplacian", rep.alpha_min_from_laplacian},
         {"exact_factor", rep.exact_factor},
         {"claimed_bound", rep.claimed_bound},
         {"flagged", rep.flagged}};
  } else {
    throw std::invalid_argument(
        "spectral --what spectrum|random-target|product|lemma7|kbar|contraction");
  }
  return {j.dump(2) + "\n", false, ok};
}

ExperimentResult run_bounds(const ExperimentConfig& cfg) {
  if (cfg.has("family")) {
    std::string family = cfg.get("family");
    if (family != "cycle" && family != "line")
      throw std::invalid_argument("bounds --family cycle|line");
    int lo = 0, hi = 0;
    if (std::sscanf(cfg.get("n_range").c_str(), "%d..%d", &lo, &hi) != 2 || lo > hi)
      throw std::invalid_argument("n_range wants 'lo..hi'");
    CsvBuilder csv({"family", "n", "check", "value", "reference", "violated"});
    for (int n = lo; n <= hi; ++n) {
      auto rep = corollary_formulas(family == "cycle" ? LineFamily::cycle : LineFamily::line, n);
      for (const auto& c : rep.checks)
        csv.row({family, std::to_string(n), c.name, format_sig(c.value), format_sig(c.reference),
                 c.violated ? "1" : "0"});
    }
    return {csv.str(), true, true};
  }
  Graph g = parse_graph_spec(cfg.get("graph"));
  BoundReport rep = theorem3_bounds(g);
  json j = bound_report_json(rep);
  // the birth-death chain bounds ride along in both readings
  for (auto reading : {DownReading::class_mass, DownReading::single_target}) {
    BDChain chain = birth_death_chain(g, reading);
    double bound = bd_hitting_bound(chain, chain.num_classes - 1);
    std::string key = reading == DownReading::class_mass ? "bd_class_mass" : "bd_single_target";
    j[key] = {{"classes", chain.num_classes},
              {"p_down", chain.p_down},
              {"p_stay", chain.p_stay},
              {"p_up", chain.p_up},
              {"bound_from_top", bound}};
  }
  return {j.dump(2) + "\n", false, !rep.any_hard_violation()};
}

ExperimentResult run_tv(const ExperimentConfig& cfg) {
  GraphSequence seq = cfg.has("members")
                          ? [&] {
                              std::vector<Graph> members;
                              std::stringstream ss(cfg.get("members"));
                              std::string spec;
                              while (std::getline(ss, spec, ';')) members.push_back(parse_graph_spec(spec));
                              auto mode = cfg.get("mode", "periodic") == "random"
                                              ? GraphSequence::Mode::random_pool
                                              : GraphSequence::Mode::periodic;
                              return sequence_schedule(std::move(members), mode, cfg.get_seed());
                            }()
                          : schedule_from_file(cfg.get("schedule"), cfg.get_seed(),
                                               cfg.get("mode", "periodic") == "random"
                                                   ? GraphSequence::Mode::random_pool
                                                   : GraphSequence::Mode::periodic);
  std::string sub = cfg.get("sub", "validate");
  json j = {{"n", seq.n},
            {"members", seq.members.size()},
            {"m_max", seq.m_max},
            {"d_max", seq.d_max},
            {"mode", seq.mode == GraphSequence::Mode::periodic ? "periodic" : "random"},
            {"b_connected", seq.b_connected}};
  if (sub == "validate") return {j.dump(2) + "\n", false, true};
  int a = 0, b = seq.n - 1;
  if (cfg.has("start") && std::sscanf(cfg.get("start").c_str(), "%d,%d", &a, &b) != 2)
    throw std::invalid_argument("start wants 'a,b'");
  if (sub == "meet") {
    auto rep = meeting_time_tv(seq, {a, b}, cfg.get_int("trials", 500), cfg.get_seed());
    j["meet"] = {{"start", {a, b}},
                 {"mean", rep.mean},
                 {"stderr", rep.stderr_},
                 {"bound", rep.bound},
                 {"within_bound", rep.within_bound},
                 {"trials", rep.trials},
                 {"censored", rep.censored}};
    return {j.dump(2) + "\n", false, rep.within_bound};
  }
  if (sub == "mix") {
    auto horizon = static_cast<int>(cfg.get_int("horizon", 100));
    MixingTrace trace = mixing_trace(seq, pair_point_mass(seq.n, a, b), horizon);
    j["mix"] = {{"start", {a, b}},
                {"norms", trace.norms},
                {"claimed", trace.claimed},
                {"flagged_steps", trace.flagged_steps}};
    return {j.dump(2) + "\n", false, true};
  }
  throw std::invalid_argument("tv sub-experiment must be validate, meet, or mix");
}

ExperimentResult run_sweep(const ExperimentConfig& cfg) {
  std::vector<std::string> families;
  std::stringstream ss(cfg.get("families", "line,star,lollipop,semi_regular"));
  std::string item;
  while (std::getline(ss, item, ',')) families.push_back(item);
  int lo = 3, hi = 24;
  if (cfg.has("n_range") && std::sscanf(cfg.get("n_range").c_str(), "%d..%d", &lo, &hi) != 2)
    throw std::invalid_argument("n_range wants 'lo..hi'");
  bool exact = cfg.get("mode", "exact") != "mc";
  auto rows = sweep_ratio(families, lo, hi, exact, cfg.get_int("trials", 2000), cfg.get_seed());
  CsvBuilder csv({"family", "n", "m", "diameter", "tbar", "ratio", "method"});
  bool ok = true;
  for (const auto& r : rows) {
    csv.row({r.family, std::to_string(r.n), std::to_string(r.m), std::to_string(r.diam),
             format_sig(r.tbar), format_sig(r.ratio), r.method});
    ok = ok && r.ratio <= 1.0;
  }
  return {csv.str(), true, ok};
}

ExperimentResult run_suite(const ExperimentConfig& cfg) {
  auto results = run_acceptance_suite(
      cfg.has("seed") ? cfg.get_seed() : kSuiteSeed, nullptr);
  std::ostringstream os;
  bool ok = print_acceptance_report(results, os);
  return {os.str(), false, ok};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const std::string& kind = config.kind;
  if (kind == "graph") return run_graph(config);
  if (kind == "simulate") return run_simulate(config);
  if (kind == "walkers") return run_walkers(config);
  if (kind == "exact") return run_exact(config);
  if (kind == "spectral") return run_spectral(config);
  if (kind == "bounds") return run_bounds(config);
  if (kind == "tv") return run_tv(config);
  if (kind == "sweep") return run_sweep(config);
  if (kind == "suite") return run_suite(config);
  throw std::invalid_argument("unknown experiment kind '" + kind + "'");
}

}  // namespace qcwalk
