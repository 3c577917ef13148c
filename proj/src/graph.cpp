#include "qcwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "qcwalk/rng.hpp"

namespace qcwalk {

namespace detail {
void check_fail(const char* expr, const char* file, int line, const std::string& msg) {
  std::ostringstream os;
  os << "check failed: " << msg << " [" << expr << " at " << file << ":" << line << "]";
  throw check_error(os.str());
}
}  // namespace detail

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& row = adj[u];
  return std::find(row.begin(), row.end(), v) != row.end();
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw std::invalid_argument("node count must be positive");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u) + "-" + std::to_string(v));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("endpoint out of range in edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    g.edges.emplace_back(u, v);
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  g.degree.resize(n);
  for (int i = 0; i < n; ++i) {
    std::sort(g.adj[i].begin(), g.adj[i].end());
    g.degree[i] = static_cast<int>(g.adj[i].size());
  }
  auto dist = bfs_distances(g, 0);
  g.connected = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  return g;
}

Graph make_line(int n) {
  if (n < 2) throw std::invalid_argument("line needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  Graph g = build_graph(n, e);
  g.name = "line:" + std::to_string(n);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  Graph g = build_graph(n, e);
  g.name = "cycle:" + std::to_string(n);
  return g;
}

Graph make_star(int n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  Graph g = build_graph(n, e);
  g.name = "star:" + std::to_string(n);
  return g;
}

Graph make_complete(int n) {
  if (n < 2) throw std::invalid_argument("complete needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  Graph g = build_graph(n, e);
  g.name = "complete:" + std::to_string(n);
  return g;
}

Graph make_double_star(int i, int k, int n) {
  // Centers 0 and 1 joined by an edge, k shared neighbors, the remaining
  // nodes split into private leaves so that deg(0)=i and deg(1)=m+1-i.
  int a = i - 1 - k;          // private leaves of center 0
  int b = n - 1 - i;          // private leaves of center 1
  if (i < 2 || k < 1 || a < 0 || b < 0)
    throw std::invalid_argument("double_star parameters inadmissible (need 1 <= k <= i-1 <= n-2)");
  std::vector<std::pair<int, int>> e;
  e.emplace_back(0, 1);
  int next = 2;
  for (int s = 0; s < k; ++s, ++next) {
    e.emplace_back(0, next);
    e.emplace_back(1, next);
  }
  for (int s = 0; s < a; ++s, ++next) e.emplace_back(0, next);
  for (int s = 0; s < b; ++s, ++next) e.emplace_back(1, next);
  Graph g = build_graph(n, e);
  g.name = "double_star:i=" + std::to_string(i) + ",k=" + std::to_string(k) + ",n=" + std::to_string(n);
  return g;
}

Graph make_lollipop(int n) {
  // Two floor(n/4)-cliques at the ends; every leftover node sits on the
  // connecting path, so the path has n - 2*floor(n/4) interior nodes.
  int c = n / 4;
  if (c < 2) throw std::invalid_argument("lollipop needs n >= 8");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) e.emplace_back(i, j);
  for (int i = n - c; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  for (int i = c - 1; i < n - c; ++i) e.emplace_back(i, i + 1);
  Graph g = build_graph(n, e);
  g.name = "lollipop:" + std::to_string(n);
  return g;
}

Graph make_semi_regular(int n, int k) {
  if (k < 1 || n <= 2 * k) throw std::invalid_argument("semi_regular needs n > 2k");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int s = 1; s <= k; ++s) e.emplace_back(i, (i + s) % n);
  Graph g = build_graph(n, e);
  g.name = "semi_regular:n=" + std::to_string(n) + ",k=" + std::to_string(k);
  return g;
}

Graph make_random_connected(int n, double p, std::uint64_t seed) {
  if (n < 2 || p <= 0.0 || p > 1.0) throw std::invalid_argument("random graph needs n >= 2, 0 < p <= 1");
  Rng rng(Rng::derived(seed, 0x67726170ULL).next_u64());
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.unit() < p) e.emplace_back(i, j);
    Graph g = build_graph(n, e);
    if (g.connected) {
      std::ostringstream name;
      name << "random:n=" << n << ",p=" << p << ",seed=" << seed;
      g.name = name.str();
      return g;
    }
  }
  throw std::invalid_argument("random graph never came out connected; raise p");
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, 5 + i);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  Graph g = build_graph(10, e);
  g.name = "petersen";
  return g;
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& args) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

int kv_int(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  return std::stoi(it->second);
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("cannot open graph file '" + spec.substr(5) + "'");
    return read_graph_text(in);
  }
  auto colon = spec.find(':');
  std::string tag = spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto single_int = [&]() {
    if (args.empty() || args.find('=') != std::string::npos)
      throw std::invalid_argument("family '" + tag + "' takes a single node count, e.g. " + tag + ":8");
    return std::stoi(args);
  };
  if (tag == "line") return make_line(single_int());
  if (tag == "cycle") return make_cycle(single_int());
  if (tag == "star") return make_star(single_int());
  if (tag == "complete") return make_complete(single_int());
  if (tag == "lollipop") return make_lollipop(single_int());
  if (tag == "petersen") return make_petersen();
  if (tag == "semi_regular") {
    auto kv = parse_kv(args);
    return make_semi_regular(kv_int(kv, "n"), kv_int(kv, "k"));
  }
  if (tag == "double_star") {
    auto kv = parse_kv(args);
    return make_double_star(kv_int(kv, "i"), kv_int(kv, "k"), kv_int(kv, "n"));
  }
  if (tag == "random" || tag == "random_connected") {
    auto kv = parse_kv(args);
    double p = std::stod(kv.at("p"));
    std::uint64_t seed = kv.count("seed") ? std::stoull(kv.at("seed")) : 0;
    return make_random_connected(kv_int(kv, "n"), p, seed);
  }
  // fall back to a plain file path
  std::ifstream in(spec);
  if (in) return read_graph_text(in);
  throw std::invalid_argument("unknown graph spec '" + spec + "'");
}

Graph read_graph_text(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("graph text: expected header 'n m'");
  std::vector<std::pair<int, int>> e(m);
  for (int i = 0; i < m; ++i)
    if (!(in >> e[i].first >> e[i].second))
      throw std::invalid_argument("graph text: expected " + std::to_string(m) + " edge lines");
  return build_graph(n, std::move(e));
}

void write_graph_text(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.n, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

int diameter(const Graph& g) {
  QCW_CHECK(g.connected, "diameter needs a connected graph");
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    auto dist = bfs_distances(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

AssumptionReport assumption_check(const Graph& g) {
  AssumptionReport rep;
  for (auto [u, v] : g.edges) {
    int s = g.degree[u] + g.degree[v];
    if (s > rep.worst_degree_sum) {
      rep.worst_degree_sum = s;
      rep.worst_u = u;
      rep.worst_v = v;
    }
  }
  rep.holds = rep.worst_degree_sum <= g.m();
  if (!rep.holds) {
    // A connected violator has a degree-m+1 edge; it is a star when one
    // endpoint of the worst edge is a leaf, otherwise a double-star.
    rep.failure_shape =
        (g.degree[rep.worst_u] == 1 || g.degree[rep.worst_v] == 1) ? "star" : "double_star";
  }
  return rep;
}

Graph cartesian_square(const Graph& g) {
  int n = g.n;
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x)
    for (auto [u, v] : g.edges) {
      e.emplace_back(x * n + u, x * n + v);  // move in the second coordinate
      e.emplace_back(u * n + x, v * n + x);  // move in the first coordinate
    }
  Graph p = build_graph(n * n, std::move(e));
  p.name = g.name.empty() ? "square" : g.name + " squared";
  return p;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) a(u, v) = a(v, u) = 1.0;
  return a;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) {
    l(u, v) = l(v, u) = -1.0;
    l(u, u) += 1.0;
    l(v, v) += 1.0;
  }
  return l;
}

}  // namespace qcwalk
