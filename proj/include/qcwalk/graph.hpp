#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcwalk {

/// Invariant/assertion failure in library code. The CLI maps it to exit 1,
/// as opposed to std::invalid_argument (bad input / usage, exit 2).
struct check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
[[noreturn]] void check_fail(const char* expr, const char* file, int line, const std::string& msg);
}

/// Always-on invariant check (never compiled out; survives release builds).
#define QCW_CHECK(expr, msg)                                              \
  do {                                                                    \
    if (!(expr)) ::qcwalk::detail::check_fail(#expr, __FILE__, __LINE__, (msg)); \
  } while (0)

/// Simple undirected graph. Edges are stored once with u < v; the edge list
/// order is the sampling order everywhere, so it is part of the contract.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;
  std::vector<int> degree;
  bool connected = false;
  std::string name;  // spec string when built from a family, else empty

  int m() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
};

/// Validates and assembles: rejects self-loops, duplicates, range errors
/// (std::invalid_argument names the offending edge).
Graph build_graph(int n, std::vector<std::pair<int, int>> edges);

// family generators
Graph make_line(int n);
Graph make_cycle(int n);
Graph make_star(int n);  // n nodes, n-1 leaves
Graph make_complete(int n);
Graph make_double_star(int i, int k, int n);  // centers of degree i and m+1-i sharing k neighbors
Graph make_lollipop(int n);                   // two floor(n/4)-cliques joined by a path
Graph make_semi_regular(int n, int k);        // circulant: i ~ i+1..i+k (mod n); needs n > 2k
Graph make_random_connected(int n, double p, std::uint64_t seed);
Graph make_petersen();

/// Family string ("cycle:8", "double_star:i=4,k=2,n=9", "random:n=10,p=0.4,seed=7",
/// "petersen") or a path to a graph text file (optionally "file:PATH").
Graph parse_graph_spec(const std::string& spec);

/// Text format: first line "n m", then m lines "u v".
Graph read_graph_text(std::istream& in);
void write_graph_text(const Graph& g, std::ostream& out);

std::vector<int> bfs_distances(const Graph& g, int source);
int diameter(const Graph& g);

struct AssumptionReport {
  bool holds = true;
  int worst_u = -1, worst_v = -1;  // edge with the largest degree sum
  int worst_degree_sum = 0;
  std::string failure_shape;  // "star" or "double_star" when the check fails
};

/// Degree-sum condition d(u)+d(v) <= m on every edge; the only connected
/// violators have an edge with degree sum m+1 (star / double-star).
AssumptionReport assumption_check(const Graph& g);

/// Cartesian square on ordered pairs; vertex (x,y) gets index x*n + y.
Graph cartesian_square(const Graph& g);

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd laplacian_matrix(const Graph& g);

}  // namespace qcwalk
