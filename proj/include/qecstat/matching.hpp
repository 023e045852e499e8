#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <utility>
#include <vector>

#include "qecstat/geometry.hpp"

namespace qecstat {

// Marks a forbidden pair / unreachable distance.
inline constexpr int64_t kWInf = std::numeric_limits<int64_t>::max() / 8;
inline constexpr int32_t kDistInf = std::numeric_limits<int32_t>::max() / 4;

// Parity-resolved distance tables for one homology cut, computed by BFS on
// the double cover (cut-crossing edges switch sheets).  Nodes are the checks;
// for planar geometry two extra virtual nodes follow: left boundary then
// right boundary.
struct CutCover {
  int n_nodes = 0;
  int left = -1, right = -1;              // virtual node ids, -1 on the torus
  std::vector<int32_t> d[2];              // flattened n_nodes * n_nodes

  int32_t at(int parity, int a, int b) const { return d[parity][a * n_nodes + b]; }
};

struct CoverTables {
  std::vector<CutCover> cuts;             // one per homology cut
};

CoverTables cover_distances(const CodeGeometry& g);

// Exact minimum-weight perfect matching on a dense graph (blossom algorithm,
// O(n^3)).  w must be symmetric; kWInf entries are forbidden pairs.  Throws
// std::runtime_error if no perfect matching avoids forbidden pairs.
class BlossomSolver {
 public:
  int64_t solve(const std::vector<std::vector<int64_t>>& w, std::vector<int>& mate);

 private:
  struct Edge {
    int u = 0, v = 0;
    int64_t w = 0;
  };
  int n_ = 0, nx_ = 0;
  std::vector<std::vector<Edge>> g_;
  std::vector<int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_, S_, vis_;
  std::vector<std::vector<int>> flower_, flower_from_;
  std::deque<int> q_;
  int visit_stamp_ = 0;

  int64_t e_delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2; }
  void update_slack(int u, int x);
  void set_slack(int x);
  void q_push(int x);
  void set_st(int x, int b);
  int get_pr(int b, int xr);
  void set_match(int u, int v);
  void augment(int u, int v);
  int get_lca(int u, int v);
  void add_blossom(int u, int lca, int v);
  void expand_blossom(int b);
  bool on_found_edge(const Edge& e);
  bool matching_round();
};

// Minimum weight perfect matching where each pair carries a cost per parity
// bit and the total parity is constrained.  Solved exactly by branch and
// bound on blossom relaxations; `budget` caps the number of relaxations.
struct ParityCosts {
  // cost[i][j][parity]; kWInf marks a disallowed option.
  std::vector<std::vector<std::array<int64_t, 2>>> cost;
};

struct ParityWeights {
  int64_t w[2] = {kWInf, kWInf};  // minimum total per overall parity
  bool timeout = false;
  int solves = 0;
};

ParityWeights parity_matching(const ParityCosts& pc, int budget);

// Unconstrained decoder matching over a defect set: pairwise weights are
// min(d_even, d_odd); planar defects may exit through the nearer boundary.
struct MwpmResult {
  int64_t weight = 0;
  // matched pairs; second = -1 denotes a boundary exit (planar)
  std::vector<std::pair<int, int>> pairs;
};

MwpmResult mwpm(const CodeGeometry& g, const CoverTables& ct,
                const std::vector<int>& defects, int cut_index = 0);

struct ClassWeights {
  int w_same = 0, w_opp = 0;
  bool timeout = false;
};

// Minimum correction weights per logical class for the given error pattern,
// resolved against cut `cut_index`.
ClassWeights class_resolved_weights(const CodeGeometry& g, const CoverTables& ct,
                                    const ErrorPattern& e, int cut_index,
                                    int node_budget = 4096);

// Same, but from a precomputed defect list and error class parity.
ClassWeights class_weights_from_defects(const CodeGeometry& g, const CoverTables& ct,
                                        const std::vector<int>& defects,
                                        int error_parity, int cut_index,
                                        int node_budget = 4096);

}  // namespace qecstat
