// Copyright 2026 The flipdist Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLIPDIST_WEIGHTS_FLOW_HPP_
#define FLIPDIST_WEIGHTS_FLOW_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/rational.hpp"

namespace flipdist::weights {

struct FlowArc {
  int from = 0;
  int to = 0;
  Rational capacity;
  bool directed = true;  // undirected arcs carry up to capacity either way
};

struct FlowNetwork {
  int source = 0;
  int sink = 1;
  std::vector<std::string> labels = {"s0", "t0"};
  std::vector<FlowArc> arcs;
  Rational source_value;

  int node_count() const { return static_cast<int>(labels.size()); }

  int add_node(std::string label) {
    labels.push_back(std::move(label));
    return node_count() - 1;
  }

  void add_arc(int from, int to, Rational capacity, bool directed) {
    if (from < 0 || to < 0 || from >= node_count() || to >= node_count() || from == to)
      throw InvalidArgument("bad flow arc endpoints");
    if (capacity < 0) throw InvalidArgument("negative capacity");
    arcs.push_back({from, to, std::move(capacity), directed});
  }
};

struct FlowResult {
  Rational value;
  std::vector<Rational> arc_flow;  // net flow along from->to, per arc
  std::vector<int> cut;            // nodes on the source side of a minimum cut
  Rational cut_capacity;

  bool saturates(const FlowNetwork& net) const { return value == net.source_value; }
};

// Edmonds-Karp on a dense residual matrix, exact.
inline FlowResult max_flow(const FlowNetwork& net) {
  const int m = net.node_count();
  std::vector<Rational> init(static_cast<std::size_t>(m) * m, 0);
  auto idx = [m](int u, int v) { return static_cast<std::size_t>(u) * m + v; };
  for (const FlowArc& a : net.arcs) {
    init[idx(a.from, a.to)] += a.capacity;
    if (!a.directed) init[idx(a.to, a.from)] += a.capacity;
  }
  std::vector<Rational> res = init;
  std::vector<std::vector<int>> adj(m);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (u != v && (init[idx(u, v)] > 0 || init[idx(v, u)] > 0)) adj[u].push_back(v);
    }
  }

  FlowResult out;
  out.value = 0;
  std::vector<int> parent(m);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[net.source] = net.source;
    std::vector<int> queue = {net.source};
    for (std::size_t q = 0; q < queue.size() && parent[net.sink] < 0; ++q) {
      const int u = queue[q];
      for (int v : adj[u]) {
        if (parent[v] < 0 && res[idx(u, v)] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[net.sink] < 0) break;
    Rational push = res[idx(parent[net.sink], net.sink)];
    for (int v = net.sink; v != net.source; v = parent[v]) push = std::min(push, res[idx(parent[v], v)]);
    for (int v = net.sink; v != net.source; v = parent[v]) {
      res[idx(parent[v], v)] -= push;
      res[idx(v, parent[v])] += push;
    }
    out.value += push;
  }

  // Source side of the cut: residual reachability.
  std::vector<char> side(m, 0);
  std::vector<int> queue = {net.source};
  side[net.source] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int v : adj[queue[q]]) {
      if (!side[v] && res[idx(queue[q], v)] > 0) {
        side[v] = 1;
        queue.push_back(v);
      }
    }
  }
  for (int v = 0; v < m; ++v) {
    if (side[v]) out.cut.push_back(v);
  }
  out.cut_capacity = 0;
  for (const FlowArc& a : net.arcs) {
    if (side[a.from] && !side[a.to]) out.cut_capacity += a.capacity;
    if (!a.directed && side[a.to] && !side[a.from]) out.cut_capacity += a.capacity;
  }

  // Split each node pair's net flow over its arcs, first come first filled.
  std::map<std::pair<int, int>, Rational> left;
  out.arc_flow.assign(net.arcs.size(), 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto [u, v] = std::minmax(net.arcs[i].from, net.arcs[i].to);
    if (left.count({u, v})) continue;
    Rational used = init[idx(u, v)] - res[idx(u, v)];
    used -= init[idx(v, u)] - res[idx(v, u)];
    left[{u, v}] = used / 2;
  }
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    Rational& rem = left[std::minmax(a.from, a.to)];
    // rem is stored along min->max.
    Rational along = a.from < a.to ? Rational(rem) : Rational(-rem);
    Rational f = std::min(along, a.capacity);
    if (!a.directed) f = std::max(f, Rational(-a.capacity));
    else f = std::max(f, Rational(0));
    out.arc_flow[i] = f;
    if (a.from < a.to) rem -= f;
    else rem += f;
  }
  return out;
}

// Exact conservation at every node other than source and sink, and
// capacity bounds on every arc.
inline bool is_feasible(const FlowNetwork& net, const FlowResult& r) {
  if (r.arc_flow.size() != net.arcs.size()) return false;
  std::vector<Rational> excess(net.node_count(), 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    const Rational& f = r.arc_flow[i];
    if (f > a.capacity) return false;
    if (a.directed ? f < 0 : f < -a.capacity) return false;
    excess[a.from] -= f;
    excess[a.to] += f;
  }
  for (int v = 0; v < net.node_count(); ++v) {
    if (v != net.source && v != net.sink && excess[v] != 0) return false;
  }
  return excess[net.sink] == r.value && excess[net.source] == -r.value;
}

// Graphviz export; arcs are labelled with capacity and, if given, flow.
inline std::string network_to_dot(const FlowNetwork& net, const FlowResult* r = nullptr) {
  std::string out = "digraph flow {\n";
  for (int v = 0; v < net.node_count(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + net.labels[v] + "\"];\n";
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    out += "  n" + std::to_string(a.from) + " -> n" + std::to_string(a.to) + " [label=\"" +
           to_string(a.capacity);
    if (r) out += " f=" + to_string(r->arc_flow[i]);
    out += "\"";
    if (!a.directed) out += ", dir=both";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace flipdist::weights

#endif  // FLIPDIST_WEIGHTS_FLOW_HPP_
