#include "forbconf/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "forbconf/matrix.hpp"

namespace forbconf {

SimpleGraph::SimpleGraph(int vertices) : n_(vertices) {
  if (vertices < 1) throw Error("bad_params", "graph needs at least one vertex");
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw Error("index_range", "edge endpoint out of range");
  if (u == v) throw Error("bad_params", "loops are not allowed");
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) throw Error("bad_params", "parallel edges are not allowed");
  edges_.insert(it, e);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> d(static_cast<size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    ++d[static_cast<size_t>(u - 1)];
    ++d[static_cast<size_t>(v - 1)];
  }
  return d;
}

bool SimpleGraph::is_forest() const {
  std::vector<int> parent(static_cast<size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : edges_) {
    const int a = find(u - 1), b = find(v - 1);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
  }
  return true;
}

namespace {

struct SubgraphSearch {
  const SimpleGraph& g;
  const SimpleGraph& h;
  std::vector<int> order;  // h vertices, 0-based, by decreasing degree
  std::vector<int> map;    // h vertex -> g vertex (0-based), -1 while free
  std::vector<bool> used;

  SubgraphSearch(const SimpleGraph& big, const SimpleGraph& small) : g(big), h(small) {
    order.resize(static_cast<size_t>(h.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    auto dh = h.degrees();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (dh[static_cast<size_t>(a)] != dh[static_cast<size_t>(b)]) return dh[static_cast<size_t>(a)] > dh[static_cast<size_t>(b)];
      return a < b;
    });
    map.assign(static_cast<size_t>(h.vertex_count()), -1);
    used.assign(static_cast<size_t>(g.vertex_count()), false);
  }

  bool rec(size_t depth) {
    if (depth == order.size()) return true;
    const int hv = order[depth];
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
      if (used[static_cast<size_t>(gv)]) continue;
      bool ok = true;
      for (size_t d = 0; d < depth; ++d) {
        const int hu = order[d];
        if (h.has_edge(hu + 1, hv + 1) && !g.has_edge(map[static_cast<size_t>(hu)] + 1, gv + 1)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[static_cast<size_t>(gv)] = true;
      map[static_cast<size_t>(hv)] = gv;
      if (rec(depth + 1)) return true;
      map[static_cast<size_t>(hv)] = -1;
      used[static_cast<size_t>(gv)] = false;
    }
    return false;
  }
};

}  // namespace

bool SimpleGraph::contains_subgraph(const SimpleGraph& h) const {
  if (h.vertex_count() > n_ || h.edge_count() > edge_count()) return false;
  // degree-sequence filter
  auto dg = degrees();
  auto dh = h.degrees();
  std::sort(dg.rbegin(), dg.rend());
  std::sort(dh.rbegin(), dh.rend());
  for (size_t i = 0; i < dh.size(); ++i)
    if (dh[i] > dg[i]) return false;
  SubgraphSearch s(*this, h);
  return s.rec(0);
}

std::optional<std::vector<int>> SimpleGraph::bipartition() const {
  std::vector<int> color(static_cast<size_t>(n_), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
  for (auto [u, v] : edges_) {
    adj[static_cast<size_t>(u - 1)].push_back(v - 1);
    adj[static_cast<size_t>(v - 1)].push_back(u - 1);
  }
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (color[static_cast<size_t>(s)] >= 0) continue;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (color[static_cast<size_t>(w)] < 0) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

SimpleGraph SimpleGraph::single_edge() {
  SimpleGraph g(2);
  g.add_edge(1, 2);
  return g;
}

SimpleGraph SimpleGraph::path(int vertices) {
  if (vertices < 2) throw Error("bad_params", "path needs at least 2 vertices");
  SimpleGraph g(vertices);
  for (int i = 1; i < vertices; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph SimpleGraph::cycle(int vertices) {
  if (vertices < 3) throw Error("bad_params", "cycle needs at least 3 vertices");
  SimpleGraph g(vertices);
  for (int i = 1; i < vertices; ++i) g.add_edge(i, i + 1);
  g.add_edge(vertices, 1);
  return g;
}

SimpleGraph SimpleGraph::complete(int vertices) {
  if (vertices < 1) throw Error("bad_params", "complete graph needs at least one vertex");
  SimpleGraph g(vertices);
  for (int i = 1; i <= vertices; ++i)
    for (int j = i + 1; j <= vertices; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::named(const std::string& name) {
  if (name == "edge") return single_edge();
  if (name == "triangle") return cycle(3);
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    int k = 0;
    try {
      k = std::stoi(name.substr(colon + 1));
    } catch (...) {
      throw Error("bad_params", "bad graph parameter in '" + name + "'");
    }
    if (head == "path") return path(k);
    if (head == "cycle") return cycle(k);
    if (head == "complete") return complete(k);
  }
  throw Error("bad_params", "unknown graph name '" + name + "'");
}

SimpleGraph SimpleGraph::parse_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(is, line)) {
      if (line.empty() || line[0] == '#') continue;
      return line;
    }
    throw Error("parse", "unexpected end of graph text");
  };
  std::istringstream header(next_line());
  int n = 0, e = 0;
  if (!(header >> n >> e)) throw Error("parse", "graph header must be \"n e\"");
  SimpleGraph g(n);
  for (int i = 0; i < e; ++i) {
    std::istringstream edge(next_line());
    int u = 0, v = 0;
    if (!(edge >> u >> v)) throw Error("parse", "graph edge line must be \"u v\"");
    g.add_edge(u, v);
  }
  return g;
}

std::string SimpleGraph::to_text() const {
  std::ostringstream os;
  os << n_ << ' ' << edge_count() << '\n';
  for (auto [u, v] : edges_) os << u << ' ' << v << '\n';
  return os.str();
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return SimpleGraph::parse_text(buf.str());
}

}  // namespace forbconf
