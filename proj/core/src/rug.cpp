#include "resdist/rug.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

#include "resdist/errors.hpp"

namespace resdist {

namespace {

using nlohmann::json;

std::string id_to_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("graph document: set element must be a string or an integer");
}

}  // namespace

GraphDocument parse_graph_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document: top level must be an object");
  if (!doc.contains("root") || !doc["root"].is_string())
    throw ParseError("graph document: missing string field 'root'");
  if (!doc.contains("resources") || !doc["resources"].is_array())
    throw ParseError("graph document: missing array field 'resources'");

  GraphDocument out;
  out.root = doc["root"].get<std::string>();
  for (const json& r : doc["resources"]) {
    if (!r.is_object() || !r.contains("name") || !r["name"].is_string())
      throw ParseError("graph document: each resource needs a string 'name'");
    ResourceNode node;
    node.name = r["name"].get<std::string>();
    if (r.contains("free_set") && !r["free_set"].is_null()) {
      if (!r["free_set"].is_array())
        throw ParseError("graph document: 'free_set' must be an array or null");
      std::set<std::string> ids;
      for (const json& v : r["free_set"]) ids.insert(id_to_string(v));
      node.free_set = std::move(ids);
    }
    out.resources.push_back(std::move(node));
  }
  if (doc.contains("inclusions")) {
    if (!doc["inclusions"].is_array())
      throw ParseError("graph document: 'inclusions' must be an array");
    for (const json& e : doc["inclusions"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw ParseError("graph document: each inclusion must be a [parent, child] pair");
      out.inclusions.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return out;
}

RugGraph RugGraph::build(const GraphDocument& doc) {
  RugGraph g;
  g.nodes_ = doc.resources;
  const int n = g.size();
  if (n == 0) throw ValidationError("graph document: no resources");

  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(g.nodes_[i].name, i).second)
      throw ValidationError("duplicate resource name '" + g.nodes_[i].name + "'");
  }
  const auto it_root = index.find(doc.root);
  if (it_root == index.end())
    throw ValidationError("root '" + doc.root + "' is not a declared resource");
  g.root_ = it_root->second;

  // Equal explicit free sets would make the two theories identical, which
  // is the degenerate two-way inclusion.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.nodes_[i].free_set && g.nodes_[j].free_set &&
          *g.nodes_[i].free_set == *g.nodes_[j].free_set)
        throw CycleError("nodes '" + g.nodes_[i].name + "' and '" + g.nodes_[j].name +
                         "' have equal free sets; the theories would coincide (cycle)");

  g.adj_.assign(n, std::vector<char>(n, 0));

  auto includes = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
  };

  // Derived edges: strict inclusion between explicit sets.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !g.nodes_[i].free_set || !g.nodes_[j].free_set) continue;
      if (includes(*g.nodes_[i].free_set, *g.nodes_[j].free_set)) g.adj_[i][j] = 1;
    }

  // Declared edges, validated against explicit sets when both exist.
  for (const auto& [parent, child] : doc.inclusions) {
    const auto pi = index.find(parent);
    const auto ci = index.find(child);
    if (pi == index.end() || ci == index.end())
      throw ValidationError("inclusion references unknown resource '" +
                            (pi == index.end() ? parent : child) + "'");
    if (pi->second == ci->second)
      throw CycleError("self inclusion on '" + parent + "'");
    const auto& ps = g.nodes_[pi->second].free_set;
    const auto& cs = g.nodes_[ci->second].free_set;
    if (ps && cs && !includes(*ps, *cs))
      throw ValidationError("declared inclusion '" + parent + "' -> '" + child +
                            "' contradicts the explicit free sets");
    g.adj_[pi->second][ci->second] = 1;
  }

  // Transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!g.adj_[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (g.adj_[k][j]) g.adj_[i][j] = 1;
    }

  for (int i = 0; i < n; ++i) {
    if (g.adj_[i][i])
      throw CycleError("cycle through '" + g.nodes_[i].name + "'");
    for (int j = i + 1; j < n; ++j)
      if (g.adj_[i][j] && g.adj_[j][i])
        throw CycleError("cycle between '" + g.nodes_[i].name + "' and '" +
                         g.nodes_[j].name + "'");
  }
  return g;
}

RugGraph RugGraph::from_edges(std::vector<std::string> names,
                              const std::vector<std::pair<int, int>>& edges, int root) {
  RugGraph g;
  const int n = static_cast<int>(names.size());
  if (root < 0 || root >= n) throw ValidationError("from_edges: root out of range");
  g.nodes_.reserve(names.size());
  for (auto& nm : names) g.nodes_.push_back(ResourceNode{std::move(nm), std::nullopt});
  g.adj_.assign(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError("from_edges: edge endpoint out of range");
    g.adj_[a][b] = 1;
  }
  g.root_ = root;
  return g;
}

std::vector<std::pair<int, int>> RugGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (adj_[i][j]) out.emplace_back(i, j);
  return out;
}

int RugGraph::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (nodes_[i].name == name) return i;
  return -1;
}

std::vector<std::optional<int>> levels(const RugGraph& g) {
  const int n = g.size();
  // Kahn topological order; build ignores cyclic graphs, but from_edges
  // graphs may be arbitrary, so bail out if no order exists.
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.edge(i, j)) ++indeg[j];
  std::deque<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::vector<int> topo;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    topo.push_back(v);
    for (int j = 0; j < n; ++j)
      if (g.edge(v, j) && --indeg[j] == 0) ready.push_back(j);
  }
  if (static_cast<int>(topo.size()) != n) throw CycleError("levels: graph is not acyclic");

  std::vector<std::optional<int>> level(n);
  level[g.root()] = 0;
  for (int v : topo) {
    if (!level[v]) continue;
    for (int j = 0; j < n; ++j)
      if (g.edge(v, j) && (!level[j] || *level[j] < *level[v] + 1)) level[j] = *level[v] + 1;
  }
  return level;
}

namespace {

// BFS from `from` to `to` avoiding `blocked`; returns the path including the
// endpoints, or empty when unreachable.
std::vector<int> bfs_path(const std::vector<std::vector<char>>& und, int from, int to,
                          const std::vector<char>& blocked) {
  const int n = static_cast<int>(und.size());
  std::vector<int> prev(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int j = 0; j < n; ++j) {
      if (!und[v][j] || seen[j] || blocked[j]) continue;
      seen[j] = 1;
      prev[j] = v;
      queue.push_back(j);
    }
  }
  if (!seen[to]) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Chordless cycle through v and its nonadjacent neighbors u, z, if one
// exists: v-u-...-z-v with the connecting path avoiding N[v] \ {u, z}.
std::vector<int> cycle_witness(const std::vector<std::vector<char>>& und, int v, int u, int z) {
  const int n = static_cast<int>(und.size());
  std::vector<char> blocked(n, 0);
  blocked[v] = 1;
  for (int j = 0; j < n; ++j)
    if (und[v][j] && j != u && j != z) blocked[j] = 1;
  blocked[u] = 0;
  blocked[z] = 0;
  const std::vector<int> path = bfs_path(und, u, z, blocked);
  if (path.empty()) return {};
  std::vector<int> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

}  // namespace

ChordalityResult is_chordal_urug(const RugGraph& g) {
  const int n = g.size();
  std::vector<std::vector<char>> und(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (g.edge(i, j) || g.edge(j, i))) und[i][j] = und[j][i] = 1;

  ChordalityResult res;
  if (n == 0) {
    res.chordal = true;
    return res;
  }

  // Maximum cardinality search; ties broken by name for determinism.
  std::vector<int> weight(n, 0), pos(n, -1), order(n, -1);
  std::vector<char> numbered(n, 0);
  for (int k = n - 1; k >= 0; --k) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (best == -1 || weight[v] > weight[best] ||
          (weight[v] == weight[best] && g.name(v) < g.name(best)))
        best = v;
    }
    order[k] = best;
    pos[best] = k;
    numbered[best] = 1;
    for (int u = 0; u < n; ++u)
      if (und[best][u] && !numbered[u]) ++weight[u];
  }

  // Perfect elimination check of `order`: the later neighbors of each vertex
  // must be contained in the closed neighborhood of the earliest of them.
  for (int k = 0; k < n; ++k) {
    const int v = order[k];
    int follower = -1;
    for (int u = 0; u < n; ++u)
      if (und[v][u] && pos[u] > k && (follower == -1 || pos[u] < pos[follower])) follower = u;
    if (follower == -1) continue;
    for (int z = 0; z < n; ++z) {
      if (!und[v][z] || pos[z] <= k || z == follower || und[follower][z]) continue;
      // v has later neighbors `follower` and z that are not adjacent:
      // the graph is not chordal, extract a witness cycle.
      std::vector<int> cycle = cycle_witness(und, v, follower, z);
      if (cycle.empty()) {
        for (int v2 = 0; v2 < n && cycle.empty(); ++v2)
          for (int a = 0; a < n && cycle.empty(); ++a)
            for (int b = a + 1; b < n && cycle.empty(); ++b) {
              if (v2 == a || v2 == b || !und[v2][a] || !und[v2][b] || und[a][b]) continue;
              cycle = cycle_witness(und, v2, a, b);
            }
      }
      res.chordal = false;
      res.chordless_cycle = std::move(cycle);
      return res;
    }
  }

  res.chordal = true;
  res.elimination_order.assign(order.begin(), order.end());
  return res;
}

std::vector<std::vector<int>> enumerate_paths(const RugGraph& g, int max_len) {
  if (max_len <= 0) throw DomainError("enumerate_paths: max_len must be >= 1");
  const int n = g.size();

  // children in lexicographic name order
  std::vector<std::vector<int>> children(n);
  std::vector<int> by_name(n);
  for (int i = 0; i < n; ++i) by_name[i] = i;
  std::sort(by_name.begin(), by_name.end(),
            [&](int a, int b) { return g.name(a) < g.name(b); });
  for (int i = 0; i < n; ++i)
    for (int j : by_name)
      if (g.edge(i, j)) children[i].push_back(j);

  std::vector<std::vector<int>> out;
  std::vector<int> path{g.root()};
  std::vector<char> on_path(n, 0);
  on_path[g.root()] = 1;

  auto dfs = [&](auto&& self, int v) -> void {
    out.push_back(path);
    if (static_cast<int>(path.size()) >= max_len) return;
    for (int c : children[v]) {
      if (on_path[c]) continue;  // guards from_edges graphs with cycles
      path.push_back(c);
      on_path[c] = 1;
      self(self, c);
      path.pop_back();
      on_path[c] = 0;
    }
  };
  dfs(dfs, g.root());
  return out;
}

}  // namespace resdist
