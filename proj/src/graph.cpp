#include "semacode/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>

#include "text_util.hpp"

namespace semacode {

AGraph::AGraph(Alphabet alphabet, std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> names)
    : alphabet_(std::move(alphabet)), n_(vertex_count), names_(std::move(names)) {
  if (names_.empty())
    for (std::size_t v = 0; v < n_; ++v) names_.push_back(std::to_string(v));
  if (names_.size() != n_) throw Error("vertex name count does not match the vertex count");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw Error("duplicate edge");
  succ_.assign(n_ * alphabet_.size(), {});
  for (const auto& e : edges) {
    if (e.from >= n_ || e.to >= n_) throw Error("edge endpoint out of range");
    if (e.label >= alphabet_.size()) throw Error("edge label outside the alphabet");
    succ_[e.from * alphabet_.size() + e.label].push_back(e.to);
  }
  edges_ = std::move(edges);
}

bool AGraph::has_edge(Vertex p, Letter a, Vertex q) const {
  const auto& s = successors(p, a);
  return std::binary_search(s.begin(), s.end(), q);
}

bool AGraph::is_deterministic() const {
  return std::all_of(succ_.begin(), succ_.end(), [](const auto& s) { return s.size() <= 1; });
}

bool AGraph::is_complete() const {
  return std::all_of(succ_.begin(), succ_.end(), [](const auto& s) { return !s.empty(); });
}

namespace {

std::vector<bool> reachable_from(const AGraph& g, const std::vector<Vertex>& start) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack(start);
  for (auto v : start) seen[v] = true;
  while (!stack.empty()) {
    Vertex p = stack.back();
    stack.pop_back();
    for (Letter a = 0; a < g.alphabet().size(); ++a)
      for (Vertex q : g.successors(p, a))
        if (!seen[q]) {
          seen[q] = true;
          stack.push_back(q);
        }
  }
  return seen;
}

// Nodes lying on a cycle of a graph given by adjacency lists (Tarjan).
std::vector<bool> on_cycle(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
  std::vector<bool> on_stack(n, false), cyc(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != SIZE_MAX) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.next < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.next++];
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
        } while (w != v);
        bool cyclic = members.size() > 1 || std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
        if (cyclic)
          for (auto m : members) cyc[m] = true;
      }
    }
  }
  return cyc;
}

std::vector<bool> forward_closure(const std::vector<std::vector<std::size_t>>& adj, const std::vector<bool>& start) {
  std::vector<bool> seen = start;
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < start.size(); ++v)
    if (start[v]) stack.push_back(v);
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

std::vector<std::vector<std::size_t>> adjacency(const AGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (const auto& e : g.edges()) adj[e.from].push_back(e.to);
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

void require_dfa(const AGraph& g) {
  if (!g.is_deterministic() || !g.is_complete()) throw Error("graph must be deterministic and complete");
}

std::vector<Vertex> all_vertices(const AGraph& g) {
  std::vector<Vertex> q(g.vertex_count());
  std::iota(q.begin(), q.end(), 0);
  return q;
}

std::vector<Vertex> step_image(const AGraph& g, const std::vector<Vertex>& from, Letter a) {
  std::vector<Vertex> out;
  for (Vertex p : from)
    for (Vertex q : g.successors(p, a)) out.push_back(q);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool AGraph::is_strongly_connected() const {
  if (n_ == 0) return true;
  auto seen = reachable_from(*this, {0});
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return false;
  // reverse reachability
  std::vector<std::vector<std::size_t>> radj(n_);
  for (const auto& e : edges_) radj[e.to].push_back(e.from);
  std::vector<bool> start(n_, false);
  start[0] = true;
  auto back = forward_closure(radj, start);
  return std::all_of(back.begin(), back.end(), [](bool b) { return b; });
}

Vertex AGraph::next(Vertex p, Letter a) const {
  const auto& s = successors(p, a);
  if (s.size() != 1) throw Error("graph is not deterministic and complete at vertex " + names_.at(p));
  return s[0];
}

Vertex AGraph::apply(Vertex p, const Word& u) const {
  for (Letter a : u) p = next(p, a);
  return p;
}

std::vector<Vertex> AGraph::image(const std::vector<Vertex>& from, const Word& u) const {
  std::vector<Vertex> cur = from;
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (Letter a : u) cur = step_image(*this, cur, a);
  return cur;
}

bool is_reset_word(const AGraph& g, const Word& u) {
  require_dfa(g);
  return g.image(all_vertices(g), u).size() == 1;
}

WordSet reset_words_upto(const AGraph& g, std::size_t cap) {
  require_dfa(g);
  const auto n = g.alphabet().size();
  // continuations of length <= remaining that make an image a singleton,
  // shared between prefixes with equal images
  std::map<std::pair<std::vector<Vertex>, std::size_t>, std::vector<Word>> memo;
  std::function<const std::vector<Word>&(const std::vector<Vertex>&, std::size_t)> cont =
      [&](const std::vector<Vertex>& img, std::size_t remaining) -> const std::vector<Word>& {
    auto key = std::make_pair(img, remaining);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    if (img.size() == 1) {
      for (auto& w : words_upto(n, remaining)) out.push_back(std::move(w));
    } else if (img.size() > 1 && remaining > 0) {
      for (Letter a = 0; a < n; ++a) {
        const auto& rest = cont(step_image(g, img, a), remaining - 1);
        for (const auto& w : rest) {
          Word aw{a};
          aw.insert(aw.end(), w.begin(), w.end());
          out.push_back(std::move(aw));
        }
      }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  };
  const auto& words = cont(all_vertices(g), cap);
  return WordSet(words.begin(), words.end());
}

bool is_k_reset(const AGraph& g, std::size_t k) {
  require_dfa(g);
  std::set<std::vector<Vertex>> level{all_vertices(g)};
  for (std::size_t i = 0; i < k; ++i) {
    std::set<std::vector<Vertex>> next;
    for (const auto& img : level)
      for (Letter a = 0; a < g.alphabet().size(); ++a) next.insert(step_image(g, img, a));
    level = std::move(next);
  }
  return std::all_of(level.begin(), level.end(), [](const auto& img) { return img.size() == 1; });
}

bool is_morphism(const AGraph& g, const AGraph& h, const std::vector<Vertex>& f) {
  if (!(g.alphabet() == h.alphabet()) || f.size() != g.vertex_count()) return false;
  for (auto x : f)
    if (x >= h.vertex_count()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return h.has_edge(f[e.from], e.label, f[e.to]); });
}

bool is_isomorphism(const AGraph& g, const AGraph& h, const std::vector<Vertex>& f) {
  if (g.vertex_count() != h.vertex_count() || g.edges().size() != h.edges().size()) return false;
  std::vector<bool> hit(h.vertex_count(), false);
  for (auto x : f) {
    if (x >= h.vertex_count() || hit[x]) return false;
    hit[x] = true;
  }
  return is_morphism(g, h, f);
}

std::optional<std::vector<Vertex>> find_morphism(const AGraph& g, const AGraph& h) {
  if (!(g.alphabet() == h.alphabet())) throw Error("graphs over different alphabets");
  const std::size_t n = g.vertex_count(), m = h.vertex_count();
  if (n == 0) return std::vector<Vertex>{};
  if (m == 0) return std::nullopt;
  const auto na = g.alphabet().size();
  // predecessors in h, for constraints on edges into an assigned vertex
  std::vector<std::vector<Vertex>> hpred(m * na);
  for (const auto& e : h.edges()) hpred[e.to * na + e.label].push_back(e.from);
  std::vector<std::vector<Edge>> out_edges(n), in_edges(n);
  for (const auto& e : g.edges()) {
    out_edges[e.from].push_back(e);
    in_edges[e.to].push_back(e);
  }
  // visit order: breadth-first over the undirected structure so that
  // constraints propagate from assigned neighbours
  std::vector<Vertex> order;
  std::vector<bool> queued(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (queued[s]) continue;
    std::vector<Vertex> queue{s};
    queued[s] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      order.push_back(v);
      auto visit = [&](Vertex w) {
        if (!queued[w]) {
          queued[w] = true;
          queue.push_back(w);
        }
      };
      for (const auto& e : out_edges[v]) visit(e.to);
      for (const auto& e : in_edges[v]) visit(e.from);
    }
  }
  using Domains = std::vector<std::vector<bool>>;
  std::vector<Vertex> f(n, SIZE_MAX);
  std::function<bool(std::size_t, Domains&)> solve = [&](std::size_t i, Domains& dom) -> bool {
    if (i == n) return true;
    const Vertex v = order[i];
    for (Vertex x = 0; x < m; ++x) {
      if (!dom[v][x]) continue;
      Domains next = dom;
      bool ok = true;
      auto restrict_to = [&](Vertex w, const std::vector<Vertex>& allowed) {
        std::vector<bool> keep(m, false);
        for (auto y : allowed) keep[y] = next[w][y];
        next[w] = keep;
        if (std::none_of(keep.begin(), keep.end(), [](bool b) { return b; })) ok = false;
      };
      next[v].assign(m, false);
      next[v][x] = true;
      for (const auto& e : out_edges[v]) {
        if (!ok) break;
        restrict_to(e.to, h.successors(x, e.label));
      }
      for (const auto& e : in_edges[v]) {
        if (!ok) break;
        restrict_to(e.from, hpred[x * na + e.label]);
      }
      if (!ok) continue;
      f[v] = x;
      if (solve(i + 1, next)) return true;
    }
    f[v] = SIZE_MAX;
    return false;
  };
  Domains dom(n, std::vector<bool>(m, true));
  if (!solve(0, dom)) return std::nullopt;
  return f;
}

std::vector<bool> left_infinite_vertices(const AGraph& g) {
  auto adj = adjacency(g);
  return forward_closure(adj, on_cycle(adj));
}

Relation mu_k(const AGraph& g, std::size_t k) {
  require_dfa(g);
  auto live = left_infinite_vertices(g);
  std::vector<Vertex> sources;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (live[v]) sources.push_back(v);
  std::set<std::vector<Vertex>> level{sources};
  for (std::size_t i = 0; i < k; ++i) {
    std::set<std::vector<Vertex>> next;
    for (const auto& img : level)
      for (Letter a = 0; a < g.alphabet().size(); ++a) next.insert(step_image(g, img, a));
    level = std::move(next);
  }
  Relation rel;
  for (const auto& img : level)
    for (auto p : img)
      for (auto q : img) rel.emplace(p, q);
  return rel;
}

Partition mu_closure(const AGraph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [p, q] : mu_k(g, k)) parent[find(p)] = find(q);
  Partition block(n);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t v = 0; v < n; ++v) block[v] = ids.emplace(find(v), ids.size()).first->second;
  return block;
}

MinusOmegaCertificates minus_omega_certificates(const AGraph& g) {
  MinusOmegaCertificates c;
  const std::size_t n = g.vertex_count();
  const auto na = g.alphabet().size();
  auto live = left_infinite_vertices(g);
  c.trim = std::all_of(live.begin(), live.end(), [](bool b) { return b; });

  // forward subset construction from Q
  c.complete = n > 0;
  std::set<std::vector<Vertex>> seen{all_vertices(g)};
  std::vector<std::vector<Vertex>> stack{all_vertices(g)};
  while (c.complete && !stack.empty()) {
    auto img = stack.back();
    stack.pop_back();
    for (Letter a = 0; a < na; ++a) {
      auto next = step_image(g, img, a);
      if (next.empty()) {
        c.complete = false;
        break;
      }
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }

  // product graph on all pairs, diagonal included
  std::vector<std::vector<std::size_t>> adj(n * n);
  for (Vertex p = 0; p < n; ++p)
    for (Vertex q = 0; q < n; ++q)
      for (Letter a = 0; a < na; ++a)
        for (Vertex p2 : g.successors(p, a))
          for (Vertex q2 : g.successors(q, a)) adj[p * n + q].push_back(p2 * n + q2);
  auto reach = forward_closure(adj, on_cycle(adj));
  c.deterministic = true;
  for (Vertex p = 0; p < n && c.deterministic; ++p)
    for (Vertex q = 0; q < n; ++q)
      if (p != q && reach[p * n + q]) {
        c.deterministic = false;
        break;
      }
  return c;
}

AGraph read_graph(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::optional<std::vector<std::string>> vertices;
  std::vector<std::array<std::string, 3>> raw_edges;
  std::vector<std::size_t> edge_lines;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) { return Error("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    auto [key, value] = detail::split_key(text);
    auto fields = detail::split_ws(value);
    if (key == "alphabet") {
      if (alphabet) throw fail("duplicate alphabet");
      alphabet = Alphabet(fields);
    } else if (key == "vertices") {
      if (vertices) throw fail("duplicate vertices");
      vertices = fields;
    } else if (key == "edge") {
      if (fields.size() != 3) throw fail("expected 'edge: p a q'");
      raw_edges.push_back({fields[0], fields[1], fields[2]});
      edge_lines.push_back(lineno);
    } else {
      throw fail(key.empty() ? "expected 'key: value'" : "unknown key '" + key + "'");
    }
  }
  if (!alphabet || !vertices) throw Error("graph file needs alphabet and vertices");
  std::map<std::string, Vertex> index;
  for (const auto& v : *vertices)
    if (!index.emplace(v, index.size()).second) throw Error("duplicate vertex '" + v + "'");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    lineno = edge_lines[i];
    const auto& [p, a, q] = raw_edges[i];
    auto ip = index.find(p), iq = index.find(q);
    if (ip == index.end() || iq == index.end()) throw fail("unknown vertex in edge");
    auto x = alphabet->find(a);
    if (!x) throw fail("unknown letter '" + a + "'");
    edges.push_back({ip->second, *x, iq->second});
  }
  return AGraph(*alphabet, vertices->size(), std::move(edges), *vertices);
}

void write_graph(std::ostream& out, const AGraph& g) {
  out << "alphabet:";
  for (const auto& a : g.alphabet().names()) out << ' ' << a;
  out << "\nvertices:";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << ' ' << g.name(v);
  out << '\n';
  for (const auto& e : g.edges())
    out << "edge: " << g.name(e.from) << ' ' << g.alphabet().name(e.label) << ' ' << g.name(e.to) << '\n';
}

}  // namespace semacode
