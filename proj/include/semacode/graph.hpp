#pragma once

#include <iosfwd>
#include <set>
#include <utility>

#include "semacode/word.hpp"

namespace semacode {

using Vertex = std::size_t;
using Relation = std::set<std::pair<Vertex, Vertex>>;
/// Block index per vertex; blocks numbered by first occurrence.
using Partition = std::vector<std::size_t>;

struct Edge {
  Vertex from = 0;
  Letter label = 0;
  Vertex to = 0;
  auto operator<=>(const Edge&) const = default;
};

/// A finite edge-labelled graph (Q, E ⊆ Q × A × Q).
class AGraph {
 public:
  AGraph(Alphabet alphabet, std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> names = {});

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name(Vertex v) const { return names_.at(v); }
  /// Sorted targets of a-edges leaving p.
  const std::vector<Vertex>& successors(Vertex p, Letter a) const { return succ_[p * alphabet_.size() + a]; }
  bool has_edge(Vertex p, Letter a, Vertex q) const;

  bool is_deterministic() const;
  bool is_complete() const;
  bool is_strongly_connected() const;

  /// p·a; requires a deterministic complete graph.
  Vertex next(Vertex p, Letter a) const;
  Vertex apply(Vertex p, const Word& u) const;
  /// Image of a vertex set under u (works for any graph).
  std::vector<Vertex> image(const std::vector<Vertex>& from, const Word& u) const;

 private:
  Alphabet alphabet_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vertex>> succ_;
};

bool is_reset_word(const AGraph& g, const Word& u);
/// All reset words of length <= cap.
WordSet reset_words_upto(const AGraph& g, std::size_t cap);
/// Every word of length k is a reset word.
bool is_k_reset(const AGraph& g, std::size_t k);

/// A morphism f with (p,a,q) ∈ E ⇒ (f(p),a,f(q)) ∈ E', if one exists.
std::optional<std::vector<Vertex>> find_morphism(const AGraph& g, const AGraph& h);
bool is_morphism(const AGraph& g, const AGraph& h, const std::vector<Vertex>& f);
bool is_isomorphism(const AGraph& g, const AGraph& h, const std::vector<Vertex>& f);

/// Vertices that end some left-infinite path, i.e. are reachable from a cycle.
std::vector<bool> left_infinite_vertices(const AGraph& g);

/// p μ^(k) q iff some u ∈ A^k ends left-infinite paths at both p and q.
Relation mu_k(const AGraph& g, std::size_t k);
/// Reflexive-transitive closure of μ^(k) as a partition.
Partition mu_closure(const AGraph& g, std::size_t k);

struct MinusOmegaCertificates {
  bool trim = false;
  bool deterministic = false;
  bool complete = false;
  bool reset_graph() const { return trim && deterministic && complete; }
};

/// Exact decisions for finite graphs. Trim: every vertex is reachable from a
/// cycle. Complete: no word empties the forward image of Q (by König's
/// lemma this is the same as every left-infinite word labelling a path).
/// Deterministic: in the product graph no pair (p, q) with p ≠ q is
/// reachable from a cycle.
MinusOmegaCertificates minus_omega_certificates(const AGraph& g);

/// Graph file: "alphabet: a b", "vertices: 0 1 2", then "edge: 0 a 1" lines.
AGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const AGraph& g);

}  // namespace semacode
