#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "semacode/graph.hpp"

using namespace semacode;
using oracle::from;

namespace {

const Alphabet kA = Alphabet::binary();

AGraph de_bruijn(std::size_t k) {
  std::vector<Edge> edges;
  std::vector<std::string> names;
  const std::size_t n = std::size_t{1} << k;
  for (std::size_t v = 0; v < n; ++v) {
    std::string name;
    for (std::size_t i = k; i-- > 0;) name += (v >> i) & 1 ? 'b' : 'a';
    names.push_back(name);
    for (Letter a = 0; a < 2; ++a) edges.push_back({v, a, ((v << 1) | a) & (n - 1)});
  }
  return AGraph(kA, n, edges, names);
}

AGraph random_graph(std::mt19937& rng, std::size_t n, double density, bool deterministic_complete) {
  std::vector<Edge> edges;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::bernoulli_distribution keep(density);
  for (Vertex p = 0; p < n; ++p)
    for (Letter a = 0; a < 2; ++a) {
      if (deterministic_complete) {
        edges.push_back({p, a, pick(rng)});
        continue;
      }
      for (Vertex q = 0; q < n; ++q)
        if (keep(rng)) edges.push_back({p, a, q});
    }
  return AGraph(kA, n, edges);
}

using VSet = std::set<Vertex>;

VSet step(const AGraph& g, const VSet& s, Letter a) {
  VSet out;
  for (const auto& e : g.edges())
    if (e.label == a && s.count(e.from)) out.insert(e.to);
  return out;
}

VSet run(const AGraph& g, VSet s, const Word& u) {
  for (Letter a : u) s = step(g, s, a);
  return s;
}

VSet all_vertices(const AGraph& g) {
  VSet s;
  for (Vertex v = 0; v < g.vertex_count(); ++v) s.insert(v);
  return s;
}

// v ends a left-infinite path iff it ends a path of length n (pigeonhole).
VSet naive_left_infinite(const AGraph& g) {
  VSet out;
  for (const auto& u : oracle::all_words(2, g.vertex_count()))
    if (u.size() == g.vertex_count())
      for (Vertex v : run(g, all_vertices(g), u)) out.insert(v);
  return out;
}

Relation naive_mu(const AGraph& g, std::size_t k) {
  const VSet li = naive_left_infinite(g);
  Relation out;
  for (const auto& u : oracle::all_words(2, k)) {
    if (u.size() != k) continue;
    const VSet ends = run(g, li, u);
    for (Vertex p : ends)
      for (Vertex q : ends) out.emplace(p, q);
  }
  return out;
}

bool naive_deterministic(const AGraph& g) {
  const std::size_t n = g.vertex_count();
  std::set<std::pair<Vertex, Vertex>> all;
  for (Vertex p = 0; p < n; ++p)
    for (Vertex q = 0; q < n; ++q) all.emplace(p, q);
  for (const auto& u : oracle::all_words(2, n * n)) {
    if (u.size() != n * n) continue;
    auto s = all;
    for (Letter a : u) {
      std::set<std::pair<Vertex, Vertex>> next;
      for (const auto& [p, q] : s)
        for (Vertex p2 : g.successors(p, a))
          for (Vertex q2 : g.successors(q, a)) next.emplace(p2, q2);
      s = std::move(next);
    }
    for (const auto& [p, q] : s)
      if (p != q) return false;
  }
  return true;
}

bool naive_complete(const AGraph& g) {
  const std::size_t bound = std::size_t{1} << g.vertex_count();
  for (const auto& u : oracle::all_words(2, bound))
    if (run(g, all_vertices(g), u).empty()) return false;
  return true;
}

}  // namespace

TEST(Graph, DeBruijnIsKReset) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const AGraph g = de_bruijn(k);
    EXPECT_TRUE(g.is_deterministic());
    EXPECT_TRUE(g.is_complete());
    EXPECT_TRUE(g.is_strongly_connected());
    EXPECT_TRUE(is_k_reset(g, k));
    EXPECT_FALSE(is_k_reset(g, k - 1));
    const auto cert = minus_omega_certificates(g);
    EXPECT_TRUE(cert.reset_graph());
    // μ^(k) is the identity
    Relation id;
    for (Vertex v = 0; v < g.vertex_count(); ++v) id.emplace(v, v);
    EXPECT_EQ(mu_k(g, k), id);
    // one step shorter, vertices sharing their last k - 1 letters are merged
    Partition coarse(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) coarse[v] = v % (g.vertex_count() / 2);
    EXPECT_EQ(mu_closure(g, k - 1), coarse);
  }
}

TEST(Graph, ResetWordsMatchBruteForce) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const AGraph g = random_graph(rng, 4, 0, true);
    WordSet expect;
    for (const auto& u : oracle::all_words(2, 5))
      if (run(g, all_vertices(g), u).size() == 1) expect.insert(u);
    ASSERT_EQ(reset_words_upto(g, 5), expect);
    for (const auto& u : oracle::all_words(2, 4)) ASSERT_EQ(is_reset_word(g, u), expect.count(u) == 1);
  }
}

TEST(Graph, MuMatchesBruteForce) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const AGraph h = random_graph(rng, 4, 0.3, false);
    const VSet li = naive_left_infinite(h);
    const auto got = left_infinite_vertices(h);
    for (Vertex v = 0; v < h.vertex_count(); ++v) ASSERT_EQ(got[v], li.count(v) == 1);
    const AGraph g = random_graph(rng, 5, 0, true);
    for (std::size_t k = 0; k <= 3; ++k) ASSERT_EQ(mu_k(g, k), naive_mu(g, k)) << trial << " k=" << k;
  }
}

TEST(Graph, CertificatesMatchBruteForce) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const AGraph g = random_graph(rng, 3, trial % 2 ? 0.25 : 0.45, false);
    const auto cert = minus_omega_certificates(g);
    ASSERT_EQ(cert.trim, naive_left_infinite(g).size() == g.vertex_count()) << trial;
    ASSERT_EQ(cert.complete, naive_complete(g)) << trial;
    ASSERT_EQ(cert.deterministic, naive_deterministic(g)) << trial;
  }
}

TEST(Graph, Morphisms) {
  const AGraph g = de_bruijn(2);
  const AGraph point(kA, 1, {{0, 0, 0}, {0, 1, 0}});
  const auto f = find_morphism(g, point);
  ASSERT_TRUE(f);
  EXPECT_TRUE(is_morphism(g, point, *f));
  EXPECT_FALSE(is_isomorphism(g, point, *f));
  const AGraph swap(kA, 2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  EXPECT_EQ(find_morphism(point, swap), std::nullopt);
  // the order-2 graph maps onto the order-1 graph by dropping the first letter
  const auto h = find_morphism(g, de_bruijn(1));
  ASSERT_TRUE(h);
  EXPECT_TRUE(is_morphism(g, de_bruijn(1), *h));
  std::vector<Vertex> ident{0, 1, 2, 3};
  EXPECT_TRUE(is_isomorphism(g, g, ident));
}

TEST(Graph, PermutationGraphHasNoResets) {
  std::ifstream in(SEMACODE_TEST_DATA "/swap.graph");
  const AGraph g = read_graph(in);
  EXPECT_TRUE(reset_words_upto(g, 6).empty());
  const auto cert = minus_omega_certificates(g);
  EXPECT_TRUE(cert.trim);
  EXPECT_TRUE(cert.complete);
  EXPECT_FALSE(cert.deterministic);
}

TEST(GraphIo, RoundTripAndErrors) {
  const AGraph g = de_bruijn(2);
  std::stringstream ss;
  write_graph(ss, g);
  const AGraph back = read_graph(ss);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.name(2), "ba");
  std::ifstream bad(SEMACODE_TEST_DATA "/bad.graph");
  try {
    read_graph(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::stringstream no_vertices("alphabet: a b\n");
  EXPECT_THROW(read_graph(no_vertices), Error);
}
