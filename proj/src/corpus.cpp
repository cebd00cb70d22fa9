#include "mcover/corpus.hpp"

#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mcover/constructions.hpp"
#include "mcover/ears.hpp"
#include "mcover/families.hpp"
#include "mcover/feasibility.hpp"
#include "mcover/gf2.hpp"
#include "mcover/io.hpp"

namespace mcover {

namespace {

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.push_back({i, j});
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

}  // namespace

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string family, Graph g) {
    out.push_back(CorpusEntry{std::move(name), std::move(family), std::move(g)});
  };
  for (int n = 4; n <= 12; n += 2) add("C" + std::to_string(n), "cycle", cycle_graph(n));
  for (int a = 1; a <= 4; ++a) add("K" + std::to_string(a) + "," + std::to_string(a), "complete-bipartite", complete_bipartite(a, a));
  add("cube3", "hypercube", hypercube(3));
  add("K4", "complete", complete_graph(4));
  add("K6", "complete", complete_graph(6));
  add("petersen", "petersen", petersen());
  add("Q3", "qr", build_qr(3).graph);
  add("Q4", "qr", build_qr(4).graph);
  if (spec.constructions) {
    auto k4 = build_complete(4);
    add("splice-K4-K4", "splice", splice(k4, {0}, k4, {0}).graph);
    add("cycle-3xQ4", "cycle", build_cycle_cl_of_qr(3, 4).graph);
    add("star-3xK4", "star", build_star_xs({StarPart{k4}, StarPart{k4}, StarPart{k4}}).graph);
  }
  std::mt19937_64 rng(spec.seed);
  const int orders = std::max(0, (spec.random_max_n - 2) / 2);
  for (int i = 0; i < spec.random_count && orders > 0; ++i) {
    const int n = 4 + 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(orders));
    const double p = 0.25 + 0.35 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    while (true) {
      Graph g = random_connected(rng, n, p);
      if (is_matching_covered(g).yes()) {
        add("random-" + std::to_string(i) + "-n" + std::to_string(n), "random", std::move(g));
        break;
      }
    }
  }
  return out;
}

std::string corpus_listing(const std::vector<CorpusEntry>& corpus) {
  std::ostringstream out;
  for (const auto& c : corpus) {
    out << c.name << ' ' << c.graph.num_vertices() << ' ' << c.graph.num_edges() << ' ';
    for (const auto& e : c.graph.edges()) out << e.u << '-' << e.v << ' ';
    out << '\n';
  }
  return out.str();
}

bool SuiteResult::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sep-invariance", "bipartite-theorem", "oracle-nf",
                                                 "ear-classify",   "ear-lemmas",        "constructions"};
  return names;
}

namespace {

using Check = std::function<PropertyResult(const CorpusEntry&, std::mt19937_64&)>;

void over_corpus(SuiteResult& out, const SuiteOptions& o, const std::function<bool(const CorpusEntry&)>& keep,
                 const Check& check) {
  CorpusSpec spec;
  spec.seed = o.seed;
  spec.random_max_n = std::min(10, o.max_n);
  const auto corpus = build_corpus(spec);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    if (c.graph.num_vertices() > o.max_n || !keep(c)) {
      ++out.skipped;
      continue;
    }
    std::mt19937_64 rng(o.seed * 0x9E3779B97F4A7C15ULL + i);
    try {
      out.results.push_back(check(c, rng));
    } catch (const Error& e) {
      out.results.push_back(PropertyResult{"", c.name, false, std::string(to_string(e.code())) + ": " + e.what()});
    }
  }
}

EdgeSet random_edges(std::mt19937_64& rng, int m) {
  EdgeSet x(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e)
    if (rng() & 1) x.set(e);
  return x;
}

VertexSet random_vertices(std::mt19937_64& rng, int n) {
  VertexSet u(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (rng() & 1) u.set(v);
  return u;
}

SuiteResult sep_invariance(const SuiteOptions& o) {
  SuiteResult out{"sep-invariance", {}, 0};
  over_corpus(out, o, [](const CorpusEntry&) { return true; }, [&](const CorpusEntry& c, std::mt19937_64& rng) {
    const Graph& g = c.graph;
    auto spaces = parity_spaces(g, o.cap);
    PropertyResult r{"switching-invariance", c.name, true, std::to_string(o.trials) + " trials"};
    for (int t = 0; t < o.trials; ++t) {
      const EdgeSet x = random_edges(rng, g.num_edges());
      const EdgeSet y = x ^ boundary(g, random_vertices(rng, g.num_vertices()));
      if (is_feasible(spaces, x) != is_feasible(spaces, y)) {
        r.passed = false;
        r.detail = "trial " + std::to_string(t) + " changes feasibility";
        break;
      }
    }
    return r;
  });
  return out;
}

SuiteResult bipartite_theorem(const SuiteOptions& o) {
  SuiteResult out{"bipartite-theorem", {}, 0};
  over_corpus(out, o, [](const CorpusEntry&) { return true; }, [&](const CorpusEntry& c, std::mt19937_64&) {
    const bool bip = is_bipartite(c.graph).bipartite;
    auto spaces = parity_spaces(c.graph, o.cap);
    if (!spaces.complete()) return PropertyResult{"nF-equals-cut-iff-bipartite", c.name, false, "enumeration incomplete"};
    const bool equal = subspace_equal(spaces.non_feasible, spaces.cuts);
    return PropertyResult{"nF-equals-cut-iff-bipartite", c.name, equal == bip,
                          std::string(bip ? "bipartite" : "non-bipartite") + ", nF " + (equal ? "=" : "!=") + " cut"};
  });
  return out;
}

// Perfect matchings as masks, by trying every n/2-subset of edges.
std::vector<std::uint64_t> matchings_by_subsets(const Graph& g) {
  std::vector<std::uint64_t> out;
  const int m = g.num_edges(), half = g.num_vertices() / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != half) continue;
    std::uint64_t covered = 0;
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      const auto& ed = g.edge(e);
      const std::uint64_t bits = (std::uint64_t{1} << ed.u) | (std::uint64_t{1} << ed.v);
      if (covered & bits) ok = false;
      covered |= bits;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

std::uint64_t mask_of(const EdgeSet& s) {
  std::uint64_t x = 0;
  s.for_each([&](int e) { x |= std::uint64_t{1} << e; });
  return x;
}

SuiteResult oracle_nf(const SuiteOptions& o) {
  SuiteResult out{"oracle-nf", {}, 0};
  over_corpus(
      out, o, [&](const CorpusEntry& c) { return c.graph.num_edges() <= o.max_m_oracle; },
      [&](const CorpusEntry& c, std::mt19937_64&) {
        const Graph& g = c.graph;
        const int m = g.num_edges();
        const auto pms = matchings_by_subsets(g);
        std::set<std::uint64_t> oracle;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
          const int parity = std::popcount(pms.front() & x) & 1;
          bool constant = true;
          for (auto pm : pms)
            if ((std::popcount(pm & x) & 1) != parity) {
              constant = false;
              break;
            }
          if (constant) oracle.insert(x);
        }
        std::set<std::uint64_t> got;
        for (const auto& x : enumerate_nf(g, m, o.cap)) got.insert(mask_of(x));
        const bool same = got == oracle;
        return PropertyResult{"enumerate-nf-equals-brute-force", c.name, same,
                              std::to_string(oracle.size()) + " non-feasible sets of " + std::to_string(std::uint64_t{1} << m) +
                                  (same ? "" : ", library found " + std::to_string(got.size()))};
      });
  return out;
}

SuiteResult ear_classify(const SuiteOptions& o) {
  SuiteResult out{"ear-classify", {}, 0};
  over_corpus(out, o, [](const CorpusEntry&) { return true; }, [&](const CorpusEntry& c, std::mt19937_64&) {
    const Graph& g = c.graph;
    auto d = find_ear_decomposition(g);
    auto check = validate_decomposition(g, d);
    if (!check.valid) return PropertyResult{"decompose-classify", c.name, false, "invalid decomposition: " + check.clause};
    const bool bip = is_bipartite(g).bipartite;
    auto single = find_single_ear_decomposition(g);
    const bool single_ok = single.decomposition.has_value() && single.decomposition->all_single() &&
                           validate_decomposition(g, *single.decomposition).valid;
    if (single_ok != bip)
      return PropertyResult{"decompose-classify", c.name, false,
                            bip ? "bipartite but no single-ear decomposition" : "single-ear decomposition of a non-bipartite graph"};
    ClassifyOptions copts;
    copts.cap = o.cap;
    auto verdict = classify_nf_star(g, d, copts);
    auto report = nf_star_report(g, o.cap);
    return PropertyResult{"decompose-classify", c.name, verdict.empty == report.empty,
                          std::string("rule ") + to_string(verdict.rule) + ", r=" + std::to_string(verdict.r) +
                              ", eps=" + std::to_string(verdict.epsilon_sum) + ", nF* " + (report.empty ? "empty" : "non-empty")};
  });
  return out;
}

SuiteResult ear_lemmas(const SuiteOptions& o) {
  SuiteResult out{"ear-lemmas", {}, 0};
  over_corpus(
      out, o, [](const CorpusEntry& c) { return c.graph.num_edges() >= 2; },
      [&](const CorpusEntry& c, std::mt19937_64&) {
        const Graph& g = c.graph;
        auto spaces = parity_spaces(g, o.cap);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
          EdgeSet x = g.no_edges();
          x.set(e);
          if (!is_feasible(spaces, x)) return PropertyResult{"singletons-feasible", c.name, false, "edge " + std::to_string(e)};
          if (!is_feasible(spaces, x.complement()))
            return PropertyResult{"singletons-feasible", c.name, false, "complement of edge " + std::to_string(e)};
        }
        // A single ear added to a graph with empty nF* keeps it empty.
        auto d = find_ear_decomposition(g);
        bool prev_empty = true;  // K2
        int steps = 0;
        for (int i = 1; i <= d.r(); ++i) {
          auto pre = prefix_decomposition(g, d, i);
          const bool empty = nf_star_report(pre.subgraph.graph, o.cap).empty;
          if (!d.steps[i - 1].ear.is_double() && prev_empty && !empty)
            return PropertyResult{"singletons-feasible+single-ear-step", c.name, false,
                                  "step " + std::to_string(i) + " creates nF* after an empty prefix"};
          if (!d.steps[i - 1].ear.is_double()) ++steps;
          prev_empty = empty;
        }
        return PropertyResult{"singletons-feasible+single-ear-step", c.name, true,
                              std::to_string(g.num_edges()) + " singletons, " + std::to_string(steps) + " single-ear steps"};
      });
  return out;
}

SuiteResult constructions_suite(const SuiteOptions& o) {
  SuiteResult out{"constructions", {}, 0};
  auto k4 = build_complete(4);
  auto q3 = build_qr(3);
  auto q4 = build_qr(4);
  auto k44 = build_complete_bipartite(4);
  std::vector<std::pair<std::string, std::function<ConstructionCertificate()>>> items = {
      {"qr-3", [] { return build_qr(3); }},
      {"qr-4", [] { return build_qr(4); }},
      {"petersen", [] { return build_petersen(); }},
      {"complete-6", [] { return build_complete(6); }},
      {"splice-K4-K4", [&] { return splice(k4, {0}, k4, {0}); }},
      {"splice-Q3-Q3", [&] { return splice(q3, {q3.special_edges.at("a1a2")}, q3, {q3.special_edges.at("a1a2")}); }},
      {"chain-K4-K4",
       [&] {
         EdgeSet s = k4.graph.edge_set({0, 5});
         return build_chain({ChainPart{k4, {}, {0}, s, std::nullopt}, ChainPart{k4, {0}, {}, s, std::nullopt}});
       }},
      {"cycle-3xQ4", [] { return build_cycle_cl_of_qr(3, 4); }},
      {"star-3xK4", [&] { return build_star_xs({StarPart{k4}, StarPart{k4}, StarPart{k4}}); }},
      {"star-iterated",
       [&] {
         auto inner = build_star_xs({StarPart{k4}, StarPart{k4}, StarPart{k4}});
         return build_star_xs({StarPart{inner}, StarPart{k4}, StarPart{k4}});
       }},
      {"star-Q4-Q4-K44-K44", [&] { return build_star_xs({StarPart{q4}, StarPart{q4}, StarPart{k44}, StarPart{k44}}); }},
  };
  for (auto& [name, make] : items) {
    try {
      auto cert = make();
      if (cert.graph.num_vertices() > std::max(o.max_n, 40)) {
        ++out.skipped;
        continue;
      }
      auto s = verify_certificate(cert, o.cap);
      std::string detail = std::to_string(s.verified) + " verified, " + std::to_string(s.failed) + " failed, " +
                           std::to_string(s.unverified) + " unverified";
      for (const auto& cl : cert.claims)
        if (cl.status != ClaimStatus::kVerified) detail += "; " + std::string(to_string(cl.kind)) + ": " + cl.detail;
      out.results.push_back(PropertyResult{"certificate-verifies", name, s.all_verified(), detail});
    } catch (const Error& e) {
      out.results.push_back(PropertyResult{"certificate-verifies", name, false, e.what()});
    }
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "sep-invariance") return sep_invariance(options);
  if (name == "bipartite-theorem") return bipartite_theorem(options);
  if (name == "oracle-nf") return oracle_nf(options);
  if (name == "ear-classify") return ear_classify(options);
  if (name == "ear-lemmas") return ear_lemmas(options);
  if (name == "constructions") return constructions_suite(options);
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + name + "'");
}

std::string suite_to_json(const SuiteResult& r, const SuiteOptions& o, int indent) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = r.suite;
  j["seed"] = o.seed;
  j["max_n"] = o.max_n;
  j["trials"] = o.trials;
  j["passed"] = r.passed();
  j["skipped"] = r.skipped;
  nlohmann::json results = nlohmann::json::array();
  int failures = 0;
  for (const auto& p : r.results) {
    results.push_back({{"property", p.property}, {"subject", p.subject}, {"passed", p.passed}, {"detail", p.detail}});
    failures += !p.passed;
  }
  j["checked"] = r.results.size();
  j["failures"] = failures;
  j["results"] = results;
  return j.dump(indent);
}

}  // namespace mcover
