#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcover/graph.hpp"
#include "mcover/matching.hpp"

namespace mcover {

struct CorpusSpec {
  std::uint64_t seed = 1;
  int random_count = 24;      // seeded random matching-covered members
  int random_max_n = 10;      // even orders 4..random_max_n
  bool constructions = true;  // splice / cycle / star defaults
};

struct CorpusEntry {
  std::string name;
  std::string family;
  Graph graph;
};

// Deterministic given the CorpusSpec.
std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec = {});
// One line per member: name and edge list.
std::string corpus_listing(const std::vector<CorpusEntry>& corpus);

struct SuiteOptions {
  int max_n = 10;
  std::uint64_t seed = 1;
  int trials = 100;
  int max_m_oracle = 14;  // oracle-nf: members with m above this are skipped
  std::uint64_t cap = kDefaultMatchingCap;
};

struct PropertyResult {
  std::string property;
  std::string subject;  // corpus member or construction
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> results;
  int skipped = 0;

  bool passed() const;
};

// sep-invariance, bipartite-theorem, oracle-nf, ear-classify, ear-lemmas,
// constructions. Throws kInvalidArgument for other names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});
const std::vector<std::string>& suite_names();
std::string suite_to_json(const SuiteResult& r, const SuiteOptions& options, int indent = 2);

}  // namespace mcover
