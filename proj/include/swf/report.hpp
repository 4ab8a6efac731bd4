#pragma once

// Full analysis of a stable class, the built-in corpus, and report output
// as JSON and plain-text tables.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "swf/borel.hpp"
#include "swf/gysin.hpp"
#include "swf/invariants.hpp"

namespace swf {

struct CorpusEntry {
    std::string name;
    StableClass sc;
    std::map<GroupTag, std::vector<int>> expected_dims;  // cohomology from degree 0
    std::vector<std::pair<std::string, Rational>> expected_invariants;
};

SwfComplex example_x1();
SwfComplex example_x2();
const std::vector<CorpusEntry>& builtin_corpus();
const CorpusEntry* find_corpus_entry(const std::string& name);

struct Analysis {
    StableClass sc;
    int max_degree = 0;
    std::vector<GradedModule> modules;  // cohomology, in kAllGroups order
    std::vector<LocalizationReport> localization;
    InvariantReport invariants;
    std::vector<Verdict> verdicts;

    const GradedModule& module(GroupTag k) const;
};

// max_degree < 0 selects default_max_degree.
Analysis analyze(const StableClass& sc, int max_degree = -1);

// Verdict families: "invariants", "localization", "gysin", "expected".
// A selection is "all" or a comma-separated list of families and verdict
// names; throws std::invalid_argument for an unknown item.
std::vector<Verdict> select_verdicts(const std::vector<Verdict>& all, const std::string& selection);
const std::vector<std::string>& verdict_families();

std::vector<Verdict> check_expectations(const CorpusEntry& entry, const Analysis& a);

nlohmann::ordered_json verdict_json(const Verdict& v);
nlohmann::ordered_json module_json(const GradedModule& m);
nlohmann::ordered_json invariants_json(const InvariantReport& r);
nlohmann::ordered_json report_json(const Analysis& a);

std::string module_text(const std::string& complex, const GradedModule& m);
std::string invariants_text(const InvariantReport& r);
std::string verdicts_text(const std::vector<Verdict>& vs);

// Runs fn(i) for i in [0, n) on up to `threads` workers; 0 means hardware
// concurrency. The first exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace swf
