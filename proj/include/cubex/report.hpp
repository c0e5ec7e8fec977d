#pragma once

// Batch pipeline and corpus generation.  Bundles are deterministic JSON:
// identical config and seed give byte-identical output (timings excluded
// unless explicitly requested).

#include "cubex/curvegraph.hpp"
#include "cubex/io.hpp"

namespace cubex {

struct PipelineConfig {
    // exactly one of input_path / builder is used
    std::string input_path;
    json builder;  // {"kind": "racg"|"raag"|"braid"|..., "graph": {...}, "radius": r, ...}
    std::vector<std::string> analyses;  // empty list = empty bundle
    bool timings = false;
    SearchBudget budget;
};

// Known analysis names: verify, summary, hyperbolicity, linf, hx, crossing.
json run_pipeline(const PipelineConfig& config);

// True when every verdict in the bundle passed.
bool bundle_passed(const json& bundle);

struct CorpusOptions {
    std::uint64_t seed = 0;
    int count = 1;
    int max_vertices = 400;
};

// Deterministic corpus: (filename, complex json) pairs.
std::vector<std::pair<std::string, json>> corpus_generate(const CorpusOptions& opts);

// Builds a complex from a builder spec (shared by pipeline and CLI).
CubeComplex complex_from_builder(const json& builder);

}  // namespace cubex
