#pragma once

#include <string>
#include <vector>

#include "rgl/report.hpp"

namespace rgl {

// One library entry: a named declaration (or directive) in an .rgl file,
// bound to the mathematical statement it encodes. `citation` is either that
// statement or the tag "glue" for plumbing entries; `anchor` repeats the
// entry's own comment header inside the file.
struct CorpusEntry {
  std::string name;
  std::string kind;  // definition | theorem | postulate | eq-assertion | fail-assertion
  std::string file;
  std::string citation;
  std::string anchor;
};

struct CorpusFile {
  std::string path;               // relative to the corpus root
  std::vector<std::string> deps;  // paths that must check first
};

struct CorpusManifest {
  std::vector<CorpusFile> files;  // topologically ordered by load_manifest
  std::vector<CorpusEntry> entries;
};

// Reads <root>/manifest.json and validates it: files exist, dependency order
// is acyclic, entry names are unique and cited, kinds are known. Throws
// std::runtime_error describing the first violation.
CorpusManifest load_manifest(const std::string& root);

// Checks every file in dependency order against one shared state, zipping
// manifest entries to declarations positionally (names and kinds are
// cross-checked). Structural mismatches throw; checking failures land in the
// report.
Report run_corpus(const std::string& root, const CorpusManifest& m);

// The corpus directory baked in at build time, overridable by the
// PATHCHECK_CORPUS environment variable.
std::string default_corpus_root();

} // namespace rgl
