#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "rgl/corpus.hpp"
#include "rgl/driver.hpp"
#include "rgl/error.hpp"

namespace rgl {

std::string default_corpus_root() {
  if (const char* env = std::getenv("PATHCHECK_CORPUS"); env && *env) return env;
#ifdef PATHCHECK_DEFAULT_CORPUS
  return PATHCHECK_DEFAULT_CORPUS;
#else
  return "corpus";
#endif
}

namespace {

const std::set<std::string> kKnownKinds{"definition", "theorem", "postulate", "eq-assertion",
                                        "fail-assertion"};

bool kind_matches(const std::string& manifest_kind, DeclKind k) {
  if (manifest_kind == "definition" || manifest_kind == "theorem") return k == DeclKind::Def;
  if (manifest_kind == "postulate") return k == DeclKind::Postulate;
  if (manifest_kind == "eq-assertion") return k == DeclKind::Eq;
  if (manifest_kind == "fail-assertion") return k == DeclKind::FailEq;
  return false;
}

std::vector<CorpusFile> topo_sort(std::vector<CorpusFile> files) {
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < files.size(); ++i) index[files[i].path] = i;
  std::vector<int> state(files.size(), 0);  // 0 new, 1 visiting, 2 done
  std::vector<CorpusFile> out;
  std::function<void(size_t)> visit = [&](size_t i) {
    if (state[i] == 2) return;
    if (state[i] == 1)
      throw std::runtime_error("cyclic file ordering in manifest at '" + files[i].path + "'");
    state[i] = 1;
    for (const std::string& dep : files[i].deps) {
      auto it = index.find(dep);
      if (it == index.end())
        throw std::runtime_error("manifest file '" + files[i].path +
                                 "' depends on unlisted file '" + dep + "'");
      visit(it->second);
    }
    state[i] = 2;
    out.push_back(files[i]);
  };
  for (size_t i = 0; i < files.size(); ++i) visit(i);
  return out;
}

} // namespace

CorpusManifest load_manifest(const std::string& root) {
  const std::string manifest_path = root + "/manifest.json";
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed manifest " + manifest_path + ": " + e.what());
  }

  CorpusManifest m;
  try {
    for (const auto& f : doc.at("files")) {
      CorpusFile cf;
      cf.path = f.at("path").get<std::string>();
      if (f.contains("deps"))
        for (const auto& d : f.at("deps")) cf.deps.push_back(d.get<std::string>());
      m.files.push_back(std::move(cf));
    }
    for (const auto& e : doc.at("entries")) {
      CorpusEntry ce;
      ce.name = e.at("name").get<std::string>();
      ce.kind = e.at("kind").get<std::string>();
      ce.file = e.at("file").get<std::string>();
      ce.citation = e.at("citation").get<std::string>();
      if (e.contains("anchor")) ce.anchor = e.at("anchor").get<std::string>();
      m.entries.push_back(std::move(ce));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed manifest " + manifest_path + ": " + e.what());
  }

  std::set<std::string> file_paths;
  for (const CorpusFile& f : m.files) {
    if (!file_paths.insert(f.path).second)
      throw std::runtime_error("duplicate manifest file entry: " + f.path);
    if (!std::filesystem::exists(root + "/" + f.path))
      throw std::runtime_error("missing corpus file: " + f.path);
  }
  m.files = topo_sort(std::move(m.files));

  std::set<std::string> names;
  for (const CorpusEntry& e : m.entries) {
    if (!names.insert(e.name).second)
      throw std::runtime_error("duplicate entry name: " + e.name);
    if (!kKnownKinds.count(e.kind))
      throw std::runtime_error("unknown kind '" + e.kind + "' for entry " + e.name);
    if (!file_paths.count(e.file))
      throw std::runtime_error("entry " + e.name + " names unlisted file " + e.file);
    if (e.citation.empty())
      throw std::runtime_error("uncited entry: " + e.name);
  }
  return m;
}

Report run_corpus(const std::string& root, const CorpusManifest& m) {
  Report rep;
  rep.command = "corpus";
  Checker chk;
  Globals& g = *chk.globals;

  for (const CorpusFile& file : m.files) {
    std::vector<const CorpusEntry*> expected;
    for (const CorpusEntry& e : m.entries)
      if (e.file == file.path) expected.push_back(&e);

    const std::string full = root + "/" + file.path;
    const std::string source = read_text_file(full);
    std::vector<Declaration> decls;
    try {
      decls = parse_file(tokenize(source));
    } catch (const PosError& e) {
      throw std::runtime_error(format_pos(full, source, e.span.begin) + ": " + e.what());
    }

    if (decls.size() != expected.size())
      throw std::runtime_error(file.path + ": manifest lists " +
                               std::to_string(expected.size()) + " entries but the file has " +
                               std::to_string(decls.size()) + " declarations");

    bool aborted = false;
    for (size_t i = 0; i < decls.size(); ++i) {
      const CorpusEntry& want = *expected[i];
      const Declaration& d = decls[i];
      if (!kind_matches(want.kind, d.kind))
        throw std::runtime_error(file.path + ": entry '" + want.name + "' is a " + want.kind +
                                 " in the manifest but not in the file");
      if ((d.kind == DeclKind::Def || d.kind == DeclKind::Postulate) && d.name != want.name)
        throw std::runtime_error(file.path + ": manifest entry '" + want.name +
                                 "' does not match declaration '" + d.name + "'");
      ReportItem item;
      if (aborted) {
        item.pass = false;
        item.message = "skipped: earlier failure in " + file.path;
        item.kind = want.kind;
      } else {
        item = check_declaration(g, d, &full, &source);
        if (!item.pass && (d.kind == DeclKind::Def || d.kind == DeclKind::Postulate))
          aborted = true;
      }
      item.name = want.name;
      item.kind = want.kind;
      rep.add(std::move(item));
    }
  }
  return rep;
}

} // namespace rgl
