#include <chrono>
#include <fstream>
#include <sstream>

#include "rgl/driver.hpp"
#include "rgl/error.hpp"
#include "rgl/pretty.hpp"

namespace rgl {

namespace {

const char* kind_name(DeclKind k) {
  switch (k) {
    case DeclKind::Def: return "def";
    case DeclKind::Postulate: return "postulate";
    case DeclKind::Eq: return "eq";
    case DeclKind::FailEq: return "fail-eq";
    case DeclKind::Norm: return "norm";
  }
  return "?";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

ReportItem check_declaration(Globals& g, const Declaration& d, const std::string* path,
                             const std::string* source) {
  ReportItem item;
  item.kind = kind_name(d.kind);
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<Span> where;
  try {
    Context ctx{&g, {}, {}, nullptr};
    switch (d.kind) {
      case DeclKind::Def:
      case DeclKind::Postulate: {
        item.name = d.name;
        if (g.lookup(d.name))
          throw CheckError(d.span, "redefinition of '" + d.name + "'");
        CPtr ty = resolve(g, {}, d.type);
        auto [tyv, lvl] = check_is_type(ctx, ty);
        (void)lvl;
        int id = static_cast<int>(g.entries.size());
        if (d.kind == DeclKind::Def) {
          CPtr body = resolve(g, {}, d.lhs);
          check(ctx, body, tyv);
          const Globals* gp = &g;
          LazyVal unfolded = delay([gp, body] { return eval(*gp, nullptr, body); });
          g.add(GlobalEntry{d.name, ty, tyv, body, vmk(VGlued{id, {}, std::move(unfolded)})});
        } else {
          g.add(GlobalEntry{d.name, ty, tyv, std::nullopt,
                            vmk(VNeutral{NPost{id}, {}})});
        }
        item.pass = true;
        break;
      }
      case DeclKind::Eq:
      case DeclKind::FailEq: {
        CPtr ty = resolve(g, {}, d.type);
        auto [tyv, lvl] = check_is_type(ctx, ty);
        (void)lvl;
        CPtr lhs = resolve(g, {}, d.lhs);
        check(ctx, lhs, tyv);
        CPtr rhs = resolve(g, {}, d.rhs);
        check(ctx, rhs, tyv);
        Val lv = eval(g, ctx.env, lhs);
        Val rv = eval(g, ctx.env, rhs);
        bool eq = convertible(ctx, lv, rv, tyv);
        if (d.kind == DeclKind::Eq) {
          item.pass = eq;
          if (!eq)
            item.message = "not definitionally equal: " + show_value(ctx, tyv, lv) + " vs " +
                           show_value(ctx, tyv, rv) + " at " + show_type(ctx, tyv);
        } else {
          item.pass = !eq;
          if (eq)
            item.message = "unexpectedly definitionally equal at " + show_type(ctx, tyv);
        }
        if (!item.pass) where = d.span;
        break;
      }
      case DeclKind::Norm: {
        CPtr ty = resolve(g, {}, d.type);
        auto [tyv, lvl] = check_is_type(ctx, ty);
        (void)lvl;
        CPtr tm = resolve(g, {}, d.lhs);
        check(ctx, tm, tyv);
        CPtr nf = normalize(ctx, tm, tyv);
        item.message = pretty(unresolve(g, {}, nf));
        item.pass = true;
        break;
      }
    }
  } catch (const PosError& e) {
    item.pass = false;
    item.message = e.what();
    where = e.span;
  }
  item.millis = ms_since(t0);
  if (where && path && source)
    item.message = format_pos(*path, *source, where->begin) + ": " + item.message;
  return item;
}

FileReport check_source(Globals& g, const std::string& path, const std::string& source) {
  FileReport rep;
  rep.path = path;
  std::vector<Declaration> decls;
  try {
    decls = parse_file(tokenize(source));
  } catch (const PosError& e) {
    ReportItem item;
    item.name = "(parse)";
    item.kind = "file";
    item.pass = false;
    item.message = format_pos(path, source, e.span.begin) + ": " + e.what();
    rep.items.push_back(std::move(item));
    rep.fail = 1;
    rep.aborted = true;
    return rep;
  }
  int directive = 0;
  for (const Declaration& d : decls) {
    ReportItem item = check_declaration(g, d, &path, &source);
    if (item.name.empty()) item.name = item.kind + "#" + std::to_string(++directive);
    bool scope_decl = d.kind == DeclKind::Def || d.kind == DeclKind::Postulate;
    bool failed = !item.pass;
    (item.pass ? rep.pass : rep.fail)++;
    rep.items.push_back(std::move(item));
    if (failed && scope_decl) {
      rep.aborted = true;
      break;
    }
  }
  return rep;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FileReport check_file(Globals& g, const std::string& path) {
  std::string source;
  try {
    source = read_text_file(path);
  } catch (const std::exception& e) {
    FileReport rep;
    rep.path = path;
    ReportItem item;
    item.name = "(io)";
    item.kind = "file";
    item.pass = false;
    item.message = e.what();
    rep.items.push_back(std::move(item));
    rep.fail = 1;
    rep.aborted = true;
    return rep;
  }
  return check_source(g, path, source);
}

} // namespace rgl
