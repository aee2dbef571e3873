#include "qhh/quiver.hpp"

#include <algorithm>
#include <functional>

namespace qhh {

int Quiver::add_vertex(const std::string& name) {
  if (vertex_ix_.count(name)) throw ParseError("duplicate vertex name: " + name);
  if (arrow_ix_.count(name)) throw ParseError("name used for both vertex and arrow: " + name);
  int ix = static_cast<int>(vertices_.size());
  vertices_.push_back(name);
  vertex_ix_[name] = ix;
  out_.emplace_back();
  in_.emplace_back();
  return ix;
}

int Quiver::add_arrow(const std::string& name, const std::string& src, const std::string& tgt) {
  if (arrow_ix_.count(name)) throw ParseError("duplicate arrow name: " + name);
  auto s = find_vertex(src);
  auto t = find_vertex(tgt);
  if (!s) throw ParseError("unknown vertex: " + src);
  if (!t) throw ParseError("unknown vertex: " + tgt);
  int ix = static_cast<int>(arrows_.size());
  arrows_.push_back({name, *s, *t});
  arrow_ix_[name] = ix;
  out_[*s].push_back(ix);
  in_[*t].push_back(ix);
  return ix;
}

int Quiver::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw ParseError("unknown vertex: " + name);
  return *v;
}

std::optional<int> Quiver::find_vertex(const std::string& name) const {
  auto it = vertex_ix_.find(name);
  if (it == vertex_ix_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  auto it = arrow_ix_.find(name);
  if (it == arrow_ix_.end()) return std::nullopt;
  return it->second;
}

bool Quiver::connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a : out_[v])
      if (!seen[arrows_[a].tgt]) seen[arrows_[a].tgt] = true, stack.push_back(arrows_[a].tgt);
    for (int a : in_[v])
      if (!seen[arrows_[a].src]) seen[arrows_[a].src] = true, stack.push_back(arrows_[a].src);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

int path_source(const Path& p) { return p.src; }

int path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.src : q.arrow(p.arrows.back()).tgt;
}

bool path_valid(const Quiver& q, const Path& p) {
  int at = p.src;
  for (int a : p.arrows) {
    if (q.arrow(a).src != at) return false;
    at = q.arrow(a).tgt;
  }
  return true;
}

int compare_paths(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  for (int i = 0; i < a.length(); ++i) {
    const auto& na = q.arrow(a.arrows[i]).name;
    const auto& nb = q.arrow(b.arrows[i]).name;
    if (na != nb) return na < nb ? -1 : 1;
  }
  if (a.trivial() && a.src != b.src) {
    const auto& na = q.vertex_name(a.src);
    const auto& nb = q.vertex_name(b.src);
    return na < nb ? -1 : 1;
  }
  return 0;
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  return compare_paths(q, a, b) < 0;
}

std::optional<Path> try_compose(const Quiver& q, const Path& a, const Path& b) {
  if (path_target(q, a) != b.src) return std::nullopt;
  Path c{a.src, a.arrows};
  c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
  return c;
}

Path compose(const Quiver& q, const Path& a, const Path& b) {
  auto c = try_compose(q, a, b);
  if (!c)
    throw ModelError("paths do not compose: " + path_str(q, a) + " * " + path_str(q, b));
  return *c;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e_" + q.vertex_name(p.src);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len, std::optional<int> from,
                                  std::optional<int> to) {
  std::vector<Path> out;
  std::function<void(Path&, int)> grow = [&](Path& p, int at) {
    if ((!from || p.src == *from) && (!to || at == *to)) out.push_back(p);
    if (p.length() >= max_len) return;
    for (int a : q.arrows_from(at)) {
      p.arrows.push_back(a);
      grow(p, q.arrow(a).tgt);
      p.arrows.pop_back();
    }
  };
  for (int v = 0; v < q.vertex_count(); ++v) {
    Path p{v, {}};
    grow(p, v);
  }
  std::sort(out.begin(), out.end(),
            [&](const Path& a, const Path& b) { return path_less(q, a, b); });
  return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len, const std::string& from,
                                  const std::string& to) {
  return enumerate_paths(q, max_len, q.vertex(from), q.vertex(to));
}

std::string PathTable::key(const Path& p) {
  std::string k = std::to_string(p.src);
  for (int a : p.arrows) k += ':' + std::to_string(a);
  return k;
}

PathTable::PathTable(const Quiver& q, int max_len) : q_(&q), max_len_(max_len) {
  paths_ = enumerate_paths(q, max_len);
  targets_.reserve(paths_.size());
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    targets_.push_back(path_target(q, paths_[i]));
    index_[key(paths_[i])] = static_cast<int>(i);
  }
  trivial_.assign(q.vertex_count(), -1);
  coords_.assign(q.vertex_count(), std::vector<std::vector<int>>(q.vertex_count()));
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    const Path& p = paths_[i];
    if (p.trivial())
      trivial_[p.src] = static_cast<int>(i);
    else
      coords_[p.src][targets_[i]].push_back(static_cast<int>(i));
  }
}

int PathTable::id_of(const Path& p) const {
  auto f = find(p);
  if (!f) throw ModelError("path not tracked: " + path_str(*q_, p));
  return *f;
}

std::optional<int> PathTable::find(const Path& p) const {
  auto it = index_.find(key(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& PathTable::coords(int x, int y) const { return coords_[x][y]; }

}  // namespace qhh
