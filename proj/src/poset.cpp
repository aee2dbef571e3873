#include "qhh/poset.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace qhh {

Poset::Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& gt)
    : names_(std::move(names)) {
  gt_.assign(names_.size(), std::vector<bool>(names_.size(), false));
  for (auto [a, b] : gt) gt_[a][b] = true;
  close_and_check();
}

void Poset::close_and_check() {
  int n = size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (gt_[i][k])
        for (int j = 0; j < n; ++j)
          if (gt_[k][j]) gt_[i][j] = true;
  for (int i = 0; i < n; ++i)
    if (gt_[i][i]) throw ModelError("not a poset: cycle through element " + names_[i]);
  covers_.clear();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!gt_[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (gt_[a][c] && gt_[c][b]) cover = false;
      if (cover) covers_.emplace_back(a, b);
    }
}

Poset Poset::restrict_to(const std::vector<int>& keep) const {
  std::vector<std::string> names;
  for (int i : keep) names.push_back(names_[i]);
  std::vector<std::pair<int, int>> gt;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (gt_[keep[a]][keep[b]]) gt.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Poset(std::move(names), gt);
}

Poset parse_poset(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, int> ix;
  std::vector<std::pair<int, int>> gt;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::string kw;
    if (!(line >> kw)) continue;
    if (kw == "element") {
      std::string name;
      if (!(line >> name)) throw ParseError("expected: element <name>", lineno);
      if (ix.count(name)) throw ParseError("duplicate element: " + name, lineno);
      ix[name] = static_cast<int>(names.size());
      names.push_back(name);
    } else if (kw == "cover") {
      std::string a, b;
      if (!(line >> a >> b)) throw ParseError("expected: cover <a> <b>", lineno);
      if (!ix.count(a)) throw ParseError("unknown element: " + a, lineno);
      if (!ix.count(b)) throw ParseError("unknown element: " + b, lineno);
      gt.emplace_back(ix[a], ix[b]);
    } else {
      throw ParseError("unknown directive: " + kw, lineno);
    }
    std::string extra;
    if (line >> extra) throw ParseError("trailing tokens", lineno);
  }
  if (names.empty()) throw ParseError("no elements declared");
  return Poset(std::move(names), gt);
}

Poset parse_poset_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError("cannot open file: " + filename);
  return parse_poset(in);
}

std::string serialize_poset(const Poset& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) out += "element " + p.name(i) + "\n";
  for (auto [a, b] : p.covers()) out += "cover " + p.name(a) + " " + p.name(b) + "\n";
  return out;
}

std::vector<std::vector<int>> chains(const Poset& p, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int depth) {
    if (depth == degree + 1) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < p.size(); ++e) {
      if (!cur.empty() && !p.greater(cur.back(), e)) continue;
      cur.push_back(e);
      grow(depth + 1);
      cur.pop_back();
    }
  };
  grow(0);
  return out;
}

Poset iz_reduce(const Poset& p) {
  Poset cur = p;
  for (;;) {
    int victim = -1;
    for (int x = 0; x < cur.size() && victim < 0; ++x) {
      std::vector<int> up, down;
      for (int y = 0; y < cur.size(); ++y) {
        if (cur.greater(y, x)) up.push_back(y);
        if (cur.greater(x, y)) down.push_back(y);
      }
      if (up.empty() || down.empty()) continue;  // extremal elements stay
      int up_minimals = 0;
      for (int y : up) {
        bool minimal = true;
        for (int z : up)
          if (cur.greater(y, z)) minimal = false;
        if (minimal) ++up_minimals;
      }
      int down_maximals = 0;
      for (int y : down) {
        bool maximal = true;
        for (int z : down)
          if (cur.greater(z, y)) maximal = false;
        if (maximal) ++down_maximals;
      }
      if (up_minimals < 2 || down_maximals < 2) victim = x;
    }
    if (victim < 0) return cur;
    std::vector<int> keep;
    for (int i = 0; i < cur.size(); ++i)
      if (i != victim) keep.push_back(i);
    cur = cur.restrict_to(keep);
  }
}

namespace {

// All Hasse paths a -> b as arrow index sequences of the cover quiver.
void hasse_paths(const Quiver& q, int at, int target, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (at == target && !cur.empty()) {
    out.push_back(cur);
    return;
  }
  for (int a : q.arrows_from(at)) {
    cur.push_back(a);
    hasse_paths(q, q.arrow(a).tgt, target, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Presentation incidence_presentation(const Poset& p) {
  Presentation pres;
  for (int i = 0; i < p.size(); ++i) pres.quiver.add_vertex(p.name(i));
  std::map<std::string, int> used;
  for (auto [a, b] : p.covers()) {
    std::string base = p.name(a) + "__" + p.name(b);
    std::string name = base;
    while (pres.quiver.find_arrow(name) || pres.quiver.find_vertex(name))
      name = base + "_" + std::to_string(++used[base]);
    pres.quiver.add_arrow(name, p.name(a), p.name(b));
  }

  int longest = 0;
  // longest chain edge count = longest path in the cover DAG
  {
    std::vector<int> depth(p.size(), -1);
    std::function<int(int)> dp = [&](int v) {
      if (depth[v] >= 0) return depth[v];
      int best = 0;
      for (int a : pres.quiver.arrows_from(v)) best = std::max(best, 1 + dp(pres.quiver.arrow(a).tgt));
      return depth[v] = best;
    };
    for (int v = 0; v < p.size(); ++v) longest = std::max(longest, dp(v));
  }
  pres.bound = std::max(longest + 1, 2);

  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.greater(a, b)) continue;
      std::vector<std::vector<int>> paths;
      std::vector<int> cur;
      hasse_paths(pres.quiver, a, b, cur, paths);
      std::vector<Path> as_paths;
      for (auto& seq : paths) as_paths.push_back(Path{a, seq});
      std::sort(as_paths.begin(), as_paths.end(),
                [&](const Path& x, const Path& y) { return path_less(pres.quiver, x, y); });
      for (std::size_t i = 0; i < as_paths.size(); ++i)
        for (std::size_t j = i + 1; j < as_paths.size(); ++j)
          pres.relations.push_back(canonicalize_relation(
              pres.quiver, {{mpq_class(1), as_paths[i]}, {mpq_class(-1), as_paths[j]}},
              pres.bound));
    }
  return pres;
}

}  // namespace qhh
