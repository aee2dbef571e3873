#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhh/errors.hpp"

namespace qhh {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

// Finite quiver: named vertices, named arrows. Names are unique within
// their kind; arrow endpoints refer to declared vertices.
class Quiver {
public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, const std::string& src, const std::string& tgt);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }

  int vertex(const std::string& name) const;           // throws on unknown name
  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_arrow(const std::string& name) const;

  const std::vector<int>& arrows_from(int v) const { return out_[v]; }
  const std::vector<int>& arrows_into(int v) const { return in_[v]; }

  // Connectivity of the underlying undirected graph.
  bool connected() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
  std::unordered_map<std::string, int> vertex_ix_, arrow_ix_;
};

// A path: a source vertex plus a composable arrow sequence. The empty
// sequence is the trivial path e_src.
struct Path {
  int src = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
};

int path_source(const Path& p);
int path_target(const Quiver& q, const Path& p);
bool path_valid(const Quiver& q, const Path& p);

// The global total order: by length, then lexicographically by the arrow
// name sequence; trivial paths tie-break by vertex name.
int compare_paths(const Quiver& q, const Path& a, const Path& b);
bool path_less(const Quiver& q, const Path& a, const Path& b);

std::optional<Path> try_compose(const Quiver& q, const Path& a, const Path& b);
Path compose(const Quiver& q, const Path& a, const Path& b);  // throws on endpoint mismatch

std::string path_str(const Quiver& q, const Path& p);

// All paths of length <= max_len passing the endpoint filters, in the
// global order. Filters by vertex index; the name-based overload throws
// on unknown names.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len,
                                  std::optional<int> from = std::nullopt,
                                  std::optional<int> to = std::nullopt);
std::vector<Path> enumerate_paths(const Quiver& q, int max_len, const std::string& from,
                                  const std::string& to);

// Index of every path of length <= max_len; the shared coordinate system
// for ideals, equivalence classes and poset elements.
class PathTable {
public:
  PathTable() = default;
  PathTable(const Quiver& q, int max_len);

  const Quiver& quiver() const { return *q_; }
  int max_len() const { return max_len_; }
  int size() const { return static_cast<int>(paths_.size()); }
  const Path& path(int id) const { return paths_[id]; }
  int id_of(const Path& p) const;                       // throws if not tracked
  std::optional<int> find(const Path& p) const;
  int target(int id) const { return targets_[id]; }
  int source(int id) const { return paths_[id].src; }

  // Positive-length paths x -> y in global order: the coordinates of the
  // path space at (x, y).
  const std::vector<int>& coords(int x, int y) const;
  int trivial_id(int v) const { return trivial_[v]; }

private:
  const Quiver* q_ = nullptr;
  int max_len_ = 0;
  std::vector<Path> paths_;
  std::vector<int> targets_;
  std::vector<int> trivial_;
  std::vector<std::vector<std::vector<int>>> coords_;  // [x][y]
  std::unordered_map<std::string, int> index_;
  static std::string key(const Path& p);
};

}  // namespace qhh
