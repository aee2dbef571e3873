#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/poset.hpp"

namespace qhh {

// Union-find over all paths of length <= m-1 (trivial paths included),
// with a touches-ideal flag per class. A flagged class carries a witness:
// a path known to lie in the ideal (possibly longer than the cap).
class PathClasses {
public:
  explicit PathClasses(const PathTable& table);

  const PathTable& table() const { return *table_; }
  int find(int path_id) const;
  bool unite(int a, int b);  // true if a merge happened
  const std::vector<int>& members(int root) const { return members_[root]; }
  bool touches_ideal(int root) const { return flag_[root]; }
  bool set_flag(int root, const Path& reason);  // true if newly set
  const std::optional<Path>& reason(int root) const { return reason_[root]; }

  // Current class roots, sorted by smallest member (the global path order).
  std::vector<int> roots() const;
  int class_of(const Path& p) const { return find(table_->id_of(p)); }

private:
  const PathTable* table_;
  mutable std::vector<int> parent_;
  std::vector<std::vector<int>> members_;
  std::vector<char> flag_;
  std::vector<std::optional<Path>> reason_;
};

// Smallest equivalence closed under: block mates are equivalent, and
// equivalence is stable under composing an arrow on either side. Flags
// record classes that meet the ideal, including through compositions that
// leave the length cap (those land in F^m).
template <class F>
PathClasses compute_classes(const BoundAlgebra<F>& A, const MinimalRelationBlocks& blocks) {
  const PathTable& table = A.table();
  const Quiver& q = A.quiver();
  PathClasses cls(table);

  for (const auto& [pair, blist] : blocks.blocks)
    for (const auto& block : blist) {
      for (std::size_t i = 1; i < block.size(); ++i) cls.unite(block[0], block[i]);
      for (int pid : block)
        if (A.path_in_ideal(table.path(pid))) cls.set_flag(cls.find(pid), table.path(pid));
    }

  int cap = table.max_len();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < table.size(); ++p) {
      if (cls.find(p) != p) continue;
      auto mem = cls.members(p);  // copy: unions below may invalidate
      bool flagged = cls.touches_ideal(p);
      int s = table.source(mem[0]);
      int t = table.target(mem[0]);
      for (int side = 0; side < 2; ++side) {
        const auto& arrows = side == 0 ? q.arrows_into(s) : q.arrows_from(t);
        for (int a : arrows) {
          std::vector<int> in_ids;
          std::optional<Path> out_path;
          for (int m : mem) {
            Path ext = side == 0 ? compose(q, Path{q.arrow(a).src, {a}}, table.path(m))
                                 : compose(q, table.path(m), Path{q.arrow(a).src, {a}});
            if (ext.length() <= cap)
              in_ids.push_back(table.id_of(ext));
            else if (!out_path)
              out_path = ext;
          }
          if (in_ids.empty()) continue;
          for (std::size_t i = 1; i < in_ids.size(); ++i)
            if (cls.unite(in_ids[0], in_ids[i])) changed = true;
          int img = cls.find(in_ids[0]);
          if (out_path && cls.set_flag(img, *out_path)) changed = true;
          if (flagged) {
            Path reason = cls.reason(p).value();
            Path ext = side == 0 ? compose(q, Path{q.arrow(a).src, {a}}, reason)
                                 : compose(q, reason, Path{q.arrow(a).src, {a}});
            if (cls.set_flag(img, ext)) changed = true;
          }
        }
      }
    }
  }
  return cls;
}

struct CoherenceReport {
  bool coherent = true;
  std::optional<Path> ideal_witness;  // a path in the ideal
  std::optional<Path> clean_witness;  // an equivalent path not in the ideal
};

// Homotopy coherence: every flagged class must consist entirely of ideal
// members. Unflagged classes are ideal-free by construction of the seeds.
template <class F>
CoherenceReport check_homotopy_coherent(const PathClasses& cls, const BoundAlgebra<F>& A) {
  CoherenceReport rep;
  for (int r : cls.roots()) {
    if (!cls.touches_ideal(r)) continue;
    for (int m : cls.members(r)) {
      if (!A.path_in_ideal(cls.table().path(m))) {
        rep.coherent = false;
        rep.ideal_witness = cls.reason(r);
        rep.clean_witness = cls.table().path(m);
        return rep;
      }
    }
  }
  return rep;
}

// The poset of clean classes, ordered by factorization: c >= c' when some
// member of c' splits as u.w.v with w a member of c and both flank classes
// clean.
struct AssociatedPoset {
  Poset poset;                            // element labels "[repr]"
  std::vector<int> roots;                 // element -> class root
  std::vector<std::vector<int>> members;  // element -> sorted member path ids
  std::vector<int> vertex_elem;           // vertex -> element of its trivial class
  std::unordered_map<int, int> elem_of_root;

  int element_of(const PathClasses& cls, const Path& p) const {
    auto it = elem_of_root.find(cls.class_of(p));
    return it == elem_of_root.end() ? -1 : it->second;
  }
};

AssociatedPoset build_sigma(const PathClasses& cls);

struct CompatibleFamily {
  bool right = true;
  std::map<std::pair<int, int>, Path> choice;  // (elem s, elem s') with s > s'
};

enum class Side { Right, Left };

// Exhaustive backtracking over factorization candidates in the global path
// order; returns the lexicographically first family, or nothing.
std::optional<CompatibleFamily> find_compatible_family(const PathClasses& cls,
                                                       const AssociatedPoset& sigma, Side side);

}  // namespace qhh
