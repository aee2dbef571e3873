#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhh/matrix.hpp"
#include "qhh/presentation.hpp"
#include "qhh/util.hpp"

namespace qhh {

// Linear combination of parallel paths over the field F, canonical form:
// terms sorted by the path order, no zero coefficients.
template <class F>
struct LinComb {
  std::vector<std::pair<typename F::Elem, Path>> terms;
};

template <class F>
LinComb<F> make_lincomb(const F& f, const Quiver& q,
                        std::vector<std::pair<typename F::Elem, Path>> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return path_less(q, a.second, b.second); });
  LinComb<F> out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().second == t.second)
      out.terms.back().first = f.add(out.terms.back().first, t.first);
    else
      out.terms.push_back(std::move(t));
  }
  std::erase_if(out.terms, [&](const auto& t) { return f.is_zero(t.first); });
  return out;
}

template <class F>
LinComb<F> lincomb_from_relation(const F& f, const Quiver& q, const RatRelation& r) {
  std::vector<std::pair<typename F::Elem, Path>> terms;
  for (const auto& t : r.terms) terms.emplace_back(f.from_rational(t.coeff), t.path);
  return make_lincomb(f, q, std::move(terms));
}

struct MinimalRelationBlocks {
  // per vertex pair: partition of the ideal-space support into blocks of
  // path ids, blocks and members sorted ascending
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> blocks;
};

struct AdmissibilityReport {
  bool generators_in_square = false;  // every generator term has length >= 2
  bool fm_necessary = false;          // every length-m path is in the ideal mod F^{m+1}
  std::vector<std::string> failing_paths;
};

// Row space of { u.g.v : g generator, terms truncated past the table cap }
// per vertex pair, as RREF data over the pair's path coordinates.
template <class F>
std::vector<RrefResult<F>> build_ideal_spaces(const F& f, const Presentation& pres,
                                              const PathTable& table, int threads = 1) {
  const Quiver& q = pres.quiver;
  int V = q.vertex_count();
  int cap = table.max_len();
  std::vector<std::vector<std::vector<typename F::Elem>>> rows(V * V);

  std::vector<int> into_count(V, 0);
  for (const auto& g : pres.relations) {
    int min_len = g.terms.front().path.length();
    for (const auto& t : g.terms) min_len = std::min(min_len, t.path.length());
    for (int id = 0; id < table.size(); ++id) {
      const Path& u = table.path(id);
      if (table.target(id) != g.src || u.length() + min_len > cap) continue;
      for (int vid = 0; vid < table.size(); ++vid) {
        const Path& v = table.path(vid);
        if (v.src != g.tgt || u.length() + min_len + v.length() > cap) continue;
        int x = u.src, y = table.target(vid);
        const auto& coords = table.coords(x, y);
        std::vector<typename F::Elem> row(coords.size(), f.zero());
        bool nonzero = false;
        for (const auto& t : g.terms) {
          if (u.length() + t.path.length() + v.length() > cap) continue;
          Path w = compose(q, compose(q, u, t.path), v);
          int wid = table.id_of(w);
          auto it = std::lower_bound(coords.begin(), coords.end(), wid);
          row[it - coords.begin()] =
              f.add(row[it - coords.begin()], f.from_rational(t.coeff));
          nonzero = true;
        }
        if (nonzero) rows[x * V + y].push_back(std::move(row));
      }
    }
  }

  std::vector<RrefResult<F>> spaces(V * V);
  parallel_for(V * V, threads, [&](int k) {
    int x = k / V, y = k % V;
    auto m = Matrix<F>::from_rows(f, rows[k], table.coords(x, y).size());
    spaces[k] = rref(f, std::move(m));
  });
  return spaces;
}

// The finite-dimensional algebra kQ / (<generators> + F^m) as computable
// data: per-pair ideal subspaces in RREF form, the monomial basis (paths at
// the non-pivot coordinates, plus trivial paths), and structure constants.
template <class F>
class BoundAlgebra {
public:
  using Elem = typename F::Elem;

  struct BasisElem {
    int path_id;
    int x, y;
  };

  BoundAlgebra(const F& f, Presentation pres, int threads = 1)
      : f_(f), pres_(std::move(pres)), table_(pres_.quiver, pres_.bound - 1) {
    const Quiver& q = pres_.quiver;
    int V = q.vertex_count();
    ideal_ = build_ideal_spaces(f_, pres_, table_, threads);

    basis_ord_.assign(table_.size(), -1);
    pair_basis_.assign(V * V, {});
    std::vector<bool> keep(table_.size(), false);
    for (int v = 0; v < V; ++v) keep[table_.trivial_id(v)] = true;
    for (int x = 0; x < V; ++x)
      for (int y = 0; y < V; ++y) {
        const auto& coords = table_.coords(x, y);
        const auto& rr = ideal_[x * V + y];
        std::vector<bool> pivot(coords.size(), false);
        for (auto c : rr.pivot_cols) pivot[c] = true;
        for (std::size_t c = 0; c < coords.size(); ++c)
          if (!pivot[c]) keep[coords[c]] = true;
      }
    for (int id = 0; id < table_.size(); ++id) {
      if (!keep[id]) continue;
      int ord = static_cast<int>(basis_.size());
      basis_.push_back({id, table_.source(id), table_.target(id)});
      basis_ord_[id] = ord;
      pair_basis_[basis_.back().x * V + basis_.back().y].push_back(ord);
      if (!table_.path(id).trivial()) rad_basis_.push_back(ord);
    }
    build_products();
  }

  const F& field() const { return f_; }
  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  const PathTable& table() const { return table_; }
  int bound() const { return pres_.bound; }

  int dim() const { return static_cast<int>(basis_.size()); }
  int dim_pair(int x, int y) const {
    return static_cast<int>(pair_basis_[x * quiver().vertex_count() + y].size());
  }
  const std::vector<int>& pair_basis(int x, int y) const {
    return pair_basis_[x * quiver().vertex_count() + y];
  }
  int basis_count() const { return static_cast<int>(basis_.size()); }
  const BasisElem& basis(int ord) const { return basis_[ord]; }
  const Path& basis_path(int ord) const { return table_.path(basis_[ord].path_id); }
  int basis_ord_of(int path_id) const { return basis_ord_[path_id]; }
  const std::vector<int>& rad_basis() const { return rad_basis_; }

  const RrefResult<F>& ideal_space(int x, int y) const {
    return ideal_[x * quiver().vertex_count() + y];
  }

  bool is_schurian() const {
    int V = quiver().vertex_count();
    for (int x = 0; x < V; ++x)
      for (int y = 0; y < V; ++y)
        if (dim_pair(x, y) > 1) return false;
    return true;
  }
  bool diagonal_one_dimensional() const {
    for (int x = 0; x < quiver().vertex_count(); ++x)
      if (dim_pair(x, x) != 1) return false;
    return true;
  }

  // Normal form in the monomial basis. Terms of length >= m are dropped;
  // the value is the class of the input in A.
  LinComb<F> normal_form(const LinComb<F>& lc) const {
    if (lc.terms.empty()) return {};
    int x = lc.terms.front().second.src;
    int y = path_target(quiver(), lc.terms.front().second);
    Elem triv = f_.zero();
    const auto& coords = table_.coords(x, y);
    std::vector<Elem> vec(coords.size(), f_.zero());
    for (const auto& [c, p] : lc.terms) {
      if (p.src != x || path_target(quiver(), p) != y) throw ModelError("terms not parallel");
      if (p.length() >= bound()) continue;
      if (p.trivial()) {
        triv = f_.add(triv, c);
        continue;
      }
      auto it = std::lower_bound(coords.begin(), coords.end(), table_.id_of(p));
      vec[it - coords.begin()] = f_.add(vec[it - coords.begin()], c);
    }
    const auto& rr = ideal_space(x, y);
    vec = reduce_by_rref(f_, std::move(vec), rr.reduced, rr.pivot_cols);
    LinComb<F> out;
    if (!f_.is_zero(triv))
      out.terms.emplace_back(triv, table_.path(table_.trivial_id(x)));
    for (std::size_t c = 0; c < coords.size(); ++c)
      if (!f_.is_zero(vec[c])) out.terms.emplace_back(vec[c], table_.path(coords[c]));
    return out;
  }

  // Membership in the ideal subspace. Terms of length >= m count as ideal
  // members by the admissibility contract; a trivial term can never be one.
  bool is_in_ideal(const LinComb<F>& lc) const {
    if (lc.terms.empty()) return true;
    for (const auto& [c, p] : lc.terms)
      if (p.trivial() && !f_.is_zero(c)) return false;
    auto nf = normal_form(lc);
    return nf.terms.empty();
  }

  bool path_in_ideal(const Path& p) const {
    if (p.length() >= bound()) return true;
    return is_in_ideal(LinComb<F>{{{f_.one(), p}}});
  }

  // Product of two basis elements, in the basis. Empty when the endpoints
  // do not match or the product dies in the quotient.
  const std::vector<std::pair<int, Elem>>& product(int i, int j) const {
    static const std::vector<std::pair<int, Elem>> empty;
    auto it = products_.find(key(i, j));
    return it == products_.end() ? empty : it->second;
  }

  // Class of an arbitrary path, expressed in the basis.
  std::vector<std::pair<int, Elem>> path_class(const Path& p) const {
    std::vector<std::pair<int, Elem>> out;
    if (p.length() >= bound()) return out;
    auto nf = normal_form(LinComb<F>{{{f_.one(), p}}});
    for (const auto& [c, bp] : nf.terms) out.emplace_back(basis_ord_of(table_.id_of(bp)), c);
    return out;
  }

  // Connected components of the co-occurrence graph of the RREF basis of
  // each ideal subspace, restricted to its support. These are the finest
  // decomposition of the subspace into parts with disjoint path supports:
  // projecting any member onto a support block of a valid decomposition
  // stays inside the subspace, an RREF vector is determined by its pivot,
  // so each RREF row's support sits inside one block of every valid
  // decomposition, and the components themselves form one. Minimal
  // relations live inside single components (the subset-enumeration oracle
  // in the test suite cross-checks this).
  MinimalRelationBlocks minimal_relation_blocks() const {
    MinimalRelationBlocks out;
    int V = quiver().vertex_count();
    for (int x = 0; x < V; ++x)
      for (int y = 0; y < V; ++y) {
        const auto& rr = ideal_space(x, y);
        const auto& coords = table_.coords(x, y);
        if (rr.rank == 0) continue;
        std::vector<int> parent(coords.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int i) {
          while (parent[i] != i) i = parent[i] = parent[parent[i]];
          return i;
        };
        std::vector<bool> in_support(coords.size(), false);
        for (std::size_t r = 0; r < rr.rank; ++r) {
          int first = -1;
          for (std::size_t c = 0; c < coords.size(); ++c) {
            if (f_.is_zero(rr.reduced.at(r, c))) continue;
            in_support[c] = true;
            if (first < 0)
              first = static_cast<int>(c);
            else
              parent[find(static_cast<int>(c))] = find(first);
          }
        }
        std::map<int, std::vector<int>> comp;
        for (std::size_t c = 0; c < coords.size(); ++c)
          if (in_support[c]) comp[find(static_cast<int>(c))].push_back(coords[c]);
        std::vector<std::vector<int>> blocks;
        for (auto& [root, members] : comp) blocks.push_back(std::move(members));
        std::sort(blocks.begin(), blocks.end());
        out.blocks[{x, y}] = std::move(blocks);
      }
    return out;
  }

  // Necessary admissibility test. (ii) rebuilds the ideal spans one length
  // higher and asks every length-m path to reduce to zero there; this is
  // necessary for F^m <= <generators> but not sufficient.
  AdmissibilityReport check_admissibility() const {
    AdmissibilityReport rep;
    rep.generators_in_square = true;
    for (const auto& g : pres_.relations)
      for (const auto& t : g.terms)
        if (t.path.length() < 2) rep.generators_in_square = false;

    PathTable wide(quiver(), bound());
    auto spaces = build_ideal_spaces(f_, pres_, wide);
    rep.fm_necessary = true;
    int V = quiver().vertex_count();
    for (int id = 0; id < wide.size(); ++id) {
      if (wide.path(id).length() != bound()) continue;
      int x = wide.source(id), y = wide.target(id);
      const auto& coords = wide.coords(x, y);
      std::vector<Elem> vec(coords.size(), f_.zero());
      auto it = std::lower_bound(coords.begin(), coords.end(), id);
      vec[it - coords.begin()] = f_.one();
      const auto& rr = spaces[x * V + y];
      vec = reduce_by_rref(f_, std::move(vec), rr.reduced, rr.pivot_cols);
      bool zero = true;
      for (const auto& e : vec)
        if (!f_.is_zero(e)) zero = false;
      if (!zero) {
        rep.fm_necessary = false;
        rep.failing_paths.push_back(path_str(quiver(), wide.path(id)));
      }
    }
    return rep;
  }

private:
  static long long key(int i, int j) { return static_cast<long long>(i) << 32 | static_cast<unsigned>(j); }

  void build_products() {
    for (int i = 0; i < basis_count(); ++i)
      for (int j = 0; j < basis_count(); ++j) {
        if (basis_[i].y != basis_[j].x) continue;
        Path c = compose(quiver(), basis_path(i), basis_path(j));
        auto val = path_class(c);
        if (!val.empty()) products_[key(i, j)] = std::move(val);
      }
  }

  F f_;
  Presentation pres_;
  PathTable table_;
  std::vector<RrefResult<F>> ideal_;
  std::vector<BasisElem> basis_;
  std::vector<int> basis_ord_;
  std::vector<std::vector<int>> pair_basis_;
  std::vector<int> rad_basis_;
  std::unordered_map<long long, std::vector<std::pair<int, Elem>>> products_;
};

}  // namespace qhh
