#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhh/classes.hpp"
#include "qhh/hochschild.hpp"
#include "qhh/poset.hpp"

namespace qhh {

struct ChainMapReport {
  bool ok = true;
  std::string detail;
};

struct ContractionReport {
  bool ok = true;
  bool available = false;  // false when no right-compatible family exists
  std::string detail;
};

struct InducedMapReport {
  std::size_t domain_dim = 0;    // dim SH^n of the associated poset
  std::size_t codomain_dim = 0;  // dim HH^n of the algebra
  std::size_t image_rank = 0;
  bool injective = false;
  bool surjective = false;
  bool prev_surjective = false;  // comparison map one degree down is onto
  bool diagonal_one = false;
};

struct EpsilonReport {
  bool bijective = true;
  bool commutes = true;
  std::vector<std::size_t> sh_dims;
  std::vector<std::size_t> hh_dims;
};

// One signed tuple in the alternating tuple boundary. Degree-0 values are
// single trivial paths standing for their vertices.
struct TupleBoundaryTerm {
  int sign;  // +1 or -1
  std::vector<Path> tuple;
};

// The alternating boundary of a composable tuple of nontrivial paths:
// drop-first + signed interior concatenations + signed drop-last. With
// interior_only set, just the concatenation terms.
inline std::vector<TupleBoundaryTerm> tuple_boundary(const Quiver& q,
                                                     const std::vector<Path>& tuple,
                                                     bool interior_only = false) {
  if (tuple.empty()) throw ModelError("tuple_boundary: empty tuple");
  std::vector<TupleBoundaryTerm> out;
  int n1 = static_cast<int>(tuple.size());
  if (n1 == 1) {
    if (interior_only) return out;
    out.push_back({1, {Path{path_target(q, tuple[0]), {}}}});
    out.push_back({-1, {Path{tuple[0].src, {}}}});
    return out;
  }
  if (!interior_only)
    out.push_back({1, std::vector<Path>(tuple.begin() + 1, tuple.end())});
  int sign = -1;
  for (int i = 1; i < n1; ++i) {
    std::vector<Path> merged;
    for (int k = 0; k < n1; ++k) {
      if (k == i - 1)
        merged.push_back(compose(q, tuple[i - 1], tuple[i]));
      else if (k != i)
        merged.push_back(tuple[k]);
    }
    out.push_back({sign, std::move(merged)});
    sign = -sign;
  }
  if (!interior_only)
    out.push_back({n1 % 2 == 1 ? -1 : 1, std::vector<Path>(tuple.begin(), tuple.end() - 1)});
  return out;
}

// Materializes the comparison morphism between the simplicial cochain
// complex of the associated poset and the Hochschild complex, plus the
// contraction homotopy on its kernel when a right-compatible family is
// present. Everything is an explicit matrix over F.
template <class F>
class Comparison {
public:
  using Elem = typename F::Elem;
  using Chain = std::vector<int>;              // poset elements, descending
  using ChainValue = std::map<Chain, Elem>;    // formal combination of chains

  Comparison(HochschildComplex<F>& hoch, const PathClasses& cls, const AssociatedPoset& sigma,
             std::optional<CompatibleFamily> right_family = std::nullopt)
      : hoch_(&hoch),
        A_(&hoch.algebra()),
        f_(A_->field()),
        cls_(&cls),
        sigma_(&sigma),
        family_(std::move(right_family)) {}

  const AssociatedPoset& sigma() const { return *sigma_; }
  bool has_family() const { return family_.has_value(); }
  const CompatibleFamily& family() const { return *family_; }

  const std::vector<Chain>& sigma_chains(int n) {
    while (static_cast<int>(chains_.size()) <= n) {
      int d = static_cast<int>(chains_.size());
      chains_.push_back(chains(sigma_->poset, d));
      chain_ix_.emplace_back();
      for (std::size_t i = 0; i < chains_[d].size(); ++i)
        chain_ix_[d][chains_[d][i]] = static_cast<int>(i);
    }
    return chains_[n];
  }

  // The simplicial chain image of a composable tuple of nontrivial paths;
  // zero when the full product meets the ideal.
  ChainValue chain_image(const std::vector<Path>& tuple) {
    if (tuple.empty()) throw ModelError("chain_image: empty tuple");
    auto key = tuple_key(tuple);
    auto it = t_memo_.find(key);
    if (it != t_memo_.end()) return it->second;

    const Quiver& q = A_->quiver();
    Path full = tuple[0];
    for (std::size_t i = 1; i < tuple.size(); ++i) full = compose(q, full, tuple[i]);
    ChainValue out;
    int elem = element_of_path(full);
    if (elem >= 0) {
      if (tuple.size() == 1) {
        int s = sigma_->vertex_elem[full.src];
        int t = sigma_->vertex_elem[path_target(q, full)];
        add_term(out, Chain{s, elem}, f_.one());
        add_term(out, Chain{t, elem}, f_.neg(f_.one()));
      } else {
        std::vector<Path> head(tuple.begin(), tuple.end() - 1);
        std::vector<Path> tail(tuple.begin() + 1, tuple.end());
        auto a = chain_image(head);
        auto b = chain_image(tail);
        bool flip = tuple.size() % 2 == 1;  // (-1)^n with n = tuple.size()
        for (auto& [c, v] : a) add_term(out, append(c, elem), v);
        for (auto& [c, v] : b) add_term(out, append(c, elem), flip ? f_.neg(v) : v);
      }
    }
    t_memo_.emplace(std::move(key), out);
    return out;
  }

  ChainValue vertex_chain_image(int v) {
    ChainValue out;
    add_term(out, Chain{sigma_->vertex_elem[v]}, f_.one());
    return out;
  }

  // Matrix of the comparison map Hom(SC_n, k) -> C^n.
  const Matrix<F>& comparison_matrix(int n) {
    auto it = phi_.find(n);
    if (it != phi_.end()) return it->second;
    const auto& cb = hoch_->cochain_basis(n);
    const auto& cols = sigma_chains(n);
    Matrix<F> m(f_, cb.items.size(), cols.size());
    if (n == 0) {
      for (int v = 0; v < A_->quiver().vertex_count(); ++v) {
        int ord = A_->basis_ord_of(A_->table().trivial_id(v));
        int col = chain_ix_[0].at(Chain{sigma_->vertex_elem[v]});
        m.at(cb.row(v, ord), col) = f_.one();
      }
    } else {
      const auto& tuples = hoch_->tensor_tuples(n);
      for (std::size_t tix = 0; tix < tuples.size(); ++tix) {
        auto paths = tuple_paths(tuples[tix]);
        auto img = chain_image(paths);
        if (img.empty()) continue;
        auto prod = tuple_product(tuples[tix]);
        for (const auto& [c, lambda] : img) {
          int col = chain_ix_[n].at(c);
          for (const auto& [b, mu] : prod)
            m.at(cb.row(static_cast<int>(tix), b), col) =
                f_.add(m.at(cb.row(static_cast<int>(tix), b), col), f_.mul(lambda, mu));
        }
      }
    }
    return phi_.emplace(n, std::move(m)).first->second;
  }

  // B^n : Hom(SC_n) -> Hom(SC_{n+1}), the transpose of the chain boundary.
  const Matrix<F>& sigma_coboundary(int n) {
    auto it = cob_.find(n);
    if (it != cob_.end()) return it->second;
    sigma_chains(n + 1);
    auto delta = simplicial_boundary(f_, sigma_->poset, n);
    return cob_.emplace(n, transpose(f_, delta)).first->second;
  }

  // Contraction value G^n on one chain (right family required).
  ChainValue contraction_value(const Chain& chain) {
    if (!family_) throw ModelError("no right-compatible family available");
    auto it = g_memo_.find(chain);
    if (it != g_memo_.end()) return it->second;
    ChainValue out;
    int n = static_cast<int>(chain.size()) - 1;
    if (n == 0) {
      int e = chain[0];
      if (!is_trivial_elem(e)) {
        int t = cls_->table().target(sigma_->members[e][0]);
        add_term(out, Chain{sigma_->vertex_elem[t], e}, f_.one());
      }
    } else {
      std::vector<Path> us;
      bool omega_nonempty = false;
      for (int i = 1; i <= n; ++i) {
        const Path& u = family_->choice.at({chain[i - 1], chain[i]});
        if (u.trivial()) omega_nonempty = true;
        us.push_back(u);
      }
      Chain prefix(chain.begin(), chain.end() - 1);
      int sn = chain.back();
      bool composite_is_sn = false;
      if (!omega_nonempty) {
        Path prod = us[0];
        bool ok = true;
        for (int i = 1; i < n && ok; ++i) {
          auto c = try_compose(A_->quiver(), prod, us[i]);
          if (!c) throw ModelError("family paths do not compose along chain");
          prod = *c;
          if (prod.length() > cls_->table().max_len()) ok = false;
        }
        if (ok) composite_is_sn = element_of_path(prod) == sn;
      }
      auto g_prefix = contraction_value(prefix);
      if (omega_nonempty || composite_is_sn) {
        for (auto& [c, v] : g_prefix) add_term(out, append(c, sn), v);
      } else {
        auto t_val = chain_image(us);
        bool flip = n % 2 == 1;  // (-1)^n
        for (auto& [c, v] : g_prefix) add_term(out, append(c, sn), v);
        for (auto& [c, v] : t_val) add_term(out, append(c, sn), flip ? f_.neg(v) : v);
      }
    }
    g_memo_.emplace(chain, out);
    return out;
  }

  // G^n as a matrix SC_n -> SC_{n+1}.
  const Matrix<F>& contraction_matrix(int n) {
    auto it = gmat_.find(n);
    if (it != gmat_.end()) return it->second;
    sigma_chains(n + 1);  // grow the cache before taking references
    const auto& lo = sigma_chains(n);
    const auto& hi = sigma_chains(n + 1);
    Matrix<F> m(f_, hi.size(), lo.size());
    for (std::size_t j = 0; j < lo.size(); ++j)
      for (const auto& [c, v] : contraction_value(lo[j]))
        m.at(chain_ix_[n + 1].at(c), j) = v;
    return gmat_.emplace(n, std::move(m)).first->second;
  }

  ChainMapReport verify_chain_map(int max_degree) {
    ChainMapReport rep;
    for (int n = 0; n < max_degree && rep.ok; ++n) {
      auto lhs = matmul(f_, comparison_matrix(n + 1), sigma_coboundary(n));
      auto rhs = matmul(f_, hoch_->differential(n), comparison_matrix(n));
      if (!lhs.equal(f_, rhs)) {
        rep.ok = false;
        rep.detail = "matrix identity fails at degree " + std::to_string(n);
      }
    }
    // boundary intertwining on every non-ideal basis tuple
    for (int n = 0; n < max_degree && rep.ok; ++n) {
      for (const auto& t : hoch_->tensor_tuples(n + 1)) {
        auto paths = tuple_paths(t);
        Path full = paths[0];
        for (std::size_t i = 1; i < paths.size(); ++i) full = compose(A_->quiver(), full, paths[i]);
        if (A_->path_in_ideal(full)) continue;
        ChainValue lhs = boundary_image_of_tuple(paths);
        ChainValue rhs = boundary_of_value(chain_image(paths));
        if (!value_equal(lhs, rhs)) {
          rep.ok = false;
          rep.detail = "boundary identity fails on a degree-" + std::to_string(n + 1) + " tuple";
          break;
        }
      }
    }
    if (rep.ok && !well_defined_on_blocks()) {
      rep.ok = false;
      rep.detail = "comparison map not constant across relation mates";
    }
    return rep;
  }

  ContractionReport verify_contraction(int max_degree) {
    ContractionReport rep;
    if (!family_) return rep;
    rep.available = true;

    // homotopy conclusion per chain
    for (int n = 0; n <= max_degree && rep.ok; ++n) {
      for (const auto& chain : sigma_chains(n)) {
        ChainValue lhs;
        {
          auto g = contraction_value(chain);
          lhs = boundary_of_value(g);
          if (n >= 1) {
            ChainValue dc;
            add_term(dc, chain, f_.one());
            auto below = boundary_of_value(dc);
            for (const auto& [c, v] : below)
              for (const auto& [c2, v2] : contraction_value_map(c, v)) add_term(lhs, c2, v2);
          }
        }
        ChainValue rhs;
        add_term(rhs, chain, f_.one());
        if (n == 0) {
          int e = chain[0];
          int t = is_trivial_elem(e) ? trivial_vertex_of(e)
                                     : cls_->table().target(sigma_->members[e][0]);
          add_term(rhs, Chain{sigma_->vertex_elem[t]}, f_.neg(f_.one()));
        } else {
          std::vector<Path> us;
          bool omega_nonempty = false;
          for (int i = 1; i <= n; ++i) {
            const Path& u = family_->choice.at({chain[i - 1], chain[i]});
            if (u.trivial()) omega_nonempty = true;
            us.push_back(u);
          }
          if (!omega_nonempty) {
            auto tv = chain_image(us);
            for (auto& [c, v] : tv) add_term(rhs, c, f_.neg(v));
          }
          // with exactly one trivial choice at the last slot, the family
          // collapses: u(s_{n-2}, s_n) and u_{n-1} must share a class
          if (n >= 2 && us[n - 1].trivial()) {
            bool only_last = true;
            for (int i = 0; i + 1 < n; ++i)
              if (us[i].trivial()) only_last = false;
            if (only_last) {
              const Path& direct = family_->choice.at({chain[n - 2], chain[n]});
              if (cls_->class_of(direct) != cls_->class_of(us[n - 2])) {
                rep.ok = false;
                rep.detail = "family composite mismatch under a trivial last choice";
              }
            }
          }
        }
        if (rep.ok && !value_equal(lhs, rhs)) {
          rep.ok = false;
          rep.detail = "homotopy identity fails on a degree-" + std::to_string(n) + " chain";
          break;
        }
      }
    }

    // G T = 0 on tensor tuples
    for (int n = 0; n <= max_degree && rep.ok; ++n) {
      if (n == 0) {
        for (int v = 0; v < A_->quiver().vertex_count(); ++v) {
          auto gv = contraction_value(Chain{sigma_->vertex_elem[v]});
          if (!gv.empty()) {
            rep.ok = false;
            rep.detail = "contraction not vanishing on degree-0 images";
          }
        }
        continue;
      }
      for (const auto& t : hoch_->tensor_tuples(n)) {
        auto img = chain_image(tuple_paths(t));
        ChainValue acc;
        for (const auto& [c, v] : img)
          for (const auto& [c2, v2] : contraction_value_map(c, v)) add_term(acc, c2, v2);
        if (!acc.empty()) {
          rep.ok = false;
          rep.detail = "contraction does not vanish on a degree-" + std::to_string(n) +
                       " tuple image";
          break;
        }
      }
    }

    // kernel homotopy: (S B + B S) f = f on Ker of the comparison map
    for (int n = 0; n <= max_degree && rep.ok; ++n) {
      auto kernel = kernel_basis(f_, comparison_matrix(n));
      if (kernel.empty()) continue;
      auto gt_n = transpose(f_, contraction_matrix(n));
      Matrix<F> first = matmul(f_, gt_n, sigma_coboundary(n));
      std::optional<Matrix<F>> second;
      if (n >= 1)
        second = matmul(f_, sigma_coboundary(n - 1), transpose(f_, contraction_matrix(n - 1)));
      for (const auto& k : kernel) {
        auto lhs = matvec(f_, first, k);
        if (second) {
          auto add2 = matvec(f_, *second, k);
          for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = f_.add(lhs[i], add2[i]);
        }
        bool same = true;
        for (std::size_t i = 0; i < lhs.size(); ++i)
          if (!f_.eq(lhs[i], k[i])) same = false;
        if (!same) {
          rep.ok = false;
          rep.detail = "kernel homotopy fails at degree " + std::to_string(n);
          break;
        }
        if (n >= 1) {
          auto down = matvec(f_, transpose(f_, contraction_matrix(n - 1)), k);
          auto img = matvec(f_, comparison_matrix(n - 1), down);
          for (const auto& e : img)
            if (!f_.is_zero(e)) {
              rep.ok = false;
              rep.detail = "homotopy does not preserve the kernel at degree " + std::to_string(n);
              break;
            }
        }
      }
    }
    return rep;
  }

  InducedMapReport induced_map(int n) {
    InducedMapReport rep;
    rep.diagonal_one = A_->diagonal_one_dimensional();
    auto kernel = kernel_basis(f_, sigma_coboundary(n));
    std::size_t rank_b_prev = n == 0 ? 0 : rank(f_, sigma_coboundary(n - 1));
    rep.domain_dim = kernel.size() - rank_b_prev;
    const auto& bn = hoch_->differential(n);
    std::size_t hoch_rank_prev = n == 0 ? 0 : rank(f_, hoch_->differential(n - 1));
    rep.codomain_dim = hoch_->cochain_dim(n) - rank(f_, bn) - hoch_rank_prev;
    rep.prev_surjective =
        n == 0 || rank(f_, comparison_matrix(n - 1)) == hoch_->cochain_dim(n - 1);

    std::vector<std::vector<Elem>> image_cols;
    for (const auto& k : kernel) image_cols.push_back(matvec(f_, comparison_matrix(n), k));
    auto img = from_columns(f_, image_cols, hoch_->cochain_dim(n));
    if (n == 0) {
      rep.image_rank = rank(f_, img);
    } else {
      const auto& cob = hoch_->differential(n - 1);
      rep.image_rank = rank(f_, hstack(f_, img, cob)) - rank(f_, cob);
    }
    rep.injective = rep.image_rank == rep.domain_dim;
    rep.surjective = rep.image_rank == rep.codomain_dim;
    return rep;
  }

private:
  static std::string tuple_key(const std::vector<Path>& tuple) {
    std::string k;
    for (const auto& p : tuple) {
      k += std::to_string(p.src);
      for (int a : p.arrows) k += ':' + std::to_string(a);
      k += '|';
    }
    return k;
  }

  void add_term(ChainValue& v, const Chain& c, const Elem& x) {
    auto it = v.find(c);
    if (it == v.end()) {
      if (!f_.is_zero(x)) v.emplace(c, x);
      return;
    }
    it->second = f_.add(it->second, x);
    if (f_.is_zero(it->second)) v.erase(it);
  }

  Chain append(const Chain& c, int elem) const {
    if (!sigma_->poset.greater(c.back(), elem))
      throw ModelError("chain extension violates the order");
    Chain out = c;
    out.push_back(elem);
    return out;
  }

  bool value_equal(const ChainValue& a, const ChainValue& b) const {
    if (a.size() != b.size()) return false;
    auto it = b.begin();
    for (const auto& [c, v] : a) {
      if (it->first != c || !f_.eq(it->second, v)) return false;
      ++it;
    }
    return true;
  }

  int element_of_path(const Path& p) const {
    if (p.length() > cls_->table().max_len()) return -1;  // lies in F^m
    int r = cls_->find(cls_->table().id_of(p));
    if (cls_->touches_ideal(r)) return -1;
    return sigma_->elem_of_root.at(r);
  }

  bool is_trivial_elem(int e) const {
    return cls_->table().path(sigma_->members[e][0]).trivial();
  }
  int trivial_vertex_of(int e) const { return cls_->table().path(sigma_->members[e][0]).src; }

  std::vector<Path> tuple_paths(const std::vector<int>& t) const {
    std::vector<Path> out;
    for (int ord : t) out.push_back(A_->basis_path(ord));
    return out;
  }

  std::vector<std::pair<int, Elem>> tuple_product(const std::vector<int>& t) const {
    std::vector<std::pair<int, Elem>> acc{{t[0], f_.one()}};
    for (std::size_t i = 1; i < t.size(); ++i) {
      std::map<int, Elem> next;
      for (const auto& [ord, c] : acc)
        for (const auto& [b, mu] : A_->product(ord, t[i])) {
          auto [it, fresh] = next.emplace(b, f_.mul(c, mu));
          if (!fresh) it->second = f_.add(it->second, f_.mul(c, mu));
        }
      acc.assign(next.begin(), next.end());
    }
    std::erase_if(acc, [&](const auto& e) { return f_.is_zero(e.second); });
    return acc;
  }

  // chain boundary, linear over a value; zero on degree-0 chains
  ChainValue boundary_of_value(const ChainValue& v) {
    ChainValue out;
    for (const auto& [c, x] : v) {
      if (c.size() < 2) continue;
      bool neg = false;
      for (std::size_t omit = 0; omit < c.size(); ++omit) {
        Chain smaller;
        for (std::size_t k = 0; k < c.size(); ++k)
          if (k != omit) smaller.push_back(c[k]);
        add_term(out, smaller, neg ? f_.neg(x) : x);
        neg = !neg;
      }
    }
    return out;
  }

  std::map<Chain, Elem> contraction_value_map(const Chain& c, const Elem& scale) {
    std::map<Chain, Elem> out;
    for (const auto& [c2, v] : contraction_value(c)) out[c2] = f_.mul(v, scale);
    return out;
  }

  // T applied to the alternating tuple boundary, for the intertwining test.
  ChainValue boundary_image_of_tuple(const std::vector<Path>& tuple) {
    ChainValue out;
    for (const auto& term : tuple_boundary(A_->quiver(), tuple)) {
      ChainValue img = term.tuple.size() == 1 && term.tuple[0].trivial()
                           ? vertex_chain_image(term.tuple[0].src)
                           : chain_image(term.tuple);
      for (auto& [c, v] : img) add_term(out, c, term.sign < 0 ? f_.neg(v) : v);
    }
    return out;
  }

  // Relation mates must produce identical chain images and the relation
  // itself must die in the algebra.
  bool well_defined_on_blocks() {
    auto blocks = A_->minimal_relation_blocks();
    for (const auto& [pair, blist] : blocks.blocks)
      for (const auto& block : blist) {
        if (block.size() < 2) continue;
        auto first = chain_image({cls_->table().path(block[0])});
        for (std::size_t i = 1; i < block.size(); ++i)
          if (!value_equal(first, chain_image({cls_->table().path(block[i])}))) return false;
      }
    return true;
  }

  HochschildComplex<F>* hoch_;
  const BoundAlgebra<F>* A_;
  F f_;
  const PathClasses* cls_;
  const AssociatedPoset* sigma_;
  std::optional<CompatibleFamily> family_;

  std::vector<std::vector<Chain>> chains_;
  std::vector<std::map<Chain, int>> chain_ix_;
  std::map<std::string, ChainValue> t_memo_;
  std::map<Chain, ChainValue> g_memo_;
  std::map<int, Matrix<F>> phi_, cob_, gmat_;
};

// The explicit cochain isomorphism for an incidence algebra: bijectivity
// degree by degree, and commutation with both coboundaries.
template <class F>
EpsilonReport verify_incidence_iso(const F& f, const Poset& poset, int max_degree) {
  EpsilonReport rep;
  auto pres = incidence_presentation(poset);
  BoundAlgebra<F> A(f, pres);
  HochschildComplex<F> hoch(A);

  std::vector<Matrix<F>> eps;
  for (int n = 0; n <= max_degree; ++n) {
    const auto& cb = hoch.cochain_basis(n);
    auto cols = chains(poset, n);
    std::map<std::vector<int>, int> col_ix;
    for (std::size_t i = 0; i < cols.size(); ++i) col_ix[cols[i]] = static_cast<int>(i);
    Matrix<F> m(f, cb.items.size(), cols.size());
    if (n == 0) {
      for (int v = 0; v < A.quiver().vertex_count(); ++v) {
        int ord = A.basis_ord_of(A.table().trivial_id(v));
        m.at(cb.row(v, ord), col_ix.at({v})) = f.one();
      }
    } else {
      const auto& tuples = hoch.tensor_tuples(n);
      for (std::size_t tix = 0; tix < tuples.size(); ++tix) {
        std::vector<int> chain{A.basis(tuples[tix][0]).x};
        for (int ord : tuples[tix]) chain.push_back(A.basis(ord).y);
        std::vector<std::pair<int, typename F::Elem>> acc{{tuples[tix][0], f.one()}};
        for (std::size_t i = 1; i < tuples[tix].size(); ++i) {
          std::vector<std::pair<int, typename F::Elem>> next;
          for (const auto& [ord, c] : acc)
            for (const auto& [b, mu] : A.product(ord, tuples[tix][i]))
              next.emplace_back(b, f.mul(c, mu));
          acc = std::move(next);
        }
        for (const auto& [b, c] : acc)
          m.at(cb.row(static_cast<int>(tix), b), col_ix.at(chain)) =
              f.add(m.at(cb.row(static_cast<int>(tix), b), col_ix.at(chain)), c);
      }
    }
    if (m.rows() != m.cols() || rank(f, m) != m.rows()) rep.bijective = false;
    eps.push_back(std::move(m));
  }
  for (int n = 0; n < max_degree; ++n) {
    auto bn = simplicial_boundary(f, poset, n);
    auto lhs = matmul(f, eps[n + 1], transpose(f, bn));
    auto rhs = matmul(f, hoch.differential(n), eps[n]);
    if (!lhs.equal(f, rhs)) rep.commutes = false;
  }
  rep.sh_dims = simplicial_cohomology_dims(f, poset, max_degree);
  rep.hh_dims = hoch.dims(max_degree);
  return rep;
}

}  // namespace qhh
