#pragma once

#include <unordered_map>
#include <vector>

#include "qhh/algebra.hpp"

namespace qhh {

// Streaming rank: rows are inserted one at a time and reduced against the
// held echelon rows. Keeps at most `cols` rows in memory.
template <class F>
class RankAccumulator {
public:
  using Elem = typename F::Elem;
  RankAccumulator(const F& f, std::size_t cols)
      : f_(f), cols_(cols), row_with_pivot_(cols, -1) {}

  bool insert(std::vector<Elem> v) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (f_.is_zero(v[c])) continue;
      int r = row_with_pivot_[c];
      if (r < 0) {
        auto s = f_.inv(v[c]);
        for (std::size_t j = c; j < cols_; ++j) v[j] = f_.mul(v[j], s);
        row_with_pivot_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      auto t = v[c];
      const auto& row = rows_[r];
      for (std::size_t j = c; j < cols_; ++j) v[j] = f_.sub(v[j], f_.mul(t, row[j]));
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

private:
  const F& f_;
  std::size_t cols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<int> row_with_pivot_;
};

// The cochain complex Hom_{E^e}(rad A^{(x)n}, A) with the alternating
// differential; cochain bases are (tensor tuple, target basis element)
// pairs in lexicographic order.
template <class F>
class HochschildComplex {
public:
  using Elem = typename F::Elem;

  explicit HochschildComplex(const BoundAlgebra<F>& A) : A_(&A), f_(A.field()) {}
  explicit HochschildComplex(BoundAlgebra<F>&&) = delete;  // keeps a reference

  const BoundAlgebra<F>& algebra() const { return *A_; }

  // Composable tuples of positive-length basis paths, degree >= 1.
  const std::vector<std::vector<int>>& tensor_tuples(int n) {
    ensure_tuples(n);
    return tuples_[n];
  }

  int tuple_source(const std::vector<int>& t) const { return A_->basis(t.front()).x; }
  int tuple_target(const std::vector<int>& t) const { return A_->basis(t.back()).y; }

  // Cochain basis: degree 0 pairs (vertex, a in A(v,v)); degree n >= 1
  // pairs (tuple, a in A(s(tuple), t(tuple))).
  struct CochainBasis {
    std::vector<std::pair<int, int>> items;  // (vertex or tuple index, basis ord)
    std::unordered_map<long long, int> pos;
    int row(int container, int ord) const {
      return pos.at((static_cast<long long>(container) << 32) | static_cast<unsigned>(ord));
    }
  };

  const CochainBasis& cochain_basis(int n) {
    ensure_cochains(n);
    return cochains_[n];
  }

  std::size_t cochain_dim(int n) { return cochain_basis(n).items.size(); }

  // Matrix of b^n : C^n -> C^{n+1}.
  const Matrix<F>& differential(int n) {
    ensure_cochains(n + 1);
    auto it = diff_.find(n);
    if (it != diff_.end()) return it->second;
    return diff_.emplace(n, build_differential(n)).first->second;
  }

  std::vector<std::size_t> dims(int max_degree) {
    std::vector<std::size_t> out;
    std::size_t prev_rank = 0;
    for (int n = 0; n <= max_degree; ++n) {
      std::size_t r = rank(f_, differential(n));
      out.push_back(cochain_dim(n) - r - prev_rank);
      prev_rank = r;
    }
    return out;
  }

  std::vector<std::vector<Elem>> cocycles(int n) { return kernel_basis(f_, differential(n)); }

private:
  void ensure_tuples(int n) {
    if (static_cast<int>(tuples_.size()) > n) return;
    if (tuples_.empty()) tuples_.push_back({});  // degree 0 placeholder
    while (static_cast<int>(tuples_.size()) <= n) {
      int d = static_cast<int>(tuples_.size());
      std::vector<std::vector<int>> next;
      if (d == 1) {
        for (int r : A_->rad_basis()) next.push_back({r});
      } else {
        for (const auto& t : tuples_[d - 1])
          for (int r : A_->rad_basis()) {
            if (A_->basis(r).x != tuple_target(t)) continue;
            auto ext = t;
            ext.push_back(r);
            next.push_back(std::move(ext));
          }
      }
      tuple_ix_.emplace_back();
      auto& ix = tuple_ix_.back();
      for (std::size_t i = 0; i < next.size(); ++i) ix[tuple_key(next[i])] = static_cast<int>(i);
      tuples_.push_back(std::move(next));
    }
  }

  void ensure_cochains(int n) {
    ensure_tuples(n);
    while (static_cast<int>(cochains_.size()) <= n) {
      int d = static_cast<int>(cochains_.size());
      CochainBasis cb;
      if (d == 0) {
        for (int v = 0; v < A_->quiver().vertex_count(); ++v)
          for (int a : A_->pair_basis(v, v)) cb.items.emplace_back(v, a);
      } else {
        for (std::size_t t = 0; t < tuples_[d].size(); ++t)
          for (int a : A_->pair_basis(tuple_source(tuples_[d][t]), tuple_target(tuples_[d][t])))
            cb.items.emplace_back(static_cast<int>(t), a);
      }
      for (std::size_t i = 0; i < cb.items.size(); ++i)
        cb.pos[(static_cast<long long>(cb.items[i].first) << 32) |
               static_cast<unsigned>(cb.items[i].second)] = static_cast<int>(i);
      cochains_.push_back(std::move(cb));
    }
  }

  static std::string tuple_key(const std::vector<int>& t) {
    std::string k;
    for (int v : t) k += std::to_string(v) + ',';
    return k;
  }

  int tuple_index(int degree, const std::vector<int>& t) const {
    return tuple_ix_[degree - 1].at(tuple_key(t));
  }

  Matrix<F> build_differential(int n) {
    const auto& hi = cochains_[n + 1];
    const auto& lo = cochains_[n];
    Matrix<F> m(f_, hi.items.size(), lo.items.size());
    auto add = [&](int row, int col, const Elem& v) { m.at(row, col) = f_.add(m.at(row, col), v); };

    if (n == 0) {
      // (b^0 f)(p) = p f(1) - f(1) p with f(1) the tuple of e_x images
      for (const auto& t : tuples_[1]) {
        int p = t[0];
        int s = A_->basis(p).x, tt = A_->basis(p).y;
        int tix = tuple_index(1, t);
        for (int a : A_->pair_basis(tt, tt))
          for (const auto& [b, c] : A_->product(p, a)) add(hi.row(tix, b), lo.row(tt, a), c);
        for (int a : A_->pair_basis(s, s))
          for (const auto& [b, c] : A_->product(a, p))
            add(hi.row(tix, b), lo.row(s, a), f_.neg(c));
      }
      return m;
    }

    for (const auto& t : tuples_[n + 1]) {
      int tix = tuple_index(n + 1, t);
      int a0 = t.front(), an = t.back();
      // outer left: a_0 . f(a_1 ... a_n)
      {
        std::vector<int> tail(t.begin() + 1, t.end());
        int col_t = tuple_index(n, tail);
        int s = A_->basis(tail.front()).x, e = A_->basis(tail.back()).y;
        for (int a : A_->pair_basis(s, e))
          for (const auto& [b, c] : A_->product(a0, a)) add(hi.row(tix, b), lo.row(col_t, a), c);
      }
      // interior merges
      bool neg = true;  // i = 1 sign
      for (int i = 1; i <= n; ++i) {
        for (const auto& [c, mu] : A_->product(t[i - 1], t[i])) {
          std::vector<int> merged;
          merged.reserve(n);
          for (int k = 0; k <= n; ++k) {
            if (k == i - 1) merged.push_back(c);
            else if (k != i) merged.push_back(t[k]);
          }
          int col_t = tuple_index(n, merged);
          for (int b : A_->pair_basis(tuple_source(t), tuple_target(t)))
            add(hi.row(tix, b), lo.row(col_t, b), neg ? f_.neg(mu) : mu);
        }
        neg = !neg;
      }
      // outer right: (-1)^{n+1} f(a_0 ... a_{n-1}) . a_n
      {
        std::vector<int> head(t.begin(), t.end() - 1);
        int col_t = tuple_index(n, head);
        int s = A_->basis(head.front()).x, e = A_->basis(head.back()).y;
        bool flip = (n + 1) % 2 == 1;
        for (int a : A_->pair_basis(s, e))
          for (const auto& [b, c] : A_->product(a, an))
            add(hi.row(tix, b), lo.row(col_t, a), flip ? f_.neg(c) : c);
      }
    }
    return m;
  }

  const BoundAlgebra<F>* A_;
  F f_;
  std::vector<std::vector<std::vector<int>>> tuples_;
  std::vector<std::unordered_map<std::string, int>> tuple_ix_;
  std::vector<CochainBasis> cochains_;
  std::unordered_map<int, Matrix<F>> diff_;
};

// Independent verification oracle: the full bar cochain complex
// Hom_k(A^{(x)n}, A) on the whole algebra, units included. Small inputs
// only; ranks are streamed so nothing quadratic in d^{n+1} is stored.
template <class F>
std::vector<std::size_t> oracle_bar_dims(const F& f, const BoundAlgebra<F>& A, int max_degree) {
  if (A.dim() > 8) throw ModelError("bar oracle is gated to dim A <= 8");
  if (max_degree > 3) throw ModelError("bar oracle is gated to degree <= 3");
  using Elem = typename F::Elem;
  int d = A.dim();

  auto coeff_of = [&](const std::vector<std::pair<int, Elem>>& prod, int b) -> Elem {
    for (const auto& [ord, c] : prod)
      if (ord == b) return c;
    return f.zero();
  };

  std::vector<std::size_t> ranks;  // rank of b^n for n = 0..max_degree
  for (int n = 0; n <= max_degree; ++n) {
    std::size_t cols = 1, rows_tuples = 1;
    for (int k = 0; k < n; ++k) cols *= d;
    for (int k = 0; k < n + 1; ++k) rows_tuples *= d;
    cols *= d;
    RankAccumulator<F> acc(f, cols);

    std::vector<int> tup(n + 1);
    for (std::size_t code = 0; code < rows_tuples; ++code) {
      std::size_t rem = code;
      for (int k = n; k >= 0; --k) {
        tup[k] = static_cast<int>(rem % d);
        rem /= d;
      }
      auto col_of = [&](const std::vector<int>& sigma, int target) {
        std::size_t ix = 0;
        for (int v : sigma) ix = ix * d + static_cast<unsigned>(v);
        return ix * d + static_cast<unsigned>(target);
      };
      for (int b = 0; b < d; ++b) {
        std::vector<Elem> row(cols, f.zero());
        bool nonzero = false;
        auto add = [&](std::size_t col, const Elem& v) {
          if (f.is_zero(v)) return;
          row[col] = f.add(row[col], v);
          nonzero = true;
        };
        if (n == 0) {
          for (int j = 0; j < d; ++j) {
            Elem c = f.sub(coeff_of(A.product(tup[0], j), b), coeff_of(A.product(j, tup[0]), b));
            add(static_cast<std::size_t>(j), c);
          }
        } else {
          std::vector<int> tail(tup.begin() + 1, tup.end());
          for (int a = 0; a < d; ++a)
            add(col_of(tail, a), coeff_of(A.product(tup[0], a), b));
          bool neg = true;
          for (int i = 1; i <= n; ++i) {
            for (const auto& [c, mu] : A.product(tup[i - 1], tup[i])) {
              std::vector<int> merged;
              for (int k = 0; k <= n; ++k) {
                if (k == i - 1) merged.push_back(c);
                else if (k != i) merged.push_back(tup[k]);
              }
              add(col_of(merged, b), neg ? f.neg(mu) : mu);
            }
            neg = !neg;
          }
          std::vector<int> head(tup.begin(), tup.end() - 1);
          bool flip = (n + 1) % 2 == 1;
          for (int a = 0; a < d; ++a) {
            Elem c = coeff_of(A.product(a, tup[n]), b);
            add(col_of(head, a), flip ? f.neg(c) : c);
          }
        }
        if (nonzero) acc.insert(std::move(row));
      }
    }
    ranks.push_back(acc.rank());
  }

  std::vector<std::size_t> out;
  std::size_t prev = 0;
  std::size_t dim_cn = d;  // dim C^n = d^{n+1}
  for (int n = 0; n <= max_degree; ++n) {
    out.push_back(dim_cn - ranks[n] - prev);
    prev = ranks[n];
    dim_cn *= d;
  }
  return out;
}

}  // namespace qhh
