#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qhh/matrix.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

// Finite poset: element names plus the strict order relation. The Hasse
// cover list is derived and regenerates the order by transitive closure.
class Poset {
public:
  Poset() = default;
  // `gt` lists generating pairs (a, b) meaning a > b; the transitive
  // closure is taken. Throws ModelError on a cycle.
  Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& gt);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  bool greater(int a, int b) const { return gt_[a][b]; }  // strict
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  Poset restrict_to(const std::vector<int>& keep) const;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> gt_;
  std::vector<std::pair<int, int>> covers_;
  void close_and_check();
};

Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& filename);
std::string serialize_poset(const Poset& p);

// All strict chains s_0 > ... > s_n, lexicographic in element indices.
std::vector<std::vector<int>> chains(const Poset& p, int degree);

// Matrix of the chain boundary SC_{n+1} -> SC_n (alternating omission);
// the simplicial coboundary B^n is its transpose.
template <class F>
Matrix<F> simplicial_boundary(const F& f, const Poset& p, int degree) {
  auto lo = chains(p, degree);
  auto hi = chains(p, degree + 1);
  std::vector<std::vector<int>> lo_sorted = lo;
  auto row_of = [&](const std::vector<int>& c) {
    auto it = std::lower_bound(lo.begin(), lo.end(), c);
    return static_cast<std::size_t>(it - lo.begin());
  };
  Matrix<F> m(f, lo.size(), hi.size());
  for (std::size_t j = 0; j < hi.size(); ++j) {
    bool neg = false;
    for (std::size_t omit = 0; omit < hi[j].size(); ++omit) {
      std::vector<int> c;
      for (std::size_t k = 0; k < hi[j].size(); ++k)
        if (k != omit) c.push_back(hi[j][k]);
      auto i = row_of(c);
      m.at(i, j) = f.add(m.at(i, j), neg ? f.neg(f.one()) : f.one());
      neg = !neg;
    }
  }
  return m;
}

// dim SH^n = nullity(B^n) - rank(B^{n-1}) for 0 <= n <= max_degree.
template <class F>
std::vector<std::size_t> simplicial_cohomology_dims(const F& f, const Poset& p, int max_degree) {
  std::vector<std::size_t> dims;
  std::size_t prev_rank = 0;
  for (int n = 0; n <= max_degree; ++n) {
    std::size_t cn = chains(p, n).size();
    auto bn = simplicial_boundary(f, p, n);  // = delta_{n+1}; rank(B^n) = rank(delta_{n+1})
    std::size_t r = rank(f, bn);
    dims.push_back(cn - r - prev_rank);
    prev_rank = r;
  }
  return dims;
}

// Igusa-Zacharia reduction: repeatedly delete the first interior element
// whose up-set has fewer than two minimal elements or whose down-set has
// fewer than two maximal elements.
Poset iz_reduce(const Poset& p);

// The incidence-algebra presentation: quiver = Hasse diagram, generators =
// all pairwise differences of parallel Hasse paths, bound = longest chain
// edge count + 1 (floored at 2).
Presentation incidence_presentation(const Poset& p);

}  // namespace qhh
