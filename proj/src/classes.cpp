#include "qhh/classes.hpp"

#include <algorithm>

namespace qhh {

PathClasses::PathClasses(const PathTable& table) : table_(&table) {
  int n = table.size();
  parent_.resize(n);
  members_.resize(n);
  flag_.assign(n, 0);
  reason_.resize(n);
  for (int i = 0; i < n; ++i) {
    parent_[i] = i;
    members_[i] = {i};
  }
}

int PathClasses::find(int p) const {
  while (parent_[p] != p) p = parent_[p] = parent_[parent_[p]];
  return p;
}

bool PathClasses::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (members_[a].size() < members_[b].size()) std::swap(a, b);
  // equivalent paths always share endpoints
  if (table_->source(members_[a][0]) != table_->source(members_[b][0]) ||
      table_->target(members_[a][0]) != table_->target(members_[b][0]))
    throw ModelError("class union across different endpoints");
  parent_[b] = a;
  members_[a].insert(members_[a].end(), members_[b].begin(), members_[b].end());
  members_[b].clear();
  if (flag_[b]) {
    flag_[a] = 1;
    if (!reason_[a]) reason_[a] = reason_[b];
  }
  return true;
}

bool PathClasses::set_flag(int root, const Path& reason) {
  root = find(root);
  if (flag_[root]) return false;
  flag_[root] = 1;
  reason_[root] = reason;
  return true;
}

std::vector<int> PathClasses::roots() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
    if (find(i) == i) out.push_back(i);
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    return *std::min_element(members_[a].begin(), members_[a].end()) <
           *std::min_element(members_[b].begin(), members_[b].end());
  });
  return out;
}

AssociatedPoset build_sigma(const PathClasses& cls) {
  const PathTable& table = cls.table();
  const Quiver& q = table.quiver();

  AssociatedPoset out;
  for (int r : cls.roots()) {
    if (cls.touches_ideal(r)) continue;
    int e = static_cast<int>(out.roots.size());
    out.roots.push_back(r);
    out.elem_of_root[r] = e;
    auto mem = cls.members(r);
    std::sort(mem.begin(), mem.end());
    out.members.push_back(std::move(mem));
  }
  int n = static_cast<int>(out.roots.size());

  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int j = 0; j < n; ++j) {
    for (int pid : out.members[j]) {
      const Path& p = table.path(pid);
      int len = p.length();
      std::vector<int> at(len + 1);  // vertex at each cut point
      at[0] = p.src;
      for (int k = 0; k < len; ++k) at[k + 1] = q.arrow(p.arrows[k]).tgt;
      for (int a = 0; a <= len; ++a)
        for (int b = a; b <= len; ++b) {
          Path prefix{p.src, {p.arrows.begin(), p.arrows.begin() + a}};
          Path mid{at[a], {p.arrows.begin() + a, p.arrows.begin() + b}};
          Path suffix{at[b], {p.arrows.begin() + b, p.arrows.end()}};
          int rm = cls.find(table.id_of(mid));
          if (cls.touches_ideal(rm)) continue;
          if (cls.touches_ideal(cls.find(table.id_of(prefix)))) continue;
          if (cls.touches_ideal(cls.find(table.id_of(suffix)))) continue;
          geq[out.elem_of_root.at(rm)][j] = true;
        }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && geq[i][j] && geq[j][i])
        throw ModelError("not a poset; presentation is not homotopy coherent");

  // the printed representative is the lex-latest member, matching the
  // basis-representative convention of the quotient algebra
  std::vector<std::string> labels;
  for (int e = 0; e < n; ++e)
    labels.push_back("[" + path_str(q, table.path(out.members[e].back())) + "]");
  std::vector<std::pair<int, int>> gt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && geq[i][j]) gt.emplace_back(i, j);
  out.poset = Poset(std::move(labels), gt);

  out.vertex_elem.assign(q.vertex_count(), -1);
  for (int v = 0; v < q.vertex_count(); ++v) {
    int r = cls.find(table.trivial_id(v));
    auto it = out.elem_of_root.find(r);
    if (it != out.elem_of_root.end()) out.vertex_elem[v] = it->second;
  }
  return out;
}

namespace {

// Candidate chosen paths for the pair s > s': the suffix (right) or prefix
// (left) parts of factorizations member(s') = prefix . w . suffix with
// w a member of s and both flank classes clean.
std::vector<Path> pair_candidates(const PathClasses& cls, const AssociatedPoset& sigma, int s,
                                  int sp, Side side) {
  const PathTable& table = cls.table();
  const Quiver& q = table.quiver();
  std::vector<int> ids;
  for (int pid : sigma.members[sp]) {
    const Path& p = table.path(pid);
    int len = p.length();
    std::vector<int> at(len + 1);
    at[0] = p.src;
    for (int k = 0; k < len; ++k) at[k + 1] = q.arrow(p.arrows[k]).tgt;
    for (int a = 0; a <= len; ++a)
      for (int b = a; b <= len; ++b) {
        Path prefix{p.src, {p.arrows.begin(), p.arrows.begin() + a}};
        Path mid{at[a], {p.arrows.begin() + a, p.arrows.begin() + b}};
        Path suffix{at[b], {p.arrows.begin() + b, p.arrows.end()}};
        int rm = cls.find(table.id_of(mid));
        if (cls.touches_ideal(rm) || sigma.elem_of_root.at(rm) != s) continue;
        int rpre = cls.find(table.id_of(prefix));
        int rsuf = cls.find(table.id_of(suffix));
        if (cls.touches_ideal(rpre) || cls.touches_ideal(rsuf)) continue;
        ids.push_back(side == Side::Right ? table.id_of(suffix) : table.id_of(prefix));
      }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Path> out;
  for (int id : ids) out.push_back(table.path(id));
  return out;
}

}  // namespace

std::optional<CompatibleFamily> find_compatible_family(const PathClasses& cls,
                                                       const AssociatedPoset& sigma, Side side) {
  const PathTable& table = cls.table();
  const Quiver& q = table.quiver();
  int n = sigma.poset.size();

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sigma.poset.greater(i, j)) pairs.emplace_back(i, j);
  std::map<std::pair<int, int>, int> pair_ix;
  for (std::size_t k = 0; k < pairs.size(); ++k) pair_ix[pairs[k]] = static_cast<int>(k);

  std::vector<std::vector<Path>> cands(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    cands[k] = pair_candidates(cls, sigma, pairs[k].first, pairs[k].second, side);
    if (cands[k].empty()) return std::nullopt;
  }

  // 2-chain constraints, each listing the three pair slots it relates.
  struct Constraint {
    int outer, first, second;  // pair indices for (s,s''), (s,s'), (s',s'')
  };
  std::vector<std::vector<Constraint>> by_last_slot(pairs.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!sigma.poset.greater(i, j) || !sigma.poset.greater(j, k)) continue;
        Constraint c{pair_ix[{i, k}], pair_ix[{i, j}], pair_ix[{j, k}]};
        int last = std::max({c.outer, c.first, c.second});
        by_last_slot[last].push_back(c);
      }

  std::vector<int> pick(pairs.size(), -1);
  auto class_of_composite = [&](const Path& a, const Path& b) -> int {
    auto c = try_compose(q, a, b);
    if (!c || c->length() > table.max_len()) return -1;  // lands in the ideal
    int r = cls.find(table.id_of(*c));
    return cls.touches_ideal(r) ? -1 : r;
  };
  auto satisfied = [&](const Constraint& c) {
    const Path& u_outer = cands[c.outer][pick[c.outer]];
    const Path& u_first = cands[c.first][pick[c.first]];
    const Path& u_second = cands[c.second][pick[c.second]];
    int composite = side == Side::Right ? class_of_composite(u_first, u_second)
                                        : class_of_composite(u_second, u_first);
    return composite >= 0 && composite == cls.find(table.id_of(u_outer));
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t slot) -> bool {
    if (slot == pairs.size()) return true;
    for (std::size_t c = 0; c < cands[slot].size(); ++c) {
      pick[slot] = static_cast<int>(c);
      bool ok = true;
      for (const auto& con : by_last_slot[slot])
        if (!satisfied(con)) {
          ok = false;
          break;
        }
      if (ok && assign(slot + 1)) return true;
    }
    pick[slot] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;

  CompatibleFamily fam;
  fam.right = side == Side::Right;
  for (std::size_t k = 0; k < pairs.size(); ++k) fam.choice[pairs[k]] = cands[k][pick[k]];
  return fam;
}

}  // namespace qhh
