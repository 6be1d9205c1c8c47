#include "peelkit/peeling.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "peelkit/combinatorics.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/geom.hpp"

namespace peelkit {

namespace {

PeelState mask_of(const std::vector<std::size_t>& idx) {
  PeelState m = 0;
  for (auto i : idx) m |= bit(i);
  return m;
}

}  // namespace

HullIndex::HullIndex(const PointSet& p) : n_(p.size()), dim_(p.dim), containers_(p.size()) {
  if (n_ > 64) throw InputError("peeling supports at most 64 points");
  require_general_position(p);
  const std::size_t k = static_cast<std::size_t>(dim_) + 1;
  if (n_ <= k) return;

  std::unordered_map<PeelState, int> sign_of;
  std::vector<Point> simplex(k);
  for_each_combination(n_, k, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t j = 0; j < k; ++j) simplex[j] = p[idx[j]];
    sign_of.emplace(mask_of(idx), orientation(simplex, dim_));
    return true;
  });

  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != i) others.push_back(j);
    }
    for_each_combination(others.size(), k, [&](const std::vector<std::size_t>& sel) {
      std::vector<std::size_t> t(k);
      for (std::size_t j = 0; j < k; ++j) t[j] = others[sel[j]];
      const PeelState tm = mask_of(t);
      const int s = sign_of.at(tm);
      // Replacing vertex t_j by i must keep the orientation for every j.
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t below = 0;
        for (std::size_t r = 0; r < k; ++r) {
          if (r != j && t[r] < i) ++below;
        }
        const std::size_t moves = below > j ? below - j : j - below;
        const int parity = (moves % 2 == 0) ? 1 : -1;
        const int replaced = sign_of.at((tm & ~bit(t[j])) | bit(i)) * parity;
        if (replaced != s) return true;
      }
      containers_[i].push_back(tm);
      return true;
    });
  }
}

PeelState HullIndex::hull(PeelState state) const {
  PeelState out = 0;
  for (PeelState rest = state; rest; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(__builtin_ctzll(rest));
    bool inside = false;
    for (PeelState t : containers_[i]) {
      if ((t & ~state) == 0) {
        inside = true;
        break;
      }
    }
    if (!inside) out |= bit(i);
  }
  return out;
}

void for_each_reachable_state(const HullIndex& index,
                              const std::function<bool(PeelState, PeelState)>& fn) {
  std::unordered_set<PeelState> seen;
  std::vector<PeelState> stack{index.full()};
  seen.insert(index.full());
  while (!stack.empty()) {
    const PeelState s = stack.back();
    stack.pop_back();
    const PeelState h = index.hull(s);
    if (!fn(s, h)) return;
    for (PeelState rest = h; rest; rest &= rest - 1) {
      const PeelState next = s & ~(rest & -rest);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
}

BigCount factorial(unsigned n) {
  BigCount f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

namespace {

class MemoCounter {
 public:
  MemoCounter(const HullIndex& index, std::uint64_t budget) : index_(index), budget_(budget) {}

  BigCount count(PeelState state) {
    const int k = popcount(state);
    if (k <= 1) return 1;
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;
    const PeelState h = index_.hull(state);
    BigCount total = 0;
    if (h == state) {
      // Convex position persists in every subset.
      total = factorial(static_cast<unsigned>(k));
    } else {
      for (PeelState rest = h; rest; rest &= rest - 1) total += count(state & ~(rest & -rest));
    }
    if (memo_.size() >= budget_) {
      throw ResourceError("peel_count exceeded the state budget of " + std::to_string(budget_) + " states");
    }
    memo_.emplace(state, total);
    return total;
  }

  std::uint64_t visited() const { return memo_.size(); }

 private:
  const HullIndex& index_;
  std::uint64_t budget_;
  std::unordered_map<PeelState, BigCount> memo_;
};

void enumerate_into(const HullIndex& index, PeelState state, std::vector<std::size_t>& prefix,
                    std::size_t limit, std::vector<std::vector<std::size_t>>& out) {
  if (out.size() >= limit) return;
  if (state == 0) {
    out.push_back(prefix);
    return;
  }
  const PeelState h = index.hull(state);
  for (PeelState rest = h; rest && out.size() < limit; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(__builtin_ctzll(rest));
    prefix.push_back(v);
    enumerate_into(index, state & ~bit(v), prefix, limit, out);
    prefix.pop_back();
  }
}

PointSet restrict_to(const PointSet& p, PeelState state) {
  PointSet out(p.dim, {});
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (state & bit(i)) out.points.push_back(p[i]);
  }
  return out;
}

std::vector<std::size_t> indices_of(PeelState state) {
  std::vector<std::size_t> out;
  for (PeelState rest = state; rest; rest &= rest - 1) out.push_back(static_cast<std::size_t>(__builtin_ctzll(rest)));
  return out;
}

BigCount naive_dfs(const PointSet& p, PeelState state) {
  if (popcount(state) <= 1) return 1;
  const auto members = indices_of(state);
  const auto local_hull = hull_vertices(restrict_to(p, state));
  BigCount total = 0;
  for (auto li : local_hull) total += naive_dfs(p, state & ~bit(members[li]));
  return total;
}

}  // namespace

PeelReport peel_count(const PointSet& p, const PeelOptions& options) {
  HullIndex index(p);
  MemoCounter counter(index, options.state_budget);
  PeelReport report;
  report.count = counter.count(index.full());
  report.visited_states = counter.visited();
  if (options.enumerate > 0) report.enumerated = peel_enumerate(p, options.enumerate);
  return report;
}

BigCount peel_count_naive(const PointSet& p, const PeelOptions& options) {
  if (p.size() > options.naive_limit) {
    throw InputError("naive counting is limited to " + std::to_string(options.naive_limit) + " points");
  }
  require_general_position(p);
  if (p.empty()) return 1;
  return naive_dfs(p, p.size() == 64 ? ~PeelState{0} : (PeelState{1} << p.size()) - 1);
}

bool is_peeling_sequence(const PointSet& p, const std::vector<std::size_t>& seq) {
  if (seq.size() != p.size()) return false;
  std::vector<bool> used(p.size(), false);
  for (auto v : seq) {
    if (v >= p.size() || used[v]) return false;
    used[v] = true;
  }
  PointSet rest = p;
  std::vector<std::size_t> alive(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) alive[i] = i;
  for (auto v : seq) {
    const auto pos = static_cast<std::size_t>(std::find(alive.begin(), alive.end(), v) - alive.begin());
    PointSet others(p.dim, {});
    for (std::size_t j = 0; j < alive.size(); ++j) {
      if (j != pos) others.points.push_back(p[alive[j]]);
    }
    if (!others.empty() && convex_membership(p[v], others).is_member()) return false;
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return true;
}

std::vector<std::vector<std::size_t>> peel_enumerate(const PointSet& p, std::size_t limit) {
  HullIndex index(p);
  std::vector<std::vector<std::size_t>> out;
  if (limit == 0) return out;
  std::vector<std::size_t> prefix;
  enumerate_into(index, index.full(), prefix, limit, out);
  for (const auto& seq : out) {
    if (!is_peeling_sequence(p, seq)) throw CertificationError("enumerated sequence failed LP validation");
  }
  return out;
}

bool defends_by_peeling(const PointSet& s, const Point& p, int m) {
  if (m < 1) throw InputError("defends_by_peeling needs m >= 1");
  const PointSet united = s.with_point(p);
  HullIndex index(united);
  const PeelState target = bit(s.size());
  std::unordered_set<PeelState> frontier{index.full()};
  for (int step = 0; step < m; ++step) {
    std::unordered_set<PeelState> next;
    for (PeelState state : frontier) {
      const PeelState h = index.hull(state);
      if (h & target) return false;
      for (PeelState rest = h; rest; rest &= rest - 1) next.insert(state & ~(rest & -rest));
    }
    frontier = std::move(next);
  }
  return true;
}

namespace {

struct StateSetHash {
  std::size_t operator()(const std::vector<PeelState>& v) const {
    std::size_t h = v.size();
    for (auto s : v) h ^= std::hash<PeelState>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Counts distinct block strings as paths in the subset-construction automaton
// whose nodes are sets of peel states reached by the same symbol prefix.
class SymbolCounter {
 public:
  SymbolCounter(const HullIndex& index, std::vector<int> block_of, int blocks)
      : index_(index), block_of_(std::move(block_of)), blocks_(blocks) {}

  BigCount count(const std::vector<PeelState>& node) {
    if (node.size() == 1 && node[0] == 0) return 1;
    if (auto it = memo_.find(node); it != memo_.end()) return it->second;
    std::vector<std::vector<PeelState>> succ(static_cast<std::size_t>(blocks_));
    for (PeelState s : node) {
      const PeelState h = index_.hull(s);
      for (PeelState rest = h; rest; rest &= rest - 1) {
        const auto v = static_cast<std::size_t>(__builtin_ctzll(rest));
        succ[static_cast<std::size_t>(block_of_[v])].push_back(s & ~bit(v));
      }
    }
    BigCount total = 0;
    for (auto& next : succ) {
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      total += count(next);
    }
    memo_.emplace(node, total);
    return total;
  }

  std::uint64_t states() const { return memo_.size(); }

 private:
  const HullIndex& index_;
  std::vector<int> block_of_;
  int blocks_;
  std::unordered_map<std::vector<PeelState>, BigCount, StateSetHash> memo_;
};

}  // namespace

SimplifiedReport simplified_census(const PointSet& p, const PeelOptions& options) {
  if (!p.blocks) throw InputError("simplified_census needs block labels");
  if (p.size() > options.census_limit) {
    throw InputError("simplified census is limited to " + std::to_string(options.census_limit) + " points");
  }
  HullIndex index(p);
  std::map<int, int> dense;
  for (int b : *p.blocks) dense.emplace(b, static_cast<int>(dense.size()));
  std::vector<int> block_of;
  for (int b : *p.blocks) block_of.push_back(dense.at(b));

  SimplifiedReport report;
  SymbolCounter counter(index, block_of, static_cast<int>(dense.size()));
  report.distinct_sequences = counter.count({index.full()});
  report.symbol_states = counter.states();

  for_each_reachable_state(index, [&](PeelState, PeelState h) {
    std::vector<bool> active(dense.size(), false);
    int n_active = 0;
    for (PeelState rest = h; rest; rest &= rest - 1) {
      const auto b = static_cast<std::size_t>(block_of[static_cast<std::size_t>(__builtin_ctzll(rest))]);
      if (!active[b]) {
        active[b] = true;
        ++n_active;
      }
    }
    report.max_active_blocks = std::max(report.max_active_blocks, n_active);
    return true;
  });
  return report;
}

LowerBoundAudit lower_bound_audit(const PointSet& p) {
  HullIndex index(p);
  LowerBoundAudit audit;
  const int need = p.dim + 1;
  for_each_reachable_state(index, [&](PeelState s, PeelState h) {
    ++audit.states_checked;
    if (popcount(s) > p.dim && popcount(h) < need) {
      audit.holds = false;
      audit.violation = s;
      return false;
    }
    return true;
  });
  return audit;
}

}  // namespace peelkit
