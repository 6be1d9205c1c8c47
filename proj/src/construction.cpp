#include "peelkit/construction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "peelkit/bounds.hpp"
#include "peelkit/combinatorics.hpp"
#include "peelkit/defense.hpp"
#include "peelkit/enclosure.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/geom.hpp"
#include "peelkit/peeling.hpp"

namespace peelkit {

PointSet rotate(const PointSet& p, const Scalar& t) {
  if (t == 0 || p.dim == 1) return p;
  const Scalar c = (1 - t * t) / (1 + t * t);
  const Scalar s = 2 * t / (1 + t * t);
  PointSet out = p;
  for (auto& q : out.points) {
    for (std::size_t k = 1; k < q.size(); ++k) {
      const Scalar x = c * q[0] - s * q[k];
      const Scalar y = s * q[0] + c * q[k];
      q[0] = x;
      q[k] = y;
    }
  }
  return out;
}

namespace {

bool distinct_x(const PointSet& p) {
  std::set<Scalar> xs;
  for (const auto& q : p.points) {
    if (!xs.insert(q[0]).second) return false;
  }
  return true;
}

}  // namespace

Scalar choose_rotation(const PointSet& p, int max_q) {
  if (distinct_x(p)) return 0;
  for (int q = 1; q <= max_q; ++q) {
    const Scalar t(1, q);
    if (distinct_x(rotate(p, t))) return t;
  }
  throw CertificationError("no rotation t = 1/q with q <= " + std::to_string(max_q) +
                           " separates the x-coordinates");
}

PointSet flatten(const PointSet& p, const FlattenParams& params) {
  if (!(params.delta > 0 && params.eps > 0)) throw InputError("flatten needs positive delta and eps");
  const Scalar t = params.rotation ? *params.rotation : choose_rotation(p);
  PointSet out = rotate(p, t);
  if (!distinct_x(out)) throw CertificationError("flatten: rotation leaves repeated x-coordinates");
  for (auto& q : out.points) {
    q[0] *= params.delta;
    for (std::size_t k = 1; k < q.size(); ++k) q[k] *= params.eps;
  }
  return out;
}

PointSet place_block(const PointSet& block, const Point& target) {
  const int d = block.dim;
  if (static_cast<int>(target.size()) != d) throw InputError("place_block: dimension mismatch");
  if (squared_norm(target) == 0) throw InputError("place_block: target must differ from the origin");
  if (block.empty()) return block;

  // Unnormalized Gram-Schmidt of e_1..e_d against target.
  std::vector<Point> basis{target};
  for (int i = 0; i < d && static_cast<int>(basis.size()) < d; ++i) {
    Point u = origin(d);
    u[static_cast<std::size_t>(i)] = 1;
    for (const auto& v : basis) u = u - (dot(u, v) / squared_norm(v)) * v;
    if (squared_norm(u) != 0) basis.push_back(std::move(u));
  }

  auto apply = [&](const Point& x) {
    Point y = origin(d);
    for (int k = 0; k < d; ++k) y = y + x[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(k)];
    return y;
  };
  std::size_t outer = 0;
  for (std::size_t i = 1; i < block.size(); ++i) {
    if (block[i][0] > block[outer][0]) outer = i;
  }
  const Point shift = target - apply(block[outer]);
  PointSet out = block;
  for (auto& q : out.points) q = apply(q) + shift;
  return out;
}

std::size_t BlockTree::point_count() const {
  std::size_t total = leaf_points.size();
  for (const auto& c : children) total += c.point_count();
  return total;
}

std::vector<std::size_t> partition_sizes(std::size_t n, std::size_t parts) {
  std::vector<std::size_t> sizes(parts, n / parts);
  for (std::size_t j = 0; j < n % parts; ++j) ++sizes[j];
  return sizes;
}

namespace {

void shift_tree(BlockTree& t, std::size_t offset) {
  for (auto& i : t.leaf_points) i += offset;
  for (auto& c : t.children) shift_tree(c, offset);
}

class Builder {
 public:
  Builder(int d, int m, Scalar delta, Scalar eps)
      : d_(d), m_(m), delta_(std::move(delta)), eps_(std::move(eps)), base_(base_set(d, m)) {}

  std::pair<PointSet, BlockTree> build(std::size_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    const std::size_t total = base_.points.size();
    PointSet pts(d_, {});
    BlockTree tree;
    if (n <= total) {
      pts.points.assign(base_.points.points.begin(), base_.points.points.begin() + static_cast<std::ptrdiff_t>(n));
      tree.leaf_points.resize(n);
      std::iota(tree.leaf_points.begin(), tree.leaf_points.end(), 0);
    } else {
      tree.child_sizes = partition_sizes(n, total);
      for (std::size_t j = 0; j < total; ++j) {
        auto [sub, subtree] = build(tree.child_sizes[j]);
        const PointSet placed = place_block(flatten(sub, {delta_, eps_, std::nullopt}), base_.points[j]);
        shift_tree(subtree, pts.size());
        subtree.block_id = static_cast<int>(j);
        subtree.placement = base_.points[j];
        tree.children.push_back(std::move(subtree));
        pts.points.insert(pts.points.end(), placed.points.begin(), placed.points.end());
      }
    }
    memo_.emplace(n, std::make_pair(pts, tree));
    return {std::move(pts), std::move(tree)};
  }

 private:
  int d_;
  int m_;
  Scalar delta_;
  Scalar eps_;
  BaseSet base_;
  std::map<std::size_t, std::pair<PointSet, BlockTree>> memo_;
};

constexpr std::size_t kBuildCheckLimit = 40;

}  // namespace

Construction build_sn(int d, int m, std::size_t n, const Scalar& delta, const Scalar& eps) {
  if (d < 2 || m < 1 || n < 1) throw InputError("build_sn needs d >= 2, m >= 1, n >= 1");
  if (!(0 < eps && eps <= delta && delta < 1)) throw InputError("build_sn needs 0 < eps <= delta < 1");
  Construction c;
  c.d = d;
  c.m = m;
  c.n = n;
  c.delta = delta;
  c.eps = eps;
  Builder builder(d, m, delta, eps);
  auto [pts, tree] = builder.build(n);
  pts.blocks.emplace(n, 0);
  if (tree.children.empty()) {
    std::iota(pts.blocks->begin(), pts.blocks->end(), 0);
  } else {
    for (const auto& child : tree.children) {
      std::vector<const BlockTree*> todo{&child};
      while (!todo.empty()) {
        const BlockTree* t = todo.back();
        todo.pop_back();
        for (auto i : t->leaf_points) (*pts.blocks)[i] = child.block_id;
        for (const auto& g : t->children) todo.push_back(&g);
      }
    }
  }
  if (n <= kBuildCheckLimit) {
    if (auto bad = find_degeneracy(pts)) {
      throw CertificationError("build_sn: construction is not in general position (delta=" +
                               format_scalar(delta) + ")");
    }
  }
  c.points = std::move(pts);
  c.tree = std::move(tree);
  return c;
}

Construction build_sn(int d, int m, std::size_t n, unsigned k) {
  const Scalar delta = pow2(-static_cast<long>(k));
  Construction c = build_sn(d, m, n, delta, delta * delta);
  c.k = k;
  return c;
}

namespace {

std::string describe_state(PeelState state, std::size_t n) {
  std::string removed;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(state & bit(i))) removed += (removed.empty() ? "" : ",") + std::to_string(i);
  }
  return "after removing {" + removed + "}";
}

}  // namespace

ConstructionCertificate certify_construction(const PointSet& s, int d, int m, std::size_t audit_limit) {
  if (!s.blocks) throw InputError("certify_construction needs block labels");
  if (s.size() > audit_limit) {
    throw InputError("certify_construction is limited to " + std::to_string(audit_limit) + " points");
  }
  ConstructionCertificate cert;
  const int total = defense_number(d, m);
  cert.allowed_active_blocks = total - m + 1;

  if (auto bad = find_degeneracy(s)) {
    cert.failure = "(a) general position: degenerate subset found";
    return cert;
  }
  cert.general_position = true;

  const std::size_t n = s.size();
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[(*s.blocks)[i]].push_back(i);
  std::vector<std::size_t> block_of(n);
  std::vector<std::vector<std::size_t>> by_distance;
  for (auto& [id, idx] : members) {
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return squared_norm(s[a]) > squared_norm(s[b]); });
    for (auto i : idx) block_of[i] = by_distance.size();
    by_distance.push_back(idx);
  }

  HullIndex index(s);
  const Point o = origin(d);
  cert.outermost_only = true;
  cert.block_activity = true;
  for_each_reachable_state(index, [&](PeelState state, PeelState h) {
    ++cert.states_checked;
    std::vector<bool> active(by_distance.size(), false);
    int n_active = 0;
    bool inner_exposed = false;
    for (PeelState rest = h; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(__builtin_ctzll(rest));
      const std::size_t b = block_of[v];
      if (!active[b]) {
        active[b] = true;
        ++n_active;
      }
      for (auto i : by_distance[b]) {
        if (state & bit(i)) {
          inner_exposed |= (i != v);
          break;
        }
      }
    }
    cert.max_active_blocks = std::max(cert.max_active_blocks, n_active);
    if (n_active > cert.allowed_active_blocks && cert.block_activity) {
      cert.block_activity = false;
      cert.failure = "(c) block activity: " + std::to_string(n_active) + " active blocks " + describe_state(state, n);
    }
    if (inner_exposed && cert.outermost_only) {
      PointSet remaining(d, {});
      for (std::size_t i = 0; i < n; ++i) {
        if (state & bit(i)) remaining.points.push_back(s[i]);
      }
      if (convex_membership(o, remaining).is_member()) {
        cert.outermost_only = false;
        cert.failure = "(b) outermost-only removal: inner block point on the hull while the origin is defended " +
                       describe_state(state, n);
      }
    }
    return true;
  });

  cert.count = peel_count(s).count;
  std::vector<std::pair<std::size_t, BigCount>> blocks;
  for (const auto& idx : by_distance) blocks.emplace_back(idx.size(), peel_count(s.subset(idx)).count);
  while (blocks.size() < static_cast<std::size_t>(total)) blocks.emplace_back(0, BigCount(1));
  std::sort(blocks.begin(), blocks.end());
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(total - m + 1), n);
  for (std::size_t i = static_cast<std::size_t>(m); i < blocks.size(); ++i) bound *= blocks[i].second;
  cert.lemma_bound_value = bound;
  cert.lemma_bound = cert.count <= bound;
  if (!cert.lemma_bound && cert.failure.empty()) cert.failure = "(d) peel count exceeds the block-product bound";

  if (d >= 3 && n >= 2) {
    const Enclosure t2 = theorem2_bound(d, m, static_cast<int>(n));
    cert.theorem2_upper = t2.hi;
    cert.theorem2_bound = Scalar(cert.count) <= t2.hi;
    if (!*cert.theorem2_bound && cert.failure.empty()) cert.failure = "(d) peel count exceeds c * a^n";
  }
  return cert;
}

CertifiedConstruction build_certified(int d, int m, std::size_t n, std::size_t audit_limit, unsigned k_start,
                                      unsigned k_max) {
  const std::size_t audit_n = std::min(n, audit_limit);
  std::string last_failure = "no schedule tried";
  for (unsigned k = k_start; k <= k_max; ++k) {
    try {
      Construction audited = build_sn(d, m, audit_n, k);
      ConstructionCertificate cert = certify_construction(audited.points, d, m, audit_limit);
      if (!cert.passed()) {
        last_failure = "k=" + std::to_string(k) + ": " + cert.failure;
        continue;
      }
      CertifiedConstruction out;
      out.construction = audit_n == n ? std::move(audited) : build_sn(d, m, n, k);
      out.certificate = std::move(cert);
      out.certified_up_to = audit_n;
      return out;
    } catch (const CertificationError& e) {
      last_failure = "k=" + std::to_string(k) + ": " + e.what();
    }
  }
  throw CertificationError("no flattening schedule certified: " + last_failure);
}

}  // namespace peelkit
