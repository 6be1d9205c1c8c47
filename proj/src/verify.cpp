#include "peelkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <tuple>

#include "peelkit/bounds.hpp"
#include "peelkit/combinatorics.hpp"
#include "peelkit/construction.hpp"
#include "peelkit/defense.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/geom.hpp"
#include "peelkit/peeling.hpp"

namespace peelkit {

namespace {

struct Check {
  std::string id;
  std::string suite;
  std::string name;
  std::string anchor;
  double budget_seconds;
  // Returns "" on success, otherwise a description; may fill replay.
  std::function<std::string(Json& replay)> body;
};

CheckResult run_check(const Check& c) {
  CheckResult r;
  r.id = c.id;
  r.suite = c.suite;
  r.name = c.name;
  r.anchor = c.anchor;
  r.budget_seconds = c.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = c.body(r.replay);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && r.seconds > c.budget_seconds) {
    failure = "exceeded time budget of " + std::to_string(c.budget_seconds) + "s";
  }
  r.passed = failure.empty();
  if (r.passed) {
    r.replay = nullptr;
  } else {
    r.detail = failure;
  }
  return r;
}

std::string fail_with(Json& replay, const PointSet& p, const std::string& why, const Json& extra = Json::object()) {
  replay = point_set_to_json(p, extra);
  return why;
}

// Stream ids keep the seeded instance families of different checks apart.
constexpr std::uint64_t kStreamOracle = 1ULL << 40;
constexpr std::uint64_t kStreamAudit = 2ULL << 40;
constexpr std::uint64_t kStreamEquivalence = 3ULL << 40;
constexpr std::uint64_t kStreamKernel = 4ULL << 40;
constexpr std::uint64_t kStreamDepth = 5ULL << 40;
constexpr std::uint64_t kStreamThreshold = 6ULL << 40;

PointSet parabola(std::size_t n) {
  PointSet p(2, {});
  for (std::size_t i = 0; i < n; ++i) p.points.push_back({Scalar(static_cast<long>(i)), Scalar(static_cast<long>(i * i))});
  return p;
}

// ---------------------------------------------------------------- criteria

std::string criterion_gale(Json& replay) {
  std::ostringstream log;
  for (int d = 1; d <= 4; ++d) {
    for (int m = 1; m <= 3; ++m) {
      const PointSet g = gale_set(d, m);
      const Point o = origin(d);
      if (static_cast<int>(g.size()) != defense_number(d, m)) {
        return fail_with(replay, g, "gale_set(" + std::to_string(d) + "," + std::to_string(m) + ") has wrong size");
      }
      const DepthReport r = open_halfspace_depth(g, o);
      if (r.depth != m || open_count(g, o, r.witness) != m) {
        return fail_with(replay, g, "gale_set depth " + std::to_string(r.depth) + " != m=" + std::to_string(m));
      }
      if (depth_oracle(g, o) != m) return fail_with(replay, g, "depth oracle disagrees on a Gale set");
    }
  }
  return "";
}

std::string criterion_threshold(std::uint64_t seed, Json& replay) {
  for (int d = 1; d <= 4; ++d) {
    for (int m = 1; m <= 3; ++m) {
      const ThresholdReport r = below_threshold_search(d, m, 1000, seed ^ kStreamThreshold);
      if (r.max_depth >= m) {
        return fail_with(replay, r.worst,
                         "a set of d+2m-2 points reached depth " + std::to_string(r.max_depth) + " for d=" +
                             std::to_string(d) + " m=" + std::to_string(m));
      }
    }
  }
  return "";
}

std::string equivalence_on(const PointSet& s, Json& replay, int& comparisons) {
  const Point o = origin(s.dim);
  const int depth = open_halfspace_depth(s, o).depth;
  for (int m = 1; m <= 3; ++m) {
    ++comparisons;
    if ((depth >= m) != defends_by_peeling(s, o, m)) {
      return fail_with(replay, s, "depth " + std::to_string(depth) + " disagrees with peeling defense at m=" +
                                      std::to_string(m));
    }
  }
  return "";
}

std::string criterion_equivalence(std::uint64_t seed, Json& replay) {
  int comparisons = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const int d = 1 + static_cast<int>(i % 3);
    const std::size_t n = 1 + static_cast<std::size_t>((i / 3) % 9);
    const PointSet s = sample_general_position(d, n, seed, kStreamEquivalence + i);
    if (auto f = equivalence_on(s, replay, comparisons); !f.empty()) return f;
  }
  for (int d = 1; d <= 4; ++d) {
    for (int m = 1; m <= 3; ++m) {
      if (auto f = equivalence_on(gale_set(d, m), replay, comparisons); !f.empty()) return f;
      if (d >= 2) {
        if (auto f = equivalence_on(base_set(d, m).points, replay, comparisons); !f.empty()) return f;
      }
    }
  }
  return "";
}

std::string criterion_oracle(std::uint64_t seed, Json& replay) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const int d = 1 + static_cast<int>(i % 3);
    const std::size_t n = 3 + static_cast<std::size_t>((i / 3) % 6);
    const PointSet s = sample_general_position(d, n, seed, kStreamOracle + i);
    const BigCount fast = peel_count(s).count;
    const BigCount slow = peel_count_naive(s);
    if (fast != slow) {
      return fail_with(replay, s, "memoized " + fast.get_str() + " != naive " + slow.get_str());
    }
  }
  return "";
}

std::string criterion_convex(Json& replay) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const PointSet p = parabola(n);
    if (hull_vertices(p).size() != n) return fail_with(replay, p, "parabola sample is not in convex position");
    if (peel_count(p).count != factorial(static_cast<unsigned>(n))) {
      return fail_with(replay, p, "count differs from n! for n=" + std::to_string(n));
    }
  }
  return "";
}

std::string criterion_lower_bound(std::uint64_t seed, Json& replay) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const int d = 1 + static_cast<int>(i % 3);
    const std::size_t n = static_cast<std::size_t>(d + 1) + static_cast<std::size_t>((i / 3) % (10 - d));
    const PointSet s = sample_general_position(d, n, seed, kStreamAudit + i);
    const LowerBoundAudit audit = lower_bound_audit(s);
    if (!audit.holds) return fail_with(replay, s, "state with fewer than d+1 hull vertices found");
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(d + 1), n - static_cast<std::size_t>(d) - 1);
    bound *= factorial(static_cast<unsigned>(d + 1));
    const BigCount count = peel_count(s).count;
    if (count < bound) return fail_with(replay, s, "count " + count.get_str() + " below " + bound.get_str());
  }
  return "";
}

struct ConstructionGrid {
  int d;
  int m;
  std::size_t n_max;
};

std::string criterion_construction(Json& replay, std::string& notes) {
  const ConstructionGrid grid[] = {{2, 1, 12}, {3, 1, 12}, {2, 2, 13}};
  std::ostringstream info;
  for (const auto& g : grid) {
    const int allowed = defense_number(g.d, g.m) - g.m + 1;
    info << "(d=" << g.d << ",m=" << g.m << ") k by n:";
    std::vector<std::size_t> formula_fails;
    for (std::size_t n = 1; n <= g.n_max; ++n) {
      const CertifiedConstruction built = build_certified(g.d, g.m, n);
      const Construction& c = built.construction;
      const ConstructionCertificate& cert = built.certificate;
      info << (n == 1 ? " " : ",") << c.k;
      Json meta{{"d", g.d}, {"m", g.m}, {"n", n}, {"k", c.k}};
      if (!cert.passed() || built.certified_up_to != n) {
        return fail_with(replay, c.points, "n=" + std::to_string(n) + ": " + cert.failure, meta);
      }
      const SimplifiedReport census = simplified_census(c.points);
      mpz_class simplified_cap;
      mpz_ui_pow_ui(simplified_cap.get_mpz_t(), static_cast<unsigned long>(allowed), n);
      if (census.max_active_blocks > allowed || census.distinct_sequences > simplified_cap) {
        return fail_with(replay, c.points, "n=" + std::to_string(n) + ": simplified census exceeds the block bound",
                         meta);
      }
      if (g.d < 3 && n >= 2) {
        // The growth formula is only claimed for d >= 3; record where it would hold.
        const Enclosure f = power_enclosure(static_cast<unsigned long>(g.d + g.m), theorem2_exponent(g.d, g.m, static_cast<int>(n)), 64);
        if (Scalar(cert.count) > f.hi) formula_fails.push_back(n);
      }
      if (n == g.n_max) {
        info << "; n=" << n << " count=" << cert.count.get_str() << " lemma=" << cert.lemma_bound_value.get_str();
        if (cert.theorem2_upper) info << " c*a^n~" << approx_decimal(*cert.theorem2_upper, 1);
      }
    }
    if (g.d < 3) {
      info << " [c*a^n not applicable for d<3";
      if (!formula_fails.empty()) {
        info << "; formula would fail at n=";
        for (std::size_t i = 0; i < formula_fails.size(); ++i) info << (i ? "," : "") << formula_fails[i];
      }
      info << "]";
    }
    info << "; ";
  }
  notes = info.str();
  return "";
}

std::string criterion_bounds(Json&) {
  for (int d = 1; d <= 10; ++d) {
    if (defense_number(d, 1) != d + 1) return "defense_number(d,1) != d+1";
  }
  for (int m = 1; m <= 10; ++m) {
    if (defense_number(1, m) != 2 * m) return "defense_number(1,m) != 2m";
  }
  const Enclosure a31 = growth_base(3, 1);
  const Enclosure a32 = growth_base(3, 2);
  if (!(a31.exact() && a31.lo == 256)) return "growth_base(3,1) is not exactly 256";
  if (!(a32.exact() && a32.lo == 125)) return "growth_base(3,2) is not exactly 125";
  const OptimalM opt = optimal_m(3, 10);
  if (opt.m_star != 3) return "optimal_m(3) = " + std::to_string(opt.m_star);
  const Enclosure best = growth_base(3, 3, 64);
  for (int m = 1; m <= 10; ++m) {
    if (m == 3) continue;
    if (certainly_compare(best, growth_base(3, m, 64)) != -1) {
      return "enclosure ordering a(3,3) < a(3," + std::to_string(m) + ") not certified";
    }
  }
  if (theorem1_m(3) != 3) return "theorem1_m(3) != 3";
  if (theorem1_m(4) != 5) return "theorem1_m(4) != 5";
  for (int d = 3; d <= 8; ++d) {
    for (int m = 1; m <= 10; ++m) {
      if (!growth_identity_holds(d, m)) {
        return "(D-m+1)^D = a^m fails for d=" + std::to_string(d) + " m=" + std::to_string(m);
      }
      if (!coefficient_inequality_holds(d, m)) {
        return "a^(-(d+m-1)/(d+m-2)) >= c fails for d=" + std::to_string(d) + " m=" + std::to_string(m);
      }
    }
  }
  return "";
}

// ------------------------------------------------------- module property checks

std::string kernel_certificates(std::uint64_t seed, Json& replay) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const int d = 1 + static_cast<int>(i % 4);
    const std::size_t n = 1 + static_cast<std::size_t>((i / 4) % 8);
    const PointSet s = sample_general_position(d, n, seed, kStreamKernel + i);
    const PointSet probes = sample_general_position(d, 3, seed, kStreamKernel + 1000 + i);
    for (const auto& q : probes.points) {
      const auto cert = convex_membership(q, s);
      if (!verify_certificate(cert, q, s)) return fail_with(replay, s, "certificate failed exact re-verification");
    }
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto cert = convex_membership(s[j], s);
      if (!cert.is_member() || !verify_certificate(cert, s[j], s)) {
        return fail_with(replay, s, "a point of P was not certified inside conv(P)");
      }
    }
    const auto lp_hull = hull_vertices(s);
    const HullIndex index(s);
    const PeelState h = index.hull(index.full());
    PeelState lp_mask = 0;
    for (auto v : lp_hull) lp_mask |= bit(v);
    if (lp_mask != h) return fail_with(replay, s, "LP hull vertices disagree with simplex-containment index");
    if (s.size() <= static_cast<std::size_t>(d + 1) && lp_hull.size() != s.size()) {
      return fail_with(replay, s, "a simplex has a non-vertex point");
    }
  }
  return "";
}

std::string kernel_orientation(std::uint64_t seed, Json& replay) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const int d = 1 + static_cast<int>(i % 4);
    PointSet s = sample_general_position(d, static_cast<std::size_t>(d + 1), seed, kStreamKernel + 5000 + i);
    const int before = orientation(s.points, d);
    std::swap(s.points[0], s.points[static_cast<std::size_t>(d)]);
    if (orientation(s.points, d) != -before || before == 0) {
      return fail_with(replay, s, "swapping two vertices did not flip the orientation");
    }
  }
  return "";
}

std::string peeling_monotone_defense(std::uint64_t seed, Json& replay) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const int d = 1 + static_cast<int>(i % 3);
    const PointSet s = sample_general_position(d, 4 + static_cast<std::size_t>(i % 5), seed, kStreamEquivalence + 7000 + i);
    bool previous = true;
    for (int m = 1; m <= 4; ++m) {
      const bool now = defends_by_peeling(s, origin(d), m);
      if (now && !previous) return fail_with(replay, s, "defense held at m but not at a smaller m");
      previous = now;
    }
  }
  return "";
}

std::string defense_oracle_agreement(std::uint64_t seed, Json& replay) {
  for (std::uint64_t i = 0; i < 80; ++i) {
    const int d = 1 + static_cast<int>(i % 4);
    const std::size_t n = 1 + static_cast<std::size_t>((i / 4) % 10);
    const PointSet s = sample_general_position(d, n, seed, kStreamDepth + i);
    const Point o = origin(d);
    const DepthReport r = open_halfspace_depth(s, o);
    if (open_count(s, o, r.witness) != r.depth) return fail_with(replay, s, "depth witness does not verify");
    if (depth_oracle(s, o) != r.depth) return fail_with(replay, s, "depth oracle disagrees");
  }
  for (int d = 2; d <= 4; ++d) {
    for (int m = 1; m <= 3; ++m) {
      const PointSet b = base_set(d, m).points;
      if (open_halfspace_depth(b, origin(d)).depth != m || depth_oracle(b, origin(d)) != m) {
        return fail_with(replay, b, "base set depth is not m");
      }
    }
  }
  return "";
}

std::string defense_scaling(std::uint64_t seed, Json& replay) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const int d = 2 + static_cast<int>(i % 3);
    const PointSet s = sample_general_position(d, 4 + static_cast<std::size_t>(i % 6), seed, kStreamDepth + 900 + i);
    const int depth = open_halfspace_depth(s, origin(d)).depth;
    PointSet scaled = s;
    const std::size_t j = i % s.size();
    scaled.points[j] = Scalar(1, 7 + static_cast<long>(i)) * scaled.points[j];
    if (!is_general_position(scaled.with_point(origin(d)))) continue;
    if (open_halfspace_depth(scaled, origin(d)).depth != depth) {
      return fail_with(replay, s, "radial scaling of one point changed the depth");
    }
  }
  return "";
}

std::string construction_preservation(std::uint64_t seed, Json& replay) {
  for (std::uint64_t i = 0; i < 24; ++i) {
    const int d = 2 + static_cast<int>(i % 2);
    const PointSet s = sample_general_position(d, 3 + static_cast<std::size_t>(i % 7), seed, kStreamOracle + 3000 + i);
    const BigCount g = peel_count(s).count;
    const PointSet flat = flatten(s, {Scalar(1, 10), Scalar(1, 100), std::nullopt});
    if (peel_count(flat).count != g) return fail_with(replay, s, "flatten changed the peeling count");
    Point target = origin(d);
    target[0] = Scalar(3, 5);
    target[1] = Scalar(-2, 7);
    if (peel_count(place_block(flat, target)).count != g) {
      return fail_with(replay, s, "place_block changed the peeling count");
    }
  }
  for (const auto& [d, m, n] : {std::tuple{2, 1, 30}, std::tuple{3, 1, 21}, std::tuple{2, 2, 40}}) {
    const std::size_t parts = static_cast<std::size_t>(defense_number(d, m));
    std::function<bool(std::size_t)> ok = [&](std::size_t k) {
      if (k <= parts) return true;
      const auto sizes = partition_sizes(k, parts);
      std::size_t total = 0;
      for (auto x : sizes) {
        if (x != k / parts && x != (k + parts - 1) / parts) return false;
        if (!ok(x)) return false;
        total += x;
      }
      return total == k;
    };
    if (!ok(static_cast<std::size_t>(n))) return "partition sizes are not floor/ceil of n/D";
  }
  return "";
}

std::vector<Check> all_checks(std::uint64_t seed, std::string& construction_notes) {
  std::vector<Check> checks;
  checks.push_back({"1", "defense", "Gale sets have d+2m-1 points and depth exactly m",
                    "defense number D_d(m) = d + 2m - 1 (constructive side)", 60,
                    [](Json& r) { return criterion_gale(r); }});
  checks.push_back({"2", "defense", "d+2m-2 random points never reach depth m",
                    "defense number D_d(m) = d + 2m - 1 (minimality, sampled)", 300,
                    [seed](Json& r) { return criterion_threshold(seed, r); }});
  checks.push_back({"3", "defense", "open-halfspace depth >= m iff peeling defends for m steps",
                    "peeling defense and halfspace definitions of the defense number agree", 300,
                    [seed](Json& r) { return criterion_equivalence(seed, r); }});
  checks.push_back({"4", "peeling", "memoized count equals naive enumeration",
                    "g_d(P) = number of peeling sequences", 120,
                    [seed](Json& r) { return criterion_oracle(seed, r); }});
  checks.push_back({"5", "peeling", "convex position gives n! sequences", "g_d(P) = n! in convex position", 60,
                    [](Json& r) { return criterion_convex(r); }});
  checks.push_back({"6", "peeling", "every state with > d points has >= d+1 hull vertices",
                    "lower bound g_d(n) >= (d+1)^(n-d-1) (d+1)!", 600,
                    [seed](Json& r) { return criterion_lower_bound(seed, r); }});
  checks.push_back({"7", "construction", "recursive constructions certify exhaustively",
                    "at most D-m+1 active blocks; g_d(S_n) <= (D-m+1)^n prod g_d(A_i) <= c a^n", 900,
                    [&construction_notes](Json& r) { return criterion_construction(r, construction_notes); }});
  checks.push_back({"8", "bounds", "bound formulas and their proof identities",
                    "a = (d+m)^((d+2m-1)/m), c = a^(-d/(d-1)), m = floor(d ln d)", 60,
                    [](Json& r) { return criterion_bounds(r); }});
  checks.push_back({"kernel.certificates", "kernel", "membership certificates verify; LP and index hulls agree",
                    "a point is a hull vertex iff a hyperplane through it leaves one side empty", 120,
                    [seed](Json& r) { return kernel_certificates(seed, r); }});
  checks.push_back({"kernel.orientation", "kernel", "orientation is alternating", "no d+1 points on a hyperplane",
                    30, [seed](Json& r) { return kernel_orientation(seed, r); }});
  checks.push_back({"peeling.monotone", "peeling", "defense for m steps implies defense for fewer",
                    "defending p for m steps", 60, [seed](Json& r) { return peeling_monotone_defense(seed, r); }});
  checks.push_back({"defense.oracle", "defense", "candidate-normal depth equals subset-LP depth",
                    "at least m points in every open halfspace around the origin", 180,
                    [seed](Json& r) { return defense_oracle_agreement(seed, r); }});
  checks.push_back({"defense.scaling", "defense", "radial scaling of one point preserves depth",
                    "scaling distances from the origin keeps defense properties", 60,
                    [seed](Json& r) { return defense_scaling(seed, r); }});
  checks.push_back({"construction.preservation", "construction", "flatten and place_block preserve g_d; partitions balanced",
                    "flattening, scaling, rotating and translating keep hull inclusions", 120,
                    [seed](Json& r) { return construction_preservation(seed, r); }});
  return checks;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  static const std::vector<std::string> known = {"kernel", "peeling", "defense", "construction", "bounds", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw InputError("unknown suite '" + suite + "'");
  }
  std::string notes;
  std::vector<CheckResult> out;
  for (const auto& c : all_checks(seed, notes)) {
    if (suite != "all" && c.suite != suite) continue;
    out.push_back(run_check(c));
    if (c.id == "7" && out.back().passed) out.back().detail = notes;
  }
  if (suite == "all" || suite == "bounds") {
    CheckResult scope;
    scope.id = "9";
    scope.suite = "bounds";
    scope.name = "asymptotic statements covered only by finite instances";
    scope.anchor = "g_d(n) = O(d^((2+eps)n)) and the O(.) growth statements";
    scope.passed = true;
    scope.detail =
        "not reproducible at desk scale: the O(.) bound, the large-d epsilon regime and the open lower-bound "
        "question are exercised only through the finite constructions (7) and exact bound formulas (8)";
    out.push_back(scope);
  }
  return out;
}

std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
  std::string notes;
  std::vector<CheckResult> out;
  for (const auto& c : all_checks(seed, notes)) {
    if (c.id.find('.') != std::string::npos) continue;
    out.push_back(run_check(c));
    if (c.id == "7" && out.back().passed) out.back().detail = notes;
  }
  CheckResult scope;
  scope.id = "9";
  scope.suite = "bounds";
  scope.name = "asymptotic statements covered only by finite instances";
  scope.anchor = "g_d(n) = O(d^((2+eps)n)) and the O(.) growth statements";
  const bool finite_ok = out.size() >= 8 && out[6].passed && out[7].passed;
  scope.passed = finite_ok;
  scope.detail = finite_ok ? "not reproducible at desk scale; covered by the finite instantiations in 7 and 8"
                           : "finite instantiations 7/8 failed, so the asymptotic statements are not covered";
  out.push_back(scope);
  return out;
}

Json check_to_json(const CheckResult& r) {
  Json j;
  j["id"] = r.id;
  j["suite"] = r.suite;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["passed"] = r.passed;
  j["detail"] = r.detail;
  j["seconds"] = r.seconds;
  j["budget_seconds"] = r.budget_seconds;
  if (!r.replay.is_null()) j["replay"] = r.replay;
  return j;
}

}  // namespace peelkit
