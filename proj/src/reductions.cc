#include "cookie/reductions.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "cookie/analytic.h"
#include "cookie/oracle.h"
#include "cookie/solvers.h"

namespace cookie {

namespace {

Number q(long long n, long long d = 1) { return Number::exact(n, d); }

// ceil(v) + 1 for a positive exact value.
Number ceil_plus_one(const Number& v) { return v.ceil() + q(1); }

std::int64_t half_sum(const PartitionInstance& p) {
  if (p.a.empty()) throw InputError("partition instance is empty");
  for (auto v : p.a)
    if (v < 1) throw InputError("partition values must be positive integers");
  if (p.sum() % 2 != 0) throw OddSum("sum of values is odd (" + std::to_string(p.sum()) + ")");
  return p.sum() / 2;
}

mpz_class denominator(const Number& n) { return n.to_rational().get_den(); }

}  // namespace

std::int64_t PartitionInstance::sum() const { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::PartitionToRate: return "partition-to-rate";
    case ReductionKind::PartitionToInitialCookies: return "partition-to-initial";
    case ReductionKind::ThreePartitionToDiscrete: return "3partition-to-discrete";
    case ReductionKind::MToR: return "m-to-r";
  }
  return "unknown";
}

std::optional<ReductionKind> parse_reduction_kind(const std::string& s) {
  for (auto k : {ReductionKind::PartitionToRate, ReductionKind::PartitionToInitialCookies,
                 ReductionKind::ThreePartitionToDiscrete, ReductionKind::MToR})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

ReductionCertificate reduce_partition_to_rate(const PartitionInstance& p) {
  const std::int64_t B = half_sum(p);
  const Number Bn = q(B);
  const Number W = q(B * B + B + 1);
  const Number r_max = q(1) + q(2) * Bn / W;  // every item bought once

  ReductionCertificate cert;
  cert.kind = ReductionKind::PartitionToRate;
  cert.source = p.a;
  Instance g;
  g.z = q(0);
  g.r = q(1);
  for (auto a : p.a) {
    // The second copy alone would take longer than T even at r_max.
    Number L = ceil_plus_one(Bn * r_max / q(a));
    g.items.push_back({q(a) / W, q(a), L});
    cert.big_alpha.push_back(L);
  }
  g.goal = Goal::rate(q(1) + Bn / W);
  cert.game = g;
  cert.threshold_time = Bn;
  return cert;
}

ReductionCertificate reduce_partition_to_initial_cookies(const PartitionInstance& p) {
  const std::int64_t B = half_sum(p);
  const auto k = static_cast<std::int64_t>(p.a.size());
  const std::int64_t A = 1000 * B;
  const Number M = q(k * A + B + 1);

  ReductionCertificate cert;
  cert.kind = ReductionKind::PartitionToInitialCookies;
  cert.source = p.a;
  Instance g;
  g.z = q(k * A + B);
  g.r = q(0);
  auto add = [&](std::int64_t v) {
    Number L = ceil_plus_one(M / q(v));  // second copy costs more than M
    g.items.push_back({q(v), q(v), L});
    cert.big_alpha.push_back(L);
  };
  for (auto a : p.a) add(a + A);
  for (std::int64_t i = 0; i < k; ++i) add(A);
  g.goal = Goal::cookies(M);
  cert.game = g;
  cert.threshold_time = M / q(k * A + B);
  return cert;
}

ReductionCertificate reduce_3partition_to_discrete(const std::vector<std::int64_t>& a, std::size_t m) {
  if (m == 0 || a.size() != 3 * m)
    throw NotTripletCount("need exactly 3m values (got " + std::to_string(a.size()) + " for m = " +
                          std::to_string(m) + ")");
  for (auto v : a)
    if (v < 1) throw InputError("3-PARTITION values must be positive integers");
  const auto k = static_cast<std::int64_t>(a.size());
  const std::int64_t A = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const std::int64_t B = A * k / 3 + 1;  // least integer > Ak/3 (k = 3m)
  const Number An = q(A), Bn = q(B), kn = q(k);

  const Number r = q(3) * Bn * An / kn;
  const Number T = kn / q(3) + q(2) * Bn;
  const Number M = An / q(2) * (kn / q(3) - q(1)) + q(2) * Bn * (r + An);

  mpz_class scale = 1;
  for (const Number* v : {&r, &M}) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), denominator(*v).get_mpz_t());
  const Number s = Number::exact(scale, 1);

  ReductionCertificate cert;
  cert.kind = ReductionKind::ThreePartitionToDiscrete;
  cert.source = a;
  cert.groups = m;
  DiscreteInstance d;
  d.r = r * s;
  d.M = M * s;
  d.T = T.to_integer();
  d.cookie_scale = s;
  // No schedule ever holds more than (r + A) T cookies, so with this alpha a
  // second copy is never affordable.
  const Number most = (r + An) * s * T;
  for (auto v : a) {
    Number y = Bn * q(v) * s;
    Number L = ceil_plus_one(most / y);
    d.items.push_back({q(v) * s, y, L});
    cert.big_alpha.push_back(L);
  }
  cert.discrete_game = d;
  cert.threshold_time = T;
  return cert;
}

ReductionCertificate reduce_m_to_r(const Instance& inst) {
  require_valid(inst);
  if (inst.goal.kind != GoalKind::Cookies) throw PreconditionError("M -> R reduction needs a Cookies goal");
  // Any strategy spends at most z + (cookies produced) on items, and each
  // cookie spent adds at most 1/rho rate with rho = min y/x. Hence
  // G(t) <= (r + z/rho) e^(t/rho). Choosing V above that bound at an upper
  // bound on the optimal time makes climbing to V without the new item
  // slower than any optimal M strategy.
  Number t_up = solve_greedy(inst, GreedyPolicy::EfficiencyScore).total_time;
  Number rho = inst.items.front().y / inst.items.front().x;
  for (const Item& it : inst.items) rho = min(rho, it.y / it.x);
  double exponent = t_up.to_double() / rho.to_double();
  if (exponent > 700) throw SolverError("V would overflow: optimal-time bound is too large relative to min y/x");
  double bound = (inst.r.to_double() + inst.z.to_double() / rho.to_double()) * std::exp(exponent) * 1.01;
  mpz_class v;
  mpz_set_d(v.get_mpz_t(), std::ceil(bound));
  Number V = Number::exact(v + 1, 1);
  if (V <= inst.r) V = inst.r.floor() + q(1);
  if (!inst.r.is_exact()) V = V.to_mode(NumericMode::Float);

  ReductionCertificate cert;
  cert.kind = ReductionKind::MToR;
  cert.source_instance = inst;
  Instance g = inst;
  // The appended item's growth is immaterial: one copy reaches V.
  g.items.push_back({V, inst.goal.value, q(2)});
  g.goal = Goal::rate(V);
  for (const Item& it : g.items) cert.big_alpha.push_back(it.alpha);
  cert.game = g;
  cert.threshold_time = t_up;
  return cert;
}

bool has_partition(const std::vector<std::int64_t>& a) {
  std::int64_t s = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  if (s % 2 != 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(s / 2) + 1, 0);
  reach[0] = 1;
  for (auto v : a)
    for (std::int64_t t = s / 2; t >= v; --t)
      if (reach[static_cast<std::size_t>(t - v)]) reach[static_cast<std::size_t>(t)] = 1;
  return reach[static_cast<std::size_t>(s / 2)] != 0;
}

bool has_3partition(const std::vector<std::int64_t>& a, std::size_t m) {
  if (m == 0 || a.size() != 3 * m) return false;
  std::int64_t s = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  if (s % static_cast<std::int64_t>(m) != 0) return false;
  const std::int64_t target = s / static_cast<std::int64_t>(m);
  std::vector<char> used(a.size(), 0);
  std::function<bool()> rec = [&]() -> bool {
    std::size_t i = 0;
    while (i < a.size() && used[i]) ++i;
    if (i == a.size()) return true;
    used[i] = 1;
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      for (std::size_t l = j + 1; l < a.size(); ++l) {
        if (used[l] || a[i] + a[j] + a[l] != target) continue;
        used[l] = 1;
        if (rec()) return true;
        used[l] = 0;
      }
      used[j] = 0;
    }
    used[i] = 0;
    return false;
  };
  return rec();
}

bool has_equal_sum_groups(const std::vector<std::int64_t>& a, std::size_t m) {
  if (m == 0) return false;
  std::int64_t s = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  if (s % static_cast<std::int64_t>(m) != 0) return false;
  const std::int64_t target = s / static_cast<std::int64_t>(m);
  std::vector<std::int64_t> v(a);
  std::sort(v.rbegin(), v.rend());
  std::vector<std::int64_t> bins(m, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == v.size()) return true;
    for (std::size_t b = 0; b < m; ++b) {
      if (bins[b] + v[i] > target) continue;
      if (b > 0 && bins[b] == bins[b - 1]) continue;  // symmetric bins
      bins[b] += v[i];
      if (rec(i + 1)) return true;
      bins[b] -= v[i];
    }
    return false;
  };
  return rec(0);
}

VerifyResult verify_certificate(const ReductionCertificate& cert, std::size_t budget) {
  VerifyResult out;
  switch (cert.kind) {
    case ReductionKind::PartitionToRate:
    case ReductionKind::PartitionToInitialCookies:
      if (!cert.game) throw InputError("certificate has no game instance");
      out.source_answer = has_partition(cert.source);
      out.game_answer = oracle_decides_within(*cert.game, cert.threshold_time, std::nullopt, budget);
      break;
    case ReductionKind::ThreePartitionToDiscrete:
      if (!cert.discrete_game) throw InputError("certificate has no discrete game");
      out.source_answer = has_3partition(cert.source, cert.groups);
      out.equal_sum_groups = has_equal_sum_groups(cert.source, cert.groups);
      out.game_answer = decide_discrete(*cert.discrete_game, budget);
      break;
    case ReductionKind::MToR: {
      if (!cert.game || !cert.source_instance) throw InputError("certificate needs source and game instances");
      OracleOptions o;
      o.budget = budget;
      o.dominance_pruning = true;
      OracleResult src = brute_force_continuous(*cert.source_instance, std::nullopt, o);
      // The new item ends the game, so the other items never need more
      // copies than an optimal M strategy buys.
      std::vector<std::size_t> caps = purchase_caps(*cert.source_instance);
      caps.push_back(1);
      o.cutoff = cert.threshold_time;
      OracleResult game = brute_force_continuous(*cert.game, caps, o);
      out.source_time = src.best_time;
      out.game_time = game.best_time;
      out.source_answer = src.best_time.has_value();
      out.game_answer = game.best_time.has_value();
      out.agree = src.best_time && game.best_time && compare_tol(*src.best_time, *game.best_time) == 0;
      return out;
    }
  }
  out.agree = out.source_answer == out.game_answer;
  return out;
}

}  // namespace cookie
