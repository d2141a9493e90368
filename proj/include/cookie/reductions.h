#pragma once

// Instance generators for the hardness constructions, plus brute-force
// verification that each generated game answers the same yes/no question as
// its source.

#include <cstdint>
#include <optional>
#include <vector>

#include "cookie/discrete.h"
#include "cookie/model.h"

namespace cookie {

class OddSum : public InputError {
 public:
  using InputError::InputError;
};

class NotTripletCount : public InputError {
 public:
  using InputError::InputError;
};

struct PartitionInstance {
  std::vector<std::int64_t> a;

  std::int64_t sum() const;
};

enum class ReductionKind { PartitionToRate, PartitionToInitialCookies, ThreePartitionToDiscrete, MToR };

std::string to_string(ReductionKind k);
std::optional<ReductionKind> parse_reduction_kind(const std::string& s);

struct ReductionCertificate {
  ReductionKind kind = ReductionKind::PartitionToRate;
  std::vector<std::int64_t> source;        // partition kinds
  std::size_t groups = 0;                  // m, 3-PARTITION only
  std::optional<Instance> source_instance; // M -> R only
  std::optional<Instance> game;
  std::optional<DiscreteInstance> discrete_game;
  // The iff bound: B, M/(kA+B) or k/3 + 2B. For M -> R, the upper bound on
  // the optimal time used to size V.
  Number threshold_time;
  std::vector<Number> big_alpha;  // the alpha chosen per generated item
};

// W = B^2 + B + 1, items (a_i/W, a_i, L_i), R = 1 + B/W, threshold B.
ReductionCertificate reduce_partition_to_rate(const PartitionInstance& p);

// A = 1000 B, z = kA + B, r = 0, items (a_i + A, a_i + A, L) and k fillers
// (A, A, L), M = kA + B + 1, threshold M / (kA + B).
ReductionCertificate reduce_partition_to_initial_cookies(const PartitionInstance& p);

// B = floor(Ak/3) + 1, items (a_i, B a_i, L), r = 3BA/k, T = k/3 + 2B and
// M = (A/2)(k/3 - 1) + 2B(3BA/k + A). Cookie quantities are scaled to
// integers when those formulas are fractional.
ReductionCertificate reduce_3partition_to_discrete(const std::vector<std::int64_t>& a, std::size_t m);

// Appends (V, M, 2) and asks for rate V. V exceeds every rate the original
// items can reach within an upper bound on the optimal M-time.
ReductionCertificate reduce_m_to_r(const Instance& inst);

struct VerifyResult {
  bool source_answer = false;
  bool game_answer = false;
  bool agree = false;
  // 3-PARTITION only: can the multiset be split into m groups of equal sum,
  // triplets or not.
  std::optional<bool> equal_sum_groups;
  std::optional<Number> source_time, game_time;  // M -> R only
};

VerifyResult verify_certificate(const ReductionCertificate& cert, std::size_t budget = 10'000'000);

bool has_partition(const std::vector<std::int64_t>& a);
bool has_3partition(const std::vector<std::int64_t>& a, std::size_t m);
bool has_equal_sum_groups(const std::vector<std::int64_t>& a, std::size_t m);

}  // namespace cookie
