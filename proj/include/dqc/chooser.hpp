// Copyright 2026 The dqc-equiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Branching engine. Every random decision in a simulation (a secret angle, a
// pad bit, a Born-rule measurement outcome) goes through a Chooser. The same
// simulation code can then be sampled with a seeded RNG or exhaustively
// enumerated, with exact branch probabilities.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace dqc {

enum class ChoiceKind { kSecret, kOutcome };

struct ChoiceTag {
  ChoiceKind kind = ChoiceKind::kSecret;
  std::string_view label;
};

inline ChoiceTag secret(std::string_view label) { return {ChoiceKind::kSecret, label}; }
inline ChoiceTag outcome(std::string_view label) { return {ChoiceKind::kOutcome, label}; }

class Chooser {
 public:
  virtual ~Chooser() = default;

  /// Picks an index with probability proportional to `weights` (which must be
  /// non-negative and sum to 1 within 1e-9).
  virtual int pick(const ChoiceTag& tag, std::span<const double> weights) = 0;

  /// Product of the weights of all enumerated picks on the current path.
  /// Sampled picks contribute a factor of 1.
  double weight() const { return weight_; }

 protected:
  double weight_ = 1.0;
};

int pick_uniform(Chooser& chooser, const ChoiceTag& tag, int n);
inline int pick_bit(Chooser& chooser, const ChoiceTag& tag) { return pick_uniform(chooser, tag, 2); }

/// splitmix64-based stream derivation so that named sub-streams of one seed
/// are independent and reproducible.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream_name);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic uniform double in [0, 1) from a 64-bit engine.
double uniform01(std::mt19937_64& rng);

/// Inverse-CDF selection over exact weights; index 0 wins ties at boundaries.
int inverse_cdf(std::span<const double> weights, double u);

class SamplingChooser : public Chooser {
 public:
  explicit SamplingChooser(std::uint64_t seed) : rng_(seed) {}
  int pick(const ChoiceTag& tag, std::span<const double> weights) override;
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

using EnumeratePredicate = std::function<bool(const ChoiceTag&)>;

struct EnumerateOptions {
  /// Choices for which this returns true are expanded; the rest are sampled
  /// from an RNG re-seeded identically for every branch. Empty = expand all.
  EnumeratePredicate enumerate_if;
  std::uint64_t seed = 0;
  std::size_t max_branches = std::size_t{1} << 20;
};

bool enumerate_everything(const ChoiceTag&);
bool enumerate_outcomes(const ChoiceTag& tag);
EnumeratePredicate enumerate_labels(std::vector<std::string> labels);

/// Runs `run` once per branch of the choice tree (depth-first). Zero-weight
/// options are pruned. Throws SizeLimitError past `max_branches`.
void for_each_branch(const std::function<void(Chooser&)>& run, const EnumerateOptions& options = {});

template <class T>
struct Branch {
  double probability = 0.0;
  T value;
};

template <class F>
auto enumerate_branches(F&& run, const EnumerateOptions& options = {}) {
  using R = std::invoke_result_t<F&, Chooser&>;
  std::vector<Branch<R>> out;
  for_each_branch(
      [&](Chooser& c) {
        R r = run(c);
        out.push_back({c.weight(), std::move(r)});
      },
      options);
  return out;
}

}  // namespace dqc
