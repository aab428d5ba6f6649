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

#include "dqc/chooser.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dqc/errors.hpp"

namespace dqc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_weights(std::span<const double> weights) {
  if (weights.empty()) throw NumericalError("choice with no options");
  double total = 0.0;
  for (double w : weights) {
    if (w < -1e-12 || !std::isfinite(w)) throw NumericalError("negative or non-finite choice weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw NumericalError("choice weights sum to " + std::to_string(total));
  }
}

// Replays a fixed prefix of decisions, then takes the first viable option for
// every new enumerated choice, recording where alternatives remain.
class ReplayChooser : public Chooser {
 public:
  struct Frame {
    std::vector<int> viable;  // indices with positive weight
    std::size_t position = 0;
  };

  ReplayChooser(std::vector<Frame>& frames, const EnumeratePredicate& pred, std::uint64_t seed)
      : frames_(frames), pred_(pred), rng_(seed) {}

  int pick(const ChoiceTag& tag, std::span<const double> weights) override {
    check_weights(weights);
    if (pred_ && !pred_(tag)) {
      return inverse_cdf(weights, uniform01(rng_));
    }
    int chosen;
    if (depth_ < frames_.size()) {
      const Frame& f = frames_[depth_];
      chosen = f.viable.at(f.position);
      if (chosen >= static_cast<int>(weights.size())) {
        throw NumericalError("enumeration replay diverged");
      }
    } else {
      Frame f;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 1e-15) f.viable.push_back(static_cast<int>(i));
      }
      chosen = f.viable.front();
      frames_.push_back(std::move(f));
    }
    ++depth_;
    weight_ *= weights[chosen];
    return chosen;
  }

  std::size_t depth() const { return depth_; }

 private:
  std::vector<Frame>& frames_;
  const EnumeratePredicate& pred_;
  std::mt19937_64 rng_;
  std::size_t depth_ = 0;
};

}  // namespace

int pick_uniform(Chooser& chooser, const ChoiceTag& tag, int n) {
  std::vector<double> w(static_cast<std::size_t>(n), 1.0 / n);
  return chooser.pick(tag, w);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream_name) {
  // FNV-1a over the name, folded into the seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : stream_name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int inverse_cdf(std::span<const double> weights, double u) {
  double cum = 0.0;
  int last_viable = -1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_viable = static_cast<int>(i);
    cum += weights[i];
    if (u <= cum) return static_cast<int>(i);
  }
  return last_viable;
}

int SamplingChooser::pick(const ChoiceTag&, std::span<const double> weights) {
  check_weights(weights);
  return inverse_cdf(weights, uniform01(rng_));
}

bool enumerate_everything(const ChoiceTag&) { return true; }

bool enumerate_outcomes(const ChoiceTag& tag) { return tag.kind == ChoiceKind::kOutcome; }

EnumeratePredicate enumerate_labels(std::vector<std::string> labels) {
  return [labels = std::move(labels)](const ChoiceTag& tag) {
    return std::find(labels.begin(), labels.end(), tag.label) != labels.end();
  };
}

void for_each_branch(const std::function<void(Chooser&)>& run, const EnumerateOptions& options) {
  std::vector<ReplayChooser::Frame> frames;
  std::size_t count = 0;
  while (true) {
    ReplayChooser chooser(frames, options.enumerate_if, options.seed);
    run(chooser);
    if (++count > options.max_branches) {
      throw SizeLimitError("branch enumeration exceeded " + std::to_string(options.max_branches));
    }
    // Frames beyond what this run consumed belong to a different subtree.
    frames.resize(chooser.depth());
    while (!frames.empty() && frames.back().position + 1 >= frames.back().viable.size()) {
      frames.pop_back();
    }
    if (frames.empty()) break;
    ++frames.back().position;
  }
}

}  // namespace dqc
