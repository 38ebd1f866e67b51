/*
 * Copyright 2026 The kleisli authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kleisli/morphism.hpp"

namespace kleisli {

/// xorshift64* with a fixed output scrambler, so seeds are portable across
/// implementations of this toolkit. The exact recurrence (all 64-bit):
///   state ^= state >> 12; state ^= state << 25; state ^= state >> 27;
///   output = state * 0x2545F4914F6CDD1D
/// A zero seed is replaced by 0x9E3779B97F4A7C15.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}
    uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }
    /// Uniform in [0, 1), 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform in [0, n) by modulo (bias negligible at desk scale).
    int32_t below(int32_t n) { return static_cast<int32_t>(next() % static_cast<uint64_t>(n)); }
    bool chance(double p) { return unit() < p; }

private:
    uint64_t state_;
};

/// Sub-seed of case i under a master seed:
/// Rng(master XOR ((i + 1) * 0x9E3779B97F4A7C15)).next().
uint64_t case_seed(uint64_t master, int case_index);

struct GenConfig {
    uint64_t seed = 1;
    int32_t max_states = 6;
    int32_t alphabet_size = 2;
    // Negative density: sampled per instance from the instance seed.
    double transition_density = -1.0;
    double tau_density = -1.0;
    double final_density = -1.0;  // ena only
    int cases = 100;
};

/// Seed-deterministic generators. State count is uniform in [1, max_states].
System gen_lts(const GenConfig& cfg);
SurfaceEna gen_ena(const GenConfig& cfg);

/// A homomorphism premise for the uniformity law: alpha and beta are
/// word-level automaton systems with h# . alpha = beta . h# by construction
/// (beta is the quotient of alpha by a stable partition, h the projection).
struct QuotientPair {
    System alpha;
    std::vector<int32_t> h;
    System beta;
};
QuotientPair gen_quotient_pair(const GenConfig& cfg);

struct SuiteFailure {
    uint64_t seed = 0;
    int case_index = 0;
    std::string detail;
    std::string counterexample;  // JSON envelope; replays via recheck_counterexample
};

struct SuiteReport {
    std::string suite;
    int cases = 0;
    std::vector<SuiteFailure> failures;
    double wall_ms = 0.0;
    bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const GenConfig& cfg);

/// Re-runs the failed case recorded in a counterexample envelope; true means
/// it still fails.
bool recheck_counterexample(const std::string& counterexample_json);

/// Deterministic renderings (no timing data).
std::string format_report(const SuiteReport& r);
std::string write_report_json(const SuiteReport& r);

}  // namespace kleisli
