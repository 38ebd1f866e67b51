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

// Brute-force oracles for the test suites. Everything here recomputes
// expected values from first principles (boolean reachability matrices,
// exhaustive partition enumeration, word enumeration) and stays independent
// of the library's Kleisli composition and refinement code paths.

#pragma once

#include <vector>

#include "kleisli/equivalence.hpp"
#include "kleisli/morphism.hpp"

namespace kleisli::oracles {

using BoolMatrix = std::vector<std::vector<uint8_t>>;

/// dbl[0] = silent double arrow (reflexive-transitive closure of silent
/// steps); dbl[1 + a] = closure . step_a . closure.
std::vector<BoolMatrix> double_arrows(const System& lts);

/// The expected saturation of an lts, assembled from double arrows.
System star_oracle(const System& lts);

/// The expected transitive closure (at least one step, silent-merged
/// composition), assembled by iterating boolean relation composition.
System transitive_closure_oracle(const System& lts);

/// All set partitions of {0..n-1} as block assignments (Bell(n) entries).
std::vector<std::vector<int32_t>> all_partitions(int32_t n);

/// Milner transfer property of the partition-induced relation: for related
/// x, y and every double arrow x =s=> x' there is y =s=> y' with x', y'
/// related (and symmetrically).
bool milner_transfer_ok(const std::vector<BoolMatrix>& dbl,
                        const std::vector<int32_t>& block_of);

/// Weak bisimilarity by exhaustive enumeration: the union of all partitions
/// that pass the transfer property. Practical for |X| <= 7.
Partition exhaustive_weak_partition(const System& lts);

/// Every word over letters {0..alphabet_size-1} of length <= maxlen,
/// shortlex order.
std::vector<Word> all_words_upto(int32_t alphabet_size, int maxlen);

}  // namespace kleisli::oracles
