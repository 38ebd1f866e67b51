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

#include <vector>

#include "kleisli/morphism.hpp"
#include "kleisli/saturation.hpp"

namespace kleisli {

/// An equivalence relation on a state space, presented as its quotient.
/// Blocks are numbered canonically by first occurrence, members sorted.
class Partition {
public:
    Partition() = default;
    static Partition discrete(const StateSpace& space);
    static Partition single_block(const StateSpace& space);
    static Partition from_block_of(const StateSpace& space, std::vector<int32_t> block_of);

    const StateSpace& space() const { return space_; }
    int32_t block_count() const { return static_cast<int32_t>(blocks_.size()); }
    int32_t block_of(int32_t state) const { return block_of_[static_cast<size_t>(state)]; }
    const std::vector<int32_t>& block(int32_t b) const { return blocks_[static_cast<size_t>(b)]; }
    const std::vector<std::vector<int32_t>>& blocks() const { return blocks_; }
    bool same_block(int32_t a, int32_t b) const { return block_of(a) == block_of(b); }

    /// Every block of this partition is contained in a block of `coarser`.
    bool refines(const Partition& coarser) const;

    bool operator==(const Partition&) const = default;

private:
    StateSpace space_;
    std::vector<int32_t> block_of_;
    std::vector<std::vector<int32_t>> blocks_;
};

/// Coarsest stable refinement of `initial` for a finite-effect system.
/// Stability: states in one block have equal successor descriptions after
/// mapping successor states to their blocks. Works for all four tags.
Partition coarsest_stable(const System& system, const Partition& initial);
Partition coarsest_stable(const SurfaceEna& system, const Partition& initial);

/// Coarsest stable partition of one system (single block start).
Partition strong_partition(const System& system);
Partition strong_partition(const SurfaceEna& system);

/// Coarsest bisimulation between two systems, computed on their disjoint
/// union. States of `b` sit at indices |a| + j; names carry "1:"/"2:"
/// prefixes in the returned partition's space.
Partition strong_bisimilarity(const System& a, const System& b);

/// Kernel-bisimulation test: is the partition stable for the system?
bool is_bisimulation(const System& system, const Partition& p);
bool is_bisimulation(const SurfaceEna& system, const Partition& p);

/// Weak bisimilarity as strong bisimilarity on the saturated system.
Partition weak_bisimilarity_star(const System& lts);
Partition weak_bisimilarity_star(const SurfaceEna& ena);

/// Weak bisimilarity on the word-level saturation: states split when their
/// per-block path languages (or bare languages) differ as languages.
Partition weak_bisimilarity_free(const System& underlined);
Partition weak_partition_of_matrix(const WeakMatrix& m);

/// Direct greatest-fixed-point computation of the double-arrow transfer
/// property over relations on X x X. Independent of the Kleisli machinery:
/// works on boolean reachability matrices only. Oracle scale (|X| <= 10).
Partition milner_oracle(const System& lts);

/// Disjoint union of two systems over one space ("1:" / "2:" name prefixes).
System disjoint_union(const System& a, const System& b);
SurfaceEna disjoint_union(const SurfaceEna& a, const SurfaceEna& b);

/// Quotient of a system by a (stable) partition. Block names are taken from
/// the smallest member state. The projection map is block_of.
System quotient(const System& system, const Partition& p);
SurfaceEna quotient(const SurfaceEna& system, const Partition& p);

}  // namespace kleisli
