#pragma once

#include <cstddef>

#include "patmine/dataset.hpp"
#include "patmine/miner.hpp"

namespace patmine {

/// Coverage decision by one joint search over the concatenated variable
/// vector [homowith_g, f_g(x) for each pattern vertex x] of every example g in
/// id order. Variables are decided chronologically (homowith tried true
/// first, f_g candidates ascending), the only propagation is the count bound
/// `covered + undecided >= needed`, and a failure anywhere backtracks into the
/// most recent decision even when it belongs to an unrelated example.
///
/// The positive phase looks for an assignment covering at least `n_pos`
/// positives. If one exists, a dual phase looks for an assignment covering
/// more than `n_neg` negatives and rejects when it finds one.
///
/// Reported counts are those of the satisfying assignment when a phase
/// succeeds, otherwise the number of examples for which a complete f_g was
/// ever built during the refutation.
Verdict evaluate_monolithic(const LabeledGraph& pattern, const Dataset& ds, std::size_t n_pos,
                            std::size_t n_neg);

}  // namespace patmine
