#pragma once

#include <cstdint>

#include "agreekit/dataset.hpp"
#include "agreekit/scheme.hpp"

namespace agreekit {

struct SplitSpec {
    double train_fraction = 0.80;
    double test_fraction = 0.20;
    double validation_of_train = 0.05;  // carved out of the train pool
    std::uint64_t seed = 0;
    // Off by default: plain uniform shuffle. When set, items are allocated
    // per scenario group so each split keeps the corpus mix.
    bool stratify_by_scenario = false;
    ClassScheme stratify_scheme = kSchemeSix;
};

struct SplitResult {
    std::vector<ItemAnnotations> train;
    std::vector<ItemAnnotations> validation;
    std::vector<ItemAnnotations> test;
};

// Deterministic for (content hash, seed); sizes are nearest-integer of the
// fractions with the remainder going to train; item order within splits is
// the seeded shuffle order.
SplitResult split(const Dataset& ds, const SplitSpec& spec);

}  // namespace agreekit
