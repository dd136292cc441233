#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agreekit/rational.hpp"
#include "agreekit/resolver.hpp"
#include "agreekit/split.hpp"

namespace agreekit {

enum class ExperimentId { E1, E2, E3, E4, E5 };

ExperimentId parse_experiment(const std::string& text);
std::string to_string(ExperimentId id);

struct ExperimentSpec {
    ExperimentId id;
    ClassScheme scheme = kSchemeSix;
    // E2: simple/weighted only. E3: any total strategy. E4: only the
    // weighted flag matters (plain or weighted min/max pair). E1/E5: none.
    std::optional<Strategy> strategy;
    // E5 options.
    bool agreements_only = false;
    Rational strength_threshold = Rational{1, 2};
};

struct LabeledRow {
    std::string item_id;
    std::optional<std::string> text;
    ClassLabel label;
};

struct DualLabeledRow {
    std::string item_id;
    std::optional<std::string> text;
    ClassLabel label_lenient;   // min-resolved
    ClassLabel label_sensitive; // max-resolved
};

struct StrengthRow {
    std::string item_id;
    std::optional<std::string> text;
    Rational mean_strength;
    int label;  // binarized
};

struct TestSets {
    std::vector<LabeledRow> gold;    // agreement items, unanimous label
    std::vector<LabeledRow> silver;  // gold + clear-majority items, MV label
    std::int64_t excluded_no_clear_majority = 0;
};

// Gold ⊆ Silver; no-clear-majority items are excluded from both and counted.
TestSets build_test_sets(const std::vector<ItemAnnotations>& test_items,
                         const ClassScheme& scheme,
                         const TallyOptions& opts = {});

struct ExperimentBuild {
    ExperimentSpec spec;
    // E1-E3 rows.
    std::vector<LabeledRow> train;
    std::vector<LabeledRow> validation;
    // E4 rows.
    std::vector<DualLabeledRow> train_dual;
    std::vector<DualLabeledRow> validation_dual;
    // E5 rows.
    std::vector<StrengthRow> train_strength;
    std::vector<StrengthRow> validation_strength;
    std::vector<StrengthRow> test_strength;

    TestSets test;
    std::int64_t train_dropped = 0;  // filtered by the experiment's rule
    std::int64_t skipped_missing_strength = 0;  // E5 only
};

ExperimentBuild build_experiment(const Dataset& ds, const ExperimentSpec& exp,
                                 const SplitSpec& split_spec,
                                 const AggregateOptions& opts = {});

}  // namespace agreekit
