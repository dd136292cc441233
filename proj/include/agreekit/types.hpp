#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agreekit/scheme.hpp"

namespace agreekit {

inline constexpr int kStrengthMin = 0;
inline constexpr int kStrengthMax = 10;

// One annotator's judgment of one item: a non-empty, duplicate-free label
// set over the 6-class scheme, plus an optional 0-10 strength rating.
// Label 0 ("no hate") is only legal as a singleton.
struct AnnotationRecord {
    std::string item_id;
    std::string annotator_id;
    std::vector<ClassLabel> labels;  // sorted, unique
    std::optional<int> strength;

    // Validates and normalizes (sorts, rejects duplicates / contradictions).
    static AnnotationRecord make(std::string item_id, std::string annotator_id,
                                 std::vector<ClassLabel> labels,
                                 std::optional<int> strength);
};

// All annotators' records for one item; the unit of aggregation.
struct ItemAnnotations {
    std::string item_id;
    std::optional<std::string> text;
    std::vector<AnnotationRecord> records;

    static ItemAnnotations make(std::string item_id,
                                std::vector<AnnotationRecord> records,
                                std::optional<std::string> text = std::nullopt);
};

}  // namespace agreekit
