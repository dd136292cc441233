#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agreekit/rational.hpp"
#include "agreekit/resolver.hpp"
#include "agreekit/types.hpp"

namespace agreekit {

struct StrengthAggregate {
    std::string item_id;
    Rational mean_strength;  // exact, in [0, 10]
    int binary_label;        // 1 iff mean_strength > threshold
    int n_annotators;
};

struct NormalizationBounds {
    double min;
    double max;
};

// Everything needed to replay a score ensemble: the mixing weight, the
// normalization bounds fitted on the declared split, and the decision
// threshold selected on validation.
struct EnsembleConfig {
    double alpha;
    std::optional<NormalizationBounds> regression_bounds;
    std::optional<NormalizationBounds> classification_bounds;
    std::optional<double> decision_threshold;
};

struct ClassStrengthStats {
    ClassLabel label;
    std::int64_t count = 0;
    Rational mean;  // mean of item mean-strengths resolved to this class
    std::array<std::int64_t, kStrengthMax + 1> histogram{};  // rounded means
};

struct ClassStrengthProfile {
    ClassScheme scheme;
    std::vector<ClassStrengthStats> classes;  // one entry per scheme label
};

// Exact arithmetic mean of the item's strength ratings. Every record must
// carry a strength; offenders are listed in the missing-strength error.
Rational mean_strength(const ItemAnnotations& item);

inline const Rational kDefaultBinarizeThreshold{1, 2};

// 1 iff mean > threshold; the boundary itself is non-hate.
int binarize(const Rational& mean,
             const Rational& threshold = kDefaultBinarizeThreshold);

StrengthAggregate aggregate_strength(
    const ItemAnnotations& item,
    const Rational& threshold = kDefaultBinarizeThreshold);

// Keeps the items whose annotators all land on the same auxiliary binary
// value (0 -> 0, [1,10] -> 1): all zeros or all strictly positive.
std::vector<ItemAnnotations> strength_agreement_subset(
    const std::vector<ItemAnnotations>& items);

NormalizationBounds fit_bounds(const std::vector<double>& scores);

// Affine map onto [0,1] with clamping; bounds come from a fitting split and
// are reused verbatim elsewhere.
std::vector<double> normalize_scores(const std::vector<double>& scores,
                                     const NormalizationBounds& bounds);

// alpha * s_r + (1 - alpha) * s_c; inputs must already be in [0,1].
double ensemble_score(double s_r, double s_c, double alpha);

struct ThresholdChoice {
    double threshold;
    double accuracy;  // fraction in [0,1]
};

// Scans midpoints between consecutive distinct sorted scores plus sentinels
// beyond both extremes; returns the accuracy-maximizing threshold, ties
// broken toward the smallest.
ThresholdChoice select_threshold(const std::vector<double>& scores,
                                 const std::vector<int>& labels);

// Joins outcomes with strength aggregates on item_id; every outcome must
// have a matching aggregate. Histogram bins hold item means rounded half-up.
ClassStrengthProfile class_strength_profile(
    const std::vector<AggregationOutcome>& outcomes,
    const std::vector<StrengthAggregate>& strengths,
    const ClassScheme& scheme);

}  // namespace agreekit
