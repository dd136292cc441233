#pragma once

#include <vector>

#include "agreekit/rational.hpp"
#include "agreekit/scheme.hpp"
#include "agreekit/types.hpp"

namespace agreekit {

struct TallyOptions {
    // Default counting is per-incidence: an annotator picking {2,3} puts
    // mass 2 on the merged 4-class label. With dedupe_reduced the reduced
    // label set is deduplicated first, so the same annotator puts mass 1
    // (and weighted mass splits over distinct reduced labels).
    bool dedupe_reduced = false;
};

// Exact per-label vote mass for one item under one scheme. Plain tallies
// carry integer mass; weighted tallies carry rationals with denominators
// dividing lcm(1..6) = 60.
struct VoteTally {
    ClassScheme scheme;
    std::vector<Rational> mass;  // indexed by scheme label

    Rational total() const;
};

// Labels attaining the maximum tally mass; sorted, never empty.
using MajoritySet = std::vector<ClassLabel>;

enum class ScenarioTag { agreement, clear_majority, no_clear_majority };

std::string to_string(ScenarioTag tag);
ScenarioTag parse_scenario(const std::string& text);

VoteTally tally(const ItemAnnotations& item, const ClassScheme& scheme,
                const TallyOptions& opts = {});

// Each annotator contributes total mass exactly 1, split as 1/|A_k| per
// selected label (per distinct reduced label under dedupe_reduced).
VoteTally weighted_tally(const ItemAnnotations& item, const ClassScheme& scheme,
                         const TallyOptions& opts = {});

MajoritySet majority_set(const VoteTally& t);

// agreement: every record reduces to the same singleton.
// clear_majority: the plain majority set is a singleton.
// Reports the strongest applicable tag.
ScenarioTag classify_scenario(const ItemAnnotations& item,
                              const ClassScheme& scheme,
                              const TallyOptions& opts = {});

}  // namespace agreekit
