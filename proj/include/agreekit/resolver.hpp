#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "agreekit/vote.hpp"

namespace agreekit {

enum class StrategyBase { simple, min, max, mean, random };

// A tie-break strategy plus whether it runs on the weighted majority set.
// CLI spellings: simple, weighted, min, wmin, max, wmax, mean, wmean,
// random, wrandom.
struct Strategy {
    StrategyBase base;
    bool weighted = false;

    std::string name() const;
    bool operator==(const Strategy&) const = default;
};

Strategy parse_strategy(const std::string& text);

// All ten strategy spellings, in the order they are documented.
const std::vector<std::string>& strategy_names();

enum class RoundingMode { half_up, half_even };

RoundingMode parse_rounding(const std::string& text);
std::string to_string(RoundingMode mode);

struct AggregateOptions {
    RoundingMode rounding = RoundingMode::half_up;
    std::optional<std::uint64_t> seed;  // required for random strategies
    TallyOptions tally;
};

struct AggregationOutcome {
    std::string item_id;
    ScenarioTag scenario;       // always from the plain tally
    MajoritySet majority;       // the set the resolution used
    ClassLabel resolved;
    Strategy strategy;
    ClassScheme scheme;
};

ClassLabel resolve_min(const MajoritySet& m);
ClassLabel resolve_max(const MajoritySet& m);

// round(mean of members); the result need not be a member of m.
ClassLabel resolve_mean(const MajoritySet& m,
                        RoundingMode mode = RoundingMode::half_up);

// Uniform draw over m, reproducible for (seed, item_id): the item id is
// mixed into the stream so draws do not depend on processing order.
ClassLabel resolve_random(const MajoritySet& m, std::uint64_t seed,
                          const std::string& item_id);

// Applies the strategy's majority set (plain or weighted) and base resolver.
// `simple` on an item whose selected majority set is not a singleton throws
// an unresolvable-item ValidationError; callers drop such items.
AggregationOutcome aggregate(const ItemAnnotations& item,
                             const ClassScheme& scheme,
                             const Strategy& strategy,
                             const AggregateOptions& opts = {});

}  // namespace agreekit
