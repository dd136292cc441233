#pragma once

#include <string>

namespace agreekit {

// Labels are plain integers; schemes tag how many classes are in play and
// how the base 6-class labels collapse.
using ClassLabel = int;

inline constexpr int kNumBaseClasses = 6;

enum class SchemeId { six, four, two };

struct ClassScheme {
    SchemeId id;

    int num_classes() const;

    // Reduction from a 6-class label into this scheme. Identity for six,
    // {0,1,2|3,4|5} -> {0,1,2,3} for four, zero/nonzero for two.
    ClassLabel reduce(ClassLabel label) const;

    // "six" / "four" / "two", the spelling used in reports.
    std::string name() const;

    bool operator==(const ClassScheme&) const = default;
};

inline constexpr ClassScheme kSchemeSix{SchemeId::six};
inline constexpr ClassScheme kSchemeFour{SchemeId::four};
inline constexpr ClassScheme kSchemeTwo{SchemeId::two};

// Accepts "6"/"4"/"2" (the CLI flag values) and "six"/"four"/"two".
ClassScheme parse_scheme(const std::string& text);

// Throws ValidationError naming the value if label is outside [0, 5].
void check_base_label(ClassLabel label);

ClassLabel reduce_label(ClassLabel label, const ClassScheme& scheme);

}  // namespace agreekit
