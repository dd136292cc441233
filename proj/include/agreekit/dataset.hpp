#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "agreekit/types.hpp"

namespace agreekit {

enum class InputFormat { jsonl, csv };

InputFormat parse_format(const std::string& text);
std::string to_string(InputFormat format);

struct Provenance {
    std::string source_path;
    InputFormat format = InputFormat::jsonl;
    // Kept in memory for audit logs; never serialized into artifacts, which
    // must be byte-identical across reruns.
    std::chrono::system_clock::time_point ingested_at;
    std::uint64_t content_hash = 0;
};

struct Dataset {
    std::vector<ItemAnnotations> items;  // order of first appearance
    Provenance provenance;

    static Dataset make(std::vector<ItemAnnotations> items);
};

// Groups one row per (item_id, annotator_id); duplicate pairs, out-of-range
// labels/strengths and 0-with-hate-labels contradictions are rejected with
// the offending line number.
Dataset parse_annotations(const std::string& source, InputFormat format,
                          const std::string& source_path = "<memory>");

// Canonical JSONL: one record object per line, items in dataset order,
// records in ingestion order. parse(serialize(ds)) == ds on content.
std::string serialize_dataset(const Dataset& ds);

std::string content_hash_hex(const Dataset& ds);

}  // namespace agreekit
