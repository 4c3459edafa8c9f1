#pragma once

#include <string>

#include "connspace/space.hpp"

namespace connspace {

// Parsed form of the line-oriented text format:
//
//   # comment
//   space NAME
//   points a b c
//   nonintegral
//   raw
//   connected {a b}
//
// `space` is optional and precedes `points`; `points` precedes every
// `connected` line; flag lines may appear anywhere after `points` is allowed.
// In generated mode (the default) the listed sets are generators and the
// structure is their closure; under `raw` they are the entire structure and
// are validated as-is.
struct SpaceDocument {
    std::string name;
    std::vector<std::string> points;
    std::vector<std::vector<std::string>> connected;
    bool integral = true;
    bool generated = true;

    friend bool operator==(const SpaceDocument& a, const SpaceDocument& b) = default;
};

SpaceDocument parse_document(const std::string& text);

// Points sorted, sets deduplicated and sorted by cardinality then earliest
// label; semantically equal documents canonicalize identically.
SpaceDocument canonicalize(const SpaceDocument& doc);

// Canonical text; parse(serialize(d)) == canonicalize(d).
std::string serialize(const SpaceDocument& doc);

ConnSpace document_to_space(const SpaceDocument& doc, const Limits& limits = {});

// Raw-mode document listing the full structure. Unlabeled carriers get
// synthesized labels.
SpaceDocument space_to_document(const ConnSpace& space, const std::string& name = "");

// "a".."z" for up to 26 points, zero-padded "p00".. beyond that.
std::vector<std::string> synthesize_labels(std::size_t n);

} // namespace connspace
