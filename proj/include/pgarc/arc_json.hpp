#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgarc/arc.hpp"
#include "pgarc/plane.hpp"

namespace pgarc {

// Portable form of an arc: everything needed to rebuild the plane it lives
// in (the point codes only mean something relative to p, h and the modulus)
// plus the member triples in insertion order.
struct ArcRecord {
    uint32_t q = 0;
    uint32_t p = 0;
    uint32_t h = 0;
    std::vector<uint32_t> modulus; // constant term first; empty for h = 1
    std::vector<Triple> points;   // canonical triples, insertion order
    bool complete = false;

    uint32_t size() const { return static_cast<uint32_t>(points.size()); }
};

ArcRecord make_record(const Plane& plane, const std::vector<uint32_t>& members, bool complete);

// Member point indices of a record in the given plane (which must match the
// record's field parameters).
std::vector<uint32_t> record_indices(const Plane& plane, const ArcRecord& rec);

// JSON layout:
// {"q":..,"p":..,"h":..,"modulus":[..],"points":[[cx,cy,cz],..],"size":..,"complete":..}
std::string to_json(const ArcRecord& rec);
ArcRecord record_from_json(const std::string& text); // ParseError on bad input

void write_arc_file(const std::string& path, const ArcRecord& rec);
ArcRecord read_arc_file(const std::string& path);

} // namespace pgarc
