#include "pgarc/arc_json.hpp"

#include <fstream>

#include "json.hpp"

namespace pgarc {

using ordered_json = nlohmann::ordered_json;

ArcRecord make_record(const Plane& plane, const std::vector<uint32_t>& members, bool complete) {
    ArcRecord rec;
    const Field& f = plane.field();
    rec.q = f.q();
    rec.p = f.p();
    rec.h = f.h();
    rec.modulus = f.modulus();
    rec.points.reserve(members.size());
    for (uint32_t m : members) rec.points.push_back(plane.triple_of(m));
    rec.complete = complete;
    return rec;
}

std::vector<uint32_t> record_indices(const Plane& plane, const ArcRecord& rec) {
    if (plane.q() != rec.q)
        fail(ErrorCode::ParseError, "record is for a different plane order");
    std::vector<uint32_t> out;
    out.reserve(rec.points.size());
    for (const Triple& t : rec.points) {
        if (t[0] >= rec.q || t[1] >= rec.q || t[2] >= rec.q)
            fail(ErrorCode::ParseError, "point coordinate out of field range");
        if (t[0] == 0 && t[1] == 0 && t[2] == 0)
            fail(ErrorCode::ParseError, "zero triple is not a projective point");
        out.push_back(plane.index_of(t[0], t[1], t[2]));
    }
    return out;
}

std::string to_json(const ArcRecord& rec) {
    ordered_json j;
    j["q"] = rec.q;
    j["p"] = rec.p;
    j["h"] = rec.h;
    j["modulus"] = rec.modulus;
    auto& pts = j["points"] = ordered_json::array();
    for (const Triple& t : rec.points) pts.push_back({t[0], t[1], t[2]});
    j["size"] = rec.points.size();
    j["complete"] = rec.complete;
    return j.dump() + "\n";
}

ArcRecord record_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "not valid JSON");
    ArcRecord rec;
    try {
        rec.q = j.at("q").get<uint32_t>();
        rec.p = j.at("p").get<uint32_t>();
        rec.h = j.at("h").get<uint32_t>();
        rec.modulus = j.at("modulus").get<std::vector<uint32_t>>();
        for (const auto& pt : j.at("points")) {
            if (!pt.is_array() || pt.size() != 3)
                fail(ErrorCode::ParseError, "each point must be a coordinate triple");
            rec.points.push_back({pt[0].get<uint32_t>(), pt[1].get<uint32_t>(), pt[2].get<uint32_t>()});
        }
        rec.complete = j.value("complete", false);
        if (j.contains("size") && j.at("size").get<size_t>() != rec.points.size())
            fail(ErrorCode::ParseError, "size field disagrees with the point list");
    } catch (const ordered_json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    uint64_t expect = 1;
    for (uint32_t i = 0; i < rec.h; ++i) expect *= rec.p;
    if (rec.h == 0 || expect != rec.q)
        fail(ErrorCode::ParseError, "q does not equal p^h");
    return rec;
}

void write_arc_file(const std::string& path, const ArcRecord& rec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::ParseError, "cannot open " + path + " for writing");
    out << to_json(rec);
}

ArcRecord read_arc_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return record_from_json(text);
}

} // namespace pgarc
