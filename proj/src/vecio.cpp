#include "munits/vecio.hpp"

#include <fstream>

namespace munits {

namespace {

long long require_int(const nlohmann::json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(where + ": missing or non-integer field \"" + key + "\"");
    return j[key].get<long long>();
}

}  // namespace

VectorFile parse_vector_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("vector file: top level must be an object");
    if (!j.contains("level") || !j["level"].is_object())
        throw ParseError("vector file: missing \"level\" object");
    long long p = require_int(j["level"], "p", "level");
    long long f = require_int(j["level"], "f", "level");
    Level level;
    try {
        level = Level::make(p, f);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("level: ") + e.what());
    }

    if (!j.contains("entries") || !j["entries"].is_array())
        throw ParseError("vector file: missing \"entries\" array");
    std::vector<RawEntry> raws;
    size_t idx = 0;
    for (const auto& je : j["entries"]) {
        std::string where = "entry " + std::to_string(idx);
        if (!je.is_object()) throw ParseError(where + ": must be an object");
        RawEntry e;
        e.r = require_int(je, "r", where);
        e.s = require_int(je, "s", where);
        e.m = require_int(je, "m", where);
        try {
            canonicalize(level, e.r, e.s);
        } catch (const std::invalid_argument& err) {
            throw ParseError(where + ": " + err.what());
        }
        raws.push_back(e);
        ++idx;
    }

    VectorFile out{level, ExponentVector::empty(level), {}};
    out.vec = ExponentVector::from_entries(level, raws, &out.warnings);
    return out;
}

VectorFile load_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open vector file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("vector file " + path + ": " + e.what());
    }
    return parse_vector_json(j);
}

nlohmann::json level_to_json(const Level& level) {
    return nlohmann::json{{"p", level.p}, {"f", level.f}};
}

nlohmann::json vector_to_json(const ExponentVector& v) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [pt, m] : v.entries())
        entries.push_back({{"r", pt.r}, {"s", pt.s}, {"m", m}});
    return nlohmann::json{{"level", level_to_json(v.level())}, {"entries", entries}};
}

std::vector<std::string> cyc_to_strings(const CycNumber& x) {
    std::vector<std::string> out;
    out.reserve(x.coeffs().size());
    for (const auto& q : x.coeffs())
        out.push_back(q.get_num().get_str() + "/" + q.get_den().get_str());
    return out;
}

}  // namespace munits
