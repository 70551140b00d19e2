#include "tks/fanspec.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "tks/corpus.hpp"

namespace tks {

using nlohmann::ordered_json;

namespace {

Int parse_coordinate(const ordered_json& j, std::size_t ray, std::size_t coord) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos;
        if (digits && s.find('-', 1) == std::string::npos && s != "-") return Int(s);
    }
    std::ostringstream os;
    os << "ray " << ray << " coordinate " << coord << " is not an integer";
    throw parse_error(os.str());
}

}  // namespace

FanSpec parse_fanspec(std::string_view text, std::vector<std::string>* warnings) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("FanSpec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("FanSpec must be a JSON object");

    FanSpec spec;
    for (const char* field : {"name", "dim", "rays", "cones"}) {
        if (!doc.contains(field)) throw parse_error(std::string("FanSpec is missing field '") + field + "'");
    }
    if (!doc["name"].is_string()) throw parse_error("'name' must be a string");
    spec.name = doc["name"].get<std::string>();
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
        throw parse_error("'dim' must be a positive integer");
    }
    spec.dim = doc["dim"].get<std::size_t>();

    if (!doc["rays"].is_array()) throw parse_error("'rays' must be an array");
    for (std::size_t i = 0; i < doc["rays"].size(); ++i) {
        const auto& r = doc["rays"][i];
        if (!r.is_array()) throw parse_error("ray " + std::to_string(i) + " must be an array");
        std::vector<Int> coords;
        for (std::size_t c = 0; c < r.size(); ++c) coords.push_back(parse_coordinate(r[c], i, c));
        spec.rays.emplace_back(std::move(coords));
    }

    if (!doc["cones"].is_array()) throw parse_error("'cones' must be an array");
    for (std::size_t i = 0; i < doc["cones"].size(); ++i) {
        const auto& c = doc["cones"][i];
        if (!c.is_array()) throw parse_error("cone " + std::to_string(i) + " must be an array");
        std::vector<std::size_t> idx;
        for (const auto& e : c) {
            if (!e.is_number_integer() || e.get<long long>() < 0) {
                throw parse_error("cone " + std::to_string(i) + " has a non-index entry");
            }
            idx.push_back(e.get<std::size_t>());
        }
        spec.cones.push_back(std::move(idx));
    }

    if (doc.contains("metadata")) spec.metadata = doc["metadata"];
    for (const auto& [key, value] : doc.items()) {
        if (key == "name" || key == "dim" || key == "rays" || key == "cones" || key == "metadata") continue;
        if (warnings) warnings->push_back("ignoring unknown FanSpec field '" + key + "'");
    }
    return spec;
}

FanSpec read_fanspec_file(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read FanSpec file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fanspec(buf.str(), warnings);
}

ordered_json fanspec_to_json(const FanSpec& spec) {
    ordered_json j;
    j["name"] = spec.name;
    j["dim"] = spec.dim;
    j["rays"] = ordered_json::array();
    for (const auto& r : spec.rays) {
        ordered_json ray = ordered_json::array();
        for (const Int& c : r) {
            if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
                ray.push_back(c.convert_to<long long>());
            } else {
                ray.push_back(c.str());
            }
        }
        j["rays"].push_back(std::move(ray));
    }
    j["cones"] = spec.cones;
    if (!spec.metadata.empty()) j["metadata"] = spec.metadata;
    return j;
}

Fan build_fan(const FanSpec& spec) {
    std::vector<Cone> cones;
    for (const auto& c : spec.cones) cones.push_back(Cone{c});
    return Fan(spec.dim, spec.rays, std::move(cones));
}

VarietyPtr load_variety(const FanSpec& spec) { return make_variety(build_fan(spec), spec.name); }

FanSpec resolve_fanspec(const std::string& ref, std::vector<std::string>* warnings) {
    constexpr std::string_view prefix = "builtin:";
    if (ref.rfind(prefix, 0) == 0) {
        auto name = ref.substr(prefix.size());
        if (auto spec = builtin_fan(name)) return *spec;
        throw parse_error("no built-in fan named '" + name + "'");
    }
    return read_fanspec_file(ref, warnings);
}

}  // namespace tks
