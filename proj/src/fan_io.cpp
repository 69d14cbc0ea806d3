#include "torstab/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace torstab {

namespace {

long long to_file_int(const Int& x) {
    if (!x.fits_slong_p())
        fail(errc::bad_parameter, "coordinate does not fit the file format: " + x.get_str());
    return x.get_si();
}

} // namespace

Fan2D parse_fan2d(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_parameter, std::string("fan file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rank") || !doc.contains("rays"))
        fail(errc::bad_parameter, "fan file needs \"rank\" and \"rays\"");
    if (!doc["rank"].is_number_integer() || doc["rank"].get<long long>() != 2)
        fail(errc::bad_parameter, "only rank 2 fans are supported");
    if (!doc["rays"].is_array()) fail(errc::bad_parameter, "\"rays\" must be an array");

    std::vector<LatticeVector> rays;
    for (const nlohmann::json& entry : doc["rays"]) {
        if (!entry.is_array() || entry.size() != 2)
            fail(errc::bad_parameter, "each ray must be a pair of integers");
        std::vector<Int> coords;
        for (const nlohmann::json& x : entry) {
            if (!x.is_number_integer())
                fail(errc::bad_parameter, "ray coordinates must be integers");
            coords.emplace_back(static_cast<long>(x.get<long long>()));
        }
        rays.emplace_back(std::move(coords));
    }
    return validate_surface_fan(rays);
}

std::string emit_fan2d(const Fan2D& fan) {
    nlohmann::json doc;
    doc["rank"] = 2;
    doc["rays"] = nlohmann::json::array();
    for (const LatticeVector& v : fan.rays)
        doc["rays"].push_back({to_file_int(v.c[0]), to_file_int(v.c[1])});
    return doc.dump(2) + "\n";
}

Fan2D load_fan2d(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_parameter, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fan2d(buf.str());
}

void save_fan2d(const Fan2D& fan, const std::string& path) {
    std::string text = emit_fan2d(fan);
    std::ofstream out(path);
    if (!out) fail(errc::bad_parameter, "cannot write " + path);
    out << text;
    if (!out) fail(errc::bad_parameter, "write failed for " + path);
}

} // namespace torstab
