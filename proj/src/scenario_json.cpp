// irs-beamsim -- environment-aware beam selection for IRS-aided downlink
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "irsbeam/harness.hpp"

namespace irsbeam {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known) throw ConfigError(path + item.key() + ": unknown field");
    }
}

const json* field(const json& j, const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

std::uint64_t as_uint(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) throw ConfigError(path + ": expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

Vec3 as_vec3(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) throw ConfigError(path + ": expected [x, y, z]");
    Vec3 v;
    for (int i = 0; i < 3; ++i) v[i] = as_number(j[i], path);
    return v;
}

void merge_upa(const json& j, const std::string& path, UPAConfig& cfg) {
    check_keys(j, path + ".", {"rows", "cols", "spacing_wavelengths"});
    if (const json* v = field(j, "rows"))
        cfg.n_rows = static_cast<Eigen::Index>(as_uint(*v, path + ".rows"));
    if (const json* v = field(j, "cols"))
        cfg.n_cols = static_cast<Eigen::Index>(as_uint(*v, path + ".cols"));
    if (const json* v = field(j, "spacing_wavelengths"))
        cfg.spacing = as_number(*v, path + ".spacing_wavelengths");
}

void merge_layout(const json& j, SiteLayout& site) {
    const std::string path = "layout.";
    check_keys(j, path,
               {"bs_position", "bs_orientation", "irs_position", "irs_orientation",
                "carrier_wavelength_m", "blockers", "scatterers", "ue_area"});
    if (const json* v = field(j, "bs_position"))
        site.bs_position = as_vec3(*v, path + "bs_position");
    if (const json* v = field(j, "bs_orientation"))
        site.bs_orientation = as_vec3(*v, path + "bs_orientation");
    if (const json* v = field(j, "irs_position"))
        site.irs_position = as_vec3(*v, path + "irs_position");
    if (const json* v = field(j, "irs_orientation"))
        site.irs_orientation = as_vec3(*v, path + "irs_orientation");
    if (const json* v = field(j, "carrier_wavelength_m"))
        site.carrier_wavelength = as_number(*v, path + "carrier_wavelength_m");
    if (const json* v = field(j, "blockers")) {
        if (!v->is_array()) throw ConfigError(path + "blockers: expected an array");
        site.blockers.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const json& b = (*v)[i];
            const std::string bpath = path + "blockers[" + std::to_string(i) + "]";
            check_keys(b, bpath + ".", {"min", "max"});
            const json* lo = field(b, "min");
            const json* hi = field(b, "max");
            if (lo == nullptr || hi == nullptr)
                throw ConfigError(bpath + ": requires 'min' and 'max' corners");
            site.blockers.emplace_back(as_vec3(*lo, bpath + ".min"),
                                       as_vec3(*hi, bpath + ".max"));
        }
    }
    if (const json* v = field(j, "scatterers")) {
        if (!v->is_array()) throw ConfigError(path + "scatterers: expected an array");
        site.scatterers.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const json& s = (*v)[i];
            const std::string spath = path + "scatterers[" + std::to_string(i) + "]";
            check_keys(s, spath + ".", {"position", "reflectivity"});
            Scatterer sc;
            const json* pos = field(s, "position");
            if (pos == nullptr) throw ConfigError(spath + ": requires 'position'");
            sc.position = as_vec3(*pos, spath + ".position");
            if (const json* r = field(s, "reflectivity"))
                sc.reflectivity = as_number(*r, spath + ".reflectivity");
            site.scatterers.push_back(sc);
        }
    }
    if (const json* v = field(j, "ue_area")) {
        const std::string apath = path + "ue_area";
        check_keys(*v, apath + ".", {"x_min", "x_max", "y_min", "y_max", "height"});
        Eigen::Vector2d lo = site.ue_area.rect.min();
        Eigen::Vector2d hi = site.ue_area.rect.max();
        if (const json* f = field(*v, "x_min")) lo.x() = as_number(*f, apath + ".x_min");
        if (const json* f = field(*v, "y_min")) lo.y() = as_number(*f, apath + ".y_min");
        if (const json* f = field(*v, "x_max")) hi.x() = as_number(*f, apath + ".x_max");
        if (const json* f = field(*v, "y_max")) hi.y() = as_number(*f, apath + ".y_max");
        if (const json* f = field(*v, "height"))
            site.ue_area.height = as_number(*f, apath + ".height");
        site.ue_area.rect = {lo, hi};
    }
}

json vec3_to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

}  // namespace

ScenarioConfig config_from_json_text(const std::string& text, const ScenarioConfig& base) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    check_keys(j, "",
               {"layout", "irs_array", "bs_array", "noise_psd_dbm_per_hz", "bandwidth_hz",
                "power_sweep_dbm", "symbols_per_block", "k_neighbors", "n_train", "n_test",
                "location_error_mean_m", "seeds", "threads"});
    ScenarioConfig c = base;
    if (const json* v = field(j, "layout")) merge_layout(*v, c.layout);
    if (const json* v = field(j, "irs_array")) merge_upa(*v, "irs_array", c.irs_array);
    if (const json* v = field(j, "bs_array")) merge_upa(*v, "bs_array", c.bs_array);
    if (const json* v = field(j, "noise_psd_dbm_per_hz"))
        c.noise_psd_dbm_per_hz = as_number(*v, "noise_psd_dbm_per_hz");
    if (const json* v = field(j, "bandwidth_hz")) c.bandwidth_hz = as_number(*v, "bandwidth_hz");
    if (const json* v = field(j, "power_sweep_dbm")) {
        if (!v->is_array() || v->empty())
            throw ConfigError("power_sweep_dbm: expected a non-empty array");
        c.power_sweep_dbm.clear();
        for (const json& p : *v) c.power_sweep_dbm.push_back(as_number(p, "power_sweep_dbm"));
    }
    if (const json* v = field(j, "symbols_per_block"))
        c.symbols_per_block = static_cast<long>(as_uint(*v, "symbols_per_block"));
    if (const json* v = field(j, "k_neighbors"))
        c.k_neighbors = static_cast<std::size_t>(as_uint(*v, "k_neighbors"));
    if (const json* v = field(j, "n_train"))
        c.n_train = static_cast<std::size_t>(as_uint(*v, "n_train"));
    if (const json* v = field(j, "n_test"))
        c.n_test = static_cast<std::size_t>(as_uint(*v, "n_test"));
    if (const json* v = field(j, "location_error_mean_m"))
        c.location_error_mean_m = as_number(*v, "location_error_mean_m");
    if (const json* v = field(j, "seeds")) {
        check_keys(*v, "seeds.", {"train", "test", "noise", "error"});
        if (const json* s = field(*v, "train")) c.seeds.train = as_uint(*s, "seeds.train");
        if (const json* s = field(*v, "test")) c.seeds.test = as_uint(*s, "seeds.test");
        if (const json* s = field(*v, "noise")) c.seeds.noise = as_uint(*s, "seeds.noise");
        if (const json* s = field(*v, "error")) c.seeds.error = as_uint(*s, "seeds.error");
    }
    if (const json* v = field(j, "threads"))
        c.threads = static_cast<unsigned>(as_uint(*v, "threads"));
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& file, const ScenarioConfig& base) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string() + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str(), base);
}

std::string config_to_json_text(const ScenarioConfig& c) {
    json blockers = json::array();
    for (const Blocker& b : c.layout.blockers)
        blockers.push_back({{"min", vec3_to_json(b.min())}, {"max", vec3_to_json(b.max())}});
    json scatterers = json::array();
    for (const Scatterer& s : c.layout.scatterers)
        scatterers.push_back(
            {{"position", vec3_to_json(s.position)}, {"reflectivity", s.reflectivity}});
    const json j{
        {"layout",
         {{"bs_position", vec3_to_json(c.layout.bs_position)},
          {"bs_orientation", vec3_to_json(c.layout.bs_orientation)},
          {"irs_position", vec3_to_json(c.layout.irs_position)},
          {"irs_orientation", vec3_to_json(c.layout.irs_orientation)},
          {"carrier_wavelength_m", c.layout.carrier_wavelength},
          {"blockers", blockers},
          {"scatterers", scatterers},
          {"ue_area",
           {{"x_min", c.layout.ue_area.rect.min().x()},
            {"x_max", c.layout.ue_area.rect.max().x()},
            {"y_min", c.layout.ue_area.rect.min().y()},
            {"y_max", c.layout.ue_area.rect.max().y()},
            {"height", c.layout.ue_area.height}}}}},
        {"irs_array",
         {{"rows", c.irs_array.n_rows},
          {"cols", c.irs_array.n_cols},
          {"spacing_wavelengths", c.irs_array.spacing}}},
        {"bs_array",
         {{"rows", c.bs_array.n_rows},
          {"cols", c.bs_array.n_cols},
          {"spacing_wavelengths", c.bs_array.spacing}}},
        {"noise_psd_dbm_per_hz", c.noise_psd_dbm_per_hz},
        {"bandwidth_hz", c.bandwidth_hz},
        {"power_sweep_dbm", c.power_sweep_dbm},
        {"symbols_per_block", c.symbols_per_block},
        {"k_neighbors", c.k_neighbors},
        {"n_train", c.n_train},
        {"n_test", c.n_test},
        {"location_error_mean_m", c.location_error_mean_m},
        {"seeds",
         {{"train", c.seeds.train},
          {"test", c.seeds.test},
          {"noise", c.seeds.noise},
          {"error", c.seeds.error}}},
        {"threads", c.threads},
    };
    return j.dump(2) + "\n";
}

}  // namespace irsbeam
