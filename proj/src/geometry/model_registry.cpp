#include "geofuse/geometry/model_registry.hpp"

#include <fstream>

#include <json.hpp>

#include "geofuse/errors.hpp"

namespace geofuse::geom {

using nlohmann::json;

void ModelRegistry::add(int class_id, std::string name, Shape shape) {
    if (class_id < 1) throw ConfigError("class_id must be >= 1");
    models_[class_id] = make_model(class_id, std::move(name), std::move(shape), sampling_spacing_);
}

const ObjectModel& ModelRegistry::model(int class_id) const {
    auto it = models_.find(class_id);
    if (it == models_.end())
        throw ConfigError("unknown class_id " + std::to_string(class_id));
    return it->second;
}

std::string ModelRegistry::to_json() const {
    json root;
    root["version"] = kSchemaVersion;
    json list = json::array();
    for (const auto& [id, m] : models_) {
        json e;
        e["class_id"] = id;
        e["name"] = m.name;
        if (m.is_box()) {
            e["shape"] = "box";
            const auto& ext = m.box().extents;
            e["dims"] = {ext.x(), ext.y(), ext.z()};
        } else {
            e["shape"] = "cylinder";
            e["dims"] = {m.cylinder().radius, m.cylinder().height};
        }
        list.push_back(e);
    }
    root["models"] = list;
    return root.dump(2);
}

ModelRegistry ModelRegistry::from_json(const std::string& text, double sampling_spacing) {
    json root = json::parse(text);
    if (root.value("version", "") != kSchemaVersion)
        throw ConfigError("unsupported model registry version");
    ModelRegistry reg(sampling_spacing);
    for (const auto& e : root.at("models")) {
        const int id = e.at("class_id").get<int>();
        const std::string name = e.at("name").get<std::string>();
        const std::string kind = e.at("shape").get<std::string>();
        const auto dims = e.at("dims");
        if (kind == "box") {
            reg.add(id, name, Box{Vec3(dims.at(0), dims.at(1), dims.at(2))});
        } else if (kind == "cylinder") {
            reg.add(id, name, Cylinder{dims.at(0), dims.at(1)});
        } else {
            throw ConfigError("unknown shape kind: " + kind);
        }
    }
    return reg;
}

void ModelRegistry::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << to_json() << "\n";
}

ModelRegistry ModelRegistry::load(const std::string& path, double sampling_spacing) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json(text, sampling_spacing);
}

ModelRegistry ModelRegistry::default_registry(double sampling_spacing) {
    ModelRegistry reg(sampling_spacing);
    reg.add(1, "cube7", Box{Vec3(0.07, 0.07, 0.05)});
    reg.add(2, "carton", Box{Vec3(0.06, 0.09, 0.12)});
    reg.add(3, "tray", Box{Vec3(0.16, 0.11, 0.05)});
    reg.add(4, "dice_block", Box{Vec3(0.05, 0.05, 0.05)});
    reg.add(5, "brick", Box{Vec3(0.10, 0.07, 0.08)});
    reg.add(6, "soup_can", Cylinder{0.033, 0.10});
    reg.add(7, "pitcher", Cylinder{0.04, 0.14});
    reg.add(8, "bottle", Cylinder{0.026, 0.13});
    reg.add(9, "puck", Cylinder{0.045, 0.06});
    reg.add(10, "bar", Box{Vec3(0.04, 0.12, 0.07)});
    return reg;
}

}  // namespace geofuse::geom
