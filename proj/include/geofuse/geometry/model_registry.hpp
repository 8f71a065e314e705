#pragma once

#include <map>
#include <string>

#include "geofuse/geometry/shape.hpp"

namespace geofuse::geom {

/// Known object geometries keyed by class id. Serialized as the
/// "geofuse-models/1" JSON schema: a list of {class_id, name, shape, dims},
/// dims in meters ([sx,sy,sz] for boxes, [radius,height] for cylinders).
class ModelRegistry {
public:
    static constexpr const char* kSchemaVersion = "geofuse-models/1";

    explicit ModelRegistry(double sampling_spacing = 0.005)
        : sampling_spacing_(sampling_spacing) {}

    void add(int class_id, std::string name, Shape shape);

    const ObjectModel& model(int class_id) const;
    bool contains(int class_id) const { return models_.count(class_id) > 0; }
    std::size_t size() const { return models_.size(); }
    double sampling_spacing() const { return sampling_spacing_; }

    const std::map<int, ObjectModel>& models() const { return models_; }

    std::string to_json() const;
    static ModelRegistry from_json(const std::string& text, double sampling_spacing = 0.005);

    void save(const std::string& path) const;
    static ModelRegistry load(const std::string& path, double sampling_spacing = 0.005);

    /// Ten desk-scale household primitives used by the simulator defaults.
    static ModelRegistry default_registry(double sampling_spacing = 0.005);

private:
    double sampling_spacing_;
    std::map<int, ObjectModel> models_;
};

}  // namespace geofuse::geom
