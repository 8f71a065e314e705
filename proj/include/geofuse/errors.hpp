#pragma once

#include <stdexcept>
#include <string>

namespace geofuse {

struct PlacementFailure : std::runtime_error {
    explicit PlacementFailure(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyRender : std::runtime_error {
    explicit EmptyRender(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTrack : std::runtime_error {
    explicit InvalidTrack(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateAxes : std::runtime_error {
    explicit DegenerateAxes(const std::string& what) : std::runtime_error(what) {}
};

struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct BehindCamera : std::runtime_error {
    explicit BehindCamera(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geofuse
