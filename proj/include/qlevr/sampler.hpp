#pragma once

#include <stdexcept>

#include "qlevr/rng.hpp"
#include "qlevr/scene.hpp"

namespace qlevr {

struct SamplerConfig {
    uint64_t seed = 0;
    int max_place_attempts = 200;   // dart throws per entity
    int max_layout_restarts = 80;   // whole-layout restarts before giving up
    SceneLimits limits;
};

struct PlacementExhausted : std::runtime_error {
    explicit PlacementExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Samples one valid scene. Pure function of (config, scene_id): the per-scene
// stream is stream_seed(config.seed, scene_id), so scenes can be drawn in any
// order or in parallel. Throws PlacementExhausted when rejection placement
// fails repeatedly; callers retry with a fresh derived seed.
SceneGraph sample_scene(const SamplerConfig& config, int64_t scene_id);

// Geometry for one geometric plane: a disc or a convex polygon with area in
// the configured range, fully inside the unit table.
PlaneRegion sample_plane_geometry(PlaneShape shape, Rng& rng, const SceneLimits& limits);

}  // namespace qlevr
