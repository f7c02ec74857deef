#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "matchparity/graph.hpp"
#include "matchparity/region.hpp"

namespace mpar {

using Dart = std::pair<int, int>;

// Counterclockwise neighbor order at every vertex of a simple plane graph,
// plus one dart whose left side is the external face.
struct RotationSystem {
    std::map<int, std::vector<int>> order;
    std::optional<Dart> outer;

    int next_ccw(int v, int w) const;
    int prev_ccw(int v, int w) const;
};

struct FaceSet {
    // Each face is the closed walk of its darts; faces[i][k].first is the k-th vertex.
    std::vector<std::vector<Dart>> faces;
    int external = -1;
    std::map<Dart, int> face_of;

    std::size_t internal_count() const { return faces.empty() ? 0 : faces.size() - 1; }
    std::vector<int> internal() const;
    std::vector<int> walk(int f) const;
    // Faces around v in ccw order: slot i is the face left of dart (v, order[v][i]).
    std::vector<int> around(const RotationSystem& rot, int v) const;
    std::vector<int> external_vertices() const;
};

void check_rotation(const Graph& g, const RotationSystem& rot);
FaceSet trace_faces(const Graph& g, const RotationSystem& rot);

// Counterclockwise angular order from coordinates; the outer dart is placed at the
// lowest (then leftmost) vertex.
RotationSystem rotation_from_positions(const Graph& g,
                                       const std::map<int, std::pair<double, double>>& pos);

// Lattice rotation (E, N, W, S); the outer dart is chosen on the bottom-left vertex.
RotationSystem grid_rotation(const GridRegion& r);

struct GridFaces {
    FaceSet faces;
    std::vector<std::optional<Point>> cell;  // lower-left corner for unit-square faces
};
GridFaces grid_faces(const GridRegion& r);

}  // namespace mpar
