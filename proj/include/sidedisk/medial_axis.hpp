#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sidedisk/geometry.hpp"

namespace sidedisk {

struct MedialAxisVertex {
    int id = 0;
    Point center;
    double inradius = 0.0;
    std::vector<int> tangent_sides;  // sorted
    bool leaf = false;
};

// Internal vertices carry ids [0, internal_count()) in depth-first preorder
// from the vertex of maximum inradius (id 0). Polygon vertex k is the leaf
// with id internal_count() + k, tangent to sides k-1 and k.
class MedialAxis {
public:
    int vertex_count() const { return static_cast<int>(radius_.size()); }
    int internal_count() const { return internal_; }
    int polygon_size() const { return vertex_count() - internal_; }
    bool is_leaf(int id) const { return id >= internal_; }
    int leaf_of(int polygon_vertex) const { return internal_ + polygon_vertex; }

    Point center(int id) const { return center_[id]; }
    double inradius(int id) const { return radius_[id]; }
    std::span<const int> tangent_sides(int id) const {
        return {tangent_.data() + tangent_off_[id], tangent_.data() + tangent_off_[id + 1]};
    }
    bool is_tangent(int id, int side) const;
    std::span<const int> neighbors(int id) const {
        return {adj_.data() + adj_off_[id], adj_.data() + adj_off_[id + 1]};
    }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    MedialAxisVertex vertex(int id) const;

    // Axis edges lying on the bisector of sides a and b.
    std::vector<int> edges_on_bisector(int a, int b) const;

    friend MedialAxis compute_medial_axis(const ConvexPolygon& P, Tolerance tol);

private:
    int internal_ = 0;
    std::vector<Point> center_;
    std::vector<double> radius_;
    std::vector<int> tangent_off_, tangent_;
    std::vector<int> adj_off_, adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<unsigned long long, int>> bisector_index_;  // sorted (side pair key, edge)
};

MedialAxis compute_medial_axis(const ConvexPolygon& P, Tolerance tol = {});

MedialAxisVertex max_inscribed_vertex(const MedialAxis& M);

struct SplitResult {
    int t = 0;
    int vertex = 0;
};

// u, v are side labels bounding the counter-clockwise range (u, v); q must be
// tangent to both. Throws EmptyRange when the range has no interior side.
SplitResult find_split_side(const MedialAxis& M, const ConvexPolygon& P, int u, int v, int q,
                            std::size_t* steps = nullptr);

}  // namespace sidedisk
