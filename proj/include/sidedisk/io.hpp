#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sidedisk/geometry.hpp"
#include "sidedisk/medial_axis.hpp"
#include "sidedisk/mis.hpp"
#include "sidedisk/realizer.hpp"
#include "sidedisk/side_disks.hpp"
#include "sidedisk/tree_decomposition.hpp"

namespace sidedisk {

using Json = nlohmann::json;

Json to_json(const ConvexPolygon& P);
Json to_json(const IntersectionGraph& G);
Json to_json(const TreeDecomposition& T);
Json to_json(const MisResult& r);
Json to_json(const MedialAxis& M);
Json to_json(const OuterplanarInput& G);

// Parsers throw Error(InvalidArgument) on a malformed document.
ConvexPolygon polygon_from_json(const Json& j, Tolerance tol = {});
IntersectionGraph graph_from_json(const Json& j);
TreeDecomposition decomposition_from_json(const Json& j, int n);
OuterplanarInput outerplanar_from_json(const Json& j);

// Throw Error(Io) when the file cannot be read, written or parsed.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
Json read_json(const std::string& path);

struct SvgLayers {
    bool disks = true;
    const MedialAxis* medial_axis = nullptr;
    const std::vector<int>* mis_witness = nullptr;
    const TreeDecomposition* tree = nullptr;
};

std::string render_svg(const ConvexPolygon& P, const SvgLayers& layers = {});

}  // namespace sidedisk
