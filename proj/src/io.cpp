#include "sidedisk/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "sidedisk/error.hpp"

namespace sidedisk {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::InvalidArgument, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) malformed(std::string("missing \"") + name + "\"");
    return j.at(name);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<Edge> edge_list(const Json& j, const char* what) {
    if (!j.is_array()) malformed(std::string(what) + " must be an array");
    std::vector<Edge> out;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2) malformed(std::string(what) + " entries must be pairs");
        out.emplace_back(as_int(e[0], what), as_int(e[1], what));
    }
    return out;
}

}  // namespace

Json to_json(const ConvexPolygon& P) {
    Json v = Json::array();
    for (const Point& p : P.vertices()) v.push_back({p.x, p.y});
    return Json{{"vertices", v}};
}

Json to_json(const IntersectionGraph& G) {
    Json e = Json::array();
    for (auto [a, b] : G.edges) e.push_back({a, b});
    return Json{{"n", G.n}, {"mode", G.mode == IntersectionMode::Closed ? "closed" : "open"}, {"edges", e}};
}

Json to_json(const TreeDecomposition& T) {
    Json bags = Json::array();
    for (const Bag& b : T.bags) {
        Json sides = Json::array();
        for (int s : b) sides.push_back(s);
        bags.push_back({{"id", b.id}, {"sides", sides}, {"parent", b.parent < 0 ? Json(nullptr) : Json(b.parent)}});
    }
    return Json{{"n", T.n}, {"root", T.root}, {"bags", bags}};
}

Json to_json(const MisResult& r) { return Json{{"alpha", r.size}, {"witness", r.witness}}; }

Json to_json(const MedialAxis& M) {
    Json verts = Json::array();
    for (int id = 0; id < M.vertex_count(); ++id) {
        MedialAxisVertex v = M.vertex(id);
        verts.push_back({{"id", id},
                         {"center", {v.center.x, v.center.y}},
                         {"radius", v.inradius},
                         {"tangent_sides", v.tangent_sides},
                         {"leaf", v.leaf}});
    }
    Json edges = Json::array();
    for (auto [a, b] : M.edges()) edges.push_back({a, b});
    return Json{{"vertices", verts}, {"edges", edges}};
}

Json to_json(const OuterplanarInput& G) {
    Json c = Json::array();
    for (auto [a, b] : G.chords) c.push_back({a, b});
    return Json{{"n", G.n}, {"chords", c}};
}

ConvexPolygon polygon_from_json(const Json& j, Tolerance tol) {
    const Json& v = field(j, "vertices");
    if (!v.is_array()) malformed("\"vertices\" must be an array");
    std::vector<Point> pts;
    for (const Json& p : v) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            malformed("vertices must be [x, y] number pairs");
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return validate_convex_polygon(std::move(pts), tol);
}

IntersectionGraph graph_from_json(const Json& j) {
    int n = as_int(field(j, "n"), "n");
    IntersectionMode mode = IntersectionMode::Closed;
    if (j.contains("mode")) {
        std::string m = j.at("mode").is_string() ? j.at("mode").get<std::string>() : "";
        if (m == "open") mode = IntersectionMode::Open;
        else if (m != "closed") malformed("\"mode\" must be \"closed\" or \"open\"");
    }
    return make_graph(n, edge_list(field(j, "edges"), "edges"), mode);
}

TreeDecomposition decomposition_from_json(const Json& j, int n) {
    TreeDecomposition T;
    T.n = j.contains("n") ? as_int(j.at("n"), "n") : n;
    T.root = as_int(field(j, "root"), "root");
    const Json& bags = field(j, "bags");
    if (!bags.is_array()) malformed("\"bags\" must be an array");
    for (const Json& b : bags) {
        Bag bag;
        bag.id = as_int(field(b, "id"), "id");
        const Json& p = field(b, "parent");
        bag.parent = p.is_null() ? -1 : as_int(p, "parent");
        const Json& sides = field(b, "sides");
        if (!sides.is_array() || sides.size() > 4) malformed("bag sides must be an array of at most 4");
        for (const Json& s : sides) bag.sides[bag.count++] = as_int(s, "sides");
        T.bags.push_back(bag);
    }
    return T;
}

OuterplanarInput outerplanar_from_json(const Json& j) {
    return parse_outerplanar(as_int(field(j, "n"), "n"), edge_list(field(j, "chords"), "chords"));
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

Json read_json(const std::string& path) {
    std::string text = read_text(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Io, path + " is not valid JSON: " + e.what());
    }
}

// ---------------------------------------------------------------- SVG

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

}  // namespace

std::string render_svg(const ConvexPolygon& P, const SvgLayers& layers) {
    const int n = static_cast<int>(P.size());
    std::vector<Disk> D = side_disks(P);
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
    auto grow = [&](Point p, double r) {
        lo_x = std::min(lo_x, p.x - r);
        hi_x = std::max(hi_x, p.x + r);
        lo_y = std::min(lo_y, p.y - r);
        hi_y = std::max(hi_y, p.y + r);
    };
    for (const Point& p : P.vertices()) grow(p, 0.0);
    if (layers.disks)
        for (const Disk& d : D) grow(d.center, d.radius);
    double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
    lo_x -= pad;
    lo_y -= pad;
    hi_x += pad;
    hi_y += pad;
    // y axis points up in the document
    auto X = [](Point p) { return num(p.x); };
    auto Y = [](Point p) { return num(-p.y); };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(lo_x) << ' ' << num(-hi_y) << ' '
      << num(hi_x - lo_x) << ' ' << num(hi_y - lo_y) << "\" width=\"800\" height=\""
      << num(800.0 * (hi_y - lo_y) / (hi_x - lo_x)) << "\">\n";
    s << "<style>.disk{fill:#4a90d9;fill-opacity:0.12;stroke:#4a90d9}.disk.mis{fill:#e8743b;fill-opacity:0.45;"
         "stroke:#c0392b}.polygon{fill:none;stroke:#222}.axis{stroke:#2e8b57}.tree{stroke:#8e44ad}"
         "*{vector-effect:non-scaling-stroke}</style>\n";
    if (layers.disks) {
        std::vector<char> hi(static_cast<std::size_t>(n), 0);
        if (layers.mis_witness)
            for (int k : *layers.mis_witness)
                if (k >= 0 && k < n) hi[k] = 1;
        s << "<g id=\"disks\">\n";
        for (int k = 0; k < n; ++k)
            s << "<circle class=\"disk" << (hi[k] ? " mis" : "") << "\" data-side=\"" << k << "\" cx=\""
              << X(D[k].center) << "\" cy=\"" << Y(D[k].center) << "\" r=\"" << num(D[k].radius) << "\"/>\n";
        s << "</g>\n";
    }
    s << "<path class=\"polygon\" d=\"";
    for (int k = 0; k < n; ++k) s << (k ? " L " : "M ") << X(P.vertex(k)) << ' ' << Y(P.vertex(k));
    s << " Z\"/>\n";
    if (layers.medial_axis) {
        const MedialAxis& M = *layers.medial_axis;
        s << "<g id=\"medial-axis\">\n";
        for (auto [a, b] : M.edges())
            s << "<line class=\"axis\" x1=\"" << X(M.center(a)) << "\" y1=\"" << Y(M.center(a)) << "\" x2=\""
              << X(M.center(b)) << "\" y2=\"" << Y(M.center(b)) << "\"/>\n";
        s << "</g>\n";
    }
    if (layers.tree) {
        const TreeDecomposition& T = *layers.tree;
        std::vector<Point> at(T.bags.size());
        for (const Bag& b : T.bags) {
            Point c{0, 0};
            for (int x : b) c = c + P.side(x).midpoint();
            at[b.id] = (1.0 / std::max(1, b.count)) * c;
        }
        s << "<g id=\"tree\">\n";
        for (const Bag& b : T.bags)
            if (b.parent >= 0)
                s << "<line class=\"tree\" x1=\"" << X(at[b.id]) << "\" y1=\"" << Y(at[b.id]) << "\" x2=\""
                  << X(at[b.parent]) << "\" y2=\"" << Y(at[b.parent]) << "\"/>\n";
        for (const Bag& b : T.bags)
            s << "<circle class=\"tree\" data-bag=\"" << b.id << "\" cx=\"" << X(at[b.id]) << "\" cy=\"" << Y(at[b.id])
              << "\" r=\"" << num(pad * 0.1) << "\"/>\n";
        s << "</g>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace sidedisk
