#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace nvem {

struct BoundaryEdge {
    int a = -1;
    int b = -1;
    int tag = 0;
};

/// Polygonal mesh: shared nodes, CCW vertex loops per element, tagged boundary edges.
struct Mesh {
    std::vector<Eigen::Vector2d> nodes;
    std::vector<std::vector<int>> elements;
    std::vector<BoundaryEdge> boundary_edges;

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_elements() const { return static_cast<int>(elements.size()); }
    int num_dofs() const { return 2 * num_nodes(); }

    double diameter() const;   // bounding-box diagonal
    double total_area() const; // sum of element areas
};

struct ElementGeometry {
    Eigen::Matrix2Xd vertices;                  // CCW coordinates, one column per vertex
    double area = 0.0;                          // |E|
    Eigen::Vector2d centroid;                   // vertex mean
    std::vector<double> edge_lengths;           // edge a runs from vertex a to a+1 (cyclic)
    std::vector<Eigen::Vector2d> edge_normals;  // outward unit normals

    int num_vertices() const { return static_cast<int>(vertices.cols()); }
};

/// Per-node patch of incident elements carrying the representative nodal area.
struct NodalPatch {
    int node = -1;
    std::vector<int> elements;
    double nodal_area = 0.0;                        // |I|
    std::vector<int> patch_nodes;                   // sorted, distinct
    std::vector<std::vector<int>> element_scatter;  // element-local vertex -> patch slot

    std::vector<int> dof_map() const;  // patch-local dof -> global dof
};

/// Signed shoelace area of a polygon given as CCW columns.
double polygon_area(const Eigen::Matrix2Xd& vertices);

Mesh load_mesh(std::string_view text);
std::string save_mesh(const Mesh& mesh);
void validate_mesh(const Mesh& mesh);

ElementGeometry element_geometry(const Mesh& mesh, int element);
std::vector<ElementGeometry> all_element_geometries(const Mesh& mesh);

std::vector<NodalPatch> build_patches(const Mesh& mesh);

/// Nodes incident to any boundary edge (optionally restricted to one tag).
std::vector<int> boundary_nodes(const Mesh& mesh);
std::vector<int> boundary_nodes(const Mesh& mesh, int tag);

} // namespace nvem
