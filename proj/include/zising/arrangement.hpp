#pragma once

#include <array>
#include <utility>
#include <vector>

#include "zising/region.hpp"

namespace zising {

struct CrossingPoint {
    int ci, cj;  // chord indices, 0-based, ci < cj
    std::array<double, 2> pos;
};

// Straight-chord realization of a region inside the unit disk. Endpoint j of
// the boundary sits at angle pi(2j-1)/(2n) plus a seed-dependent jitter of at
// most 0.01 rad; the jitter is retried until the picture is generic (every
// interleaving chord pair crosses once inside the disk, crossings pairwise
// distinct and off the boundary circle, margin 1e-9).
struct ChordArrangement {
    Region region;
    int seed = 0;
    std::vector<double> angles;                 // endpoint angles, counterclockwise
    std::vector<std::array<double, 2>> points;  // endpoint coordinates
    std::vector<std::pair<int, int>> chords;    // (j, tau(j)) with j < tau(j), by j
    std::vector<CrossingPoint> crossings;
};

ChordArrangement build_arrangement(const Region& r, int jitterSeed);

// Cells of the arrangement, identified by their sign vectors (side of each
// chord). Cells are convex, so the sign vector determines the cell.
struct Cell {
    std::vector<int> signVector;
    bool black = false;
    std::array<double, 2> point{};  // a sample point inside the cell
};

struct CellComplex {
    std::vector<Cell> cells;  // sorted by sign vector; count = 1 + n + #crossings
    std::vector<int> arcCell;                   // boundary arc j (1..2n) -> cell index
    std::vector<std::array<int, 4>> quadCell;   // crossing -> the four quadrant cells
    int refCell = 0;                            // the black cell at arc (d_1, d_2)
};

CellComplex enumerate_cells(const ChordArrangement& a);

struct IsingEdge {
    int u = 0, v = 0;      // black-cell vertex ids
    int crossing = 0;      // index into ChordArrangement::crossings
    double theta = 0;      // half-angle in (0, pi/2)
    double coupling = 0;   // (1/2) log((1 + sn(theta)) / cn(theta)) at parameter m
};

// Spin graph on the black cells: one edge per crossing, joining the two black
// quadrant cells there; boundary label b_i maps to the black cell at the arc
// between endpoints 2i-1 and 2i. Labels landing in one cell share a vertex.
struct IsingGraph {
    int numVertices = 0;
    int numCells = 0;
    double m = 0;
    std::vector<IsingEdge> edges;
    std::vector<int> boundary;                 // b_1..b_n -> vertex id
    std::vector<std::vector<int>> vertexSign;  // sign vectors of the black cells
};

IsingGraph build_black_graph(const ChordArrangement& a, double m);

// Per chord, the other chords met along it ordered by distance from the
// chord's first endpoint. Two seeds realize the same commutation class iff
// these sequences agree.
std::vector<std::vector<int>> crossing_order_signature(const ChordArrangement& a);

}  // namespace zising
