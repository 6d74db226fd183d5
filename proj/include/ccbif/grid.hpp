#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Sparse>

#include "ccbif/errors.hpp"

namespace ccbif {

enum class Bc { dirichlet, neumann };

/// Tensor grid on a 1D interval or 2D axis-aligned box.
///
/// Unknown-carrying nodes are the interior nodes under Dirichlet
/// conditions and all nodes (boundary included) under Neumann.
struct Grid {
    int dim = 1;
    int n_per_axis = 0;                 // interior nodes per axis
    std::array<double, 4> extent{};    // x0,x1,y0,y1 (y unused when dim==1)
    Bc bc = Bc::dirichlet;
    std::array<double, 2> h{};         // spacing per axis

    int nx = 0, ny = 1;                // unknowns per axis
    std::vector<double> xs, ys;        // per-axis unknown coordinates

    int num_nodes() const { return nx * ny; }
    int index(int i, int j) const { return i + nx * j; }
    int ix(int k) const { return k % nx; }
    int iy(int k) const { return k / nx; }
    double x(int k) const { return xs[static_cast<std::size_t>(ix(k))]; }
    double y(int k) const { return dim == 2 ? ys[static_cast<std::size_t>(iy(k))] : 0.0; }

    bool boundary_node(int k) const;

    /// 4-neighborhood (2 in 1D) restricted to unknown nodes.
    std::vector<int> neighbors(int k) const;

    /// Trapezoid-consistent lumped node weights: 1 inside, 1/2 on a
    /// Neumann boundary face, 1/4 at Neumann corners. All ones under
    /// Dirichlet. The physical quadrature weight is mass_weight * h
    /// (resp. h1*h2).
    std::vector<double> mass_weights() const;

    double cell_volume() const { return dim == 2 ? h[0] * h[1] : h[0]; }
    double domain_volume() const {
        double v = extent[1] - extent[0];
        if (dim == 2) v *= extent[3] - extent[2];
        return v;
    }
};

Grid build_grid(int dim, int n_per_axis, std::span<const double> extent, Bc bc);

/// Second-order finite-difference -Laplacian on the grid's unknowns.
///
/// Dirichlet rows eliminate the zero boundary values; Neumann rows use
/// the reflected-ghost zero-flux closure with half weight on boundary
/// rows, so the matrix stays symmetric with A*1 = 0.
struct DiscreteLaplacian {
    Eigen::SparseMatrix<double> matrix;
    Bc bc = Bc::dirichlet;
    double max_abs = 0.0;              // max |A_ij|, used by residual tolerances
};

DiscreteLaplacian assemble_laplacian(const Grid& grid);

} // namespace ccbif
