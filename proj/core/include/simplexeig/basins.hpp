#pragma once

#include "simplexeig/dynamics.hpp"

#include <array>
#include <filesystem>

namespace simplexeig {

enum class CellStatus { Converged, Unresolved, MapUndefined };

const char* to_string(CellStatus s);

struct BasinCell {
    CellStatus status = CellStatus::Unresolved;
    int limit_index = -1; // eigenpair index for Converged cells
    int iterations = 0;
};

// Raster of TPI limits over the unit circle (n = 2) or the unit sphere
// (n = 3, equirectangular latitude-longitude grid).
struct BasinMap {
    int n = 0;
    int d = 0;
    int res_theta = 0; // circle: number of angles; sphere: colatitudes
    int res_phi = 0;   // sphere only
    EigenStructure structure;
    std::vector<double> spectral_radii; // per pair; NaN where undefined
    std::vector<BasinCell> cells;       // row-major, theta outer

    int cell_count() const { return static_cast<int>(cells.size()); }
    // Start point of a cell: angle theta_i = 2 pi i / res for the circle;
    // theta_i = pi (i + 1/2) / res_theta, phi_j = 2 pi j / res_phi for the
    // sphere.
    Eigen::VectorXd start_point(int index) const;
    double converged_fraction() const;
};

// Runs one TPI trajectory per cell (cells are independent and processed in
// parallel; assembly is deterministic by cell index). res_phi is ignored
// for n = 2. Throws std::invalid_argument for n outside {2, 3}, resolution
// < 16, or a whole-sphere eigenstructure (d = 2, (2,4)).
BasinMap rasterize(int n, int d, int resolution, int res_phi = 0, const TpiOptions& opts = {});

// Binary PPM (P6): a 1 x resolution strip for the circle, res_phi x
// res_theta equirectangular image for the sphere. Fixed HSV-derived
// palette indexed by limit_index, black for Unresolved, white for
// MapUndefined. Throws std::runtime_error on I/O failure.
void write_image(const BasinMap& map, const std::filesystem::path& path);

// Sidecar CSV: index, coord1[, coord2], limit_index, iterations, status.
void write_cells_csv(const BasinMap& map, const std::filesystem::path& path);

// Palette color used for a limit index (black/white for the two failure
// statuses).
std::array<unsigned char, 3> palette_color(CellStatus status, int limit_index);

} // namespace simplexeig
