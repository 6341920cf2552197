#include "simplexeig/basins.hpp"

#include "parallel.hpp"
#include "simplexeig/text_format.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace simplexeig {

const char* to_string(CellStatus s)
{
    switch (s) {
    case CellStatus::Converged: return "converged";
    case CellStatus::Unresolved: return "unresolved";
    case CellStatus::MapUndefined: return "map-undefined";
    }
    return "?";
}

Eigen::VectorXd BasinMap::start_point(int index) const
{
    if (n == 2) {
        const double theta = 2.0 * std::numbers::pi * index / res_theta;
        Eigen::VectorXd x(2);
        x << std::cos(theta), std::sin(theta);
        return x;
    }
    const int a = index / res_phi;
    const int b = index % res_phi;
    const double theta = std::numbers::pi * (a + 0.5) / res_theta;
    const double phi_angle = 2.0 * std::numbers::pi * b / res_phi;
    Eigen::VectorXd x(3);
    x << std::sin(theta) * std::cos(phi_angle), std::sin(theta) * std::sin(phi_angle), std::cos(theta);
    return x;
}

double BasinMap::converged_fraction() const
{
    if (cells.empty()) return 0.0;
    int converged = 0;
    for (const BasinCell& cell : cells)
        if (cell.status == CellStatus::Converged) ++converged;
    return static_cast<double>(converged) / static_cast<double>(cells.size());
}

BasinMap rasterize(int n, int d, int resolution, int res_phi, const TpiOptions& opts)
{
    if (n != 2 && n != 3) throw std::invalid_argument("rasterize supports n in {2, 3}");
    if (resolution < 16) throw std::invalid_argument("rasterize needs resolution >= 16");
    if (n == 3 && res_phi == 0) res_phi = 2 * resolution;
    if (n == 3 && res_phi < 16) throw std::invalid_argument("rasterize needs res_phi >= 16");

    BasinMap map;
    map.n = n;
    map.d = d;
    map.res_theta = resolution;
    map.res_phi = (n == 3) ? res_phi : 0;
    map.structure = enumerate_eigenpairs(n, d);
    if (map.structure.whole_sphere)
        throw std::invalid_argument("every point is an eigenvector here; no basins to rasterize");

    const SimplexTensor t = make_simplex_tensor(n, d);
    for (const EigenPair& pair : map.structure.pairs) {
        if (std::abs(pair.mu) <= kZeroEigenvalueTol) {
            map.spectral_radii.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        map.spectral_radii.push_back(spectral_radius_sym(*jacobian(t, pair.vector)));
    }

    const int count = (n == 2) ? resolution : resolution * res_phi;
    map.cells.assign(count, BasinCell{});
    detail::parallel_for(0, count, [&](int i) {
        const TpiResult r = tpi_run(t, map.start_point(i), opts, &map.structure);
        BasinCell cell;
        cell.iterations = r.iterations;
        if (r.status == TpiStatus::Converged && r.matched_eigenpair >= 0) {
            cell.status = CellStatus::Converged;
            cell.limit_index = r.matched_eigenpair;
        } else if (r.status == TpiStatus::MapUndefined) {
            cell.status = CellStatus::MapUndefined;
        } else {
            cell.status = CellStatus::Unresolved;
        }
        map.cells[i] = cell;
    });
    return map;
}

std::array<unsigned char, 3> palette_color(CellStatus status, int limit_index)
{
    if (status == CellStatus::Unresolved) return {0, 0, 0};
    if (status == CellStatus::MapUndefined) return {255, 255, 255};

    // golden-angle hue walk keeps neighbouring indices far apart
    const double h = std::fmod(137.50776405003785 * limit_index, 360.0) / 60.0;
    const double s = 0.82, v = 0.95;
    const int sector = static_cast<int>(h) % 6;
    const double f = h - std::floor(h);
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double u = v * (1.0 - s * (1.0 - f));
    double rgb[3] = {0, 0, 0};
    switch (sector) {
    case 0: rgb[0] = v; rgb[1] = u; rgb[2] = p; break;
    case 1: rgb[0] = q; rgb[1] = v; rgb[2] = p; break;
    case 2: rgb[0] = p; rgb[1] = v; rgb[2] = u; break;
    case 3: rgb[0] = p; rgb[1] = q; rgb[2] = v; break;
    case 4: rgb[0] = u; rgb[1] = p; rgb[2] = v; break;
    default: rgb[0] = v; rgb[1] = p; rgb[2] = q; break;
    }
    return {static_cast<unsigned char>(std::lround(rgb[0] * 255.0)),
            static_cast<unsigned char>(std::lround(rgb[1] * 255.0)),
            static_cast<unsigned char>(std::lround(rgb[2] * 255.0))};
}

void write_image(const BasinMap& map, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");

    const int width = (map.n == 2) ? map.res_theta : map.res_phi;
    const int height = (map.n == 2) ? 1 : map.res_theta;
    out << "P6\n" << width << " " << height << "\n255\n";
    for (const BasinCell& cell : map.cells) {
        const auto rgb = palette_color(cell.status, cell.limit_index);
        out.write(reinterpret_cast<const char*>(rgb.data()), 3);
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_cells_csv(const BasinMap& map, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");

    out << (map.n == 2 ? "index,coord1,limit_index,iterations,status\n"
                       : "index,coord1,coord2,limit_index,iterations,status\n");
    for (int i = 0; i < map.cell_count(); ++i) {
        const BasinCell& cell = map.cells[i];
        out << i << ",";
        if (map.n == 2) {
            out << fmt17(2.0 * std::numbers::pi * i / map.res_theta) << ",";
        } else {
            const int a = i / map.res_phi;
            const int b = i % map.res_phi;
            out << fmt17(std::numbers::pi * (a + 0.5) / map.res_theta) << ","
                << fmt17(2.0 * std::numbers::pi * b / map.res_phi) << ",";
        }
        out << cell.limit_index << "," << cell.iterations << "," << to_string(cell.status) << "\n";
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

} // namespace simplexeig
