#include "simplexeig/basins.hpp"
#include "simplexeig/oracle.hpp"
#include "simplexeig/rng.hpp"
#include "simplexeig/text_format.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace simplexeig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadFlags = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitIoError = 4;

std::string support_json(const BarycentricSolution& s)
{
    std::ostringstream out;
    const auto indices = [](const std::vector<int>& k) {
        std::string acc = "[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) acc += ",";
            acc += std::to_string(k[i] + 1); // 1-based in reports
        }
        return acc + "]";
    };
    if (s.kind == BarycentricSolution::Kind::UniformOnK) {
        out << "{\"type\":\"uniform\",\"K\":" << indices(s.support_low)
            << ",\"level\":" << fmt17(s.level_low) << "}";
    } else {
        out << "{\"type\":\"two_level\",\"K1\":" << indices(s.support_low)
            << ",\"K2\":" << indices(s.support_high) << ",\"s_low\":" << fmt17(s.level_low)
            << ",\"s_high\":" << fmt17(s.level_high) << "}";
    }
    return out.str();
}

std::string support_text(const BarycentricSolution& s)
{
    const auto indices = [](const std::vector<int>& k) {
        std::string acc = "{";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) acc += ",";
            acc += std::to_string(k[i] + 1);
        }
        return acc + "}";
    };
    if (s.kind == BarycentricSolution::Kind::UniformOnK) return "uniform K=" + indices(s.support_low);
    return "two-level K1=" + indices(s.support_low) + " K2=" + indices(s.support_high);
}

void print_matrix_rows_json(std::ostream& out, const Eigen::MatrixXd& m, bool columns_as_rows)
{
    const int rows = columns_as_rows ? static_cast<int>(m.cols()) : static_cast<int>(m.rows());
    out << "[";
    for (int r = 0; r < rows; ++r) {
        if (r) out << ",";
        const Eigen::VectorXd row = columns_as_rows ? Eigen::VectorXd(m.col(r)) : Eigen::VectorXd(m.row(r));
        out << "[" << join17(row) << "]";
    }
    out << "]";
}

int cmd_frame(int n, const std::string& format)
{
    const SimplexFrame frame = build_simplex_frame(n);
    const Eigen::MatrixXd g = gramian(frame);
    if (format == "json") {
        std::cout << "{\"n\":" << n << ",\"vectors\":";
        print_matrix_rows_json(std::cout, frame.vectors(), true);
        std::cout << ",\"gramian\":";
        print_matrix_rows_json(std::cout, g, false);
        std::cout << "}\n";
    } else if (format == "csv") {
        std::cout << "# vectors\n";
        for (int k = 0; k <= n; ++k) std::cout << join17(frame.vector(k)) << "\n";
        std::cout << "# gramian\n";
        for (int r = 0; r <= n; ++r) std::cout << join17(g.row(r)) << "\n";
    } else {
        std::cout << "simplex frame n=" << n << "\n";
        for (int k = 0; k <= n; ++k) std::cout << "v" << k + 1 << ": " << join17(frame.vector(k), " ") << "\n";
        std::cout << "gramian:\n";
        for (int r = 0; r <= n; ++r) std::cout << join17(g.row(r), " ") << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(int n, int d, const std::string& format)
{
    const EigenStructure s = enumerate_eigenpairs(n, d);
    if (format == "json") {
        std::cout << "{\"kind\":\"" << (s.whole_sphere ? "whole_sphere" : "discrete") << "\"";
        if (s.whole_sphere) std::cout << ",\"mu\":" << fmt17(s.sphere_mu);
        std::cout << ",\"pairs\":[";
        for (std::size_t i = 0; i < s.pairs.size(); ++i) {
            const EigenPair& p = s.pairs[i];
            if (i) std::cout << ",";
            std::cout << "{\"vector\":[" << join17(p.vector) << "],\"mu\":" << fmt17(p.mu)
                      << ",\"support\":" << support_json(p.source) << ",\"residual\":" << fmt17(p.residual)
                      << "}";
        }
        std::cout << "]}\n";
    } else if (format == "csv") {
        if (s.whole_sphere) {
            std::cout << "# whole sphere, mu=" << fmt17(s.sphere_mu) << "\n";
        } else {
            for (const EigenPair& p : s.pairs)
                std::cout << join17(p.vector) << "," << fmt17(p.mu) << "," << fmt17(p.residual) << "\n";
        }
    } else {
        if (s.whole_sphere) {
            std::cout << "every unit vector is an eigenvector, mu=" << fmt17(s.sphere_mu) << "\n";
        } else {
            std::cout << s.pairs.size() << " eigenvector lines (" << s.normalized_count()
                      << " normalized eigenpairs)\n";
            for (const EigenPair& p : s.pairs) {
                std::cout << "mu=" << fmt17(p.mu) << "  v=[" << join17(p.vector, " ") << "]  "
                          << support_text(p.source) << "  residual=" << fmt3(p.residual) << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_classify(int n, int d, const std::string& format)
{
    const ClassificationReport report = classify_all(n, d);
    if (format == "json") {
        if (report.continuum) {
            std::cout << "{\"kind\":\"continuum\",\"mu\":" << fmt17(report.mu) << ",\"rho\":1}\n";
            return kExitOk;
        }
        std::cout << "{\"kind\":\"discrete\",\"records\":[";
        for (std::size_t i = 0; i < report.records.size(); ++i) {
            const RobustnessRecord& r = report.records[i];
            if (i) std::cout << ",";
            std::cout << "{\"s\":[" << join17(r.solution.barycentric_point(n)) << "],\"mu\":"
                      << fmt17(r.pair.mu) << ",\"rho\":";
            if (r.robustness == RobustnessClass::Undefined)
                std::cout << "null";
            else
                std::cout << fmt17(r.spectral_radius);
            std::cout << ",\"class\":\"" << to_string(r.robustness) << "\"}";
        }
        std::cout << "]}\n";
    } else if (format == "csv") {
        if (report.continuum) {
            std::cout << "# continuum, mu=" << fmt17(report.mu) << ", rho=1\n";
            return kExitOk;
        }
        for (const RobustnessRecord& r : report.records) {
            std::cout << join17(r.solution.barycentric_point(n)) << "," << fmt17(r.pair.mu) << ",";
            if (r.robustness != RobustnessClass::Undefined) std::cout << fmt17(r.spectral_radius);
            std::cout << "," << to_string(r.robustness) << "\n";
        }
    } else {
        if (report.continuum) {
            std::cout << "n=" << n << " d=" << d
                      << ": every unit vector is an eigenvector with mu=" << fmt17(report.mu)
                      << "; spectral radius 1 everywhere (no robust eigenvectors)\n";
            return kExitOk;
        }
        std::cout << "n=" << n << " d=" << d << "\n";
        std::cout << "s | mu | rho | class\n";
        for (const RobustnessRecord& r : report.records) {
            std::cout << r.solution.label(n) << " | " << fmt17(r.pair.mu) << " | ";
            if (r.robustness == RobustnessClass::Undefined)
                std::cout << "--";
            else
                std::cout << fmt17(r.spectral_radius);
            std::cout << " | " << to_string(r.robustness) << "\n";
        }
    }
    return kExitOk;
}

int cmd_tpi(int n, int d, const std::string& start, double tol, int max_iter)
{
    std::vector<double> coords;
    std::stringstream stream(start);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            coords.push_back(std::stod(token));
        } catch (const std::exception&) {
            std::cerr << "cannot parse start coordinate '" << token << "'\n";
            return kExitBadFlags;
        }
    }
    if (static_cast<int>(coords.size()) != n) {
        std::cerr << "--start needs exactly " << n << " comma-separated coordinates\n";
        return kExitBadFlags;
    }
    Eigen::VectorXd x0 = Eigen::Map<Eigen::VectorXd>(coords.data(), n);
    const double norm = x0.norm();
    if (norm < 1e-12) {
        std::cerr << "--start must be a nonzero vector\n";
        return kExitBadFlags;
    }
    x0 /= norm;

    const SimplexTensor t = make_simplex_tensor(n, d);
    const EigenStructure s = enumerate_eigenpairs(n, d);
    const TpiResult r = tpi_run(t, x0, TpiOptions{tol, max_iter}, &s);

    std::cout << "start: [" << join17(x0, " ") << "]\n";
    std::cout << "status: "
              << (r.status == TpiStatus::Converged
                      ? "converged"
                      : (r.status == TpiStatus::MapUndefined ? "map-undefined" : "max-iterations"))
              << "\n";
    std::cout << "iterations: " << r.iterations << "\n";
    std::cout << "limit: [" << join17(r.limit, " ") << "]\n";
    if (r.matched_eigenpair >= 0) {
        const EigenPair& p = s.pairs[r.matched_eigenpair];
        std::cout << "matched eigenpair: #" << r.matched_eigenpair << " mu=" << fmt17(p.mu) << " ["
                  << support_text(p.source) << "]\n";
    } else {
        std::cout << "matched eigenpair: none\n";
    }
    return kExitOk;
}

int cmd_oracle(int n, int d, int grid, const std::string& format)
{
    const OracleZeroSet zeros = brute_force_zeros(n, d, grid);
    const BarycentricEnumeration canonical = enumerate_barycentric(n, d);
    const ZeroMatchReport report = compare_with_enumeration(zeros, canonical);

    if (format == "json") {
        std::cout << "{\"n\":" << n << ",\"d\":" << d << ",\"continuum\":"
                  << (zeros.continuum ? "true" : "false") << ",\"zeros\":[";
        for (std::size_t i = 0; i < zeros.zeros.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "[" << join17(zeros.zeros[i]) << "]";
        }
        std::cout << "],\"dropped\":" << zeros.dropped << ",\"match\":{\"matched\":" << report.matched
                  << ",\"unmatched_oracle\":" << report.unmatched_oracle.size()
                  << ",\"unmatched_enumeration\":" << report.unmatched_enumeration.size()
                  << ",\"clean\":" << (report.clean() ? "true" : "false") << "}}\n";
        return kExitOk;
    }

    if (zeros.continuum) {
        std::cout << "h vanishes identically (continuum); enumeration agrees: "
                  << (report.clean() ? "yes" : "NO") << "\n";
        return kExitOk;
    }
    std::cout << zeros.zeros.size() << " zeros (grid " << grid << ", " << zeros.dropped
              << " candidates dropped)\n";
    for (const Eigen::VectorXd& z : zeros.zeros) std::cout << "(" << join17(z, ", ") << ")\n";
    std::cout << "match vs enumeration: " << report.matched << " matched, "
              << report.unmatched_oracle.size() << " unmatched oracle, "
              << report.unmatched_enumeration.size() << " unmatched enumeration -> "
              << (report.clean() ? "clean" : "MISMATCH") << "\n";
    return kExitOk;
}

int cmd_basins(int n, int d, int resolution, int res_phi, const std::string& out_path,
               const std::string& csv_path, double tol, int max_iter)
{
    const BasinMap map = rasterize(n, d, resolution, res_phi, TpiOptions{tol, max_iter});
    write_image(map, out_path);
    if (!csv_path.empty()) write_cells_csv(map, csv_path);

    int limits = 0;
    std::vector<bool> seen(map.structure.pairs.size(), false);
    for (const BasinCell& cell : map.cells) {
        if (cell.status == CellStatus::Converged && !seen[cell.limit_index]) {
            seen[cell.limit_index] = true;
            ++limits;
        }
    }
    std::cout << "cells: " << map.cell_count() << "\n";
    std::cout << "converged fraction: " << fmt17(map.converged_fraction()) << "\n";
    std::cout << "distinct limit lines: " << limits << "\n";
    std::cout << "image: " << out_path << "\n";
    if (!csv_path.empty()) std::cout << "csv: " << csv_path << "\n";
    return kExitOk;
}

// ---- verify ----------------------------------------------------------

struct CheckOutcome {
    bool pass = true;
    bool skipped = false;
    std::string detail;
};

CheckOutcome check_frame_invariants(int n)
{
    const FrameCheck c = check_frame(build_simplex_frame(n));
    CheckOutcome out;
    out.pass = c.pass();
    out.detail = "unit=" + fmt3(c.unit_norm_error) + " gram=" + fmt3(c.gramian_error) +
                 " sum=" + fmt3(c.vector_sum_error) + " op=" + fmt3(c.frame_operator_error);
    return out;
}

CheckOutcome check_residuals(int n, int d)
{
    const EigenStructure s = enumerate_eigenpairs(n, d);
    const SimplexTensor t = make_simplex_tensor(n, d);
    CheckOutcome out;
    double worst = 0.0;
    if (s.whole_sphere) {
        Rng rng(1);
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::VectorXd v = rng.unit_vector(n);
            worst = std::max(worst, (contract_pow(t, v) - s.sphere_mu * v).norm());
        }
        out.detail = "whole sphere, mu=" + fmt17(s.sphere_mu) + ", max residual " + fmt3(worst);
    } else {
        for (const EigenPair& p : s.pairs) worst = std::max(worst, p.residual);
        out.detail = std::to_string(s.pairs.size()) + " lines, max residual " + fmt3(worst);
    }
    out.pass = worst <= 1e-10;
    return out;
}

CheckOutcome check_oracle(int n, int d)
{
    CheckOutcome out;
    if (n > 4) {
        out.skipped = true;
        out.detail = "brute-force oracle covers n <= 4 only";
        return out;
    }
    const int grid = (n == 4) ? 200 : 400;
    const ZeroMatchReport report =
        compare_with_enumeration(brute_force_zeros(n, d, grid), enumerate_barycentric(n, d));
    out.pass = report.clean();
    if (report.continuum_oracle || report.continuum_enumeration)
        out.detail = "continuum flags agree";
    else
        out.detail = std::to_string(report.matched) + " matched, " +
                     std::to_string(report.unmatched_oracle.size() + report.unmatched_enumeration.size()) +
                     " unmatched";
    return out;
}

CheckOutcome check_jacobian_fd(int n, int d, std::uint64_t seed)
{
    const SimplexTensor t = make_simplex_tensor(n, d);
    const EigenStructure s = enumerate_eigenpairs(n, d);
    Rng rng(seed ^ 0x9e3779b9u);
    CheckOutcome out;

    double worst_fd = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXd x;
        if (s.whole_sphere) {
            x = rng.unit_vector(n);
        } else {
            // keep away from eigenvector lines and from the undefined set
            while (true) {
                x = rng.unit_vector(n);
                if (contract_pow(t, x).norm() < 1e-3) continue;
                bool clear = true;
                for (const EigenPair& p : s.pairs)
                    if (std::min((x - p.vector).norm(), (x + p.vector).norm()) < 5e-2) clear = false;
                if (clear) break;
            }
        }
        const auto j = jacobian(t, x);
        if (!j) continue;
        const int dim = n;
        Eigen::MatrixXd fd(dim, dim);
        const double step = 1e-6;
        for (int c = 0; c < dim; ++c) {
            Eigen::VectorXd xp = x, xm = x;
            xp[c] += step;
            xm[c] -= step;
            fd.col(c) = (*phi(t, xp) - *phi(t, xm)) / (2.0 * step);
        }
        worst_fd = std::max(worst_fd, (*j - fd).cwiseAbs().maxCoeff());
    }

    double worst_kernel = 0.0;
    for (const EigenPair& p : s.pairs) {
        if (std::abs(p.mu) <= kZeroEigenvalueTol) continue;
        worst_kernel = std::max(worst_kernel, (*jacobian(t, p.vector) * p.vector).norm());
    }

    out.pass = worst_fd <= 1e-6 && worst_kernel <= 1e-11;
    out.detail = "fd err " + fmt3(worst_fd) + ", kernel " + fmt3(worst_kernel);
    return out;
}

CheckOutcome check_radius_closed_form(int n, int d)
{
    CheckOutcome out;
    if (n != 2) {
        out.skipped = true;
        out.detail = "closed-form radii exist for n = 2 only";
        return out;
    }
    const SimplexTensor t = make_simplex_tensor(2, d);
    if (d == 2 || d == 4) {
        const double rho = spectral_radius_sym(*jacobian(t, t.frame.vector(0)));
        out.pass = std::abs(rho - 1.0) <= 1e-10;
        out.detail = "continuum: rho=" + fmt17(rho) + " (no robust eigenvectors)";
        return out;
    }
    const SimplexFrame frame = build_simplex_frame(2);
    const EigenStructure s = enumerate_eigenpairs(2, d);
    double worst = 0.0;
    for (const EigenPair& p : s.pairs) {
        bool vertex = false;
        for (int k = 0; k < 3; ++k)
            if (std::min((p.vector - frame.vector(k)).norm(), (p.vector + frame.vector(k)).norm()) <= 1e-9)
                vertex = true;
        const double expected = closed_form_radius_n2(d, vertex ? RadiusFamily::Vertex : RadiusFamily::Mixed);
        const double rho = spectral_radius_sym(*jacobian(t, p.vector));
        worst = std::max(worst, std::abs(rho - expected));
    }
    out.pass = worst <= 1e-10;
    out.detail = "max |rho - closed form| = " + fmt3(worst);
    return out;
}

struct TableRow {
    double rho;
    const char* cls;
    int count;
};

CheckOutcome check_table_n3(int n, int d, std::string& extra_lines)
{
    CheckOutcome out;
    if (n != 3 || d < 3 || d > 7) {
        out.skipped = true;
        out.detail = "reference table covers n=3, d in 3..7";
        return out;
    }

    std::vector<TableRow> expected;
    int expected_undefined = 0;
    switch (d) {
    case 3: expected = {{2.0, "not robust", 4}}; expected_undefined = 3; break;
    case 4: expected = {{5.0 / 7.0, "robust", 4}, {5.0, "not robust", 3}, {2.5, "not robust", 3}}; break;
    case 5: expected = {{0.3, "robust", 4}}; expected_undefined = 3; break;
    case 6: expected = {{7.0 / 61.0, "robust", 4}, {7.0, "not robust", 3}, {3.5, "not robust", 3}}; break;
    case 7: expected = {{4.0 / 91.0, "robust", 4}}; expected_undefined = 3; break;
    default: break;
    }

    const ClassificationReport report = classify_all(3, d);
    int undefined = 0;
    std::vector<bool> claimed(report.records.size(), false);
    bool ok = true;
    for (std::size_t i = 0; i < report.records.size(); ++i)
        if (report.records[i].robustness == RobustnessClass::Undefined) {
            claimed[i] = true;
            ++undefined;
        }
    for (const TableRow& row : expected) {
        int found = 0;
        for (std::size_t i = 0; i < report.records.size(); ++i) {
            const RobustnessRecord& r = report.records[i];
            if (claimed[i] || r.robustness == RobustnessClass::Undefined) continue;
            if (std::abs(r.spectral_radius - row.rho) <= 1e-10 &&
                std::string(to_string(r.robustness)) == row.cls) {
                claimed[i] = true;
                ++found;
            }
        }
        if (found != row.count) {
            ok = false;
            extra_lines += "  table row rho=" + fmt17(row.rho) + " (" + row.cls + "): expected " +
                           std::to_string(row.count) + " entries, found " + std::to_string(found) + "\n";
        }
    }
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        if (claimed[i]) continue;
        const RobustnessRecord& r = report.records[i];
        extra_lines += "  unexpected entry s=" + r.solution.label(3) +
                       ": rho=" + fmt17(r.spectral_radius) + " (" + to_string(r.robustness) + ")\n";
        ok = false;
    }
    if (undefined != expected_undefined) {
        ok = false;
        extra_lines += "  expected " + std::to_string(expected_undefined) + " undefined entries, found " +
                       std::to_string(undefined) + "\n";
    }

    out.pass = ok;
    out.detail = ok ? "all rows match" : "reference-table mismatch (see rows above exit status)";
    return out;
}

int cmd_verify(int n, int d, std::uint64_t seed)
{
    std::cout << "verify n=" << n << " d=" << d << " seed=" << seed << "\n";
    bool all_pass = true;
    const auto report = [&all_pass](const char* name, const CheckOutcome& outcome) {
        std::cout << name << ": "
                  << (outcome.skipped ? "SKIP" : (outcome.pass ? "PASS" : "FAIL"))
                  << " (" << outcome.detail << ")\n";
        if (!outcome.skipped && !outcome.pass) all_pass = false;
    };

    report("frame-invariants", check_frame_invariants(n));
    report("eigenpair-residuals", check_residuals(n, d));
    report("oracle-comparison", check_oracle(n, d));
    report("jacobian-fd", check_jacobian_fd(n, d, seed));
    report("radius-closed-form", check_radius_closed_form(n, d));
    std::string table_lines;
    const CheckOutcome table = check_table_n3(n, d, table_lines);
    std::cout << table_lines;
    report("reference-table", table);

    std::cout << (all_pass ? "verify: PASS" : "verify: FAIL") << "\n";
    return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"regular simplex tensor eigenstructure toolkit"};
    app.require_subcommand(1);

    int n = 2, d = 3, grid = 400, resolution = 1024, res_phi = 0, max_iter = 10000;
    double tol = 1e-12;
    std::uint64_t seed = 0;
    std::string format = "table", start, out_path, csv_path;

    auto* frame_cmd = app.add_subcommand("frame", "print the simplex frame and its Gramian");
    frame_cmd->add_option("--n", n, "dimension (>= 2)")->required()->check(CLI::Range(2, 1000000));
    frame_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate all normalized eigenpairs");
    enum_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 1000000));
    enum_cmd->add_option("--d", d)->required()->check(CLI::Range(2, 1000000));
    enum_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* classify_cmd = app.add_subcommand("classify", "robustness classification of every eigenpair");
    classify_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 1000000));
    classify_cmd->add_option("--d", d)->required()->check(CLI::Range(2, 1000000));
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* tpi_cmd = app.add_subcommand("tpi", "run one tensor power iteration trajectory");
    tpi_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 1000000));
    tpi_cmd->add_option("--d", d)->required()->check(CLI::Range(2, 1000000));
    tpi_cmd->add_option("--start", start, "comma-separated start coordinates")->required();
    tpi_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
    tpi_cmd->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force zero set and match report");
    oracle_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 4));
    oracle_cmd->add_option("--d", d)->required()->check(CLI::Range(2, 1000000));
    oracle_cmd->add_option("--grid", grid)->check(CLI::Range(100, 100000));
    oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* basins_cmd = app.add_subcommand("basins", "rasterize TPI attraction basins");
    basins_cmd->add_option("--n", n)->required()->check(CLI::IsMember({2, 3}));
    basins_cmd->add_option("--d", d)->required()->check(CLI::Range(2, 1000000));
    basins_cmd->add_option("--resolution", resolution)->required()->check(CLI::Range(16, 1 << 24));
    basins_cmd->add_option("--res-phi", res_phi, "longitude resolution (sphere only)")
        ->check(CLI::Range(16, 1 << 24));
    basins_cmd->add_option("--out", out_path, "output PPM path")->required();
    basins_cmd->add_option("--csv", csv_path, "optional per-cell CSV path");
    basins_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
    basins_cmd->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run the per-module consistency checks");
    verify_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 1000000));
    verify_cmd->add_option("--d", d)->required()->check(CLI::Range(2, 1000000));
    verify_cmd->add_option("--seed", seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadFlags;
    }

    try {
        if (app.got_subcommand(frame_cmd)) return cmd_frame(n, format);
        if (app.got_subcommand(enum_cmd)) return cmd_enumerate(n, d, format);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(n, d, format);
        if (app.got_subcommand(tpi_cmd)) return cmd_tpi(n, d, start, tol, max_iter);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle(n, d, grid, format);
        if (app.got_subcommand(basins_cmd))
            return cmd_basins(n, d, resolution, res_phi, out_path, csv_path, tol, max_iter);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(n, d, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::runtime_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}
