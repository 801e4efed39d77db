// catmap: command-line front end for the discrete cat map library.
//
// Exit codes: 0 success, 1 usage or input error, 2 computation error.
// With --json every subcommand emits a single machine-readable object;
// integers that can exceed 64 bits are emitted as decimal strings.

#include "catmap/catmap.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace catmap;

namespace {

struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string bigfloat_str(const BigFloat& v, int digits = 15) {
    return v.str(digits);
}

std::vector<std::vector<std::string>> matrix_strings(const ExactMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) rows[i].push_back(m(i, j).str());
    return rows;
}

std::vector<Residue> parse_coords(const std::string& text) {
    std::vector<Residue> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            coords.push_back(std::stoull(part));
        } catch (const std::exception&) {
            throw std::invalid_argument("orbit: cannot parse coordinate '" + part + "'");
        }
    }
    if (coords.size() < 2)
        throw std::invalid_argument("orbit: need at least two comma-separated coordinates");
    return coords;
}

json period_json(const PeriodReport& r) {
    return json{{"N", r.grid_size},
                {"dim", r.dimension},
                {"period", r.period},
                {"method", to_string(r.method)},
                {"dyson_falk_class", to_string(r.dyson_falk)},
                {"bound_satisfied", r.bound_satisfied}};
}

void print_period(const PeriodReport& r, bool as_json, bool quiet) {
    if (as_json)
        std::cout << period_json(r).dump() << "\n";
    else if (quiet)
        std::cout << r.period << "\n";
    else
        std::cout << "N=" << r.grid_size << " dim=" << r.dimension << " period=" << r.period
                  << " method=" << to_string(r.method) << " class=" << to_string(r.dyson_falk)
                  << " bound_ok=" << (r.bound_satisfied ? "yes" : "no") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic discrete cat map toolkit: n-dimensional map construction, "
                 "restoration periods, image scrambling, and spectral analysis."};
    app.require_subcommand(1);

    bool as_json = false;
    bool quiet = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit machine-readable output");
        sub->add_flag("--quiet", quiet, "print only the essential value");
    };

    // matrix
    std::size_t matrix_n = 2;
    CLI::App* cmd_matrix = app.add_subcommand("matrix", "print the n-dimensional cat map matrix");
    cmd_matrix->add_option("n", matrix_n, "dimension (>= 2)")->required();
    add_common(cmd_matrix);
    cmd_matrix->callback([&] {
        const ExactMatrix m = build_dcm(matrix_n);
        if (as_json)
            std::cout << json{{"n", matrix_n}, {"matrix", matrix_strings(m)}}.dump() << "\n";
        else
            std::cout << m << "\n";
    });

    // period
    Residue period_n = 1;
    std::size_t period_dim = 2;
    std::uint64_t period_cap = 1'000'000;
    CLI::App* cmd_period = app.add_subcommand("period", "restoration period for an N x N grid");
    cmd_period->add_option("N", period_n, "grid size (>= 1)")->required();
    cmd_period->add_option("--dim", period_dim, "map dimension (default 2)");
    cmd_period->add_option("--cap", period_cap,
                           "iteration cap for dimensions above 2 (default 1e6)");
    add_common(cmd_period);
    cmd_period->callback([&] {
        if (period_dim == 2) {
            print_period(dcm_period_2d(period_n), as_json, quiet);
            return;
        }
        const NdPeriodSearch search = dcm_period_nd(period_dim, period_n, period_cap);
        if (search.cap_exceeded())
            throw ComputationError("period search hit the cap of " + std::to_string(search.cap) +
                                   " iterations without restoring; raise --cap");
        print_period(*search.report, as_json, quiet);
    });

    // table
    Residue table_from = 3, table_to = 3;
    CLI::App* cmd_table = app.add_subcommand("table", "period table over a range of grid sizes");
    cmd_table->add_option("--from", table_from, "first N (>= 3)")->required();
    cmd_table->add_option("--to", table_to, "last N")->required();
    add_common(cmd_table);
    cmd_table->callback([&] {
        const BoundsSummary s = verify_bounds(table_from, table_to);
        if (as_json) {
            json rows = json::array();
            for (const BoundsRow& r : s.rows)
                rows.push_back(json{{"N", r.grid_size},
                                    {"period", r.period},
                                    {"class", to_string(r.cls)},
                                    {"theorem_ok", r.theorem_ok},
                                    {"dyson_falk_ok", r.dyson_falk_ok}});
            std::cout << json{{"from", s.from},
                              {"to", s.to},
                              {"violations", s.violations.size()},
                              {"rows", rows}}
                             .dump()
                      << "\n";
            return;
        }
        if (!quiet) std::cout << "N period class theorem_ok dyson_falk_ok\n";
        for (const BoundsRow& r : s.rows)
            std::cout << r.grid_size << ' ' << r.period << ' ' << to_string(r.cls) << ' '
                      << (r.theorem_ok ? "yes" : "no") << ' ' << (r.dyson_falk_ok ? "yes" : "no")
                      << "\n";
    });

    // scramble
    std::string scramble_input;
    std::uint64_t scramble_iters = 1;
    bool emit_frames = false;
    std::string scramble_out;
    CLI::App* cmd_scramble = app.add_subcommand("scramble", "apply the cat map to a PPM image");
    cmd_scramble->add_option("input", scramble_input, "square binary PPM (P6)")->required();
    cmd_scramble->add_option("--iters", scramble_iters, "iterations (default 1)");
    cmd_scramble->add_flag("--emit-frames", emit_frames, "write every intermediate step");
    cmd_scramble->add_option("--out", scramble_out, "output path (default <stem>_t<iters>.ppm)");
    add_common(cmd_scramble);
    cmd_scramble->callback([&] {
        const std::filesystem::path input(scramble_input);
        RasterImage<Rgb> img = [&] {
            try {
                return read_ppm(input);
            } catch (const std::runtime_error& e) {
                // unreadable or non-square input is a usage error, not a failure mid-work
                throw std::invalid_argument(e.what());
            }
        }();
        const auto frame_path = [&](std::uint64_t k) {
            std::filesystem::path p = input;
            p.replace_filename(input.stem().string() + "_t" + std::to_string(k) +
                               input.extension().string());
            return p;
        };
        std::vector<std::string> outputs;
        if (emit_frames) {
            RasterImage<Rgb> frame = img;
            for (std::uint64_t k = 1; k <= scramble_iters; ++k) {
                frame = scramble_image(frame, 1);
                const std::filesystem::path p = (k == scramble_iters && !scramble_out.empty())
                                                    ? std::filesystem::path(scramble_out)
                                                    : frame_path(k);
                write_ppm(p, frame);
                outputs.push_back(p.string());
            }
        } else {
            const std::filesystem::path p = scramble_out.empty()
                                                ? frame_path(scramble_iters)
                                                : std::filesystem::path(scramble_out);
            write_ppm(p, scramble_image(img, scramble_iters));
            outputs.push_back(p.string());
        }
        if (as_json)
            std::cout << json{{"input", scramble_input},
                              {"iterations", scramble_iters},
                              {"outputs", outputs}}
                             .dump()
                      << "\n";
        else if (!quiet)
            for (const std::string& p : outputs) std::cout << "wrote " << p << "\n";
    });

    // orbit
    std::string orbit_coords;
    Residue orbit_n = 1;
    CLI::App* cmd_orbit = app.add_subcommand("orbit", "cycle of a grid point under the map");
    cmd_orbit->add_option("point", orbit_coords, "comma-separated coordinates, e.g. 1,1")
        ->required();
    cmd_orbit->add_option("N", orbit_n, "grid size")->required();
    add_common(cmd_orbit);
    cmd_orbit->callback([&] {
        const std::vector<Residue> coords = parse_coords(orbit_coords);
        const LatticePoint start(coords, orbit_n);
        const OrbitRecord orbit = pixel_orbit(start, build_dcm(coords.size()));
        if (as_json) {
            json points = json::array();
            for (const LatticePoint& p : orbit.points) points.push_back(p.coords);
            std::cout << json{{"start", start.coords},
                              {"N", orbit_n},
                              {"dim", coords.size()},
                              {"length", orbit.length()},
                              {"points", points}}
                             .dump()
                      << "\n";
            return;
        }
        if (quiet) {
            std::cout << orbit.length() << "\n";
            return;
        }
        const auto print_point = [](const LatticePoint& p) {
            std::cout << '(';
            for (std::size_t i = 0; i < p.coords.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << p.coords[i];
            }
            std::cout << ')';
        };
        for (const LatticePoint& p : orbit.points) {
            print_point(p);
            std::cout << " -> ";
        }
        print_point(orbit.points.front());
        std::cout << "\nlength=" << orbit.length() << "\n";
    });

    // fib
    std::uint64_t fib_i = 0;
    Residue fib_modulus = 0;
    CLI::App* cmd_fib = app.add_subcommand("fib", "Fibonacci number, exact or mod N");
    cmd_fib->add_option("i", fib_i, "index (u_0 = 0)")->required();
    CLI::Option* fib_mod_opt = cmd_fib->add_option("--mod", fib_modulus, "reduce mod N");
    add_common(cmd_fib);
    cmd_fib->callback([&] {
        if (*fib_mod_opt) {
            const Residue value = fib_mod(fib_i, fib_modulus);
            if (as_json)
                std::cout << json{{"i", fib_i}, {"mod", fib_modulus}, {"value", value}}.dump()
                          << "\n";
            else
                std::cout << value << "\n";
        } else {
            const Int value = fib(fib_i);
            if (as_json)
                std::cout << json{{"i", fib_i}, {"value", value.str()}}.dump() << "\n";
            else
                std::cout << value << "\n";
        }
    });

    // charpoly
    std::size_t charpoly_n = 2;
    CLI::App* cmd_charpoly =
        app.add_subcommand("charpoly", "characteristic polynomial of the n-dimensional map");
    cmd_charpoly->add_option("n", charpoly_n, "dimension (>= 2)")->required();
    add_common(cmd_charpoly);
    cmd_charpoly->callback([&] {
        const CharPolynomial p = char_poly(build_dcm(charpoly_n));
        if (as_json) {
            std::vector<std::string> coeffs; // descending, monic first
            for (std::size_t k = p.coeffs().size(); k-- > 0;) coeffs.push_back(p.coeff(k).str());
            std::cout << json{{"n", charpoly_n}, {"degree", p.degree()}, {"coefficients", coeffs}}
                             .dump()
                      << "\n";
        } else {
            std::cout << p << "\n";
        }
    });

    // eigen
    std::size_t eigen_n = 2;
    double eigen_tol = 1e-8;
    CLI::App* cmd_eigen = app.add_subcommand("eigen", "eigenvalue estimates of the n-dimensional map");
    cmd_eigen->add_option("n", eigen_n, "dimension (2..8)")->required();
    cmd_eigen->add_option("--tol", eigen_tol, "relative tolerance (default 1e-8)");
    add_common(cmd_eigen);
    cmd_eigen->callback([&] {
        if (eigen_n < 2 || eigen_n > 8)
            throw std::invalid_argument("eigen: dimension must be in 2..8");
        const SpectrumEstimate s = estimate_roots(char_poly(build_dcm(eigen_n)), BigFloat(eigen_tol));
        if (as_json) {
            json roots = json::array();
            for (const RootEstimate& r : s.roots)
                roots.push_back(json{{"value", bigfloat_str(r.value)},
                                     {"error_bound", bigfloat_str(r.error_bound, 3)},
                                     {"multiplicity", r.multiplicity}});
            std::cout << json{{"n", eigen_n},
                              {"roots", roots},
                              {"dominant", bigfloat_str(s.dominant_modulus)},
                              {"has_unit_eigenvalue", s.has_unit_eigenvalue}}
                             .dump()
                      << "\n";
            return;
        }
        if (quiet) {
            std::cout << bigfloat_str(s.dominant_modulus) << "\n";
            return;
        }
        std::cout << "n=" << eigen_n << " dominant=" << bigfloat_str(s.dominant_modulus) << "\n";
        for (const RootEstimate& r : s.roots)
            std::cout << "  " << bigfloat_str(r.value) << " (+-" << bigfloat_str(r.error_bound, 3)
                      << ") x" << r.multiplicity << "\n";
        std::cout << "unit_eigenvalue=" << (s.has_unit_eigenvalue ? "yes" : "no") << "\n";
    });

    // trend
    std::size_t trend_n = 2;
    std::size_t trend_cap = 8;
    CLI::App* cmd_trend =
        app.add_subcommand("trend", "dominant eigenvalue by dimension (conjecture report)");
    cmd_trend->add_option("n_max", trend_n, "largest dimension (2..cap)")->required();
    cmd_trend->add_option("--cap", trend_cap, "practical dimension cap (default 8)");
    add_common(cmd_trend);
    cmd_trend->callback([&] {
        const TrendReport t = dominant_trend(trend_n, trend_cap);
        if (as_json) {
            json entries = json::array();
            for (const TrendEntry& e : t.entries)
                entries.push_back(
                    json{{"n", e.dimension}, {"dominant", bigfloat_str(e.dominant_modulus)}});
            std::cout << json{{"n_max", trend_n},
                              {"entries", entries},
                              {"strictly_increasing", t.strictly_increasing}}
                             .dump()
                      << "\n";
            return;
        }
        if (!quiet) std::cout << "n dominant\n";
        for (const TrendEntry& e : t.entries)
            std::cout << e.dimension << ' ' << bigfloat_str(e.dominant_modulus) << "\n";
        if (!quiet)
            std::cout << "strictly increasing over tested range: "
                      << (t.strictly_increasing ? "yes" : "no")
                      << " (observed, conjectured in general)\n";
    });

    // density
    Residue density_n = 3;
    std::size_t density_dim = 2;
    CLI::App* cmd_density =
        app.add_subcommand("density", "cycle decomposition of the full grid");
    cmd_density->add_option("N", density_n, "grid size")->required();
    cmd_density->add_option("--dim", density_dim, "map dimension (default 2)");
    add_common(cmd_density);
    cmd_density->callback([&] {
        const DensityReport d = density_report(density_n, build_dcm(density_dim));
        if (as_json) {
            json counts = json::object();
            for (const auto& [len, count] : d.cycle_length_counts)
                counts[std::to_string(len)] = count;
            std::cout << json{{"N", d.grid_size},
                              {"dim", d.dimension},
                              {"cells", d.cell_count},
                              {"cycles", d.cycle_count},
                              {"max_cycle", d.max_cycle_length},
                              {"half_bound_ok", d.half_bound_ok},
                              {"cycle_length_counts", counts}}
                             .dump()
                      << "\n";
            return;
        }
        if (quiet) {
            std::cout << d.max_cycle_length << "\n";
            return;
        }
        std::cout << "N=" << d.grid_size << " dim=" << d.dimension << " cells=" << d.cell_count
                  << " cycles=" << d.cycle_count << " max_cycle=" << d.max_cycle_length
                  << " coverage=" << d.coverage_ratio()
                  << " half_bound_ok=" << (d.half_bound_ok ? "yes" : "no") << "\n";
        std::cout << "cycle lengths:";
        for (const auto& [len, count] : d.cycle_length_counts)
            std::cout << ' ' << len << "x" << count;
        std::cout << "\n";
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
