#include "cmap/cli.hpp"

#include "cmap/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace cmap {

namespace {

struct AuxOptions {
    std::string z1, alpha;
    Real delta = pi / 4;

    void attach(CLI::App* cmd) {
        cmd->add_option("--z1", z1, "point inside hole 1 (annulus), e.g. 1.5+1.0i; default: centre of hole 1");
        cmd->add_option("--alpha", alpha, "nonzero point of G sent to 0 (circular, radial); default: outer centroid");
        cmd->add_option("--delta", delta, "slit angle for parallel slits, radians")->capture_default_str();
    }

    CanonicalKind kind(SlitKind tag, const Region& region) const {
        CanonicalKind k;
        k.tag = tag;
        k.delta = delta;
        if (tag == SlitKind::AnnulusSlits) k.z1 = z1.empty() ? default_z1(region) : io::parse_complex(z1);
        if (tag == SlitKind::CircularSlits || tag == SlitKind::RadialSlits)
            k.alpha = alpha.empty() ? default_alpha(region) : io::parse_complex(alpha);
        return k;
    }
};

std::vector<Complex> read_points(const std::vector<std::string>& given, const std::string& file) {
    std::vector<Complex> pts;
    for (const auto& p : given) pts.push_back(io::parse_complex(p));
    if (!file.empty()) {
        std::istringstream in(io::read_file(file));
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos) {
                pts.push_back(io::parse_complex(line));
            } else {
                const Complex re = io::parse_complex(line.substr(0, comma));
                const Complex im = io::parse_complex(line.substr(comma + 1));
                if (re.imag() != 0 || im.imag() != 0) throw InvalidInput("expected 're,im' in '" + line + "'");
                pts.emplace_back(re.real(), im.real());
            }
        }
    }
    if (pts.empty()) throw InvalidInput("no points given");
    return pts;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("bad integer list '" + text + "'");
        }
        if (used != item.size()) throw InvalidInput("bad integer list '" + text + "'");
        v.push_back(x);
    }
    if (v.empty()) throw InvalidInput("empty integer list");
    return v;
}

std::vector<SlitKind> parse_kind_list(const std::string& text) {
    if (text == "all") return {std::begin(all_kinds), std::end(all_kinds)};
    std::vector<SlitKind> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_kind(item));
    if (v.empty()) throw InvalidInput("empty kind list");
    return v;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") out << text;
    else io::write_file(path, text);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conformal maps of multiply connected regions onto canonical slit domains"};
    app.require_subcommand(1);

    std::string region_path, kind_name, out_path, solution_path, points_file;
    std::vector<std::string> points;
    int n = 256;
    AuxOptions aux;

    auto* map_cmd = app.add_subcommand("map", "compute a map and write the solution JSON");
    map_cmd->add_option("--region", region_path, "region JSON file")->required();
    map_cmd->add_option("--kind", kind_name, "annulus | disk | circular | radial | parallel")->required();
    map_cmd->add_option("--n", n, "nodes per boundary curve (even, >= 8)")->capture_default_str();
    map_cmd->add_option("--out", out_path, "output file, '-' for stdout")->required();
    aux.attach(map_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate omega and omega' at points of G");
    auto* inv_cmd = app.add_subcommand("invert", "evaluate the inverse map at points of the canonical domain");
    for (auto* cmd : {eval_cmd, inv_cmd}) {
        cmd->add_option("--solution", solution_path, "solution JSON file")->required();
        cmd->add_option("--point", points, "complex point, e.g. 0.3-0.1i (repeatable)");
        cmd->add_option("--points-file", points_file, "one point per line: 're,im' or complex literal");
        cmd->add_option("--out", out_path, "CSV output file, '-' for stdout");
    }

    std::string layout = "cartesian", svg_path, csv_path, center = "0";
    GridSpec grid;
    auto* grid_cmd = app.add_subcommand("grid", "images of a grid in G, as SVG and/or CSV polylines");
    grid_cmd->add_option("--solution", solution_path, "solution JSON file")->required();
    grid_cmd->add_option("--layout", layout, "cartesian | polar")->check(CLI::IsMember({"cartesian", "polar"}))->capture_default_str();
    grid_cmd->add_option("--lines", grid.lines, "lines per family")->capture_default_str();
    grid_cmd->add_option("--samples", grid.samples, "points per line")->capture_default_str();
    grid_cmd->add_option("--center", center, "centre of a polar grid")->capture_default_str();
    grid_cmd->add_option("--svg", svg_path, "SVG output file");
    grid_cmd->add_option("--csv", csv_path, "CSV output file");

    std::string kinds_text = "all", n_text = "16,32,64,128,256";
    int ref_n = 512;
    bool no_timing = false;
    auto* conv_cmd = app.add_subcommand("convergence", "boundary self-convergence table against a reference n");
    conv_cmd->add_option("--region", region_path, "region JSON file")->required();
    conv_cmd->add_option("--kinds", kinds_text, "'all' or a comma list of kinds")->capture_default_str();
    conv_cmd->add_option("--n", n_text, "comma list of n")->capture_default_str();
    conv_cmd->add_option("--ref", ref_n, "reference n")->capture_default_str();
    conv_cmd->add_flag("--no-timing", no_timing, "write 0 in the wall_time_ms column (byte-stable output)");
    conv_cmd->add_option("--out", out_path, "CSV output file, '-' for stdout");
    aux.attach(conv_cmd);

    auto* self_cmd = app.add_subcommand("selftest", "run the closed-form oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (map_cmd->parsed()) {
            if (n < 8 || n % 2 != 0) throw InvalidInput("invalid discretization size");
            const Region region = io::load_region(region_path);
            const auto sol = solve_map(region, aux.kind(parse_kind(kind_name), region), n);
            emit(out_path, io::solution_json(sol), out);
        } else if (eval_cmd->parsed()) {
            const auto sol = io::load_solution(solution_path);
            std::ostringstream csv;
            io::write_eval_csv(csv, evaluate_points(sol, read_points(points, points_file)));
            emit(out_path, csv.str(), out);
        } else if (inv_cmd->parsed()) {
            const auto sol = io::load_solution(solution_path);
            std::ostringstream csv;
            io::write_invert_csv(csv, invert_points(sol, read_points(points, points_file)));
            emit(out_path, csv.str(), out);
        } else if (grid_cmd->parsed()) {
            if (svg_path.empty() && csv_path.empty()) throw InvalidInput("give --svg and/or --csv");
            const auto sol = io::load_solution(solution_path);
            grid.layout = layout == "polar" ? GridSpec::Layout::Polar : GridSpec::Layout::Cartesian;
            grid.center = io::parse_complex(center);
            const auto lines = image_grid(sol, grid);
            if (!svg_path.empty()) {
                std::ostringstream s;
                io::write_polylines_svg(s, lines);
                emit(svg_path, s.str(), out);
            }
            if (!csv_path.empty()) {
                std::ostringstream s;
                io::write_polylines_csv(s, lines);
                emit(csv_path, s.str(), out);
            }
        } else if (conv_cmd->parsed()) {
            const Region region = io::load_region(region_path);
            std::vector<CanonicalKind> kinds;
            for (const SlitKind tag : parse_kind_list(kinds_text)) kinds.push_back(aux.kind(tag, region));
            const auto n_list = parse_int_list(n_text);
            for (const int m : n_list)
                if (m < 8 || m % 2 != 0) throw InvalidInput("invalid discretization size");
            const auto rows = convergence_table(region, kinds, n_list, ref_n);
            std::ostringstream csv;
            io::write_convergence_csv(csv, rows, !no_timing);
            emit(out_path, csv.str(), out);
        } else if (self_cmd->parsed()) {
            bool ok = true;
            for (const auto& r : run_selftest()) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
                ok = ok && r.passed;
            }
            return ok ? 0 : 3;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace cmap
