#include "cmap/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace cmap::io {

using nlohmann::json;

std::string format_real(Real x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Complex parse_complex(const std::string& text) {
    std::string s;
    for (const char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw InvalidInput("empty complex number");
    auto fail = [&] { return InvalidInput("cannot parse complex number '" + text + "'"); };

    // a lone imaginary unit with optional sign and coefficient
    auto imaginary_term = [&](const std::string& part) -> Real {
        const std::string coeff = part.substr(0, part.size() - 1);
        if (coeff.empty() || coeff == "+") return 1;
        if (coeff == "-") return -1;
        char* end = nullptr;
        const Real v = std::strtod(coeff.c_str(), &end);
        if (end != coeff.c_str() + coeff.size()) throw fail();
        return v;
    };

    if (s.back() != 'i' && s.back() != 'j') {
        char* end = nullptr;
        const Real v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size()) throw fail();
        return {v, 0};
    }
    // split at the last sign that is not part of an exponent and not leading
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size() - 1; i > 0; --i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return {0, imaginary_term(s)};
    const std::string re = s.substr(0, split);
    char* end = nullptr;
    const Real r = std::strtod(re.c_str(), &end);
    if (end != re.c_str() + re.size()) throw fail();
    return {r, imaginary_term(s.substr(split))};
}

namespace {

Real number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) throw InvalidInput(std::string("missing numeric field '") + key + "'");
    return j.at(key).get<Real>();
}

Complex pair(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidInput("expected [re, im]");
    return {j[0].get<Real>(), j[1].get<Real>()};
}

Region region_from(const json& doc) {
    if (!doc.is_object() || !doc.contains("curves") || !doc.at("curves").is_array())
        throw InvalidInput("region file needs a \"curves\" array");
    std::vector<CurveSpec> curves;
    for (const auto& c : doc.at("curves")) {
        if (c.value("kind", std::string{}) != "ellipse") throw InvalidInput("only \"ellipse\" curves can be read from a file");
        if (!c.contains("center")) throw InvalidInput("missing field 'center'");
        curves.push_back(CurveSpec::ellipse(pair(c.at("center")), number(c, "a"), number(c, "b"), number(c, "rot")));
    }
    return build_region(std::move(curves));
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

// Hand-written emitter: fixed field order, %.17g numbers.
class Writer {
public:
    std::string str() const { return out_.str(); }
    Writer& raw(const std::string& s) {
        out_ << s;
        return *this;
    }
    Writer& num(Real x) {
        if (!std::isfinite(x)) throw NumericalFailure("non-finite value in output");
        out_ << format_real(x);
        return *this;
    }
    Writer& cpx(Complex z) { return raw("[").num(z.real()).raw(",").num(z.imag()).raw("]"); }
    template <class Vec>
    Writer& list(const Vec& v) {
        raw("[");
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (i) raw(",");
            num(v[i]);
        }
        return raw("]");
    }

private:
    std::ostringstream out_;
};

void region_body(Writer& w, const Region& region) {
    w.raw("{\"curves\":[");
    for (int j = 0; j < region.curve_count(); ++j) {
        const auto& e = region.curve(j).as_ellipse();
        if (j) w.raw(",");
        w.raw("{\"kind\":\"ellipse\",\"center\":").cpx(e.center);
        w.raw(",\"a\":").num(e.a).raw(",\"b\":").num(e.b).raw(",\"rot\":").num(e.rotation).raw("}");
    }
    w.raw("]}");
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed file: ") + e.what());
    }
}

} // namespace

Region parse_region(const std::string& json_text) {
    return guarded([&] { return region_from(parse_json(json_text)); });
}

Region load_region(const std::string& path) { return parse_region(read_file(path)); }

std::string region_json(const Region& region) {
    Writer w;
    region_body(w, region);
    w.raw("\n");
    return w.str();
}

std::string solution_json(const MapSolution& sol) {
    const auto& disc = *sol.disc;
    Writer w;
    w.raw("{\"kind\":\"").raw(to_string(sol.kind.tag)).raw("\",\n");
    w.raw("\"n\":").raw(std::to_string(disc.n)).raw(",\n");
    w.raw("\"R\":").list(sol.R).raw(",\n");
    w.raw("\"c\":");
    if (sol.c) w.num(*sol.c);
    else w.raw("null");
    w.raw(",\n\"c_k\":").list(sol.ck).raw(",\n");
    auto per_curve = [&](const char* key, const RealVector& v) {
        w.raw("\"").raw(key).raw("\":[");
        for (int k = 0; k < disc.curves; ++k) {
            if (k) w.raw(",");
            w.list(disc.on_curve(v, k));
        }
        w.raw("],\n");
    };
    per_curve("theta", sol.theta);
    per_curve("theta_prime", sol.theta_prime);
    w.raw("\"omega_boundary\":[");
    for (Eigen::Index i = 0; i < disc.size(); ++i) {
        if (i) w.raw(",");
        w.cpx(sol.boundary.omega[i]);
    }
    w.raw("],\n\"residuals\":{\"linear_system\":").num(sol.diagnostics.linear_system);
    w.raw(",\"winding\":").num(sol.diagnostics.winding);
    w.raw(",\"periodicity\":").num(sol.diagnostics.periodicity).raw("},\n");
    w.raw("\"aux\":{\"z1\":").cpx(sol.kind.z1).raw(",\"alpha\":").cpx(sol.kind.alpha);
    w.raw(",\"delta\":").num(sol.kind.delta).raw("},\n");
    w.raw("\"region\":");
    region_body(w, sol.region());
    w.raw("}\n");
    return w.str();
}

namespace {

MapSolution solution_from(const std::string& json_text) {
    const json doc = parse_json(json_text);
    for (const char* key : {"kind", "n", "R", "c_k", "theta", "theta_prime", "aux", "region"})
        if (!doc.contains(key)) throw InvalidInput(std::string("solution file lacks '") + key + "'");

    CanonicalKind kind;
    kind.tag = parse_kind(doc.at("kind").get<std::string>());
    const auto& aux = doc.at("aux");
    kind.z1 = pair(aux.at("z1"));
    kind.alpha = pair(aux.at("alpha"));
    kind.delta = number(aux, "delta");

    auto region = std::make_shared<const Region>(region_from(doc.at("region")));
    auto disc = std::make_shared<const Discretization>(sample_boundary(region, doc.at("n").get<int>()));

    auto vec = [](const json& arr) {
        const auto v = arr.get<std::vector<Real>>();
        return RealVector(Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size())));
    };
    auto stacked = [&](const json& arr) {
        RealVector v(disc->size());
        if (!arr.is_array() || static_cast<int>(arr.size()) != disc->curves) throw InvalidInput("per-curve array has wrong length");
        for (int k = 0; k < disc->curves; ++k) {
            const RealVector part = vec(arr[static_cast<std::size_t>(k)]);
            if (part.size() != disc->n) throw InvalidInput("per-curve array has wrong length");
            disc->on_curve(v, k) = part;
        }
        return v;
    };

    std::optional<Real> c;
    if (doc.contains("c") && doc.at("c").is_number()) c = doc.at("c").get<Real>();
    Diagnostics diag;
    if (doc.contains("residuals")) {
        const auto& r = doc.at("residuals");
        diag.linear_system = r.value("linear_system", 0.0);
        diag.winding = r.value("winding", 0.0);
        diag.periodicity = r.value("periodicity", 0.0);
    }
    return assemble_solution(kind, disc, stacked(doc.at("theta")), stacked(doc.at("theta_prime")), vec(doc.at("R")), c,
                             vec(doc.at("c_k")), diag);
}

} // namespace

MapSolution parse_solution(const std::string& json_text) {
    return guarded([&] { return solution_from(json_text); });
}

MapSolution load_solution(const std::string& path) { return parse_solution(read_file(path)); }

void write_eval_csv(std::ostream& os, const std::vector<PointEvaluation>& rows) {
    os << "z_re,z_im,w_re,w_im,dw_re,dw_im,boundary_distance,status\n";
    for (const auto& r : rows)
        os << format_real(r.z.real()) << ',' << format_real(r.z.imag()) << ',' << format_real(r.w.real()) << ','
           << format_real(r.w.imag()) << ',' << format_real(r.dw.real()) << ',' << format_real(r.dw.imag()) << ','
           << format_real(r.distance) << ',' << r.status << '\n';
}

void write_invert_csv(std::ostream& os, const std::vector<InverseEvaluation>& rows) {
    os << "w_re,w_im,z_re,z_im,image_distance,status\n";
    for (const auto& r : rows)
        os << format_real(r.w.real()) << ',' << format_real(r.w.imag()) << ',' << format_real(r.z.real()) << ','
           << format_real(r.z.imag()) << ',' << format_real(r.image_distance) << ',' << r.status << '\n';
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows, bool timing) {
    os << "kind,n,sup_error,wall_time_ms\n";
    for (const auto& r : rows)
        os << to_string(r.kind) << ',' << r.n << ',' << format_real(r.sup_error) << ','
           << format_real(timing ? r.wall_time_ms : 0.0) << '\n';
}

void write_polylines_csv(std::ostream& os, const std::vector<Polyline>& lines) {
    os << "polyline,type,curve,x,y\n";
    for (std::size_t k = 0; k < lines.size(); ++k)
        for (const Complex p : lines[k].points)
            os << k << ',' << (lines[k].boundary ? "boundary" : "grid") << ',' << lines[k].curve << ','
               << format_real(p.real()) << ',' << format_real(p.imag()) << '\n';
}

void write_polylines_svg(std::ostream& os, const std::vector<Polyline>& lines) {
    Real xlo = std::numeric_limits<Real>::max(), xhi = -xlo, ylo = xlo, yhi = -xlo;
    auto grow = [&](Complex p) {
        xlo = std::min(xlo, p.real());
        xhi = std::max(xhi, p.real());
        ylo = std::min(ylo, p.imag());
        yhi = std::max(yhi, p.imag());
    };
    for (const auto& l : lines)
        if (l.boundary)
            for (const Complex p : l.points) grow(p);
    if (xlo > xhi)
        for (const auto& l : lines)
            for (const Complex p : l.points) grow(p);
    if (xlo > xhi) xlo = ylo = -1, xhi = yhi = 1;
    const Real pad = 0.1 * std::max({xhi - xlo, yhi - ylo, Real(1e-9)});
    xlo -= pad, xhi += pad, ylo -= pad, yhi += pad;
    auto inside = [&](Complex p) { return p.real() >= xlo && p.real() <= xhi && p.imag() >= ylo && p.imag() <= yhi; };
    const Real stroke = 0.002 * std::max(xhi - xlo, yhi - ylo);

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_real(xlo) << ' ' << format_real(-yhi) << ' '
       << format_real(xhi - xlo) << ' ' << format_real(yhi - ylo) << "\">\n";
    auto emit = [&](const std::vector<Complex>& pts) {
        if (pts.size() < 2) return;
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << format_real(stroke) << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            os << (i ? " " : "") << format_real(pts[i].real()) << ',' << format_real(-pts[i].imag());
        os << "\"/>\n";
    };
    for (const auto& l : lines) {
        std::vector<Complex> run;
        for (const Complex p : l.points) {
            if (inside(p)) {
                run.push_back(p);
            } else {
                emit(run);
                run.clear();
            }
        }
        emit(run);
    }
    os << "</svg>\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << contents;
}

} // namespace cmap::io
