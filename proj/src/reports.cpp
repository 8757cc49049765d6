#include "coorbit/reports.hpp"

#include <fstream>
#include <sstream>

namespace coorbit {

json report_header(const std::string& kind) {
    json j;
    j["artifact"] = kArtifactName;
    j["version"] = kArtifactVersion;
    j["kind"] = kind;
    return j;
}

json to_json(const YoungReport& r) {
    json j = report_header("young-check");
    j["p"] = r.p;
    j["q"] = r.q;
    j["r"] = r.r;
    j["weights"] = r.weights;
    j["ratio"] = r.ratio;
    j["constant"] = r.moderateness_constant;
    j["pass"] = r.pass;
    return j;
}

json to_json(const OscReport& r) {
    json j = report_header("osc-report");
    j["target"] = r.target;
    j["q_halfwidth"] = r.q_halfwidth;
    j["exponents"] = r.exponents;
    j["windows"] = r.windows;
    json rows = json::array();
    for (std::size_t ip = 0; ip < r.exponents.size(); ++ip) {
        for (std::size_t iw = 0; iw < r.windows.size(); ++iw) {
            json row;
            row["p"] = r.exponents[ip];
            row["L"] = r.windows[iw];
            row["norm"] = r.norms[ip * r.windows.size() + iw];
            rows.push_back(row);
        }
    }
    j["norms"] = rows;
    json verdicts = json::array();
    for (std::size_t ip = 0; ip < r.exponents.size(); ++ip) {
        json v;
        v["p"] = r.exponents[ip];
        v["finite"] = static_cast<bool>(r.finite[ip]);
        verdicts.push_back(v);
    }
    j["verdicts"] = verdicts;
    return j;
}

std::string osc_report_csv(const OscReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "p,L,norm,verdict\n";
    for (std::size_t ip = 0; ip < r.exponents.size(); ++ip)
        for (std::size_t iw = 0; iw < r.windows.size(); ++iw)
            out << r.exponents[ip] << ',' << r.windows[iw] << ','
                << r.norms[ip * r.windows.size() + iw] << ','
                << (r.finite[ip] ? "finite" : "not-finite") << '\n';
    return out.str();
}

json to_json(const RoundtripReport& r) {
    json j = report_header("shannon-roundtrip");
    j["omega"] = r.omega;
    j["tau"] = r.tau;
    j["h"] = r.h;
    j["halfwidth"] = r.halfwidth;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["p"] = r.exponents;
    j["max_rel_error"] = r.max_rel_error;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    return j;
}

json to_json(const InjectivityCertificate& c) {
    json j = report_header("injectivity");
    j["setting"] = c.setting;
    j["tau"] = c.tau;
    j["lattice_radius"] = c.lattice_radius;
    j["rows"] = c.rows;
    j["cols"] = c.cols;
    j["sigma_min"] = c.sigma_min;
    j["sigma_max"] = c.sigma_max;
    j["grid_h"] = c.grid_h;
    j["window"] = c.window;
    j["tolerance"] = c.tolerance;
    return j;
}

json to_json(const BoundReport& r) {
    json j = report_header("multiplier-bound");
    j["t"] = r.t;
    j["epsilon"] = r.epsilon;
    j["numeric"] = r.numeric;
    j["analytic"] = r.analytic;
    j["C"] = r.C;
    j["pass"] = r.pass;
    return j;
}

json to_json(const MixedSmoothnessReport& r) {
    json j = report_header("mixed-smoothness");
    j["membership_residual"] = r.membership_residual;
    j["dx_two_route_gap"] = r.dx_two_route_gap;
    json rows = json::array();
    static const char* names[4] = {"F", "dF/dx", "dF/dw", "d2F/dxdw"};
    for (std::size_t ip = 0; ip < r.exponents.size(); ++ip) {
        for (int c = 0; c < 4; ++c) {
            json row;
            row["p"] = r.exponents[ip];
            row["part"] = names[c];
            row["norm"] = r.norms[ip][static_cast<std::size_t>(c)];
            row["finite"] = static_cast<bool>(r.finite[ip][static_cast<std::size_t>(c)]);
            rows.push_back(row);
        }
    }
    j["norms"] = rows;
    return j;
}

std::string serialize(const json& j) { return j.dump(2) + "\n"; }

void write_report(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_report: cannot open " + path);
    out << serialize(j);
}

} // namespace coorbit
