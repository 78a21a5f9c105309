// Command-line front end: energies, wavefunction samples, orthonormality
// reports, hyperbolic-surface exports and the verification suite.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicoulomb/bicomplex.hpp"
#include "bicoulomb/coulomb.hpp"
#include "bicoulomb/hilbert.hpp"
#include "bicoulomb/params.hpp"
#include "bicoulomb/quadrature.hpp"
#include "bicoulomb/surfaces.hpp"
#include "bicoulomb/verify.hpp"

namespace {

using namespace bicoulomb;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
    double a = 0.0, b = 0.0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &a, &b, &extra) != 2)
        throw UsageError(std::string(what) + ": expected 'a,b', got '" + text + "'");
    return {a, b};
}

std::pair<int, int> parse_int_range(const std::string& text, const char* what) {
    int lo = 0, hi = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d..%d%c", &lo, &hi, &extra) == 2)
        return {lo, hi};
    if (std::sscanf(text.c_str(), "%d%c", &lo, &extra) == 1)
        return {lo, lo};
    throw UsageError(std::string(what) + ": expected 'n' or 'lo..hi', got '" + text + "'");
}

std::pair<int, int> parse_int_pair(const std::string& text, const char* what) {
    int a = 0, b = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d,%d%c", &a, &b, &extra) == 2)
        return {a, b};
    if (std::sscanf(text.c_str(), "%d%c", &a, &extra) == 1)
        return {a, a};
    throw UsageError(std::string(what) + ": expected 'a,b', got '" + text + "'");
}

AxisSpec parse_axis(const std::string& text, const char* what) {
    AxisSpec ax;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &ax.lo, &ax.hi, &ax.count, &extra) != 3 ||
        ax.count < 1)
        throw UsageError(std::string(what) + ": expected 'lo:hi:count', got '" + text + "'");
    return ax;
}

QuantumNumbers parse_sextuplet(const std::string& text) {
    QuantumNumbers q;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d,%d,%d,%d,%d,%d%c", &q.n1, &q.n2, &q.l1, &q.l2, &q.m1,
                    &q.m2, &extra) != 6)
        throw UsageError("quantum numbers: expected 'n1,n2,l1,l2,m1,m2', got '" + text + "'");
    q.validate();
    return q;
}

// Writes to stdout for "-", otherwise to a file; relative paths resolve
// against BICOULOMB_OUTPUT_DIR when that is set.
void write_output(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("BICOULOMB_OUTPUT_DIR"))
            p = std::filesystem::path(dir) / p;
    }
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw IOError("cannot open output file: " + p.string());
    out << content;
    if (!out)
        throw IOError("write failed: " + p.string());
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct EnergyArgs {
    std::string n1 = "1", n2 = "1", xi = "1,1";
    double mu = 1.0, z = 1.0, e2 = 1.0, hbar = 1.0;
    std::string output = "-", format = "csv";
};

int run_energy(const EnergyArgs& a) {
    const auto [n1lo, n1hi] = parse_int_range(a.n1, "--n1");
    const auto [n2lo, n2hi] = parse_int_range(a.n2, "--n2");
    const auto [x1, x2] = parse_pair(a.xi, "--xi");
    PhysicalParams p;
    p.mu = a.mu;
    p.Z = a.z;
    p.e2 = a.e2;
    p.hbar = a.hbar;
    p.xi1 = x1;
    p.xi2 = x2;
    p.validate();
    if (n1lo < 1 || n2lo < 1 || n1hi < n1lo || n2hi < n2lo)
        throw UsageError("--n1/--n2: ranges must satisfy 1 <= lo <= hi");

    if (a.format == "csv") {
        std::string out = "n1,n2,re,hy,e1,e2,degeneracy\n";
        for (int n1 = n1lo; n1 <= n1hi; ++n1)
            for (int n2 = n2lo; n2 <= n2hi; ++n2) {
                const Hyperbolic<double> e = energy(n1, n2, p);
                out += std::to_string(n1) + "," + std::to_string(n2) + "," + g17(e.x) + "," +
                       g17(e.y) + "," + g17(e.comp1()) + "," + g17(e.comp2()) + "," +
                       std::to_string(degeneracy(n1, n2)) + "\n";
            }
        write_output(a.output, out);
    } else if (a.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int n1 = n1lo; n1 <= n1hi; ++n1)
            for (int n2 = n2lo; n2 <= n2hi; ++n2) {
                const Hyperbolic<double> e = energy(n1, n2, p);
                rows.push_back({{"n1", n1},
                                {"n2", n2},
                                {"re", e.x},
                                {"hy", e.y},
                                {"e1", e.comp1()},
                                {"e2", e.comp2()},
                                {"degeneracy", degeneracy(n1, n2)}});
            }
        write_output(a.output, rows.dump() + "\n");
    } else {
        throw UsageError("--format: expected csv or json");
    }
    return 0;
}

struct WavefunctionArgs {
    std::string qn = "1,1,0,0,0,0", xi = "1,1", r = "0.1:20:50";
    double theta = 1.0471975511965976, phi = 0.0;
    std::string output = "-";
};

int run_wavefunction(const WavefunctionArgs& a) {
    const QuantumNumbers q = parse_sextuplet(a.qn);
    const auto [x1, x2] = parse_pair(a.xi, "--xi");
    const PhysicalParams p = PhysicalParams::atomic_units(x1, x2);
    p.validate();
    const AxisSpec rax = parse_axis(a.r, "--r");
    if (rax.lo <= 0.0)
        throw UsageError("--r: radial samples must be > 0");
    std::string out = "r,theta,phi,psi1_re,psi1_im,psi2_re,psi2_im,real_norm\n";
    for (int i = 0; i < rax.count; ++i) {
        const double r = rax.at(i);
        const Bicomplex<double> v = wavefunction_eval(q, p, r, a.theta, a.phi);
        out += g17(r) + "," + g17(a.theta) + "," + g17(a.phi) + "," + g17(v.c1.real()) + "," +
               g17(v.c1.imag()) + "," + g17(v.c2.real()) + "," + g17(v.c2.imag()) + "," +
               g17(real_norm(v)) + "\n";
    }
    write_output(a.output, out);
    return 0;
}

struct OrthocheckArgs {
    int nmax = 0;
    std::string states, xi = "1,1";
    double tol = 1e-8;
    std::string output = "-";
};

int run_orthocheck(const OrthocheckArgs& a) {
    const auto [x1, x2] = parse_pair(a.xi, "--xi");
    const PhysicalParams p = PhysicalParams::atomic_units(x1, x2);
    p.validate();
    std::vector<QuantumNumbers> states;
    if (!a.states.empty()) {
        std::istringstream in(a.states);
        std::string item;
        while (std::getline(in, item, ';'))
            if (!item.empty())
                states.push_back(parse_sextuplet(item));
    } else if (a.nmax >= 1) {
        for (int n1 = 1; n1 <= a.nmax; ++n1)
            for (int n2 = 1; n2 <= a.nmax; ++n2)
                for (const auto& q : enumerate_states(n1, n2))
                    states.push_back(q);
    }
    if (states.empty())
        throw UsageError("orthocheck: empty state list (give --nmax or --states)");

    const QuadratureGrid grid = QuadratureGrid::for_states(states, p);
    const BicomplexMatrix gram = orthonormality_matrix(states, p, grid);
    double max_dev = 0.0;
    std::ostringstream csv;
    csv << "i,j,state_i,state_j,p1_re,p1_im,p2_re,p2_im,expected1,expected2,deviation\n";
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j) {
            const Bicomplex<double> v = gram(i, j);
            const Bicomplex<double> want = expected_gram_entry(states[i], states[j]);
            const double dev = std::max(std::abs(v.c1 - want.c1), std::abs(v.c2 - want.c2));
            max_dev = std::max(max_dev, dev);
            std::ostringstream si, sj;
            si << states[i];
            sj << states[j];
            csv << i << "," << j << ",\"" << si.str() << "\",\"" << sj.str() << "\","
                << g17(v.c1.real()) << "," << g17(v.c1.imag()) << "," << g17(v.c2.real()) << ","
                << g17(v.c2.imag()) << "," << g17(want.c1.real()) << "," << g17(want.c2.real())
                << "," << g17(dev) << "\n";
        }
    csv << "# max_deviation=" << g17(max_dev) << " tolerance=" << g17(a.tol) << " result="
        << (max_dev < a.tol ? "pass" : "fail") << "\n";
    write_output(a.output, csv.str());
    return max_dev < a.tol ? 0 : 1;
}

struct SurfaceArgs {
    std::string n = "25,25", l = "12,12", xi = "1,1";
    std::string x = "0:120:400", y = "-40:40:267";
    std::string path = "idempotent", format = "csv", output = "-";
    bool no_normalization = false;
    double prefactor = 1.0;
};

int run_surface(const SurfaceArgs& a) {
    const auto [n1, n2] = parse_int_pair(a.n, "--n");
    const auto [l1, l2] = parse_int_pair(a.l, "--l");
    const auto [x1, x2] = parse_pair(a.xi, "--xi");
    const RadialPair nl{n1, n2, l1, l2};
    nl.validate();
    const Hyperbolic<double> xi = Hyperbolic<double>::from_components(x1, x2);
    SurfacePath path;
    if (a.path == "idempotent")
        path = SurfacePath::idempotent;
    else if (a.path == "polynomial")
        path = SurfacePath::polynomial;
    else
        throw UsageError("--path: expected idempotent or polynomial");
    SurfaceFormat format;
    if (a.format == "csv")
        format = SurfaceFormat::csv;
    else if (a.format == "json")
        format = SurfaceFormat::json;
    else
        throw UsageError("--format: expected csv or json");
    SurfaceOptions opt;
    opt.include_normalization = !a.no_normalization;
    opt.prefactor = a.prefactor;
    const SurfaceGrid grid = build_surface(nl, xi, parse_axis(a.x, "--x"),
                                           parse_axis(a.y, "--y"), path, opt);
    write_output(a.output, export_surface(grid, format));
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> only;
    std::uint64_t seed = 42;
    int ode_n = 0, ode_l = -1;
    bool json = false, timings = false;
    std::string output = "-";
};

int run_verify(const VerifyArgs& a) {
    VerifyOptions opt;
    opt.seed = a.seed;
    if (a.ode_n > 0)
        opt.ode_n = a.ode_n;
    if (a.ode_l >= 0)
        opt.ode_l = a.ode_l;
    std::vector<std::string> names = a.only.empty() ? verification_check_names() : a.only;
    std::vector<CheckResult> results;
    for (const auto& name : names)
        results.push_back(run_verification_check(name, opt));

    bool all_ok = true;
    if (a.json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json row = {{"name", r.name},
                                  {"passed", r.passed},
                                  {"measured", r.measured},
                                  {"threshold", r.threshold},
                                  {"detail", r.detail}};
            if (a.timings)
                row["seconds"] = r.seconds;
            doc.push_back(row);
            all_ok = all_ok && r.passed;
        }
        write_output(a.output, doc.dump() + "\n");
    } else {
        std::string out;
        char buf[400];
        for (const auto& r : results) {
            if (a.timings)
                std::snprintf(buf, sizeof buf, "[%s] %-26s measured=%-12.6g threshold=%-8.3g (%.2fs) %s\n",
                              r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured, r.threshold,
                              r.seconds, r.detail.c_str());
            else
                std::snprintf(buf, sizeof buf, "[%s] %-26s measured=%-12.6g threshold=%-8.3g %s\n",
                              r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured, r.threshold,
                              r.detail.c_str());
            out += buf;
            all_ok = all_ok && r.passed;
        }
        out += all_ok ? "all checks passed\n" : "CHECKS FAILED\n";
        write_output(a.output, out);
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicoulomb: bicomplex quantum Coulomb problem toolkit"};
    app.require_subcommand(1);

    EnergyArgs ea;
    auto* energy_cmd = app.add_subcommand("energy", "eigenvalue table over n ranges");
    energy_cmd->add_option("--n1", ea.n1, "principal number range, e.g. 2 or 1..3");
    energy_cmd->add_option("--n2", ea.n2, "principal number range");
    energy_cmd->add_option("--xi", ea.xi, "commutator scalar components 'xi1,xi2'");
    energy_cmd->add_option("--mu", ea.mu, "reduced mass");
    energy_cmd->add_option("--Z", ea.z, "charge count");
    energy_cmd->add_option("--e2", ea.e2, "squared charge");
    energy_cmd->add_option("--hbar", ea.hbar, "reduced Planck constant");
    energy_cmd->add_option("--output,-o", ea.output, "output file or '-' for stdout");
    energy_cmd->add_option("--format", ea.format, "csv or json");

    WavefunctionArgs wa;
    auto* wf_cmd = app.add_subcommand("wavefunction", "sample psi_nlm along a radial ray");
    wf_cmd->add_option("--qn", wa.qn, "sextuplet n1,n2,l1,l2,m1,m2");
    wf_cmd->add_option("--xi", wa.xi, "commutator scalar components");
    wf_cmd->add_option("--r", wa.r, "radial samples lo:hi:count");
    wf_cmd->add_option("--theta", wa.theta, "polar angle (radians)");
    wf_cmd->add_option("--phi", wa.phi, "azimuthal angle (radians)");
    wf_cmd->add_option("--output,-o", wa.output, "output file or '-'");

    OrthocheckArgs oa;
    auto* ortho_cmd = app.add_subcommand("orthocheck", "orthonormality report by quadrature");
    ortho_cmd->add_option("--nmax", oa.nmax, "all sextuplets with n_s <= nmax");
    ortho_cmd->add_option("--states", oa.states, "explicit ';'-separated sextuplets");
    ortho_cmd->add_option("--xi", oa.xi, "commutator scalar components");
    ortho_cmd->add_option("--tol", oa.tol, "pass tolerance on the worst component deviation");
    ortho_cmd->add_option("--output,-o", oa.output, "output file or '-'");

    SurfaceArgs sa;
    auto* surf_cmd = app.add_subcommand("surface", "radial surfaces over the hyperbolic plane");
    surf_cmd->add_option("--n", sa.n, "principal pair 'n1,n2'");
    surf_cmd->add_option("--l", sa.l, "orbital pair 'l1,l2'");
    surf_cmd->add_option("--xi", sa.xi, "commutator scalar components");
    surf_cmd->add_option("--x", sa.x, "x_zeta axis lo:hi:count");
    surf_cmd->add_option("--y", sa.y, "y_zeta axis lo:hi:count");
    surf_cmd->add_option("--path", sa.path, "idempotent or polynomial");
    surf_cmd->add_option("--format", sa.format, "csv or json");
    surf_cmd->add_flag("--no-normalization", sa.no_normalization,
                       "drop the sqrt(u0) normalization bracket");
    surf_cmd->add_option("--prefactor", sa.prefactor, "extra scaling applied to both parts");
    surf_cmd->add_option("--output,-o", sa.output, "output file or '-'");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "run the named verification checks");
    verify_cmd->add_option("--only", va.only, "run only the named checks")
        ->expected(-1);
    verify_cmd->add_option("--seed", va.seed, "random seed for sampled checks");
    verify_cmd->add_option("--n", va.ode_n, "restrict ode-residual to this n");
    verify_cmd->add_option("--l", va.ode_l, "restrict ode-residual to this l");
    verify_cmd->add_flag("--json", va.json, "machine-readable JSON report");
    verify_cmd->add_flag("--timings", va.timings, "include wall-clock timings");
    verify_cmd->add_option("--output,-o", va.output, "output file or '-'");

    try {
        app.parse(argc, argv);
        if (energy_cmd->parsed())
            return run_energy(ea);
        if (wf_cmd->parsed())
            return run_wavefunction(wa);
        if (ortho_cmd->parsed())
            return run_orthocheck(oa);
        if (surf_cmd->parsed())
            return run_surface(sa);
        if (verify_cmd->parsed())
            return run_verify(va);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const bicoulomb::NullConeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
