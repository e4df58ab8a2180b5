/**
 * kestab — exact Kaehler-Einstein stability checker for rank <= 3 group
 * compactification polytopes.
 *
 * Subcommands operate on line-oriented problem files (rootsystem/posroot +
 * facet lines); all exact output is deterministic and byte-identical across
 * runs. Verdicts are data: K_UNSTABLE still exits 0. Exit code 2 means
 * malformed input, 1 an internal failure or a failed self-verification.
 */
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kestab/kestab.hpp"

namespace {

using namespace kestab;

struct Options {
    std::string format = "exact";
    bool decimal() const { return format == "decimal"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Problem load_problem(const std::string& path) { return parse_problem(read_file(path)); }

std::string fmt(const Rational& q, const Options& opt) {
    return opt.decimal() ? format_decimal(q) : format_rational(q);
}

std::string fmt_vec(const RatVector& v, const Options& opt) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += fmt(v[i], opt);
    }
    return s;
}

void print_format_marker(const Options& opt) {
    if (opt.decimal()) std::cout << "format decimal (approximate)\n";
}

std::vector<double> parse_doubles(const std::string& csv, std::size_t expect,
                                  const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (...) {
            throw std::invalid_argument(what + ": cannot parse '" + item + "'");
        }
    }
    if (expect != 0 && out.size() != expect)
        throw std::invalid_argument(what + ": expected " + std::to_string(expect) +
                                    " comma-separated values");
    return out;
}

int cmd_vertices(const std::string& path, bool orbit, const Options& opt) {
    const Problem prob = load_problem(path);
    Polytope p = positive_part(prob.root_system, prob.facets);
    if (orbit) p = weyl_orbit_polytope(p, weyl_group(prob.root_system));
    print_format_marker(opt);
    for (const auto& v : p.vertices()) std::cout << "vertex " << fmt_vec(v, opt) << "\n";
    return 0;
}

int cmd_volume(const std::string& path, const Options& opt) {
    const Problem prob = load_problem(path);
    const Polytope p_plus = positive_part(prob.root_system, prob.facets);
    const Moments m = weighted_moments(p_plus, weight_polynomial(prob.root_system));
    print_format_marker(opt);
    std::cout << "volume " << fmt(m.weighted_volume, opt) << "\n";
    return 0;
}

int cmd_barycenter(const std::string& path, const Options& opt) {
    const Problem prob = load_problem(path);
    const Polytope p_plus = positive_part(prob.root_system, prob.facets);
    const RatVector b = barycenter(p_plus, weight_polynomial(prob.root_system));
    print_format_marker(opt);
    std::cout << "barycenter " << fmt_vec(b, opt) << "\n";
    return 0;
}

int cmd_check_ke(const std::string& path, const Options& opt) {
    const Problem prob = load_problem(path);
    std::cout << render_report(ke_verdict(prob.root_system, prob.facets), opt.decimal());
    return 0;
}

int cmd_report(const std::string& path, const Options& opt) {
    const Problem prob = load_problem(path);
    const Report rep = ke_verdict(prob.root_system, prob.facets);
    const Polytope p_plus = positive_part(prob.root_system, prob.facets);
    if (auto id = match_catalog(prob.root_system, p_plus)) {
        std::cout << "catalog-entry " << *id << "\n";
        for (const auto& n : erratum_notes(*id)) std::cout << "note " << n << "\n";
    }
    std::cout << render_report(rep, opt.decimal());
    return 0;
}

int cmd_delzant(const std::string& path, bool on_positive_part, const Options& opt) {
    const Problem prob = load_problem(path);
    Polytope p = positive_part(prob.root_system, prob.facets);
    if (!on_positive_part) p = weyl_orbit_polytope(p, weyl_group(prob.root_system));
    const DelzantResult res = delzant_check(p);
    print_format_marker(opt);
    for (const auto& v : p.vertices()) std::cout << "polytope-vertex " << fmt_vec(v, opt) << "\n";
    for (const auto& o : res.offenders) {
        std::cout << "offender " << fmt_vec(o.vertex, opt);
        if (o.non_simple)
            std::cout << " non-simple\n";
        else
            std::cout << " det " << fmt(o.det, opt) << "\n";
    }
    std::cout << "delzant " << (res.pass ? "pass" : "fail") << "\n";
    return 0;
}

int cmd_oracle(const std::string& path, std::size_t samples, std::uint64_t seed,
               const Options& opt) {
    const Problem prob = load_problem(path);
    const Polytope p_plus = positive_part(prob.root_system, prob.facets);
    const WeightPolynomial weight = weight_polynomial(prob.root_system);
    const McMoments mc = mc_moments(p_plus, weight, samples, seed);
    const Moments exact = weighted_moments(p_plus, weight);
    char buf[64];
    auto g = [&buf](double x) {
        std::snprintf(buf, sizeof(buf), "%.12g", x);
        return std::string(buf);
    };
    std::cout << "samples " << samples << "\n";
    std::cout << "seed " << seed << "\n";
    std::cout << "mc-volume " << g(mc.volume.value) << " stderr " << g(mc.volume.std_error)
              << "\n";
    for (std::size_t k = 0; k < mc.first_moments.size(); ++k)
        std::cout << "mc-moment-" << k + 1 << " " << g(mc.first_moments[k].value)
                  << " stderr " << g(mc.first_moments[k].std_error) << "\n";
    std::cout << "acceptance-rate " << g(mc.acceptance_rate) << "\n";
    std::cout << "exact-volume " << fmt(exact.weighted_volume, opt) << "\n";
    for (std::size_t k = 0; k < exact.first_moments.size(); ++k)
        std::cout << "exact-moment-" << k + 1 << " " << fmt(exact.first_moments[k], opt)
                  << "\n";
    return 0;
}

int cmd_verify(const std::string& id, bool all, const Options& opt) {
    std::vector<std::string> ids;
    if (all)
        for (const auto& e : catalog()) ids.push_back(e.id);
    else
        ids.push_back(id);
    bool ok = true;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const VerifyResult res = verify(ids[i]);
        ok = ok && res.pass;
        if (i) std::cout << "\n";
        std::cout << render_verify(res, opt.decimal());
    }
    return ok ? 0 : 1;
}

int cmd_hessian(const std::string& label, const std::vector<std::string>& posroots,
                const std::string& point_csv, const std::string& grad_csv,
                const std::string& hess_csv, const std::string& quad_csv) {
    RootSystem rs;
    if (!label.empty()) {
        rs = make_root_system(label);
    } else if (!posroots.empty()) {
        std::vector<RatVector> roots;
        for (const auto& pr : posroots) {
            const auto vals = parse_doubles(pr, 0, "--posroot");
            RatVector root(vals.size());
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (vals[i] != static_cast<long long>(vals[i]))
                    throw std::invalid_argument("--posroot: integer coordinates required");
                root[i] = Rational(static_cast<long long>(vals[i]));
            }
            roots.push_back(std::move(root));
        }
        rs = make_custom(roots[0].size(), roots);
    } else {
        throw std::invalid_argument("hessian-density needs --rootsystem or --posroot");
    }
    const std::size_t r = rs.rank;

    EvalPoint pt;
    pt.x = parse_doubles(point_csv, r, "--point");
    const std::size_t tri = r * (r + 1) / 2;
    if (!quad_csv.empty()) {
        // quadratic family psi(x) = x^T A x / 2 + b^T x: grad = A x + b, hess = A
        const auto q = parse_doubles(quad_csv, tri + r, "--quadratic");
        std::vector<double> a(r * r);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) {
                a[i * r + j] = q[idx];
                a[j * r + i] = q[idx];
                ++idx;
            }
        pt.hess = a;
        pt.grad.assign(r, 0.0);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) pt.grad[i] += a[i * r + j] * pt.x[j];
            pt.grad[i] += q[tri + i];
        }
    } else {
        if (grad_csv.empty() || hess_csv.empty())
            throw std::invalid_argument(
                "hessian-density needs --grad and --hess (or --quadratic)");
        pt.grad = parse_doubles(grad_csv, r, "--grad");
        const auto h = parse_doubles(hess_csv, tri, "--hess");
        pt.hess.assign(r * r, 0.0);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) {
                pt.hess[i * r + j] = h[idx];
                pt.hess[j * r + i] = h[idx];
                ++idx;
            }
    }

    const BlockHessian bh = assemble(rs, pt);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", ma_density(bh));
    std::cout << "density " << buf << "\n";
    switch (classify_positivity(bh)) {
        case Positivity::Positive: std::cout << "positive-definite true\n"; break;
        case Positivity::NotPositive: std::cout << "positive-definite false\n"; break;
        case Positivity::Indeterminate:
            std::cout << "positive-definite indeterminate (within tolerance of zero)\n";
            break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "kestab: exact Kaehler-Einstein stability of group compactifications via the "
        "weighted-barycenter cone criterion"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output number format")
        ->check(CLI::IsMember({"exact", "decimal"}))
        ->capture_default_str();

    std::string file, id;
    bool orbit = false, all = false, on_pplus = false;
    std::size_t samples = 1000000;
    std::uint64_t seed = 1;

    auto* sc_vertices = app.add_subcommand("vertices", "vertices of P+ (or of P with --orbit)");
    sc_vertices->add_option("file", file, "problem file")->required();
    sc_vertices->add_flag("--orbit", orbit, "vertices of the Weyl-orbit polytope P");

    auto* sc_volume = app.add_subcommand("volume", "weighted volume of P+");
    sc_volume->add_option("file", file, "problem file")->required();

    auto* sc_bar = app.add_subcommand("barycenter", "weighted barycenter of P+");
    sc_bar->add_option("file", file, "problem file")->required();

    auto* sc_check = app.add_subcommand("check-ke", "existence verdict report");
    sc_check->add_option("file", file, "problem file")->required();

    auto* sc_report = app.add_subcommand("report", "full report with catalog erratum notes");
    sc_report->add_option("file", file, "problem file")->required();

    auto* sc_delzant = app.add_subcommand("delzant", "Delzant smoothness check of P");
    sc_delzant->add_option("file", file, "problem file")->required();
    sc_delzant->add_flag("--positive-part", on_pplus, "check P+ instead of the orbit polytope");

    auto* sc_oracle = app.add_subcommand("oracle", "Monte-Carlo cross-check of the exact moments");
    sc_oracle->add_option("file", file, "problem file")->required();
    sc_oracle->add_option("--mc-samples", samples, "sample count (>= 1000)")
        ->capture_default_str();
    sc_oracle
        ->add_option("--seed", seed,
                     "RNG seed; the generator is SplitMix64 with the published "
                     "Steele-Lea-Vigna constants, shard s draws from seed+s")
        ->capture_default_str();

    auto* sc_verify = app.add_subcommand("verify", "recompute a built-in catalog entry");
    sc_verify->add_option("id", id, "catalog id (so4-1..3, sp4-1..3)");
    sc_verify->add_flag("--all", all, "verify all six entries");

    std::string rs_label, point_csv, grad_csv, hess_csv, quad_csv;
    std::vector<std::string> posroots;
    auto* sc_hess = app.add_subcommand(
        "hessian-density", "Monge-Ampere density of the block Hessian at a chamber point");
    sc_hess->add_option("--rootsystem", rs_label, "SO4 or Sp4");
    sc_hess->add_option("--posroot", posroots, "custom positive root, e.g. 1,-1 (repeatable)");
    sc_hess->add_option("--point", point_csv, "chamber point x1,x2,...")->required();
    sc_hess->add_option("--grad", grad_csv, "gradient g1,g2,...");
    sc_hess->add_option("--hess", hess_csv, "Hessian upper triangle h11,h12,...,hrr");
    sc_hess->add_option("--quadratic", quad_csv,
                        "quadratic potential a11,a12,..,arr,b1,..,br (upper triangle + "
                        "linear part); computes grad and hess at the point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*sc_vertices) return cmd_vertices(file, orbit, opt);
        if (*sc_volume) return cmd_volume(file, opt);
        if (*sc_bar) return cmd_barycenter(file, opt);
        if (*sc_check) return cmd_check_ke(file, opt);
        if (*sc_report) return cmd_report(file, opt);
        if (*sc_delzant) return cmd_delzant(file, on_pplus, opt);
        if (*sc_oracle) return cmd_oracle(file, samples, seed, opt);
        if (*sc_verify) {
            if (!all && id.empty())
                throw std::invalid_argument("verify needs a catalog id or --all");
            return cmd_verify(id, all, opt);
        }
        if (*sc_hess)
            return cmd_hessian(rs_label, posroots, point_csv, grad_csv, hess_csv, quad_csv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // bare logic_error marks a violated internal cross-check
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
