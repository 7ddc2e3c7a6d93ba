// htverify: command-line front end for the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#include "ht/braid_burau.hpp"
#include "ht/complexes.hpp"
#include "ht/presentations.hpp"
#include "ht/suites.hpp"
#include "ht/symplectic.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ht;

namespace {

struct Globals {
    std::string report;
    bool quiet = false;
    bool verbose = false;
    bool no_timing = false;
    unsigned long long seed = 0;
};

// "3" or "3..5".
std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int g = std::stoi(s);
            return {g, g};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad genus range: " + s);
    }
}

void emit(const Globals& G, const nlohmann::json& j) {
    if (!G.report.empty()) {
        std::ofstream out(G.report);
        if (!out) throw std::runtime_error("cannot write report to " + G.report);
        out << j.dump(2) << '\n';
    }
    if (!G.quiet) std::cout << j.dump(2) << '\n';
}

void summarize(const Globals& G, const SuiteReport& r) {
    if (!G.verbose) return;
    std::cerr << r.suite << " g=" << r.g << " cases=" << r.total_cases << " failures=" << r.failures.size();
    if (!G.no_timing) std::cerr << " ms=" << static_cast<long long>(r.elapsed_ms);
    std::cerr << '\n';
}

std::size_t complex_estimate_mb(const std::string& type, int g) {
    if (g <= 2) return 1;
    if (type == "ibhat") return 64;
    return 16;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification suites for braid, symplectic and complex computations"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals G;
    app.add_option("--report", G.report, "Write the JSON result to this path");
    app.add_flag("--quiet", G.quiet, "Print nothing on stdout");
    app.add_flag("--verbose", G.verbose, "Per-suite summary lines on stderr");
    app.add_option("--seed", G.seed, "Seed for randomized suites")->capture_default_str();
    app.add_flag("--no-timing", G.no_timing, "Write elapsed_ms as 0 so reports are byte-identical");

    auto* burau = app.add_subcommand("burau", "Burau image at t = -1 of a braid word");
    int b_n = 3;
    std::string b_word;
    bool b_unreduced = false;
    burau->add_option("--n", b_n, "Number of strands")->required();
    burau->add_option("--word", b_word, "Word such as \"s1 s2^-1\"")->required();
    burau->add_flag("--unreduced", b_unreduced, "Unreduced n x n image instead of the symplectic one");

    auto* lift = app.add_subcommand("liftclass", "Lift class of an even convex curve");
    int l_n = 3;
    std::string l_curve;
    lift->add_option("--n", l_n, "Number of marked points")->required();
    lift->add_option("--curve", l_curve, "Curve such as \"c{1,2,3,4}\"")->required();

    auto* sp = app.add_subcommand("sp", "Sp_2g(F2) order and standard data");
    int s_g = 2;
    bool s_basis = false, s_xi = false;
    sp->add_option("--g", s_g, "Genus (order needs g <= 3)")->required();
    sp->add_flag("--standard-basis", s_basis, "Print the standard symplectic basis in chain coordinates");
    sp->add_flag("--xi", s_xi, "Print the generating set of the stabilizer of <a2>");

    auto* cx = app.add_subcommand("complex", "Build a complex over F2 and compute its homology");
    std::string c_type = "ibhat", c_coeff = "z";
    int c_g = 2;
    bool c_no_h = false;
    cx->add_option("--type", c_type, "tits | ib | ibhat")->check(CLI::IsMember({"tits", "ib", "ibhat"}));
    cx->add_option("--g", c_g, "Genus, at most 3")->required();
    cx->add_option("--coefficients", c_coeff, "f2 | z")->check(CLI::IsMember({"f2", "z"}));
    cx->add_flag("--no-homology", c_no_h, "Only count simplices");

    auto* verify = app.add_subcommand("verify", "Run one suite");
    std::string v_suite, v_g = "3";
    std::size_t v_samples = 0;
    verify->add_option("suite", v_suite, "Suite name")->required();
    verify->add_option("--g", v_g, "Genus or range a..b")->capture_default_str();
    verify->add_option("--samples", v_samples, "Sample count for randomized suites");

    auto* all = app.add_subcommand("all", "Run every suite");
    int a_gmax = 3;
    all->add_option("--g-max", a_gmax, "Largest genus")->capture_default_str();

    auto* list = app.add_subcommand("list", "List suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        SuiteParams base;
        base.seed = G.seed;
        base.max_mem_mb = max_mem_from_env();

        if (*burau) {
            const BraidWord w = BraidWord::parse(b_word, b_n);
            const IntMatrix M = b_unreduced ? unreduced_burau_minus1(w) : burau_symplectic(w);
            emit(G, {{"word", w.to_string()}, {"n", b_n}, {"matrix", to_json(M)}});
            return 0;
        }
        if (*lift) {
            const ConvexCurve c = ConvexCurve::parse(l_curve, l_n);
            emit(G, {{"curve", c.to_string()}, {"lift_class", to_json(lift_class(c).vec())}});
            return 0;
        }
        if (*sp) {
            nlohmann::json j{{"g", s_g}};
            if (s_g <= 3) j["order_f2"] = enumerate_sp_f2(s_g);
            if (s_basis) j["standard_basis"] = to_json(standard_basis_change(s_g));
            if (s_xi) {
                nlohmann::json xs = nlohmann::json::array();
                for (const auto& x : xi_generating_set(s_g)) xs.push_back({{"name", x.name}, {"matrix", to_json(x.M)}});
                j["xi"] = xs;
            }
            emit(G, j);
            return 0;
        }
        if (*cx) {
            if (c_g < 1 || c_g > 3) throw std::invalid_argument("complex: g must be in 1..3");
            const std::size_t need = complex_estimate_mb(c_type, c_g);
            if (base.max_mem_mb && need > base.max_mem_mb) {
                std::cerr << "complex: needs about " << need << " MB, HT_MAX_MEM allows " << base.max_mem_mb << " MB\n";
                return 2;
            }
            const ArithmeticComplex X =
                c_type == "tits" ? build_tits_f2(c_g) : c_type == "ib" ? build_ib_f2(c_g) : build_ibhat_f2(c_g);
            nlohmann::json j{{"complex", X.name()}, {"euler_characteristic", X.euler_characteristic()}};
            std::vector<std::size_t> counts;
            for (int d = 0; d <= X.dimension(); ++d) counts.push_back(X.count(d));
            j["simplices"] = counts;
            if (!c_no_h)
                j["homology"] = homology_profile(X, c_coeff == "z" ? Coefficients::z : Coefficients::f2).to_json();
            emit(G, j);
            return 0;
        }
        if (*list) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& s : suite_catalog())
                j.push_back({{"name", s.name}, {"g_min", s.g_min}, {"g_max", s.g_max}, {"summary", s.summary}});
            emit(G, j);
            return 0;
        }
        if (*verify) {
            const auto [lo, hi] = parse_range(v_g);
            if (lo > hi) throw std::invalid_argument("empty genus range");
            base.samples = v_samples;
            RunManifest m;
            m.artifact_version = kArtifactVersion;
            m.seed = G.seed;
            for (int g = lo; g <= hi; ++g) {
                SuiteParams p = base;
                p.g = g;
                m.reports.push_back(run_suite(v_suite, p));
                summarize(G, m.reports.back());
            }
            emit(G, lo == hi ? m.reports.front().to_json(!G.no_timing) : m.to_json(!G.no_timing));
            return m.ok() ? 0 : 1;
        }
        if (*all) {
            RunManifest m = run_all(a_gmax, base);
            for (const auto& r : m.reports) summarize(G, r);
            emit(G, m.to_json(!G.no_timing));
            return m.ok() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
