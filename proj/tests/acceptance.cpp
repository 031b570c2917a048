// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "zeno/adiabaticity.hpp"
#include "zeno/closed_forms.hpp"
#include "zeno/engine.hpp"
#include "zeno/geometry.hpp"
#include "zeno/runner/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace zeno;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

class Clock {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

UnitVec3 random_unit(std::mt19937_64& g)
{
    std::normal_distribution<double> n;
    for (;;) {
        const double x = n(g), y = n(g), z = n(g);
        if (x * x + y * y + z * z > 1e-6)
            return UnitVec3::from(x, y, z);
    }
}

double uniform(std::mt19937_64& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

ZenoConfig closed_loop(double cos_theta, long long N)
{
    return {ProjectionFamily(UnitVec3::from_polar(cos_theta), kPi, N), std::nullopt, std::nullopt};
}

Outcome finite_n_closed_form()
{
    Clock clock;
    std::mt19937_64 g(1001);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const long long N = std::uniform_int_distribution<long long>(3, 2000)(g);
        const double c = uniform(g, -0.99, 0.99);
        const EvolutionResult r = evolve_ideal(closed_loop(c, N));
        const RhoBeta rb = rho_beta(N, c);
        worst = std::max({worst, std::abs(r.final.norm() - rb.rho), std::abs(r.closed_loop_phase() - rb.beta)});
    }
    const double t = clock.seconds();
    return {worst <= 1e-10 && t < 5.0, "max error " + fmt("%.3g", worst) + ", " + fmt("%.3f", t) + " s"};
}

Outcome zeno_limit()
{
    Clock clock;
    const EvolutionResult r = evolve_ideal(closed_loop(0.5, 1'000'000));
    const double t = clock.seconds();
    const double beta_err = std::abs(r.closed_loop_phase() - kPi / 2);
    const double loss = 1.0 - r.final.norm();
    return {beta_err <= 1e-10 && loss <= 1.3e-5 && t < 2.0,
            "|beta - pi/2| " + fmt("%.3g", beta_err) + ", 1 - rho " + fmt("%.4g", loss) + ", " + fmt("%.3f", t) + " s"};
}

Outcome convergence_rates()
{
    const double c = 0.5;
    const double limit = kPi * (1 - c);
    double prev_beta = 0.0, prev_loss = 0.0;
    double lo_b = 1e9, hi_b = 0, lo_l = 1e9, hi_l = 0;
    for (long long N = 32; N <= 32768; N *= 2) {
        const EvolutionResult r = evolve_ideal(closed_loop(c, N));
        const double be = std::abs(r.closed_loop_phase() - limit);
        const double le = 1.0 - r.final.norm();
        if (N > 32) {
            lo_b = std::min(lo_b, prev_beta / be);
            hi_b = std::max(hi_b, prev_beta / be);
            lo_l = std::min(lo_l, prev_loss / le);
            hi_l = std::max(hi_l, prev_loss / le);
        }
        prev_beta = be;
        prev_loss = le;
    }
    const bool ok = lo_b >= 3.6 && hi_b <= 4.4 && lo_l >= 1.8 && hi_l <= 2.2;
    return {ok, "beta ratios [" + fmt("%.4f", lo_b) + ", " + fmt("%.4f", hi_b) + "], loss ratios [" +
                    fmt("%.4f", lo_l) + ", " + fmt("%.4f", hi_l) + "]"};
}

Outcome solid_angle_identity()
{
    double worst = 0.0;
    for (double c : {-0.9, -0.3, 0.0, 0.25, 0.5, 0.77, 0.99}) {
        for (int i = 0; i <= 60; ++i) {
            const long long N = std::llround(3.0 * std::pow(1e6 / 3.0, i / 60.0));
            worst = std::max(worst, std::abs(solid_angle_regular(N, c) - 2 * rho_beta(N, c).beta));
        }
    }

    std::mt19937_64 g(1004);
    double limit_err = 0.0;
    double max_alpha = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> w(8000);
        double total = 0.0;
        for (double& x : w) {
            x = uniform(g, 0.3, 1.0);
            total += x;
        }
        std::vector<double> alphas;
        double partial = 0.0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            alphas.push_back(kPi * w[i] / total);
            partial += alphas.back();
        }
        alphas.push_back(kPi - partial);
        for (double a : alphas)
            max_alpha = std::max(max_alpha, a);
        const double c = uniform(g, -0.95, 0.95);
        limit_err = std::max(limit_err, std::abs(solid_angle_polygon(PolygonSpec(c, alphas)) - solid_angle_cone(c)));
    }
    return {worst <= 1e-13 && limit_err <= 1e-6 && max_alpha <= 1e-3,
            "max |Omega_N - 2 beta_N| " + fmt("%.3g", worst) + ", polygon limit error " + fmt("%.3g", limit_err) +
                " (max alpha " + fmt("%.3g", max_alpha) + ")"};
}

Outcome hamiltonian_case()
{
    std::mt19937_64 g(1005);
    double quad_err = 0.0, state_err = 0.0, phase_err = 0.0, fact_err = 0.0, loop_err = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double a = uniform(g, 0.1, 2 * kPi);
        const UnitVec3 n = random_unit(g);
        const UnitVec3 b = random_unit(g);
        const double mu_T = uniform(g, -5.0, 5.0);

        const double closed = dynamical_phase(a, n, b, mu_T);
        quad_err = std::max(quad_err, std::abs(closed - dynamical_phase_quadrature(a, n, b, mu_T, 2048)));

        const ProjectionFamily fam(n, a, 100'000);
        const EvolutionResult r = evolve_with_hamiltonian({fam, FieldSpec{mu_T, b}, std::nullopt});
        const PhaseWithField pw = final_phase_with_H(a, n, b, mu_T);
        state_err = std::max(state_err, max_abs_diff(r.final, pw.state()));
        // psi(T) = e^{-i dyn} e^{i a n_z} phi_N, so the phase relative to phi_N is dyn - a n_z.
        phase_err = std::max(phase_err, std::abs(r.total_phase - (closed - a * n.z())));

        const PhaseWithField loop = final_phase_with_H(kPi, n, b, mu_T);
        const Spinor fun = std::polar(1.0, -kPi * (1 - n.z())) *
                           (std::polar(1.0, -mu_T * dot(b, n) * n.z()) * Spinor::spin_up());
        fact_err = std::max(fact_err, max_abs_diff(loop.state(), fun));
        const EvolutionResult rl =
            evolve_with_hamiltonian({ProjectionFamily(n, kPi, 100'000), FieldSpec{mu_T, b}, std::nullopt});
        loop_err = std::max(loop_err, max_abs_diff(rl.final, fun));
    }
    const bool ok = quad_err <= 1e-9 && state_err <= 1e-3 && phase_err <= 1e-3 && fact_err <= 1e-12 &&
                    loop_err <= 1e-3;
    return {ok, "quadrature " + fmt("%.3g", quad_err) + ", state " + fmt("%.3g", state_err) + ", phase " +
                    fmt("%.3g", phase_err) + ", a=pi factorization " + fmt("%.3g", fact_err) +
                    " (engine " + fmt("%.3g", loop_err) + ")"};
}

Outcome table1()
{
    runner::ExperimentSpec base;
    base.N = 100'000;
    base.n = UnitVec3::from_polar(0.5);
    base.mu_T = 3.14159265;
    const auto rows = runner::table1_rows(base, 1e-9);
    const double half_omega = kPi / 2;
    const double expected_dyn[3] = {0.0, kPi - half_omega, *base.mu_T * 0.5};
    bool ok = rows.size() == 3;
    double worst = 0.0, structure = 0.0;
    for (std::size_t i = 0; ok && i < 3; ++i) {
        structure = std::max({structure, std::abs(*rows[i].geom_phase - half_omega),
                              std::abs(*rows[i].dyn_phase - expected_dyn[i]),
                              std::abs(*rows[i].total_phase - (*rows[i].geom_phase + *rows[i].dyn_phase))});
        worst = std::max(worst, rows[i].oracle_error);
        ok = ok && rows[i].pass;
    }
    ok = ok && worst <= 1e-9 && structure <= 1e-12;
    return {ok, "engine vs table " + fmt("%.3g", worst) + ", structure " + fmt("%.3g", structure)};
}

Outcome imperfect_polarizer()
{
    std::mt19937_64 g(1007);
    double exp_err = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = uniform(g, 0.05, 2 * kPi);
        const UnitVec3 n = random_unit(g);
        const double b = uniform(g, 0.0, 50.0);
        exp_err = std::max(exp_err, max_abs_diff(m_matrix(a, n, b), mat_exp(m_generator(a, n, b))));
    }

    double brute_err = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double a = uniform(g, 0.5, kPi);
        const UnitVec3 n = random_unit(g);
        const double b = i == 0 ? 5.0 : uniform(g, 0.0, 50.0);
        const long long N = 100'000;
        const ProjectionFamily fam(n, a, N);
        const EvolutionResult r = evolve_imperfect({fam, std::nullopt, per_step_epsilon(b, a, N)});
        const Spinor closed = rot(a, n) * (m_matrix(a, n, b) * Spinor::spin_up());
        brute_err = std::max(brute_err, max_abs_diff(r.final, closed));
    }

    double zero_err = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double a = uniform(g, -2 * kPi, 2 * kPi);
        const UnitVec3 n = random_unit(g);
        zero_err = std::max(zero_err, max_abs_diff(m_matrix(a, n, 0.0), mat_exp(Complex{0, a} * pauli_dot(n))));
    }

    double lo = 1e9, hi = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double a = uniform(g, 0.5, kPi);
        const UnitVec3 n = random_unit(g);
        double prev = 0.0;
        for (double b : {10.0, 20.0, 40.0, 80.0}) {
            const double res = spectral_norm(m_matrix(a, n, b) - m_large_b(a, n, b));
            if (prev > 0.0) {
                lo = std::min(lo, prev / res);
                hi = std::max(hi, prev / res);
            }
            prev = res;
        }
    }
    const bool ok = exp_err <= 1e-12 && brute_err <= 1e-3 && zero_err <= 1e-13 && lo >= 3.2 && hi <= 4.8;
    return {ok, "vs exp(iaM) " + fmt("%.3g", exp_err) + ", vs brute force " + fmt("%.3g", brute_err) +
                    ", b=0 " + fmt("%.3g", zero_err) + ", large-b ratios [" + fmt("%.3f", lo) + ", " +
                    fmt("%.3f", hi) + "]"};
}

Outcome physical_estimates()
{
    PhysicalSetup s{};
    s.neutron_speed_v = 2000.0;
    s.absorption_length_l = 0.01;
    s.rotation_length_L = 1.0;
    s.strength_V = 1e-29;
    s.total_time_T = 1e-3;
    s.half_angle_a = kPi;
    const double tau = rates_report(s).tau;
    const double V = threshold_strength(tau);
    const double mev = joule_to_mev(V);
    s.strength_V = V;
    const double eps = epsilon_report(s).epsilon();
    const bool ok = std::abs(tau - 5e-6) <= 1e-18 && std::abs(V - 2.1e-29) <= 0.05 * 2.1e-29 &&
                    std::floor(std::log10(V)) == -29 && std::floor(std::log10(mev)) == -7 &&
                    std::abs(eps - std::exp(-1.0)) <= 1e-15;
    return {ok, "tau " + fmt("%.6g", tau) + " s, V " + fmt("%.4g", V) + " J = " + fmt("%.3g", mev) +
                    " meV, eps " + fmt("%.10f", eps)};
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(ZENO_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string csv_body(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_determinism()
{
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "zeno_acceptance";
    fs::remove_all(root);
    bool ok = true;
    std::string detail;
    for (const char* name : {"table1", "convergence"}) {
        const std::string cfg = std::string(ZENO_CONFIGS) + "/" + name + ".cfg";
        const fs::path a = root / (std::string(name) + "_1");
        const fs::path b = root / (std::string(name) + "_2");
        const int c1 = run_cli("run " + cfg + " --out-dir " + a.string());
        const int c2 = run_cli("run " + cfg + " --out-dir " + b.string());
        const std::string s1 = csv_body(a / "report.csv");
        const std::string s2 = csv_body(b / "report.csv");
        const bool same = !s1.empty() && s1 == s2;
        ok = ok && c1 == 0 && c2 == 0 && same;
        detail += std::string(detail.empty() ? "" : "; ") + name + ": exit " + std::to_string(c1) + "/" +
                  std::to_string(c2) + (same ? ", identical CSV" : ", CSV differs");
    }
    return {ok, detail};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"finite-N closed form (200 random N, cos_theta)", finite_n_closed_form},
        {"Zeno limit at N = 1e6", zeno_limit},
        {"dyadic convergence rates, N = 2^5 .. 2^15", convergence_rates},
        {"solid angle identity and polygon limit", solid_angle_identity},
        {"Hamiltonian case", hamiltonian_case},
        {"Table 1 phases", table1},
        {"imperfect polarizer matrix", imperfect_polarizer},
        {"physical estimates", physical_estimates},
        {"CLI determinism on shipped configs", cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
