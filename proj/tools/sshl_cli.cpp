#include "sshl/config.hpp"
#include "sshl/ds6v.hpp"
#include "sshl/field.hpp"
#include "sshl/stats.hpp"
#include "sshl/suite.hpp"
#include "sshl/transitions.hpp"
#include "sshl/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace {

using namespace sshl;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr double kCompareAlpha = 1e-3;

struct Options {
    std::string config_path;
    std::string only;
    int point = -1;
    bool inject_fault = false;
    std::optional<int> T;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string currents_out;
    std::uint64_t samples = 100000;
};

std::ofstream open_out(const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw config_error("cannot write " + path);
    return f;
}

int cmd_verify(const Options& o)
{
    set_weight_fault(o.inject_fault);
    bool ok = true;
    for (const auto& r : run_suite(o.only, o.point)) {
        std::cout << report_json(r) << '\n';
        ok = ok && r.passed;
    }
    set_weight_fault(false);
    return ok ? kExitPass : kExitFail;
}

int cmd_sample_field(const RunConfig& c, const Options& o)
{
    const int T = o.T.value_or(c.T);
    const FieldState f = sample_field(T, o.seed.value_or(c.seed), c.params(T));
    json out = json::array();
    for (int j = 0; j <= T; ++j)
        for (int i = 0; i <= j; ++i)
            out.push_back({{"i", i}, {"j", j}, {"parts", f.at(i, j).parts()}});
    open_out(o.out) << out.dump() << '\n';
    return kExitPass;
}

int cmd_ds6v(const RunConfig& c, const Options& o)
{
    const int T = o.T.value_or(c.T);
    const HeightField h = ds6v_sample(T, o.seed.value_or(c.seed), c.params(T));
    auto f = open_out(o.out);
    f << "i,j,h\n";
    for (int j = 0; j <= T; ++j)
        for (int i = 0; i <= j; ++i)
            f << i << ',' << j << ',' << h.at(i, j) << '\n';
    return kExitPass;
}

int cmd_particles(const RunConfig& c, const Options& o)
{
    const int T = o.T.value_or(c.T);
    const auto traj = particle_trajectory(T, o.seed.value_or(c.seed), 0, c.params(T));
    auto f = open_out(o.out);
    f << "t,site,occupied\n";
    json currents = json::array();
    for (const auto& s : traj) {
        for (int y = 1; y <= s.t; ++y)
            f << s.t << ',' << y << ',' << s.sites[y - 1] << '\n';
        currents.push_back({{"t", s.t}, {"N", s.count()}, {"N_x", s.currents()}});
    }
    if (!o.currents_out.empty())
        open_out(o.currents_out) << currents.dump() << '\n';
    return kExitPass;
}

int cmd_compare(const RunConfig& c, const Options& o)
{
    const int T = o.T.value_or(4);
    const std::uint64_t seed = o.seed.value_or(c.seed);
    const Params p = c.params(T);
    const auto fields = sample_field_lengths(T, seed, o.samples, p);
    const auto heights = ds6v_sample_batch(T, seed, o.samples, p);
    bool ok = true;
    for (int j = 1; j <= T; ++j)
        for (int i = 1; i <= j; ++i) {
            std::map<int, std::uint64_t> a, b;
            for (const auto& f : fields)
                ++a[f.at(i, j)];
            for (const auto& h : heights)
                ++b[h.at(i, j)];
            const auto r = chi_square_two_sample(a, b);
            const bool pass = r.df == 0 || r.p_value > kCompareAlpha;
            ok = ok && pass;
            std::cout << json{{"name", "length_vs_height"},
                              {"i", i},
                              {"j", j},
                              {"statistic", r.statistic},
                              {"df", r.df},
                              {"p_value", r.p_value},
                              {"passed", pass}}
                             .dump()
                      << '\n';
        }
    return ok ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spin Hall-Littlewood identities, half-space field and vertex model"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--config", o.config_path, "JSON configuration file");

    auto* verify = app.add_subcommand("verify", "Run the exact and truncated identity checks");
    verify->add_option("--only", o.only, "Restrict to one check group")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--point", o.point, "Fixture parameter point")
        ->check(CLI::Range(0, kFixturePoints - 1));
    verify->add_flag("--inject-fault", o.inject_fault, "Corrupt one weight (negative control)");

    auto add_sim = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("--T", o.T, "Grid size")->check(CLI::Range(0, kMaxT));
        s->add_option("--seed", o.seed, "Random seed");
        s->add_option("--out", o.out, "Output file")->required();
        return s;
    };
    auto* field = add_sim("sample-field", "Sample one half-space field (JSON)");
    auto* ds6v = add_sim("ds6v", "Sample one vertex-model height field (CSV)");
    auto* particles = add_sim("particles", "Sample one particle trajectory (CSV)");
    particles->add_option("--currents", o.currents_out, "Write currents as JSON");
    auto* compare = app.add_subcommand("compare", "Chi-square test of field lengths vs heights");
    compare->add_option("--T", o.T, "Grid size")->check(CLI::Range(1, kMaxT));
    compare->add_option("--samples", o.samples, "Samples per model")->check(CLI::PositiveNumber);
    compare->add_option("--seed", o.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        const RunConfig c = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
        validate(c.params(0), Mode::probabilistic);
        if (*verify)
            return cmd_verify(o);
        if (*field)
            return cmd_sample_field(c, o);
        if (*ds6v)
            return cmd_ds6v(c, o);
        if (*particles)
            return cmd_particles(c, o);
        if (*compare)
            return cmd_compare(c, o);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const invalid_params& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kExitConfig;
    } catch (const not_admissible& e) {
        std::cerr << "not admissible: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitFail;
}
