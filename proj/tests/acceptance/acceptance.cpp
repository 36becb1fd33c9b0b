// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "eulercalc/cli/runner.hpp"
#include "gen.hpp"

using namespace eulercalc;

namespace {

const models::Registry& reg() { return models::registry(); }
ConstructibleFunction one(const std::string& s) { return ConstructibleFunction::one(reg().space(s).space); }

struct Verdict {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = "failed: " + what;
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<Verdict()>& body) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
        v.pass = false;
        v.detail += " over time limit";
    }
    failures += !v.pass;
    std::printf("%s %s %s (%.2fs%s) %s\n", v.pass ? "PASS" : "FAIL", id, title, secs,
                limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + "s").c_str() : "",
                v.detail.c_str());
    std::fflush(stdout);
}

std::vector<SimplicialMap> complex_maps(std::vector<std::string>* names = nullptr) {
    std::vector<SimplicialMap> out;
    for (const auto& [n, m] : reg().maps())
        if (m.complex_model) {
            out.push_back(m.map);
            if (names) names->push_back(n);
        }
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    criterion("AC1", "pushforward equals compactly supported pushforward on complex models", 5, [] {
        Verdict v;
        std::vector<std::string> names;
        std::size_t cases = 0;
        for (const auto& [n, m] : reg().maps()) {
            if (!m.complex_model) continue;
            names.push_back(n);
            for (const auto& phi : reg().space(m.source).strata_basis()) {
                ++cases;
                v.require(pushforward(m.map, phi) == pushforward_c(m.map, phi), n);
            }
        }
        for (const char* n : {"z1_cover", "z2_cover", "z3_cover", "P1_to_point", "normalization", "disk_C_to_point",
                              "Cstar_C_point", "Cstar_P1_point"})
            v.require(std::find(names.begin(), names.end(), n) != names.end(), std::string("missing ") + n);
        v.require(names.size() >= 8, "fewer than 8 maps");
        if (v.pass) v.detail = std::to_string(names.size()) + " maps, " + std::to_string(cases) + " basis functions";
        return v;
    });

    criterion("AC2", "real counterexamples", 0, [] {
        Verdict v;
        const auto& f = reg().map("open_interval_to_point").map;
        const Integer lower = pushforward_c(f, one("open_interval"))(Simplex{0});
        const Integer upper = pushforward(f, one("open_interval"))(Simplex{0});
        v.require(lower == -1 && upper == 1, "open interval");
        const auto& i = reg().map("endpoint_inclusion").map;
        const Integer star = pullback(i, one("closed_interval"))(Simplex{0});
        const Integer shriek = exc_pullback(i, one("closed_interval"))(Simplex{0});
        v.require(star == 1 && shriek == 0, "endpoint");
        v.require(lower != upper && star != shriek, "inequalities");
        if (v.pass)
            v.detail = "f_!1=" + std::to_string(lower) + " f_*1=" + std::to_string(upper) + " i^*1=" + std::to_string(star) +
                       " i^!1=" + std::to_string(shriek);
        return v;
    });

    criterion("AC3", "boundary stalk vanishing", 0, [] {
        Verdict v;
        v.require(boundary_stalk(reg().space("punctured_C").space, reg().space("disk_C_center").space, one("punctured_C"))
                      .is_zero(),
                  "C* in C");
        const CellSet& chart = reg().space("P1_chart_N").space;
        const CellSet south = CellSet::of(chart.ambient_ptr(), {Simplex{5}});
        v.require(boundary_stalk(chart, south, one("P1_chart_N")).is_zero(), "C in P1");
        const Integer h = boundary_stalk(reg().space("half_open_interval").space, reg().space("interval_endpoint").space,
                                         one("half_open_interval"))(Simplex{0});
        v.require(h == 1, "half-open endpoint");
        if (v.pass) v.detail = "C*->C: 0, C->P1: 0, half-open endpoint: 1";
        return v;
    });

    criterion("AC4", "Cech sum equals boundary stalk", 0, [] {
        Verdict v;
        gen::Rng rng(4);
        for (const char* name : {"P1_two_chart", "interval_two_chart"}) {
            const auto& c = reg().cover(name);
            std::vector<CellSet> charts;
            for (const auto& ch : c.charts) charts.push_back(reg().space(ch).space);
            const CellSet& u = reg().space(c.open).space;
            const CellSet& z = reg().space(c.closed).space;
            v.require(cech_sum(charts, u, z, one(c.open)) == boundary_stalk(u, z, one(c.open)), name);
            for (int k = 0; k < 20; ++k) {
                auto phi = gen::function(rng, u);
                v.require(cech_sum(charts, u, z, phi) == boundary_stalk(u, z, phi), name);
            }
        }
        if (v.pass) v.detail = "2 covers, 42 functions";
        return v;
    });

    criterion("AC5", "proper base change", 0, [] {
        Verdict v;
        for (const char* name : {"nodal_normalization_square", "P1_chart_square"}) {
            const auto& q = reg().square(name);
            const auto& right = reg().map(q.right);
            v.require(right.map.is_proper() && reg().map(q.left).map.is_proper(), std::string(name) + " not proper");
            for (const auto& phi : reg().space(right.source).strata_basis())
                v.require(pullback(reg().map(q.bottom).map, pushforward(right.map, phi)) ==
                              pushforward(reg().map(q.left).map, pullback(reg().map(q.top).map, phi)),
                          name);
        }
        if (v.pass) v.detail = "2 squares";
        return v;
    });

    criterion("AC6", "duality involution and self-dual unit", 10, [] {
        Verdict v;
        gen::Rng rng(6);
        std::size_t triples = 0, max_cells = 0;
        while (triples < 1000) {
            const std::size_t size = 1 + triples % 5;
            auto k = gen::complex(rng, 4 + 3 * size, static_cast<int>(size), 3 * size);
            CellSet s = gen::locally_closed(rng, k);
            if (s.size() > 200) continue;
            max_cells = std::max(max_cells, s.size());
            auto phi = gen::function(rng, s);
            v.require(dual(dual(phi)) == phi, "random triple");
            ++triples;
        }
        std::size_t models = 0;
        for (const auto& [n, s] : reg().spaces())
            if (s.complex_model) {
                ++models;
                v.require(dual(one(n)) == one(n), n);
            }
        if (v.pass)
            v.detail = std::to_string(triples) + " triples (max " + std::to_string(max_cells) + " cells), " +
                       std::to_string(models) + " complex models";
        return v;
    });

    criterion("AC7", "exceptional pullback equals pullback", 0, [] {
        Verdict v;
        gen::Rng rng(7);
        std::size_t maps = 0, filtrations = 0;
        for (const auto& [n, m] : reg().maps()) {
            if (!m.complex_model) continue;
            ++maps;
            const auto& src = reg().space(m.source);
            const auto basis = reg().space(m.target).strata_basis();
            for (const auto& psi : basis) v.require(exc_pullback(m.map, psi) == pullback(m.map, psi), n);
            // graph factorization f = p o gamma, on the subdivided map when needed
            GraphEmbedding g = graph_embed(m.map);
            for (const auto& psi0 : basis) {
                ConstructibleFunction psi = psi0;
                if (g.subdivided) {
                    psi = ConstructibleFunction(g.map.target());
                    for (std::size_t k = 0; k < psi.size(); ++k)
                        psi.value_at(k) = psi0(g.target_subdivision->carrier[g.map.target().cell(k)]);
                }
                const auto& p = g.product.second;
                v.require(exc_pullback(p, psi) == pullback(p, psi), n + " projection");
                v.require(pullback(g.graph, pullback(p, psi)) == pullback(g.map, psi), n + " graph");
                v.require(exc_pullback(g.graph, exc_pullback(p, psi)) == exc_pullback(g.map, psi), n + " graph");
                v.require(exc_pullback(g.map, psi) == pullback(g.map, psi), n + " subdivided");
            }
            // random closed filtrations by unions of strata
            for (int t = 0; t < 5; ++t) {
                std::vector<CellSet> strata = src.strata;
                std::shuffle(strata.begin(), strata.end(), rng);
                std::vector<CellSet> order;
                CellSet taken = CellSet::empty(src.space.ambient_ptr());
                while (!strata.empty())
                    for (auto it = strata.begin(); it != strata.end(); ++it) {
                        CellSet next = set_union(taken, *it);
                        if (is_closed_in(next, src.space)) {
                            order.push_back(*it);
                            taken = next;
                            strata.erase(it);
                            break;
                        }
                    }
                ++filtrations;
                for (const auto& psi : basis) {
                    ConstructibleFunction shriek(src.space), star(src.space);
                    for (const auto& z : order) {
                        SimplicialMap j = SimplicialMap::inclusion(z, src.space);
                        SimplicialMap fi = restrict_source(m.map, z);
                        shriek = shriek + pushforward(j, exc_pullback(fi, psi));
                        star = star + pushforward_c(j, pullback(fi, psi));
                    }
                    v.require(shriek == exc_pullback(m.map, psi) && star == pullback(m.map, psi) && shriek == star,
                              n + " filtration");
                }
            }
        }
        if (v.pass) v.detail = std::to_string(maps) + " maps, " + std::to_string(filtrations) + " filtrations";
        return v;
    });

    criterion("AC8", "nearby cycles of z^n", 0, [] {
        Verdict v;
        std::size_t choices = 0;
        for (Integer n = 1; n <= 3; ++n) {
            const auto& m = reg().map("z" + std::to_string(n) + "_cover");
            for (CellIndex t : m.map.target().cells()) {
                const Simplex& g = m.map.target().ambient().simplex(t);
                if (g.dim() != 2) continue;
                ++choices;
                v.require(nearby(m.map, g, one(m.source), true)(Simplex{0}) == n, m.name);
            }
        }
        if (v.pass) v.detail = "psi = 1, 2, 3 for " + std::to_string(choices) + " generic-cell choices";
        return v;
    });

    criterion("AC9", "equivariant traces", 0, [] {
        Verdict v;
        std::size_t elements = 0;
        for (const auto& [n, a] : reg().actions()) {
            if (!a.complex_model) continue;
            RegularAction ra = regularize(a.action);
            for (std::size_t g = 0; g < ra.action.order(); ++g, ++elements) {
                v.require(chi_g(ra, g) == chi_gc(ra, g), n);
                v.require(chain_trace_c(ra.action, g) == chi_c(fixed_cells(ra, g)), n + " chain trace");
            }
        }
        for (const char* n : {"disk_C_rotation", "punctured_C_rotation", "P1_pole_swap"})
            v.require(reg().actions().count(n) == 1, std::string("missing ") + n);
        RegularAction t = regularize(reg().action("open_interval_trivial").action);
        v.require(chi_g(t, 0) == 1 && chi_gc(t, 0) == -1, "open interval identity");
        if (v.pass) v.detail = std::to_string(elements) + " group elements; open interval 1 vs -1";
        return v;
    });

    criterion("AC10", "deterministic reports for the bundled suite", 60, [] {
        Verdict v;
        std::size_t files = 0, checks = 0;
        for (const auto& e : std::filesystem::directory_iterator(EULERCALC_SCENARIO_DIR)) {
            if (e.path().extension() != ".json") continue;
            ++files;
            const cli::Scenario sc = cli::parse_scenario(slurp(e.path()));
            const cli::Report a = cli::run(sc, 1);
            const std::string ra = a.to_json().dump(2);
            v.require(ra == cli::run(sc, 1).to_json().dump(2), e.path().filename().string() + " rerun");
            v.require(ra == cli::run(sc, 4).to_json().dump(2), e.path().filename().string() + " jobs=4");
            v.require(a.exit_code() == 0, e.path().filename().string() + " exit code");
            checks += a.results.size();
        }
        v.require(files >= 7, "bundled scenarios missing");
        if (v.pass) v.detail = std::to_string(files) + " scenarios, " + std::to_string(checks) + " checks";
        return v;
    });

    return failures == 0 ? 0 : 1;
}
