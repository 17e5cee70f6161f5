// SPDX-License-Identifier: Apache-2.0
//
// tqu: bounds evaluation, relation checking, boundary generation,
// polarimeter simulation and figure-dataset emission.
#include "tqu/figures.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitUnphysical = 2;
constexpr int kExitIo = 3;

struct IniFile {
    // "section.key" -> value
    std::map<std::string, std::string> values;

    std::optional<std::string> get(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }
};

IniFile load_ini(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    IniFile ini;
    std::string line, section;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == ';') continue;
        if (line[start] == '[') {
            const auto end = line.find(']', start);
            section = line.substr(start + 1, end - start - 1);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        if (!section.empty()) key = section + "." + key;
        ini.values[key] = trim(line.substr(eq + 1));
    }
    return ini;
}

tqu::Vec3 parse_vec(const std::string& s) {
    tqu::Vec3 v;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> v.x >> c1 >> v.y >> c2 >> v.z) || c1 != ',' || c2 != ',')
        throw CLI::ValidationError("expected vector as x,y,z: " + s);
    return v;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

/// Pair from either an explicit (a, b) or the --ab dot-product shorthand
/// (a = z, b in the y-z plane).
tqu::ObservablePair make_pair(const std::optional<double>& ab,
                              const std::optional<std::string>& a_str,
                              const std::optional<std::string>& b_str) {
    if (a_str && b_str)
        return {tqu::PauliAxis{parse_vec(*a_str)}, tqu::PauliAxis{parse_vec(*b_str)}};
    const double d = ab.value_or(0.0);
    if (std::abs(d) > 1.0) throw CLI::ValidationError("--ab must be in [-1,1]");
    return {tqu::PauliAxis{0.0, 0.0, 1.0},
            tqu::PauliAxis{0.0, std::sqrt(1.0 - d * d), d}};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    if (const char* env = std::getenv("TQU_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void print_report(const char* name, const tqu::RelationReport& rep) {
    std::cout << name << ": lhs=" << rep.lhs << " mid=" << rep.mid_bound
              << " outer=" << rep.outer_bound
              << " satisfied=" << (rep.satisfied ? "yes" : "no")
              << " saturates_mid=" << (rep.saturates_mid ? "yes" : "no")
              << " saturates_outer=" << (rep.saturates_outer ? "yes" : "no")
              << " slack=" << rep.slack << '\n';
}

tqu::FamilyKind parse_family(const std::string& name) {
    for (auto k : {tqu::FamilyKind::GreatCircleAB, tqu::FamilyKind::EquatorialArc,
                   tqu::FamilyKind::ClosingArc, tqu::FamilyKind::PerpendicularToB})
        if (name == tqu::family_name(k)) return k;
    throw CLI::ValidationError("unknown family: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tight qubit preparation uncertainty relations"};
    app.require_subcommand(1);

    std::optional<double> ab, r_opt;
    std::optional<std::string> a_str, b_str, config_path;
    std::optional<std::uint64_t> seed, n0;
    std::string n_str, family_str = "great_circle", fig_str, out_dir = ".";
    std::vector<double> r_list;
    std::size_t points = 360;

    auto add_pair_flags = [&](CLI::App* cmd) {
        cmd->add_option("--ab", ab, "dot product a.b (shorthand pair: a=z, b in y-z plane)");
        cmd->add_option("--a", a_str, "axis a as x,y,z");
        cmd->add_option("--b", b_str, "axis b as x,y,z");
    };

    auto* bounds = app.add_subcommand("bounds", "print state-independent (and r-dependent) bounds");
    add_pair_flags(bounds);
    bounds->add_option("--r", r_opt, "polarization for the partially state-dependent bounds");

    auto* check = app.add_subcommand("check", "evaluate all three relations for one state");
    add_pair_flags(check);
    check->add_option("--n", n_str, "Bloch vector as x,y,z")->required();

    auto* boundary = app.add_subcommand("boundary", "emit one boundary family as CSV");
    add_pair_flags(boundary);
    boundary->add_option("--family", family_str,
                         "great_circle|equatorial_arc|closing_arc|perpendicular_circle");
    boundary->add_option("--r", r_opt, "polarization");
    boundary->add_option("--points", points, "number of points");

    auto* simulate = app.add_subcommand("simulate", "simulate counting along one family, emit CSV");
    add_pair_flags(simulate);
    simulate->add_option("--family", family_str);
    simulate->add_option("--r", r_opt, "polarization");
    simulate->add_option("--points", points, "number of points");
    simulate->add_option("--simulate", n0, "expected counts per projector (N0)")->required();
    simulate->add_option("--seed", seed, "RNG seed (falls back to TQU_SEED)");

    auto* figure = app.add_subcommand("figure", "emit the dataset for one figure");
    figure->add_option("--fig", fig_str, "fig3a..fig3c, fig4a..fig4c, fig6a..fig8b")->required();
    figure->add_option("--r", r_list, "polarization values (default per figure)");
    figure->add_option("--points", points, "points per family");
    figure->add_option("--simulate", n0, "also simulate with N0 counts per projector");
    figure->add_option("--seed", seed, "RNG seed (falls back to TQU_SEED)");
    figure->add_option("--out", out_dir, "output directory");
    figure->add_option("--config", config_path, "config file; flags override its values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (config_path) {
            const IniFile ini = load_ini(*config_path);
            if (auto v = ini.get("pair.ab"); v && !ab && !a_str) ab = std::stod(*v);
            if (auto v = ini.get("pair.a"); v && !a_str) a_str = *v;
            if (auto v = ini.get("pair.b"); v && !b_str) b_str = *v;
            if (auto v = ini.get("figure.r_list"); v && r_list.empty()) r_list = parse_list(*v);
            if (auto v = ini.get("figure.points"); v && !figure->count("--points"))
                points = std::stoul(*v);
            if (auto v = ini.get("simulation.n0"); v && !n0) n0 = std::stoull(*v);
            if (auto v = ini.get("simulation.seed"); v && !seed) seed = std::stoull(*v);
        }

        if (*bounds) {
            const auto pair = make_pair(ab, a_str, b_str);
            const double c2 = pair.dot_ab() * pair.dot_ab();
            std::cout << "b_EV=" << 1.0 - c2 << " b_SD=" << 1.0 + c2
                      << " b_H=" << 1.0 - c2 << '\n';
            if (r_opt) {
                const double rr = *r_opt * *r_opt;
                std::cout << "b'_EV(r)=" << (1.0 - c2) * rr
                          << " b'_SD(r)=" << 2.0 - (1.0 - c2) * rr
                          << " b'_H(r)=" << (1.0 - c2) * rr << '\n';
            }
            return 0;
        }

        if (*check) {
            const auto pair = make_pair(ab, a_str, b_str);
            const tqu::BlochVector state{parse_vec(n_str)};
            const auto ev = tqu::check_expectation_relation(state, pair);
            const auto sd = tqu::check_stddev_relation(state, pair);
            const auto h = tqu::check_entropy_relation(state, pair);
            print_report("EV", ev);
            print_report("SD", sd);
            print_report("H ", h);
            return (ev.satisfied && sd.satisfied && h.satisfied) ? 0 : kExitUnphysical;
        }

        if (*boundary || *simulate) {
            const auto pair = make_pair(ab, a_str, b_str);
            const double r = r_opt.value_or(1.0);
            const auto family =
                tqu::make_family(parse_family(family_str), pair, r, points);
            if (*simulate) {
                tqu::ExperimentConfig cfg{pair, r, family.settings, *n0,
                                          resolve_seed(seed)};
                const auto est = tqu::run_experiment(cfg);
                tqu::write_family_csv(std::cout, family, &est);
            } else {
                tqu::write_family_csv(std::cout, family);
            }
            return 0;
        }

        if (*figure) {
            const auto id = tqu::parse_figure_id(fig_str);
            if (!id) throw CLI::ValidationError("unknown figure id: " + fig_str);
            tqu::FigureSpec spec{*id, r_list, points, std::nullopt};
            if (n0) spec.simulate = tqu::SimulationRequest{*n0, resolve_seed(seed)};
            const auto files = tqu::emit_figure(spec, out_dir);
            for (const auto& f : files) std::cout << f.path << '\n';
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tqu::UnphysicalState& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnphysical;
    } catch (const tqu::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnphysical;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
