// SPDX-License-Identifier: Apache-2.0
#include "tqu/figures.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace tqu {

namespace {

constexpr const char* kFigureNames[] = {
    "fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig4c",
    "fig6a", "fig6b", "fig7a", "fig7b", "fig8a", "fig8b",
};

bool orthogonal_config(FigureId id) {
    switch (id) {
        case FigureId::Fig3a: case FigureId::Fig3b: case FigureId::Fig3c:
        case FigureId::Fig6a: case FigureId::Fig7a: case FigureId::Fig8a:
            return true;
        default:
            return false;
    }
}

bool expectation_plane(FigureId id) {
    switch (id) {
        case FigureId::Fig3a: case FigureId::Fig4a:
        case FigureId::Fig6a: case FigureId::Fig6b:
            return true;
        default:
            return false;
    }
}

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::optional<FigureId> parse_figure_id(const std::string& name) {
    for (std::size_t i = 0; i < std::size(kFigureNames); ++i)
        if (name == kFigureNames[i]) return FigureId(i);
    return std::nullopt;
}

std::string figure_name(FigureId id) { return kFigureNames[std::size_t(id)]; }

ObservablePair figure_pair(FigureId id) {
    const PauliAxis a{0.0, 0.0, 1.0};
    if (orthogonal_config(id)) return {a, PauliAxis{0.0, 1.0, 0.0}};
    return {a, PauliAxis{0.0, std::sqrt(3.0) / 2.0, 0.5}};
}

std::vector<FamilyKind> figure_families(FigureId id) {
    if (expectation_plane(id)) return {FamilyKind::GreatCircleAB};
    if (orthogonal_config(id))
        return {FamilyKind::GreatCircleAB, FamilyKind::EquatorialArc,
                FamilyKind::ClosingArc};
    return {FamilyKind::GreatCircleAB, FamilyKind::EquatorialArc,
            FamilyKind::PerpendicularToB};
}

std::vector<double> figure_default_r_list(FigureId id) {
    switch (id) {
        case FigureId::Fig6a: case FigureId::Fig6b:
        case FigureId::Fig7a: case FigureId::Fig7b:
        case FigureId::Fig8a: case FigureId::Fig8b:
            return {0.83, 0.94, 0.99};
        default:
            return {1.0};
    }
}

BoundaryFamily make_family(FamilyKind kind, const ObservablePair& pair, double r,
                           std::size_t num_points) {
    switch (kind) {
        case FamilyKind::GreatCircleAB: return great_circle_family(pair, r, num_points);
        case FamilyKind::EquatorialArc: return equatorial_arc_family(pair, r, num_points);
        case FamilyKind::ClosingArc: return closing_arc_family(pair, r, num_points);
        case FamilyKind::PerpendicularToB:
            return perpendicular_circle_family(pair, r, num_points);
    }
    throw std::logic_error("unknown family kind");
}

void write_family_csv(std::ostream& os, const BoundaryFamily& family,
                      const std::vector<EstimatedPoint>* simulated) {
    os << "family,r,theta_rad,phi_rad,exp_a,exp_b,sd_a,sd_b,h_a,h_b";
    if (simulated)
        os << ",est_exp_a,err_exp_a,est_exp_b,err_exp_b"
              ",est_sd_a,err_sd_a,est_sd_b,err_sd_b"
              ",est_h_a,err_h_a,est_h_b,err_h_b";
    os << '\n';

    const auto pts = family.points();
    if (simulated && simulated->size() != pts.size())
        throw ConfigError("simulated point count does not match family");

    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& s = family.settings[i];
        os << family_name(family.kind) << ',' << fmt12(family.r) << ','
           << fmt12(s.theta) << ',' << fmt12(s.phi) << ','
           << fmt12(p.exp_a) << ',' << fmt12(p.exp_b) << ','
           << fmt12(p.sd_a) << ',' << fmt12(p.sd_b) << ','
           << fmt12(p.h_a) << ',' << fmt12(p.h_b);
        if (simulated) {
            const auto& e = (*simulated)[i];
            os << ',' << fmt12(e.value.exp_a) << ',' << fmt12(e.err_exp_a)
               << ',' << fmt12(e.value.exp_b) << ',' << fmt12(e.err_exp_b)
               << ',' << fmt12(e.value.sd_a) << ',' << fmt12(e.err_sd_a)
               << ',' << fmt12(e.value.sd_b) << ',' << fmt12(e.err_sd_b)
               << ',' << fmt12(e.value.h_a) << ',' << fmt12(e.err_h_a)
               << ',' << fmt12(e.value.h_b) << ',' << fmt12(e.err_h_b);
        }
        os << '\n';
    }
}

std::vector<EmittedFile> emit_figure(const FigureSpec& spec,
                                     const std::string& out_dir) {
    const ObservablePair pair = figure_pair(spec.figure_id);
    const auto r_list =
        spec.r_list.empty() ? figure_default_r_list(spec.figure_id) : spec.r_list;

    std::filesystem::create_directories(out_dir);
    std::vector<EmittedFile> files;

    for (double r : r_list) {
        for (FamilyKind kind : figure_families(spec.figure_id)) {
            const BoundaryFamily family = make_family(kind, pair, r, spec.num_points);

            std::vector<EstimatedPoint> simulated;
            if (spec.simulate) {
                ExperimentConfig cfg{pair, r, family.settings,
                                     spec.simulate->counts_per_projector,
                                     spec.simulate->seed};
                simulated = run_experiment(cfg);
            }

            char rbuf[16];
            std::snprintf(rbuf, sizeof(rbuf), "%.2f", r);
            const std::string path = out_dir + "/" + figure_name(spec.figure_id) +
                "_r" + rbuf + "_" + std::string(family_name(kind)) + ".csv";

            std::ofstream os(path, std::ios::binary);
            if (!os) throw std::runtime_error("cannot open " + path);
            write_family_csv(os, family, spec.simulate ? &simulated : nullptr);
            files.push_back({path, kind, r});
        }
    }
    return files;
}

}  // namespace tqu
