#include "tsurf/pairing.hpp"

#include "tsurf/fuchs.hpp"

#include <cmath>
#include <stdexcept>

namespace tsurf::pairing {

double length_TL(const FatGraph& g, const teich::Shear& z, const lam::Bounded& f) {
    auto norm = lam::normalize_bounded(g, f);
    auto curves = lam::reconstruct_bounded(g, norm.coords);
    double total = 0.0;
    for (const auto& comp : curves) {
        fuchs::CurvePath p{comp.path};
        total += rat_to_double(comp.weight) * fuchs::geodesic_length(fuchs::path_monodromy(g, z, p));
    }
    if (norm.shift != 0) {
        // remove the weight-b/2 loops added around every hole
        double b = norm.shift.convert_to<double>();
        for (double s : teich::lh_shear(g, z)) total -= b / 2.0 * s;
    }
    return total / norm.scale.convert_to<double>();
}

double length_LT(const FatGraph& g, const lam::Unbounded& z, const teich::Penner& u) {
    if ((int)z.w.size() != g.edge_count() || (int)u.size() != g.edge_count())
        throw std::invalid_argument("length_LT: size mismatch");
    double s = 0.0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (z.w[i] < 0) throw std::invalid_argument("length_LT: negative lamination coordinate");
        s += rat_to_double(z.w[i]) * u[i];
    }
    return s;
}

Rat intersection_LL(const FatGraph& g, const lam::Unbounded& z, const lam::Bounded& v) {
    if ((int)z.w.size() != g.edge_count() || (int)v.size() != g.edge_count())
        throw std::invalid_argument("intersection_LL: size mismatch");
    Rat s = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (z.w[i] < 0) throw std::invalid_argument("intersection_LL: negative lamination coordinate");
        s += z.w[i] * v[i];
    }
    return s;
}

ConvexityReport convexity_check(const FatGraph& g, const teich::Shear& z, const lam::Bounded& f1,
                                const lam::Bounded& f2) {
    lam::Bounded sum(f1.size());
    for (size_t i = 0; i < f1.size(); ++i) sum[i] = f1[i] + f2[i];
    ConvexityReport r{};
    r.l1 = length_TL(g, z, f1);
    r.l2 = length_TL(g, z, f2);
    r.lsum = length_TL(g, z, sum);
    r.margin = r.l1 + r.l2 - r.lsum;
    return r;
}

Rat tropical_length(const FatGraph& g, const std::vector<Rat>& z, const lam::Bounded& f) {
    auto norm = lam::normalize_bounded(g, f);
    auto curves = lam::reconstruct_bounded(g, norm.coords);
    Rat total = 0;
    for (const auto& comp : curves) {
        fuchs::CurvePath p{comp.path};
        LaurentPoly tp = fuchs::trace_polynomial_unchecked(g, p);
        bool first = true;
        Rat best = 0;
        for (const auto& [expo, c] : tp.terms()) {
            Rat v = 0;
            for (int i = 0; i < g.edge_count(); ++i)
                if (expo[i] != 0) v += Rat(expo[i]) * z[i] / 2;
            if (first || v > best) best = v;
            first = false;
        }
        total += comp.weight * best;
    }
    if (norm.shift != 0) {
        for (int fidx = 0; fidx < g.face_count(); ++fidx) {
            Rat s = 0;
            for (int e : g.face(fidx)) s += z[g.edge_of(e)];
            total -= Rat(norm.shift, 2) * rat_abs(s);
        }
    }
    return total / norm.scale;
}

std::vector<AsymptoticRow> asymptotic_check(const FatGraph& g, const std::string& kind,
                                            const teich::Shear& z, const lam::Bounded& f,
                                            const std::vector<double>& Cs) {
    std::vector<AsymptoticRow> rows;
    if (kind == "tl") {
        std::vector<Rat> zr(z.size());
        for (size_t i = 0; i < z.size(); ++i) zr[i] = Rat(std::lround(z[i] * 1048576.0), 1048576);
        double ref = rat_to_double(tropical_length(g, zr, f));
        for (double C : Cs) {
            teich::Shear cz(z.size());
            for (size_t i = 0; i < z.size(); ++i) cz[i] = C * z[i];
            double v = length_TL(g, cz, f) / C;
            rows.push_back({C, v, ref, std::fabs(v - ref)});
        }
    } else if (kind == "lt") {
        // length_LT is linear in its Penner argument; the limit is the value itself
        lam::Unbounded zl = lam::make_unbounded(g, std::vector<Rat>(z.size()));
        for (size_t i = 0; i < z.size(); ++i) {
            if (z[i] < 0) throw std::invalid_argument("asymptotic_check lt: negative coordinate");
            zl.w[i] = Rat(std::lround(z[i] * 1048576.0), 1048576);
        }
        teich::Penner u(f.size());
        for (size_t i = 0; i < f.size(); ++i) u[i] = rat_to_double(f[i]);
        double ref = 0;
        for (int i = 0; i < g.edge_count(); ++i) ref += rat_to_double(zl.w[i]) * u[i];
        for (double C : Cs) {
            teich::Penner cu(u.size());
            for (size_t i = 0; i < u.size(); ++i) cu[i] = C * u[i];
            double v = length_LT(g, zl, cu) / C;
            rows.push_back({C, v, ref, std::fabs(v - ref)});
        }
    } else {
        throw std::invalid_argument("asymptotic_check: kind must be tl or lt");
    }
    return rows;
}

}  // namespace tsurf::pairing
