#include "hs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hs/compop.hpp"
#include "hs/hardy.hpp"
#include "hs/moebius.hpp"
#include "hs/obstruction.hpp"
#include "hs/spectral.hpp"

namespace hs {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> make_grid(int moduli, int phases) {
    std::vector<Complex> grid;
    grid.reserve(static_cast<std::size_t>(moduli) * static_cast<std::size_t>(phases));
    for (int i = 1; i <= moduli; ++i)
        for (int p = 0; p < phases; ++p)
            grid.push_back(std::polar(0.1 * i, 2.0 * kPi * p / phases));
    return grid;
}

Complex random_unit(std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    return std::polar(1.0, angle(rng));
}

Complex random_in_disk(std::mt19937& rng, double max_mod) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return std::polar(max_mod * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
}

// Rational test function with poles of modulus >= 1.25.
RationalMap random_test_map(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> num_deg(1, 3);
    std::uniform_int_distribution<int> pole_count(0, 2);
    std::vector<Complex> nc(static_cast<std::size_t>(num_deg(rng)) + 1);
    for (Complex& c : nc) c = Complex(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
    Polynomial den = Polynomial::constant(1.0);
    const int poles = pole_count(rng);
    for (int i = 0; i < poles; ++i) {
        const Complex w = std::polar(1.25 + 1.75 * unit(rng), 2.0 * kPi * unit(rng));
        den = den * Polynomial{1.0, -1.0 / w};
    }
    return RationalMap(Polynomial(std::move(nc)), std::move(den));
}

// Kernel combination c0 + c1 K_w1 + c2 z K_w2 with |w| <= 0.4. The radius-
// 0.999 quadrature deficit scales with sum n |f_n||g_n|, so the 1e-3 budget
// needs test functions whose coefficient mass sits in low orders.
RationalMap random_smooth_map(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&](double max_mod) {
        return std::polar(max_mod * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    };
    const RationalMap k1(Polynomial::constant(1.0), Polynomial{1.0, -std::conj(draw(0.4))});
    const RationalMap k2(Polynomial{0.0, 1.0}, Polynomial{1.0, -std::conj(draw(0.4))});
    return RationalMap::constant(draw(0.4)) + draw(0.4) * k1 + draw(0.4) * k2;
}

TruncatedSeries series_compose(const TruncatedSeries& F, const TruncatedSeries& G) {
    TruncatedSeries acc(F.depth());
    for (int k = F.depth() - 1; k >= 0; --k) {
        acc = acc * G;
        acc[0] += F.coeff(k);
    }
    return acc;
}

double max_coeff_delta(const TruncatedSeries& x, const TruncatedSeries& y) {
    double worst = 0.0;
    for (int i = 0; i < x.depth(); ++i) worst = std::max(worst, std::abs(x.coeff(i) - y.coeff(i)));
    return worst;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
    std::vector<CheckResult> results;
    auto add = [&results](std::string name, double delta, double tol, std::string detail) {
        results.push_back({std::move(name), delta <= tol, delta, tol, std::move(detail)});
    };
    auto guarded = [&results](std::string name, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            results.push_back({std::move(name), false, std::numeric_limits<double>::infinity(),
                               0.0, std::string("exception: ") + e.what()});
        }
    };

    std::mt19937 rng(opts.seed);
    const std::vector<Complex> grid = make_grid(opts.moduli, opts.phases);
    const Complex omega = std::polar(1.0, 2.0 * kPi / 3.0);
    std::ostringstream grid_note;
    grid_note << grid.size() << " grid points, depth " << opts.depth;
    const std::string grid_detail = grid_note.str();

    guarded("series.compose-consistency", [&] {
        const int depth = 96;
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const RationalMap F = random_test_map(rng);
            const MoebiusMap G = build_elliptic(random_in_disk(rng, 0.3), random_unit(rng));
            const RationalMap GR = G.rational();
            const TruncatedSeries direct = rat_compose(F, GR).series(depth);
            const TruncatedSeries via_series = series_compose(F.series(depth), GR.series(depth));
            worst = std::max(worst, max_coeff_delta(direct, via_series));
        }
        add("series.compose-consistency", worst, 1e-12, "20 random pairs, depth 96");
    });

    guarded("series.compose-associativity", [&] {
        double worst = 1.0;
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            const MoebiusMap F = build_elliptic(random_in_disk(rng, 0.8), random_unit(rng));
            const MoebiusMap G = build_elliptic(random_in_disk(rng, 0.8), random_unit(rng));
            const MoebiusMap H = build_elliptic(random_in_disk(rng, 0.8), random_unit(rng));
            const RationalMap left = rat_compose(rat_compose(F.rational(), G.rational()),
                                                 H.rational());
            const RationalMap right = rat_compose(F.rational(),
                                                  rat_compose(G.rational(), H.rational()));
            ok = ok && approx_equal(left, right, 1e-12);
        }
        add("series.compose-associativity", ok ? 0.0 : worst, 0.5,
            "20 automorphism triples, tol 1e-12");
    });

    guarded("series.product-ring", [&] {
        const int depth = 64;
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            TruncatedSeries f(depth), g(depth), h(depth);
            for (int n = 0; n < depth; ++n) {
                f[n] = Complex(unit(rng), unit(rng));
                g[n] = Complex(unit(rng), unit(rng));
                h[n] = Complex(unit(rng), unit(rng));
            }
            worst = std::max(worst, max_coeff_delta(f * g, g * f));
            worst = std::max(worst, max_coeff_delta(f * (g + h), f * g + f * h));
        }
        add("series.product-ring", worst, 1e-13 * 64.0, "commutativity + distributivity");
    });

    guarded("moebius.elliptic-roundtrip", [&] {
        double worst = 0.0;
        const Complex multipliers[] = {omega, std::conj(omega), Complex(0.0, 1.0),
                                       std::polar(1.0, 1.0)};
        for (Complex a : grid) {
            for (Complex w : multipliers) {
                const AutoClass cls = classify(build_elliptic(a, w));
                if (cls.kind != AutoKind::Elliptic) {
                    worst = 1.0;
                    continue;
                }
                worst = std::max(worst, std::abs(*cls.fixed_point_in_disk - a));
                worst = std::max(worst, std::abs(*cls.multiplier - w));
            }
        }
        add("moebius.elliptic-roundtrip", worst, 1e-10, grid_detail);
    });

    guarded("moebius.involution-selfinverse", [&] {
        bool ok = true;
        for (Complex a : grid) {
            const RationalMap inv = involution(a).rational();
            ok = ok && approx_equal(rat_compose(inv, inv), RationalMap::identity(), 1e-12);
        }
        add("moebius.involution-selfinverse", ok ? 0.0 : 1.0, 0.5, grid_detail);
    });

    guarded("moebius.order3-iterates", [&] {
        bool ok = true;
        for (Complex a : grid) {
            const MoebiusMap phi = build_elliptic(a, omega);
            RationalMap acc = phi.rational();
            ok = ok && !approx_equal(acc, RationalMap::identity(), 1e-3);
            acc = rat_compose(phi.rational(), acc);
            ok = ok && !approx_equal(acc, RationalMap::identity(), 1e-3);
            acc = rat_compose(phi.rational(), acc);
            ok = ok && approx_equal(acc, RationalMap::identity(), 1e-12);
        }
        add("moebius.order3-iterates", ok ? 0.0 : 1.0, 0.5, grid_detail);
    });

    guarded("moebius.rotation-invariance", [&] {
        bool ok = true;
        const MoebiusMap samples[] = {build_elliptic(0.4, omega),
                                      MoebiusMap(1.0, 0.5, 0.5, 1.0),
                                      MoebiusMap(Complex(-1, 2), 1.0, -1.0, Complex(1, 2))};
        const AutoKind kinds[] = {AutoKind::Elliptic, AutoKind::Hyperbolic, AutoKind::Parabolic};
        for (int i = 0; i < 3; ++i) {
            for (int r = 0; r < 6; ++r) {
                const MoebiusMap rot = rotation(random_unit(rng));
                ok = ok && classify(compose(rot, samples[i])).kind == kinds[i];
                ok = ok && classify(compose(samples[i], rot)).kind == kinds[i];
            }
        }
        add("moebius.rotation-invariance", ok ? 0.0 : 1.0, 0.5, "kind stable under rotations");
    });

    guarded("hardy.parseval-vs-quadrature", [&] {
        const int depth = 256;
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const RationalMap f = random_smooth_map(rng);
            const RationalMap g = random_smooth_map(rng);
            const Complex paired = dot_conj(f.series(depth), g.series(depth));
            const Complex quad = boundary_inner_product(f, g, 4096, 0.999);
            worst = std::max(worst, std::abs(paired - quad));
        }
        add("hardy.parseval-vs-quadrature", worst, 1e-3, "50 random pairs, r=0.999, 4096 samples");
    });

    guarded("hardy.reproducing", [&] {
        const int depth = 256;
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const RationalMap f = random_test_map(rng);
            const Complex w = random_in_disk(rng, 0.6);
            const HardyElement fe = HardyElement::from_rational(f, depth);
            worst = std::max(worst, std::abs(inner_product(fe, kernel(w, depth)) - f(w)));
        }
        add("hardy.reproducing", worst, 1e-10, "100 random (f, w), |w| <= 0.6");
    });

    guarded("hardy.inner-moments", [&] {
        double worst = 0.0;
        for (Complex a : grid) {
            const RationalMap g = inner_cubic(a);
            const CheckedSeries gs = expand_checked(g, opts.depth, std::max(2048, opts.depth));
            std::vector<TruncatedSeries> powers;
            powers.push_back(TruncatedSeries::one(gs.depth));
            for (int m = 1; m <= 4; ++m) powers.push_back(powers.back() * gs.series);
            for (int m = 0; m <= 4; ++m)
                for (int n = 0; n <= 4; ++n)
                    worst = std::max(worst, std::abs(inner_moment(g, m, n) -
                                                     dot_conj(powers[static_cast<std::size_t>(m)],
                                                              powers[static_cast<std::size_t>(n)])));
        }
        add("hardy.inner-moments", worst, 1e-8, grid_detail + ", m,n <= 4");
    });

    guarded("spectral.e-family", [&] {
        double worst = 0.0;
        const int count = 3 * (opts.vectors_per_residue - 1) + 3;
        for (Complex a : grid) {
            const double target = 1.0 / (1.0 - std::norm(a));
            const std::vector<HardyElement> e = e_family(a, count, opts.depth);
            for (int j = 0; j < count; ++j) {
                worst = std::max(worst, std::abs(norm_sq(e[static_cast<std::size_t>(j)]) - target));
                for (int k = 0; k < j; ++k)
                    worst = std::max(worst,
                                     std::abs(inner_product(e[static_cast<std::size_t>(j)],
                                                            e[static_cast<std::size_t>(k)])));
            }
        }
        add("spectral.e-family", worst, 1e-10, grid_detail);
    });

    guarded("spectral.residuals", [&] {
        double worst_fwd = 0.0;
        double worst_adj = 0.0;
        for (Complex a : grid) {
            const MoebiusMap phi = build_elliptic(a, omega);
            const OperatorTruncation T = truncate(phi, opts.depth);
            for (int m = 0; m < 3; ++m) {
                const Complex lam_f = std::pow(omega, m);
                const Complex lam_a = std::conj(lam_f);
                const EigenBasis fwd = lambda_basis(a, omega, m, opts.vectors_per_residue + 1,
                                                    opts.depth);
                for (const HardyElement& v : fwd.vectors)
                    worst_fwd = std::max(worst_fwd, eigen_residual(T, v.series, lam_f));
                const EigenBasis adj = lambda_star_basis(a, omega, m,
                                                         opts.vectors_per_residue + 1, opts.depth);
                for (const HardyElement& v : adj.vectors)
                    worst_adj = std::max(worst_adj, adjoint_residual(T, v.series, lam_a));
            }
        }
        add("spectral.forward-residuals", worst_fwd, 1e-8, grid_detail + ", j <= 5");
        add("spectral.adjoint-residuals", worst_adj, 1e-6, grid_detail + ", j <= 5");
    });

    guarded("spectral.span-rank", [&] {
        // The depth-3J window holds too little of the mass of phi_a^k beyond
        // |a| ~ 0.6 for the conditioning threshold to be meaningful there.
        double worst = 0.0;
        for (Complex a : grid)
            if (std::abs(a) <= 0.65)
                worst = std::max(worst, span_condition(a, opts.vectors_per_residue));
        add("spectral.span-rank", worst, 1e8, "3J x 3J column-pivoted QR, J = 5, |a| <= 0.6");
    });

    guarded("compop.involution-square", [&] {
        double worst = 0.0;
        for (int i = 1; i <= opts.moduli; ++i) {
            const Complex a = std::polar(0.1 * i, 2.0 * kPi / 7.0);
            const OperatorTruncation T = truncate(involution(a), opts.depth);
            for (int k = 0; k <= 20; ++k) {
                TruncatedSeries ek(opts.depth);
                ek[k] = 1.0;
                const TruncatedSeries twice = apply(T, apply(T, ek));
                worst = std::max(worst, std::sqrt((twice - ek).norm_sq()));
            }
            // Exact route: composing the rational forms recovers z^k exactly.
            const MoebiusMap inv = involution(a);
            const RationalMap z5 = RationalMap(Polynomial::monomial(5), Polynomial::constant(1.0));
            if (!approx_equal(apply_exact(inv, apply_exact(inv, z5)), z5, 1e-12)) worst = 1.0;
        }
        add("compop.involution-square", worst, 1e-8, "k <= 20, one point per modulus");
    });

    guarded("compop.norm-bound", [&] {
        double worst = 0.0;
        for (int i = 1; i <= opts.moduli; ++i) {
            const MoebiusMap phi = build_elliptic(0.1 * i, omega);
            const OperatorTruncation T = truncate(phi, opts.depth);
            const double p0 = std::abs(phi(Complex{0.0}));
            const double bound = std::sqrt((1.0 + p0) / (1.0 - p0)) + 0.01;
            worst = std::max(worst, operator_norm(T) - bound);
        }
        add("compop.norm-bound", std::max(worst, 0.0), 0.0, "one point per modulus");
    });

    guarded("obstruction.recurrence-vs-closed-form", [&] {
        double worst = 0.0;
        for (Complex a : grid) {
            const ObstructionConstants k = constants(a);
            const Complex c0{k.c0_abs};
            const std::vector<Complex> rec = solve_c_recurrence(a, c0, 8);
            const std::optional<Complex> override_rho =
                opts.mutate_rho ? std::optional<Complex>(k.rho * 1.001) : std::nullopt;
            const std::vector<Complex> closed = closed_c_sequence(a, c0, 8, override_rho);
            for (std::size_t j = 0; j < rec.size(); ++j)
                worst = std::max(worst, std::abs(rec[j] - closed[j]) /
                                            std::max(1e-300, std::abs(closed[j])));
        }
        add("obstruction.recurrence-vs-closed-form", worst, 1e-9,
            grid_detail + (opts.mutate_rho ? ", rho mutated" : ""));
    });

    guarded("obstruction.pipeline", [&] {
        double h0_norm = 0.0, c0_rec = 0.0, h0_orth = 0.0, moments = 0.0;
        double delta_rec = 0.0, h1_orth = 0.0, h1_consistency = 0.0, h1_isometry = 0.0;
        double routes = 0.0, gap_closed = 0.0;
        bool gap_positive = true;
        for (Complex a : grid) {
            const ObstructionReport r = build_report(a, opts.depth);
            for (const ObstructionCheck& c : r.checks) {
                if (c.name == "h0-norm-isometry") h0_norm = std::max(h0_norm, c.delta);
                if (c.name == "c0-recovered-from-norm") c0_rec = std::max(c0_rec, c.delta);
                if (c.name == "h0-orthogonal-residue2") h0_orth = std::max(h0_orth, c.delta);
                if (c.name == "cubic-moment-law") moments = std::max(moments, c.delta);
                if (c.name == "delta-recurrence") delta_rec = std::max(delta_rec, c.delta);
                if (c.name == "h1-orthogonal-residue0") h1_orth = std::max(h1_orth, c.delta);
                if (c.name == "h1-part-vs-f-consistency")
                    h1_consistency = std::max(h1_consistency, c.delta);
                if (c.name == "h1-isometry-requirement")
                    h1_isometry = std::max(h1_isometry, c.delta);
                if (c.name == "f-norm-routes") routes = std::max(routes, c.delta);
                if (c.name == "gap-closed-form") gap_closed = std::max(gap_closed, c.delta);
            }
            gap_positive = gap_positive && r.gap > 0.0;
        }
        add("obstruction.h0-norm-isometry", h0_norm, 1e-9, grid_detail);
        add("obstruction.c0-recovered-from-norm", c0_rec, 1e-10, grid_detail);
        add("obstruction.h0-orthogonal-residue2", h0_orth, 1e-9, grid_detail);
        add("obstruction.cubic-moment-law", moments, 1e-9, grid_detail);
        add("obstruction.delta-recurrence", delta_rec, 1e-10, grid_detail);
        add("obstruction.h1-orthogonal-residue0", h1_orth, 1e-9, grid_detail);
        add("obstruction.h1-part-vs-f-consistency", h1_consistency, 1e-8, grid_detail);
        add("obstruction.h1-isometry-requirement", h1_isometry, 1e-8, grid_detail);
        add("obstruction.f-norm-routes", routes, 1e-8, grid_detail);
        add("obstruction.gap-closed-form", gap_closed, 1e-10, grid_detail);
        add("obstruction.gap-positive", gap_positive ? 0.0 : 1.0, 0.5, grid_detail);
    });

    guarded("obstruction.phase-invariance", [&] {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
        const Complex a = std::polar(0.55, 1.1);
        const double base_gap = build_report(a, opts.depth).gap;
        double worst = 0.0;
        for (int i = 0; i < 16; ++i)
            worst = std::max(worst,
                             std::abs(build_report(a, opts.depth, angle(rng)).gap - base_gap));
        add("obstruction.phase-invariance", worst, 1e-12, "16 random phases of c0");
    });

    guarded("obstruction.verdict-table", [&] {
        int mismatches = 0;
        const auto expect = [&mismatches](const MoebiusMap& phi, VerdictKind kind) {
            if (verdict(phi).kind != kind) ++mismatches;
        };
        expect(rotation(std::polar(1.0, kPi / 7.0)), VerdictKind::ComplexSymmetric_Rotation);
        expect(involution(0.5), VerdictKind::ComplexSymmetric_OrderTwo);
        expect(MoebiusMap(1.0, 0.5, 0.5, 1.0), VerdictKind::Not_NoInteriorFixedPoint);
        expect(build_elliptic(0.5, omega), VerdictKind::Not_EllipticOrderThree);
        expect(build_elliptic(0.3, Complex(0.0, 1.0)), VerdictKind::Not_EllipticOrderFourPlus);
        expect(build_elliptic(0.3, std::polar(1.0, 1.0)), VerdictKind::Not_EllipticInfiniteOrder);
        add("obstruction.verdict-table", mismatches, 0.0, "six canonical symbols");
    });

    return results;
}

}  // namespace hs
