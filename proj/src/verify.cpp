#include "planevar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <thread>

#include "planevar/bv_element.hpp"
#include "planevar/circle.hpp"
#include "planevar/point_list.hpp"
#include "planevar/report.hpp"
#include "planevar/sampling.hpp"

namespace planevar {

namespace {

using nlohmann::ordered_json;

double tol_for(double scale) { return 1e-9 * std::max(1.0, std::abs(scale)); }

ordered_json points_to_json(const PointList& S) {
    ordered_json arr = ordered_json::array();
    for (const Point& p : S) arr.push_back(ordered_json(point_to_json(p)));
    return arr;
}

ordered_json values_to_json(const std::vector<std::complex<double>>& vals) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vals) arr.push_back({v.real(), v.imag()});
    return arr;
}

struct Recorder {
    PropertyResult* res;

    void trial() { ++res->trials; }
    void fail(ordered_json witness) {
        ++res->violations;
        if (res->violations == 1) res->worst = std::move(witness);
    }
};

struct Ctx {
    Prng rng;
    Recorder rec;
    const CrossingHooks* hooks;
    std::uint64_t trials;
};

// The polyline fixture with five crossing segments against the horizontal
// axis; runs as trial zero of the oracle property so a broken counting rule
// is reported against a stable, human-checkable witness.
PointList zigzag_fixture() {
    return {Point{Rat(1), Rat(0)}, Point{Rat(2), Rat(1)},  Point{Rat(3), Rat(0)},
            Point{Rat(5), Rat(0)}, Point{Rat(4), Rat(1)},  Point{Rat(5), Rat(-1)},
            Point{Rat(6), Rat(-1)}, Point{Rat(7), Rat(1)}, Point{Rat(8), Rat(0)}};
}

PerturbedLine random_loose_line(Prng& rng) {
    Line base = random_line(rng);
    switch (rng.index(3)) {
        case 0: return PerturbedLine{base, NoPerturb{}};
        case 1: return PerturbedLine{base, TranslateToSide{+1}};
        default: return PerturbedLine{base, TranslateToSide{-1}};
    }
}

PointSet engine_domain(Prng& rng, std::size_t max_size) {
    switch (rng.index(4)) {
        case 0: return random_set(rng, 1, max_size);
        case 1: return random_collinear_set(rng, 2, max_size);
        case 2: return random_convex_set(rng, 4, std::max<std::size_t>(4, max_size));
        default: return random_triangle(rng);
    }
}

PointSet exact_domain(Prng& rng) {
    return rng.chance(0.5) ? random_collinear_set(rng, 2, 6) : random_triangle(rng);
}

double exact_var(const FunctionTable& f) {
    if (all_collinear(f.domain().points())) return exact_collinear(f);
    return triangle_exact(f);
}

FunctionTable map_values(const FunctionTable& f,
                         std::complex<double> (*op)(std::complex<double>)) {
    std::vector<std::complex<double>> vals;
    vals.reserve(f.size());
    for (const auto& v : f.values()) vals.push_back(op(v));
    return FunctionTable(f.domain(), std::move(vals));
}

FunctionTable zip_values(const FunctionTable& f, const FunctionTable& g,
                         std::complex<double> (*op)(std::complex<double>,
                                                    std::complex<double>)) {
    std::vector<std::complex<double>> vals;
    vals.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        vals.push_back(op(f.value_by_index(i), g.value_by_index(i)));
    }
    return FunctionTable(f.domain(), std::move(vals));
}

PointList random_domain_list(Prng& rng, const PointSet& sigma, std::size_t max_len) {
    std::size_t len = 1 + rng.index(max_len);
    PointList out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(sigma.at(rng.index(sigma.size())));
    return out;
}

const SearchConfig kSmallCfg{4, 8, 0, 0};

// --- geometry ---------------------------------------------------------------

void prop_side_scale(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        Line l = random_line(c.rng);
        Rat k = random_rational(c.rng, 4);
        while (k == 0) k = random_rational(c.rng, 4);
        Line scaled(l.a() * k, l.b() * k, l.c() * k);
        Point p = random_point(c.rng);
        int expected = sign_of(k) * side(l, p);
        int got = side(scaled, p);
        if (got != expected) {
            c.rec.fail({{"trial", t},
                        {"line", line_to_json(l)},
                        {"factor", rat_to_string(k)},
                        {"point", point_to_json(p)},
                        {"got", got},
                        {"expected", expected}});
        }
    }
}

void prop_projection(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        Line l = random_line(c.rng);
        Point p = random_point(c.rng);
        Point q = project_to_line(l, p);
        Rat step = random_rational(c.rng, 4);
        Point shifted{p.x + step * l.b(), p.y - step * l.a()};
        Point expected{q.x + step * l.b(), q.y - step * l.a()};
        bool ok = side(l, q) == 0 && project_to_line(l, q) == q &&
                  project_to_line(l, shifted) == expected;
        if (!ok) {
            c.rec.fail({{"trial", t},
                        {"line", line_to_json(l)},
                        {"point", point_to_json(p)},
                        {"projected", point_to_json(q)}});
        }
    }
}

void prop_affine_sides(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        AffineMap T = random_affine(c.rng);
        Line l = random_line(c.rng);
        Line lp = map_line(T, l);
        int eps = sign_of(T.det());
        for (int i = 0; i < 5; ++i) {
            Point p = random_point(c.rng);
            if (side(lp, T.apply(p)) != eps * side(l, p)) {
                c.rec.fail({{"trial", t},
                            {"line", line_to_json(l)},
                            {"mapped_line", line_to_json(lp)},
                            {"point", point_to_json(p)},
                            {"det_sign", eps}});
                break;
            }
        }
    }
}

// --- crossing counts ---------------------------------------------------------

void check_oracle_pair(Ctx& c, std::uint64_t t, const PointList& S, const PerturbedLine& l) {
    int a = c.hooks->on_line(S, l);
    int b = c.hooks->components(S, l);
    if (a != b) {
        c.rec.fail({{"trial", t},
                    {"points", points_to_json(S)},
                    {"line", perturbed_line_to_json(l)},
                    {"segment_rule_count", a},
                    {"component_count", b}});
    }
}

void prop_oracle_equality(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointList S = t == 0 ? zigzag_fixture() : random_list(c.rng, 9);
        if (t == 0) {
            check_oracle_pair(c, t, S, PerturbedLine{Line(Rat(0), Rat(1), Rat(0)), NoPerturb{}});
        }
        for (const PerturbedLine& l : candidate_lines(S)) {
            check_oracle_pair(c, t, S, l);
        }
        for (int i = 0; i < 3; ++i) check_oracle_pair(c, t, S, random_loose_line(c.rng));
    }
}

void prop_reversal(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointList S = random_list(c.rng, 9);
        PointList R = reverse(S);
        auto cands = candidate_lines(S);
        for (int i = 0; i < 3; ++i) {
            const PerturbedLine& l = cands[c.rng.index(cands.size())];
            if (vf_on_line(S, l) != vf_on_line(R, l)) {
                c.rec.fail({{"trial", t},
                            {"points", points_to_json(S)},
                            {"line", perturbed_line_to_json(l)}});
                break;
            }
        }
        if (vf_max(S).value != vf_max(R).value) {
            c.rec.fail({{"trial", t}, {"points", points_to_json(S)}});
        }
    }
}

void prop_insertion(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointList S = random_list(c.rng, 8);
        std::size_t pos = c.rng.index(S.size() + 1);
        Point w = c.rng.chance(0.5) ? S[c.rng.index(S.size())] : random_point(c.rng);
        int before = vf_max(S).value;
        int after = vf_max(insert(S, pos, w)).value;
        if (after < before) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(S)},
                        {"position", pos},
                        {"inserted", point_to_json(w)},
                        {"before", before},
                        {"after", after}});
        }
    }
}

void prop_dedup(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointList S = random_list(c.rng, 9);
        int full = vf_max(S).value;
        int reduced = vf_max(dedup_consecutive(S)).value;
        if (full != reduced) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(S)},
                        {"full", full},
                        {"deduped", reduced}});
        }
    }
}

void prop_projection_bound(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointList S = random_list(c.rng, 9);
        Line l = random_line(c.rng);
        int projected = vf_max(project_to_line(l, S)).value;
        int original = vf_max(S).value;
        if (projected > original) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(S)},
                        {"line", line_to_json(l)},
                        {"projected", projected},
                        {"original", original}});
        }
    }
}

void prop_vf_affine(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointList S = random_list(c.rng, 9);
        AffineMap T = random_affine(c.rng);
        int before = vf_max(S).value;
        int after = vf_max(apply_affine(T, S)).value;
        if (before != after) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(S)},
                        {"before", before},
                        {"after", after}});
        }
    }
}

void prop_range(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointList S = random_list(c.rng, 9);
        int v = vf_max(S).value;
        int hi = std::max<int>(static_cast<int>(S.size()) - 1, 1);
        if (v < 1 || v > hi) {
            c.rec.fail({{"trial", t}, {"points", points_to_json(S)}, {"vf", v}, {"max", hi}});
        }
    }
}

void prop_sampler(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointList S = random_list(c.rng, 9);
        int cap = vf_max(S).value;
        for (int i = 0; i < 100; ++i) {
            PerturbedLine l = random_loose_line(c.rng);
            int v = vf_on_line(S, l);
            if (v > cap) {
                c.rec.fail({{"trial", t},
                            {"points", points_to_json(S)},
                            {"line", perturbed_line_to_json(l)},
                            {"sampled", v},
                            {"enumerated", cap}});
                break;
            }
        }
    }
}

// --- search and bounds --------------------------------------------------------

void prop_sup_dominance(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = engine_domain(c.rng, 6);
        FunctionTable f = random_table(c.rng, sigma, c.rng.chance(0.5));
        VariationEstimate est = certified_estimate(f, kSmallCfg);
        if (est.lower > est.upper + tol_for(est.upper)) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"values", values_to_json(f.values())},
                        {"lower", est.lower},
                        {"upper", est.upper}});
            continue;
        }
        for (int i = 0; i < 10; ++i) {
            PointList L = random_domain_list(c.rng, sigma, 6);
            double r = ratio(f, L);
            if (r > est.upper + tol_for(est.upper)) {
                c.rec.fail({{"trial", t},
                            {"points", points_to_json(sigma.points())},
                            {"values", values_to_json(f.values())},
                            {"list", points_to_json(L)},
                            {"ratio", r},
                            {"upper", est.upper}});
                break;
            }
        }
    }
}

void prop_restriction(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = engine_domain(c.rng, 6);
        if (sigma.size() < 2) {
            continue;
        }
        FunctionTable f = random_table(c.rng, sigma, c.rng.chance(0.5));
        PointList sub;
        for (const Point& p : sigma.points()) {
            if (c.rng.chance(0.5)) sub.push_back(p);
        }
        if (sub.empty()) sub.push_back(sigma.at(c.rng.index(sigma.size())));
        PointSet inner{sub};
        VariationEstimate full = certified_estimate(f, kSmallCfg);
        VariationEstimate part = certified_estimate(f.restrict_to(inner), kSmallCfg);
        if (part.lower > full.upper + tol_for(full.upper)) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"values", values_to_json(f.values())},
                        {"subset", points_to_json(sub)},
                        {"part_lower", part.lower},
                        {"full_upper", full.upper}});
        }
    }
}

void prop_estimate_affine(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = engine_domain(c.rng, 6);
        FunctionTable f = random_table(c.rng, sigma, c.rng.chance(0.5));
        AffineMap T = random_affine(c.rng);
        PointList moved;
        moved.reserve(sigma.size());
        for (const Point& p : sigma.points()) moved.push_back(T.apply(p));
        FunctionTable g = FunctionTable::from_pairs(moved, f.values());
        VariationEstimate a = certified_estimate(f, kSmallCfg);
        VariationEstimate b = certified_estimate(g, kSmallCfg);
        bool same = a.lower == b.lower && a.upper == b.upper && a.exact == b.exact &&
                    a.upper_rule == b.upper_rule;
        if (!same) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"values", values_to_json(f.values())},
                        {"lower", {a.lower, b.lower}},
                        {"upper", {a.upper, b.upper}},
                        {"rule", {to_string(a.upper_rule), to_string(b.upper_rule)}}});
        }
    }
}

void prop_exact_subadditive(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = exact_domain(c.rng);
        bool real_only = c.rng.chance(0.5);
        FunctionTable f = random_table(c.rng, sigma, real_only);
        FunctionTable g = random_table(c.rng, sigma, real_only);
        std::complex<double> alpha(static_cast<double>(c.rng.range(-64, 64)) / 16.0,
                                   static_cast<double>(c.rng.range(-64, 64)) / 16.0);

        double vf_ = exact_var(f);
        double vg = exact_var(g);
        double scale_tol = tol_for(std::max(vf_, vg) * (1.0 + std::abs(alpha)) *
                                   (1.0 + f.sup_norm() + g.sup_norm()));

        auto plus = zip_values(f, g, [](std::complex<double> x, std::complex<double> y) {
            return x + y;
        });
        auto times = zip_values(f, g, [](std::complex<double> x, std::complex<double> y) {
            return x * y;
        });
        auto minus = zip_values(f, g, [](std::complex<double> x, std::complex<double> y) {
            return x - y;
        });
        std::vector<std::complex<double>> scaled_vals;
        for (const auto& v : f.values()) scaled_vals.push_back(alpha * v);
        FunctionTable scaled(sigma, std::move(scaled_vals));
        auto modulus = map_values(f, [](std::complex<double> x) {
            return std::complex<double>(std::abs(x), 0.0);
        });

        bool ok = exact_var(plus) <= vf_ + vg + scale_tol &&
                  exact_var(times) <= f.sup_norm() * vg + g.sup_norm() * vf_ + scale_tol &&
                  std::abs(exact_var(scaled) - std::abs(alpha) * vf_) <= scale_tol &&
                  std::abs(vf_ - vg) <= exact_var(minus) + scale_tol &&
                  exact_var(modulus) <= vf_ + scale_tol;
        if (!ok) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"f", values_to_json(f.values())},
                        {"g", values_to_json(g.values())},
                        {"alpha", {alpha.real(), alpha.imag()}}});
        }
    }
}

void prop_indicator(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = random_set(c.rng, 2, 8);
        std::size_t zi = static_cast<std::size_t>(t) % sigma.size();
        std::vector<std::complex<double>> vals(sigma.size(), 0.0);
        vals[zi] = 1.0;
        FunctionTable chi(sigma, std::move(vals));
        VariationEstimate est = certified_estimate(chi, kSmallCfg);
        if (est.upper > 2.0 + 1e-9 || est.lower < 1.0 - 1e-9) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"marked", zi},
                        {"lower", est.lower},
                        {"upper", est.upper}});
        }
    }
}

void prop_config_monotone(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = engine_domain(c.rng, 5);
        FunctionTable f = random_table(c.rng, sigma, c.rng.chance(0.5));
        SearchConfig lo{1 + static_cast<int>(c.rng.index(3)),
                        1 + static_cast<int>(c.rng.index(6)), 0, 0};
        SearchConfig hi{lo.max_list_length + static_cast<int>(c.rng.index(3)),
                        lo.cycle_repetitions + static_cast<int>(c.rng.index(6)), 0, 0};
        double a = search_sup(f, lo).lower;
        double b = search_sup(f, hi).lower;
        if (b < a) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"values", values_to_json(f.values())},
                        {"small", a},
                        {"large", b}});
        }
    }
}

void prop_triangle_ceiling(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = random_triangle(c.rng);
        FunctionTable f = random_table(c.rng, sigma, c.rng.chance(0.5));
        double ceiling = triangle_exact(f);
        SearchConfig cfg{5, 12, 0, 0};
        double searched = search_sup(f, cfg).lower;
        bool ok = searched <= ceiling + tol_for(ceiling);
        for (int i = 0; ok && i < 10; ++i) {
            ok = ratio(f, random_domain_list(c.rng, sigma, 6)) <= ceiling + tol_for(ceiling);
        }
        if (!ok) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"values", values_to_json(f.values())},
                        {"searched", searched},
                        {"ceiling", ceiling}});
        }
    }
}

// --- normed algebra ------------------------------------------------------------

void prop_norm_inequalities(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = exact_domain(c.rng);
        bool real_only = c.rng.chance(0.5);
        BVElement f(random_table(c.rng, sigma, real_only), kSmallCfg);
        BVElement g(random_table(c.rng, sigma, real_only), kSmallCfg);
        std::complex<double> alpha(static_cast<double>(c.rng.range(-64, 64)) / 16.0,
                                   static_cast<double>(c.rng.range(-64, 64)) / 16.0);

        auto norm_of = [](const BVElement& e) {
            return e.table().sup_norm() + exact_var(e.table());
        };
        double nf = norm_of(f);
        double ng = norm_of(g);
        double slack = tol_for((1.0 + nf) * (1.0 + ng) * (1.0 + std::abs(alpha)));

        bool ok = norm_of(add(f, g)) <= nf + ng + slack &&
                  norm_of(mul(f, g)) <= nf * ng + slack &&
                  std::abs(norm_of(scale(alpha, f)) - std::abs(alpha) * nf) <= slack;
        if (!ok) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"f", values_to_json(f.table().values())},
                        {"g", values_to_json(g.table().values())},
                        {"alpha", {alpha.real(), alpha.imag()}}});
        }
    }
}

void prop_re_im_split(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = exact_domain(c.rng);
        FunctionTable f = random_table(c.rng, sigma, false);
        FunctionTable re = map_values(f, [](std::complex<double> v) {
            return std::complex<double>(v.real(), 0.0);
        });
        FunctionTable im = map_values(f, [](std::complex<double> v) {
            return std::complex<double>(v.imag(), 0.0);
        });
        double lf = certified_estimate(f, kSmallCfg).lower;
        double lre = certified_estimate(re, kSmallCfg).lower;
        double lim = certified_estimate(im, kSmallCfg).lower;
        if (lre > lf || lim > lf) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"values", values_to_json(f.values())},
                        {"full", lf},
                        {"re", lre},
                        {"im", lim}});
        }
    }
}

void prop_lattice(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        PointSet sigma = engine_domain(c.rng, 6);
        BVElement f(random_table(c.rng, sigma, true), kSmallCfg);
        BVElement g(random_table(c.rng, sigma, true), kSmallCfg);
        BVElement hi = lattice_max(f, g);
        BVElement lo = lattice_min(f, g);
        bool ok = true;
        for (std::size_t i = 0; ok && i < sigma.size(); ++i) {
            double fv = f.table().value_by_index(i).real();
            double gv = g.table().value_by_index(i).real();
            double top = hi.table().value_by_index(i).real();
            double bot = lo.table().value_by_index(i).real();
            ok = top + bot == fv + gv && top == 0.5 * (fv + gv + std::abs(fv - gv)) &&
                 bot == 0.5 * (fv + gv - std::abs(fv - gv));
        }
        if (!ok) {
            c.rec.fail({{"trial", t},
                        {"points", points_to_json(sigma.points())},
                        {"f", values_to_json(f.table().values())},
                        {"g", values_to_json(g.table().values())}});
        }
    }
}

// --- circle and relabeling -----------------------------------------------------

CircleSample random_circle_sample(Prng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::size_t interior = rng.index(5);
        std::vector<Rat> angles;
        angles.push_back(Rat(0));
        std::vector<int> picks;
        while (picks.size() < interior) {
            int k = 1 + static_cast<int>(rng.index(15));
            if (std::find(picks.begin(), picks.end(), k) == picks.end()) picks.push_back(k);
        }
        std::sort(picks.begin(), picks.end());
        for (int k : picks) angles.push_back(Rat(k, 8));
        angles.push_back(Rat(2));

        auto vals = random_values(rng, angles.size(), false);
        vals.back() = vals.front();
        try {
            return CircleSample(std::move(angles), std::move(vals));
        } catch (const AmbiguousGeometry&) {
            continue;
        }
    }
    throw ValidationError("could not draw a nondegenerate circle sample");
}

void prop_circle_sandwich(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        CircleSample sample = random_circle_sample(c.rng);
        CircleComparison cc = circle_compare(sample, kSmallCfg);
        if (!cc.upper_within_bg || !cc.bg_within_doubled) {
            ordered_json angles = ordered_json::array();
            for (const Rat& a : sample.angles_pi()) angles.push_back(rat_to_string(a));
            c.rec.fail({{"trial", t},
                        {"angles_pi", angles},
                        {"values", values_to_json(sample.values())},
                        {"var_bg", cc.var_bg},
                        {"upper", cc.interval.upper},
                        {"amplified", cc.amplified_lower}});
        }
    }
}

void prop_relabel(Ctx& c) {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        c.rec.trial();
        std::size_t k = 3 + c.rng.index(3);
        PointSet s1 = random_convex_set(c.rng, k, k);
        PointSet s2 = random_convex_set(c.rng, k, k);
        BVElement f(random_table(c.rng, s1, c.rng.chance(0.5)), kSmallCfg);
        BVElement g = relabel_convex(f, s2);
        const VariationEstimate& a = f.norm_estimate();
        const VariationEstimate& b = g.norm_estimate();
        PolygonBounds pa = polygon_bounds(f.table());
        PolygonBounds pb = polygon_bounds(g.table());
        bool same = a.lower == b.lower && a.upper == b.upper && a.exact == b.exact &&
                    a.upper_rule == b.upper_rule && pa.lower == pb.lower &&
                    pa.upper == pb.upper;
        if (!same) {
            c.rec.fail({{"trial", t},
                        {"source", points_to_json(s1.points())},
                        {"target", points_to_json(s2.points())},
                        {"values", values_to_json(f.table().values())},
                        {"lower", {a.lower, b.lower}},
                        {"upper", {a.upper, b.upper}}});
        }
    }
}

struct PropertyEntry {
    const char* name;
    const char* group;
    const char* statement;
    void (*run)(Ctx&);
};

const PropertyEntry kRegistry[] = {
    {"side-scale-invariance", "geom",
     "side(l, p) is unchanged when (a, b, c) is scaled by a positive rational and flips "
     "when scaled by a negative one",
     prop_side_scale},
    {"projection-idempotence", "geom",
     "projecting onto a line is idempotent, lands on the line, and commutes with "
     "translations along the line",
     prop_projection},
    {"affine-sidedness", "geom",
     "an invertible affine map carries lines to lines and multiplies every side sign by "
     "the sign of its determinant",
     prop_affine_sides},
    {"crossing-oracle-equality", "vf",
     "the segment-rule crossing count equals the component count for every list and line",
     prop_oracle_equality},
    {"reversal-invariance", "vf",
     "reversing a list changes neither per-line crossing counts nor the maximum",
     prop_reversal},
    {"insertion-monotonicity", "vf",
     "inserting a point anywhere never lowers the maximum crossing count", prop_insertion},
    {"consecutive-dedup", "vf",
     "collapsing consecutive duplicates preserves the maximum crossing count", prop_dedup},
    {"projection-inequality", "vf",
     "projecting a list onto any line never raises the maximum crossing count",
     prop_projection_bound},
    {"affine-invariance", "vf",
     "the maximum crossing count is invariant under invertible affine maps", prop_vf_affine},
    {"range-bounds", "vf",
     "a list of n+1 points has maximum crossing count between 1 and max(n, 1)", prop_range},
    {"sampler-never-beats-enumerator", "vf",
     "no randomly drawn line yields more crossings than the enumerated maximum",
     prop_sampler},
    {"sup-dominance", "engine",
     "no evaluated list ratio exceeds the certified upper bound", prop_sup_dominance},
    {"restriction-monotonicity", "engine",
     "restricting the domain never lifts the certified lower above the full domain's upper",
     prop_restriction},
    {"estimate-affine-invariance", "engine",
     "certified bounds are bit-identical under invertible rational affine maps",
     prop_estimate_affine},
    {"exact-subadditivity", "engine",
     "on exactly solvable domains, variation respects the sum, product, scaling, "
     "difference, and modulus inequalities",
     prop_exact_subadditive},
    {"indicator-bounds", "engine",
     "a single-point indicator has certified upper at most 2 and searched lower at least "
     "1 on domains with two or more points",
     prop_indicator},
    {"config-monotonicity", "engine",
     "raising the list depth or repetition limit never lowers the searched bound",
     prop_config_monotone},
    {"triangle-ceiling", "engine",
     "no evaluated ratio on three points in general position exceeds the closed-form value",
     prop_triangle_ceiling},
    {"norm-inequalities", "algebra",
     "the norm is subadditive and submultiplicative, and scales with |alpha|, on exactly "
     "solvable domains",
     prop_norm_inequalities},
    {"real-imaginary-split", "algebra",
     "the certified lower bound of f dominates those of its real and imaginary parts",
     prop_re_im_split},
    {"lattice-identities", "algebra",
     "pointwise max and min obey the half-sum identities exactly on grid-valued inputs",
     prop_lattice},
    {"circle-sandwich", "circle",
     "the planar upper bound never exceeds the circle variation, which the amplified "
     "lower bound recovers within the factor 2(2N+1)/N",
     prop_circle_sandwich},
    {"relabel-isometry", "circle",
     "transporting values to another convex position of the same size preserves every "
     "certified number bit-for-bit",
     prop_relabel},
};

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.violations == 0; });
}

VerificationReport verify_suite(std::uint64_t seed, std::uint64_t trials,
                                const std::string& suite, const CrossingHooks& hooks) {
    if (trials < 1) throw ValidationError("trials must be at least 1");
    std::string group;
    if (suite != "all") {
        if (suite.size() <= 5 || suite.substr(suite.size() - 5) != "-only") {
            throw ValidationError("suite must be \"all\" or \"<group>-only\"");
        }
        group = suite.substr(0, suite.size() - 5);
        bool known = std::any_of(std::begin(kRegistry), std::end(kRegistry),
                                 [&](const PropertyEntry& e) { return group == e.group; });
        if (!known) throw ValidationError("unknown property group: " + group);
    }

    VerificationReport report;
    report.seed = seed;
    report.trials_per_property = trials;
    report.suite = suite;

    for (const PropertyEntry& entry : kRegistry) {
        if (!group.empty() && group != entry.group) continue;
        PropertyResult res;
        res.name = entry.name;
        res.statement = entry.statement;
        res.group = entry.group;
        res.worst = nullptr;
        Ctx ctx{Prng(derive_seed(seed, entry.name)), Recorder{&res}, &hooks, trials};
        entry.run(ctx);
        report.properties.push_back(std::move(res));
    }
    return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    ordered_json out;
    out["seed"] = report.seed;
    out["trials_per_property"] = report.trials_per_property;
    out["suite"] = report.suite;
    out["passed"] = report.passed();
    ordered_json props = ordered_json::array();
    for (const PropertyResult& p : report.properties) {
        props.push_back({{"name", p.name},
                         {"statement", p.statement},
                         {"group", p.group},
                         {"trials", p.trials},
                         {"violations", p.violations},
                         {"worst", p.worst}});
    }
    out["properties"] = std::move(props);
    return out;
}

unsigned effective_thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("VARIATION_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<unsigned>(std::min<unsigned long>(v, hw));
        }
    }
    return hw;
}

}  // namespace planevar
