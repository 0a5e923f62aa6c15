#include "planevar/candidates.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace planevar {

namespace {

std::vector<Point> distinct_sorted(const PointList& S) {
    std::vector<Point> out(S);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Key identifying a sign pattern up to a global flip.
std::vector<std::int8_t> flip_canonical(std::vector<std::int8_t> signs) {
    for (std::int8_t s : signs) {
        if (s > 0) return signs;
        if (s < 0) {
            for (auto& v : signs) v = static_cast<std::int8_t>(-v);
            return signs;
        }
    }
    return signs;
}

}  // namespace

LineFamily::LineFamily(std::vector<Point> support) : support_(std::move(support)) {
    if (support_.empty()) throw ValidationError("line family requires at least one point");
    if (support_.size() > 64) throw ValidationError("line family supports at most 64 points");
    for (std::size_t i = 1; i < support_.size(); ++i) {
        if (!(support_[i - 1] < support_[i])) {
            throw ValidationError("line family support must be sorted and distinct");
        }
    }

    std::vector<SignRow> rows;

    if (support_.size() == 1) {
        const Point& p = support_[0];
        Line through(Rat(0), Rat(1), -p.y);
        Line missing(Rat(0), Rat(1), -p.y - 1);
        rows.push_back(SignRow{PerturbedLine{through, NoPerturb{}}, {0}, 1});
        rows.push_back(
            SignRow{PerturbedLine{missing, NoPerturb{}}, {static_cast<std::int8_t>(side(missing, p))}, 0});
    } else {
        std::set<Line> bases;
        for (std::size_t i = 0; i < support_.size(); ++i) {
            for (std::size_t j = i + 1; j < support_.size(); ++j) {
                const Point& p = support_[i];
                const Point& q = support_[j];
                bases.insert(Line(q.y - p.y, p.x - q.x, -( (q.y - p.y) * p.x + (p.x - q.x) * p.y )));
            }
        }

        for (const Line& base : bases) {
            std::vector<std::int8_t> sides(support_.size());
            std::vector<Rat> along(support_.size());
            std::uint64_t on_mask = 0;
            std::vector<std::size_t> on_points;
            for (std::size_t k = 0; k < support_.size(); ++k) {
                int s = side(base, support_[k]);
                sides[k] = static_cast<std::int8_t>(s);
                if (s == 0) {
                    on_mask |= std::uint64_t{1} << k;
                    on_points.push_back(k);
                    along[k] = base.b() * support_[k].x - base.a() * support_[k].y;
                }
            }

            auto add = [&](Perturbation pert, std::vector<std::int8_t> signs) {
                rows.push_back(SignRow{PerturbedLine{base, std::move(pert)}, std::move(signs), on_mask});
            };

            add(NoPerturb{}, sides);

            for (int s : {-1, +1}) {
                std::vector<std::int8_t> signs(sides);
                for (std::size_t k : on_points) signs[k] = static_cast<std::int8_t>(s);
                add(TranslateToSide{s}, std::move(signs));
            }

            for (std::size_t r : on_points) {
                for (int s : {-1, +1}) {
                    std::vector<std::int8_t> signs(sides);
                    for (std::size_t k : on_points) {
                        if (k == r) {
                            signs[k] = 0;
                        } else {
                            signs[k] = static_cast<std::int8_t>(s * sign_of(along[k] - along[r]));
                        }
                    }
                    add(RotateAboutPoint{support_[r], s}, std::move(signs));
                }
                for (int rot : {-1, +1}) {
                    for (int nudge : {-1, +1}) {
                        std::vector<std::int8_t> signs(sides);
                        for (std::size_t k : on_points) {
                            if (k == r) {
                                signs[k] = static_cast<std::int8_t>(nudge);
                            } else {
                                signs[k] = static_cast<std::int8_t>(rot * sign_of(along[k] - along[r]));
                            }
                        }
                        add(RotateAndNudge{support_[r], rot, nudge}, std::move(signs));
                    }
                }
            }
        }
    }

    std::sort(rows.begin(), rows.end(),
              [](const SignRow& x, const SignRow& y) { return perturbed_line_less(x.line, y.line); });

    std::set<std::vector<std::int8_t>> seen;
    rows_.reserve(rows.size());
    for (auto& row : rows) {
        if (seen.insert(flip_canonical(row.signs)).second) {
            rows_.push_back(std::move(row));
        }
    }
}

std::size_t LineFamily::index_of(const Point& p) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), p);
    if (it == support_.end() || !(*it == p)) {
        throw PointNotInDomain("point (" + rat_to_string(p.x) + ", " + rat_to_string(p.y) +
                               ") is not in the family support");
    }
    return static_cast<std::size_t>(it - support_.begin());
}

std::vector<PerturbedLine> candidate_lines(const PointList& S) {
    if (S.empty()) throw ValidationError("point list must be nonempty");
    LineFamily family(distinct_sorted(S));
    std::vector<PerturbedLine> out;
    out.reserve(family.rows().size());
    for (const SignRow& row : family.rows()) out.push_back(row.line);
    return out;
}

namespace {

int count_against_row(const PointList& S, const std::vector<std::size_t>& sidx, const SignRow& row) {
    CrossingCounter counter;
    for (std::size_t i = 0; i < S.size(); ++i) counter.push(row.signs[sidx[i]]);
    return counter.count;
}

}  // namespace

VfMax vf_max(const PointList& S) {
    if (S.empty()) throw ValidationError("point list must be nonempty");
    LineFamily family(distinct_sorted(S));
    std::vector<std::size_t> sidx;
    sidx.reserve(S.size());
    for (const Point& p : S) sidx.push_back(family.index_of(p));

    const auto& rows = family.rows();
    VfMax best{count_against_row(S, sidx, rows[0]), rows[0].line};
    for (std::size_t r = 1; r < rows.size(); ++r) {
        int c = count_against_row(S, sidx, rows[r]);
        if (c > best.value) {
            best.value = c;
            best.witness = rows[r].line;
        }
    }
    return best;
}

int vf_max_value(const PointList& S, const LineFamily& family) {
    if (S.empty()) throw ValidationError("point list must be nonempty");
    std::vector<std::size_t> sidx;
    sidx.reserve(S.size());
    for (const Point& p : S) sidx.push_back(family.index_of(p));
    int best = 0;
    for (const SignRow& row : family.rows()) {
        best = std::max(best, count_against_row(S, sidx, row));
    }
    return best;
}

}  // namespace planevar
