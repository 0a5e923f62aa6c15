#include "planevar/search.hpp"

#include <algorithm>
#include <cmath>

namespace planevar {

double cvar(const FunctionTable& f, const PointList& S) {
    if (S.empty()) throw ValidationError("point list must be nonempty");
    double sum = 0.0;
    std::complex<double> prev = f.value_at(S[0]);
    for (std::size_t i = 1; i < S.size(); ++i) {
        std::complex<double> cur = f.value_at(S[i]);
        sum += std::abs(cur - prev);
        prev = cur;
    }
    return sum;
}

double ratio(const FunctionTable& f, const PointList& S) {
    double num = cvar(f, S);
    return num / vf_max(S).value;
}

AmplifiedList amplify_cycle(const FunctionTable& f, const PointList& cycle, int repetitions) {
    if (cycle.empty()) throw ValidationError("cycle must be nonempty");
    if (repetitions < 1) throw ValidationError("repetitions must be at least 1");
    {
        PointList distinct(cycle);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 2) {
            throw DegenerateCycle("cycle needs at least two distinct points");
        }
    }
    PointList list;
    list.reserve(1 + static_cast<std::size_t>(repetitions) * cycle.size());
    list.push_back(cycle[0]);
    for (int r = 0; r < repetitions; ++r) {
        for (std::size_t i = 1; i < cycle.size(); ++i) list.push_back(cycle[i]);
        list.push_back(cycle[0]);
    }
    double num = cvar(f, list);
    int vf = vf_max(list).value;
    return AmplifiedList{std::move(list), num / vf, vf};
}

namespace {

// Best list seen so far; ties resolve by shorter length, then lexicographic
// entry order, so the outcome does not depend on traversal order.
struct BestTracker {
    double value = -1.0;
    std::vector<int> seq;

    bool improves(double r, const std::vector<int>& s) const {
        if (r != value) return r > value;
        if (s.size() != seq.size()) return s.size() < seq.size();
        return std::lexicographical_compare(s.begin(), s.end(), seq.begin(), seq.end());
    }

    void offer(double r, const std::vector<int>& s) {
        if (improves(r, s)) {
            value = r;
            seq = s;
        }
    }
};

struct SignMatrix {
    // signs[r][i]: sign row r assigns to domain point i
    std::vector<std::vector<std::int8_t>> signs;
    std::size_t rows() const { return signs.size(); }
};

struct DfsState {
    const SignMatrix& mat;
    const std::vector<std::complex<double>>& vals;
    int m;
    int max_len;
    BestTracker& best;

    std::vector<int> seq;
    std::vector<std::int8_t> last;
    std::vector<int> count;
    double cv = 0.0;
    std::vector<std::vector<std::int8_t>> saved_last;
    std::vector<std::vector<int>> saved_count;
};

void dfs_extend(DfsState& st) {
    // Both orientations of a list are enumerated and offered: their true
    // ratios agree, but the float sums can differ in the last ulp, and the
    // maximum over both is what stays stable under relabelings.
    int vf = *std::max_element(st.count.begin(), st.count.end());
    st.best.offer(st.cv / vf, st.seq);
    int len = static_cast<int>(st.seq.size());
    if (len == st.max_len) return;

    int prev = st.seq.back();
    st.saved_last[len] = st.last;
    st.saved_count[len] = st.count;
    double saved_cv = st.cv;
    for (int j = 0; j < st.m; ++j) {
        if (j == prev) continue;
        for (std::size_t r = 0; r < st.mat.rows(); ++r) {
            int sign = st.mat.signs[r][j];
            int lastr = st.last[r];
            if (sign * lastr < 0 || (sign == 0 && lastr != 0)) ++st.count[r];
            st.last[r] = static_cast<std::int8_t>(sign);
        }
        st.cv = saved_cv + std::abs(st.vals[j] - st.vals[prev]);
        st.seq.push_back(j);
        dfs_extend(st);
        st.seq.pop_back();
        st.last = st.saved_last[len];
        st.count = st.saved_count[len];
        st.cv = saved_cv;
    }
}

void exhaustive_lists(const SignMatrix& mat, const std::vector<std::complex<double>>& vals,
                      int max_len, BestTracker& best) {
    int m = static_cast<int>(vals.size());
    DfsState st{mat, vals, m, max_len, best, {}, {}, {}, 0.0, {}, {}};
    st.last.resize(mat.rows());
    st.count.resize(mat.rows());
    st.saved_last.assign(static_cast<std::size_t>(max_len) + 1, {});
    st.saved_count.assign(static_cast<std::size_t>(max_len) + 1, {});
    for (int i = 0; i < m; ++i) {
        st.seq.assign(1, i);
        st.cv = 0.0;
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            int sign = mat.signs[r][i];
            st.last[r] = static_cast<std::int8_t>(sign);
            st.count[r] = (sign == 0) ? 1 : 0;
        }
        dfs_extend(st);
    }
}

struct BeamState {
    std::vector<std::int8_t> last;
    std::vector<int> count;
    double cv;
    std::vector<int> seq;
    double r;
};

void beam_lists(const SignMatrix& mat, const std::vector<std::complex<double>>& vals, int max_len,
                int width, BestTracker& best) {
    int m = static_cast<int>(vals.size());
    std::vector<BeamState> level;
    for (int i = 0; i < m; ++i) {
        BeamState s;
        s.last.resize(mat.rows());
        s.count.resize(mat.rows());
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            int sign = mat.signs[r][i];
            s.last[r] = static_cast<std::int8_t>(sign);
            s.count[r] = (sign == 0) ? 1 : 0;
        }
        s.cv = 0.0;
        s.seq = {i};
        s.r = 0.0;
        best.offer(0.0, s.seq);
        level.push_back(std::move(s));
    }

    auto rank = [](const BeamState& a, const BeamState& b) {
        if (a.r != b.r) return a.r > b.r;
        return a.seq < b.seq;
    };
    // Truncation extends through ratio ties, so the surviving set depends only
    // on the ratio values and never on how equal-ratio states happen to sort.
    auto truncate = [width](std::vector<BeamState>& states) {
        if (static_cast<int>(states.size()) <= width) return;
        std::size_t cut = static_cast<std::size_t>(width);
        while (cut < states.size() && states[cut].r == states[cut - 1].r) ++cut;
        states.resize(cut);
    };
    std::sort(level.begin(), level.end(), rank);
    truncate(level);

    for (int len = 1; len < max_len; ++len) {
        std::vector<BeamState> next;
        next.reserve(level.size() * static_cast<std::size_t>(m));
        for (const BeamState& s : level) {
            int prev = s.seq.back();
            for (int j = 0; j < m; ++j) {
                if (j == prev) continue;
                BeamState c = s;
                for (std::size_t r = 0; r < mat.rows(); ++r) {
                    int sign = mat.signs[r][j];
                    int lastr = c.last[r];
                    if (sign * lastr < 0 || (sign == 0 && lastr != 0)) ++c.count[r];
                    c.last[r] = static_cast<std::int8_t>(sign);
                }
                c.cv += std::abs(vals[j] - vals[prev]);
                c.seq.push_back(j);
                int vf = *std::max_element(c.count.begin(), c.count.end());
                c.r = c.cv / vf;
                best.offer(c.r, c.seq);
                next.push_back(std::move(c));
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end(), rank);
        truncate(next);
        level = std::move(next);
    }
}

// Extrapolates crossing counts of repeated cycles: after the first full pass the
// counter returns to the same boundary state, so every further pass adds the same
// increment. Candidates that could beat the current best are rebuilt as explicit
// lists and re-evaluated through the public entry points before being accepted.
void amplified_cycles(const SignMatrix& mat, const FunctionTable& f,
                      const std::vector<std::complex<double>>& vals, int max_reps,
                      BestTracker& best) {
    int m = static_cast<int>(vals.size());
    int max_support = std::min(m, 6);
    const auto& pts = f.domain().points();

    std::vector<int> c1(mat.rows()), c2(mat.rows());

    auto value_less = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto& va = vals[a[i]];
            const auto& vb = vals[b[i]];
            if (va.real() != vb.real()) return va.real() < vb.real();
            if (va.imag() != vb.imag()) return va.imag() < vb.imag();
        }
        return false;
    };
    auto value_equal = [&](const std::vector<int>& a, const std::vector<int>& b) {
        return !value_less(a, b) && !value_less(b, a);
    };

    auto evaluate_orientation = [&](const std::vector<int>& cycle_idx, double loop_sum) {
        std::size_t k = cycle_idx.size();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            CrossingCounter cc;
            cc.push(mat.signs[r][cycle_idx[0]]);
            for (std::size_t i = 1; i <= k; ++i) cc.push(mat.signs[r][cycle_idx[i % k]]);
            c1[r] = cc.count;
            for (std::size_t i = 1; i <= k; ++i) cc.push(mat.signs[r][cycle_idx[i % k]]);
            c2[r] = cc.count;
        }
        for (int n = 1; n <= max_reps; ++n) {
            int vf = 0;
            for (std::size_t r = 0; r < mat.rows(); ++r) {
                vf = std::max(vf, c1[r] + (n - 1) * (c2[r] - c1[r]));
            }
            double screen = (static_cast<double>(n) * loop_sum) / vf;
            if (screen <= best.value) continue;

            std::vector<int> seq;
            seq.reserve(1 + k * static_cast<std::size_t>(n));
            seq.push_back(cycle_idx[0]);
            for (int rep = 0; rep < n; ++rep) {
                for (std::size_t i = 1; i <= k; ++i) seq.push_back(cycle_idx[i % k]);
            }
            PointList list;
            list.reserve(seq.size());
            for (int idx : seq) list.push_back(pts[static_cast<std::size_t>(idx)]);
            best.offer(ratio(f, list), seq);
        }
    };

    // Evaluates one cyclic class. The orientation (start and direction) is
    // picked by the lexicographically least value sequence, so repeated runs
    // over relabeled or transformed points walk the same value stream and
    // accumulate identical floats. All value-tied orientations are evaluated;
    // their crossing counts can differ even though the sums agree.
    auto consider_cycle = [&](const std::vector<int>& class_rep) {
        std::size_t k = class_rep.size();
        std::vector<std::vector<int>> oriented;
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t s = 0; s < k; ++s) {
                std::vector<int> o(k);
                for (std::size_t t = 0; t < k; ++t) {
                    std::size_t pos = dir == 0 ? (s + t) % k : (s + k - t) % k;
                    o[t] = class_rep[pos];
                }
                if (std::find(oriented.begin(), oriented.end(), o) == oriented.end()) {
                    oriented.push_back(std::move(o));
                }
            }
        }
        const std::vector<int>* least = &oriented.front();
        for (const auto& o : oriented) {
            if (value_less(o, *least)) least = &o;
        }

        double loop_sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            loop_sum += std::abs(vals[(*least)[(i + 1) % k]] - vals[(*least)[i]]);
        }
        // A line separating one cycle point from the rest crosses every period
        // twice, so no repetition count can push the ratio past half the loop
        // sum; a tie cannot displace a value the tracker already holds.
        if (0.5 * loop_sum <= best.value) return;

        for (const auto& o : oriented) {
            if (value_equal(o, *least)) evaluate_orientation(o, loop_sum);
        }
    };

    // Subsets in increasing bit order; one orientation per cyclic class, pinned
    // by the smallest member first and second entry below the last.
    for (int k = 2; k <= max_support; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<int> rest(idx.begin() + 1, idx.end());
            std::sort(rest.begin(), rest.end());
            do {
                if (k >= 3 && rest.front() > rest.back()) continue;
                std::vector<int> cycle_idx;
                cycle_idx.reserve(static_cast<std::size_t>(k));
                cycle_idx.push_back(idx[0]);
                cycle_idx.insert(cycle_idx.end(), rest.begin(), rest.end());
                consider_cycle(cycle_idx);
            } while (std::next_permutation(rest.begin(), rest.end()));

            int pos = k - 1;
            while (pos >= 0 && idx[pos] == m - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
}

}  // namespace

SearchOutcome search_sup(const FunctionTable& f, const SearchConfig& cfg) {
    if (cfg.max_list_length < 1) throw ValidationError("max_list_length must be at least 1");
    if (cfg.cycle_repetitions < 1) throw ValidationError("cycle_repetitions must be at least 1");
    if (cfg.beam_width < 0) throw ValidationError("beam_width must be nonnegative");

    const auto& pts = f.domain().points();
    int m = static_cast<int>(pts.size());

    LineFamily family(pts);
    SignMatrix mat;
    mat.signs.reserve(family.rows().size());
    for (const SignRow& row : family.rows()) mat.signs.push_back(row.signs);

    std::vector<std::complex<double>> vals(f.values());

    BestTracker best;
    if (cfg.beam_width == 0) {
        exhaustive_lists(mat, vals, cfg.max_list_length, best);
    } else {
        beam_lists(mat, vals, cfg.max_list_length, cfg.beam_width, best);
    }
    if (m >= 2) {
        amplified_cycles(mat, f, vals, cfg.cycle_repetitions, best);
    }

    PointList witness;
    witness.reserve(best.seq.size());
    for (int idx : best.seq) witness.push_back(pts[static_cast<std::size_t>(idx)]);
    return SearchOutcome{best.value, std::move(witness)};
}

}  // namespace planevar
