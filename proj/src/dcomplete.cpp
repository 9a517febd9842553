#include "taquin/dcomplete.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace taquin {

namespace {

struct DtdIntervalHit {
    int w, z;
    int m, n;                        // interval is isomorphic to D_{m,n}
    std::pair<int, int> incomparable;  // in parent ids
};

// Classifies every interval of p that is a double-tailed diamond.
std::vector<DtdIntervalHit> scan_dtd_intervals(const Poset& p) {
    std::vector<DtdIntervalHit> hits;
    for (int w = 0; w < p.size(); ++w)
        for (int z = 0; z < p.size(); ++z) {
            if (w == z || !p.less(w, z)) continue;
            Interval iv = interval(p, w, z);
            auto shape = classify_double_tailed(iv.poset);
            if (!shape) continue;
            auto pair_local = iv.poset.incomparable_pairs()[0];
            hits.push_back({w, z, shape->first, shape->second,
                            {iv.to_parent[pair_local.first], iv.to_parent[pair_local.second]}});
        }
    std::sort(hits.begin(), hits.end(),
              [](const DtdIntervalHit& a, const DtdIntervalHit& b) {
                  return std::tie(a.w, a.z) < std::tie(b.w, b.z);
              });
    return hits;
}

std::string pretty(const Poset& p, int v) { return p.display_name(v); }

}  // namespace

std::optional<DkTop> dk_interval_at_top(const Poset& p, int z) {
    if (z < 0 || z >= p.size()) throw std::invalid_argument("element id out of range");
    std::optional<DkTop> result;
    for (int w = 0; w < p.size(); ++w) {
        if (w == z || !p.less(w, z)) continue;
        auto shape = classify_double_tailed(interval(p, w, z).poset);
        if (!shape || shape->first != shape->second) continue;
        if (!result) {
            result = DkTop{w, shape->first + 1, false};
        } else {
            result->multiple = true;  // keeps the smallest w (scan is ascending)
        }
    }
    return result;
}

std::vector<DkMinusInterval> dk_minus_intervals(const Poset& p, int k) {
    if (k < 3) throw std::invalid_argument("d_k^- intervals require k >= 3");
    std::vector<DkMinusInterval> out;
    if (k == 3) {
        // Diamond minus top: an element with two incomparable upper covers.
        for (int w = 0; w < p.size(); ++w) {
            const auto& ups = p.upper_covers(w);
            for (std::size_t i = 0; i < ups.size(); ++i)
                for (std::size_t j = i + 1; j < ups.size(); ++j) {
                    int l = std::min(ups[i], ups[j]), r = std::max(ups[i], ups[j]);
                    if (p.incomparable(l, r)) out.push_back({w, std::nullopt, {l, r}});
                }
        }
        std::sort(out.begin(), out.end(), [](const DkMinusInterval& a, const DkMinusInterval& b) {
            return std::tie(a.w, a.incomparable) < std::tie(b.w, b.incomparable);
        });
        return out;
    }
    for (const auto& hit : scan_dtd_intervals(p))
        if (hit.m == k - 2 && hit.n == k - 1)
            out.push_back({hit.w, hit.z, hit.incomparable});
    return out;
}

DCompletenessVerdict is_d_complete(const Poset& p) {
    const auto hits = scan_dtd_intervals(p);
    const int max_k = p.longest_chain() + 1;

    for (int k = 3; k <= max_k; ++k) {
        std::vector<DtdIntervalHit> dk;
        for (const auto& h : hits)
            if (h.m == k - 1 && h.n == k - 1) dk.push_back(h);

        // Condition (1): every d_k^- interval completes upward to a d_k-interval.
        for (const auto& minus : dk_minus_intervals(p, k)) {
            bool completed = false;
            for (const auto& h : dk)
                if (h.w == minus.w) {
                    completed = true;
                    break;
                }
            if (!completed) {
                DCompleteViolation v;
                v.condition = 1;
                v.k = k;
                v.w = minus.w;
                v.y = minus.top ? *minus.top : minus.incomparable.first;
                std::ostringstream msg;
                msg << "d_" << k << "^- interval at " << pretty(p, minus.w);
                if (minus.top)
                    msg << " with top " << pretty(p, *minus.top);
                else
                    msg << " with covers " << pretty(p, minus.incomparable.first) << ", "
                        << pretty(p, minus.incomparable.second);
                msg << " has no completing d_" << k << "-interval";
                v.detail = msg.str();
                return {false, v};
            }
        }

        // Condition (2): the top of a d_k-interval covers nothing outside it.
        for (const auto& h : dk)
            for (int c : p.lower_covers(h.z))
                if (!p.leq(h.w, c)) {
                    DCompleteViolation v;
                    v.condition = 2;
                    v.k = k;
                    v.w = h.w;
                    v.z = h.z;
                    v.y = c;
                    std::ostringstream msg;
                    msg << "top " << pretty(p, h.z) << " of the d_" << k << "-interval ["
                        << pretty(p, h.w) << "," << pretty(p, h.z) << "] covers "
                        << pretty(p, c) << " outside the interval";
                    v.detail = msg.str();
                    return {false, v};
                }

        // Condition (3): no two d_k-intervals share a top.
        for (std::size_t i = 0; i < dk.size(); ++i)
            for (std::size_t j = i + 1; j < dk.size(); ++j)
                if (dk[i].z == dk[j].z) {
                    DCompleteViolation v;
                    v.condition = 3;
                    v.k = k;
                    v.w = dk[i].w;
                    v.y = dk[j].w;
                    v.z = dk[i].z;
                    std::ostringstream msg;
                    msg << "two d_" << k << "-intervals share top " << pretty(p, dk[i].z)
                        << ": bottoms " << pretty(p, dk[i].w) << " and " << pretty(p, dk[j].w);
                    v.detail = msg.str();
                    return {false, v};
                }
    }
    return {true, std::nullopt};
}

HookAssignment hook_lengths(const Poset& p) {
    return hook_lengths(p, default_linear_extension(p));
}

HookAssignment hook_lengths(const Poset& p, const Labeling& order) {
    auto verdict = is_d_complete(p);
    if (!verdict.is_d_complete)
        throw std::invalid_argument("hook lengths are defined for d-complete posets only: " +
                                    verdict.violation->detail);
    if (!is_linear_extension(p, order))
        throw std::invalid_argument("hook processing order must be a linear extension");

    std::vector<int> by_rank(p.size());
    for (int v = 0; v < p.size(); ++v) by_rank[order[v] - 1] = v;

    HookAssignment hooks(p.size(), 0);
    for (int v : by_rank) {
        auto top = dk_interval_at_top(p, v);
        if (!top) {
            hooks[v] = p.down_set_size(v);
            continue;
        }
        if (top->multiple)
            throw std::runtime_error("multiple d-intervals share a top in a d-complete poset");
        Interval iv = interval(p, top->w, v);
        auto pair_local = iv.poset.incomparable_pairs()[0];
        const int l = iv.to_parent[pair_local.first];
        const int r = iv.to_parent[pair_local.second];
        hooks[v] = hooks[l] + hooks[r] - hooks[top->w];
    }
    return hooks;
}

BigInt hook_count(const Poset& p) {
    HookAssignment hooks = hook_lengths(p);
    BigInt numerator = factorial(p.size());
    BigInt denominator = 1;
    for (int h : hooks) denominator *= h;
    if (numerator % denominator != 0)
        throw std::runtime_error("hook product does not divide |P|! (hook computation bug)");
    return numerator / denominator;
}

SeriesCoefficients p_partition_counts(const Poset& p, int max_degree) {
    if (p.size() > 8 || max_degree > 14)
        throw GuardError("p_partition_counts is guarded to |P| <= 8 and max_degree <= 14");
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");

    Labeling order = default_linear_extension(p);
    std::vector<int> top_down(p.size());
    for (int v = 0; v < p.size(); ++v) top_down[p.size() - order[v]] = v;

    SeriesCoefficients a(max_degree + 1, 0);
    std::vector<int> value(p.size(), 0);
    std::function<void(std::size_t, int)> assign = [&](std::size_t idx, int total) {
        if (idx == top_down.size()) {
            ++a[total];
            return;
        }
        const int v = top_down[idx];
        int low = 0;  // order-reversing: at least the value of anything above
        for (int u : p.upper_covers(v)) low = std::max(low, value[u]);
        for (int t = low; total + t <= max_degree; ++t) {
            value[v] = t;
            assign(idx + 1, total + t);
        }
    };
    assign(0, 0);
    return a;
}

SeriesCoefficients hook_series_coefficients(const HookAssignment& hooks, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    SeriesCoefficients a(max_degree + 1, 0);
    a[0] = 1;
    for (int h : hooks) {
        if (h <= 0) throw std::invalid_argument("hook lengths must be positive");
        for (int n = h; n <= max_degree; ++n) a[n] += a[n - h];
    }
    return a;
}

}  // namespace taquin
