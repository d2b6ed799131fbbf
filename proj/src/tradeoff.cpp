#include "timmp/tradeoff.hpp"

#include "timmp/errors.hpp"
#include "timmp/sic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <thread>

namespace timmp {

int PassingPattern::free_count() const {
    return static_cast<int>(std::count(entries.begin(), entries.end(), PatternEntry::free));
}

PassingPattern make_passing_pattern(const Digraph& conflict, const std::vector<Arc>& passed) {
    const int n = conflict.size();
    Digraph x(n);
    for (const auto& [i, j] : passed) {
        if (i < 1 || j < 1 || i > n || j > n || !conflict.has_arc(i, j)) {
            throw ValidationError("passed pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not a conflict arc");
        }
        x.add_arc(i, j);
    }
    if (!x.is_acyclic()) {
        throw ValidationError("passed pairs must form an acyclic digraph");
    }
    PassingPattern pat;
    pat.n = n;
    pat.passed = x.arcs();
    pat.entries.assign(static_cast<std::size_t>(n) * n, PatternEntry::free);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            auto& e = pat.entries[(i - 1) * n + (j - 1)];
            if (i == j) {
                e = PatternEntry::one;
            } else if (conflict.has_arc(i, j) && !x.has_arc(i, j)) {
                e = PatternEntry::zero;
            }
        }
    }
    return pat;
}

int pattern_minrank(const PassingPattern& pat) {
    require_size(pat.n <= kPatternMaxVertices, "pattern_minrank", "n <= " + std::to_string(kPatternMaxVertices));
    require_size(pat.free_count() <= kPatternMaxFree, "pattern_minrank",
                 "free entries <= " + std::to_string(kPatternMaxFree));
    std::vector<VertexMask> free(pat.n, 0);
    for (int i = 1; i <= pat.n; ++i) {
        for (int j = 1; j <= pat.n; ++j) {
            if (pat.at(i, j) == PatternEntry::free) {
                free[i - 1] |= bit(j);
            }
        }
    }
    return minrank_pattern(pat.n, free);
}

namespace {

void combinations(int m, int k, int start, std::uint32_t current, std::vector<std::uint32_t>& out) {
    if (k == 0) {
        out.push_back(current);
        return;
    }
    for (int i = start; i + k <= m; ++i) {
        combinations(m, k - 1, i + 1, current | (std::uint32_t{1} << i), out);
    }
}

}  // namespace

std::vector<TradeoffPoint> tradeoff_curve(const Digraph& conflict, int p_max, int jobs) {
    const int n = conflict.size();
    require_size(n <= kPatternMaxVertices, "tradeoff_curve", "n <= " + std::to_string(kPatternMaxVertices));
    if (p_max < 0) {
        throw ValidationError("budget must be nonnegative");
    }
    jobs = std::max(1, jobs);
    const auto arcs = conflict.arcs();
    const int m = static_cast<int>(arcs.size());

    auto subset_arcs = [&](std::uint32_t s) {
        std::vector<Arc> out;
        for (int i = 0; i < m; ++i) {
            if ((s >> i) & 1U) {
                out.push_back(arcs[i]);
            }
        }
        return out;
    };
    auto acyclic = [&](std::uint32_t s) {
        Digraph x(n);
        for (int i = 0; i < m; ++i) {
            if ((s >> i) & 1U) {
                x.add_arc(arcs[i].first, arcs[i].second);
            }
        }
        return x.is_acyclic();
    };

    std::vector<TradeoffPoint> curve;
    int best_r = std::numeric_limits<int>::max();
    std::vector<Arc> best_witness;
    bool exhausted = false;
    for (int p = 0; p <= p_max; ++p) {
        if (!exhausted && p <= m && best_r > 1) {
            std::vector<std::uint32_t> subsets;
            combinations(m, p, 0, 0, subsets);
            subsets.erase(std::remove_if(subsets.begin(), subsets.end(), [&](std::uint32_t s) { return !acyclic(s); }),
                          subsets.end());
            if (subsets.empty()) {
                exhausted = true;
            } else {
                std::vector<int> ranks(subsets.size());
                auto work = [&](int worker) {
                    for (std::size_t k = worker; k < subsets.size(); k += jobs) {
                        ranks[k] = pattern_minrank(make_passing_pattern(conflict, subset_arcs(subsets[k])));
                    }
                };
                std::vector<std::thread> pool;
                for (int w = 1; w < jobs; ++w) {
                    pool.emplace_back(work, w);
                }
                work(0);
                for (auto& t : pool) {
                    t.join();
                }
                const auto it = std::min_element(ranks.begin(), ranks.end());
                if (*it < best_r) {
                    best_r = *it;
                    best_witness = subset_arcs(subsets[it - ranks.begin()]);
                }
            }
        }
        curve.push_back({p, best_r, best_witness});
    }
    return curve;
}

std::vector<TradeoffPoint> tradeoff_curve(const BipartiteTopology& t, int p_max, int jobs) {
    return tradeoff_curve(build_conflict_digraph(t), p_max, jobs);
}

std::string tradeoff_csv(const std::vector<TradeoffPoint>& curve) {
    std::ostringstream out;
    out << "p,r,witness_arcs\n";
    for (const auto& pt : curve) {
        out << pt.p << ',' << pt.r << ',';
        for (std::size_t k = 0; k < pt.witness.size(); ++k) {
            out << (k ? ";" : "") << pt.witness[k].first << "->" << pt.witness[k].second;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace timmp
