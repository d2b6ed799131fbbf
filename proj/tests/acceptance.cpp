// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.
// Pass --with-n5 to also build the full five-vertex census records.

#include "fixtures.hpp"
#include "oracles.hpp"

#include "timmp/census.hpp"
#include "timmp/coloring.hpp"
#include "timmp/dof_region.hpp"
#include "timmp/polyhedra.hpp"
#include "timmp/sic.hpp"
#include "timmp/tradeoff.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace timmp;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) {
                detail << what;
            }
            ok = false;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& name, Outcome& o, Clock::time_point t0) {
    const double s = seconds_since(t0);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << name << " (" << s << " s)";
    const std::string d = o.detail.str();
    if (!d.empty()) {
        std::cout << ": " << d;
    }
    std::cout << "\n";
    if (!o.ok) {
        ++g_failures;
    }
}

int jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8U));
}

std::vector<Digraph> census_upto(int n_max) {
    std::vector<Digraph> all;
    for (int n = 1; n <= n_max; ++n) {
        const auto c = generate_census(n, jobs());
        all.insert(all.end(), c.begin(), c.end());
    }
    return all;
}

void census_counts(bool with_n5) {
    const auto t0 = Clock::now();
    Outcome o;
    const std::vector<std::size_t> expected = {1, 3, 16, 218};
    for (int n = 1; n <= 4; ++n) {
        const auto got = generate_census(n, jobs()).size();
        o.require(got == expected[n - 1], "n=" + std::to_string(n) + " gave " + std::to_string(got));
    }
    o.require(seconds_since(t0) < 10.0, "n<=4 took longer than 10 s");
    if (with_n5) {
        const auto got = generate_census(5, jobs()).size();
        o.require(got == 9608, "n=5 gave " + std::to_string(got));
        if (o.ok) {
            o.detail << "n=5: 9608";
        }
    }
    report(1, "census counts", o, t0);
}

void reduction_to_six() {
    const auto t0 = Clock::now();
    Outcome o;
    const auto residual = reduction_pipeline(generate_census(4, jobs()));
    std::set<std::string> expected;
    for (const auto& d : fixtures::four_vertex_residuals()) {
        expected.insert(canonical_form(d).encoding);
    }
    o.require(residual.size() == 6, std::to_string(residual.size()) + " residual instances");
    o.require(std::vector<std::string>(expected.begin(), expected.end()) == residual,
              "residual set differs from the six reference digraphs");
    o.require(seconds_since(t0) < 30.0, "took longer than 30 s");
    report(2, "reduction of the four-vertex census", o, t0);
}

void three_vertex_certificates() {
    const auto t0 = Clock::now();
    Outcome o;
    const auto census = generate_census(3);
    o.require(census.size() == 16, "census size");
    for (const auto& d : census) {
        const std::string id = canonical_form(d).encoding;
        const auto region = dof_region(d);
        for (const auto& w : region.achievability) {
            o.require(w.integral && w.support_acyclic, id + ": extreme point " + point_str(w.point));
        }
        o.require(region.symmetric_certificate && region.symmetric_certificate->verified,
                  id + ": no verified convex certificate");
        o.require(symmetric_dof(d).status == DofStatus::optimal, id + ": status not optimal");
    }
    report(3, "three-vertex outer bound integrality", o, t0);
}

void exact_values() {
    const auto t0 = Clock::now();
    Outcome o;
    for (int k = 2; k <= 6; ++k) {
        const Rational v = fractional_dichromatic(fixtures::directed_cycle(k)).value;
        o.require(v == Rational(k, k - 1), "C_" + std::to_string(k) + " gave " + v.str());
    }
    o.require(fractional_dichromatic(fixtures::fig4a()).value == Rational(5, 2), "five-vertex example");
    for (const Digraph& d : {special_c52_digraph(), special_j3_digraph()}) {
        const std::string name = special_instance_name(d);
        o.require(fractional_dichromatic(d).value == Rational(5, 2), name + ": chi_Af");
        const auto s = symmetric_dof(d);
        o.require(s.achievable == Rational(2, 5), name + ": achievable " + s.achievable.str());
        o.require(s.status == DofStatus::linear_optimal, name + ": status " + to_string(s.status));
    }
    report(4, "exact fractional dichromatic values", o, t0);
}

void matrix_classification() {
    const auto t0 = Clock::now();
    Outcome o;
    for (int n = 3; n <= 8; ++n) {
        o.require(is_ideal(circulant(n, 2)).result == (n % 2 == 0), "circulant(" + std::to_string(n) + ",2)");
    }
    o.require(is_ideal(circulant(6, 3)).result, "circulant(6,3)");
    o.require(is_ideal(circulant(9, 3)).result, "circulant(9,3)");
    o.require(is_ideal(circulant(8, 4)).result, "circulant(8,4)");
    o.require(!is_ideal(projective(3)).result, "projective(3)");
    o.require(!is_ideal(fano()).result, "fano");
    const BinaryMatrix two_cycles({{1, 1, 1, 0}, {1, 0, 1, 1}});
    o.require(is_totally_unimodular(two_cycles).result, "two-cycle matrix not TU");
    const BinaryMatrix odd({{1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 0}, {0, 1, 0, 1, 0, 1}});
    o.require(!is_balanced(odd).result, "odd-hole matrix balanced");
    const auto ideal = is_ideal(odd);
    o.require(!ideal.result, "odd-hole matrix ideal");
    o.require(ideal.mni && ideal.mni->name == "circulant(3,2)", "missing circulant(3,2) witness");
    o.require(seconds_since(t0) < 60.0, "took longer than 60 s");
    report(5, "matrix classification", o, t0);
}

void local_equals_fractional(const std::vector<Digraph>& four) {
    const auto t0 = Clock::now();
    Outcome o;
    for (const auto& d : four) {
        o.require(local_fractional_dichromatic(d).value == fractional_dichromatic(d).value,
                  canonical_form(d).encoding);
    }
    report(6, "local fractional equals fractional on n=4", o, t0);
}

void four_vertex_statuses(const std::vector<Digraph>& four) {
    const auto t0 = Clock::now();
    Outcome o;
    const auto records = census_records(four, jobs());
    int gaps = 0;
    for (const auto& r : records) {
        if (r.status == DofStatus::gap) {
            ++gaps;
        }
        o.require(r.dsym_achievable == reciprocal(r.chi_af), r.id + ": achievable");
    }
    o.require(records.size() == 218, "record count");
    o.require(gaps == 0, std::to_string(gaps) + " gaps");
    const auto s = summarize(records);
    o.detail << (o.ok ? "" : "; ") << s.optimal << " optimal, " << s.linear_optimal << " linear_optimal";
    report(7, "n=4 symmetric DoF statuses", o, t0);
}

void triangular_tradeoff() {
    const auto t0 = Clock::now();
    Outcome o;
    const auto curve = tradeoff_curve(fixtures::triangular(4), 6, jobs());
    auto rate_at = [&](int p) {
        for (const auto& pt : curve) {
            if (pt.p == p) {
                return pt.r;
            }
        }
        return -1;
    };
    for (const auto& [p, r] : std::vector<std::pair<int, int>>{{0, 4}, {1, 3}, {2, 2}, {6, 1}}) {
        o.require(rate_at(p) == r, "r(" + std::to_string(p) + ") = " + std::to_string(rate_at(p)));
    }
    for (std::size_t i = 1; i < curve.size(); ++i) {
        o.require(curve[i].r <= curve[i - 1].r, "curve increases");
    }
    o.require(seconds_since(t0) < 60.0, "took longer than 60 s");
    report(8, "triangular tradeoff curve", o, t0);
}

void helpfulness() {
    const auto t0 = Clock::now();
    Outcome o;
    const Digraph d = fixtures::fig12();
    const auto h13 = passing_is_helpful(d, {1, 3});
    o.require(h13.helpful && *h13.helpful, "(1,3) not reported helpful");
    o.require(h13.minrank_before && h13.minrank_after && *h13.minrank_before == 3 && *h13.minrank_after == 2,
              "(1,3) rate not 1/3 -> 1/2");
    const auto h31 = passing_is_helpful(d, {3, 1});
    o.require(h31.helpful && !*h31.helpful, "(3,1) not reported unhelpful");
    o.require(h31.chordal_bipartite, "(3,1) verdict not from the chordal bipartite test");
    o.require(h31.minrank_after && *h31.minrank_after == 3, "(3,1) changes the rate");
    report(9, "helpful message passing", o, t0);
}

void oracle_equivalence(const std::vector<Digraph>& upto5) {
    const auto t0 = Clock::now();
    Outcome o;
    o.require(upto5.size() == 1 + 3 + 16 + 218 + 9608, "census size " + std::to_string(upto5.size()));
    for (const auto& d : upto5) {
        o.require(dichromatic_number(d).value == oracle::dichromatic(d), "chi_A on " + canonical_form(d).encoding);
    }
    std::mt19937 rng(2024);
    for (int k = 0; k < 200; ++k) {
        const Digraph d = oracle::random_digraph(6, 0.15 + 0.7 * (k % 10) / 9.0, rng);
        o.require(dichromatic_number(d).value == oracle::dichromatic(d), "chi_A on random n=6 digraph");
    }
    for (int k = 0; k < 100; ++k) {
        const auto p = oracle::random_polytope(2 + k % 4, 1 + k % 4, rng);
        o.require(enumerate_vertices(p) == oracle::vertices(p), "vertex enumeration on random polytope");
    }
    for (const auto& d : upto5) {
        if (d.size() > 4) {
            continue;
        }
        const auto c = cover_bounds(make_sic_instance(d));
        o.require(c.weakly_degenerate_cover >= fractional_dichromatic(d).value,
                  "weakly degenerate cover below chi_Af on " + canonical_form(d).encoding);
    }
    o.require(seconds_since(t0) < 300.0, "took longer than 5 min");
    report(10, "oracle equivalence", o, t0);
}

void schedule_simulation(const std::vector<Digraph>& upto4) {
    const auto t0 = Clock::now();
    Outcome o;
    for (const auto& d : upto4) {
        const auto frac = fractional_dichromatic(d);
        const auto sim = simulate_schedule(d, extract_schedule(frac.solution));
        o.require(sim.ok, "simulation failed on " + canonical_form(d).encoding);
        for (const auto& r : sim.rates) {
            o.require(r == reciprocal(frac.value), "rate mismatch on " + canonical_form(d).encoding);
        }
    }
    report(11, "schedule simulation on n<=4", o, t0);
}

void reducibility() {
    const auto t0 = Clock::now();
    Outcome o;
    const auto a = reduce_instance(make_sic_instance(fixtures::fig8a()));
    o.require(a.reduced == fixtures::bidirected_clique(4), "first example does not reduce to K_4");
    o.require(a.rate == Rational(4), "first example rate " + a.rate.str());
    const auto b = reduce_instance(make_sic_instance(fixtures::fig8b()));
    o.require(b.reduced == fixtures::bidirected_clique(2), "second example does not reduce to C_2");
    o.require(b.rate == Rational(2), "second example rate " + b.rate.str());
    report(12, "reducibility examples", o, t0);
}

void five_vertex_census() {
    const auto t0 = Clock::now();
    const auto records = census_records(generate_census(5, jobs()), jobs());
    std::cout << "INFO n=5 census: " << summary_text(summarize(records));
    std::cout << "INFO n=5 census took " << seconds_since(t0) << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
    bool with_n5 = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--with-n5") == 0) {
            with_n5 = true;
        } else {
            std::cerr << "usage: acceptance [--with-n5]\n";
            return 2;
        }
    }
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);

    const auto upto5 = census_upto(5);
    std::vector<Digraph> upto4;
    std::vector<Digraph> four;
    for (const auto& d : upto5) {
        if (d.size() <= 4) {
            upto4.push_back(d);
        }
        if (d.size() == 4) {
            four.push_back(d);
        }
    }

    census_counts(with_n5);
    reduction_to_six();
    three_vertex_certificates();
    exact_values();
    matrix_classification();
    local_equals_fractional(four);
    four_vertex_statuses(four);
    triangular_tradeoff();
    helpfulness();
    oracle_equivalence(upto5);
    schedule_simulation(upto4);
    reducibility();
    if (with_n5) {
        five_vertex_census();
    }
    std::cout << (g_failures == 0 ? "all criteria passed" : std::to_string(g_failures) + " criteria failed") << "\n";
    return g_failures == 0 ? 0 : 1;
}
