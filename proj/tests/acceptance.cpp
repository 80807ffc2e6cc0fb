// One PASS/FAIL line per acceptance criterion.
// Criteria 8 and 9 are known to fail as stated; the process exits nonzero only when some
// criterion's outcome differs from the recorded expectation.

#include <chrono>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"

using namespace hibi;

namespace {

int unexpected = 0;

void report(int n, const std::string& title, bool pass, bool expect_pass, const std::string& detail) {
    std::cout << "criterion " << n << " (" << title << "): " << (pass ? "PASS" : "FAIL") << "  "
              << detail << "\n";
    if (pass != expect_pass) {
        ++unexpected;
        std::cout << "  unexpected outcome, expected " << (expect_pass ? "PASS" : "FAIL") << "\n";
    }
}

void info(const std::string& s) { std::cout << "  info: " << s << "\n"; }

std::string join(const std::vector<long>& xs) {
    std::string s;
    for (long x : xs) s += (s.empty() ? "" : "/") + std::to_string(x);
    return s;
}

std::vector<long> minimal(const std::vector<GradedBettiRow>& rows) {
    std::vector<long> out;
    for (auto& r : rows) out.push_back(r.minimal_generators);
    return out;
}

std::vector<Lattice> census_and_grids() {
    auto all = fixtures::census(9);
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 3; ++n) all.push_back(grid(m, n));
    return all;
}

// coefficient, one-based variable, one-based generator pair
ModuleElement elem(const HibiIdeal& I, std::vector<std::tuple<int, int, int, int>> ts) {
    std::vector<ModuleTerm> out;
    for (auto [c, v, a, b] : ts) {
        int g = I.index_of(a - 1, b - 1);
        if (g < 0) throw Error(ErrorKind::BadInput, "pair is comparable");
        out.push_back({c, Monomial::var(v - 1), g});
    }
    return make_element(I.schreyer(), std::move(out));
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    auto g = grid_betti(2, 3);
    auto L = fixtures::labelled_grid23();
    HibiIdeal I(L);
    auto p = planar_betti(I);
    auto rows = graded_betti_oracle(I, 6);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto m = minimal(rows);
    bool ok = g.strip == 36 && g.l == 8 && g.box == 8 && g.total == 52 && p.nS == 36 && p.nL == 8 &&
              p.nB == 8 && p.nD == 0 && m == std::vector<long>{52, 0, 0, 0} && secs < 60;
    std::ostringstream d;
    d << "strip=" << g.strip << " L=" << g.l << " box=" << g.box << " total=" << g.total
      << "; planar formula " << to_string(p) << "; oracle degrees 3-6 " << join(m) << "; " << secs
      << " s";
    report(1, "worked example grid(2,3)", ok, true, d.str());
}

void criterion2() {
    auto L = fixtures::fig_ex();
    HibiIdeal I(L);
    auto s1 = elem(I, {{1, 5, 2, 3}, {-1, 3, 2, 5}, {1, 1, 4, 5}});
    auto s2 = elem(I, {{-1, 6, 2, 3}, {1, 4, 2, 5}, {-1, 2, 4, 5}});
    int strips = 0;
    bool m1 = false, m2 = false;
    for (auto& t : typed_generators(I)) {
        if (family(t.kind) != "strip") continue;
        ++strips;
        m1 = m1 || same_up_to_sign(t.element, s1);
        m2 = m2 || same_up_to_sign(t.element, s2);
    }
    auto m = minimal(graded_betti_oracle(I, 5));
    bool ok = strips == 2 && m1 && m2 && m == std::vector<long>{2, 0, 0};
    report(2, "strip generators of grid(1,2)", ok, true,
           std::to_string(strips) + " strip elements, match S1 " + (m1 ? "yes" : "no") +
               ", match S2 " + (m2 ? "yes" : "no") + "; oracle degrees 3-5 " + join(m));
}

void criterion3() {
    std::size_t lattices = 0, pairs = 0, failures = 0;
    for (auto& L : census_and_grids()) {
        HibiIdeal I(L);
        ++lattices;
        try {
            pairs += buchberger_check(I).pairs_checked;
        } catch (const Error& e) {
            ++failures;
            info(e.what());
        }
    }
    report(3, "Groebner certificate", failures == 0, true,
           std::to_string(lattices) + " lattices, " + std::to_string(pairs) + " S-pairs, " +
               std::to_string(failures) + " failures");
}

void criterion4() {
    std::size_t lattices = 0, elements = 0, bad_phi = 0, bad_rank = 0;
    for (auto& L : census_and_grids()) {
        HibiIdeal I(L);
        if (I.size() < 2) continue;
        ++lattices;
        std::vector<ModuleElement> typed;
        for (auto& t : typed_generators(I)) {
            ++elements;
            if (!phi(I.ring(), t.element, I.polys()).is_zero()) ++bad_phi;
            typed.push_back(t.element);
        }
        for (auto& r : graded_betti_oracle(I, 4))
            if (span_rank(I, typed, r.degree) != static_cast<std::size_t>(r.kernel_dim)) {
                ++bad_rank;
                info(lattice_hash(L) + " degree " + std::to_string(r.degree) + " rank mismatch");
            }
    }
    report(4, "typed completeness", bad_phi == 0 && bad_rank == 0, true,
           std::to_string(lattices) + " lattices, " + std::to_string(elements) +
               " typed elements over QQ, phi failures " + std::to_string(bad_phi) +
               ", rank mismatches " + std::to_string(bad_rank));
}

void criterion5() {
    std::vector<std::pair<int, int>> dims;
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 3; ++n) dims.emplace_back(m, n);
    dims.emplace_back(1, 4);
    dims.emplace_back(1, 5);
    bool ok = true;
    std::string d;
    for (auto [m, n] : dims) {
        auto L = grid(m, n);
        HibiIdeal I(L);
        long oracle = betti_total(graded_betti_oracle(I, 5));
        long long formula = grid_betti(m, n).total;
        ok = ok && oracle == formula;
        d += (d.empty() ? "" : " ") + std::to_string(m) + "x" + std::to_string(n) + ":" +
             std::to_string(formula) + (oracle == formula ? "=" : "!=") + std::to_string(oracle);
    }
    report(5, "grid formula vs oracle", ok, true, d);
}

void criterion6() {
    bool ok = true;
    std::string d;
    int grids = 0;
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 3; ++n) {
            auto L = grid(m, n);
            HibiIdeal I(L);
            auto v = linearity_by_k(L);
            bool lin = is_linear_first_syzygy(I, 5);
            ok = ok && v.k == 1 && v.verdict == Verdict::Linear && lin;
            ++grids;
        }
    d += std::to_string(grids) + " grids linear (k=1)";

    auto D = fixtures::fig_d();
    HibiIdeal ID(D);
    auto vd = linearity_by_k(D);
    long b14 = betti_at(graded_betti_oracle(ID, 5), 4);
    ok = ok && vd.verdict == Verdict::Nonlinear && b14 >= 1 && !is_linear_first_syzygy(ID, 5);
    d += "; stacked diamonds k=" + std::to_string(vd.k) + " beta_1,4=" + std::to_string(b14);

    struct Shape {
        int A, B, p, q;
    };
    for (auto s : std::vector<Shape>{{2, 2, 1, 1}, {3, 2, 1, 1}, {3, 3, 2, 1}, {3, 3, 1, 2},
                                     {4, 3, 2, 2}, {4, 4, 2, 2}, {5, 4, 2, 2}}) {
        auto L = fixtures::l3(s.A, s.B, s.p, s.q);
        HibiIdeal I(L);
        auto v = linearity_by_k(L);
        bool lin = is_linear_first_syzygy(I, 5, PrimeField{});
        bool gap1 = v.gap_meet == 1 || v.gap_join == 1;
        bool both2 = v.gap_meet >= 2 && v.gap_join >= 2;
        bool agree = v.verdict == Verdict::Conditional && (gap1 ? lin : true) && (both2 ? !lin : true) &&
                     v.predicted_linear == lin;
        ok = ok && agree;
        d += "; L3(" + std::to_string(s.A) + "," + std::to_string(s.B) + "," + std::to_string(s.p) +
             "," + std::to_string(s.q) + ") gaps " + std::to_string(v.gap_meet) + "," +
             std::to_string(v.gap_join) + " " + (lin ? "linear" : "nonlinear");
    }
    report(6, "linearity by k", ok, true, d);
}

void criterion7() {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        auto L = grid(1, n);
        auto ps = incomparable_pairs(L);
        long long direct = 0;
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                int common = (ps[i].a == ps[j].a) + (ps[i].a == ps[j].b) + (ps[i].b == ps[j].a) +
                             (ps[i].b == ps[j].b);
                direct += common == 1;
            }
        ok = ok && direct == strip_1d(n);
    }
    for (int n = 3; n <= 20; ++n)
        ok = ok && strip_1d(n) == 2 * strip_1d(n - 1) - strip_1d(n - 2) + 2 * (n - 1);
    report(7, "T(n) enumeration and recurrence", ok, true,
           "direct count n<=8, recurrence 3<=n<=20, T(8)=" + std::to_string(strip_1d(8)));
}

template <class Order>
std::string spair_outcome(const Order& ord, const ModuleElement& u, const ModuleElement& v,
                          const PolyRing& R, bool& reduces_to_zero) {
    auto s = s_pair(ord, u, v);
    if (!s) {
        reduces_to_zero = true;
        return "leading terms on different basis vectors, S-pair is 0";
    }
    auto r = reduce(ord, *s, {u, v});
    reduces_to_zero = r.is_zero();
    return "S-pair " + to_string(R, *s, "g") + ", remainder " + to_string(R, r, "g");
}

void criterion8() {
    auto L = fixtures::fig_ex();
    HibiIdeal I(L);
    const auto& R = I.ring();
    ModuleElement s1, s2;
    for (auto& t : typed_generators(I)) {
        if (t.kind == Kind::S1) s1 = t.element;
        if (t.kind == Kind::S2) s2 = t.element;
    }
    auto ord = I.schreyer();
    s1 = make_element(ord, s1.terms);
    s2 = make_element(ord, s2.terms);
    bool zero = false;
    std::string d = spair_outcome(ord, s1, s2, R, zero);
    d = "Schreyer order: in(S1)=" + to_string(R, ModuleElement{{s1.lead()}}, "g") +
        ", in(S2)=" + to_string(R, ModuleElement{{s2.lead()}}, "g") + "; " + d;
    report(8, "non-Groebner remark", !zero, false, d);

    PositionOverTerm pot(R);
    auto p1 = make_element(pot, s1.terms), p2 = make_element(pot, s2.terms);
    bool pot_zero = true;
    std::string pd = spair_outcome(pot, p1, p2, R, pot_zero);
    info("position-over-term order: in(S1)=" + to_string(R, ModuleElement{{p1.lead()}}, "g") +
         ", in(S2)=" + to_string(R, ModuleElement{{p2.lead()}}, "g") + "; " + pd +
         (pot_zero ? "" : " (does not reduce to 0)"));
    if (pot_zero) {
        ++unexpected;
        info("unexpected: the position-over-term S-pair reduced to 0");
    }
}

void criterion9() {
    auto L = fixtures::fig_pic();
    HibiIdeal I(L);
    const auto& R = I.ring();
    auto ord = I.schreyer();
    auto target = diamond_element(I, {1, 2}, {10, 11});

    std::vector<std::pair<int, ModuleElement>> groups{
        {11, elem(I, {{1, 12, 2, 3}, {-1, 6, 2, 8}, {1, 2, 6, 8}, {-1, 1, 6, 10}})},
        {13, elem(I, {{1, 9, 2, 3}, {-1, 6, 2, 5}, {1, 2, 5, 6}, {-1, 1, 6, 7}})},
        {6, elem(I, {{1, 13, 2, 5}, {-1, 11, 2, 8}, {1, 2, 8, 11}, {-1, 1, 10, 11}})},
        {2, elem(I, {{1, 13, 5, 6}, {-1, 11, 6, 8}, {1, 6, 8, 11}, {-1, 3, 11, 12}})},
        {1, elem(I, {{1, 13, 6, 7}, {-1, 11, 6, 10}, {1, 6, 10, 11}, {-1, 4, 11, 12}})}};
    const std::vector<int> shown_sign{1, -1, 1, 1, -1};

    auto typed = typed_generators(I);
    bool groups_ok = true;
    int l_type = 0;
    for (auto& [v, g] : groups) {
        groups_ok = groups_ok && phi(R, g, I.polys()).is_zero();
        for (auto& t : typed)
            if (t.kind == Kind::L && same_up_to_sign(t.element, g)) {
                ++l_type;
                break;
            }
    }
    auto combine = [&](const std::vector<int>& signs) {
        ModuleElement sum;
        for (std::size_t k = 0; k < groups.size(); ++k)
            sum = add(ord, sum, groups[k].second, signs[k], Monomial::var(groups[k].first - 1));
        return sum;
    };
    auto literal = combine(shown_sign);
    bool ok = groups_ok && same_element(literal, target);
    std::string d = std::to_string(groups.size()) + " groups shown (the text says four), " +
                    std::to_string(l_type) + " of them L-type elements, phi = 0 on each: " +
                    (groups_ok ? "yes" : "no") + "; displayed combination minus diamond element = " +
                    to_string(R, add(ord, literal, target, -1), "g");
    report(9, "bridged diamonds as L combination", ok, false, d);

    auto fixed = combine({1, -1, -1, 1, -1});
    bool fixed_ok = same_element(fixed, target);
    info(std::string("with the x6 group subtracted instead of added the identity ") +
         (fixed_ok ? "holds exactly" : "still fails"));
    if (!fixed_ok || !groups_ok) ++unexpected;
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
    } catch (const std::exception& e) {
        std::cout << "aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout << (unexpected ? "unexpected outcomes: " + std::to_string(unexpected)
                             : std::string("all outcomes as expected"))
              << "\n";
    return unexpected ? 1 : 0;
}
