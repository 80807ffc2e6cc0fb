#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <hibi/hibi.hpp>

using namespace hibi;

namespace {

struct RunConfig {
    std::vector<int> grid;
    std::string file;
    std::string field = "qq";
    int max_degree = 6;
    int threads = 1;
    std::string format = "text";
};

struct Source {
    Lattice lattice;
    std::optional<std::pair<int, int>> grid;
};

Source load(const RunConfig& c) {
    if (!c.grid.empty() && !c.file.empty())
        throw Error(ErrorKind::BadInput, "give either --grid or --file, not both");
    if (!c.grid.empty()) return {hibi::grid(c.grid[0], c.grid[1]), std::pair(c.grid[0], c.grid[1])};
    if (!c.file.empty()) return {read_lattice(c.file), std::nullopt};
    throw Error(ErrorKind::BadInput, "no lattice given (use --grid M N or --file PATH)");
}

// p must be prime and exceed the number of variables
PrimeField prime_field(const std::string& spec, int nvars) {
    std::uint32_t p = 0;
    try {
        p = static_cast<std::uint32_t>(std::stoul(spec.substr(3)));
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadInput, "bad field " + spec);
    }
    PrimeField f(p);
    if (static_cast<int>(p) <= nvars)
        throw Error(ErrorKind::BadInput, "prime must exceed the number of variables");
    return f;
}

template <class Fn>
auto with_field(const RunConfig& c, int nvars, Fn&& fn) {
    if (c.field == "qq") return fn(RationalField{});
    if (c.field.rfind("fp:", 0) == 0) return fn(prime_field(c.field, nvars));
    throw Error(ErrorKind::BadInput, "field must be qq or fp:P");
}

std::string labels(const Lattice& L, const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + L.label(x);
    return s;
}

int cmd_lattice(const RunConfig& c) {
    Source src = load(c);
    const Lattice& L = src.lattice;
    auto jm = jm_set(L);
    const bool planar = is_planar(L);
    const auto pairs = incomparable_pairs(L).size();
    if (c.format == "json") {
        json j = lattice_to_json(L);
        j["hash"] = lattice_hash(L);
        j["incomparable_pairs"] = pairs;
        j["distributive"] = true;
        j["planar"] = planar;
        j["jm"] = jm;
        j["k"] = k_of(L);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << L.size() << " elements, " << pairs << " incomparable pairs, "
              << (planar ? "planar" : "not planar") << ", k=" << k_of(L) << "\n";
    std::cout << "elements: " << L.size() << "\n"
              << "covers: " << L.covers().size() << "\n"
              << "distributive: yes\n"
              << "join-irreducibles: " << labels(L, join_irreducibles(L)) << "\n"
              << "meet-irreducibles: " << labels(L, meet_irreducibles(L)) << "\n"
              << "JM: " << labels(L, jm) << "\n";
    return 0;
}

int cmd_ideal(const RunConfig& c, const std::string& exp) {
    Source src = load(c);
    HibiIdeal I(src.lattice);
    const bool fp = c.field.rfind("fp:", 0) == 0;
    if (fp) prime_field(c.field, src.lattice.size());
    const std::string p = fp ? c.field.substr(3) : "";
    if (exp == "m2") {
        std::cout << ideal_to_macaulay2(I, fp ? "ZZ/" + p : "QQ");
        return 0;
    }
    if (exp == "singular") {
        std::cout << ideal_to_singular(I, fp ? p : "0");
        return 0;
    }
    const auto& L = src.lattice;
    if (exp == "json" || c.format == "json") {
        json gens = json::array();
        for (auto& r : I.relations())
            gens.push_back({{"index", r.index + 1},
                            {"pair", {L.label(r.pair.a), L.label(r.pair.b)}},
                            {"poly", I.ring().str(r.poly)}});
        std::cout << json{{"variables", L.labels()}, {"generators", gens}}.dump(2) << "\n";
        return 0;
    }
    std::cout << I.size() << " generators\n";
    for (auto& r : I.relations())
        std::cout << "f" << r.index + 1 << " (" << L.label(r.pair.a) << "," << L.label(r.pair.b)
                  << "): " << I.ring().str(r.poly) << "\n";
    return 0;
}

int cmd_syzygy(const RunConfig& c, bool classify, bool verify) {
    Source src = load(c);
    const Lattice& L = src.lattice;
    HibiIdeal I(L);
    auto typed = typed_generators(I);
    std::map<std::string, int> by_kind;
    json rows = json::array();
    for (std::size_t k = 0; k < typed.size(); ++k) {
        const auto& t = typed[k];
        ++by_kind[std::string(to_string(t.kind))];
        if (verify && !phi(I.ring(), t.element, I.polys()).is_zero())
            throw Error(ErrorKind::OracleMismatch,
                        "phi is nonzero on " + to_string(I.ring(), t.element));
        std::string note;
        if (t.kind == Kind::D)
            note = diamond_reducible(L, {t.witness[0], t.witness[1]}, {t.witness[2], t.witness[3]})
                       ? "reducible"
                       : "irreducible";
        if (c.format == "json") {
            json r = typed_to_json(t);
            r["string"] = to_string(I.ring(), t.element);
            if (!note.empty()) r["diamond"] = note;
            rows.push_back(r);
            continue;
        }
        std::cout << (classify ? std::string(to_string(t.kind)) : "syz") << " ["
                  << labels(L, t.witness) << "] " << to_string(I.ring(), t.element);
        if (!note.empty()) std::cout << "  (" << note << ")";
        std::cout << "\n";
    }
    auto minimal = with_field(c, L.size(), [&](auto f) { return minimal_typed(I, f); });
    std::map<std::string, int> fam{{"strip", 0}, {"L", 0}, {"box", 0}, {"G", 0}, {"diamond", 0}};
    for (auto& t : minimal) ++fam[std::string(family(t.kind))];
    if (c.format == "json") {
        std::cout << json{{"elements", rows},
                          {"kinds", by_kind},
                          {"minimal", fam},
                          {"verified", verify}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "kinds:";
    for (auto& [k, n] : by_kind) std::cout << " " << k << "=" << n;
    std::cout << "\nminimal: strip " << fam["strip"] << ", L " << fam["L"] << ", box "
              << fam["box"] << ", G " << fam["G"] << ", diamond " << fam["diamond"] << "\n";
    if (verify) std::cout << "phi = 0 on all " << typed.size() << " elements\n";
    return 0;
}

int cmd_betti(const RunConfig& c, const std::string& mode) {
    if (mode != "formula" && mode != "oracle" && mode != "both")
        throw Error(ErrorKind::BadInput, "mode must be formula, oracle or both");
    Source src = load(c);
    const Lattice& L = src.lattice;
    HibiIdeal I(L);
    json out;
    out["lattice_hash"] = lattice_hash(L);
    if (src.grid) {
        out["m"] = src.grid->first;
        out["n"] = src.grid->second;
    }
    std::optional<PlanarBettiBreakdown> formula;
    if (mode != "oracle") {
        formula = with_field(c, L.size(), [&](auto f) { return planar_betti(I, false, f); });
        out["strip"] = formula->nS;
        out["l"] = formula->nL;
        out["box"] = formula->nB;
        out["diamond"] = formula->nD;
        out["total"] = formula->total;
        if (src.grid) {
            auto g = grid_betti(src.grid->first, src.grid->second);
            out["grid_closed_form"] = g.total;
        }
    }
    std::vector<GradedBettiRow> rows;
    if (mode != "formula" && I.size() >= 2) {
        rows = with_field(c, L.size(), [&](auto f) {
            return graded_betti_oracle(I, c.max_degree, f, c.threads);
        });
    }
    if (mode != "formula") {
        out["oracle_degree3"] = betti_at(rows, 3);
        out["oracle_degree4"] = betti_at(rows, 4);
        out["oracle_total"] = betti_total(rows);
        out["oracle"] = rows_to_json(rows);
    }
    bool agree = true;
    if (mode == "both") {
        agree = formula->total == betti_total(rows);
        out["agree"] = agree;
    }
    if (c.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << "m,n,lattice_hash,strip,l,box,diamond,total,oracle_degree3,oracle_degree4,agree\n";
        auto get = [&](const char* k) { return out.contains(k) ? out[k].dump() : std::string(); };
        std::cout << get("m") << "," << get("n") << "," << out["lattice_hash"].get<std::string>()
                  << "," << get("strip") << "," << get("l") << "," << get("box") << ","
                  << get("diamond") << "," << get("total") << "," << get("oracle_degree3") << ","
                  << get("oracle_degree4") << "," << (agree ? "true" : "false") << "\n";
    } else {
        if (formula) std::cout << "formula: " << to_string(*formula) << "\n";
        if (mode != "formula") {
            for (auto& r : rows)
                std::cout << "degree " << r.degree << ": kernel " << r.kernel_dim << ", from below "
                          << r.trivial_dim << ", minimal " << r.minimal_generators << "\n";
            std::cout << "oracle: total=" << betti_total(rows) << "\n";
        }
        if (mode == "both")
            std::cout << formula->total << (agree ? " = " : " != ") << betti_total(rows) << "\n";
    }
    if (!agree)
        throw Error(ErrorKind::OracleMismatch, "formula and oracle disagree");
    return 0;
}

struct LinearityReport {
    int k = 0;
    std::string clause;
    std::optional<bool> predicted;
    std::optional<bool> oracle;
};

template <class F>
LinearityReport linearity_report(const HibiIdeal& I, bool want_oracle, int max_degree, F f) {
    const Lattice& L = I.lattice();
    LinearityReport r;
    r.k = k_of(L);
    try {
        auto v = linearity_by_k(L);
        r.clause = v.reason;
        r.predicted = v.predicted_linear;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnrecognizedShape && e.kind() != ErrorKind::NotPlanar) throw;
        r.clause = std::string(to_string(e.kind())) + ", decided by the oracle";
        want_oracle = true;
    }
    if (want_oracle) r.oracle = is_linear_first_syzygy(I, max_degree, f);
    return r;
}

int cmd_linearity(const RunConfig& c, bool oracle) {
    Source src = load(c);
    HibiIdeal I(src.lattice);
    auto r = with_field(c, src.lattice.size(), [&](auto f) {
        return linearity_report(I, oracle, c.max_degree, f);
    });
    const bool linear = r.predicted ? *r.predicted : *r.oracle;
    if (c.format == "json") {
        json j{{"k", r.k}, {"clause", r.clause}, {"linear", linear}};
        if (r.oracle) j["oracle_linear"] = *r.oracle;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k=" << r.k << "\nclause: " << r.clause << "\nverdict: "
                  << (linear ? "linear" : "nonlinear") << "\n";
        if (r.oracle) std::cout << "oracle: " << (*r.oracle ? "linear" : "nonlinear") << "\n";
    }
    if (r.predicted && r.oracle && *r.predicted != *r.oracle)
        throw Error(ErrorKind::OracleMismatch, "verdict and oracle disagree");
    return 0;
}

struct CensusRow {
    int size = 0;
    std::string hash;
    bool planar = false;
    std::string gb = "-", betti = "-", linearity = "-";
    bool failed = false;
};

int cmd_census(const RunConfig& c, int max_elements, const std::string& check) {
    if (check != "gb" && check != "betti" && check != "linearity" && check != "all")
        throw Error(ErrorKind::BadInput, "check must be gb, betti, linearity or all");
    auto lattices = enumerate_distributive(max_elements);
    std::vector<CensusRow> rows(lattices.size());
    const bool gb = check == "gb" || check == "all";
    const bool betti = check == "betti" || check == "all";
    const bool lin = check == "linearity" || check == "all";
    detail::parallel_for(lattices.size(), c.threads, [&](std::size_t n) {
        const Lattice& L = lattices[n];
        CensusRow& row = rows[n];
        row.size = L.size();
        row.hash = lattice_hash(L);
        row.planar = is_planar(L);
        HibiIdeal I(L);
        auto mark = [&](std::string& slot, auto&& body) {
            try {
                slot = body() ? "pass" : "FAIL";
            } catch (const Error& e) {
                slot = std::string("FAIL:") + std::string(to_string(e.kind()));
            }
            row.failed = row.failed || slot.rfind("FAIL", 0) == 0;
        };
        if (gb) mark(row.gb, [&] { return buchberger_check(I), true; });
        if (betti && row.planar)
            mark(row.betti, [&] {
                return with_field(c, L.size(), [&](auto f) { return planar_betti(I, true, f), true; });
            });
        if (lin && row.planar)
            mark(row.linearity, [&] {
                auto r = with_field(c, L.size(), [&](auto f) {
                    return linearity_report(I, true, c.max_degree, f);
                });
                return !r.predicted || *r.predicted == *r.oracle;
            });
    });
    int failures = 0;
    for (auto& r : rows) failures += r.failed;
    if (c.format == "json") {
        json out = json::array();
        for (auto& r : rows)
            out.push_back({{"elements", r.size},
                           {"hash", r.hash},
                           {"planar", r.planar},
                           {"gb", r.gb},
                           {"betti", r.betti},
                           {"linearity", r.linearity}});
        std::cout << json{{"lattices", rows.size()}, {"failures", failures}, {"rows", out}}.dump(2)
                  << "\n";
    } else {
        std::cout << "elements,hash,planar,gb,betti,linearity\n";
        for (auto& r : rows)
            std::cout << r.size << "," << r.hash << "," << (r.planar ? "yes" : "no") << "," << r.gb
                      << "," << r.betti << "," << r.linearity << "\n";
        std::cout << "lattices: " << rows.size() << ", failures: " << failures << "\n";
    }
    return failures ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"First syzygies and Betti numbers of Hibi rings"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv("HIBI_MAX_DEGREE")) {
        try {
            cfg.max_degree = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "error: HIBI_MAX_DEGREE is not an integer\n";
            return 1;
        }
    }

    auto common = [&](CLI::App* s) {
        s->add_option("--grid", cfg.grid, "grid lattice [0,M] x [0,N]")->expected(2);
        s->add_option("--file", cfg.file, "lattice JSON file");
        s->add_option("--max-degree", cfg.max_degree, "oracle degree bound");
        s->add_option("--field", cfg.field, "qq or fp:P");
        s->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        s->add_option("--format", cfg.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* lat = app.add_subcommand("lattice", "lattice report");
    common(lat);

    std::string exp = "list";
    auto* ideal = app.add_subcommand("ideal", "Hibi ideal generators");
    common(ideal);
    ideal->add_option("--export", exp, "m2, singular or json")
        ->check(CLI::IsMember({"m2", "singular", "json"}));

    bool classify = false, verify = false;
    auto* syz = app.add_subcommand("syzygy", "typed syzygy listing");
    common(syz);
    syz->add_flag("--classify", classify, "print the kind of each element");
    syz->add_flag("--verify", verify, "check phi = 0");

    std::string mode = "both";
    auto* bet = app.add_subcommand("betti", "first Betti number");
    common(bet);
    bet->add_option("--mode", mode, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));

    bool oracle = false;
    auto* lin = app.add_subcommand("linearity", "linearity verdict");
    common(lin);
    lin->add_flag("--oracle", oracle, "confirm with the oracle");

    int max_elements = 6;
    std::string check = "all";
    auto* cen = app.add_subcommand("census", "property checks over small distributive lattices");
    common(cen);
    cen->add_option("--max-elements", max_elements, "largest lattice size");
    cen->add_option("--check", check, "gb, betti, linearity or all")
        ->check(CLI::IsMember({"gb", "betti", "linearity", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*lat) return cmd_lattice(cfg);
        if (*ideal) return cmd_ideal(cfg, exp);
        if (*syz) return cmd_syzygy(cfg, classify, verify);
        if (*bet) return cmd_betti(cfg, mode);
        if (*lin) return cmd_linearity(cfg, oracle);
        if (*cen) return cmd_census(cfg, max_elements, check);
    } catch (const Error& e) {
        std::cout.flush();
        std::cerr << "error: " << e.what() << "\n";
        return e.is_mismatch() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
