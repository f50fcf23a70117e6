// Command-line front end: every library capability behind one binary with
// machine-readable output.  Exit codes: 0 success, 2 bad input or config,
// 3 budget exhaustion.
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "polylab/coeffmodels.hpp"
#include "polylab/common.hpp"
#include "polylab/equidist.hpp"
#include "polylab/exceptional.hpp"
#include "polylab/experiment.hpp"
#include "polylab/factorcount.hpp"
#include "polylab/intpoly.hpp"
#include "polylab/modarith.hpp"
#include "polylab/modpoly.hpp"
#include "polylab/primeaps.hpp"
#include "polylab/rng.hpp"

using json = nlohmann::ordered_json;
using namespace polylab;

namespace {

struct Globals {
    uint64_t seed = 0;
    int threads = 0;
    std::string format = "json";
    std::string out_path;

    void apply() const {
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
    }

    void emit(const std::string& text) const {
        if (out_path.empty()) {
            std::fwrite(text.data(), 1, text.size(), stdout);
            return;
        }
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open --out path '" + out_path + "'");
        f << text;
    }

    void emit(const json& j) const { emit(j.dump(2) + "\n"); }

    void require_json(const char* sub) const {
        if (format != "json")
            throw std::invalid_argument(std::string(sub) + ": only --format json is available");
    }
};

std::vector<uint64_t> parse_u64_list(const std::string& text) {
    std::vector<uint64_t> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        uint64_t v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (...) {
            throw std::invalid_argument("bad integer list entry '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("bad integer list entry '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::pair<uint64_t, uint64_t> parse_range(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--range expects lo:hi, got '" + text + "'");
    const auto lo = parse_u64_list(text.substr(0, colon));
    const auto hi = parse_u64_list(text.substr(colon + 1));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
        throw std::invalid_argument("--range expects lo:hi with lo <= hi");
    return {lo[0], hi[0]};
}

json estimate_json(const FactorEstimate& e) {
    return json{{"value", e.value},
                {"std_error", e.std_error},
                {"mode", e.mode == SumMode::exact ? "exact" : "mc"}};
}

void add_sample(CLI::App& app, const Globals& g) {
    auto* sc = app.add_subcommand("sample", "draw coefficient sequences from a model");
    auto model = std::make_shared<std::string>();
    auto degree = std::make_shared<int>(0);
    auto count = std::make_shared<uint64_t>(1);
    sc->add_option("--model", *model, "mult:SEED | sqfree:SEED | fekete:P | iid:SEED")->required();
    sc->add_option("--degree", *degree, "degree of R")->required()->check(CLI::Range(1, 200000));
    sc->add_option("--count", *count, "number of draws")->check(CLI::Range(uint64_t{1}, uint64_t{100000}));
    sc->callback([=, &g] {
        g.apply();
        const CoefficientModel base = CoefficientModel::parse(*model);
        if (base.kind == ModelKind::fekete && *count > 1)
            throw std::invalid_argument("fekete model is deterministic; --count must be 1");
        json rows = json::array();
        std::ostringstream csv;
        csv << "model,degree,index,seed,signs,poly\n";
        for (uint64_t i = 0; i < *count; ++i) {
            CoefficientModel m = base;
            // draw 0 at master seed 0 is the descriptor's own stream
            if (i || g.seed) m.seed = hash3(base.seed, g.seed, i);
            const auto signs = m.draw_sequence(uint64_t(*degree) + 1);
            const IntPoly R = build_R(signs);
            if (g.format == "json") {
                rows.push_back(json{{"index", i}, {"seed", m.seed}, {"signs", signs}, {"poly", R.str()}});
            } else {
                csv << *model << ',' << *degree << ',' << i << ',' << m.seed << ',';
                for (size_t k = 0; k < signs.size(); ++k) csv << (k ? " " : "") << signs[k];
                csv << ",\"" << R.str() << "\"\n";
            }
        }
        if (g.format == "json")
            g.emit(json{{"model", *model}, {"degree", *degree}, {"draws", rows}});
        else
            g.emit(csv.str());
    });
}

void add_roots(CLI::App& app, const Globals& g) {
    auto* sc = app.add_subcommand("roots", "distinct and double root counts mod q");
    auto poly = std::make_shared<std::string>();
    auto q = std::make_shared<uint64_t>(0);
    sc->add_option("--poly", *poly, "coefficients, constant term first: 1,0,1 = x^2+1")->required();
    sc->add_option("--q", *q, "prime modulus")->required();
    sc->callback([=, &g] {
        g.apply();
        const IntPoly p = IntPoly::parse(*poly);
        const Prime prime(*q);
        const int b = distinct_root_count(p, prime);
        const int bd = double_root_count(p, prime);
        if (g.format == "json") {
            g.emit(json{{"poly", p.str()}, {"q", *q}, {"distinct_roots", b}, {"double_roots", bd}});
        } else {
            std::ostringstream csv;
            csv << "poly,q,distinct_roots,double_roots\n\"" << p.str() << "\"," << *q << ',' << b
                << ',' << bd << '\n';
            g.emit(csv.str());
        }
    });
}

void add_factor_estimate(CLI::App& app, const Globals& g) {
    auto* sc = app.add_subcommand("factor-estimate",
                                  "weighted distinct-root sum estimating the number of "
                                  "distinct irreducible factors");
    auto poly = std::make_shared<std::string>();
    auto X = std::make_shared<double>(0);
    auto mode = std::make_shared<std::string>();
    auto samples = std::make_shared<uint64_t>(100000);
    sc->add_option("--poly", *poly)->required();
    sc->add_option("--X", *X, "window parameter, primes in (e^X/2, e^X]")->required();
    sc->add_option("--mode", *mode, "exact | mc (default: exact iff X <= 18)")
        ->check(CLI::IsMember({"exact", "mc"}));
    sc->add_option("--samples", *samples, "Monte Carlo draws");
    sc->callback([=, &g] {
        g.apply();
        const IntPoly p = IntPoly::parse(*poly);
        const WeightScheme w(*X);
        const bool exact = mode->empty() ? *X <= kMaxExactX : *mode == "exact";
        const FactorEstimate e = exact ? weighted_root_sum_exact(p, w)
                                       : weighted_root_sum_mc(p, w, *samples, g.seed);
        if (g.format == "json") {
            g.emit(estimate_json(e));
        } else {
            std::ostringstream csv;
            csv << "value,std_error,mode\n"
                << e.value << ',' << e.std_error << ',' << (exact ? "exact" : "mc") << '\n';
            g.emit(csv.str());
        }
    });
}

void add_verdict(CLI::App& app, const Globals& g) {
    auto* sc = app.add_subcommand("verdict", "full classification pipeline for one polynomial");
    auto poly = std::make_shared<std::string>();
    auto X = std::make_shared<double>(0);
    auto mode = std::make_shared<std::string>();
    auto samples = std::make_shared<uint64_t>(100000);
    auto budget = std::make_shared<uint64_t>(0);
    sc->add_option("--poly", *poly)->required();
    sc->add_option("--X", *X, "window parameter (default 5 log(deg+2))");
    sc->add_option("--mode", *mode)->check(CLI::IsMember({"exact", "mc"}));
    sc->add_option("--samples", *samples, "Monte Carlo draws");
    sc->add_option("--cert-budget", *budget, "primes tried for a mod-q certificate");
    sc->callback([=, &g] {
        g.apply();
        g.require_json("verdict");
        const IntPoly p = IntPoly::parse(*poly);
        VerdictConfig cfg;
        if (sc->count("--X")) cfg.X = *X;
        if (!mode->empty()) cfg.mode = *mode == "exact" ? SumMode::exact : SumMode::monte_carlo;
        cfg.mc_samples = *samples;
        cfg.seed = g.seed;
        cfg.cert_budget = *budget;
        const VerdictReport r = verdict(p, cfg);
        json out{{"poly", p.str()}, {"verdict", to_string(r.verdict)}, {"X", r.X}};
        out["factor_count"] = r.factor_count ? estimate_json(*r.factor_count) : json(nullptr);
        out["double_root_sum"] =
            r.double_root_sum ? estimate_json(*r.double_root_sum) : json(nullptr);
        out["certificate_q"] = r.certificate_q ? json(*r.certificate_q) : json(nullptr);
        out["certified_factor"] =
            r.certified_factor ? json(r.certified_factor->str()) : json(nullptr);
        out["note"] = r.note;
        g.emit(out);
    });
}

void add_equidist(CLI::App& app, const Globals& g) {
    auto* eq = app.add_subcommand("equidist", "signed-walk distribution tools");
    eq->require_subcommand(1);
    auto q = std::make_shared<uint64_t>(0);
    auto a = std::make_shared<uint64_t>(0);
    auto exps = std::make_shared<std::string>();

    auto* fm = eq->add_subcommand("fourier-max", "max |Yhat| over nonzero frequencies");
    fm->add_option("--q", *q)->required();
    fm->add_option("--a", *a)->required();
    fm->add_option("--exponents", *exps, "comma list, the index set I")->required();
    fm->callback([=, &g] {
        g.apply();
        g.require_json("equidist");
        const WalkSpec w{Prime(*q), *a, parse_u64_list(*exps)};
        g.emit(json{{"q", *q},
                    {"a", *a},
                    {"exponents", w.exponents},
                    {"max_abs_fourier", max_fourier_coeff(w)}});
    });

    auto* bf = eq->add_subcommand("bruteforce", "exact walk distribution by sign enumeration");
    auto compare = std::make_shared<bool>(false);
    bf->add_option("--q", *q)->required();
    bf->add_option("--a", *a)->required();
    bf->add_option("--exponents", *exps)->required();
    bf->add_flag("--compare-fourier", *compare, "also invert Yhat and report the total variation");
    bf->callback([=, &g] {
        g.apply();
        g.require_json("equidist");
        const WalkSpec w{Prime(*q), *a, parse_u64_list(*exps)};
        const WalkDistribution dist = walk_distribution_bruteforce(w);
        json rows = json::array();
        for (uint64_t u = 0; u < dist.q; ++u) {
            json row = json::array();
            for (uint64_t v = 0; v < dist.q; ++v) row.push_back(dist.at(u, v));
            rows.push_back(row);
        }
        json out{{"q", *q}, {"a", *a}, {"exponents", w.exponents}, {"prob", rows}};
        if (*compare)
            out["tv_vs_fourier"] = total_variation(dist, walk_distribution_fourier(w));
        g.emit(out);
    });

    auto* lo = eq->add_subcommand(
        "lo-check", "frequencies whose walk terms stay small along a whole progression");
    auto l = std::make_shared<int>(0);
    auto r = std::make_shared<uint64_t>(0);
    auto k = std::make_shared<uint64_t>(0);
    auto j0 = std::make_shared<uint64_t>(0);
    auto xi = std::make_shared<std::vector<uint64_t>>();
    auto with_catalog = std::make_shared<bool>(false);
    lo->add_option("--q", *q)->required();
    lo->add_option("--a", *a)->required();
    lo->add_option("--l", *l)->required();
    lo->add_option("--r", *r, "auxiliary prime > l^2")->required();
    lo->add_option("--k", *k, "progression step")->required();
    lo->add_option("--j0", *j0, "progression offset");
    lo->add_option("--xi", *xi, "check a single frequency xi1 xi2")->expected(2);
    lo->add_flag("--catalog", *with_catalog, "also report whether a^k is an exceptional residue");
    lo->callback([=, &g] {
        g.apply();
        g.require_json("equidist");
        const Prime prime(*q);
        json out{{"q", *q}, {"a", *a}, {"l", *l}, {"r", *r}, {"k", *k}, {"j0", *j0}};
        if (*with_catalog) {
            const auto cat = enumerate_exceptional(*l, prime);
            out["a_pow_k_exceptional"] = cat.is_exceptional(powmod(*a, *k, prime.value));
        }
        if (!xi->empty()) {
            out["small_everywhere"] =
                lemma6_smallness_holds(prime, *a, (*xi)[0], (*xi)[1], *k, *j0, *l, *r);
        } else {
            uint64_t bad = 0;
            json first = nullptr;
            for (uint64_t x1 = 0; x1 < *q; ++x1)
                for (uint64_t x2 = 0; x2 < *q; ++x2) {
                    if (!x1 && !x2) continue;
                    if (lemma6_smallness_holds(prime, *a, x1, x2, *k, *j0, *l, *r)) {
                        if (!bad) first = json::array({x1, x2});
                        ++bad;
                    }
                }
            out["small_everywhere_count"] = bad;
            out["first_small_frequency"] = first;
        }
        g.emit(out);
    });
}

void add_exceptional(CLI::App& app, const Globals& g) {
    auto* sc = app.add_subcommand("exceptional",
                                  "catalog of low-degree small-measure polynomials and their "
                                  "roots mod q");
    auto l = std::make_shared<int>(0);
    auto q = std::make_shared<uint64_t>(0);
    sc->add_option("--l", *l, "degree cap")->required();
    sc->add_option("--q", *q, "prime modulus")->required();
    sc->callback([=, &g] {
        g.apply();
        g.require_json("exceptional");
        const ExceptionalCatalog cat = enumerate_exceptional(*l, Prime(*q));
        json polys = json::array();
        for (const IntPoly& p : cat.polys) {
            json row = json::array();
            for (int i = 0; i <= *l; ++i)
                row.push_back(i <= p.degree() ? p.coeff(size_t(i)).get_si() : 0);
            polys.push_back(row);
        }
        json residues = json::object();
        for (uint64_t a = 0; a < *q; ++a)
            if (cat.residue_witness[a] >= 0)
                residues[std::to_string(a)] = cat.residue_witness[a];
        g.emit(json{{"l", *l}, {"q", *q}, {"polys", polys}, {"residues", residues}});
    });
}

void add_aps(CLI::App& app, const Globals& g) {
    auto* sc = app.add_subcommand("aps", "disjoint arithmetic progressions of primes");
    auto range = std::make_shared<std::string>();
    auto len = std::make_shared<uint64_t>(0);
    auto maxstep = std::make_shared<uint64_t>(0);
    auto count = std::make_shared<uint64_t>(0);
    sc->add_option("--range", *range, "lo:hi")->required();
    sc->add_option("--len", *len, "terms per progression")->required();
    sc->add_option("--maxstep", *maxstep, "largest common difference")->required();
    sc->add_option("--count", *count, "progressions wanted")->required();
    sc->callback([=, &g] {
        g.apply();
        const auto [lo, hi] = parse_range(*range);
        const APCover cover = find_disjoint_aps(lo, hi, *len, *maxstep, *count);
        const bool ok = verify_cover(cover);
        if (!ok) throw std::logic_error("cover failed its own verification");
        if (g.format == "json") {
            json aps = json::array();
            for (const auto& [s, st] : cover.aps) aps.push_back(json::array({s, st}));
            g.emit(json{{"lo", cover.lo},
                        {"hi", cover.hi},
                        {"length", cover.length},
                        {"max_step", cover.max_step},
                        {"requested", *count},
                        {"found", cover.aps.size()},
                        {"verified", ok},
                        {"aps", aps}});
        } else {
            std::ostringstream csv;
            csv << "start,step,length\n";
            for (const auto& [s, st] : cover.aps) csv << s << ',' << st << ',' << cover.length << '\n';
            g.emit(csv.str());
        }
    });
}

void add_experiment(CLI::App& app, const Globals& g) {
    auto* ex = app.add_subcommand("experiment", "batch statistics driven by a JSON config");
    ex->require_subcommand(1);
    auto* run = ex->add_subcommand("run", "execute a schema-1 config");
    auto path = std::make_shared<std::string>();
    run->add_option("config", *path, "config file")->required()->check(CLI::ExistingFile);
    run->callback([=, &g, &app] {
        g.apply();
        std::ifstream f(*path);
        std::ostringstream text;
        text << f.rdbuf();
        ExperimentConfig cfg = parse_experiment_config(text.str());
        if (app.count("--seed")) cfg.seed = g.seed;
        const ExperimentReport rep = run_experiment(cfg);
        g.emit(g.format == "json" ? report_json(rep) : report_csv(rep));
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "desk-scale laboratory for random sign-pattern polynomials: root statistics, "
        "factor-count estimates, walk equidistribution, exceptional catalogs, prime "
        "progressions"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "master seed")->capture_default_str();
    app.add_option("--threads", g.threads, "OpenMP thread count (0 = runtime default)");
    app.add_option("--format", g.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write output here instead of stdout");

    add_sample(app, g);
    add_roots(app, g);
    add_factor_estimate(app, g);
    add_verdict(app, g);
    add_equidist(app, g);
    add_exceptional(app, g);
    add_aps(app, g);
    add_experiment(app, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const config_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const budget_error& e) {
        std::fprintf(stderr, "budget exhausted: %s\n", e.what());
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
