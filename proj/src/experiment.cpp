#include "polylab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "polylab/coeffmodels.hpp"
#include "polylab/common.hpp"
#include "polylab/exceptional.hpp"
#include "polylab/factorcount.hpp"
#include "polylab/modarith.hpp"
#include "polylab/modpoly.hpp"
#include "polylab/primeaps.hpp"
#include "polylab/rng.hpp"

namespace polylab {

using nlohmann::json;

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::mean_roots: return "mean-roots";
        case ExperimentKind::irreducibility_curve: return "irreducibility-curve";
        case ExperimentKind::fekete: return "fekete";
    }
    return "?";
}

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

bool is_uint(const json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<int64_t>() >= 0); }

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("json parse: ") + e.what());
    }
    if (!j.is_object()) throw config_error("top level: expected an object");

    std::vector<std::string> errs;
    auto fail = [&](const std::string& m) { errs.push_back(m); };

    static const std::set<std::string> known = {
        "schema",  "name",     "kind", "model",           "degrees", "l", "K", "L",
        "samples", "q_policy", "seed", "verdict_samples", "primes"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) fail(key + ": unknown field");

    if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"].get<int64_t>() != 1)
        fail("schema: expected the integer 1");

    ExperimentConfig cfg;
    bool kind_ok = false;
    if (!j.contains("kind") || !j["kind"].is_string()) {
        fail("kind: expected one of mean-roots, irreducibility-curve, fekete");
    } else {
        const std::string k = j["kind"].get<std::string>();
        if (k == "mean-roots") cfg.kind = ExperimentKind::mean_roots;
        else if (k == "irreducibility-curve") cfg.kind = ExperimentKind::irreducibility_curve;
        else if (k == "fekete") cfg.kind = ExperimentKind::fekete;
        else fail("kind: expected one of mean-roots, irreducibility-curve, fekete, got '" + k + "'");
        kind_ok = errs.empty() || errs.back().rfind("kind:", 0) != 0;
    }

    if (j.contains("name")) {
        if (!j["name"].is_string()) fail("name: expected a string");
        else cfg.name = j["name"].get<std::string>();
    }
    if (j.contains("seed")) {
        if (!is_uint(j["seed"])) fail("seed: expected a non-negative integer");
        else cfg.seed = j["seed"].get<uint64_t>();
    }

    int max_degree = 0;
    if (!j.contains("degrees") || !j["degrees"].is_array() || j["degrees"].empty()) {
        fail("degrees: expected a non-empty array of integers");
    } else {
        size_t i = 0;
        for (const auto& v : j["degrees"]) {
            const std::string path = "degrees[" + std::to_string(i) + "]";
            if (!v.is_number_integer()) fail(path + ": expected an integer");
            else if (v.get<int64_t>() < 1) fail(path + ": degree must be >= 1");
            else if (v.get<int64_t>() > 100000) fail(path + ": degree too large");
            else {
                cfg.degrees.push_back(int(v.get<int64_t>()));
                max_degree = std::max(max_degree, cfg.degrees.back());
            }
            ++i;
        }
    }

    const bool sampled_kind =
        kind_ok && (cfg.kind == ExperimentKind::mean_roots ||
                    cfg.kind == ExperimentKind::irreducibility_curve);

    if (sampled_kind) {
        if (!j.contains("samples") || !is_uint(j["samples"]) || j["samples"].get<uint64_t>() < 1)
            fail("samples: expected a positive integer");
        else if (j["samples"].get<uint64_t>() > 10'000'000)
            fail("samples: capped at 1e7");
        else
            cfg.samples = j["samples"].get<uint64_t>();

        if (!j.contains("model") || !j["model"].is_string()) {
            fail("model: expected a descriptor string such as mult:1 or sqfree:7");
        } else {
            try {
                auto m = CoefficientModel::parse(j["model"].get<std::string>());
                if (m.kind == ModelKind::fekete)
                    fail("model: fekete:p is deterministic; use the fekete experiment kind");
                else
                    cfg.model = j["model"].get<std::string>();
            } catch (const std::invalid_argument& e) {
                fail(std::string("model: ") + e.what());
            }
        }
    } else if (j.contains("model")) {
        fail("model: only valid for mean-roots and irreducibility-curve");
    }

    if (j.contains("verdict_samples")) {
        if (!is_uint(j["verdict_samples"]) || j["verdict_samples"].get<uint64_t>() < 1)
            fail("verdict_samples: expected a positive integer");
        else
            cfg.verdict_samples = j["verdict_samples"].get<uint64_t>();
    }

    if (kind_ok && cfg.kind == ExperimentKind::mean_roots) {
        if (!j.contains("q_policy") || !j["q_policy"].is_object()) {
            fail("q_policy: expected an object with exactly one of 'fixed' or 'window_X'");
        } else {
            const json& qp = j["q_policy"];
            const bool has_fixed = qp.contains("fixed");
            const bool has_win = qp.contains("window_X");
            if (qp.size() != 1 || has_fixed == has_win) {
                fail("q_policy: expected exactly one of 'fixed' or 'window_X'");
            } else if (has_fixed) {
                if (!is_uint(qp["fixed"]) || !is_prime(qp["fixed"].get<uint64_t>()))
                    fail("q_policy.fixed: expected a prime");
                else if (qp["fixed"].get<uint64_t>() <= uint64_t(max_degree))
                    fail("q_policy.fixed: the modulus must exceed every degree");
                else {
                    cfg.q_policy.fixed = true;
                    cfg.q_policy.q = qp["fixed"].get<uint64_t>();
                }
            } else {
                if (!qp["window_X"].is_number()) {
                    fail("q_policy.window_X: expected a number");
                } else {
                    const double X = qp["window_X"].get<double>();
                    if (!(X > 1.0) || X > 42.5) {
                        fail("q_policy.window_X: expected a value in (1, 42.5]");
                    } else {
                        const PrimeWindow w = PrimeWindow::from_X(X);
                        if (w.lo <= uint64_t(max_degree))
                            fail("q_policy.window_X: window primes must exceed every degree");
                        else {
                            cfg.q_policy.fixed = false;
                            cfg.q_policy.window_X = X;
                        }
                    }
                }
            }
        }
    } else if (j.contains("q_policy")) {
        fail("q_policy: only valid for mean-roots");
    }

    if (j.contains("l") || j.contains("K") || j.contains("L")) {
        if (!kind_ok || cfg.kind != ExperimentKind::mean_roots) {
            fail("l/K/L: only valid for mean-roots");
        } else {
            if (j.contains("l")) {
                if (!j["l"].is_number_integer() || j["l"].get<int64_t>() < 3)
                    fail("l: expected an integer >= 3");
                else
                    cfg.l = int(j["l"].get<int64_t>());
            }
            if (j.contains("K")) {
                if (!is_uint(j["K"]) || j["K"].get<uint64_t>() < 1)
                    fail("K: expected a positive integer");
                else
                    cfg.K = j["K"].get<uint64_t>();
            }
            if (j.contains("L")) {
                if (!is_uint(j["L"]) || j["L"].get<uint64_t>() < 2)
                    fail("L: expected an integer >= 2");
                else
                    cfg.L = j["L"].get<uint64_t>();
            }
            const int given = int(j.contains("K")) + int(j.contains("L"));
            if (given == 1) fail("K/L: the progression check needs both K and L");
            if (given == 2 && !j.contains("l")) fail("K/L: the progression check also needs l");
        }
    }

    if (kind_ok && cfg.kind == ExperimentKind::irreducibility_curve) {
        for (size_t i = 0; i < cfg.degrees.size(); ++i)
            if (cfg.degrees[i] > 120)
                fail("degrees[" + std::to_string(i) + "]: irreducibility-curve caps degree at 120");
    }

    if (kind_ok && cfg.kind == ExperimentKind::fekete) {
        if (!j.contains("primes") || !j["primes"].is_array() || j["primes"].empty()) {
            fail("primes: expected a non-empty array of odd primes");
        } else {
            size_t i = 0;
            for (const auto& v : j["primes"]) {
                const std::string path = "primes[" + std::to_string(i) + "]";
                if (!is_uint(v) || !is_prime(v.get<uint64_t>()) || v.get<uint64_t>() == 2)
                    fail(path + ": expected an odd prime");
                else if (v.get<uint64_t>() <= uint64_t(max_degree))
                    fail(path + ": the prime must exceed every degree");
                else
                    cfg.primes.push_back(v.get<uint64_t>());
                ++i;
            }
        }
    } else if (j.contains("primes")) {
        fail("primes: only valid for fekete");
    }

    if (!errs.empty()) {
        std::string msg = "invalid config:";
        for (const auto& e : errs) msg += "\n  " + e;
        throw config_error(msg);
    }

    cfg.config_hash = fnv1a(j.dump());
    return cfg;
}

namespace {

// All randomness for sample i of cell c flows from this key.
uint64_t sample_key(const ExperimentConfig& cfg, size_t cell, uint64_t i) {
    return hash3(cfg.seed, cell, i);
}

uint64_t sample_window_prime(const PrimeWindow& w, CounterRng& rng) {
    for (int tries = 0; tries < 1'000'000; ++tries) {
        const uint64_t m = w.lo + rng.below(w.width());
        if (is_prime(m)) return m;
    }
    throw std::runtime_error("window prime sampling failed");
}

std::pair<double, double> mean_se(const std::vector<int>& v) {
    const double n = double(v.size());
    double s = 0;
    for (int x : v) s += x;
    const double m = s / n;
    // Recompute in reverse as a self-check on the recorded per-sample values.
    double alt = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) alt += *it;
    if (std::abs(alt / n - m) > 1e-9 * std::max(1.0, std::abs(m)))
        throw std::logic_error("cell mean self-check failed");
    if (v.size() < 2) return {m, 0.0};
    double sq = 0;
    for (int x : v) sq += (x - m) * (x - m);
    return {m, std::sqrt(sq / (n * (n - 1)))};
}

// Desk-scale analog of the progression hypothesis: the index range [d/2, d]
// must hold ceil(q^(5/(l+1))) disjoint prime progressions of length L with
// common difference at most K.
void check_progression_supply(const ExperimentConfig& cfg, int d) {
    const uint64_t q = cfg.q_policy.fixed
                           ? cfg.q_policy.q
                           : PrimeWindow::from_X(cfg.q_policy.window_X).lo;
    const auto required =
        uint64_t(std::ceil(std::pow(double(q), 5.0 / double(*cfg.l + 1))));
    const uint64_t lo = std::max<uint64_t>(2, uint64_t(d) / 2);
    const APCover cover = find_disjoint_aps(lo, uint64_t(d), *cfg.L, *cfg.K, required);
    if (cover.aps.size() < required)
        throw config_error(
            "parameter report: [" + std::to_string(lo) + ", " + std::to_string(d) +
            "] holds only " + std::to_string(cover.aps.size()) +
            " disjoint prime progressions of length " + std::to_string(*cfg.L) +
            " with step <= " + std::to_string(*cfg.K) + "; the hypothesis needs q^(5/(l+1)) = " +
            std::to_string(required) + " at q = " + std::to_string(q) +
            ", l = " + std::to_string(*cfg.l));
}

void run_mean_roots_cell(const ExperimentConfig& cfg, size_t cell_index, int d,
                         CellResult& cell) {
    const CoefficientModel base = CoefficientModel::parse(cfg.model);
    const int64_t n = int64_t(cfg.samples);
    cell.degree = d;
    cell.samples = cfg.samples;
    PrimeWindow win{0, 0, 0};
    if (cfg.q_policy.fixed) {
        cell.q = cfg.q_policy.q;
    } else {
        cell.X = cfg.q_policy.window_X;
        win = PrimeWindow::from_X(cfg.q_policy.window_X);
    }
    if (cfg.l && cfg.K && cfg.L) check_progression_supply(cfg, d);
    if (cfg.l && cfg.q_policy.fixed) {
        try {
            cell.exceptional_residues =
                int64_t(enumerate_exceptional(*cfg.l, Prime(cfg.q_policy.q)).residue_count());
        } catch (const budget_error&) {
            // informational field: left blank when the catalog is out of reach
        }
    }
    std::vector<int> roots(cfg.samples), droots(cfg.samples);
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < n; ++i) {
        const uint64_t key = sample_key(cfg, cell_index, uint64_t(i));
        CoefficientModel m = base;
        m.seed = hash2(key, 0);
        const IntPoly R = build_R(m, d);
        uint64_t q = cfg.q_policy.q;
        if (!cfg.q_policy.fixed) {
            CounterRng qrng(hash2(key, 1));
            q = sample_window_prime(win, qrng);
        }
        roots[i] = distinct_root_count(R, Prime(q));
        droots[i] = double_root_count(R, Prime(q));
    }
    std::tie(cell.mean_rootcount, cell.se_rootcount) = mean_se(roots);
    std::tie(cell.mean_doubleroot, cell.se_doubleroot) = mean_se(droots);
}

void run_curve_cell(const ExperimentConfig& cfg, size_t cell_index, int d,
                    CellResult& cell) {
    const CoefficientModel base = CoefficientModel::parse(cfg.model);
    const int64_t n = int64_t(cfg.samples);
    cell.degree = d;
    cell.samples = cfg.samples;
    cell.X = 5.0 * std::log(d + 2);
    std::vector<uint8_t> verdicts(cfg.samples);
    std::vector<uint8_t> at_one(cfg.samples);
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < n; ++i) {
        const uint64_t key = sample_key(cfg, cell_index, uint64_t(i));
        CoefficientModel m = base;
        m.seed = hash2(key, 0);
        const IntPoly R = build_R(m, d);
        VerdictConfig vc;
        vc.mode = SumMode::monte_carlo;  // throughput: many verdicts per cell
        vc.mc_samples = cfg.verdict_samples;
        vc.seed = hash2(key, 2);
        const VerdictReport vr = verdict(R, vc);
        verdicts[i] = uint8_t(vr.verdict);
        at_one[i] = R.eval(1) == 0 ? 1 : 0;
    }
    int64_t ones = 0;
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        ++cell.verdict_counts[verdicts[i]];
        ones += at_one[i];
    }
    cell.root_at_one = ones;
    const double irr = double(cell.verdict_counts[size_t(Verdict::irreducible_certified)] +
                              cell.verdict_counts[size_t(Verdict::irreducible_likely)]);
    cell.frac_not_single = 1.0 - irr / double(cfg.samples);
}

void run_fekete_cell(const ExperimentConfig& cfg, size_t cell_index, int d,
                     uint64_t p, CellResult& cell) {
    cell.degree = d;
    cell.q = p;
    cell.samples = 1;
    if (d == 1) {  // constant polynomial, nothing to judge
        cell.skipped = true;
        return;
    }
    const IntPoly F = build_fekete(d, Prime(p));
    long chk = 0;
    for (int a = 1; a <= d; ++a) chk += legendre(uint64_t(a), Prime(p));
    if (F.eval(1) != chk) throw std::logic_error("fekete coefficient checksum failed");
    VerdictConfig vc;
    vc.mc_samples = cfg.verdict_samples;
    vc.seed = hash2(sample_key(cfg, cell_index, 0), 2);
    const VerdictReport vr = verdict(F, vc);
    cell.X = vr.X;
    ++cell.verdict_counts[size_t(vr.verdict)];
    cell.frac_not_single =
        vr.verdict == Verdict::irreducible_certified || vr.verdict == Verdict::irreducible_likely
            ? 0.0
            : 1.0;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    rep.name = cfg.name;
    rep.kind = cfg.kind;
    rep.model = cfg.kind == ExperimentKind::fekete ? "fekete" : cfg.model;
    rep.seed = cfg.seed;
    rep.config_hash = cfg.config_hash;
    rep.version = kVersion;

    size_t cell_index = 0;
    switch (cfg.kind) {
        case ExperimentKind::mean_roots:
            for (int d : cfg.degrees) {
                CellResult cell;
                run_mean_roots_cell(cfg, cell_index++, d, cell);
                rep.cells.push_back(cell);
            }
            break;
        case ExperimentKind::irreducibility_curve:
            for (int d : cfg.degrees) {
                CellResult cell;
                run_curve_cell(cfg, cell_index++, d, cell);
                rep.cells.push_back(cell);
            }
            break;
        case ExperimentKind::fekete:
            for (int d : cfg.degrees)
                for (uint64_t p : cfg.primes) {
                    CellResult cell;
                    run_fekete_cell(cfg, cell_index++, d, p, cell);
                    rep.cells.push_back(cell);
                }
            break;
    }
    return rep;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* const kVerdictColumns[6] = {
    "reducible_certified", "irreducible_certified", "irreducible_likely",
    "reducible_likely",    "power_suspected",       "inconclusive"};

bool has_mean_stats(const ExperimentReport& rep) {
    return rep.kind == ExperimentKind::mean_roots;
}

bool has_verdict_stats(const ExperimentReport& rep, const CellResult& c) {
    return rep.kind != ExperimentKind::mean_roots && !c.skipped;
}

}  // namespace

std::string report_csv(const ExperimentReport& rep) {
    std::ostringstream out;
    out << "kind,name,model,degree,q,X,samples,skipped,"
           "mean_rootcount,se_rootcount,mean_doubleroot,se_doubleroot,"
           "exceptional_residues,frac_not_single,root_at_one";
    for (const char* col : kVerdictColumns) out << ',' << col;
    out << ",config_hash,seed,version\n";
    for (const CellResult& c : rep.cells) {
        out << to_string(rep.kind) << ',' << csv_field(rep.name) << ','
            << csv_field(rep.model) << ',' << c.degree << ',';
        if (c.q) out << c.q;
        out << ',';
        if (c.X > 0) out << fmt(c.X);
        out << ',' << c.samples << ',' << (c.skipped ? 1 : 0) << ',';
        if (has_mean_stats(rep))
            out << fmt(c.mean_rootcount) << ',' << fmt(c.se_rootcount) << ','
                << fmt(c.mean_doubleroot) << ',' << fmt(c.se_doubleroot) << ',';
        else
            out << ",,,,";
        if (c.exceptional_residues >= 0) out << c.exceptional_residues;
        out << ',';
        if (c.frac_not_single >= 0) out << fmt(c.frac_not_single);
        out << ',';
        if (c.root_at_one >= 0) out << c.root_at_one;
        for (size_t k = 0; k < 6; ++k) {
            out << ',';
            if (has_verdict_stats(rep, c)) out << c.verdict_counts[k];
        }
        out << ',' << rep.config_hash << ',' << rep.seed << ',' << rep.version << '\n';
    }
    return out.str();
}

std::string report_json(const ExperimentReport& rep) {
    json cells = json::array();
    for (const CellResult& c : rep.cells) {
        json jc;
        jc["degree"] = c.degree;
        jc["q"] = c.q ? json(c.q) : json(nullptr);
        jc["X"] = c.X > 0 ? json(c.X) : json(nullptr);
        jc["samples"] = c.samples;
        jc["skipped"] = c.skipped;
        if (has_mean_stats(rep)) {
            jc["mean_rootcount"] = c.mean_rootcount;
            jc["se_rootcount"] = c.se_rootcount;
            jc["mean_doubleroot"] = c.mean_doubleroot;
            jc["se_doubleroot"] = c.se_doubleroot;
        } else {
            jc["mean_rootcount"] = nullptr;
            jc["se_rootcount"] = nullptr;
            jc["mean_doubleroot"] = nullptr;
            jc["se_doubleroot"] = nullptr;
        }
        jc["exceptional_residues"] =
            c.exceptional_residues >= 0 ? json(c.exceptional_residues) : json(nullptr);
        jc["frac_not_single"] = c.frac_not_single >= 0 ? json(c.frac_not_single) : json(nullptr);
        jc["root_at_one"] = c.root_at_one >= 0 ? json(c.root_at_one) : json(nullptr);
        if (has_verdict_stats(rep, c)) {
            json vc;
            for (size_t k = 0; k < 6; ++k) vc[kVerdictColumns[k]] = c.verdict_counts[k];
            jc["verdicts"] = vc;
        } else {
            jc["verdicts"] = nullptr;
        }
        cells.push_back(jc);
    }
    json out;
    out["name"] = rep.name;
    out["kind"] = to_string(rep.kind);
    out["model"] = rep.model;
    out["cells"] = cells;
    out["provenance"] = {{"config_hash", rep.config_hash},
                         {"seed", rep.seed},
                         {"version", rep.version}};
    return out.dump(2) + "\n";
}

}  // namespace polylab
