#include "minadet/runner.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "minadet/expr.hpp"
#include "minadet/matrix.hpp"

namespace minadet {

namespace {

using Thunk = std::function<Report()>;
using nlohmann::ordered_json;

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", ms);
    return buf;
}

VerifyOptions opts_of(const RunConfig& cfg) {
    VerifyOptions o;
    o.oracle = cfg.oracle;
    return o;
}

// --- config field parsing; all failures are ConfigError, raised before any
// case runs ---

Rat parse_rat_cfg(const std::string& s, const char* what) {
    try {
        return Rat::parse(s);
    } catch (const std::exception&) {
        throw ConfigError(std::string(what) + ": not a rational: \"" + s + "\"");
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

std::vector<Rat> parse_rat_list_cfg(const std::string& s, const char* what) {
    std::vector<Rat> out;
    for (const std::string& item : split_commas(s)) out.push_back(parse_rat_cfg(item, what));
    return out;
}

std::vector<long> parse_long_list_cfg(const std::string& s, const char* what) {
    std::vector<long> out;
    for (const std::string& item : split_commas(s)) {
        try {
            size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError(std::string(what) + ": not an integer: \"" + item + "\"");
        }
    }
    return out;
}

AstPtr parse_expr_cfg(const std::string& text) {
    try {
        return parse_expr(text);
    } catch (const ParseError& e) {
        throw ConfigError(std::string("--series: ") + e.what());
    }
}

long parse_positive_int_cfg(const std::string& s, const char* what) {
    Rat r = parse_rat_cfg(s, what);
    auto v = r.as_nonneg_int();
    if (!v || *v < 1) throw ConfigError(std::string(what) + ": must be a positive integer, got \"" + s + "\"");
    return *v;
}

// Effective max n for random case generation.
int cap_n(const RunConfig& cfg, int def, int hard) {
    int want = cfg.n >= 0 ? cfg.n : def;
    return std::min(want, hard);
}

int explicit_n(const RunConfig& cfg, int def) { return cfg.n >= 0 ? cfg.n : def; }

Series<Rat> random_series(CaseRng& rng, int ord, const Rat& a0) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(ord) + 1);
    c.push_back(a0);
    for (int k = 1; k <= ord; ++k) c.push_back(rng.small_rat());
    return Series<Rat>(std::move(c));
}

Rat random_a0_offunit(CaseRng& rng) {
    for (;;) {
        Rat r = rng.small_rat_nonzero();
        if (!r.is_one()) return r;
    }
}

Poly random_poly(CaseRng& rng, int deg) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c.push_back(rng.small_rat());
    c.push_back(rng.small_rat_nonzero());
    return Poly(std::move(c));
}

std::vector<Rat> random_nodes(CaseRng& rng, int count, bool allow_repeat) {
    std::vector<Rat> xs;
    while (static_cast<int>(xs.size()) < count) {
        Rat cand = rng.small_rat();
        bool dup = false;
        for (const Rat& x : xs) dup = dup || x == cand;
        if (!dup) xs.push_back(cand);
    }
    if (allow_repeat && count >= 2) xs[0] = xs[static_cast<size_t>(count) - 1];
    return xs;
}

struct IdentityHandler {
    std::string id;
    std::function<std::optional<Thunk>(const RunConfig&)> explicit_case;
    std::function<Thunk(CaseRng&, const RunConfig&, const VerifyOptions&)> random_case;
};

// One series input from --series (expression) or --expset, at order n.
std::optional<Thunk> series_identity_case(const RunConfig& cfg, int def_n,
                                          std::function<Report(const Series<Rat>&, int)> run) {
    int n = explicit_n(cfg, def_n);
    if (!cfg.series.empty()) {
        AstPtr ast = parse_expr_cfg(cfg.series[0]);
        return Thunk([ast, n, run] { return run(eval_series(*ast, n), n); });
    }
    if (!cfg.expset.empty()) {
        std::vector<long> S = parse_long_list_cfg(cfg.expset, "--expset");
        return Thunk([S, n, run] { return run(builders::exponent_set(S, n), n); });
    }
    return std::nullopt;
}

const std::vector<IdentityHandler>& registry() {
    static const std::vector<IdentityHandler> handlers = [] {
        std::vector<IdentityHandler> h;

        h.push_back({"theorem1",
                     [](const RunConfig& cfg) {
                         VerifyOptions opt = opts_of(cfg);
                         return series_identity_case(cfg, 4, [opt](const Series<Rat>& f, int n) {
                             return verify_theorem1(f, n, opt);
                         });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 8, 10)));
                         long mode = rng.uniform(1, 100);
                         Rat a0 = mode <= 60 ? Rat(1) : mode <= 80 ? random_a0_offunit(rng) : Rat(0);
                         Series<Rat> f = random_series(rng, n, a0);
                         return Thunk([f, n, opt] { return verify_theorem1(f, n, opt); });
                     }});

        h.push_back({"theorem2",
                     [](const RunConfig& cfg) {
                         VerifyOptions opt = opts_of(cfg);
                         return series_identity_case(cfg, 3, [opt](const Series<Rat>& f, int n) {
                             return verify_theorem2_symbolic(f, n, opt);
                         });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 5, 6)));
                         Series<Rat> f = random_series(rng, n, Rat(1));
                         return Thunk([f, n, opt] { return verify_theorem2_symbolic(f, n, opt); });
                     }});

        h.push_back({"triangularization",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         if (cfg.z == "z") throw ConfigError("--z: symbolic z is not supported here");
                         Rat z = parse_rat_cfg(cfg.z, "--z");
                         VerifyOptions opt = opts_of(cfg);
                         return series_identity_case(cfg, 4, [z, opt](const Series<Rat>& f, int n) {
                             return verify_triangularization(f, n, z, opt);
                         });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 6, 8)));
                         Rat z = rng.small_rat();
                         Series<Rat> f = random_series(rng, n, Rat(1));
                         return Thunk([f, n, z, opt] { return verify_triangularization(f, n, z, opt); });
                     }});

        h.push_back({"representations",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         if (cfg.expset.empty()) return std::nullopt;
                         std::vector<long> S = parse_long_list_cfg(cfg.expset, "--expset");
                         int n = explicit_n(cfg, 7);
                         VerifyOptions opt = opts_of(cfg);
                         return Thunk([S, n, opt] { return verify_representations(S, n, opt); });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(2, std::max(2, cap_n(cfg, 7, 8))));
                         std::vector<long> S{0, 1};
                         while (S.back() < n) S.push_back(S.back() + rng.uniform(1, 3));
                         return Thunk([S, n, opt] { return verify_representations(S, n, opt); });
                     }});

        h.push_back({"stirling2",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         long z = parse_positive_int_cfg(cfg.z, "--z");
                         int n = explicit_n(cfg, 4);
                         VerifyOptions opt = opts_of(cfg);
                         return Thunk([z, n, opt] { return verify_stirling2(z, n, opt); });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         long z = rng.uniform(1, 3);
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 6, 8)));
                         return Thunk([z, n, opt] { return verify_stirling2(z, n, opt); });
                     }});

        h.push_back({"stirling1",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         long z = parse_positive_int_cfg(cfg.z, "--z");
                         int n = explicit_n(cfg, 4);
                         VerifyOptions opt = opts_of(cfg);
                         return Thunk([z, n, opt] { return verify_stirling1(z, n, opt); });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         long z = rng.uniform(1, 3);
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 6, 8)));
                         return Thunk([z, n, opt] { return verify_stirling1(z, n, opt); });
                     }});

        h.push_back({"catalan",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         long z = parse_positive_int_cfg(cfg.z, "--z");
                         int n = explicit_n(cfg, 4);
                         if (n < 1) throw ConfigError("--n: catalan needs n >= 1");
                         VerifyOptions opt = opts_of(cfg);
                         return Thunk([z, n, opt] { return verify_catalan(z, n, opt); });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         long z = rng.uniform(1, 3);
                         int n = static_cast<int>(rng.uniform(1, std::max(1, cap_n(cfg, 5, 6))));
                         return Thunk([z, n, opt] { return verify_catalan(z, n, opt); });
                     }});

        h.push_back({"additive",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         if (cfg.series.size() < 2) return std::nullopt;
                         AstPtr fa = parse_expr_cfg(cfg.series[0]);
                         AstPtr ga = parse_expr_cfg(cfg.series[1]);
                         int n = explicit_n(cfg, 4);
                         VerifyOptions opt = opts_of(cfg);
                         return Thunk([fa, ga, n, opt] {
                             return verify_additive(eval_series(*fa, n), eval_series(*ga, n), n, opt);
                         });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 6, 8)));
                         Series<Rat> f = random_series(rng, n, Rat(1));
                         Series<Rat> g = random_series(rng, n, Rat(1));
                         return Thunk([f, g, n, opt] { return verify_additive(f, g, n, opt); });
                     }});

        h.push_back({"weighted",
                     [](const RunConfig&) -> std::optional<Thunk> { return std::nullopt; },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         long len = rng.uniform(1, 4);
                         std::vector<Rat> S, c;
                         for (long i = 0; i < len; ++i) {
                             S.push_back(rng.small_rat());
                             c.push_back(rng.small_rat());
                         }
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 5, 6)));
                         return Thunk([S, c, n, opt] { return verify_weighted(S, c, n, opt); });
                     }});

        h.push_back({"moments",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         Poly fp = Poly::one();
                         if (!cfg.series.empty()) {
                             AstPtr ast = parse_expr_cfg(cfg.series[0]);
                             try {
                                 fp = eval_poly(*ast);
                             } catch (const EvalError& e) {
                                 throw ConfigError(std::string("--series: ") + e.what());
                             }
                         }
                         int n = explicit_n(cfg, 4);
                         VerifyOptions opt = opts_of(cfg);
                         return Thunk([fp, n, opt] { return verify_moments(fp, n, opt); });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         Poly fp = random_poly(rng, static_cast<int>(rng.uniform(0, 4)));
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 5, 8)));
                         return Thunk([fp, n, opt] { return verify_moments(fp, n, opt); });
                     }});

        h.push_back({"mina-origin",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         if (cfg.series.empty() || cfg.xs.empty()) return std::nullopt;
                         if (cfg.z == "z") throw ConfigError("--z: symbolic z is not supported here");
                         AstPtr ast = parse_expr_cfg(cfg.series[0]);
                         std::vector<Rat> xs = parse_rat_list_cfg(cfg.xs, "--xs");
                         Rat z = parse_rat_cfg(cfg.z, "--z");
                         int n = static_cast<int>(xs.size()) - 1;
                         if (cfg.n >= 0 && cfg.n != n)
                             throw ConfigError("--xs must have n+1 entries");
                         VerifyOptions opt = opts_of(cfg);
                         return Thunk([ast, z, xs, n, opt] {
                             return verify_mina_origin(eval_series(*ast, n), z, xs, n, opt);
                         });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 5, 6)));
                         Rat z = rng.small_rat();
                         Series<Rat> f = random_series(rng, n, Rat(1));
                         std::vector<Rat> xs = random_nodes(rng, n + 1, rng.percent(15));
                         return Thunk([f, z, xs, n, opt] { return verify_mina_origin(f, z, xs, n, opt); });
                     }});

        h.push_back({"mina-point",
                     [](const RunConfig& cfg) -> std::optional<Thunk> {
                         if (cfg.series.empty() || cfg.ms.empty()) return std::nullopt;
                         AstPtr ast = parse_expr_cfg(cfg.series[0]);
                         Poly fp;
                         try {
                             fp = eval_poly(*ast);
                         } catch (const EvalError& e) {
                             throw ConfigError(std::string("--series: ") + e.what());
                         }
                         std::vector<long> ms = parse_long_list_cfg(cfg.ms, "--ms");
                         Rat t = cfg.t_point.empty() ? Rat(0) : parse_rat_cfg(cfg.t_point, "--t");
                         int n = static_cast<int>(ms.size()) - 1;
                         if (cfg.n >= 0 && cfg.n != n)
                             throw ConfigError("--ms must have n+1 entries");
                         VerifyOptions opt = opts_of(cfg);
                         return Thunk([fp, ms, t, n, opt] {
                             return verify_mina_at_point(fp, ms, t, n, opt);
                         });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 4, 5)));
                         Poly fp = random_poly(rng, static_cast<int>(rng.uniform(1, 5)));
                         // distinct exponents from 0..6
                         std::vector<long> pool{0, 1, 2, 3, 4, 5, 6};
                         std::vector<long> ms;
                         for (int i = 0; i <= n; ++i) {
                             long idx = rng.uniform(0, static_cast<long>(pool.size()) - 1);
                             ms.push_back(pool[static_cast<size_t>(idx)]);
                             pool.erase(pool.begin() + idx);
                         }
                         Rat t = rng.small_rat();
                         while (fp.eval(t).is_zero()) t = rng.small_rat();
                         return Thunk([fp, ms, t, n, opt] { return verify_mina_at_point(fp, ms, t, n, opt); });
                     }});

        h.push_back({"lemma-polys",
                     [](const RunConfig&) -> std::optional<Thunk> { return std::nullopt; },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 5, 6)));
                         std::vector<Poly> ps;
                         for (int j = 0; j <= n; ++j) ps.push_back(random_poly(rng, j));
                         std::vector<Rat> xs = random_nodes(rng, n + 1, rng.percent(15));
                         PolyFamily fam(std::move(ps));
                         return Thunk([fam, xs, opt] { return verify_lemma_polys(fam, xs, opt); });
                     }});

        h.push_back({"degree-claim",
                     [](const RunConfig& cfg) {
                         VerifyOptions opt = opts_of(cfg);
                         return series_identity_case(cfg, 4, [opt](const Series<Rat>& f, int n) {
                             return verify_degree_claim(f, n, opt);
                         });
                     },
                     [](CaseRng& rng, const RunConfig& cfg, const VerifyOptions& opt) {
                         int n = static_cast<int>(rng.uniform(0, cap_n(cfg, 6, 8)));
                         Series<Rat> f = random_series(rng, n, Rat(1));
                         if (n >= 1) {
                             std::vector<Rat> c = f.coeffs();
                             c[1] = rng.small_rat_nonzero();
                             f = Series<Rat>(std::move(c));
                         }
                         return Thunk([f, n, opt] { return verify_degree_claim(f, n, opt); });
                     }});

        return h;
    }();
    return handlers;
}

const IdentityHandler& handler_for(const std::string& id) {
    for (const IdentityHandler& h : registry())
        if (h.id == id) return h;
    throw ConfigError("unknown identity '" + id + "'");
}

Report run_thunk_guarded(const std::string& id, int case_idx, const Thunk& t) {
    Report r;
    try {
        r = t();
    } catch (const std::exception& e) {
        r.identity = id;
        r.pass = false;
        r.computed = std::string("error: ") + e.what();
        r.expected = "";
    }
    r.params.insert(r.params.begin(), {"case", std::to_string(case_idx)});
    return r;
}

ordered_json config_json(const RunConfig& cfg, const std::string& command) {
    ordered_json c;
    c["command"] = command;
    c["identities"] = cfg.identities.empty() ? std::vector<std::string>{"all"} : cfg.identities;
    c["n"] = cfg.n;
    c["z"] = cfg.z;
    c["series"] = cfg.series;
    c["expset"] = cfg.expset;
    c["xs"] = cfg.xs;
    c["ms"] = cfg.ms;
    c["t"] = cfg.t_point;
    c["cases"] = cfg.cases;
    c["seed"] = cfg.seed;
    c["oracle"] = cfg.oracle;
    c["format"] = cfg.format;
    c["jobs"] = cfg.jobs;
    return c;
}

}  // namespace

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const IdentityHandler& h : registry()) v.push_back(h.id);
        return v;
    }();
    return ids;
}

RunResult run_verify(const RunConfig& cfg) {
    if (cfg.format != "text" && cfg.format != "json")
        throw ConfigError("--format: expected text or json, got \"" + cfg.format + "\"");
    if (cfg.jobs < 1) throw ConfigError("--jobs: must be at least 1");
    if (cfg.cases < 1) throw ConfigError("--cases: must be at least 1");

    bool all_mode = cfg.identities.empty();
    for (const std::string& id : cfg.identities)
        if (id == "all") all_mode = true;
    std::vector<std::string> ids;
    if (all_mode) {
        ids = identity_ids();
    } else {
        for (const std::string& id : cfg.identities) {
            handler_for(id);  // validates
            ids.push_back(id);
        }
    }

    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opt = opts_of(cfg);

    // Sequential case generation: the seed and config fully determine every
    // case before any verifier runs.
    std::vector<std::pair<std::string, int>> labels;
    std::vector<Thunk> thunks;
    for (const std::string& id : ids) {
        const IdentityHandler& h = handler_for(id);
        std::optional<Thunk> one;
        if (!all_mode && !cfg.cases_given) one = h.explicit_case(cfg);
        if (one) {
            labels.emplace_back(id, 0);
            thunks.push_back(std::move(*one));
            continue;
        }
        CaseRng rng(cfg.seed ^ fnv1a64(id));
        for (int i = 0; i < cfg.cases; ++i) {
            labels.emplace_back(id, i);
            thunks.push_back(h.random_case(rng, cfg, opt));
        }
    }

    std::vector<Report> reports(thunks.size());
    int jobs = std::min<int>(cfg.jobs, static_cast<int>(thunks.size()));
    if (jobs <= 1) {
        for (size_t i = 0; i < thunks.size(); ++i)
            reports[i] = run_thunk_guarded(labels[i].first, labels[i].second, thunks[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= thunks.size()) return;
                    reports[i] = run_thunk_guarded(labels[i].first, labels[i].second, thunks[i]);
                }
            });
        for (std::thread& th : pool) th.join();
    }

    RunResult res;
    res.reports = std::move(reports);
    res.total = static_cast<int>(res.reports.size());
    for (const Report& r : res.reports)
        if (!r.pass) ++res.failed;
    res.elapsed_ms = elapsed_ms_since(t0);
    return res;
}

std::string render_verify_text(const RunConfig& cfg, const RunResult& res) {
    std::string out;
    for (const Report& r : res.reports) {
        out += r.pass ? "[PASS] " : "[FAIL] ";
        out += r.identity;
        for (const auto& [k, v] : r.params) out += " " + k + "=" + v;
        out += " computed=" + (r.computed.empty() ? "-" : r.computed);
        out += " expected=" + (r.expected.empty() ? "-" : r.expected);
        if (cfg.timings) out += " (" + format_ms(r.elapsed_ms) + " ms)";
        out += "\n";
    }
    out += "summary: " + std::to_string(res.total - res.failed) + "/" + std::to_string(res.total) +
           " passed, " + std::to_string(res.failed) + " failed";
    if (cfg.timings) out += " in " + format_ms(res.elapsed_ms) + " ms";
    out += "\n";
    return out;
}

std::string render_verify_json(const RunConfig& cfg, const RunResult& res) {
    ordered_json j;
    j["config"] = config_json(cfg, "verify");
    ordered_json reports = ordered_json::array();
    for (const Report& r : res.reports) {
        ordered_json jr;
        jr["identity"] = r.identity;
        ordered_json params;
        for (const auto& [k, v] : r.params) params[k] = v;
        jr["params"] = params;
        jr["computed"] = r.computed;
        jr["expected"] = r.expected;
        jr["pass"] = r.pass;
        if (cfg.timings) jr["elapsed_ms"] = r.elapsed_ms;
        reports.push_back(std::move(jr));
    }
    j["reports"] = std::move(reports);
    ordered_json summary;
    summary["total"] = res.total;
    summary["passed"] = res.total - res.failed;
    summary["failed"] = res.failed;
    if (cfg.timings) summary["elapsed_ms"] = res.elapsed_ms;
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

std::string run_table(const RunConfig& cfg) {
    if (cfg.format != "text" && cfg.format != "json")
        throw ConfigError("--format: expected text or json, got \"" + cfg.format + "\"");
    int n = explicit_n(cfg, 4);
    Series<Rat> f = [&] {
        if (!cfg.series.empty()) return eval_series(*parse_expr_cfg(cfg.series[0]), n);
        if (!cfg.expset.empty())
            return builders::exponent_set(parse_long_list_cfg(cfg.expset, "--expset"), n);
        throw ConfigError("table requires --series or --expset");
    }();

    auto render = [&cfg](const auto& m) -> std::string {
        if (cfg.format == "text") return matrix_str(m);
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < m.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < m.cols(); ++j)
                row.push_back(domain<std::decay_t<decltype(m.at(0, 0))>>::str(m.at(i, j)));
            rows.push_back(std::move(row));
        }
        return rows.dump(2) + "\n";
    };

    if (cfg.z == "z") return render(coeff_matrix(lift_series(f), n, Poly::variable()));
    return render(coeff_matrix(f, n, parse_rat_cfg(cfg.z, "--z")));
}

std::string run_bench(const RunConfig& cfg, bool* all_agree) {
    if (all_agree) *all_agree = true;
    int nmax = cfg.n >= 0 ? cfg.n : 8;
    if (nmax < 1) throw ConfigError("--n: bench needs n >= 1");
    bool symbolic = cfg.z == "z";
    Rat z = symbolic ? Rat(1) : parse_rat_cfg(cfg.z, "--z");

    Series<Rat> f = [&] {
        if (!cfg.series.empty()) return eval_series(*parse_expr_cfg(cfg.series[0]), nmax);
        CaseRng rng(cfg.seed);
        Series<Rat> g = random_series(rng, nmax, Rat(1));
        std::vector<Rat> c = g.coeffs();
        if (nmax >= 1) c[1] = rng.small_rat_nonzero();
        return Series<Rat>(std::move(c));
    }();
    if (!f.constant_term().is_one())
        throw ConfigError("bench requires a series with unit constant term");

    std::string out = "     n      bits   bareiss_ms  shortcut_ms  agree";
    if (symbolic) out += "  det_degree";
    out += "\n";
    for (int n = 1; n <= nmax; ++n) {
        char line[160];
        if (symbolic) {
            ExactMatrix<Poly> c = coeff_matrix(lift_series(f.truncated(n)), n, Poly::variable());
            auto t0 = std::chrono::steady_clock::now();
            Poly d1 = det_bareiss(c);
            double ms1 = elapsed_ms_since(t0);
            auto t1 = std::chrono::steady_clock::now();
            ExactMatrix<Poly> bc = binomial_sign_matrix<Poly>(n) * c;
            Poly d2 = Poly::one();
            for (int i = 0; i <= n; ++i) d2 *= bc.at(i, i);
            double ms2 = elapsed_ms_since(t1);
            bool same = d1 == d2;
            if (all_agree && !same) *all_agree = false;
            std::snprintf(line, sizeof line, "%6d  %8zu  %11.3f  %11.3f  %5s  %10d\n", n,
                          c.max_bit_length(), ms1, ms2, same ? "yes" : "NO", d1.degree());
        } else {
            ExactMatrix<Rat> c = coeff_matrix(f.truncated(n), n, z);
            auto t0 = std::chrono::steady_clock::now();
            Rat d1 = det_bareiss(c);
            double ms1 = elapsed_ms_since(t0);
            auto t1 = std::chrono::steady_clock::now();
            ExactMatrix<Rat> bc = binomial_sign_matrix<Rat>(n) * c;
            Rat d2(1);
            for (int i = 0; i <= n; ++i) d2 *= bc.at(i, i);
            double ms2 = elapsed_ms_since(t1);
            bool same = d1 == d2;
            if (all_agree && !same) *all_agree = false;
            std::snprintf(line, sizeof line, "%6d  %8zu  %11.3f  %11.3f  %5s\n", n,
                          c.max_bit_length(), ms1, ms2, same ? "yes" : "NO");
        }
        out += line;
    }
    return out;
}

}  // namespace minadet
