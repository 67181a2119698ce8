#include "pcf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pcf/report.hpp"

namespace pcf {

namespace {

namespace fs = std::filesystem;

struct Globals {
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::string cache_dir;
    bool no_cache = false;
    unsigned jobs = 1;
    bool extended = false;
    double budget_seconds = 600;
    bool timing = false;
};

std::string default_cache_dir() {
    if (const char* env = std::getenv("PCF_CACHE_DIR"); env && *env) return env;
    return ".pcf-cache/";
}

std::string set_string(const std::vector<unsigned long>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::string triple(long d, long m, long n) {
    return "(" + std::to_string(d) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
}

// G and optionally its factorization, from the cache when possible.
CacheEntry load_case(long d, long m, long n, bool need_factors, const Globals& g, std::ostream& err) {
    const fs::path dir = g.cache_dir;
    if (!g.no_cache) {
        if (auto hit = cache_read(dir, d, m, n); hit && (!need_factors || hit->factors)) return *hit;
    }
    CacheEntry e;
    e.d = d;
    e.m = m;
    e.n = n;
    const MisiurewiczPoly G = gdmn(d, m, n);
    e.G = G.G;
    e.degenerate = G.degenerate;
    if (need_factors && !G.degenerate) e.factors = factor_z(G.G, g.seed);
    if (!g.no_cache) {
        try {
            cache_write(dir, e);
        } catch (const std::exception& ex) {
            err << "warning: cache not written: " << ex.what() << "\n";
        }
    }
    return e;
}

void emit_reports(const std::vector<VerificationReport>& reps, const Globals& g, std::ostream& out) {
    if (g.format == "json") {
        if (reps.size() == 1) {
            out << report_to_json(reps[0], g.timing).dump(2) << "\n";
        } else {
            Json a = Json::array();
            for (const auto& r : reps) a.push_back(report_to_json(r, g.timing));
            out << Json{{"reports", a}}.dump(2) << "\n";
        }
    } else if (g.format == "csv") {
        out << csv_header();
        for (const auto& r : reps) out << report_to_csv_rows(r);
    } else {
        for (std::size_t i = 0; i < reps.size(); ++i) out << (i ? "\n" : "") << report_to_text(reps[i]);
    }
}

int report_exit(const std::vector<VerificationReport>& reps) {
    for (const auto& r : reps)
        if (r.has_theorem_refutation()) return kExitRefuted;
    return kExitOk;
}

std::vector<mpz_class> parse_coeff_list(const std::string& text) {
    std::string s = text;
    for (char& ch : s)
        if (ch == ',' || ch == '[' || ch == ']' || ch == '"') ch = ' ';
    std::istringstream is(s);
    std::vector<mpz_class> out;
    std::string tok;
    while (is >> tok) {
        mpz_class z;
        if (z.set_str(tok, 10) != 0) throw Error("bad integer coefficient: " + tok);
        out.push_back(std::move(z));
    }
    if (out.empty()) throw Error("empty coefficient list");
    return out;
}

// ------------------------------------------------------------------ subcommands

int cmd_gdmn(long d, long m, long n, bool factor, const Globals& g, std::ostream& out, std::ostream& err) {
    const CacheEntry e = load_case(d, m, n, factor, g, err);
    if (g.format == "json") {
        Json j;
        j["coeffs"] = poly_to_json(e.G);
        if (e.degenerate) j["degenerate"] = true;
        if (factor) j["factors"] = factors_to_json(e.factors ? e.factors->factors : decltype(e.factors->factors){});
        out << j.dump() << "\n";
    } else if (g.format == "csv") {
        out << "degree,coeff\n";
        for (std::size_t i = 0; i < e.G.coeffs().size(); ++i) out << i << ',' << e.G.coeffs()[i].get_str() << '\n';
    } else {
        out << e.G.to_string() << "\n";
        if (e.degenerate) out << "degenerate\n";
        if (factor && e.factors)
            for (const auto& [f, k] : e.factors->factors)
                out << "factor: " << f.to_string() << (k > 1 ? "  ^" + std::to_string(k) : "") << "\n";
    }
    return kExitOk;
}

int cmd_factor(const IntPolynomial& p, const Globals& g, std::ostream& out) {
    const FactoredPoly fp = factor_z(p, g.seed);
    if (g.format == "json") {
        out << Json{{"unit", fp.unit.get_str()}, {"factors", factors_to_json(fp.factors)}}.dump() << "\n";
    } else if (g.format == "csv") {
        out << "factor,multiplicity,degree,coeffs\n";
        for (std::size_t i = 0; i < fp.factors.size(); ++i) {
            std::string cs;
            for (const auto& c : fp.factors[i].first.coeffs()) cs += (cs.empty() ? "" : ";") + c.get_str();
            out << i << ',' << fp.factors[i].second << ',' << fp.factors[i].first.degree() << ',' << cs << '\n';
        }
    } else {
        if (fp.unit != 1) out << "unit: " << fp.unit.get_str() << "\n";
        for (const auto& [f, k] : fp.factors)
            out << f.to_string() << (k > 1 ? "  ^" + std::to_string(k) : "") << "\n";
    }
    return kExitOk;
}

int cmd_verify(long d, long m, long n, const Globals& g, std::ostream& out, std::ostream& err) {
    const CacheEntry e = load_case(d, m, n, true, g, err);
    VerifyOptions opts;
    opts.seed = g.seed;
    opts.jobs = g.jobs;
    opts.G = MisiurewiczPoly{d, m, n, e.G, e.degenerate};
    opts.factorization = e.factors;
    const VerificationReport r = m == 0 ? verify_periodic(d, n, opts) : verify_case(d, m, n, opts);
    emit_reports({r}, g, out);
    return report_exit({r});
}

int cmd_appendix(const std::vector<long>& only, const Globals& g, std::ostream& out) {
    AppendixOptions opts;
    opts.extended = g.extended;
    opts.budget_seconds = g.budget_seconds;
    opts.jobs = g.jobs;
    opts.seed = g.seed;

    struct Row {
        const AppendixCase* c;
        std::optional<VerificationReport> rep;
        bool pass;
    };
    std::vector<Row> rows;
    for (const auto& c : appendix_cases()) {
        const bool selected = only.empty() || (only[0] == c.d && only[1] == c.m && only[2] == c.n);
        if (!selected) continue;
        if (only.empty() && c.extended && !g.extended) {
            rows.push_back({&c, std::nullopt, true});
            continue;
        }
        VerificationReport r = run_appendix_case(c, opts);
        const bool pass = appendix_case_passes(c, r);
        rows.push_back({&c, std::move(r), pass});
    }
    if (rows.empty()) throw Error("not an appendix case: " + triple(only[0], only[1], only[2]));

    bool all = true;
    for (const auto& row : rows) all = all && row.pass;

    auto found_text = [](const Row& row) {
        if (row.c->expected.empty()) {
            const bool none = std::any_of(row.rep->outcomes.begin(), row.rep->outcomes.end(), [](const CheckOutcome& o) {
                return o.check == CheckId::ExponentTable && o.status == Status::Refuted;
            });
            return std::string(none ? "no perfect power" : "perfect powers " + set_string(row.rep->exponent_set()));
        }
        return set_string(row.rep->exponent_set());
    };
    auto budget_hit = [](const Row& row) {
        return std::any_of(row.rep->outcomes.begin(), row.rep->outcomes.end(),
                           [](const CheckOutcome& o) { return o.status == Status::Skipped; });
    };

    if (g.format == "json") {
        Json cases = Json::array();
        for (const auto& row : rows) {
            Json j;
            j["d"] = row.c->d;
            j["m"] = row.c->m;
            j["n"] = row.c->n;
            j["expected"] = row.c->expected.empty() ? Json(nullptr) : Json(row.c->expected);
            j["extended"] = row.c->extended;
            if (row.rep) {
                j["found"] = row.rep->exponent_set();
                j["pass"] = row.pass;
                j["report"] = report_to_json(*row.rep, g.timing);
            } else {
                j["found"] = nullptr;
                j["pass"] = nullptr;
                j["report"] = nullptr;
            }
            cases.push_back(std::move(j));
        }
        out << Json{{"kind", "appendix"}, {"extended", g.extended}, {"pass", all}, {"cases", cases}}.dump(2) << "\n";
    } else if (g.format == "csv") {
        out << "d,m,n,expected,found,status\n";
        for (const auto& row : rows) {
            out << row.c->d << ',' << row.c->m << ',' << row.c->n << ','
                << csv_escape(row.c->expected.empty() ? "none" : set_string(row.c->expected)) << ',';
            if (row.rep)
                out << csv_escape(found_text(row)) << ',' << (row.pass ? "PASS" : "FAIL") << '\n';
            else
                out << ",SKIPPED\n";
        }
    } else {
        for (const auto& row : rows) {
            out << triple(row.c->d, row.c->m, row.c->n) << ": ";
            if (!row.rep) {
                out << "skipped (needs --extended)\n";
                continue;
            }
            if (budget_hit(row)) {
                out << "time budget exceeded FAIL\n";
                continue;
            }
            out << found_text(row) << (row.pass ? " PASS" : " FAIL");
            if (!row.pass && !row.c->expected.empty()) out << " (expected " << set_string(row.c->expected) << ")";
            out << "\n";
        }
    }
    return all ? kExitOk : kExitRefuted;
}

int cmd_disc(long d, const std::vector<IntPolynomial>& fields, long depth, const Globals& g, std::ostream& out) {
    VerificationReport rep;
    rep.kind = "disc";
    rep.d = d;
    rep.n = depth;
    rep.seed = g.seed;
    for (std::size_t f = 0; f < fields.size(); ++f) {
        const FieldPtr K = NumberField::create(fields[f]);
        rep.factors.emplace_back(fields[f], 1u);
        for (auto o : verify_disc_recursion(K, d, depth)) {
            o.factor = static_cast<long>(f);
            rep.outcomes.push_back(std::move(o));
        }
    }
    bool power_ok = true;
    for (const auto& o : rep.outcomes)
        if (o.subject[1] == 1 && o.status == Status::Refuted) power_ok = false;

    if (g.format == "text") {
        for (std::size_t f = 0; f < fields.size(); ++f) {
            out << "field " << f << ": " << fields[f].to_string() << "\n";
            std::optional<long> printed_fail, power_fail;
            for (const auto& o : rep.outcomes) {
                if (o.factor != static_cast<long>(f)) continue;
                const bool bad = o.status == Status::Refuted;
                auto& slot = o.subject[1] == 0 ? printed_fail : power_fail;
                if (bad && !slot) slot = o.subject[0];
                if (o.subject[1] == 0)
                    out << "  n=" << o.subject[0] << " " << o.witness.substr(0, o.witness.find(" rhs=")) << "\n";
            }
            auto word = [](const std::optional<long>& fail) {
                return fail ? "FAIL at n=" + std::to_string(*fail) : std::string("PASS");
            };
            out << "printed-form: " << word(printed_fail) << "; power-variant: " << word(power_fail) << "\n";
        }
    } else {
        emit_reports({rep}, g, out);
    }
    return power_ok ? kExitOk : kExitRefuted;
}

int cmd_lemma21(long d, std::optional<long> i, std::optional<long> j, const Globals& g, std::ostream& out) {
    VerificationReport rep;
    rep.kind = "lemma21";
    rep.d = d;
    rep.seed = g.seed;
    if (i && j) {
        rep.outcomes.push_back(verify_lemma_2_1(d, *i, *j));
    } else {
        for (long jj = 1; jj <= 4; ++jj)
            for (long ii = 1; ii <= jj; ++ii) rep.outcomes.push_back(verify_lemma_2_1(d, ii, jj));
    }
    emit_reports({rep}, g, out);
    return report_exit({rep});
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Misiurewicz polynomials of x^d + c: construction, factorization and certificates", "pcf"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    g.cache_dir = default_cache_dir();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", g.seed, "Seed for randomized modular factoring");
    app.add_option("--cache-dir", g.cache_dir, "Cache directory (default .pcf-cache/, or $PCF_CACHE_DIR)");
    app.add_flag("--no-cache", g.no_cache, "Neither read nor write the cache");
    app.add_option("--jobs", g.jobs, "Worker threads for per-factor checks")->check(CLI::Range(1u, 1024u));
    app.add_flag("--extended", g.extended, "Include the long appendix cases");
    app.add_option("--budget-seconds", g.budget_seconds, "Time budget per appendix case")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", g.timing, "Include wall-clock time in JSON reports");

    long d = 0, m = 0, n = 1, depth = 3;
    bool factor = false;
    std::string coeffs, g_file;
    std::vector<long> only;
    std::optional<long> li, lj;

    auto case_opts = [&](CLI::App* sub, bool with_m) {
        sub->add_option("-d", d, "Degree d of x^d + c")->required();
        if (with_m) sub->add_option("-m", m, "Preperiod m")->required();
        sub->add_option("-n", n, "Period n")->required();
    };

    auto* s_gdmn = app.add_subcommand("gdmn", "Construct G_d(m,n)");
    case_opts(s_gdmn, true);
    s_gdmn->add_flag("--factor", factor, "Also factor G over the integers");

    auto* s_factor = app.add_subcommand("factor", "Factor G_d(m,n), or a given polynomial, over the integers");
    auto* fd = s_factor->add_option("-d", d, "Degree d");
    auto* fm = s_factor->add_option("-m", m, "Preperiod m");
    auto* fn = s_factor->add_option("-n", n, "Period n");
    auto* fc = s_factor->add_option("--coeffs", coeffs, "Comma-separated coefficients, ascending degree");
    fd->needs(fm)->needs(fn);
    fc->excludes(fd)->excludes(fm)->excludes(fn);

    auto* s_verify = app.add_subcommand("verify", "Certify the arithmetic statements for one case");
    case_opts(s_verify, true);

    auto* s_periodic = app.add_subcommand("periodic", "Unit checks for the periodic case G_d(0,n)");
    case_opts(s_periodic, false);

    auto* s_app = app.add_subcommand("appendix", "Reproduce the exponent tables");
    s_app->add_option("--case", only, "Run one case, given as d m n")->expected(3)->delimiter(',');

    auto* s_disc = app.add_subcommand("disc", "Discriminant recursion of the iterates over a number field");
    s_disc->add_option("-d", d, "Degree d")->required();
    auto* dm = s_disc->add_option("-m", m, "Preperiod m of the case whose factors give the fields");
    auto* dn = s_disc->add_option("-n", n, "Period n");
    auto* dg = s_disc->add_option("-g,--g-file", g_file, "File with the coefficients of g, ascending degree")
                   ->check(CLI::ExistingFile);
    dm->needs(dn);
    dg->excludes(dm)->excludes(dn);
    s_disc->add_option("--depth", depth, "Number of iterates")->check(CLI::Range(1, 12));

    auto* s_l21 = app.add_subcommand("lemma21", "Symbolic divisibility of the orbit difference quotients");
    s_l21->add_option("-d", d, "Degree d")->required();
    auto* oi = s_l21->add_option("-i", li, "Index i");
    auto* oj = s_l21->add_option("-j", lj, "Index j");
    oi->needs(oj);
    oj->needs(oi);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (*s_gdmn) return cmd_gdmn(d, m, n, factor, g, out, err);
        if (*s_factor) {
            if (!coeffs.empty()) return cmd_factor(IntPolynomial(parse_coeff_list(coeffs)), g, out);
            if (fd->count() == 0) throw Error("factor: give -d -m -n or --coeffs");
            const CacheEntry e = load_case(d, m, n, true, g, err);
            if (e.degenerate) return cmd_factor(e.G, g, out);
            FactoredPoly fp = *e.factors;
            return cmd_factor(fp.expand(), g, out);
        }
        if (*s_verify) return cmd_verify(d, m, n, g, out, err);
        if (*s_periodic) return cmd_verify(d, 0, n, g, out, err);
        if (*s_app) return cmd_appendix(only, g, out);
        if (*s_disc) {
            std::vector<IntPolynomial> fields;
            if (!g_file.empty()) {
                std::ifstream in(g_file);
                std::stringstream ss;
                ss << in.rdbuf();
                fields.emplace_back(parse_coeff_list(ss.str()));
            } else {
                if (dm->count() == 0) throw Error("disc: give -m -n or --g-file");
                const CacheEntry e = load_case(d, m, n, true, g, err);
                if (e.degenerate) throw Error("disc: G" + triple(d, m, n) + " is constant");
                for (const auto& f : e.factors->factors) fields.push_back(f.first);
            }
            return cmd_disc(d, fields, depth, g, out);
        }
        if (*s_l21) return cmd_lemma21(d, li, lj, g, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace pcf
