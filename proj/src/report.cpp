#include "pcf/report.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <system_error>

namespace pcf {

namespace fs = std::filesystem;

// ------------------------------------------------------------------ polynomials

Json poly_to_json(const IntPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

IntPolynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error("polynomial must be an array of decimal strings");
    std::vector<mpz_class> c;
    c.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_string()) throw Error("polynomial coefficient must be a decimal string");
        mpz_class z;
        if (z.set_str(v.get<std::string>(), 10) != 0) throw Error("bad integer: " + v.get<std::string>());
        c.push_back(std::move(z));
    }
    return IntPolynomial(std::move(c));
}

Json factors_to_json(const std::vector<std::pair<IntPolynomial, unsigned>>& factors) {
    Json a = Json::array();
    for (const auto& [f, k] : factors) a.push_back(Json{{"coeffs", poly_to_json(f)}, {"multiplicity", k}});
    return a;
}

std::vector<std::pair<IntPolynomial, unsigned>> factors_from_json(const Json& j) {
    std::vector<std::pair<IntPolynomial, unsigned>> out;
    for (const auto& f : j) out.emplace_back(poly_from_json(f.at("coeffs")), f.at("multiplicity").get<unsigned>());
    return out;
}

// ------------------------------------------------------------------ reports

Json outcome_to_json(const CheckOutcome& o) {
    Json j;
    j["check"] = to_string(o.check);
    j["factor"] = o.factor;
    j["subject"] = o.subject;
    j["status"] = to_string(o.status);
    j["value"] = o.value ? Json(*o.value) : Json(nullptr);
    j["reason"] = o.reason;
    j["witness"] = o.witness;
    return j;
}

CheckOutcome outcome_from_json(const Json& j) {
    CheckOutcome o;
    const auto id = check_id_from_string(j.at("check").get<std::string>());
    const auto st = status_from_string(j.at("status").get<std::string>());
    if (!id || !st) throw Error("unknown check or status name");
    o.check = *id;
    o.status = *st;
    o.factor = j.at("factor").get<long>();
    o.subject = j.at("subject").get<std::vector<long>>();
    if (!j.at("value").is_null()) o.value = j.at("value").get<unsigned long>();
    o.reason = j.at("reason").get<std::string>();
    o.witness = j.at("witness").get<std::string>();
    return o;
}

Json report_to_json(const VerificationReport& r, bool timing) {
    Json j;
    j["kind"] = r.kind;
    j["d"] = r.d;
    j["m"] = r.m;
    j["n"] = r.n;
    j["seed"] = std::to_string(r.seed);
    j["degenerate"] = r.degenerate;
    j["G"] = poly_to_json(r.G);
    j["factors"] = factors_to_json(r.factors);
    Json outs = Json::array();
    for (const auto& o : r.outcomes) outs.push_back(outcome_to_json(o));
    j["outcomes"] = std::move(outs);
    j["theorem_refutation"] = r.has_theorem_refutation();
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.kind = j.at("kind").get<std::string>();
    r.d = j.at("d").get<long>();
    r.m = j.at("m").get<long>();
    r.n = j.at("n").get<long>();
    r.seed = std::stoull(j.at("seed").get<std::string>());
    r.degenerate = j.at("degenerate").get<bool>();
    r.G = poly_from_json(j.at("G"));
    r.factors = factors_from_json(j.at("factors"));
    for (const auto& o : j.at("outcomes")) r.outcomes.push_back(outcome_from_json(o));
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

namespace {

std::string short_poly(const IntPolynomial& p) {
    if (p.degree() <= 12) return p.to_string();
    return "<degree " + std::to_string(p.degree()) + ">";
}

std::string join(const std::vector<long>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

} // namespace

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.kind << " d=" << r.d << " m=" << r.m << " n=" << r.n << "\n";
    if (r.kind == "case" || r.kind == "periodic" || r.kind == "appendix") {
        os << "G = " << short_poly(r.G) << (r.degenerate ? "  (degenerate)" : "") << "\n";
    }
    for (std::size_t f = 0; f < r.factors.size(); ++f)
        os << "factor " << f << ": " << short_poly(r.factors[f].first) << "  (degree " << r.factors[f].first.degree()
           << (r.factors[f].second > 1 ? ", multiplicity " + std::to_string(r.factors[f].second) : "") << ")\n";
    std::map<std::string, int> tally;
    for (const auto& o : r.outcomes) {
        ++tally[to_string(o.status)];
        os << "  ";
        if (o.factor >= 0) os << "f" << o.factor << " ";
        os << to_string(o.check) << " [" << join(o.subject, ",") << "] " << to_string(o.status);
        if (o.value) os << " A=" << *o.value;
        if (!o.reason.empty()) os << " : " << o.reason;
        if (o.status == Status::Refuted && !o.witness.empty()) os << " (" << o.witness << ")";
        os << "\n";
    }
    os << "summary:";
    for (const auto& [k, v] : tally) os << " " << k << "=" << v;
    os << "; theorem refutation: " << (r.has_theorem_refutation() ? "yes" : "no") << "\n";
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_header() { return "kind,d,m,n,factor,check,subject,status,value,reason,witness\n"; }

std::string report_to_csv_rows(const VerificationReport& r) {
    std::ostringstream os;
    for (const auto& o : r.outcomes) {
        os << r.kind << ',' << r.d << ',' << r.m << ',' << r.n << ',' << o.factor << ',' << to_string(o.check) << ','
           << join(o.subject, ";") << ',' << to_string(o.status) << ',' << (o.value ? std::to_string(*o.value) : "")
           << ',' << csv_escape(o.reason) << ',' << csv_escape(o.witness) << '\n';
    }
    return os.str();
}

// ------------------------------------------------------------------ cache

Json cache_to_json(const CacheEntry& e) {
    Json j;
    j["version"] = e.version;
    j["d"] = e.d;
    j["m"] = e.m;
    j["n"] = e.n;
    j["G"] = poly_to_json(e.G);
    j["degenerate"] = e.degenerate;
    if (e.factors) {
        j["unit"] = e.factors->unit.get_str();
        j["factors"] = factors_to_json(e.factors->factors);
    } else {
        j["factors"] = nullptr;
    }
    return j;
}

CacheEntry cache_from_json(const Json& j) {
    CacheEntry e;
    e.version = j.at("version").get<int>();
    e.d = j.at("d").get<long>();
    e.m = j.at("m").get<long>();
    e.n = j.at("n").get<long>();
    e.G = poly_from_json(j.at("G"));
    e.degenerate = j.at("degenerate").get<bool>();
    if (!j.at("factors").is_null()) {
        FactoredPoly fp;
        if (fp.unit.set_str(j.at("unit").get<std::string>(), 10) != 0) throw Error("bad unit");
        fp.factors = factors_from_json(j.at("factors"));
        e.factors = std::move(fp);
    }
    return e;
}

fs::path cache_path(const fs::path& dir, long d, long m, long n) {
    return dir / ("g_" + std::to_string(d) + "_" + std::to_string(m) + "_" + std::to_string(n) + ".json");
}

std::optional<CacheEntry> cache_read(const fs::path& dir, long d, long m, long n) {
    const fs::path p = cache_path(dir, d, m, n);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    try {
        const Json j = Json::parse(in);
        CacheEntry e = cache_from_json(j);
        if (e.version != CacheEntry::kVersion || e.d != d || e.m != m || e.n != n) return std::nullopt;
        if (!e.G.is_monic() && !(e.degenerate && e.G == IntPolynomial::constant(1))) return std::nullopt;
        if (e.factors && e.factors->expand() != e.G) return std::nullopt;
        return e;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    fs::create_directories(dir);
    std::random_device rd;
    const fs::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error("cannot rename into " + path.string());
    }
}

void cache_write(const fs::path& dir, const CacheEntry& e) {
    write_file_atomic(cache_path(dir, e.d, e.m, e.n), cache_to_json(e).dump(1) + "\n");
}

} // namespace pcf
