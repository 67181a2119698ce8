#include "pcf/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <set>
#include <thread>

#include "pcf/latticeideal.hpp"
#include "pcf/modp.hpp"

namespace pcf {

namespace {

// p(t^d) over F_d.
modp::Poly frobenius_compose(const modp::Poly& p, long d) {
    if (p.empty()) return {};
    modp::Poly out((p.size() - 1) * static_cast<std::size_t>(d) + 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k) out[k * static_cast<std::size_t>(d)] = p[k];
    return out;
}

using Clock = std::chrono::steady_clock;
using Task = std::function<std::vector<CheckOutcome>()>;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs every task, `jobs` at a time, and concatenates results in task order.
std::vector<CheckOutcome> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<std::vector<CheckOutcome>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<CheckOutcome> out;
    for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return out;
}

void canonical_order(std::vector<CheckOutcome>& v) {
    std::stable_sort(v.begin(), v.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        if (a.check != b.check) return static_cast<int>(a.check) < static_cast<int>(b.check);
        return a.subject < b.subject;
    });
}

CheckOutcome outcome(CheckId id, long factor, std::vector<long> subject, Status st, std::string reason = {},
                     std::string witness = {}) {
    CheckOutcome o;
    o.check = id;
    o.factor = factor;
    o.subject = std::move(subject);
    o.status = st;
    o.reason = std::move(reason);
    o.witness = std::move(witness);
    return o;
}

CheckOutcome from_certificate(CheckId id, long factor, std::vector<long> subject, const Certificate& c) {
    return outcome(id, factor, std::move(subject), c.certified ? Status::Certified : Status::Refuted, c.reason,
                   c.witness);
}

struct FactorContext {
    long index;
    FieldPtr field;
    std::vector<FieldElement> e; // e[0] = 0, e[i] = a_i mod g
};

CheckOutcome exact_type_check(const FactorContext& fc, long m, long n) {
    const auto& e = fc.e;
    const auto at = [&](long i) { return e[static_cast<std::size_t>(i)]; };
    if (at(m + n) != at(m))
        return outcome(CheckId::ExactType, fc.index, {m, n}, Status::Refuted, "e_{m+n} != e_m",
                       "e_m=" + at(m).to_string() + " e_{m+n}=" + at(m + n).to_string());
    for (long k = 0; k < m; ++k)
        if (at(k + n) == at(k))
            return outcome(CheckId::ExactType, fc.index, {m, n}, Status::Refuted, "tail shorter than m",
                           "k=" + std::to_string(k));
    for (long np : divisors(n)) {
        if (np == n) continue;
        if (at(m + np) == at(m))
            return outcome(CheckId::ExactType, fc.index, {m, n}, Status::Refuted, "period smaller than n",
                           "n'=" + std::to_string(np));
    }
    return outcome(CheckId::ExactType, fc.index, {m, n}, Status::Certified);
}

std::string norm_witness(const FieldElement& x) { return "N=" + norm(x).get_str(); }

FactoredPoly factor_or_cached(const MisiurewiczPoly& G, const VerifyOptions& opts) {
    if (opts.factorization) {
        if (opts.factorization->expand() != G.G) throw Error("cached factorization does not reproduce G");
        return *opts.factorization;
    }
    return factor_z(G.G, opts.seed);
}

} // namespace

// ------------------------------------------------------------------ names

const char* to_string(CheckId id) {
    switch (id) {
    case CheckId::ExactType: return "ExactType";
    case CheckId::Unit_1_3a: return "Unit_1_3a";
    case CheckId::Power_1_3b: return "Power_1_3b";
    case CheckId::Divides_1_4: return "Divides_1_4";
    case CheckId::Associate_2_4: return "Associate_2_4";
    case CheckId::RigidDiv_2_3: return "RigidDiv_2_3";
    case CheckId::Lemma_2_1: return "Lemma_2_1";
    case CheckId::Gleason_3_1: return "Gleason_3_1";
    case CheckId::DiscRecursion_2_27: return "DiscRecursion_2_27";
    case CheckId::ExponentTable: return "ExponentTable";
    case CheckId::TotallyRamifiedFlag: return "TotallyRamifiedFlag";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
    case Status::Certified: return "Certified";
    case Status::Refuted: return "Refuted";
    case Status::CertifiedInOrder: return "CertifiedInOrder";
    case Status::InconclusiveInOrder: return "InconclusiveInOrder";
    case Status::Skipped: return "Skipped";
    }
    return "?";
}

std::optional<CheckId> check_id_from_string(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(CheckId::TotallyRamifiedFlag); ++i)
        if (s == to_string(static_cast<CheckId>(i))) return static_cast<CheckId>(i);
    return std::nullopt;
}

std::optional<Status> status_from_string(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(Status::Skipped); ++i)
        if (s == to_string(static_cast<Status>(i))) return static_cast<Status>(i);
    return std::nullopt;
}

bool is_theorem_check(const CheckOutcome& o, long d) {
    switch (o.check) {
    case CheckId::Power_1_3b: return is_prime(d);
    case CheckId::ExponentTable:
    case CheckId::TotallyRamifiedFlag:
    case CheckId::DiscRecursion_2_27: return false;
    case CheckId::Lemma_2_1: return o.subject.size() == 3 && is_prime(o.subject[0]) && o.subject[1] <= o.subject[2];
    default: return true;
    }
}

bool VerificationReport::has_theorem_refutation() const {
    return std::any_of(outcomes.begin(), outcomes.end(),
                       [&](const CheckOutcome& o) { return o.status == Status::Refuted && is_theorem_check(o, d); });
}

std::vector<unsigned long> VerificationReport::exponent_set() const {
    std::set<unsigned long> s;
    for (const auto& o : outcomes)
        if (o.check == CheckId::ExponentTable && o.status == Status::Certified && o.value) s.insert(*o.value);
    return {s.begin(), s.end()};
}

// ------------------------------------------------------------------ case battery

VerificationReport verify_case(long d, long m, long n, const VerifyOptions& opts) {
    if (m < 1) throw Error("verify_case: m must be at least 1 (use verify_periodic for m = 0)");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.kind = "case";
    rep.d = d;
    rep.m = m;
    rep.n = n;
    rep.seed = opts.seed;
    const MisiurewiczPoly G = opts.G ? *opts.G : gdmn(d, m, n, opts.degree_budget);
    rep.G = G.G;
    rep.degenerate = G.degenerate;
    if (G.degenerate) {
        rep.outcomes.push_back(outcome(CheckId::ExactType, -1, {m, n}, Status::Skipped, "degenerate: G is constant"));
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }
    const FactoredPoly fp = factor_or_cached(G, opts);
    rep.factors = fp.factors;

    const long last = m + n - 1;
    const long horizon = std::max(m + n, 2 * last);
    const bool prime_d = is_prime(d);
    const mpz_class dz = d;

    std::vector<FactorContext> ctx;
    for (std::size_t f = 0; f < fp.factors.size(); ++f) {
        FieldPtr K = NumberField::create_trusted(fp.factors[f].first);
        ctx.push_back({static_cast<long>(f), K, orbit_residues(K, d, static_cast<std::size_t>(horizon))});
    }

    std::vector<Task> tasks;
    for (const auto& fc : ctx) {
        const FactorContext* p = &fc;
        tasks.push_back([p, m, n] { return std::vector<CheckOutcome>{exact_type_check(*p, m, n)}; });
        for (long i = 1; i <= last; ++i) {
            tasks.push_back([p, i, d, m, n, prime_d, dz] {
                std::vector<CheckOutcome> out;
                const FieldElement& ei = p->e[static_cast<std::size_t>(i)];
                if (i % n != 0) {
                    const bool unit = is_unit(ei);
                    out.push_back(outcome(CheckId::Unit_1_3a, p->index, {i}, unit ? Status::Certified : Status::Refuted,
                                          unit ? "" : "not a unit", norm_witness(ei)));
                } else {
                    if (prime_d) {
                        const unsigned long A = exponent_formula(d, m, n).value;
                        CheckOutcome o = from_certificate(CheckId::Power_1_3b, p->index, {i},
                                                          power_equals_certificate(ei, A, dz));
                        o.value = A;
                        out.push_back(std::move(o));
                    }
                    const auto found = exponent_for_power(ei, dz);
                    CheckOutcome o = outcome(CheckId::ExponentTable, p->index, {i},
                                             found ? Status::Certified : Status::Refuted,
                                             found ? "" : "no exponent A with (e_i)^A = (d)", norm_witness(ei));
                    o.value = found;
                    out.push_back(std::move(o));
                }
                out.push_back(from_certificate(CheckId::Divides_1_4, p->index, {i}, divides_certificate(ei, dz)));
                const long g = gcd_long(i, n);
                out.push_back(from_certificate(CheckId::Associate_2_4, p->index, {i, g},
                                               associate_certificate(ei, p->e[static_cast<std::size_t>(g)])));
                return out;
            });
        }
        if (opts.order_checks) {
            tasks.push_back([p, last, horizon] {
                std::vector<CheckOutcome> out;
                std::vector<std::optional<LatticeIdeal>> ideals(static_cast<std::size_t>(horizon + 1));
                auto ideal = [&](long i) -> const LatticeIdeal& {
                    auto& slot = ideals[static_cast<std::size_t>(i)];
                    if (!slot) slot = ideal_from_elements(p->field, {p->e[static_cast<std::size_t>(i)]});
                    return *slot;
                };
                for (long i = 1; i <= last; ++i) {
                    for (long k = 2; k * i <= horizon; ++k) {
                        const bool in = ideal_contains(ideal(i), p->e[static_cast<std::size_t>(k * i)]);
                        out.push_back(outcome(CheckId::RigidDiv_2_3, p->index, {i, k * i},
                                              in ? Status::CertifiedInOrder : Status::InconclusiveInOrder,
                                              in ? "" : "a_ki not in (a_i) at order level"));
                    }
                }
                for (long i = 1; i <= last; ++i)
                    for (long j = i + 1; j <= last; ++j) {
                        const long g = gcd_long(i, j);
                        const bool eq = ideal_eq(ideal_sum(ideal(i), ideal(j)), ideal(g));
                        out.push_back(outcome(CheckId::RigidDiv_2_3, p->index, {i, j, g},
                                              eq ? Status::CertifiedInOrder : Status::InconclusiveInOrder,
                                              eq ? "" : "(a_i)+(a_j) != (a_gcd) in Z[c]/(g)"));
                    }
                return out;
            });
        }
    }
    rep.outcomes = run_tasks(tasks, opts.jobs);

    // Total ramification: a certified exponent equal to the field degree.
    for (const auto& fc : ctx) {
        const unsigned long deg = fc.field->degree();
        std::optional<long> where;
        for (const auto& o : rep.outcomes)
            if (o.factor == fc.index && o.status == Status::Certified && o.value && *o.value == deg &&
                (o.check == CheckId::Power_1_3b || o.check == CheckId::ExponentTable)) {
                where = o.subject.front();
                break;
            }
        CheckOutcome o = where ? outcome(CheckId::TotallyRamifiedFlag, fc.index, {*where}, Status::Certified)
                               : outcome(CheckId::TotallyRamifiedFlag, fc.index, {}, Status::Skipped,
                                         "no certified exponent equals deg g");
        if (where) o.value = deg;
        rep.outcomes.push_back(std::move(o));
    }
    canonical_order(rep.outcomes);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_periodic(long d, long n, const VerifyOptions& opts) {
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.kind = "periodic";
    rep.d = d;
    rep.m = 0;
    rep.n = n;
    rep.seed = opts.seed;
    const MisiurewiczPoly G = opts.G ? *opts.G : gdmn(d, 0, n, opts.degree_budget);
    rep.G = G.G;
    rep.degenerate = G.degenerate;
    if (G.degenerate) {
        rep.outcomes.push_back(outcome(CheckId::Gleason_3_1, -1, {}, Status::Skipped, "degenerate: G is constant"));
        return rep;
    }
    const FactoredPoly fp = factor_or_cached(G, opts);
    rep.factors = fp.factors;
    std::vector<Task> tasks;
    std::vector<FactorContext> ctx;
    for (std::size_t f = 0; f < fp.factors.size(); ++f) {
        FieldPtr K = NumberField::create_trusted(fp.factors[f].first);
        ctx.push_back({static_cast<long>(f), K, orbit_residues(K, d, static_cast<std::size_t>(n))});
    }
    for (const auto& fc : ctx) {
        const FactorContext* p = &fc;
        tasks.push_back([p, n] {
            bool ok = p->e[static_cast<std::size_t>(n)].is_zero();
            for (long k = 1; ok && k < n; ++k) ok = !p->e[static_cast<std::size_t>(k)].is_zero();
            return std::vector<CheckOutcome>{outcome(CheckId::ExactType, p->index, {0, n},
                                                     ok ? Status::Certified : Status::Refuted,
                                                     ok ? "" : "0 is not periodic of exact period n")};
        });
        if (n == 1) {
            tasks.push_back([p] {
                return std::vector<CheckOutcome>{
                    outcome(CheckId::Gleason_3_1, p->index, {}, Status::Skipped, "vacuous: no index 1 <= i <= n-1")};
            });
        }
        for (long i = 1; i < n; ++i) {
            tasks.push_back([p, i] {
                const FieldElement& ei = p->e[static_cast<std::size_t>(i)];
                const bool unit = is_unit(ei);
                return std::vector<CheckOutcome>{outcome(CheckId::Gleason_3_1, p->index, {i},
                                                         unit ? Status::Certified : Status::Refuted,
                                                         unit ? "" : "not a unit", norm_witness(ei))};
            });
        }
    }
    rep.outcomes = run_tasks(tasks, opts.jobs);
    canonical_order(rep.outcomes);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

// ------------------------------------------------------------------ symbolic divisibility

IntPolynomial lemma_2_1_quotient(long d, long i, long j, std::size_t degree_budget) {
    if (i < 1 || j < 1) throw Error("lemma_2_1: need i, j >= 1");
    const OrbitSequence orbit = orbit_polys(d, static_cast<std::size_t>(i + j), degree_budget);
    const long k = (i - 1) % j + 1;
    const IntPolynomial aj = orbit.at(static_cast<std::size_t>(j));
    IntPolynomial power = aj;
    for (long s = 0; s < i; ++s) power = zx_pow(power, static_cast<unsigned long>(d));
    const IntPolynomial q = orbit.at(static_cast<std::size_t>(i + j)) - power - orbit.at(static_cast<std::size_t>(k));
    return zx_exact_div(q, zx_pow(aj, static_cast<unsigned long>(d)));
}

namespace {

// a_n reduced mod prime d: a_1 = t and a_{n+1}(t) = a_n(t^d) + t, since
// raising to the d-th power is the Frobenius map on F_d[t].
modp::Poly orbit_mod_d(long d, long n) {
    modp::Poly a{0, 1};
    for (long s = 1; s < n; ++s) a = frobenius_compose(a, d), a[1] = (a[1] + 1) % static_cast<std::uint64_t>(d);
    return a;
}

// Same check without expanding the numerator over Z. Exactness: modulo the
// monic A = a_j^d, a_{i+j} = f^i(a_j) reduces to iterating x -> x^d + c
// from x = c, and a_j^(d^i) vanishes. Divisibility of P by d: with
// N = A P and A monic, P = 0 mod d iff N = 0 mod d.
CheckOutcome lemma_2_1_modular(long d, long i, long j, std::size_t degree_budget) {
    const std::vector<long> subject{d, i, j};
    if (!is_prime(d)) return outcome(CheckId::Lemma_2_1, -1, subject, Status::Skipped, "budget: d is not prime");
    const long top = ipow(d, i + j - 1);
    if (static_cast<std::size_t>(top) >= 64 * degree_budget)
        return outcome(CheckId::Lemma_2_1, -1, subject, Status::Skipped, "budget: a_{i+j} too large even mod d");
    const OrbitSequence orbit = orbit_polys(d, static_cast<std::size_t>(j), degree_budget);
    const long k = (i - 1) % j + 1;
    const IntPolynomial A = zx_pow(orbit.at(static_cast<std::size_t>(j)), static_cast<unsigned long>(d));
    const IntPolynomial c = IntPolynomial::x();
    IntPolynomial x = c;
    for (long s = 1; s < i; ++s) x = zx_rem_monic(zx_pow(x, static_cast<unsigned long>(d)) + c, A);
    const OrbitSequence small = orbit_polys(d, static_cast<std::size_t>(k), degree_budget);
    if (!zx_rem_monic(x - small.at(static_cast<std::size_t>(k)), A).is_zero())
        return outcome(CheckId::Lemma_2_1, -1, subject, Status::Refuted, "a_j^d does not divide the difference",
                       "modular route: nonzero remainder modulo a_j^d");

    const modp::Field F{static_cast<std::uint64_t>(d)};
    modp::Poly N = orbit_mod_d(d, i + j);
    modp::Poly aj = orbit_mod_d(d, j);
    for (long s = 0; s < i; ++s) aj = frobenius_compose(aj, d);
    N = modp::sub(modp::sub(N, aj, F), orbit_mod_d(d, k), F);
    if (modp::degree(N) >= 0)
        return outcome(CheckId::Lemma_2_1, -1, subject, Status::Refuted, "P is not divisible by d",
                       "modular route: numerator nonzero mod d");
    return outcome(CheckId::Lemma_2_1, -1, subject, Status::Certified, "",
                   "modular route, deg P=" + std::to_string(top - ipow(d, j)));
}

} // namespace

CheckOutcome verify_lemma_2_1(long d, long i, long j, std::size_t degree_budget) {
    const std::vector<long> subject{d, i, j};
    IntPolynomial P;
    try {
        P = lemma_2_1_quotient(d, i, j, degree_budget);
    } catch (const BudgetExceeded&) {
        try {
            return lemma_2_1_modular(d, i, j, degree_budget);
        } catch (const Error& e) {
            return outcome(CheckId::Lemma_2_1, -1, subject, Status::Skipped, std::string("budget: ") + e.what());
        }
    } catch (const NotDivisible& e) {
        return outcome(CheckId::Lemma_2_1, -1, subject, Status::Refuted, "a_j^d does not divide the difference",
                       e.what());
    }
    const mpz_class dz = d;
    for (const auto& c : P.coeffs())
        if (!mpz_divisible_p(c.get_mpz_t(), dz.get_mpz_t())) {
            std::string w = P.degree() <= 40 ? P.to_string() : "deg " + std::to_string(P.degree());
            return outcome(CheckId::Lemma_2_1, -1, subject, Status::Refuted, "P is not divisible by d", "P=" + w);
        }
    return outcome(CheckId::Lemma_2_1, -1, subject, Status::Certified, "",
                   "deg P=" + std::to_string(P.degree()));
}

// ------------------------------------------------------------------ discriminant recursion

namespace {

using KPoly = std::vector<FieldElement>; // ascending in x

void kp_trim(KPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly kp_mul(const KPoly& a, const KPoly& b, const FieldPtr& K) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1, FieldElement::from_int(K, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = elem_add(r[i + j], elem_mul(a[i], b[j]));
    }
    kp_trim(r);
    return r;
}

KPoly kp_rem(KPoly a, const KPoly& b) {
    const FieldElement inv = elem_inv(b.back());
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const FieldElement t = elem_mul(a.back(), inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = elem_sub(a[shift + j], elem_mul(t, b[j]));
        a.pop_back();
        kp_trim(a);
    }
    return a;
}

// Res(a, b) over K by the Euclidean algorithm.
FieldElement kp_resultant(KPoly a, KPoly b, const FieldPtr& K) {
    FieldElement res = FieldElement::from_int(K, 1);
    if (a.empty() || b.empty()) return FieldElement::from_int(K, 0);
    while (true) {
        const long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
        if (db == 0) return elem_mul(res, elem_pow(b[0], static_cast<unsigned long>(da)));
        KPoly r = kp_rem(a, b);
        if (r.empty()) return FieldElement::from_int(K, 0);
        const long dr = static_cast<long>(r.size()) - 1;
        if ((da & 1) && (db & 1)) res = elem_neg(res);
        res = elem_mul(res, elem_pow(b.back(), static_cast<unsigned long>(da - dr)));
        a = std::move(b);
        b = std::move(r);
    }
}

} // namespace

std::vector<FieldElement> iterate_discriminants(const FieldPtr& K, long d, long depth) {
    const FieldElement zero = FieldElement::from_int(K, 0), one = FieldElement::from_int(K, 1);
    const FieldElement c = FieldElement::from_poly(K, IntPolynomial::x());
    std::vector<FieldElement> out;
    KPoly F{zero, one}; // x
    for (long level = 1; level <= depth; ++level) {
        KPoly P{one};
        for (long s = 0; s < d; ++s) P = kp_mul(P, F, K);
        P[0] = elem_add(P[0], c);
        F = std::move(P);
        KPoly dF;
        for (std::size_t i = 1; i < F.size(); ++i)
            dF.push_back(elem_scale(F[i], mpq_class(static_cast<unsigned long>(i))));
        kp_trim(dF);
        const long D = static_cast<long>(F.size()) - 1;
        FieldElement disc = kp_resultant(F, dF, K);
        if (((D * (D - 1)) / 2) & 1) disc = elem_neg(disc);
        out.push_back(disc);
    }
    return out;
}

std::vector<CheckOutcome> verify_disc_recursion(const FieldPtr& K, long d, long depth) {
    const std::vector<FieldElement> disc = iterate_discriminants(K, d, depth);
    const std::vector<FieldElement> e = orbit_residues(K, d, static_cast<std::size_t>(depth));
    std::vector<CheckOutcome> out;
    FieldElement prev = FieldElement::from_int(K, 1);
    for (long level = 1; level <= depth; ++level) {
        const FieldElement& cur = disc[static_cast<std::size_t>(level - 1)];
        mpz_class dd;
        mpz_class dz = d;
        mpz_pow_ui(dd.get_mpz_t(), dz.get_mpz_t(), static_cast<unsigned long>(ipow(d, level)));
        const FieldElement tail = elem_scale(e[static_cast<std::size_t>(level)], mpq_class(dd));
        for (int variant = 0; variant < 2; ++variant) {
            const FieldElement base = variant == 0 ? prev : elem_pow(prev, static_cast<unsigned long>(d));
            const FieldElement rhs = elem_mul(base, tail);
            const bool holds = cur == rhs || cur == elem_neg(rhs);
            CheckOutcome o = outcome(CheckId::DiscRecursion_2_27, -1, {level, variant},
                                     holds ? Status::Certified : Status::Refuted,
                                     holds ? "" : (variant == 0 ? "printed form fails" : "d-th power form fails"),
                                     "Delta=" + cur.to_string() + " rhs=" + rhs.to_string());
            out.push_back(std::move(o));
        }
        prev = cur;
    }
    return out;
}

// ------------------------------------------------------------------ appendix

const std::vector<AppendixCase>& appendix_cases() {
    static const std::vector<AppendixCase> cases{
        {4, 2, 1, {6, 12}, false},  {4, 2, 2, {8, 16}, false},      {4, 2, 3, {8, 16}, false},
        {4, 3, 1, {30, 60}, false}, {4, 3, 2, {30, 60}, true},      {4, 4, 1, {126, 252}, true},
        {8, 2, 1, {21, 42, 84}, true}, {9, 2, 1, {32, 96}, true},   {6, 3, 1, {}, true},
    };
    return cases;
}

VerificationReport run_appendix_case(const AppendixCase& c, const AppendixOptions& opts) {
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.kind = "appendix";
    rep.d = c.d;
    rep.m = c.m;
    rep.n = c.n;
    rep.seed = opts.seed;
    auto over_budget = [&] { return ms_since(t0) > opts.budget_seconds * 1000.0; };
    auto skip_all = [&](const std::string& why) {
        rep.outcomes.push_back(outcome(CheckId::ExponentTable, -1, {c.d, c.m, c.n}, Status::Skipped, why));
        rep.elapsed_ms = ms_since(t0);
        return rep;
    };

    const MisiurewiczPoly G = gdmn(c.d, c.m, c.n);
    rep.G = G.G;
    rep.degenerate = G.degenerate;
    if (over_budget()) return skip_all("budget: construction exceeded the time budget");
    const FactoredPoly fp = factor_z(G.G, opts.seed);
    rep.factors = fp.factors;
    if (over_budget()) return skip_all("budget: factorization exceeded the time budget");

    const long last = c.m + c.n - 1;
    const mpz_class dz = c.d;
    std::vector<FactorContext> ctx;
    for (std::size_t f = 0; f < fp.factors.size(); ++f) {
        FieldPtr K = NumberField::create_trusted(fp.factors[f].first);
        ctx.push_back({static_cast<long>(f), K, orbit_residues(K, c.d, static_cast<std::size_t>(last))});
    }
    std::vector<Task> tasks;
    for (const auto& fc : ctx) {
        const FactorContext* p = &fc;
        for (long i = c.n; i <= last; i += c.n) {
            tasks.push_back([p, i, dz, &over_budget] {
                if (over_budget())
                    return std::vector<CheckOutcome>{outcome(CheckId::ExponentTable, p->index, {i}, Status::Skipped,
                                                             "budget: time budget exhausted")};
                const FieldElement& ei = p->e[static_cast<std::size_t>(i)];
                const auto found = exponent_for_power(ei, dz);
                CheckOutcome o = outcome(CheckId::ExponentTable, p->index, {i},
                                         found ? Status::Certified : Status::Refuted,
                                         found ? "" : "no exponent A with (e_i)^A = (d)", norm_witness(ei));
                o.value = found;
                return std::vector<CheckOutcome>{o};
            });
        }
    }
    rep.outcomes = run_tasks(tasks, opts.jobs);
    canonical_order(rep.outcomes);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::vector<VerificationReport> run_appendix(const AppendixOptions& opts) {
    std::vector<VerificationReport> out;
    for (const auto& c : appendix_cases()) {
        if (c.extended && !opts.extended) continue;
        out.push_back(run_appendix_case(c, opts));
    }
    return out;
}

bool appendix_case_passes(const AppendixCase& c, const VerificationReport& r) {
    if (r.d != c.d || r.m != c.m || r.n != c.n) return false;
    for (const auto& o : r.outcomes)
        if (o.status == Status::Skipped) return false;
    if (c.expected.empty()) {
        // No perfect power: some (factor, index) admits no exponent.
        return std::any_of(r.outcomes.begin(), r.outcomes.end(), [](const CheckOutcome& o) {
            return o.check == CheckId::ExponentTable && o.status == Status::Refuted;
        });
    }
    for (const auto& o : r.outcomes)
        if (o.check == CheckId::ExponentTable && o.status != Status::Certified) return false;
    return r.exponent_set() == c.expected;
}

} // namespace pcf
