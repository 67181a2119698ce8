#pragma once

// Per-case verification batteries for the critical orbit of x^d + c.
//
// verify_case builds G_d(m,n), factors it, and for every irreducible factor
// g works in K = Q[c]/(g) with the orbit residues e_i = a_i(c) mod g:
//   ExactType       e_{m+n} = e_m and no smaller tail or period
//   Unit_1_3a       e_i is a unit when n does not divide i
//   Power_1_3b      (e_i)^A = (d) for n | i, prime d, A from exponent_formula
//   ExponentTable   the A with (e_i)^A = (d) found from norms, for n | i
//   Divides_1_4     (e_i) | (d)
//   Associate_2_4   (e_i) = (e_gcd(i,n))
//   RigidDiv_2_3    (e_i) | (e_ki) and (e_i) + (e_j) = (e_gcd(i,j)) in Z[c]/(g)
//   TotallyRamifiedFlag  some certified A equals deg g

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcf/dynatomic.hpp"
#include "pcf/numfield.hpp"
#include "pcf/zfactor.hpp"

namespace pcf {

enum class CheckId {
    ExactType,
    Unit_1_3a,
    Power_1_3b,
    Divides_1_4,
    Associate_2_4,
    RigidDiv_2_3,
    Lemma_2_1,
    Gleason_3_1,
    DiscRecursion_2_27,
    ExponentTable,
    TotallyRamifiedFlag,
};

enum class Status { Certified, Refuted, CertifiedInOrder, InconclusiveInOrder, Skipped };

const char* to_string(CheckId id);
const char* to_string(Status s);
std::optional<CheckId> check_id_from_string(const std::string& s);
std::optional<Status> status_from_string(const std::string& s);

struct CheckOutcome {
    CheckId check = CheckId::ExactType;
    /// Index into the report's factor list; -1 when not tied to a factor.
    long factor = -1;
    /// Orbit index, index pair, or parameter tuple.
    std::vector<long> subject;
    Status status = Status::Skipped;
    std::string reason;
    std::string witness;
    /// Exponent found or asserted, when the check produces one.
    std::optional<unsigned long> value;

    bool operator==(const CheckOutcome&) const = default;
};

struct VerificationReport {
    std::string kind = "case"; // case | periodic | appendix | disc | lemma21
    long d = 0, m = 0, n = 0;
    IntPolynomial G;
    bool degenerate = false;
    std::vector<std::pair<IntPolynomial, unsigned>> factors;
    std::vector<CheckOutcome> outcomes;
    std::uint64_t seed = kDefaultSeed;
    /// Wall-clock time; not part of report equality.
    double elapsed_ms = 0;

    bool operator==(const VerificationReport& o) const {
        return kind == o.kind && d == o.d && m == o.m && n == o.n && G == o.G && degenerate == o.degenerate &&
               factors == o.factors && outcomes == o.outcomes && seed == o.seed;
    }

    /// True when a check that is a theorem for these parameters was refuted.
    bool has_theorem_refutation() const;
    /// Exponents certified by ExponentTable outcomes, ascending and distinct.
    std::vector<unsigned long> exponent_set() const;
};

/// Whether a refutation of `o` contradicts a theorem for degree d.
bool is_theorem_check(const CheckOutcome& o, long d);

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    std::size_t degree_budget = kDefaultDegreeBudget;
    /// Skip the HNF order-level checks (RigidDiv_2_3).
    bool order_checks = true;
    /// Precomputed G and factorization (for example from a cache).
    std::optional<MisiurewiczPoly> G;
    std::optional<FactoredPoly> factorization;
};

VerificationReport verify_case(long d, long m, long n, const VerifyOptions& opts = {});
VerificationReport verify_periodic(long d, long n, const VerifyOptions& opts = {});

/// P = (a_{i+j} - a_j^(d^i) - a_k) / a_j^d with k = i mod j in [1, j].
/// Throws NotDivisible when a_j^d does not divide the numerator.
IntPolynomial lemma_2_1_quotient(long d, long i, long j, std::size_t degree_budget = 1u << 14);
CheckOutcome verify_lemma_2_1(long d, long i, long j, std::size_t degree_budget = 1u << 14);

/// Discriminant of the n-th iterate of x^d + c over K, for n = 1..depth.
std::vector<FieldElement> iterate_discriminants(const FieldPtr& field, long d, long depth);
/// For n = 1..depth records whether the recursion holds in the printed form
/// (Delta_n = +-Delta_{n-1} d^(d^n) a_n, subject {n, 0}) and in the d-th power
/// form (Delta_n = +-Delta_{n-1}^d d^(d^n) a_n, subject {n, 1}).
std::vector<CheckOutcome> verify_disc_recursion(const FieldPtr& field, long d, long depth);

struct AppendixCase {
    long d, m, n;
    /// Reference exponent set; empty when no perfect power is expected.
    std::vector<unsigned long> expected;
    bool extended;
};

const std::vector<AppendixCase>& appendix_cases();

struct AppendixOptions {
    bool extended = false;
    double budget_seconds = 600;
    unsigned jobs = 1;
    std::uint64_t seed = kDefaultSeed;
};

/// ExponentTable outcomes over indices divisible by n, one report per case.
VerificationReport run_appendix_case(const AppendixCase& c, const AppendixOptions& opts = {});
std::vector<VerificationReport> run_appendix(const AppendixOptions& opts = {});
/// Compares a case report with its reference values.
bool appendix_case_passes(const AppendixCase& c, const VerificationReport& r);

} // namespace pcf
