#pragma once

// Serialization of polynomials and verification reports (JSON, text, CSV)
// and the on-disk cache of G_d(m, n) and its factorization.
//
// JSON conventions: every polynomial is an array of decimal strings in
// ascending degree; the seed is a decimal string; small counters and
// indices are plain numbers.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcf/verifier.hpp"

namespace pcf {

using Json = nlohmann::ordered_json;

Json poly_to_json(const IntPolynomial& p);
/// Throws Error on malformed input.
IntPolynomial poly_from_json(const Json& j);

Json factors_to_json(const std::vector<std::pair<IntPolynomial, unsigned>>& factors);
std::vector<std::pair<IntPolynomial, unsigned>> factors_from_json(const Json& j);

Json outcome_to_json(const CheckOutcome& o);
CheckOutcome outcome_from_json(const Json& j);

/// elapsed_ms is written only when `timing` is set.
Json report_to_json(const VerificationReport& r, bool timing = false);
VerificationReport report_from_json(const Json& j);

std::string report_to_text(const VerificationReport& r);
std::string csv_header();
/// One CSV row per outcome, no header.
std::string report_to_csv_rows(const VerificationReport& r);
std::string csv_escape(const std::string& field);

struct CacheEntry {
    static constexpr int kVersion = 1;
    long d = 0, m = 0, n = 0;
    IntPolynomial G;
    bool degenerate = false;
    std::optional<FactoredPoly> factors;
    int version = kVersion;
};

Json cache_to_json(const CacheEntry& e);
CacheEntry cache_from_json(const Json& j);

std::filesystem::path cache_path(const std::filesystem::path& dir, long d, long m, long n);
/// Returns nothing when the file is absent, unreadable, for other
/// parameters, of another version, or when its factors do not multiply
/// back to G.
std::optional<CacheEntry> cache_read(const std::filesystem::path& dir, long d, long m, long n);
/// Writes to a temporary file in `dir` and renames it into place.
void cache_write(const std::filesystem::path& dir, const CacheEntry& e);

/// Writes `contents` to `path` atomically (temporary file plus rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

} // namespace pcf
