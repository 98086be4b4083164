#pragma once

#include <string>

#include <json.hpp>

#include "conelink/bigint.hpp"
#include "conelink/brieskorn.hpp"
#include "conelink/invariants.hpp"

namespace conelink {

enum class Format { Plain, Json, Csv };

// Parses "plain", "json" or "csv"; anything else is a usage error.
Format parse_format(const std::string& name);

// One machine-readable output payload. `fields` is a JSON object whose
// first key is "kind"; insertion order is preserved, and every integer that
// can outgrow 53 bits is carried as a decimal string.
struct OutputRecord {
    nlohmann::ordered_json fields;

    std::string kind() const { return fields.at("kind").get<std::string>(); }

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

// Single-line JSON, no trailing newline.
std::string render_json(const OutputRecord& record);

// Inverse of render_json; rejects unknown kinds and non-object payloads.
OutputRecord parse_record(const std::string& json_line);

// Kind-aware rendering. Json is render_json; Csv emits a header row plus
// one data row (table rows are emitted headerless, the table writer owns
// the header); Plain is a human-readable line or block. No trailing
// newline in any format.
std::string render(const OutputRecord& record, Format format);

OutputRecord betti_record(const HypersurfaceClass& h, const BettiVector& b);
OutputRecord link_record(const HypersurfaceClass& h, const LinkBettiVector& l);
OutputRecord link_record_from_base(const BettiVector& base, const LinkBettiVector& l);
OutputRecord link_record_from_exponents(const bp::ExponentTuple& t, const HypersurfaceClass& base,
                                        const LinkBettiVector& l);
OutputRecord invert_record(int n, const BigInt& b, const DegreeCandidates& candidates);
OutputRecord compare_record(int n, long p, long r, bool distinguished,
                            const LinkBettiVector& left, const LinkBettiVector& right);
OutputRecord fingerprint_record(const bp::ExponentTuple& t, const bp::Fingerprint& f);
OutputRecord verdict_record(const bp::ExponentTuple& left, const bp::ExponentTuple& right,
                            const bp::Verdict& v);
OutputRecord torsion_record(long d, long torsion);
OutputRecord table_row_record(int n, long d, const BigInt& middle, const BigInt& chi,
                              const LinkBettiVector& link);

// "n,d,b_n,chi,link" (link entries ';'-joined in one CSV cell).
std::string table_csv_header();

} // namespace conelink
