#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bps/checks.hpp"
#include "bps/correspondence.hpp"
#include "bps/sequence.hpp"

namespace bps {

/// On-disk form of an invariant sequence: tangency context, kind tag and the
/// degree-1..N values as exact rational strings ("p" or "p/q", canonical).
struct SequenceFile {
    TangencyContext context;
    InvariantSequence sequence;
    std::optional<std::string> provenance;
};

/// Parses "[sign]digits[/digits]" into a canonical rational; "6/4" reads as
/// 3/2. Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

nlohmann::json sequence_to_json(const SequenceFile& file);
SequenceFile sequence_from_json(const nlohmann::json& doc);
SequenceFile read_sequence_file(const std::filesystem::path& path);

/// Matrix documents are lower-triangular and dense per row: row s carries the
/// s integer entries (s, 1)..(s, s) as strings, zero wherever t does not
/// divide s. Round-trips exactly.
nlohmann::json matrix_to_json(const CorrespondenceMatrix& matrix);
CorrespondenceMatrix matrix_from_json(const nlohmann::json& doc);
CorrespondenceMatrix read_matrix_file(const std::filesystem::path& path);

nlohmann::json report_to_json(const CheckReport& report);

/// Reads a two-column CSV (degree, rational value; one optional header row).
/// Degrees must be exactly 1..N in order. The kind is not representable in
/// CSV and is declared by the caller, as is the tangency w.
SequenceFile ingest_csv(const std::filesystem::path& path, SequenceKind kind, long long w);

}  // namespace bps
