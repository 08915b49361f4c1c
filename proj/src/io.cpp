#include "bps/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bps/numtheory.hpp"

namespace bps {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path.string() + ": invalid JSON: " + e.what());
    }
    return doc;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto malformed = [&]() -> std::invalid_argument {
        return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits) || !all_digits(den)) throw malformed();
    const Integer d{std::string(den)};
    if (d.is_zero()) throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    return Rational(Integer(std::string(num)), d);
}

nlohmann::json sequence_to_json(const SequenceFile& file) {
    nlohmann::json doc;
    doc["context"] = {{"w", file.context.w}, {"N", file.context.n}};
    doc["kind"] = kind_name(file.sequence.kind());
    auto& values = doc["values"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < file.sequence.size(); ++i) {
        values.push_back(file.sequence.values()(i).to_string());
    }
    if (file.provenance) doc["provenance"] = *file.provenance;
    return doc;
}

SequenceFile sequence_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("context") || !doc.contains("kind") ||
        !doc.contains("values")) {
        throw std::runtime_error("sequence document must carry context, kind and values");
    }
    const auto& ctx = doc["context"];
    if (!ctx.is_object() || !ctx.contains("w") || !ctx.contains("N") ||
        !ctx["w"].is_number_integer() || !ctx["N"].is_number_integer()) {
        throw std::runtime_error("sequence context must carry integer w and N");
    }
    TangencyContext context(ctx["w"].get<long long>(), ctx["N"].get<long long>());
    const SequenceKind kind = kind_from_name(doc["kind"].get<std::string>());
    const auto& values = doc["values"];
    if (!values.is_array() || static_cast<long long>(values.size()) != context.n) {
        throw std::runtime_error("sequence values must be an array of length N");
    }
    RatVec parsed(context.n);
    for (Eigen::Index i = 0; i < context.n; ++i) {
        if (!values[i].is_string()) {
            throw std::runtime_error("sequence values must be rational strings");
        }
        parsed(i) = parse_rational(values[i].get<std::string>());
    }
    std::optional<std::string> provenance;
    if (doc.contains("provenance")) provenance = doc["provenance"].get<std::string>();
    return {context, InvariantSequence(kind, std::move(parsed)), std::move(provenance)};
}

SequenceFile read_sequence_file(const std::filesystem::path& path) {
    try {
        return sequence_from_json(load_json(path));
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

nlohmann::json matrix_to_json(const CorrespondenceMatrix& matrix) {
    nlohmann::json doc;
    doc["w"] = matrix.w();
    doc["N"] = static_cast<long long>(matrix.size());
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (long long s = 1; s <= matrix.size(); ++s) {
        nlohmann::json row = nlohmann::json::array();
        for (long long t = 1; t <= s; ++t) {
            row.push_back(matrix.entry(s, t).to_string());
        }
        rows.push_back(std::move(row));
    }
    return doc;
}

CorrespondenceMatrix matrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("w") || !doc.contains("N") || !doc.contains("rows") ||
        !doc["w"].is_number_integer() || !doc["N"].is_number_integer() || !doc["rows"].is_array()) {
        throw std::runtime_error("matrix document must carry integer w, N and a rows array");
    }
    const long long w = doc["w"].get<long long>();
    const long long n = doc["N"].get<long long>();
    if (n < 1) throw std::runtime_error("matrix order N must be >= 1");
    const auto& rows = doc["rows"];
    if (static_cast<long long>(rows.size()) != n) {
        throw std::runtime_error("matrix rows array must have N rows");
    }
    IntMat entries = IntMat::Zero(n, n);
    for (long long s = 1; s <= n; ++s) {
        const auto& row = rows[s - 1];
        if (!row.is_array() || static_cast<long long>(row.size()) != s) {
            throw std::runtime_error("matrix row " + std::to_string(s) + " must have " +
                                     std::to_string(s) + " entries");
        }
        for (long long t = 1; t <= s; ++t) {
            Integer value;
            try {
                value = Integer(row[t - 1].get<std::string>());
            } catch (const std::exception&) {
                throw std::runtime_error("matrix entry (" + std::to_string(s) + ", " +
                                         std::to_string(t) + ") is not an integer string");
            }
            if (s % t != 0 && !value.is_zero()) {
                throw std::runtime_error("matrix entry (" + std::to_string(s) + ", " +
                                         std::to_string(t) + ") must be zero: " +
                                         std::to_string(t) + " does not divide " + std::to_string(s));
            }
            entries(s - 1, t - 1) = std::move(value);
        }
    }
    return {w, std::move(entries)};
}

CorrespondenceMatrix read_matrix_file(const std::filesystem::path& path) {
    try {
        return matrix_from_json(load_json(path));
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

nlohmann::json report_to_json(const CheckReport& report) {
    nlohmann::json doc;
    doc["check"] = report.check;
    if (report.w) doc["w"] = *report.w;
    doc["degrees"] = static_cast<long long>(report.verdicts.size());
    doc["overall"] = report.overall;
    auto& verdicts = doc["verdicts"] = nlohmann::json::array();
    for (const Verdict& v : report.verdicts) {
        verdicts.push_back({{"d", v.degree},
                            {"expected", v.expected.to_string()},
                            {"actual", v.actual.to_string()},
                            {"pass", v.pass}});
    }
    return doc;
}

SequenceFile ingest_csv(const std::filesystem::path& path, SequenceKind kind, long long w) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());

    std::vector<Rational> values;
    std::string line;
    long long lineno = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const auto comma = stripped.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": expected 'degree,value'");
        }
        const std::string degree_field = trim(std::string_view(stripped).substr(0, comma));
        const std::string value_field = trim(std::string_view(stripped).substr(comma + 1));

        if (header_allowed && !all_digits(degree_field)) {
            header_allowed = false;  // single optional header row
            continue;
        }
        header_allowed = false;

        long long degree;
        try {
            degree = std::stoll(degree_field);
        } catch (const std::exception&) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": malformed degree '" + degree_field + "'");
        }
        const long long expected = static_cast<long long>(values.size()) + 1;
        if (degree != expected) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": degree " +
                                     std::to_string(degree) + " out of order, expected " +
                                     std::to_string(expected));
        }
        try {
            values.push_back(parse_rational(value_field));
        } catch (const std::exception& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (values.empty()) {
        throw std::runtime_error(path.string() + ": no data rows");
    }
    RatVec packed(static_cast<Eigen::Index>(values.size()));
    for (Eigen::Index i = 0; i < packed.size(); ++i) packed(i) = std::move(values[i]);
    TangencyContext context(w, packed.size());
    return {context, InvariantSequence(kind, std::move(packed)), std::nullopt};
}

}  // namespace bps
