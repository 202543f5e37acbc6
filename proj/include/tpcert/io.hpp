#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tpcert/generators.hpp"
#include "tpcert/polya.hpp"

namespace tpcert::io {

using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// FNV-1a over the canonical entry strings; stable across runs and
// platforms for exact inputs.
inline std::string digest_hex(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : canonical) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

template <ScalarType S>
std::string canonical_text(const Matrix<S>& a) {
    std::string s = std::to_string(a.rows()) + ";" + std::to_string(a.cols()) + ";";
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += to_string(a(i, j)) + ",";
    return s;
}

template <ScalarType S>
std::string digest(const Matrix<S>& a) {
    return digest_hex(canonical_text(a));
}

inline Rational parse_entry(const json& cell, int row, int col, const std::string& where) {
    const std::string at = where + ": entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
    try {
        if (cell.is_string()) return Rational::parse(cell.get<std::string>());
        if (cell.is_number_integer()) return Rational(cell.get<long>());
    } catch (const std::exception& e) {
        throw InputError(at + ": " + e.what());
    }
    throw InputError(at + ": entries must be rational strings (\"3\", \"1/2\", \"0.25\") or integers");
}

inline Matrix<Rational> matrix_from_json(const json& j, const std::string& where) {
    const json* grid = nullptr;
    if (j.contains("entries"))
        grid = &j.at("entries");
    else if (j.contains("matrix"))
        grid = &j.at("matrix");
    else
        throw InputError(where + ": expected an object with \"entries\" (or \"matrix\") holding rows of rationals");
    if (!grid->is_array() || grid->empty() || !grid->front().is_array())
        throw InputError(where + ": matrix entries must be an array of row arrays");

    const int m = static_cast<int>(grid->size());
    const int n = static_cast<int>(grid->front().size());
    if (j.contains("rows") && j.at("rows").get<int>() != m)
        throw InputError(where + ": declared row count " + j.at("rows").dump() + " does not match " + std::to_string(m));
    if (j.contains("cols") && j.at("cols").get<int>() != n)
        throw InputError(where + ": declared column count does not match " + std::to_string(n));

    Matrix<Rational> a(m, n);
    for (int i = 0; i < m; ++i) {
        const json& row = (*grid)[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError(where + ": row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n));
        for (int jj = 0; jj < n; ++jj) a(i, jj) = parse_entry(row[static_cast<size_t>(jj)], i, jj, where);
    }
    return a;
}

inline Matrix<Rational> matrix_from_csv(const std::string& text, const std::string& where) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        int col = 0;
        while (std::getline(cells, cell, ',')) {
            ++col;
            try {
                row.push_back(Rational::parse(cell));
            } catch (const std::exception& e) {
                throw InputError(where + ": line " + std::to_string(lineno) + ", field " + std::to_string(col) +
                                 ": " + e.what());
            }
        }
        if (!rows.empty() && rows.front().size() != row.size())
            throw InputError(where + ": line " + std::to_string(lineno) + " has " + std::to_string(row.size()) +
                             " fields, expected " + std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError(where + ": no data rows");
    return Matrix<Rational>::from_rows(rows);
}

inline json parse_json(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte offset; keep it in the message.
        throw InputError(where + ": " + e.what());
    }
}

inline Matrix<Rational> load_matrix(const std::string& path) {
    const std::string text = read_file(path);
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") return matrix_from_csv(text, path);
    return matrix_from_json(parse_json(text, path), path);
}

inline SeqWindow<Rational> sequence_from_json(const json& j, const std::string& where) {
    SeqWindow<Rational> s;
    if (!j.contains("offset") || !j.contains("values"))
        throw InputError(where + ": expected {\"offset\": int, \"values\": [rational strings], \"finite_support\": bool}");
    s.offset = j.at("offset").get<long>();
    s.finite_support = j.value("finite_support", false);
    const json& vals = j.at("values");
    if (!vals.is_array() || vals.empty()) throw InputError(where + ": \"values\" must be a non-empty array");
    for (size_t i = 0; i < vals.size(); ++i) s.values.push_back(parse_entry(vals[i], 0, static_cast<int>(i), where));
    return s;
}

inline SeqWindow<Rational> load_sequence(const std::string& path) {
    return sequence_from_json(parse_json(read_file(path), path), path);
}

template <ScalarType S>
json matrix_to_json(const Matrix<S>& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

template <ScalarType S>
json corpus_to_json(const Matrix<S>& a, const ClassLabels& labels) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"matrix", std::move(rows)}, {"labels", {{"tp", labels.tp}, {"tn", labels.tn}}}};
}

template <ScalarType S>
Matrix<S> convert_matrix(const Matrix<Rational>& a) {
    Matrix<S> out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = scalar_traits<S>::from_rational(a(i, j));
    return out;
}

template <ScalarType S>
SeqWindow<S> convert_sequence(const SeqWindow<Rational>& s) {
    SeqWindow<S> out;
    out.offset = s.offset;
    out.finite_support = s.finite_support;
    for (const auto& v : s.values) out.values.push_back(scalar_traits<S>::from_rational(v));
    return out;
}

template <ScalarType S>
json vector_to_json(const std::vector<S>& x) {
    json arr = json::array();
    for (const S& v : x) arr.push_back(to_string(v));
    return arr;
}

inline std::vector<Rational> vector_from_json(const json& arr, const std::string& where) {
    std::vector<Rational> x;
    for (size_t i = 0; i < arr.size(); ++i) x.push_back(parse_entry(arr[i], 0, static_cast<int>(i), where));
    return x;
}

// Indexing convention carried inside serialized certificates: matrix
// certificates shift to 1-based row/column indices, sequence (Polya)
// certificates keep raw integer indices.
inline json indices_to_json(const std::vector<int>& idx, int shift) {
    json arr = json::array();
    for (int v : idx) arr.push_back(v + shift);
    return arr;
}

inline std::vector<int> indices_from_json(const json& arr, int shift, const std::string& where) {
    std::vector<int> idx;
    if (!arr.is_array()) throw InputError(where + ": index list must be an array");
    for (const auto& v : arr) idx.push_back(v.get<int>() - shift);
    return idx;
}

template <ScalarType S>
json certificate_to_json(const Certificate<S>& cert, bool sequence_indices = false) {
    const int shift = sequence_indices ? 0 : 1;
    json j;
    j["indexing"] = sequence_indices ? "sequence" : "1-based";
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Pass>) {
                j["type"] = "pass";
            } else if constexpr (std::is_same_v<T, FailingMinor<S>>) {
                j["type"] = "failing_minor";
                j["rows"] = indices_to_json(c.at.rows, shift);
                j["cols"] = indices_to_json(c.at.cols, shift);
                j["value"] = to_string(c.value);
            } else if constexpr (std::is_same_v<T, SignReversal<S>>) {
                j["type"] = "sign_reversal";
                j["rows"] = indices_to_json(c.at.rows, shift);
                j["cols"] = indices_to_json(c.at.cols, shift);
                j["x"] = vector_to_json(c.x);
                j["products"] = vector_to_json(c.products);
            } else {
                j["type"] = "kernel_vector";
                j["rows"] = indices_to_json(c.at.rows, shift);
                j["cols"] = indices_to_json(c.at.cols, shift);
                j["x"] = vector_to_json(c.x);
            }
        },
        cert);
    return j;
}

inline Certificate<Rational> certificate_from_json(const json& j, const std::string& where) {
    const std::string type = j.value("type", "");
    if (type == "pass") return Pass{};
    const int shift = j.value("indexing", "1-based") == std::string("sequence") ? 0 : 1;
    MinorId at{indices_from_json(j.at("rows"), shift, where), indices_from_json(j.at("cols"), shift, where)};
    if (type == "failing_minor")
        return FailingMinor<Rational>{std::move(at), Rational::parse(j.at("value").get<std::string>())};
    if (type == "sign_reversal")
        return SignReversal<Rational>{std::move(at), vector_from_json(j.at("x"), where),
                                      vector_from_json(j.at("products"), where)};
    if (type == "kernel_vector") return KernelVector<Rational>{std::move(at), vector_from_json(j.at("x"), where)};
    throw InputError(where + ": unknown certificate type '" + type + "'");
}

inline json stats_to_json(const Stats& s) {
    return json{{"determinants", s.determinants},
                {"submatrices", s.submatrices},
                {"skipped", s.skipped},
                {"seconds", s.seconds}};
}

}  // namespace tpcert::io
