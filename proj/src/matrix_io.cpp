#include "commat/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace commat {

namespace {

constexpr std::int64_t kMaxJsonNumber = std::int64_t{1} << 53;

Integer parse_entry(const nlohmann::json& v, std::size_t index) {
    const std::string where = "data[" + std::to_string(index) + "]";
    if (v.is_string()) {
        try {
            return Integer::from_string(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) {
        // unsigned values above INT64_MAX land here too and are rejected by the bound
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxJsonNumber)) {
            throw ParseError(where + ": numbers beyond 2^53 in magnitude must be written as decimal strings");
        }
        const auto x = v.get<std::int64_t>();
        if (x > kMaxJsonNumber || x < -kMaxJsonNumber) {
            throw ParseError(where + ": numbers beyond 2^53 in magnitude must be written as decimal strings");
        }
        return Integer(x);
    }
    throw ParseError(where + ": expected an integer or a decimal string");
}

std::size_t parse_dimension(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    const auto& v = doc[key];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw ParseError(std::string("\"") + key + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
}

MatrixFile parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
    const std::size_t rows = parse_dimension(doc, "rows");
    const std::size_t cols = parse_dimension(doc, "cols");
    if (!doc.contains("data") || !doc["data"].is_array()) throw ParseError("missing \"data\" array");
    const auto& data = doc["data"];
    if (data.size() != rows * cols) {
        throw ShapeError("\"data\" holds " + std::to_string(data.size()) + " entries but rows*cols = " +
                         std::to_string(rows) + "*" + std::to_string(cols));
    }
    std::vector<Integer> entries;
    entries.reserve(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) entries.push_back(parse_entry(data[k], k));

    std::optional<std::uint64_t> modulus;
    if (doc.contains("modulus")) {
        const auto& p = doc["modulus"];
        if (!p.is_number_unsigned() || p.get<std::uint64_t>() < 2 || p.get<std::uint64_t>() > ModInt::max_modulus) {
            throw ParseError("\"modulus\" must be an integer in [2, 2^62]");
        }
        modulus = p.get<std::uint64_t>();
    }
    return {Matrix<Integer>(rows, cols, std::move(entries)), modulus};
}

MatrixFile parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long rows = 0;
    long long cols = 0;
    if (!(in >> rows >> cols)) throw ParseError("text matrix must start with \"R C\"");
    if (rows < 1 || cols < 1) throw ParseError("text matrix dimensions must be positive");
    std::vector<Integer> entries;
    std::string token;
    while (in >> token) {
        try {
            entries.push_back(Integer::from_string(token));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("entry ") + std::to_string(entries.size()) + ": " + e.what());
        }
    }
    const auto expected = static_cast<std::size_t>(rows * cols);
    if (entries.size() != expected) {
        throw ShapeError("text matrix holds " + std::to_string(entries.size()) + " entries but R*C = " +
                         std::to_string(expected));
    }
    return {Matrix<Integer>(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries)),
            std::nullopt};
}

}  // namespace

MatrixFile parse_matrix(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty matrix file");
    return text[first] == '{' ? parse_json(text) : parse_text(text);
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ShapeError& e) {
        throw ShapeError(path + ": " + e.what());
    }
}

std::string format_matrix_json(const Matrix<Integer>& m, std::optional<std::uint64_t> modulus) {
    nlohmann::ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    auto data = nlohmann::ordered_json::array();
    const mpz_class bound(static_cast<long>(kMaxJsonNumber));
    for (const Integer& x : m.data()) {
        if (abs(x.value()) <= bound) {
            data.push_back(x.to_int64());
        } else {
            data.push_back(x.to_string());
        }
    }
    doc["data"] = std::move(data);
    if (modulus) doc["modulus"] = *modulus;
    return doc.dump() + "\n";
}

}  // namespace commat
