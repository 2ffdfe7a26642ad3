#include "incompat/matrix_io.hpp"

#include "incompat/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace incompat {

namespace {

using nlohmann::json;

std::string location(std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// Translates a byte offset into 1-based line/column.
std::string location_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return location(line, column);
}

std::size_t require_dim_field(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        throw Error(ErrorCode::shape, std::string("missing field \"") + key + "\"");
    }
    if (!it->is_number_integer() || it->get<long long>() <= 0) {
        throw Error(ErrorCode::shape, std::string("field \"") + key + "\" must be a positive integer");
    }
    return static_cast<std::size_t>(it->get<long long>());
}

Eigen::MatrixXd read_part(const json& doc, const char* key, std::size_t rows, std::size_t cols) {
    const json& part = doc.at(key);
    if (!part.is_array() || part.size() != rows) {
        throw Error(ErrorCode::shape, std::string("\"") + key + "\" must be an array of " +
                                          std::to_string(rows) + " rows");
    }
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = part[r];
        if (!row.is_array() || row.size() != cols) {
            throw Error(ErrorCode::shape, std::string("\"") + key + "\" row " + std::to_string(r) +
                                              " must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number()) {
                throw Error(ErrorCode::value, std::string("\"") + key + "\"[" + std::to_string(r) +
                                                  "][" + std::to_string(c) + "] is not a number");
            }
            const double v = row[c].get<double>();
            if (!std::isfinite(v)) {
                throw Error(ErrorCode::value, std::string("\"") + key + "\"[" + std::to_string(r) +
                                                  "][" + std::to_string(c) + "] is not finite");
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
        }
    }
    return out;
}

ComplexMatrix load_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::parse, "malformed JSON at " + location_of_byte(text, e.byte == 0 ? 0 : e.byte - 1));
    } catch (const json::out_of_range& e) {
        throw Error(ErrorCode::value, std::string("JSON number out of range: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::parse, "JSON matrix document must be an object");
    }
    const std::size_t rows = require_dim_field(doc, "rows");
    const std::size_t cols = require_dim_field(doc, "cols");
    if (!doc.contains("re")) {
        throw Error(ErrorCode::shape, "missing field \"re\"");
    }
    const Eigen::MatrixXd re = read_part(doc, "re", rows, cols);
    const Eigen::MatrixXd im = doc.contains("im")
                                   ? read_part(doc, "im", rows, cols)
                                   : Eigen::MatrixXd::Zero(re.rows(), re.cols()).eval();
    return ComplexMatrix::from_parts(re, im);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Parses an optionally signed decimal number at the start of `s`; returns the
// number of characters consumed or 0 on failure.
std::size_t parse_signed(std::string_view s, double& value) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        return 0;
    }
    const char* first = s.data() + pos;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
        return 0;
    }
    if (negative) value = -value;
    return static_cast<std::size_t>(ptr - s.data());
}

bool parse_entry(std::string_view s, Complex& out) {
    double first = 0.0;
    const std::size_t n1 = parse_signed(s, first);
    if (n1 == 0) return false;
    std::string_view rest = s.substr(n1);
    if (rest.empty()) {
        out = Complex(first, 0.0);
        return true;
    }
    if (rest == "i") {
        out = Complex(0.0, first);
        return true;
    }
    if (rest.front() != '+' && rest.front() != '-') return false;
    double second = 0.0;
    const std::size_t n2 = parse_signed(rest, second);
    if (n2 == 0 || rest.substr(n2) != "i") return false;
    out = Complex(first, second);
    return true;
}

ComplexMatrix load_csv(const std::string& text) {
    std::vector<std::vector<Complex>> rows;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        ++line_no;
        const std::string_view line(text.data() + start, end - start);
        start = end + 1;
        if (trim(line).empty()) continue;

        std::vector<Complex> row;
        std::size_t field_start = 0;
        while (true) {
            std::size_t comma = line.find(',', field_start);
            const std::size_t field_end = comma == std::string_view::npos ? line.size() : comma;
            const std::string_view field = trim(line.substr(field_start, field_end - field_start));
            Complex z;
            if (!parse_entry(field, z)) {
                throw Error(ErrorCode::parse, "malformed CSV entry \"" + std::string(field) + "\" at " +
                                                  location(line_no, field_start + 1));
            }
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw Error(ErrorCode::value, "non-finite CSV entry at " + location(line_no, field_start + 1));
            }
            row.push_back(z);
            if (comma == std::string_view::npos) break;
            field_start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw Error(ErrorCode::shape, "ragged CSV: line " + std::to_string(line_no) + " has " +
                                              std::to_string(row.size()) + " entries, expected " +
                                              std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw Error(ErrorCode::shape, "CSV matrix has no rows");
    }
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    return ComplexMatrix(std::move(m));
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

MatrixFormat parse_matrix_format(std::string_view name) {
    if (name == "json") return MatrixFormat::json;
    if (name == "csv") return MatrixFormat::csv;
    throw Error(ErrorCode::invalid_argument, "unknown matrix format \"" + std::string(name) + "\"");
}

ComplexMatrix load_matrix(std::istream& in, MatrixFormat format) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return format == MatrixFormat::json ? load_json(text) : load_csv(text);
}

ComplexMatrix load_matrix_file(const std::string& path, MatrixFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::invalid_argument, "cannot open " + path);
    }
    return load_matrix(in, format);
}

void save_matrix(std::ostream& out, const ComplexMatrix& m, MatrixFormat format) {
    const auto& v = m.values();
    if (format == MatrixFormat::json) {
        json re = json::array();
        json im = json::array();
        for (Eigen::Index r = 0; r < v.rows(); ++r) {
            json re_row = json::array();
            json im_row = json::array();
            for (Eigen::Index c = 0; c < v.cols(); ++c) {
                re_row.push_back(v(r, c).real());
                im_row.push_back(v(r, c).imag());
            }
            re.push_back(std::move(re_row));
            im.push_back(std::move(im_row));
        }
        json doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
        out << doc.dump() << '\n';
        return;
    }
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
        for (Eigen::Index c = 0; c < v.cols(); ++c) {
            if (c > 0) out << ',';
            const double im = v(r, c).imag();
            out << format_double(v(r, c).real()) << (std::signbit(im) ? '-' : '+')
                << format_double(std::abs(im)) << 'i';
        }
        out << '\n';
    }
}

}  // namespace incompat
