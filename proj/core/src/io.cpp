#include "ghtk/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ghtk::io {

using nlohmann::json;

namespace {

FiniteMetricSpace validate_with(const Matrix& m, std::vector<std::string> labels,
                                const std::optional<ToleranceConfig>& tol) {
    if (tol) return validate_metric(m, std::move(labels), *tol);
    return validate_metric(m, std::move(labels));
}

bool looks_numeric(const std::string& field) {
    char* end = nullptr;
    std::string trimmed = field;
    (void)std::strtod(trimmed.c_str(), &end);
    while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
    return end && *end == '\0' && !trimmed.empty();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' '))
            field.pop_back();
        while (!field.empty() && field.front() == ' ') field.erase(field.begin());
        fields.push_back(field);
    }
    return fields;
}

}  // namespace

FiniteMetricSpace parse_matrix_json(const std::string& text,
                                    std::optional<ToleranceConfig> tol) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail("ParseError", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dist") || !doc["dist"].is_array())
        fail("ParseError", "expected an object with a \"dist\" matrix");
    Matrix m;
    for (const auto& row : doc["dist"]) {
        if (!row.is_array()) fail("ParseError", "\"dist\" rows must be arrays");
        std::vector<double> r;
        for (const auto& v : row) {
            if (!v.is_number()) fail("ParseError", "matrix entries must be numbers");
            r.push_back(v.get<double>());
        }
        m.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) fail("ParseError", "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return validate_with(m, std::move(labels), tol);
}

FiniteMetricSpace parse_matrix_csv(const std::string& text,
                                   std::optional<ToleranceConfig> tol) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.empty()) fail("ParseError", "empty CSV document");

    std::vector<std::string> labels;
    std::size_t first = 0;
    if (!rows[0].empty() && !looks_numeric(rows[0][0])) {
        labels = rows[0];
        first = 1;
    }
    Matrix m;
    for (std::size_t i = first; i < rows.size(); ++i) {
        std::vector<double> r;
        for (const auto& field : rows[i]) {
            if (!looks_numeric(field))
                fail("ParseError", "non-numeric CSV entry '" + field + "'");
            r.push_back(std::stod(field));
        }
        m.push_back(std::move(r));
    }
    return validate_with(m, std::move(labels), tol);
}

FiniteMetricSpace load_space(const std::string& path,
                             std::optional<ToleranceConfig> tol) {
    const std::string text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_matrix_json(text, tol);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return parse_matrix_csv(text, tol);
    try {
        return parse_matrix_json(text, tol);
    } catch (const Error& e) {
        if (e.name() != "ParseError") throw;
        return parse_matrix_csv(text, tol);
    }
}

std::string matrix_to_json(const FiniteMetricSpace& x) {
    json doc;
    doc["labels"] = x.labels();
    json dist = json::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < x.size(); ++j) row.push_back(x(i, j));
        dist.push_back(std::move(row));
    }
    doc["dist"] = std::move(dist);
    return doc.dump(2) + "\n";
}

std::string matrix_to_csv(const FiniteMetricSpace& x) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j) out << ',';
            out << x(i, j);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

json witness_json(const Correspondence& r) {
    json pairs = json::array();
    for (const auto& [i, j] : r.pairs()) pairs.push_back(json::array({i, j}));
    return pairs;
}

}  // namespace

std::string correspondence_to_json(const Correspondence& r) {
    return witness_json(r).dump();
}

std::string gh_result_to_json(const GHResult& r) {
    json doc;
    doc["value"] = r.value;
    doc["method"] = method_name(r.method);
    doc["lower"] = r.lower;
    doc["upper"] = r.upper;
    doc["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
    return doc.dump(2) + "\n";
}

std::string borsuk_result_to_json(const BorsukResult& r) {
    json doc;
    doc["beta"] = r.number;
    json blocks = json::array();
    for (const auto& block : r.witness.blocks()) blocks.push_back(block);
    doc["witness"] = std::move(blocks);
    doc["epsilon"] = r.epsilon;
    doc["diam"] = r.diam;
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("IOError", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("IOError", "cannot write '" + path + "'");
    out << content;
}

}  // namespace ghtk::io
