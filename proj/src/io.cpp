#include "gmc/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace gmc {

namespace {

nlohmann::json parse_stream(std::istream& in) {
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

Vec as_vec(const nlohmann::json& j, const char* field) {
    if (!j.is_array()) throw ParseError(std::string(field) + " must be an array");
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number())
            throw ParseError(std::string(field) + " entries must be numbers");
        v.push_back(x.get<double>());
    }
    return v;
}

}  // namespace

SymmetricMatrix read_matrix_json(std::istream& in) {
    nlohmann::json j = parse_stream(in);
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw ParseError("matrix file needs fields \"n\" and \"rows\"");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw ParseError("\"n\" must be a positive integer");
    const int n = j["n"].get<int>();
    if (!j["rows"].is_array() || static_cast<int>(j["rows"].size()) != n)
        throw ParseError("\"rows\" must hold exactly n rows");
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
        rows.push_back(as_vec(j["rows"][i], "row"));
        if (static_cast<int>(rows.back().size()) != n)
            throw ParseError("row " + std::to_string(i + 1) +
                             " has wrong length");
    }
    for (int i = 0; i < n; ++i)
        for (int j2 = i + 1; j2 < n; ++j2)
            if (std::abs(rows[i][j2] - rows[j2][i]) > 1e-12)
                throw ParseError("matrix is not symmetric at (" +
                                 std::to_string(i + 1) + "," +
                                 std::to_string(j2 + 1) + ")");
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j2 = i; j2 < n; ++j2) m.set(i, j2, rows[j2][i]);
    return m;
}

SymmetricMatrix read_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_matrix_json(in);
}

void write_matrix_json(std::ostream& out, const SymmetricMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"n", m.size()}, {"rows", std::move(rows)}};
    out << j.dump(2) << "\n";
}

ChainSpec read_spec_json(std::istream& in) {
    nlohmann::json j = parse_stream(in);
    if (!j.is_object() || !j.contains("sigma") || !j.contains("rho"))
        throw ParseError("spec file needs fields \"sigma\" and \"rho\"");
    try {
        return ChainSpec(as_vec(j["sigma"], "sigma"), as_vec(j["rho"], "rho"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ChainSpec read_spec_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_spec_json(in);
}

void write_spec_json(std::ostream& out, const ChainSpec& spec) {
    nlohmann::json j{{"sigma", spec.sigma()}, {"rho", spec.rho()}};
    out << j.dump(2) << "\n";
}

bool is_spec_file(const std::string& path) {
    auto in = open_or_throw(path);
    nlohmann::json j = parse_stream(in);
    return j.is_object() && j.contains("sigma");
}

}  // namespace gmc
