#include "orbilat/json_io.hpp"

#include <stdexcept>

namespace orbilat {

nlohmann::json matrix_to_json(const QMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

QMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON: expected {rows, cols, entries}");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix JSON: entries row count mismatch");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix JSON: entries column count mismatch");
        for (std::size_t jx = 0; jx < cols; ++jx) {
            auto r = rat_from_string(row.at(jx).get<std::string>());
            if (!r) throw std::invalid_argument("matrix JSON: bad rational entry");
            m.at(i, jx) = *r;
        }
    }
    return m;
}

} // namespace orbilat
