#include "qx/linalg/json.hpp"

#include "qx/error.hpp"

namespace qx::linalg {

nlohmann::json to_json(const Matrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Int& e = m(r, c);
            if (e.fits_slong_p())
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        rows.push_back(std::move(row));
    }
    return {{"ring", m.ring().name()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& j)
{
    try {
        Ring ring = Ring::parse(j.at("ring").get<std::string>());
        auto rows = j.at("rows").get<std::size_t>();
        auto cols = j.at("cols").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows)
            throw Error(Errc::Format, "matrix entries do not have " + std::to_string(rows) + " rows");
        Matrix m(ring, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& row = entries[r];
            if (!row.is_array() || row.size() != cols)
                throw Error(Errc::Format, "matrix row " + std::to_string(r) + " does not have " +
                                              std::to_string(cols) + " entries");
            for (std::size_t c = 0; c < cols; ++c) {
                const auto& e = row[c];
                if (e.is_number_integer())
                    m.set(r, c, Int(e.get<long>()));
                else if (e.is_string())
                    m.set(r, c, Int(e.get<std::string>()));
                else
                    throw Error(Errc::Format, "matrix entry is not an integer");
            }
        }
        return m;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(Errc::Format, std::string("malformed matrix JSON: ") + ex.what());
    } catch (const std::invalid_argument&) {
        throw Error(Errc::Format, "matrix entry string is not an integer");
    }
}

nlohmann::json to_json(const PresentedAbGroup& g)
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : g.torsion)
        torsion.push_back(t.get_str());
    return {{"betti", g.betti}, {"torsion", std::move(torsion)}};
}

}  // namespace qx::linalg
