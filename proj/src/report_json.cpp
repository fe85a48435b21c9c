#include "canalg/report_json.hpp"

#include "canalg/errors.hpp"

namespace canalg {

Json json_int(const Int& v) {
    if (fits_int64(v)) return v.convert_to<std::int64_t>();
    return v.str();
}

Json to_json(const GeometryReport& r) {
    Json components = Json::array();
    for (const auto& d : r.components) components.push_back(d.str());
    return Json{{"p", r.p},
                {"is_ci", r.is_ci},
                {"is_normal", r.is_normal},
                {"defect", json_int(r.defect)},
                {"component_count", json_int(r.component_count)},
                {"components", components}};
}

Json to_json(const ZeroSetReport& r) {
    return Json{{"p", r.p},
                {"is_ci", r.is_ci},
                {"component_count", r.component_count ? json_int(*r.component_count) : Json(nullptr)},
                {"count_proved", r.count_proved},
                {"bruteforce_count", r.bruteforce_count ? Json(*r.bruteforce_count) : Json(nullptr)},
                {"threshold", json_int(r.threshold)},
                {"target_dim", json_int(r.target_dim)}};
}

Json to_json(const ZTriple& z) {
    return Json{{"dprime", z.dprime.str()}, {"ddouble", z.ddouble.str()}, {"X", z.X.str()}, {"q", z.q}};
}

Json to_json(const oracle::MatrixRep& m) {
    Json lambdas = Json::array();
    for (const auto& l : m.lambdas.finite()) lambdas.push_back(to_fraction_string(l));
    Json arrows = Json::object();
    for (int i = 1; i <= m.type.n(); ++i) {
        for (int j = 1; j <= m.type.arm_length(i); ++j) {
            const auto& a = m.arrow(i, j);
            Json rows = Json::array();
            for (std::size_t r = 0; r < a.rows(); ++r) {
                Json row = Json::array();
                for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_fraction_string(a(r, c)));
                rows.push_back(std::move(row));
            }
            arrows[std::to_string(i) + "," + std::to_string(j)] = std::move(rows);
        }
    }
    return Json{{"type", m.type.arms()}, {"lambdas", lambdas}, {"dim", m.dim.str()}, {"arrows", arrows}};
}

oracle::MatrixRep matrix_rep_from_json(const Json& j) {
    try {
        const CanonicalType t(j.at("type").get<std::vector<int>>());
        std::vector<Rational> finite;
        for (const auto& l : j.at("lambdas")) finite.push_back(parse_rational(l.get<std::string>()));
        oracle::MatrixRep rep = oracle::zero_rep(t, oracle::LambdaChoice(t, std::move(finite)),
                                                 DimVector::parse(j.at("dim").get<std::string>(), t));
        for (int i = 1; i <= t.n(); ++i) {
            for (int k = 1; k <= t.arm_length(i); ++k) {
                const Json& rows = j.at("arrows").at(std::to_string(i) + "," + std::to_string(k));
                auto& a = rep.arrow(i, k);
                if (rows.size() != a.rows()) throw InvalidInput("arrow row count does not match the dimension vector");
                for (std::size_t r = 0; r < a.rows(); ++r) {
                    if (rows[r].size() != a.cols()) throw InvalidInput("arrow column count does not match the dimension vector");
                    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = parse_rational(rows[r][c].get<std::string>());
                }
            }
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed matrix representation: ") + e.what());
    }
}

}  // namespace canalg
