#include "flagmorph/io.hpp"

#include <sstream>
#include <stdexcept>

namespace flagmorph::io {

std::string dump(const json& value) { return value.dump(2) + "\n"; }

json flag_variety_json(const chow::FlagVariety& fv) {
    return json{{"n", fv.n}, {"dims", fv.dims}};
}

json presentation_json(const chow::ChowPresentation& presentation) {
    json blocks = json::array();
    for (const auto& [start, end] : presentation.blocks) {
        json names = json::array();
        for (int v = start; v <= end; ++v) names.push_back("X" + std::to_string(v));
        blocks.push_back(names);
    }
    json variables = json::array();
    for (int v = 1; v <= presentation.fv.variable_count(); ++v)
        variables.push_back("X" + std::to_string(v));
    json relations = json::array();
    for (const auto& [degree, poly] : presentation.relations)
        relations.push_back(json{{"degree", degree}, {"polynomial", poly.to_string()}});
    return json{{"n", presentation.fv.n},
                {"dims", presentation.fv.dims},
                {"variables", variables},
                {"blocks", blocks},
                {"relations", relations}};
}

json verdict_json(const obstruction::Verdict& verdict) {
    json value{{"outcome", obstruction::outcome_name(verdict.outcome)},
               {"reason", verdict.reason}};
    if (verdict.evidence) {
        json solutions = json::array();
        for (const auto& row : verdict.evidence->solutions) solutions.push_back(row);
        value["evidence"] = json{{"bound", verdict.evidence->bound},
                                 {"unknowns", verdict.evidence->unknown_names},
                                 {"solutions", solutions}};
    }
    return value;
}

json search_json(const obstruction::ConstraintSystem& system, long long bound,
                 const std::vector<obstruction::PullbackAssignment>& solutions) {
    json rows = json::array();
    for (const auto& assignment : solutions) {
        std::vector<long long> row;
        row.reserve(system.unknowns.size());
        for (const auto& g : system.unknowns) row.push_back(assignment.values.at(g));
        rows.push_back(row);
    }
    json equalities = json::array();
    for (const auto& [degree, poly] : system.equalities)
        equalities.push_back(json{{"degree", degree}, {"polynomial", poly.to_string()}});
    json inequalities = json::array();
    for (const auto& [degree, poly] : system.inequalities)
        inequalities.push_back(json{{"degree", degree}, {"polynomial", poly.to_string()}});
    return json{{"n", system.fv.n},         {"dims", system.fv.dims},
                {"m", system.m},            {"bound", bound},
                {"unknowns", system.unknown_names}, {"equalities", equalities},
                {"inequalities", inequalities},     {"solutions", rows}};
}

std::string search_csv(const obstruction::ConstraintSystem& system,
                       const std::vector<obstruction::PullbackAssignment>& solutions) {
    std::ostringstream out;
    for (std::size_t i = 0; i < system.unknown_names.size(); ++i) {
        if (i) out << ",";
        out << system.unknown_names[i];
    }
    out << "\n";
    for (const auto& assignment : solutions) {
        bool first = true;
        for (const auto& g : system.unknowns) {
            if (!first) out << ",";
            first = false;
            out << assignment.values.at(g);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

json rational_json(const linalg::Rat& value) {
    return json::array({value.get_num().get_str(), value.get_den().get_str()});
}

linalg::Rat rational_from_json(const json& value) {
    if (value.is_number_integer()) return linalg::Rat(to_int(value.get<long long>()));
    if (value.is_array() && value.size() == 2) {
        auto part = [&](const json& entry) -> mpz_class {
            if (entry.is_number_integer()) return to_int(entry.get<long long>());
            if (entry.is_string()) return mpz_class(entry.get<std::string>());
            throw std::invalid_argument("flag point: rational parts must be integers or strings");
        };
        mpz_class num = part(value[0]);
        mpz_class den = part(value[1]);
        if (den == 0) throw std::invalid_argument("flag point: zero denominator");
        linalg::Rat rat(num, den);
        rat.canonicalize();
        return rat;
    }
    throw std::invalid_argument("flag point: expected [num, den] pair");
}

}  // namespace

json flag_point_json(const witness::FlagPoint& point) {
    json bases = json::array();
    for (const auto& basis : point.bases) {
        json columns = json::array();
        for (int c = 0; c < basis.cols(); ++c) {
            json column = json::array();
            for (int r = 0; r < basis.rows(); ++r) column.push_back(rational_json(basis.at(r, c)));
            columns.push_back(column);
        }
        bases.push_back(columns);
    }
    return json{{"n", point.ambient_dim - 1}, {"dims", point.dims}, {"bases", bases}};
}

witness::FlagPoint flag_point_from_json(const json& value) {
    witness::FlagPoint point;
    point.ambient_dim = value.at("n").get<int>() + 1;
    point.dims = value.at("dims").get<std::vector<int>>();
    for (const json& columns : value.at("bases")) {
        std::vector<linalg::Vec> cols;
        for (const json& column : columns) {
            linalg::Vec v;
            v.reserve(column.size());
            for (const json& entry : column) v.push_back(rational_from_json(entry));
            if (static_cast<int>(v.size()) != point.ambient_dim)
                throw std::invalid_argument("flag point: column length must be n+1");
            cols.push_back(std::move(v));
        }
        point.bases.push_back(linalg::Mat::from_columns(point.ambient_dim, cols));
    }
    return point;
}

json classification_json(const bundles::SplittingType& type,
                         const bundles::Classification& classification) {
    json value{{"m", type.m},
               {"type", type.entries},
               {"outcome", bundles::bundle_outcome_name(classification.outcome)},
               {"matched", classification.matched}};
    value["rule"] = classification.rule ? json(*classification.rule) : json(nullptr);
    return value;
}

linalg::Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty token");
    linalg::Rat value;
    try {
        value = linalg::Rat(text, 10);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    }
    if (value.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    value.canonicalize();
    return value;
}

}  // namespace flagmorph::io
