#include "csknot/io.hpp"

#include <fstream>
#include <sstream>

namespace csknot {

namespace {

Int parse_int(const std::string& tok) {
    try {
        return Int(tok);
    } catch (const std::invalid_argument&) {
        throw ParseError("not an integer: '" + tok + "'");
    }
}

} // namespace

IntPoly parse_poly_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<Int> coeffs;
    std::string tok;
    while (in >> tok) coeffs.push_back(parse_int(tok));
    if (coeffs.empty()) throw ParseError("empty polynomial");
    return IntPoly{std::move(coeffs)};
}

std::string poly_to_text(const IntPoly& f) {
    std::string out;
    if (f.is_zero()) return "0";
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) out += ' ';
        out += f.coeff(static_cast<std::size_t>(i)).get_str();
    }
    return out;
}

IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_int(tok));
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows[0].size())
            throw ShapeError("matrix rows have unequal lengths");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    return IntMatrix::from_rows(std::move(rows));
}

std::string matrix_to_text(const IntMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json conventions_json() {
    return Json{{"coeff_order", "ascending"}, {"hnf", "row-upper"}};
}

Json poly_to_json(const IntPoly& f) {
    Json arr = Json::array();
    for (int i = 0; i <= f.degree(); ++i) arr.push_back(f.coeff(static_cast<std::size_t>(i)).get_str());
    if (f.is_zero()) arr.push_back("0");
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    std::vector<Int> c;
    for (const auto& v : j) c.push_back(parse_int(v.get<std::string>()));
    return IntPoly{std::move(c)};
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j) {
        std::vector<Int> row;
        for (const auto& v : r) row.push_back(parse_int(v.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(std::move(rows));
}

Json cs_report_to_json(const CsReport& rep) {
    Json conds = Json::array();
    for (const auto& c : rep.cs_conditions)
        conds.push_back(Json{{"k", c.k}, {"det", c.det_value.get_str()}, {"pass", c.pass}});
    return Json{{"is_sl", rep.is_sl},
                {"cs_conditions", std::move(conds)},
                {"is_cs", rep.is_cs},
                {"is_positive", rep.is_positive},
                {"charpoly", poly_to_json(rep.charpoly)}};
}

Json family_report_to_json(const FamilyReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"n", rep.n},
                {"l", rep.l.get_str()},
                {"a", rep.a.get_str()},
                {"l_in_theorem_range", rep.in_range},
                {"checks", std::move(checks)},
                {"all_pass", rep.all_pass}};
}

Json ideal_to_json(const IdealLattice& i) {
    return Json{{"order_poly", poly_to_json(i.order()->poly())},
                {"hnf", matrix_to_json(i.basis_hnf())},
                {"norm", ideal_norm(i).get_str()}};
}

std::string equiv_kind_name(EquivKind k) {
    switch (k) {
    case EquivKind::Equivalent: return "equivalent";
    case EquivKind::NotEquivalent: return "not_equivalent";
    default: return "unknown";
    }
}

std::string star_route_name(StarRoute r) {
    switch (r) {
    case StarRoute::CharpolyMismatch: return "charpoly_mismatch";
    case StarRoute::IdealInvariant: return "ideal_invariant";
    case StarRoute::IdealWitness: return "ideal_witness";
    default: return "conjugacy_witness";
    }
}

std::string tri_name(Tri t) {
    switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
    }
}

Json class_list_to_json(const ClassList& cl) {
    Json reps = Json::array();
    for (std::size_t i = 0; i < cl.representatives.size(); ++i) {
        Json r = ideal_to_json(cl.representatives[i]);
        r["invertible"] = static_cast<bool>(cl.invertible[i]);
        reps.push_back(std::move(r));
    }
    Json pairwise = Json::array();
    for (const auto& row : cl.pairwise) {
        Json jrow = Json::array();
        for (const auto k : row) jrow.push_back(equiv_kind_name(k));
        pairwise.push_back(std::move(jrow));
    }
    Json unresolved = Json::array();
    for (const auto& [a, b] : cl.unresolved) unresolved.push_back(Json::array({a, b}));
    Json j{{"convention", conventions_json()},
           {"order_poly", poly_to_json(cl.order->poly())},
           {"norm_bound", cl.norm_bound.get_str()},
           {"integrally_closed", tri_name(cl.integrally_closed)},
           {"class_count", cl.representatives.size()},
           {"count_is_lower_bound", !cl.count_is_exact},
           {"complete", cl.complete},
           {"budget_exhausted", cl.budget_exhausted},
           {"ideals_enumerated", cl.ideals_enumerated},
           {"classes", std::move(reps)},
           {"pairwise", std::move(pairwise)},
           {"unresolved_pairs", std::move(unresolved)}};
    if (cl.minkowski)
        j["minkowski_bound"] = cl.minkowski->get_str();
    else
        j["minkowski_bound"] = nullptr;
    if (cl.group) {
        Json table = Json::array();
        for (const auto& row : cl.group->table) {
            Json jrow = Json::array();
            for (auto v : row) jrow.push_back(v);
            table.push_back(std::move(jrow));
        }
        j["group"] = Json{{"is_group", cl.group->is_group},
                          {"structure", cl.group->structure},
                          {"element_orders", cl.group->element_orders},
                          {"table", std::move(table)}};
    } else {
        j["group"] = nullptr;
    }
    return j;
}

Json knot_pair_report_to_json(const KnotPairReport& rep) {
    Json j = class_list_to_json(rep.classes);
    Json pairs = Json::array();
    for (const auto& p : rep.pairs) {
        pairs.push_back(Json{{"ideal_hnf", matrix_to_json(p.ideal.basis_hnf())},
                             {"norm", p.norm.get_str()},
                             {"invertible", p.invertible},
                             {"matrix", matrix_to_json(p.matrix)},
                             {"cs_report", cs_report_to_json(p.cs)}});
    }
    j["knot_pair_classes"] = std::move(pairs);
    return j;
}

Json star_verdict_to_json(const StarVerdict& v) {
    Json j{{"verdict", equiv_kind_name(v.kind)},
           {"route", star_route_name(v.route)},
           {"detail", v.detail}};
    if (v.conjugator) j["conjugator"] = matrix_to_json(*v.conjugator);
    if (v.ideal_witness) {
        Json alpha = Json::array(), beta = Json::array();
        for (const auto& c : v.ideal_witness->alpha.coords) alpha.push_back(c.get_str());
        for (const auto& c : v.ideal_witness->beta.coords) beta.push_back(c.get_str());
        j["witness"] = Json{{"alpha", std::move(alpha)}, {"beta", std::move(beta)}};
    }
    return j;
}

} // namespace csknot
