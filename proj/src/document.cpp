#include "holodual/document.hpp"

#include <sstream>

namespace holodual {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
    throw ParseError(what);
}

long get_long(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("expected integer '") + key + "'");
    return j[key].get<long>();
}

int get_depth(const json& j, std::optional<int> depth_override) {
    int depth = int(get_long(j, "depth"));
    if (depth_override) depth = *depth_override;
    return depth;
}

FiniteAbelianGroup parse_finite_abelian(const json& j) {
    if (!j.contains("invariant_factors") || !j["invariant_factors"].is_array())
        bad("finite_abelian needs an 'invariant_factors' array");
    std::vector<Int> factors;
    for (const auto& v : j["invariant_factors"]) {
        if (!v.is_number_integer()) bad("invariant factors must be integers");
        factors.push_back(v.get<Int>());
    }
    return FiniteAbelianGroup(std::move(factors));
}

FiniteGroup parse_named_group(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    long arg = -1;
    if (colon != std::string::npos) {
        try {
            arg = std::stol(name.substr(colon + 1));
        } catch (...) {
            bad("bad group name argument in '" + name + "'");
        }
    }
    if (head == "cyclic" && arg > 0) return FiniteGroup::cyclic(int(arg));
    if (head == "dihedral" && arg > 0) return FiniteGroup::dihedral(int(arg));
    if (head == "symmetric" && arg > 0) return FiniteGroup::symmetric(int(arg));
    if (head == "alternating" && arg > 0) return FiniteGroup::alternating(int(arg));
    if (name == "quaternion8") return FiniteGroup::quaternion8();
    bad("unknown group name '" + name + "'");
}

FiniteGroup parse_finite_group(const json& j) {
    if (j.is_string()) return parse_named_group(j.get<std::string>());
    if (j.contains("name")) return parse_named_group(j["name"].get<std::string>());
    if (j.contains("invariant_factors")) return FiniteGroup::from_abelian(parse_finite_abelian(j));
    if (j.contains("table")) {
        if (!j["table"].is_array()) bad("group 'table' must be an array of rows");
        std::vector<std::vector<int>> table;
        for (const auto& row : j["table"]) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(v.get<int>());
            table.push_back(std::move(r));
        }
        return FiniteGroup(std::move(table), "table-group");
    }
    bad("finite group needs 'name', 'table', or 'invariant_factors'");
}

IMat parse_matrix(const json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    int rows = int(j.size());
    int cols = rows > 0 ? int(j[0].size()) : 0;
    IMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (int(j[size_t(i)].size()) != cols) bad("matrix rows must have equal length");
        for (int c = 0; c < cols; ++c) {
            const auto& v = j[size_t(i)][size_t(c)];
            if (!v.is_number_integer()) bad("matrix entries must be integers");
            m.at(i, c) = v.get<long>();
        }
    }
    return m;
}

std::vector<FiniteAbelianGroup> parse_levels(const json& j) {
    if (!j.contains("levels") || !j["levels"].is_array()) bad("tower needs a 'levels' array");
    std::vector<FiniteAbelianGroup> levels;
    for (const auto& l : j["levels"]) {
        std::vector<Int> factors;
        for (const auto& v : l) factors.push_back(v.get<Int>());
        levels.emplace_back(std::move(factors));
    }
    return levels;
}

template <class Tower>
Tower parse_explicit_tower(const json& j, std::optional<int> depth_override) {
    auto levels = parse_levels(j);
    if (!j.contains("transitions") || !j["transitions"].is_array())
        bad("tower needs a 'transitions' array");
    std::vector<IMat> mats;
    for (const auto& t : j["transitions"]) mats.push_back(parse_matrix(t));
    if (mats.size() + 1 != levels.size()) throw ValidationError("tower needs N-1 transitions");
    std::vector<Hom> transitions;
    constexpr bool ind = std::is_same_v<Tower, IndGroup>;
    for (size_t n = 0; n + 1 < levels.size(); ++n) {
        const FiniteAbelianGroup& src = ind ? levels[n] : levels[n + 1];
        const FiniteAbelianGroup& dst = ind ? levels[n + 1] : levels[n];
        transitions.emplace_back(src, dst, std::move(mats[n]));
    }
    Tower tower(std::move(levels), std::move(transitions));
    if (depth_override) return tower.truncated(*depth_override);
    return tower;
}

std::variant<IndGroup, ProGroup> parse_abelian_tower(const json& j,
                                                     std::optional<int> depth_override) {
    if (j.contains("builder")) {
        std::string b = j["builder"].get<std::string>();
        if (b == "pruefer") return pruefer(get_long(j, "p"), get_depth(j, depth_override));
        if (b == "padic") return padic(get_long(j, "p"), get_depth(j, depth_override));
        if (b == "direct_sum_tower")
            return direct_sum_tower(get_long(j, "d"), get_depth(j, depth_override));
        if (b == "product_pro") return product_pro(get_long(j, "d"), get_depth(j, depth_override));
        if (b == "factorial_ind") return factorial_ind(get_depth(j, depth_override));
        bad("unknown abelian tower builder '" + b + "'");
    }
    std::string kind = j.value("kind", "");
    if (kind == "ind_tower") return parse_explicit_tower<IndGroup>(j, depth_override);
    if (kind == "pro_tower") return parse_explicit_tower<ProGroup>(j, depth_override);
    bad("expected an abelian tower (builder or ind_tower/pro_tower)");
}

TowerOfGroups parse_group_tower(const json& j, std::optional<int> depth_override) {
    if (j.contains("builder")) {
        std::string b = j["builder"].get<std::string>();
        if (b == "symmetric_tower") return TowerOfGroups::symmetric_tower(get_depth(j, depth_override));
        if (b == "power_pro") {
            if (!j.contains("group")) bad("power_pro needs a 'group'");
            return TowerOfGroups::power_pro(parse_finite_group(j["group"]),
                                            get_depth(j, depth_override));
        }
        // abelian builders fall through to the abelian tower parser
    }
    auto tower = parse_abelian_tower(j, depth_override);
    if (std::holds_alternative<IndGroup>(tower))
        return TowerOfGroups::from_ind(std::get<IndGroup>(tower));
    return TowerOfGroups::from_pro(std::get<ProGroup>(tower));
}

mpq_class parse_rational_json(const json& v) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    bad("expected a rational ('p/q' string or integer)");
}

Cyclotomic parse_cyclotomic(const json& v) {
    if (v.is_number_integer() || v.is_string())
        return Cyclotomic::from_rational(parse_rational_json(v));
    if (v.is_object() && v.contains("conductor") && v.contains("coeffs")) {
        long m = get_long(v, "conductor");
        Cyclotomic acc;
        long k = 0;
        for (const auto& c : v["coeffs"]) {
            Cyclotomic term = Cyclotomic::from_rational(parse_rational_json(c)) *
                              Cyclotomic::zeta_power(m, k);
            acc = acc + term;
            ++k;
        }
        if (k != euler_phi(m)) throw ValidationError("cyclotomic literal needs phi(conductor) coefficients");
        return acc;
    }
    bad("expected a cyclotomic literal");
}

FDHopf parse_hopf(const json& j) {
    std::string kind = j.value("kind", "");
    if (kind == "group_algebra" || kind == "function_algebra") {
        if (!j.contains("group")) bad(kind + " needs a 'group'");
        FiniteGroup g = parse_finite_group(j["group"]);
        FDHopf h = kind == "group_algebra" ? group_algebra_hopf(g) : function_algebra_hopf(g);
        if (j.contains("antipode_override")) {
            const json& o = j["antipode_override"];
            QMat s(h.dim(), h.dim());
            if (o.is_string() && o.get<std::string>() == "identity")
                s = QMat::identity(h.dim());
            else {
                if (!o.is_array() || int(o.size()) != h.dim())
                    throw ValidationError("antipode_override must be 'identity' or a dim x dim matrix");
                for (int i = 0; i < h.dim(); ++i)
                    for (int c = 0; c < h.dim(); ++c)
                        s.at(i, c) = parse_rational_json(o[size_t(i)][size_t(c)]);
            }
            std::vector<SparseVec> mult;
            std::vector<CoVec> comult;
            std::vector<mpq_class> counit;
            for (int i = 0; i < h.dim(); ++i) {
                for (int c = 0; c < h.dim(); ++c) mult.push_back(h.mul_basis(i, c));
                comult.push_back(h.comult_basis(i));
                counit.push_back(h.counit_coef(i));
            }
            return FDHopf(h.dim(), std::move(mult), h.unit(), std::move(comult), std::move(counit),
                          std::move(s), h.name() + " [antipode overridden]");
        }
        return h;
    }
    if (kind == "hopf") {
        int dim = int(get_long(j, "dim"));
        std::vector<SparseVec> mult(static_cast<size_t>(dim) * size_t(dim));
        for (const auto& t : j.value("mult", json::array())) {
            int i = t.at(0).get<int>(), c2 = t.at(1).get<int>(), k = t.at(2).get<int>();
            if (i < 0 || i >= dim || c2 < 0 || c2 >= dim) throw ValidationError("mult index range");
            mult[size_t(i) * size_t(dim) + size_t(c2)].accumulate(k, parse_rational_json(t.at(3)));
        }
        SparseVec unit;
        {
            int k = 0;
            for (const auto& v : j.value("unit", json::array())) unit.accumulate(k++, parse_rational_json(v));
        }
        std::vector<CoVec> comult(static_cast<size_t>(dim));
        for (const auto& t : j.value("comult", json::array())) {
            int i = t.at(0).get<int>();
            if (i < 0 || i >= dim) throw ValidationError("comult index range");
            comult[size_t(i)].push_back(
                CoTerm{t.at(1).get<int>(), t.at(2).get<int>(), parse_rational_json(t.at(3))});
        }
        std::vector<mpq_class> counit;
        for (const auto& v : j.value("counit", json::array())) counit.push_back(parse_rational_json(v));
        QMat s(dim, dim);
        const json& a = j.at("antipode");
        for (int i = 0; i < dim; ++i)
            for (int c = 0; c < dim; ++c) s.at(i, c) = parse_rational_json(a.at(static_cast<size_t>(i)).at(static_cast<size_t>(c)));
        return FDHopf(dim, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                      std::move(s), j.value("name", "hopf literal"));
    }
    bad("expected a hopf algebra document");
}

std::variant<IndHopf, ProHopf> parse_hopf_tower(const json& j, std::optional<int> depth_override) {
    if (!j.contains("algebra")) bad("hopf_tower needs 'algebra': \"group\" or \"function\"");
    std::string alg = j["algebra"].get<std::string>();
    if (!j.contains("tower")) bad("hopf_tower needs a 'tower'");
    TowerOfGroups t = parse_group_tower(j["tower"], depth_override);
    bool ind = t.direction() == TowerOfGroups::Direction::ind;
    if (alg == "group") {
        if (ind) return ind_group_algebra(t);
        return pro_group_algebra(t);
    }
    if (alg == "function") {
        if (ind) return ind_function_algebra(t);
        return pro_function_algebra(t);
    }
    bad("hopf_tower 'algebra' must be \"group\" or \"function\"");
}

} // namespace

SpecDocument parse_document(const std::string& text, std::optional<int> depth_override) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_document(j, depth_override);
}

SpecDocument parse_document(const nlohmann::json& j, std::optional<int> depth_override) {
    if (!j.is_object()) bad("document must be a JSON object");
    std::string kind = j.value("kind", "");

    if (kind == "finite_abelian") {
        FiniteAbelianGroup g = parse_finite_abelian(j);
        return SpecDocument{g, g.describe()};
    }
    if (kind == "finite_group") {
        FiniteGroup g = parse_finite_group(j);
        return SpecDocument{g, g.name()};
    }
    if (kind == "group_algebra" || kind == "function_algebra" || kind == "hopf") {
        FDHopf h = parse_hopf(j);
        std::string name = h.name();
        return SpecDocument{std::move(h), name};
    }
    if (kind == "hopf_tower") {
        auto t = parse_hopf_tower(j, depth_override);
        if (std::holds_alternative<IndHopf>(t)) {
            std::string d = std::get<IndHopf>(t).describe();
            return SpecDocument{std::move(std::get<IndHopf>(t)), d};
        }
        std::string d = std::get<ProHopf>(t).describe();
        return SpecDocument{std::move(std::get<ProHopf>(t)), d};
    }
    if (kind == "locally_constant_function") {
        if (!j.contains("tower")) bad("locally_constant_function needs a 'tower'");
        auto tower = parse_abelian_tower(j["tower"], depth_override);
        if (!std::holds_alternative<ProGroup>(tower))
            throw ValidationError("locally constant functions live on pro towers");
        ProGroup pro = std::get<ProGroup>(tower);
        int level = int(get_long(j, "level"));
        if (!j.contains("table") || !j["table"].is_array())
            bad("locally_constant_function needs a 'table' array");
        std::vector<Cyclotomic> table;
        for (const auto& v : j["table"]) table.push_back(parse_cyclotomic(v));
        LocallyConstantFunction f(std::move(pro), level, std::move(table));
        return SpecDocument{std::move(f), "function at level " + std::to_string(level)};
    }
    if (kind == "ind_tower" || kind == "pro_tower" || j.contains("builder")) {
        // group towers: abelian builders/explicit, or symmetric/power builders
        if (j.contains("builder")) {
            std::string b = j["builder"].get<std::string>();
            if (b == "symmetric_tower" || b == "power_pro")
                bad("group towers of table groups are used inside hopf_tower documents");
        }
        auto t = parse_abelian_tower(j, depth_override);
        if (std::holds_alternative<IndGroup>(t)) {
            std::string d = std::get<IndGroup>(t).describe();
            return SpecDocument{std::move(std::get<IndGroup>(t)), d};
        }
        std::string d = std::get<ProGroup>(t).describe();
        return SpecDocument{std::move(std::get<ProGroup>(t)), d};
    }
    bad("unrecognized document kind '" + kind + "'");
}

ordered_json rational_json(const mpq_class& q) {
    return rational_to_string(q);
}

ordered_json cyclotomic_json(const Cyclotomic& c) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(rational_json(x));
    return ordered_json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

ordered_json group_json(const FiniteAbelianGroup& g) {
    ordered_json factors = ordered_json::array();
    for (Int d : g.invariant_factors()) factors.push_back(d);
    return ordered_json{{"kind", "finite_abelian"}, {"invariant_factors", factors}};
}

namespace {

ordered_json hom_matrix_json(const Hom& h) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < h.matrix().rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < h.matrix().cols(); ++c) row.push_back(h.matrix().at(i, c).get_si());
        rows.push_back(row);
    }
    return rows;
}

template <class Tower>
ordered_json tower_json(const char* kind, const Tower& g) {
    ordered_json levels = ordered_json::array();
    for (int n = 1; n <= g.depth(); ++n) {
        ordered_json factors = ordered_json::array();
        for (Int d : g.level(n).invariant_factors()) factors.push_back(d);
        levels.push_back(factors);
    }
    ordered_json transitions = ordered_json::array();
    for (int n = 1; n < g.depth(); ++n) transitions.push_back(hom_matrix_json(g.transition(n)));
    return ordered_json{{"kind", kind}, {"levels", levels}, {"transitions", transitions}};
}

} // namespace

ordered_json ind_tower_json(const IndGroup& g) {
    return tower_json("ind_tower", g);
}

ordered_json pro_tower_json(const ProGroup& g) {
    return tower_json("pro_tower", g);
}

ordered_json report_json(const Report& r) {
    ordered_json records = ordered_json::array();
    for (const CheckRecord& rec : r.records) {
        ordered_json o;
        o["check"] = rec.check;
        if (rec.level)
            o["level"] = *rec.level;
        else
            o["level"] = nullptr;
        o["pass"] = rec.pass;
        o["witness"] = rec.witness;
        o["anchor"] = rec.anchor;
        records.push_back(std::move(o));
    }
    ordered_json out;
    out["subject"] = r.subject;
    out["records"] = std::move(records);
    out["verdict"] = r.passed() ? "pass" : "fail";
    if (r.diagram) {
        ordered_json nodes = ordered_json::array();
        for (const auto& n : r.diagram->nodes)
            nodes.push_back(ordered_json{{"name", n.name}, {"description", n.description}});
        ordered_json edges = ordered_json::array();
        for (const auto& e : r.diagram->edges)
            edges.push_back(ordered_json{{"from", e.from},
                                         {"to", e.to},
                                         {"label", e.label},
                                         {"verified", e.verified},
                                         {"certificate", e.certificate}});
        out["diagram"] = ordered_json{{"nodes", nodes}, {"edges", edges}};
    }
    return out;
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "subject: " << r.subject << "\n";
    for (const CheckRecord& rec : r.records) {
        os << "  [" << (rec.pass ? "pass" : "FAIL") << "] " << rec.check;
        if (rec.level) os << " (level " << *rec.level << ")";
        if (!rec.pass && !rec.witness.empty()) os << " -- " << rec.witness;
        os << "  {" << rec.anchor << "}\n";
    }
    if (r.diagram) {
        os << "  reflexivity diagram:\n";
        for (const auto& e : r.diagram->edges)
            os << "    " << e.from << " -> " << e.to << " [" << e.label << "] "
               << (e.verified ? "verified" : "UNVERIFIED") << "\n";
    }
    os << "verdict: " << (r.passed() ? "pass" : "fail") << "\n";
    return os.str();
}

} // namespace holodual
