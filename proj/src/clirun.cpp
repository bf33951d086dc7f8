#include "holodual/clirun.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "holodual/document.hpp"

namespace holodual {

namespace {

using nlohmann::ordered_json;

struct CommandOutput {
    Report report;
    ordered_json result; // command-specific payload, may be null
};

ordered_json hopf_tower_levels_json(int depth, const std::function<const FDHopf&(int)>& level) {
    ordered_json out = ordered_json::array();
    for (int n = 1; n <= depth; ++n)
        out.push_back(ordered_json{{"level", n}, {"dim", level(n).dim()}, {"name", level(n).name()}});
    return out;
}

CommandOutput run_dual(const SpecDocument& doc) {
    CommandOutput out;
    Report& r = out.report;
    if (const auto* g = std::get_if<FiniteAbelianGroup>(&doc.subject)) {
        DualGroup d = dual_group(*g);
        r.subject = "dual of " + g->describe();
        r.add("dual.same-order", d.group.order() == g->order(), anchor::duality_locally_finite);
        out.result = group_json(d.group);
        return out;
    }
    if (const auto* g = std::get_if<IndGroup>(&doc.subject)) {
        ProGroup d = dual_ind(*g);
        r.subject = "dual of " + g->describe();
        for (int n = 1; n < d.depth(); ++n)
            r.add("dual-transition.surjective", d.transition(n).is_surjective(),
                  anchor::duality_locally_finite, n);
        for (int n = 1; n <= d.depth(); ++n)
            r.add("dual.level-order", d.level(n).order() == g->level(n).order(),
                  anchor::duality_locally_finite, n);
        out.result = pro_tower_json(d);
        return out;
    }
    if (const auto* g = std::get_if<ProGroup>(&doc.subject)) {
        IndGroup d = dual_pro(*g);
        r.subject = "dual of " + g->describe();
        for (int n = 1; n < d.depth(); ++n)
            r.add("dual-transition.injective", d.transition(n).is_injective(),
                  anchor::duality_profinite, n);
        for (int n = 1; n <= d.depth(); ++n)
            r.add("dual.level-order", d.level(n).order() == g->level(n).order(),
                  anchor::duality_profinite, n);
        out.result = ind_tower_json(d);
        return out;
    }
    if (const auto* h = std::get_if<IndHopf>(&doc.subject)) {
        EnvelopeCertificate cert;
        ProHopf d = holomorphic_dual(*h, &cert);
        r.subject = "holomorphic dual of " + h->describe();
        r.add("envelope.identity", true, cert.anchor, std::nullopt);
        for (int n = 1; n < d.depth(); ++n)
            r.add("dual-transition.hopf-morphism", is_hopf_morphism(d.transition(n)),
                  anchor::hopf_duality, n);
        out.result = ordered_json{{"kind", "pro_hopf_tower"},
                                  {"levels", hopf_tower_levels_json(
                                                 d.depth(), [&](int n) -> const FDHopf& {
                                                     return d.level(n);
                                                 })},
                                  {"certificate", cert.statement}};
        return out;
    }
    if (const auto* h = std::get_if<ProHopf>(&doc.subject)) {
        EnvelopeCertificate cert;
        IndHopf d = holomorphic_dual(*h, &cert);
        r.subject = "holomorphic dual of " + h->describe();
        r.add("envelope.identity", true, cert.anchor, std::nullopt);
        for (int n = 1; n < d.depth(); ++n)
            r.add("dual-transition.hopf-morphism", is_hopf_morphism(d.transition(n)),
                  anchor::hopf_duality, n);
        out.result = ordered_json{{"kind", "ind_hopf_tower"},
                                  {"levels", hopf_tower_levels_json(
                                                 d.depth(), [&](int n) -> const FDHopf& {
                                                     return d.level(n);
                                                 })},
                                  {"certificate", cert.statement}};
        return out;
    }
    if (const auto* h = std::get_if<FDHopf>(&doc.subject)) {
        FDHopf d = dual_hopf(*h);
        r.subject = "dual of " + h->name();
        r.add("dual.dim-preserved", d.dim() == h->dim(), anchor::hopf_duality);
        r.add("dual.axioms", passes_hopf_axioms(d), anchor::hopf_duality);
        out.result = ordered_json{{"name", d.name()}, {"dim", d.dim()}};
        return out;
    }
    throw ValidationError("'dual' needs a group, tower, or hopf subject");
}

CommandOutput run_reflexivity(const SpecDocument& doc) {
    CommandOutput out;
    if (const auto* g = std::get_if<IndGroup>(&doc.subject)) {
        out.report = reflexivity_check_ind(*g);
        return out;
    }
    if (const auto* g = std::get_if<ProGroup>(&doc.subject)) {
        out.report = reflexivity_check_pro(*g);
        return out;
    }
    if (const auto* h = std::get_if<IndHopf>(&doc.subject)) {
        out.report = reflexivity_check(*h);
        return out;
    }
    if (const auto* h = std::get_if<ProHopf>(&doc.subject)) {
        out.report = reflexivity_check(*h);
        return out;
    }
    throw ValidationError("'reflexivity' needs a tower subject (group tower or hopf tower)");
}

CommandOutput run_hopf_axioms(const SpecDocument& doc) {
    CommandOutput out;
    if (const auto* h = std::get_if<FDHopf>(&doc.subject)) {
        out.report = check_hopf_axioms(*h);
        return out;
    }
    if (const auto* h = std::get_if<IndHopf>(&doc.subject)) {
        out.report.subject = h->describe();
        for (int n = 1; n <= h->depth(); ++n)
            out.report.merge(check_hopf_axioms(h->level(n)), n);
        return out;
    }
    if (const auto* h = std::get_if<ProHopf>(&doc.subject)) {
        out.report.subject = h->describe();
        for (int n = 1; n <= h->depth(); ++n)
            out.report.merge(check_hopf_axioms(h->level(n)), n);
        return out;
    }
    throw ValidationError("'hopf-axioms' needs a hopf algebra or hopf tower subject");
}

CommandOutput run_decompose(const SpecDocument& doc) {
    const auto* f = std::get_if<LocallyConstantFunction>(&doc.subject);
    if (!f) throw ValidationError("'decompose' needs a locally constant function subject");
    CommandOutput out;
    Report& r = out.report;
    r.subject = "character decomposition, " + f->tower().describe() + ", level " +
                std::to_string(f->level());

    std::vector<Cyclotomic> coeffs = decompose_characters(*f);
    LocallyConstantFunction rebuilt =
        reconstruct_from_characters(f->tower(), f->level(), coeffs);
    r.add("decomposition.reconstructs-exactly", rebuilt.table() == f->table(),
          anchor::character_decomposition);
    r.add("function.minimal-level", true, anchor::holomorphic_locally_constant, minimal_level(*f));

    const FiniteAbelianGroup& g = f->tower().level(f->level());
    ordered_json table = ordered_json::array();
    for (Int c = 0; c < g.order(); ++c) {
        if (coeffs[size_t(c)].is_zero()) continue;
        ordered_json coords = ordered_json::array();
        for (Int x : g.element_at(c).coords) coords.push_back(x);
        table.push_back(ordered_json{{"character", coords}, {"value", cyclotomic_json(coeffs[size_t(c)])}});
    }
    out.result = ordered_json{{"coefficients", table}, {"minimal_level", minimal_level(*f)}};
    return out;
}

CommandOutput run_spectrum(const SpecDocument& doc) {
    CommandOutput out;
    SpectrumResult s = [&] {
        if (const auto* g = std::get_if<FiniteAbelianGroup>(&doc.subject))
            return spectrum_abelian_group_algebra(*g);
        if (const auto* g = std::get_if<FiniteGroup>(&doc.subject))
            return spectrum_abelian_group_algebra(*g);
        throw ValidationError("'spectrum' needs a finite group subject");
    }();
    out.report = s.verification;
    ordered_json chars = ordered_json::array();
    for (size_t c = 0; c < s.characters.size(); ++c) {
        ordered_json values = ordered_json::array();
        for (const Cyclotomic& v : s.characters[c]) values.push_back(cyclotomic_json(v));
        chars.push_back(ordered_json{{"index", int(c)}, {"values", values}});
    }
    out.result = ordered_json{{"characters", chars}};
    return out;
}

// The spectrum battery is cubic in the order with cyclotomic multiplication
// in the exponent conductor; keep the `report` command interactive.
bool spectrum_battery_feasible(const FiniteAbelianGroup& g) {
    return g.order() <= 128 && euler_phi(g.exponent()) <= 16;
}

// Seeded random locally constant functions with small rational values.
LocallyConstantFunction random_function(const ProGroup& tower, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> level_pick(1, tower.depth());
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    int level = level_pick(rng);
    std::vector<Cyclotomic> table;
    for (Int i = 0; i < tower.level(level).order(); ++i)
        table.push_back(Cyclotomic::from_rational(frac(num(rng), den(rng))));
    return LocallyConstantFunction(tower, level, std::move(table));
}

CommandOutput run_report(const SpecDocument& doc, uint64_t seed) {
    CommandOutput out;
    Report& r = out.report;
    if (const auto* g = std::get_if<FiniteAbelianGroup>(&doc.subject)) {
        r.subject = g->describe();
        r.add("group.invariant-factors-valid", true, anchor::structure_invariant);
        r.add("dual.same-order", dual_group(*g).group.order() == g->order(),
              anchor::duality_locally_finite);
        if (g->order() <= 1024) {
            bool nondegenerate = true;
            for (Int i = 1; i < g->order() && nondegenerate; ++i) {
                bool hit = false;
                for (Int c = 0; c < g->order() && !hit; ++c)
                    hit = !pair(*g, g->element_at(i), g->element_at(c)).is_zero();
                nondegenerate = hit;
            }
            r.add("pairing.nondegenerate", nondegenerate, anchor::duality_locally_finite);
        }
        if (spectrum_battery_feasible(*g)) r.merge(spectrum_abelian_group_algebra(*g).verification);
        return out;
    }
    if (const auto* g = std::get_if<FiniteGroup>(&doc.subject)) {
        r.subject = g->name();
        r.add("group.table-axioms", true, anchor::structure_invariant); // validated at parse
        r.merge(check_hopf_axioms(group_algebra_hopf(*g)));
        r.merge(check_hopf_axioms(function_algebra_hopf(*g)));
        r.add("hopf.group-function-duality", is_hopf_isomorphism(group_function_duality_iso(*g)),
              anchor::hopf_duality);
        return out;
    }
    if (const auto* g = std::get_if<IndGroup>(&doc.subject)) {
        r = reflexivity_check_ind(*g);
        bool small = true;
        for (int n = 1; n <= g->depth(); ++n) small = small && spectrum_battery_feasible(g->level(n));
        if (small) r.merge(abelian_spectrum_consistency(*g));
        return out;
    }
    if (const auto* g = std::get_if<ProGroup>(&doc.subject)) {
        r = reflexivity_check_pro(*g);
        std::mt19937_64 rng(seed);
        bool all_exact = true;
        for (int trial = 0; trial < 20 && all_exact; ++trial) {
            LocallyConstantFunction f = random_function(*g, rng);
            auto coeffs = decompose_characters(f);
            all_exact = reconstruct_from_characters(f.tower(), f.level(), coeffs).table() == f.table();
        }
        r.add("decomposition.random-roundtrip", all_exact, anchor::character_decomposition);
        return out;
    }
    if (std::holds_alternative<IndHopf>(doc.subject) || std::holds_alternative<ProHopf>(doc.subject))
        return run_reflexivity(doc);
    if (const auto* h = std::get_if<FDHopf>(&doc.subject)) {
        r = check_hopf_axioms(*h);
        if (r.passed())
            r.add("double-dual.canonical-iso", is_hopf_isomorphism(double_dual_canonical(*h)),
                  anchor::hopf_duality);
        return out;
    }
    if (std::holds_alternative<LocallyConstantFunction>(doc.subject)) return run_decompose(doc);
    throw ValidationError("unsupported subject for 'report'");
}

} // namespace

CliResult cli_run(const std::vector<std::string>& args) {
    CLI::App app{"exact duality and reflexivity checks for towers of finite groups "
                 "and finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    std::string input_path;
    std::string out_path;
    std::string format;
    uint64_t seed = 0;
    int depth = 0;

    std::vector<CLI::App*> subs;
    for (const char* name : {"dual", "reflexivity", "hopf-axioms", "decompose", "spectrum", "report"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", input_path, "input document (JSON)")->required();
        sub->add_option("--depth", depth, "truncation depth override");
        sub->add_option("--format", format, "output format: json or text");
        sub->add_option("--seed", seed, "seed for randomized property suites");
        sub->add_option("--out", out_path, "write the report to a file instead of stdout");
        subs.push_back(sub);
    }

    CliResult result;
    std::vector<const char*> argv;
    argv.push_back("holodual");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        if (e.get_exit_code() == 0) {
            // --help and friends
            result.out = app.help();
            result.exit_code = 0;
            return result;
        }
        os << "argument error: " << e.what() << "\n";
        result.err = os.str();
        result.exit_code = 2;
        return result;
    }

    std::string command;
    for (size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed()) command = subs[i]->get_name();

    if (format.empty()) {
        const char* env = std::getenv("HOLODUAL_FORMAT");
        format = env ? env : "json";
    }
    if (format != "json" && format != "text") {
        result.err = "unknown format '" + format + "' (use json or text)\n";
        result.exit_code = 2;
        return result;
    }

    try {
        std::ifstream in(input_path);
        if (!in) throw ParseError("cannot open input file '" + input_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        std::optional<int> depth_override;
        if (depth > 0) depth_override = depth;
        SpecDocument doc = parse_document(buf.str(), depth_override);

        CommandOutput cmd;
        if (command == "dual")
            cmd = run_dual(doc);
        else if (command == "reflexivity")
            cmd = run_reflexivity(doc);
        else if (command == "hopf-axioms")
            cmd = run_hopf_axioms(doc);
        else if (command == "decompose")
            cmd = run_decompose(doc);
        else if (command == "spectrum")
            cmd = run_spectrum(doc);
        else
            cmd = run_report(doc, seed);

        std::string rendered;
        if (format == "json") {
            ordered_json j;
            j["schema"] = "holodual.report/1";
            j["command"] = command;
            j["seed"] = seed;
            if (depth_override)
                j["depth"] = *depth_override;
            else
                j["depth"] = nullptr;
            ordered_json rep = report_json(cmd.report);
            for (auto& [k, v] : rep.items()) j[k] = v;
            if (!cmd.result.is_null()) j["result"] = cmd.result;
            rendered = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "command: " << command << "\n" << report_text(cmd.report);
            rendered = os.str();
        }

        if (!out_path.empty()) {
            std::ofstream of(out_path);
            if (!of) throw ValidationError("cannot open output file '" + out_path + "'");
            of << rendered;
        } else {
            result.out = rendered;
        }
        result.exit_code = cmd.report.passed() ? 0 : 1;
        return result;
    } catch (const Error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    }
}

} // namespace holodual
