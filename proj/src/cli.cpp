#include "qtoric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qtoric/charpair.hpp"
#include "qtoric/cohomology.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/index.hpp"
#include "qtoric/io.hpp"
#include "qtoric/symmetry.hpp"

namespace qtoric {

namespace {

struct Globals {
    std::size_t q_order = 4;
    std::uint64_t seed = LocalizationOptions{}.seed;
    std::string format = "json";
    unsigned threads = 1;
};

struct Context {
    Globals g;
    std::istream& in;
    std::ostream& out;

    IndexOptions index_options() const {
        IndexOptions o;
        o.q_order = g.q_order;
        o.threads = g.threads;
        return o;
    }
    LocalizationOptions localization() const {
        LocalizationOptions o;
        o.seed = g.seed;
        return o;
    }
};

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (path.rfind("builtin:", 0) == 0) return pair_to_json(generate(path.substr(8))).dump();
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ManifoldDocument load_document(const std::string& path, std::istream& in) {
    try {
        return parse_manifold_text(read_source(path, in));
    } catch (const ValidationError& e) {
        throw ValidationError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

CharacteristicPair load_pair(const std::string& path, std::istream& in) {
    const auto doc = load_document(path, in);
    try {
        return to_pair(doc);
    } catch (const ValidationError& e) {
        throw ValidationError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

std::shared_ptr<const QuasitoricModel> load_model(const Context& ctx, const std::string& path) {
    return std::make_shared<QuasitoricModel>(load_pair(path, ctx.in), ctx.localization());
}

FacetColoring require_n_coloring(const SimplePolytope& p) {
    auto c = facet_chromatic(p, static_cast<int>(p.dim()));
    if (!c || c->color_count != static_cast<int>(p.dim())) {
        throw PreconditionError(p.name() + " has no facet coloring with n = " + std::to_string(p.dim()) + " colors");
    }
    return *c;
}

BundleSpec resolve_bundle(const std::string& text, const QuasitoricModel& model, const std::string& what) {
    if (text.empty()) return {};
    if (text == "tangent") return model.tangent_roots();
    if (text == "colored") return colored_bundle(model, require_n_coloring(model.pair().polytope()), {});
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(what + ": malformed JSON: " + e.what());
    }
    return parse_bundle(j, model.generator_count(), what);
}

std::vector<int> parse_signs(const std::string& text, std::size_t m) {
    std::vector<int> signs;
    for (char c : text) {
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else {
            throw ValidationError(std::string("--signs: unexpected character '") + c + "'");
        }
    }
    if (signs.size() != m) {
        throw ValidationError("--signs: " + std::to_string(signs.size()) + " entries, expected " + std::to_string(m));
    }
    return signs;
}

std::string signs_string(const std::vector<int>& signs) {
    std::string s;
    for (int x : signs) s += x > 0 ? '+' : '-';
    return s;
}

std::vector<std::size_t> parse_subset(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size()) throw ValidationError("--subset: bad facet index \"" + item + "\"");
        out.push_back(v);
    }
    return out;
}

FacetColoring parse_coloring(const std::string& text, std::size_t m) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("--coloring: malformed JSON: ") + e.what());
    }
    if (!j.is_array() || j.size() != m) throw ValidationError("--coloring: expected " + std::to_string(m) + " colors");
    FacetColoring c;
    for (std::size_t i = 0; i < m; ++i) {
        if (!j[i].is_number_integer() || j[i].get<int>() < 0) {
            throw ValidationError("--coloring[" + std::to_string(i) + "]: expected a color index >= 0");
        }
        c.colors.push_back(j[i].get<int>());
        c.color_count = std::max(c.color_count, c.colors.back() + 1);
    }
    return c;
}

Json admissibility_json(const AdmissibilityReport& a) {
    Json j;
    j["c1_matches"] = a.c1_matches;
    j["w_spin"] = a.w_spin;
    j["p1_balanced"] = a.p1_balanced;
    return j;
}

Json index_json(const Context& ctx, const IndexResult& r, const IndexModel& model) {
    Json j;
    j["model"] = r.model_name;
    j["dim"] = model.half_dimension();
    j["q_order"] = r.q_order;
    j["seed"] = ctx.g.seed;
    j["V"] = r.v;
    j["W"] = r.w;
    j["series"] = series_to_json(r.series);
    j["series_text"] = series_to_string(r.series);
    j["hypotheses_met"] = r.hypotheses_met();
    j["admissibility"] = admissibility_json(r.admissibility);
    Json flags = Json::array();
    if (!r.hypotheses_met()) flags.push_back("hypotheses unmet");
    if (r.is_zero()) flags.push_back("vanishes");
    if (r.is_constant()) flags.push_back("constant in q");
    j["flags"] = flags;
    j["warnings"] = r.warnings;
    return j;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    out << prefix << ": ";
    if (j.is_string()) {
        out << j.get<std::string>();
    } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out << ", ";
            out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        }
    } else {
        out << j.dump();
    }
    out << "\n";
}

void emit(const Context& ctx, const Json& j) {
    if (ctx.g.format == "text") {
        flatten(j, "", ctx.out);
    } else {
        ctx.out << j.dump(2) << "\n";
    }
}

// --- subcommands -----------------------------------------------------------

int cmd_validate(Context& ctx, const std::string& path) {
    const auto doc = load_document(path, ctx.in);
    ValidationReport report = validate_polytope(doc.polytope);
    if (report.ok() && doc.lambda) {
        const auto pair_report = validate_pair(SimplePolytope(doc.polytope), *doc.lambda, doc.signs);
        report.items.insert(report.items.end(), pair_report.items.begin(), pair_report.items.end());
    }
    Json j;
    j["name"] = doc.polytope.name;
    j["ok"] = report.ok();
    j["summary"] = report.summary();
    Json checks = Json::array();
    for (const auto& item : report.items) {
        Json c;
        c["check"] = item.check;
        c["passed"] = item.passed;
        if (!item.detail.empty()) c["detail"] = item.detail;
        checks.push_back(c);
    }
    j["checks"] = checks;
    emit(ctx, j);
    return report.ok() ? kExitOk : kExitValidation;
}

int cmd_analyze(Context& ctx, const std::string& path) {
    const SimplePolytope p(load_document(path, ctx.in).polytope);
    const bool even = is_even(p);
    const bool bipartite = is_vertex_graph_bipartite(p);
    const auto coloring = facet_chromatic(p, static_cast<int>(p.facet_count()));
    const int chromatic = coloring->color_count;
    const bool n_colorable = chromatic == static_cast<int>(p.dim());
    Json j;
    j["name"] = p.name();
    j["dim"] = p.dim();
    j["facet_count"] = p.facet_count();
    j["vertex_count"] = p.vertex_count();
    j["h_vector"] = h_vector(p);
    j["even"] = even;
    j["vertex_graph_bipartite"] = bipartite;
    j["facet_chromatic_number"] = chromatic;
    j["coloring"] = coloring->colors;
    j["n_colorable"] = n_colorable;
    const bool consistent = even == bipartite && bipartite == n_colorable;
    j["evenness_consistent"] = consistent;
    emit(ctx, j);
    if (!consistent) throw InternalConsistencyError("evenness, bipartiteness and n-colorability disagree on " + p.name());
    return kExitOk;
}

int cmd_chi(Context& ctx, const std::string& path) {
    const SimplePolytope p(load_document(path, ctx.in).polytope);
    if (ctx.g.format == "text") {
        ctx.out << p.vertex_count() << "\n";
    } else {
        Json j;
        j["name"] = p.name();
        j["chi"] = p.vertex_count();
        emit(ctx, j);
    }
    return kExitOk;
}

int cmd_index(Context& ctx, const std::string& path, const std::string& v_text, const std::string& w_text,
              const std::string& c1c_text, bool cross_check) {
    const auto model = load_model(ctx, path);
    const BundleSpec v = resolve_bundle(v_text, *model, "--V");
    const BundleSpec w = resolve_bundle(w_text, *model, "--W");
    IndexOptions o = ctx.index_options();
    if (!c1c_text.empty()) {
        const BundleSpec c = resolve_bundle("[" + c1c_text + "]", *model, "--c1c");
        o.c1c = c.front();
    }
    const IndexResult r = phi_c(*model, v, w, o);
    Json j = index_json(ctx, r, *model);
    if (cross_check) {
        const IndexResult alt = phi_c_exponential(*model, v, w, o);
        j["cross_check"] = alt.series == r.series;
        if (alt.series != r.series) {
            emit(ctx, j);
            throw InternalConsistencyError("the two integrand forms disagree: " + series_to_string(r.series) +
                                           " vs " + series_to_string(alt.series));
        }
    }
    emit(ctx, j);
    return kExitOk;
}

int cmd_genus(Context& ctx, const std::string& path, const std::string& kind) {
    const auto model = load_model(ctx, path);
    IndexResult r;
    if (kind == "witten") {
        r = witten_genus(*model, ctx.index_options());
    } else if (kind == "elliptic") {
        r = elliptic_genus(*model, ctx.index_options());
    } else {
        throw ValidationError("--kind: expected witten or elliptic");
    }
    Json j = index_json(ctx, r, *model);
    j["kind"] = kind;
    emit(ctx, j);
    return kExitOk;
}

Json colored_json(const Context& ctx, const ColoredIndex& ci, const QuasitoricModel& model,
                  const FacetColoring& coloring, const std::vector<int>& signs) {
    Json j = index_json(ctx, ci.index, model);
    j["coloring"] = coloring.colors;
    j["signs"] = signs_string(signs);
    j["euler_pairing"] = rational_to_json(ci.euler_pairing);
    j["matches_euler_pairing"] = ci.matches_euler_pairing;
    return j;
}

int cmd_color_index(Context& ctx, const std::string& path, const std::string& signs_text,
                    const std::string& coloring_text, bool search) {
    const auto model = load_model(ctx, path);
    const auto& p = model->pair().polytope();
    const FacetColoring coloring =
        coloring_text.empty() ? require_n_coloring(p) : parse_coloring(coloring_text, p.facet_count());
    Json j;
    ColoredIndex ci;
    if (search) {
        const auto s = exists_nonvanishing_signs(*model, coloring, ctx.index_options());
        j = colored_json(ctx, s.witness, *model, coloring, s.signs);
        j["candidates_tried"] = s.candidates_tried;
        ci = s.witness;
    } else {
        const auto signs =
            signs_text.empty() ? std::vector<int>(p.facet_count(), 1) : parse_signs(signs_text, p.facet_count());
        ci = colored_index(*model, coloring, signs, ctx.index_options());
        j = colored_json(ctx, ci, *model, coloring, signs);
    }
    emit(ctx, j);
    if (!ci.matches_euler_pairing) {
        throw InternalConsistencyError("colored index is not the constant <e(V),[M]> = " +
                                       to_fraction_string(ci.euler_pairing));
    }
    return kExitOk;
}

Json split_json(const Context& ctx, const SplitReport& rep, const QuasitoricModel& model) {
    Json j = index_json(ctx, rep.index, model);
    j["subset"] = rep.subset;
    j["vanishes"] = rep.vanishes;
    return j;
}

int cmd_verify(Context& ctx, const std::string& theorem, const std::string& path, const std::string& path2,
               const std::string& subset_text, bool all_splits, const std::string& v1, const std::string& w1,
               const std::string& v2, const std::string& w2, int orientation_sign) {
    const auto model = load_model(ctx, path);
    if (theorem == "split") {
        if (all_splits) {
            Json runs = Json::array();
            bool all_vanish = true;
            for (const auto& s : admissible_splits(*model)) {
                const auto rep = verify_exhaustive_split_vanishing(*model, s, ctx.index_options());
                all_vanish = all_vanish && rep.vanishes;
                runs.push_back(split_json(ctx, rep, *model));
            }
            Json j;
            j["theorem"] = "split";
            j["model"] = model->name();
            j["admissible_splits"] = runs.size();
            j["holds"] = all_vanish;
            j["runs"] = runs;
            emit(ctx, j);
            if (!all_vanish) throw InternalConsistencyError("an admissible split has a nonvanishing index");
            return kExitOk;
        }
        const auto rep = verify_exhaustive_split_vanishing(*model, parse_subset(subset_text), ctx.index_options());
        Json j = split_json(ctx, rep, *model);
        j["theorem"] = "split";
        j["holds"] = rep.hypotheses_met ? Json(rep.vanishes) : Json(nullptr);
        emit(ctx, j);
        if (!rep.hypotheses_met) return kExitHypothesisUnmet;
        if (!rep.vanishes) throw InternalConsistencyError("admissible split with nonvanishing index");
        return kExitOk;
    }
    if (path2.empty()) throw ValidationError("--manifold2 is required for --theorem " + theorem);
    const auto model2 = load_model(ctx, path2);
    const BundleSpec V1 = resolve_bundle(v1, *model, "--V");
    const BundleSpec W1 = resolve_bundle(w1, *model, "--W");
    const BundleSpec V2 = resolve_bundle(v2, *model2, "--V2");
    const BundleSpec W2 = resolve_bundle(w2, *model2, "--W2");
    if (theorem == "product") {
        const auto rep = verify_product_formula(model, V1, W1, model2, V2, W2, ctx.index_options());
        Json j;
        j["theorem"] = "product";
        j["left"] = index_json(ctx, rep.left, *model);
        j["right"] = index_json(ctx, rep.right, *model2);
        j["lhs"] = series_to_json(rep.product.series);
        j["rhs"] = series_to_json(rep.expected);
        j["holds"] = rep.holds;
        emit(ctx, j);
        if (!rep.holds) throw InternalConsistencyError("product formula fails");
        return kExitOk;
    }
    if (theorem == "connsum") {
        const auto rep =
            verify_connected_sum_formula(model, V1, W1, model2, V2, W2, orientation_sign, ctx.index_options());
        Json j;
        j["theorem"] = "connsum";
        j["orientation_sign"] = orientation_sign;
        j["formula"] = rep.formula;
        j["left"] = index_json(ctx, rep.left, *model);
        j["right"] = index_json(ctx, rep.right, *model2);
        j["lhs"] = series_to_json(rep.sum.series);
        j["rhs"] = series_to_json(rep.expected);
        j["summands_admissible"] = rep.summands_admissible;
        j["holds"] = rep.holds;
        emit(ctx, j);
        if (rep.holds) return kExitOk;
        if (!rep.summands_admissible) return kExitHypothesisUnmet;
        throw InternalConsistencyError("connected-sum formula fails on admissible summands");
    }
    throw ValidationError("--theorem: expected split, product or connsum");
}

Json group_json(const GroupRecord& g) {
    Json j;
    j["name"] = g.name;
    j["family"] = to_string(g.family);
    j["rank"] = g.rank;
    j["dim"] = g.dim;
    j["weyl_order"] = g.weyl_order.get_str();
    if (!g.aliases.empty()) j["aliases"] = g.aliases;
    return j;
}

int cmd_symmetry_report(Context& ctx, const std::string& path, bool assume_index) {
    const auto model = load_model(ctx, path);
    const auto& pair = model->pair();
    bool index_nonvanishing = assume_index;
    Json source;
    if (assume_index) {
        source["kind"] = "assumed";
    } else if (auto c = facet_chromatic(pair.polytope(), static_cast<int>(pair.dim()));
               c && c->color_count == static_cast<int>(pair.dim())) {
        const auto s = exists_nonvanishing_signs(*model, *c, ctx.index_options());
        index_nonvanishing = s.found;
        source["kind"] = "colored index";
        source["coloring"] = c->colors;
        source["signs"] = signs_string(s.signs);
        source["value"] = rational_to_json(s.witness.euler_pairing);
    } else {
        source["kind"] = "none";
    }
    const SymmetryReport r = symmetry_report(pair, index_nonvanishing);
    Json j;
    j["model"] = pair.name();
    j["n"] = r.n;
    j["chi"] = r.chi;
    j["index_nonvanishing"] = r.index_nonvanishing;
    j["index_source"] = source;
    j["N_max"] = r.n_max ? Json(*r.n_max) : Json(nullptr);
    Json rules = Json::array();
    for (const auto& rule : r.rules) {
        Json x;
        x["rule"] = rule.id;
        x["statement"] = rule.statement;
        x["fired"] = rule.fired;
        if (rule.ceiling) x["ceiling"] = *rule.ceiling;
        x["note"] = rule.note;
        rules.push_back(x);
    }
    j["rules"] = rules;
    Json simple = Json::array();
    for (const auto& g : r.simple_candidates) simple.push_back(group_json(g));
    j["simple_candidates"] = simple;
    Json ss = Json::array();
    for (const auto& c : r.semisimple) {
        Json x;
        x["name"] = c.name();
        x["rank"] = c.rank;
        x["dim"] = c.dim;
        x["weyl_order"] = c.weyl_order.get_str();
        ss.push_back(x);
    }
    j["semisimple_candidates"] = ss;
    j["semisimple_note"] = r.semisimple_note;
    emit(ctx, j);
    return kExitOk;
}

int cmd_alpha(Context& ctx, int max_rank) {
    if (max_rank < 1) throw ValidationError("--max-rank must be >= 1");
    Json rows = Json::array();
    for (int l = 1; l <= max_rank; ++l) {
        const auto a = alpha(l);
        Json row;
        row["l"] = l;
        row["alpha"] = rational_to_json(a.value);
        Json w = Json::array();
        for (const auto& g : a.witnesses) w.push_back(g.name);
        row["witnesses"] = w;
        rows.push_back(row);
    }
    if (ctx.g.format == "text") {
        for (const auto& row : rows) {
            std::string names;
            for (const auto& w : row["witnesses"]) names += (names.empty() ? "" : ", ") + w.get<std::string>();
            ctx.out << row["l"].get<int>() << "\t" << alpha(row["l"].get<int>()).value.get_str() << "\t"
                    << (names.empty() ? "none" : names) << "\n";
        }
    } else {
        Json j;
        j["alpha"] = rows;
        emit(ctx, j);
    }
    return kExitOk;
}

int cmd_generate(Context& ctx, const std::string& spec) {
    ctx.out << pair_to_json(generate(spec)).dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twisted Dirac indices and symmetry bounds for quasitoric manifolds", "qtoric"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{{}, in, out};
    app.add_option("--q-order", ctx.g.q_order, "truncation order in q")->capture_default_str();
    app.add_option("--seed", ctx.g.seed, "seed for the localization points")->capture_default_str();
    app.add_option("--format", ctx.g.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--threads", ctx.g.threads, "worker threads")->capture_default_str();

    std::string manifold = "-", manifold2, v1, w1, v2, w2, c1c, kind, signs, coloring, theorem, subset, spec;
    int orientation_sign = 1, max_rank = 20;
    bool cross_check = false, search = false, all_splits = false, assume_index = false;

    auto add_manifold = [&](CLI::App* sub) {
        sub->add_option("--manifold,-m", manifold, "manifold JSON path, '-' for stdin, or builtin:<family>")
            ->capture_default_str();
    };

    auto* validate = app.add_subcommand("validate", "check a polytope or characteristic pair");
    add_manifold(validate);
    auto* analyze = app.add_subcommand("analyze", "evenness, bipartiteness and facet coloring");
    add_manifold(analyze);
    auto* chi = app.add_subcommand("chi", "Euler characteristic");
    add_manifold(chi);
    auto* index = app.add_subcommand("index", "twisted index phi^c(M; V, W)");
    add_manifold(index);
    index->add_option("--V", v1, "V: JSON list of classes, 'colored' or 'tangent'");
    index->add_option("--W", w1, "W: JSON list of classes, 'colored' or 'tangent'");
    index->add_option("--c1c", c1c, "Spin^c class used when V is empty (JSON vector)");
    index->add_flag("--cross-check", cross_check, "also evaluate the exponential form and compare");
    auto* genus = app.add_subcommand("genus", "Witten or elliptic genus");
    add_manifold(genus);
    genus->add_option("--kind", kind, "witten or elliptic")->required()->check(CLI::IsMember({"witten", "elliptic"}));
    auto* color = app.add_subcommand("color-index", "index of the bundle defined by an n-coloring");
    add_manifold(color);
    color->add_option("--signs", signs, "sign per facet, e.g. ++-+");
    color->add_option("--coloring", coloring, "JSON list of facet colors (default: computed)");
    color->add_flag("--search-signs", search, "search for signs with nonvanishing index");
    auto* verify = app.add_subcommand("verify", "check a vanishing or gluing formula");
    add_manifold(verify);
    verify->add_option("--theorem", theorem, "split, product or connsum")
        ->required()
        ->check(CLI::IsMember({"split", "product", "connsum"}));
    verify->add_option("--manifold2", manifold2, "second manifold for product and connsum");
    verify->add_option("--subset", subset, "facet indices carried by V (0-based, comma separated)");
    verify->add_flag("--all", all_splits, "sweep every admissible split");
    verify->add_option("--V", v1, "V on the first manifold");
    verify->add_option("--W", w1, "W on the first manifold");
    verify->add_option("--V2", v2, "V on the second manifold");
    verify->add_option("--W2", w2, "W on the second manifold");
    verify->add_option("--orientation-sign", orientation_sign, "orientation of the second summand")
        ->check(CLI::IsMember({1, -1}))
        ->capture_default_str();
    auto* report = app.add_subcommand("symmetry-report", "degree-of-symmetry bounds");
    add_manifold(report);
    report->add_flag("--assume-index-nonzero", assume_index, "treat the twisted index as nonvanishing");
    auto* alpha_cmd = app.add_subcommand("alpha", "max dim/rank of simple groups by rank");
    alpha_cmd->add_option("--max-rank", max_rank, "largest rank")->capture_default_str();
    auto* gen = app.add_subcommand("generate", "emit a built-in characteristic pair");
    gen->add_option("spec", spec, "cube:n, simplex:n, polygon:k, prism:k, hirzebruch:k, joined by '*'")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (validate->parsed()) return cmd_validate(ctx, manifold);
        if (analyze->parsed()) return cmd_analyze(ctx, manifold);
        if (chi->parsed()) return cmd_chi(ctx, manifold);
        if (index->parsed()) return cmd_index(ctx, manifold, v1, w1, c1c, cross_check);
        if (genus->parsed()) return cmd_genus(ctx, manifold, kind);
        if (color->parsed()) return cmd_color_index(ctx, manifold, signs, coloring, search);
        if (verify->parsed()) {
            return cmd_verify(ctx, theorem, manifold, manifold2, subset, all_splits, v1, w1, v2, w2,
                              orientation_sign);
        }
        if (report->parsed()) return cmd_symmetry_report(ctx, manifold, assume_index);
        if (alpha_cmd->parsed()) return cmd_alpha(ctx, max_rank);
        if (gen->parsed()) return cmd_generate(ctx, spec);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const PreconditionError& e) {
        err << "hypotheses unmet: " << e.what() << "\n";
        return kExitHypothesisUnmet;
    } catch (const InternalConsistencyError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const OracleUnavailable& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace qtoric
