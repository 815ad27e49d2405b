#include "texsys/cli.hpp"

#include "texsys/cohomology.hpp"
#include "texsys/homology.hpp"
#include "texsys/presentation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace texsys::cli {

using json = nlohmann::ordered_json;

namespace {

// ---- parsing ---------------------------------------------------------------

[[noreturn]] void schema_fail(const std::string& where, const std::string& what)
{
    throw error(errc::schema_error, where + ": " + what);
}

const json& require(const json& j, const char* field, const std::string& where)
{
    auto it = j.find(field);
    if (it == j.end())
        schema_fail(where, "missing field \"" + std::string(field) + "\"");
    return *it;
}

std::string require_string(const json& j, const char* field, const std::string& where)
{
    const json& v = require(j, field, where);
    if (!v.is_string())
        schema_fail(where + "." + field, "expected a string");
    return v.get<std::string>();
}

std::pair<std::vector<std::string>, std::vector<Edge>> parse_graph_payload(
    const json& j, const std::string& where)
{
    const json& jv = require(j, "vertices", where);
    if (!jv.is_array())
        schema_fail(where + ".vertices", "expected an array of strings");
    std::vector<std::string> vertices;
    for (const json& v : jv) {
        if (!v.is_string())
            schema_fail(where + ".vertices", "expected an array of strings");
        vertices.push_back(v.get<std::string>());
    }

    const json& je = require(j, "edges", where);
    if (!je.is_array())
        schema_fail(where + ".edges", "expected an array of edge objects");
    std::vector<Edge> edges;
    std::size_t i = 0;
    for (const json& e : je) {
        std::string at = where + ".edges[" + std::to_string(i++) + "]";
        if (!e.is_object())
            schema_fail(at, "expected an edge object");
        edges.push_back(Edge{require_string(e, "name", at), require_string(e, "range", at),
                             require_string(e, "source", at)});
    }
    return {std::move(vertices), std::move(edges)};
}

DirectedGraph parse_directed(const json& j, const std::string& where)
{
    auto [vertices, edges] = parse_graph_payload(j, where);
    return validate_graph(std::move(vertices), std::move(edges));
}

ColouredDocument parse_coloured_doc(const json& j)
{
    DirectedGraph g = parse_directed(j, "coloured_graph");

    const json& jk = require(j, "k", "coloured_graph");
    if (!jk.is_number_unsigned())
        schema_fail("coloured_graph.k", "expected a positive integer");
    std::size_t k = jk.get<std::size_t>();

    const json& jc = require(j, "colours", "coloured_graph");
    if (!jc.is_object())
        schema_fail("coloured_graph.colours", "expected an object edge -> colour");
    std::map<std::string, std::size_t> colours;
    for (auto it = jc.begin(); it != jc.end(); ++it) {
        if (!it.value().is_number_unsigned())
            schema_fail("coloured_graph.colours." + it.key(), "expected a positive integer");
        colours[it.key()] = it.value().get<std::size_t>();
    }

    ColouredDocument doc;
    doc.graph = validate_coloured(std::move(g), k, colours);

    const json& js = require(j, "squares", "coloured_graph");
    if (js.is_string()) {
        if (js.get<std::string>() != "deduce")
            schema_fail("coloured_graph.squares", "expected \"deduce\" or an array");
        doc.deduce = true;
    } else if (js.is_array()) {
        std::vector<Square> squares;
        std::size_t i = 0;
        for (const json& s : js) {
            std::string at = "coloured_graph.squares[" + std::to_string(i++) + "]";
            if (!s.is_object())
                schema_fail(at, "expected a square object");
            Square sq;
            sq.i = s.contains("i") ? s.at("i").get<std::size_t>() : 1;
            sq.j = s.contains("j") ? s.at("j").get<std::size_t>() : 2;
            sq.f = require_string(s, "f", at);
            sq.g = require_string(s, "g", at);
            sq.gp = require_string(s, "gp", at);
            sq.fp = require_string(s, "fp", at);
            squares.push_back(std::move(sq));
        }
        doc.squares = validate_squares(doc.graph, std::move(squares));
    } else {
        schema_fail("coloured_graph.squares", "expected \"deduce\" or an array");
    }
    return doc;
}

std::map<std::string, std::string> parse_string_map(const json& j, const std::string& where)
{
    if (!j.is_object())
        schema_fail(where, "expected an object of strings");
    std::map<std::string, std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string())
            schema_fail(where + "." + it.key(), "expected a string");
        out[it.key()] = it.value().get<std::string>();
    }
    return out;
}

TextileSystem parse_textile_doc(const json& j)
{
    DirectedGraph e = parse_directed(require(j, "E", "textile"), "textile.E");
    DirectedGraph f = parse_directed(require(j, "F", "textile"), "textile.F");

    const json& jp = require(j, "p", "textile");
    const json& jq = require(j, "q", "textile");
    auto pv = parse_string_map(require(jp, "vertices", "textile.p"), "textile.p.vertices");
    auto pe = parse_string_map(require(jp, "edges", "textile.p"), "textile.p.edges");
    auto qv = parse_string_map(require(jq, "vertices", "textile.q"), "textile.q.vertices");
    auto qe = parse_string_map(require(jq, "edges", "textile.q"), "textile.q.edges");

    return validate_textile(std::move(e), std::move(f), pv, pe, qv, qe);
}

// ---- serialisation ---------------------------------------------------------

json graph_payload(const DirectedGraph& g)
{
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back(json{{"name", e.name}, {"range", e.range}, {"source", e.source}});
    j["edges"] = std::move(edges);
    return j;
}

json morphism_payload(const DirectedGraph& src, const DirectedGraph& dst,
                      const GraphMorphism& m)
{
    json vertices = json::object();
    for (std::size_t v = 0; v < src.vertex_count(); ++v)
        vertices[src.vertices()[v]] = dst.vertices()[m.vertex_image(v)];
    json edges = json::object();
    for (std::size_t e = 0; e < src.edge_count(); ++e)
        edges[src.edges()[e].name] = dst.edges()[m.edge_image(e)].name;
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

} // namespace

Document parse_document(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(errc::syntax_error, e.what());
    }
    if (!j.is_object())
        schema_fail("document", "expected a JSON object");

    std::string kind = require_string(j, "kind", "document");
    Document doc;
    if (kind == "directed_graph") {
        doc.kind = DocumentKind::directed_graph;
        doc.graph = parse_directed(j, "directed_graph");
    } else if (kind == "coloured_graph") {
        doc.kind = DocumentKind::coloured_graph;
        doc.coloured = parse_coloured_doc(j);
    } else if (kind == "textile") {
        doc.kind = DocumentKind::textile;
        doc.textile = parse_textile_doc(j);
    } else {
        schema_fail("document.kind", "unknown kind \"" + kind + "\"");
    }
    return doc;
}

std::string serialize_document(const Document& doc)
{
    json j;
    switch (doc.kind) {
        case DocumentKind::directed_graph: {
            j["kind"] = "directed_graph";
            json payload = graph_payload(*doc.graph);
            j.update(payload);
            break;
        }
        case DocumentKind::coloured_graph: {
            const ColouredDocument& cd = *doc.coloured;
            j["kind"] = "coloured_graph";
            j.update(graph_payload(cd.graph.graph()));
            j["k"] = cd.graph.colour_count();
            json colours = json::object();
            for (std::size_t e = 0; e < cd.graph.graph().edge_count(); ++e)
                colours[cd.graph.graph().edges()[e].name] = cd.graph.colour_of(e);
            j["colours"] = std::move(colours);
            if (cd.deduce) {
                j["squares"] = "deduce";
            } else {
                json squares = json::array();
                for (const Square& s : cd.squares.squares())
                    squares.push_back(json{{"i", s.i},
                                           {"j", s.j},
                                           {"f", s.f},
                                           {"g", s.g},
                                           {"gp", s.gp},
                                           {"fp", s.fp}});
                j["squares"] = std::move(squares);
            }
            break;
        }
        case DocumentKind::textile: {
            const TextileSystem& t = *doc.textile;
            j["kind"] = "textile";
            j["E"] = graph_payload(t.E());
            j["F"] = graph_payload(t.F());
            j["p"] = morphism_payload(t.F(), t.E(), t.p());
            j["q"] = morphism_payload(t.F(), t.E(), t.q());
            break;
        }
    }
    return j.dump(2) + "\n";
}

SquareSet resolve_squares(const ColouredDocument& doc)
{
    return doc.deduce ? deduce_squares(doc.graph) : doc.squares;
}

namespace {

// ---- reports ---------------------------------------------------------------

json int_to_json(const Int& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(x));
    return json(x.str());
}

json invariants_json(const AbelianInvariants& a)
{
    json torsion = json::array();
    for (const Int& d : a.torsion) torsion.push_back(int_to_json(d));
    return json{{"rank", a.free_rank}, {"torsion", std::move(torsion)}};
}

json lifting_case_json(const LiftingCase& c)
{
    json violations = json::array();
    for (const LiftingViolation& v : c.violations)
        violations.push_back(json{{"edge", v.edge}, {"vertex", v.vertex}, {"count", v.count}});
    return json{{"has_lifting", c.has_lifting},
                {"unique", c.unique},
                {"violations", std::move(violations)}};
}

std::string document_kind_name(DocumentKind k)
{
    switch (k) {
        case DocumentKind::directed_graph: return "directed_graph";
        case DocumentKind::coloured_graph: return "coloured_graph";
        case DocumentKind::textile: return "textile";
    }
    return "?";
}

Document load_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error(errc::usage_error, "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_document(text.str());
}

int exit_code_for(errc code)
{
    switch (code) {
        case errc::search_limit_exceeded:
        case errc::enumeration_limit_exceeded:
        case errc::too_large:
        case errc::budget_exceeded:
            return 2;
        case errc::usage_error:
        case errc::parse_error:
        case errc::zero_modulus:
        case errc::unsupported_coefficients:
            return 3;
        default:
            return 1;
    }
}

// spanning tree selection shared by the pi1 path
SpanningTree pick_tree(const DirectedGraph& g, const std::string& base,
                       const std::string& mode)
{
    if (mode == "bfs")
        return spanning_tree(g, base);
    if (mode == "random") {
        std::vector<std::size_t> order(g.edge_count());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::mt19937 rng(12345); // fixed seed: identical input, identical output
        std::shuffle(order.begin(), order.end(), rng);
        return spanning_tree(g, base, order);
    }
    throw error(errc::usage_error, "--tree must be bfs or random");
}

struct Pi1Input {
    ColouredGraph cg;
    SquareSet squares;
};

// every document kind presents through a coloured graph; plain digraphs are
// 1-coloured with no squares
Pi1Input coloured_view(const Document& doc)
{
    switch (doc.kind) {
        case DocumentKind::directed_graph: {
            std::map<std::string, std::size_t> colours;
            for (const Edge& e : doc.graph->edges()) colours[e.name] = 1;
            return {validate_coloured(*doc.graph, 1, colours), {}};
        }
        case DocumentKind::coloured_graph:
            return {doc.coloured->graph, resolve_squares(*doc.coloured)};
        case DocumentKind::textile: {
            auto [cg, squares] = to_coloured(*doc.textile);
            return {std::move(cg), std::move(squares)};
        }
    }
    throw error(errc::usage_error, "unsupported document kind");
}

ChainComplex complex_of(const Document& doc)
{
    switch (doc.kind) {
        case DocumentKind::directed_graph:
            return chain_complex_graph(*doc.graph);
        case DocumentKind::coloured_graph:
            return chain_complex_2graph(doc.coloured->graph, resolve_squares(*doc.coloured));
        case DocumentKind::textile:
            return chain_complex_textile(*doc.textile);
    }
    throw error(errc::usage_error, "unsupported document kind");
}

TextileSystem textile_of(const Document& doc)
{
    switch (doc.kind) {
        case DocumentKind::textile:
            return *doc.textile;
        case DocumentKind::coloured_graph:
            return from_2graph(doc.coloured->graph, resolve_squares(*doc.coloured));
        default:
            throw error(errc::usage_error, "this command needs a textile or coloured_graph");
    }
}

json run_validate(const Document& doc)
{
    json report{{"command", "validate"}, {"kind", document_kind_name(doc.kind)}, {"ok", true}};
    if (doc.kind == DocumentKind::coloured_graph) {
        SquareSet squares = resolve_squares(*doc.coloured);
        report["squares"] = squares.size();
        CompletenessReport completeness = check_complete(doc.coloured->graph, squares);
        report["complete"] = completeness.complete;
        if (completeness.pairwise_only)
            report["warning"] = "k >= 3: only pairwise completeness was checked";
    }
    return report;
}

json run_lift(const Document& doc)
{
    if (doc.kind != DocumentKind::textile)
        throw error(errc::usage_error, "lift needs a textile document");
    LiftingReport report = lifting(*doc.textile);
    Admits2Graph admits = admits_2graph(*doc.textile);
    return json{{"command", "lift"},
                {"p_r", lifting_case_json(report.p_r)},
                {"p_s", lifting_case_json(report.p_s)},
                {"q_r", lifting_case_json(report.q_r)},
                {"q_s", lifting_case_json(report.q_s)},
                {"admits_2graph", admits.admits},
                {"reason", admits.reason}};
}

json run_convert(const Document& doc)
{
    Document converted;
    if (doc.kind == DocumentKind::textile) {
        auto [cg, squares] = to_coloured(*doc.textile);
        converted.kind = DocumentKind::coloured_graph;
        converted.coloured = ColouredDocument{std::move(cg), false, std::move(squares)};
    } else if (doc.kind == DocumentKind::coloured_graph) {
        converted.kind = DocumentKind::textile;
        converted.textile = from_2graph(doc.coloured->graph, resolve_squares(*doc.coloured));
    } else {
        throw error(errc::usage_error, "convert needs a textile or coloured_graph");
    }
    return json::parse(serialize_document(converted));
}

json run_properties(const Document& doc)
{
    TextileSystem t = textile_of(doc);
    PropertyReport p = properties(t);
    json report{{"command", "properties"},
                {"blue", json{{"sources", p.blue_sources}, {"sinks", p.blue_sinks}}},
                {"red", json{{"sources", p.red_sources}, {"sinks", p.red_sinks}}},
                {"essential", p.essential},
                {"row_finite", p.row_finite},
                {"admits_2graph", p.admits}};
    report["locally_convex"] = p.locally_convex ? json(*p.locally_convex) : json(nullptr);
    report["finitely_aligned"] = p.finitely_aligned ? json(*p.finitely_aligned) : json(nullptr);
    json mce = json::array();
    for (const auto& [blue, red, count] : p.mce_table)
        mce.push_back(json{{"blue", blue}, {"red", red}, {"count", count}});
    report["mce"] = std::move(mce);
    return report;
}

json run_pi1(const Document& doc, const std::string& base, const std::string& tree_mode,
             std::size_t budget)
{
    Pi1Input input = coloured_view(doc);
    const DirectedGraph& g = input.cg.graph();
    std::string root = base.empty() ? g.vertices().front() : base;
    SpanningTree tree = pick_tree(g, root, tree_mode);

    GroupPresentation p = pi1(input.cg, input.squares, tree);
    TietzeOptions options;
    if (budget != 0) options.max_moves = budget;
    RecognizedGroup recognized = recognize(p, options);

    json relators = json::array();
    for (const Word& w : p.relators) relators.push_back(word_to_string(p, w));
    json simplified_relators = json::array();
    for (const Word& w : recognized.simplified.relators)
        simplified_relators.push_back(word_to_string(recognized.simplified, w));

    return json{{"command", "pi1"},
                {"base", root},
                {"generators", p.generators},
                {"relators", std::move(relators)},
                {"simplified",
                 json{{"generators", recognized.simplified.generators},
                      {"relators", std::move(simplified_relators)},
                      {"complete", recognized.simplification_complete}}},
                {"group", to_string(recognized)},
                {"abelianization", invariants_json(recognized.abelianization)}};
}

json run_homology(const Document& doc)
{
    HomologyResult h = homology(complex_of(doc));
    return json{{"command", "homology"},
                {"H0", invariants_json(h.h0)},
                {"H1", invariants_json(h.h1)},
                {"H2", invariants_json(h.h2)}};
}

json run_cohomology(const Document& doc, const std::string& coefficients, int degree,
                    bool representatives)
{
    CoefficientGroup a = parse_coefficients(coefficients);
    ChainComplex cx = complex_of(doc);
    CohomologyResult h = cohomology(cx, a);

    json report{{"command", "cohomology"}, {"coefficients", to_string(a)}};
    if (degree >= 0) {
        const AbelianInvariants& group = degree == 0 ? h.h0 : degree == 1 ? h.h1 : h.h2;
        if (degree > 2)
            throw error(errc::usage_error, "--degree must be 0, 1 or 2");
        report["degree"] = degree;
        report["group"] = invariants_json(group);
    } else {
        report["H0"] = invariants_json(h.h0);
        report["H1"] = invariants_json(h.h1);
        report["H2"] = invariants_json(h.h2);
    }
    if (representatives) {
        json reps = json::array();
        for (const H2Representative& rep : h2_representatives(cx, a)) {
            json values = json::object();
            for (std::size_t i = 0; i < cx.basis2.size(); ++i)
                values[cx.basis2[i]] = int_to_json(rep.values[i]);
            reps.push_back(json{{"order", int_to_json(rep.order)}, {"values", std::move(values)}});
        }
        report["representatives"] = std::move(reps);
    }
    return report;
}

json run_iso(const Document& a, const Document& b, std::size_t budget)
{
    if (budget == 0) budget = 1000000;
    if (a.kind == DocumentKind::textile && b.kind == DocumentKind::textile) {
        auto iso = textile_isomorphism(*a.textile, *b.textile, budget);
        json report{{"command", "iso"}, {"isomorphic", iso.has_value()}};
        if (iso) {
            report["E"] = morphism_payload(a.textile->E(), b.textile->E(), iso->phi_e);
            report["F"] = morphism_payload(a.textile->F(), b.textile->F(), iso->phi_f);
        }
        return report;
    }
    Pi1Input left = coloured_view(a);
    Pi1Input right = coloured_view(b);
    auto iso = square_isomorphism(left.cg, left.squares, right.cg, right.squares, budget);
    json report{{"command", "iso"}, {"isomorphic", iso.has_value()}};
    if (iso) {
        report["vertices"] = json(iso->vertex_map);
        report["edges"] = json(iso->edge_map);
    }
    return report;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"textile systems, coloured graphs and their invariants"};
    app.require_subcommand(1);

    std::string file_a, file_b;
    std::string base;
    std::string tree_mode = "bfs";
    std::string coefficients = "Z";
    int degree = -1;
    bool representatives = false;
    std::size_t budget = 0;

    CLI::App* validate = app.add_subcommand("validate", "check a document");
    validate->add_option("file", file_a)->required();

    CLI::App* lift = app.add_subcommand("lift", "path-lifting report of a textile system");
    lift->add_option("file", file_a)->required();

    CLI::App* convert = app.add_subcommand("convert",
                                           "textile <-> coloured graph with squares");
    convert->add_option("file", file_a)->required();

    CLI::App* props = app.add_subcommand("properties", "structural property report");
    props->add_option("file", file_a)->required();

    CLI::App* pi1cmd = app.add_subcommand("pi1", "fundamental group presentation");
    pi1cmd->add_option("file", file_a)->required();
    pi1cmd->add_option("--base", base, "basepoint vertex (default: first vertex)");
    pi1cmd->add_option("--tree", tree_mode, "spanning tree: bfs or random");
    pi1cmd->add_option("--budget", budget, "simplification move budget");

    CLI::App* hom = app.add_subcommand("homology", "integral homology");
    hom->add_option("file", file_a)->required();

    CLI::App* cohom = app.add_subcommand("cohomology", "cohomology with coefficients");
    cohom->add_option("file", file_a)->required();
    cohom->add_option("--coefficients", coefficients, "e.g. Z, Z/4, Z^2 + Z/6");
    cohom->add_option("--degree", degree, "report a single degree (0, 1 or 2)");
    cohom->add_flag("--representatives", representatives,
                    "include degree-2 representative cocycles (cyclic coefficients)");

    CLI::App* iso = app.add_subcommand("iso", "isomorphism search");
    iso->add_option("fileA", file_a)->required();
    iso->add_option("fileB", file_b)->required();
    iso->add_option("--budget", budget, "search node budget (default 10^6)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 3;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        json report;
        if (validate->parsed()) report = run_validate(load_document(file_a));
        else if (lift->parsed()) report = run_lift(load_document(file_a));
        else if (convert->parsed()) report = run_convert(load_document(file_a));
        else if (props->parsed()) report = run_properties(load_document(file_a));
        else if (pi1cmd->parsed()) report = run_pi1(load_document(file_a), base, tree_mode, budget);
        else if (hom->parsed()) report = run_homology(load_document(file_a));
        else if (cohom->parsed())
            report = run_cohomology(load_document(file_a), coefficients, degree, representatives);
        else if (iso->parsed()) report = run_iso(load_document(file_a), load_document(file_b), budget);
        out << report.dump(2) << "\n";
        return 0;
    } catch (const error& e) {
        json report{{"command", command},
                    {"ok", false},
                    {"error", json{{"code", errc_name(e.code())},
                                   {"message", e.what()},
                                   {"details", e.details()}}}};
        out << report.dump(2) << "\n";
        return exit_code_for(e.code());
    }
}

} // namespace texsys::cli
