#include "fanostrat/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "fanostrat/errors.hpp"
#include "fanostrat/json_io.hpp"

namespace fanostrat {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A value may name a file, hold inline JSON, or be a bare expression.
Json load_value(const std::string& value) {
    std::string text = value;
    std::error_code ec;
    if (std::filesystem::is_regular_file(value, ec)) text = read_file(value);
    const auto b = text.find_first_not_of(" \t\r\n");
    if (b != std::string::npos && text[b] == '{') return Json::parse(text);
    return Json(text);
}

struct Surface {
    MultiPoly f;
    Field field;
    int n = 0;
    std::optional<LineParam> line;
};

Surface load_surface(const std::string& value, const std::optional<std::string>& field_flag) {
    const Json j = load_value(value);
    std::string poly;
    std::optional<int> n;
    std::string fspec = "q";
    std::optional<Json> line;
    if (j.is_string()) {
        poly = j.get<std::string>();
    } else {
        if (!j.contains("poly")) throw DomainError("surface JSON needs a \"poly\" field");
        poly = j.at("poly").get<std::string>();
        if (j.contains("n")) n = j.at("n").get<int>();
        if (j.contains("field")) fspec = j.at("field").get<std::string>();
        if (j.contains("line")) line = j.at("line");
    }
    if (field_flag) fspec = *field_flag;
    Surface s;
    s.field = Field::parse(fspec);
    if (line) s.line = line_from_json(*line, s.field);
    if (!n && s.line) n = s.line->n();
    s.f = MultiPoly::parse(poly, s.field);
    if (!n) n = static_cast<int>(s.f.nvars()) - 1;
    if (static_cast<int>(s.f.nvars()) > *n + 1) throw DomainError("polynomial uses variables beyond x" + std::to_string(*n));
    s.n = *n;
    s.f = MultiPoly::parse(poly, s.field, static_cast<std::size_t>(s.n + 1));
    if (s.f.is_zero()) throw DomainError("the zero polynomial does not define a hypersurface");
    if (!s.f.is_homogeneous(s.f.total_degree())) throw DomainError("polynomial is not homogeneous");
    return s;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size()) throw DomainError(what + " must be a nonnegative integer, got '" + text + "'");
    return v;
}

// --seed > positional > FANOSTRAT_SEED > 0.
std::uint64_t resolve_seed(const std::optional<std::string>& flag, const std::optional<std::string>& positional) {
    if (flag) return parse_u64(*flag, "seed");
    if (positional) return parse_u64(*positional, "seed");
    if (const char* env = std::getenv("FANOSTRAT_SEED"); env && *env) return parse_u64(env, "FANOSTRAT_SEED");
    return 0;
}

SplittingType parse_type(int n, int d, const std::string& text) {
    return SplittingType(n, d, parse_int_list(text));
}

Json orientation_json(const ChowClass& factor, const ChowClass& cls, const std::optional<mpz_class>& degree) {
    Json j{{"factor", to_json(factor)}, {"class", to_json(cls)}};
    j["degree"] = degree ? Json(degree->get_str()) : Json(nullptr);
    return j;
}

Json series_json(const ChernSeries& s, int upto) {
    Json out = Json::array();
    for (int k = 0; k <= std::min(upto, s.top()); ++k) out.push_back(to_json(s[k]));
    return out;
}

struct Options {
    bool pretty = false;
    std::optional<std::string> field;

    int n = 0, d = 0;
    bool dot = false;

    std::string surface, line, type;
    std::string orientation = "prop24";

    std::uint64_t p = 0, trials = 0;
    std::optional<std::string> seed_pos, seed_flag;
    unsigned workers = 1;
    std::uint64_t block_size = 1 << 16;
    bool csv = false;

    bool allow_large = false;
    std::optional<std::uint64_t> prime;
    std::size_t max_lines = 64;
};

Json cmd_split(const Options& o) {
    const Surface s = load_surface(o.surface, o.field);
    LineParam line = o.line.empty() ? (s.line ? *s.line : LineParam::standard(s.field, s.n))
                                    : line_from_json(load_value(o.line), s.field);
    if (line.n() != s.n) throw DomainError("line lives in P^" + std::to_string(line.n()) + ", surface in P^" + std::to_string(s.n));
    const auto rd = adapt_coordinates(s.f, line);
    if (rd.f.empty()) throw DomainError("need n >= 3");
    if (has_common_zero(rd.f)) throw DomainError("X is singular at a point of L (the f_i share a zero)");
    const auto split = splitting_type(rd.f);
    Json out{{"field", field_spec(s.field)},
             {"n", rd.n},
             {"d", rd.d},
             {"splitting", to_json(split.type)},
             {"u", expected_codimension(split.type)},
             {"profile", to_json(split.profile)}};
    if (rd.d >= 2) {
        const auto t = tangent_dims(rd);
        out["dim_TF"] = t.dim_TF;
        out["dim_TFa"] = t.dim_TFa;
        out["codim"] = t.codim();
        out["generator_codims"] = t.generator_codims;
    }
    return out;
}

Json cmd_class(const Options& o) {
    if (o.orientation != "prop24" && o.orientation != "printed") throw DomainError("orientation must be prop24 or printed");
    const auto a = parse_type(o.n, o.d, o.type);
    const auto sc = stratum_class(a);
    Json out{{"n", o.n},
             {"d", o.d},
             {"type", to_json(a)},
             {"u", expected_codimension(a)},
             {"m", sc.m},
             {"b", sc.b},
             {"no_condition", sc.no_condition},
             {"fano_class", to_json(sc.fano_class)}};
    out["fano_degree"] = (o.d + 1 == 2 * (o.n - 1)) ? Json(sc.fano_class.degree().get_str()) : Json(nullptr);
    Json orient;
    orient["prop24"] = orientation_json(sc.factor_prop24, sc.class_prop24, sc.degree_prop24);
    orient["printed"] = orientation_json(sc.factor_printed, sc.class_printed, sc.degree_printed);
    out["orientations"] = orient;
    out["selected"] = o.orientation;
    out["class"] = orient[o.orientation]["class"];
    out["degree"] = orient[o.orientation]["degree"];
    if (!sc.no_condition) {
        const int top = sc.m + sc.b;
        out["intermediates"] = Json{{"sym_power", o.d - 1},
                                    {"chern_sym", series_json(chern_sym(o.d - 1, o.n), top)},
                                    {"chern_Q_inverse", series_json(series_invert(chern_Q(o.n)), top)}};
    }
    return out;
}

Json cmd_witness(const Options& o, std::uint64_t seed) {
    const Field field = Field::parse(o.field.value_or("q"));
    const auto a = parse_type(o.n, o.d, o.type);
    const auto w = random_witness(a, field, seed);
    Json matrix = Json::array();
    for (const auto& row : w.A) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        matrix.push_back(r);
    }
    Json forms = Json::array();
    for (const auto& f : w.f) forms.push_back(to_json(f));
    return Json{{"n", o.n},
                {"d", o.d},
                {"type", to_json(a)},
                {"field", field_spec(field)},
                {"seed", seed},
                {"attempts", w.attempts},
                {"matrix", matrix},
                {"forms", forms},
                {"poly", hypersurface_from_forms(w.f).to_string()},
                {"line", to_json(LineParam::standard(field, o.n))},
                {"splitting", to_json(w.split.type)}};
}

Json cmd_localeq(const Options& o) {
    const Surface s = load_surface(o.surface, o.field);
    const int d = s.f.total_degree();
    const auto a = parse_type(s.n, d, o.type);
    const auto eqs = local_equations(s.f, a, {o.allow_large});
    Json vars = Json::array();
    for (int i = 2; i <= s.n; ++i)
        for (int j = 0; j <= 1; ++j) vars.push_back("a" + std::to_string(i) + std::to_string(j));
    Json list = Json::array();
    for (const auto& e : eqs) list.push_back(e.to_string());
    return Json{{"field", field_spec(s.field)},
                {"n", s.n},
                {"d", d},
                {"type", to_json(a)},
                {"variables", vars},
                {"count", eqs.size()},
                {"equations", list}};
}

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal bundle strata of lines on hypersurfaces", "fanostrat"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--pretty", o.pretty, "Indent JSON output");
    app.add_option("--field", o.field, "Coefficient field: q or p:<prime>");
    app.fallthrough();

    auto* strata = app.add_subcommand("strata", "Splitting types and their specialization poset");
    strata->add_option("n", o.n)->required();
    strata->add_option("d", o.d)->required();
    strata->add_flag("--dot", o.dot, "Emit the Hasse diagram as DOT");

    auto* split = app.add_subcommand("split", "Splitting type and tangent report of a line on a hypersurface");
    split->add_option("--surface", o.surface, "File, inline JSON {\"poly\",\"n\",\"field\",\"line\"}, or expression")->required();
    split->add_option("--line", o.line, "File, inline JSON {\"p0\",\"p1\"}, or \"1,0,..;0,1,..\" (default V(x2..xn))");

    auto* cls = app.add_subcommand("class", "Chow class of a stratum closure in G(1,n)");
    cls->add_option("n", o.n)->required();
    cls->add_option("d", o.d)->required();
    cls->add_option("--type", o.type, "Splitting type, e.g. -1,-1,1")->required();
    cls->add_option("--orientation", o.orientation, "prop24 or printed")->capture_default_str();

    auto* sample = app.add_subcommand("sample", "Monte Carlo tally of splitting types over F_p");
    sample->add_option("n", o.n)->required();
    sample->add_option("d", o.d)->required();
    sample->add_option("p", o.p)->required();
    sample->add_option("trials", o.trials)->required();
    sample->add_option("SEED", o.seed_pos, "Seed (overridden by --seed)");
    sample->add_option("--seed", o.seed_flag);
    sample->add_option("--workers", o.workers)->capture_default_str();
    sample->add_option("--block-size", o.block_size)->capture_default_str();
    sample->add_flag("--csv", o.csv, "Emit type,count CSV instead of JSON");

    auto* witness = app.add_subcommand("witness", "Random f-tuple realising a splitting type");
    witness->add_option("n", o.n)->required();
    witness->add_option("d", o.d)->required();
    witness->add_option("--type", o.type)->required();
    witness->add_option("SEED", o.seed_pos, "Seed (overridden by --seed)");
    witness->add_option("--seed", o.seed_flag);

    auto* localeq = app.add_subcommand("localeq", "Local equations of a stratum near V(x2..xn)");
    localeq->add_option("--surface", o.surface)->required();
    localeq->add_option("--type", o.type)->required();
    localeq->add_flag("--allow-large", o.allow_large, "Lift the n <= 5, d <= 4 guard");

    auto* fermat = app.add_subcommand("fermat", "Cone lines on the Fermat hypersurface");
    fermat->add_option("n", o.n)->required();
    fermat->add_option("d", o.d)->required();
    fermat->add_option("--p", o.prime, "Prime (default: smallest suitable prime >= 17)");
    fermat->add_option("--max-lines", o.max_lines)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (strata->parsed()) {
            const auto poset = build_poset(o.n, o.d);
            if (o.dot)
                out << emit_hasse_dot(poset);
            else
                emit(out, to_json(poset), o.pretty);
        } else if (split->parsed()) {
            emit(out, cmd_split(o), o.pretty);
        } else if (cls->parsed()) {
            emit(out, cmd_class(o), o.pretty);
        } else if (sample->parsed()) {
            const auto seed = resolve_seed(o.seed_flag, o.seed_pos);
            const auto r = sample_types(o.n, o.d, o.p, o.trials, seed, {o.workers, o.block_size});
            if (o.csv)
                out << r.to_csv();
            else
                emit(out, to_json(r), o.pretty);
        } else if (witness->parsed()) {
            emit(out, cmd_witness(o, resolve_seed(o.seed_flag, o.seed_pos)), o.pretty);
        } else if (localeq->parsed()) {
            emit(out, cmd_localeq(o), o.pretty);
        } else if (fermat->parsed()) {
            const std::uint64_t p = o.prime ? *o.prime : find_fermat_prime(o.n, o.d, 17, o.n == 4 && o.d == 4);
            emit(out, to_json(fermat_suite(o.n, o.d, p, o.max_lines)), o.pretty);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace fanostrat
