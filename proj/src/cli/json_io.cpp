#include "fanostrat/json_io.hpp"

#include <sstream>

#include "fanostrat/errors.hpp"

namespace fanostrat {

std::string field_spec(const Field& field) {
    return field.is_rational() ? "q" : "p:" + std::to_string(field.characteristic());
}

Json to_json(const SplittingType& a) { return Json(a.entries()); }

Json to_json(const ChowClass& c) {
    Json terms = Json::array();
    const auto& t = c.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        terms.push_back(Json::array({Json::array({it->first.first, it->first.second}), it->second.get_str()}));
    return Json{{"n", c.n()}, {"terms", terms}, {"text", c.to_string()}};
}

ChowClass class_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms")) throw DomainError("class JSON needs n and terms");
    ChowClass c(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        const auto& part = term.at(0);
        const auto& coeff = term.at(1);
        mpz_class z;
        if (coeff.is_string()) {
            if (z.set_str(coeff.get<std::string>(), 10) != 0) throw DomainError("bad coefficient " + coeff.dump());
        } else {
            z = coeff.get<long>();
        }
        c.add_term({part.at(0).get<int>(), part.at(1).get<int>()}, z);
    }
    return c;
}

Json to_json(const BinaryForm& f) {
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(c.to_string());
    return out;
}

Json to_json(const LineParam& line) {
    Json p0 = Json::array(), p1 = Json::array();
    for (const auto& c : line.p0) p0.push_back(c.to_string());
    for (const auto& c : line.p1) p1.push_back(c.to_string());
    return Json{{"p0", p0}, {"p1", p1}};
}

Json to_json(const RankProfile& profile) {
    return Json{{"from", -1}, {"h", profile.h}, {"ranks", profile.ranks}};
}

Json to_json(const TangentReport& t) {
    return Json{{"splitting", to_json(t.type)},
                {"dim_TF", t.dim_TF},
                {"dim_TFa", t.dim_TFa},
                {"codim", t.codim()},
                {"generator_codims", t.generator_codims}};
}

Json to_json(const StrataPoset& poset) {
    Json types = Json::array();
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        const auto& a = poset.nodes[i];
        const auto dim = expected_dimension(a);
        Json node{{"type", to_json(a)},
                  {"text", a.to_string()},
                  {"u", poset.codims[i]},
                  {"expected_dim", dim.expected_dim},
                  {"generically_empty", dim.generically_empty}};
        if (dim.dimension_bound) {
            node["dimension_bound"] = *dim.dimension_bound;
            node["bound_shape"] = dim.bound_shape;
        }
        types.push_back(node);
    }
    Json covers = Json::array();
    for (auto [lo, hi] : poset.covers) covers.push_back(Json::array({lo, hi}));
    return Json{{"n", poset.n}, {"d", poset.d}, {"types", types}, {"covers", covers}};
}

Json to_json(const SamplingReport& r) {
    Json types = Json::array();
    for (const auto& t : r.types)
        types.push_back(Json{{"type", to_json(t.type)},
                             {"u", t.u},
                             {"count", t.count},
                             {"frequency", t.frequency},
                             {"frequency_interval", {t.freq_low, t.freq_high}},
                             {"codim_estimate", t.codim_estimate},
                             {"codim_interval", {t.codim_low, t.codim_high}}});
    return Json{{"n", r.n},         {"d", r.d},       {"p", r.p},
                {"trials", r.trials}, {"seed", r.seed}, {"block_size", r.block_size},
                {"types", types},   {"degenerate", r.degenerate}};
}

Json to_json(const FermatReport& r) {
    Json lines = Json::array();
    for (const auto& l : r.lines) {
        Json j{{"p0", l.p0}, {"p1", l.p1}, {"splitting", to_json(l.type)}, {"dim_TF", l.dim_TF}, {"dim_TFa", l.dim_TFa}};
        if (l.a) j["a"] = *l.a;
        if (l.b) j["b"] = *l.b;
        j["generic"] = l.generic;
        j["ok"] = l.ok;
        lines.push_back(j);
    }
    return Json{{"n", r.n},
                {"d", r.d},
                {"p", r.p},
                {"zetas", r.zetas},
                {"expected_type", to_json(r.expected_type)},
                {"all_types_ok", r.all_types_ok},
                {"tangent_ok", r.tangent_ok},
                {"generic_lines", r.generic_lines},
                {"special_lines", r.special_lines},
                {"lines", lines}};
}

namespace {

Scalar scalar_from_json(const Json& v, const Field& field) {
    if (v.is_number_integer()) return field.from_int(v.get<long long>());
    if (v.is_string()) return field.parse_scalar(v.get<std::string>());
    throw DomainError("line coordinate must be an integer or a string, got " + v.dump());
}

Vec point_from_json(const Json& v, const Field& field) {
    if (!v.is_array()) throw DomainError("line point must be an array");
    Vec out;
    for (const auto& c : v) out.push_back(scalar_from_json(c, field));
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

}  // namespace

LineParam line_from_json(const Json& j, const Field& field) {
    if (j.is_string()) return line_from_text(j.get<std::string>(), field);
    if (!j.is_object() || !j.contains("p0") || !j.contains("p1")) throw DomainError("line JSON needs p0 and p1");
    LineParam line{point_from_json(j.at("p0"), field), point_from_json(j.at("p1"), field)};
    if (line.p0.size() != line.p1.size() || line.p0.size() < 2) throw DomainError("line points must have equal length >= 2");
    return line;
}

LineParam line_from_text(const std::string& text, const Field& field) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw DomainError("line text must look like 1,0,0,0;0,1,0,0");
    auto point = [&](const std::string& part) {
        Vec out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(field.parse_scalar(trim(item)));
        return out;
    };
    LineParam line{point(text.substr(0, semi)), point(text.substr(semi + 1))};
    if (line.p0.size() != line.p1.size() || line.p0.size() < 2) throw DomainError("line points must have equal length >= 2");
    return line;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw DomainError("not an integer list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw DomainError("empty integer list");
    return out;
}

}  // namespace fanostrat
