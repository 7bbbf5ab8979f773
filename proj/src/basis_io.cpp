#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ttk/basis.hpp"
#include "ttk/error.hpp"

namespace ttk {

namespace {

using nlohmann::json;

const char* kind_name(BasisKind kind) {
    switch (kind) {
    case BasisKind::constant: return "constant";
    case BasisKind::gaussian: return "gaussian";
    case BasisKind::periodic_gaussian: return "periodic_gaussian";
    case BasisKind::identity: return "identity";
    case BasisKind::monomial: return "monomial";
    }
    return "?";
}

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ValidationError(where + ": missing key '" + key + "'");
    return obj.at(key);
}

double require_number(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) throw ValidationError(where + ": key '" + key + "' must be a number");
    return v.get<double>();
}

BasisFunction function_from_json(const json& j, const std::string& where) {
    const json& kind = require(j, "kind", where);
    if (!kind.is_string()) throw ValidationError(where + ": key 'kind' must be a string");
    const auto name = kind.get<std::string>();
    if (name == "constant") return BasisFunction::constant();
    if (name == "identity") return BasisFunction::identity();
    if (name == "gaussian" || name == "periodic_gaussian") {
        const double c = require_number(j, "c", where);
        const double s = require_number(j, "s", where);
        if (!(s > 0.0)) throw ValidationError(where + ": key 's' must be positive");
        return name == "gaussian" ? BasisFunction::gaussian(c, s) : BasisFunction::periodic_gaussian(c, s);
    }
    if (name == "monomial") {
        const json& deg = require(j, "degree", where);
        if (!deg.is_number_integer() || deg.get<int>() < 0)
            throw ValidationError(where + ": key 'degree' must be a non-negative integer");
        return BasisFunction::monomial(deg.get<int>());
    }
    throw ValidationError(where + ": key 'kind' has unknown value '" + name + "'");
}

} // namespace

std::string basis_spec_to_json(const BasisSpec& spec, int indent) {
    json doc;
    doc["format"] = "ttk-basis";
    doc["version"] = 1;
    doc["dimensions"] = json::array();
    for (const auto& dim : spec.dimensions) {
        json jd;
        jd["coordinate"] = dim.coordinate;
        jd["functions"] = json::array();
        for (const auto& f : dim.functions) {
            json jf;
            jf["kind"] = kind_name(f.kind);
            if (f.kind == BasisKind::gaussian || f.kind == BasisKind::periodic_gaussian) {
                jf["c"] = f.c;
                jf["s"] = f.s;
            } else if (f.kind == BasisKind::monomial) {
                jf["degree"] = f.degree;
            }
            jd["functions"].push_back(std::move(jf));
        }
        doc["dimensions"].push_back(std::move(jd));
    }
    return doc.dump(indent);
}

BasisSpec basis_spec_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("basis spec is not valid JSON: ") + e.what());
    }
    const json& dims = require(doc, "dimensions", "basis spec");
    if (!dims.is_array()) throw ValidationError("basis spec: key 'dimensions' must be an array");
    BasisSpec spec;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const std::string where = "basis spec dimensions[" + std::to_string(k) + "]";
        const json& coord = require(dims[k], "coordinate", where);
        if (!coord.is_number_integer() || coord.get<long long>() < 1)
            throw ValidationError(where + ": key 'coordinate' must be a positive integer");
        const json& funcs = require(dims[k], "functions", where);
        if (!funcs.is_array()) throw ValidationError(where + ": key 'functions' must be an array");
        BasisDimension dim{coord.get<std::size_t>(), {}};
        for (std::size_t i = 0; i < funcs.size(); ++i)
            dim.functions.push_back(function_from_json(funcs[i], where + ".functions[" + std::to_string(i) + "]"));
        spec.dimensions.push_back(std::move(dim));
    }
    spec.validate();
    return spec;
}

BasisSpec load_basis_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open basis spec '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return basis_spec_from_json(buf.str());
}

void save_basis_spec(const BasisSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write basis spec '" + path + "'");
    out << basis_spec_to_json(spec) << '\n';
    if (!out) throw IoError("failed writing basis spec '" + path + "'");
}

} // namespace ttk
