#include "axtk/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace axtk::io {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// scalar expressions

namespace {

class Parser {
public:
    Parser(const std::string& text, const FieldPtr& field) : text_(text), field_(field) {}

    Scalar run() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        while (true) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        while (true) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) {
                std::size_t at = pos_;
                Scalar d = factor();
                if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
                v = v / d;
            } else
                return v;
        }
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        return power();
    }

    Scalar power() {
        Scalar v = atom();
        while (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("exponent must be a non-negative integer", at);
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 100000) throw SyntaxError("exponent too large", at);
                ++pos_;
            }
            v = v.pow(static_cast<long>(e));
        }
        return v;
    }

    Scalar atom() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", at);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return field_->from_rat(Rat(Int(digits, 10)));  // base 10, no octal detection
        }
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) throw SyntaxError("missing ')'", pos_);
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ident += text_[pos_++];
            if (ident == "sqrt") {
                if (!eat('(')) throw SyntaxError("sqrt needs '('", pos_);
                Scalar inner = expr();
                if (!eat(')')) throw SyntaxError("missing ')'", pos_);
                return sqrt_of(inner, at);
            }
            if (field_->kind() == FieldKind::Function && field_->has_variable(ident))
                return field_->variable(ident);
            throw UnknownVariable("unknown variable '" + ident + "' at position " +
                                  std::to_string(at) + " in " + field_->describe());
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }

    Scalar sqrt_of(const Scalar& inner, std::size_t at) {
        if (field_->kind() != FieldKind::Quadratic)
            throw SyntaxError("sqrt is only available in a quadratic field", at);
        // the radicand must match the field's d exactly
        Scalar d_here = field_->from_rat(field_->radicand());
        if (!(inner == d_here))
            throw SyntaxError("sqrt radicand does not match the field's " +
                                  field_->radicand().get_str(),
                              at);
        return field_->sqrt_gen();
    }

    const std::string& text_;
    const FieldPtr& field_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldPtr& field) {
    return Parser(text, field).run();
}

std::string print_scalar(const Scalar& x) { return x.str(); }

// ---------------------------------------------------------------------------
// field blocks

namespace {

ordered_json field_json(const FieldPtr& f) {
    ordered_json j;
    switch (f->kind()) {
        case FieldKind::Rationals:
            j["kind"] = "rationals";
            break;
        case FieldKind::Prime:
            j["kind"] = "prime";
            j["p"] = f->characteristic();
            break;
        case FieldKind::Quadratic:
            j["kind"] = "quadratic";
            j["base"] = field_json(f->base());
            j["d"] = f->radicand().get_str();
            break;
        case FieldKind::Function:
            j["kind"] = "function";
            j["base"] = field_json(f->base());
            j["variables"] = f->variables();
            break;
    }
    return j;
}

FieldPtr field_from_json(const ordered_json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("expected a field object with a 'kind' string", path);
    std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "rationals") return Field::rationals();
        if (kind == "prime") {
            if (!j.contains("p") || !j["p"].is_number_unsigned())
                throw SchemaError("prime field needs an unsigned 'p'", path);
            return Field::prime(j["p"].get<unsigned long>());
        }
        if (kind == "quadratic") {
            if (!j.contains("base")) throw SchemaError("quadratic field needs a 'base'", path);
            if (!j.contains("d") || !j["d"].is_string())
                throw SchemaError("quadratic field needs a string 'd'", path);
            FieldPtr base = field_from_json(j["base"], path + ".base");
            Rat d(j["d"].get<std::string>(), 10);
            d.canonicalize();
            return Field::quadratic(base, d);
        }
        if (kind == "function") {
            if (!j.contains("base")) throw SchemaError("function field needs a 'base'", path);
            if (!j.contains("variables") || !j["variables"].is_array())
                throw SchemaError("function field needs a 'variables' array", path);
            std::vector<std::string> vars;
            for (const auto& v : j["variables"]) {
                if (!v.is_string()) throw SchemaError("variable names must be strings", path);
                vars.push_back(v.get<std::string>());
            }
            return Field::function(field_from_json(j["base"], path + ".base"), std::move(vars));
        }
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what(), path);
    } catch (const std::invalid_argument&) {
        throw SchemaError("malformed number", path);
    }
    throw SchemaError("unknown field kind '" + kind + "'", path);
}

ordered_json parse_json_text(const std::string& text, const std::string& what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("not valid JSON", what);
    return j;
}

Scalar scalar_from_json(const ordered_json& j, const FieldPtr& f, const std::string& path) {
    if (!j.is_string())
        throw SchemaError("scalars must be expression strings, never numbers", path);
    try {
        return parse_scalar(j.get<std::string>(), f);
    } catch (const SyntaxError& e) {
        throw SchemaError(e.what(), path);
    } catch (const UnknownVariable& e) {
        throw SchemaError(e.what(), path);
    } catch (const DivisionByZero& e) {
        throw SchemaError(e.what(), path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
}

}  // namespace

std::string serialize_field(const FieldPtr& f) { return field_json(f).dump(2); }

FieldPtr parse_field(const std::string& text) {
    return field_from_json(parse_json_text(text, "field"), "field");
}

// ---------------------------------------------------------------------------
// algebra documents

std::string serialize_algebra(const AlgebraBundle& bundle) {
    const Algebra& A = *bundle.algebra;
    ordered_json j;
    j["name"] = bundle.name;
    j["field"] = field_json(A.field());
    j["dim"] = A.dim();
    j["basis"] = A.basis_names();
    ordered_json fusion;
    fusion["law"] = bundle.law.name();
    if (bundle.law.name() == "monster") {
        fusion["alpha"] = bundle.law.alpha().str();
        fusion["beta"] = bundle.law.beta().str();
    } else {
        fusion["eta"] = bundle.law.beta().str();
    }
    j["fusion"] = fusion;
    j["axes"] = bundle.axes;
    ordered_json products = ordered_json::object();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t k = i; k < A.dim(); ++k) {
            ordered_json entries = ordered_json::array();
            const Vector& p = A.basis_product(i, k);
            for (std::size_t t = 0; t < A.dim(); ++t) entries.push_back(p[t].str());
            products[std::to_string(i) + "," + std::to_string(k)] = entries;
        }
    j["products"] = products;
    return j.dump(2);
}

AlgebraBundle parse_algebra(const std::string& text) {
    ordered_json j = parse_json_text(text, "document");
    if (!j.is_object()) throw SchemaError("document must be a JSON object", "document");

    FieldPtr f = field_from_json(j.contains("field") ? j["field"] : ordered_json(), "field");

    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw SchemaError("missing unsigned 'dim'", "dim");
    std::size_t dim = j["dim"].get<std::size_t>();
    if (dim == 0) throw SchemaError("dim must be positive", "dim");

    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != dim)
        throw SchemaError("'basis' must list exactly dim names", "basis");
    std::vector<std::string> names;
    for (const auto& n : j["basis"]) {
        if (!n.is_string()) throw SchemaError("basis names must be strings", "basis");
        names.push_back(n.get<std::string>());
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t k = i + 1; k < names.size(); ++k)
            if (names[i] == names[k])
                throw SchemaError("duplicate basis name '" + names[i] + "'", "basis");

    if (!j.contains("fusion") || !j["fusion"].is_object())
        throw SchemaError("missing 'fusion' object", "fusion");
    const auto& fj = j["fusion"];
    std::string law_name = fj.contains("law") && fj["law"].is_string()
                               ? fj["law"].get<std::string>()
                               : throw SchemaError("missing 'law' string", "fusion.law");
    FusionLaw law = [&] {
        try {
            if (law_name == "monster") {
                if (!fj.contains("alpha") || !fj.contains("beta"))
                    throw SchemaError("monster law needs 'alpha' and 'beta'", "fusion");
                return FusionLaw::monster(scalar_from_json(fj["alpha"], f, "fusion.alpha"),
                                          scalar_from_json(fj["beta"], f, "fusion.beta"));
            }
            if (law_name == "jordan") {
                if (!fj.contains("eta")) throw SchemaError("jordan law needs 'eta'", "fusion");
                return FusionLaw::jordan(scalar_from_json(fj["eta"], f, "fusion.eta"));
            }
        } catch (const InvalidParameter& e) {
            throw SchemaError(e.what(), "fusion");
        }
        throw SchemaError("unknown law '" + law_name + "'", "fusion.law");
    }();

    std::vector<std::size_t> axes;
    if (!j.contains("axes") || !j["axes"].is_array())
        throw SchemaError("missing 'axes' array", "axes");
    for (const auto& a : j["axes"]) {
        if (!a.is_number_unsigned() || a.get<std::size_t>() >= dim)
            throw SchemaError("axis index out of range", "axes");
        axes.push_back(a.get<std::size_t>());
    }

    if (!j.contains("products") || !j["products"].is_object())
        throw SchemaError("missing 'products' object", "products");
    auto alg = std::make_shared<Algebra>(f, names);
    for (const auto& [key, val] : j["products"].items()) {
        std::string path = "products." + key;
        auto comma = key.find(',');
        if (comma == std::string::npos) throw SchemaError("keys must look like 'i,j'", path);
        std::size_t i, k;
        try {
            i = std::stoul(key.substr(0, comma));
            k = std::stoul(key.substr(comma + 1));
        } catch (const std::exception&) {
            throw SchemaError("keys must look like 'i,j' with integers", path);
        }
        if (i >= dim || k >= dim) throw SchemaError("index out of range", path);
        if (i > k) throw SchemaError("asymmetric key: expected i <= j", path);
        if (alg->has_product(i, k)) throw SchemaError("duplicate product entry", path);
        if (!val.is_array() || val.size() != dim)
            throw SchemaError("expected " + std::to_string(dim) + " coefficient expressions", path);
        std::vector<Scalar> coords;
        for (std::size_t t = 0; t < dim; ++t)
            coords.push_back(scalar_from_json(val[t], f, path + "[" + std::to_string(t) + "]"));
        alg->set_product(i, k, Vector(f, std::move(coords)));
    }

    // missing diagonals default to the idempotent rule for listed axes only
    for (std::size_t i = 0; i < dim; ++i) {
        if (alg->has_product(i, i)) continue;
        bool is_axis = std::find(axes.begin(), axes.end(), i) != axes.end();
        if (!is_axis)
            throw SchemaError("missing product (only axis diagonals may be omitted)",
                              "products." + std::to_string(i) + "," + std::to_string(i));
        alg->set_product(i, i, alg->basis_vector(i));
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = i; k < dim; ++k)
            if (!alg->has_product(i, k))
                throw SchemaError("missing product",
                                  "products." + std::to_string(i) + "," + std::to_string(k));

    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    return AlgebraBundle{name, alg, std::move(axes), std::move(law)};
}

AlgebraBundle load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

void save_algebra(const AlgebraBundle& bundle, const std::string& path) {
    write_file(path, serialize_algebra(bundle) + "\n");
}

AlgebraBundle bundle_of(const catalog::CatalogEntry& entry) {
    return AlgebraBundle{entry.name, entry.algebra, entry.axes, entry.law};
}

// ---------------------------------------------------------------------------
// axet documents

std::string serialize_axet(const axet::C2Axet& x) {
    ordered_json j;
    j["size"] = x.size();
    j["kind"] = x.kind().str();
    ordered_json labels = ordered_json::array();
    for (unsigned p = 0; p < x.size(); ++p) labels.push_back(x.label(p));
    j["labels"] = labels;
    ordered_json tau = ordered_json::array();
    for (unsigned i = 0; i < x.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (unsigned k = 0; k < x.size(); ++k) row.push_back(x.tau(i, k));
        tau.push_back(row);
    }
    j["tau"] = tau;
    return j.dump(2);
}

axet::C2Axet parse_axet(const std::string& text) {
    ordered_json j = parse_json_text(text, "document");
    if (!j.is_object()) throw SchemaError("document must be a JSON object", "document");
    if (!j.contains("size") || !j["size"].is_number_unsigned())
        throw SchemaError("missing unsigned 'size'", "size");
    unsigned long n = j["size"].get<unsigned long>();
    if (!j.contains("tau") || !j["tau"].is_array() || j["tau"].size() != n)
        throw SchemaError("'tau' must be a size x size table", "tau");
    std::vector<std::vector<unsigned>> tau;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = j["tau"][i];
        if (!row.is_array() || row.size() != n)
            throw SchemaError("row has the wrong length", "tau[" + std::to_string(i) + "]");
        std::vector<unsigned> r;
        for (std::size_t k = 0; k < n; ++k) {
            if (!row[k].is_number_unsigned())
                throw SchemaError("entries must be point indices",
                                  "tau[" + std::to_string(i) + "][" + std::to_string(k) + "]");
            r.push_back(row[k].get<unsigned>());
        }
        tau.push_back(std::move(r));
    }
    std::vector<long> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != n)
            throw SchemaError("'labels' must list one integer per point", "labels");
        for (const auto& l : j["labels"]) {
            if (!l.is_number_integer()) throw SchemaError("labels must be integers", "labels");
            labels.push_back(l.get<long>());
        }
    }
    try {
        axet::C2Axet x = axet::C2Axet::from_tau(std::move(tau), std::move(labels));
        if (j.contains("kind") && j["kind"].is_string()) {
            auto k = axet::Kind::parse(j["kind"].get<std::string>());
            if (!k) throw SchemaError("unknown kind string", "kind");
        }
        return x;
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what(), "tau");
    }
}

axet::C2Axet load_axet(const std::string& path) { return parse_axet(read_file(path)); }

void save_axet(const axet::C2Axet& x, const std::string& path) {
    write_file(path, serialize_axet(x) + "\n");
}

}  // namespace axtk::io
