#ifndef ABELREG_IO_HPP
#define ABELREG_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <abelreg/catalogs.hpp>

namespace abelreg {

// Malformed input file: either a JSON syntax error (carries 1-based
// line/column) or a schema violation (carries the offending element path).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t col)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line_(line), col_(col) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::size_t line_ = 0;
    std::size_t col_ = 0;
};

namespace detail {

using nlohmann::json;

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(where + ": invalid JSON", line, col);
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Rational rational_at(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ParseError(path + ": rationals must be strings like \"p\" or \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline Int positive_int_at(const json& j, const std::string& path) {
    Int v;
    if (j.is_number_unsigned())
        v = Int(j.get<std::uint64_t>());
    else if (j.is_number_integer())
        v = Int(j.get<std::int64_t>());
    else if (j.is_string()) {
        Rational q = rational_at(j, path);
        if (!is_integer(q)) throw ParseError(path + ": expected an integer");
        v = numerator(q);
    } else {
        throw ParseError(path + ": expected an integer");
    }
    if (v < 1) throw ParseError(path + ": expected a positive integer");
    return v;
}

inline ModelPtr model_from_json(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("basis"))
        throw ParseError(path + ": model needs \"dim\" and \"basis\"");
    Int dim = positive_int_at(j["dim"], path + ".dim");
    if (dim > 64) throw ParseError(path + ".dim: unreasonably large dimension");
    const std::size_t g = static_cast<std::size_t>(dim.convert_to<long long>());
    const json& basis = j["basis"];
    if (!basis.is_array() || basis.empty())
        throw ParseError(path + ".basis: expected a nonempty array");

    std::vector<AbelianModel::Generator> gens;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::string bp = path + ".basis[" + std::to_string(b) + "]";
        const json& gen = basis[b];
        if (!gen.is_object() || !gen.contains("name") || !gen.contains("matrix"))
            throw ParseError(bp + ": generator needs \"name\" and \"matrix\"");
        if (!gen["name"].is_string()) throw ParseError(bp + ".name: expected a string");
        const json& rows = gen["matrix"];
        if (!rows.is_array() || rows.size() != g)
            throw ParseError(bp + ".matrix: expected " + std::to_string(g) + " rows");
        Matrix<GaussianRational> m(g, g);
        for (std::size_t r = 0; r < g; ++r) {
            const json& row = rows[r];
            if (!row.is_array() || row.size() != g)
                throw ParseError(bp + ".matrix[" + std::to_string(r) + "]: expected " +
                                 std::to_string(g) + " entries");
            for (std::size_t c = 0; c < g; ++c) {
                const std::string ep =
                    bp + ".matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
                const json& entry = row[c];
                if (!entry.is_array() || entry.size() != 2)
                    throw ParseError(ep + ": expected [re, im]");
                m(r, c) = GaussianRational(rational_at(entry[0], ep + "[0]"),
                                           rational_at(entry[1], ep + "[1]"));
            }
        }
        try {
            gens.emplace_back(gen["name"].get<std::string>(), HermitianForm(std::move(m)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(bp + ".matrix: " + e.what());
        }
    }
    try {
        return AbelianModel::make(g, std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline NSClass class_from_json(const json& j, const ModelPtr& model, const std::string& path) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw ParseError(path + ": class needs \"coeffs\"");
    const json& coeffs = j["coeffs"];
    if (!coeffs.is_array()) throw ParseError(path + ".coeffs: expected an array");
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        c.push_back(rational_at(coeffs[k], path + ".coeffs[" + std::to_string(k) + "]"));
    try {
        return make_class(model, std::move(c));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline BundleDescriptor bundle_from_json(const json& j, const ModelPtr& model,
                                         const std::string& path) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("c1"))
        throw ParseError(path + ": bundle needs \"rank\" and \"c1\"");
    Int rank = positive_int_at(j["rank"], path + ".rank");
    NSClass c1 = class_from_json(j["c1"], model, path + ".c1");
    std::optional<std::string> label;
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError(path + ".label: expected a string");
        label = j["label"].get<std::string>();
    }
    return make_bundle(std::move(rank), std::move(c1), std::move(label));
}

}  // namespace detail

inline ModelPtr load_model(const std::string& path) {
    auto text = detail::read_file(path);
    return detail::model_from_json(detail::parse_json_text(text, path), "$");
}

inline NSClass load_class(const std::string& path, const ModelPtr& model) {
    auto text = detail::read_file(path);
    return detail::class_from_json(detail::parse_json_text(text, path), model, "$");
}

inline BundleDescriptor load_bundle(const std::string& path, const ModelPtr& model) {
    auto text = detail::read_file(path);
    return detail::bundle_from_json(detail::parse_json_text(text, path), model, "$");
}

// {"factors": [{"model": {...}, "bundle": {...}, "polarization": {...}}, ...]}
inline ProductSpec load_product_spec(const std::string& path) {
    auto text = detail::read_file(path);
    auto j = detail::parse_json_text(text, path);
    if (!j.is_object() || !j.contains("factors"))
        throw ParseError("$: product spec needs \"factors\"");
    const auto& factors = j["factors"];
    if (!factors.is_array() || factors.size() < 2)
        throw ParseError("$.factors: expected an array of at least two factors");
    ProductSpec spec;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const std::string fp = "$.factors[" + std::to_string(k) + "]";
        const auto& f = factors[k];
        if (!f.is_object() || !f.contains("model") || !f.contains("bundle") ||
            !f.contains("polarization"))
            throw ParseError(fp + ": factor needs \"model\", \"bundle\", \"polarization\"");
        ProductFactor factor;
        factor.model = detail::model_from_json(f["model"], fp + ".model");
        factor.bundle = detail::bundle_from_json(f["bundle"], factor.model, fp + ".bundle");
        factor.polarization =
            detail::class_from_json(f["polarization"], factor.model, fp + ".polarization");
        spec.factors.push_back(std::move(factor));
    }
    return spec;
}

}  // namespace abelreg

#endif
