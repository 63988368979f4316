#include "ybx/json_io.hpp"

#include <json.hpp>

#include "ybx/grammar.hpp"

namespace ybx {

using nlohmann::json;

std::string tensor_to_json(const TensorMat& m, int indent) {
    json j;
    j["n"] = m.n();
    j["legs"] = m.legs();
    j["ring"] = m.ring().names();
    json entries = json::array();
    for (const auto& [key, v] : m.entries()) {
        json e;
        e["row"] = m.unflatten(key.first);
        e["col"] = m.unflatten(key.second);
        e["coeff"] = to_string(v);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump(indent);
}

TensorMat tensor_from_json(const std::string& text) {
    json j = json::parse(text);
    VarContext ring(j.at("ring").get<std::vector<std::string>>());
    TensorMat m(j.at("n").get<int>(), j.at("legs").get<int>(), ring);
    for (const auto& e : j.at("entries")) {
        MultiIndex row = e.at("row").get<MultiIndex>();
        MultiIndex col = e.at("col").get<MultiIndex>();
        m.set(row, col, parse_ratfunc(ring, e.at("coeff").get<std::string>()));
    }
    return m;
}

std::string fieldop_to_json(const FieldOp& op, int indent) {
    if (op.num_z() != 2)
        throw DimensionError("fieldop_to_json: only two-variable operators serialize");
    json j;
    std::vector<std::string> zvars{op.context().name(0), op.context().name(1)};
    j["zvars"] = zvars;
    j["params"] = op.param_context().names();
    json terms = json::array();
    for (const auto& t : op.terms()) {
        json e;
        const bool swap = t.map.target[0] == 1;
        e["swap"] = swap;
        // coeff * Sub after P^swap: with the swap, the printed substitution
        // pair for z_i comes from the map row that lands on z_i.
        json sub;
        if (!swap) {
            sub[zvars[0]] = {to_string(t.map.scale[0]), to_string(t.map.offset[0])};
            sub[zvars[1]] = {to_string(t.map.scale[1]), to_string(t.map.offset[1])};
        } else {
            sub[zvars[0]] = {to_string(t.map.scale[1]), to_string(t.map.offset[1])};
            sub[zvars[1]] = {to_string(t.map.scale[0]), to_string(t.map.offset[0])};
        }
        e["sub"] = std::move(sub);
        e["coeff"] = to_string(t.coeff);
        terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    return j.dump(indent);
}

FieldOp fieldop_from_json(const std::string& text) {
    json j = json::parse(text);
    auto zvars = j.at("zvars").get<std::vector<std::string>>();
    auto params = j.at("params").get<std::vector<std::string>>();
    if (zvars.size() != 2) throw DimensionError("fieldop_from_json: expected two z-variables");
    std::vector<std::string> names = zvars;
    names.insert(names.end(), params.begin(), params.end());
    VarContext ctx(std::move(names));
    FieldOp op(ctx, 2);
    for (const auto& e : j.at("terms")) {
        const bool swap = e.at("swap").get<bool>();
        ZMap m = swap ? op.swap_map(0, 1) : op.identity_map();
        const auto& sub = e.at("sub");
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& pair = sub.at(zvars[i]);
            RatFunc scale = parse_ratfunc(ctx, pair.at(0).get<std::string>());
            RatFunc offset = parse_ratfunc(ctx, pair.at(1).get<std::string>());
            const std::size_t slot = swap ? 1 - i : i;
            m.scale[slot] = std::move(scale);
            m.offset[slot] = std::move(offset);
        }
        op.add_term(parse_ratfunc(ctx, e.at("coeff").get<std::string>()), std::move(m));
    }
    return op;
}

std::string tensor_to_latex(const TensorMat& m) {
    std::string out = "\\begin{pmatrix}\n";
    for (int row = 0; row < m.dim(); ++row) {
        for (int col = 0; col < m.dim(); ++col) {
            if (col > 0) out += " & ";
            out += to_string(m.get_flat(row, col));
        }
        out += row + 1 < m.dim() ? " \\\\\n" : "\n";
    }
    out += "\\end{pmatrix}";
    return out;
}

} // namespace ybx
