#include "rtalt/core/machine_file.hpp"

#include "rtalt/core/error.hpp"
#include "rtalt/core/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace rtalt::core {

using json = nlohmann::json;

std::string_view kind_name(MachineKind k) noexcept
{
    switch (k) {
    case MachineKind::afa: return "afa";
    case MachineKind::a1ca: return "a1ca";
    case MachineKind::pafa: return "pafa";
    case MachineKind::pa1ca: return "pa1ca";
    case MachineKind::qfa: return "qfa";
    case MachineKind::aqfa: return "aqfa";
    }
    return "?";
}

const Alphabet& MachineDescription::alphabet() const
{
    return std::visit([](const auto& m) -> const Alphabet& { return m.alphabet; }, payload);
}

namespace {

// ---- reading helpers ------------------------------------------------------

void check_keys(const json& obj, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional, const std::string& ctx)
{
    if (!obj.is_object()) {
        throw SchemaError(ctx + ": expected an object");
    }
    for (auto key : required) {
        if (!obj.contains(std::string(key))) {
            throw SchemaError(ctx + ": missing field \"" + std::string(key) + "\"");
        }
    }
    for (const auto& [key, value] : obj.items()) {
        bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                     std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) {
            throw SchemaError(ctx + ": unknown field \"" + key + "\"");
        }
    }
}

std::string get_string(const json& j, const std::string& ctx)
{
    if (!j.is_string()) {
        throw SchemaError(ctx + ": expected a string");
    }
    return j.get<std::string>();
}

std::vector<std::string> get_strings(const json& j, const std::string& ctx)
{
    if (!j.is_array()) {
        throw SchemaError(ctx + ": expected an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& x : j) {
        out.push_back(get_string(x, ctx));
    }
    return out;
}

const json& get_object(const json& j, const std::string& ctx)
{
    if (!j.is_object()) {
        throw SchemaError(ctx + ": expected an object");
    }
    return j;
}

const json& get_array(const json& j, const std::string& ctx)
{
    if (!j.is_array()) {
        throw SchemaError(ctx + ": expected an array");
    }
    return j;
}

std::size_t name_index(const std::vector<std::string>& names, const std::string& name, const std::string& ctx)
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw SchemaError(ctx + ": unknown name \"" + name + "\"");
    }
    return static_cast<std::size_t>(it - names.begin());
}

std::vector<std::string> state_names(const json& j, const std::string& ctx)
{
    auto names = get_strings(j, ctx);
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.find('|') != std::string::npos) {
            throw SchemaError(ctx + ": names may not contain '|'");
        }
        if (!seen.insert(n).second) {
            throw SchemaError(ctx + ": duplicate name \"" + n + "\"");
        }
    }
    return names;
}

std::size_t symbol_key(const Alphabet& a, const std::string& key, const std::string& ctx)
{
    auto i = a.index_of_key(key);
    if (!i) {
        throw SchemaError(ctx + ": unknown symbol key \"" + key + "\"");
    }
    return *i;
}

int get_int(const json& j, const std::string& ctx)
{
    if (!j.is_number_integer()) {
        throw SchemaError(ctx + ": expected an integer");
    }
    return j.get<int>();
}

Alphabet parse_alphabet(const json& j)
{
    std::vector<Symbol> symbols;
    for (const auto& s : get_strings(j, "alphabet")) {
        Word w = from_utf8(s);
        if (w.size() != 1) {
            throw SchemaError("alphabet: every symbol must be a single character, got \"" + s + "\"");
        }
        symbols.push_back(w[0]);
    }
    return Alphabet(std::move(symbols));
}

Rational get_rational(const json& j, const std::string& ctx)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    return parse_rational(get_string(j, ctx));
}

GaussianRational get_amplitude(const json& j, const std::string& ctx)
{
    if (!j.is_array() || j.size() != 2) {
        throw SchemaError(ctx + ": amplitude must be a pair [re, im]");
    }
    return {get_rational(j[0], ctx), get_rational(j[1], ctx)};
}

qfa::CMatrix get_matrix(const json& j, const std::string& ctx)
{
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& row : get_array(j, ctx)) {
        std::vector<GaussianRational> r;
        for (const auto& z : get_array(row, ctx)) {
            r.push_back(get_amplitude(z, ctx));
        }
        rows.push_back(std::move(r));
    }
    try {
        return qfa::CMatrix::from_rows(rows);
    }
    catch (const Error&) {
        throw SchemaError(ctx + ": ragged matrix");
    }
}

qfa::Superoperator get_superoperator(const json& j, const std::string& ctx)
{
    qfa::Superoperator op;
    for (const auto& m : get_array(j, ctx)) {
        op.elements.push_back(get_matrix(m, ctx));
    }
    return op;
}

std::vector<bool> flags_from_names(const json& j, const std::vector<std::string>& names, const std::string& ctx)
{
    std::vector<bool> out(names.size(), false);
    for (const auto& n : get_strings(j, ctx)) {
        out[name_index(names, n, ctx)] = true;
    }
    return out;
}

std::pair<std::string, std::string> split_pair(const std::string& key, const std::string& ctx)
{
    auto bar = key.find('|');
    if (bar == std::string::npos) {
        throw SchemaError(ctx + ": key \"" + key + "\" is not of the form a|b");
    }
    return {key.substr(0, bar), key.substr(bar + 1)};
}

// ---- writing helpers ------------------------------------------------------

json names_of(const std::vector<bool>& flags, const std::vector<std::string>& names)
{
    json out = json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (flags[i]) {
            out.push_back(names[i]);
        }
    }
    return out;
}

json alphabet_json(const Alphabet& a)
{
    json out = json::array();
    for (Symbol s : a.symbols()) {
        out.push_back(to_utf8(s));
    }
    return out;
}

json amplitude_json(const GaussianRational& z)
{
    return json::array({format_rational(z.re), format_rational(z.im)});
}

json matrix_json(const qfa::CMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(amplitude_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json superoperator_json(const qfa::Superoperator& op)
{
    json out = json::array();
    for (const auto& e : op.elements) {
        out.push_back(matrix_json(e));
    }
    return out;
}

// ---- AFA / A1CA -----------------------------------------------------------

alt::AfaDescription parse_afa(const json& j, Alphabet alphabet)
{
    check_keys(j, {"states", "initial", "accepting"}, {"universal", "delta"}, "afa");
    auto m = alt::make_afa(std::move(alphabet), state_names(j["states"], "afa.states"));
    m.initial = name_index(m.states, get_string(j["initial"], "afa.initial"), "afa.initial");
    m.accepting = name_index(m.states, get_string(j["accepting"], "afa.accepting"), "afa.accepting");
    if (j.contains("universal")) {
        m.universal = flags_from_names(j["universal"], m.states, "afa.universal");
    }
    if (j.contains("delta")) {
        for (const auto& [s, row] : get_object(j["delta"], "afa.delta").items()) {
            std::size_t si = name_index(m.states, s, "afa.delta");
            for (const auto& [sym, targets] : get_object(row, "afa.delta." + s).items()) {
                std::size_t i = symbol_key(m.alphabet, sym, "afa.delta." + s);
                for (const auto& t : get_strings(targets, "afa.delta")) {
                    m.delta[si][i].push_back(name_index(m.states, t, "afa.delta"));
                }
            }
        }
    }
    alt::normalize(m);
    return m;
}

json afa_json(const alt::AfaDescription& m)
{
    json delta = json::object();
    for (std::size_t s = 0; s < m.states.size(); ++s) {
        json row = json::object();
        for (std::size_t i = 0; i < m.delta[s].size(); ++i) {
            if (m.delta[s][i].empty()) {
                continue;
            }
            json t = json::array();
            for (auto x : m.delta[s][i]) {
                t.push_back(m.states[x]);
            }
            row[m.alphabet.key(i)] = std::move(t);
        }
        if (!row.empty()) {
            delta[m.states[s]] = std::move(row);
        }
    }
    return {{"states", m.states},
            {"universal", names_of(m.universal, m.states)},
            {"initial", m.states[m.initial]},
            {"accepting", m.states[m.accepting]},
            {"delta", delta}};
}

std::vector<alt::CounterMove> parse_counter_moves(const json& j, const std::vector<std::string>& states,
                                                  const std::string& ctx)
{
    std::vector<alt::CounterMove> out;
    for (const auto& mv : get_array(j, ctx)) {
        if (!mv.is_array() || mv.size() != 2) {
            throw SchemaError(ctx + ": counter move must be [state, update]");
        }
        out.push_back({name_index(states, get_string(mv[0], ctx), ctx), get_int(mv[1], ctx)});
    }
    return out;
}

alt::A1caDescription parse_a1ca(const json& j, Alphabet alphabet)
{
    check_keys(j, {"states", "initial", "accepting"}, {"universal", "delta"}, "a1ca");
    auto m = alt::make_a1ca(std::move(alphabet), state_names(j["states"], "a1ca.states"));
    m.initial = name_index(m.states, get_string(j["initial"], "a1ca.initial"), "a1ca.initial");
    m.accepting = name_index(m.states, get_string(j["accepting"], "a1ca.accepting"), "a1ca.accepting");
    if (j.contains("universal")) {
        m.universal = flags_from_names(j["universal"], m.states, "a1ca.universal");
    }
    if (j.contains("delta")) {
        for (const auto& [s, row] : get_object(j["delta"], "a1ca.delta").items()) {
            std::size_t si = name_index(m.states, s, "a1ca.delta");
            for (const auto& [sym, cell] : get_object(row, "a1ca.delta." + s).items()) {
                std::string ctx = "a1ca.delta." + s + "." + sym;
                std::size_t i = symbol_key(m.alphabet, sym, ctx);
                check_keys(cell, {}, {"zero", "nonzero"}, ctx);
                if (cell.contains("zero")) {
                    m.delta[si][i][0] = parse_counter_moves(cell["zero"], m.states, ctx);
                }
                if (cell.contains("nonzero")) {
                    m.delta[si][i][1] = parse_counter_moves(cell["nonzero"], m.states, ctx);
                }
            }
        }
    }
    alt::normalize(m);
    return m;
}

json a1ca_json(const alt::A1caDescription& m)
{
    json delta = json::object();
    for (std::size_t s = 0; s < m.states.size(); ++s) {
        json row = json::object();
        for (std::size_t i = 0; i < m.delta[s].size(); ++i) {
            json cell = json::object();
            for (std::size_t st = 0; st < 2; ++st) {
                if (m.delta[s][i][st].empty()) {
                    continue;
                }
                json moves = json::array();
                for (const auto& mv : m.delta[s][i][st]) {
                    moves.push_back(json::array({m.states[mv.target], mv.update}));
                }
                cell[st == 0 ? "zero" : "nonzero"] = std::move(moves);
            }
            if (!cell.empty()) {
                row[m.alphabet.key(i)] = std::move(cell);
            }
        }
        if (!row.empty()) {
            delta[m.states[s]] = std::move(row);
        }
    }
    return {{"states", m.states},
            {"universal", names_of(m.universal, m.states)},
            {"initial", m.states[m.initial]},
            {"accepting", m.states[m.accepting]},
            {"delta", delta}};
}

// ---- PAFA / PA1CA ---------------------------------------------------------

int parse_label(const pafa::GameShape& g, const std::string& name, const std::string& ctx)
{
    if (name.empty()) {
        return pafa::kUnlabeled;
    }
    auto l = g.label_index(name);
    if (!l) {
        throw SchemaError(ctx + ": unknown move label \"" + name + "\"");
    }
    return *l;
}

void parse_shape(pafa::GameShape& g, const json& j, const std::string& kind)
{
    auto pair_of = [&](const json& p, const std::string& ctx) {
        if (!p.is_array() || p.size() != 2) {
            throw SchemaError(ctx + ": expected [common, private]");
        }
        return std::pair{name_index(g.common_states, get_string(p[0], ctx), ctx),
                         name_index(g.private_states, get_string(p[1], ctx), ctx)};
    };
    if (j.contains("universal")) {
        for (const auto& p : get_array(j["universal"], kind + ".universal")) {
            auto [c, pr] = pair_of(p, kind + ".universal");
            g.universal[c][pr] = true;
        }
    }
    std::tie(g.initial_common, g.initial_private) = pair_of(j["initial"], kind + ".initial");
    g.accept = name_index(g.common_states, get_string(j["accept"], kind + ".accept"), kind + ".accept");
    g.reject = name_index(g.common_states, get_string(j["reject"], kind + ".reject"), kind + ".reject");
    if (j.contains("deltaE")) {
        for (const auto& [c, moves] : get_object(j["deltaE"], kind + ".deltaE").items()) {
            std::string ctx = kind + ".deltaE." + c;
            std::size_t ci = name_index(g.common_states, c, ctx);
            for (const auto& [label, target] : get_object(moves, ctx).items()) {
                g.delta_e[ci].push_back(
                    {parse_label(g, label, ctx), name_index(g.common_states, get_string(target, ctx), ctx)});
            }
        }
    }
}

std::vector<pafa::UniversalMove> parse_universal_moves(const pafa::GameShape& g, const json& j, bool counter,
                                                       const std::string& ctx)
{
    std::vector<pafa::UniversalMove> out;
    for (const auto& [label, target] : get_object(j, ctx).items()) {
        if (!target.is_array() || target.size() != (counter ? 3u : 2u)) {
            throw SchemaError(ctx + (counter ? ": expected [common, private, update]" : ": expected [common, private]"));
        }
        pafa::UniversalMove mv;
        mv.label = parse_label(g, label, ctx);
        mv.common = name_index(g.common_states, get_string(target[0], ctx), ctx);
        mv.priv = name_index(g.private_states, get_string(target[1], ctx), ctx);
        mv.update = counter ? get_int(target[2], ctx) : 0;
        out.push_back(mv);
    }
    return out;
}

template <class M>
M make_game(const json& j, Alphabet alphabet, const std::string& kind)
{
    check_keys(j, {"common_states", "private_states", "gamma", "delta_priv", "initial", "accept", "reject"},
               {"universal", "deltaE", "deltaU"}, kind);
    auto common = state_names(j["common_states"], kind + ".common_states");
    auto priv = state_names(j["private_states"], kind + ".private_states");
    auto gamma = get_strings(j["gamma"], kind + ".gamma");
    auto delta_priv = get_strings(j["delta_priv"], kind + ".delta_priv");
    M m;
    if constexpr (std::is_same_v<M, pafa::PafaDescription>) {
        m = pafa::make_pafa(std::move(alphabet), common, priv, gamma, delta_priv);
    }
    else {
        m = pafa::make_pa1ca(std::move(alphabet), common, priv, gamma, delta_priv);
    }
    parse_shape(m, j, kind);
    return m;
}

pafa::PafaDescription parse_pafa(const json& j, Alphabet alphabet)
{
    auto m = make_game<pafa::PafaDescription>(j, std::move(alphabet), "pafa");
    if (j.contains("deltaU")) {
        for (const auto& [key, row] : get_object(j["deltaU"], "pafa.deltaU").items()) {
            std::string ctx = "pafa.deltaU." + key;
            auto [c, p] = split_pair(key, ctx);
            std::size_t ci = name_index(m.common_states, c, ctx);
            std::size_t pi = name_index(m.private_states, p, ctx);
            for (const auto& [sym, moves] : get_object(row, ctx).items()) {
                m.delta_u[ci][pi][symbol_key(m.alphabet, sym, ctx)] = parse_universal_moves(m, moves, false, ctx + "." + sym);
            }
        }
    }
    pafa::normalize(m);
    return m;
}

pafa::Pa1caDescription parse_pa1ca(const json& j, Alphabet alphabet)
{
    auto m = make_game<pafa::Pa1caDescription>(j, std::move(alphabet), "pa1ca");
    if (j.contains("deltaU")) {
        for (const auto& [key, row] : get_object(j["deltaU"], "pa1ca.deltaU").items()) {
            std::string ctx = "pa1ca.deltaU." + key;
            auto [c, p] = split_pair(key, ctx);
            std::size_t ci = name_index(m.common_states, c, ctx);
            std::size_t pi = name_index(m.private_states, p, ctx);
            for (const auto& [sym, cell] : get_object(row, ctx).items()) {
                std::string sctx = ctx + "." + sym;
                auto& entry = m.delta_u[ci][pi][symbol_key(m.alphabet, sym, sctx)];
                bool nested = cell.is_object() && !cell.empty() &&
                              std::all_of(cell.items().begin(), cell.items().end(), [](const auto& kv) {
                                  return kv.key() == "zero" || kv.key() == "nonzero";
                              });
                if (nested) {
                    if (cell.contains("zero")) {
                        entry[0] = parse_universal_moves(m, cell["zero"], true, sctx + ".zero");
                    }
                    if (cell.contains("nonzero")) {
                        entry[1] = parse_universal_moves(m, cell["nonzero"], true, sctx + ".nonzero");
                    }
                }
                else {
                    entry[0] = parse_universal_moves(m, cell, true, sctx);
                    entry[1] = entry[0];
                }
            }
        }
    }
    pafa::normalize(m);
    return m;
}

json shape_json(const pafa::GameShape& g)
{
    json universal = json::array();
    for (std::size_t c = 0; c < g.common_states.size(); ++c) {
        for (std::size_t p = 0; p < g.private_states.size(); ++p) {
            if (g.universal[c][p]) {
                universal.push_back(json::array({g.common_states[c], g.private_states[p]}));
            }
        }
    }
    json de = json::object();
    for (std::size_t c = 0; c < g.common_states.size(); ++c) {
        if (g.delta_e[c].empty()) {
            continue;
        }
        json moves = json::object();
        for (const auto& mv : g.delta_e[c]) {
            moves[g.label_name(mv.label)] = g.common_states[mv.common];
        }
        de[g.common_states[c]] = std::move(moves);
    }
    return {{"common_states", g.common_states},
            {"private_states", g.private_states},
            {"universal", universal},
            {"gamma", g.gamma},
            {"delta_priv", g.delta_priv},
            {"initial", json::array({g.common_states[g.initial_common], g.private_states[g.initial_private]})},
            {"accept", g.common_states[g.accept]},
            {"reject", g.common_states[g.reject]},
            {"deltaE", de}};
}

json universal_moves_json(const pafa::GameShape& g, const std::vector<pafa::UniversalMove>& moves, bool counter)
{
    json out = json::object();
    for (const auto& mv : moves) {
        json t = json::array({g.common_states[mv.common], g.private_states[mv.priv]});
        if (counter) {
            t.push_back(mv.update);
        }
        out[g.label_name(mv.label)] = std::move(t);
    }
    return out;
}

json pafa_json(const pafa::PafaDescription& m)
{
    json j = shape_json(m);
    json du = json::object();
    for (std::size_t c = 0; c < m.common_states.size(); ++c) {
        for (std::size_t p = 0; p < m.private_states.size(); ++p) {
            json row = json::object();
            for (std::size_t i = 0; i < m.delta_u[c][p].size(); ++i) {
                if (!m.delta_u[c][p][i].empty()) {
                    row[m.alphabet.key(i)] = universal_moves_json(m, m.delta_u[c][p][i], false);
                }
            }
            if (!row.empty()) {
                du[m.common_states[c] + "|" + m.private_states[p]] = std::move(row);
            }
        }
    }
    j["deltaU"] = std::move(du);
    return j;
}

json pa1ca_json(const pafa::Pa1caDescription& m)
{
    json j = shape_json(m);
    json du = json::object();
    for (std::size_t c = 0; c < m.common_states.size(); ++c) {
        for (std::size_t p = 0; p < m.private_states.size(); ++p) {
            json row = json::object();
            for (std::size_t i = 0; i < m.delta_u[c][p].size(); ++i) {
                const auto& entry = m.delta_u[c][p][i];
                if (entry[0] == entry[1]) {
                    if (!entry[0].empty()) {
                        row[m.alphabet.key(i)] = universal_moves_json(m, entry[0], true);
                    }
                    continue;
                }
                json cell = json::object();
                if (!entry[0].empty()) {
                    cell["zero"] = universal_moves_json(m, entry[0], true);
                }
                if (!entry[1].empty()) {
                    cell["nonzero"] = universal_moves_json(m, entry[1], true);
                }
                row[m.alphabet.key(i)] = std::move(cell);
            }
            if (!row.empty()) {
                du[m.common_states[c] + "|" + m.private_states[p]] = std::move(row);
            }
        }
    }
    j["deltaU"] = std::move(du);
    return j;
}

// ---- QFA / AQFA -----------------------------------------------------------

qfa::QfaDescription parse_qfa(const json& j, Alphabet alphabet)
{
    check_keys(j, {"basis", "initial", "accept"}, {"ops"}, "qfa");
    auto m = qfa::make_qfa(std::move(alphabet), state_names(j["basis"], "qfa.basis"));
    m.initial = name_index(m.basis, get_string(j["initial"], "qfa.initial"), "qfa.initial");
    m.accept = flags_from_names(j["accept"], m.basis, "qfa.accept");
    if (j.contains("ops")) {
        for (const auto& [sym, op] : get_object(j["ops"], "qfa.ops").items()) {
            m.ops[symbol_key(m.alphabet, sym, "qfa.ops")] = get_superoperator(op, "qfa.ops." + sym);
        }
    }
    return m;
}

json qfa_json(const qfa::QfaDescription& m)
{
    json ops = json::object();
    const qfa::Superoperator identity{{qfa::CMatrix::identity(m.dimension())}};
    for (std::size_t i = 0; i < m.ops.size(); ++i) {
        if (!(m.ops[i] == identity)) {
            ops[m.alphabet.key(i)] = superoperator_json(m.ops[i]);
        }
    }
    return {{"basis", m.basis},
            {"initial", m.basis[m.initial]},
            {"accept", names_of(m.accept, m.basis)},
            {"ops", ops}};
}

qfa::AqfaDescription parse_aqfa(const json& j, Alphabet alphabet)
{
    check_keys(j, {"classical_states", "classical_initial", "classical_accept", "basis", "initial"},
               {"universal", "ops", "cdelta"}, "aqfa");
    auto m = qfa::make_aqfa(std::move(alphabet), state_names(j["classical_states"], "aqfa.classical_states"),
                            state_names(j["basis"], "aqfa.basis"));
    const auto& cs = m.classical_states;
    m.classical_initial = name_index(cs, get_string(j["classical_initial"], "aqfa.classical_initial"),
                                     "aqfa.classical_initial");
    m.classical_accept = flags_from_names(j["classical_accept"], cs, "aqfa.classical_accept");
    m.initial = name_index(m.basis, get_string(j["initial"], "aqfa.initial"), "aqfa.initial");
    if (j.contains("universal")) {
        m.universal = flags_from_names(j["universal"], cs, "aqfa.universal");
    }
    std::vector<std::vector<bool>> explicit_op(cs.size(), std::vector<bool>(m.alphabet.size() + 1, false));
    if (j.contains("ops")) {
        for (const auto& [key, op] : get_object(j["ops"], "aqfa.ops").items()) {
            std::string ctx = "aqfa.ops." + key;
            auto [s, sym] = split_pair(key, ctx);
            std::size_t si = name_index(cs, s, ctx);
            std::size_t i = symbol_key(m.alphabet, sym, ctx);
            m.ops[si][i] = get_superoperator(op, ctx);
            m.cdelta[si][i].assign(m.ops[si][i].elements.size(), cs.size());
            explicit_op[si][i] = true;
        }
    }
    if (j.contains("cdelta")) {
        for (const auto& [key, target] : get_object(j["cdelta"], "aqfa.cdelta").items()) {
            std::string ctx = "aqfa.cdelta." + key;
            auto first = key.find('|');
            auto last = key.rfind('|');
            if (first == std::string::npos || first == last) {
                throw SchemaError(ctx + ": key must be state|symbol|outcome");
            }
            std::size_t si = name_index(cs, key.substr(0, first), ctx);
            std::size_t i = symbol_key(m.alphabet, key.substr(first + 1, last - first - 1), ctx);
            std::size_t k = 0;
            try {
                std::size_t used = 0;
                k = std::stoul(key.substr(last + 1), &used);
                if (used != key.size() - last - 1) {
                    throw std::invalid_argument("trailing");
                }
            }
            catch (const std::exception&) {
                throw SchemaError(ctx + ": outcome must be a positive integer");
            }
            if (k == 0 || k > m.cdelta[si][i].size()) {
                throw SchemaError(ctx + ": outcome " + std::to_string(k) + " is not declared");
            }
            m.cdelta[si][i][k - 1] = name_index(cs, get_string(target, ctx), ctx);
        }
    }
    for (std::size_t s = 0; s < cs.size(); ++s) {
        for (std::size_t i = 0; i <= m.alphabet.size(); ++i) {
            for (std::size_t k = 0; k < m.cdelta[s][i].size(); ++k) {
                if (m.cdelta[s][i][k] == cs.size()) {
                    throw SchemaError("aqfa.cdelta: missing entry " + cs[s] + "|" + m.alphabet.key(i) + "|" +
                                      std::to_string(k + 1));
                }
            }
        }
    }
    return m;
}

json aqfa_json(const qfa::AqfaDescription& m)
{
    json ops = json::object();
    json cdelta = json::object();
    const qfa::Superoperator identity{{qfa::CMatrix::identity(m.dimension())}};
    for (std::size_t s = 0; s < m.classical_states.size(); ++s) {
        for (std::size_t i = 0; i <= m.alphabet.size(); ++i) {
            if (m.ops[s][i] == identity && m.cdelta[s][i] == std::vector<std::size_t>{s}) {
                continue;
            }
            std::string key = m.classical_states[s] + "|" + m.alphabet.key(i);
            ops[key] = superoperator_json(m.ops[s][i]);
            for (std::size_t k = 0; k < m.cdelta[s][i].size(); ++k) {
                cdelta[key + "|" + std::to_string(k + 1)] = m.classical_states[m.cdelta[s][i][k]];
            }
        }
    }
    return {{"classical_states", m.classical_states},
            {"universal", names_of(m.universal, m.classical_states)},
            {"classical_initial", m.classical_states[m.classical_initial]},
            {"classical_accept", names_of(m.classical_accept, m.classical_states)},
            {"basis", m.basis},
            {"initial", m.basis[m.initial]},
            {"ops", ops},
            {"cdelta", cdelta}};
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw SyntaxError(std::string("malformed JSON: ") + e.what());
    }
}

template <class Fn>
auto with_schema_errors(Fn&& fn)
{
    try {
        return fn();
    }
    catch (const json::exception& e) {
        throw SchemaError(std::string("schema error: ") + e.what());
    }
}

} // namespace

MachineDescription parse_machine_unchecked(std::string_view text)
{
    json j = parse_json(text);
    return with_schema_errors([&]() -> MachineDescription {
        check_keys(j, {"kind", "alphabet", "machine"}, {"format"}, "machine file");
        if (j.contains("format") && !(j["format"].is_number_integer() && j["format"].get<int>() == 1)) {
            throw SchemaError("machine file: unsupported format (expected 1)");
        }
        std::string kind = get_string(j["kind"], "kind");
        Alphabet alphabet = parse_alphabet(j["alphabet"]);
        const json& body = j["machine"];
        if (kind == "afa") {
            return {parse_afa(body, std::move(alphabet))};
        }
        if (kind == "a1ca") {
            return {parse_a1ca(body, std::move(alphabet))};
        }
        if (kind == "pafa") {
            return {parse_pafa(body, std::move(alphabet))};
        }
        if (kind == "pa1ca") {
            return {parse_pa1ca(body, std::move(alphabet))};
        }
        if (kind == "qfa") {
            return {parse_qfa(body, std::move(alphabet))};
        }
        if (kind == "aqfa") {
            return {parse_aqfa(body, std::move(alphabet))};
        }
        throw SchemaError("unknown machine kind \"" + kind + "\"");
    });
}

MachineDescription parse_machine(std::string_view text)
{
    MachineDescription m = parse_machine_unchecked(text);
    auto errs = validate(m);
    if (!errs.empty()) {
        throw ValidationError(errs);
    }
    return m;
}

std::vector<std::string> validate(const MachineDescription& m)
{
    return std::visit([](const auto& d) { return validate(d); }, m.payload);
}

std::string serialize_machine(const MachineDescription& m)
{
    json body = std::visit(
        [](const auto& d) -> json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, alt::AfaDescription>) {
                return afa_json(d);
            }
            else if constexpr (std::is_same_v<T, alt::A1caDescription>) {
                return a1ca_json(d);
            }
            else if constexpr (std::is_same_v<T, pafa::PafaDescription>) {
                return pafa_json(d);
            }
            else if constexpr (std::is_same_v<T, pafa::Pa1caDescription>) {
                return pa1ca_json(d);
            }
            else if constexpr (std::is_same_v<T, qfa::QfaDescription>) {
                return qfa_json(d);
            }
            else {
                return aqfa_json(d);
            }
        },
        m.payload);
    json top = {{"format", 1},
                {"kind", std::string(kind_name(m.kind()))},
                {"alphabet", alphabet_json(m.alphabet())},
                {"machine", std::move(body)}};
    return top.dump(2) + "\n";
}

tmc::TmDescription parse_tm(std::string_view text)
{
    json j = parse_json(text);
    auto m = with_schema_errors([&] {
        check_keys(j, {"states", "initial", "halting", "tape_alphabet", "start_symbol", "blank"}, {"delta", "format"},
                   "tm");
        auto states = state_names(j["states"], "tm.states");
        auto tape = state_names(j["tape_alphabet"], "tm.tape_alphabet");
        std::string initial = get_string(j["initial"], "tm.initial");
        std::string halting = get_string(j["halting"], "tm.halting");
        std::string start = get_string(j["start_symbol"], "tm.start_symbol");
        std::string blank = get_string(j["blank"], "tm.blank");
        name_index(states, initial, "tm.initial");
        name_index(states, halting, "tm.halting");
        name_index(tape, start, "tm.start_symbol");
        name_index(tape, blank, "tm.blank");
        auto tm = tmc::make_tm(states, tape, initial, halting, start, blank);
        if (j.contains("delta")) {
            for (const auto& [q, row] : get_object(j["delta"], "tm.delta").items()) {
                std::size_t qi = name_index(states, q, "tm.delta");
                for (const auto& [x, t] : get_object(row, "tm.delta." + q).items()) {
                    std::string ctx = "tm.delta." + q + "." + x;
                    std::size_t xi = name_index(tape, x, ctx);
                    if (!t.is_array() || t.size() != 3) {
                        throw SchemaError(ctx + ": expected [state, symbol, \"L\"|\"R\"]");
                    }
                    std::string dir = get_string(t[2], ctx);
                    if (dir != "L" && dir != "R") {
                        throw SchemaError(ctx + ": direction must be \"L\" or \"R\"");
                    }
                    tm.delta[qi][xi] = tmc::TmTransition{name_index(states, get_string(t[0], ctx), ctx),
                                                         name_index(tape, get_string(t[1], ctx), ctx),
                                                         dir == "L" ? tmc::Direction::left : tmc::Direction::right};
                }
            }
        }
        return tm;
    });
    auto errs = tmc::validate(m);
    if (!errs.empty()) {
        throw ValidationError(errs);
    }
    return m;
}

std::string serialize_tm(const tmc::TmDescription& m)
{
    json delta = json::object();
    for (std::size_t q = 0; q < m.states.size(); ++q) {
        json row = json::object();
        for (std::size_t x = 0; x < m.tape_alphabet.size(); ++x) {
            if (const auto& t = m.delta[q][x]) {
                row[m.tape_alphabet[x]] = json::array(
                    {m.states[t->state], m.tape_alphabet[t->write], t->move == tmc::Direction::left ? "L" : "R"});
            }
        }
        if (!row.empty()) {
            delta[m.states[q]] = std::move(row);
        }
    }
    json top = {{"states", m.states},
                {"initial", m.states[m.initial]},
                {"halting", m.states[m.halting]},
                {"tape_alphabet", m.tape_alphabet},
                {"start_symbol", m.tape_alphabet[m.start_symbol]},
                {"blank", m.tape_alphabet[m.blank]},
                {"delta", delta}};
    return top.dump(2) + "\n";
}

} // namespace rtalt::core
