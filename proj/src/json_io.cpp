#include "modcat/json_io.hpp"

namespace modcat {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) fail(errc::bad_input, what);
}

long long get_int(const Json& j, const char* what) {
    require(j.is_number_integer(), std::string(what) + " must be an integer");
    return j.get<long long>();
}

std::vector<long long> get_int_vec(const Json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be an array");
    std::vector<long long> out;
    for (const auto& v : j) out.push_back(get_int(v, what));
    return out;
}

std::string elt_key(const AbElt& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s;
}

AbElt elt_from_key(const std::string& s, long long rank) {
    AbElt out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            require(!cur.empty(), "malformed element tuple");
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            require(c == '-' || (c >= '0' && c <= '9'), "malformed element tuple");
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    require((long long)out.size() == rank, "element tuple of wrong rank");
    return out;
}

} // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Json exponent_to_json(const RootExponent& q) { return q.str(); }

RootExponent exponent_from_json(const Json& j) {
    require(j.is_string(), "exponent must be an \"a/b\" string");
    return RootExponent::parse(j.get<std::string>());
}

Json cyclo_to_json(const CycloNumber& c) {
    if (auto r = c.try_rational()) return r->str();
    Json out;
    out["conductor"] = c.conductor();
    Json coeffs = Json::array();
    for (const auto& co : c.coeffs()) coeffs.push_back(co.str());
    out["coeffs"] = coeffs;
    return out;
}

CycloNumber cyclo_from_json(const Json& j) {
    if (j.is_string()) {
        Rational r = Rational::parse(j.get<std::string>());
        return CycloNumber(r);
    }
    require(j.is_object() && j.contains("conductor") && j.contains("coeffs"),
            "cyclotomic must be \"a/b\" or {conductor, coeffs}");
    long long n = get_int(j["conductor"], "conductor");
    std::vector<Rational> coeffs;
    for (const auto& v : j["coeffs"]) {
        require(v.is_string(), "coefficients must be \"a/b\" strings");
        coeffs.push_back(Rational::parse(v.get<std::string>()));
    }
    return CycloNumber::from_coeffs(n, std::move(coeffs));
}

Json finab_to_json(const FinAbGroup& g) { return Json{{"cyclic", g.orders()}}; }

FinAbGroup finab_from_json(const Json& j) {
    require(j.is_object() && j.contains("cyclic"), "abelian group must be {\"cyclic\":[...]}");
    return FinAbGroup(get_int_vec(j["cyclic"], "cyclic factors"));
}

Json group_to_json(const FiniteGroup& g) {
    Json table = Json::array();
    for (long long i = 0; i < g.size(); ++i) {
        Json row = Json::array();
        for (long long k = 0; k < g.size(); ++k) row.push_back(g.mul(i, k));
        table.push_back(row);
    }
    return Json{{"table", table}};
}

FiniteGroup group_from_json(const Json& j) {
    require(j.is_object(), "group must be an object");
    if (j.contains("cyclic") && j["cyclic"].is_number_integer())
        return FiniteGroup::cyclic(get_int(j["cyclic"], "cyclic order"));
    if (j.contains("table")) {
        std::vector<std::vector<long long>> table;
        for (const auto& row : j["table"]) table.push_back(get_int_vec(row, "table row"));
        return FiniteGroup::from_table(table);
    }
    if (j.contains("permutations")) {
        std::vector<std::vector<long long>> gens;
        for (const auto& row : j["permutations"])
            gens.push_back(get_int_vec(row, "permutation"));
        return FiniteGroup::from_permutations(gens);
    }
    fail(errc::bad_input, "group must have \"table\", \"permutations\" or \"cyclic\"");
}

Json metric_to_json(const MetricGroup& m) {
    Json q = Json::object();
    for (long long i = 0; i < m.group().size(); ++i)
        q[elt_key(m.group().element(i))] = m.form.values[i].str();
    return Json{{"schema", "metric-group/1"}, {"group", finab_to_json(m.group())}, {"q", q}};
}

MetricGroup metric_from_json(const Json& j) {
    require(j.is_object() && j.contains("group") && j.contains("q"),
            "metric group must have group and q");
    FinAbGroup g = finab_from_json(j["group"]);
    std::vector<RootExponent> vals(g.size());
    std::vector<char> seen(g.size(), 0);
    require(j["q"].is_object(), "q must map element tuples to exponents");
    for (auto it = j["q"].begin(); it != j["q"].end(); ++it) {
        AbElt e = g.reduce(elt_from_key(it.key(), g.rank()));
        long long idx = g.index_of(e);
        require(!seen[idx], "duplicate q entry");
        seen[idx] = 1;
        vals[idx] = exponent_from_json(it.value());
    }
    for (long long i = 0; i < g.size(); ++i) require(seen[i], "q table is not total");
    return validate_metric(g, std::move(vals));
}

Json modular_data_to_json(const ModularData& d, bool include_fusion) {
    Json out;
    out["schema"] = "modular-data/1";
    out["labels"] = d.labels;
    out["dims"] = d.dims;
    Json tw = Json::array();
    for (const auto& q : d.twists) tw.push_back(q.str());
    out["twists"] = tw;
    Json s = Json::array();
    for (const auto& row : d.s) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(cyclo_to_json(v));
        s.push_back(r);
    }
    out["S"] = s;
    if (include_fusion && d.fusion.has_value()) {
        if (d.fusion->pointed_like)
            out["fusion"] = Json{{"product", d.fusion->product}};
        else
            out["fusion"] = Json{{"dense", d.fusion->dense}};
    }
    return out;
}

ModularData modular_data_from_json(const Json& j) {
    require(j.is_object() && j.contains("dims") && j.contains("twists") && j.contains("S"),
            "modular data must have dims, twists, S");
    ModularData d;
    if (j.contains("labels"))
        for (const auto& l : j["labels"]) d.labels.push_back(l.get<std::string>());
    d.dims = get_int_vec(j["dims"], "dims");
    if (d.labels.empty())
        for (size_t i = 0; i < d.dims.size(); ++i) d.labels.push_back(std::to_string(i));
    for (const auto& t : j["twists"]) d.twists.push_back(exponent_from_json(t));
    for (const auto& row : j["S"]) {
        std::vector<CycloNumber> r;
        for (const auto& v : row) r.push_back(cyclo_from_json(v));
        d.s.push_back(std::move(r));
    }
    d.validate_basic();
    return d;
}

Json qz3_to_json(const QzCocycle3& w) {
    long long n = w.gamma.size();
    Json out = Json::array();
    for (long long a = 0; a < n; ++a) {
        Json pa = Json::array();
        for (long long b = 0; b < n; ++b) {
            Json pb = Json::array();
            for (long long c = 0; c < n; ++c) pb.push_back(w.at(a, b, c).str());
            pa.push_back(pb);
        }
        out.push_back(pa);
    }
    return Json{{"schema", "cochain-qz/1"}, {"degree", 3}, {"values", out}};
}

QzCocycle3 qz3_from_json(const FiniteGroup& gamma, const Json& j) {
    require(j.is_object() && j.contains("values"), "cocycle must have values");
    const Json& v = j["values"];
    long long n = gamma.size();
    QzCocycle3 w(gamma);
    require((long long)v.size() == n, "cocycle table of wrong size");
    for (long long a = 0; a < n; ++a) {
        require((long long)v[a].size() == n, "cocycle table of wrong size");
        for (long long b = 0; b < n; ++b) {
            require((long long)v[a][b].size() == n, "cocycle table of wrong size");
            for (long long c = 0; c < n; ++c) w.at(a, b, c) = exponent_from_json(v[a][b][c]);
        }
    }
    w.validate();
    return w;
}

namespace {

Json cochain_values_json(const Cochain& c, long long degree, long long base_index) {
    if (degree == 0) {
        const AbElt& v = c.value(base_index);
        return Json(v);
    }
    long long n = c.gamma().size();
    long long stride = 1;
    for (long long i = 1; i < degree; ++i) stride *= n;
    Json out = Json::array();
    for (long long g = 0; g < n; ++g)
        out.push_back(cochain_values_json(c, degree - 1, base_index + g * stride));
    return out;
}

void cochain_values_parse(Cochain& c, const Json& j, long long degree, long long base_index) {
    if (degree == 0) {
        c.set_value(base_index, get_int_vec(j, "module value"));
        return;
    }
    long long n = c.gamma().size();
    require((long long)j.size() == n, "cochain table of wrong size");
    long long stride = 1;
    for (long long i = 1; i < degree; ++i) stride *= n;
    for (long long g = 0; g < n; ++g)
        cochain_values_parse(c, j[g], degree - 1, base_index + g * stride);
}

} // namespace

Json cochain_to_json(const Cochain& c) {
    return Json{{"schema", "cochain-mod/1"},
                {"degree", c.degree()},
                {"module", finab_to_json(c.module().module())},
                {"values", cochain_values_json(c, c.degree(), 0)}};
}

Cochain cochain_from_json(const AbAction& module, long long degree, const Json& j) {
    require(j.is_object() && j.contains("values"), "cochain must have values");
    if (j.contains("degree"))
        require(get_int(j["degree"], "degree") == degree, "cochain degree mismatch");
    Cochain c(module, degree);
    cochain_values_parse(c, j["values"], degree, 0);
    check(c.is_normalized(), errc::bad_input, "cochain must be normalized");
    return c;
}

Json action_to_json(const AbAction& a) {
    Json maps = Json::array();
    for (long long g = 0; g < a.group().size(); ++g) maps.push_back(a.map(g).matrix());
    return Json{{"cyclic", a.module().orders()}, {"action", maps}};
}

AbAction action_from_json(const FiniteGroup& gamma, const Json& j) {
    FinAbGroup m = finab_from_json(j);
    if (!j.contains("action")) return AbAction(gamma, m);
    const Json& maps = j["action"];
    require((long long)maps.size() == gamma.size(), "one action matrix per group element");
    std::vector<AbHom> homs;
    for (const auto& mat : maps) {
        std::vector<std::vector<long long>> rows;
        for (const auto& r : mat) rows.push_back(get_int_vec(r, "action matrix row"));
        homs.emplace_back(m, m, std::move(rows));
    }
    return AbAction(gamma, m, std::move(homs));
}

Json local_system_to_json(const LocalSystemDatum& l) {
    Json out;
    out["kind"] = "explicit";
    out["c_order"] = l.extension.sub.module().orders()[0];
    out["chi"] = l.chi_gen.str();
    out["mid"] = action_to_json(l.extension.mid);
    out["n"] = action_to_json(l.extension.quot);
    out["incl"] = l.extension.incl.matrix();
    out["proj"] = l.extension.proj.matrix();
    Json sec = Json::array();
    for (const auto& s : l.extension.section) sec.push_back(s);
    out["section"] = sec;
    return out;
}

LocalSystemDatum local_system_from_json(const FiniteGroup& gamma, const Json& j) {
    require(j.is_object() && j.contains("kind"), "local system must have a kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "cyclic")
        return cyclic_local_system(gamma, get_int(j["a"], "a"), get_int(j["b"], "b"));
    if (kind == "trace") {
        FiniteField f(get_int(j["p"], "p"), get_int(j["m"], "m"));
        return trace_local_system(gamma, f);
    }
    if (kind == "induced")
        return induced_local_system(gamma, get_int(j["p"], "p"), get_int(j["n"], "n"));
    if (kind == "split") {
        AbAction n_action = action_from_json(gamma, j["n"]);
        return split_local_system(get_int(j["c"], "c"), n_action);
    }
    require(kind == "explicit", "unknown local system kind");
    AbAction mid = action_from_json(gamma, j["mid"]);
    AbAction quot = action_from_json(gamma, j["n"]);
    FinAbGroup c({get_int(j["c_order"], "c_order")});
    std::vector<std::vector<long long>> incl_m, proj_m;
    for (const auto& r : j["incl"]) incl_m.push_back(get_int_vec(r, "incl row"));
    for (const auto& r : j["proj"]) proj_m.push_back(get_int_vec(r, "proj row"));
    std::vector<AbElt> section;
    for (const auto& s : j["section"]) section.push_back(get_int_vec(s, "section entry"));
    LocalSystemDatum out{SESData{AbAction(gamma, c), mid, quot,
                                 AbHom(c, mid.module(), incl_m),
                                 AbHom(mid.module(), quot.module(), proj_m),
                                 std::move(section)},
                         RootExponent::parse(j["chi"].get<std::string>())};
    out.extension.validate();
    out.validate();
    return out;
}

Json outer_action_to_json(const OuterActionData& d) {
    Json out;
    out["schema"] = "outer-action/1";
    out["h"] = group_to_json(d.base.h);
    out["n"] = Json{{"cyclic", d.base.n.orders()}, {"to_h", d.base.n_to_h}};
    out["gamma"] = group_to_json(d.gamma);
    out["local_system"] = local_system_to_json(d.loc);
    Json reps = Json::array();
    for (const auto& r : d.reps) reps.push_back(r.images);
    out["reps"] = reps;
    return out;
}

OuterActionData outer_action_from_json(const Json& j) {
    require(j.is_object() && j.contains("h") && j.contains("n") && j.contains("gamma") &&
                j.contains("local_system") && j.contains("reps"),
            "outer action must have h, n, gamma, local_system, reps");
    OuterActionData d;
    d.base.h = group_from_json(j["h"]);
    d.base.n = FinAbGroup(get_int_vec(j["n"]["cyclic"], "n cyclic factors"));
    d.base.n_to_h = get_int_vec(j["n"]["to_h"], "n to_h");
    d.base.h_to_n.assign(d.base.h.size(), -1);
    for (long long i = 0; i < (long long)d.base.n_to_h.size(); ++i) {
        require(d.base.n_to_h[i] >= 0 && d.base.n_to_h[i] < d.base.h.size(),
                "n to_h out of range");
        d.base.h_to_n[d.base.n_to_h[i]] = i;
    }
    d.base.validate();
    d.gamma = group_from_json(j["gamma"]);
    d.loc = local_system_from_json(d.gamma, j["local_system"]);
    for (const auto& r : j["reps"])
        d.reps.emplace_back(d.base.h, d.base.h, get_int_vec(r, "rep images"));
    d.validate();
    return d;
}

Json error_to_json(const Error& e) {
    return Json{{"error", Json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

} // namespace modcat
