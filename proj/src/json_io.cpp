#include "intervalia/json_io.hpp"

#include "intervalia/error.hpp"

namespace intervalia {

using nlohmann::json;

json order_to_json(const IntervalOrder& p) {
    json rel = json::array();
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
            if (p.less(x, y)) rel.push_back(json::array({x + 1, y + 1}));
    return json{{"schema", kSchema}, {"n", p.n}, {"relation", rel}};
}

IntervalOrder order_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("relation")) fail("BadOrder", "order JSON needs n and relation");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("relation"))
        pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    IntervalOrder p = make_order(n, pairs);
    // the relation list is taken literally; require transitivity up front
    std::string why;
    if (!is_partial_order(p, &why)) fail("NotAPartialOrder", why);
    return p;
}

json family_to_json(const IntervalFamily& f) {
    json intervals = json::array();
    for (int x = 0; x < f.size(); ++x)
        intervals.push_back(json{{"elem", x + 1}, {"l", rat_str(f.left(x))}, {"r", rat_str(f.right(x))}});
    return json{{"schema", kSchema}, {"intervals", intervals}};
}

IntervalFamily family_from_json(const json& j) {
    if (!j.contains("intervals")) fail("BadFamily", "representation JSON needs intervals");
    const auto& arr = j.at("intervals");
    IntervalFamily f;
    f.iv.resize(arr.size());
    std::vector<char> seen(arr.size(), 0);
    for (const auto& e : arr) {
        int idx = e.at("elem").get<int>();
        if (idx < 1 || idx > static_cast<int>(arr.size()) || seen[idx - 1])
            fail("BadFamily", "bad or duplicate elem id");
        seen[idx - 1] = 1;
        Rat l = parse_rat(e.at("l").get<std::string>());
        Rat r = parse_rat(e.at("r").get<std::string>());
        if (l > r) fail("BadFamily", "interval with l > r");
        f.iv[idx - 1] = {l, r};
    }
    return f;
}

json coloring_to_json(const SortedColoring& c) {
    json classes = json::array();
    for (const auto& cl : c.classes) classes.push_back(cl);
    return json{{"schema", kSchema}, {"classes", classes}};
}

SortedColoring coloring_from_json(const json& j) {
    if (!j.contains("classes")) fail("BadColoring", "coloring JSON needs classes");
    SortedColoring c;
    for (const auto& cl : j.at("classes")) {
        std::vector<int> v;
        for (const auto& x : cl) v.push_back(x.get<int>());
        c.classes.push_back(std::move(v));
    }
    return c;
}

json linsys_to_json(const LinearSystem& sys) {
    json rows = json::array();
    for (const Row& r : sys.rows) {
        json a = json::array();
        for (const Rat& c : r.a) a.push_back(rat_str(c));
        const char* rel = r.rel == Rel::Less ? "<" : r.rel == Rel::LessEq ? "<=" : "=";
        rows.push_back(json{{"a", a}, {"rel", rel}, {"b", rat_str(r.b)}});
    }
    return json{{"schema", kSchema}, {"vars", sys.vars}, {"rows", rows}};
}

json verdict_to_json(const KCountVerdict& v, int k) {
    json out{{"schema", kSchema},
             {"answer", v.yes ? "yes" : "no"},
             {"k", k},
             {"colorings_tried", v.coloringsTried}};
    if (v.yes) {
        out["k_used"] = v.k_used;
        out["coloring"] = v.coloring;
        out["witness"] = family_to_json(v.witness);
    }
    return out;
}

json report_to_json(const SearchReport& r) {
    json out{{"schema", kSchema}, {"what", r.what},     {"n_max", r.nMax},
             {"jobs", r.jobs},    {"seconds", r.seconds}};
    json per_n = json::array();
    for (size_t n = 1; n < r.enumerated.size(); ++n)
        per_n.push_back(json{{"n", n}, {"enumerated", r.enumerated[n]}, {"tested", r.filtered[n]}});
    out["per_n"] = per_n;
    out["witnesses"] = r.witnesses;
    return out;
}

} // namespace intervalia
