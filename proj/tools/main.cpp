#include "intervalia/construct2.hpp"
#include "intervalia/error.hpp"
#include "intervalia/explorer.hpp"
#include "intervalia/height3.hpp"
#include "intervalia/json_io.hpp"
#include "intervalia/kcount.hpp"
#include "intervalia/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace intervalia;
using nlohmann::json;

namespace {

struct Io {
    std::string out;

    void emit(const std::string& text) const {
        if (out.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream f(out, std::ios::binary);
            if (!f) fail("IoError", "cannot open output file " + out);
            f << text;
        }
    }
    void emit(const json& j) const { emit(j.dump(2)); }
};

IntervalOrder load_order(const std::string& ascent, const std::string& orderFile) {
    if (!ascent.empty()) return order_from_ascent(parse_ascent_sequence(ascent));
    if (!orderFile.empty()) {
        std::ifstream f(orderFile);
        if (!f) fail("IoError", "cannot open " + orderFile);
        json j;
        f >> j;
        IntervalOrder p = order_from_json(j);
        require_interval_order(p);
        return p;
    }
    fail("Usage", "need --ascent or --order-json");
}

json analyze_order(const IntervalOrder& p, int jobs, bool allowLarge, bool withTwoCount) {
    json out{{"schema", kSchema}, {"n", p.n}};
    CanonicalRepresentation canon = canonical_representation(p);
    out["magnitude"] = canon.m;
    out["height"] = height(p);
    out["depth"] = depth_order(p);
    out["four_plus_one_free"] = !find_chain_plus_one(p, 4).has_value();
    out["semiorder"] = !find_chain_plus_one(p, 3).has_value();
    PPGraph g = pp_graph(p);
    json arcs = json::array();
    for (auto [pith, peel] : g.arcs) arcs.push_back(json::array({pith + 1, peel + 1}));
    out["pp_arcs"] = arcs;
    auto springs = find_springs(p);
    out["springs"] = springs.size();
    json sw = json::array();
    for (const auto& s : springs) {
        json roles = json::array();
        for (int e : s.roles) roles.push_back(e + 1);
        sw.push_back(json{{"roles", roles}, {"dual", s.dual}});
    }
    out["spring_witnesses"] = sw;
    out["canonical"] = family_to_json(canon.family());
    if (withTwoCount) {
        KCountVerdict v = is_k_count_order(p, 2, jobs, allowLarge);
        out["two_count"] = v.yes;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intervalia: interval orders, permutations and k-count representations"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "json|text|svg")->capture_default_str();
    Io io;
    app.add_option("--out", io.out, "write output to FILE");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for searches");
    bool allowLarge = false;
    app.add_flag("--allow-large", allowLarge, "override search size guards");

    // parse
    auto* cparse = app.add_subcommand("parse", "validate an ascent sequence / permutation / order");
    std::string pAscent, pPerm, pOrderFile;
    cparse->add_option("--ascent", pAscent, "comma separated ascent sequence");
    cparse->add_option("--perm", pPerm, "permutation in one-line notation");
    cparse->add_option("--order-json", pOrderFile, "order JSON file");

    // analyze
    auto* canalyze = app.add_subcommand("analyze", "structural analysis of an interval order");
    std::string aAscent, aOrderFile;
    bool aTwoCount = false;
    canalyze->add_option("--ascent", aAscent, "comma separated ascent sequence");
    canalyze->add_option("--order-json", aOrderFile, "order JSON file");
    canalyze->add_flag("--two-count", aTwoCount, "also run the 2-count oracle");

    // twocount-perm
    auto* cperm = app.add_subcommand("twocount-perm", "2-count representation of a depth-2 permutation");
    std::string tpPerm;
    cperm->add_option("perm", tpPerm, "permutation, e.g. \"[1,3,4,5,2]\"")->required();

    // twocount-order
    auto* corder = app.add_subcommand("twocount-order", "2-count representation of a height-3 order");
    std::string toAscent, toOrderFile;
    corder->add_option("--ascent", toAscent, "comma separated ascent sequence");
    corder->add_option("--order-json", toOrderFile, "order JSON file");

    // kcount
    auto* ckcount = app.add_subcommand("kcount", "k-count feasibility oracle");
    std::string kPerm, kAscent, kOrderFile;
    int kk = 2;
    ckcount->add_option("--perm", kPerm, "permutation");
    ckcount->add_option("--ascent", kAscent, "ascent sequence");
    ckcount->add_option("--order-json", kOrderFile, "order JSON file");
    ckcount->add_option("--k", kk, "number of lengths")->capture_default_str();

    // search
    auto* csearch = app.add_subcommand("search", "enumeration searches");
    std::string what = "non2count-orders";
    int maxN = 8;
    csearch->add_option("--what", what, "non2count-orders|non3count-perms|conjecture")
        ->capture_default_str();
    csearch->add_option("--max-n", maxN, "largest size to enumerate")->capture_default_str();

    // render
    auto* crender = app.add_subcommand("render", "SVG rendering");
    std::string rAscent, rOrderFile, rRepFile, target = "representation";
    crender->add_option("--ascent", rAscent, "ascent sequence");
    crender->add_option("--order-json", rOrderFile, "order JSON file");
    crender->add_option("--rep-json", rRepFile, "representation JSON file");
    crender->add_option("--target", target, "representation|hasse|ppgraph")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cparse) {
            json out{{"schema", kSchema}, {"valid", true}};
            if (!pAscent.empty()) {
                AscentSequence s = parse_ascent_sequence(pAscent);
                out["kind"] = "ascent";
                out["n"] = s.size();
                out["entries"] = s.entries;
            } else if (!pPerm.empty()) {
                Permutation pi = parse_permutation(pPerm);
                out["kind"] = "permutation";
                out["n"] = pi.size();
                out["depth"] = perm_depth(pi);
            } else {
                IntervalOrder p = load_order("", pOrderFile);
                require_interval_order(p);
                out["kind"] = "order";
                out["n"] = p.n;
            }
            io.emit(out);
        } else if (*canalyze) {
            IntervalOrder p = load_order(aAscent, aOrderFile);
            json out = analyze_order(p, jobs, allowLarge, aTwoCount);
            if (format == "text") {
                std::string t;
                t += "n=" + std::to_string(out["n"].get<int>());
                t += " magnitude=" + std::to_string(out["magnitude"].get<int>());
                t += " height=" + std::to_string(out["height"].get<int>());
                t += " depth=" + std::to_string(out["depth"].get<int>());
                t += std::string(" 4+1-free=") + (out["four_plus_one_free"].get<bool>() ? "yes" : "no");
                t += " springs=" + std::to_string(out["springs"].get<size_t>());
                io.emit(t);
            } else {
                io.emit(out);
            }
        } else if (*cperm) {
            Permutation pi = parse_permutation(tpPerm);
            TwoCountRep rep = two_count_permutation(pi);
            json out{{"schema", kSchema},
                     {"perm", pi.str()},
                     {"alpha", rat_str(rep.alpha)},
                     {"beta", rat_str(rep.beta)},
                     {"representation", family_to_json(rep.family)}};
            io.emit(out);
        } else if (*corder) {
            IntervalOrder p = load_order(toAscent, toOrderFile);
            Height3Result res = two_count_height3(p);
            json out{{"schema", kSchema},
                     {"alpha", rat_str(res.alpha)},
                     {"beta", rat_str(res.beta)},
                     {"representation", family_to_json(res.family)}};
            io.emit(out);
        } else if (*ckcount) {
            if (!kPerm.empty()) {
                Permutation pi = parse_permutation(kPerm);
                KCountVerdict v = is_k_count_perm(pi, kk, jobs);
                io.emit(verdict_to_json(v, kk));
            } else {
                IntervalOrder p = load_order(kAscent, kOrderFile);
                KCountVerdict v = is_k_count_order(p, kk, jobs, allowLarge);
                io.emit(verdict_to_json(v, kk));
            }
        } else if (*csearch) {
            SearchReport rep;
            if (what == "non2count-orders")
                rep = search_non_2count_orders(maxN, true, true, jobs, allowLarge);
            else if (what == "non3count-perms")
                rep = search_non_3count_perms(maxN, jobs);
            else if (what == "conjecture")
                rep = sweep_conjecture(maxN, jobs);
            else
                fail("Usage", "unknown search " + what);
            io.emit(report_to_json(rep));
        } else if (*crender) {
            RenderOptions opt;
            std::string svg;
            if (target == "representation") {
                IntervalFamily f;
                if (!rRepFile.empty()) {
                    std::ifstream in(rRepFile);
                    if (!in) fail("IoError", "cannot open " + rRepFile);
                    json j;
                    in >> j;
                    f = family_from_json(j);
                } else {
                    IntervalOrder p = load_order(rAscent, rOrderFile);
                    f = canonical_representation(p).family();
                }
                svg = render_representation(f, opt);
            } else if (target == "hasse") {
                svg = render_hasse(load_order(rAscent, rOrderFile), opt);
            } else if (target == "ppgraph") {
                svg = render_pp(load_order(rAscent, rOrderFile), opt);
            } else {
                fail("UnsupportedTarget", "unknown render target " + target);
            }
            io.emit(svg);
        }
    } catch (const Error& e) {
        if (e.code() == "Usage") {
            std::cerr << "usage error: " << e.what() << "\n";
            return 2;
        }
        json err{{"schema", kSchema}, {"error", e.code()}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"schema", kSchema}, {"error", "Internal"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}
