#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tfx/bounds.hpp"
#include "tfx/canonical.hpp"
#include "tfx/constructions.hpp"
#include "tfx/report.hpp"
#include "tfx/verify.hpp"

namespace {

using tfx::Json;

// Exit codes: 0 success, 2 usage/parse, 3 capacity, 4 bound violated.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitBoundViolated = 4;

struct CommonOpts {
    std::string out;
    std::string format = "json";
    int jobs = 1;
    int ceiling = 0; // 0 = default / TFX_CEILING
    unsigned long long seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_jobs = true) {
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "g6"}));
    if (with_jobs) cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--ceiling", o.ceiling, "enumeration ceiling override");
    cmd->add_option("--seed", o.seed, "random seed for property-test commands");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw tfx::DomainError("cannot open output file: " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

Json config_json(const CommonOpts& o) {
    return Json{{"jobs", o.jobs},
                {"ceiling", o.ceiling > 0 ? o.ceiling : tfx::default_enumerate_ceiling()},
                {"seed", o.seed},
                {"format", o.format}};
}

tfx::SearchLimits limits_of(const CommonOpts& o) {
    tfx::SearchLimits lim;
    if (o.ceiling > 0) {
        lim.enumerate_ceiling = o.ceiling;
        lim.max_edges_ceiling = std::max(lim.max_edges_ceiling, o.ceiling);
    }
    lim.jobs = o.jobs;
    return lim;
}

std::vector<tfx::Graph> read_inputs(const std::string& path) {
    if (path.empty() || path == "-") return tfx::read_graph6_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw tfx::DomainError("cannot open input file: " + path);
    return tfx::read_graph6_stream(f);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& name, int n, int r, bool all, const CommonOpts& o) {
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw tfx::DomainError("cannot open output file: " + o.out);
    }
    std::ostream& out = o.out.empty() ? std::cout : file;

    if (name == "g-family") {
        // Streamed: large n has tens of thousands of members.
        long long emitted = 0;
        tfx::g_family_all(n, [&](const tfx::Graph& g, const tfx::GFamilyParams&) {
            if (all || emitted == 0) {
                out << tfx::to_graph6(g) << '\n';
                ++emitted;
            }
        });
        if (emitted == 0) throw tfx::DomainError("g-family: no member exists for this n");
        return kExitOk;
    }

    tfx::Graph g;
    if (name == "grotzsch") {
        g = tfx::grotzsch();
    } else if (name == "turan") {
        g = tfx::turan_graph(n, r);
    } else if (name == "h0") {
        g = tfx::h0(n);
    } else if (name == "hn") {
        g = tfx::h_n(n);
    } else if (name == "cycle") {
        g = tfx::cycle(n);
    } else if (name == "star") {
        g = tfx::star(r);
    } else {
        throw tfx::DomainError("unknown construction: " + name);
    }
    out << tfx::to_graph6(g) << '\n';
    return kExitOk;
}

int cmd_inv(const std::string& input, const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<tfx::Graph> graphs = read_inputs(input);
    Json rep = tfx::make_envelope("inv", config_json(o));
    bool capacity = false;
    for (const auto& g : graphs) {
        tfx::InvariantsReport ir = tfx::invariants_report(g);
        capacity = capacity || ir.capacity_hit;
        rep["items"].push_back(std::move(ir.item));
    }
    rep["summary"] = Json{{"graphs", graphs.size()}, {"partial", capacity}};
    rep["wall_ms"] = ms_since(t0);
    emit(o, rep.dump(2));
    return capacity ? kExitCapacity : kExitOk;
}

int cmd_bound(const std::string& id_name, int n, int from, int to, int r, bool has_r,
              const CommonOpts& o) {
    auto id = tfx::bound_from_name(id_name);
    if (!id) throw tfx::DomainError("unknown bound id: " + id_name);
    if (tfx::bound_takes_r(*id) && !has_r) throw tfx::DomainError("bound brouwer requires --r");
    int lo = from > 0 ? from : n;
    int hi = to > 0 ? to : n;
    if (lo <= 0 || hi < lo) throw tfx::DomainError("bound: give --n or --from/--to");

    std::optional<long long> rr = has_r ? std::optional<long long>(r) : std::nullopt;
    if (o.format == "csv") {
        std::ostringstream text;
        text << "bound,n,r,value\n";
        for (int i = lo; i <= hi; ++i)
            text << id_name << ',' << i << ',' << (has_r ? std::to_string(r) : "") << ','
                 << tfx::bound_value(*id, i, rr) << '\n';
        emit(o, text.str());
        return kExitOk;
    }
    if (o.format == "json" && (from > 0 || to > 0)) {
        Json rep = tfx::make_envelope("bound", config_json(o));
        for (int i = lo; i <= hi; ++i) {
            Json item{{"bound", id_name}, {"n", i}, {"value", tfx::bound_value(*id, i, rr)}};
            if (has_r) item["r"] = r;
            rep["items"].push_back(std::move(item));
        }
        rep["summary"] = Json{{"count", hi - lo + 1}};
        emit(o, rep.dump(2));
        return kExitOk;
    }
    emit(o, std::to_string(tfx::bound_value(*id, lo, rr)));
    return kExitOk;
}

int cmd_search(int n, const std::string& pred_text, const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    tfx::Predicate pred = tfx::Predicate::parse(pred_text);
    tfx::EnumStats stats;
    std::vector<std::string> lines = tfx::enumerate_collect(n, pred, &stats, limits_of(o));
    if (o.format == "g6") {
        std::ostringstream text;
        for (const auto& l : lines) text << l << '\n';
        emit(o, text.str());
        return kExitOk;
    }
    Json rep = tfx::make_envelope("search", config_json(o));
    rep["config"]["n"] = n;
    rep["config"]["pred"] = pred.to_string();
    Json item{{"n", n}, {"predicate", pred.to_string()}, {"stats", tfx::to_json(stats)}};
    item["graphs"] = lines;
    rep["items"].push_back(std::move(item));
    rep["summary"] = Json{{"classes", stats.emitted}};
    rep["wall_ms"] = ms_since(t0);
    emit(o, rep.dump(2));
    return kExitOk;
}

int cmd_verify(const std::string& bound_name_text, int from, int to, const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto id = tfx::bound_from_name(bound_name_text);
    if (!id) throw tfx::DomainError("unknown bound id: " + bound_name_text);
    std::vector<tfx::SearchReport> reports = tfx::verify_theorem(*id, from, to, limits_of(o));

    Json rep = tfx::make_envelope("verify", config_json(o));
    rep["config"]["bound"] = bound_name_text;
    rep["config"]["from"] = from;
    rep["config"]["to"] = to;
    bool capacity = false;
    Json verdicts = Json::object();
    for (const auto& r : reports) {
        capacity = capacity || r.capacity_hit;
        std::string v = tfx::verdict_name(r.verdict);
        verdicts[v] = (verdicts.contains(v) ? verdicts[v].get<int>() : 0) + 1;
        rep["items"].push_back(tfx::to_json(r));
    }
    rep["summary"] = Json{{"verdicts", verdicts}, {"partial", capacity}};
    rep["wall_ms"] = ms_since(t0);
    emit(o, rep.dump(2));
    return tfx::verify_exit_code(reports);
}

int cmd_bipartize(const std::string& g6, const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    tfx::Graph g = tfx::from_graph6(g6);
    tfx::BipartizationTrace trace = tfx::greedy_bipartization(g);
    Json rep = tfx::make_envelope("bipartize", config_json(o));
    rep["items"].push_back(tfx::to_json(trace));
    rep["summary"] = Json{{"t", trace.deleted.size()},
                          {"residual_class", tfx::residual_class_name(trace.residual_class)}};
    rep["wall_ms"] = ms_since(t0);
    emit(o, rep.dump(2));
    return kExitOk;
}

int cmd_classify(const std::string& g6, const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    tfx::Graph g = tfx::from_graph6(g6);
    tfx::ClassifierVerdict v = tfx::classify_nu3(g);
    Json rep = tfx::make_envelope("classify-nu3", config_json(o));
    rep["items"].push_back(tfx::to_json(v));
    rep["summary"] =
        Json{{"case", v.kind == tfx::ClassifierVerdict::Case::c7 ? "c7" : "c5-star"}};
    rep["wall_ms"] = ms_since(t0);
    emit(o, rep.dump(2));
    return kExitOk;
}

// Quick seeded property battery; one line per check.
int cmd_selftest(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(o.seed);
    Json rep = tfx::make_envelope("selftest", config_json(o));
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << '\n';
        rep["items"].push_back(Json{{"check", name}, {"ok", ok}});
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        for (int trial = 0; trial < 500 && ok; ++trial) {
            int n = static_cast<int>(rng() % 30);
            tfx::Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1) g.add_edge(u, v);
            ok = tfx::from_graph6(tfx::to_graph6(g)) == g;
        }
        check("graph6 round-trip on random graphs", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            int bn = 2 + static_cast<int>(rng() % 8);
            tfx::Graph base(bn);
            for (int u = 0; u < bn; ++u)
                for (int v = u + 1; v < bn; ++v)
                    if (rng() & 1) base.add_edge(u, v);
            std::vector<int> sizes;
            long long expect = 0;
            for (int i = 0; i < bn; ++i) sizes.push_back(static_cast<int>(rng() % 5));
            for (int u = 0; u < bn; ++u)
                for (int v = u + 1; v < bn; ++v)
                    if (base.adjacent(u, v))
                        expect += static_cast<long long>(sizes[static_cast<std::size_t>(u)]) *
                                  sizes[static_cast<std::size_t>(v)];
            ok = tfx::blow_up({base, sizes}).edge_count() == expect;
        }
        check("blow-up edge count formula", ok);
    }
    {
        bool ok = true;
        int equality_cases = 0;
        for (int trial = 0; trial < 10000 && ok; ++trial) {
            long long d = 1 + static_cast<long long>(rng() % 6);
            long long z0n = static_cast<long long>(rng() % 5);
            tfx::Rat z0(z0n, d);
            std::array<tfx::Rat, 5> z;
            for (auto& zi : z) zi = z0 + tfx::Rat(static_cast<long long>(rng() % 12) + (z0n == 0 ? 1 : 0), d);
            auto res = tfx::c5_blowup_inequality(z, z0);
            ok = res.holds;
            if (res.lhs == res.rhs) ++equality_cases;
        }
        check("cyclic distance-2 inequality on random rational tuples", ok);
    }
    {
        bool ok = true;
        tfx::Graph gamma = tfx::grotzsch();
        std::vector<int> perm(11);
        for (int i = 0; i < 11; ++i) perm[static_cast<std::size_t>(i)] = i;
        auto canon = tfx::canonical_form(gamma);
        for (int trial = 0; trial < 50 && ok; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            ok = tfx::canonical_form(gamma.relabeled(perm)) == canon;
        }
        check("canonical form invariant under relabeling", ok);
    }
    {
        bool ok = true;
        tfx::EnumStats stats;
        tfx::enumerate_triangle_free(
            7, tfx::Predicate{},
            [&](const tfx::Graph& g, const std::string&) {
                if (!ok || g.edge_count() == 0) return;
                int nu = tfx::max_matching(g).nu;
                int tau = tfx::min_vertex_cover(g).tau;
                if (tau >= 2 * nu) ok = false;
                if (tfx::is_bipartite(g).is_bipartite() && tau != nu) ok = false;
            },
            &stats);
        check("cover/matching duality on the n=7 triangle-free stream", ok);
    }

    rep["summary"] = Json{{"pass", all_ok}};
    rep["wall_ms"] = ms_since(t0);
    if (!o.out.empty()) emit(o, rep.dump(2));
    return all_ok ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle-free extremal graph laboratory"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a named construction as graph6");
    std::string gen_name;
    int gen_n = 0, gen_r = 0;
    bool gen_all = false;
    gen->add_option("name", gen_name,
                    "grotzsch | turan | h0 | g-family | hn | cycle | star")
        ->required();
    gen->add_option("--n", gen_n, "order parameter");
    gen->add_option("--r", gen_r, "part/leaf parameter");
    gen->add_flag("--all", gen_all, "emit every family member (g-family)");
    CommonOpts gen_o;
    gen_o.format = "g6";
    add_common(gen, gen_o, false);

    // inv
    auto* inv = app.add_subcommand("inv", "exact invariants with certificates");
    std::string inv_input = "-";
    inv->add_option("input", inv_input, "graph6 file (default: stdin)");
    CommonOpts inv_o;
    add_common(inv, inv_o, false);

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound");
    std::string bound_id;
    int bound_n = 0, bound_from = 0, bound_to = 0, bound_r = 0;
    bound->add_option("id", bound_id, "mantel | erdos_andrasfai | brouwer | chi4 | d2ge4")
        ->required();
    bound->add_option("--n", bound_n, "single n");
    bound->add_option("--from", bound_from, "range start");
    bound->add_option("--to", bound_to, "range end");
    auto* bound_r_opt = bound->add_option("--r", bound_r, "r for the r-partite bound");
    CommonOpts bound_o;
    add_common(bound, bound_o, false);

    // search
    auto* search = app.add_subcommand("search", "isomorph-free exhaustive enumeration");
    int search_n = 0;
    std::string search_pred = "triangle-free";
    search->add_option("--n", search_n, "order")->required();
    search->add_option("--pred", search_pred, "predicate atoms, comma separated");
    CommonOpts search_o;
    add_common(search, search_o);

    // verify
    auto* verify = app.add_subcommand("verify", "check a bound by exhaustive search");
    std::string verify_bound;
    int verify_from = 0, verify_to = 0;
    verify->add_option("--bound", verify_bound, "bound id")->required();
    verify->add_option("--from", verify_from, "range start")->required();
    verify->add_option("--to", verify_to, "range end")->required();
    CommonOpts verify_o;
    add_common(verify, verify_o);

    // bipartize
    auto* bip = app.add_subcommand("bipartize", "run the threshold deletion procedure");
    std::string bip_g6;
    bip->add_option("graph6", bip_g6, "input graph")->required();
    CommonOpts bip_o;
    add_common(bip, bip_o, false);

    // classify-nu3
    auto* cls = app.add_subcommand("classify-nu3", "structure of nu=3, tau>=4 graphs");
    std::string cls_g6;
    cls->add_option("graph6", cls_g6, "input graph")->required();
    CommonOpts cls_o;
    add_common(cls, cls_o, false);

    // selftest
    auto* self = app.add_subcommand("selftest", "seeded property battery");
    CommonOpts self_o;
    add_common(self, self_o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_name, gen_n, gen_r, gen_all, gen_o);
        if (inv->parsed()) return cmd_inv(inv_input, inv_o);
        if (bound->parsed())
            return cmd_bound(bound_id, bound_n, bound_from, bound_to, bound_r,
                             bound_r_opt->count() > 0, bound_o);
        if (search->parsed()) return cmd_search(search_n, search_pred, search_o);
        if (verify->parsed()) return cmd_verify(verify_bound, verify_from, verify_to, verify_o);
        if (bip->parsed()) return cmd_bipartize(bip_g6, bip_o);
        if (cls->parsed()) return cmd_classify(cls_g6, cls_o);
        if (self->parsed()) return cmd_selftest(self_o);
    } catch (const tfx::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tfx::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tfx::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tfx::CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const tfx::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
