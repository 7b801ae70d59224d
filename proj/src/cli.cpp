#include "scgid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "scgid/census.hpp"
#include "scgid/discovery.hpp"
#include "scgid/identifiability.hpp"
#include "scgid/io.hpp"
#include "scgid/verify.hpp"

namespace scgid::cli {
namespace {

using nlohmann::json;

unsigned default_workers() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

SeriesId lookup(const SeriesNames& names, const std::string& name) {
    auto s = names.find(name);
    if (!s) throw std::invalid_argument("unknown series '" + name + "'");
    return *s;
}

std::string pair_line(const SIdReport& r, const SeriesNames& names) {
    return "PAIR " + names[r.pair.x] + " " + names[r.pair.y] + " " + to_string(r.verdict) + " " + to_string(r.reason);
}

json pair_json(const SIdReport& r, const SeriesNames& names) {
    return {{"x", names[r.pair.x]}, {"y", names[r.pair.y]}, {"verdict", to_string(r.verdict)},
            {"reason", to_string(r.reason)}};
}

std::string fmt_percent(double p) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << p;
    return s.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

struct CheckArgs {
    std::string scg_file;
    std::vector<std::string> pair;
    std::string effect;
    std::string treatment;
    std::string outcome;
    bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
    auto parsed = read_scg_file(a.scg_file);
    const auto& names = parsed.names;
    std::ostream& human = a.json ? err : out;
    json doc{{"command", "check"}, {"series", names.all()}};
    bool ok = true;

    if (!a.effect.empty()) {
        const bool total = a.effect == "total";
        const std::string& who = total ? a.treatment : a.outcome;
        if (who.empty()) throw CLI::ValidationError(total ? "--effect total needs --treatment" : "--effect cde needs --outcome");
        auto s = lookup(names, who);
        auto res = total ? total_effect_identifiable(parsed.scg, s) : cde_identifiable(parsed.scg, s);
        ok = res.holds;
        human << "EFFECT " << a.effect << " " << who << " " << (res.holds ? "HOLDS" : "NOT_GUARANTEED");
        json blocking = json::array();
        for (const auto& p : res.blocking) {
            human << " " << names[p.x] << "-" << names[p.y];
            blocking.push_back({names[p.x], names[p.y]});
        }
        human << "\n";
        doc["effect"] = {{"kind", a.effect}, {total ? "treatment" : "outcome", who}, {"holds", res.holds},
                         {"blocking", blocking}};
    } else {
        std::vector<SIdReport> reports;
        if (a.pair.size() == 2) {
            reports.push_back(s_identifiable(parsed.scg, lookup(names, a.pair[0]), lookup(names, a.pair[1])));
        } else if (a.pair.empty()) {
            reports = s_identifiable_all(parsed.scg);
            if (names.size() == 0) err << "note: empty SCG over zero series\n";
        } else {
            throw CLI::ValidationError("check takes either no pair or two series names");
        }
        doc["pairs"] = json::array();
        for (const auto& r : reports) {
            human << pair_line(r, names) << "\n";
            doc["pairs"].push_back(pair_json(r, names));
            ok = ok && r.verdict == Verdict::SId;
        }
    }
    doc["ok"] = ok;
    if (a.json) out << doc.dump(2) << "\n";
    return ok ? Success : Negative;
}

struct DiscoverArgs {
    std::string template_file;
    std::string scg_file;
    std::size_t window = 0;
    std::string rules = "all";
    std::string method = "tpc";
    bool stability = false;
    bool json = false;
};

Pdag run_discovery(const DiscoverArgs& a, const TemplateGraph& t, const Scg& scg, std::size_t window) {
    DiscoveryOptions opts;
    opts.rules = a.rules == "first-only" ? RuleSet::FirstOnly : RuleSet::All;
    if (a.method == "mpdag") return ftmpdag_of(t, scg, window, opts);
    return tpc(unroll(t, window), scg, opts);
}

// Interior-slice orientations of `a` (window L) and `b` (window L+1), aligned at the last slice.
bool stable_interior(const Pdag& a, const Pdag& b, int gamma) {
    const auto& wa = a.window();
    const auto& wb = b.window();
    for (VertexId u = 0; u < a.vertex_count(); ++u) {
        for (VertexId v = 0; v < a.vertex_count(); ++v) {
            if (u == v || std::max(wa.slice_of(u), wa.slice_of(v)) < gamma) continue;
            auto shift = [&](VertexId x) {
                auto vx = wa.vertex(x);
                return wb.id(Vertex{vx.series, vx.slice + 1});
            };
            if (orient_query(a, u, v) != orient_query(b, shift(u), shift(v))) return false;
        }
    }
    return true;
}

int cmd_discover(const DiscoverArgs& a, std::ostream& out, std::ostream& err) {
    auto t = read_template_file(a.template_file);
    Scg scg = scg_of(t.graph);
    if (!a.scg_file.empty()) {
        auto s = read_scg_file(a.scg_file, t.names);
        if (s.names.size() != t.names.size()) {
            throw std::invalid_argument("SCG file names series absent from the template: " + s.names.all().back());
        }
        scg = s.scg;
        if (!compatible(scg, t.graph)) throw std::invalid_argument("template is not compatible with the SCG");
    }
    const int gamma = t.graph.gamma_max();
    const std::size_t window = a.window ? a.window : default_window_len(gamma);
    auto p = run_discovery(a, t.graph, scg, window);
    std::ostream& human = a.json ? err : out;
    const auto text = format_pdag(p, t.names);
    human << text;

    bool stable = true;
    if (a.stability) {
        auto longer = run_discovery(a, t.graph, scg, window + 1);
        stable = stable_interior(p, longer, gamma);
        human << (stable ? "STABLE" : "UNSTABLE") << " window " << window << " vs " << window + 1 << "\n";
    }
    if (a.json) {
        json directed = json::array(), undirected = json::array();
        const auto& w = p.window();
        for (auto [u, v] : p.directed_edges()) {
            directed.push_back({format_vertex(w.vertex(u), t.names), format_vertex(w.vertex(v), t.names)});
        }
        for (auto [u, v] : p.undirected_edges()) {
            undirected.push_back({format_vertex(w.vertex(u), t.names), format_vertex(w.vertex(v), t.names)});
        }
        json doc{{"command", "discover"}, {"series", t.names.all()}, {"window_len", window},
                 {"gamma_max", gamma}, {"method", a.method}, {"rules", a.rules},
                 {"directed", directed}, {"undirected", undirected}};
        if (a.stability) doc["stable"] = stable;
        out << doc.dump(2) << "\n";
    }
    return stable ? Success : Internal;
}

struct EnumerateArgs {
    std::vector<std::size_t> ns;
    unsigned workers = 0;
    std::string kernel = "auto";
    bool allow_large = false;
    bool json = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
    CensusOptions opts;
    opts.workers = a.workers ? a.workers : default_workers();
    opts.allow_large = a.allow_large;
    opts.kernel = a.kernel == "scalar" ? kernels::Kernel::Scalar
                  : a.kernel == "avx2" ? kernels::Kernel::Avx2
                                       : kernels::Kernel::Auto;
    std::ostream& human = a.json ? err : out;
    human << std::setw(3) << "n" << std::setw(14) << "SCGs" << std::setw(14) << "not fully" << std::setw(9) << "%"
          << "\n";
    json rows = json::array();
    for (auto n : a.ns) {
        auto row = census(n, opts);
        human << std::setw(3) << row.n << std::setw(14) << row.total_scgs << std::setw(14) << row.not_fully_sid
              << std::setw(9) << fmt_percent(row.percent) << "\n";
        rows.push_back({{"n", row.n}, {"total_scgs", row.total_scgs}, {"not_fully_sid", row.not_fully_sid},
                        {"percent", row.percent}});
    }
    if (a.json) {
        out << json{{"command", "enumerate"}, {"rows", rows}}.dump(2) << "\n";
    }
    return Success;
}

struct VerifyArgs {
    std::size_t n = 0;
    std::string scg_file;
    int gamma = 1;
    std::size_t window = 0;
    std::uint64_t budget = 1'000'000;
    unsigned workers = 0;
    bool no_stability = false;
    bool json = false;
};

json report_json(const VerificationReport& r, const SeriesNames& names) {
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        json j = pair_json(p.expected, names);
        j["observed"] = to_string(p.observed);
        j["agrees"] = p.agrees;
        if (p.witness) j["witness"] = split_lines(format_template(*p.witness, names));
        pairs.push_back(j);
    }
    return {{"mask", r.scg.n_series() <= 8 ? r.scg.mask() : 0}, {"templates_checked", r.templates_checked},
            {"complete", r.complete}, {"unstable_templates", r.unstable_templates}, {"pairs", pairs}};
}

void print_report(std::ostream& os, const VerificationReport& r, const SeriesNames& names) {
    for (const auto& p : r.pairs) {
        os << pair_line(p.expected, names) << " observed " << to_string(p.observed) << " "
           << (p.agrees ? "agree" : "DISAGREE") << "\n";
        if (p.witness) {
            os << "  witness:";
            for (const auto& line : split_lines(format_template(*p.witness, names))) os << " " << line << ";";
            os << "\n";
        }
    }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    VerifyOptions opts;
    opts.gamma_max = a.gamma;
    if (a.window) opts.window_len = a.window;
    opts.template_budget = a.budget;
    opts.stability_check = !a.no_stability;
    std::ostream& human = a.json ? err : out;

    if (!a.scg_file.empty()) {
        auto parsed = read_scg_file(a.scg_file);
        auto r = verify_theorem(parsed.scg, opts);
        print_report(human, r, parsed.names);
        human << r.templates_checked << " templates, " << r.disagreements() << " disagreements";
        if (!r.complete) human << ", INCOMPLETE (template budget " << a.budget << " reached)";
        if (r.unstable_templates) human << ", " << r.unstable_templates << " unstable templates";
        human << "\n";
        if (a.json) {
            json doc = report_json(r, parsed.names);
            doc["command"] = "verify";
            doc["series"] = parsed.names.all();
            doc["ok"] = r.ok();
            out << doc.dump(2) << "\n";
        }
        return r.ok() ? Success : Negative;
    }

    if (a.n == 0) throw CLI::ValidationError("verify needs a series count or --scg");
    const unsigned workers = a.workers ? a.workers : default_workers();
    auto agg = verify_all(a.n, opts, workers);
    const auto names = default_names(a.n);
    for (const auto& f : agg.failures) {
        human << "SCG mask 0x" << std::hex << f.scg.mask() << std::dec << "\n";
        for (const auto& p : f.pairs) {
            if (p.agrees) continue;
            human << "  " << pair_line(p.expected, names) << " observed " << to_string(p.observed) << "\n";
        }
        if (!f.complete) human << "  INCOMPLETE after " << f.templates_checked << " templates\n";
        if (f.unstable_templates) human << "  " << f.unstable_templates << " unstable templates\n";
    }
    human << agg.scg_count << " SCGs, " << agg.disagreements << " disagreements\n";
    human << agg.templates_checked << " templates checked, " << agg.scgs_with_not_sid
          << " SCGs with a NotSId pair, " << agg.incomplete << " incomplete, " << agg.unstable_templates
          << " unstable\n";
    if (a.json) {
        json failures = json::array();
        for (const auto& f : agg.failures) failures.push_back(report_json(f, names));
        out << json{{"command", "verify"},
                    {"n", a.n},
                    {"gamma_max", a.gamma},
                    {"scg_count", agg.scg_count},
                    {"templates_checked", agg.templates_checked},
                    {"disagreements", agg.disagreements},
                    {"scgs_with_not_sid", agg.scgs_with_not_sid},
                    {"incomplete", agg.incomplete},
                    {"unstable_templates", agg.unstable_templates},
                    {"ok", agg.ok()},
                    {"failures", failures}}
                   .dump(2)
            << "\n";
    }
    return agg.ok() ? Success : Negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"s-identifiability of instantaneous edges from summary causal graphs"};
    app.name("scgid");
    app.require_subcommand(1);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "s-identifiability verdicts for an SCG file");
    c->add_option("scg", check.scg_file, "SCG file")->required();
    c->add_option("pair", check.pair, "two series names (default: all pairs)");
    c->add_option("--effect", check.effect, "effect criterion")->check(CLI::IsMember({"total", "cde"}));
    c->add_option("--treatment", check.treatment, "treatment series for --effect total");
    c->add_option("--outcome", check.outcome, "outcome series for --effect cde");
    c->add_flag("--json", check.json, "JSON document on stdout, report on stderr");

    DiscoverArgs disc;
    auto* d = app.add_subcommand("discover", "oracle discovery on an unrolled template");
    d->add_option("template", disc.template_file, "template file")->required();
    d->add_option("--scg", disc.scg_file, "SCG file (default: SCG of the template)");
    d->add_option("--window", disc.window, "number of time slices")->check(CLI::PositiveNumber);
    d->add_option("--rules", disc.rules, "Meek rules")->check(CLI::IsMember({"all", "first-only"}));
    d->add_option("--method", disc.method, "tpc: skeleton search with a d-separation oracle; mpdag: from the MEC")
        ->check(CLI::IsMember({"tpc", "mpdag"}));
    d->add_flag("--stability", disc.stability, "re-run with one more slice and compare interior orientations");
    d->add_flag("--json", disc.json, "JSON document on stdout, dump on stderr");

    EnumerateArgs en;
    auto* e = app.add_subcommand("enumerate", "count SCGs with a pair that is not s-identifiable");
    e->add_option("n", en.ns, "series counts")->required()->check(CLI::Range(1, 7));
    e->add_option("--workers", en.workers, std::string("worker threads (default: $") + kWorkersEnv + " or 1)");
    e->add_option("--kernel", en.kernel, "census kernel")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
    e->add_flag("--allow-large", en.allow_large, "permit n > 5");
    e->add_flag("--json", en.json, "JSON document on stdout, table on stderr");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "brute-force check of the verdicts over compatible templates");
    v->add_option("n", ver.n, "verify every SCG on n series")->check(CLI::Range(1, 4));
    v->add_option("--scg", ver.scg_file, "verify a single SCG file");
    v->add_option("--gamma", ver.gamma, "maximal lag of the templates")->check(CLI::Range(1, 16));
    v->add_option("--window", ver.window, "number of time slices")->check(CLI::PositiveNumber);
    v->add_option("--budget", ver.budget, "template budget per SCG");
    v->add_option("--workers", ver.workers, std::string("worker threads (default: $") + kWorkersEnv + " or 1)");
    v->add_flag("--no-stability", ver.no_stability, "skip the re-run with one more slice");
    v->add_flag("--json", ver.json, "JSON document on stdout, report on stderr");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& ex) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp& ex) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return UsageError;
    }

    try {
        if (c->parsed()) return cmd_check(check, out, err);
        if (d->parsed()) return cmd_discover(disc, out, err);
        if (e->parsed()) return cmd_enumerate(en, out, err);
        return cmd_verify(ver, out, err);
    } catch (const InconsistentOrientation& ex) {
        err << "inconsistent orientation: " << ex.what() << "\n";
        return Internal;
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << "\n";
        return UsageError;
    } catch (const CLI::Error& ex) {
        err << "error: " << ex.what() << "\n";
        return UsageError;
    } catch (const std::logic_error& ex) {
        // invalid_argument and out_of_range derive from logic_error but are input problems
        if (dynamic_cast<const std::invalid_argument*>(&ex) || dynamic_cast<const std::out_of_range*>(&ex)) {
            err << "error: " << ex.what() << "\n";
            return UsageError;
        }
        err << "internal error: " << ex.what() << "\n";
        return Internal;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return UsageError;
    }
}

}  // namespace scgid::cli
