#include "scgid/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "scgid/compatible.hpp"
#include "scgid/pdag.hpp"

namespace scgid {

const char* to_string(Outcome o) { return o == Outcome::OrientedInAll ? "OrientedInAll" : "UnorientedInSome"; }

std::size_t VerificationReport::disagreements() const {
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return !p.agrees; }));
}

bool VerificationReport::has_not_sid_pair() const {
    return std::any_of(pairs.begin(), pairs.end(),
                       [](const auto& p) { return p.expected.verdict == Verdict::NotSId; });
}

namespace {

std::vector<Orientation> present_slice_orientations(const Pdag& p, const std::vector<SIdReport>& pairs) {
    const int present = static_cast<int>(p.window().window_len()) - 1;
    std::vector<Orientation> out;
    out.reserve(pairs.size());
    for (const auto& r : pairs) {
        out.push_back(orient_query(p, Vertex{r.pair.x, present}, Vertex{r.pair.y, present}));
    }
    return out;
}

}  // namespace

VerificationReport verify_theorem(const Scg& scg, const VerifyOptions& opts) {
    VerificationReport report;
    report.scg = scg;
    report.gamma_max = opts.gamma_max;
    report.window_len = opts.window_len.value_or(default_window_len(opts.gamma_max));
    if (report.window_len < static_cast<std::size_t>(opts.gamma_max) + 1) {
        throw std::invalid_argument("verification window shorter than gamma_max + 1");
    }

    auto expected = s_identifiable_all(scg);
    for (const auto& e : expected) report.pairs.push_back(PairVerification{e, Outcome::OrientedInAll, {}, true});

    CompatibleTemplates stream(scg, opts.gamma_max);
    while (auto tmpl = stream.next()) {
        if (report.templates_checked >= opts.template_budget) {
            report.complete = false;
            break;
        }
        ++report.templates_checked;
        auto mpdag = ftmpdag_of(*tmpl, scg, report.window_len, opts.discovery);
        auto observed = present_slice_orientations(mpdag, expected);
        if (opts.stability_check) {
            auto longer = ftmpdag_of(*tmpl, scg, report.window_len + 1, opts.discovery);
            if (present_slice_orientations(longer, expected) != observed) ++report.unstable_templates;
        }
        for (std::size_t i = 0; i < observed.size(); ++i) {
            auto& pv = report.pairs[i];
            if (observed[i] == Orientation::Undirected && pv.observed == Outcome::OrientedInAll) {
                pv.observed = Outcome::UnorientedInSome;
                pv.witness = *tmpl;
            }
        }
    }
    for (auto& pv : report.pairs) {
        pv.agrees = (pv.expected.verdict == Verdict::SId) == (pv.observed == Outcome::OrientedInAll);
    }
    return report;
}

AggregateReport verify_all(std::size_t n_series, const VerifyOptions& opts, unsigned workers) {
    if (n_series > 4) throw std::invalid_argument("verify_all supports at most 4 series");
    const std::uint64_t total = std::uint64_t{1} << (n_series * n_series);
    workers = std::max(1u, workers);

    std::vector<AggregateReport> partial(workers);
    auto run = [&](unsigned w) {
        auto& agg = partial[w];
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            auto rep = verify_theorem(Scg::from_mask(n_series, mask), opts);
            ++agg.scg_count;
            agg.templates_checked += rep.templates_checked;
            agg.disagreements += rep.disagreements();
            agg.unstable_templates += rep.unstable_templates;
            if (rep.has_not_sid_pair()) ++agg.scgs_with_not_sid;
            if (!rep.complete) ++agg.incomplete;
            if (!rep.ok()) agg.failures.push_back(std::move(rep));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    AggregateReport out;
    out.n_series = n_series;
    for (auto& p : partial) {
        out.scg_count += p.scg_count;
        out.templates_checked += p.templates_checked;
        out.disagreements += p.disagreements;
        out.scgs_with_not_sid += p.scgs_with_not_sid;
        out.incomplete += p.incomplete;
        out.unstable_templates += p.unstable_templates;
        for (auto& f : p.failures) out.failures.push_back(std::move(f));
    }
    return out;
}

}  // namespace scgid
