#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "scgid/discovery.hpp"
#include "scgid/identifiability.hpp"
#include "scgid/scg.hpp"
#include "scgid/template_graph.hpp"

namespace scgid {

enum class Outcome { OrientedInAll, UnorientedInSome };

const char* to_string(Outcome o);

struct PairVerification {
    SIdReport expected;
    Outcome observed = Outcome::OrientedInAll;
    /// First compatible template (stream order) leaving the pair undirected.
    std::optional<TemplateGraph> witness;
    bool agrees = true;
};

struct VerifyOptions {
    int gamma_max = 1;
    /// Defaults to default_window_len(gamma_max).
    std::optional<std::size_t> window_len;
    std::uint64_t template_budget = 1'000'000;
    /// Re-run every template with one more slice and compare the present-slice orientations.
    bool stability_check = true;
    DiscoveryOptions discovery;
};

/// Brute-force check of the s-identifiability verdicts of one SCG over all of its
/// compatible templates.
struct VerificationReport {
    Scg scg;
    int gamma_max = 1;
    std::size_t window_len = 0;
    std::vector<PairVerification> pairs;
    std::uint64_t templates_checked = 0;
    /// False when the template budget stopped the enumeration early.
    bool complete = true;
    /// Templates whose present-slice orientations changed with one more slice.
    std::uint64_t unstable_templates = 0;

    std::size_t disagreements() const;
    bool has_not_sid_pair() const;
    bool ok() const { return complete && unstable_templates == 0 && disagreements() == 0; }
};

VerificationReport verify_theorem(const Scg& scg, const VerifyOptions& opts = {});

struct AggregateReport {
    std::size_t n_series = 0;
    std::uint64_t scg_count = 0;
    std::uint64_t templates_checked = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t scgs_with_not_sid = 0;
    std::uint64_t incomplete = 0;
    std::uint64_t unstable_templates = 0;
    /// Reports of SCGs that disagreed, were unstable or incomplete, in mask order.
    std::vector<VerificationReport> failures;

    bool ok() const { return disagreements == 0 && incomplete == 0 && unstable_templates == 0; }
};

/// verify_theorem over all 2^(n*n) SCGs on n series, split across `workers` threads.
AggregateReport verify_all(std::size_t n_series, const VerifyOptions& opts = {}, unsigned workers = 1);

}  // namespace scgid
