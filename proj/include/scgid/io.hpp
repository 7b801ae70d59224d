#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scgid/pdag.hpp"
#include "scgid/scg.hpp"
#include "scgid/template_graph.hpp"

namespace scgid {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Series names in id order.
class SeriesNames {
public:
    SeriesNames() = default;
    explicit SeriesNames(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& operator[](SeriesId s) const { return names_.at(s.index); }
    std::optional<SeriesId> find(std::string_view name) const;
    /// Existing id, or a new one appended at the end.
    SeriesId intern(std::string_view name);
    const std::vector<std::string>& all() const { return names_; }

    bool operator==(const SeriesNames&) const = default;

private:
    std::vector<std::string> names_;
};

/// Default names for n series: A, B, C, ... then S26, S27, ...
SeriesNames default_names(std::size_t n);

bool valid_series_name(std::string_view s);

struct ParsedTemplate {
    SeriesNames names;
    TemplateGraph graph;
};

struct ParsedScg {
    SeriesNames names;
    Scg scg;
};

/// One edge per line: `X[-k] -> Y` (X at t-k causes Y at t) or `X -> Y` for k = 0.
/// A line holding a single name declares a series without edges. `#` starts a comment.
/// Series are numbered by first appearance, after those already in `seed`.
ParsedTemplate parse_template(std::istream& in, SeriesNames seed = {});
ParsedTemplate parse_template(std::string_view text, SeriesNames seed = {});

/// One edge per line: `A -> B`, `A -> A` for a self-loop, `A <-> B` for both directions.
ParsedScg parse_scg(std::istream& in, SeriesNames seed = {});
ParsedScg parse_scg(std::string_view text, SeriesNames seed = {});

/// Throws std::runtime_error if the file cannot be opened, ParseError on bad content.
ParsedTemplate read_template_file(const std::string& path, SeriesNames seed = {});
ParsedScg read_scg_file(const std::string& path, SeriesNames seed = {});

std::string format_template(const TemplateGraph& t, const SeriesNames& names);
std::string format_scg(const Scg& s, const SeriesNames& names);
std::string format_vertex(Vertex v, const SeriesNames& names);

/// `A[k] -> B[k']` and `A[k] -- B[k]` lines, ordered by (tail or smaller id, head or larger id).
std::string format_pdag(const Pdag& p, const SeriesNames& names);

}  // namespace scgid
