#include "scgid/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <tuple>

namespace scgid {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

SeriesNames::SeriesNames(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_series_name(names_[i])) throw std::invalid_argument("invalid series name '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate series name '" + names_[i] + "'");
        }
    }
}

std::optional<SeriesId> SeriesNames::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return SeriesId{static_cast<std::uint32_t>(it - names_.begin())};
}

SeriesId SeriesNames::intern(std::string_view name) {
    if (auto s = find(name)) return *s;
    names_.emplace_back(name);
    return SeriesId{static_cast<std::uint32_t>(names_.size() - 1)};
}

SeriesNames default_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(i < 26 ? std::string(1, static_cast<char>('A' + i)) : "S" + std::to_string(i));
    }
    return SeriesNames(std::move(out));
}

bool valid_series_name(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Minimal cursor over one line with the comment already stripped.
class Cursor {
public:
    Cursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ == s_.size();
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    std::string_view name() {
        skip_ws();
        auto start = pos_;
        while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
        if (start == pos_) fail("expected a series name");
        return s_.substr(start, pos_ - start);
    }
    int number() {
        skip_ws();
        int value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
        if (ec != std::errc{}) fail("expected a lag");
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return value;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(line_, what + " at column " + std::to_string(pos_ + 1));
    }

private:
    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

template <class Fn>
void for_each_line(std::istream& in, Fn&& fn) {
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view body(raw);
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        Cursor c(body, line);
        if (c.done()) continue;
        fn(c, line);
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

}  // namespace

ParsedTemplate parse_template(std::istream& in, SeriesNames seed) {
    struct Raw {
        SeriesId source;
        int lag;
        SeriesId target;
        std::size_t line;
    };
    std::vector<Raw> raw;
    for_each_line(in, [&](Cursor& c, std::size_t line) {
        auto src = seed.intern(c.name());
        if (c.done()) return;
        int lag = 0;
        if (c.accept("[")) {
            if (!c.accept("-")) {
                if (c.number() != 0) c.fail("lags are written as [-k] with k >= 0");
            } else {
                lag = c.number();
                if (lag < 0) c.fail("negative lag");
            }
            c.expect("]");
        }
        c.expect("->");
        auto dst = seed.intern(c.name());
        if (!c.done()) c.fail("unexpected trailing text");
        if (lag == 0 && src == dst) c.fail("instantaneous self-edge");
        raw.push_back({src, lag, dst, line});
    });
    std::vector<TemplateEdge> edges;
    for (const auto& r : raw) edges.push_back({r.source, r.lag, r.target});
    if (!lag_zero_acyclic(seed.size(), edges)) {
        throw ParseError(raw.empty() ? 0 : raw.back().line, "instantaneous edges form a cycle");
    }
    return {seed, TemplateGraph(seed.size(), std::move(edges))};
}

ParsedTemplate parse_template(std::string_view text, SeriesNames seed) {
    std::istringstream in{std::string(text)};
    return parse_template(in, std::move(seed));
}

ParsedScg parse_scg(std::istream& in, SeriesNames seed) {
    std::vector<std::tuple<SeriesId, SeriesId, bool>> raw;
    for_each_line(in, [&](Cursor& c, std::size_t) {
        auto a = seed.intern(c.name());
        if (c.done()) return;
        bool both = false;
        if (c.accept("<->")) {
            both = true;
        } else {
            c.expect("->");
        }
        auto b = seed.intern(c.name());
        if (!c.done()) c.fail("unexpected trailing text");
        raw.emplace_back(a, b, both);
    });
    Scg s(seed.size());
    for (auto [a, b, both] : raw) {
        s.set_edge(a, b);
        if (both) s.set_edge(b, a);
    }
    return {seed, s};
}

ParsedScg parse_scg(std::string_view text, SeriesNames seed) {
    std::istringstream in{std::string(text)};
    return parse_scg(in, std::move(seed));
}

ParsedTemplate read_template_file(const std::string& path, SeriesNames seed) {
    auto in = open_or_throw(path);
    return parse_template(in, std::move(seed));
}

ParsedScg read_scg_file(const std::string& path, SeriesNames seed) {
    auto in = open_or_throw(path);
    return parse_scg(in, std::move(seed));
}

std::string format_template(const TemplateGraph& t, const SeriesNames& names) {
    std::string out;
    for (const auto& e : t.edges()) {
        out += names[e.source];
        if (e.lag > 0) out += "[-" + std::to_string(e.lag) + "]";
        out += " -> " + names[e.target] + "\n";
    }
    return out;
}

std::string format_scg(const Scg& s, const SeriesNames& names) {
    std::string out;
    for (std::uint32_t u = 0; u < s.n_series(); ++u) {
        for (std::uint32_t v = 0; v < s.n_series(); ++v) {
            if (s.edge(SeriesId{u}, SeriesId{v})) out += names[SeriesId{u}] + " -> " + names[SeriesId{v}] + "\n";
        }
    }
    return out;
}

std::string format_vertex(Vertex v, const SeriesNames& names) {
    return names[v.series] + "[" + std::to_string(v.slice) + "]";
}

std::string format_pdag(const Pdag& p, const SeriesNames& names) {
    const auto& w = p.window();
    std::vector<std::tuple<VertexId, VertexId, bool>> lines;
    for (auto [a, b] : p.directed_edges()) lines.emplace_back(a, b, true);
    for (auto [a, b] : p.undirected_edges()) lines.emplace_back(a, b, false);
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (auto [a, b, directed] : lines) {
        out += format_vertex(w.vertex(a), names) + (directed ? " -> " : " -- ") + format_vertex(w.vertex(b), names) + "\n";
    }
    return out;
}

}  // namespace scgid
