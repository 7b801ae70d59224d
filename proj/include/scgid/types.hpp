#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scgid {

/// Index of a time series (macro vertex).
struct SeriesId {
    std::uint32_t index = 0;

    constexpr auto operator<=>(const SeriesId&) const = default;
};

/// A temporal variable: one series observed at one slice of a finite window.
/// Slice 0 is the oldest slice, slice L-1 is the present.
struct Vertex {
    SeriesId series;
    int slice = 0;

    // canonical order: slice first, then series
    friend constexpr std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
        if (auto c = a.slice <=> b.slice; c != 0) return c;
        return a.series <=> b.series;
    }
    friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
};

using VertexId = std::size_t;
using VertexList = std::vector<VertexId>;

/// Maps (series, slice) pairs onto dense ids in canonical order.
class Window {
public:
    Window() = default;
    Window(std::size_t n_series, std::size_t window_len) : n_series_(n_series), window_len_(window_len) {}

    std::size_t n_series() const { return n_series_; }
    std::size_t window_len() const { return window_len_; }
    std::size_t vertex_count() const { return n_series_ * window_len_; }

    bool contains(Vertex v) const {
        return v.series.index < n_series_ && v.slice >= 0 && static_cast<std::size_t>(v.slice) < window_len_;
    }

    VertexId id(Vertex v) const {
        if (!contains(v)) {
            throw std::out_of_range("vertex (" + std::to_string(v.series.index) + ", " + std::to_string(v.slice) +
                                    ") outside window");
        }
        return static_cast<std::size_t>(v.slice) * n_series_ + v.series.index;
    }

    Vertex vertex(VertexId id) const {
        if (id >= vertex_count()) throw std::out_of_range("vertex id " + std::to_string(id) + " out of range");
        return Vertex{SeriesId{static_cast<std::uint32_t>(id % n_series_)}, static_cast<int>(id / n_series_)};
    }

    int slice_of(VertexId id) const { return static_cast<int>(id / n_series_); }
    SeriesId series_of(VertexId id) const { return SeriesId{static_cast<std::uint32_t>(id % n_series_)}; }

    bool operator==(const Window&) const = default;

private:
    std::size_t n_series_ = 0;
    std::size_t window_len_ = 0;
};

/// Status of the micro edge between two vertices, relative to the query's argument order.
enum class Orientation { Forward, Backward, Absent, Undirected };

const char* to_string(Orientation o);

/// Raised when orientation rules derive contradictory edge marks
/// (background knowledge inconsistent with the independence structure).
class InconsistentOrientation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace scgid
