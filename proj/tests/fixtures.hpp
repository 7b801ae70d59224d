#pragma once

#include <string>

#include "scgid/io.hpp"

#ifndef SCGID_FIXTURES_DIR
#error "SCGID_FIXTURES_DIR must be defined"
#endif

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(SCGID_FIXTURES_DIR) + "/" + name; }

inline scgid::ParsedTemplate tmpl(const std::string& name) { return scgid::read_template_file(path(name)); }

inline scgid::ParsedScg scg(const std::string& name, scgid::SeriesNames seed = {}) {
    return scgid::read_scg_file(path(name), std::move(seed));
}

}  // namespace fixtures
