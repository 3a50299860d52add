#pragma once

#include <string>

#include "divisive/core.hpp"

inline std::string data_path(const std::string& name) { return std::string(DIVISIVE_TEST_DATA) + "/" + name; }

inline divisive::Profile load(const std::string& name) { return divisive::parse_profile_file(data_path(name)); }
