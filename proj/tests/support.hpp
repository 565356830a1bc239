#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "isospec/restriction_map.hpp"

#ifndef ISOSPEC_TEST_DATA_DIR
#define ISOSPEC_TEST_DATA_DIR "data"
#endif

namespace testing {

inline isospec::Weight labels(const isospec::Group& g, std::initializer_list<int> ls) {
    std::vector<isospec::Rational> v(ls.begin(), ls.end());
    return g.from_labels(v);
}

inline isospec::Weight labels(const isospec::RootSystem& rs, std::initializer_list<int> ls) {
    std::vector<isospec::Rational> v(ls.begin(), ls.end());
    return rs.from_labels(v);
}

inline std::string data_path(const std::string& rel) { return std::string(ISOSPEC_TEST_DATA_DIR) + "/" + rel; }

inline isospec::RestrictionMap load_map(const std::string& name) {
    return isospec::RestrictionMap::load(data_path("maps/" + name));
}

/// Uniform integer in [lo, hi].
inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace testing
