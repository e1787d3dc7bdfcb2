#pragma once
// Hand-transcribed reference data for the exceptional groups. Kept apart from the
// library so the tests compare against an independent copy.

#include <map>
#include <string>
#include <vector>

#include "liecohom/basic_data.hpp"

namespace fixtures {

struct ExceptionalRow {
    std::string name;
    int k, m;
    std::vector<int> deg_e, deg_y, p, k_j;
    int dim;
};

inline const std::vector<ExceptionalRow>& exceptional_rows() {
    static const std::vector<ExceptionalRow> rows = {
        {"G2", 1, 1, {4}, {6}, {2}, {2}, 14},
        {"F4", 2, 2, {4, 16}, {6, 8}, {2, 3}, {2, 3}, 52},
        {"E6", 4, 2, {4, 10, 16, 18}, {6, 8}, {2, 3}, {2, 3}, 78},
        {"E7", 3, 4, {4, 16, 28}, {6, 8, 10, 18}, {2, 3, 2, 2}, {2, 3, 2, 2}, 133},
        {"E8", 3, 7, {4, 16, 28}, {6, 8, 10, 12, 18, 20, 30}, {2, 3, 2, 5, 2, 3, 2}, {8, 3, 4, 5, 2, 3, 2}, 248},
    };
    return rows;
}

// Generator sets in degree order, written as "xi_1:3" etc.
// Keys: group name, then coefficient string (Q, F2, F3, F5, Z).
inline const std::map<std::string, std::map<std::string, std::vector<std::string>>>& generator_tables() {
    static const std::map<std::string, std::map<std::string, std::vector<std::string>>> t = {
        {"G2",
         {{"Q", {"xi_1:3", "eta_1:11"}},
          {"F3", {"xi_1:3", "eta_1:11"}},
          {"F5", {"xi_1:3", "eta_1:11"}},
          {"F2", {"xi_1:3", "theta_1:5"}},
          {"Z", {"xi_1:3", "eta_1:11"}}}},
        {"F4",
         {{"Q", {"xi_1:3", "eta_1:11", "xi_2:15", "eta_2:23"}},
          {"F3", {"xi_1:3", "theta_2:7", "eta_1:11", "xi_2:15"}},
          {"F5", {"xi_1:3", "eta_1:11", "xi_2:15", "eta_2:23"}},
          {"F2", {"xi_1:3", "theta_1:5", "xi_2:15", "eta_2:23"}},
          {"Z", {"xi_1:3", "eta_1:11", "xi_2:15", "eta_2:23"}}}},
        {"E6",
         {{"Q", {"xi_1:3", "xi_2:9", "eta_1:11", "xi_3:15", "xi_4:17", "eta_2:23"}},
          {"F3", {"xi_1:3", "theta_2:7", "xi_2:9", "eta_1:11", "xi_3:15", "xi_4:17"}},
          {"F5", {"xi_1:3", "xi_2:9", "eta_1:11", "xi_3:15", "xi_4:17", "eta_2:23"}},
          {"F2", {"xi_1:3", "theta_1:5", "xi_2:9", "xi_3:15", "xi_4:17", "eta_2:23"}},
          {"Z", {"xi_1:3", "xi_2:9", "eta_1:11", "xi_3:15", "xi_4:17", "eta_2:23"}}}},
        {"E7",
         {{"Q", {"xi_1:3", "eta_1:11", "xi_2:15", "eta_3:19", "eta_2:23", "xi_3:27", "eta_4:35"}},
          {"F3", {"xi_1:3", "theta_2:7", "eta_1:11", "xi_2:15", "eta_3:19", "xi_3:27", "eta_4:35"}},
          {"F5", {"xi_1:3", "eta_1:11", "xi_2:15", "eta_3:19", "eta_2:23", "xi_3:27", "eta_4:35"}},
          {"F2", {"xi_1:3", "theta_1:5", "theta_3:9", "xi_2:15", "theta_4:17", "eta_2:23", "xi_3:27"}},
          {"Z", {"xi_1:3", "eta_1:11", "xi_2:15", "eta_3:19", "eta_2:23", "xi_3:27", "eta_4:35"}}}},
        // The rational E8 row ends with eta_6: the complement-set rule and the integral
        // table agree on it; eta_4 would have the same degree 59.
        {"E8",
         {{"Q", {"xi_1:3", "xi_2:15", "eta_2:23", "xi_3:27", "eta_5:35", "eta_3:39", "eta_1:47", "eta_6:59"}},
          {"F3", {"xi_1:3", "theta_2:7", "xi_2:15", "theta_6:19", "xi_3:27", "eta_5:35", "eta_3:39", "eta_1:47"}},
          {"F5", {"xi_1:3", "theta_4:11", "xi_2:15", "eta_2:23", "xi_3:27", "eta_5:35", "eta_3:39", "eta_1:47"}},
          {"F2", {"xi_1:3", "theta_1:5", "theta_3:9", "xi_2:15", "theta_5:17", "eta_2:23", "xi_3:27", "theta_7:29"}},
          {"Z", {"xi_1:3", "xi_2:15", "eta_2:23", "xi_3:27", "eta_5:35", "eta_3:39", "eta_1:47", "eta_6:59"}}}},
    };
    return t;
}

// Nonzero squares of odd generators over F2, by group.
inline const std::map<std::string, std::map<std::string, std::string>>& mod2_squares() {
    static const std::map<std::string, std::map<std::string, std::string>> s = {
        {"G2", {{"z3", "x6"}}},
        {"F4", {{"z3", "x6"}}},
        {"E6", {{"z3", "x6"}}},
        {"E7", {{"z3", "x6"}, {"z5", "x10"}, {"z9", "x18"}}},
        {"E8", {{"z3", "x6"}, {"z5", "x10"}, {"z9", "x18"}, {"z15", "x30"}, {"z23", "x6^6*x10"}}},
    };
    return s;
}

}  // namespace fixtures
