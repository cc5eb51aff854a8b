#pragma once

#include <string>
#include <vector>

#include "bgg/cohomology.hpp"

namespace bgg {

enum class Format { Text, Json, Csv, Latex };
Format parse_format(const std::string& s);  // "text" | "json" | "csv" | "latex"

// "f1", "f12", "f112", ... (digit i repeated per coordinate of the root)
std::string generator_name(const RootSystem& rs, int root_idx);
std::string root_name(const RootSystem& rs, int root_idx);

// PBW-sorted rendering: "4*f1^3*f2 - 10*f1^2*f12 + ..."
std::string pbw_to_string(const RootSystem& rs, const PBWElement& x);

// "L(2,1)" style weight display (simple-root coordinates).
std::string weight_str(const Weight& w);

std::string render_maps(const Engine& engine, const BGGComplex& cx, bool d2_ok, Format fmt);

std::string render_cohomology(const CohomologyResult& res, Format fmt);

struct TableResult {
    CartanType type;
    std::vector<std::vector<int>> parabolics;   // 0-based subsets, one per row
    std::vector<std::vector<mpz_class>> dims;   // dim H^0(X, wedge^k T_X) per row
    bool higher_vanishes = true;                // across every entry computed
};

std::string render_table(const TableResult& t, Format fmt);

}  // namespace bgg
