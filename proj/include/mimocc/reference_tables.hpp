// Copyright 2026 The mimocc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Published reference values for the `table` command. Bump the version when any
// entry changes so regression fixtures built on top of it can notice.

#pragma once

#include <array>
#include <string_view>

namespace mimocc::reference {

inline constexpr int kFixtureVersion = 1;

struct Cell {
  std::string_view table;    // "III", "IV", "V"
  std::string_view cell;     // stable cell key
  std::string_view display;  // as printed in the source table ("--" for an empty cell)
  std::string_view value;    // exact decimal used for comparison; empty for "--" or excluded cells
  std::string_view tolerance;
  bool relative = false;
  bool excluded = false;
  std::string_view note;
};

constexpr Cell value_cell(std::string_view table, std::string_view cell, std::string_view display,
                          std::string_view tolerance, bool relative = false) {
  return {table, cell, display, display, tolerance, relative, false, ""};
}
constexpr Cell empty_cell(std::string_view table, std::string_view cell) {
  return {table, cell, "--", "", "", false, false, ""};
}
constexpr Cell text_cell(std::string_view table, std::string_view cell, std::string_view display) {
  return {table, cell, display, "", "", false, false, ""};
}

// Subpacketization orders; K1=5, K2=30, G={2,8}, L=14, gamma=1/5.
inline constexpr std::array kTableIII = {
    Cell{"III", "min-G/opt", "3.98e12", "3980000000000", "0.005", true, false, ""},
    Cell{"III", "min-G/cmb", "3.98e12", "3980000000000", "0.005", true, false, ""},
    Cell{"III", "min-G/lin", "9.8e2", "980", "0", false, false, ""},
    Cell{"III", "Grouping/opt", "1.1e8", "110000000", "0.005", true, false, ""},
    Cell{"III", "Grouping/cmb", "4.75e6", "4750000", "0.005", true, false, ""},
    Cell{"III", "Grouping/lin", "8.8e2", "", "", false, true,
         "group 2 has floor(L/G) = 1 < K_2*gamma = 6, so lin does not apply"},
    Cell{"III", "Phantom/opt", "1.45e9", "1450000000", "0.005", true, false, ""},
    Cell{"III", "Phantom/cmb", "1.27e9", "1270000000", "0.005", true, false, ""},
    Cell{"III", "Phantom/lin", "8.6e2", "", "", false, true,
         "every admissible G-hat <= 2 gives 980; the printed value has no feasible source"},
};

// Super-grouping DoF for every consecutive partition; L=16, gamma=1/20,
// K={20,20,20,20,220}, G={2,5,6,7,16}, opt policy.
inline constexpr std::array kTableIV = {
    value_cell("IV", "{1,2,3,4,5}", "46", "0.0005"),
    value_cell("IV", "{1},{2,3,4,5}", "71.0526", "0.0005"),
    value_cell("IV", "{1,2},{3,4,5}", "63.7168", "0.0005"),
    value_cell("IV", "{1,2,3},{4,5}", "59.8446", "0.0005"),
    value_cell("IV", "{1,2,3,4},{5}", "66.9767", "0.0005"),
    value_cell("IV", "{1},{2},{3,4,5}", "62.8690", "0.0005"),
    value_cell("IV", "{1},{2,3},{4,5}", "63.4228", "0.0005"),
    value_cell("IV", "{1},{2,3,4},{5}", "75.5433", "0.0005"),
    value_cell("IV", "{1,2},{3},{4,5}", "58.6047", "0.0005"),
    value_cell("IV", "{1,2},{3,4},{5}", "66.9767", "0.0005"),
    value_cell("IV", "{1,2,3},{4},{5}", "63.7425", "0.0005"),
    value_cell("IV", "{1},{2},{3},{4,5}", "57.8867", "0.0005"),
    value_cell("IV", "{1},{2},{3,4},{5}", "66.0406", "0.0005"),
    value_cell("IV", "{1},{2,3},{4},{5}", "67.8179", "0.0005"),
    value_cell("IV", "{1,2},{3},{4},{5}", "62.3377", "0.0005"),
    value_cell("IV", "{1},{2},{3},{4},{5}", "61.5259", "0.0005"),
};

// Single-round grid keyed "b=<beta_hat>,W=<Omega>" plus the comparison columns;
// L=16, gamma=1/25, K={25,75,125}, G={2,4,8}, opt policy.
inline constexpr std::array kTableV = {
    value_cell("V", "b=2,W=10", "20", "0.01"),       value_cell("V", "b=2,W=11", "22", "0.01"),
    value_cell("V", "b=2,W=12", "24", "0.01"),       value_cell("V", "b=2,W=13", "26", "0.01"),
    value_cell("V", "b=2,W=14", "28", "0.01"),       value_cell("V", "b=2,W=15", "30", "0.01"),
    value_cell("V", "b=2,W=16", "32", "0.01"),       value_cell("V", "b=2,W=17", "34", "0.01"),
    value_cell("V", "b=3,W=10", "28.05", "0.01"), value_cell("V", "b=3,W=11", "30.66", "0.01"),
    value_cell("V", "b=3,W=12", "33.23", "0.01"), value_cell("V", "b=3,W=13", "35.77", "0.01"),
    value_cell("V", "b=3,W=14", "38.28", "0.01"), value_cell("V", "b=3,W=15", "40.75", "0.01"),
    empty_cell("V", "b=3,W=16"),                     empty_cell("V", "b=3,W=17"),
    value_cell("V", "b=4,W=10", "35.12", "0.01"), value_cell("V", "b=4,W=11", "38.17", "0.01"),
    value_cell("V", "b=4,W=12", "41.14", "0.01"), value_cell("V", "b=4,W=13", "44.05", "0.01"),
    empty_cell("V", "b=4,W=14"),                     empty_cell("V", "b=4,W=15"),
    empty_cell("V", "b=4,W=16"),                     empty_cell("V", "b=4,W=17"),
    value_cell("V", "b=5,W=10", "35.29", "0.01"), value_cell("V", "b=5,W=11", "37.71", "0.01"),
    value_cell("V", "b=5,W=12", "40", "0.01"),       value_cell("V", "b=5,W=13", "42.16", "0.01"),
    empty_cell("V", "b=5,W=14"),                     empty_cell("V", "b=5,W=15"),
    empty_cell("V", "b=5,W=16"),                     empty_cell("V", "b=5,W=17"),
    value_cell("V", "b=6,W=10", "35.41", "0.01"), value_cell("V", "b=6,W=11", "37.42", "0.01"),
    value_cell("V", "b=6,W=12", "39.27", "0.01"), empty_cell("V", "b=6,W=13"),
    empty_cell("V", "b=6,W=14"),                     empty_cell("V", "b=6,W=15"),
    empty_cell("V", "b=6,W=16"),                     empty_cell("V", "b=6,W=17"),
    value_cell("V", "b=7,W=10", "35.49", "0.01"), value_cell("V", "b=7,W=11", "37.21", "0.01"),
    value_cell("V", "b=7,W=12", "38.77", "0.01"), empty_cell("V", "b=7,W=13"),
    empty_cell("V", "b=7,W=14"),                     empty_cell("V", "b=7,W=15"),
    empty_cell("V", "b=7,W=16"),                     empty_cell("V", "b=7,W=17"),
    value_cell("V", "b=8,W=10", "35.56", "0.01"), value_cell("V", "b=8,W=11", "37.05", "0.01"),
    empty_cell("V", "b=8,W=12"),                     empty_cell("V", "b=8,W=13"),
    empty_cell("V", "b=8,W=14"),                     empty_cell("V", "b=8,W=15"),
    empty_cell("V", "b=8,W=16"),                     empty_cell("V", "b=8,W=17"),
    value_cell("V", "min-G", "34", "0.01"),
    value_cell("V", "min-G/Omega", "17", "0"),
    value_cell("V", "Grouping", "35.72", "0.01"),
    text_cell("V", "Grouping/1", "(9,18)"),
    text_cell("V", "Grouping/2", "(7,28)"),
    text_cell("V", "Grouping/3", "(7,56)"),
    value_cell("V", "Phantom", "44.05", "0.01"),
};

}  // namespace mimocc::reference
