// Copyright 2026 The infima Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fixed reference values the tests compare against.

#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace infima::testing {

/// m_1 .. m_20.
inline constexpr std::array<unsigned long, 20> kMinimalCounts = {
    1,    3,    6,     11,    20,    36,    61,    101,   166,   283,
    481,  816,  1336,  2181,  3693,  6267,  10581, 17301, 28221, 47877};

/// Root-branch decompositions of the minimal trees of orders 1..60.
/// Alternatives are separated by '|'; within one, branches are separated by
/// spaces. "*" is a single vertex and "Mk" stands for every minimal tree of
/// order k. The empty decomposition is the single vertex.
struct Decomposition {
  std::size_t n;
  std::string_view branches;
};

inline constexpr std::array<Decomposition, 60> kDecompositions = {{
    {1, ""},          {2, "*"},         {3, "* *"},       {4, "* * *"},
    {5, "* * * *"},   {6, "M4 * | M3 * *"},               {7, "M4 * * | M3 M3"},
    {8, "M4 M3"},     {9, "M4 M4"},     {10, "M5 M4"},    {11, "M5 M5"},
    {12, "M7 M4"},    {13, "M8 M4"},    {14, "M9 M4"},    {15, "M9 M5"},
    {16, "M10 M5"},   {17, "M9 M7"},    {18, "M9 M8"},    {19, "M9 M9"},
    {20, "M10 M9"},   {21, "M11 M9"},   {22, "M12 M9"},   {23, "M13 M9"},
    {24, "M14 M9"},   {25, "M15 M9"},   {26, "M15 M10"},  {27, "M17 M9"},
    {28, "M18 M9"},   {29, "M19 M9"},   {30, "M19 M10"},  {31, "M19 M11"},
    {32, "M19 M12"},  {33, "M19 M13"},  {34, "M19 M14"},  {35, "M19 M15"},
    {36, "M20 M15"},  {37, "M19 M17"},  {38, "M19 M18"},  {39, "M19 M19"},
    {40, "M20 M19"},  {41, "M21 M19"},  {42, "M22 M19"},  {43, "M23 M19"},
    {44, "M24 M19"},  {45, "M25 M19"},  {46, "M26 M19"},  {47, "M27 M19"},
    {48, "M28 M19"},  {49, "M29 M19"},  {50, "M30 M19"},  {51, "M31 M19"},
    {52, "M32 M19"},  {53, "M33 M19"},  {54, "M34 M19"},  {55, "M35 M19"},
    {56, "M35 M20"},  {57, "M37 M19"},  {58, "M38 M19"},  {59, "M39 M19"},
    {60, "M39 M20"},
}};

/// alpha to 25 significant digits.
inline constexpr std::string_view kAlpha25 = "1.6692837234969214974026178";

/// Reference limsup of alpha^(-n-1) m_n, 11 significant digits.
inline constexpr double kRatioLimsup = 1.0468049642;

/// Orders at which m_n = ceil(alpha^(n+1)) - 2.
inline constexpr std::array<std::size_t, 5> kTightOrders = {4, 9, 19, 39, 79};

}  // namespace infima::testing
