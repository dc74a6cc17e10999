/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */
/*                                                                           */
/*               This file is part of the program and library                */
/*    BNB-AUDITOR                                                            */
/*                                                                           */
/* Copyright (C) 2026                                                        */
/*                                                                           */
/*  Licensed under the Apache License, Version 2.0 (the "License");          */
/*  you may not use this file except in compliance with the License.         */
/*  You may obtain a copy of the License at                                  */
/*                                                                           */
/*      http://www.apache.org/licenses/LICENSE-2.0                           */
/*                                                                           */
/*  Unless required by applicable law or agreed to in writing, software      */
/*  distributed under the License is distributed on an "AS IS" BASIS,        */
/*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. */
/*  See the License for the specific language governing permissions and      */
/*  limitations under the License.                                           */
/*                                                                           */
/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */

#ifndef BNBAUDIT_LP_TYPES_HPP_
#define BNBAUDIT_LP_TYPES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bnbaudit/model.hpp"
#include "bnbaudit/rational.hpp"

namespace bnbaudit {

/// Variable bounds in effect at a branch-and-bound node.
struct LocalBounds {
   std::vector<ExtendedRational> lower;
   std::vector<ExtendedRational> upper;

   static LocalBounds of(const MipProblem& problem) { return { problem.lower, problem.upper }; }
   bool empty_box() const;

   friend bool operator==(const LocalBounds&, const LocalBounds&) = default;
};

enum class VarStatus : std::uint8_t { Basic, AtLower, AtUpper, FreeNonbasic };

std::string to_string(VarStatus status);
VarStatus var_status_from_string(const std::string& text);

/// Simplex basis over the structural columns and one logical (surplus)
/// column per row, a_i x - s_i = b_i with s_i >= 0.
struct Basis {
   std::vector<VarStatus> structural;
   std::vector<VarStatus> logical;

   int num_basic() const;

   friend bool operator==(const Basis&, const Basis&) = default;
};

}  // namespace bnbaudit

#endif
