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

#ifndef BNBAUDIT_MODEL_HPP_
#define BNBAUDIT_MODEL_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnbaudit/rational.hpp"

namespace bnbaudit {

struct SparseEntry {
   int column = 0;
   Rational value;

   friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

using SparseRow = std::vector<SparseEntry>;

/// min c^T x  s.t.  A x >= b,  l <= x <= u,  x_j integer for j in I.
///
/// Every row is stored in ">= rhs" sense; entries within a row are sorted by
/// column and nonzero. A maximization input is negated at parse time and
/// remembered in `maximize` for reporting.
struct MipProblem {
   std::string name;
   std::vector<Rational> objective;
   std::vector<SparseRow> rows;
   std::vector<Rational> rhs;
   std::vector<ExtendedRational> lower;
   std::vector<ExtendedRational> upper;
   std::vector<bool> integer;
   std::vector<std::string> var_names;
   std::vector<std::string> row_names;
   bool maximize = false;
   /// Set when presolve proved the model infeasible (crossing bounds or an
   /// unsatisfiable row).
   bool infeasible = false;

   /// Index of each current variable/row in the unpermuted model.
   std::vector<int> var_origin;
   std::vector<int> row_origin;

   int num_vars() const { return static_cast<int>(objective.size()); }
   int num_rows() const { return static_cast<int>(rows.size()); }

   /// Adds a variable and returns its index.
   int add_variable(std::string var_name, Rational cost, ExtendedRational lb, ExtendedRational ub, bool is_integer);
   /// Adds `entries . x >= rhs`; entries are sorted, merged and zeros dropped.
   int add_row(std::string row_name, SparseRow entries, Rational row_rhs);

   /// Resets both origin maps to the identity.
   void reset_origins();
};

class ModelParseError : public std::runtime_error {
public:
   ModelParseError(const std::string& message, int line);
   int line() const { return line_; }

private:
   int line_;
};

/// Fixed or free MPS. L rows are negated, E rows and RANGES become two >=
/// rows, maximization is turned into minimization. Integer variables get
/// their bounds rounded inward.
MipProblem parse_mps(std::istream& in);
MipProblem parse_mps_file(const std::string& path);

/// Canonical exact text form; rationals are written as "p/q".
std::string write_model_text(const MipProblem& problem);
MipProblem parse_model_text(const std::string& text);

/// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string model_hash(const MipProblem& problem);

/// Deletes rows implied by the variable bounds and turns singleton rows into
/// bound changes (rounded inward for integers).
MipProblem cleanup_model(const MipProblem& problem);

/// Activity-based bound tightening, at most `max_rounds` sweeps.
MipProblem propagate_bounds(const MipProblem& problem, int max_rounds);

/// Shuffles rows, then columns, with Fisher-Yates driven by splitmix64.
MipProblem permute_model(const MipProblem& problem, std::uint64_t seed);

/// Undoes every permutation recorded in the origin maps.
MipProblem unpermute_model(const MipProblem& problem);

class SplitMix64 {
public:
   explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
   std::uint64_t next();

private:
   std::uint64_t state_;
};

}  // namespace bnbaudit

#endif
