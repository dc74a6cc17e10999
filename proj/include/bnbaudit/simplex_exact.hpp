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

#ifndef BNBAUDIT_SIMPLEX_EXACT_HPP_
#define BNBAUDIT_SIMPLEX_EXACT_HPP_

#include <span>
#include <string>
#include <vector>

#include "bnbaudit/lp_types.hpp"
#include "bnbaudit/model.hpp"

namespace bnbaudit {

enum class ExactStatus : std::uint8_t { Optimal, Infeasible, Unbounded };

std::string to_string(ExactStatus status);

/// Round-off-error-free LP outcome. When Optimal, x is primal feasible,
/// (y, r_plus, r_minus) is dual feasible and both objectives agree exactly.
/// When Unbounded, x holds the last feasible vertex.
struct ExactLpResult {
   ExactStatus status = ExactStatus::Infeasible;
   ExtendedRational objective;
   std::vector<Rational> x;
   std::vector<Rational> y;
   std::vector<Rational> r_plus;
   std::vector<Rational> r_minus;
   std::vector<Rational> farkas;
};

/// Bounded-variable primal simplex over the rationals with Bland's rule and
/// an artificial-variable phase 1.
ExactLpResult solve_lp_exact(const MipProblem& problem, const LocalBounds& bounds);

enum class FactorizationOutcome : std::uint8_t {
   Optimal,        ///< basis is exactly primal and dual feasible
   DualBoundOnly,  ///< exactly dual feasible only, its dual objective is valid
   Undecided,
};

struct FactorizationResult {
   FactorizationOutcome outcome = FactorizationOutcome::Undecided;
   ExtendedRational bound;  ///< exact LP value (Optimal) or dual bound
   ExactLpResult solution;  ///< filled when Optimal
   bool primal_feasible = false;
};

FactorizationResult factorize_basis_exact(const MipProblem& problem, const LocalBounds& bounds, const Basis& basis);

struct Completion {
   bool feasible = false;
   std::vector<Rational> x;
   ExtendedRational objective;
   std::vector<Rational> farkas;  ///< certificate for the fixed LP when infeasible
};

/// Fixes every integer variable to `values[j]` (clamped into its bounds) and
/// solves the remaining LP over the continuous variables exactly.
Completion complete_solution(const MipProblem& problem, const LocalBounds& bounds, std::span<const Rational> values);

/// b^T y + l^T r_plus - u^T r_minus; a nonzero multiplier on an infinite
/// bound yields -inf.
ExtendedRational dual_objective(const MipProblem& problem, const LocalBounds& bounds, std::span<const Rational> y,
                                std::span<const Rational> r_plus, std::span<const Rational> r_minus);

/// A^T y
std::vector<Rational> transpose_times(const MipProblem& problem, std::span<const Rational> y);

}  // namespace bnbaudit

#endif
