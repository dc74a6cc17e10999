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

#ifndef BNBAUDIT_SIMPLEX_FP_HPP_
#define BNBAUDIT_SIMPLEX_FP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bnbaudit/lp_types.hpp"
#include "bnbaudit/model.hpp"

namespace bnbaudit {

enum class LpStatus : std::uint8_t { Optimal, Infeasible, Unbounded, IterationLimit };

std::string to_string(LpStatus status);

struct FpTolerances {
   double feastol = 1e-6;  ///< primal feasibility
   double opttol = 1e-7;   ///< dual feasibility (reduced costs)
   double zerotol = 1e-9;  ///< pivot / ratio test
};

struct FpLpResult {
   LpStatus status = LpStatus::IterationLimit;
   double objective = 0.0;
   std::vector<double> x;              ///< structural values
   std::vector<double> y;              ///< row duals
   std::vector<double> reduced_plus;   ///< max(d, 0)
   std::vector<double> reduced_minus;  ///< max(-d, 0)
   std::optional<Basis> basis;
   std::vector<double> farkas;         ///< row multipliers, only when Infeasible
   int iterations = 0;
};

/// Column-major copy of the model in binary64, shared between solves.
class FpLpData {
public:
   explicit FpLpData(const MipProblem& problem);

   int num_vars() const { return n_; }
   int num_rows() const { return m_; }

private:
   friend class FpSimplex;

   int n_;
   int m_;
   std::vector<double> cost_;
   std::vector<std::vector<std::pair<int, double>>> columns_;
   std::vector<double> rhs_;
};

/// Bounded-variable revised simplex with a composite phase 1 (sum of
/// infeasibilities), Dantzig pricing and a permanent switch to Bland's rule
/// after 3 (n + m) degenerate pivots. Fully deterministic.
FpLpResult solve_lp_fp(const FpLpData& data, const LocalBounds& bounds, const FpTolerances& tolerances,
                       int iteration_limit);

FpLpResult solve_lp_fp(const MipProblem& problem, const LocalBounds& bounds, const FpTolerances& tolerances,
                       int iteration_limit);

}  // namespace bnbaudit

#endif
