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

#include "bnbaudit/model.hpp"

namespace bnbaudit {

namespace {

struct Activity {
   Rational finite_sum;
   int infinite_terms = 0;

   ExtendedRational value(bool upper) const {
      if( infinite_terms > 0 )
         return upper ? ExtendedRational::plus_infinity() : ExtendedRational::minus_infinity();
      return finite_sum;
   }
};

/// Contribution of a * x_j to the row activity at its max (upper = true) or
/// min over the bound box.
ExtendedRational term_bound(const Rational& a, const ExtendedRational& lb, const ExtendedRational& ub, bool upper) {
   const bool use_upper_bound = (a.sign() > 0) == upper;
   return ExtendedRational(a) * (use_upper_bound ? ub : lb);
}

Activity activity(const MipProblem& problem, const SparseRow& row, bool upper) {
   Activity result;
   for( const SparseEntry& entry : row ) {
      const ExtendedRational term = term_bound(entry.value, problem.lower[entry.column], problem.upper[entry.column], upper);
      if( term.is_finite() )
         result.finite_sum += term.finite();
      else
         ++result.infinite_terms;
   }
   return result;
}

bool tighten_lower(MipProblem& problem, int column, Rational bound) {
   if( problem.integer[column] )
      bound = bound.ceil();
   if( ExtendedRational(bound) <= problem.lower[column] )
      return false;
   problem.lower[column] = std::move(bound);
   return true;
}

bool tighten_upper(MipProblem& problem, int column, Rational bound) {
   if( problem.integer[column] )
      bound = bound.floor();
   if( ExtendedRational(bound) >= problem.upper[column] )
      return false;
   problem.upper[column] = std::move(bound);
   return true;
}

void flag_crossing_bounds(MipProblem& problem) {
   for( int j = 0; j < problem.num_vars(); ++j ) {
      if( problem.lower[j] > problem.upper[j] )
         problem.infeasible = true;
   }
}

}  // namespace

MipProblem cleanup_model(const MipProblem& problem) {
   MipProblem result = problem;
   result.rows.clear();
   result.rhs.clear();
   result.row_names.clear();
   result.row_origin.clear();

   for( int i = 0; i < problem.num_rows(); ++i ) {
      const SparseRow& row = problem.rows[i];
      const Rational& b = problem.rhs[i];

      if( activity(result, row, true).value(true) < ExtendedRational(b) ) {
         result.infeasible = true;
      }
      else if( activity(result, row, false).value(false) >= ExtendedRational(b) ) {
         continue;
      }
      else if( row.size() == 1 ) {
         const SparseEntry& entry = row.front();
         const Rational bound = b / entry.value;
         if( entry.value.sign() > 0 )
            tighten_lower(result, entry.column, bound);
         else
            tighten_upper(result, entry.column, bound);
         continue;
      }

      result.rows.push_back(row);
      result.rhs.push_back(b);
      result.row_names.push_back(problem.row_names[i]);
      result.row_origin.push_back(problem.row_origin[i]);
   }

   flag_crossing_bounds(result);
   return result;
}

MipProblem propagate_bounds(const MipProblem& problem, int max_rounds) {
   MipProblem result = problem;
   for( int round = 0; round < max_rounds && !result.infeasible; ++round ) {
      bool changed = false;
      for( int i = 0; i < result.num_rows(); ++i ) {
         const SparseRow& row = result.rows[i];
         const Rational& b = result.rhs[i];

         // Max activity stays valid within the sweep: tightening the lower
         // bound of a positive term (upper of a negative one) leaves that
         // term's maximum unchanged.
         const Activity max_activity = activity(result, row, true);
         if( max_activity.infinite_terms == 0 && max_activity.finite_sum < b ) {
            result.infeasible = true;
            break;
         }
         if( max_activity.infinite_terms > 1 )
            continue;

         for( const SparseEntry& entry : row ) {
            const ExtendedRational own = term_bound(entry.value, result.lower[entry.column], result.upper[entry.column], true);
            Rational rest;
            if( own.is_finite() ) {
               if( max_activity.infinite_terms > 0 )
                  continue;
               rest = max_activity.finite_sum - own.finite();
            }
            else
               rest = max_activity.finite_sum;

            const Rational implied = (b - rest) / entry.value;
            if( entry.value.sign() > 0 )
               changed |= tighten_lower(result, entry.column, implied);
            else
               changed |= tighten_upper(result, entry.column, implied);
         }
      }
      flag_crossing_bounds(result);
      if( !changed )
         break;
   }
   return result;
}

}  // namespace bnbaudit
