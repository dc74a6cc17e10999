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

#include "bnbaudit/simplex_exact.hpp"

#include <optional>

#include "bnbaudit/rational_lu.hpp"

namespace bnbaudit {

std::string to_string(ExactStatus status) {
   switch( status ) {
   case ExactStatus::Optimal:
      return "optimal";
   case ExactStatus::Infeasible:
      return "infeasible";
   case ExactStatus::Unbounded:
      return "unbounded";
   }
   return "unknown";
}

ExtendedRational dual_objective(const MipProblem& problem, const LocalBounds& bounds, std::span<const Rational> y,
                                std::span<const Rational> r_plus, std::span<const Rational> r_minus) {
   Rational value;
   for( int i = 0; i < problem.num_rows(); ++i ) {
      if( !y[i].is_zero() )
         value += problem.rhs[i] * y[i];
   }
   for( int j = 0; j < problem.num_vars(); ++j ) {
      if( !r_plus[j].is_zero() ) {
         if( !bounds.lower[j].is_finite() )
            return ExtendedRational::minus_infinity();
         value += bounds.lower[j].finite() * r_plus[j];
      }
      if( !r_minus[j].is_zero() ) {
         if( !bounds.upper[j].is_finite() )
            return ExtendedRational::minus_infinity();
         value -= bounds.upper[j].finite() * r_minus[j];
      }
   }
   return value;
}

std::vector<Rational> transpose_times(const MipProblem& problem, std::span<const Rational> y) {
   std::vector<Rational> result(static_cast<std::size_t>(problem.num_vars()));
   for( int i = 0; i < problem.num_rows(); ++i ) {
      if( y[i].is_zero() )
         continue;
      for( const SparseEntry& entry : problem.rows[i] )
         result[entry.column] += entry.value * y[i];
   }
   return result;
}

namespace {

using Column = std::vector<std::pair<int, Rational>>;

std::vector<Column> structural_columns(const MipProblem& problem) {
   std::vector<Column> columns(static_cast<std::size_t>(problem.num_vars()));
   for( int i = 0; i < problem.num_rows(); ++i ) {
      for( const SparseEntry& entry : problem.rows[i] )
         columns[entry.column].emplace_back(i, entry.value);
   }
   return columns;
}

/// Columns: structural [0, n), logical [n, n+m) with column -e_i and bounds
/// [0, inf), artificial [n+m, n+2m) with column +e_i.
class ExactSimplex {
public:
   ExactSimplex(const MipProblem& problem, const LocalBounds& bounds);
   ExactLpResult run();

private:
   enum class Outcome { Optimal, Unbounded };

   int n() const { return n_; }
   int m() const { return m_; }
   int total() const { return n_ + 2 * m_; }
   bool is_artificial(int j) const { return j >= n_ + m_; }

   Rational& binv(int r, int k) { return binv_[static_cast<std::size_t>(r) * m_ + k]; }
   const Rational& binv(int r, int k) const { return binv_[static_cast<std::size_t>(r) * m_ + k]; }

   bool is_fixed(int j) const { return lower_[j].is_finite() && upper_[j].is_finite() && lower_[j] == upper_[j]; }
   Rational dot_column(const std::vector<Rational>& pi, int j) const;
   std::vector<Rational> ftran(int j) const;
   std::vector<Rational> duals(const std::vector<Rational>& cost) const;
   Outcome iterate(const std::vector<Rational>& cost);

   const MipProblem& problem_;
   int n_;
   int m_;
   std::vector<Column> columns_;
   std::vector<ExtendedRational> lower_;
   std::vector<ExtendedRational> upper_;
   std::vector<VarStatus> status_;
   std::vector<Rational> value_;
   std::vector<int> head_;
   std::vector<Rational> binv_;
};

ExactSimplex::ExactSimplex(const MipProblem& problem, const LocalBounds& bounds)
   : problem_(problem), n_(problem.num_vars()), m_(problem.num_rows()), columns_(structural_columns(problem)) {
   lower_ = bounds.lower;
   upper_ = bounds.upper;
   lower_.resize(static_cast<std::size_t>(total()), ExtendedRational(0));
   upper_.resize(static_cast<std::size_t>(total()), ExtendedRational::plus_infinity());
   status_.assign(static_cast<std::size_t>(total()), VarStatus::AtLower);
   value_.assign(static_cast<std::size_t>(total()), Rational(0));
}

Rational ExactSimplex::dot_column(const std::vector<Rational>& pi, int j) const {
   if( j >= n_ + m_ )
      return pi[j - n_ - m_];
   if( j >= n_ )
      return -pi[j - n_];
   Rational sum;
   for( const auto& [row, a] : columns_[j] ) {
      if( !pi[row].is_zero() )
         sum += pi[row] * a;
   }
   return sum;
}

std::vector<Rational> ExactSimplex::ftran(int j) const {
   std::vector<Rational> alpha(static_cast<std::size_t>(m_));
   if( j >= n_ ) {
      const int row = j >= n_ + m_ ? j - n_ - m_ : j - n_;
      const bool negate = j < n_ + m_;
      for( int r = 0; r < m_; ++r ) {
         if( !binv(r, row).is_zero() )
            alpha[r] = negate ? -binv(r, row) : binv(r, row);
      }
      return alpha;
   }
   for( const auto& [row, a] : columns_[j] ) {
      for( int r = 0; r < m_; ++r ) {
         if( !binv(r, row).is_zero() )
            alpha[r] += binv(r, row) * a;
      }
   }
   return alpha;
}

std::vector<Rational> ExactSimplex::duals(const std::vector<Rational>& cost) const {
   std::vector<Rational> pi(static_cast<std::size_t>(m_));
   for( int r = 0; r < m_; ++r ) {
      const Rational& c = cost[head_[r]];
      if( c.is_zero() )
         continue;
      for( int k = 0; k < m_; ++k ) {
         if( !binv(r, k).is_zero() )
            pi[k] += c * binv(r, k);
      }
   }
   return pi;
}

ExactSimplex::Outcome ExactSimplex::iterate(const std::vector<Rational>& cost) {
   while( true ) {
      const std::vector<Rational> pi = duals(cost);

      // Bland: lowest-index improving column
      int entering = -1;
      int direction = 0;
      for( int j = 0; j < total() && entering < 0; ++j ) {
         if( status_[j] == VarStatus::Basic || is_fixed(j) )
            continue;
         const Rational d = cost[j] - dot_column(pi, j);
         if( d.is_zero() )
            continue;
         if( (status_[j] == VarStatus::AtLower && d.sign() < 0) || (status_[j] == VarStatus::AtUpper && d.sign() > 0)
             || status_[j] == VarStatus::FreeNonbasic ) {
            entering = j;
            direction = d.sign() < 0 ? 1 : -1;
         }
      }
      if( entering < 0 )
         return Outcome::Optimal;

      const std::vector<Rational> alpha = ftran(entering);
      std::optional<Rational> theta;
      int leaving = -1;
      bool leaving_to_upper = false;
      for( int r = 0; r < m_; ++r ) {
         if( alpha[r].is_zero() )
            continue;
         const Rational rate = direction > 0 ? -alpha[r] : alpha[r];
         const int j = head_[r];
         const ExtendedRational& target = rate.sign() > 0 ? upper_[j] : lower_[j];
         if( !target.is_finite() )
            continue;
         const Rational ratio = (target.finite() - value_[j]) / rate;
         if( !theta || ratio < *theta || (ratio == *theta && j < head_[leaving]) ) {
            theta = ratio;
            leaving = r;
            leaving_to_upper = rate.sign() > 0;
         }
      }

      std::optional<Rational> flip;
      if( direction > 0 && upper_[entering].is_finite() )
         flip = upper_[entering].finite() - value_[entering];
      else if( direction < 0 && lower_[entering].is_finite() )
         flip = value_[entering] - lower_[entering].finite();

      if( flip && (!theta || *flip <= *theta) ) {
         const Rational step = *flip;
         for( int r = 0; r < m_; ++r ) {
            if( !alpha[r].is_zero() )
               value_[head_[r]] -= (direction > 0 ? alpha[r] : -alpha[r]) * step;
         }
         if( direction > 0 ) {
            status_[entering] = VarStatus::AtUpper;
            value_[entering] = upper_[entering].finite();
         }
         else {
            status_[entering] = VarStatus::AtLower;
            value_[entering] = lower_[entering].finite();
         }
         continue;
      }
      if( !theta )
         return Outcome::Unbounded;

      const Rational step = *theta;
      if( !step.is_zero() ) {
         for( int r = 0; r < m_; ++r ) {
            if( !alpha[r].is_zero() )
               value_[head_[r]] -= (direction > 0 ? alpha[r] : -alpha[r]) * step;
         }
         value_[entering] += direction > 0 ? step : -step;
      }
      const int leaving_var = head_[leaving];
      value_[leaving_var] = leaving_to_upper ? upper_[leaving_var].finite() : lower_[leaving_var].finite();
      status_[leaving_var] = leaving_to_upper ? VarStatus::AtUpper : VarStatus::AtLower;
      status_[entering] = VarStatus::Basic;
      head_[leaving] = entering;

      const Rational pivot = alpha[leaving];
      for( int k = 0; k < m_; ++k ) {
         if( !binv(leaving, k).is_zero() )
            binv(leaving, k) /= pivot;
      }
      for( int r = 0; r < m_; ++r ) {
         if( r == leaving || alpha[r].is_zero() )
            continue;
         for( int k = 0; k < m_; ++k ) {
            if( !binv(leaving, k).is_zero() )
               binv(r, k) -= alpha[r] * binv(leaving, k);
         }
      }
   }
}

ExactLpResult ExactSimplex::run() {
   ExactLpResult result;
   for( int j = 0; j < n_; ++j ) {
      if( lower_[j] > upper_[j] ) {
         result.status = ExactStatus::Infeasible;
         result.objective = ExtendedRational::plus_infinity();
         result.farkas.assign(static_cast<std::size_t>(m_), Rational(0));
         return result;
      }
   }

   for( int j = 0; j < n_; ++j ) {
      if( lower_[j].is_finite() ) {
         status_[j] = VarStatus::AtLower;
         value_[j] = lower_[j].finite();
      }
      else if( upper_[j].is_finite() ) {
         status_[j] = VarStatus::AtUpper;
         value_[j] = upper_[j].finite();
      }
      else
         status_[j] = VarStatus::FreeNonbasic;
   }

   // surplus rows start basic, violated rows get an artificial
   head_.resize(static_cast<std::size_t>(m_));
   binv_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), Rational(0));
   for( int i = 0; i < m_; ++i ) {
      Rational residual = problem_.rhs[i];
      for( const SparseEntry& entry : problem_.rows[i] ) {
         if( !value_[entry.column].is_zero() )
            residual -= entry.value * value_[entry.column];
      }
      if( residual.sign() <= 0 ) {
         head_[i] = n_ + i;
         status_[n_ + i] = VarStatus::Basic;
         value_[n_ + i] = -residual;
         binv(i, i) = -1;
      }
      else {
         head_[i] = n_ + m_ + i;
         status_[n_ + m_ + i] = VarStatus::Basic;
         value_[n_ + m_ + i] = residual;
         binv(i, i) = 1;
      }
   }

   std::vector<Rational> cost(static_cast<std::size_t>(total()));
   for( int i = 0; i < m_; ++i )
      cost[n_ + m_ + i] = 1;
   iterate(cost);

   Rational infeasibility;
   for( int i = 0; i < m_; ++i )
      infeasibility += value_[n_ + m_ + i];
   if( infeasibility.sign() > 0 ) {
      result.status = ExactStatus::Infeasible;
      result.objective = ExtendedRational::plus_infinity();
      result.farkas = duals(cost);
      result.x.assign(value_.begin(), value_.begin() + n_);
      return result;
   }

   for( int i = 0; i < m_; ++i ) {
      upper_[n_ + m_ + i] = 0;
      cost[n_ + m_ + i] = 0;
   }
   for( int j = 0; j < n_; ++j )
      cost[j] = problem_.objective[j];

   const Outcome outcome = iterate(cost);
   result.x.assign(value_.begin(), value_.begin() + n_);
   if( outcome == Outcome::Unbounded ) {
      result.status = ExactStatus::Unbounded;
      result.objective = ExtendedRational::minus_infinity();
      return result;
   }

   result.status = ExactStatus::Optimal;
   result.y = duals(cost);
   result.r_plus.assign(static_cast<std::size_t>(n_), Rational(0));
   result.r_minus.assign(static_cast<std::size_t>(n_), Rational(0));
   for( int j = 0; j < n_; ++j ) {
      if( status_[j] == VarStatus::Basic )
         continue;
      const Rational d = cost[j] - dot_column(result.y, j);
      if( d.sign() > 0 )
         result.r_plus[j] = d;
      else if( d.sign() < 0 )
         result.r_minus[j] = -d;
   }
   Rational objective;
   for( int j = 0; j < n_; ++j ) {
      if( !problem_.objective[j].is_zero() )
         objective += problem_.objective[j] * result.x[j];
   }
   result.objective = objective;
   return result;
}

}  // namespace

ExactLpResult solve_lp_exact(const MipProblem& problem, const LocalBounds& bounds) {
   ExactSimplex simplex(problem, bounds);
   return simplex.run();
}

FactorizationResult factorize_basis_exact(const MipProblem& problem, const LocalBounds& bounds, const Basis& basis) {
   FactorizationResult result;
   const int n = problem.num_vars();
   const int m = problem.num_rows();
   if( static_cast<int>(basis.structural.size()) != n || static_cast<int>(basis.logical.size()) != m
       || basis.num_basic() != m )
      return result;

   // nonbasic values
   std::vector<Rational> x(static_cast<std::size_t>(n));
   std::vector<int> basic_columns;
   for( int j = 0; j < n; ++j ) {
      switch( basis.structural[j] ) {
      case VarStatus::Basic:
         basic_columns.push_back(j);
         break;
      case VarStatus::AtLower:
         if( !bounds.lower[j].is_finite() )
            return result;
         x[j] = bounds.lower[j].finite();
         break;
      case VarStatus::AtUpper:
         if( !bounds.upper[j].is_finite() )
            return result;
         x[j] = bounds.upper[j].finite();
         break;
      case VarStatus::FreeNonbasic:
         break;
      }
   }
   for( int i = 0; i < m; ++i ) {
      if( basis.logical[i] == VarStatus::Basic )
         basic_columns.push_back(n + i);
      else if( basis.logical[i] != VarStatus::AtLower )
         return result;
   }

   const auto stride = static_cast<std::size_t>(m);
   std::vector<Rational> matrix(stride * stride);
   const std::vector<Column> columns = structural_columns(problem);
   for( int k = 0; k < m; ++k ) {
      const int j = basic_columns[k];
      if( j >= n )
         matrix[(j - n) * stride + k] = -1;
      else {
         for( const auto& [row, a] : columns[j] )
            matrix[row * stride + k] = a;
      }
   }
   const auto lu = RationalLu::factorize(std::move(matrix), m);
   if( !lu )
      return result;

   std::vector<Rational> residual = problem.rhs;
   for( int i = 0; i < m; ++i ) {
      for( const SparseEntry& entry : problem.rows[i] ) {
         if( basis.structural[entry.column] != VarStatus::Basic && !x[entry.column].is_zero() )
            residual[i] -= entry.value * x[entry.column];
      }
   }
   const std::vector<Rational> basic_values = lu->solve(residual);

   std::vector<Rational> basic_cost(stride);
   for( int k = 0; k < m; ++k ) {
      if( basic_columns[k] < n )
         basic_cost[k] = problem.objective[basic_columns[k]];
   }
   const std::vector<Rational> y = lu->solve_transposed(basic_cost);

   bool primal_feasible = true;
   for( int k = 0; k < m; ++k ) {
      const int j = basic_columns[k];
      if( j >= n ) {
         primal_feasible = primal_feasible && basic_values[k].sign() >= 0;
         continue;
      }
      x[j] = basic_values[k];
      primal_feasible = primal_feasible && bounds.lower[j] <= ExtendedRational(x[j]) && ExtendedRational(x[j]) <= bounds.upper[j];
   }
   result.primal_feasible = primal_feasible;

   bool rows_nonnegative = true;
   for( const Rational& value : y )
      rows_nonnegative = rows_nonnegative && value.sign() >= 0;
   if( !rows_nonnegative )
      return result;

   const std::vector<Rational> aty = transpose_times(problem, y);
   std::vector<Rational> r_plus(static_cast<std::size_t>(n));
   std::vector<Rational> r_minus(static_cast<std::size_t>(n));
   bool dual_feasible = true;
   for( int j = 0; j < n; ++j ) {
      const Rational d = problem.objective[j] - aty[j];
      if( d.sign() > 0 )
         r_plus[j] = d;
      else if( d.sign() < 0 )
         r_minus[j] = -d;
      if( basis.structural[j] != VarStatus::Basic && bounds.lower[j] == bounds.upper[j] )
         continue;
      switch( basis.structural[j] ) {
      case VarStatus::Basic:
      case VarStatus::FreeNonbasic:
         dual_feasible = dual_feasible && d.is_zero();
         break;
      case VarStatus::AtLower:
         dual_feasible = dual_feasible && d.sign() >= 0;
         break;
      case VarStatus::AtUpper:
         dual_feasible = dual_feasible && d.sign() <= 0;
         break;
      }
   }

   const ExtendedRational bound = dual_objective(problem, bounds, y, r_plus, r_minus);
   if( primal_feasible && dual_feasible ) {
      result.outcome = FactorizationOutcome::Optimal;
      result.bound = bound;
      result.solution.status = ExactStatus::Optimal;
      result.solution.objective = bound;
      result.solution.x = std::move(x);
      result.solution.y = y;
      result.solution.r_plus = std::move(r_plus);
      result.solution.r_minus = std::move(r_minus);
      return result;
   }
   if( !dual_feasible )
      return result;
   result.outcome = FactorizationOutcome::DualBoundOnly;
   result.bound = bound;
   return result;
}

Completion complete_solution(const MipProblem& problem, const LocalBounds& bounds, std::span<const Rational> values) {
   LocalBounds fixed = bounds;
   bool has_continuous = false;
   for( int j = 0; j < problem.num_vars(); ++j ) {
      if( !problem.integer[j] ) {
         has_continuous = true;
         continue;
      }
      ExtendedRational v = values[j];
      if( v < bounds.lower[j] )
         v = bounds.lower[j];
      if( v > bounds.upper[j] )
         v = bounds.upper[j];
      fixed.lower[j] = v;
      fixed.upper[j] = v;
   }

   Completion completion;
   if( !has_continuous ) {
      // the box is a single point: check every row directly
      std::vector<Rational> x(static_cast<std::size_t>(problem.num_vars()));
      for( int j = 0; j < problem.num_vars(); ++j )
         x[j] = fixed.lower[j].finite();
      for( int i = 0; i < problem.num_rows(); ++i ) {
         Rational activity;
         for( const SparseEntry& entry : problem.rows[i] )
            activity += entry.value * x[entry.column];
         if( activity < problem.rhs[i] ) {
            completion.farkas.assign(static_cast<std::size_t>(problem.num_rows()), Rational(0));
            completion.farkas[i] = 1;
            completion.objective = ExtendedRational::plus_infinity();
            return completion;
         }
      }
      Rational objective;
      for( int j = 0; j < problem.num_vars(); ++j )
         objective += problem.objective[j] * x[j];
      completion.feasible = true;
      completion.x = std::move(x);
      completion.objective = objective;
      return completion;
   }

   ExactLpResult lp = solve_lp_exact(problem, fixed);
   completion.feasible = lp.status != ExactStatus::Infeasible;
   completion.objective = lp.objective;
   completion.x = std::move(lp.x);
   completion.farkas = std::move(lp.farkas);
   return completion;
}

}  // namespace bnbaudit
