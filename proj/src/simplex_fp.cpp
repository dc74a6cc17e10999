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

#include "bnbaudit/simplex_fp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bnbaudit {

std::string to_string(LpStatus status) {
   switch( status ) {
   case LpStatus::Optimal:
      return "optimal";
   case LpStatus::Infeasible:
      return "infeasible";
   case LpStatus::Unbounded:
      return "unbounded";
   case LpStatus::IterationLimit:
      return "iteration-limit";
   }
   return "unknown";
}

FpLpData::FpLpData(const MipProblem& problem)
   : n_(problem.num_vars()), m_(problem.num_rows()), columns_(static_cast<std::size_t>(problem.num_vars())) {
   cost_.reserve(static_cast<std::size_t>(n_));
   for( const Rational& c : problem.objective )
      cost_.push_back(c.to_double());
   for( int i = 0; i < m_; ++i ) {
      for( const SparseEntry& entry : problem.rows[i] )
         columns_[entry.column].emplace_back(i, entry.value.to_double());
      rhs_.push_back(problem.rhs[i].to_double());
   }
}

namespace {

/// Internal sentinel for missing bounds; guarded by has_lower/has_upper and
/// never used in arithmetic.
constexpr double kInfinity = 1e100;
constexpr double kSingularPivot = 1e-12;
constexpr int kRefactorInterval = 50;

}  // namespace

class FpSimplex {
public:
   FpSimplex(const FpLpData& data, const LocalBounds& bounds, const FpTolerances& tolerances, int iteration_limit);

   FpLpResult run();

private:
   int n() const { return data_.n_; }
   int m() const { return data_.m_; }
   int total() const { return data_.n_ + data_.m_; }

   double cost(int j) const { return j < n() ? data_.cost_[j] : 0.0; }
   bool is_fixed(int j) const { return has_lower_[j] && has_upper_[j] && lower_[j] == upper_[j]; }

   /// pi^T a_j
   double dot_column(const std::vector<double>& pi, int j) const;
   /// B^-1 a_j
   std::vector<double> ftran(int j) const;

   bool refactor();
   void compute_basic_values();
   bool basic_infeasibility(int r, bool& below, bool& above) const;

   FpLpResult finish(LpStatus status, const std::vector<double>& pi);

   const FpLpData& data_;
   FpTolerances tol_;
   int iteration_limit_;

   std::vector<double> lower_;
   std::vector<double> upper_;
   std::vector<bool> has_lower_;
   std::vector<bool> has_upper_;

   std::vector<VarStatus> status_;
   std::vector<double> value_;
   std::vector<int> head_;
   std::vector<double> binv_;  // row-major m x m

   int iterations_ = 0;
};

FpSimplex::FpSimplex(const FpLpData& data, const LocalBounds& bounds, const FpTolerances& tolerances,
                     int iteration_limit)
   : data_(data), tol_(tolerances), iteration_limit_(iteration_limit) {
   const auto size = static_cast<std::size_t>(total());
   lower_.assign(size, -kInfinity);
   upper_.assign(size, kInfinity);
   has_lower_.assign(size, false);
   has_upper_.assign(size, false);
   for( int j = 0; j < n(); ++j ) {
      if( bounds.lower[j].is_finite() ) {
         lower_[j] = bounds.lower[j].to_double();
         has_lower_[j] = true;
      }
      if( bounds.upper[j].is_finite() ) {
         upper_[j] = bounds.upper[j].to_double();
         has_upper_[j] = true;
      }
   }
   for( int i = 0; i < m(); ++i ) {
      lower_[n() + i] = 0.0;
      has_lower_[n() + i] = true;
   }

   status_.assign(size, VarStatus::Basic);
   value_.assign(size, 0.0);
   for( int j = 0; j < n(); ++j ) {
      if( has_lower_[j] ) {
         status_[j] = VarStatus::AtLower;
         value_[j] = lower_[j];
      }
      else if( has_upper_[j] ) {
         status_[j] = VarStatus::AtUpper;
         value_[j] = upper_[j];
      }
      else
         status_[j] = VarStatus::FreeNonbasic;
   }

   head_.resize(static_cast<std::size_t>(m()));
   binv_.assign(static_cast<std::size_t>(m()) * static_cast<std::size_t>(m()), 0.0);
   for( int i = 0; i < m(); ++i ) {
      head_[i] = n() + i;
      binv_[static_cast<std::size_t>(i) * m() + i] = -1.0;
   }
}

double FpSimplex::dot_column(const std::vector<double>& pi, int j) const {
   if( j >= n() )
      return -pi[j - n()];
   double sum = 0.0;
   for( const auto& [row, a] : data_.columns_[j] )
      sum += pi[row] * a;
   return sum;
}

std::vector<double> FpSimplex::ftran(int j) const {
   std::vector<double> alpha(static_cast<std::size_t>(m()), 0.0);
   const auto stride = static_cast<std::size_t>(m());
   if( j >= n() ) {
      const int row = j - n();
      for( int r = 0; r < m(); ++r )
         alpha[r] = -binv_[r * stride + row];
      return alpha;
   }
   for( const auto& [row, a] : data_.columns_[j] ) {
      for( int r = 0; r < m(); ++r )
         alpha[r] += binv_[r * stride + row] * a;
   }
   return alpha;
}

bool FpSimplex::refactor() {
   const int size = m();
   const auto stride = static_cast<std::size_t>(size);
   std::vector<double> basis(stride * stride, 0.0);
   for( int r = 0; r < size; ++r ) {
      const int j = head_[r];
      if( j >= n() )
         basis[(j - n()) * stride + r] = -1.0;
      else {
         for( const auto& [row, a] : data_.columns_[j] )
            basis[row * stride + r] = a;
      }
   }

   // Gauss-Jordan with partial pivoting on [B | I]
   std::vector<double> inverse(stride * stride, 0.0);
   for( int i = 0; i < size; ++i )
      inverse[i * stride + i] = 1.0;
   for( int col = 0; col < size; ++col ) {
      int pivot = col;
      for( int r = col + 1; r < size; ++r ) {
         if( std::fabs(basis[r * stride + col]) > std::fabs(basis[pivot * stride + col]) )
            pivot = r;
      }
      if( std::fabs(basis[pivot * stride + col]) < kSingularPivot )
         return false;
      if( pivot != col ) {
         for( int k = 0; k < size; ++k ) {
            std::swap(basis[pivot * stride + k], basis[col * stride + k]);
            std::swap(inverse[pivot * stride + k], inverse[col * stride + k]);
         }
      }
      const double p = basis[col * stride + col];
      for( int k = 0; k < size; ++k ) {
         basis[col * stride + k] /= p;
         inverse[col * stride + k] /= p;
      }
      for( int r = 0; r < size; ++r ) {
         if( r == col )
            continue;
         const double factor = basis[r * stride + col];
         if( factor == 0.0 )
            continue;
         for( int k = 0; k < size; ++k ) {
            basis[r * stride + k] -= factor * basis[col * stride + k];
            inverse[r * stride + k] -= factor * inverse[col * stride + k];
         }
      }
   }
   binv_ = std::move(inverse);
   compute_basic_values();
   return true;
}

void FpSimplex::compute_basic_values() {
   std::vector<double> residual = data_.rhs_;
   for( int j = 0; j < total(); ++j ) {
      if( status_[j] == VarStatus::Basic || value_[j] == 0.0 )
         continue;
      if( j >= n() )
         residual[j - n()] += value_[j];
      else {
         for( const auto& [row, a] : data_.columns_[j] )
            residual[row] -= a * value_[j];
      }
   }
   const auto stride = static_cast<std::size_t>(m());
   for( int r = 0; r < m(); ++r ) {
      double sum = 0.0;
      for( int k = 0; k < m(); ++k )
         sum += binv_[r * stride + k] * residual[k];
      value_[head_[r]] = sum;
   }
}

bool FpSimplex::basic_infeasibility(int r, bool& below, bool& above) const {
   const int j = head_[r];
   below = has_lower_[j] && value_[j] < lower_[j] - tol_.feastol;
   above = has_upper_[j] && value_[j] > upper_[j] + tol_.feastol;
   return below || above;
}

FpLpResult FpSimplex::finish(LpStatus status, const std::vector<double>& pi) {
   FpLpResult result;
   result.status = status;
   result.iterations = iterations_;
   result.x.assign(value_.begin(), value_.begin() + n());

   if( status == LpStatus::Infeasible ) {
      result.farkas = pi;
      return result;
   }
   if( status != LpStatus::Optimal && status != LpStatus::Unbounded )
      return result;

   double objective = 0.0;
   for( int j = 0; j < n(); ++j )
      objective += data_.cost_[j] * value_[j];
   result.objective = status == LpStatus::Unbounded ? -std::numeric_limits<double>::infinity() : objective;
   if( status == LpStatus::Unbounded )
      return result;

   result.y = pi;
   result.reduced_plus.assign(static_cast<std::size_t>(n()), 0.0);
   result.reduced_minus.assign(static_cast<std::size_t>(n()), 0.0);
   Basis basis;
   for( int j = 0; j < n(); ++j ) {
      basis.structural.push_back(status_[j]);
      if( status_[j] == VarStatus::Basic )
         continue;
      const double d = data_.cost_[j] - dot_column(pi, j);
      if( d > 0.0 )
         result.reduced_plus[j] = d;
      else
         result.reduced_minus[j] = -d;
   }
   for( int i = 0; i < m(); ++i )
      basis.logical.push_back(status_[n() + i]);
   result.basis = std::move(basis);
   return result;
}

FpLpResult FpSimplex::run() {
   for( int j = 0; j < n(); ++j ) {
      if( has_lower_[j] && has_upper_[j] && lower_[j] > upper_[j] ) {
         FpLpResult result;
         result.status = LpStatus::Infeasible;
         result.x = std::vector<double>(value_.begin(), value_.begin() + n());
         result.farkas.assign(static_cast<std::size_t>(m()), 0.0);
         return result;
      }
   }

   compute_basic_values();

   const int degenerate_budget = 3 * total();
   int degenerate_pivots = 0;
   bool bland = false;
   int since_refactor = 0;
   const auto stride = static_cast<std::size_t>(m());

   std::vector<double> basic_cost(stride);
   std::vector<double> pi(stride);

   while( true ) {
      bool phase_one = false;
      for( int r = 0; r < m(); ++r ) {
         bool below = false;
         bool above = false;
         basic_infeasibility(r, below, above);
         basic_cost[r] = below ? -1.0 : (above ? 1.0 : 0.0);
         phase_one = phase_one || below || above;
      }
      if( !phase_one ) {
         for( int r = 0; r < m(); ++r )
            basic_cost[r] = cost(head_[r]);
      }
      for( int k = 0; k < m(); ++k ) {
         double sum = 0.0;
         for( int r = 0; r < m(); ++r )
            sum += basic_cost[r] * binv_[r * stride + k];
         pi[k] = sum;
      }

      // pricing
      int entering = -1;
      double entering_d = 0.0;
      for( int j = 0; j < total(); ++j ) {
         if( status_[j] == VarStatus::Basic || is_fixed(j) )
            continue;
         const double d = (phase_one ? 0.0 : cost(j)) - dot_column(pi, j);
         const bool eligible = (status_[j] == VarStatus::AtLower && d < -tol_.opttol)
                               || (status_[j] == VarStatus::AtUpper && d > tol_.opttol)
                               || (status_[j] == VarStatus::FreeNonbasic && std::fabs(d) > tol_.opttol);
         if( !eligible )
            continue;
         if( entering < 0 || (!bland && std::fabs(d) > std::fabs(entering_d)) ) {
            entering = j;
            entering_d = d;
         }
         if( bland )
            break;
      }

      if( entering < 0 ) {
         if( since_refactor > 0 ) {
            if( !refactor() )
               return finish(LpStatus::IterationLimit, pi);
            since_refactor = 0;
            continue;
         }
         return finish(phase_one ? LpStatus::Infeasible : LpStatus::Optimal, pi);
      }

      if( iterations_ >= iteration_limit_ )
         return finish(LpStatus::IterationLimit, pi);

      const double direction = entering_d < 0.0 ? 1.0 : -1.0;
      const std::vector<double> alpha = ftran(entering);

      // ratio test; only the first breakpoint of the phase-1 objective is taken
      double theta = std::numeric_limits<double>::infinity();
      int leaving = -1;
      bool leaving_to_upper = false;
      for( int r = 0; r < m(); ++r ) {
         const double a = alpha[r];
         if( std::fabs(a) <= tol_.zerotol )
            continue;
         const double rate = -direction * a;
         const int j = head_[r];
         const double v = value_[j];
         double target;
         bool to_upper;
         if( rate > 0.0 ) {
            if( phase_one && has_lower_[j] && v < lower_[j] - tol_.feastol ) {
               target = lower_[j];
               to_upper = false;
            }
            else if( has_upper_[j] && v <= upper_[j] + tol_.feastol ) {
               target = upper_[j];
               to_upper = true;
            }
            else
               continue;
         }
         else {
            if( phase_one && has_upper_[j] && v > upper_[j] + tol_.feastol ) {
               target = upper_[j];
               to_upper = true;
            }
            else if( has_lower_[j] && v >= lower_[j] - tol_.feastol ) {
               target = lower_[j];
               to_upper = false;
            }
            else
               continue;
         }
         const double ratio = std::max(0.0, (target - v) / rate);
         bool better = ratio < theta;
         if( !better && ratio == theta && leaving >= 0 ) {
            if( bland )
               better = head_[r] < head_[leaving];
            else
               better = std::fabs(a) > std::fabs(alpha[leaving]);
         }
         if( better ) {
            theta = ratio;
            leaving = r;
            leaving_to_upper = to_upper;
         }
      }

      double flip_distance = std::numeric_limits<double>::infinity();
      if( direction > 0.0 && has_upper_[entering] )
         flip_distance = upper_[entering] - value_[entering];
      else if( direction < 0.0 && has_lower_[entering] )
         flip_distance = value_[entering] - lower_[entering];
      const bool flip = flip_distance <= theta && std::isfinite(flip_distance);

      if( !flip && leaving < 0 ) {
         // phase 1 is bounded below by zero, so this is numerical trouble
         return finish(phase_one ? LpStatus::IterationLimit : LpStatus::Unbounded, pi);
      }

      const double step = flip ? flip_distance : theta;
      ++iterations_;
      if( step <= tol_.zerotol ) {
         ++degenerate_pivots;
         if( degenerate_pivots > degenerate_budget )
            bland = true;
      }

      for( int r = 0; r < m(); ++r )
         value_[head_[r]] -= direction * alpha[r] * step;

      if( flip ) {
         if( direction > 0.0 ) {
            status_[entering] = VarStatus::AtUpper;
            value_[entering] = upper_[entering];
         }
         else {
            status_[entering] = VarStatus::AtLower;
            value_[entering] = lower_[entering];
         }
         continue;
      }

      value_[entering] += direction * step;
      const int leaving_var = head_[leaving];
      value_[leaving_var] = leaving_to_upper ? upper_[leaving_var] : lower_[leaving_var];
      status_[leaving_var] = leaving_to_upper ? VarStatus::AtUpper : VarStatus::AtLower;
      status_[entering] = VarStatus::Basic;
      head_[leaving] = entering;

      const double pivot = alpha[leaving];
      for( int k = 0; k < m(); ++k )
         binv_[leaving * stride + k] /= pivot;
      for( int r = 0; r < m(); ++r ) {
         if( r == leaving || alpha[r] == 0.0 )
            continue;
         const double factor = alpha[r];
         for( int k = 0; k < m(); ++k )
            binv_[r * stride + k] -= factor * binv_[leaving * stride + k];
      }

      if( ++since_refactor >= kRefactorInterval ) {
         if( !refactor() )
            return finish(LpStatus::IterationLimit, pi);
         since_refactor = 0;
      }
   }
}

FpLpResult solve_lp_fp(const FpLpData& data, const LocalBounds& bounds, const FpTolerances& tolerances,
                       int iteration_limit) {
   FpSimplex simplex(data, bounds, tolerances, iteration_limit);
   return simplex.run();
}

FpLpResult solve_lp_fp(const MipProblem& problem, const LocalBounds& bounds, const FpTolerances& tolerances,
                       int iteration_limit) {
   return solve_lp_fp(FpLpData(problem), bounds, tolerances, iteration_limit);
}

}  // namespace bnbaudit
