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

#include "bnbaudit/rational_lu.hpp"

#include <numeric>
#include <stdexcept>

namespace bnbaudit {

std::optional<RationalLu> RationalLu::factorize(std::vector<Rational> matrix, int size) {
   if( matrix.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size) )
      throw std::invalid_argument("matrix size does not match dimension");
   const auto stride = static_cast<std::size_t>(size);
   std::vector<int> permutation(stride);
   std::iota(permutation.begin(), permutation.end(), 0);

   for( int col = 0; col < size; ++col ) {
      int pivot = -1;
      Rational best;
      for( int r = col; r < size; ++r ) {
         const Rational& entry = matrix[r * stride + col];
         if( entry.is_zero() )
            continue;
         Rational magnitude = entry.abs();
         if( pivot < 0 || magnitude > best ) {
            pivot = r;
            best = std::move(magnitude);
         }
      }
      if( pivot < 0 )
         return std::nullopt;
      if( pivot != col ) {
         for( int k = 0; k < size; ++k )
            std::swap(matrix[pivot * stride + k], matrix[col * stride + k]);
         std::swap(permutation[pivot], permutation[col]);
      }
      const Rational p = matrix[col * stride + col];
      for( int r = col + 1; r < size; ++r ) {
         Rational& lower = matrix[r * stride + col];
         if( lower.is_zero() )
            continue;
         lower /= p;
         for( int k = col + 1; k < size; ++k ) {
            const Rational& upper = matrix[col * stride + k];
            if( !upper.is_zero() )
               matrix[r * stride + k] -= lower * upper;
         }
      }
   }
   return RationalLu(size, std::move(matrix), std::move(permutation));
}

std::vector<Rational> RationalLu::solve(const std::vector<Rational>& rhs) const {
   std::vector<Rational> x(static_cast<std::size_t>(size_));
   for( int r = 0; r < size_; ++r ) {
      Rational sum = rhs[permutation_[r]];
      for( int k = 0; k < r; ++k ) {
         if( !at(r, k).is_zero() && !x[k].is_zero() )
            sum -= at(r, k) * x[k];
      }
      x[r] = std::move(sum);
   }
   for( int r = size_ - 1; r >= 0; --r ) {
      Rational sum = x[r];
      for( int k = r + 1; k < size_; ++k ) {
         if( !at(r, k).is_zero() && !x[k].is_zero() )
            sum -= at(r, k) * x[k];
      }
      x[r] = sum / at(r, r);
   }
   return x;
}

std::vector<Rational> RationalLu::solve_transposed(const std::vector<Rational>& rhs) const {
   // A^T = U^T L^T P, so solve U^T z = rhs, L^T w = z, y = P^T w.
   std::vector<Rational> z(static_cast<std::size_t>(size_));
   for( int r = 0; r < size_; ++r ) {
      Rational sum = rhs[r];
      for( int k = 0; k < r; ++k ) {
         if( !at(k, r).is_zero() && !z[k].is_zero() )
            sum -= at(k, r) * z[k];
      }
      z[r] = sum / at(r, r);
   }
   for( int r = size_ - 1; r >= 0; --r ) {
      for( int k = r + 1; k < size_; ++k ) {
         if( !at(k, r).is_zero() && !z[k].is_zero() )
            z[r] -= at(k, r) * z[k];
      }
   }
   std::vector<Rational> y(static_cast<std::size_t>(size_));
   for( int r = 0; r < size_; ++r )
      y[permutation_[r]] = z[r];
   return y;
}

}  // namespace bnbaudit
