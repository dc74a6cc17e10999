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

#ifndef BNBAUDIT_RATIONAL_LU_HPP_
#define BNBAUDIT_RATIONAL_LU_HPP_

#include <optional>
#include <vector>

#include "bnbaudit/rational.hpp"

namespace bnbaudit {

/// PA = LU over the rationals. Each column pivots on the entry of largest
/// absolute value to keep coefficient growth down.
class RationalLu {
public:
   /// `matrix` is row-major size x size; nullopt when singular.
   static std::optional<RationalLu> factorize(std::vector<Rational> matrix, int size);

   /// A x = rhs
   std::vector<Rational> solve(const std::vector<Rational>& rhs) const;
   /// A^T y = rhs
   std::vector<Rational> solve_transposed(const std::vector<Rational>& rhs) const;

   int size() const { return size_; }

private:
   RationalLu(int size, std::vector<Rational> lu, std::vector<int> permutation)
      : size_(size), lu_(std::move(lu)), permutation_(std::move(permutation)) {}

   const Rational& at(int r, int c) const { return lu_[static_cast<std::size_t>(r) * size_ + c]; }

   int size_;
   std::vector<Rational> lu_;
   std::vector<int> permutation_;  // row r of PA is row permutation_[r] of A
};

}  // namespace bnbaudit

#endif
