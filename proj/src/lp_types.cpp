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

#include "bnbaudit/lp_types.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnbaudit {

bool LocalBounds::empty_box() const {
   for( std::size_t j = 0; j < lower.size(); ++j ) {
      if( lower[j] > upper[j] )
         return true;
   }
   return false;
}

std::string to_string(VarStatus status) {
   switch( status ) {
   case VarStatus::Basic:
      return "basic";
   case VarStatus::AtLower:
      return "lower";
   case VarStatus::AtUpper:
      return "upper";
   case VarStatus::FreeNonbasic:
      return "free";
   }
   return "unknown";
}

VarStatus var_status_from_string(const std::string& text) {
   if( text == "basic" )
      return VarStatus::Basic;
   if( text == "lower" )
      return VarStatus::AtLower;
   if( text == "upper" )
      return VarStatus::AtUpper;
   if( text == "free" )
      return VarStatus::FreeNonbasic;
   throw std::invalid_argument("unknown variable status '" + text + "'");
}

int Basis::num_basic() const {
   const auto is_basic = [](VarStatus s) { return s == VarStatus::Basic; };
   return static_cast<int>(std::count_if(structural.begin(), structural.end(), is_basic)
                           + std::count_if(logical.begin(), logical.end(), is_basic));
}

}  // namespace bnbaudit
