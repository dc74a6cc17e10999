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

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "bnbaudit/model.hpp"

namespace bnbaudit {

int MipProblem::add_variable(std::string var_name, Rational cost, ExtendedRational lb, ExtendedRational ub,
                             bool is_integer) {
   objective.push_back(std::move(cost));
   lower.push_back(std::move(lb));
   upper.push_back(std::move(ub));
   integer.push_back(is_integer);
   var_names.push_back(std::move(var_name));
   var_origin.push_back(static_cast<int>(var_origin.size()));
   return num_vars() - 1;
}

int MipProblem::add_row(std::string row_name, SparseRow entries, Rational row_rhs) {
   std::stable_sort(entries.begin(), entries.end(),
                    [](const SparseEntry& a, const SparseEntry& b) { return a.column < b.column; });
   SparseRow merged;
   for( SparseEntry& entry : entries ) {
      if( !merged.empty() && merged.back().column == entry.column )
         merged.back().value += entry.value;
      else
         merged.push_back(std::move(entry));
   }
   std::erase_if(merged, [](const SparseEntry& e) { return e.value.is_zero(); });

   rows.push_back(std::move(merged));
   rhs.push_back(std::move(row_rhs));
   row_names.push_back(std::move(row_name));
   row_origin.push_back(static_cast<int>(row_origin.size()));
   return num_rows() - 1;
}

void MipProblem::reset_origins() {
   var_origin.resize(objective.size());
   row_origin.resize(rows.size());
   std::iota(var_origin.begin(), var_origin.end(), 0);
   std::iota(row_origin.begin(), row_origin.end(), 0);
}

std::string write_model_text(const MipProblem& problem) {
   std::ostringstream out;
   out << "NAME " << (problem.name.empty() ? "-" : problem.name) << '\n';
   out << "SENSE " << (problem.maximize ? "MAX" : "MIN") << '\n';
   out << "STATUS " << (problem.infeasible ? "infeasible" : "open") << '\n';
   out << "VARIABLES " << problem.num_vars() << '\n';
   for( int j = 0; j < problem.num_vars(); ++j ) {
      out << problem.var_names[j] << ' ' << (problem.integer[j] ? 'I' : 'C') << ' ' << problem.lower[j].str() << ' '
          << problem.upper[j].str() << ' ' << problem.objective[j].str() << '\n';
   }
   out << "ROWS " << problem.num_rows() << '\n';
   for( int i = 0; i < problem.num_rows(); ++i ) {
      out << problem.row_names[i] << ' ' << problem.rhs[i].str() << ' ' << problem.rows[i].size();
      for( const SparseEntry& entry : problem.rows[i] )
         out << ' ' << entry.column << ':' << entry.value.str();
      out << '\n';
   }
   out << "END\n";
   return out.str();
}

MipProblem parse_model_text(const std::string& text) {
   std::istringstream in(text);
   int line_number = 0;
   auto next_line = [&]() {
      std::string line;
      if( !std::getline(in, line) )
         throw ModelParseError("unexpected end of model text", line_number);
      ++line_number;
      return line;
   };
   auto expect = [&](std::istringstream& fields, const std::string& keyword) {
      std::string word;
      fields >> word;
      if( word != keyword )
         throw ModelParseError("expected " + keyword, line_number);
   };

   MipProblem problem;
   {
      std::istringstream fields(next_line());
      expect(fields, "NAME");
      fields >> problem.name;
      if( problem.name == "-" )
         problem.name.clear();
   }
   {
      std::istringstream fields(next_line());
      expect(fields, "SENSE");
      std::string sense;
      fields >> sense;
      problem.maximize = sense == "MAX";
   }
   {
      std::istringstream fields(next_line());
      expect(fields, "STATUS");
      std::string status;
      fields >> status;
      problem.infeasible = status == "infeasible";
   }

   int n = 0;
   {
      std::istringstream fields(next_line());
      expect(fields, "VARIABLES");
      if( !(fields >> n) || n < 0 )
         throw ModelParseError("bad variable count", line_number);
   }
   try {
      for( int j = 0; j < n; ++j ) {
         std::istringstream fields(next_line());
         std::string name, kind, lb, ub, cost;
         if( !(fields >> name >> kind >> lb >> ub >> cost) )
            throw ModelParseError("malformed variable line", line_number);
         problem.add_variable(name, Rational::parse(cost), ExtendedRational::parse(lb), ExtendedRational::parse(ub),
                              kind == "I");
      }

      int m = 0;
      {
         std::istringstream fields(next_line());
         expect(fields, "ROWS");
         if( !(fields >> m) || m < 0 )
            throw ModelParseError("bad row count", line_number);
      }
      for( int i = 0; i < m; ++i ) {
         std::istringstream fields(next_line());
         std::string name, rhs;
         std::size_t count = 0;
         if( !(fields >> name >> rhs >> count) )
            throw ModelParseError("malformed row line", line_number);
         SparseRow entries;
         for( std::size_t k = 0; k < count; ++k ) {
            std::string item;
            fields >> item;
            const auto colon = item.find(':');
            if( colon == std::string::npos )
               throw ModelParseError("malformed row entry '" + item + "'", line_number);
            const int column = std::stoi(item.substr(0, colon));
            if( column < 0 || column >= n )
               throw ModelParseError("column index out of range", line_number);
            entries.push_back({ column, Rational::parse(item.substr(colon + 1)) });
         }
         problem.add_row(name, std::move(entries), Rational::parse(rhs));
      }
   }
   catch( const std::invalid_argument& error ) {
      throw ModelParseError(error.what(), line_number);
   }
   {
      std::istringstream fields(next_line());
      expect(fields, "END");
   }
   return problem;
}

std::string model_hash(const MipProblem& problem) {
   std::uint64_t hash = 0xcbf29ce484222325ULL;
   for( const unsigned char c : write_model_text(problem) ) {
      hash ^= c;
      hash *= 0x100000001b3ULL;
   }
   char buffer[17];
   std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
   return buffer;
}

std::uint64_t SplitMix64::next() {
   std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
   z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
   return z ^ (z >> 31);
}

namespace {

std::vector<int> shuffled_identity(int size, SplitMix64& rng) {
   std::vector<int> order(static_cast<std::size_t>(size));
   std::iota(order.begin(), order.end(), 0);
   for( int i = size - 1; i > 0; --i ) {
      const auto j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
      std::swap(order[i], order[j]);
   }
   return order;
}

/// new row k is old row row_order[k], new column k is old column col_order[k]
MipProblem reorder(const MipProblem& problem, const std::vector<int>& row_order, const std::vector<int>& col_order) {
   const int n = problem.num_vars();
   std::vector<int> new_index_of(static_cast<std::size_t>(n));
   for( int k = 0; k < n; ++k )
      new_index_of[col_order[k]] = k;

   MipProblem result;
   result.name = problem.name;
   result.maximize = problem.maximize;
   result.infeasible = problem.infeasible;
   for( int k = 0; k < n; ++k ) {
      const int old = col_order[k];
      result.add_variable(problem.var_names[old], problem.objective[old], problem.lower[old], problem.upper[old],
                          problem.integer[old]);
   }
   result.var_origin.clear();
   for( int k = 0; k < n; ++k )
      result.var_origin.push_back(problem.var_origin[col_order[k]]);

   for( const int old : row_order ) {
      SparseRow entries;
      for( const SparseEntry& entry : problem.rows[old] )
         entries.push_back({ new_index_of[entry.column], entry.value });
      result.add_row(problem.row_names[old], std::move(entries), problem.rhs[old]);
   }
   result.row_origin.clear();
   for( const int old : row_order )
      result.row_origin.push_back(problem.row_origin[old]);
   return result;
}

std::vector<int> sorted_by_origin(const std::vector<int>& origin) {
   std::vector<int> order(origin.size());
   std::iota(order.begin(), order.end(), 0);
   std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return origin[a] < origin[b]; });
   return order;
}

}  // namespace

MipProblem permute_model(const MipProblem& problem, std::uint64_t seed) {
   SplitMix64 rng(seed);
   const std::vector<int> row_order = shuffled_identity(problem.num_rows(), rng);
   const std::vector<int> col_order = shuffled_identity(problem.num_vars(), rng);
   return reorder(problem, row_order, col_order);
}

MipProblem unpermute_model(const MipProblem& problem) {
   return reorder(problem, sorted_by_origin(problem.row_origin), sorted_by_origin(problem.var_origin));
}

}  // namespace bnbaudit
