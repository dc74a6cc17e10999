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

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "bnbaudit/model.hpp"

namespace bnbaudit {

namespace {

enum class Section { None, Name, ObjSense, Rows, Columns, Rhs, Ranges, Bounds, End };

enum class RowType { Objective, Free, Less, Greater, Equal };

struct RawRow {
   std::string name;
   RowType type;
   Rational rhs;
   std::optional<Rational> range;
   std::map<int, Rational> coefficients;
};

struct RawColumn {
   std::string name;
   Rational cost;
   ExtendedRational lower = 0;
   ExtendedRational upper = ExtendedRational::plus_infinity();
   bool integer = false;
};

std::vector<std::string> tokenize(const std::string& line) {
   std::vector<std::string> tokens;
   std::istringstream stream(line);
   std::string token;
   while( stream >> token )
      tokens.push_back(token);
   return tokens;
}

std::optional<Section> section_keyword(const std::string& word) {
   static const std::unordered_map<std::string, Section> keywords = {
      { "NAME", Section::Name },       { "OBJSENSE", Section::ObjSense }, { "ROWS", Section::Rows },
      { "COLUMNS", Section::Columns }, { "RHS", Section::Rhs },           { "RANGES", Section::Ranges },
      { "BOUNDS", Section::Bounds },   { "ENDATA", Section::End },
   };
   const auto it = keywords.find(word);
   if( it == keywords.end() )
      return std::nullopt;
   return it->second;
}

class MpsReader {
public:
   MipProblem read(std::istream& in);

private:
   [[noreturn]] void fail(const std::string& message) const { throw ModelParseError(message, line_number_); }

   Rational number(const std::string& text) const {
      try {
         return Rational::parse(text);
      }
      catch( const std::invalid_argument& ) {
         fail("malformed number '" + text + "'");
      }
   }

   void set_sense(const std::string& word);
   void read_row(const std::vector<std::string>& tokens);
   void read_column(const std::vector<std::string>& tokens);
   void read_rhs_or_range(const std::vector<std::string>& tokens, bool is_range);
   void read_bound(const std::vector<std::string>& tokens);
   int row_index(const std::string& name) const;
   MipProblem build() const;

   int line_number_ = 0;
   std::string name_;
   bool maximize_ = false;
   bool in_integer_block_ = false;
   std::optional<int> objective_row_;
   std::vector<RawRow> rows_;
   std::unordered_map<std::string, int> row_lookup_;
   std::vector<RawColumn> columns_;
   std::unordered_map<std::string, int> column_lookup_;
};

void MpsReader::set_sense(const std::string& word) {
   if( word == "MAX" || word == "MAXIMIZE" )
      maximize_ = true;
   else if( word == "MIN" || word == "MINIMIZE" )
      maximize_ = false;
   else
      fail("unknown objective sense '" + word + "'");
}

int MpsReader::row_index(const std::string& name) const {
   const auto it = row_lookup_.find(name);
   if( it == row_lookup_.end() )
      fail("unknown row '" + name + "'");
   return it->second;
}

void MpsReader::read_row(const std::vector<std::string>& tokens) {
   if( tokens.size() != 2 )
      fail("ROWS entry needs a type and a name");
   RowType type;
   const std::string& kind = tokens[0];
   if( kind == "N" )
      type = objective_row_ ? RowType::Free : RowType::Objective;
   else if( kind == "L" )
      type = RowType::Less;
   else if( kind == "G" )
      type = RowType::Greater;
   else if( kind == "E" )
      type = RowType::Equal;
   else
      fail("unknown row type '" + kind + "'");

   if( row_lookup_.contains(tokens[1]) )
      fail("duplicate row name '" + tokens[1] + "'");
   const int index = static_cast<int>(rows_.size());
   row_lookup_.emplace(tokens[1], index);
   rows_.push_back(RawRow{ tokens[1], type, Rational(0), std::nullopt, {} });
   if( type == RowType::Objective )
      objective_row_ = index;
}

void MpsReader::read_column(const std::vector<std::string>& tokens) {
   if( tokens.size() >= 3 && tokens[1] == "'MARKER'" ) {
      if( tokens[2] == "'INTORG'" )
         in_integer_block_ = true;
      else if( tokens[2] == "'INTEND'" )
         in_integer_block_ = false;
      else
         fail("unknown marker " + tokens[2]);
      return;
   }
   if( tokens.size() != 3 && tokens.size() != 5 )
      fail("COLUMNS entry needs a column and one or two (row, value) pairs");

   const std::string& column_name = tokens[0];
   auto it = column_lookup_.find(column_name);
   int column;
   if( it == column_lookup_.end() ) {
      column = static_cast<int>(columns_.size());
      column_lookup_.emplace(column_name, column);
      columns_.push_back(RawColumn{ column_name, Rational(0) });
      columns_.back().integer = in_integer_block_;
   }
   else
      column = it->second;

   for( std::size_t k = 1; k + 1 < tokens.size(); k += 2 ) {
      const int row = row_index(tokens[k]);
      const Rational value = number(tokens[k + 1]);
      if( rows_[row].type == RowType::Objective )
         columns_[column].cost += value;
      else if( rows_[row].type != RowType::Free )
         rows_[row].coefficients[column] += value;
   }
}

void MpsReader::read_rhs_or_range(const std::vector<std::string>& tokens, bool is_range) {
   // an odd token count means a leading set name
   const std::size_t start = tokens.size() % 2 == 1 ? 1 : 0;
   if( tokens.size() < start + 2 )
      fail(is_range ? "RANGES entry too short" : "RHS entry too short");
   for( std::size_t k = start; k + 1 < tokens.size(); k += 2 ) {
      const int row = row_index(tokens[k]);
      const Rational value = number(tokens[k + 1]);
      RawRow& raw = rows_[row];
      if( raw.type == RowType::Objective ) {
         if( is_range || !value.is_zero() )
            fail("objective offsets are not supported");
         continue;
      }
      if( is_range )
         raw.range = value;
      else
         raw.rhs = value;
   }
}

void MpsReader::read_bound(const std::vector<std::string>& tokens) {
   if( tokens.size() < 2 )
      fail("BOUNDS entry too short");
   const std::string& type = tokens[0];
   const bool needs_value = type == "LO" || type == "UP" || type == "FX" || type == "LI" || type == "UI";
   const bool no_value = type == "FR" || type == "MI" || type == "PL" || type == "BV";
   if( !needs_value && !no_value )
      fail("unknown bound type '" + type + "'");

   std::string column_name;
   std::optional<Rational> value;
   if( needs_value ) {
      if( tokens.size() == 4 )
         column_name = tokens[2];
      else if( tokens.size() == 3 )
         column_name = tokens[1];
      else
         fail("bound " + type + " needs a column and a value");
      value = number(tokens.back());
   }
   else {
      // BV may carry an (ignored) value
      if( tokens.size() == 3 && type != "BV" )
         column_name = tokens[2];
      else if( tokens.size() == 2 )
         column_name = tokens[1];
      else if( type == "BV" && tokens.size() == 4 )
         column_name = tokens[2];
      else if( type == "BV" && tokens.size() == 3 )
         column_name = column_lookup_.contains(tokens[2]) ? tokens[2] : tokens[1];
      else
         fail("malformed " + type + " bound");
   }

   const auto it = column_lookup_.find(column_name);
   if( it == column_lookup_.end() )
      fail("bound on unknown column '" + column_name + "'");
   RawColumn& column = columns_[it->second];

   if( type == "LO" )
      column.lower = *value;
   else if( type == "UP" )
      column.upper = *value;
   else if( type == "FX" ) {
      column.lower = *value;
      column.upper = *value;
   }
   else if( type == "FR" ) {
      column.lower = ExtendedRational::minus_infinity();
      column.upper = ExtendedRational::plus_infinity();
   }
   else if( type == "MI" )
      column.lower = ExtendedRational::minus_infinity();
   else if( type == "PL" )
      column.upper = ExtendedRational::plus_infinity();
   else if( type == "BV" ) {
      column.lower = 0;
      column.upper = 1;
      column.integer = true;
   }
   else if( type == "LI" ) {
      column.lower = *value;
      column.integer = true;
   }
   else if( type == "UI" ) {
      column.upper = *value;
      column.integer = true;
   }
}

MipProblem MpsReader::read(std::istream& in) {
   Section section = Section::None;
   std::string line;
   bool seen_end = false;
   while( std::getline(in, line) ) {
      ++line_number_;
      if( !line.empty() && line.back() == '\r' )
         line.pop_back();
      const auto tokens = tokenize(line);
      if( tokens.empty() || line.front() == '*' )
         continue;

      const bool header = !std::isspace(static_cast<unsigned char>(line.front()));
      if( header ) {
         const auto keyword = section_keyword(tokens[0]);
         if( !keyword )
            fail("unknown section '" + tokens[0] + "'");
         section = *keyword;
         if( section == Section::Name && tokens.size() > 1 )
            name_ = tokens[1];
         else if( section == Section::ObjSense && tokens.size() > 1 )
            set_sense(tokens[1]);
         else if( (section == Section::Rhs || section == Section::Ranges || section == Section::Bounds
                    || section == Section::Columns || section == Section::Rows)
                  && tokens.size() > 1 )
            fail("unexpected tokens after section '" + tokens[0] + "'");
         if( section == Section::End ) {
            seen_end = true;
            break;
         }
         continue;
      }

      switch( section ) {
      case Section::ObjSense:
         set_sense(tokens[0]);
         break;
      case Section::Rows:
         read_row(tokens);
         break;
      case Section::Columns:
         read_column(tokens);
         break;
      case Section::Rhs:
         read_rhs_or_range(tokens, false);
         break;
      case Section::Ranges:
         read_rhs_or_range(tokens, true);
         break;
      case Section::Bounds:
         read_bound(tokens);
         break;
      case Section::Name:
         if( name_.empty() )
            name_ = tokens[0];
         break;
      case Section::None:
      case Section::End:
         fail("data outside of a section");
      }
   }
   if( !seen_end )
      fail("missing ENDATA");
   return build();
}

MipProblem MpsReader::build() const {
   MipProblem problem;
   problem.name = name_;
   problem.maximize = maximize_;

   for( const RawColumn& column : columns_ ) {
      ExtendedRational lower = column.lower;
      ExtendedRational upper = column.upper;
      if( column.integer ) {
         if( lower.is_finite() )
            lower = lower.finite().ceil();
         if( upper.is_finite() )
            upper = upper.finite().floor();
      }
      problem.add_variable(column.name, maximize_ ? -column.cost : column.cost, lower, upper, column.integer);
      if( lower > upper )
         problem.infeasible = true;
   }

   for( const RawRow& raw : rows_ ) {
      if( raw.type == RowType::Objective || raw.type == RowType::Free )
         continue;

      std::optional<Rational> lo;
      std::optional<Rational> hi;
      switch( raw.type ) {
      case RowType::Greater:
         lo = raw.rhs;
         if( raw.range )
            hi = raw.rhs + raw.range->abs();
         break;
      case RowType::Less:
         hi = raw.rhs;
         if( raw.range )
            lo = raw.rhs - raw.range->abs();
         break;
      case RowType::Equal:
         if( raw.range && raw.range->sign() > 0 ) {
            lo = raw.rhs;
            hi = raw.rhs + *raw.range;
         }
         else if( raw.range && raw.range->sign() < 0 ) {
            lo = raw.rhs + *raw.range;
            hi = raw.rhs;
         }
         else {
            lo = raw.rhs;
            hi = raw.rhs;
         }
         break;
      default:
         break;
      }

      SparseRow entries;
      for( const auto& [column, value] : raw.coefficients )
         entries.push_back({ column, value });

      if( lo )
         problem.add_row(raw.name, entries, *lo);
      if( hi ) {
         SparseRow negated = entries;
         for( SparseEntry& entry : negated )
            entry.value = -entry.value;
         problem.add_row(lo ? raw.name + "#ub" : raw.name, std::move(negated), -*hi);
      }
   }

   problem.reset_origins();
   return problem;
}

}  // namespace

ModelParseError::ModelParseError(const std::string& message, int line)
   : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

MipProblem parse_mps(std::istream& in) {
   MpsReader reader;
   return reader.read(in);
}

MipProblem parse_mps_file(const std::string& path) {
   std::ifstream in(path);
   if( !in )
      throw ModelParseError("cannot open '" + path + "'", 0);
   return parse_mps(in);
}

}  // namespace bnbaudit
